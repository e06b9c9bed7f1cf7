#include "hairpin/decider.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "hairpin/oracle.hpp"
#include "hairpin/scc.hpp"

namespace hairpin {

std::string to_string(Verdict v) { return v == Verdict::regular ? "regular" : "not_regular"; }

std::string to_string(FiredTest t) {
    switch (t) {
        case FiredTest::test0: return "test0";
        case FiredTest::test1: return "test1";
        case FiredTest::test2: return "test2";
        case FiredTest::test3: return "test3";
        default: return "none";
    }
}

std::string to_string(Orientation o) { return o == Orientation::forward ? "forward" : "mirrored"; }

namespace {

std::vector<bool> mask_of(std::size_t n, std::initializer_list<State> states) {
    std::vector<bool> m(n, false);
    for (State s : states) m[s] = true;
    return m;
}

std::vector<State> run_set(const Nfa& m, std::vector<State> current, const Word& w) {
    for (Letter a : w) {
        std::vector<State> next;
        for (State q : current) {
            for (const Arc& arc : m.out(q)) {
                if (arc.letter == a) next.push_back(arc.to);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }
    return current;
}

// Least initial bridge from which `target` is reachable.
State initial_reaching(const Nfa& m, State target) {
    std::vector<std::vector<State>> rev(m.size());
    for (const Arc& a : m.arcs()) rev[a.to].push_back(a.from);
    std::vector<bool> seen(m.size(), false);
    std::vector<State> stack{target};
    seen[target] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : rev[q]) {
            if (!seen[p]) { seen[p] = true; stack.push_back(p); }
        }
    }
    for (State i : m.initials()) {
        if (seen[i]) return i;
    }
    throw Error("bridge automaton is not trim");
}

RegularityVerdict not_regular(FiredTest test, Orientation orientation, Witness w) {
    RegularityVerdict v;
    v.verdict = Verdict::not_regular;
    v.fired = test;
    v.orientation = orientation;
    v.witness = std::move(w);
    return v;
}

Witness loop_witness(const BridgeNfa& a, const SccLoop& loop, std::string reason) {
    Witness w;
    w.reason = std::move(reason);
    w.scc_id = loop.scc_id;
    w.initial = a.bridges[initial_reaching(a.automaton, loop.anchor)];
    w.anchor = loop.anchor_bridge;
    w.v = loop.loop;
    return w;
}

}  // namespace

std::vector<SccLoop> scc_loops(const BridgeNfa& a) {
    const Nfa& m = a.automaton;
    const auto dec = tarjan_scc(graph_of(m));
    std::vector<SccLoop> loops;
    constexpr std::size_t far = static_cast<std::size_t>(-1);
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
        if (!dec.nontrivial[c]) continue;
        const auto& members = dec.components[c];
        const State anchor = static_cast<State>(members.front());
        auto inside = [&](State q) { return dec.component_of[q] == c; };
        std::map<State, std::vector<State>> rev;
        for (std::size_t q : members) {
            for (const Arc& arc : m.out(static_cast<State>(q))) {
                if (inside(arc.to)) rev[arc.to].push_back(arc.from);
            }
        }
        std::map<State, std::size_t> dist{{anchor, 0}};
        std::deque<State> queue{anchor};
        while (!queue.empty()) {
            State q = queue.front();
            queue.pop_front();
            for (State p : rev[q]) {
                if (!dist.count(p)) { dist[p] = dist[q] + 1; queue.push_back(p); }
            }
        }
        auto dist_of = [&](State q) { auto it = dist.find(q); return it == dist.end() ? far : it->second; };
        std::size_t length = far;
        for (const Arc& arc : m.out(anchor)) {
            if (inside(arc.to) && dist_of(arc.to) != far) length = std::min(length, dist_of(arc.to) + 1);
        }
        Word loop;
        std::vector<State> current{anchor};
        for (std::size_t r = length; r > 0; --r) {
            Letter best = static_cast<Letter>(m.alphabet().size());
            for (State q : current) {
                for (const Arc& arc : m.out(q)) {
                    if (inside(arc.to) && dist_of(arc.to) == r - 1) best = std::min(best, arc.letter);
                }
            }
            std::vector<State> next;
            for (State q : current) {
                for (const Arc& arc : m.out(q)) {
                    if (arc.letter == best && inside(arc.to) && dist_of(arc.to) == r - 1) next.push_back(arc.to);
                }
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            current = std::move(next);
            loop.push_back(best);
        }
        SccLoop s;
        s.scc_id = 0;
        s.anchor = anchor;
        s.anchor_bridge = a.bridges[anchor];
        s.loop = std::move(loop);
        s.size = members.size();
        for (std::size_t q : members) s.members.push_back(static_cast<State>(q));
        loops.push_back(std::move(s));
    }
    std::sort(loops.begin(), loops.end(), [](const SccLoop& x, const SccLoop& y) { return x.anchor < y.anchor; });
    for (std::size_t i = 0; i < loops.size(); ++i) loops[i].scc_id = i;
    return loops;
}

std::optional<RegularityVerdict> test0(const HairpinInstance& inst, const BridgeNfa& a, Orientation orientation) {
    if (is_finite_language(a.automaton)) {
        RegularityVerdict v;
        v.orientation = orientation;
        return v;
    }
    const bool first_finite = is_finite_language(to_nfa(inst.dfa1));
    const bool second_finite = is_finite_language(to_nfa(inst.dfa2));
    if (!first_finite && !second_finite) return std::nullopt;

    const auto loops = scc_loops(a);
    const SccLoop& loop = loops.front();
    Witness w = loop_witness(a, loop, first_finite ? "first_language_finite" : "second_language_finite");
    // name the finite side in terms of the caller's original instance
    const bool is_l1 = (orientation == Orientation::forward) == first_finite;
    w.finite_side = is_l1 ? "L1" : "L2";
    const Nfa& m = a.automaton;
    std::vector<bool> finals(m.size(), false);
    for (State f : m.finals()) finals[f] = true;
    w.tail = *shortest_word(m, {loop.anchor}, finals);
    State reached = no_state;
    for (State q : run_set(m, {loop.anchor}, *w.tail)) {
        if (m.is_final(q)) { reached = q; break; }
    }
    const Bridge& f = a.bridges[reached];
    Nfa b = basic_bridge_language(inst.dfa1, inst.dfa2, f.p1, f.p2, f.q1, f.q2);
    std::vector<bool> bf(b.size(), false);
    for (State q : b.finals()) bf[q] = true;
    w.beta = *shortest_word(b, b.initials(), bf);
    return not_regular(FiredTest::test0, orientation, std::move(w));
}

std::optional<RegularityVerdict> test1(const BridgeNfa& a, const std::vector<SccLoop>& loops, Orientation orientation) {
    const Nfa& m = a.automaton;
    std::vector<bool> finals(m.size(), false);
    for (State f : m.finals()) finals[f] = true;
    for (const SccLoop& loop : loops) {
        const std::size_t n = loop.loop.size();
        const bool mismatch = n != loop.size;
        // breadth-first marking of (bridge, position in the loop word)
        std::map<std::pair<State, std::size_t>, std::pair<std::pair<State, std::size_t>, Letter>> parent;
        std::deque<std::pair<State, std::size_t>> queue{{loop.anchor, 0}};
        parent[{loop.anchor, 0}] = {{no_state, 0}, 0};
        std::optional<Witness> found;
        while (!queue.empty() && !found) {
            auto [q, i] = queue.front();
            queue.pop_front();
            for (const Arc& arc : m.out(q)) {
                if (arc.letter == loop.loop[i]) {
                    std::pair<State, std::size_t> next{arc.to, (i + 1) % n};
                    if (!parent.count(next)) {
                        parent[next] = {{q, i}, arc.letter};
                        queue.push_back(next);
                    }
                    continue;
                }
                Word prefix;
                for (auto node = std::make_pair(q, i);;) {
                    const auto& [from, letter] = parent[node];
                    if (from.first == no_state) break;
                    prefix.push_back(letter);
                    node = from;
                }
                std::reverse(prefix.begin(), prefix.end());
                prefix.push_back(arc.letter);
                Word rest = *shortest_word(m, {arc.to}, finals);
                prefix.insert(prefix.end(), rest.begin(), rest.end());
                Witness w = loop_witness(a, loop, mismatch ? "loop_shorter_than_component" : "arc_leaves_loop_word");
                w.offending = a.bridges[q];
                w.mark = i;
                w.letter = arc.letter;
                w.tail = std::move(prefix);
                found = std::move(w);
                break;
            }
        }
        if (found) return not_regular(FiredTest::test1, orientation, std::move(*found));
        if (mismatch) return not_regular(FiredTest::test1, orientation, loop_witness(a, loop, "loop_shorter_than_component"));
    }
    return std::nullopt;
}

std::optional<FactorizationWitness> factorization_accepts(const Word& w, State start, const Dfa& d2, int kappa) {
    const auto& sigma = d2.alphabet();
    const std::size_t n = w.size(), k = static_cast<std::size_t>(kappa);
    if (n < 2 * k) return std::nullopt;
    for (std::size_t t = 0; 2 * (t + k) <= n; ++t) {
        bool folds = true;
        for (std::size_t i = 0; i < t + k && folds; ++i) folds = w[i] == sigma.bar(w[n - 1 - i]);
        if (!folds) continue;
        FactorizationWitness f;
        f.mu.assign(w.begin(), w.begin() + t);
        f.delta.assign(w.begin() + t, w.begin() + t + k);
        f.beta.assign(w.begin() + t + k, w.end() - t - k);
        State q = d2.step(start, f.mu);
        q = d2.step(q, f.delta);
        q = d2.step(q, bar_word(sigma, f.beta));
        q = d2.step(q, bar_word(sigma, f.delta));
        if (d2.is_final(q)) return f;
    }
    return std::nullopt;
}

namespace {

// Shared state of the per-component conditions; anchor = ((p1,p2),q1,q2,0).
class LoopConditions {
public:
    LoopConditions(const HairpinInstance& inst, const SccLoop& loop)
        : inst_(inst), loop_(loop), p1(loop.anchor_bridge.p1), p2(loop.anchor_bridge.p2),
          q1(loop.anchor_bridge.q1), q2(loop.anchor_bridge.q2), v(loop.loop),
          vbar(bar_word(inst.alphabet, loop.loop)), n(loop.loop.size()),
          kappa(static_cast<std::size_t>(inst.kappa)) {}

    Word x_of(std::size_t lx) const { return periodic_slice(v, 0, lx); }
    Word y_of(std::size_t lx, std::size_t ly) const { return periodic_slice(v, lx, ly); }
    Word bar(const Word& w) const { return bar_word(inst_.alphabet, w); }

    // From d1 over bar(x) bar(v)^n1: final exactly at step kappa, never later, ending in q1.
    bool condition4(State d1, const Word& xbar) const {
        const Dfa& a1 = inst_.dfa1;
        State s = d1;
        std::size_t step = 0;
        auto advance = [&](Letter c) {
            s = a1.next(s, c);
            ++step;
            if (step == kappa) return a1.is_final(s);
            return step < kappa || !a1.is_final(s);
        };
        for (Letter c : xbar) {
            if (!advance(c)) return false;
        }
        for (std::size_t r = 0; r < a1.size(); ++r) {
            for (Letter c : vbar) {
                if (!advance(c)) return false;
            }
        }
        return s == q1;
    }

    // e2 = d2 . head; no final after any step of e2 . bar(v)^n2, which ends in q2.
    bool condition5_tail(State d2, const Word& head) const {
        const Dfa& a2 = inst_.dfa2;
        State s = a2.step(d2, head);
        for (std::size_t r = 0; r < a2.size(); ++r) {
            for (Letter c : vbar) {
                s = a2.next(s, c);
                if (a2.is_final(s)) return false;
            }
        }
        return s == q2;
    }

    // No final after kappa or more steps of d2 . head bar(v)^n2, which ends in q2.
    bool condition5_whole(State d2, const Word& head) const {
        const Dfa& a2 = inst_.dfa2;
        State s = d2;
        std::size_t step = 0;
        auto advance = [&](Letter c) {
            s = a2.next(s, c);
            ++step;
            return step < kappa || !a2.is_final(s);
        };
        for (Letter c : head) {
            if (!advance(c)) return false;
        }
        for (std::size_t r = 0; r < a2.size(); ++r) {
            for (Letter c : vbar) {
                if (!advance(c)) return false;
            }
        }
        return s == q2;
    }

    const HairpinInstance& inst_;
    const SccLoop& loop_;
    State p1, p2, q1, q2;
    Word v, vbar;
    std::size_t n, kappa;
};

// Longest common prefix of v^omega from i and bar(v)^omega from j, capped at |v|.
std::vector<std::vector<std::size_t>> overlap_table(const Word& v, const Word& vbar) {
    const std::size_t n = v.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, 0));
    for (std::size_t d = 0; d < n; ++d) {
        // diagonal pairs (i, (i + d) mod n)
        std::vector<bool> eq(n);
        std::size_t mismatch = n;
        for (std::size_t i = 0; i < n; ++i) {
            eq[i] = v[i] == vbar[(i + d) % n];
            if (!eq[i]) mismatch = i;
        }
        if (mismatch == n) {
            for (std::size_t i = 0; i < n; ++i) table[i][(i + d) % n] = n;
            continue;
        }
        std::size_t run = 0;
        for (std::size_t step = 0; step < n; ++step) {
            const std::size_t i = (mismatch + n - step) % n;
            run = eq[i] ? run + 1 : 0;
            table[i][(i + d) % n] = run;
        }
    }
    return table;
}

// Factorization existence for w = x y bar(x) bar(v) from the overlap table and the last final.
bool rescued_fast(const LoopConditions& lc, const std::vector<std::vector<std::size_t>>& overlap,
                  std::size_t lx, std::size_t ly) {
    const std::size_t n = lc.n;
    const long length = static_cast<long>(2 * lx + ly + n);
    const std::size_t lcp = overlap[(lx + ly) % n][(n - lx % n) % n];
    const long common = lcp >= n ? length : std::min<long>(length, static_cast<long>(lx + ly + lcp));
    const long kappa = static_cast<long>(lc.kappa);
    const long m = std::min(common - kappa, length / 2 - kappa);
    // last final position of p2 . bar(w) with bar(w) = v x bar(y) bar(x)
    const Dfa& a2 = lc.inst_.dfa2;
    const Word x = lc.x_of(lx);
    const Word mirror = concat({&lc.v, &x});
    const Word y = lc.y_of(lx, ly);
    const Word tail = lc.bar(concat({&x, &y}));
    long last = 0, pos = 0;
    State s = lc.p2;
    for (const Word* part : {&mirror, &tail}) {
        for (Letter c : *part) {
            s = a2.next(s, c);
            ++pos;
            if (a2.is_final(s)) last = pos;
        }
    }
    return m >= 0 && m >= length - last && 2 * (last - kappa) >= length;
}

}  // namespace

std::optional<RegularityVerdict> test2(const HairpinInstance& inst, const BridgeNfa& a, const SccLoop& loop,
                                       Orientation orientation, const DecideOptions& options, TestCounters* counters) {
    LoopConditions lc(inst, loop);
    const std::size_t n = lc.n, kappa = lc.kappa;
    std::vector<std::vector<std::size_t>> overlap;
    if (options.fast_path) overlap = overlap_table(lc.v, lc.vbar);
    for (std::size_t lx = kappa; lx < n + kappa; ++lx) {
        const Word x = lc.x_of(lx);
        const Word xbar = lc.bar(x);
        const State d2 = inst.dfa2.step(lc.p2, x);
        for (std::size_t ly = 0; ly < n; ++ly) {
            const Word y = lc.y_of(lx, ly);
            const Word xy = concat({&x, &y});
            const State d1 = inst.dfa1.step(lc.p1, xy);
            if (!lc.condition4(d1, xbar)) continue;
            const Word head = lc.bar(xy);
            const bool tail_ok = lc.condition5_tail(d2, head);
            const bool whole_ok = lc.condition5_whole(d2, head);
            if (!tail_ok && !whole_ok) continue;
            bool rescued;
            if (options.fast_path) {
                rescued = rescued_fast(lc, overlap, lx, ly);
            } else {
                const Word w = concat({&x, &y, &xbar, &lc.vbar});
                rescued = factorization_accepts(w, lc.p2, inst.dfa2, inst.kappa).has_value();
            }
            if (tail_ok != whole_ok && !rescued && counters) ++counters->condition5_disagreements;
            if (!(tail_ok && whole_ok)) continue;
            if (counters) ++counters->candidates;
            if (rescued) continue;
            Witness w = loop_witness(a, loop, "no_rescuing_factorization");
            w.x = x;
            w.y = y;
            w.z = Word{};
            w.d1 = d1;
            w.d2 = d2;
            return not_regular(FiredTest::test2, orientation, std::move(w));
        }
    }
    return std::nullopt;
}

namespace {

Word shortest_bridge_word(const HairpinInstance& inst, State c1, State c2, State d1, State d2, Letter a) {
    Nfa b = basic_bridge_language(inst.dfa1, inst.dfa2, c1, c2, d1, d2);
    std::vector<State> from;
    for (State i : b.initials()) {
        for (const Arc& arc : b.out(i)) {
            if (arc.letter == a) from.push_back(arc.to);
        }
    }
    std::vector<bool> finals(b.size(), false);
    for (State f : b.finals()) finals[f] = true;
    auto rest = shortest_word(b, from, finals);
    if (!rest) throw Error("letter bridge without a word");
    Word z{a};
    z.insert(z.end(), rest->begin(), rest->end());
    return z;
}

struct Test3Hit {
    std::size_t lx, ly;
    Letter a;
    State d1, d2;
    auto operator<=>(const Test3Hit&) const = default;
};

std::optional<Test3Hit> test3_direct(const HairpinInstance& inst, const BridgeTables& tables,
                                     const LoopConditions& lc, TestCounters* counters) {
    const std::size_t n = lc.n, kappa = lc.kappa;
    const std::size_t k = inst.alphabet.size();
    for (std::size_t lx = kappa; lx < n + kappa; ++lx) {
        const Word x = lc.x_of(lx);
        const Word xbar = lc.bar(x);
        const State c2 = inst.dfa2.step(lc.p2, x);
        std::vector<State> d1s;
        for (State d1 = 0; d1 < inst.dfa1.size(); ++d1) {
            if (lc.condition4(d1, xbar)) d1s.push_back(d1);
        }
        if (d1s.empty()) continue;
        for (std::size_t ly = 0; ly < n; ++ly) {
            const Word y = lc.y_of(lx, ly);
            const Word xy = concat({&x, &y});
            const State c1 = inst.dfa1.step(lc.p1, xy);
            const Letter next = lc.v[(lx + ly) % n];
            const Word head = lc.bar(xy);
            std::vector<std::pair<State, bool>> d2s;  // (d2, whole-run form holds)
            for (State d2 = 0; d2 < inst.dfa2.size(); ++d2) {
                const bool tail_ok = lc.condition5_tail(d2, head);
                const bool whole_ok = lc.condition5_whole(d2, head);
                if (tail_ok) d2s.emplace_back(d2, whole_ok);
            }
            for (Letter a = 0; a < k; ++a) {
                if (a == next) continue;
                for (State d1 : d1s) {
                    for (auto [d2, whole_ok] : d2s) {
                        if (!tables.is_letter_bridge(a, c1, c2, d1, d2)) continue;
                        const Word z = shortest_bridge_word(inst, c1, c2, d1, d2, a);
                        const Word w = concat({&x, &y, &z, &xbar, &lc.vbar});
                        const bool rescued = factorization_accepts(w, lc.p2, inst.dfa2, inst.kappa).has_value();
                        if (!whole_ok) {
                            if (!rescued && counters) ++counters->condition5_disagreements;
                            continue;
                        }
                        if (counters) ++counters->candidates;
                        if (!rescued) return Test3Hit{lx, ly, a, d1, d2};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Test3Hit> test3_tables(const HairpinInstance& inst, const BridgeTables& tables,
                                     const LoopConditions& lc, TestCounters* counters) {
    const std::size_t n = lc.n, kappa = lc.kappa;
    const std::size_t k = inst.alphabet.size();
    // first table: (c2, d1) -> lengths of x
    std::map<std::pair<State, State>, std::vector<std::size_t>> first;
    for (std::size_t lx = kappa; lx < n + kappa; ++lx) {
        const Word x = lc.x_of(lx);
        const Word xbar = lc.bar(x);
        const State c2 = inst.dfa2.step(lc.p2, x);
        for (State d1 = 0; d1 < inst.dfa1.size(); ++d1) {
            if (lc.condition4(d1, xbar)) first[{c2, d1}].push_back(lx);
        }
    }
    if (first.empty()) return std::nullopt;
    // second table: (c1, d2, a) -> lengths of y' < |v| with y'a not a prefix of v
    std::map<std::tuple<State, State, Letter>, std::vector<std::size_t>> second;
    for (std::size_t lyp = 0; lyp < n; ++lyp) {
        const Word yp = periodic_slice(lc.v, 0, lyp);
        const State c1 = inst.dfa1.step(lc.p1, yp);
        const Word head = lc.bar(yp);
        for (State d2 = 0; d2 < inst.dfa2.size(); ++d2) {
            if (!lc.condition5_whole(d2, head)) continue;
            for (Letter a = 0; a < k; ++a) {
                if (a != lc.v[lyp]) second[{c1, d2, a}].push_back(lyp);
            }
        }
    }
    std::optional<Test3Hit> best;
    for (const auto& [key1, xs] : first) {
        const auto [c2, d1] = key1;
        for (const auto& [key2, yps] : second) {
            const auto [c1, d2, a] = key2;
            if (!tables.is_letter_bridge(a, c1, c2, d1, d2)) continue;
            for (std::size_t lx : xs) {
                for (std::size_t lyp : yps) {
                    if (counters) ++counters->candidates;
                    Test3Hit hit{lx, (lyp + n - lx % n) % n, a, d1, d2};
                    if (!best || hit < *best) best = hit;
                }
            }
        }
    }
    return best;
}

}  // namespace

std::optional<RegularityVerdict> test3(const HairpinInstance& inst, const BridgeNfa& a, const BridgeTables& tables,
                                       const SccLoop& loop, Orientation orientation, const DecideOptions& options,
                                       TestCounters* counters) {
    LoopConditions lc(inst, loop);
    auto hit = options.fast_path ? test3_tables(inst, tables, lc, counters) : test3_direct(inst, tables, lc, counters);
    if (!hit) return std::nullopt;
    const Word x = lc.x_of(hit->lx);
    const Word y = lc.y_of(hit->lx, hit->ly);
    const Word xy = concat({&x, &y});
    const State c1 = inst.dfa1.step(lc.p1, xy);
    const State c2 = inst.dfa2.step(lc.p2, x);
    Witness w = loop_witness(a, loop, "no_rescuing_factorization");
    w.x = x;
    w.y = y;
    w.y_prime = periodic_slice(lc.v, 0, (hit->lx + hit->ly) % lc.n);
    w.letter = hit->a;
    w.z = shortest_bridge_word(inst, c1, c2, hit->d1, hit->d2, hit->a);
    w.c1 = c1;
    w.c2 = c2;
    w.d1 = hit->d1;
    w.d2 = hit->d2;
    return not_regular(FiredTest::test3, orientation, std::move(w));
}

RegularityVerdict decide(const HairpinInstance& inst, const DecideOptions& options) {
    std::vector<Orientation> runs;
    if (options.orientation != OrientationMode::mirrored) runs.push_back(Orientation::forward);
    if (options.orientation != OrientationMode::forward) runs.push_back(Orientation::mirrored);

    std::optional<DeciderStats> first_stats;
    std::vector<std::string> notes;
    for (Orientation o : runs) {
        const HairpinInstance oriented = o == Orientation::forward ? inst : mirrored(inst);
        const BridgeTables tables = compute_bridges(oriented.dfa1, oriented.dfa2);
        const BridgeNfa a = build_bridge_nfa(oriented, tables);
        DeciderStats stats;
        stats.n1 = oriented.dfa1.size();
        stats.n2 = oriented.dfa2.size();
        stats.n12 = product_states(oriented.dfa1, oriented.dfa2).size();
        stats.state_bound = stats.n12 * stats.n1 * stats.n2 * static_cast<std::size_t>(inst.kappa + 1);
        stats.bridges = a.automaton.size();
        stats.arcs = a.automaton.arcs().size();
        stats.initial_bridges = a.automaton.initials().size();
        stats.final_bridges = a.automaton.finals().size();
        if (!first_stats) first_stats = stats;

        auto finish = [&](RegularityVerdict v) {
            v.stats = stats;
            v.notes = notes;
            return v;
        };
        if (auto v = test0(oriented, a, o)) {
            if (v->verdict == Verdict::regular) {
                v->stats = *first_stats;
                v->notes = notes;
                return *v;
            }
            return finish(std::move(*v));
        }
        const auto loops = scc_loops(a);
        stats.sccs = loops.size();
        if (auto v = test1(a, loops, o)) return finish(std::move(*v));
        TestCounters c2, c3;
        std::optional<RegularityVerdict> hit;
        for (const SccLoop& loop : loops) {
            if ((hit = test2(oriented, a, loop, o, options, &c2))) break;
        }
        if (!hit) {
            for (const SccLoop& loop : loops) {
                if ((hit = test3(oriented, a, tables, loop, o, options, &c3))) break;
            }
        }
        stats.test2_candidates = c2.candidates;
        stats.test3_candidates = c3.candidates;
        stats.condition5_disagreements = c2.condition5_disagreements + c3.condition5_disagreements;
        if (stats.condition5_disagreements > 0) {
            notes.push_back(to_string(o) + ": " + std::to_string(stats.condition5_disagreements) +
                            " candidate(s) pass the tail-only condition 5 but fail the whole-run form");
        }
        if (o == runs.front()) first_stats = stats;
        if (hit) return finish(std::move(*hit));
    }
    RegularityVerdict v;
    v.orientation = runs.front();
    v.stats = *first_stats;
    v.notes = notes;
    return v;
}

namespace {

Word repeat(const Word& w, std::size_t times) {
    Word out;
    for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

Word path_to_anchor(const BridgeNfa& a, const Bridge& anchor) {
    const State target = *a.find(anchor);
    return *shortest_word(a.automaton, a.automaton.initials(), mask_of(a.automaton.size(), {target}));
}

}  // namespace

bool validate_witness(const RegularityVerdict& verdict, const HairpinInstance& inst) {
    if (verdict.verdict == Verdict::regular) return !verdict.witness && verdict.fired == FiredTest::none;
    if (!verdict.witness) return false;
    const Witness& w = *verdict.witness;
    const HairpinInstance oriented = verdict.orientation == Orientation::forward ? inst : mirrored(inst);
    const auto& sigma = oriented.alphabet;
    const BridgeNfa a = build_bridge_nfa(oriented);
    if (!w.anchor || !w.v || !a.find(*w.anchor)) return false;
    const Word u = path_to_anchor(a, *w.anchor);
    const Word ubar = bar_word(sigma, u);
    const Word& v = *w.v;
    const Word vbar = bar_word(sigma, v);
    constexpr std::size_t samples = 5;

    if (verdict.fired == FiredTest::test0) {
        const Dfa& finite_side = *w.finite_side == "L1" ? inst.dfa1 : inst.dfa2;
        if (!is_finite_language(to_nfa(finite_side))) return false;
        const Word middle = concat({&*w.tail, &*w.beta});
        const Word tail_bar = bar_word(sigma, *w.tail);
        for (std::size_t i = 0; i <= samples; ++i) {
            const Word vi = repeat(v, i), vbi = repeat(vbar, i);
            if (!membership(concat({&u, &vi, &middle, &tail_bar, &vbi, &ubar}), oriented)) return false;
        }
        return true;
    }
    if (verdict.fired == FiredTest::test1) {
        if (!w.tail) return w.reason == "loop_shorter_than_component";
        const Word& word = *w.tail;
        bool prefix_of_power = true;
        for (std::size_t i = 0; i < word.size() && prefix_of_power; ++i) prefix_of_power = word[i] == v[i % v.size()];
        if (prefix_of_power) return false;
        const State anchor = *a.find(*w.anchor);
        for (State q : run_set(a.automaton, {anchor}, word)) {
            if (a.automaton.is_final(q)) return true;
        }
        return false;
    }
    // tests 2 and 3: u v^k x y z bar(x) bar(v)^l bar(u) is a member for l <= k, not for l = k + 1 (k large)
    const Word xbar = bar_word(sigma, *w.x);
    const Word core = concat({&*w.x, &*w.y, &*w.z, &xbar});
    for (std::size_t k = 0; k <= samples; ++k) {
        for (std::size_t l = 0; l <= k; ++l) {
            const Word vk = repeat(v, k), vbl = repeat(vbar, l);
            if (!membership(concat({&u, &vk, &core, &vbl, &ubar}), oriented)) return false;
        }
    }
    const std::size_t base = 2 * (u.size() + core.size() + v.size()) +
                             std::max(oriented.dfa1.size(), oriented.dfa2.size());
    for (std::size_t k = base; k <= base + samples; ++k) {
        const Word vk = repeat(v, k), vbl = repeat(vbar, k + 1);
        if (membership(concat({&u, &vk, &core, &vbl, &ubar}), oriented)) return false;
    }
    return true;
}

}  // namespace hairpin
