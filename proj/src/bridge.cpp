#include "hairpin/bridge.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hairpin {

BridgeTables::BridgeTables(std::size_t n1, std::size_t n2, std::size_t letters)
    : n1_(n1), n2_(n2), letters_(letters), basic_(n1 * n2 * n1 * n2, 0),
      per_letter_(letters * n1 * n2 * n1 * n2, 0) {}

std::size_t BridgeTables::basic_count() const {
    return static_cast<std::size_t>(std::count(basic_.begin(), basic_.end(), 1));
}

namespace {

// Nodes (p1, q2) of the pair system; an arc (p1,q2) -a-> (p1.a, r2) exists whenever r2.bar(a) = q2.
struct PairSystem {
    std::size_t n1, n2, k;
    // succ[(node * k + a)] = successor nodes under letter a
    std::vector<std::vector<std::uint32_t>> succ;

    PairSystem(const Dfa& d1, const Dfa& d2)
        : n1(d1.size()), n2(d2.size()), k(d1.alphabet().size()), succ(n1 * n2 * k) {
        const auto& sigma = d1.alphabet();
        // pre2[q2 * k + b] = {r2 : r2.b = q2}
        std::vector<std::vector<State>> pre2(n2 * k);
        for (State r = 0; r < n2; ++r) {
            for (Letter b = 0; b < k; ++b) pre2[d2.next(r, b) * k + b].push_back(r);
        }
        for (State p1 = 0; p1 < n1; ++p1) {
            for (State q2 = 0; q2 < n2; ++q2) {
                for (Letter a = 0; a < k; ++a) {
                    auto& out = succ[(p1 * n2 + q2) * k + a];
                    const State t1 = d1.next(p1, a);
                    for (State r2 : pre2[q2 * k + sigma.bar(a)]) out.push_back(static_cast<std::uint32_t>(t1 * n2 + r2));
                }
            }
        }
    }

    std::size_t nodes() const { return n1 * n2; }

    // Nodes reachable from the given seeds (seeds included).
    std::vector<std::uint8_t> reach(const std::vector<std::uint32_t>& seeds) const {
        std::vector<std::uint8_t> seen(nodes(), 0);
        std::vector<std::uint32_t> stack;
        for (auto s : seeds) {
            if (!seen[s]) { seen[s] = 1; stack.push_back(s); }
        }
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (Letter a = 0; a < k; ++a) {
                for (auto y : succ[x * k + a]) {
                    if (!seen[y]) { seen[y] = 1; stack.push_back(y); }
                }
            }
        }
        return seen;
    }
};

BridgeTables bridges_kernel(const Dfa& d1, const Dfa& d2, bool parallel) {
    if (!(d1.alphabet() == d2.alphabet())) throw Error("bridge tables over different alphabets");
    const PairSystem sys(d1, d2);
    const std::size_t n2 = sys.n2, k = sys.k;
    BridgeTables tables(sys.n1, n2, k);
    const long nodes = static_cast<long>(sys.nodes());
    // Each source node (p1, q2) writes only entries with that p1 and q2, so the loop is race free.
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long xi = 0; xi < nodes; ++xi) {
        const auto x = static_cast<std::uint32_t>(xi);
        const State p1 = static_cast<State>(x / n2), q2 = static_cast<State>(x % n2);
        auto mark = [&](const std::vector<std::uint8_t>& seen, int letter) {
            for (std::uint32_t y = 0; y < seen.size(); ++y) {
                if (!seen[y]) continue;
                const State q1 = static_cast<State>(y / n2), p2 = static_cast<State>(y % n2);
                if (letter < 0) {
                    tables.set_basic(p1, p2, q1, q2);
                } else {
                    tables.set_letter(static_cast<Letter>(letter), p1, p2, q1, q2);
                }
            }
        };
        mark(sys.reach({x}), -1);
        for (Letter a = 0; a < k; ++a) {
            const auto& first = sys.succ[x * k + a];
            if (!first.empty()) mark(sys.reach(first), a);
        }
    }
    return tables;
}

}  // namespace

BridgeTables compute_bridges(const Dfa& d1, const Dfa& d2) { return bridges_kernel(d1, d2, true); }

BridgeTables compute_bridges_serial(const Dfa& d1, const Dfa& d2) { return bridges_kernel(d1, d2, false); }

Nfa basic_bridge_language(const Dfa& d1, const Dfa& d2, State p1, State p2, State q1, State q2) {
    const PairSystem sys(d1, d2);
    std::vector<Arc> arcs;
    for (State x = 0; x < sys.nodes(); ++x) {
        for (Letter a = 0; a < sys.k; ++a) {
            for (auto y : sys.succ[x * sys.k + a]) arcs.push_back({x, a, y});
        }
    }
    const auto n2 = static_cast<State>(sys.n2);
    Nfa m(d1.alphabet(), sys.nodes(), {p1 * n2 + q2}, {q1 * n2 + p2}, std::move(arcs));
    return trim(m);
}

std::string to_string(const Bridge& b) {
    std::ostringstream out;
    out << "((" << b.p1 << ',' << b.p2 << ")," << b.q1 << ',' << b.q2 << ',' << b.level << ')';
    return out.str();
}

std::optional<State> BridgeNfa::find(const Bridge& b) const {
    auto it = std::lower_bound(bridges.begin(), bridges.end(), b);
    if (it == bridges.end() || *it != b) return std::nullopt;
    return static_cast<State>(it - bridges.begin());
}

BridgeNfa build_bridge_nfa(const HairpinInstance& inst, const BridgeTables& tables) {
    const Dfa& d1 = inst.dfa1;
    const Dfa& d2 = inst.dfa2;
    const auto& sigma = inst.alphabet;
    const std::size_t n1 = d1.size(), n2 = d2.size(), k = sigma.size();
    const int kappa = inst.kappa;
    const std::size_t levels = static_cast<std::size_t>(kappa) + 1;
    const auto pairs = product_states(d1, d2);

    std::vector<std::int64_t> pair_index(n1 * n2, -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i].first * n2 + pairs[i].second] = static_cast<std::int64_t>(i);

    // Candidate bridges in canonical order, with a dense index.
    std::vector<Bridge> candidates;
    std::vector<State> dense(pairs.size() * n1 * n2 * levels, no_state);
    auto slot = [&](std::size_t pi, State q1, State q2, int level) {
        return ((pi * n1 + q1) * n2 + q2) * levels + static_cast<std::size_t>(level);
    };
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        const auto [p1, p2] = pairs[pi];
        for (State q1 = 0; q1 < n1; ++q1) {
            for (State q2 = 0; q2 < n2; ++q2) {
                if (!tables.is_basic(p1, p2, q1, q2)) continue;
                for (int level = 0; level <= kappa; ++level) {
                    dense[slot(pi, q1, q2, level)] = static_cast<State>(candidates.size());
                    candidates.push_back({p1, p2, q1, q2, level});
                }
            }
        }
    }

    std::vector<Arc> arcs;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        const auto [p1, p2] = pairs[pi];
        for (Letter a = 0; a < k; ++a) {
            const Letter abar = sigma.bar(a);
            const std::size_t ti =
                static_cast<std::size_t>(pair_index[d1.next(p1, a) * n2 + d2.next(p2, a)]);
            for (State q1 = 0; q1 < n1; ++q1) {
                const State s1 = d1.next(q1, abar);
                for (State q2 = 0; q2 < n2; ++q2) {
                    const State s2 = d2.next(q2, abar);
                    const bool hits = d1.is_final(s1) || d2.is_final(s2);
                    for (int level = 0; level < kappa; ++level) {
                        int next_level = level == 0 ? (hits ? 1 : 0) : level + 1;
                        const State from = dense[slot(pi, s1, s2, level)];
                        const State to = dense[slot(ti, q1, q2, next_level)];
                        if (from != no_state && to != no_state) arcs.push_back({from, a, to});
                    }
                }
            }
        }
    }

    std::vector<State> initials, finals;
    const std::size_t start = static_cast<std::size_t>(pair_index[d1.initial() * n2 + d2.initial()]);
    for (State q1 = 0; q1 < n1; ++q1) {
        for (State q2 = 0; q2 < n2; ++q2) {
            const State s = dense[slot(start, q1, q2, 0)];
            if (s != no_state) initials.push_back(s);
        }
    }
    for (State s = 0; s < candidates.size(); ++s) {
        if (candidates[s].level == kappa) finals.push_back(s);
    }
    Nfa full(sigma, candidates.size(), std::move(initials), std::move(finals), std::move(arcs));
    TrimResult trimmed = trim_with_map(full);

    BridgeNfa out;
    out.kappa = kappa;
    out.automaton = std::move(trimmed.nfa);
    out.bridges.reserve(trimmed.original.size());
    for (State s : trimmed.original) out.bridges.push_back(candidates[s]);
    return out;
}

BridgeNfa build_bridge_nfa(const HairpinInstance& inst) {
    return build_bridge_nfa(inst, compute_bridges(inst.dfa1, inst.dfa2));
}

std::vector<PairLanguage> extract_pair_languages(const BridgeNfa& a, const HairpinInstance& inst) {
    const Nfa& m = a.automaton;
    std::vector<PairLanguage> out;
    std::map<State, Nfa> b_cache;  // keyed by final bridge
    for (State i : m.initials()) {
        for (State f : m.finals()) {
            Nfa r = trim(Nfa(m.alphabet(), m.size(), {i}, {f}, m.arcs()));
            if (r.size() == 0) continue;
            const Bridge& fb = a.bridges[f];
            PairLanguage pl;
            pl.initial = a.bridges[i];
            pl.final = fb;
            pl.r_language = std::move(r);
            auto it = b_cache.find(f);
            if (it == b_cache.end()) {
                it = b_cache.emplace(f, basic_bridge_language(inst.dfa1, inst.dfa2, fb.p1, fb.p2, fb.q1, fb.q2)).first;
            }
            pl.b_language = it->second;
            out.push_back(std::move(pl));
        }
    }
    return out;
}

namespace {

// Saturating path counts from one source along a word; returns false once some count exceeds 1.
bool single_paths_from(const Nfa& m, State source, const Word& w) {
    std::map<State, int> current{{source, 1}};
    for (Letter x : w) {
        std::map<State, int> next;
        for (auto [q, c] : current) {
            for (const Arc& arc : m.out(q)) {
                if (arc.letter != x) continue;
                int& slot = next[arc.to];
                slot = std::min(2, slot + c);
                if (slot > 1) return false;
            }
        }
        if (next.empty()) return true;
        current = std::move(next);
    }
    return true;
}

bool single_paths_exhaustive(const Nfa& m, const std::map<State, int>& current, std::size_t depth) {
    if (depth == 0) return true;
    const std::size_t k = m.alphabet().size();
    std::vector<std::map<State, int>> next(k);
    for (auto [q, c] : current) {
        for (const Arc& arc : m.out(q)) {
            int& slot = next[arc.letter][arc.to];
            slot = std::min(2, slot + c);
            if (slot > 1) return false;
        }
    }
    for (const auto& n : next) {
        if (!n.empty() && !single_paths_exhaustive(m, n, depth - 1)) return false;
    }
    return true;
}

}  // namespace

bool unique_path_check(const BridgeNfa& a, const std::vector<Word>& sample_words) {
    for (const Word& w : sample_words) {
        for (State s = 0; s < a.automaton.size(); ++s) {
            if (!single_paths_from(a.automaton, s, w)) return false;
        }
    }
    return true;
}

bool unique_path_exhaustive(const BridgeNfa& a, std::size_t max_len) {
    for (State s = 0; s < a.automaton.size(); ++s) {
        if (!single_paths_exhaustive(a.automaton, {{s, 1}}, max_len)) return false;
    }
    return true;
}

std::string export_bridge_nfa(const BridgeNfa& a) {
    const Nfa& m = a.automaton;
    std::ostringstream out;
    out << "bridges " << m.size() << " arcs " << m.arcs().size() << " kappa " << a.kappa << '\n';
    for (State q : m.initials()) out << "initial " << to_string(a.bridges[q]) << '\n';
    for (State q : m.finals()) out << "final " << to_string(a.bridges[q]) << '\n';
    for (const Arc& arc : m.arcs()) {
        out << to_string(a.bridges[arc.from]) << " -" << m.alphabet().token(arc.letter) << "-> "
            << to_string(a.bridges[arc.to]) << '\n';
    }
    return out.str();
}

}  // namespace hairpin
