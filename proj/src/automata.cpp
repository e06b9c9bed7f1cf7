#include "hairpin/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hairpin/scc.hpp"

namespace hairpin {

Dfa::Dfa(InvolutiveAlphabet alphabet, std::size_t states, State initial, std::vector<bool> finals,
         std::vector<State> delta)
    : alphabet_(std::move(alphabet)), initial_(initial), finals_(std::move(finals)),
      delta_(std::move(delta)) {
    if (states == 0) throw Error("a DFA needs at least one state");
    if (finals_.size() != states) throw Error("final mask size differs from state count");
    if (initial_ >= states) throw Error("initial state out of range");
    if (delta_.size() != states * alphabet_.size()) throw Error("transition table is not complete");
    for (State t : delta_) {
        if (t >= states) throw Error("transition target out of range");
    }
}

Dfa Dfa::empty_language(const InvolutiveAlphabet& alphabet) {
    return Dfa(alphabet, 1, 0, {false}, std::vector<State>(alphabet.size(), 0));
}

std::vector<State> Dfa::finals() const {
    std::vector<State> out;
    for (State q = 0; q < size(); ++q) {
        if (finals_[q]) out.push_back(q);
    }
    return out;
}

State Dfa::step(State q, const Word& w) const {
    for (Letter a : w) q = next(q, a);
    return q;
}

Nfa::Nfa(InvolutiveAlphabet alphabet, std::size_t states, std::vector<State> initials,
         std::vector<State> finals, std::vector<Arc> arcs)
    : alphabet_(std::move(alphabet)), states_(states), initials_(std::move(initials)),
      finals_(std::move(finals)), arcs_(std::move(arcs)) {
    auto check_state = [&](State q) {
        if (q >= states_) throw Error("NFA state out of range");
    };
    std::sort(initials_.begin(), initials_.end());
    initials_.erase(std::unique(initials_.begin(), initials_.end()), initials_.end());
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
    initial_mask_.assign(states_, false);
    final_mask_.assign(states_, false);
    for (State q : initials_) { check_state(q); initial_mask_[q] = true; }
    for (State q : finals_) { check_state(q); final_mask_[q] = true; }
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        check_state(arcs_[i].from);
        check_state(arcs_[i].to);
        if (arcs_[i].letter >= alphabet_.size()) throw Error("NFA arc label out of range");
        if (i > 0 && arcs_[i] == arcs_[i - 1]) throw Error("duplicate NFA arc");
    }
    offsets_.assign(states_ + 1, 0);
    for (const Arc& a : arcs_) ++offsets_[a.from + 1];
    for (std::size_t q = 0; q < states_; ++q) offsets_[q + 1] += offsets_[q];
}

bool Nfa::accepts(const Word& w) const {
    std::vector<bool> current = initial_mask_;
    for (Letter a : w) {
        std::vector<bool> next(states_, false);
        for (State q = 0; q < states_; ++q) {
            if (!current[q]) continue;
            for (const Arc& arc : out(q)) {
                if (arc.letter == a) next[arc.to] = true;
            }
        }
        current = std::move(next);
    }
    for (State q = 0; q < states_; ++q) {
        if (current[q] && final_mask_[q]) return true;
    }
    return false;
}

Nfa to_nfa(const Dfa& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.size() * d.alphabet().size());
    for (State q = 0; q < d.size(); ++q) {
        for (Letter a = 0; a < d.alphabet().size(); ++a) arcs.push_back({q, a, d.next(q, a)});
    }
    return Nfa(d.alphabet(), d.size(), {d.initial()}, d.finals(), std::move(arcs));
}

Nfa reverse_complement_acceptor(const Nfa& m) {
    std::vector<Arc> arcs;
    arcs.reserve(m.arcs().size());
    for (const Arc& a : m.arcs()) arcs.push_back({a.to, m.alphabet().bar(a.letter), a.from});
    return Nfa(m.alphabet(), m.size(), m.finals(), m.initials(), std::move(arcs));
}

Dfa determinize(const Nfa& m) {
    const std::size_t k = m.alphabet().size();
    std::map<std::vector<State>, State> ids;
    std::vector<std::vector<State>> subsets;
    std::vector<State> delta;
    auto intern = [&](std::vector<State> s) {
        auto [it, fresh] = ids.emplace(s, static_cast<State>(subsets.size()));
        if (fresh) subsets.push_back(std::move(s));
        return it->second;
    };
    intern(m.initials());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        std::vector<std::vector<State>> succ(k);
        for (State q : subsets[i]) {
            for (const Arc& arc : m.out(q)) succ[arc.letter].push_back(arc.to);
        }
        for (auto& s : succ) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            delta.push_back(intern(std::move(s)));
        }
    }
    std::vector<bool> finals(subsets.size(), false);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        finals[i] = std::any_of(subsets[i].begin(), subsets[i].end(),
                                [&](State q) { return m.is_final(q); });
    }
    return Dfa(m.alphabet(), subsets.size(), 0, std::move(finals), std::move(delta));
}

std::vector<std::pair<State, State>> product_states(const Dfa& d1, const Dfa& d2) {
    if (!(d1.alphabet() == d2.alphabet())) throw Error("product of DFAs over different alphabets");
    const std::size_t n2 = d2.size();
    std::vector<bool> seen(d1.size() * n2, false);
    std::deque<std::pair<State, State>> queue{{d1.initial(), d2.initial()}};
    seen[d1.initial() * n2 + d2.initial()] = true;
    std::vector<std::pair<State, State>> out;
    while (!queue.empty()) {
        auto [p1, p2] = queue.front();
        queue.pop_front();
        out.emplace_back(p1, p2);
        for (Letter a = 0; a < d1.alphabet().size(); ++a) {
            State r1 = d1.next(p1, a), r2 = d2.next(p2, a);
            if (!seen[r1 * n2 + r2]) {
                seen[r1 * n2 + r2] = true;
                queue.emplace_back(r1, r2);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<bool> coreachable(const Nfa& m) {
    std::vector<std::vector<State>> rev(m.size());
    for (const Arc& a : m.arcs()) rev[a.to].push_back(a.from);
    std::vector<bool> mark(m.size(), false);
    std::vector<State> stack;
    for (State f : m.finals()) {
        mark[f] = true;
        stack.push_back(f);
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : rev[q]) {
            if (!mark[p]) { mark[p] = true; stack.push_back(p); }
        }
    }
    return mark;
}

std::vector<bool> coreachable(const Dfa& d) { return coreachable(to_nfa(d)); }

TrimResult trim_with_map(const Nfa& m) {
    std::vector<bool> reach(m.size(), false);
    std::vector<State> stack;
    for (State q : m.initials()) {
        reach[q] = true;
        stack.push_back(q);
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (const Arc& a : m.out(q)) {
            if (!reach[a.to]) { reach[a.to] = true; stack.push_back(a.to); }
        }
    }
    std::vector<bool> co = coreachable(m);
    TrimResult result;
    std::vector<State> renumber(m.size(), no_state);
    for (State q = 0; q < m.size(); ++q) {
        if (reach[q] && co[q]) {
            renumber[q] = static_cast<State>(result.original.size());
            result.original.push_back(q);
        }
    }
    std::vector<State> initials, finals;
    for (State q : m.initials()) {
        if (renumber[q] != no_state) initials.push_back(renumber[q]);
    }
    for (State q : m.finals()) {
        if (renumber[q] != no_state) finals.push_back(renumber[q]);
    }
    std::vector<Arc> arcs;
    for (const Arc& a : m.arcs()) {
        if (renumber[a.from] != no_state && renumber[a.to] != no_state) {
            arcs.push_back({renumber[a.from], a.letter, renumber[a.to]});
        }
    }
    result.nfa = Nfa(m.alphabet(), result.original.size(), std::move(initials), std::move(finals),
                     std::move(arcs));
    return result;
}

Nfa trim(const Nfa& m) { return trim_with_map(m).nfa; }

bool is_finite_language(const Nfa& m) {
    Nfa t = trim(m);
    auto scc = tarjan_scc(graph_of(t));
    return std::none_of(scc.nontrivial.begin(), scc.nontrivial.end(), [](bool b) { return b; });
}

Nfa intersect(const Dfa& d, const Nfa& m) {
    if (!(d.alphabet() == m.alphabet())) throw Error("intersection over different alphabets");
    const std::size_t nm = m.size();
    auto id = [&](State p, State q) { return static_cast<State>(p * nm + q); };
    std::vector<State> initials, finals;
    for (State q : m.initials()) initials.push_back(id(d.initial(), q));
    for (State p = 0; p < d.size(); ++p) {
        if (!d.is_final(p)) continue;
        for (State q : m.finals()) finals.push_back(id(p, q));
    }
    std::vector<Arc> arcs;
    for (State p = 0; p < d.size(); ++p) {
        for (const Arc& a : m.arcs()) arcs.push_back({id(p, a.from), a.letter, id(d.next(p, a.letter), a.to)});
    }
    return trim(Nfa(d.alphabet(), d.size() * nm, std::move(initials), std::move(finals), std::move(arcs)));
}

Dfa complete_dfa(const InvolutiveAlphabet& alphabet, std::size_t states, State initial,
                 std::vector<bool> finals, std::vector<State> delta, bool* added_sink) {
    const bool partial = std::find(delta.begin(), delta.end(), no_state) != delta.end();
    if (added_sink) *added_sink = partial;
    if (partial) {
        const State sink = static_cast<State>(states);
        for (State& t : delta) {
            if (t == no_state) t = sink;
        }
        delta.insert(delta.end(), alphabet.size(), sink);
        finals.push_back(false);
        ++states;
    }
    return Dfa(alphabet, states, initial, std::move(finals), std::move(delta));
}

namespace {

template <class Node, class Expand, class Accept>
void enumerate_dfs(Node start, std::size_t max_len, Expand expand, Accept accepting,
                   std::vector<Word>& out) {
    Word w;
    auto rec = [&](auto&& self, const Node& node) -> void {
        if (accepting(node)) out.push_back(w);
        if (w.size() == max_len) return;
        expand(node, max_len - w.size() - 1, [&](Letter a, const Node& next) {
            w.push_back(a);
            self(self, next);
            w.pop_back();
        });
    };
    rec(rec, start);
}

// Length of the shortest path from each state to a final state (far if none).
constexpr std::size_t far = static_cast<std::size_t>(-1);

std::vector<std::size_t> distance_to_final(const Nfa& m) {
    std::vector<std::vector<State>> rev(m.size());
    for (const Arc& a : m.arcs()) rev[a.to].push_back(a.from);
    std::vector<std::size_t> dist(m.size(), far);
    std::deque<State> queue;
    for (State f : m.finals()) {
        dist[f] = 0;
        queue.push_back(f);
    }
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        for (State p : rev[q]) {
            if (dist[p] == far) {
                dist[p] = dist[q] + 1;
                queue.push_back(p);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<Word> enumerate_language(const Dfa& d, std::size_t max_len) {
    const auto dist = distance_to_final(to_nfa(d));
    std::vector<Word> out;
    if (dist[d.initial()] > max_len) return out;
    enumerate_dfs(
        d.initial(), max_len,
        [&](State q, std::size_t remaining, auto&& visit) {
            for (Letter a = 0; a < d.alphabet().size(); ++a) {
                State r = d.next(q, a);
                if (dist[r] <= remaining) visit(a, r);
            }
        },
        [&](State q) { return d.is_final(q); }, out);
    normalize_word_set(out);
    return out;
}

std::vector<Word> enumerate_language(const Nfa& m, std::size_t max_len) {
    const auto dist = distance_to_final(m);
    std::vector<State> start;
    for (State q : m.initials()) {
        if (dist[q] <= max_len) start.push_back(q);
    }
    std::vector<Word> out;
    if (start.empty()) return out;
    const std::size_t k = m.alphabet().size();
    enumerate_dfs(
        start, max_len,
        [&](const std::vector<State>& set, std::size_t remaining, auto&& visit) {
            std::vector<std::vector<State>> succ(k);
            for (State q : set) {
                for (const Arc& arc : m.out(q)) {
                    if (dist[arc.to] <= remaining) succ[arc.letter].push_back(arc.to);
                }
            }
            for (Letter a = 0; a < k; ++a) {
                auto& s = succ[a];
                if (s.empty()) continue;
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                visit(a, s);
            }
        },
        [&](const std::vector<State>& set) {
            return std::any_of(set.begin(), set.end(), [&](State q) { return m.is_final(q); });
        },
        out);
    normalize_word_set(out);
    return out;
}

}  // namespace hairpin

namespace hairpin {

std::optional<Word> shortest_word(const Nfa& m, const std::vector<State>& from,
                                  const std::vector<bool>& target) {
    constexpr std::size_t far = static_cast<std::size_t>(-1);
    std::vector<std::vector<State>> rev(m.size());
    for (const Arc& a : m.arcs()) rev[a.to].push_back(a.from);
    std::vector<std::size_t> dist(m.size(), far);
    std::deque<State> queue;
    for (State q = 0; q < m.size(); ++q) {
        if (target[q]) { dist[q] = 0; queue.push_back(q); }
    }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State p : rev[q]) {
            if (dist[p] == far) { dist[p] = dist[q] + 1; queue.push_back(p); }
        }
    }
    std::size_t best = far;
    for (State q : from) best = std::min(best, dist[q]);
    if (best == far) return std::nullopt;
    std::vector<State> current;
    for (State q : from) {
        if (dist[q] == best) current.push_back(q);
    }
    Word w;
    for (std::size_t r = best; r > 0; --r) {
        Letter letter = static_cast<Letter>(m.alphabet().size());
        for (State q : current) {
            for (const Arc& a : m.out(q)) {
                if (dist[a.to] == r - 1) letter = std::min(letter, a.letter);
            }
        }
        std::vector<State> next;
        for (State q : current) {
            for (const Arc& a : m.out(q)) {
                if (a.letter == letter && dist[a.to] == r - 1) next.push_back(a.to);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
        w.push_back(letter);
    }
    return w;
}

}  // namespace hairpin
