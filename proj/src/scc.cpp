#include "hairpin/scc.hpp"

#include <algorithm>
#include <limits>

namespace hairpin {

SccDecomposition tarjan_scc(const Digraph& g) {
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.size();
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> frames;  // (node, next edge)
    SccDecomposition out;
    out.component_of.assign(n, 0);
    std::size_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, e] = frames.back();
            if (e < g[v].size()) {
                std::size_t w = g[v][e++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) {
                std::size_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] != index[done]) continue;
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != done);
            std::sort(comp.begin(), comp.end());
            const std::size_t id = out.components.size();
            for (std::size_t x : comp) out.component_of[x] = id;
            bool inner = comp.size() > 1;
            if (!inner) {
                inner = std::find(g[done].begin(), g[done].end(), done) != g[done].end();
            }
            out.nontrivial.push_back(inner);
            out.components.push_back(std::move(comp));
        }
    }
    return out;
}

Digraph graph_of(const Nfa& m) {
    Digraph g(m.size());
    for (const Arc& a : m.arcs()) g[a.from].push_back(a.to);
    for (auto& adj : g) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return g;
}

}  // namespace hairpin
