#pragma once

#include <cstddef>
#include <vector>

#include "hairpin/automata.hpp"

namespace hairpin {

using Digraph = std::vector<std::vector<std::size_t>>;

struct SccDecomposition {
    // Components in reverse topological order (sinks first); members sorted ascending.
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> component_of;
    // Contains an arc inside the component (self-loop or at least two nodes).
    std::vector<bool> nontrivial;
};

SccDecomposition tarjan_scc(const Digraph& g);

// Adjacency lists of the underlying graph (letters dropped, duplicates removed).
Digraph graph_of(const Nfa& m);

}  // namespace hairpin
