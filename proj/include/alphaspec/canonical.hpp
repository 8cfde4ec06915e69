#ifndef ALPHASPEC_CANONICAL_HPP
#define ALPHASPEC_CANONICAL_HPP

#include "alphaspec/graph.hpp"

#include <string>
#include <vector>

namespace alphaspec {

/// Canonical labeling by equitable refinement with individualization and
/// backtracking. Pruning: lexicographic prefix bound against the incumbent
/// plus orbit skipping under the automorphisms discovered en route (only
/// generators fixing the current branching base are applied, so the skip is
/// sound). The canonical code is the lexicographically smallest graph6 body
/// over the explored labelings.
struct CanonicalResult {
    std::vector<int> labeling; // position -> original vertex
    Graph graph;               // relabeled graph
    std::vector<std::vector<int>> automorphisms; // generators, vertex -> vertex
};

CanonicalResult canonicalize(const Graph& g);

/// Relabeled copy: new vertex p is old labeling[p].
Graph apply_labeling(const Graph& g, const std::vector<int>& labeling);

/// Equal byte strings iff isomorphic (the canonical graph's graph6 record).
std::string canonical_form(const Graph& g);

Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace alphaspec

#endif
