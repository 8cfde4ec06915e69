#ifndef ALPHASPEC_ENUMERATE_HPP
#define ALPHASPEC_ENUMERATE_HPP

#include "alphaspec/graph.hpp"

#include <vector>

namespace alphaspec {

/// Published counts of unlabeled simple graphs on 1..9 vertices; the
/// enumerator is cross-checked against these.
inline constexpr long kGraphCounts[] = {1, 2, 4, 11, 34, 156, 1044, 12346, 274668};

/// One canonical representative per isomorphism class, sorted by canonical
/// graph6 record. Built by vertex augmentation from the (n-1)-level with
/// canonical-form deduplication; shards merge associatively, so the result is
/// independent of the worker count. Practical through n = 9; n = 10 is
/// accepted but slow.
std::vector<Graph> enumerate_graphs(int n, unsigned jobs = 0);

/// All r-regular graphs on n vertices (canonical representatives). For
/// n <= 9 this filters the full level; for n = 10 it augments the 9-vertex
/// graphs whose degrees are r with exactly r vertices of degree r-1 (the only
/// parents a 10-vertex r-regular graph can leave behind). Callers holding the
/// relevant level already (n for n <= 9, n-1 for n = 10) can pass it to skip
/// re-enumeration.
std::vector<Graph> enumerate_regular(int n, int r, unsigned jobs = 0,
                                     const std::vector<Graph>* cached_level = nullptr);

/// Canonicalize + dedupe an externally supplied catalog (ingestion fallback).
std::vector<Graph> canonicalize_catalog(const std::vector<Graph>& graphs, unsigned jobs = 0);

} // namespace alphaspec

#endif
