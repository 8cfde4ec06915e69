#include "alphaspec/enumerate.hpp"

#include "alphaspec/canonical.hpp"
#include "alphaspec/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace alphaspec {

namespace {

std::vector<Graph> sort_by_record(std::vector<std::pair<std::string, Graph>> keyed) {
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto& [key, g] : keyed) out.push_back(std::move(g));
    return out;
}

// Extend each parent by one new last vertex with every possible neighborhood;
// canonical dedupe across shards.
std::vector<Graph> augment_level(const std::vector<Graph>& parents, unsigned jobs) {
    const int child_order = parents.empty() ? 1 : parents.front().order() + 1;
    const std::uint64_t masks = std::uint64_t{1} << (child_order - 1);

    std::vector<std::unordered_set<std::string>> local(std::max(jobs, 1u));
    parallel_shards(parents.size(), jobs, [&](unsigned shard, size_t begin, size_t end) {
        auto& seen = local[shard];
        for (size_t idx = begin; idx < end; ++idx) {
            const Graph& parent = parents[idx];
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                Graph child(child_order);
                for (int u = 0; u < child_order - 1; ++u)
                    for (int v = u + 1; v < child_order - 1; ++v)
                        if (parent.has_edge(u, v)) child.add_edge(u, v);
                for (int u = 0; u < child_order - 1; ++u)
                    if ((mask >> u) & 1) child.add_edge(u, child_order - 1);
                seen.insert(canonical_form(child));
            }
        }
    });

    std::unordered_set<std::string> merged;
    for (auto& s : local)
        for (auto& key : s) merged.insert(key);
    std::vector<std::pair<std::string, Graph>> keyed;
    keyed.reserve(merged.size());
    for (const auto& key : merged) keyed.emplace_back(key, parse_graph6(key));
    return sort_by_record(std::move(keyed));
}

} // namespace

std::vector<Graph> enumerate_graphs(int n, unsigned jobs) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("enumeration supports 1 <= n <= 10");
    if (jobs == 0) jobs = default_jobs();
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) level = augment_level(level, jobs);
    // every downstream zero-mates claim quantifies over this level, so an
    // incomplete enumeration must be fatal, not a wrong answer
    if (n <= 9 && static_cast<long>(level.size()) != kGraphCounts[n - 1])
        throw std::logic_error("enumeration of order " + std::to_string(n) + " produced " +
                               std::to_string(level.size()) + " classes, expected " +
                               std::to_string(kGraphCounts[n - 1]));
    return level;
}

std::vector<Graph> enumerate_regular(int n, int r, unsigned jobs,
                                     const std::vector<Graph>* cached_level) {
    if (r < 0 || r >= n) return {};
    if ((static_cast<long>(n) * r) % 2 != 0) return {};
    if (jobs == 0) jobs = default_jobs();

    if (n <= 9) {
        std::vector<Graph> out;
        const std::vector<Graph> local =
            cached_level ? std::vector<Graph>{} : enumerate_graphs(n, jobs);
        for (const Graph& g : cached_level ? *cached_level : local)
            if (regular_degree(g) == r) out.push_back(g);
        return out;
    }
    if (n != 10) throw std::invalid_argument("regular enumeration supports n <= 10");

    // A 10-vertex r-regular graph minus its last vertex has r vertices of
    // degree r-1 and the rest of degree r; re-attach the unique completion.
    const std::vector<Graph> local_parents =
        cached_level ? std::vector<Graph>{} : enumerate_graphs(9, jobs);
    const std::vector<Graph>& parents = cached_level ? *cached_level : local_parents;
    std::vector<std::unordered_set<std::string>> local(std::max(jobs, 1u));
    parallel_shards(parents.size(), jobs, [&](unsigned shard, size_t begin, size_t end) {
        auto& seen = local[shard];
        for (size_t idx = begin; idx < end; ++idx) {
            const Graph& parent = parents[idx];
            int deficient = 0;
            bool feasible = true;
            for (int v = 0; v < 9 && feasible; ++v) {
                const int d = parent.degree(v);
                if (d == r - 1) ++deficient;
                else if (d != r) feasible = false;
            }
            if (!feasible || deficient != r) continue;
            Graph child(10);
            for (int u = 0; u < 9; ++u)
                for (int v = u + 1; v < 9; ++v)
                    if (parent.has_edge(u, v)) child.add_edge(u, v);
            for (int v = 0; v < 9; ++v)
                if (parent.degree(v) == r - 1) child.add_edge(v, 9);
            seen.insert(canonical_form(child));
        }
    });

    std::unordered_set<std::string> merged;
    for (auto& s : local)
        for (auto& key : s) merged.insert(key);
    std::vector<std::pair<std::string, Graph>> keyed;
    keyed.reserve(merged.size());
    for (const auto& key : merged) keyed.emplace_back(key, parse_graph6(key));
    return sort_by_record(std::move(keyed));
}

std::vector<Graph> canonicalize_catalog(const std::vector<Graph>& graphs, unsigned jobs) {
    if (jobs == 0) jobs = default_jobs();
    std::vector<std::string> keys(graphs.size());
    parallel_shards(graphs.size(), jobs, [&](unsigned, size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) keys[i] = canonical_form(graphs[i]);
    });
    std::unordered_set<std::string> merged(keys.begin(), keys.end());
    std::vector<std::pair<std::string, Graph>> keyed;
    keyed.reserve(merged.size());
    for (const auto& key : merged) keyed.emplace_back(key, parse_graph6(key));
    return sort_by_record(std::move(keyed));
}

} // namespace alphaspec
