#ifndef ALPHASPEC_GRAPH_HPP
#define ALPHASPEC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace alphaspec {

constexpr int kMaxVertices = 64; // one adjacency row per machine word

/// Simple undirected graph on 1..64 vertices, adjacency kept as bit rows.
/// Value type: cheap to copy, safe to share across threads once built.
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    std::uint64_t row(int v) const { return rows_[static_cast<size_t>(v)]; }

    bool has_edge(int u, int v) const { return (rows_[static_cast<size_t>(u)] >> v) & 1u; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    long edge_count() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && rows_ == other.rows_; }

private:
    int n_;
    std::vector<std::uint64_t> rows_;
};

/// Sorted non-increasing; sum is always even.
using DegreeSequence = std::vector<int>;

DegreeSequence degree_sequence(const Graph& g);

/// r if every vertex has degree r, nullopt otherwise (encoded as r >= 0 / -1).
int regular_degree(const Graph& g); // -1 when irregular

// -- graph6 codec (standard format: N(n) header, upper triangle column-major,
//    6 bits per byte offset 63) ------------------------------------------------

Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// One record per line; an optional ">>graph6<<" header line is skipped.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, std::span<const Graph> graphs);

// -- operations ---------------------------------------------------------------

Graph complement(const Graph& g);
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

// -- named families -----------------------------------------------------------
//
// Vertex orderings are fixed so tests and graph6 output are deterministic:
//   path/cycle: 0-1-...-(n-1) (+ closing edge n-1,0 for cycles)
//   star: hub 0, leaves 1..n-1
//   complete_split(m,s): clique vertices 0..m-1, independent set m..m+s-1
//   friendship(k): hub 0, edge pairs (1,2),(3,4),...
//   wheel(n): hub 0, rim cycle 1..n-1
//   matching_plus_isolates(k,t): edges (0,1),(2,3),..., isolates at the end

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);          // K_{1,n-1} on n vertices
Graph empty_graph(int n);
Graph complete_split_graph(int clique, int independent);
Graph friendship_graph(int k);    // K_1 v kK_2, 2k+1 vertices
Graph wheel_graph(int n);         // K_1 v C_{n-1}, n >= 4
Graph matching_plus_isolates(int k, int isolates); // kK_2 u tK_1

enum class Family {
    Path,
    Cycle,
    Complete,
    Star,
    Empty,
    CompleteSplit,
    Friendship,
    Wheel,
    MatchingPlusIsolates,
};

Family family_from_name(const std::string& name);
Graph make_family(Family f, std::span<const int> params);

} // namespace alphaspec

#endif
