#include "alphaspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <stdexcept>

namespace alphaspec {

Graph::Graph(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 1..64, got " + std::to_string(n));
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loops are not representable");
    rows_[static_cast<size_t>(u)] |= (std::uint64_t{1} << v);
    rows_[static_cast<size_t>(v)] |= (std::uint64_t{1} << u);
}

void Graph::remove_edge(int u, int v) {
    rows_[static_cast<size_t>(u)] &= ~(std::uint64_t{1} << v);
    rows_[static_cast<size_t>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const { return std::popcount(rows_[static_cast<size_t>(v)]); }

long Graph::edge_count() const {
    long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

int regular_degree(const Graph& g) {
    const int r = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != r) return -1;
    return r;
}

// -- graph6 -------------------------------------------------------------------

namespace {

constexpr int kBias = 63;

int body_bytes(int n) {
    const int bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

Graph parse_graph6(const std::string& text) {
    size_t pos = 0;
    if (text.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (pos >= text.size()) throw std::invalid_argument("graph6: empty record");

    auto byte_at = [&](size_t i) -> int {
        if (i >= text.size()) throw std::invalid_argument("graph6: truncated record");
        const int c = static_cast<unsigned char>(text[i]);
        if (c < kBias || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - kBias;
    };

    long n;
    if (byte_at(pos) == 126 - kBias) {
        // extended header '~' + 3 bytes; '~~' (8-byte) orders are far beyond our limit
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
            throw std::invalid_argument("graph6: order exceeds limit");
        n = (static_cast<long>(byte_at(pos + 1)) << 12) |
            (static_cast<long>(byte_at(pos + 2)) << 6) | byte_at(pos + 3);
        pos += 4;
    } else {
        n = byte_at(pos);
        pos += 1;
    }
    if (n > kMaxVertices) throw std::invalid_argument("graph6: order exceeds limit");
    if (n < 1) throw std::invalid_argument("graph6: order must be at least 1");

    Graph g(static_cast<int>(n));
    const int bits = static_cast<int>(n) * (static_cast<int>(n) - 1) / 2;
    const size_t need = pos + static_cast<size_t>(body_bytes(static_cast<int>(n)));
    if (text.size() < need) throw std::invalid_argument("graph6: truncated bit field");
    if (text.size() > need) throw std::invalid_argument("graph6: trailing bytes");

    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int value = byte_at(pos + static_cast<size_t>(bit / 6));
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    (void)bits;
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((acc << (6 - have)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

void write_graph6_file(const std::string& path, std::span<const Graph> graphs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

// -- operations ---------------------------------------------------------------

Graph complement(const Graph& g) {
    const int n = g.order();
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    Graph c(n);
    for (int u = 0; u < n; ++u) {
        const std::uint64_t want = (~g.row(u)) & all & ~(std::uint64_t{1} << u);
        for (int v = u + 1; v < n; ++v)
            if ((want >> v) & 1) c.add_edge(u, v);
    }
    return c;
}

Graph disjoint_union(std::span<const Graph> parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint_union of no graphs");
    long total = 0;
    for (const Graph& p : parts) total += p.order();
    if (total > kMaxVertices)
        throw std::invalid_argument("disjoint_union exceeds 64 vertices");
    Graph g(static_cast<int>(total));
    int offset = 0;
    for (const Graph& p : parts) {
        for (int u = 0; u < p.order(); ++u)
            for (int v = u + 1; v < p.order(); ++v)
                if (p.has_edge(u, v)) g.add_edge(offset + u, offset + v);
        offset += p.order();
    }
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const Graph parts[] = {a, b};
    return disjoint_union(std::span<const Graph>(parts, 2));
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

// -- families -----------------------------------------------------------------

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_split_graph(int clique, int independent) {
    if (clique < 1 || independent < 0)
        throw std::invalid_argument("complete split needs clique >= 1, independent >= 0");
    return independent == 0 ? complete_graph(clique)
                            : join(complete_graph(clique), empty_graph(independent));
}

Graph friendship_graph(int k) {
    if (k < 1) throw std::invalid_argument("friendship needs k >= 1");
    return join(complete_graph(1), matching_plus_isolates(k, 0));
}

Graph wheel_graph(int n) {
    if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
    return join(complete_graph(1), cycle_graph(n - 1));
}

Graph matching_plus_isolates(int k, int isolates) {
    if (k < 1 || isolates < 0)
        throw std::invalid_argument("matching needs k >= 1, isolates >= 0");
    Graph g(2 * k + isolates);
    for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

Family family_from_name(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "star") return Family::Star;
    if (name == "empty") return Family::Empty;
    if (name == "complete_split") return Family::CompleteSplit;
    if (name == "friendship") return Family::Friendship;
    if (name == "wheel") return Family::Wheel;
    if (name == "matching_plus_isolates") return Family::MatchingPlusIsolates;
    throw std::invalid_argument("unknown family: " + name);
}

Graph make_family(Family f, std::span<const int> params) {
    auto arity = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family expects " + std::to_string(k) + " parameter(s)");
    };
    switch (f) {
        case Family::Path: arity(1); return path_graph(params[0]);
        case Family::Cycle: arity(1); return cycle_graph(params[0]);
        case Family::Complete: arity(1); return complete_graph(params[0]);
        case Family::Star: arity(1); return star_graph(params[0]);
        case Family::Empty: arity(1); return empty_graph(params[0]);
        case Family::CompleteSplit: arity(2); return complete_split_graph(params[0], params[1]);
        case Family::Friendship: arity(1); return friendship_graph(params[0]);
        case Family::Wheel: arity(1); return wheel_graph(params[0]);
        case Family::MatchingPlusIsolates:
            arity(2);
            return matching_plus_isolates(params[0], params[1]);
    }
    throw std::logic_error("unreachable");
}

} // namespace alphaspec
