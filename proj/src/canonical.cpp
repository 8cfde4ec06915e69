#include "alphaspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace alphaspec {

namespace {

// Ordered partition in nauty style: lab lists the vertices, cell_end[i] marks
// whether the cell ends at position i.
struct Partition {
    std::vector<int> lab;
    std::vector<char> cell_end;

    int order() const { return static_cast<int>(lab.size()); }
    bool discrete() const {
        for (char e : cell_end)
            if (!e) return false;
        return true;
    }
};

// Code words pack the graph6 body bit order (upper triangle, column major)
// MSB first, so lexicographic word comparison matches bit comparison.
using Code = std::vector<std::uint64_t>;

class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalResult run() {
        Partition p;
        p.lab.resize(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) p.lab[static_cast<size_t>(i)] = i;
        p.cell_end.assign(static_cast<size_t>(n_), 0);
        p.cell_end[static_cast<size_t>(n_) - 1] = 1;
        refine(p);
        search(p);

        CanonicalResult result{best_perm_, apply_labeling(g_, best_perm_), aut_gens_};
        return result;
    }

private:
    const Graph& g_;
    int n_;
    bool have_best_ = false;
    Code best_code_;
    std::vector<int> best_perm_;
    std::vector<std::vector<int>> aut_gens_;
    std::vector<int> base_; // individualized vertices along the current path

    // ---- equitable refinement (sweep to fixpoint) ----
    void refine(Partition& p) const {
        bool changed = true;
        std::vector<std::pair<int, int>> grouped(static_cast<size_t>(n_));
        while (changed) {
            changed = false;
            // freeze current splitter masks
            std::vector<std::uint64_t> splitters;
            int start = 0;
            for (int i = 0; i < n_; ++i) {
                if (!p.cell_end[static_cast<size_t>(i)]) continue;
                std::uint64_t mask = 0;
                for (int t = start; t <= i; ++t)
                    mask |= std::uint64_t{1} << p.lab[static_cast<size_t>(t)];
                splitters.push_back(mask);
                start = i + 1;
            }
            for (std::uint64_t mask : splitters) {
                int cell_start = 0;
                for (int i = 0; i < n_; ++i) {
                    if (!p.cell_end[static_cast<size_t>(i)]) continue;
                    const int cell_len = i - cell_start + 1;
                    if (cell_len > 1 && split_cell(p, cell_start, i, mask, grouped))
                        changed = true;
                    cell_start = i + 1;
                }
            }
        }
    }

    // Sort the cell's vertices by adjacency count into the splitter, ascending;
    // insert cell boundaries between distinct counts.
    bool split_cell(Partition& p, int from, int to, std::uint64_t mask,
                    std::vector<std::pair<int, int>>& grouped) const {
        int distinct = 1;
        for (int t = from; t <= to; ++t) {
            const int v = p.lab[static_cast<size_t>(t)];
            grouped[static_cast<size_t>(t)] = {std::popcount(g_.row(v) & mask), v};
        }
        std::sort(grouped.begin() + from, grouped.begin() + to + 1);
        for (int t = from; t < to; ++t)
            if (grouped[static_cast<size_t>(t)].first != grouped[static_cast<size_t>(t) + 1].first)
                ++distinct;
        if (distinct == 1) return false;
        for (int t = from; t <= to; ++t) {
            p.lab[static_cast<size_t>(t)] = grouped[static_cast<size_t>(t)].second;
            if (t < to)
                p.cell_end[static_cast<size_t>(t)] =
                    grouped[static_cast<size_t>(t)].first !=
                    grouped[static_cast<size_t>(t) + 1].first;
        }
        return true;
    }

    // ---- code helpers ----
    static int pair_bits(int k) { return k * (k - 1) / 2; }

    Code code_of(const std::vector<int>& perm, int prefix) const {
        Code code((static_cast<size_t>(pair_bits(prefix)) + 63) / 64, 0);
        int bit = 0;
        for (int j = 1; j < prefix; ++j) {
            const std::uint64_t row = g_.row(perm[static_cast<size_t>(j)]);
            for (int i = 0; i < j; ++i, ++bit)
                if ((row >> perm[static_cast<size_t>(i)]) & 1)
                    code[static_cast<size_t>(bit) / 64] |=
                        std::uint64_t{1} << (63 - bit % 64);
        }
        return code;
    }

    // -1 / 0 / +1 comparison of a prefix code against the incumbent best.
    int compare_prefix(const Code& prefix_code, int nbits) const {
        for (size_t w = 0; w < prefix_code.size(); ++w) {
            const int bits_before = static_cast<int>(w) * 64;
            const int valid = std::min(64, nbits - bits_before);
            if (valid <= 0) break;
            const std::uint64_t mask =
                valid == 64 ? ~std::uint64_t{0} : ~((std::uint64_t{1} << (64 - valid)) - 1);
            const std::uint64_t a = prefix_code[w] & mask;
            const std::uint64_t b = best_code_[w] & mask;
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }

    int leading_singletons(const Partition& p) const {
        for (int i = 0; i < n_; ++i)
            if (!p.cell_end[static_cast<size_t>(i)]) return i;
        return n_;
    }

    // ---- search ----
    void search(const Partition& p) {
        if (have_best_) {
            const int k = leading_singletons(p);
            if (k >= 2 && compare_prefix(code_of(p.lab, k), pair_bits(k)) > 0) return;
        }
        if (p.discrete()) {
            handle_leaf(p.lab);
            return;
        }

        int cell_start = 0, cell_to = -1;
        for (int i = 0; i < n_; ++i) {
            if (p.cell_end[static_cast<size_t>(i)]) {
                if (i > cell_start) {
                    cell_to = i;
                    break;
                }
                cell_start = i + 1;
            }
        }

        const std::vector<int> candidates(p.lab.begin() + cell_start,
                                          p.lab.begin() + cell_to + 1);
        std::vector<int> tried;
        for (int v : candidates) {
            if (in_tried_orbit(v, tried)) continue;
            tried.push_back(v);
            Partition child = p;
            auto it = std::find(child.lab.begin() + cell_start,
                                child.lab.begin() + cell_to + 1, v);
            std::rotate(child.lab.begin() + cell_start, it, it + 1);
            child.cell_end[static_cast<size_t>(cell_start)] = 1;
            refine(child);
            base_.push_back(v);
            search(child);
            base_.pop_back();
        }
    }

    void handle_leaf(const std::vector<int>& perm) {
        const Code code = code_of(perm, n_);
        if (!have_best_ || code < best_code_) {
            best_code_ = code;
            best_perm_ = perm;
            have_best_ = true;
            return;
        }
        if (code == best_code_) {
            // Two labelings with identical codes induce an automorphism.
            std::vector<int> phi(static_cast<size_t>(n_));
            for (int pos = 0; pos < n_; ++pos)
                phi[static_cast<size_t>(best_perm_[static_cast<size_t>(pos)])] =
                    perm[static_cast<size_t>(pos)];
            bool identity = true;
            for (int v = 0; v < n_; ++v)
                if (phi[static_cast<size_t>(v)] != v) {
                    identity = false;
                    break;
                }
            if (!identity) aut_gens_.push_back(std::move(phi));
        }
    }

    // Orbit test under the subgroup generated by automorphisms fixing the
    // current base pointwise (union-find closure over qualifying generators).
    bool in_tried_orbit(int v, const std::vector<int>& tried) const {
        if (tried.empty() || aut_gens_.empty()) return false;
        std::array<int, kMaxVertices> parent{};
        for (int i = 0; i < n_; ++i) parent[static_cast<size_t>(i)] = i;
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] =
                    parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[static_cast<size_t>(b)] = a;
        };
        for (const auto& gen : aut_gens_) {
            bool fixes_base = true;
            for (int b : base_)
                if (gen[static_cast<size_t>(b)] != b) {
                    fixes_base = false;
                    break;
                }
            if (!fixes_base) continue;
            for (int u = 0; u < n_; ++u) unite(u, gen[static_cast<size_t>(u)]);
        }
        const int root = find(v);
        for (int u : tried)
            if (find(u) == root) return true;
        return false;
    }
};

} // namespace

Graph apply_labeling(const Graph& g, const std::vector<int>& labeling) {
    Graph out(g.order());
    for (int p = 0; p < g.order(); ++p)
        for (int q = p + 1; q < g.order(); ++q)
            if (g.has_edge(labeling[static_cast<size_t>(p)], labeling[static_cast<size_t>(q)]))
                out.add_edge(p, q);
    return out;
}

CanonicalResult canonicalize(const Graph& g) { return Canonicalizer(g).run(); }

Graph canonical_graph(const Graph& g) { return canonicalize(g).graph; }

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace alphaspec
