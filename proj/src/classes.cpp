#include "alphaspec/classes.hpp"

#include "alphaspec/canonical.hpp"
#include "alphaspec/eigensolve.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace alphaspec {

std::string hash128_hex(const std::string& bytes) {
    unsigned __int128 h = (static_cast<unsigned __int128>(0x6c62272e07bb0142ULL) << 64) |
                          0x62b821756295c58dULL; // FNV-1a 128 offset basis
    const unsigned __int128 prime =
        (static_cast<unsigned __int128>(0x0000000001000000ULL) << 64) | 0x000000000000013bULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= prime;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 31; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[static_cast<unsigned>(h & 0xf)];
        h >>= 4;
    }
    return out;
}

namespace {

std::string encode_int_vector(const std::vector<Int>& values) {
    std::string out;
    auto push_i32 = [&](int v) {
        for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((v >> s) & 0xff));
    };
    push_i32(static_cast<int>(values.size()));
    for (const Int& value : values) {
        const bool neg = value < 0;
        Int mag = neg ? Int(-value) : value;
        std::string bytes;
        while (mag != 0) {
            bytes.push_back(static_cast<char>(static_cast<unsigned>(mag & 0xff)));
            mag >>= 8;
        }
        std::reverse(bytes.begin(), bytes.end());
        out.push_back(neg ? '\x01' : '\x00');
        push_i32(static_cast<int>(bytes.size()));
        out += bytes;
    }
    return out;
}

std::vector<Int> scaled_charpoly_ints(const Graph& g, const Rational& alpha) {
    const int n = g.order();
    const Int p = rat_num(alpha);
    const Int q = rat_den(alpha);
    std::vector<std::vector<Int>> b(static_cast<size_t>(n),
                                    std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) {
        b[static_cast<size_t>(i)][static_cast<size_t>(i)] = p * g.degree(i);
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) b[static_cast<size_t>(i)][static_cast<size_t>(j)] = q - p;
    }
    return int_charpoly(b);
}

} // namespace

std::string exact_spectral_key(const Graph& g, const ModeSpec& mode) {
    if (mode.mode == SpectralMode::Symbolic) return charpoly_exact(g).encode();
    return encode_int_vector(scaled_charpoly_ints(g, mode.alpha));
}

std::string render_charpoly(const Graph& g, const ModeSpec& mode) {
    if (mode.mode == SpectralMode::Symbolic) return charpoly_exact(g).to_string();
    return charpoly_at(g, mode.alpha).to_string();
}

std::vector<double> probe_spectrum(const Graph& g, const ModeSpec& mode) {
    if (mode.mode == SpectralMode::Fixed)
        return eigenvalues(g, to_double(mode.alpha)).eigenvalues;
    std::vector<double> probe = eigenvalues(g, 0.25).eigenvalues;
    const std::vector<double> second = eigenvalues(g, 0.75).eigenvalues;
    probe.insert(probe.end(), second.begin(), second.end());
    return probe;
}

Fingerprint float_fingerprint(const Graph& g, const ModeSpec& mode) {
    const std::vector<double> probe = probe_spectrum(g, mode);
    std::string bytes;
    bytes.reserve(probe.size() * 8);
    for (double v : probe) {
        const auto r = static_cast<long long>(std::llround(v * 1e8));
        for (int s = 56; s >= 0; s -= 8)
            bytes.push_back(static_cast<char>((r >> s) & 0xff));
    }
    Fingerprint fp;
    fp.mode = mode.name();
    if (mode.mode == SpectralMode::Fixed) fp.alpha = rational_to_string(mode.alpha);
    fp.key = hash128_hex(bytes);
    return fp;
}

ScanContext::ScanContext(unsigned jobs) : jobs_(jobs == 0 ? default_jobs() : jobs) {}

const std::vector<Graph>& ScanContext::level(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = levels_.find(n);
    if (it == levels_.end())
        it = levels_.emplace(n, enumerate_graphs(n, jobs_)).first;
    return it->second;
}

const std::vector<std::vector<double>>& ScanContext::probe_spectra(int n,
                                                                   const ModeSpec& mode) {
    const std::string mode_key =
        mode.mode == SpectralMode::Symbolic ? "symbolic" : rational_to_string(mode.alpha);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = spectra_.find({n, mode_key});
        if (it != spectra_.end()) return it->second;
    }
    const std::vector<Graph>& graphs = level(n);
    std::vector<std::vector<double>> spectra(graphs.size());
    parallel_shards(graphs.size(), jobs_, [&](unsigned, size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) spectra[i] = probe_spectrum(graphs[i], mode);
    });
    std::lock_guard<std::mutex> lock(mu_);
    return spectra_.emplace(std::make_pair(n, mode_key), std::move(spectra)).first->second;
}

namespace {

bool spectra_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

} // namespace

std::vector<CospectralClass> cospectral_classes(const std::vector<Graph>& graphs,
                                                const ModeSpec& mode, ScanContext& ctx,
                                                bool exact_singletons) {
    const size_t count = graphs.size();
    std::vector<std::vector<double>> spectra(count);
    parallel_shards(count, ctx.jobs(), [&](unsigned, size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) spectra[i] = probe_spectrum(graphs[i], mode);
    });

    // Proximity clustering: sort by leading eigenvalue, union everything whose
    // full probe vectors agree within the pre-pass tolerance. The sliding
    // window over the leading eigenvalue bounds the pair count.
    std::vector<size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return spectra[a] < spectra[b];
    });
    UnionFind uf(count);
    for (size_t pos = 0; pos < count; ++pos) {
        const size_t i = order[pos];
        for (size_t back = pos; back-- > 0;) {
            const size_t j = order[back];
            if (spectra[i].front() - spectra[j].front() > kPrePassTol) break;
            if (spectra_close(spectra[i], spectra[j], kPrePassTol)) uf.unite(i, j);
        }
    }

    std::map<size_t, std::vector<size_t>> clusters;
    for (size_t i = 0; i < count; ++i) clusters[uf.find(i)].push_back(i);

    // Exact confirmation within clusters; keys for singletons only on request.
    std::vector<std::string> keys(count);
    std::vector<size_t> need_exact;
    for (const auto& [root, members] : clusters)
        if (members.size() > 1 || exact_singletons)
            for (size_t i : members) need_exact.push_back(i);
    parallel_shards(need_exact.size(), ctx.jobs(), [&](unsigned, size_t begin, size_t end) {
        for (size_t t = begin; t < end; ++t)
            keys[need_exact[t]] = exact_spectral_key(graphs[need_exact[t]], mode);
    });

    std::map<std::string, std::vector<size_t>> exact_classes;
    for (const auto& [root, members] : clusters) {
        if (members.size() == 1 && !exact_singletons) {
            // distinct sentinel key: the canonical record, which no
            // coefficient encoding collides with
            exact_classes["g6:" + to_graph6(graphs[members.front()])] = members;
            continue;
        }
        for (size_t i : members) exact_classes[keys[i]].push_back(i);
    }

    std::vector<CospectralClass> out;
    out.reserve(exact_classes.size());
    for (auto& [key, members] : exact_classes) {
        CospectralClass cls;
        cls.fingerprint.mode = mode.name();
        if (mode.mode == SpectralMode::Fixed)
            cls.fingerprint.alpha = rational_to_string(mode.alpha);
        const bool sentinel = key.rfind("g6:", 0) == 0;
        cls.exact_key = sentinel ? "" : key;
        cls.fingerprint.key = sentinel ? "" : hash128_hex(key);
        if (!sentinel || exact_singletons)
            cls.charpoly = render_charpoly(graphs[members.front()], mode);
        for (size_t i : members) cls.members.push_back(to_graph6(graphs[i]));
        std::sort(cls.members.begin(), cls.members.end());
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const CospectralClass& a, const CospectralClass& b) {
        return a.members.front() < b.members.front();
    });
    return out;
}

std::vector<std::string> find_mates(const Graph& target, const ModeSpec& mode,
                                    ScanContext& ctx) {
    const int n = target.order();
    const std::vector<Graph>& level = ctx.level(n);
    const auto& spectra = ctx.probe_spectra(n, mode);
    const std::vector<double> probe = probe_spectrum(target, mode);
    const std::string target_record = canonical_form(target);

    std::vector<size_t> candidates;
    for (size_t i = 0; i < level.size(); ++i)
        if (spectra_close(probe, spectra[i], kPrePassTol)) candidates.push_back(i);

    const std::string target_key = exact_spectral_key(target, mode);
    std::vector<std::string> mates;
    for (size_t i : candidates) {
        const std::string record = to_graph6(level[i]);
        if (record == target_record) continue;
        if (exact_spectral_key(level[i], mode) == target_key) mates.push_back(record);
    }
    std::sort(mates.begin(), mates.end());
    return mates;
}

} // namespace alphaspec
