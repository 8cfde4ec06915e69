#ifndef ALPHASPEC_CLASSES_HPP
#define ALPHASPEC_CLASSES_HPP

#include "alphaspec/graph.hpp"
#include "alphaspec/joins.hpp"
#include "alphaspec/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace alphaspec {

struct ModeSpec {
    SpectralMode mode = SpectralMode::Fixed;
    Rational alpha;                       // meaningful in fixed mode

    static ModeSpec fixed(Rational a) { return {SpectralMode::Fixed, std::move(a)}; }
    static ModeSpec symbolic() { return {SpectralMode::Symbolic, Rational(0)}; }

    std::string name() const { return mode == SpectralMode::Symbolic ? "symbolic-a" : "fixed-a"; }
};

/// 128-bit FNV-1a over a byte string, rendered as 32 hex digits.
std::string hash128_hex(const std::string& bytes);

struct Fingerprint {
    std::string mode;     // "symbolic-a" or "fixed-a"
    std::string alpha;    // rational text (fixed mode only)
    std::string key;      // 128-bit hash of the canonical coefficient bytes
};

struct CospectralClass {
    Fingerprint fingerprint;
    std::vector<std::string> members; // canonical graph6, sorted, pairwise non-isomorphic
    std::string charpoly;             // rendered polynomial in the class's mode
    std::string exact_key;            // full canonical coefficient bytes (collision detection)
};

/// Canonical coefficient bytes of the graph's charpoly in the given mode.
/// Equal byte strings iff equal charpolys. Fixed mode encodes the integer
/// charpoly of the denominator-scaled matrix, so no rationals appear.
std::string exact_spectral_key(const Graph& g, const ModeSpec& mode);

std::string render_charpoly(const Graph& g, const ModeSpec& mode);

/// Eigenvalues rounded to 1e-8 and hashed: the documented fast pre-pass
/// fingerprint. Only a filter; never a certificate.
Fingerprint float_fingerprint(const Graph& g, const ModeSpec& mode);

/// Caches enumeration levels and per-(n, alpha) float spectra across suites.
class ScanContext {
public:
    explicit ScanContext(unsigned jobs = 0);

    unsigned jobs() const { return jobs_; }

    const std::vector<Graph>& level(int n);

    /// Probe spectra used by the float pre-pass: the spectrum at alpha for
    /// fixed mode, the concatenated spectra at 1/4 and 3/4 for symbolic mode.
    const std::vector<std::vector<double>>& probe_spectra(int n, const ModeSpec& mode);

private:
    unsigned jobs_;
    std::mutex mu_;
    std::map<int, std::vector<Graph>> levels_;
    std::map<std::pair<int, std::string>, std::vector<std::vector<double>>> spectra_;
};

/// Probe spectrum of a single graph in the given mode (same convention as
/// ScanContext::probe_spectra).
std::vector<double> probe_spectrum(const Graph& g, const ModeSpec& mode);

/// Tolerance for the float pre-pass proximity filter. True cospectral mates
/// agree to solver accuracy (~1e-12 here), so grouping at 1e-6 cannot split a
/// genuine class; everything that survives is confirmed exactly.
constexpr double kPrePassTol = 1e-6;

/// Partition a catalog of canonical representatives into exact cospectral
/// classes: proximity clustering on probe spectra, then exact confirmation
/// inside every multi-member cluster. With exact_singletons the exact key and
/// rendered charpoly are also computed for singleton classes (class-store
/// output); otherwise they carry only the float data.
std::vector<CospectralClass> cospectral_classes(const std::vector<Graph>& graphs,
                                                const ModeSpec& mode, ScanContext& ctx,
                                                bool exact_singletons = true);

/// All graphs on target.order() vertices with the same exact charpoly in the
/// given mode, non-isomorphic to target (canonical graph6 records).
std::vector<std::string> find_mates(const Graph& target, const ModeSpec& mode,
                                    ScanContext& ctx);

} // namespace alphaspec

#endif
