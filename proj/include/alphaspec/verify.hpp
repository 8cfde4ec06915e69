#ifndef ALPHASPEC_VERIFY_HPP
#define ALPHASPEC_VERIFY_HPP

#include "alphaspec/classes.hpp"
#include "alphaspec/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace alphaspec {

struct Counterexample {
    std::string left_g6;
    std::string right_g6;
    std::string alpha;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::map<std::string, std::string> parameters; // n range, alpha set, tolerances
    bool pass = true;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;
};

/// Family descriptors for the determined-by-spectrum sweeps. Each yields every
/// member on exactly n vertices.
///   path, complete, star, cycle, path-complement, cycle-unions,
///   cycle-unions-complement, matching, matching-complement, wheel,
///   friendship, complete-split, km-pn
std::vector<Graph> family_instances(const std::string& family, int n);

/// Pass iff every family member on n <= max_n has no cospectral mate at every
/// alpha (or symbolically); failures carry the mates.
VerificationReport verify_ds(const std::string& family, int max_n,
                             const std::vector<Rational>& alphas, const ModeSpec& mode_kind,
                             ScanContext& ctx);

/// Numeric/exact checks for the named lemmas and claims:
///   le3.1  largest-eigenvalue equality for complement-of-cycle merges
///   le3.2  complement-of-path strict inequalities, direction by parity of k
///   lem2.1 dominating-vertex biconditional, certified exactly
///   claim1 joined-cycle-merge equality, claim2 joined strict inequality
VerificationReport verify_lemma(const std::string& lemma_id, int min_n, int max_n,
                                const std::vector<Rational>& alphas, double tol,
                                ScanContext& ctx);

/// For every regular DS graph g on n <= max_base vertices, g v K_m keeps the
/// DS property (per-alpha check over the enumerated levels); regular
/// cospectral pairs that turn up are routed through the forge as a positive
/// control.
VerificationReport verify_regular_ds_transfer(int max_base, int max_m,
                                              const std::vector<Rational>& alphas,
                                              ScanContext& ctx);

/// Corrected vs printed regular-join balancing factor, both compared against
/// the direct determinant on small regular pairs.
VerificationReport verify_corollary_regression(ScanContext& ctx);

/// All optimal solutions of: minimize sum a_i^2 subject to 0 <= a_i <= n-1 and
/// sum a_i = (n-2)(n-1); brute force over bounded non-increasing sequences.
std::vector<DegreeSequence> min_square_degree_sequences(int n);

struct RegularCospectralPair {
    Graph left;
    Graph right;
    int order;
    int degree;
};

/// Scan regular graphs on min_n..max_n for exact cospectral mates at the given
/// alpha, smallest order first. Supports max_n <= 10 (the 10-vertex level uses
/// the degree-constrained enumerator).
std::vector<RegularCospectralPair> find_regular_cospectral_pairs(int min_n, int max_n,
                                                                 const Rational& alpha,
                                                                 ScanContext& ctx);

} // namespace alphaspec

#endif
