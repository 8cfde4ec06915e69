#include "alphaspec/verify.hpp"

#include "alphaspec/canonical.hpp"
#include "alphaspec/eigensolve.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/invariants.hpp"
#include "alphaspec/joins.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace alphaspec {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string alphas_text(const std::vector<Rational>& alphas) {
    std::string out;
    for (const auto& a : alphas) {
        if (!out.empty()) out += ",";
        out += rational_to_string(a);
    }
    return out;
}

// Partitions of n into parts >= 3, used for unions of cycles.
void cycle_partitions(int n, int min_part, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int part = min_part; part <= n; ++part) {
        if (n - part != 0 && n - part < 3) continue;
        current.push_back(part);
        cycle_partitions(n - part, part, current, out);
        current.pop_back();
    }
}

std::vector<Graph> cycle_union_instances(int n) {
    std::vector<Graph> out;
    if (n < 3) return out;
    std::vector<std::vector<int>> partitions;
    std::vector<int> current;
    cycle_partitions(n, 3, current, partitions);
    for (const auto& parts : partitions) {
        std::vector<Graph> cycles;
        for (int len : parts) cycles.push_back(cycle_graph(len));
        out.push_back(disjoint_union(cycles));
    }
    return out;
}

} // namespace

std::vector<Graph> family_instances(const std::string& family, int n) {
    std::vector<Graph> out;
    if (family == "path") {
        out.push_back(path_graph(n));
    } else if (family == "complete") {
        out.push_back(complete_graph(n));
    } else if (family == "star") {
        if (n >= 2) out.push_back(star_graph(n));
    } else if (family == "cycle") {
        if (n >= 3) out.push_back(cycle_graph(n));
    } else if (family == "path-complement") {
        out.push_back(complement(path_graph(n)));
    } else if (family == "cycle-unions") {
        out = cycle_union_instances(n);
    } else if (family == "cycle-unions-complement") {
        for (const Graph& g : cycle_union_instances(n)) out.push_back(complement(g));
    } else if (family == "matching") {
        for (int k = 1; 2 * k <= n; ++k) out.push_back(matching_plus_isolates(k, n - 2 * k));
    } else if (family == "matching-complement") {
        for (int k = 1; 2 * k <= n; ++k)
            out.push_back(complement(matching_plus_isolates(k, n - 2 * k)));
    } else if (family == "wheel") {
        if (n >= 4) out.push_back(wheel_graph(n));
    } else if (family == "friendship") {
        if (n >= 3 && n % 2 == 1) out.push_back(friendship_graph((n - 1) / 2));
    } else if (family == "complete-split") {
        for (int m = 1; m < n; ++m) out.push_back(complete_split_graph(m, n - m));
    } else if (family == "km-pn") {
        for (int m = 1; m < n; ++m) out.push_back(join(complete_graph(m), path_graph(n - m)));
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    return out;
}

VerificationReport verify_ds(const std::string& family, int max_n,
                             const std::vector<Rational>& alphas, const ModeSpec& mode_kind,
                             ScanContext& ctx) {
    Stopwatch timer;
    VerificationReport report;
    report.suite = "ds:" + family;
    report.parameters["family"] = family;
    report.parameters["max_n"] = std::to_string(max_n);
    report.parameters["mode"] = mode_kind.name();
    if (mode_kind.mode == SpectralMode::Fixed)
        report.parameters["alphas"] = alphas_text(alphas);

    std::vector<ModeSpec> modes;
    if (mode_kind.mode == SpectralMode::Symbolic) {
        modes.push_back(ModeSpec::symbolic());
    } else {
        for (const auto& a : alphas) modes.push_back(ModeSpec::fixed(a));
    }

    long members = 0;
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : family_instances(family, n)) {
            ++members;
            for (const ModeSpec& mode : modes) {
                const std::vector<std::string> mates = find_mates(g, mode, ctx);
                for (const std::string& mate : mates) {
                    report.pass = false;
                    report.counterexamples.push_back(
                        {canonical_form(g), mate,
                         mode.mode == SpectralMode::Symbolic ? "symbolic"
                                                             : rational_to_string(mode.alpha),
                         "cospectral mate of " + family + " member on " + std::to_string(n) +
                             " vertices"});
                }
            }
        }
    }
    report.notes.push_back("members checked: " + std::to_string(members));
    report.elapsed_seconds = timer.seconds();
    return report;
}

namespace {

// Graph choices standing in for the arbitrary graph H in Lemma 2.3's
// statement: every graph when the order is at most 2, named families beyond.
std::vector<Graph> small_h_choices(int h) {
    std::vector<Graph> out;
    if (h <= 0) return out;
    if (h == 1) {
        out.push_back(Graph(1));
        return out;
    }
    if (h == 2) {
        out.push_back(empty_graph(2));
        out.push_back(complete_graph(2));
        return out;
    }
    out.push_back(empty_graph(h));
    out.push_back(path_graph(h));
    out.push_back(complete_graph(h));
    out.push_back(cycle_graph(h));
    return out;
}

Graph maybe_union(const Graph& base, const Graph* extra) {
    return extra == nullptr ? base : disjoint_union(base, *extra);
}

VerificationReport lemma_le31(int min_n, int max_n, const std::vector<Rational>& alphas,
                              double tol) {
    VerificationReport report;
    report.suite = "le3.1";
    long checks = 0;
    for (int n = std::max(min_n, 6); n <= max_n; ++n) {
        for (int n1 = 3; 2 * n1 <= n; ++n1) {
            for (int n2 = n1; n1 + n2 <= n; ++n2) {
                const int h = n - n1 - n2;
                std::vector<Graph> hs = small_h_choices(h);
                std::vector<const Graph*> hptrs;
                if (h == 0) hptrs.push_back(nullptr);
                for (const Graph& hg : hs) hptrs.push_back(&hg);
                for (const Graph* hp : hptrs) {
                    const Graph left = complement(
                        maybe_union(disjoint_union(cycle_graph(n1), cycle_graph(n2)), hp));
                    const Graph right = complement(maybe_union(cycle_graph(n1 + n2), hp));
                    for (const auto& alpha : alphas) {
                        const double a = to_double(alpha);
                        const double gap = std::abs(lambda1(left, a) - lambda1(right, a));
                        ++checks;
                        if (gap > tol) {
                            report.pass = false;
                            report.counterexamples.push_back(
                                {to_graph6(left), to_graph6(right), rational_to_string(alpha),
                                 "lambda_1 gap " + std::to_string(gap)});
                        }
                    }
                }
            }
        }
    }
    report.notes.push_back("equality checks: " + std::to_string(checks));
    return report;
}

VerificationReport lemma_le32(int min_n, int max_n, const std::vector<Rational>& alphas,
                              double tol) {
    VerificationReport report;
    report.suite = "le3.2";
    long checks = 0;
    double min_margin = 1e300;
    for (int n = std::max(min_n, 5); n <= max_n; ++n) {
        const Graph pbar = complement(path_graph(n));
        for (int k = 2; k <= n - 3; ++k) {
            const Graph g = complement(disjoint_union(path_graph(k), cycle_graph(n - k)));
            for (const auto& alpha : alphas) {
                const double a = to_double(alpha);
                // even k: lambda_1(Pbar) > lambda_1(G); odd k: the reverse
                const double diff = lambda1(pbar, a) - lambda1(g, a);
                const double margin = (k % 2 == 0) ? diff : -diff;
                ++checks;
                min_margin = std::min(min_margin, margin);
                if (!(margin > tol)) {
                    report.pass = false;
                    std::ostringstream detail;
                    detail << "n=" << n << " k=" << k << " margin=" << margin
                           << " required>" << tol;
                    report.counterexamples.push_back({to_graph6(pbar), to_graph6(g),
                                                      rational_to_string(alpha), detail.str()});
                }
            }
        }
    }
    std::ostringstream note;
    note << "inequality checks: " << checks << ", smallest margin: " << min_margin;
    report.notes.push_back(note.str());
    return report;
}

VerificationReport lemma_lem21(int max_n, const std::vector<Rational>& alphas,
                               ScanContext& ctx) {
    VerificationReport report;
    report.suite = "lem2.1";
    long checks = 0;
    for (int n = 2; n <= max_n; ++n) {
        const std::vector<Graph>& level = ctx.level(n);
        for (const auto& alpha : alphas) {
            if (!(alpha > Rational(1, 2) && alpha < 1))
                throw std::invalid_argument("lem2.1 is stated for 1/2 < alpha < 1");
            const Rational value = alpha * n - 1;
            const double value_d = to_double(value);
            for (const Graph& g : level) {
                ++checks;
                int dominating = 0;
                for (int v = 0; v < n; ++v)
                    if (g.degree(v) == n - 1) ++dominating;

                const UnivarPoly p = charpoly_at(g, alpha);
                const int mult = p.root_multiplicity(value);

                // eigenvalue positions: count spectrum strictly above the
                // exact root, with a safety band around it
                const auto spec = eigenvalues(g, to_double(alpha)).eigenvalues;
                int above = 0, inside_band = 0;
                for (double ev : spec) {
                    if (ev > value_d + 1e-6) ++above;
                    else if (ev > value_d - 1e-6) ++inside_band;
                }
                if (inside_band != mult) {
                    report.pass = false;
                    report.counterexamples.push_back(
                        {to_graph6(g), "", rational_to_string(alpha),
                         "numeric band disagrees with exact multiplicity"});
                    continue;
                }
                // The root block occupies positions above+1 .. above+mult, so
                // S = {k >= 2 : lambda_k = alpha*n-1} must equal {2..K} when
                // K >= 2 and be empty otherwise.
                const bool s_empty = (mult == 0) || (above + mult < 2);
                const bool ok = dominating >= 2
                                    ? (mult >= 1 && above <= 1 && above + mult == dominating)
                                    : s_empty;
                if (!ok) {
                    report.pass = false;
                    std::ostringstream detail;
                    detail << "dominating=" << dominating << " mult=" << mult
                           << " above=" << above;
                    report.counterexamples.push_back(
                        {to_graph6(g), "", rational_to_string(alpha), detail.str()});
                }
            }
        }
    }
    report.notes.push_back("graphs checked: " + std::to_string(checks));
    report.notes.push_back(
        "biconditional: indices {k>=2 : lambda_k = alpha*n-1} == {2..K}, K = dominating count");
    return report;
}

VerificationReport lemma_claims(const std::string& which, int max_n,
                                const std::vector<Rational>& alphas, double tol,
                                ScanContext& ctx) {
    VerificationReport report;
    report.suite = which;
    long checks = 0;
    double min_margin = 1e300;
    for (int m = 1; m <= 2; ++m) {
        const Graph km = complete_graph(m);
        for (int n = 4; n <= max_n; ++n) {
            if (which == "claim1") {
                for (int n1 = 3; 2 * n1 <= n; ++n1) {
                    for (int n2 = n1; n1 + n2 <= n; ++n2) {
                        const int h = n - n1 - n2;
                        if (h > 2) continue; // H1 ranges over all graphs on <= 2 vertices
                        std::vector<Graph> hs;
                        if (h > 0) hs = ctx.level(h);
                        std::vector<const Graph*> hptrs;
                        if (h == 0) hptrs.push_back(nullptr);
                        for (const Graph& hg : hs) hptrs.push_back(&hg);
                        for (const Graph* hp : hptrs) {
                            const Graph left =
                                join(km, maybe_union(disjoint_union(cycle_graph(n1),
                                                                    cycle_graph(n2)),
                                                     hp));
                            const Graph right =
                                join(km, maybe_union(cycle_graph(n1 + n2), hp));
                            for (const auto& alpha : alphas) {
                                const double a = to_double(alpha);
                                const double gap =
                                    std::abs(lambda1(left, a) - lambda1(right, a));
                                ++checks;
                                if (gap > tol) {
                                    report.pass = false;
                                    report.counterexamples.push_back(
                                        {to_graph6(left), to_graph6(right),
                                         rational_to_string(alpha),
                                         "lambda_1 gap " + std::to_string(gap)});
                                }
                            }
                        }
                    }
                }
            } else { // claim2
                const Graph right = join(km, path_graph(n));
                for (int k = 3; k <= n - 1; ++k) {
                    const Graph h = disjoint_union(cycle_graph(k), path_graph(n - k));
                    const Graph left = join(km, h);
                    for (const auto& alpha : alphas) {
                        const double a = to_double(alpha);
                        const double margin = lambda1(left, a) - lambda1(right, a);
                        ++checks;
                        min_margin = std::min(min_margin, margin);
                        if (!(margin > tol)) {
                            report.pass = false;
                            std::ostringstream detail;
                            detail << "m=" << m << " n=" << n << " k=" << k
                                   << " margin=" << margin;
                            report.counterexamples.push_back({to_graph6(left), to_graph6(right),
                                                              rational_to_string(alpha),
                                                              detail.str()});
                        }
                    }
                }
            }
        }
    }
    report.notes.push_back("checks: " + std::to_string(checks));
    if (which == "claim2") {
        std::ostringstream note;
        note << "smallest margin: " << min_margin;
        report.notes.push_back(note.str());
    }
    return report;
}

} // namespace

VerificationReport verify_lemma(const std::string& lemma_id, int min_n, int max_n,
                                const std::vector<Rational>& alphas, double tol,
                                ScanContext& ctx) {
    Stopwatch timer;
    VerificationReport report;
    if (lemma_id == "le3.1") report = lemma_le31(min_n, max_n, alphas, tol);
    else if (lemma_id == "le3.2") report = lemma_le32(min_n, max_n, alphas, tol);
    else if (lemma_id == "lem2.1") report = lemma_lem21(max_n, alphas, ctx);
    else if (lemma_id == "claim1" || lemma_id == "claim2")
        report = lemma_claims(lemma_id, max_n, alphas, tol, ctx);
    else throw std::invalid_argument("unknown lemma id: " + lemma_id);
    report.parameters["min_n"] = std::to_string(min_n);
    report.parameters["max_n"] = std::to_string(max_n);
    report.parameters["alphas"] = alphas_text(alphas);
    std::ostringstream tol_text;
    tol_text << tol;
    report.parameters["tol"] = tol_text.str();
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_regular_ds_transfer(int max_base, int max_m,
                                              const std::vector<Rational>& alphas,
                                              ScanContext& ctx) {
    Stopwatch timer;
    VerificationReport report;
    report.suite = "transfer";
    report.parameters["max_base_n"] = std::to_string(max_base);
    report.parameters["max_m"] = std::to_string(max_m);
    report.parameters["alphas"] = alphas_text(alphas);

    long ds_bases = 0, joins_checked = 0, pairs_found = 0;
    for (int n = 1; n <= max_base; ++n) {
        for (const Graph& g : ctx.level(n)) {
            if (regular_degree(g) < 0) continue;
            for (const auto& alpha : alphas) {
                const ModeSpec mode = ModeSpec::fixed(alpha);
                const std::vector<std::string> base_mates = find_mates(g, mode, ctx);
                if (!base_mates.empty()) {
                    // regular cospectral pair: positive control through the forge
                    ++pairs_found;
                    const Graph mate = parse_graph6(base_mates.front());
                    try {
                        forge_cospectral_pair(complete_graph(1), g, mate, SpectralMode::Fixed,
                                              alpha);
                    } catch (const ForgeError& e) {
                        report.pass = false;
                        report.counterexamples.push_back(
                            {to_graph6(g), base_mates.front(), rational_to_string(alpha),
                             std::string("forge rejected a scanned regular pair: ") + e.what()});
                    }
                    continue;
                }
                ++ds_bases;
                for (int m = 1; m <= max_m && n + m <= 9; ++m) {
                    const Graph joined = join(g, complete_graph(m));
                    ++joins_checked;
                    const std::vector<std::string> mates = find_mates(joined, mode, ctx);
                    if (!mates.empty()) {
                        report.pass = false;
                        report.counterexamples.push_back(
                            {canonical_form(joined), mates.front(), rational_to_string(alpha),
                             "join with K_" + std::to_string(m) +
                                 " lost the DS property (base n=" + std::to_string(n) + ")"});
                    }
                }
            }
        }
    }
    report.notes.push_back("regular DS bases: " + std::to_string(ds_bases));
    report.notes.push_back("joins checked: " + std::to_string(joins_checked));
    report.notes.push_back("regular cospectral base pairs: " + std::to_string(pairs_found));
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport verify_corollary_regression(ScanContext& ctx) {
    Stopwatch timer;
    VerificationReport report;
    report.suite = "corollary-regression";

    struct Case {
        Graph g1;
        Graph g2;
    };
    std::vector<Case> cases{{complete_graph(1), complete_graph(1)}};
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : ctx.level(n)) {
            if (regular_degree(g) < 0) continue;
            cases.push_back({g, cycle_graph(3)});
            cases.push_back({g, complete_graph(2)});
        }

    for (const auto& c : cases) {
        const int n1 = c.g1.order(), n2 = c.g2.order();
        const int r1 = regular_degree(c.g1), r2 = regular_degree(c.g2);
        const BivarPoly p1 = charpoly_exact(c.g1);
        const BivarPoly p2 = charpoly_exact(c.g2);
        const BivarPoly oracle = charpoly_exact(join(c.g1, c.g2));
        const BivarPoly corrected =
            join_charpoly_regular(n1, r1, p1, n2, r2, p2, RegularJoinForm::Corrected);
        if (corrected != oracle) {
            report.pass = false;
            report.counterexamples.push_back({to_graph6(c.g1), to_graph6(c.g2), "symbolic",
                                              "corrected form disagrees with determinant"});
        }
    }

    // The printed form must disagree with the determinant at alpha = 1/2 for
    // K_1 v K_1; agreement there would mean the regression lost its teeth.
    const BivarPoly x = BivarPoly::var_x();
    const BivarPoly printed =
        join_charpoly_regular(1, 0, x, 1, 0, x, RegularJoinForm::AsPrinted);
    const BivarPoly truth = charpoly_exact(complete_graph(2));
    const Rational half(1, 2);
    if (printed.eval_alpha(half) == truth.eval_alpha(half)) {
        report.pass = false;
        report.counterexamples.push_back(
            {"K_1", "K_1", "1/2", "printed balancing factor unexpectedly matches"});
    } else {
        report.notes.push_back("printed form diverges at alpha=1/2 for K_1 v K_1: " +
                               printed.eval_alpha(half).to_string() + " vs " +
                               truth.eval_alpha(half).to_string());
    }
    report.notes.push_back("regular pairs cross-checked: " + std::to_string(cases.size()));
    report.elapsed_seconds = timer.seconds();
    return report;
}

std::vector<DegreeSequence> min_square_degree_sequences(int n) {
    if (n < 4) throw std::invalid_argument("integer program needs n >= 4");
    const long target = static_cast<long>(n - 2) * (n - 1);
    std::vector<DegreeSequence> best;
    long best_cost = -1;
    DegreeSequence current(static_cast<size_t>(n));

    // non-increasing sequences, entries within 0..n-1
    auto recurse = [&](auto&& self, int index, int max_entry, long remaining,
                       long cost) -> void {
        if (index == n) {
            if (remaining != 0) return;
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                best.clear();
            }
            if (cost == best_cost) best.push_back(current);
            return;
        }
        const int slots = n - index;
        for (int value = std::min<long>(max_entry, remaining); value >= 0; --value) {
            if (static_cast<long>(value) * slots < remaining) break;
            current[static_cast<size_t>(index)] = value;
            self(self, index + 1, value, remaining - value,
                 cost + static_cast<long>(value) * value);
        }
    };
    recurse(recurse, 0, n - 1, target, 0);
    return best;
}

std::vector<RegularCospectralPair> find_regular_cospectral_pairs(int min_n, int max_n,
                                                                 const Rational& alpha,
                                                                 ScanContext& ctx) {
    std::vector<RegularCospectralPair> pairs;
    for (int n = min_n; n <= max_n; ++n) {
        for (int r = 0; r < n; ++r) {
            const std::vector<Graph>& cached = ctx.level(n <= 9 ? n : 9);
            const std::vector<Graph> regulars = enumerate_regular(n, r, ctx.jobs(), &cached);
            if (regulars.size() < 2) continue;
            const ModeSpec mode = ModeSpec::fixed(alpha);
            std::map<std::string, std::vector<size_t>> by_key;
            for (size_t i = 0; i < regulars.size(); ++i)
                by_key[exact_spectral_key(regulars[i], mode)].push_back(i);
            for (const auto& [key, members] : by_key) {
                for (size_t i = 0; i + 1 < members.size(); ++i)
                    for (size_t j = i + 1; j < members.size(); ++j)
                        pairs.push_back(
                            {regulars[members[i]], regulars[members[j]], n, r});
            }
        }
    }
    return pairs;
}

} // namespace alphaspec
