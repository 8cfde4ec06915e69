// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned in the checks themselves.

#include "alphaspec/canonical.hpp"
#include "alphaspec/charpoly.hpp"
#include "alphaspec/classes.hpp"
#include "alphaspec/eigensolve.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/invariants.hpp"
#include "alphaspec/joins.hpp"
#include "alphaspec/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace alphaspec;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(const std::string& why) {
        pass = false;
        details.push_back(why);
    }
    void note(const std::string& what) { details.push_back(what); }
};

ScanContext ctx(2);

Graph rand_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution edge(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

// --- criterion 1: the alpha = 0 star/cycle+isolate pair -----------------------

Outcome criterion_saltire() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    const Graph star = star_graph(5);
    const Graph mate = disjoint_union(cycle_graph(4), empty_graph(1));

    if (charpoly_at(star, Rational(0)) != charpoly_at(mate, Rational(0)))
        out.fail("charpolys at alpha=0 differ");
    const std::vector<double> expected{2.0, 0.0, 0.0, 0.0, -2.0};
    for (const Graph& g : {star, mate}) {
        const auto spec = eigenvalues(g, 0.0).eigenvalues;
        for (size_t i = 0; i < expected.size(); ++i)
            if (std::abs(spec[i] - expected[i]) > 1e-10)
                out.fail("spectrum at alpha=0 misses {2,0,0,0,-2}");
    }
    if (charpoly_at(star, Rational(1, 4)) == charpoly_at(mate, Rational(1, 4)))
        out.fail("charpolys at alpha=1/4 unexpectedly agree");
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= 1.0) out.fail("runtime exceeded 1 s");
    return out;
}

// --- criterion 2: join formula versus direct determinant ----------------------

Outcome criterion_join_oracle() {
    Outcome out;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(1, 6);
    int checked = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const Graph g1 = rand_graph(size(rng), rng);
        const Graph g2 = rand_graph(size(rng), rng);
        if (join_charpoly(g1, g2) != charpoly_exact(join(g1, g2))) {
            out.fail("random pair mismatch: " + to_graph6(g1) + " v " + to_graph6(g2));
            break;
        }
        ++checked;
    }
    int family_checked = 0;
    for (int m = 1; m <= 9; ++m) {
        const Graph km = complete_graph(m);
        for (int n = 1; m + n <= 10; ++n) {
            std::vector<Graph> partners{path_graph(n), empty_graph(n)};
            if (n >= 3) partners.push_back(cycle_graph(n));
            if (n % 2 == 0 && n >= 2) partners.push_back(matching_plus_isolates(n / 2, 0));
            for (const Graph& partner : partners) {
                if (join_charpoly(km, partner) != charpoly_exact(join(km, partner)))
                    out.fail("family pairing mismatch: K_" + std::to_string(m) + " v " +
                             to_graph6(partner));
                ++family_checked;
            }
        }
    }
    out.note("random pairs: " + std::to_string(checked) +
             ", family pairings: " + std::to_string(family_checked));
    return out;
}

// --- criterion 3: regular-join balancing factor regression --------------------

Outcome criterion_corollary_regression() {
    Outcome out;
    const BivarPoly x = BivarPoly::var_x();
    const BivarPoly printed =
        join_charpoly_regular(1, 0, x, 1, 0, x, RegularJoinForm::AsPrinted);
    const BivarPoly corrected = join_charpoly_regular(1, 0, x, 1, 0, x);
    const UnivarPoly truth = charpoly_at(complete_graph(2), Rational(1, 2));
    if (printed.eval_alpha(Rational(1, 2)) == truth)
        out.fail("printed form agrees with the determinant at alpha=1/2; regression lost");
    if (corrected.eval_alpha(Rational(1, 2)) != truth)
        out.fail("corrected form disagrees with the determinant at alpha=1/2");

    const VerificationReport report = verify_corollary_regression(ctx);
    if (!report.pass) out.fail("corrected form failed on a tested regular pair");
    for (const auto& note : report.notes) out.note(note);
    return out;
}

// --- criterion 4: determined-by-spectrum sweeps through n = 8 -----------------

Outcome criterion_ds_sweeps() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Rational> alphas{Rational(1, 4), Rational(2, 5)};
    for (const std::string family :
         {"path", "complete", "cycle-unions", "cycle-unions-complement", "matching",
          "matching-complement", "path-complement"}) {
        const auto report = verify_ds(family, 8, alphas, ModeSpec::fixed(alphas[0]), ctx);
        if (!report.pass) {
            for (const auto& ce : report.counterexamples)
                out.fail(family + ": " + ce.left_g6 + " ~ " + ce.right_g6 +
                         " at alpha=" + ce.alpha);
        }
    }
    const std::vector<Rational> star_alphas{Rational(1, 4), Rational(2, 5), Rational(1)};
    const auto stars = verify_ds("star", 8, star_alphas, ModeSpec::fixed(star_alphas[0]), ctx);
    if (!stars.pass)
        for (const auto& ce : stars.counterexamples)
            out.fail("star: " + ce.left_g6 + " ~ " + ce.right_g6 + " at alpha=" + ce.alpha);

    const auto mates = find_mates(star_graph(5), ModeSpec::fixed(Rational(0)), ctx);
    const std::string expected = canonical_form(disjoint_union(cycle_graph(4), empty_graph(1)));
    if (mates.size() != 1 || mates[0] != expected)
        out.fail("K_{1,4} at alpha=0 should have exactly the mate C_4 u K_1");
    else
        out.note("K_{1,4} at alpha=0 has exactly one mate: " + mates[0]);

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream timing;
    timing.precision(1);
    timing << std::fixed << "sweep time " << elapsed << " s (budget 600 s)";
    out.note(timing.str());
    if (elapsed >= 600.0) out.fail("n=8 sweep exceeded 10 minutes");
    return out;
}

// --- criterion 5: joins with K_m at alpha in {3/5, 3/4} -----------------------

Outcome criterion_join_ds() {
    Outcome out;
    const std::vector<Rational> alphas{Rational(3, 5), Rational(3, 4)};
    for (const std::string family : {"wheel", "complete-split", "km-pn"}) {
        const auto report = verify_ds(family, 8, alphas, ModeSpec::fixed(alphas[0]), ctx);
        if (!report.pass)
            for (const auto& ce : report.counterexamples)
                out.fail(family + ": " + ce.left_g6 + " ~ " + ce.right_g6 +
                         " at alpha=" + ce.alpha);
    }
    // friendship graphs F_k, k <= 3 (7 vertices at most)
    const auto friendship = verify_ds("friendship", 7, alphas, ModeSpec::fixed(alphas[0]), ctx);
    if (!friendship.pass)
        for (const auto& ce : friendship.counterexamples)
            out.fail("friendship: " + ce.left_g6 + " ~ " + ce.right_g6 +
                     " at alpha=" + ce.alpha);
    return out;
}

// --- criterion 6: regular shift of the spectrum -------------------------------

Outcome criterion_regular_shift() {
    Outcome out;
    long checked = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : ctx.level(n)) {
            const int r = regular_degree(g);
            if (r < 0) continue;
            const auto base = eigenvalues(g, 0.0).eigenvalues;
            for (double alpha : {0.25, 0.75}) {
                const auto shifted = eigenvalues(g, alpha).eigenvalues;
                for (size_t i = 0; i < base.size(); ++i)
                    if (std::abs(shifted[i] - (alpha * r + (1 - alpha) * base[i])) > 1e-9)
                        out.fail("shift violated for " + to_graph6(g));
                ++checked;
            }
        }
    }
    out.note("regular graph/alpha combinations: " + std::to_string(checked));
    return out;
}

// --- criterion 7: dominating-vertex biconditional, certified exactly ----------

Outcome criterion_dominating_biconditional() {
    Outcome out;
    const auto report =
        verify_lemma("lem2.1", 2, 7, {Rational(3, 5), Rational(3, 4)}, 1e-9, ctx);
    if (!report.pass)
        for (const auto& ce : report.counterexamples)
            out.fail(ce.left_g6 + " alpha=" + ce.alpha + ": " + ce.detail);
    for (const auto& note : report.notes) out.note(note);
    return out;
}

// --- criterion 8: complement-of-cycle equality and path-complement margins ----

Outcome criterion_lemma_numerics() {
    Outcome out;
    const std::vector<Rational> alphas{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    const auto eq = verify_lemma("le3.1", 7, 12, alphas, 1e-9, ctx);
    if (!eq.pass)
        for (const auto& ce : eq.counterexamples)
            out.fail("le3.1 equality: " + ce.left_g6 + " vs " + ce.right_g6 + " " + ce.detail);
    else
        out.note("le3.1 equalities all within 1e-9");

    const auto ineq = verify_lemma("le3.2", 7, 12, alphas, 1e-9, ctx);
    if (!ineq.pass)
        for (const auto& ce : ineq.counterexamples)
            out.fail("le3.2 margin: alpha=" + ce.alpha + " " + ce.detail);
    for (const auto& note : ineq.notes) out.note(note);
    return out;
}

// --- criterion 9: joined-path claims -------------------------------------------

Outcome criterion_kmpn_claims() {
    Outcome out;
    const std::vector<Rational> alphas{Rational(3, 5), Rational(3, 4)};
    const auto c1 = verify_lemma("claim1", 4, 8, alphas, 1e-9, ctx);
    if (!c1.pass)
        for (const auto& ce : c1.counterexamples)
            out.fail("claim1: " + ce.left_g6 + " vs " + ce.right_g6 + " " + ce.detail);
    const auto c2 = verify_lemma("claim2", 4, 8, alphas, 1e-9, ctx);
    if (!c2.pass)
        for (const auto& ce : c2.counterexamples) out.fail("claim2: " + ce.detail);
    for (const auto& note : c2.notes) out.note(note);
    return out;
}

// --- criterion 10: the degree-sequence integer program ------------------------

Outcome criterion_integer_program() {
    Outcome out;
    for (int n = 4; n <= 10; ++n) {
        const auto optima = min_square_degree_sequences(n);
        DegreeSequence expected(static_cast<size_t>(n), n - 3);
        expected[0] = expected[1] = n - 2;
        if (optima.size() != 1 || optima[0] != expected)
            out.fail("n=" + std::to_string(n) + ": optimum not unique or unexpected");
    }
    out.note("unique optimum (n-2, n-2, n-3, ...) for 4 <= n <= 10");
    return out;
}

// --- criterion 11: forge soundness and the scanned regular pair ----------------

Outcome criterion_forge() {
    Outcome out;
    const Rational alpha(3, 4);

    // scan as stated: regular cospectral pairs within n <= 9
    const auto found = find_regular_cospectral_pairs(1, 9, alpha, ctx);
    if (found.empty()) {
        out.fail("no regular cospectral pair exists on n <= 9 (exhaustive scan over all "
                 "isomorphism classes); the stated bound cannot produce one");
    }

    // the actual smallest pairs live on 10 vertices; use them as the positive
    // control for the full certificate pipeline. The per-degree class counts
    // pin the degree-constrained enumerator against published values first.
    const long expected_counts[] = {1, 1, 5, 21, 60, 60, 21, 5, 1, 1};
    for (int r = 0; r <= 9; ++r) {
        const auto regs = enumerate_regular(10, r, ctx.jobs(), &ctx.level(9));
        if (static_cast<long>(regs.size()) != expected_counts[r])
            out.fail("10-vertex " + std::to_string(r) + "-regular count " +
                     std::to_string(regs.size()) + " != " + std::to_string(expected_counts[r]));
    }
    const auto pairs10 = find_regular_cospectral_pairs(10, 10, alpha, ctx);
    if (pairs10.empty()) {
        out.fail("no regular cospectral pair found at n = 10 either");
        return out;
    }
    std::ostringstream info;
    info << "smallest regular cospectral pairs found at n = 10 (" << pairs10.size()
         << " pairs); using " << to_graph6(pairs10.front().left) << " ~ "
         << to_graph6(pairs10.front().right) << " (" << pairs10.front().degree << "-regular)";
    out.note(info.str());

    const Graph& h1 = pairs10.front().left;
    const Graph& h2 = pairs10.front().right;
    int verified = 0;
    for (const Graph& g : {complete_graph(1), complete_graph(2), path_graph(3)}) {
        try {
            const auto cert = forge_cospectral_pair(g, h1, h2, SpectralMode::Fixed, alpha);
            if (charpoly_at(cert.left, alpha) != charpoly_at(cert.right, alpha)) {
                out.fail("certificate failed exact re-verification");
                continue;
            }
            if (canonical_form(cert.left) == canonical_form(cert.right)) {
                out.fail("joined graphs are isomorphic");
                continue;
            }
            ++verified;
        } catch (const std::exception& e) {
            out.fail(std::string("forge rejected a valid input: ") + e.what());
        }
    }
    out.note("fixed-mode certificates re-verified for " + std::to_string(verified) +
             "/3 choices of G");

    // symbolic-mode certificate for the smallest join, re-verified through the
    // direct bivariate determinant on both sides
    try {
        const auto cert =
            forge_cospectral_pair(complete_graph(1), h1, h2, SpectralMode::Symbolic, {}, 16);
        if (cert.shared_charpoly != charpoly_exact(cert.left, 16) ||
            cert.shared_charpoly != charpoly_exact(cert.right, 16))
            out.fail("symbolic certificate failed direct re-verification");
        else
            out.note("symbolic certificate re-verified against charpoly_exact on both sides");
    } catch (const std::exception& e) {
        out.fail(std::string("symbolic forge failed: ") + e.what());
    }

    // rejection paths stay sound
    try {
        forge_cospectral_pair(complete_graph(1), star_graph(5),
                              disjoint_union(cycle_graph(4), empty_graph(1)),
                              SpectralMode::Fixed, Rational(0));
        out.fail("forge accepted the unequal-coronal pair");
    } catch (const ForgeError&) {
    }
    return out;
}

// --- supplementary: regular DS transfer suite ----------------------------------

Outcome supplementary_transfer() {
    Outcome out;
    const auto report =
        verify_regular_ds_transfer(7, 3, {Rational(3, 5), Rational(3, 4)}, ctx);
    if (!report.pass)
        for (const auto& ce : report.counterexamples)
            out.fail(ce.left_g6 + " ~ " + ce.right_g6 + " at alpha=" + ce.alpha + ": " +
                     ce.detail);
    for (const auto& note : report.notes) out.note(note);
    return out;
}

struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    bool counts; // supplementary suites print but do not gate
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1 saltire pair (alpha=0 star mate, split at alpha=1/4)", criterion_saltire, true},
        {"2 join-formula oracle (200 random pairs + family pairings)", criterion_join_oracle,
         true},
        {"3 regular-join factor regression (printed vs corrected)",
         criterion_corollary_regression, true},
        {"4 DS sweeps through n=8 at alpha in {1/4, 2/5}", criterion_ds_sweeps, true},
        {"5 joins with K_m DS at alpha in {3/5, 3/4}", criterion_join_ds, true},
        {"6 regular shift of eigenvalues (n<=7, 1e-9)", criterion_regular_shift, true},
        {"7 dominating-vertex biconditional (n<=7, exact)",
         criterion_dominating_biconditional, true},
        {"8 largest-eigenvalue numerics (7<=n<=12, 1e-9)", criterion_lemma_numerics, true},
        {"9 joined-path claims (m<=2, n<=8, 1e-9)", criterion_kmpn_claims, true},
        {"10 degree-sequence integer program (4<=n<=10)", criterion_integer_program, true},
        {"11 forge soundness + scanned regular pair", criterion_forge, true},
        {"supplementary: regular DS transfer suite", supplementary_transfer, false},
    };

    bool all_pass = true;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.fail(std::string("unhandled exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL",
                    criterion.name.c_str(), elapsed);
        for (const auto& detail : outcome.details)
            std::printf("        %s\n", detail.c_str());
        if (criterion.counts) all_pass = all_pass && outcome.pass;
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria pass"
                                 : "ACCEPTANCE: at least one criterion failed");
    return all_pass ? 0 : 1;
}
