#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alphaspec/canonical.hpp"
#include "alphaspec/charpoly.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/joins.hpp"
#include "oracles.hpp"

using namespace alphaspec;

namespace {
const BivarPoly x = BivarPoly::var_x();
const BivarPoly a = BivarPoly::var_a();
BivarPoly c(long v) { return BivarPoly::constant(Int(v)); }
} // namespace

TEST_CASE("coronal closed forms") {
    CHECK(coronal(complete_graph(1)).value.equals(RatFunc(c(1), x)));
    CHECK(coronal(complete_graph(2)).value.equals(RatFunc(c(2), x - c(1))));
    CHECK(coronal(cycle_graph(5)).value.equals(RatFunc(c(5), x - c(2))));
    for (const int n : {3, 4, 6}) {
        const Graph g = cycle_graph(n);
        CHECK(coronal(g).value.equals(RatFunc(c(n), x - c(2))));
    }
}

TEST_CASE("coronal denominator divides the charpoly") {
    std::mt19937_64 rng(73);
    for (int rep = 0; rep < 15; ++rep) {
        const Graph g = oracles::random_graph(2 + rep % 5, 0.5, rng);
        const Coronal cor = coronal(g);
        CHECK_NOTHROW(exact_div(charpoly_exact(g), cor.value.den()));
    }
}

TEST_CASE("coronal matches the exact inverse oracle") {
    std::mt19937_64 rng(79);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + rep % 5;
        const Graph g = oracles::random_graph(n, 0.5, rng);
        const Rational alpha(rep % 4, 4);
        const Rational x0(n + 1); // beyond the spectral radius, never a pole

        auto m = a_alpha_matrix(g, alpha).entries;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = (i == j ? x0 : Rational(0)) - m[i][j];
        const auto inv = oracles::invert(m);
        Rational total(0);
        for (const auto& row : inv)
            for (const auto& e : row) total += e;

        CHECK(coronal(g).value.eval(x0, alpha) == total);
    }
}

TEST_CASE("join charpoly equals the direct determinant") {
    CHECK(join_charpoly(complete_graph(1), complete_graph(1)) ==
          charpoly_exact(complete_graph(2)));
    CHECK(join_charpoly(complete_graph(1), cycle_graph(4)) ==
          charpoly_exact(wheel_graph(5)));

    std::mt19937_64 rng(83);
    for (int rep = 0; rep < 40; ++rep) {
        const Graph g1 = oracles::random_graph(1 + rep % 5, 0.5, rng);
        const Graph g2 = oracles::random_graph(1 + (rep / 5) % 5, 0.5, rng);
        CHECK(join_charpoly(g1, g2) == charpoly_exact(join(g1, g2)));
    }

    // named families joined pairwise
    std::vector<Graph> members{complete_graph(3), path_graph(4), cycle_graph(5),
                               empty_graph(3), matching_plus_isolates(2, 0)};
    for (const Graph& g1 : members)
        for (const Graph& g2 : members)
            CHECK(join_charpoly(g1, g2) == charpoly_exact(join(g1, g2)));
}

TEST_CASE("join formula shift structure") {
    // The joined charpoly is P1(x-a*n2)*P2(x-a*n1) minus a (1-a)^2-weighted
    // coronal term, so the shifted factors appear verbatim in the leading
    // product and alone survive at a = 1.
    const BivarPoly one_minus_a = c(1) - a;
    for (int n1 : {1, 2, 3}) {
        for (int n2 : {1, 2, 4}) {
            const Graph g1 = path_graph(n1);
            const Graph g2 = empty_graph(n2);
            const BivarPoly joined = join_charpoly(g1, g2);
            const BivarPoly p1s = charpoly_exact(g1).shift_x(-BivarPoly::monomial(0, 1, n2));
            const BivarPoly p2s = charpoly_exact(g2).shift_x(-BivarPoly::monomial(0, 1, n1));
            CHECK_NOTHROW(exact_div(p1s * p2s - joined, one_minus_a * one_minus_a));
            CHECK(joined.eval_alpha(Rational(1)) == (p1s * p2s).eval_alpha(Rational(1)));
        }
    }
}

TEST_CASE("regular join specialization") {
    // K_1 v K_1: the corrected factor is exactly the K_2 charpoly
    const BivarPoly k2 = join_charpoly_regular(1, 0, x, 1, 0, x);
    CHECK(k2 == (x - a) * (x - a) - (c(1) - a) * (c(1) - a));
    CHECK(k2 == charpoly_exact(complete_graph(2)));

    CHECK(join_charpoly_regular(1, 0, x, 4, 2, charpoly_exact(cycle_graph(4))) ==
          charpoly_exact(wheel_graph(5)));

    // all regular pairs with n_i <= 7 and joined order within the exact bound
    std::vector<Graph> regulars;
    for (int n = 1; n <= 7; ++n)
        for (int r = 0; r < n; ++r)
            for (const Graph& g : enumerate_regular(n, r)) regulars.push_back(g);
    for (const Graph& g1 : regulars)
        for (const Graph& g2 : regulars) {
            if (g1.order() + g2.order() > 12) continue;
            const BivarPoly lhs =
                join_charpoly_regular(g1.order(), regular_degree(g1), charpoly_exact(g1),
                                      g2.order(), regular_degree(g2), charpoly_exact(g2));
            CHECK(lhs == join_charpoly(g1, g2));
        }

    // at alpha = 0 the printed and corrected forms coincide
    const BivarPoly printed = join_charpoly_regular(3, 2, charpoly_exact(cycle_graph(3)), 2, 1,
                                                    charpoly_exact(complete_graph(2)),
                                                    RegularJoinForm::AsPrinted);
    const BivarPoly corrected = join_charpoly_regular(3, 2, charpoly_exact(cycle_graph(3)), 2,
                                                      1, charpoly_exact(complete_graph(2)));
    CHECK(printed.eval_alpha(Rational(0)) == corrected.eval_alpha(Rational(0)));
    CHECK(printed != corrected);

    // irregular input lacks the root the division needs
    CHECK_THROWS_AS(
        join_charpoly_regular(3, 1, charpoly_exact(path_graph(3)), 1, 0, x),
        std::domain_error);
}

TEST_CASE("forge accepts the smallest regular cospectral pair") {
    // 4-regular cospectral mates on 10 vertices (found by the scan suite and
    // cross-checked against an independent eigensolver)
    const Graph h1 = parse_graph6("I@L[uN_wG");
    const Graph h2 = parse_graph6("I@P{tbIwO");
    REQUIRE(regular_degree(h1) == 4);
    REQUIRE(regular_degree(h2) == 4);
    REQUIRE(charpoly_at(h1, Rational(1, 4)) == charpoly_at(h2, Rational(1, 4)));

    const auto cert = forge_cospectral_pair(cycle_graph(3), h1, h2, SpectralMode::Fixed,
                                            Rational(3, 4));
    CHECK(cert.left.order() == 13);
    CHECK(charpoly_at(cert.left, Rational(3, 4)) == cert.shared_charpoly_at);
    CHECK(charpoly_at(cert.right, Rational(3, 4)) == cert.shared_charpoly_at);
    CHECK(canonical_form(cert.left) != canonical_form(cert.right));
    CHECK(cert.coronal_left == cert.coronal_right); // both 10/(x - 4)

    // both-factors-vary construction: h1 v h1 against h2 v h2
    const auto both = forge_cospectral_pair(h1, h2, h1, h2, SpectralMode::Fixed, Rational(3, 5));
    CHECK(charpoly_at(both.left, Rational(3, 5)) == charpoly_at(both.right, Rational(3, 5)));
    CHECK(canonical_form(both.left) != canonical_form(both.right));
}

TEST_CASE("forge rejects bad inputs") {
    // the alpha=0 cospectral pair star/cycle+isolate has differing coronals
    const Graph star = star_graph(5);
    const Graph c4k1 = disjoint_union(cycle_graph(4), empty_graph(1));
    CHECK_THROWS_AS(forge_cospectral_pair(complete_graph(1), star, c4k1, SpectralMode::Fixed,
                                          Rational(0)),
                    ForgeError);

    // identical factors give isomorphic joins
    CHECK_THROWS_WITH_AS(forge_cospectral_pair(complete_graph(2), cycle_graph(4),
                                               cycle_graph(4), SpectralMode::Symbolic),
                         doctest::Contains("isomorphic"), ForgeError);

    // non-cospectral pair
    CHECK_THROWS_AS(forge_cospectral_pair(complete_graph(1), path_graph(4), cycle_graph(4),
                                          SpectralMode::Symbolic),
                    ForgeError);

    // fixed mode requires alpha
    CHECK_THROWS_AS(forge_cospectral_pair(complete_graph(1), star, c4k1, SpectralMode::Fixed),
                    std::invalid_argument);
}
