#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alphaspec/canonical.hpp"
#include "alphaspec/classes.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/invariants.hpp"
#include "alphaspec/verify.hpp"
#include "oracles.hpp"

#include <filesystem>
#include <map>
#include <set>

using namespace alphaspec;

TEST_CASE("canonical form respects relabeling") {
    std::mt19937_64 rng(89);
    for (int rep = 0; rep < 80; ++rep) {
        const int n = 2 + rep % 6;
        const Graph g = oracles::random_graph(n, 0.5, rng);
        const Graph h = oracles::random_permuted(g, rng);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(are_isomorphic(g, h));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    CHECK(canonical_form(star_graph(4)) != canonical_form(path_graph(4)));
    const auto level4 = enumerate_graphs(4);
    std::set<std::string> forms;
    for (const Graph& g : level4) forms.insert(canonical_form(g));
    CHECK(forms.size() == 11);

    // agreement with the factorial search oracle, including same-degree-
    // sequence pairs where refinement alone cannot decide
    std::mt19937_64 rng(97);
    int positives = 0, negatives = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 2 + rep % 5;
        const Graph a = oracles::random_graph(n, 0.5, rng);
        const Graph b = rep % 3 == 0 ? oracles::random_permuted(a, rng)
                                     : oracles::random_graph(n, 0.5, rng);
        const bool expected = oracles::isomorphic_by_search(a, b);
        CHECK(are_isomorphic(a, b) == expected);
        (expected ? positives : negatives) += 1;
    }
    CHECK(positives > 30);
    CHECK(negatives > 30);
}

TEST_CASE("canonical labeling handles highly symmetric graphs") {
    for (const Graph& g : {complete_graph(8), cycle_graph(9), empty_graph(10),
                           complete_split_graph(3, 5), star_graph(9)}) {
        const auto result = canonicalize(g);
        CHECK(are_isomorphic(result.graph, g));
        CHECK(canonical_form(result.graph) == canonical_form(g));
    }
    // Petersen graph: vertex transitive, 120 automorphisms
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    std::mt19937_64 rng(101);
    const Graph shuffled = oracles::random_permuted(petersen, rng);
    CHECK(canonical_form(petersen) == canonical_form(shuffled));
}

TEST_CASE("enumeration counts match the published sequence") {
    for (int n = 1; n <= 7; ++n)
        CHECK(static_cast<long>(enumerate_graphs(n).size()) == kGraphCounts[n - 1]);
    CHECK_THROWS_AS(enumerate_graphs(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs(11), std::invalid_argument);
}

TEST_CASE("enumeration is independent of the worker count") {
    const auto serial = enumerate_graphs(6, 1);
    const auto parallel = enumerate_graphs(6, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("catalog ingestion round-trips the enumerator") {
    namespace fs = std::filesystem;
    const auto level5 = enumerate_graphs(5);
    const fs::path path = fs::temp_directory_path() / "alphaspec_catalog.g6";
    write_graph6_file(path.string(), level5);
    const auto back = canonicalize_catalog(read_graph6_file(path.string()));
    REQUIRE(back.size() == level5.size());
    for (size_t i = 0; i < back.size(); ++i) CHECK(back[i] == level5[i]);
    fs::remove(path);
}

TEST_CASE("regular enumeration") {
    CHECK(enumerate_regular(5, 2).size() == 1);  // C_5 only
    CHECK(enumerate_regular(6, 2).size() == 2);  // C_6, 2C_3
    CHECK(enumerate_regular(7, 3).empty());      // parity
    CHECK(enumerate_regular(6, 3).size() == 2);  // K_{3,3}, prism
    CHECK(enumerate_regular(8, 3).size() == 6);  // 5 connected + K_4 u K_4
}

TEST_CASE("fingerprints") {
    const ModeSpec fixed = ModeSpec::fixed(Rational(1, 4));
    const Graph g = path_graph(5);
    CHECK(exact_spectral_key(g, fixed) == exact_spectral_key(g, fixed));
    CHECK(exact_spectral_key(g, fixed) != exact_spectral_key(cycle_graph(5), fixed));
    CHECK(float_fingerprint(g, fixed).key == float_fingerprint(g, fixed).key);
    CHECK(float_fingerprint(g, fixed).mode == "fixed-a");
    CHECK(float_fingerprint(g, ModeSpec::symbolic()).mode == "symbolic-a");
    CHECK(hash128_hex("").size() == 32);
    CHECK(hash128_hex("a") != hash128_hex("b"));
}

TEST_CASE("cospectral classes at small orders") {
    ScanContext ctx;

    SUBCASE("adjacency scan on 5 vertices finds the star class") {
        const auto classes = cospectral_classes(ctx.level(5), ModeSpec::fixed(Rational(0)), ctx);
        const std::string star = canonical_form(star_graph(5));
        const std::string mate = canonical_form(disjoint_union(cycle_graph(4), empty_graph(1)));
        bool found = false;
        for (const auto& cls : classes)
            if (cls.members.size() == 2)
                found = found || (cls.members[0] == std::min(star, mate) &&
                                  cls.members[1] == std::max(star, mate));
        CHECK(found);
    }

    SUBCASE("star is a singleton at alpha = 3/4") {
        CHECK(find_mates(star_graph(5), ModeSpec::fixed(Rational(3, 4)), ctx).empty());
    }

    SUBCASE("symbolic scan through n = 4 is all singletons") {
        for (int n = 1; n <= 4; ++n)
            for (const auto& cls : cospectral_classes(ctx.level(n), ModeSpec::symbolic(), ctx))
                CHECK(cls.members.size() == 1);
    }
}

TEST_CASE("find_mates examples") {
    ScanContext ctx;
    const auto mates0 = find_mates(star_graph(5), ModeSpec::fixed(Rational(0)), ctx);
    REQUIRE(mates0.size() == 1);
    CHECK(mates0[0] == canonical_form(disjoint_union(cycle_graph(4), empty_graph(1))));

    CHECK(find_mates(complete_graph(6), ModeSpec::fixed(Rational(0)), ctx).empty());
    CHECK(find_mates(complete_graph(6), ModeSpec::fixed(Rational(2, 5)), ctx).empty());
    CHECK(find_mates(path_graph(7), ModeSpec::fixed(Rational(1, 4)), ctx).empty());
}

TEST_CASE("pre-pass never splits an exact class") {
    ScanContext ctx;
    for (int n = 4; n <= 7; ++n) {
        for (const auto& alpha : {Rational(0), Rational(1, 4)}) {
            const ModeSpec mode = ModeSpec::fixed(alpha);
            const auto& graphs = ctx.level(n);
            // exact-only partition
            std::map<std::string, std::set<std::string>> exact;
            for (const Graph& g : graphs)
                exact[exact_spectral_key(g, mode)].insert(to_graph6(g));
            // two-stage partition
            std::map<std::string, std::set<std::string>> staged;
            for (const auto& cls : cospectral_classes(graphs, mode, ctx))
                staged[cls.exact_key] = {cls.members.begin(), cls.members.end()};
            CHECK(exact.size() == staged.size());
            for (const auto& [key, members] : exact) CHECK(staged.at(key) == members);
        }
    }
}

TEST_CASE("class members share their invariant reports") {
    ScanContext ctx;
    const Rational alpha(1, 4);
    for (const auto& cls :
         cospectral_classes(ctx.level(6), ModeSpec::fixed(alpha), ctx, false)) {
        if (cls.members.size() < 2) continue;
        std::optional<InvariantReport> first;
        for (const auto& record : cls.members) {
            const auto inv =
                invariants_from_charpoly(charpoly_at(parse_graph6(record), alpha), alpha);
            if (!first) { first = inv; continue; }
            CHECK(inv.n == first->n);
            CHECK(inv.m == first->m);
            CHECK(inv.sum_sq_degrees == first->sum_sq_degrees);
            CHECK(inv.sum_pair_products == first->sum_pair_products);
            CHECK(inv.regular_r == first->regular_r);
        }
    }
}

TEST_CASE("symbolic cospectrality refines every fixed-alpha partition") {
    ScanContext ctx;
    const auto& graphs = ctx.level(5);
    const auto symbolic = cospectral_classes(graphs, ModeSpec::symbolic(), ctx, false);
    for (const auto& alpha : {Rational(0), Rational(1, 3), Rational(7, 10)}) {
        const ModeSpec mode = ModeSpec::fixed(alpha);
        std::map<std::string, std::string> fixed_key;
        for (const Graph& g : graphs) fixed_key[to_graph6(g)] = exact_spectral_key(g, mode);
        for (const auto& cls : symbolic) {
            for (size_t i = 1; i < cls.members.size(); ++i)
                CHECK(fixed_key.at(cls.members[i]) == fixed_key.at(cls.members[0]));
        }
    }
}

TEST_CASE("integer program for the complement-of-path degrees") {
    const auto n4 = min_square_degree_sequences(4);
    REQUIRE(n4.size() == 1);
    CHECK(n4[0] == DegreeSequence{2, 2, 1, 1});

    const auto n5 = min_square_degree_sequences(5);
    REQUIRE(n5.size() == 1);
    CHECK(n5[0] == DegreeSequence{3, 3, 2, 2, 2});

    for (int n = 4; n <= 8; ++n) {
        const auto opt = min_square_degree_sequences(n);
        REQUIRE(opt.size() == 1);
        long cost = 0;
        for (int d : opt[0]) cost += static_cast<long>(d) * d;
        CHECK(cost == 2L * (n - 2) * (n - 2) + static_cast<long>(n - 2) * (n - 3) * (n - 3));
    }
    CHECK_THROWS_AS(min_square_degree_sequences(3), std::invalid_argument);
}

TEST_CASE("ds suite catches the adjacency star mate and passes elsewhere") {
    ScanContext ctx;
    const auto fail = verify_ds("star", 5, {Rational(0)}, ModeSpec::fixed(Rational(0)), ctx);
    CHECK_FALSE(fail.pass);
    REQUIRE(fail.counterexamples.size() == 1);
    CHECK(fail.counterexamples[0].right_g6 ==
          canonical_form(disjoint_union(cycle_graph(4), empty_graph(1))));

    const auto pass = verify_ds("star", 6, {Rational(1, 4)}, ModeSpec::fixed(Rational(1, 4)), ctx);
    CHECK(pass.pass);
    const auto paths = verify_ds("path", 6, {Rational(1, 4), Rational(2, 5)},
                                 ModeSpec::fixed(Rational(1, 4)), ctx);
    CHECK(paths.pass);
}

TEST_CASE("lemma suites on small ranges") {
    ScanContext ctx;
    const std::vector<Rational> mid{Rational(1, 2)};
    const auto eq = verify_lemma("le3.1", 7, 9, mid, 1e-9, ctx);
    CHECK(eq.pass);
    const auto ineq = verify_lemma("le3.2", 7, 9, mid, 1e-9, ctx);
    CHECK(ineq.pass);

    const std::vector<Rational> high{Rational(3, 4)};
    CHECK(verify_lemma("claim1", 4, 7, high, 1e-9, ctx).pass);
    CHECK(verify_lemma("claim2", 4, 7, high, 1e-9, ctx).pass);
    CHECK(verify_lemma("lem2.1", 2, 5, high, 1e-9, ctx).pass);

    CHECK_THROWS_AS(verify_lemma("lem2.1", 2, 5, {Rational(1, 4)}, 1e-9, ctx),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma("nope", 2, 5, high, 1e-9, ctx), std::invalid_argument);

    // an impossible tolerance must fail and carry machine-checkable
    // counterexamples
    const auto forced = verify_lemma("le3.2", 7, 8, mid, 10.0, ctx);
    CHECK_FALSE(forced.pass);
    CHECK_FALSE(forced.counterexamples.empty());
    CHECK_FALSE(forced.counterexamples.front().left_g6.empty());
}

TEST_CASE("regular transfer suite on a small range") {
    ScanContext ctx;
    const auto report = verify_regular_ds_transfer(5, 2, {Rational(3, 4)}, ctx);
    CHECK(report.pass);
}

TEST_CASE("family instance generators") {
    CHECK(family_instances("cycle-unions", 6).size() == 2);  // C_6 and C_3 u C_3
    CHECK(family_instances("cycle-unions", 9).size() == 4);
    CHECK(family_instances("matching", 5).size() == 2);      // k = 1, 2
    CHECK(family_instances("km-pn", 4).size() == 3);
    CHECK(family_instances("friendship", 6).empty());
    CHECK(family_instances("friendship", 7).size() == 1);
    CHECK_THROWS_AS(family_instances("nope", 4), std::invalid_argument);
}
