#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "quasiq/algebra.hpp"
#include "quasiq/error.hpp"
#include "quasiq/presets.hpp"

using namespace quasiq;
using quasiq::testing::random_gauge;

TEST_CASE("generated dimensions of the one-arrow-pair structures") {
    for (const char* name : {"paper-5.3", "paper-5.5"}) {
        auto d = presets::algebra_data(name);
        GradedSubspace sub = generated_subalgebra(d, 6);
        CHECK(sub.dims == std::vector<int>{2, 2, 2, 2, 0, 0, 0});
        CHECK(sub.total_dim() == 8);
    }
}

TEST_CASE("generated dimensions of the mixed two-arrow structure") {
    auto d = presets::algebra_data("example-5.4");
    GradedSubspace sub = generated_subalgebra(d, 7);
    CHECK(sub.dims == std::vector<int>{2, 4, 6, 8, 6, 4, 2, 0});
    CHECK(sub.total_dim() == 32);
}

TEST_CASE("the equal-sign two-arrow structures keep growing") {
    for (const char* name : {"example-5.5", "example-5.6"}) {
        auto d = presets::algebra_data(name);
        GradedSubspace sub = generated_subalgebra(d, 6);
        for (int deg = 0; deg <= 6; ++deg) CHECK(sub.dims[deg] > 0);
    }
}

TEST_CASE("determinism and re-reduction stability") {
    auto d = presets::algebra_data("paper-5.3");
    GradedSubspace a = generated_subalgebra(d, 5);
    GradedSubspace b = generated_subalgebra(d, 5);
    CHECK(a.dims == b.dims);
    for (int deg = 0; deg <= 5; ++deg) {
        REQUIRE(a.rows[deg].rank() == b.rows[deg].rank());
        EchelonBasis re(a.rows[deg].width());
        for (const auto& row : a.rows[deg].rows()) re.insert(row);
        CHECK(re.rows() == a.rows[deg].rows());
    }
}

TEST_CASE("generated dims are invariant under permuting the parallel generators") {
    // Swapping the two summands of the mixed collection permutes the
    // parallel arrows; the generated dimensions cannot see the relabeling.
    Cochain3 phi = cyclic_cocycle(2, 1);
    ConjugacyData conj = conjugacy(phi.group);
    auto simples = simples_of_twisted_cyclic(phi.group, conj.centralizer[1],
                                             induced_2cocycle(phi, conj, 1));
    ProjRep zero;
    zero.cocycle = induced_2cocycle(phi, conj, 0);
    zero.dim = 0;
    zero.matrices.assign(2, Matrix(0, 0));
    auto swapped =
        make_collection(phi.group, phi, {zero, direct_sum(simples[1], simples[0])});
    auto d_swapped = algebra_from_bimodule(build_from_collection(swapped));
    CHECK(generated_subalgebra(d_swapped, 7).dims ==
          generated_subalgebra(presets::algebra_data("example-5.4"), 7).dims);
}

TEST_CASE("degree-four path powers stay one-dimensional with factorial coefficients") {
    auto d = presets::algebra_data("paper-5.3");
    Path p = parse_path(d.quiver, "YXYX");
    PathVector pv = path_vector(p), acc = pv;
    Cyclotomic factorial(1);
    for (int s = 1; s <= 3; ++s) {
        if (s > 1) {
            acc = shuffle_product(d, acc, pv);
            factorial *= Cyclotomic(s);
        }
        Path repeated{p.source, {}};
        for (int t = 0; t < s; ++t)
            repeated.arrows.insert(repeated.arrows.end(), p.arrows.begin(), p.arrows.end());
        REQUIRE(acc.size() == 1);
        CHECK(acc.begin()->first == repeated);
        CHECK(acc.begin()->second == factorial);
    }
}

TEST_CASE("basis report catches dependent candidates") {
    auto d = presets::algebra_data("paper-5.3");
    GradedSubspace sub = generated_subalgebra(d, 4);
    std::vector<std::pair<std::string, PathVector>> cands;
    PathVector x = path_vector(parse_path(d.quiver, "X"));
    cands.emplace_back("first", x);
    cands.emplace_back("duplicate", pv_scaled(x, Cyclotomic(2)));
    BasisReport rep = basis_report(d, sub, &cands);
    CHECK(!rep.candidate_independent);
    CHECK(rep.dependency_witness.find("duplicate") != std::string::npos);
}

TEST_CASE("basis report verifies the short path basis of the one-arrow structure") {
    auto d = presets::algebra_data("paper-5.3");
    GradedSubspace sub = generated_subalgebra(d, 6);
    std::vector<std::pair<std::string, PathVector>> cands;
    for (int len = 0; len <= 3; ++len)
        for (const Path& p : paths_of_length(d.quiver, len))
            cands.emplace_back(path_str(d.quiver, p), path_vector(p));
    REQUIRE(cands.size() == 8);
    BasisReport rep = basis_report(d, sub, &cands);
    CHECK(rep.candidate_independent);
    CHECK(rep.candidate_spanning);
}

TEST_CASE("finiteness evidence") {
    SUBCASE("loop quiver grows factorially") {
        auto rep = finiteness_evidence(presets::algebra_data("z2-loop"), 5);
        REQUIRE(!rep.obstructions.empty());
        CHECK(rep.obstructions[0].generator == "U");
        CHECK(rep.obstructions[0].all_factorial());
        CHECK(rep.verdict == "infinite-dimensional evidence");
    }
    SUBCASE("one-arrow-pair structure is finite through the bound") {
        auto rep = finiteness_evidence(presets::algebra_data("paper-5.3"), 6);
        CHECK(rep.first_zero_degree.has_value());
        CHECK(*rep.first_zero_degree == 4);
        CHECK(rep.verdict == "finite through degree 6");
    }
    SUBCASE("equal-sign tables grow along the alternating path") {
        auto rep = finiteness_evidence(presets::algebra_data("example-5.5"), 6);
        bool found = false;
        for (const auto& o : rep.obstructions)
            if (o.generator == "Y2X1" && o.all_factorial()) found = true;
        CHECK(found);
        CHECK(rep.verdict == "infinite-dimensional evidence");
        auto rep66 = finiteness_evidence(presets::algebra_data("example-5.6"), 6);
        CHECK(rep66.verdict == "infinite-dimensional evidence");
    }
}

TEST_CASE("gauge equivalence search") {
    MajidBimodule m53 = presets::algebra_data("paper-5.3").bimodule;
    MajidBimodule m55 = presets::algebra_data("paper-5.5").bimodule;
    SUBCASE("the two one-arrow structures are not gauge equivalent over mu_8") {
        CHECK(!gauge_equivalence_search(m53, m55, 8).has_value());
        CHECK(!gauge_equivalence_search(m55, m53, 8).has_value());
    }
    SUBCASE("identity and planted cases are found") {
        auto self = gauge_equivalence_search(m53, m53, 8);
        REQUIRE(self.has_value());
        std::mt19937 rng(2718);
        Cochain2 planted = random_gauge(m53.group, rng);
        MajidBimodule target = gauge_transform_bimodule(m53, planted);
        auto found = gauge_equivalence_search(m53, target, 8);
        REQUIRE(found.has_value());
        CHECK(isomorphic(gauge_transform_bimodule(m53, *found), target));
    }
    SUBCASE("oversized search spaces are refused") {
        FiniteGroup s3 = symmetric_group_s3();
        Cochain3 phi = trivial_cochain3(s3);
        ConjugacyData conj = conjugacy(s3);
        std::vector<ProjRep> reps;
        for (int c = 0; c < conj.num_classes(); ++c) {
            ProjRep r;
            r.cocycle = induced_2cocycle(phi, conj, c);
            r.dim = 0;
            r.matrices.assign(r.cocycle.elements.size(), Matrix(0, 0));
            reps.push_back(std::move(r));
        }
        MajidBimodule empty = build_from_collection(make_collection(s3, phi, std::move(reps)));
        CHECK_THROWS_WITH_AS(gauge_equivalence_search(empty, empty, 8),
                             doctest::Contains("search bound exceeded"), error);
    }
}

TEST_CASE("hopf detection") {
    SUBCASE("nontrivial-class data is genuinely quasi") {
        for (const char* name :
             {"paper-5.3", "paper-5.5", "example-5.4", "example-5.5", "example-5.6"}) {
            auto rep = hopf_detection(presets::algebra_data(name));
            CHECK(rep.verdict == "genuinely quasi (nontrivial class)");
            CHECK(!rep.is_coboundary);
        }
    }
    SUBCASE("trivial-cocycle data is recognized with the all-ones witness") {
        auto rep = hopf_detection(presets::algebra_data("z2-hopf"));
        CHECK(rep.is_coboundary);
        CHECK(rep.hopf_gauge_valid);
        REQUIRE(rep.witness.has_value());
    }
    SUBCASE("planted coboundary data is gauged back to a Hopf structure") {
        std::mt19937 rng(5151);
        FiniteGroup z3 = cyclic_group(3);
        Cochain2 planted = random_gauge(z3, rng);
        Cochain3 phi = coboundary_of(planted);
        ConjugacyData conj = conjugacy(z3);
        std::vector<ProjRep> reps;
        for (int c = 0; c < conj.num_classes(); ++c) {
            auto simples = simples_of_twisted_cyclic(z3, conj.centralizer[c],
                                                     induced_2cocycle(phi, conj, c));
            reps.push_back(simples[0]);
        }
        MajidBimodule m = build_from_collection(make_collection(z3, phi, std::move(reps)));
        auto rep = hopf_detection(algebra_from_bimodule(m));
        CHECK(rep.is_coboundary);
        CHECK(rep.hopf_gauge_valid);
    }
}
