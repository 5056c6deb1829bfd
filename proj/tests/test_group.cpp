#include <doctest.h>

#include <array>

#include "quasiq/error.hpp"
#include "quasiq/group.hpp"

using namespace quasiq;

namespace {

// Independent construction of S3 from two-line permutation composition,
// used as the oracle for the built-in table.
FiniteGroup s3_from_permutations() {
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                             {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> r{};
            for (int x = 0; x < 3; ++x) r[x] = perms[a][perms[b][x]];
            for (int i = 0; i < 6; ++i)
                if (perms[i] == r) table[a][b] = i;
        }
    return make_group({"e", "(12)", "(13)", "(23)", "(123)", "(132)"}, std::move(table));
}

}  // namespace

TEST_CASE("cyclic groups validate") {
    FiniteGroup z2 = cyclic_group(2);
    CHECK(z2.identity == 0);
    CHECK(z2.inv(1) == 1);
    FiniteGroup z4 = cyclic_group(4);
    CHECK(z4.inv(1) == 3);
    CHECK(z4.mul(2, 3) == 1);
}

TEST_CASE("closure violations are rejected") {
    // table[1][1] = 1 makes the second row constant.
    CHECK_THROWS_WITH_AS(make_group({"e", "g"}, {{0, 1}, {1, 1}}),
                         doctest::Contains("not a permutation"), error);
}

TEST_CASE("missing identity and associativity failures are named") {
    // Latin square without two-sided identity.
    CHECK_THROWS_WITH_AS(make_group({"a", "b", "c"}, {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}),
                         doctest::Contains("identity"), error);
}

TEST_CASE("s3 built-in matches permutation composition") {
    FiniteGroup builtin = symmetric_group_s3();
    FiniteGroup oracle = s3_from_permutations();
    CHECK(builtin.table == oracle.table);
}

TEST_CASE("conjugacy of abelian groups is discrete") {
    FiniteGroup z2 = cyclic_group(2);
    ConjugacyData cd = conjugacy(z2);
    CHECK(cd.num_classes() == 2);
    CHECK(cd.centralizer[0].size() == 2);
    CHECK(cd.centralizer[1].size() == 2);
    ConjugacyData c4 = conjugacy(cyclic_group(4));
    CHECK(c4.num_classes() == 4);
    for (int c = 0; c < 4; ++c) CHECK(c4.classes[c].size() == 1);
}

TEST_CASE("conjugacy of s3") {
    FiniteGroup s3 = symmetric_group_s3();
    ConjugacyData cd = conjugacy(s3);
    REQUIRE(cd.num_classes() == 3);
    CHECK(cd.classes[0].size() == 1);
    CHECK(cd.classes[1].size() == 3);
    CHECK(cd.classes[2].size() == 2);
    // centralizer of a transposition has order 2
    CHECK(cd.centralizer[1].size() == 2);
    // class equation
    size_t total = 0;
    for (const auto& cls : cd.classes) total += cls.size();
    CHECK(total == 6);
}

TEST_CASE("coset representatives conjugate onto the class") {
    for (const FiniteGroup& g : {cyclic_group(4), symmetric_group_s3()}) {
        ConjugacyData cd = conjugacy(g);
        for (int c = 0; c < cd.num_classes(); ++c) {
            CHECK(cd.coset_reps[c][0] == g.identity);
            CHECK(cd.coset_reps[c].size() == cd.classes[c].size());
            for (size_t j = 0; j < cd.classes[c].size(); ++j) {
                int e = cd.coset_reps[c][j];
                CHECK(g.mul(g.mul(e, cd.representative[c]), g.inv(e)) == cd.classes[c][j]);
            }
            // exactly one representative lands on each class member: sizes match
            // and the map is into the class, so it is a bijection.
        }
    }
}
