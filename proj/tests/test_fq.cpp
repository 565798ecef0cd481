#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "encone/fq.hpp"
#include "encone/verify.hpp"

using namespace encone;
using namespace encone::fq;

namespace {

FqMatrix jordan_blocks(int q, const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) n += s;
    FqMatrix x(q, n);
    int off = 0;
    for (int s : sizes) {
        for (int j = 2; j <= s; ++j) x.at(off + j - 2, off + j - 1) = 1;
        off += s;
    }
    return x;
}

}  // namespace

TEST_CASE("jordan types") {
    CHECK(jordan_type(FqMatrix(2, 3)) == Partition{1, 1, 1});
    CHECK(jordan_type(jordan_blocks(2, {4})) == Partition{4});
    CHECK(jordan_type(jordan_blocks(2, {2, 1})) == Partition{2, 1});
    FqMatrix id(3, 2);
    id.at(0, 0) = id.at(1, 1) = 1;
    CHECK_THROWS_AS(jordan_type(id), std::invalid_argument);
}

TEST_CASE("centralizer dimensions") {
    CHECK(centralizer_basis(FqMatrix(2, 2)).size() == 4);
    CHECK(centralizer_basis(FqMatrix(3, 3)).size() == 9);
    CHECK(centralizer_basis(jordan_blocks(2, {3})).size() == 3);
    CHECK(centralizer_basis(jordan_blocks(3, {2, 1})).size() == 5);
    // dim E^x = n + 2 n(lambda) across all Jordan forms for n <= 4
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            FqMatrix x = jordan_blocks(2, lam.parts());
            CHECK(static_cast<int>(centralizer_basis(x).size()) == n + 2 * lam.n_stat());
        }
}

TEST_CASE("exv spaces") {
    FqMatrix x = jordan_blocks(2, {2, 1});
    Vec zero(3, 0);
    CHECK(exv_space(zero, x).dim() == 0);
    // a representative of type (mu;nu) has dim E^x v = |mu|
    for (int n = 1; n <= 4; ++n)
        for (const auto& bp : enumerate_bipartitions(n)) {
            FqPair p = orbit_representative(2, bp);
            CHECK(exv_space(p.v, p.x).dim() == bp.mu().size());
        }
}

TEST_CASE("orbit classification examples") {
    FqPair origin{Vec(3, 0), FqMatrix(2, 3)};
    CHECK(classify_orbit(origin) == Bipartition(Partition{}, Partition{1, 1, 1}));

    FqMatrix reg = jordan_blocks(2, {3});
    Vec v{0, 0, 1};  // x^2 v != 0
    CHECK(classify_orbit({v, reg}) == Bipartition(Partition{3}, Partition{}));

    FqMatrix two = jordan_blocks(2, {2, 2});
    Vec w{1, 0, 1, 0};  // e1 + e3
    CHECK(classify_orbit({w, two}) == Bipartition(Partition{1, 1}, Partition{1, 1}));
}

TEST_CASE("normal bases") {
    // v = 0: type (0; lambda)
    for (const auto& lam : enumerate_partitions(3)) {
        FqMatrix x = jordan_blocks(2, lam.parts());
        NormalBasis nb = normal_basis({Vec(3, 0), x});
        CHECK(nb.type == Bipartition(Partition{}, lam));
    }
    // the shifted-array worked example: mu = (3,2,2), nu = (2,1,1,1,1)
    Bipartition big(Partition{3, 2, 2}, Partition{2, 1, 1, 1, 1});
    FqPair p = orbit_representative(2, big);
    NormalBasis nb = normal_basis(p);
    CHECK(nb.type == big);
    // v reconstructs as v_{1,3} + v_{2,2} + v_{3,2}
    Vec sum(13, 0);
    for (int i = 0; i < 3; ++i) {
        int mu_i = big.mu().part(i + 1);
        for (int t = 0; t < 13; ++t) sum[t] = (sum[t] + nb.blocks[i][mu_i - 1][t]) % 2;
    }
    CHECK(sum == p.v);
}

TEST_CASE("two-way classification and flags") {
    for (int n = 0; n <= 3; ++n)
        for (int q : {2, 3}) {
            auto rep = check_two_way_classification(n, q);
            for (const auto& m : rep.mismatches) MESSAGE(m);
            CHECK(rep.ok);
        }
    for (int n = 0; n <= 3; ++n) {
        auto rep = check_flag_and_quotient(n, 2);
        for (const auto& m : rep.mismatches) MESSAGE(m);
        CHECK(rep.ok);
    }
}

TEST_CASE("flag of the zero pair") {
    FqPair p{Vec(3, 0), FqMatrix(2, 3)};
    auto flag = flag_w(p);  // type (0;(1,1,1)): single jump of size 3
    REQUIRE(flag.size() == 2);
    CHECK(flag[0].dim() == 0);
    CHECK(flag[1].dim() == 3);
    FqPair reg = orbit_representative(2, Bipartition(Partition{3}, Partition{}));
    auto full = flag_w(reg);
    REQUIRE(full.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(full[k].dim() == k);
}

TEST_CASE("orbit counts") {
    auto c13 = count_orbits(1, 3);
    CHECK(c13[Bipartition(Partition{}, Partition{1})] == 1);
    CHECK(c13[Bipartition(Partition{1}, Partition{})] == 2);
    auto c22 = count_orbits(2, 2);
    long long total = 0;
    for (const auto& [label, cnt] : c22) total += cnt;
    CHECK(total == 16);
    CHECK_THROWS_AS(count_orbits(4, 2), BudgetError);           // needs the flag
    CHECK_THROWS_AS(count_orbits(4, 3, true), BudgetError);     // over budget even flagged
    CHECK_THROWS_AS(enumerate_nilpotents(2, 4), std::invalid_argument);  // q not prime
}

TEST_CASE("fiber counts against the worked example") {
    Bipartition orbit(Partition{1, 1, 1}, Partition{1});
    FqPair p = orbit_representative(2, orbit);
    CHECK(count_fiber(p, Bipartition(Partition{3}, Partition{1})) == 31);
    CHECK(count_fiber(p, Bipartition(Partition{2, 1}, Partition{1})) == 9);
    CHECK(count_fiber(p, orbit) == 1);
    for (int n = 0; n <= 2; ++n) {
        auto rep = check_fiber_counts(n, 2);
        for (const auto& m : rep.mismatches) MESSAGE(m);
        CHECK(rep.ok);
    }
}

TEST_CASE("subspace counts") {
    FqPair zero{Vec(2, 0), FqMatrix(2, 2)};
    CHECK(count_hall(zero, Partition{1}, Partition{1}) == 3);
    FqPair nonzero{Vec{1, 0}, FqMatrix(2, 2)};
    CHECK(count_hall(nonzero, Partition{1}, Partition{1}) == 1);
    for (int n = 0; n <= 2; ++n)
        for (int q : {2, 3}) {
            auto rep = check_hall_counts(n, q);
            for (const auto& m : rep.mismatches) MESSAGE(m);
            CHECK(rep.ok);
        }
    // n = 4 is cheap too, and covers Hall polynomials with a negative
    // coefficient such as g_{(2);(2)}^{(0;(3,1))} = t - 1.
    for (int q : {2, 3}) {
        auto rep = check_hall_counts(4, q);
        for (const auto& m : rep.mismatches) MESSAGE(m);
        CHECK(rep.ok);
    }
    const KostkaTable& t4 = kostka_table(4);
    CHECK(t4.hall(Partition{2}, Partition{2}, Bipartition(Partition{}, Partition{3, 1})) ==
          IntPolynomial::t() - IntPolynomial(1));
}

TEST_CASE("closure membership") {
    Bipartition target(Partition{2, 1}, Partition{1});
    FqPair a = orbit_representative(2, Bipartition(Partition{1, 1}, Partition{2}));
    FqPair b = orbit_representative(2, Bipartition(Partition{2, 2}, Partition{}));
    CHECK(closure_member(a, target));
    CHECK(closure_member(b, target));
    FqPair c = orbit_representative(2, target);
    CHECK(closure_member(c, target));
    for (int n = 0; n <= 2; ++n) {
        auto rep = check_closure_vs_order(n, 2);
        for (const auto& m : rep.mismatches) MESSAGE(m);
        CHECK(rep.ok);
    }
}

TEST_CASE("point-count identity at small n") {
    for (int n = 0; n <= 2; ++n)
        for (int q : {2, 3}) {
            auto rep = check_pointcount_identity(n, q);
            for (const auto& m : rep.mismatches) MESSAGE(m);
            CHECK(rep.ok);
        }
}
