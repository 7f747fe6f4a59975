#include <numeric>
#include <set>

#include "doctest.h"
#include "skewpf/errors.hpp"
#include "skewpf/matchdir.hpp"
#include "test_util.hpp"

using namespace skewpf;

TEST_CASE("directed matching enumeration counts") {
    CHECK(all_directed_matchings(1).size() == 2);
    CHECK(all_directed_matchings(2).size() == 12);
    CHECK(all_directed_matchings(3).size() == 120);
    std::set<DirectedMatching> dedup;
    for (const auto& mm : all_directed_matchings(2)) dedup.insert(mm);
    CHECK(dedup.size() == 12);
}

TEST_CASE("matching normalization ignores list order") {
    const DirectedMatching a({{3, 4}, {1, 2}});
    const DirectedMatching b({{1, 2}, {3, 4}});
    CHECK(a == b);
    CHECK(matching_sign(a) == 1);
    CHECK_THROWS_AS(DirectedMatching({{1, 2}, {2, 3}}), PreconditionError);
}

TEST_CASE("union statistics on one-arc matchings") {
    const DirectedMatching forward({{1, 2}});
    const DirectedMatching backward({{2, 1}});
    CHECK(union_stats(forward, forward) == std::pair<int, int>{1, 1});
    CHECK(union_stats(forward, backward) == std::pair<int, int>{1, 0});
    CHECK(union_stats(backward, forward) == std::pair<int, int>{1, 0});
    CHECK(union_stats(backward, backward) == std::pair<int, int>{1, 1});
}

TEST_CASE("union statistics on two-arc matchings") {
    const DirectedMatching m0 = DirectedMatching::canonical(2);
    const DirectedMatching crossed({{1, 3}, {2, 4}});
    CHECK(union_stats(m0, crossed).first == 1);
    CHECK(union_stats(m0, m0).first == 2);
    CHECK_THROWS_AS(union_stats(m0, DirectedMatching::canonical(1)), SizeMismatchError);
}

TEST_CASE("matching sign examples and well-definedness") {
    CHECK(matching_sign(DirectedMatching::canonical(3)) == 1);
    CHECK(matching_sign(DirectedMatching({{2, 1}, {3, 4}})) == -1);
    CHECK(matching_sign(DirectedMatching({{3, 4}, {1, 2}})) == 1);

    // Every permutation carrying M onto the canonical matching arcwise has
    // the same sign.
    for (int m = 1; m <= 3; ++m) {
        const DirectedMatching target = DirectedMatching::canonical(m);
        for (const auto& mm : all_directed_matchings(m)) {
            std::set<int> signs;
            std::vector<int> perm(2 * m);
            std::iota(perm.begin(), perm.end(), 1);
            do {
                if (permute_matching(mm, perm) == target) {
                    signs.insert(skewpf::test::inversion_sign(perm));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            REQUIRE(signs.size() == 1);
            CHECK(*signs.begin() == matching_sign(mm));
        }
    }
}

TEST_CASE("A and B matrices for one arc") {
    const auto [a, b] = build_A_B(1, 1);
    REQUIRE(a.rows == 2);
    CHECK(a.at(0, 0) == Rat(-2));
    CHECK(a.at(0, 1) == Rat(-2));
    CHECK(a.at(1, 0) == Rat(-2));
    CHECK(a.at(1, 1) == Rat(-2));
    CHECK(b.at(0, 0) == Rat(2));
    CHECK(b.at(0, 1) == Rat(-2));
    CHECK(b.at(1, 0) == Rat(-2));
    CHECK(b.at(1, 1) == Rat(2));
}

TEST_CASE("A and B diagonals and symmetry") {
    for (int ell = 1; ell <= 2; ++ell) {
        for (int m = 1; m <= 2; ++m) {
            const auto [a, b] = build_A_B(ell, m);
            CHECK(a.is_symmetric());
            CHECK(b.is_symmetric());
            const Rat a_diag = rat_pow(Rat(-2 * ell), m);
            const Rat b_diag = rat_pow(Rat(2 * ell), m);
            for (int i = 0; i < a.rows; ++i) {
                CHECK(a.at(i, i) == a_diag);
                CHECK(b.at(i, i) == b_diag);
            }
        }
    }
}

TEST_CASE("B equals the sign-conjugated A") {
    for (int m = 1; m <= 2; ++m) {
        const auto matchings = all_directed_matchings(m);
        const auto [a, b] = build_A_B(1, m);
        for (size_t i = 0; i < matchings.size(); ++i) {
            for (size_t j = 0; j < matchings.size(); ++j) {
                const int s = matching_sign(matchings[i]) * matching_sign(matchings[j]);
                const Rat expected = Rat((m % 2 == 0 ? 1 : -1) * s) *
                                     a.at(static_cast<int>(i), static_cast<int>(j));
                CHECK(b.at(static_cast<int>(i), static_cast<int>(j)) == expected);
            }
        }
    }
}

TEST_CASE("sign identity for small m") {
    CHECK(verify_sign_identity(1));
    CHECK(verify_sign_identity(2));
    CHECK(verify_sign_identity(3));
}

TEST_CASE("kernel generator annihilation") {
    CHECK(v0_annihilation(1, 2));
    CHECK_THROWS_AS(v0_annihilation(2, 2), PreconditionError);
}

TEST_CASE("tau Gram products match B") {
    CHECK(gram_check(1, 1));
    CHECK(gram_check(2, 1));
    CHECK(gram_check(1, 2));
}
