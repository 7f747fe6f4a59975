#include "doctest.h"
#include "skewpf/enumerate.hpp"
#include "skewpf/errors.hpp"
#include "skewpf/martin.hpp"
#include "test_util.hpp"

using namespace skewpf;

namespace {

IntPolynomial poly(std::vector<Int> coeffs) {
    IntPolynomial p;
    p.coeffs = std::move(coeffs);
    p.normalize();
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    const IntPolynomial x = poly({0, 1});
    const IntPolynomial p = x * x + poly({0, 2});  // x^2 + 2x
    CHECK(p.to_string() == "0 2 1");
    CHECK(p.eval(1) == 3);
    CHECK(p.eval(-2) == 0);
    CHECK(p.eval(-4) == 8);
    CHECK(poly({}).to_string() == "0");
    CHECK((poly({1, 2}) + poly({-1, -2})).is_zero());
}

TEST_CASE("circuit partition polynomial of named graphs") {
    CHECK(circuit_partition_polynomial(Multigraph::circles(1)) == poly({0, 1}));
    CHECK(circuit_partition_polynomial(Multigraph::cycle(3)) == poly({0, 1}));
    CHECK(circuit_partition_polynomial(Multigraph::bouquet(2)) == poly({0, 2, 1}));
    CHECK(circuit_partition_polynomial(Multigraph::bowtie()) == poly({0, 2, 1}));
    CHECK(circuit_partition_polynomial(Multigraph::path(2)).is_zero());
    CHECK(circuit_partition_polynomial(Multigraph{}) == poly({1}));
    // Circles shift the polynomial.
    CHECK(circuit_partition_polynomial(disjoint_union(Multigraph::cycle(3),
                                                      Multigraph::circles(2))) ==
          poly({0, 0, 0, 1}));
}

TEST_CASE("positive route evaluations") {
    CHECK(eval_positive(Multigraph::bowtie(), 1) == 3);
    CHECK(eval_positive(Multigraph::cycle(3), 2) == 2);
    CHECK(eval_positive(Multigraph::bouquet(2), 1) == 3);
    CHECK(eval_positive(Multigraph::path(2), 3) == 0);
    CHECK(eval_positive(Multigraph::circles(1), 5) == 5);
}

TEST_CASE("negative even route evaluations") {
    CHECK(eval_negative_even(Multigraph::cycle(3), 1) == -2);
    CHECK(eval_negative_even(Multigraph::bouquet(2), 1) == 0);
    CHECK(eval_negative_even(Multigraph::bowtie(), 2) == 8);
    CHECK(eval_negative_even(Multigraph::circles(1), 2) == -4);
    CHECK(eval_negative_even(Multigraph::path(2), 1) == 0);
}

TEST_CASE("three-way agreement on the bounded family") {
    for (const Multigraph& g : eulerian_family(5)) {
        const IntPolynomial j = circuit_partition_polynomial(g);
        for (int k = 1; k <= 3; ++k) CHECK(j.eval(k) == eval_positive(g, k));
        for (int ell = 1; ell <= 2; ++ell) CHECK(j.eval(-2 * ell) == eval_negative_even(g, ell));
    }
}

TEST_CASE("circuit polynomial is multiplicative") {
    const auto family = eulerian_family(3);
    for (const Multigraph& a : family) {
        for (const Multigraph& b : family) {
            CHECK(circuit_partition_polynomial(disjoint_union(a, b)) ==
                  circuit_partition_polynomial(a) * circuit_partition_polynomial(b));
        }
    }
}

TEST_CASE("coefficients are nonnegative with zero constant term") {
    for (const Multigraph& g : eulerian_family(5)) {
        const IntPolynomial j = circuit_partition_polynomial(g);
        for (const Int& c : j.coeffs) CHECK(c >= 0);
        if (!g.edges.empty() && !j.is_zero()) CHECK(j.coeffs[0] == 0);
    }
}

TEST_CASE("transition enumeration bound") {
    // Degree twelve vertex: 11!! = 10395 pairings.
    CHECK_THROWS_AS(circuit_partition_polynomial(Multigraph::bouquet(6), 10000), TooLargeError);
    CHECK_NOTHROW(circuit_partition_polynomial(Multigraph::bouquet(6), 11000));
}
