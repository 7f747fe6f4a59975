#ifndef SKEWPF_MARTIN_HPP
#define SKEWPF_MARTIN_HPP

#include <string>
#include <vector>

#include "skewpf/multigraph.hpp"
#include "skewpf/partition_fn.hpp"
#include "skewpf/rational.hpp"

namespace skewpf {

// Dense integer polynomial, index = power of x, no trailing zeros.
struct IntPolynomial {
    std::vector<Int> coeffs;

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Int eval(const Int& x) const;
    std::string to_string() const;  // coefficients low to high, "0" if zero

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    bool operator==(const IntPolynomial& other) const { return coeffs == other.coeffs; }
};

// Generating polynomial of Eulerian graph states: enumerate, at every
// vertex, a perfect pairing of its darts; each combined choice decomposes
// the edges into closed walks and contributes x^walks. Zero polynomial for
// non-Eulerian graphs; every circle multiplies by x.
IntPolynomial circuit_partition_polynomial(const Multigraph& g,
                                           unsigned long long bound = kDefaultBound);

// Value at a positive integer k via ordered partitions of the edge set into
// k Eulerian subsets weighted by double factorials; circles multiply by k.
Int eval_positive(const Multigraph& g, int k, unsigned long long bound = kDefaultBound);

// Value at -2*ell via ordered partitions of the edge set into ell
// 2-regular subgraphs (empty parts allowed); circles multiply by -2*ell.
Int eval_negative_even(const Multigraph& g, int ell, unsigned long long bound = kDefaultBound);

}  // namespace skewpf

#endif
