#ifndef SKEWPF_SKEW_TENSOR_HPP
#define SKEWPF_SKEW_TENSOR_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "skewpf/rational.hpp"

namespace skewpf {

/*
 * Element of the exterior algebra over the dual of a 2*ell dimensional
 * space, stored as rational coefficients on strictly increasing index
 * subsets of {1,...,2*ell}. Evaluation on the sorted word of a subset S
 * returns coeffs[S] exactly; other words pick up the sign of the sorting
 * permutation, and words with a repeated letter evaluate to zero.
 */
struct SkewTensor {
    int ell = 1;
    std::map<std::vector<int>, Rat> coeffs;

    int dimension() const { return 2 * ell; }
    Rat coeff(const std::vector<int>& sorted_subset) const;
};

// (sign, index) of the symplectic dual of basis vector i: (-1, i+ell) for
// i <= ell and (+1, i-ell) otherwise. Throws IndexOutOfRangeError.
std::pair<int, int> dual_vector(int i, int ell);

Rat eval_skew(const SkewTensor& h, std::span<const int> word);

// Skew tensor whose skew-partition function evaluates the circuit
// partition polynomial at -2*ell: coefficient (-1)^|T| on each subset of
// the form T union (T+ell), adjusted by the sorting sign of the
// interleaved word (t1, t1+ell, t2, t2+ell, ...).
SkewTensor build_martin_model(int ell);

/*
 * Symmetric edge-coloring model: one rational value per sorted color
 * multiset, tabulated up to max_arity. Absent keys of admissible arity
 * mean zero.
 */
struct SymModel {
    int color_count = 1;
    int max_arity = 0;
    std::map<std::vector<int>, Rat> values;

    Rat value(const std::vector<int>& sorted_multiset) const;
};

// Value prod_i (m_i - 1)!! on a multiset with color multiplicities m_i,
// with (-1)!! = 1 and even!! = 0. Tabulated for all arities <= max_arity.
SymModel build_double_factorial_model(int k, int max_arity = 16);

// Every multiset up to max_arity gets the same value.
SymModel build_constant_model(int k, const Rat& value, int max_arity = 12);

// Sparse element of the 2m-fold tensor power of the 2*ell dimensional
// space: words (1-based letters) to rational coefficients.
struct SparseTensor {
    int ell = 1;
    int order = 0;
    std::map<std::vector<int>, Rat> terms;

    bool is_zero() const;
    void add_term(const std::vector<int>& word, const Rat& c);
    SparseTensor& operator+=(const SparseTensor& other);
    SparseTensor& operator*=(const Rat& scalar);
    bool operator==(const SparseTensor& other) const;
};

// Image of a directed perfect matching on [2m] under the classical
// invariant-theory map: sum over colorings constant on each arc of the
// word tensor with e at tails and the symplectic dual at heads.
SparseTensor tau_matching(const std::vector<std::pair<int, int>>& arcs, int ell);

// Bilinear form induced on word tensors by the standard symplectic form
// (pairs e_a with e_{a+ell} up to sign). Throws OrderMismatchError.
Rat bilinear_form(const SparseTensor& x, const SparseTensor& y);

}  // namespace skewpf

#endif
