#ifndef SKEWPF_RATIONAL_HPP
#define SKEWPF_RATIONAL_HPP

#include <string>

#include <gmpxx.h>

namespace skewpf {

// All arithmetic in this project is exact. Int/Rat are the only numeric
// types that ever hold a computed quantity; there is no floating point.
using Int = mpz_class;
using Rat = mpq_class;

// "p/q", or bare "p" when the denominator is one.
std::string to_string(const Rat& r);

// Accepts "p", "-p", "p/q"; throws ParseError on anything else.
Rat parse_rational(const std::string& text);

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, unsigned long exp);
Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// Double factorial with the conventions used throughout:
// (-1)!! = 1 and m!! = 0 when m is even (including 0).
Int double_factorial(long m);

// x(x-1)...(x-m+1)
Int falling_factorial(const Int& x, int m);

}  // namespace skewpf

#endif
