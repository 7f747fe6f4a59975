#include "skewpf/rational.hpp"

#include <cctype>

#include "skewpf/errors.hpp"

namespace skewpf {

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
            throw ParseError("bad rational '" + text + "'");
        }
    }
    Rat r;
    if (r.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat out(int_pow(base.get_num(), exp), int_pow(base.get_den(), exp));
    out.canonicalize();
    return out;
}

Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Int double_factorial(long m) {
    if (m == -1) return 1;
    if (m < -1) throw PreconditionError("double factorial of integer below -1");
    if (m % 2 == 0) return 0;
    Int out = 1;
    for (long v = m; v >= 1; v -= 2) out *= v;
    return out;
}

Int falling_factorial(const Int& x, int m) {
    Int out = 1;
    for (int i = 0; i < m; ++i) out *= x - i;
    return out;
}

}  // namespace skewpf
