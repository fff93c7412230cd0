#include "dcm/rational.hpp"

#include <stdexcept>

namespace dcm {

Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Rational rat_pow(const Rational& base, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;  // canonical since base is
}

Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace dcm
