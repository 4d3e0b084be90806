#include "lm/format.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <vector>

namespace lm {

namespace {

constexpr mpfr_prec_t kPrec = 256;  // ~77 decimal digits of working precision

std::string render(mpfr_t x, int digits) {
    char buf[160];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, x);
    return buf;
}

}  // namespace

std::string log_decimal(const Int& n, int digits) {
    if (n <= 0) throw std::domain_error("log_decimal: need a positive integer");
    mpfr_t x;
    mpfr_init2(x, kPrec);
    mpfr_set_z(x, n.get_mpz_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    std::string out = render(x, digits);
    mpfr_clear(x);
    return out;
}

std::string half_log_decimal(const Int& n, int digits) {
    if (n <= 0) throw std::domain_error("half_log_decimal: need a positive integer");
    mpfr_t x;
    mpfr_init2(x, kPrec);
    mpfr_set_z(x, n.get_mpz_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    mpfr_div_ui(x, x, 2, MPFR_RNDN);
    std::string out = render(x, digits);
    mpfr_clear(x);
    return out;
}

std::string quarter_log_sum_decimal(const Int& u, const Int& v, int digits) {
    if (u <= 0 || v <= 0) throw std::domain_error("quarter_log_sum_decimal: need positive integers");
    mpfr_t x, y;
    mpfr_init2(x, kPrec);
    mpfr_init2(y, kPrec);
    mpfr_set_z(x, u.get_mpz_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    mpfr_set_z(y, v.get_mpz_t(), MPFR_RNDN);
    mpfr_log(y, y, MPFR_RNDN);
    mpfr_add(x, x, y, MPFR_RNDN);
    mpfr_div_ui(x, x, 4, MPFR_RNDN);
    std::string out = render(x, digits);
    mpfr_clear(x);
    mpfr_clear(y);
    return out;
}

std::string sixth_log_plus_decimal(const Int& n, unsigned long k, int digits) {
    if (n <= 0) throw std::domain_error("sixth_log_plus_decimal: need a positive integer");
    mpfr_t x;
    mpfr_init2(x, kPrec);
    mpfr_set_z(x, n.get_mpz_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    mpfr_add_ui(x, x, k, MPFR_RNDN);
    mpfr_div_ui(x, x, 6, MPFR_RNDN);
    std::string out = render(x, digits);
    mpfr_clear(x);
    return out;
}

std::string ratio_decimal(const Rational& q, int digits) {
    mpfr_t x;
    mpfr_init2(x, kPrec);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    std::string out = render(x, digits);
    mpfr_clear(x);
    return out;
}

}  // namespace lm
