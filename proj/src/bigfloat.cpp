#include "overasym/bigfloat.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace overasym {

namespace {

long clamp_precision(long bits) {
    if (bits < MPFR_PREC_MIN) return MPFR_PREC_MIN;
    return bits;
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
    mpfr_init2(v_, clamp_precision(precision_bits));
    mpfr_set_nan(v_);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::of(long value, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_si(r.v_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(unsigned long value, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_ui(r.v_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(double value, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const mpz_class& value, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const mpq_class& value, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_q(r.v_, value.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(const std::string& text) {
    auto at = text.rfind('@');
    if (at == std::string::npos || text.size() < at + 3 || text.back() != 'b')
        throw std::invalid_argument("BigFloat::from_string: missing @<bits>b suffix: " + text);
    long bits = std::strtol(text.substr(at + 1, text.size() - at - 2).c_str(), nullptr, 10);
    if (bits < MPFR_PREC_MIN) throw std::invalid_argument("BigFloat::from_string: bad precision in: " + text);
    BigFloat r(bits);
    if (mpfr_set_str(r.v_, text.substr(0, at).c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat::from_string: unparsable value: " + text);
    return r;
}

std::string BigFloat::to_string() const {
    const std::string suffix = "@" + std::to_string(precision()) + "b";
    if (mpfr_nan_p(v_)) return "nan" + suffix;
    if (mpfr_inf_p(v_)) return (mpfr_sgn(v_) < 0 ? std::string("-inf") : std::string("inf")) + suffix;
    if (mpfr_zero_p(v_)) return "0" + suffix;
    mpfr_exp_t exp10 = 0;
    // n_digits = 0 asks mpfr for enough digits to re-read the value exactly.
    char* digits = mpfr_get_str(nullptr, &exp10, 10, 0, v_, MPFR_RNDN);
    std::string d(digits);
    mpfr_free_str(digits);
    std::string sign;
    if (!d.empty() && d[0] == '-') {
        sign = "-";
        d.erase(0, 1);
    }
    // mpfr's exponent convention: value = 0.digits * 10^exp10.
    std::string mantissa = d.substr(0, 1) + "." + (d.size() > 1 ? d.substr(1) : "0");
    return sign + mantissa + "e" + std::to_string(static_cast<long>(exp10) - 1) + suffix;
}

BigFloat BigFloat::at_precision(long precision_bits) const {
    BigFloat r(precision_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

mpz_class BigFloat::round_to_integer() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

mpz_class BigFloat::ceil_to_integer() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
    return z;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {
long join_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
BigFloat& BigFloat::operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
BigFloat& BigFloat::operator*=(const BigFloat& rhs) { return *this = *this * rhs; }
BigFloat& BigFloat::operator/=(const BigFloat& rhs) { return *this = *this / rhs; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigFloat operator/(long a, const BigFloat& b) {
    BigFloat r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

bool BigFloat::identical_to(const BigFloat& other) const {
    if (precision() != other.precision()) return false;
    if (mpfr_nan_p(v_) && mpfr_nan_p(other.v_)) return true;
    return mpfr_equal_p(v_, other.v_) != 0;
}

#define OVERASYM_UNARY(name, mpfr_fn)              \
    BigFloat name(const BigFloat& x) {             \
        BigFloat r(x.precision());                 \
        mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);      \
        return r;                                  \
    }

OVERASYM_UNARY(abs, mpfr_abs)
OVERASYM_UNARY(sqrt, mpfr_sqrt)
OVERASYM_UNARY(exp, mpfr_exp)
OVERASYM_UNARY(log, mpfr_log)
OVERASYM_UNARY(sinh, mpfr_sinh)
OVERASYM_UNARY(cosh, mpfr_cosh)
OVERASYM_UNARY(cos, mpfr_cos)
OVERASYM_UNARY(sin, mpfr_sin)

#undef OVERASYM_UNARY

BigFloat pow_si(const BigFloat& x, long e) {
    BigFloat r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

}  // namespace overasym
