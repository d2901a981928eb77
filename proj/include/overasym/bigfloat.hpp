#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace overasym {

/// Arbitrary-precision binary floating-point value that carries its working
/// precision in bits. Arithmetic between two values is computed and stored at
/// the wider of the two precisions; narrowing is always explicit.
class BigFloat {
public:
    BigFloat() : BigFloat(128) {}
    explicit BigFloat(long precision_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat of(long value, long precision_bits);
    static BigFloat of(unsigned long value, long precision_bits);
    static BigFloat of(double value, long precision_bits);
    static BigFloat of(const mpz_class& value, long precision_bits);
    static BigFloat of(const mpq_class& value, long precision_bits);
    static BigFloat pi(long precision_bits);

    /// Parses the annotated form produced by to_string(), e.g. "3.1415e0@128b".
    static BigFloat from_string(const std::string& text);

    /// Decimal scientific notation with enough digits for exact round-trip at
    /// the same precision, followed by "@<bits>b".
    std::string to_string() const;

    long precision() const { return mpfr_get_prec(v_); }
    /// Copy of this value rounded to the given precision.
    BigFloat at_precision(long precision_bits) const;

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Nearest integer (ties away from zero, as mpfr_round).
    mpz_class round_to_integer() const;
    mpz_class ceil_to_integer() const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, long b);
    friend BigFloat operator/(const BigFloat& a, long b);
    friend BigFloat operator/(long a, const BigFloat& b);

    friend bool operator==(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b);
    friend bool operator<=(const BigFloat& a, const BigFloat& b);
    friend bool operator>(const BigFloat& a, const BigFloat& b);
    friend bool operator>=(const BigFloat& a, const BigFloat& b);

    /// True when both values compare equal and carry the same precision.
    bool identical_to(const BigFloat& other) const;

    // Raw handle for code that drives mpfr directly (directed rounding etc.).
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
/// x^e for integer e (negative allowed).
BigFloat pow_si(const BigFloat& x, long e);

}  // namespace overasym
