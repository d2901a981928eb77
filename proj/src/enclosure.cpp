#include "overasym/enclosure.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace overasym {

Enclosure::Enclosure(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ <= hi_)) throw std::logic_error("Enclosure: lo > hi");
}

Enclosure Enclosure::exact(long value, long precision_bits) {
    BigFloat lo(precision_bits), hi(precision_bits);
    mpfr_set_si(lo.raw(), value, MPFR_RNDD);
    mpfr_set_si(hi.raw(), value, MPFR_RNDU);
    return {lo, hi};
}

Enclosure Enclosure::exact(const mpz_class& value, long precision_bits) {
    BigFloat lo(precision_bits), hi(precision_bits);
    mpfr_set_z(lo.raw(), value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.raw(), value.get_mpz_t(), MPFR_RNDU);
    return {lo, hi};
}

Enclosure Enclosure::pi(long precision_bits) {
    BigFloat lo(precision_bits), hi(precision_bits);
    mpfr_const_pi(lo.raw(), MPFR_RNDD);
    mpfr_const_pi(hi.raw(), MPFR_RNDU);
    return {lo, hi};
}

Enclosure Enclosure::operator+(const Enclosure& rhs) const {
    long p = std::max(precision(), rhs.precision());
    BigFloat lo(p), hi(p);
    mpfr_add(lo.raw(), lo_.raw(), rhs.lo_.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), hi_.raw(), rhs.hi_.raw(), MPFR_RNDU);
    return {lo, hi};
}

Enclosure Enclosure::operator-(const Enclosure& rhs) const {
    long p = std::max(precision(), rhs.precision());
    BigFloat lo(p), hi(p);
    mpfr_sub(lo.raw(), lo_.raw(), rhs.hi_.raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), hi_.raw(), rhs.lo_.raw(), MPFR_RNDU);
    return {lo, hi};
}

Enclosure Enclosure::operator*(const Enclosure& rhs) const {
    long p = std::max(precision(), rhs.precision());
    // All four endpoint products, each rounded both ways.
    const BigFloat* as[2] = {&lo_, &hi_};
    const BigFloat* bs[2] = {&rhs.lo_, &rhs.hi_};
    BigFloat lo(p), hi(p), t(p);
    bool first = true;
    for (const BigFloat* a : as) {
        for (const BigFloat* b : bs) {
            mpfr_mul(t.raw(), a->raw(), b->raw(), MPFR_RNDD);
            if (first || t < lo) lo = t;
            mpfr_mul(t.raw(), a->raw(), b->raw(), MPFR_RNDU);
            if (first || t > hi) hi = t;
            first = false;
        }
    }
    return {lo, hi};
}

Enclosure Enclosure::operator/(const Enclosure& rhs) const {
    if (rhs.lo_.sign() <= 0 && rhs.hi_.sign() >= 0)
        throw std::domain_error("Enclosure: division by interval containing zero");
    long p = std::max(precision(), rhs.precision());
    const BigFloat* as[2] = {&lo_, &hi_};
    const BigFloat* bs[2] = {&rhs.lo_, &rhs.hi_};
    BigFloat lo(p), hi(p), t(p);
    bool first = true;
    for (const BigFloat* a : as) {
        for (const BigFloat* b : bs) {
            mpfr_div(t.raw(), a->raw(), b->raw(), MPFR_RNDD);
            if (first || t < lo) lo = t;
            mpfr_div(t.raw(), a->raw(), b->raw(), MPFR_RNDU);
            if (first || t > hi) hi = t;
            first = false;
        }
    }
    return {lo, hi};
}

Enclosure Enclosure::scaled(long factor) const {
    BigFloat lo(precision()), hi(precision());
    if (factor >= 0) {
        mpfr_mul_si(lo.raw(), lo_.raw(), factor, MPFR_RNDD);
        mpfr_mul_si(hi.raw(), hi_.raw(), factor, MPFR_RNDU);
    } else {
        mpfr_mul_si(lo.raw(), hi_.raw(), factor, MPFR_RNDD);
        mpfr_mul_si(hi.raw(), lo_.raw(), factor, MPFR_RNDU);
    }
    return {lo, hi};
}

Enclosure Enclosure::squared() const {
    return *this * *this;
}

Enclosure Enclosure::log() const {
    if (lo_.sign() <= 0) throw std::domain_error("Enclosure::log: requires lo > 0");
    BigFloat lo(precision()), hi(precision());
    mpfr_log(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_log(hi.raw(), hi_.raw(), MPFR_RNDU);
    return {lo, hi};
}

bool Enclosure::ceiling(mpz_class& out) const {
    mpz_class a = lo_.ceil_to_integer();
    mpz_class b = hi_.ceil_to_integer();
    if (a != b) return false;
    out = a;
    return true;
}

const Enclosure& zeta_three_halves() {
    static const Enclosure value = [] {
        const long prec = 256;
        const unsigned long cutoff = 100000;
        BigFloat lo(prec), hi(prec), t(prec), s(prec);
        mpfr_set_ui(lo.raw(), 0, MPFR_RNDN);
        mpfr_set_ui(hi.raw(), 0, MPFR_RNDN);
        for (unsigned long i = 1; i <= cutoff; ++i) {
            // 1/i^{3/2}, rounded down via an up-rounded denominator.
            mpfr_sqrt_ui(s.raw(), i, MPFR_RNDU);
            mpfr_mul_ui(s.raw(), s.raw(), i, MPFR_RNDU);
            mpfr_ui_div(t.raw(), 1, s.raw(), MPFR_RNDD);
            mpfr_add(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
            mpfr_sqrt_ui(s.raw(), i, MPFR_RNDD);
            mpfr_mul_ui(s.raw(), s.raw(), i, MPFR_RNDD);
            mpfr_ui_div(t.raw(), 1, s.raw(), MPFR_RNDU);
            mpfr_add(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
        }
        // Integral tail bracket: 2/sqrt(M+1) <= tail <= 2/sqrt(M).
        mpfr_sqrt_ui(s.raw(), cutoff + 1, MPFR_RNDU);
        mpfr_ui_div(t.raw(), 2, s.raw(), MPFR_RNDD);
        mpfr_add(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
        mpfr_sqrt_ui(s.raw(), cutoff, MPFR_RNDD);
        mpfr_ui_div(t.raw(), 2, s.raw(), MPFR_RNDU);
        mpfr_add(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
        return Enclosure(lo, hi);
    }();
    return value;
}

}  // namespace overasym
