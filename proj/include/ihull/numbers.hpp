#ifndef IHULL_NUMBERS_HPP
#define IHULL_NUMBERS_HPP

#include <boost/multiprecision/gmp.hpp>
#include <mpfr.h>
#include <string>
#include <vector>

#include "ihull/errors.hpp"

namespace ihull {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/**
 * Builds a canonical rational num/den: reduced to lowest terms, denominator
 * positive. All Rat construction from separate parts must go through here;
 * the (long, long) constructor of the backend does not canonicalize.
 */
Rat make_rat(const Int& num, const Int& den);

/** Numerator of a canonical rational. */
Int rat_num(const Rat& q);

/** Denominator of a canonical rational (always positive). */
Int rat_den(const Rat& q);

/** Largest integer not exceeding q. */
Int floor_rat(const Rat& q);

/** Smallest integer not below q. */
Int ceil_rat(const Rat& q);

/** Nearest integer to q with ties rounded away from zero. */
Int round_half_away(const Rat& q);

/** Exact ⌊log2 x⌋ for x ≥ 1. */
long floor_log2(const Int& x);

/** Binomial coefficient with the convention C(n,k) = 0 when k > n or k < 0. */
Int binomial(const Int& n, const Int& k);

/**
 * High-precision binary floating-point value with an explicit precision in
 * bits, recorded per value. Wraps MPFR; every value is immutable after its
 * constructing operation. Binary operations carry the larger precision of
 * the two operands.
 */
class Real {
public:
    static constexpr unsigned default_precision = 128;

    explicit Real(unsigned prec = default_precision);
    Real(long v, unsigned prec = default_precision);
    Real(const Int& v, unsigned prec = default_precision);
    Real(const Rat& v, unsigned prec = default_precision);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    unsigned precision() const { return prec_; }
    bool is_finite() const;
    bool is_zero() const;
    int sign() const;

    Real operator-() const;
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    /** Integer power; exponent ≥ 0. */
    Real pow(unsigned long e) const;

    int compare(const Real& o) const;
    friend bool operator<(const Real& a, const Real& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return a.compare(b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return a.compare(b) == 0; }

    /** Smallest integer not below the value. */
    Int ceil_int() const;

    double to_double() const;

    /** Decimal rendering with the given significant digit count. */
    std::string str(int digits = 40) const;

    friend Real log2(const Real& x);
    friend Real ln(const Real& x);
    friend Real sqrt(const Real& x);

    /* Raw handle for conversion helpers. */
    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

private:
    mpfr_t v_;
    unsigned prec_;
};

/** Base-2 logarithm of a positive rational at the given precision. */
Real log2(const Rat& x, unsigned prec = Real::default_precision);

/** Natural logarithm of a positive rational at the given precision. */
Real ln(const Rat& x, unsigned prec = Real::default_precision);

/**
 * Safety-margin ceiling used for every bound comparison: the smallest
 * integer ≥ v + 2^−64. A count violates a bound value only if it exceeds
 * this integer.
 */
Int ceil_with_margin(const Real& v);

/** count ≤ ceil(value + 2^−64): the uniform bound-holds test. */
bool count_within(const Int& count, const Real& value);

/** Plain decimal string (no exponent) for serialization. */
std::string dec(const Int& v);

/** Decimal "p/q" (or "p" when integral) for serialization. */
std::string dec(const Rat& v);

} // namespace ihull

#endif
