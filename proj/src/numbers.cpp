#include "ihull/numbers.hpp"

#include <gmp.h>

namespace ihull {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw DomainError("make_rat: zero denominator");
    // the (mpz, mpz) constructor canonicalizes: reduces and moves the sign
    // to the numerator
    return Rat(num, den);
}

Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

Int floor_rat(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int r;
    mpz_fdiv_q(r.backend().data(), n.backend().data(), d.backend().data());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int r;
    mpz_cdiv_q(r.backend().data(), n.backend().data(), d.backend().data());
    return r;
}

Int round_half_away(const Rat& q) {
    // ⌈q⌋ = sign(q) · ⌊|q| + 1/2⌋ keeps |q − ⌈q⌋| ≤ 1/2 with ties away from 0
    if (q >= 0)
        return floor_rat(q + make_rat(1, 2));
    return -floor_rat(-q + make_rat(1, 2));
}

long floor_log2(const Int& x) {
    if (x < 1)
        throw DomainError("floor_log2: argument must be >= 1");
    // sizeinbase(x, 2) is exact: the bit length of x
    return static_cast<long>(mpz_sizeinbase(x.backend().data(), 2)) - 1;
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Int kk = k;
    if (n - k < kk)
        kk = n - k;
    Int result = 1;
    for (Int i = 1; i <= kk; ++i) {
        result *= (n - kk + i);
        result /= i; // divides exactly at every step
    }
    return result;
}

Real::Real(unsigned prec) : prec_(prec) {
    mpfr_init2(v_, prec_);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, unsigned prec) : prec_(prec) {
    mpfr_init2(v_, prec_);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Int& v, unsigned prec) : prec_(prec) {
    mpfr_init2(v_, prec_);
    mpfr_set_z(v_, v.backend().data(), MPFR_RNDN);
}

Real::Real(const Rat& v, unsigned prec) : prec_(prec) {
    mpfr_init2(v_, prec_);
    mpfr_set_q(v_, v.backend().data(), MPFR_RNDN);
}

Real::Real(const Real& o) : prec_(o.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

bool Real::is_finite() const { return mpfr_number_p(v_) != 0; }
bool Real::is_zero() const { return mpfr_zero_p(v_) != 0; }
int Real::sign() const { return mpfr_sgn(v_); }

Real Real::operator-() const {
    Real r(prec_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {
unsigned joint_prec(const Real& a, const Real& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
}
} // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(joint_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(joint_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(joint_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(joint_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real Real::pow(unsigned long e) const {
    Real r(prec_);
    mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
    return r;
}

int Real::compare(const Real& o) const { return mpfr_cmp(v_, o.v_); }

Int Real::ceil_int() const {
    mpfr_t c;
    mpfr_init2(c, prec_);
    mpfr_ceil(c, v_);
    Int r;
    mpfr_get_z(r.backend().data(), c, MPFR_RNDN);
    mpfr_clear(c);
    return r;
}

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Real::str(int digits) const {
    char* s = nullptr;
    // %.*Rg renders shortest-faithful decimal at the requested digit count
    if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0)
        return "nan";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real log2(const Real& x) {
    if (x.sign() <= 0)
        throw DomainError("log2: argument must be positive");
    Real r(x.precision());
    mpfr_log2(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real ln(const Real& x) {
    if (x.sign() <= 0)
        throw DomainError("ln: argument must be positive");
    Real r(x.precision());
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    if (x.sign() < 0)
        throw DomainError("sqrt: argument must be nonnegative");
    Real r(x.precision());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real log2(const Rat& x, unsigned prec) {
    if (x <= 0)
        throw DomainError("log2: argument must be positive");
    return log2(Real(x, prec));
}

Real ln(const Rat& x, unsigned prec) {
    if (x <= 0)
        throw DomainError("ln: argument must be positive");
    return ln(Real(x, prec));
}

Int ceil_with_margin(const Real& v) {
    unsigned p = v.precision() < 96 ? 96u : v.precision();
    Real margin(1L, p);
    mpfr_div_2ui(margin.raw(), margin.raw(), 64, MPFR_RNDN);
    Real shifted(p);
    mpfr_add(shifted.raw(), v.raw(), margin.raw(), MPFR_RNDU);
    return shifted.ceil_int();
}

bool count_within(const Int& count, const Real& value) {
    return count <= ceil_with_margin(value);
}

std::string dec(const Int& v) { return v.str(); }

std::string dec(const Rat& v) {
    Int n = rat_num(v), d = rat_den(v);
    if (d == 1)
        return n.str();
    return n.str() + "/" + d.str();
}

} // namespace ihull
