#include "ramsey/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ramsey {

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::True && b == Tri::True) return Tri::True;
  return Tri::Indecisive;
}

Tri tri_or(Tri a, Tri b) {
  if (a == Tri::True || b == Tri::True) return Tri::True;
  if (a == Tri::False && b == Tri::False) return Tri::False;
  return Tri::Indecisive;
}

Tri tri_not(Tri a) {
  if (a == Tri::Indecisive) return a;
  return a == Tri::True ? Tri::False : Tri::True;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::Indecisive:
      return "indecisive";
  }
  return "indecisive";
}

Interval::Interval(mpfr_prec_t precision) : precision_(precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : precision_(other.precision_) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision_) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    precision_ = other.precision_;
    mpfr_set_prec(lo_, precision_);
    mpfr_set_prec(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  std::swap(precision_, other.precision_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(long value, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::from_integer(const mpz_class& value, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const mpq_class& value, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_double(double value, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_d(r.lo_, value, MPFR_RNDD);
  mpfr_set_d(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision_, b.precision_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

bool Interval::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

namespace {

std::string format(mpfr_srcptr x, int digits, bool up) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, up ? "%.*RUg" : "%.*RDg", digits, x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

template <typename Op>
Interval monotone(const Interval& a, Op op) {
  Interval r(a.precision());
  op(r.lo(), a.lo(), MPFR_RNDD);
  op(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

}  // namespace

std::string Interval::lo_string(int digits) const { return format(lo_, digits, false); }
std::string Interval::hi_string(int digits) const { return format(hi_, digits, true); }

mpz_class Interval::floor_lo() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
  return z;
}

mpz_class Interval::ceil_hi() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
  return z;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  return r;
}

namespace {

// Combines the four endpoint products/quotients, each rounded in both directions.
template <typename Op>
Interval corners(const Interval& a, const Interval& b, Op op) {
  const mpfr_prec_t p = joint(a, b);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  bool first = true;
  for (mpfr_srcptr x : {a.lo(), a.hi()})
    for (mpfr_srcptr y : {b.lo(), b.hi()}) {
      op(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo())) mpfr_set(r.lo(), t, MPFR_RNDD);
      op(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi())) mpfr_set(r.hi(), t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) { return corners(a, b, mpfr_mul); }

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo()) <= 0 && mpfr_sgn(b.hi()) >= 0) throw std::domain_error("interval division by a range containing 0");
  return corners(a, b, mpfr_div);
}

Interval operator*(long k, const Interval& a) { return Interval::exact(k, a.precision()) * a; }
Interval operator+(const Interval& a, long k) { return a + Interval::exact(k, a.precision()); }

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo()) < 0) throw std::domain_error("sqrt of a range reaching below 0");
  return monotone(a, mpfr_sqrt);
}

Interval cbrt(const Interval& a) { return monotone(a, mpfr_cbrt); }

Interval log2(const Interval& a) {
  if (mpfr_sgn(a.lo()) <= 0) throw std::domain_error("log2 of a range reaching 0");
  return monotone(a, mpfr_log2);
}

Interval ln(const Interval& a) {
  if (mpfr_sgn(a.lo()) <= 0) throw std::domain_error("ln of a range reaching 0");
  return monotone(a, mpfr_log);
}

Interval exp2(const Interval& a) { return monotone(a, mpfr_exp2); }

Interval pow(const Interval& x, const Interval& y) { return exp2(y * log2(x)); }

Interval ipow(const Interval& x, unsigned k) {
  Interval r = Interval::exact(1, x.precision());
  for (unsigned i = 0; i < k; ++i) r = r * x;
  return r;
}

Tri less(const Interval& a, const Interval& b) {
  if (mpfr_less_p(a.hi(), b.lo())) return Tri::True;
  if (mpfr_greaterequal_p(a.lo(), b.hi())) return Tri::False;
  return Tri::Indecisive;
}

Tri less_equal(const Interval& a, const Interval& b) {
  if (mpfr_lessequal_p(a.hi(), b.lo())) return Tri::True;
  if (mpfr_greater_p(a.lo(), b.hi())) return Tri::False;
  return Tri::Indecisive;
}

Tri equal(const Interval& a, const Interval& b) {
  if (mpfr_less_p(a.hi(), b.lo()) || mpfr_less_p(b.hi(), a.lo())) return Tri::False;
  if (a.is_exact() && b.is_exact() && mpfr_equal_p(a.lo(), b.lo())) return Tri::True;
  return Tri::Indecisive;
}

}  // namespace ramsey
