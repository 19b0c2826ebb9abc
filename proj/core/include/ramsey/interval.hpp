#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace ramsey {

/// Three-valued comparison outcome. Indecisive means the enclosures overlap.
enum class Tri { False, True, Indecisive };

inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }
Tri tri_and(Tri a, Tri b);
Tri tri_or(Tri a, Tri b);
Tri tri_not(Tri a);
std::string to_string(Tri t);

/// A comparison stayed indecisive at the largest permitted precision.
class PrecisionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds the
/// lower endpoint toward -inf and the upper endpoint toward +inf, so the true
/// value of any composed expression stays enclosed.
class Interval {
public:
  explicit Interval(mpfr_prec_t precision = 256);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval exact(long value, mpfr_prec_t precision);
  static Interval from_integer(const mpz_class& value, mpfr_prec_t precision);
  static Interval from_rational(const mpq_class& value, mpfr_prec_t precision);
  static Interval from_double(double value, mpfr_prec_t precision);
  /// [lo, hi] with lo <= hi required.
  static Interval hull(const Interval& a, const Interval& b);

  mpfr_prec_t precision() const { return precision_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  bool is_exact() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool contains(const mpq_class& q) const;
  bool positive() const { return mpfr_sgn(lo_) > 0; }

  /// Decimal endpoints rounded outward.
  std::string lo_string(int digits = 30) const;
  std::string hi_string(int digits = 30) const;
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  /// Largest integer <= lo and smallest integer >= hi.
  mpz_class floor_lo() const;
  mpz_class ceil_hi() const;

private:
  mpfr_prec_t precision_;
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator*(long k, const Interval& a);
Interval operator+(const Interval& a, long k);

Interval sqrt(const Interval& a);
Interval cbrt(const Interval& a);
Interval log2(const Interval& a);
Interval ln(const Interval& a);
Interval exp2(const Interval& a);
/// x^y for x > 0, evaluated as 2^(y log2 x).
Interval pow(const Interval& x, const Interval& y);
Interval ipow(const Interval& x, unsigned k);

Tri less(const Interval& a, const Interval& b);
Tri less_equal(const Interval& a, const Interval& b);
inline Tri greater(const Interval& a, const Interval& b) { return less(b, a); }
inline Tri greater_equal(const Interval& a, const Interval& b) { return less_equal(b, a); }
/// True only when both are exact and equal; False when disjoint.
Tri equal(const Interval& a, const Interval& b);

}  // namespace ramsey
