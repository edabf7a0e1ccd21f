#ifndef CTA_RATIONAL_HPP
#define CTA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace cta {

// Always canonical: gmpxx arithmetic keeps mpq values reduced.
using Rational = mpq_class;

// Canonical n/d; gmpxx leaves two-argument construction unreduced.
Rational make_rational(long n, long d = 1);
Rational parse_rational(std::string_view s);
std::string format_rational(const Rational& q);
double to_double(const Rational& q);
// Exact binary value of a finite double.
Rational rational_from_double(double d);
// Smallest-denominator rational within tol of d; tol <= 0 gives the exact value.
Rational simplest_rational_near(double d, double tol);
long floor_long(const Rational& q);
long ceil_long(const Rational& q);
std::strong_ordering compare(const Rational& a, const Rational& b);

// A rational or one of the two infinities; -inf < every rational < +inf.
class ExtRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRational() : kind_(Kind::Finite) {}
  ExtRational(const Rational& q) : kind_(Kind::Finite), value_(q) { value_.canonicalize(); }  // NOLINT
  ExtRational(long v) : kind_(Kind::Finite), value_(v) {}              // NOLINT
  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }
  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  // Precondition: is_finite().
  const Rational& value() const;

  ExtRational negated() const;
  double to_double() const;
  std::string str() const;
  static ExtRational parse(std::string_view s);

  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b) { return (a <=> b) == 0; }

 private:
  explicit ExtRational(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

// p / 2^k with p odd or k == 0.
class DyadicRational {
 public:
  DyadicRational(const mpz_class& numerator, unsigned exponent);
  static std::optional<DyadicRational> from_rational(const Rational& q);

  const mpz_class& numerator() const { return num_; }
  unsigned depth() const { return exp_; }
  Rational value() const;

 private:
  mpz_class num_;
  unsigned exp_;
};

// Depth of (x - l) / (r - l) when that ratio is dyadic; nullopt otherwise.
std::optional<unsigned> relative_dyadic_depth(const Rational& x, const Rational& l, const Rational& r);

}  // namespace cta

#endif
