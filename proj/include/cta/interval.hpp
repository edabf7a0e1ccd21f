#ifndef CTA_INTERVAL_HPP
#define CTA_INTERVAL_HPP

#include <string>
#include <string_view>

#include "cta/quiver.hpp"
#include "cta/rational.hpp"

namespace cta {

// Indecomposable M_I for an interval I of the real line, stored as |lo, hi| with inclusion flags.
// Invariants: lo <= hi; an infinite end is never included; lo == hi only for a closed finite singleton.
class Interval {
 public:
  Interval(ExtRational lo, bool lo_in, ExtRational hi, bool hi_in);
  static Interval open(ExtRational lo, ExtRational hi) { return Interval(lo, false, hi, false); }
  static Interval closed(ExtRational lo, ExtRational hi) { return Interval(lo, true, hi, true); }
  static Interval singleton(const Rational& x) { return Interval(x, true, x, true); }
  static Interval parse(std::string_view s);

  const ExtRational& lo() const { return lo_; }
  const ExtRational& hi() const { return hi_; }
  bool lo_in() const { return lo_in_; }
  bool hi_in() const { return hi_in_; }
  bool is_singleton() const { return lo_ == hi_; }
  bool contains(const ExtRational& x) const;

  std::string str() const;
  friend bool operator==(const Interval& a, const Interval& b) = default;
  friend std::strong_ordering operator<=>(const Interval& a, const Interval& b);

 private:
  ExtRational lo_;
  bool lo_in_;
  ExtRational hi_;
  bool hi_in_;
};

struct ProjectiveClass {
  enum class Kind { None, Full, OpenLow, OpenHigh };  // P_a, P_(a, P_a)
  Kind kind = Kind::None;
  ExtRational a;
  std::string str() const;
};

// Matches m against the three projective shapes at every candidate point.
ProjectiveClass classify_projective(const Quiver& q, const Interval& m);
ProjectiveClass classify_injective(const Quiver& q, const Interval& m);

// Reference compatibility for the straight descending quiver through the
// lambda/upsilon encoding of the endpoints.
bool straight_compat_oracle(const Interval& a, const Interval& b);

}  // namespace cta

#endif
