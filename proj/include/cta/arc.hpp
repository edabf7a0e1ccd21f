#ifndef CTA_ARC_HPP
#define CTA_ARC_HPP

#include <string>

#include "cta/interval.hpp"
#include "cta/quiver.hpp"

namespace cta {

enum class Sign { Minus, Plus };
enum class Lane { Down, Up };

// Point endpoints (x, sign) with x off the markers; segment endpoints (|s_n, s_{n+1}|, sign);
// the two infinity symbols appear only for straight quivers.
struct Endpoint {
  enum class Kind { NegInf, Point, Segment, PosInf };
  Kind kind = Kind::Point;
  Rational x;
  long n = 0;
  Sign side = Sign::Minus;

  static Endpoint point(const Rational& x, Sign s) { return {Kind::Point, x, 0, s}; }
  static Endpoint segment(long n, Sign s) { return {Kind::Segment, Rational(0), n, s}; }
  static Endpoint neg_inf() { return {Kind::NegInf, Rational(0), 0, Sign::Minus}; }
  static Endpoint pos_inf() { return {Kind::PosInf, Rational(0), 0, Sign::Plus}; }

  std::string str() const;
  friend bool operator==(const Endpoint& a, const Endpoint& b);
  // Storage order only; lane orders are quiver dependent.
  friend std::strong_ordering operator<=>(const Endpoint& a, const Endpoint& b);
};

// Unordered pair of distinct endpoints; a < b in storage order.
struct Arc {
  Endpoint a, b;
  Arc(Endpoint x, Endpoint y);
  std::string str() const;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct OrientedArc {
  Endpoint source, target;
};

Lane lane_of(const Quiver& q, const Endpoint& e);
// Total order inside one lane (or on E for straight quivers): negative, zero or positive.
int endpoint_compare(const Quiver& q, const Endpoint& x, const Endpoint& y);

Arc phi(const Quiver& q, const Interval& m);
OrientedArc orient(const Quiver& q, const Arc& arc);
// Throws UNORIENTABLE if the arc does not come from an interval.
Interval phi_inverse(const Quiver& q, const Arc& arc);

bool crossing(const Quiver& q, const Arc& x, const Arc& y);
bool e_compatible(const Quiver& q, const Interval& m1, const Interval& m2);

// Endpoint bijections onto the endpoints of q.reversed() and q.mirrored().
Endpoint reverse_endpoint(const Quiver& q, const Endpoint& e);
Endpoint mirror_endpoint(const Quiver& q, const Endpoint& e);
Arc reverse_arc(const Quiver& q, const Arc& arc);
Arc mirror_arc(const Quiver& q, const Arc& arc);
Interval mirror_interval(const Interval& m);

}  // namespace cta

#endif
