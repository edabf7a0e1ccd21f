#ifndef CTA_FAMILY_HPP
#define CTA_FAMILY_HPP

#include <climits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cta/gon.hpp"
#include "cta/interval.hpp"
#include "cta/quiver.hpp"

namespace cta {

enum class RayStyle { Open, Closed };
// How an integer index becomes a point of the line: k itself, or the anchor a_k.
enum class Coord { Integer, Anchor };

// Subset |lo, hi| of the extended line used to restrict a parameter.
struct Range {
  ExtRational lo = ExtRational::neg_inf();
  bool lo_in = false;
  ExtRational hi = ExtRational::pos_inf();
  bool hi_in = false;

  static Range all() { return {}; }
  static Range open(ExtRational lo, ExtRational hi) { return {lo, false, hi, false}; }
  bool contains(const ExtRational& x) const;
  bool empty() const;
  std::string str() const;
  friend bool operator==(const Range&, const Range&) = default;
};

// A parametrized, usually infinite, set of interval indecomposables.
//
//   DyadicTiling(l,r)       open (l + j w, l + (j+1) w), w = (r-l)/2^k, k >= 0
//   SingletonComplement     {x}, x in (l,r) not a dyadic subdivision point of (l,r)
//   SingletonRange          {x}, x in range
//   LeftRay / RightRay      (-inf,x) or (-inf,x], resp. (x,+inf) or [x,+inf), x in range
//   GapTilings              DyadicTiling(c(i), c(i+1)) for first <= i <= last
//   GapComplements          SingletonComplement(c(i), c(i+1)) for first <= i <= last
//   IntegerRays             (-inf,k) or (-inf,k] for integers first <= k <= last
//   DiagonalImages          open (c(i), c(j)) for each diagonal i~j of a tail
//
// LONG_MIN / LONG_MAX as first / last mean unbounded. Members listed in
// `excluded` are removed; mutation promotes family members this way.
struct Family {
  enum class Kind {
    DyadicTiling,
    SingletonComplement,
    SingletonRange,
    LeftRay,
    RightRay,
    GapTilings,
    GapComplements,
    IntegerRays,
    DiagonalImages
  };
  Kind kind = Kind::DyadicTiling;
  Rational l, r;
  Range range;
  RayStyle style = RayStyle::Open;
  Coord coord = Coord::Integer;
  long first = LONG_MIN, last = LONG_MAX;
  Tail tail;
  std::set<Interval> excluded;

  static Family dyadic_tiling(const Rational& l, const Rational& r);
  static Family singleton_complement(const Rational& l, const Rational& r);
  static Family singleton_range(Range range);
  static Family left_ray(RayStyle s, Range range);
  static Family right_ray(RayStyle s, Range range);
  static Family gap_tilings(Coord c, long first, long last);
  static Family gap_complements(Coord c, long first, long last);
  static Family integer_rays(RayStyle s, long first, long last);
  static Family diagonal_images(const Tail& t, Coord c);

  bool contains(const Interval& m) const;
  // Finite members such that a query whose finite endpoints lie in `critical`
  // is compatible with the family iff it is compatible with each of them.
  std::vector<Interval> representatives(const std::vector<Rational>& critical) const;
  // Points characterizing the family; bounded windows for unbounded families.
  std::vector<Rational> critical_points() const;
  // Points from which mutation partners of arcs ending at `ends` are built.
  std::vector<ExtRational> nearby_points(const std::vector<Rational>& ends) const;
  // A member, chosen at random; the family must be nonempty.
  Interval sample(std::mt19937_64& rng) const;
  // Members with all finite endpoints in [-radius, radius], truncated at dyadic depth `depth`.
  std::vector<Interval> truncation(long radius, unsigned depth) const;
  bool is_tiling_kind() const;
  std::string str() const;
  friend bool operator==(const Family&, const Family&) = default;
};

Rational coord_value(Coord c, long i);

// Closed-form decision: m is E-compatible with every member of f.
// Straight quivers only. Throws UNSUPPORTED when a non-singleton m has an
// endpoint strictly inside a tiling base that is not a dyadic subdivision point.
bool compatible_with_family(const Quiver& q, const Interval& m, const Family& f);

// Every member of a is compatible with every member of b (representative check).
bool families_compatible(const Quiver& q, const Family& a, const Family& b);

}  // namespace cta

#endif
