#ifndef CTA_ANCHORS_HPP
#define CTA_ANCHORS_HPP

#include <optional>

#include "cta/rational.hpp"

namespace cta {

// Default anchor sequence: a_i = 1 - 2^-(i+1) for i >= 0 and a_i = 2^(i-1) for i < 0.
// Strictly increasing with limits 0 and 1; every gap a_{i+1} - a_i is a power of two,
// so a point is a dyadic subdivision point of a gap iff it is a dyadic rational.
// The vertex sentinels LONG_MIN and LONG_MAX stand for the limits.
namespace anchors {

Rational at(long i);
ExtRational limit_low();
ExtRational limit_high();
// a_i for ordinary vertices, the limits for the two sentinels.
Rational vertex(long v);
// Largest i with a_i <= x, for 0 < x < 1.
std::optional<long> floor_index(const Rational& x);
// i with a_i == x.
std::optional<long> index_of(const Rational& x);

}  // namespace anchors

// floor(log2 q) for q > 0.
long floor_log2(const Rational& q);

}  // namespace cta

#endif
