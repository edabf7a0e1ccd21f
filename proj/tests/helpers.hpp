#ifndef CTA_TEST_HELPERS_HPP
#define CTA_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "cta/interval.hpp"
#include "cta/quiver.hpp"

namespace testutil {

inline cta::Rational R(const char* s) { return cta::parse_rational(s); }
inline cta::ExtRational X(const char* s) { return cta::ExtRational::parse(s); }
inline cta::Interval I(const char* s) { return cta::Interval::parse(s); }

// Sinks -2, 0, 2 and sources -1, 1.
inline cta::Quiver running_example() {
  return cta::Quiver::from_markers({R("-2"), R("0"), R("2")}, {R("-1"), R("1")});
}

// Every interval with endpoints in {lo..hi} and all membership flags, optionally with infinite ends.
inline std::vector<cta::Interval> interval_grid(long lo, long hi, bool with_infinite) {
  using cta::ExtRational;
  using cta::Interval;
  std::vector<Interval> out;
  for (long a = lo; a <= hi; ++a) {
    out.push_back(Interval::singleton(cta::Rational(a)));
    for (long b = a + 1; b <= hi; ++b)
      for (int f = 0; f < 4; ++f) out.emplace_back(ExtRational(a), (f & 1) != 0, ExtRational(b), (f & 2) != 0);
  }
  if (with_infinite) {
    for (long b = lo; b <= hi; ++b)
      for (int f = 0; f < 2; ++f) out.emplace_back(ExtRational::neg_inf(), false, ExtRational(b), f != 0);
    for (long a = lo; a <= hi; ++a)
      for (int f = 0; f < 2; ++f) out.emplace_back(ExtRational(a), f != 0, ExtRational::pos_inf(), false);
    out.push_back(Interval::open(ExtRational::neg_inf(), ExtRational::pos_inf()));
  }
  return out;
}

}  // namespace testutil

#endif
