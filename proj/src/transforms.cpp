#include "cta/transforms.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "cta/error.hpp"

namespace cta::transform {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "+inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

bool in_CA(const StripPoint& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::fabs(p.x - p.y) < kPi && p.x >= 0 && p.y < kPi;
}

bool in_CB(const MidPoint& m) {
  return std::isfinite(m.alpha) && std::isfinite(m.beta) && -kPi / 2 < m.beta && m.beta < kPi / 2 && m.beta <= m.alpha &&
         m.alpha < kPi - m.beta;
}

bool in_CC(const CCPoint& c) {
  if (std::isnan(c.a) || !std::isfinite(c.b)) return false;
  if (std::isinf(c.a) && c.a > 0) return false;
  return c.a < c.b;
}

MidPoint g_map(const StripPoint& p) { return {(p.y + p.x) / 2, (p.y - p.x) / 2}; }

CCPoint h_map(const MidPoint& m) {
  // alpha - beta = x; the boundary x = 0 is the pole of the first tangent.
  const double first = m.alpha - m.beta;
  const double a = first == 0 ? -INFINITY : std::tan((first - kPi) / 2);
  return {a, std::tan((m.alpha + m.beta) / 2)};
}

CCPoint f_map(const StripPoint& p) {
  if (!in_CA(p)) throw Error(ErrorCode::Domain, "point " + str(p) + " is outside C_A");
  // g followed by h, with alpha - beta = x and alpha + beta = y taken exactly.
  const double a = p.x == 0 ? -INFINITY : std::tan((p.x - kPi) / 2);
  return {a, std::tan(p.y / 2)};
}

StripPoint f_inverse(const CCPoint& c) {
  if (!in_CC(c)) throw Error(ErrorCode::Domain, "point " + str(c) + " is outside C_C");
  const double x = std::isinf(c.a) ? 0.0 : kPi + 2 * std::atan(c.a);
  return {x, 2 * std::atan(c.b)};
}

std::string str(const StripPoint& p) { return "(" + fmt(p.x) + ", " + fmt(p.y) + ")"; }
std::string str(const CCPoint& c) { return "(" + fmt(c.a) + ", " + fmt(c.b) + ")"; }

}  // namespace cta::transform
