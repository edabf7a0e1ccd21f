#ifndef CTA_TRANSFORMS_HPP
#define CTA_TRANSFORMS_HPP

#include <string>

namespace cta::transform {

// Floating point lives only here; tolerance 1e-9.
constexpr double kTolerance = 1e-9;

// A point of C_A: |x - y| < pi, x >= 0, y < pi.
struct StripPoint {
  double x = 0, y = 0;
};

// A point of C_B: -pi/2 < beta < pi/2 and beta <= alpha < pi - beta.
struct MidPoint {
  double alpha = 0, beta = 0;
};

// A point of C_C: -inf <= a < b < +inf. a = -infinity is NEG_INF.
struct CCPoint {
  double a = 0, b = 0;
};

bool in_CA(const StripPoint& p);
bool in_CB(const MidPoint& p);
bool in_CC(const CCPoint& c);

MidPoint g_map(const StripPoint& p);
CCPoint h_map(const MidPoint& m);
// h . g; x = 0 maps exactly to a = NEG_INF. DOMAIN outside C_A.
CCPoint f_map(const StripPoint& p);
// DOMAIN outside C_C; NEG_INF maps exactly to x = 0.
StripPoint f_inverse(const CCPoint& c);

std::string str(const StripPoint& p);
std::string str(const CCPoint& c);

}  // namespace cta::transform

#endif
