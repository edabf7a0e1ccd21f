#include <random>

#include "cta/arc.hpp"
#include "cta/error.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cta;
using namespace testutil;

namespace {

Endpoint P(const char* x, char s) { return Endpoint::point(R(x), s == '-' ? Sign::Minus : Sign::Plus); }

Arc interval_arc(const Quiver& q, const char* s) { return phi(q, I(s)); }

// Intervals whose endpoints avoid nothing in particular: markers, midpoints and infinities.
std::vector<Interval> general_grid() {
  std::vector<ExtRational> pts{ExtRational::neg_inf()};
  for (int k = -6; k <= 6; ++k) pts.emplace_back(make_rational(k, 2));
  pts.push_back(ExtRational::pos_inf());
  std::vector<Interval> out;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i; j < pts.size(); ++j)
      for (int f = 0; f < 4; ++f) {
        try {
          out.emplace_back(pts[i], (f & 1) != 0, pts[j], (f & 2) != 0);
        } catch (const Error&) {
        }
      }
  return out;
}

}  // namespace

TEST_CASE("straight crossing equals the lambda/upsilon oracle on the grid") {
  Quiver q = Quiver::straight();
  auto g = interval_grid(0, 5, true);
  CHECK(g.size() == 91);
  for (auto& a : g)
    for (auto& b : g) {
      INFO(a.str(), " vs ", b.str());
      CHECK(e_compatible(q, a, b) == straight_compat_oracle(a, b));
    }
}

TEST_CASE("straight ascending matches the descending model") {
  Quiver q = Quiver::straight(Direction::Ascending);
  auto g = interval_grid(0, 4, true);
  for (auto& a : g)
    for (auto& b : g) CHECK(e_compatible(q, a, b) == straight_compat_oracle(a, b));
}

TEST_CASE("shared endpoint fixtures on the straight line") {
  Quiver q = Quiver::straight();
  Arc t1(P("1", '-'), P("2", '-'));
  CHECK_FALSE(crossing(q, t1, Arc(P("2", '+'), P("3", '+'))));
  CHECK(crossing(q, t1, Arc(P("2", '-'), P("3", '+'))));
  Arc t2(P("1", '-'), P("2", '+'));
  CHECK(crossing(q, t2, Arc(P("2", '+'), P("3", '+'))));
  CHECK(crossing(q, t2, Arc(P("2", '-'), P("3", '+'))));
}

TEST_CASE("the four sign patterns at a shared point") {
  // Arcs {(1,-),(2,e1)} and {(2,e2),(3,+)}: crossing unless e1 = -, e2 = +.
  Quiver q = Quiver::straight();
  for (char e1 : {'-', '+'})
    for (char e2 : {'-', '+'}) {
      Arc x(P("1", '-'), P("2", e1)), y(P("2", e2), P("3", '+'));
      bool expect = !(e1 == '-' && e2 == '+');
      INFO(e1, e2);
      CHECK(crossing(q, x, y) == expect);
    }
}

TEST_CASE("lanes of the running example") {
  Quiver q = running_example();
  CHECK(lane_of(q, P("-3/2", '+')) == Lane::Down);
  CHECK(lane_of(q, P("1/2", '-')) == Lane::Down);
  CHECK(lane_of(q, P("5/2", '-')) == Lane::Down);
  CHECK(lane_of(q, P("-5/2", '-')) == Lane::Up);
  CHECK(lane_of(q, P("-1/2", '-')) == Lane::Up);
  CHECK(lane_of(q, P("3/2", '-')) == Lane::Up);
  CHECK(lane_of(q, Endpoint::segment(-3, Sign::Minus)) == Lane::Down);
  CHECK(lane_of(q, Endpoint::segment(0, Sign::Minus)) == Lane::Up);
  CHECK_THROWS_AS(lane_of(q, P("1", '-')), Error);
}

TEST_CASE("running example phi on fixtures") {
  Quiver q = running_example();
  CHECK(phi(q, I("(-inf,-1/2]")) == Arc(Endpoint::segment(-3, Sign::Minus), P("-1/2", '+')));
  CHECK(phi(q, I("[0,1/2)")) == Arc(Endpoint::segment(0, Sign::Minus), P("1/2", '-')));
  CHECK(phi(q, I("(0,1/2)")) == Arc(Endpoint::segment(-1, Sign::Plus), P("1/2", '-')));
  CHECK(phi(q, I("(1/2,1]")) == Arc(P("1/2", '+'), Endpoint::segment(0, Sign::Plus)));
  CHECK(phi(q, I("(1/2,+inf)")) == Arc(P("1/2", '+'), Endpoint::segment(2, Sign::Plus)));
  CHECK(phi(q, I("{0}")) == Arc(Endpoint::segment(0, Sign::Minus), Endpoint::segment(-1, Sign::Plus)));
}

TEST_CASE("phi is a bijection onto arcs with inverse phi_inverse") {
  for (const Quiver& q : {running_example(), Quiver::straight(), Quiver::from_markers({R("0")}, {R("1")}),
                          Quiver::from_markers({}, {R("0")})}) {
    auto g = general_grid();
    std::vector<Arc> arcs;
    for (auto& m : g) {
      Arc a = phi(q, m);
      INFO(q.describe(), " ", m.str(), " -> ", a.str());
      CHECK(phi_inverse(q, a) == m);
      arcs.push_back(a);
    }
    for (size_t i = 0; i < arcs.size(); ++i)
      for (size_t j = i + 1; j < arcs.size(); ++j) CHECK_FALSE(arcs[i] == arcs[j]);
  }
}

TEST_CASE("every arc of the running example has a preimage") {
  Quiver q = running_example();
  std::vector<Endpoint> ends;
  for (const char* x : {"-5/2", "-3/2", "-1/2", "1/2", "3/2", "5/2"})
    for (char s : {'-', '+'}) ends.push_back(P(x, s));
  for (long n = q.neg_slot(); n < q.pos_slot(); ++n)
    for (Sign s : {Sign::Minus, Sign::Plus}) ends.push_back(Endpoint::segment(n, s));
  for (size_t i = 0; i < ends.size(); ++i)
    for (size_t j = i + 1; j < ends.size(); ++j) {
      Arc a(ends[i], ends[j]);
      INFO(a.str());
      Interval m = phi_inverse(q, a);
      CHECK(phi(q, m) == a);
    }
}

TEST_CASE("shared endpoint rule in the running example") {
  Quiver q = running_example();
  Arc theta(P("-3/2", '-'), P("1/2", '+'));
  CHECK(crossing(q, theta, Arc(P("1/2", '+'), P("3/2", '+'))));
  CHECK(crossing(q, Arc(P("1/2", '+'), P("5/2", '+')), Arc(P("-1/2", '-'), P("1/2", '+'))));
  CHECK_FALSE(crossing(q, theta, Arc(P("-1/2", '-'), P("1/2", '+'))));
  CHECK_FALSE(crossing(q, Arc(P("1/2", '+'), P("5/2", '+')), Arc(P("1/2", '+'), P("3/2", '+'))));
}

TEST_CASE("spanning arc rules in the running example") {
  Quiver q = running_example();
  CHECK(crossing(q, Arc(P("-3/2", '+'), P("3/2", '+')), Arc(P("1/2", '+'), P("-1/2", '+'))));
  CHECK_FALSE(crossing(q, Arc(P("-3/2", '+'), P("-1/2", '+')), Arc(P("1/2", '+'), P("3/2", '+'))));
  CHECK(crossing(q, Arc(P("1/2", '+'), P("3/2", '+')), Arc(P("-3/2", '-'), P("5/2", '+'))));
  CHECK_FALSE(crossing(q, Arc(P("1/2", '+'), P("3/2", '+')), Arc(P("-3/2", '-'), P("1/4", '+'))));
  // Opposite lanes never cross.
  CHECK_FALSE(crossing(q, Arc(P("-3/2", '-'), P("5/2", '+')), Arc(P("-5/2", '-'), P("3/2", '+'))));
}

TEST_CASE("crossing is symmetric and irreflexive") {
  Quiver q = running_example();
  auto g = general_grid();
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, g.size() - 1);
  for (int it = 0; it < 4000; ++it) {
    Arc a = phi(q, g[pick(rng)]), b = phi(q, g[pick(rng)]);
    CHECK(crossing(q, a, b) == crossing(q, b, a));
    CHECK_FALSE(crossing(q, a, a));
  }
}

TEST_CASE("reversal and mirror preserve crossing") {
  for (const Quiver& q : {running_example(), Quiver::from_markers({R("1/2")}, {R("-1")}), Quiver::straight()}) {
    Quiver r = q.reversed(), m = q.mirrored();
    auto g = general_grid();
    std::mt19937 rng(11);
    std::uniform_int_distribution<size_t> pick(0, g.size() - 1);
    for (int it = 0; it < 3000; ++it) {
      Arc a = phi(q, g[pick(rng)]), b = phi(q, g[pick(rng)]);
      bool c = crossing(q, a, b);
      CHECK(crossing(r, reverse_arc(q, a), reverse_arc(q, b)) == c);
      CHECK(crossing(m, mirror_arc(q, a), mirror_arc(q, b)) == c);
    }
  }
}

TEST_CASE("mirror bijection commutes with phi") {
  Quiver q = running_example();
  Quiver m = q.mirrored();
  for (auto& iv : general_grid()) {
    INFO(iv.str());
    CHECK(phi(m, mirror_interval(iv)) == mirror_arc(q, phi(q, iv)));
  }
}

TEST_CASE("mirror sends lanes to the opposite lane") {
  Quiver q = running_example();
  Quiver m = q.mirrored();
  for (const char* x : {"-5/2", "-3/2", "-1/2", "1/2", "3/2", "5/2"}) {
    Endpoint e = P(x, '+');
    CHECK(lane_of(m, mirror_endpoint(q, e)) != lane_of(q, e));
  }
}
