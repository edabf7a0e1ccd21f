#include <cmath>
#include <map>
#include <numbers>

#include "cta/arc.hpp"
#include "cta/error.hpp"
#include "cta/mutation_engine.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cta;
using namespace cta::engine;
using testutil::I;
using testutil::R;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> sample_times() {
  std::vector<double> ts;
  for (int k = 0; k <= 20; ++k) ts.push_back(k * 0.05);
  return ts;
}

std::vector<Interval> probes100() { return random_probes(Universe::Full, 100, 2024, 4, 3); }

bool same(const ClusterRep& a, const ClusterRep& b, const std::vector<Interval>& probes) {
  return !membership_difference(a, b, probes);
}

// Both mu1 channels on the unrepaired clock 1/4 - atan(x)/(2 pi).
ContinuousSchedule literal_mu1() {
  auto mu1 = proj_to_inj_schedules().first;
  mu1.channels[1].clock = Clock::falling(0.25);
  return mu1;
}

}  // namespace

TEST_CASE("clocks of the proj to inj schedules") {
  auto [mu1, mu2] = proj_to_inj_schedules();
  CHECK(*mu1.f(I("(-inf,0)")) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(*mu1.f(I("(-inf,0]")) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(*mu2.f(I("{0}")) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(*mu2.g(I("(0,+inf)")) == doctest::Approx(0.5).epsilon(1e-15));
  // Independent evaluation at x = 1: 1/4 - (pi/4)/(2 pi) = 1/8; atan(1)/pi + 1/2 = 3/4.
  CHECK(*mu1.f(I("(-inf,1)")) == doctest::Approx(0.125));
  CHECK(*mu1.f(I("(-inf,1]")) == doctest::Approx(0.625));
  CHECK(*mu2.f(I("{1}")) == doctest::Approx(0.75));
  CHECK_FALSE(mu1.f(I("(0,1)")).has_value());
  CHECK_FALSE(mu1.f(I("(-inf,+inf)")).has_value());

  CHECK(*mu1.partner(I("(-inf,2)")) == I("{2}"));
  CHECK(*mu1.partner(I("(-inf,2]")) == I("[2,+inf)"));
  CHECK(*mu2.partner(I("{-3}")) == I("(-3,+inf)"));
  CHECK(*invert(mu2).partner(I("(-3,+inf)")) == I("{-3}"));

  CHECK(mu1.source() == proj_cluster());
  CHECK(same(mu1.target(), middle_cluster(), probes100()));
  CHECK(same(mu2.source(), middle_cluster(), probes100()));
  CHECK(same(mu2.target(), inj_cluster(), probes100()));
}

TEST_CASE("g after pairing equals f, and clocks are injective") {
  auto [mu1, mu2] = proj_to_inj_schedules();
  for (const auto& s : {mu1, mu2, invert(mu1), invert(mu2)}) {
    auto members = sample_members(s.source(), 1000, 77);
    std::map<double, Interval> by_time;
    size_t moving = 0;
    for (const auto& m : members) {
      auto f = s.f(m);
      if (!f) continue;
      ++moving;
      auto y = s.partner(m);
      REQUIRE(y.has_value());
      CHECK(*s.g(*y) == doctest::Approx(*f).epsilon(1e-15));
      CHECK_FALSE(s.source().member(*y));
      CHECK_FALSE(e_compatible(s.source().quiver, m, *y));
      auto [it, fresh] = by_time.emplace(*f, m);
      if (!fresh) CHECK(it->second == m);
    }
    CHECK(moving > 300);
  }
  // The unrepaired clocks send (-inf,x) and (-inf,x] to the same time.
  auto lit = literal_mu1();
  CHECK(*lit.f(I("(-inf,1)")) == *lit.f(I("(-inf,1]")));
}

TEST_CASE("cluster at time") {
  auto [mu1, mu2] = proj_to_inj_schedules();
  auto probes = probes100();
  CHECK(cluster_at(mu1, 0.0, false) == mu1.source());
  CHECK(same(cluster_at(mu2, 1.0, true), inj_cluster(), probes));

  auto before = cluster_at(mu2, 0.5, false);
  auto after = cluster_at(mu2, 0.5, true);
  CHECK(before.member(I("{0}")));
  CHECK_FALSE(before.member(I("(0,+inf)")));
  CHECK(after.member(I("(0,+inf)")));
  CHECK_FALSE(after.member(I("{0}")));
  CHECK(after.member(I("(-1,+inf)")));
  CHECK(after.member(I("{1}")));
  CHECK(after.member(I("[5,+inf)")));

  auto st = step_at(mu2, 0.5);
  REQUIRE_FALSE(st.trivial);
  CHECK(st.x == I("{0}"));
  CHECK(st.y == I("(0,+inf)"));

  // mu1 at 1/4: open rays beyond 0 are singletons, closed rays untouched.
  auto q = cluster_at(mu1, 0.25, true);
  CHECK(q.member(I("{0}")));
  CHECK(q.member(I("{3}")));
  CHECK(q.member(I("(-inf,-1)")));
  CHECK_FALSE(q.member(I("(-inf,0)")));
  CHECK(q.member(I("(-inf,7]")));
  CHECK(step_at(mu1, 0.5).trivial);
  CHECK(step_at(mu1, 0.0).trivial);
  CHECK(step_at(mu2, 1.0).trivial);
  CHECK(step_at(mu1, 0.75).x == I("(-inf,0]"));
  CHECK(step_at(mu1, 0.75).y == I("[0,+inf)"));

  CHECK_THROWS_AS(cluster_at(mu1, 1.5, false), Error);
}

TEST_CASE("inversion") {
  auto [mu1, mu2] = proj_to_inj_schedules();
  auto inv = invert(mu1);
  CHECK(same(inv.source(), middle_cluster(), probes100()));
  CHECK(same(inv.target(), proj_cluster(), probes100()));
  CHECK(invert(inv).inverted == mu1.inverted);
  for (double t : sample_times()) {
    auto probes = schedule_probes(inv, t, 40, 3);
    for (bool inc : {false, true})
      CHECK(same(cluster_at(inv, t, inc), cluster_at(mu1, 1.0 - t, !inc), probes));
    auto fwd = step_at(mu1, 1.0 - t);
    auto bwd = step_at(inv, t);
    CHECK(fwd.trivial == bwd.trivial);
    if (!fwd.trivial) {
      CHECK(fwd.x == bwd.y);
      CHECK(fwd.y == bwd.x);
    }
  }
}

TEST_CASE("prefix clusters and steps at sampled times") {
  auto [mu1, mu2] = proj_to_inj_schedules();
  size_t mutations = 0;
  for (const auto& s : {mu1, mu2, invert(mu1), invert(mu2)}) {
    for (double t : sample_times()) {
      auto probes = schedule_probes(s, t, 50, static_cast<std::uint64_t>(t * 1000) + 1);
      auto before = cluster_at(s, t, false);
      auto after = cluster_at(s, t, true);
      for (const auto* c : {&before, &after}) {
        auto pc = verify_prefix(*c, probes, 200, 5);
        INFO(s.name << " t=" << t << " " << pc.witness);
        CHECK(pc.ok);
      }
      auto st = step_at(s, t);
      auto sc = verify_step(before, after, s.source(), st, probes);
      INFO(s.name << " t=" << t << " " << st.str() << " " << sc.witness);
      CHECK(sc.ok);
      if (!st.trivial) ++mutations;
    }
  }
  CHECK(mutations > 60);
}

TEST_CASE("negative controls for the step and prefix checks") {
  // With shared clocks two members leave at once: not a single exchange.
  auto lit = literal_mu1();
  double t = 0.125;
  auto probes = schedule_probes(lit, t, 50, 9);
  auto st = step_at(lit, t);
  auto sc = verify_step(cluster_at(lit, t, false), cluster_at(lit, t, true), lit.source(), st, probes);
  CHECK_FALSE(sc.ok);
  CHECK(sc.witness.find("bystander") != std::string::npos);

  // Pairing singletons with open left rays instead of open right rays.
  auto bad = proj_to_inj_schedules().second;
  bad.channels[0].in = Family::left_ray(RayStyle::Open, Range::all());
  auto c = cluster_at(bad, 0.5, true);
  auto pc = verify_prefix(c, schedule_probes(bad, 0.5, 50, 4), 200, 5);
  CHECK_FALSE(pc.ok);
}

TEST_CASE("time warp") {
  TimeWarp w;
  auto p = w.at(0.625);
  CHECK(p.i == 0);
  CHECK(std::fabs(p.a - 0.5) < 1e-12);
  CHECK(std::fabs(p.b - 0.75) < 1e-12);
  CHECK(std::fabs(p.t - 0.5) < 1e-12);
  for (double s : {0.5, 0.51, 0.5249}) CHECK(w.at(s).t == 0.0);
  CHECK(w.at(0.74).t == 1.0);
  CHECK(w.at(0.75).i == 1);
  CHECK(w.at(0.25).i == -1);
  CHECK(w.at(0.2).i == -2);
  // Segments tile (0,1): a_s <= s < b_s everywhere, t_s monotone within a segment.
  double prev_t = -1;
  long prev_i = LONG_MIN;
  for (int k = 1; k < 2000; ++k) {
    double s = k / 2000.0;
    auto q = w.at(s);
    CHECK(q.a <= s);
    CHECK(s < q.b);
    CHECK(std::fabs(q.a - (std::atan(static_cast<double>(q.i)) / kPi + 0.5)) < 1e-15);
    if (q.i == prev_i) CHECK(q.t >= prev_t);
    prev_i = q.i;
    prev_t = q.t;
  }
  CHECK_THROWS_AS(w.at(0.0), Error);
  CHECK_THROWS_AS(TimeWarp{0.6}.at(0.3), Error);
}

TEST_CASE("long sequence path from projectives to injectives") {
  auto [mu1, mu2] = proj_to_inj_schedules();
  auto path = path_from_long_sequence({mu1, mu2});
  auto probes = probes100();
  CHECK(same(path(0.0, 0), proj_cluster(), probes));
  CHECK(same(path(1.0, 1), inj_cluster(), probes));
  CHECK(same(path(0.3, 1), proj_cluster(), probes));
  CHECK(same(path(0.95, 0), inj_cluster(), probes));
  CHECK(same(path(0.625, 1), cluster_at(mu1, 0.5, true), probes));

  size_t mutations = 0;
  for (int k = 0; k <= 20; ++k) {
    double s = 0.45 + k * 0.02;
    auto before = path(s, 0);
    auto after = path(s, 1);
    auto st = path.step(s);
    auto pr = random_probes(Universe::Full, 50, static_cast<std::uint64_t>(k) + 11, 4, 3);
    if (!st.trivial)
      for (const auto& m : {st.x, st.y}) pr.push_back(m);
    auto pc = verify_prefix(after, pr, 200, 3);
    INFO("s=" << s << " " << pc.witness);
    CHECK(pc.ok);
    CHECK(verify_step(before, after, proj_cluster(), st, pr).ok == true);
    if (!st.trivial) ++mutations;
  }
  CHECK(mutations >= 8);

  CHECK_THROWS_AS(path_from_long_sequence({mu2, mu1}), Error);
  try {
    path_from_long_sequence({mu1, mu1});
    FAIL("expected CHAIN_MISMATCH");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChainMismatch);
  }
}

TEST_CASE("path composition and inversion") {
  auto [mu1, mu2] = proj_to_inj_schedules();
  auto p = path_from_long_sequence({mu1, mu2});
  auto probes = probes100();

  auto c = compose_paths(p, const_path(p.end()));
  for (double s : {0.1, 0.25, 0.3, 0.45})
    for (int i : {0, 1}) CHECK(same(c(s, i), p(2 * s, i), probes));

  auto inv = invert_path(p);
  auto back = invert_path(inv);
  for (double s : {0.0, 0.3, 0.6, 0.7, 1.0})
    for (int i : {0, 1}) CHECK(same(back(s, i), p(s, i), probes));
  CHECK(same(inv.start(), inj_cluster(), probes));

  auto loop = compose_paths(p, inv);
  CHECK(same(loop.start(), p(0, 0), probes));
  CHECK(same(loop.end(), p(0, 0), probes));
  CHECK(same(loop(0.3125, 1), p(0.625, 1), probes));
  CHECK(same(loop(0.6875, 1), p(0.625, 0), probes));
  auto st = loop.step(0.6875);
  auto fw = p.step(0.625);
  CHECK(st.x == fw.y);
  CHECK(st.y == fw.x);

  // Associativity up to reparametrization: ((a b) c)(s) = (a (b c))(r(s)).
  auto a = schedule_path(mu1), b = schedule_path(mu2), cc = invert_path(schedule_path(mu2));
  auto left = compose_paths(compose_paths(a, b), cc);
  auto right = compose_paths(a, compose_paths(b, cc));
  auto reparam = [](double s) { return s <= 0.25 ? 2 * s : s <= 0.5 ? s + 0.25 : (s + 1) / 2; };
  for (int k = 0; k <= 20; ++k) {
    double s = k / 20.0;
    for (int i : {0, 1}) CHECK(same(left(s, i), right(reparam(s), i), probes));
  }

  try {
    compose_paths(p, p);
    FAIL("expected ENDPOINT_MISMATCH");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EndpointMismatch);
  }
}

TEST_CASE("single exchanges as continuous mutations") {
  auto c = proj_cluster();
  auto r = mutate(c, I("(-inf,1)"));
  REQUIRE(r.y == I("{1}"));
  auto s = single_exchange(c, I("(-inf,1)"), r.y);
  auto probes = schedule_probes(s, 0.5, 100, 1);
  CHECK(same(s.source(), c, probes));
  CHECK(same(s.target(), r.cluster, probes));
  CHECK(step_at(s, 0.4).trivial);
  CHECK(verify_step(cluster_at(s, 0.5, false), cluster_at(s, 0.5, true), s.source(), step_at(s, 0.5), probes).ok);
  CHECK_THROWS_AS(single_exchange(c, I("{1}"), I("{2}")), Error);
}

TEST_CASE("level curve schedule") {
  auto s = level_curve_schedule();
  CHECK(*s.f(I("(-inf,0]")) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(*s.f(I("(-inf,1]")) == doctest::Approx(0.25));
  CHECK(*s.partner(I("(-inf,1]")) == I("[1,+inf)"));
  CHECK(s.source().member(I("{7}")));
  CHECK(s.target().member(I("{7}")));
  CHECK(s.target().member(I("[7,+inf)")));
  CHECK_FALSE(s.target().member(I("(-inf,7]")));
  size_t mutations = 0;
  for (double t : sample_times()) {
    auto probes = schedule_probes(s, t, 50, 31);
    auto before = cluster_at(s, t, false);
    auto after = cluster_at(s, t, true);
    CHECK(verify_prefix(after, probes, 200, 2).ok);
    auto st = step_at(s, t);
    CHECK(verify_step(before, after, s.source(), st, probes).ok);
    if (!st.trivial) ++mutations;
  }
  CHECK(mutations == 19);
  // At 3/5 the rays (-inf,x] with 1/2 - atan(x)/pi > 3/5, i.e. x < tan(-pi/10), remain.
  auto c = cluster_at(s, 0.6, true);
  CHECK(c.member(I("(-inf,-1/3]")));
  CHECK_FALSE(c.member(I("(-inf,-1/4]")));
  CHECK(c.member(I("[-1/4,+inf)")));
}

TEST_CASE("reachability on finite exchange graphs") {
  auto square = reachability_demo(exchange_graph(1));
  CHECK(square.nodes == 2);
  CHECK(square.connected);
  CHECK(square.diameter == 1);
  CHECK(square.witness_flips.size() == 1);

  auto pentagon = reachability_demo(exchange_graph(2));
  CHECK(pentagon.nodes == 5);
  CHECK(pentagon.diameter == 2);

  auto hexagon = reachability_demo(exchange_graph(3));
  CHECK(hexagon.nodes == 14);
  CHECK(hexagon.connected);
  CHECK(hexagon.witness_flips.size() == hexagon.diameter);

  for (int n = 4; n <= 7; ++n) CHECK(reachability_demo(exchange_graph(n)).connected);
}
