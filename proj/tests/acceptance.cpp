// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "cta/arc.hpp"
#include "cta/cluster_rep.hpp"
#include "cta/embeddings.hpp"
#include "cta/error.hpp"
#include "cta/gon.hpp"
#include "cta/mutation_engine.hpp"
#include "cta/transforms.hpp"

using namespace cta;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// First failure wins; later checks still run so the summary counts are complete.
struct Tally {
  Outcome out;
  size_t checks = 0;
  void require(bool cond, const std::string& what) {
    ++checks;
    if (!cond && out.ok) out = {false, what};
  }
};

Rational R(const char* s) { return parse_rational(s); }
Interval I(const char* s) { return Interval::parse(s); }

Quiver running_example() { return Quiver::from_markers({R("-2"), R("0"), R("2")}, {R("-1"), R("1")}); }

// Markers only on the non-negative half-line; the whole negative half-line is one segment.
Quiver half_bounded() { return Quiver::from_markers({R("0"), R("2"), R("4")}, {R("1"), R("3")}); }

std::vector<std::pair<std::string, Quiver>> quiver_fixtures() {
  return {{"straight", Quiver::straight()},
          {"one sink", Quiver::from_markers({R("0")}, {})},
          {"five markers", running_example()},
          {"half-bounded", half_bounded()}};
}

// Random rational endpoints p/q with q <= 12, about 10% infinite ends, random flags.
std::vector<Interval> random_rational_intervals(size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-72, 72), den(1, 12), coin(0, 9), flag(0, 1);
  std::vector<Interval> out;
  while (out.size() < count) {
    auto end = [&](bool low) -> ExtRational {
      if (coin(rng) == 0) return low ? ExtRational::neg_inf() : ExtRational::pos_inf();
      return ExtRational(make_rational(num(rng), den(rng)));
    };
    ExtRational a = end(true), b = end(false);
    if (b < a) std::swap(a, b);
    try {
      out.emplace_back(a, flag(rng) == 1, b, flag(rng) == 1);
    } catch (const Error&) {
    }
  }
  return out;
}

std::vector<Interval> grid_0_5() {
  std::vector<Interval> out;
  for (long a = 0; a <= 5; ++a) {
    out.push_back(Interval::singleton(Rational(a)));
    for (long b = a + 1; b <= 5; ++b)
      for (int f = 0; f < 4; ++f) out.emplace_back(ExtRational(a), (f & 1) != 0, ExtRational(b), (f & 2) != 0);
  }
  for (long b = 0; b <= 5; ++b)
    for (int f = 0; f < 2; ++f) {
      out.emplace_back(ExtRational::neg_inf(), false, ExtRational(b), f != 0);
      out.emplace_back(ExtRational(b), f != 0, ExtRational::pos_inf(), false);
    }
  out.push_back(Interval::open(ExtRational::neg_inf(), ExtRational::pos_inf()));
  return out;
}

// ---- criteria

Outcome catalan_counts() {
  Tally t;
  const size_t expected[] = {2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 7; ++n) {
    auto g = exchange_graph(n);
    t.require(g.nodes.size() == expected[n - 1], "n=" + std::to_string(n) + " count " + std::to_string(g.nodes.size()));
    for (const auto& adj : g.adjacency)
      t.require(adj.size() == static_cast<size_t>(n), "n=" + std::to_string(n) + " not regular");
    for (size_t d : g.distances(0)) t.require(d != SIZE_MAX, "n=" + std::to_string(n) + " disconnected");
  }
  return t.out;
}

Outcome oracle_equivalence() {
  Tally t;
  Quiver q = Quiver::straight();
  auto grid = grid_0_5();
  for (const auto& a : grid)
    for (const auto& b : grid)
      t.require(e_compatible(q, a, b) == straight_compat_oracle(a, b), a.str() + " vs " + b.str());
  auto rnd = random_rational_intervals(20000, 41);
  for (size_t k = 0; k < rnd.size(); k += 2)
    t.require(e_compatible(q, rnd[k], rnd[k + 1]) == straight_compat_oracle(rnd[k], rnd[k + 1]),
              rnd[k].str() + " vs " + rnd[k + 1].str());
  std::ostringstream os;
  os << t.checks << " pairs";
  if (t.out.ok) t.out.detail = os.str();
  return t.out;
}

Outcome phi_round_trip() {
  Tally t;
  std::uint64_t seed = 100;
  for (const auto& [name, q] : quiver_fixtures()) {
    auto sample = random_probes(Universe::Full, 10000, seed++, 5, 3);
    for (const auto& m : sample) t.require(phi_inverse(q, phi(q, m)) == m, name + ": " + m.str());
  }
  return t.out;
}

Outcome crossing_fixtures() {
  Tally t;
  auto P = [](const char* x, char s) { return Endpoint::point(R(x), s == '-' ? Sign::Minus : Sign::Plus); };
  Quiver line = Quiver::straight();
  Quiver q = running_example();
  struct Fixture {
    std::string label;
    const Quiver* quiver;
    Arc a, b;
    bool crossing;
  };
  std::vector<Fixture> fx{
      // Arcs meeting at a point b from either side: only (b,-) against (b,+) avoids crossing.
      {"meeting -+", &line, Arc(P("1", '-'), P("2", '-')), Arc(P("2", '+'), P("3", '+')), false},
      {"meeting --", &line, Arc(P("1", '-'), P("2", '-')), Arc(P("2", '-'), P("3", '+')), true},
      {"meeting ++", &line, Arc(P("1", '-'), P("2", '+')), Arc(P("2", '+'), P("3", '+')), true},
      {"meeting +-", &line, Arc(P("1", '-'), P("2", '+')), Arc(P("2", '-'), P("3", '+')), true},
      // Shared endpoint: source of one and target of the other crosses; same role does not.
      {"shared, opposite roles 1", &q, Arc(P("-3/2", '-'), P("1/2", '+')), Arc(P("1/2", '+'), P("3/2", '+')), true},
      {"shared, opposite roles 2", &q, Arc(P("1/2", '+'), P("5/2", '+')), Arc(P("-1/2", '-'), P("1/2", '+')), true},
      {"shared, same role 1", &q, Arc(P("-3/2", '-'), P("1/2", '+')), Arc(P("-1/2", '-'), P("1/2", '+')), false},
      {"shared, same role 2", &q, Arc(P("1/2", '+'), P("5/2", '+')), Arc(P("1/2", '+'), P("3/2", '+')), false},
      // Both arcs span the two lanes: nested ends cross, parallel ends do not.
      {"spanning, nested", &q, Arc(P("-3/2", '+'), P("3/2", '+')), Arc(P("1/2", '+'), P("-1/2", '+')), true},
      {"spanning, parallel", &q, Arc(P("-3/2", '+'), P("-1/2", '+')), Arc(P("1/2", '+'), P("3/2", '+')), false},
      // One arc in each lane never cross, even when their positions interleave.
      {"opposite lanes", &q, Arc(P("-3/2", '-'), P("5/2", '+')), Arc(P("-5/2", '-'), P("3/2", '+')), false},
  };
  for (const auto& f : fx) {
    t.require(crossing(*f.quiver, f.a, f.b) == f.crossing, f.label);
    t.require(crossing(*f.quiver, f.b, f.a) == f.crossing, f.label + " (swapped)");
    Interval ma = phi_inverse(*f.quiver, f.a), mb = phi_inverse(*f.quiver, f.b);
    t.require(e_compatible(*f.quiver, ma, mb) == !f.crossing, f.label + " (compatibility)");
  }
  if (t.out.ok) t.out.detail = std::to_string(fx.size()) + " fixtures";
  return t.out;
}

Outcome symmetry() {
  Tally t;
  std::uint64_t seed = 300;
  for (const auto& [name, q] : quiver_fixtures()) {
    auto s = random_probes(Universe::Full, 20000, seed++, 5, 2);
    for (size_t k = 0; k < s.size(); k += 2) {
      Arc a = phi(q, s[k]), b = phi(q, s[k + 1]);
      t.require(crossing(q, a, b) == crossing(q, b, a), name + ": " + a.str() + " / " + b.str());
    }
    Quiver rq = q.reversed(), mq = q.mirrored();
    for (size_t k = 0; k < 2000; k += 2) {
      Arc a = phi(q, s[k]), b = phi(q, s[k + 1]);
      bool c = crossing(q, a, b);
      t.require(crossing(rq, reverse_arc(q, a), reverse_arc(q, b)) == c, name + " reversed: " + a.str() + " / " + b.str());
      t.require(crossing(mq, mirror_arc(q, a), mirror_arc(q, b)) == c, name + " mirrored: " + a.str() + " / " + b.str());
    }
  }
  return t.out;
}

Outcome transform_round_trip() {
  using namespace cta::transform;
  constexpr double pi = std::numbers::pi;
  Tally t;
  double worst = 0;
  // Interior grid: x across (0, 2 pi), y across the open slice of C_A above x.
  for (int i = 1; i <= 50; ++i) {
    double x = 2 * pi * i / 51.0;
    double lo = x - pi, hi = std::min(pi, x + pi);
    for (int j = 1; j <= 50; ++j) {
      StripPoint p{x, lo + (hi - lo) * j / 51.0};
      StripPoint q = f_inverse(f_map(p));
      worst = std::max({worst, std::fabs(q.x - p.x), std::fabs(q.y - p.y)});
    }
  }
  t.require(worst < 1e-9, "interior error " + std::to_string(worst));
  for (int k = 1; k <= 50; ++k) {
    double y = -pi + 2 * pi * k / 51.0;
    CCPoint c = f_map({0, y});
    t.require(std::isinf(c.a) && c.a < 0, "boundary point not sent to -inf");
    StripPoint q = f_inverse(c);
    t.require(q.x == 0 && std::fabs(q.y - y) < 1e-9, "boundary round trip");
  }
  if (t.out.ok) {
    std::ostringstream os;
    os << "max error " << worst;
    t.out.detail = os.str();
  }
  return t.out;
}

const std::vector<Interval>& embedding_probe_set() {
  static const std::vector<Interval> p = embed::embedding_probes(200, 23);
  return p;
}

Outcome commutative_diagram() {
  Tally t;
  size_t fixtures = 0;
  for (int m = 1; m <= 2; ++m)
    for (const auto& tri : enumerate_triangulations(m))
      for (int n = m + 1; n <= 4; ++n) {
        auto rep = embed::check_commutativity(tri, n, embedding_probe_set());
        for (const auto& leg : rep.legs)
          if (leg.name.rfind("G", 0) != 0) t.require(leg.ok, rep.fixture + " " + leg.name + " " + leg.witness);
        ++fixtures;
      }
  t.require(embedding_probe_set().size() >= 200, "probe set too small");
  if (t.out.ok) t.out.detail = std::to_string(fixtures) + " fixtures, " + std::to_string(embedding_probe_set().size()) + " probes";
  return t.out;
}

Outcome structure_diagram() {
  Tally t;
  const auto& probes = embedding_probe_set();
  for (int m = 1; m <= 2; ++m)
    for (const auto& tri : enumerate_triangulations(m))
      for (int n = m + 1; n <= 4; ++n) {
        auto rep = embed::check_commutativity(tri, n, probes);
        for (const auto& leg : rep.legs)
          if (leg.name.rfind("G", 0) == 0) t.require(leg.ok, rep.fixture + " " + leg.name + " " + leg.witness);
      }
  for (int n = 1; n <= 4; ++n)
    for (const auto& tri : enumerate_triangulations(n)) {
      auto g = embed::G_n_to_inf(tri);
      t.require(g.classify_fountains().locally_finite, "not locally finite: " + g.str());
      if (n > 2) continue;
      ClusterRep pi = embed::G_inf_to_pi(g);
      for (const Interval& x : pi.explicit_members) {
        bool ok = true;
        try {
          mutate(pi, x);
        } catch (const Error&) {
          ok = false;
        }
        t.require(ok, tri.str() + " explicit member frozen: " + x.str());
      }
      for (const Interval& x : sample_members(pi, 12, 3)) {
        bool ok = true;
        try {
          mutate(pi, x);
        } catch (const Error&) {
          ok = false;
        }
        t.require(ok, tri.str() + " family member frozen: " + x.str());
      }
    }
  return t.out;
}

Outcome completion_bounds() {
  Tally t;
  std::vector<GonTriangulation> fx;
  for (long v = -3; v <= 3; ++v)
    fx.push_back(GonTriangulation::infinite({}, {Tail::fan(v, TailSide::Left, v - 2), Tail::fan(v, TailSide::Right, v + 2)}));
  fx.push_back(GonTriangulation::infinite({{0, 3}, {0, 2}}, {Tail::fan(0, TailSide::Left, -2), Tail::fan(3, TailSide::Right, 5)}));
  fx.push_back(GonTriangulation::infinite({{-1, 1}}, {Tail::zigzag(2)}));
  for (int n = 1; n <= 3; ++n)
    for (const auto& tri : enumerate_triangulations(n)) {
      fx.push_back(embed::F_n_to_inf(tri));
      fx.push_back(embed::G_n_to_inf(tri));
    }
  t.require(fx.size() >= 20, "too few fixtures");
  for (const auto& f : fx) {
    auto c = embed::F_inf_to_infbar(f);
    t.require(c.adic_count() <= 2, "adic count " + c.str());
    t.require(c.prufer_count() <= 1, "Prufer count " + c.str());
    t.require((c.adic_count() > 0) == (c.prufer_count() > 0), "adic without Prufer " + c.str());
  }
  if (t.out.ok) t.out.detail = std::to_string(fx.size()) + " fixtures";
  return t.out;
}

Outcome continuous_suite() {
  using namespace cta::engine;
  Tally t;
  auto [mu1, mu2] = proj_to_inj_schedules();
  auto whole = compose_paths(schedule_path(mu1), schedule_path(mu2));
  struct Subject {
    std::string name;
    MutationPath path;
    ClusterRep source, target;
  };
  std::vector<Subject> subjects{{"mu1", schedule_path(mu1), mu1.source(), mu1.target()},
                                {"mu2", schedule_path(mu2), mu2.source(), mu2.target()},
                                {"proj->inj", whole, proj_cluster(), inj_cluster()}};
  size_t mutations = 0;
  for (const auto& s : subjects) {
    auto ends = random_probes(Universe::Full, 100, 77, 4, 3);
    t.require(!membership_difference(s.path(0.0, 0), s.source, ends), s.name + " start");
    t.require(!membership_difference(s.path(1.0, 1), s.target, ends), s.name + " end");
    for (int k = 0; k <= 20; ++k) {
      double time = k / 20.0;
      ClusterRep before = s.path(time, 0), after = s.path(time, 1);
      Step st = s.path.step(time);
      auto probes = random_probes(Universe::Full, 50, 1000 + k, 4, 3);
      if (!st.trivial) {
        probes.push_back(st.x);
        probes.push_back(st.y);
      }
      for (const auto* c : {&before, &after}) {
        auto pc = verify_prefix(*c, probes, 200, 5 + k);
        t.require(pc.ok, s.name + " t=" + std::to_string(time) + " prefix: " + pc.witness);
      }
      auto sc = verify_step(before, after, s.source, st, probes);
      t.require(sc.ok, s.name + " t=" + std::to_string(time) + " step " + st.str() + ": " + sc.witness);
      if (!st.trivial) ++mutations;
    }
  }
  // mu1 and mu2 at their endpoints and the path at the joint must agree.
  t.require(!membership_difference(proj_cluster(), mu1.source(), random_probes(Universe::Full, 100, 78, 4, 3)), "mu1 source is not proj");
  t.require(!membership_difference(inj_cluster(), mu2.target(), random_probes(Universe::Full, 100, 79, 4, 3)), "mu2 target is not inj");
  if (t.out.ok) t.out.detail = std::to_string(mutations) + " sampled mutations";
  return t.out;
}

Outcome time_warp() {
  Tally t;
  engine::TimeWarp w;
  auto p = w.at(5.0 / 8.0);
  t.require(p.i == 0, "i_s");
  t.require(std::fabs(p.a - 0.5) < 1e-12, "a_s");
  t.require(std::fabs(p.b - 0.75) < 1e-12, "b_s");
  t.require(std::fabs(p.t - 0.5) < 1e-12, "t_s");
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.i << ", " << p.a << ", " << p.b << ", " << p.t << ")";
  t.out.detail = t.out.ok ? os.str() : t.out.detail + " " + os.str();
  return t.out;
}

Outcome mutation_uniqueness() {
  Tally t;
  size_t flips = 0, mutations = 0;
  auto guard = [&](const std::string& what, const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      t.require(e.code() != ErrorCode::Ambiguous, what + ": " + e.what());
    }
  };
  for (int n = 1; n <= 5; ++n)
    for (const auto& tri : enumerate_triangulations(n))
      for (const auto& d : tri.explicit_part())
        guard(tri.str() + " flip " + d.str(), [&] {
          auto [t2, d2] = tri.flip(d);
          auto [t3, d3] = t2.flip(d2);
          t.require(t3 == tri && d3 == d, "flip is not an involution at " + d.str());
          ++flips;
        });
  std::vector<GonTriangulation> gons;
  for (long v = -1; v <= 1; ++v)
    gons.push_back(GonTriangulation::infinite({}, {Tail::fan(v, TailSide::Left, v - 2), Tail::fan(v, TailSide::Right, v + 2)}));
  gons.push_back(GonTriangulation::infinite({{-1, 1}}, {Tail::zigzag(2)}));
  for (int n = 1; n <= 2; ++n)
    for (const auto& tri : enumerate_triangulations(n)) gons.push_back(embed::G_n_to_inf(tri));
  size_t base = gons.size();
  for (size_t k = 0; k < base; ++k) gons.push_back(embed::F_inf_to_infbar(gons[k]));
  for (const auto& g : gons)
    for (const auto& d : g.members_in_window(6))
      guard(g.str() + " flip " + d.str(), [&] {
        auto [t2, d2] = g.flip(d);
        auto [t3, d3] = t2.flip(d2);
        t.require(same_on_window(t3, g, 12) && d3 == d, g.str() + " flip is not an involution at " + d.str());
        ++flips;
      });

  std::vector<ClusterRep> clusters{engine::proj_cluster(), engine::middle_cluster(), engine::inj_cluster(),
                                   embed::build_T_infinity(), embed::build_T_pi()};
  for (int n = 1; n <= 3; ++n)
    for (const auto& tri : enumerate_triangulations(n)) clusters.push_back(embed::F_n_to_R(tri));
  auto [mu1, mu2] = engine::proj_to_inj_schedules();
  for (double s : {0.3, 0.6}) clusters.push_back(engine::cluster_at(mu1, s, true));
  for (const auto& c : clusters) {
    std::vector<Interval> xs(c.explicit_members.begin(), c.explicit_members.end());
    for (const auto& x : sample_members(c, 6, 13)) xs.push_back(x);
    for (const auto& x : xs)
      guard(c.str() + " mutate " + x.str(), [&] {
        mutate(c, x);
        ++mutations;
      });
  }
  if (t.out.ok) t.out.detail = std::to_string(flips) + " flips, " + std::to_string(mutations) + " mutations";
  return t.out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"catalan-counts", catalan_counts},
      {"oracle-equivalence", oracle_equivalence},
      {"phi-round-trip", phi_round_trip},
      {"crossing-rule-fixtures", crossing_fixtures},
      {"symmetry-invariance", symmetry},
      {"transform-round-trip", transform_round_trip},
      {"commutative-diagram", commutative_diagram},
      {"structure-diagram", structure_diagram},
      {"completion-bounds", completion_bounds},
      {"continuous-mutation-suite", continuous_suite},
      {"time-warp-fixture", time_warp},
      {"mutation-uniqueness", mutation_uniqueness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::ostringstream os;
    os.precision(3);
    os << (o.ok ? "PASS " : "FAIL ") << c.name << " (" << std::fixed << secs << " s)";
    if (!o.detail.empty()) os << ": " << o.detail;
    std::cout << os.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
