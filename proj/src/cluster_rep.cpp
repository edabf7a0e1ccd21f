#include "cta/cluster_rep.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cta/arc.hpp"
#include "cta/error.hpp"

namespace cta {

bool in_universe(Universe u, const Interval& m) {
  if (u == Universe::Full) return true;
  return !m.lo_in() && !m.hi_in() && m.hi().is_finite() && m.lo() < m.hi();
}

bool ClusterRep::member(const Interval& m) const {
  if (explicit_members.count(m)) return true;
  return std::any_of(families.begin(), families.end(), [&](const Family& f) { return f.contains(m); });
}

std::optional<std::string> ClusterRep::conflict(const Interval& m) const {
  for (const Interval& e : explicit_members)
    if (e != m && !e_compatible(quiver, e, m)) return e.str();
  for (const Family& f : families) {
    if (f.contains(m)) {
      // m itself is a member; test against the rest of its family.
      Family rest = f;
      rest.excluded.insert(m);
      if (!compatible_with_family(quiver, m, rest)) return f.str();
    } else if (!compatible_with_family(quiver, m, f)) {
      return f.str();
    }
  }
  return std::nullopt;
}

ClusterRep ClusterRep::with(const Interval& m) const {
  ClusterRep out = *this;
  for (Family& f : out.families)
    if (f.excluded.erase(m)) {
      if (f.contains(m)) return out;
      f.excluded.insert(m);
    }
  out.explicit_members.insert(m);
  return out;
}

ClusterRep ClusterRep::without(const Interval& m) const {
  ClusterRep out = *this;
  out.explicit_members.erase(m);
  for (Family& f : out.families)
    if (f.contains(m)) f.excluded.insert(m);
  return out;
}

ClusterRep ClusterRep::promote(const Interval& m) const {
  if (explicit_members.count(m)) return *this;
  if (!member(m)) throw Error(ErrorCode::Domain, m.str() + " is not a member");
  ClusterRep out = without(m);
  out.explicit_members.insert(m);
  return out;
}

std::string ClusterRep::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const Interval& e : explicit_members) {
    os << (first ? "" : ", ") << e.str();
    first = false;
  }
  for (const Family& f : families) {
    os << (first ? "" : ", ") << f.str();
    first = false;
  }
  os << "}";
  return os.str();
}

InternalCheck check_internal(const ClusterRep& c) {
  const std::vector<Interval> ex(c.explicit_members.begin(), c.explicit_members.end());
  for (size_t i = 0; i < ex.size(); ++i)
    for (size_t j = i + 1; j < ex.size(); ++j)
      if (!e_compatible(c.quiver, ex[i], ex[j])) return {false, ex[i].str() + " vs " + ex[j].str()};
  for (const Interval& e : ex)
    for (const Family& f : c.families) {
      Family rest = f;
      rest.excluded.insert(e);
      if (!compatible_with_family(c.quiver, e, rest)) return {false, e.str() + " vs " + f.str()};
    }
  for (size_t i = 0; i < c.families.size(); ++i)
    for (size_t j = i; j < c.families.size(); ++j)
      if (!families_compatible(c.quiver, c.families[i], c.families[j]))
        return {false, c.families[i].str() + " vs " + c.families[j].str()};
  return {};
}

std::optional<Interval> probe_failure(const ClusterRep& c, const std::vector<Interval>& probes) {
  for (const Interval& p : probes) {
    if (!in_universe(c.universe, p) || c.member(p)) continue;
    if (c.compatible_with_all(p)) return p;
  }
  return std::nullopt;
}

bool probe_maximal(const ClusterRep& c, const std::vector<Interval>& probes) { return !probe_failure(c, probes); }

std::vector<ExtRational> mutation_points(const ClusterRep& c, const Interval& x) {
  std::vector<Rational> ends;
  if (x.lo().is_finite()) ends.push_back(x.lo().value());
  if (x.hi().is_finite() && x.hi() != x.lo()) ends.push_back(x.hi().value());
  std::set<ExtRational> pts(ends.begin(), ends.end());
  for (const Interval& e : c.explicit_members) {
    bool shares = false;
    for (const Rational& v : ends) shares = shares || e.lo() == ExtRational(v) || e.hi() == ExtRational(v);
    if (!shares) continue;
    if (e.lo().is_finite()) pts.insert(e.lo());
    if (e.hi().is_finite()) pts.insert(e.hi());
  }
  for (const Family& f : c.families)
    for (const ExtRational& p : f.nearby_points(ends)) pts.insert(p);
  pts.insert(ExtRational::neg_inf());
  if (c.universe == Universe::Full) pts.insert(ExtRational::pos_inf());
  return {pts.begin(), pts.end()};
}

std::vector<Interval> intervals_on(const std::vector<ExtRational>& raw, Universe u) {
  std::vector<ExtRational> pts = raw;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Interval> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (u == Universe::Full && pts[i].is_finite()) out.push_back(Interval::singleton(pts[i].value()));
    for (size_t j = i + 1; j < pts.size(); ++j) {
      const ExtRational& a = pts[i];
      const ExtRational& b = pts[j];
      if (u == Universe::OpenIntervals) {
        if (b.is_finite()) out.push_back(Interval::open(a, b));
        continue;
      }
      for (int lo_in = 0; lo_in <= (a.is_finite() ? 1 : 0); ++lo_in)
        for (int hi_in = 0; hi_in <= (b.is_finite() ? 1 : 0); ++hi_in) out.emplace_back(a, lo_in != 0, b, hi_in != 0);
    }
  }
  return out;
}

std::vector<Interval> default_candidates(const ClusterRep& c, const Interval& x) {
  return intervals_on(mutation_points(c, x), c.universe);
}

MutationResult mutate(const ClusterRep& c0, const Interval& x, const CandidateGenerator& gen) {
  if (!c0.member(x)) throw Error(ErrorCode::Domain, x.str() + " is not a member of the cluster");
  const ClusterRep c = c0.promote(x);
  ClusterRep base = c;
  base.explicit_members.erase(x);
  const std::vector<Interval> pool = gen(c, x);
  // Pool members compatible with everything but x: the only probes that could witness non-maximality.
  std::vector<Interval> open_slots;
  for (const Interval& p : pool)
    if (in_universe(c.universe, p) && !base.member(p) && base.compatible_with_all(p)) open_slots.push_back(p);
  std::vector<Interval> found;
  for (const Interval& y : open_slots) {
    if (y == x || e_compatible(c.quiver, x, y)) continue;
    bool maximal = true;
    for (const Interval& p : open_slots)
      if (p != y && e_compatible(c.quiver, p, y)) {
        maximal = false;
        break;
      }
    if (maximal) found.push_back(y);
  }
  if (found.empty()) throw Error(ErrorCode::Frozen, x.str() + " has no exchange partner among " + std::to_string(pool.size()) + " candidates");
  if (found.size() > 1)
    throw Error(ErrorCode::Ambiguous, x.str() + " has exchange partners " + found[0].str() + " and " + found[1].str());
  return {c0.without(x).with(found[0]), found[0]};
}

std::vector<Interval> random_probes(Universe u, size_t count, std::uint64_t seed, long radius, unsigned depth) {
  std::mt19937_64 rng(seed);
  const long n = radius << depth;
  std::uniform_int_distribution<long> pick(-n, n);
  std::uniform_int_distribution<int> coin(0, 9);
  auto point = [&]() {
    Rational x(pick(rng), 1L << depth);
    x.canonicalize();
    return x;
  };
  std::vector<Interval> out;
  while (out.size() < count) {
    int kind = coin(rng);
    ExtRational a = point(), b = point();
    if (b < a) std::swap(a, b);
    if (kind == 0) a = ExtRational::neg_inf();
    if (kind == 1 && u == Universe::Full) b = ExtRational::pos_inf();
    if (u == Universe::OpenIntervals) {
      if (a < b) out.push_back(Interval::open(a, b));
      continue;
    }
    if (kind == 2 || a == b) {
      if (a.is_finite()) out.push_back(Interval::singleton(a.value()));
      continue;
    }
    bool lo_in = a.is_finite() && coin(rng) < 5;
    bool hi_in = b.is_finite() && coin(rng) < 5;
    out.emplace_back(a, lo_in, b, hi_in);
  }
  return out;
}

std::vector<Interval> sample_members(const ClusterRep& c, size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<Interval> ex(c.explicit_members.begin(), c.explicit_members.end());
  const size_t buckets = ex.size() + c.families.size();
  std::vector<Interval> out;
  if (buckets == 0) return out;
  std::uniform_int_distribution<size_t> pick(0, buckets - 1);
  while (out.size() < count) {
    size_t k = pick(rng);
    out.push_back(k < ex.size() ? ex[k] : c.families[k - ex.size()].sample(rng));
  }
  return out;
}

std::optional<Interval> membership_difference(const ClusterRep& a, const ClusterRep& b, const std::vector<Interval>& probes) {
  for (const Interval& p : probes)
    if (a.member(p) != b.member(p)) return p;
  return std::nullopt;
}

}  // namespace cta
