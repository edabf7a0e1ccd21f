#include "cta/gon.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "cta/error.hpp"

namespace cta {

namespace {

bool finite_vertex(long v) { return v != kNegInfVertex && v != kPosInfVertex; }

std::string vertex_str(long v) {
  if (v == kNegInfVertex) return "-inf";
  if (v == kPosInfVertex) return "+inf";
  return std::to_string(v);
}

}  // namespace

std::string Diagonal::str() const { return vertex_str(i) + "~" + vertex_str(j); }

bool diag_crossing(const Diagonal& a, const Diagonal& b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

bool Tail::contains(const Diagonal& d) const {
  if (!finite_vertex(d.i) || !finite_vertex(d.j)) return false;
  if (kind == Kind::Fan) {
    if (side == TailSide::Left) return d.j == v && d.i <= start;
    return d.i == v && d.j >= start;
  }
  return d.j >= start && (d.i == -d.j || d.i == -d.j + 1);
}

std::vector<long> Tail::critical_vertices() const {
  if (kind == Kind::Fan) return {v, start, -v, -start};
  return {start, -start, start - 1, -start + 1};
}

std::vector<Diagonal> Tail::representatives(const std::vector<long>& critical) const {
  std::vector<long> crit;
  for (long c : critical)
    if (finite_vertex(c)) crit.push_back(c);
  std::set<long> idx;
  std::vector<Diagonal> out;
  if (kind == Kind::Fan) {
    const bool left = side == TailSide::Left;
    const long dir = left ? -1 : 1;
    long extreme = start;
    for (long d = 0; d <= 2; ++d) idx.insert(start + dir * d);
    for (long c : crit) {
      for (long d = -2; d <= 2; ++d) idx.insert(c + d);
      extreme = left ? std::min(extreme, c) : std::max(extreme, c);
    }
    idx.insert(extreme + dir * 3);
    for (long k : idx)
      if (left ? k <= start : k >= start) out.push_back(left ? Diagonal{k, v} : Diagonal{v, k});
    return out;
  }
  long extreme = start;
  for (long d = 0; d <= 2; ++d) idx.insert(start + d);
  for (long c : crit) {
    long a = c < 0 ? -c : c;
    for (long d = -2; d <= 3; ++d) idx.insert(a + d);
    extreme = std::max(extreme, a);
  }
  idx.insert(extreme + 3);
  for (long i : idx)
    if (i >= start) {
      out.push_back({-i, i});
      out.push_back({-i + 1, i});
    }
  return out;
}

bool Tail::crosses(const Diagonal& d) const {
  for (const Diagonal& r : representatives({d.i, d.j}))
    if (diag_crossing(r, d)) return true;
  return false;
}

bool Tail::crosses(const Tail& other) const {
  for (const Diagonal& r : representatives(other.critical_vertices()))
    if (other.crosses(r)) return true;
  for (const Diagonal& r : other.representatives(critical_vertices()))
    if (crosses(r)) return true;
  return false;
}

std::vector<Diagonal> Tail::members_in_window(long radius) const {
  std::vector<Diagonal> out;
  if (kind == Kind::Fan) {
    if (side == TailSide::Left)
      for (long k = std::min(start, radius); k >= -radius; --k) out.push_back({k, v});
    else
      for (long k = std::max(start, -radius); k <= radius; ++k) out.push_back({v, k});
    return out;
  }
  for (long i = start; i <= radius; ++i) {
    out.push_back({-i, i});
    out.push_back({-i + 1, i});
  }
  return out;
}

std::vector<Diagonal> Tail::peel() {
  if (kind == Kind::Fan) {
    if (side == TailSide::Left) return {{start--, v}};
    return {{v, start++}};
  }
  long s = start++;
  return {{-s, s}, {-s + 1, s}};
}

std::string Tail::str() const {
  if (kind == Kind::Zigzag) return "ZIGZAG(" + std::to_string(start) + ")";
  return "FAN(" + std::to_string(v) + "," + (side == TailSide::Left ? "LEFT" : "RIGHT") + "," + std::to_string(start) + ")";
}

std::string FountainClass::str() const {
  if (locally_finite) return "LOCALLY_FINITE";
  return "LEFT_RIGHT(" + std::to_string(left) + "," + std::to_string(right) + ")";
}

GonTriangulation GonTriangulation::finite(int n, std::vector<Diagonal> diagonals) {
  GonTriangulation t;
  t.arena_ = Arena::Finite;
  t.n_ = n;
  for (const auto& d : diagonals) {
    if (!t.valid_diagonal(d)) throw Error(ErrorCode::Domain, "invalid diagonal " + d.str() + " for n=" + std::to_string(n));
    t.explicit_.insert(d);
  }
  return t;
}

GonTriangulation GonTriangulation::infinite(std::vector<Diagonal> diagonals, std::vector<Tail> tails) {
  GonTriangulation t;
  t.arena_ = Arena::Infinite;
  for (const auto& d : diagonals) {
    if (!t.valid_diagonal(d)) throw Error(ErrorCode::Domain, "invalid diagonal " + d.str());
    t.explicit_.insert(d);
  }
  t.tails_ = std::move(tails);
  return t;
}

GonTriangulation GonTriangulation::completed(std::vector<Diagonal> diagonals, std::vector<Tail> tails) {
  GonTriangulation t;
  t.arena_ = Arena::Completed;
  for (const auto& d : diagonals) {
    if (!t.valid_diagonal(d)) throw Error(ErrorCode::Domain, "invalid diagonal " + d.str());
    t.explicit_.insert(d);
  }
  t.tails_ = std::move(tails);
  return t;
}

GonTriangulation GonTriangulation::as_completed() const {
  GonTriangulation t = *this;
  if (arena_ == Arena::Finite) throw Error(ErrorCode::Domain, "finite polygons have no completion");
  t.arena_ = Arena::Completed;
  return t;
}

bool GonTriangulation::valid_diagonal(const Diagonal& d) const {
  if (!(d.i < d.j)) return false;
  switch (arena_) {
    case Arena::Finite: return d.i >= 1 && d.j <= n_ + 3 && d.j - d.i >= 2 && d.j - d.i <= n_ + 1;
    case Arena::Infinite: return finite_vertex(d.i) && finite_vertex(d.j) && d.j - d.i >= 2;
    case Arena::Completed:
      if (d == kGenericDiagonal) return false;
      if (finite_vertex(d.i) && finite_vertex(d.j)) return d.j - d.i >= 2;
      return d.i != kPosInfVertex && d.j != kNegInfVertex;
  }
  return false;
}

bool GonTriangulation::contains(const Diagonal& d) const {
  if (explicit_.count(d)) return true;
  for (const auto& t : tails_)
    if (t.contains(d)) return true;
  return false;
}

bool GonTriangulation::crosses_member(const Diagonal& d, const Diagonal* skip) const {
  for (const auto& e : explicit_)
    if ((!skip || e != *skip) && diag_crossing(d, e)) return true;
  for (const auto& t : tails_)
    if (t.crosses(d)) return true;
  return false;
}

bool GonTriangulation::pairwise_noncrossing() const {
  for (auto a = explicit_.begin(); a != explicit_.end(); ++a) {
    for (auto b = std::next(a); b != explicit_.end(); ++b)
      if (diag_crossing(*a, *b)) return false;
    for (const auto& t : tails_)
      if (t.crosses(*a)) return false;
  }
  for (size_t i = 0; i < tails_.size(); ++i)
    for (size_t j = i + 1; j < tails_.size(); ++j)
      if (tails_[i].crosses(tails_[j])) return false;
  return true;
}

std::vector<Diagonal> GonTriangulation::window_diagonals(long radius) const {
  std::vector<Diagonal> out;
  long lo = arena_ == Arena::Finite ? 1 : -radius;
  long hi = arena_ == Arena::Finite ? n_ + 3 : radius;
  std::vector<long> verts;
  if (arena_ == Arena::Completed) verts.push_back(kNegInfVertex);
  for (long v = lo; v <= hi; ++v) verts.push_back(v);
  if (arena_ == Arena::Completed) verts.push_back(kPosInfVertex);
  for (size_t a = 0; a < verts.size(); ++a)
    for (size_t b = a + 1; b < verts.size(); ++b) {
      Diagonal d{verts[a], verts[b]};
      if (valid_diagonal(d)) out.push_back(d);
    }
  return out;
}

std::vector<Diagonal> GonTriangulation::members_in_window(long radius) const {
  std::vector<Diagonal> out;
  for (const auto& d : window_diagonals(radius))
    if (contains(d)) out.push_back(d);
  return out;
}

bool GonTriangulation::maximal_on_window(long radius) const {
  for (const auto& d : window_diagonals(radius))
    if (!contains(d) && !crosses_member(d)) return false;
  return true;
}

void GonTriangulation::materialize(const Diagonal& d) {
  while (!explicit_.count(d)) {
    bool moved = false;
    for (auto& t : tails_)
      if (t.contains(d)) {
        for (const auto& p : t.peel()) explicit_.insert(p);
        moved = true;
      }
    if (!moved) throw Error(ErrorCode::NotFound, d.str() + " is not a member");
  }
}

std::vector<long> GonTriangulation::critical_vertices() const {
  std::set<long> vs;
  for (const auto& d : explicit_) {
    if (finite_vertex(d.i)) vs.insert(d.i);
    if (finite_vertex(d.j)) vs.insert(d.j);
  }
  for (const auto& t : tails_)
    for (long c : t.critical_vertices()) vs.insert(c);
  return {vs.begin(), vs.end()};
}

std::pair<GonTriangulation, Diagonal> GonTriangulation::flip(const Diagonal& d) const {
  if (!contains(d)) throw Error(ErrorCode::NotFound, d.str() + " is not a member");
  GonTriangulation t = *this;
  t.materialize(d);
  std::set<long> verts;
  if (arena_ == Arena::Finite) {
    for (long v = 1; v <= n_ + 3; ++v) verts.insert(v);
  } else {
    std::vector<long> base = t.critical_vertices();
    for (long c : {d.i, d.j})
      if (finite_vertex(c)) base.push_back(c);
    for (long c : base)
      for (long k = -2; k <= 2; ++k) verts.insert(c + k);
    if (arena_ == Arena::Completed) {
      verts.insert(kNegInfVertex);
      verts.insert(kPosInfVertex);
    }
  }
  std::vector<Diagonal> found;
  for (auto a = verts.begin(); a != verts.end(); ++a)
    for (auto b = std::next(a); b != verts.end(); ++b) {
      Diagonal c{*a, *b};
      if (!t.valid_diagonal(c) || !diag_crossing(c, d) || t.contains(c)) continue;
      if (t.crosses_member(c, &d)) continue;
      found.push_back(c);
    }
  if (found.empty()) throw Error(ErrorCode::Frozen, d.str() + " has no replacement");
  if (found.size() > 1) throw Error(ErrorCode::Ambiguous, d.str() + " has several replacements");
  t.explicit_.erase(d);
  t.explicit_.insert(found.front());
  return {t, found.front()};
}

FountainClass GonTriangulation::classify_fountains() const {
  FountainClass fc;
  bool has_left = false, has_right = false;
  for (const auto& t : tails_) {
    if (t.kind != Tail::Kind::Fan) continue;
    if (t.side == TailSide::Left) {
      has_left = true;
      fc.left = t.v;
    } else {
      has_right = true;
      fc.right = t.v;
    }
  }
  if (has_left != has_right) throw Error(ErrorCode::Unsupported, "a single fountain side cannot bound a triangulation");
  fc.locally_finite = !has_left;
  return fc;
}

namespace {

std::pair<long, long> vertex_range(const std::vector<long>& crit) {
  long lo = 0, hi = 0;
  for (long c : crit) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return {lo - 3, hi + 3};
}

}  // namespace

GonTriangulation GonTriangulation::adic_completion() const {
  GonTriangulation t = arena_ == Arena::Completed ? *this : as_completed();
  auto [lo, hi] = vertex_range(critical_vertices());
  std::vector<Diagonal> add;
  for (long j = lo; j <= hi; ++j) {
    Diagonal a{kNegInfVertex, j};
    if (!contains(a) && !crosses_member(a)) add.push_back(a);
  }
  for (const auto& a : add) t.explicit_.insert(a);
  return t;
}

GonTriangulation GonTriangulation::prufer_completion() const {
  GonTriangulation t = arena_ == Arena::Completed ? *this : as_completed();
  auto [lo, hi] = vertex_range(critical_vertices());
  std::vector<Diagonal> add;
  for (long i = lo; i <= hi; ++i) {
    Diagonal p{i, kPosInfVertex};
    if (!t.contains(p) && !t.crosses_member(p)) add.push_back(p);
  }
  for (const auto& p : add) t.explicit_.insert(p);
  return t;
}

size_t GonTriangulation::adic_count() const {
  return std::count_if(explicit_.begin(), explicit_.end(), [](const Diagonal& d) { return d.is_adic(); });
}

size_t GonTriangulation::prufer_count() const {
  return std::count_if(explicit_.begin(), explicit_.end(), [](const Diagonal& d) { return d.is_prufer(); });
}

std::string GonTriangulation::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& d : explicit_) {
    os << (first ? "" : ", ") << d.str();
    first = false;
  }
  os << "}";
  for (const auto& t : tails_) os << " + " << t.str();
  return os.str();
}

bool same_on_window(const GonTriangulation& a, const GonTriangulation& b, long radius) {
  if (a.arena_ != b.arena_) return false;
  return a.members_in_window(radius) == b.members_in_window(radius);
}

bool operator==(const GonTriangulation& a, const GonTriangulation& b) {
  return a.arena_ == b.arena_ && a.n_ == b.n_ && a.explicit_ == b.explicit_ && a.tails_ == b.tails_;
}

std::vector<GonTriangulation> enumerate_triangulations(int n) {
  if (n < 1) throw Error(ErrorCode::Domain, "n must be at least 1");
  if (n > 9) throw Error(ErrorCode::LimitExceeded, "enumeration is capped at n = 9");
  const long N = n + 3;
  using Set = std::vector<Diagonal>;
  std::map<std::pair<long, long>, std::vector<Set>> memo;
  // Triangulations of the sub-polygon a, a+1, ..., b (its side a~b excluded).
  std::function<const std::vector<Set>&(long, long)> sub = [&](long a, long b) -> const std::vector<Set>& {
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Set> out;
    if (b - a < 2) {
      out.push_back({});
    } else {
      for (long k = a + 1; k < b; ++k) {
        for (const Set& l : sub(a, k))
          for (const Set& r : sub(k, b)) {
            Set s = l;
            s.insert(s.end(), r.begin(), r.end());
            if (k - a >= 2) s.push_back({a, k});
            if (b - k >= 2) s.push_back({k, b});
            out.push_back(std::move(s));
          }
      }
    }
    return memo[key] = std::move(out);
  };
  std::vector<Set> all = sub(1, N);
  for (auto& s : all) std::sort(s.begin(), s.end());
  std::sort(all.begin(), all.end());
  std::vector<GonTriangulation> res;
  res.reserve(all.size());
  for (auto& s : all) res.push_back(GonTriangulation::finite(n, s));
  return res;
}

ExchangeGraph exchange_graph(int n) {
  ExchangeGraph g;
  g.n = n;
  g.nodes = enumerate_triangulations(n);
  std::map<std::set<Diagonal>, size_t> index;
  for (size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i].explicit_part()] = i;
  g.adjacency.resize(g.nodes.size());
  for (size_t i = 0; i < g.nodes.size(); ++i)
    for (const auto& d : g.nodes[i].explicit_part()) {
      auto flipped = g.nodes[i].flip(d).first;
      g.adjacency[i].push_back(index.at(flipped.explicit_part()));
    }
  return g;
}

std::string ExchangeGraph::dot() const {
  std::ostringstream os;
  os << "graph exchange_" << n << " {\n";
  for (size_t i = 0; i < nodes.size(); ++i) {
    os << "  " << i << " [label=\"";
    bool first = true;
    for (const auto& d : nodes[i].explicit_part()) {
      os << (first ? "" : " ") << d.i << "-" << d.j;
      first = false;
    }
    os << "\"];\n";
  }
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j : adjacency[i])
      if (i < j) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<size_t> ExchangeGraph::distances(size_t from) const {
  std::vector<size_t> dist(nodes.size(), SIZE_MAX);
  std::deque<size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    size_t u = queue.front();
    queue.pop_front();
    for (size_t v : adjacency[u])
      if (dist[v] == SIZE_MAX) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace cta
