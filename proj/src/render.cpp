#include "cta/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "cta/arc.hpp"
#include "cta/error.hpp"

namespace cta::render {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Item {
  std::string id, label, role;
  bool is_mutable = false;
  Interval m;
};

// Evenly spaced subset of at most k elements, first element kept.
template <class T>
std::vector<T> thin(const std::vector<T>& v, size_t k) {
  if (v.size() <= k) return v;
  std::vector<T> out;
  for (size_t i = 0; i < k; ++i) out.push_back(v[i * v.size() / k]);
  return out;
}

std::vector<Item> collect(const ClusterRep& c, const Style& st) {
  std::vector<Item> items;
  auto can_mutate = [&](const Interval& m) {
    if (!st.mark_mutable) return false;
    try {
      mutate(c, m);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  size_t k = 0;
  for (const auto& m : c.explicit_members)
    items.push_back(Item{"m" + std::to_string(k++), m.str(), "member", can_mutate(m), m});
  for (size_t f = 0; f < c.families.size(); ++f) {
    auto reps = thin(c.families[f].truncation(st.family_radius, st.family_depth), st.max_family_arcs);
    for (size_t j = 0; j < reps.size(); ++j) {
      if (c.explicit_members.count(reps[j])) continue;
      items.push_back(Item{"f" + std::to_string(f) + "-" + std::to_string(j), reps[j].str(), "family",
                           can_mutate(reps[j]), reps[j]});
    }
  }
  if (st.highlight) {
    items.push_back(Item{"old", st.highlight->first.str(), "old", false, st.highlight->first});
    items.push_back(Item{"new", st.highlight->second.str(), "new", false, st.highlight->second});
  }
  return items;
}

std::string half_ellipse(double x1, double x2, double base, double k) {
  if (x2 < x1) std::swap(x1, x2);
  double rx = (x2 - x1) / 2;
  double ry = rx * k;
  return "M " + num(x1) + " " + num(base) + " A " + num(rx) + " " + num(ry) + " 0 0 1 " + num(x2) + " " + num(base);
}

Layout straight_layout(const ClusterRep& c, const Style& st) {
  Layout L;
  L.width = st.width;
  L.height = st.height;
  L.kind = "straight";
  const double base = st.height - kMargin;
  const double span = st.width - 2 * kMargin;
  const double k = std::min(1.0, (base - 20) / (span / 2));
  auto xpos = [&](const Endpoint& e) {
    switch (e.kind) {
      case Endpoint::Kind::NegInf: return kMargin;
      case Endpoint::Kind::PosInf: return st.width - kMargin;
      default: {
        double x = kMargin + span * (std::atan(e.x.get_d() / st.scale) / kPi + 0.5);
        return x + (e.side == Sign::Minus ? -2.0 : 2.0);
      }
    }
  };
  L.boundary = "M " + num(kMargin) + " " + num(base) + " L " + num(st.width - kMargin) + " " + num(base);
  L.marks.push_back({"-inf", kMargin, base + 18});
  L.marks.push_back({"+inf", st.width - kMargin, base + 18});
  for (long v : {-1L, 0L, 1L}) L.marks.push_back({std::to_string(v), xpos(Endpoint::point(Rational(v), Sign::Plus)) - 2, base + 18});

  std::map<std::string, std::pair<double, std::string>> widest;  // family -> (span, d)
  for (const auto& it : collect(c, st)) {
    Arc a = phi(c.quiver, it.m);
    double x1 = xpos(a.a), x2 = xpos(a.b);
    if (x2 < x1) std::swap(x1, x2);
    ArcShape s{it.id, it.label, it.role, it.is_mutable, x1, base, x2, base, half_ellipse(x1, x2, base, k)};
    L.arcs.push_back(s);
    if (it.role == "family") {
      std::string fam = it.id.substr(0, it.id.find('-'));
      auto& w = widest[fam];
      if (x2 - x1 > w.first) w = {x2 - x1, s.d + " Z"};
    }
  }
  for (size_t f = 0; f < c.families.size(); ++f) {
    auto it = widest.find("f" + std::to_string(f));
    if (it != widest.end()) L.bands.push_back({"band-f" + std::to_string(f), c.families[f].str(), it->second.second});
  }
  return L;
}

// Two lanes drawn as polylines between a shared left and right corner; segment
// endpoints of a lane are its corners and point endpoints sit on the edges between.
Layout general_layout(const ClusterRep& c, const Style& st) {
  const Quiver& q = c.quiver;
  Layout L;
  L.width = st.width;
  L.height = st.height;
  L.kind = "general";
  auto items = collect(c, st);
  std::vector<Arc> arcs;
  for (const auto& it : items) arcs.push_back(phi(q, it.m));

  const long first = q.neg_slot(), last = q.pos_slot() - 1;
  const double span = st.width - 2 * kMargin;
  auto corner_x = [&](long n) { return kMargin + span * static_cast<double>(n - first) / static_cast<double>(std::max(1L, last - first)); };
  const double mid = st.height / 2.0, top = kMargin, bottom = st.height - kMargin;

  std::map<std::string, std::pair<double, double>> pos;  // endpoint str -> point
  for (Lane lane : {Lane::Down, Lane::Up}) {
    std::vector<Endpoint> es;
    for (long n = first; n <= last; ++n)
      for (Sign s : {Sign::Minus, Sign::Plus}) {
        Endpoint e = Endpoint::segment(n, s);
        if (lane_of(q, e) == lane) es.push_back(e);
      }
    for (const auto& a : arcs)
      for (const Endpoint& e : {a.a, a.b})
        if (e.kind == Endpoint::Kind::Point && lane_of(q, e) == lane) es.push_back(e);
    std::sort(es.begin(), es.end(), [&](const Endpoint& x, const Endpoint& y) { return endpoint_compare(q, x, y) < 0; });
    es.erase(std::unique(es.begin(), es.end()), es.end());

    // Polyline vertices: shared extremes plus this lane's segment corners.
    double lane_y = lane == Lane::Down ? bottom : top;
    std::vector<std::pair<double, double>> verts{{kMargin, mid}};
    std::vector<long> vert_seg{first};
    for (const auto& e : es)
      if (e.kind == Endpoint::Kind::Segment && e.n != first && e.n != last && (vert_seg.back() != e.n)) {
        verts.push_back({corner_x(e.n), lane_y});
        vert_seg.push_back(e.n);
      }
    verts.push_back({st.width - kMargin, mid});
    vert_seg.push_back(last);

    std::string d = "M " + num(verts[0].first) + " " + num(verts[0].second);
    for (size_t i = 1; i < verts.size(); ++i) d += " L " + num(verts[i].first) + " " + num(verts[i].second);
    L.boundary += (L.boundary.empty() ? "" : " ") + d;
    for (size_t i = 0; i < verts.size(); ++i) {
      long n = vert_seg[i];
      if (i > 0 && i + 1 < verts.size())
        L.marks.push_back({"|s" + std::to_string(n) + ",s" + std::to_string(n + 1) + "|", verts[i].first,
                           lane == Lane::Down ? verts[i].second + 18 : verts[i].second - 8});
    }

    // Walk the lane: corners snap to their vertex, points fill the edges evenly.
    size_t v = 0;
    std::vector<Endpoint> pending;
    auto flush = [&](size_t to) {
      for (size_t r = 0; r < pending.size(); ++r) {
        double f = static_cast<double>(r + 1) / static_cast<double>(pending.size() + 1);
        auto [x0, y0] = verts[v];
        auto [x1, y1] = verts[to];
        pos[pending[r].str()] = {x0 + f * (x1 - x0), y0 + f * (y1 - y0)};
      }
      pending.clear();
    };
    for (const auto& e : es) {
      if (e.kind == Endpoint::Kind::Segment) {
        size_t w = static_cast<size_t>(std::find(vert_seg.begin(), vert_seg.end(), e.n) - vert_seg.begin());
        if (w > v) {
          flush(w);
          v = w;
        }
        auto [x, y] = verts[v];
        pos[e.str()] = {x + (e.side == Sign::Minus ? -3.0 : 3.0), y};
      } else {
        pending.push_back(e);
      }
    }
    flush(verts.size() - 1);
  }
  L.marks.push_back({"|s" + std::to_string(first) + ",s" + std::to_string(first + 1) + "|", kMargin, mid - 10});
  L.marks.push_back({"|s" + std::to_string(last) + ",s" + std::to_string(last + 1) + "|", st.width - kMargin, mid - 10});

  for (size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    auto p1 = pos.at(arcs[i].a.str());
    auto p2 = pos.at(arcs[i].b.str());
    std::string d = "M " + num(p1.first) + " " + num(p1.second) + " L " + num(p2.first) + " " + num(p2.second);
    L.arcs.push_back({it.id, it.label, it.role, it.is_mutable, p1.first, p1.second, p2.first, p2.second, d});
  }
  return L;
}

}  // namespace

Layout layout_cluster(const ClusterRep& c, const Style& style) {
  return c.quiver.is_straight() ? straight_layout(c, style) : general_layout(c, style);
}

Layout layout_gon(const GonTriangulation& t, const Style& st) {
  Layout L;
  L.width = st.width;
  L.height = st.height;
  if (t.arena() == Arena::Finite) {
    L.kind = "polygon";
    const int N = t.n() + 3;
    const double cx = st.width / 2.0, cy = st.height / 2.0;
    const double r = std::min(st.width, st.height) / 2.0 - kMargin;
    auto vx = [&](long v) { return cx + r * std::cos(-kPi / 2 + 2 * kPi * static_cast<double>(v - 1) / N); };
    auto vy = [&](long v) { return cy + r * std::sin(-kPi / 2 + 2 * kPi * static_cast<double>(v - 1) / N); };
    for (long v = 1; v <= N; ++v) {
      L.boundary += (v == 1 ? "M " : " L ") + num(vx(v)) + " " + num(vy(v));
      double lx = cx + (r + 16) * std::cos(-kPi / 2 + 2 * kPi * static_cast<double>(v - 1) / N);
      double ly = cy + (r + 16) * std::sin(-kPi / 2 + 2 * kPi * static_cast<double>(v - 1) / N);
      L.marks.push_back({std::to_string(v), lx, ly});
    }
    L.boundary += " Z";
    for (const auto& d : t.explicit_part()) {
      std::string id = "d" + std::to_string(d.i) + "_" + std::to_string(d.j);
      L.arcs.push_back({id, d.str(), "member", st.mark_mutable, vx(d.i), vy(d.i), vx(d.j), vy(d.j),
                        "M " + num(vx(d.i)) + " " + num(vy(d.i)) + " L " + num(vx(d.j)) + " " + num(vy(d.j))});
    }
    return L;
  }
  L.kind = "gon";
  const long R = st.gon_radius;
  const double base = st.height - kMargin;
  const double inner = st.width - 2 * kMargin - 80;
  const double k = std::min(1.0, (base - 20) / ((st.width - 2 * kMargin) / 2));
  auto vx = [&](long v) {
    if (v == kNegInfVertex) return kMargin;
    if (v == kPosInfVertex) return st.width - kMargin;
    return kMargin + 40 + inner * static_cast<double>(v + R) / static_cast<double>(2 * R);
  };
  L.boundary = "M " + num(kMargin) + " " + num(base) + " L " + num(st.width - kMargin) + " " + num(base);
  for (long v = -R; v <= R; ++v) L.marks.push_back({std::to_string(v), vx(v), base + 18});
  if (t.arena() == Arena::Completed) {
    L.marks.push_back({"-inf", vx(kNegInfVertex), base + 18});
    L.marks.push_back({"+inf", vx(kPosInfVertex), base + 18});
  }
  for (const auto& d : t.members_in_window(R)) {
    bool mut = false;
    if (st.mark_mutable) {
      try {
        t.flip(d);
        mut = true;
      } catch (const Error&) {
        mut = false;
      }
    }
    auto tag = [](long v) {
      return v == kNegInfVertex ? std::string("ninf") : v == kPosInfVertex ? std::string("pinf") : std::to_string(v);
    };
    L.arcs.push_back({"d" + tag(d.i) + "_" + tag(d.j), d.str(), t.explicit_part().count(d) ? "member" : "family", mut,
                      vx(d.i), base, vx(d.j), base, half_ellipse(vx(d.i), vx(d.j), base, k)});
  }
  return L;
}

std::string to_svg(const Layout& L) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << L.width << "\" height=\"" << L.height
     << "\" viewBox=\"0 0 " << L.width << " " << L.height << "\" data-kind=\"" << L.kind << "\">\n";
  os << "<style>"
        ".boundary{fill:none;stroke:#000;stroke-width:1.5}"
        ".band{fill:#bbb;fill-opacity:0.35;stroke:none}"
        ".arc{fill:none;stroke:#333;stroke-width:1}"
        ".family{stroke:#777;stroke-width:0.6}"
        ".mutable{stroke:#1f5fbf;stroke-width:1.6}"
        ".old{stroke:#c0392b;stroke-width:2}"
        ".new{stroke:#c0392b;stroke-width:2;stroke-dasharray:6 4}"
        "text{font:11px sans-serif;text-anchor:middle}"
        "</style>\n";
  os << "<path class=\"boundary\" d=\"" << L.boundary << "\"/>\n";
  for (const auto& b : L.bands)
    os << "<path id=\"" << b.id << "\" class=\"band\" d=\"" << b.d << "\"><title>" << escape(b.label)
       << "</title></path>\n";
  for (const auto& a : L.arcs) {
    os << "<path id=\"" << a.id << "\" class=\"arc " << a.role << (a.is_mutable ? " mutable" : "") << "\" d=\"" << a.d
       << "\"><title>" << escape(a.label) << "</title></path>\n";
  }
  for (const auto& m : L.marks)
    os << "<text x=\"" << num(m.x) << "\" y=\"" << num(m.y) << "\">" << escape(m.label) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_arcs(const ClusterRep& c, const Style& style) { return to_svg(layout_cluster(c, style)); }
std::string render_gon(const GonTriangulation& t, const Style& style) { return to_svg(layout_gon(t, style)); }

std::vector<double> frame_times(int frames) {
  if (frames < 2) throw Error(ErrorCode::Domain, "an animation needs at least 2 frames");
  std::vector<double> ts;
  for (int k = 0; k < frames; ++k) ts.push_back(static_cast<double>(k) / (frames - 1));
  return ts;
}

ClusterRep frame_cluster(const engine::MutationPath& p, double s) { return p(s, s > 0.0 ? 1 : 0); }

std::vector<std::string> render_animation(const engine::MutationPath& p, int frames, const Style& style) {
  Style st = style;
  st.mark_mutable = false;
  std::vector<std::string> out;
  for (double s : frame_times(frames)) {
    Layout L = layout_cluster(frame_cluster(p, s), st);
    char buf[32];
    std::snprintf(buf, sizeof buf, "t=%.3g", s);
    L.marks.push_back({buf, L.width / 2.0, 16});
    out.push_back(to_svg(L));
  }
  return out;
}

}  // namespace cta::render
