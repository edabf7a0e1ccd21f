#ifndef CTA_RENDER_HPP
#define CTA_RENDER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cta/cluster_rep.hpp"
#include "cta/gon.hpp"
#include "cta/mutation_engine.hpp"

namespace cta::render {

struct Style {
  int width = 800;
  int height = 420;
  // Straight layout: x sits at atan(x / scale), so the whole line fits.
  double scale = 1.0;
  unsigned family_depth = 4;
  long family_radius = 4;
  size_t max_family_arcs = 40;
  bool mark_mutable = true;
  // Old arc drawn solid, new arc dashed.
  std::optional<std::pair<Interval, Interval>> highlight;
  long gon_radius = 8;
};

struct ArcShape {
  std::string id;
  std::string label;
  // member, family, old or new
  std::string role = "member";
  bool is_mutable = false;
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  std::string d;
};

struct Band {
  std::string id;
  std::string label;
  std::string d;
};

struct Mark {
  std::string label;
  double x = 0, y = 0;
};

// Geometry shared by the SVG writer and the session service. Arcs appear in a fixed
// order: explicit members (interval order), then family representatives by family.
struct Layout {
  int width = 0, height = 0;
  std::string kind;  // straight, general, polygon or gon
  std::string boundary;
  std::vector<Mark> marks;
  std::vector<Band> bands;
  std::vector<ArcShape> arcs;
};

Layout layout_cluster(const ClusterRep& c, const Style& style = {});
Layout layout_gon(const GonTriangulation& t, const Style& style = {});
std::string to_svg(const Layout& layout);

std::string render_arcs(const ClusterRep& c, const Style& style = {});
std::string render_gon(const GonTriangulation& t, const Style& style = {});

// k frames at s = 0, 1/(k-1), ..., 1; DOMAIN for k < 2.
std::vector<double> frame_times(int frames);
ClusterRep frame_cluster(const engine::MutationPath& p, double s);
std::vector<std::string> render_animation(const engine::MutationPath& p, int frames = 6, const Style& style = {});

}  // namespace cta::render

#endif
