// Command-line front end. Every subcommand prints plain text, or JSON with --json.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cta/arc.hpp"
#include "cta/embeddings.hpp"
#include "cta/error.hpp"
#include "cta/gon.hpp"
#include "cta/mutation_engine.hpp"
#include "cta/render.hpp"
#include "cta/serialize.hpp"
#include "cta/service.hpp"
#include "cta/transforms.hpp"

using namespace cta;
using io::Json;

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::NotFound, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

std::vector<Rational> rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  return out;
}

long vertex(const std::string& s) {
  if (s == "-inf") return kNegInfVertex;
  if (s == "+inf") return kPosInfVertex;
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::Parse, "bad vertex " + s);
}

// "i~j" with integer or +-inf vertices.
Diagonal diagonal(const std::string& s) {
  size_t cut = s.find('~');
  if (cut == std::string::npos) throw Error(ErrorCode::Parse, "diagonal must look like i~j: " + s);
  return Diagonal{vertex(s.substr(0, cut)), vertex(s.substr(cut + 1))};
}

void emit(bool json, const Json& j, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::string quiver_text(const Quiver& q) {
  if (q.is_straight())
    return std::string("straight, ") + (q.direction() == Direction::Descending ? "descending" : "ascending");
  std::string s;
  for (const auto& m : q.markers())
    s += (s.empty() ? "" : " ") + std::string(m.kind == MarkerKind::Sink ? "sink@" : "source@") + format_rational(m.pos);
  return s;
}

// Chain stages: "m:K" names the input polygon, then n:K, inf, infbar, R, pi.
Json run_chain(const std::string& chain, const GonTriangulation& input) {
  std::vector<std::string> stages;
  for (size_t p = 0;;) {
    size_t q = chain.find("->", p);
    stages.push_back(chain.substr(p, q == std::string::npos ? std::string::npos : q - p));
    if (q == std::string::npos) break;
    p = q + 2;
  }
  Json report = Json::array();
  GonTriangulation t = input;
  std::optional<ClusterRep> cluster;
  for (size_t k = 0; k < stages.size(); ++k) {
    const std::string& s = stages[k];
    if (cluster) throw Error(ErrorCode::Domain, "stage " + s + " follows a continuous stage");
    if (s.rfind("m:", 0) == 0) {
      if (k != 0) throw Error(ErrorCode::Parse, "m:K must open the chain");
      int m = std::stoi(s.substr(2));
      if (t.arena() != Arena::Finite || t.n() != m)
        throw Error(ErrorCode::Mismatch, "input is not a triangulation of the " + std::to_string(m + 3) + "-gon");
    } else if (s.rfind("n:", 0) == 0) {
      t = embed::F_m_to_n(t, std::stoi(s.substr(2)));
    } else if (s == "inf") {
      t = embed::F_n_to_inf(t);
    } else if (s == "infbar") {
      t = embed::F_inf_to_infbar(t);
    } else if (s == "R") {
      cluster = t.arena() == Arena::Finite     ? embed::F_n_to_R(t)
                : t.arena() == Arena::Infinite ? embed::F_inf_to_R(t)
                                               : embed::F_infbar_to_R(t);
    } else if (s == "pi") {
      cluster = t.arena() == Arena::Completed ? embed::F_infbar_to_pi(t) : embed::G_inf_to_pi(t);
    } else {
      throw Error(ErrorCode::Parse, "unknown chain stage " + s);
    }
    report.push_back({{"stage", s}, {"result", cluster ? io::to_json(*cluster) : io::to_json(t)}});
  }
  return report;
}

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for continuous type-A cluster theories"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");
  std::string quiver_file;
  app.add_option("--quiver", quiver_file, "quiver JSON file (default: straight descending)");

  auto load_quiver = [&] { return quiver_file.empty() ? Quiver::straight() : io::quiver_from_json(read_json(quiver_file)); };

  // quiver
  auto* quiver = app.add_subcommand("quiver", "build a quiver from sink and source positions");
  std::string sinks, sources;
  quiver->add_option("--sinks", sinks, "comma-separated rationals");
  quiver->add_option("--sources", sources, "comma-separated rationals");
  quiver->callback([&] {
    Quiver q = (sinks.empty() && sources.empty()) ? load_quiver()
                                                  : Quiver::from_markers(rational_list(sinks), rational_list(sources));
    emit(json, io::to_json(q), quiver_text(q));
  });

  // compat
  auto* compat = app.add_subcommand("compat", "decide E-compatibility of two intervals");
  std::string ca, cb;
  compat->add_option("a", ca)->required();
  compat->add_option("b", cb)->required();
  compat->callback([&] {
    Quiver q = load_quiver();
    Interval a = Interval::parse(ca), b = Interval::parse(cb);
    bool ok = e_compatible(q, a, b);
    Arc pa = phi(q, a), pb = phi(q, b);
    emit(json,
         {{"a", a.str()}, {"b", b.str()}, {"compatible", ok}, {"crossing", crossing(q, pa, pb)}},
         a.str() + " " + b.str() + (ok ? " compatible" : " incompatible"));
  });

  // phi
  auto* phi_cmd = app.add_subcommand("phi", "arc of an interval, or the interval of an arc");
  std::string phi_in, arc_file;
  phi_cmd->add_option("interval", phi_in);
  phi_cmd->add_option("--arc", arc_file, "arc JSON file to invert");
  phi_cmd->callback([&] {
    Quiver q = load_quiver();
    if (!arc_file.empty()) {
      Interval m = phi_inverse(q, io::arc_from_json(read_json(arc_file)));
      emit(json, io::to_json(m), m.str());
      return;
    }
    if (phi_in.empty()) throw Error(ErrorCode::Parse, "phi needs an interval or --arc");
    Arc a = phi(q, Interval::parse(phi_in));
    emit(json, io::to_json(a), a.str());
  });

  // polygon
  auto* polygon = app.add_subcommand("polygon", "triangulations of the (n+3)-gon");
  int poly_n = 1;
  bool poly_dot = false, poly_list = false;
  polygon->add_option("-n,--n", poly_n, "the polygon has n+3 vertices")->required();
  polygon->add_flag("--dot", poly_dot, "exchange graph as Graphviz DOT");
  polygon->add_flag("--list", poly_list, "list every triangulation");
  polygon->callback([&] {
    if (poly_dot) {
      std::cout << exchange_graph(poly_n).dot();
      return;
    }
    auto all = enumerate_triangulations(poly_n);
    Json j = {{"n", poly_n}, {"count", all.size()}};
    std::string text = "(" + std::to_string(poly_n + 3) + "-gon) " + std::to_string(all.size()) + " triangulations\n";
    if (poly_list) {
      j["triangulations"] = Json::array();
      for (const auto& t : all) {
        j["triangulations"].push_back(io::to_json(t));
        text += t.str() + "\n";
      }
    }
    emit(json, j, text);
  });

  // gon
  auto* gon = app.add_subcommand("gon", "inspect, flip or complete a triangulation");
  std::string gon_file, gon_flip;
  bool gon_complete = false;
  gon->add_option("--input", gon_file, "triangulation JSON file")->required();
  gon->add_option("--flip", gon_flip, "diagonal i~j to flip");
  gon->add_flag("--complete", gon_complete, "add adic and Prufer arcs");
  gon->callback([&] {
    GonTriangulation t = io::gon_from_json(read_json(gon_file));
    Json j;
    std::string text;
    if (!gon_flip.empty()) {
      auto [t2, d2] = t.flip(diagonal(gon_flip));
      j["replacement"] = d2.str();
      text += "replacement " + d2.str() + "\n";
      t = t2;
    }
    if (gon_complete) t = t.adic_completion().prufer_completion();
    j["triangulation"] = io::to_json(t);
    text += t.str() + "\n";
    if (t.arena() != Arena::Finite) {
      auto f = t.classify_fountains();
      j["fountains"] = f.str();
      j["adic"] = t.adic_count();
      j["prufer"] = t.prufer_count();
      text += "fountains: " + f.str() + "\n";
    }
    emit(json, j, text);
  });

  // embed
  auto* embed_cmd = app.add_subcommand("embed", "apply a chain of embedding functors");
  std::string chain, embed_file;
  embed_cmd->add_option("--chain", chain, "e.g. m:1->n:3->inf->infbar->R")->required();
  embed_cmd->add_option("--input", embed_file, "triangulation JSON file")->required();
  embed_cmd->callback([&] {
    // The report is JSON in both modes.
    std::cout << run_chain(chain, io::gon_from_json(read_json(embed_file))).dump(2) << "\n";
  });

  // tinfty
  auto* tinfty = app.add_subcommand("tinfty", "base clusters of the continuous theories");
  int tn = -1;
  bool tpi = false;
  std::vector<std::string> members;
  tinfty->add_option("--n", tn, "polygon image T_n instead");
  tinfty->add_flag("--pi", tpi, "C_pi side base cluster instead");
  tinfty->add_option("--member", members, "intervals to test for membership");
  tinfty->callback([&] {
    ClusterRep c = tpi ? embed::build_T_pi() : tn >= 0 ? embed::build_T_n(tn) : embed::build_T_infinity();
    Json j = {{"cluster", io::to_json(c)}};
    std::string text = c.str() + "\n";
    for (const auto& m : members) {
      bool in = c.member(Interval::parse(m));
      j["members"][m] = in;
      text += m + (in ? " in" : " out") + "\n";
    }
    emit(json, j, text);
  });

  // path
  auto* path = app.add_subcommand("path", "continuous mutation paths");
  path->require_subcommand(1);
  std::string path_name = "proj_to_inj";
  path->add_option("--name", path_name, "proj_to_inj, long_sequence, mu1, mu2 or level_curves");
  auto* eval = path->add_subcommand("eval", "cluster at time t");
  double eval_t = 0;
  int eval_tier = -1;
  eval->add_option("--t", eval_t)->required()->check(CLI::Range(0.0, 1.0));
  eval->add_option("--tier", eval_tier, "0 or 1; default 1 for t > 0")->check(CLI::Range(0, 1));
  eval->callback([&] {
    auto p = service::named_path(path_name);
    int tier = eval_tier >= 0 ? eval_tier : (eval_t > 0 ? 1 : 0);
    ClusterRep c = p(eval_t, tier);
    engine::Step st = p.step(eval_t);
    emit(json, {{"t", eval_t}, {"tier", tier}, {"cluster", io::to_json(c)}, {"step", st.str()}},
         c.str() + "\nstep " + st.str());
  });
  auto* frames = path->add_subcommand("frames", "SVG frames at evenly spaced times");
  int frame_count = 6;
  std::string frame_dir;
  frames->add_option("--count", frame_count)->check(CLI::Range(2, 1000));
  frames->add_option("--out", frame_dir, "directory for frame_<k>.svg files");
  frames->callback([&] {
    auto p = service::named_path(path_name);
    auto svgs = render::render_animation(p, frame_count);
    auto times = render::frame_times(frame_count);
    Json list = Json::array();
    for (size_t k = 0; k < svgs.size(); ++k) {
      if (!frame_dir.empty()) {
        std::filesystem::create_directories(frame_dir);
        auto file = std::filesystem::path(frame_dir) / ("frame_" + std::to_string(k) + ".svg");
        std::ofstream(file) << svgs[k];
        list.push_back({{"t", times[k]}, {"file", file.string()}});
        if (!json) std::cout << file.string() << "\n";
      } else {
        list.push_back({{"t", times[k]}, {"svg", svgs[k]}});
      }
    }
    if (json || frame_dir.empty()) std::cout << list.dump(2) << "\n";
  });

  // render
  auto* render_cmd = app.add_subcommand("render", "SVG of a cluster, triangulation or preset");
  std::string render_file, render_preset, render_out, highlight;
  render_cmd->add_option("--input", render_file, "cluster or triangulation JSON file");
  render_cmd->add_option("--preset", render_preset, "a session preset name");
  render_cmd->add_option("--out", render_out, "output file (default stdout)");
  render_cmd->add_option("--highlight", highlight, "old|new pair of intervals");
  render_cmd->callback([&] {
    service::State s;
    if (!render_preset.empty()) {
      s = service::preset_state(render_preset, load_quiver());
    } else if (!render_file.empty()) {
      Json j = read_json(render_file);
      if (j.contains("arena"))
        s = io::gon_from_json(j);
      else
        s = io::cluster_from_json(j);
    } else {
      throw Error(ErrorCode::Parse, "render needs --input or --preset");
    }
    render::Style st;
    if (!highlight.empty()) {
      size_t bar = highlight.find('|');
      if (bar == std::string::npos) throw Error(ErrorCode::Parse, "highlight must be old|new");
      st.highlight = std::pair{Interval::parse(highlight.substr(0, bar)), Interval::parse(highlight.substr(bar + 1))};
    }
    std::string svg = std::holds_alternative<ClusterRep>(s) ? render::render_arcs(std::get<ClusterRep>(s), st)
                                                            : render::render_gon(std::get<GonTriangulation>(s), st);
    if (render_out.empty())
      std::cout << svg;
    else
      std::ofstream(render_out) << svg;
  });

  // serve
  auto* serve = app.add_subcommand("serve", "JSON session service over HTTP");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve->add_option("--host", host);
  serve->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve->callback([&] {
    std::cerr << "listening on " << host << ":" << port << "\n";
    service::serve(host, port);
  });

  // transform
  auto* transform = app.add_subcommand("transform", "coordinate change between C_A and C_C");
  std::vector<double> strip, cc;
  transform->add_option("--strip", strip, "x y: point of C_A, mapped forward")->expected(2);
  transform->add_option("--cc", cc, "a b: point of C_C, mapped back (a may be -inf)")->expected(2);
  transform->callback([&] {
    using namespace cta::transform;
    if (!strip.empty()) {
      CCPoint c = f_map({strip[0], strip[1]});
      std::string a = std::isinf(c.a) ? "-inf" : fixed12(c.a);
      emit(json, {{"a", a}, {"b", fixed12(c.b)}}, "(" + a + ", " + fixed12(c.b) + ")");
    } else if (!cc.empty()) {
      StripPoint p = f_inverse({cc[0], cc[1]});
      emit(json, {{"x", fixed12(p.x)}, {"y", fixed12(p.y)}}, "(" + fixed12(p.x) + ", " + fixed12(p.y) + ")");
    } else {
      throw Error(ErrorCode::Parse, "transform needs --strip or --cc");
    }
  });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const Error& e) {
    if (json)
      std::cout << service::error_json(e).dump() << "\n";
    else
      std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
