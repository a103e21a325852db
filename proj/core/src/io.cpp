#include "coxcfg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace coxcfg {

using Json = nlohmann::ordered_json;

namespace {

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename F>
auto field(const Json& j, const char* key, F get) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return get(j.at(key));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

std::string str(const Json& j, const char* key) {
  return field(j, key, [](const Json& v) { return v.get<std::string>(); });
}

mpz_class integer(const Json& j, const char* key) {
  std::string s = str(j, key);
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) throw FormatError("field \"" + std::string(key) + "\" is not an integer: " + s);
  return z;
}

Subset label(const Json& j) {
  try {
    return parse_subset(str(j, "label"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string structure_to_json(const IncidenceStructure& s) {
  Json j;
  j["points"] = s.point_labels();
  Json blocks = Json::array();
  for (Index b = 0; b < s.num_blocks(); ++b) {
    Json pts = Json::array();
    for (Index p : s.points_on(b)) pts.push_back(s.point_label(p));
    blocks.push_back({{"label", s.block_label(b)}, {"points", pts}});
  }
  j["blocks"] = blocks;
  return j.dump(2) + "\n";
}

IncidenceStructure structure_from_json(std::string_view text) {
  Json j = parse(text);
  auto points = field(j, "points", [](const Json& v) { return v.get<std::vector<std::string>>(); });
  std::map<std::string, Index> index;
  for (Index i = 0; i < points.size(); ++i) index.emplace(points[i], i);
  std::vector<std::string> labels;
  std::vector<std::vector<Index>> members;
  auto blocks = field(j, "blocks", [](const Json& v) { return v; });
  if (!blocks.is_array()) throw FormatError("\"blocks\" must be an array");
  for (const auto& b : blocks) {
    labels.push_back(str(b, "label"));
    auto names = field(b, "points", [](const Json& v) { return v.get<std::vector<std::string>>(); });
    auto& row = members.emplace_back();
    for (const auto& name : names) {
      auto it = index.find(name);
      if (it == index.end()) throw FormatError("block " + labels.back() + " names unknown point " + name);
      row.push_back(it->second);
    }
  }
  try {
    return IncidenceStructure(std::move(points), std::move(labels), std::move(members));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string incidence_csv(const IncidenceStructure& s, MatrixOrder order) {
  std::vector<Index> rows(s.num_blocks());
  std::vector<Index> cols(s.num_points());
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  if (order == MatrixOrder::SteinerMiquel) {
    auto names = steiner_miquel_labels();
    if (s.num_points() != names.points.size() || s.num_blocks() != names.blocks.size()) {
      throw std::invalid_argument("steiner-miquel order needs cox(4)");
    }
    cols.clear();
    rows.clear();
    for (const auto& [name, sub] : names.points) {
      cols.push_back(s.point_index(to_string(sub)));
      col_names.push_back(name);
    }
    for (const auto& [name, sub] : names.blocks) {
      rows.push_back(s.block_index(to_string(sub)));
      row_names.push_back(name);
    }
  } else {
    for (Index i = 0; i < cols.size(); ++i) {
      cols[i] = i;
      col_names.push_back(s.point_label(i));
    }
    for (Index i = 0; i < rows.size(); ++i) {
      rows[i] = i;
      row_names.push_back(s.block_label(i));
    }
  }
  std::string out;
  for (const auto& c : col_names) out += "," + csv_cell(c);
  out += "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += csv_cell(row_names[r]);
    for (Index c : cols) out += s.incident(c, rows[r]) ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

std::string graph_to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (std::size_t i = 0; i < g.labels.size(); ++i) {
    out += "  v" + std::to_string(i) + " [label=\"" + g.labels[i] + "\"];\n";
  }
  for (auto [a, b] : g.edges) out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  return out + "}\n";
}

std::string realization_to_json(const Realization& r) {
  Json j;
  j["n"] = r.n();
  j["seed"] = r.seed();
  j["verified"] = r.verified();
  j["cross_ratio"] = "(z1-z3)(z2-z4)/((z1-z4)(z2-z3)) with z = x + iy";
  Json points = Json::array();
  for (Subset p : r.point_labels()) {
    const InvPoint& pt = r.point(p);
    if (pt.is_infinity()) {
      points.push_back({{"label", to_string(p)}, {"inf", true}});
    } else {
      points.push_back({{"label", to_string(p)},
                        {"x_num", pt.x().get_num().get_str()},
                        {"x_den", pt.x().get_den().get_str()},
                        {"y_num", pt.y().get_num().get_str()},
                        {"y_den", pt.y().get_den().get_str()}});
    }
  }
  Json circles = Json::array();
  for (Subset b : r.circle_labels()) {
    const InvCircle& c = r.circle(b);
    circles.push_back({{"label", to_string(b)},
                       {"a", c.a().get_str()},
                       {"b", c.b().get_str()},
                       {"c", c.c().get_str()},
                       {"d", c.d().get_str()}});
  }
  j["points"] = points;
  j["circles"] = circles;
  return j.dump(2) + "\n";
}

Realization realization_from_json(std::string_view text) {
  Json j = parse(text);
  int n = field(j, "n", [](const Json& v) { return v.get<int>(); });
  auto seed = field(j, "seed", [](const Json& v) { return v.get<std::uint64_t>(); });
  if (n < 1 || n > kMaxGroundSize) throw FormatError("n out of range");
  Realization r(n, seed);
  auto points = field(j, "points", [](const Json& v) { return v; });
  auto circles = field(j, "circles", [](const Json& v) { return v; });
  if (!points.is_array() || !circles.is_array()) throw FormatError("points and circles must be arrays");
  try {
    for (const auto& p : points) {
      Subset s = label(p);
      if (p.contains("inf")) {
        r.set_point(s, InvPoint::infinity());
        continue;
      }
      mpz_class xd = integer(p, "x_den");
      mpz_class yd = integer(p, "y_den");
      if (xd == 0 || yd == 0) throw FormatError("zero denominator at " + to_string(s));
      r.set_point(s, InvPoint(mpq_class(integer(p, "x_num"), xd), mpq_class(integer(p, "y_num"), yd)));
    }
    for (const auto& c : circles) {
      r.set_circle(label(c), InvCircle(integer(c, "a"), integer(c, "b"), integer(c, "c"), integer(c, "d")));
    }
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  } catch (const DegenerateError& e) {
    throw FormatError(e.what());
  }
  return r;
}

std::string sphere_to_json(const SphereModel& m) {
  Json j;
  j["radius"] = m.radius;
  j["max_residual"] = m.max_residual;
  Json points = Json::array();
  for (const auto& p : m.points) points.push_back({{"label", to_string(p.label)}, {"position", p.position}});
  Json circles = Json::array();
  for (const auto& c : m.circles) {
    circles.push_back({{"label", to_string(c.label)},
                       {"center", c.center},
                       {"normal", c.normal},
                       {"radius", c.radius}});
  }
  j["points"] = points;
  j["circles"] = circles;
  return j.dump(2) + "\n";
}

std::string realization_to_svg(const Realization& r) {
  // Window around the pairwise line crossings, which set the scale of the picture.
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (Subset p : r.point_labels()) {
    const InvPoint& pt = r.point(p);
    if (pt.is_infinity() || p.size() > 2) continue;
    lo_x = std::min(lo_x, pt.x().get_d());
    hi_x = std::max(hi_x, pt.x().get_d());
    lo_y = std::min(lo_y, pt.y().get_d());
    hi_y = std::max(hi_y, pt.y().get_d());
  }
  if (lo_x > hi_x) lo_x = lo_y = -1, hi_x = hi_y = 1;
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  lo_x -= span / 2;
  hi_x += span / 2;
  lo_y -= span / 2;
  hi_y += span / 2;
  span *= 2;
  const double stroke = span / 400;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\""
      << fmt(lo_x) << ' ' << fmt(-hi_y) << ' ' << fmt(hi_x - lo_x) << ' ' << fmt(hi_y - lo_y) << "\">\n"
      << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << fmt(stroke) << "\">\n";
  for (Subset b : r.circle_labels()) {
    auto [a, cb, cc, d] = scaled_coefficients(r.circle(b));
    out << "<g id=\"c" << b.bits() << "\"><title>" << to_string(b) << "</title>";
    if (a == 0) {
      // b x + c y + d = 0, drawn as a long segment through the foot of the perpendicular.
      double norm = std::hypot(cb, cc);
      double fx = -cb * d / (norm * norm), fy = -cc * d / (norm * norm);
      double tx = -cc / norm * 4 * span, ty = cb / norm * 4 * span;
      out << "<line x1=\"" << fmt(fx - tx) << "\" y1=\"" << fmt(fy - ty) << "\" x2=\"" << fmt(fx + tx)
          << "\" y2=\"" << fmt(fy + ty) << "\" stroke=\"#1f77b4\"/>";
    } else {
      double cx = -cb / (2 * a), cy = -cc / (2 * a);
      double rad = std::sqrt(cb * cb + cc * cc - 4 * a * d) / (2 * std::abs(a));
      out << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(rad)
          << "\" stroke=\"#d62728\"/>";
    }
    out << "</g>\n";
  }
  out << "</g>\n<g fill=\"black\">\n";
  for (Subset p : r.point_labels()) {
    const InvPoint& pt = r.point(p);
    if (pt.is_infinity()) continue;
    out << "<circle cx=\"" << fmt(pt.x().get_d()) << "\" cy=\"" << fmt(-pt.y().get_d()) << "\" r=\""
        << fmt(stroke * 2.5) << "\"><title>" << to_string(p) << "</title></circle>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace coxcfg
