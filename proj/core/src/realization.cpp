#include "coxcfg/realization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace coxcfg {

namespace {

constexpr int kCoordBound = 1000;
constexpr int kMaxLineAttempts = 10000;

std::size_t slots(int n) { return std::size_t{1} << n; }

void check_label(int n, Subset s, bool want_even) {
  if (!s.within(n)) throw std::invalid_argument("label " + to_string(s) + " is outside the ground set");
  if (s.even() != want_even) {
    throw std::invalid_argument("label " + to_string(s) + (want_even ? " is not a point" : " is not a circle"));
  }
}

// Uniform integer in [lo, hi] by rejection on raw engine output, so the stream
// depends only on mt19937_64, which the standard pins down exactly.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % range);
}

mpq_class draw_rational(std::mt19937_64& rng) {
  mpq_class q(mpz_class(static_cast<long>(draw(rng, -kCoordBound, kCoordBound))),
              mpz_class(static_cast<long>(draw(rng, 1, kCoordBound))));
  q.canonicalize();
  return q;
}

// y = m x + q
InvCircle draw_line(std::mt19937_64& rng) {
  mpq_class m = draw_rational(rng);
  mpq_class q = draw_rational(rng);
  return InvCircle::from_rational(0, m, -1, q);
}

bool parallel(const InvCircle& l1, const InvCircle& l2) { return l1.b() * l2.c() == l2.b() * l1.c(); }

// A line (a = 0) touches a circle iff its distance to the centre equals the radius.
bool tangent(const InvCircle& line, const InvCircle& circle) {
  if (circle.is_line()) return false;
  mpz_class lhs = 2 * circle.a() * line.d() - line.b() * circle.b() - line.c() * circle.c();
  mpz_class disc = circle.b() * circle.b() + circle.c() * circle.c() - 4 * circle.a() * circle.d();
  return lhs * lhs == disc * (line.b() * line.b() + line.c() * line.c());
}

InvCircle pick_line(std::mt19937_64& rng, const Realization& r, int element) {
  for (int attempt = 0; attempt < kMaxLineAttempts; ++attempt) {
    InvCircle line = draw_line(rng);
    bool ok = true;
    for (Subset b : r.circle_labels()) {
      const InvCircle& c = r.circle(b);
      if (c == line || (c.is_line() && parallel(c, line)) || tangent(line, c)) {
        ok = false;
        break;
      }
    }
    for (Subset p : r.point_labels()) {
      if (!ok) break;
      const InvPoint& pt = r.point(p);
      if (!pt.is_infinity() && line.passes_through(pt)) ok = false;
    }
    if (ok) return line;
  }
  throw GenericityError("no generic line found for element " + std::to_string(element + 1));
}

// Point (X/W, Y/W) on a(x^2+y^2) + bx + cy + d = 0 iff a(X^2+Y^2) + bXW + cYW + dW^2 = 0.
struct Homogeneous {
  bool infinite = false;
  mpz_class s, xw, yw, ww;
};

Homogeneous homogeneous(const InvPoint& p) {
  Homogeneous h;
  if (p.is_infinity()) {
    h.infinite = true;
    return h;
  }
  mpz_class x = p.x().get_num() * p.y().get_den();
  mpz_class y = p.y().get_num() * p.x().get_den();
  mpz_class w = p.x().get_den() * p.y().get_den();
  h.s = x * x + y * y;
  h.xw = x * w;
  h.yw = y * w;
  h.ww = w * w;
  return h;
}

bool on(const InvCircle& c, const Homogeneous& h) {
  if (h.infinite) return c.is_line();
  mpz_class v = c.a() * h.s + c.b() * h.xw + c.c() * h.yw + c.d() * h.ww;
  return v == 0;
}

std::string circle_key(const InvCircle& c) { return to_string(c); }

class DistinctSweep {
 public:
  explicit DistinctSweep(const Realization& r) {
    for (Subset p : r.point_labels()) points_.emplace(to_string(r.point(p)), p);
    for (Subset b : r.circle_labels()) circles_.emplace(circle_key(r.circle(b)), b);
  }
  void add_point(Subset label, const InvPoint& p) {
    auto [it, fresh] = points_.emplace(to_string(p), label);
    if (!fresh) {
      throw GenericityError("points " + to_string(it->second) + " and " + to_string(label) +
                            " coincide; retry with another seed");
    }
  }
  void add_circle(Subset label, const InvCircle& c) {
    auto [it, fresh] = circles_.emplace(circle_key(c), label);
    if (!fresh) {
      throw GenericityError("circles " + to_string(it->second) + " and " + to_string(label) +
                            " coincide; retry with another seed");
    }
  }

 private:
  std::unordered_map<std::string, Subset> points_;
  std::unordered_map<std::string, Subset> circles_;
};

InvPoint place_point(const Realization& r, Subset p) {
  auto e = p.elements();
  Subset ci = p.without(e[0]);
  Subset cj = p.without(e[1]);
  Subset known = ci.without(e[1]);
  InvPoint pt;
  try {
    pt = second_intersection(r.circle(ci), r.circle(cj), r.point(known));
  } catch (const TangencyError&) {
    throw GenericityError("circles " + to_string(ci) + " and " + to_string(cj) + " touch at point " +
                          to_string(known) + "; retry with another seed");
  }
  Homogeneous h = homogeneous(pt);
  for (int l : e) {
    if (!on(r.circle(p.without(l)), h)) {
      throw GenericityError("point " + to_string(p) + " misses circle " + to_string(p.without(l)));
    }
  }
  return pt;
}

InvCircle place_circle(const Realization& r, Subset b) {
  auto e = b.elements();
  InvCircle c = circle_through(r.point(b.without(e[0])), r.point(b.without(e[1])), r.point(b.without(e[2])));
  for (int l : e) {
    if (!on(c, homogeneous(r.point(b.without(l))))) {
      throw GenericityError("circle " + to_string(b) + " misses point " + to_string(b.without(l)));
    }
  }
  return c;
}

// Assigns every unassigned subset of size >= 2, layer by layer.
void fill(Realization& r) {
  DistinctSweep sweep(r);
  for (int k = 2; k <= r.n(); ++k) {
    for (Subset s : subsets_of_size(r.n(), k)) {
      if (s.even() ? r.has_point(s) : r.has_circle(s)) continue;
      if (s.even()) {
        InvPoint p = place_point(r, s);
        sweep.add_point(s, p);
        r.set_point(s, std::move(p));
      } else {
        InvCircle c = place_circle(r, s);
        sweep.add_circle(s, c);
        r.set_circle(s, std::move(c));
      }
    }
  }
}

void finish(Realization& r) {
  auto report = verify(r);
  if (!report.clean()) throw GenericityError("realization failed verification: " + summary(report));
  r.set_verified(true);
}

}  // namespace

Realization::Realization(int n, std::uint64_t seed)
    : n_(n), seed_(seed), points_(n >= 0 && n <= kMaxGroundSize ? slots(n) : 0),
      circles_(points_.size()) {
  if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("realization size out of range");
}

bool Realization::has_point(Subset s) const { return s.within(n_) && points_[s.bits()].has_value(); }
bool Realization::has_circle(Subset s) const { return s.within(n_) && circles_[s.bits()].has_value(); }

const InvPoint& Realization::point(Subset s) const {
  if (!has_point(s)) throw std::out_of_range("no point assigned to " + to_string(s));
  return *points_[s.bits()];
}

const InvCircle& Realization::circle(Subset s) const {
  if (!has_circle(s)) throw std::out_of_range("no circle assigned to " + to_string(s));
  return *circles_[s.bits()];
}

void Realization::set_point(Subset s, InvPoint p) {
  check_label(n_, s, true);
  points_[s.bits()] = std::move(p);
  verified_ = false;
}

void Realization::set_circle(Subset s, InvCircle c) {
  check_label(n_, s, false);
  circles_[s.bits()] = std::move(c);
  verified_ = false;
}

std::vector<Subset> Realization::point_labels() const {
  std::vector<Subset> out;
  for (Subset s : subsets_of_parity(n_, 0)) {
    if (has_point(s)) out.push_back(s);
  }
  return out;
}

std::vector<Subset> Realization::circle_labels() const {
  std::vector<Subset> out;
  for (Subset s : subsets_of_parity(n_, 1)) {
    if (has_circle(s)) out.push_back(s);
  }
  return out;
}

VerificationReport verify(const Realization& r) {
  VerificationReport rep;
  rep.n = r.n();
  rep.empty_at_infinity = r.has_point(Subset{}) && r.point(Subset{}).is_infinity();
  for (Subset s : subsets_of(Subset::full(r.n()))) {
    if (!(s.even() ? r.has_point(s) : r.has_circle(s))) rep.missing.push_back(s);
  }
  auto points = r.point_labels();
  auto circles = r.circle_labels();
  std::vector<Homogeneous> hs;
  hs.reserve(points.size());
  for (Subset p : points) hs.push_back(homogeneous(r.point(p)));

  for (std::size_t i = 0; i < points.size(); ++i) {
    for (Subset b : circles) {
      bool flag = points[i].adjacent(b);
      bool holds = on(r.circle(b), hs[i]);
      if (flag) {
        ++rep.flags_checked;
        if (!holds) rep.incidence_defects.emplace_back(points[i], b);
      } else {
        ++rep.non_flags_checked;
        if (holds) rep.accidental_incidences.emplace_back(points[i], b);
      }
    }
  }

  std::unordered_map<std::string, Subset> seen;
  for (Subset p : points) {
    auto [it, fresh] = seen.emplace(to_string(r.point(p)), p);
    if (!fresh) rep.coincident_points.emplace_back(it->second, p);
  }
  seen.clear();
  for (Subset b : circles) {
    auto [it, fresh] = seen.emplace(circle_key(r.circle(b)), b);
    if (!fresh) rep.coincident_circles.emplace_back(it->second, b);
  }
  return rep;
}

std::string summary(const VerificationReport& r) {
  std::ostringstream out;
  if (r.clean()) {
    out << "all " << r.flags_checked << " incidences exact; " << r.non_flags_checked
        << " non-incidences confirmed; points and circles pairwise distinct";
    return out.str();
  }
  auto pairs = [&](const char* what, const std::vector<std::pair<Subset, Subset>>& v) {
    if (v.empty()) return;
    out << v.size() << ' ' << what << " (first " << to_string(v.front().first) << ", "
        << to_string(v.front().second) << "); ";
  };
  if (!r.empty_at_infinity) out << "empty set is not at infinity; ";
  if (!r.missing.empty()) out << r.missing.size() << " unassigned labels (first " << to_string(r.missing.front()) << "); ";
  pairs("incidence defects", r.incidence_defects);
  pairs("accidental incidences", r.accidental_incidences);
  pairs("coincident points", r.coincident_points);
  pairs("coincident circles", r.coincident_circles);
  std::string s = out.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

Realization realize(int n, std::uint64_t seed, int max_n) {
  if (n < 3 || n > max_n) throw std::invalid_argument("realize needs 3 <= n <= " + std::to_string(max_n));
  Realization r(n, seed);
  r.set_point(Subset{}, InvPoint::infinity());
  std::mt19937_64 rng(seed);
  // Lines are kept out of each other's intersection points, so no three are concurrent.
  std::vector<InvPoint> crossings;
  for (int i = 0; i < n; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxLineAttempts) throw GenericityError("no generic line found for element " + std::to_string(i + 1));
      InvCircle line = draw_line(rng);
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = !parallel(line, r.circle(Subset::singleton(j)));
      for (const auto& x : crossings) {
        if (!ok) break;
        ok = !line.passes_through(x);
      }
      if (!ok) continue;
      for (int j = 0; j < i; ++j) {
        crossings.push_back(second_intersection(line, r.circle(Subset::singleton(j)), InvPoint::infinity()));
      }
      r.set_circle(Subset::singleton(i), std::move(line));
      break;
    }
  }
  fill(r);
  finish(r);
  return r;
}

Realization extend(const Realization& r, std::uint64_t seed, int max_n) {
  if (!r.verified()) throw std::invalid_argument("extend needs a verified realization");
  const int n = r.n() + 1;
  if (n > max_n) throw std::invalid_argument("extend would exceed the cap n <= " + std::to_string(max_n));
  Realization out(n, seed);
  for (Subset p : r.point_labels()) out.set_point(p, r.point(p));
  for (Subset b : r.circle_labels()) out.set_circle(b, r.circle(b));
  std::mt19937_64 rng(seed);
  out.set_circle(Subset::singleton(n - 1), pick_line(rng, r, n - 1));
  fill(out);
  finish(out);
  return out;
}

mpq_class line_cross_ratio(const Realization& r, int i, int j1, int j2, int j3) {
  Subset line = Subset::singleton(i);
  return cross_ratio(r.point(Subset{}), r.point(line.with(j1)), r.point(line.with(j2)), r.point(line.with(j3)));
}

std::vector<CrossRatioWitness> cross_ratio_obstructions(const Realization& r, const Permutation& phi) {
  if (phi.size() != r.n()) throw std::invalid_argument("permutation degree differs from n");
  std::vector<CrossRatioWitness> out;
  const int n = r.n();
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          if (a == i || b == i || c == i) continue;
          mpq_class before = line_cross_ratio(r, i, a, b, c);
          mpq_class after = line_cross_ratio(r, phi(i), phi(a), phi(b), phi(c));
          if (before != after) out.push_back({i, {a, b, c}, before, after});
        }
      }
    }
  }
  return out;
}

std::array<double, 4> scaled_coefficients(const InvCircle& c) {
  const std::array<const mpz_class*, 4> zs{&c.a(), &c.b(), &c.c(), &c.d()};
  std::array<double, 4> mant{};
  std::array<long, 4> exps{};
  long top = std::numeric_limits<long>::min();
  for (std::size_t i = 0; i < 4; ++i) {
    mant[i] = mpz_get_d_2exp(&exps[i], zs[i]->get_mpz_t());
    if (*zs[i] != 0) top = std::max(top, exps[i]);
  }
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = *zs[i] == 0 ? 0.0 : std::ldexp(mant[i], static_cast<int>(exps[i] - top));
  }
  return out;
}

SphereModel stereographic(const Realization& r, const mpq_class& sphere_radius) {
  if (sphere_radius <= 0) throw std::invalid_argument("sphere radius must be positive");
  const double rho = sphere_radius.get_d();
  SphereModel m;
  m.radius = rho;
  std::vector<std::array<double, 3>> at(slots(r.n()));
  for (Subset p : r.point_labels()) {
    const InvPoint& pt = r.point(p);
    std::array<double, 3> pos{0, 0, rho};
    if (!pt.is_infinity()) {
      double x = pt.x().get_d();
      double y = pt.y().get_d();
      double r2 = x * x + y * y;
      double den = r2 + rho * rho;
      pos = {2 * rho * rho * x / den, 2 * rho * rho * y / den, rho * (r2 - rho * rho) / den};
    }
    at[p.bits()] = pos;
    m.points.push_back({p, pos});
  }
  for (Subset b : r.circle_labels()) {
    auto [a, cb, cc, d] = scaled_coefficients(r.circle(b));
    std::array<double, 3> normal{cb * rho, cc * rho, a * rho * rho - d};
    double h = -rho * (a * rho * rho + d);
    double len = std::sqrt(normal[0] * normal[0] + normal[1] * normal[1] + normal[2] * normal[2]);
    for (auto& v : normal) v /= len;
    double offset = h / len;
    SphereCircle sc;
    sc.label = b;
    sc.normal = normal;
    sc.center = {normal[0] * offset, normal[1] * offset, normal[2] * offset};
    sc.radius = std::sqrt(std::max(0.0, rho * rho - offset * offset));
    for (int e = 0; e < r.n(); ++e) {
      Subset p = b.flip(e);
      if (!r.has_point(p)) continue;
      const auto& pos = at[p.bits()];
      double dist = normal[0] * pos[0] + normal[1] * pos[1] + normal[2] * pos[2] - offset;
      m.max_residual = std::max(m.max_residual, std::abs(dist) / rho);
    }
    m.circles.push_back(sc);
  }
  return m;
}

}  // namespace coxcfg
