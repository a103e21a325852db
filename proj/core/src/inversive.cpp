#include "coxcfg/inversive.hpp"

#include <array>
#include <optional>

namespace coxcfg {

InvPoint::InvPoint(mpq_class x, mpq_class y) : infinite_(false), x_(std::move(x)), y_(std::move(y)) {
  x_.canonicalize();
  y_.canonicalize();
}

const mpq_class& InvPoint::x() const {
  if (infinite_) throw std::logic_error("the point at infinity has no coordinates");
  return x_;
}

const mpq_class& InvPoint::y() const {
  if (infinite_) throw std::logic_error("the point at infinity has no coordinates");
  return y_;
}

bool operator==(const InvPoint& a, const InvPoint& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

std::string to_string(const InvPoint& p) {
  if (p.is_infinity()) return "inf";
  return "(" + p.x().get_str() + ", " + p.y().get_str() + ")";
}

InvCircle::InvCircle(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  mpz_class disc = b_ * b_ + c_ * c_ - 4 * a_ * d_;
  if (disc <= 0) throw DegenerateError("circle coefficients do not describe a real circle or line");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d_.get_mpz_t());
  const mpz_class& lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
  if (lead < 0) g = -g;
  a_ /= g;
  b_ /= g;
  c_ /= g;
  d_ /= g;
}

InvCircle InvCircle::from_rational(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                                   const mpq_class& d) {
  mpz_class l = 1;
  for (const auto* q : {&a, &b, &c, &d}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den_mpz_t());
  auto scaled = [&](const mpq_class& q) { return mpz_class(q.get_num() * (l / q.get_den())); };
  return InvCircle(scaled(a), scaled(b), scaled(c), scaled(d));
}

mpq_class InvCircle::evaluate(const InvPoint& p) const {
  const auto& x = p.x();
  const auto& y = p.y();
  return mpq_class(a_) * (x * x + y * y) + mpq_class(b_) * x + mpq_class(c_) * y + mpq_class(d_);
}

bool InvCircle::passes_through(const InvPoint& p) const {
  if (p.is_infinity()) return is_line();
  return evaluate(p) == 0;
}

std::string to_string(const InvCircle& c) {
  return "(" + c.a().get_str() + ", " + c.b().get_str() + ", " + c.c().get_str() + ", " +
         c.d().get_str() + ")";
}

namespace {

mpq_class det3(const std::array<std::array<mpq_class, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

InvCircle line_through(const InvPoint& p, const InvPoint& q) {
  mpq_class b = q.y() - p.y();
  mpq_class c = p.x() - q.x();
  mpq_class d = -(b * p.x() + c * p.y());
  return InvCircle::from_rational(0, b, c, d);
}

struct Complex {
  mpq_class re;
  mpq_class im;
};

Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  mpq_class norm = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

}  // namespace

InvCircle circle_through(const InvPoint& p, const InvPoint& q, const InvPoint& r) {
  if (p == q || q == r || p == r) throw std::invalid_argument("circle_through needs three distinct points");
  if (p.is_infinity()) return line_through(q, r);
  if (q.is_infinity()) return line_through(p, r);
  if (r.is_infinity()) return line_through(p, q);
  std::array<const InvPoint*, 3> pts{&p, &q, &r};
  std::array<mpq_class, 3> xs, ys, ss;
  for (std::size_t i = 0; i < 3; ++i) {
    xs[i] = pts[i]->x();
    ys[i] = pts[i]->y();
    ss[i] = xs[i] * xs[i] + ys[i] * ys[i];
  }
  auto rows = [](const auto& u, const auto& v, const auto& w) {
    std::array<std::array<mpq_class, 3>, 3> m;
    for (std::size_t i = 0; i < 3; ++i) m[i] = {u[i], v[i], w[i]};
    return m;
  };
  const std::array<mpq_class, 3> ones{1, 1, 1};
  // Cofactor expansion of det[[s, x, y, 1], [s_i, x_i, y_i, 1]] along the first row.
  mpq_class a = det3(rows(xs, ys, ones));
  mpq_class b = -det3(rows(ss, ys, ones));
  mpq_class c = det3(rows(ss, xs, ones));
  mpq_class d = -det3(rows(ss, xs, ys));
  return InvCircle::from_rational(a, b, c, d);
}

InvPoint second_intersection(const InvCircle& c1, const InvCircle& c2, const InvPoint& known) {
  if (c1 == c2) throw std::invalid_argument("second_intersection needs two distinct circles");
  if (!c1.passes_through(known) || !c2.passes_through(known)) {
    throw std::invalid_argument("known point is not on both circles");
  }
  if (known.is_infinity()) {
    // Two lines; parallel lines touch at infinity.
    mpz_class det = c1.b() * c2.c() - c2.b() * c1.c();
    if (det == 0) throw TangencyError("parallel lines meet only at infinity");
    mpq_class x(c1.c() * c2.d() - c2.c() * c1.d(), det);
    mpq_class y(c1.d() * c2.b() - c2.d() * c1.b(), det);
    return InvPoint(x, y);
  }
  if (c1.is_line() && c2.is_line()) return InvPoint::infinity();

  // Radical line a2*E1 - a1*E2 carries both common points.
  mpz_class lb = c2.a() * c1.b() - c1.a() * c2.b();
  mpz_class lc = c2.a() * c1.c() - c1.a() * c2.c();
  if (lb == 0 && lc == 0) throw TangencyError("concentric circles share no point");
  const InvCircle& circle = c1.is_line() ? c2 : c1;
  // known + t (dx, dy) runs along the radical line.
  mpq_class dx(-lc);
  mpq_class dy(lb);
  const auto& x0 = known.x();
  const auto& y0 = known.y();
  mpq_class a(circle.a());
  mpq_class linear = 2 * a * (x0 * dx + y0 * dy) + mpq_class(circle.b()) * dx + mpq_class(circle.c()) * dy;
  if (linear == 0) throw TangencyError("circles touch at the known point");
  mpq_class t = -linear / (a * (dx * dx + dy * dy));
  return InvPoint(x0 + t * dx, y0 + t * dy);
}

mpq_class cross_ratio(const InvPoint& z1, const InvPoint& z2, const InvPoint& z3, const InvPoint& z4) {
  const std::array<const InvPoint*, 4> z{&z1, &z2, &z3, &z4};
  int infinite = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    infinite += z[i]->is_infinity() ? 1 : 0;
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (*z[i] == *z[j]) throw std::invalid_argument("cross ratio needs four distinct points");
    }
  }
  if (infinite > 1) throw std::invalid_argument("cross ratio with two points at infinity");

  auto as_complex = [](const InvPoint& p) { return Complex{p.x(), p.y()}; };
  // Factors (z1-z3), (z2-z4) over (z1-z4), (z2-z3); any factor with infinity cancels.
  auto factor = [&](const InvPoint& u, const InvPoint& v) -> std::optional<Complex> {
    if (u.is_infinity() || v.is_infinity()) return std::nullopt;
    return as_complex(u) - as_complex(v);
  };
  Complex num{1, 0};
  Complex den{1, 0};
  if (auto f = factor(z1, z3)) num = num * *f;
  if (auto f = factor(z2, z4)) num = num * *f;
  if (auto f = factor(z1, z4)) den = den * *f;
  if (auto f = factor(z2, z3)) den = den * *f;
  Complex ratio = num / den;
  if (ratio.im != 0) throw std::invalid_argument("cross ratio of points that are not concyclic");
  return ratio.re;
}

}  // namespace coxcfg
