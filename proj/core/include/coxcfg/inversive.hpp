#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace coxcfg {

/// Raised when an exact construction hits a degenerate configuration
/// (coincident or tangent objects).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two circles touch at the known common point, so there is no second one.
class TangencyError : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

/// A point of the inversive plane: a rational point or the point at infinity.
class InvPoint {
 public:
  InvPoint() = default;  // the point at infinity
  InvPoint(mpq_class x, mpq_class y);

  static InvPoint infinity() { return {}; }

  bool is_infinity() const { return infinite_; }
  /// Coordinates of a finite point (throws for infinity).
  const mpq_class& x() const;
  const mpq_class& y() const;

  friend bool operator==(const InvPoint& a, const InvPoint& b);

 private:
  bool infinite_ = true;
  mpq_class x_;
  mpq_class y_;
};

std::string to_string(const InvPoint& p);

/// a(x^2 + y^2) + b x + c y + d = 0 with integer coefficients in canonical
/// form: gcd 1 and first nonzero coefficient positive. a = 0 is a line, and
/// lines pass through infinity.
class InvCircle {
 public:
  /// Normalizes; throws DegenerateError unless b^2 + c^2 - 4ad > 0.
  InvCircle(mpz_class a, mpz_class b, mpz_class c, mpz_class d);
  /// Clears denominators, then normalizes.
  static InvCircle from_rational(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                                 const mpq_class& d);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& d() const { return d_; }
  bool is_line() const { return a_ == 0; }

  /// Exact value of the left-hand side at a finite point.
  mpq_class evaluate(const InvPoint& p) const;
  bool passes_through(const InvPoint& p) const;

  friend bool operator==(const InvCircle&, const InvCircle&) = default;

 private:
  mpz_class a_, b_, c_, d_;
};

std::string to_string(const InvCircle& c);

/// The unique circle or line through three distinct points, at most one of
/// them infinite. Throws std::invalid_argument on repeated or doubly-infinite input.
InvCircle circle_through(const InvPoint& p, const InvPoint& q, const InvPoint& r);

/// The common point of two distinct circles other than `known`, which must lie
/// on both. Throws TangencyError when the circles touch at `known`.
InvPoint second_intersection(const InvCircle& c1, const InvCircle& c2, const InvPoint& known);

/// Complex cross ratio (z1 - z3)(z2 - z4) / ((z1 - z4)(z2 - z3)) of four distinct
/// concyclic points, treating (x, y) as x + iy; a factor containing the point at
/// infinity is dropped. Real exactly for concyclic input; throws
/// std::invalid_argument otherwise.
mpq_class cross_ratio(const InvPoint& z1, const InvPoint& z2, const InvPoint& z3, const InvPoint& z4);

}  // namespace coxcfg
