#pragma once

/*
 * Classical invariants of the distinguished knot L and the d3-invariant of
 * the surgered contact manifold.
 *
 *   tb(L)  = tb0 + det M0 / det M
 *   rot(L) = rot0 - <rot, M^{-1} lk>
 *   d3     = (c^2 - 3 sigma(X) - 2 chi(X)) / 4 + q
 *
 * with c^2 = x^t rot for M x = rot, chi(X) = 1 + #components,
 * sigma(X) = signature(M) and q the number of contact (+1)-surgeries.
 *
 * The deflated overloads compute the same quantities from group-summed data:
 * with W = diag(weights), M' y = lk gives tb = tb0 - y^t W lk and
 * rot = rot0 - rot^t W y. On the orthogonal complement of the group-constant
 * vectors the form is coeff_G * identity, which gives
 *   det M   = det M' * prod coeff_G^(w_G - 1)
 *   sigma M = sigma(W M') + sum (w_G - 1) coeff_G.
 */

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "legendrian/diagram.hpp"
#include "legendrian/torus_knot.hpp"

namespace legendrian {

struct InvariantReport {
  Int tb = 0;
  Int rot_plus = 0;
  Int rot_minus = 0;
  Rational d3;
  BigInt detM;
  BigInt detM0;
  int sigma = 0;
  Int chi = 0;
  Rational c_squared;
  Int q_plus = 0;
  bool is_homology_sphere = false;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

namespace detail {

inline void require_nonsingular(const BigInt& det) {
  if (det == 0) throw Error(ErrorKind::SingularMatrix, "linking matrix is singular (det M = 0)");
}

inline void require_homology_sphere(const BigInt& det) {
  require_nonsingular(det);
  if (abs(det) != 1) {
    throw Error(ErrorKind::NotHomologySphere,
                "surgered manifold is not a homology sphere (det M = " + det.str() + ")");
  }
}

inline Rational weighted_dot(std::span<const Int> a, std::span<const Int> w, std::span<const Rational> x) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += Rational(a[i] * w[i]) * x[i];
  return acc;
}

inline Rational d3_formula(const Rational& c2, int sigma, Int chi, Int q) {
  return (c2 - 3 * sigma - 2 * chi) / 4 + q;
}

}  // namespace detail

inline Int tb_of(const SurgeryDiagram& d) {
  BigInt det = determinant(linking_matrix(d));
  detail::require_nonsingular(det);
  BigInt det0 = determinant(extended_matrix(d));
  if (det0 % det != 0) {
    throw Error(ErrorKind::NonIntegerResult,
                "det M0 / det M = " + det0.str() + "/" + det.str() + " is not an integer");
  }
  return d.knot.tb0 + to_int(BigInt(det0 / det));
}

/// Rotation numbers for the stored orientation of L and for its reverse.
inline std::pair<Int, Int> rot_of(const SurgeryDiagram& d) {
  IntMatrix m = linking_matrix(d);
  detail::require_nonsingular(determinant(m));
  IntVector lk = lk_vector(d);
  RationalVector y = solve(m, std::span<const BigInt>(lk));
  IntVector rot = rot_vector(d);
  Rational r = Rational(d.knot.rot0) - dot(y, rot);
  Int value = to_int(r);
  return {value, -value};
}

/// c^2 = x^t rot with M x = rot.
inline Rational c_squared_of(const SurgeryDiagram& d) {
  IntMatrix m = linking_matrix(d);
  detail::require_nonsingular(determinant(m));
  IntVector rot = rot_vector(d);
  RationalVector x = solve(m, std::span<const BigInt>(rot));
  return dot(x, rot);
}

inline Int euler_characteristic(const SurgeryDiagram& d) { return 1 + static_cast<Int>(d.size()); }

inline Int plus_surgeries(const SurgeryDiagram& d) {
  Int q = 0;
  for (const auto& c : d.components) q += c.coeff == 1;
  return q;
}

inline Rational d3_of(const SurgeryDiagram& d) {
  IntMatrix m = linking_matrix(d);
  detail::require_homology_sphere(determinant(m));
  return detail::d3_formula(c_squared_of(d), signature(m), euler_characteristic(d), plus_surgeries(d));
}

inline InvariantReport invariant_report(const SurgeryDiagram& d) {
  InvariantReport r;
  IntMatrix m = linking_matrix(d);
  r.detM = determinant(m);
  detail::require_nonsingular(r.detM);
  r.detM0 = determinant(extended_matrix(d));
  r.tb = tb_of(d);
  std::tie(r.rot_plus, r.rot_minus) = rot_of(d);
  r.sigma = signature(m);
  r.chi = euler_characteristic(d);
  r.c_squared = c_squared_of(d);
  r.q_plus = plus_surgeries(d);
  r.is_homology_sphere = abs(r.detM) == 1;
  r.d3 = d3_of(d);
  return r;
}

// ---- deflated data ---------------------------------------------------------

inline IntMatrix weighted_form(const DeflatedDiagram& dd) {
  IntMatrix form = dd.reduced;
  for (std::size_t i = 0; i < dd.size(); ++i)
    for (std::size_t j = 0; j < dd.size(); ++j) form(i, j) *= dd.weights[i];
  return form;
}

inline BigInt determinant(const DeflatedDiagram& dd) {
  BigInt det = determinant(dd.reduced);
  for (std::size_t g = 0; g < dd.size(); ++g)
    if (dd.coeff[g] == -1 && (dd.weights[g] - 1) % 2 != 0) det = -det;
  return det;
}

inline int signature(const DeflatedDiagram& dd) {
  int sig = signature(weighted_form(dd));
  for (std::size_t g = 0; g < dd.size(); ++g) sig += static_cast<int>((dd.weights[g] - 1) * dd.coeff[g]);
  return sig;
}

inline Int tb_of(const DeflatedDiagram& dd) {
  detail::require_nonsingular(determinant(dd.reduced));
  RationalVector y = solve(dd.reduced, std::span<const Int>(dd.lk));
  return to_int(Rational(dd.tb0) - detail::weighted_dot(dd.lk, dd.weights, y));
}

inline std::pair<Int, Int> rot_of(const DeflatedDiagram& dd) {
  detail::require_nonsingular(determinant(dd.reduced));
  RationalVector y = solve(dd.reduced, std::span<const Int>(dd.lk));
  Int value = to_int(Rational(dd.rot0) - detail::weighted_dot(dd.rot, dd.weights, y));
  return {value, -value};
}

inline Rational c_squared_of(const DeflatedDiagram& dd) {
  detail::require_nonsingular(determinant(dd.reduced));
  RationalVector x = solve(dd.reduced, std::span<const Int>(dd.rot));
  return detail::weighted_dot(dd.rot, dd.weights, x);
}

inline Int euler_characteristic(const DeflatedDiagram& dd) {
  Int chi = 1;
  for (Int w : dd.weights) chi += w;
  return chi;
}

inline Int plus_surgeries(const DeflatedDiagram& dd) {
  Int q = 0;
  for (std::size_t g = 0; g < dd.size(); ++g)
    if (dd.coeff[g] == 1) q += dd.weights[g];
  return q;
}

inline Rational d3_of(const DeflatedDiagram& dd) {
  detail::require_homology_sphere(determinant(dd));
  return detail::d3_formula(c_squared_of(dd), signature(dd), euler_characteristic(dd), plus_surgeries(dd));
}

inline InvariantReport invariant_report(const DeflatedDiagram& dd) {
  InvariantReport r;
  r.detM = determinant(dd);
  detail::require_nonsingular(r.detM);
  r.tb = tb_of(dd);
  r.detM0 = r.detM * (r.tb - dd.tb0);
  std::tie(r.rot_plus, r.rot_minus) = rot_of(dd);
  r.sigma = signature(dd);
  r.chi = euler_characteristic(dd);
  r.c_squared = c_squared_of(dd);
  r.q_plus = plus_surgeries(dd);
  r.is_homology_sphere = abs(r.detM) == 1;
  r.d3 = d3_of(dd);
  return r;
}

// ---- interpretation ---------------------------------------------------------

/// Hopf invariant h of a plane field on S^3, from d3 = -h - 1/2.
inline Rational d3_to_hopf(const Rational& d3) { return -d3 - Rational(1, 2); }

enum class Verdict { Overtwisted, Inconclusive };

inline std::string_view to_string(Verdict v) {
  return v == Verdict::Overtwisted ? "Overtwisted" : "Inconclusive";
}

/// Only valid for contact structures on S^3, where d3 = -1/2 is the tight one.
inline Verdict overtwisted_verdict(Int tb, const Rational& d3, const std::optional<TorusKnotSpec>& knot) {
  if (d3 != Rational(-1, 2)) return Verdict::Overtwisted;
  if (knot && tb > max_tb(*knot)) return Verdict::Overtwisted;
  return Verdict::Inconclusive;
}

}  // namespace legendrian
