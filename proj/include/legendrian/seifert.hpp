#pragma once

/*
 * Tight contact structures on torus-knot complements.
 *
 * The complement of the (p, q)-torus knot is Seifert fibred over the disc
 * with two singular fibres. For q = np + 1 and q = -(np - 1) the invariants
 * normalize (after shifting the first invariant and the boundary slope by +1)
 * to r1 = (p-1)/p, r2 = n/|q| and s = 1/(tb - pq) + 1, which is the input to
 * the Ding-Li-Zhang counts used here. Only the two cases of that
 * classification that these knots reach are implemented:
 *
 *   DLZ1: s in (-inf, 0) u [2, inf)
 *   DLZ2: r1, r2 in [1/2, 1) and s in [0, 1)
 *
 * Anything the recipe does not cover comes back as Unknown with a reason.
 */

#include <optional>
#include <string>
#include <vector>

#include "legendrian/exact_arith.hpp"
#include "legendrian/torus_knot.hpp"

namespace legendrian {

enum class KnotForm { Positive, Negative };  // q = np + 1, q = -(np - 1)

struct SeifertComplement {
  TorusKnotSpec knot;
  KnotForm form = KnotForm::Positive;
  Int n = 1;
  Int pprime = 1;
  Int qprime = 0;
  Rational r1;  ///< normalized, (p-1)/p
  Rational r2;  ///< normalized, n/|q|
  Int shift = 1;
};

struct SlopeProblem {
  SeifertComplement complement;
  Int tb = 0;
  Rational s;  ///< normalized boundary slope 1/(tb - pq) + 1
};

enum class DlzCase { DLZ1, DLZ2, Unclassified };

inline std::string_view to_string(DlzCase c) {
  switch (c) {
    case DlzCase::DLZ1: return "DLZ1";
    case DlzCase::DLZ2: return "DLZ2";
    case DlzCase::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

/// Closed small Seifert fibred space M(e0; r1, r2, r3).
struct SmallSeifert {
  BigInt e0;
  Rational r1;
  Rational r2;
  Rational r3;

  friend bool operator==(const SmallSeifert&, const SmallSeifert&) = default;
};

struct StdCount {
  std::optional<Int> count;
  std::optional<std::vector<Int>> rot_set;
};

struct TightCount {
  TorusKnotSpec knot;
  Int tb = 0;
  std::optional<Rational> slope;
  DlzCase kase = DlzCase::Unclassified;
  std::optional<Int> total;
  std::optional<Int> std_count;
  std::optional<Int> exceptional_upper_bound;
  std::optional<SmallSeifert> reduction;
  std::string reason;  ///< why some field is Unknown; empty when everything is known
};

inline SeifertComplement complement_of(const TorusKnotSpec& k) {
  const TorusKnotSpec spec = make_torus_knot(k.p, k.q);
  SeifertComplement c;
  c.knot = spec;
  const Int p = spec.p;
  const Int q = spec.q;
  if (q > 0 && (q - 1) % p == 0 && (q - 1) / p >= 1) {
    c.form = KnotForm::Positive;
    c.n = (q - 1) / p;
    c.qprime = -c.n;
  } else if (q < 0 && (1 - q) % p == 0 && (1 - q) / p >= 2) {
    c.form = KnotForm::Negative;
    c.n = (1 - q) / p;
    c.qprime = c.n;
  } else {
    throw Error(ErrorKind::UnsupportedForm,
                to_string(spec) + " is not of the form (p, np+1) with n >= 1 or (p, -(np-1)) with n >= 2");
  }
  c.pprime = 1;
  c.r1 = Rational(p - 1, p);                    // -p'/p + 1
  c.r2 = Rational(-c.qprime) / Rational(q);     // -q'/q
  return c;
}

inline SlopeProblem slope_of(const SeifertComplement& c, Int tb) {
  const Int pq = c.knot.p * c.knot.q;
  if (tb == pq) throw Error(ErrorKind::InfiniteSlope, "infinite slope (tb = pq)");
  return {c, tb, make_rational(1, tb - pq) + c.shift};
}

inline DlzCase classify_case(const SlopeProblem& sp) {
  const Rational half(1, 2);
  if (sp.s < 0 || sp.s >= 2) return DlzCase::DLZ1;
  const auto& c = sp.complement;
  if (c.r1 >= half && c.r1 < 1 && c.r2 >= half && c.r2 < 1 && sp.s >= 0 && sp.s < 1) return DlzCase::DLZ2;
  return DlzCase::Unclassified;
}

namespace detail {

// Splits s - floor(s) = b/a and returns a/(a-b) when it is an integer.
inline BigInt slope_denominator_ratio(const Rational& s) {
  Rational frac = s - Rational(floor_of(s));
  BigInt a = denominator_of(frac);
  BigInt b = numerator_of(frac);
  if (a % (a - b) != 0) {
    throw Error(ErrorKind::UnsupportedSlope,
                "slope " + format_rational(s) + ": a/(a-b) is not an integer, recipe undefined");
  }
  return a / (a - b);
}

}  // namespace detail

/// floor(s) * prod |a_j^i + 1| * (a1 - 1) * a2 over the expansions of -1/r_i.
inline Int count_dlz1(const SlopeProblem& sp) {
  if (classify_case(sp) != DlzCase::DLZ1 || sp.s < 2) {
    throw Error(ErrorKind::UnsupportedSlope, "DLZ1 count is only available for slopes s >= 2, got " +
                                                 format_rational(sp.s));
  }
  BigInt a1 = detail::slope_denominator_ratio(sp.s) + 1;
  BigInt a2 = 1;
  BigInt product = floor_of(sp.s) * (a1 - 1) * a2;
  for (const Rational& r : {sp.complement.r1, sp.complement.r2}) {
    for (const BigInt& a : neg_cf_expand(-1 / r)) product *= abs(BigInt(a + 1));
  }
  return to_int(product);
}

inline SmallSeifert reduce_dlz2(const SlopeProblem& sp) {
  if (classify_case(sp) != DlzCase::DLZ2) {
    throw Error(ErrorKind::UnsupportedSlope, "slope " + format_rational(sp.s) + " is not in case DLZ2");
  }
  BigInt a1 = detail::slope_denominator_ratio(sp.s) + 1;
  BigInt a2 = 1;
  SmallSeifert out;
  out.e0 = -1 - floor_of(sp.s);
  out.r1 = sp.complement.r1;
  out.r2 = sp.complement.r2;
  out.r3 = 1 / (Rational(a1) - 1 / Rational(a2 + 1));
  return out;
}

/// Tight structures on M(-1; 1/2, 2/3, 2/(2k+1)), the reduction of the
/// left-handed trefoil complement at tb = -6 - k.
inline Int count_dlz2_lht(Int k) {
  if (k < 1) throw Error(ErrorKind::UnsupportedInput, "left-handed trefoil count needs k >= 1");
  return k + 4;
}

inline Int count_dlz2(const SlopeProblem& sp) {
  if (!is_left_handed_trefoil(sp.complement.knot)) {
    throw Error(ErrorKind::UnsupportedInput,
                "small Seifert count is only available for the left-handed trefoil reduction");
  }
  reduce_dlz2(sp);
  return count_dlz2_lht(-6 - sp.tb);
}

/// Legendrian realisations in the standard tight S^3 with the given tb.
inline StdCount std_count(const TorusKnotSpec& k, Int tb) {
  if (tb > max_tb(k)) return {Int{0}, std::vector<Int>{}};
  if (is_left_handed_trefoil(k)) {
    const Int kk = -6 - tb;  // tb <= -6 here
    std::vector<Int> rots;
    for (Int r = -(kk + 1); r <= kk + 1; r += 2) rots.push_back(r);
    return {kk + 2, rots};
  }
  return {};
}

/// Total tight count minus the standard realisations bounds the strongly exceptional ones.
inline TightCount exceptional_bound(const TorusKnotSpec& knot, Int tb) {
  TightCount out;
  out.knot = make_torus_knot(knot.p, knot.q);
  out.tb = tb;
  try {
    SlopeProblem sp = slope_of(complement_of(out.knot), tb);
    out.slope = sp.s;
    out.kase = classify_case(sp);
    switch (out.kase) {
      case DlzCase::DLZ1:
        out.total = count_dlz1(sp);
        break;
      case DlzCase::DLZ2:
        out.reduction = reduce_dlz2(sp);
        out.total = count_dlz2(sp);
        break;
      case DlzCase::Unclassified:
        out.reason = "no case of the classification applies at slope " + format_rational(sp.s);
        break;
    }
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::UnsupportedForm:
      case ErrorKind::UnsupportedSlope:
      case ErrorKind::UnsupportedInput:
      case ErrorKind::InfiniteSlope:
        out.reason = e.what();
        break;
      default:
        throw;
    }
  }
  StdCount sc = std_count(out.knot, tb);
  out.std_count = sc.count;
  if (out.total && out.std_count) {
    out.exceptional_upper_bound = *out.total - *out.std_count;
  } else if (out.reason.empty()) {
    out.reason = "standard realisation count unknown";
  }
  return out;
}

}  // namespace legendrian
