#pragma once

/*
 * Parametrized surgery diagrams of strongly exceptional Legendrian torus knots
 * and the closed-form invariants they are expected to reproduce.
 *
 * In every generated diagram the distinguished knot L is a Legendrian push-off
 * of the single contact (+1)-surgery knot: tb0 = -2, rot0 = 1, lk(L, K) = tb(K)
 * and lk(L, L_i) = lk(K, L_i) otherwise. All knots are oriented clockwise,
 * which is orientation +1.
 *
 *   LhtM      left-handed trefoil, tb = m - 5: K, a chain of m unknots,
 *             then three unknots hanging off the top of the chain
 *   PosTorus  (p, np+1), tb = np^2 + p + 1: K, n parallel copies of a
 *             tb = -p unknot, p-1 parallel tb = -1 unknots
 *   NegTorus  (p, -(np-1)), tb = -np^2 + p + 1: K, p-1 parallel tb = -1
 *             unknots, then a tb = 1-p and a tb = 1-n unknot
 *   RhtTable  right-handed trefoils with tb = m + 7, tabulated values only
 *   LhtStab   negative stabilisations of the tb = -6 left-handed trefoil,
 *             tabulated values only
 */

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "legendrian/diagram.hpp"
#include "legendrian/invariants.hpp"
#include "legendrian/torus_knot.hpp"

namespace legendrian {

enum class FamilyId { LhtM, PosTorus, NegTorus, RhtTable, LhtStab };

inline std::string_view to_string(FamilyId f) {
  switch (f) {
    case FamilyId::LhtM: return "lht";
    case FamilyId::PosTorus: return "pos";
    case FamilyId::NegTorus: return "neg";
    case FamilyId::RhtTable: return "rht-table";
    case FamilyId::LhtStab: return "lht-stab";
  }
  return "?";
}

inline std::optional<FamilyId> family_from_string(std::string_view s) {
  for (FamilyId f : {FamilyId::LhtM, FamilyId::PosTorus, FamilyId::NegTorus, FamilyId::RhtTable, FamilyId::LhtStab})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

inline bool has_diagram(FamilyId f) {
  return f == FamilyId::LhtM || f == FamilyId::PosTorus || f == FamilyId::NegTorus;
}

struct FamilyParams {
  Int p = 0, n = 0, k = 0, l = 0, u = 0, v = 0, m = 0;
  char variant = 0;  ///< 'a' or 'b' for RhtTable

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

enum class Source { Computed, ClosedForm, PaperTable };

inline std::string_view to_string(Source s) {
  switch (s) {
    case Source::Computed: return "Computed";
    case Source::ClosedForm: return "ClosedForm";
    case Source::PaperTable: return "PaperTable";
  }
  return "?";
}

struct RealizationRecord {
  FamilyId family = FamilyId::LhtM;
  FamilyParams params;
  int orientation = 1;
  Int tb = 0;
  Int rot = 0;
  Rational d3;
  Source source = Source::Computed;

  auto triple() const { return std::tie(tb, rot, d3); }
};

/// The knot type realised by a family at the given parameters.
inline TorusKnotSpec knot_of(FamilyId f, const FamilyParams& prm) {
  switch (f) {
    case FamilyId::LhtM:
    case FamilyId::LhtStab: return kLeftHandedTrefoil;
    case FamilyId::RhtTable: return kRightHandedTrefoil;
    case FamilyId::PosTorus: return {prm.p, prm.n * prm.p + 1};
    case FamilyId::NegTorus: return {prm.p, -(prm.n * prm.p - 1)};
  }
  return kLeftHandedTrefoil;
}

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidParams, message);
}

// Builds L as a push-off of component `k`.
inline DistinguishedKnot push_off_of(const SurgeryDiagram& d, std::size_t k) {
  DistinguishedKnot knot;
  knot.tb0 = d.components[k].tb;
  knot.rot0 = d.components[k].rot;
  knot.lk.resize(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) knot.lk[j] = j == k ? d.components[k].tb : to_int(d.offdiag(k, j));
  return knot;
}

inline void link(SurgeryDiagram& d, std::size_t i, std::size_t j, Int value) {
  d.offdiag(i, j) = value;
  d.offdiag(j, i) = value;
}

inline void add_block(SurgeryDiagram& d, std::vector<std::size_t>& members, std::size_t start, std::size_t count,
                      const SurgeryComponent& proto, const std::string& stem) {
  for (std::size_t i = 0; i < count; ++i) {
    SurgeryComponent c = proto;
    c.name = stem + std::to_string(i + 1);
    d.components[start + i] = c;
    members.push_back(start + i);
  }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) link(d, start + i, start + j, proto.tb);
}

inline const SurgeryComponent kPlusKnot{"K", -2, 1, +1};
inline const SurgeryComponent kUnknot{"u", -1, 0, -1};

}  // namespace detail

/// Exceptional left-handed trefoil with tb = m - 5.
inline SurgeryDiagram gen_lht(Int m) {
  detail::require(m >= 0, "lht family needs m >= 0");
  const std::size_t chain = static_cast<std::size_t>(m);
  const std::size_t n = chain + 4;
  SurgeryDiagram d;
  d.components.resize(n);
  d.offdiag = IntMatrix(n);
  d.components[0] = detail::kPlusKnot;
  for (std::size_t i = 1; i <= chain; ++i) {
    d.components[i] = detail::kUnknot;
    d.components[i].name = "c" + std::to_string(i);
    detail::link(d, i - 1, i, -1);
  }
  const std::size_t top = chain;  // K itself when the chain is empty
  for (std::size_t i = 0; i < 3; ++i) {
    d.components[chain + 1 + i] = detail::kUnknot;
    d.components[chain + 1 + i].name = "t" + std::to_string(i + 1);
  }
  detail::link(d, top, chain + 1, 1);
  detail::link(d, top, chain + 2, 1);
  detail::link(d, chain + 2, chain + 3, 1);
  d.knot = detail::push_off_of(d, 0);
  return d;
}

/// Exceptional (p, np+1)-torus knot with tb = np^2 + p + 1; k + l = p - 1.
inline SurgeryDiagram gen_pos(Int p, Int n, Int k, Int l) {
  detail::require(p >= 2 && n >= 1, "pos family needs p >= 2, n >= 1");
  detail::require(k >= 0 && l >= 0 && k + l == p - 1, "pos family needs k, l >= 0 with k + l = p - 1");
  const auto top = static_cast<std::size_t>(n);
  const auto bottom = static_cast<std::size_t>(p - 1);
  const std::size_t size = 1 + top + bottom;
  SurgeryDiagram d;
  d.components.resize(size);
  d.offdiag = IntMatrix(size);
  d.components[0] = detail::kPlusKnot;
  d.components[0].name = "shark";
  DeflationGroups groups{{0}, {}, {}};
  detail::add_block(d, groups[1], 1, top, {"", -p, l - k, -1}, "top");
  detail::add_block(d, groups[2], 1 + top, bottom, detail::kUnknot, "bottom");
  for (std::size_t j = 1; j < size; ++j) detail::link(d, 0, j, -1);
  d.knot = detail::push_off_of(d, 0);
  d.groups = groups;
  return d;
}

/// Exceptional (p, -(np-1))-torus knot with tb = -np^2 + p + 1; k + l = p - 2, u + v = n - 2.
inline SurgeryDiagram gen_neg(Int p, Int n, Int k, Int l, Int u, Int v) {
  detail::require(p >= 2 && n >= 2, "neg family needs p >= 2, n >= 2");
  detail::require(k >= 0 && l >= 0 && k + l == p - 2, "neg family needs k, l >= 0 with k + l = p - 2");
  detail::require(u >= 0 && v >= 0 && u + v == n - 2, "neg family needs u, v >= 0 with u + v = n - 2");
  const auto bottom = static_cast<std::size_t>(p - 1);
  const std::size_t a = 1 + bottom;
  const std::size_t b = a + 1;
  SurgeryDiagram d;
  d.components.resize(b + 1);
  d.offdiag = IntMatrix(b + 1);
  d.components[0] = detail::kPlusKnot;
  DeflationGroups groups{{0}, {}, {a}, {b}};
  detail::add_block(d, groups[1], 1, bottom, detail::kUnknot, "bottom");
  d.components[a] = {"a", 1 - p, l - k, -1};
  d.components[b] = {"b", 1 - n, v - u, -1};
  for (std::size_t j = 1; j <= a; ++j) detail::link(d, 0, j, -1);
  detail::link(d, a, b, -1);
  d.knot = detail::push_off_of(d, 0);
  d.groups = groups;
  return d;
}

inline void validate_params(FamilyId f, const FamilyParams& prm) {
  switch (f) {
    case FamilyId::LhtM:
      detail::require(prm.m >= 0, "lht family needs m >= 0");
      break;
    case FamilyId::PosTorus:
      detail::require(prm.p >= 2 && prm.n >= 1, "pos family needs p >= 2, n >= 1");
      detail::require(prm.k >= 0 && prm.l >= 0 && prm.k + prm.l == prm.p - 1,
                      "pos family needs k, l >= 0 with k + l = p - 1");
      break;
    case FamilyId::NegTorus:
      detail::require(prm.p >= 2 && prm.n >= 2, "neg family needs p >= 2, n >= 2");
      detail::require(prm.k >= 0 && prm.l >= 0 && prm.k + prm.l == prm.p - 2,
                      "neg family needs k, l >= 0 with k + l = p - 2");
      detail::require(prm.u >= 0 && prm.v >= 0 && prm.u + prm.v == prm.n - 2,
                      "neg family needs u, v >= 0 with u + v = n - 2");
      break;
    case FamilyId::RhtTable:
      detail::require(prm.m >= 0, "rht-table needs m >= 0");
      detail::require(prm.variant == 'a' || prm.variant == 'b', "rht-table variant must be 'a' or 'b'");
      break;
    case FamilyId::LhtStab:
      detail::require(prm.k >= 0, "lht-stab needs k >= 0");
      break;
  }
}

inline SurgeryDiagram generate(FamilyId f, const FamilyParams& prm) {
  switch (f) {
    case FamilyId::LhtM: return gen_lht(prm.m);
    case FamilyId::PosTorus: return gen_pos(prm.p, prm.n, prm.k, prm.l);
    case FamilyId::NegTorus: return gen_neg(prm.p, prm.n, prm.k, prm.l, prm.u, prm.v);
    default:
      throw Error(ErrorKind::InvalidParams, std::string(to_string(f)) + " carries tabulated values only, no diagram");
  }
}

/// Closed-form (tb, rot, d3); orientation +1 is the clockwise orientation of L.
inline RealizationRecord closed_form(FamilyId f, const FamilyParams& prm, int orientation) {
  validate_params(f, prm);
  detail::require(orientation == 1 || orientation == -1, "orientation must be +1 or -1");
  RealizationRecord r{f, prm, orientation, 0, 0, Rational(0), Source::ClosedForm};
  const Int p = prm.p, n = prm.n, m = prm.m;
  const Int lk = prm.l - prm.k;
  const Int vu = prm.v - prm.u;
  const Int shift = p - prm.l + prm.k;
  Int rot = 0;
  switch (f) {
    case FamilyId::LhtM:
      r.tb = m - 5;
      rot = 6 - m;
      r.d3 = Rational(3, 2);
      break;
    case FamilyId::PosTorus:
      r.tb = n * p * p + p + 1;
      rot = n * p * lk - n * p * p - p;
      r.d3 = Rational(n * (1 - shift * shift), 4) + Rational(1, 2);
      break;
    case FamilyId::NegTorus:
      r.tb = -n * p * p + p + 1;
      rot = n * p * p - p - n * p * lk + p * vu;
      r.d3 = Rational(n * shift * shift + 2 * shift * vu, 4) - Rational(1, 2);
      break;
    case FamilyId::RhtTable: {
      // Table rows as printed: (a, odd) and (b, even) share one pattern.
      const bool first_pattern = (prm.variant == 'a') == (m % 2 == 1);
      r.tb = m + 7;
      rot = first_pattern ? m + 1 : m - 3;
      r.d3 = first_pattern ? Rational(-3, 2) : Rational(1, 2);
      r.source = Source::PaperTable;
      break;
    }
    case FamilyId::LhtStab:
      r.tb = -6 - prm.k;
      rot = -7 - prm.k;
      r.d3 = Rational(3, 2);
      r.source = Source::PaperTable;
      break;
  }
  r.rot = orientation * rot;
  return r;
}

/// One realisation: computed from the generated diagram where there is one,
/// next to the closed form.
struct FamilyRow {
  RealizationRecord computed;
  RealizationRecord expected;
  bool agrees = true;
  bool orientations_coincide = false;
};

/// Every inner parameter choice for the given top-level parameters.
inline std::vector<FamilyParams> expand_params(FamilyId f, const FamilyParams& top) {
  std::vector<FamilyParams> out;
  switch (f) {
    case FamilyId::LhtM:
    case FamilyId::LhtStab:
      out.push_back(top);
      break;
    case FamilyId::PosTorus:
      for (Int k = 0; k <= top.p - 1; ++k) {
        FamilyParams prm = top;
        prm.k = k;
        prm.l = top.p - 1 - k;
        out.push_back(prm);
      }
      break;
    case FamilyId::NegTorus:
      for (Int k = 0; k <= top.p - 2; ++k)
        for (Int u = 0; u <= top.n - 2; ++u) {
          FamilyParams prm = top;
          prm.k = k;
          prm.l = top.p - 2 - k;
          prm.u = u;
          prm.v = top.n - 2 - u;
          out.push_back(prm);
        }
      break;
    case FamilyId::RhtTable:
      if (top.variant) {
        out.push_back(top);
      } else {
        for (char variant : {'a', 'b'}) {
          FamilyParams prm = top;
          prm.variant = variant;
          out.push_back(prm);
        }
      }
      break;
  }
  for (const auto& prm : out) validate_params(f, prm);
  return out;
}

/// All realisations of a family, deduplicated by (tb, rot, d3).
inline std::vector<FamilyRow> enumerate(FamilyId f, const FamilyParams& top) {
  std::vector<FamilyRow> rows;
  for (const FamilyParams& prm : expand_params(f, top)) {
    std::optional<InvariantReport> report;
    if (has_diagram(f)) report = invariant_report(generate(f, prm));
    for (int orientation : {1, -1}) {
      FamilyRow row;
      row.expected = closed_form(f, prm, orientation);
      if (report) {
        row.computed = {f, prm, orientation, report->tb,
                        orientation == 1 ? report->rot_plus : report->rot_minus, report->d3, Source::Computed};
      } else {
        row.computed = row.expected;
      }
      row.agrees = row.computed.triple() == row.expected.triple();
      auto same = [&](const FamilyRow& other) { return other.computed.triple() == row.computed.triple(); };
      auto it = std::find_if(rows.begin(), rows.end(), same);
      if (it == rows.end()) {
        rows.push_back(row);
      } else if (it->computed.params == prm) {
        it->orientations_coincide = true;
      }
    }
  }
  return rows;
}

/// Known strongly exceptional left-handed trefoils with the given tb.
inline std::vector<FamilyRow> lht_exceptional_at(Int tb) {
  std::vector<FamilyRow> rows;
  if (tb >= -5) {
    FamilyParams prm;
    prm.m = tb + 5;
    rows = enumerate(FamilyId::LhtM, prm);
  } else if (tb <= -6) {
    FamilyParams prm;
    prm.k = -6 - tb;
    rows = enumerate(FamilyId::LhtStab, prm);
  }
  return rows;
}

}  // namespace legendrian
