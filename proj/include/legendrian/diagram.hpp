#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "legendrian/exact_arith.hpp"

namespace legendrian {

/// One Legendrian surgery knot. tb/rot are measured in the unsurgered standard S^3.
struct SurgeryComponent {
  std::string name;
  Int tb = 0;
  Int rot = 0;
  int coeff = -1;  ///< contact surgery coefficient, +1 or -1

  friend bool operator==(const SurgeryComponent&, const SurgeryComponent&) = default;
};

/// The knot L whose invariants are computed after surgery.
struct DistinguishedKnot {
  Int tb0 = 0;
  Int rot0 = 0;
  std::vector<Int> lk;  ///< lk(L, L_i) in component order

  friend bool operator==(const DistinguishedKnot&, const DistinguishedKnot&) = default;
};

/// Partition of component indices into blocks of Legendrian push-offs.
using DeflationGroups = std::vector<std::vector<std::size_t>>;

struct SurgeryDiagram {
  std::vector<SurgeryComponent> components;
  IntMatrix offdiag;  ///< pairwise linking numbers; the diagonal is ignored
  DistinguishedKnot knot;
  std::optional<DeflationGroups> groups;

  std::size_t size() const noexcept { return components.size(); }

  friend bool operator==(const SurgeryDiagram&, const SurgeryDiagram&) = default;
};

inline bool is_odd(Int v) { return v % 2 != 0; }

/// Throws on any violated diagram invariant. Checked by every matrix builder.
inline void validate(const SurgeryDiagram& d) {
  const std::size_t n = d.size();
  if (d.offdiag.size() != n) {
    throw Error(ErrorKind::InvalidDiagram, "linking matrix has size " + std::to_string(d.offdiag.size()) +
                                               " but there are " + std::to_string(n) + " components");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d.offdiag(i, j) != d.offdiag(j, i))
        throw Error(ErrorKind::AsymmetricLinking, "linking matrix not symmetric");
  for (const auto& c : d.components) {
    if (c.coeff != 1 && c.coeff != -1)
      throw Error(ErrorKind::InvalidDiagram, "component '" + c.name + "': contact coefficient must be +1 or -1");
    if (!is_odd(c.tb + c.rot))
      throw Error(ErrorKind::InvalidDiagram, "component '" + c.name + "': tb + rot must be odd");
  }
  if (d.knot.lk.size() != n)
    throw Error(ErrorKind::InvalidDiagram, "distinguished knot needs one linking number per component");
  if (!is_odd(d.knot.tb0 + d.knot.rot0))
    throw Error(ErrorKind::InvalidDiagram, "distinguished knot: tb0 + rot0 must be odd");
}

/// Symmetric linking matrix with the surgery framings tb_i + coeff_i on the diagonal.
inline IntMatrix linking_matrix(const SurgeryDiagram& d) {
  validate(d);
  IntMatrix m = d.offdiag;
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d.components[i].tb + d.components[i].coeff;
  return m;
}

/// Linking matrix bordered by L's linking numbers, with L's self-linking slot set to zero.
inline IntMatrix extended_matrix(const SurgeryDiagram& d) {
  IntMatrix m = linking_matrix(d);
  const std::size_t n = d.size();
  IntMatrix ext(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    ext(0, i + 1) = d.knot.lk[i];
    ext(i + 1, 0) = d.knot.lk[i];
    for (std::size_t j = 0; j < n; ++j) ext(i + 1, j + 1) = m(i, j);
  }
  return ext;
}

/// Same diagram with the distinguished knot's orientation reversed.
inline SurgeryDiagram reversed(SurgeryDiagram d) {
  d.knot.rot0 = -d.knot.rot0;
  for (auto& v : d.knot.lk) v = -v;
  return d;
}

inline IntVector rot_vector(const SurgeryDiagram& d) {
  IntVector v;
  v.reserve(d.size());
  for (const auto& c : d.components) v.emplace_back(c.rot);
  return v;
}

inline IntVector lk_vector(const SurgeryDiagram& d) { return to_big(d.knot.lk); }

/// Group-summed data: one row/column per block of push-offs.
///
/// reduced(G, H) is the sum over the columns of H in the row of G's
/// representative. It is not symmetric in general; diag(weights) * reduced is.
struct DeflatedDiagram {
  IntMatrix reduced;
  std::vector<Int> weights;
  std::vector<Int> rot;
  std::vector<Int> lk;
  std::vector<int> coeff;
  Int tb0 = 0;
  Int rot0 = 0;

  std::size_t size() const noexcept { return weights.size(); }
};

inline void validate_groups(const SurgeryDiagram& d, const DeflationGroups& groups) {
  const std::size_t n = d.size();
  std::vector<int> seen(n, 0);
  std::vector<std::size_t> group_of(n);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) throw Error(ErrorKind::InvalidGroup, "empty deflation group");
    for (std::size_t idx : groups[g]) {
      if (idx >= n) throw Error(ErrorKind::InvalidGroup, "group index " + std::to_string(idx) + " out of range");
      if (seen[idx]++) throw Error(ErrorKind::InvalidGroup, "component " + std::to_string(idx) + " in two groups");
      group_of[idx] = g;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) throw Error(ErrorKind::InvalidGroup, "component " + std::to_string(i) + " in no group");

  for (const auto& group : groups) {
    const std::size_t rep = group.front();
    const auto& c0 = d.components[rep];
    for (std::size_t idx : group) {
      const auto& c = d.components[idx];
      if (c.tb != c0.tb || c.rot != c0.rot || c.coeff != c0.coeff)
        throw Error(ErrorKind::InvalidGroup, "group members differ in (tb, rot, coeff)");
      if (d.knot.lk[idx] != d.knot.lk[rep])
        throw Error(ErrorKind::InvalidGroup, "group members link L differently");
      for (std::size_t j = 0; j < n; ++j) {
        if (j == idx || j == rep) continue;
        if (group_of[j] == group_of[rep]) {
          if (d.offdiag(idx, j) != c0.tb)
            throw Error(ErrorKind::InvalidGroup, "push-offs in a group must link each other tb times");
        } else if (d.offdiag(idx, j) != d.offdiag(rep, j)) {
          throw Error(ErrorKind::InvalidGroup, "group members link an outside component differently");
        }
      }
      if (idx != rep && d.offdiag(idx, rep) != c0.tb)
        throw Error(ErrorKind::InvalidGroup, "push-offs in a group must link each other tb times");
    }
  }
}

inline DeflatedDiagram deflate(const SurgeryDiagram& d, const DeflationGroups& groups) {
  IntMatrix m = linking_matrix(d);
  validate_groups(d, groups);
  const std::size_t k = groups.size();
  DeflatedDiagram out;
  out.reduced = IntMatrix(k);
  out.tb0 = d.knot.tb0;
  out.rot0 = d.knot.rot0;
  for (std::size_t g = 0; g < k; ++g) {
    const std::size_t rep = groups[g].front();
    for (std::size_t h = 0; h < k; ++h) {
      BigInt sum = 0;
      for (std::size_t j : groups[h]) sum += m(rep, j);
      out.reduced(g, h) = sum;
    }
    out.weights.push_back(static_cast<Int>(groups[g].size()));
    out.rot.push_back(d.components[rep].rot);
    out.lk.push_back(d.knot.lk[rep]);
    out.coeff.push_back(d.components[rep].coeff);
  }
  return out;
}

inline DeflationGroups singleton_groups(std::size_t n) {
  DeflationGroups g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = {i};
  return g;
}

}  // namespace legendrian
