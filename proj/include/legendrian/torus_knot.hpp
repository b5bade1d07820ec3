#pragma once

#include <numeric>
#include <string>

#include "legendrian/exact_arith.hpp"

namespace legendrian {

/// The (p, q)-torus knot, p >= 2, q != 0, gcd(p, |q|) = 1.
struct TorusKnotSpec {
  Int p = 2;
  Int q = 3;

  friend bool operator==(const TorusKnotSpec&, const TorusKnotSpec&) = default;
};

inline TorusKnotSpec make_torus_knot(Int p, Int q) {
  if (p < 2) throw Error(ErrorKind::InvalidParams, "torus knot needs p >= 2");
  if (q == 0) throw Error(ErrorKind::InvalidParams, "torus knot needs q != 0");
  if (std::gcd(p, q < 0 ? -q : q) != 1) throw Error(ErrorKind::InvalidParams, "torus knot needs gcd(p, q) = 1");
  return {p, q};
}

inline const TorusKnotSpec kLeftHandedTrefoil{2, -3};
inline const TorusKnotSpec kRightHandedTrefoil{2, 3};

inline bool is_left_handed_trefoil(const TorusKnotSpec& k) { return k == kLeftHandedTrefoil; }

/// Maximal tb of the knot in the standard tight S^3 (Etnyre-Honda bound).
inline Int max_tb(const TorusKnotSpec& k) {
  return k.q > 0 ? k.p * k.q - k.p - k.q : k.p * k.q;
}

inline std::string to_string(const TorusKnotSpec& k) {
  return "T(" + std::to_string(k.p) + "," + std::to_string(k.q) + ")";
}

}  // namespace legendrian
