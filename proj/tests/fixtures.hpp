#pragma once

#include "legendrian/diagram.hpp"

namespace fixtures {

// tb = -5 left-handed trefoil, surgery knots L1..L4 left to right, all clockwise.
inline legendrian::SurgeryDiagram fig4() {
  using namespace legendrian;
  SurgeryDiagram d;
  d.components = {{"L1", -1, 0, -1}, {"L2", -1, 0, -1}, {"L3", -2, 1, 1}, {"L4", -1, 0, -1}};
  d.offdiag = IntMatrix{{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}};
  d.knot = {-2, 1, {0, 1, -2, 1}};
  return d;
}

}  // namespace fixtures
