// Build a surgery diagram in code, compute the invariants of the
// distinguished knot, and ask how many tight structures sit behind it.

#include <iostream>

#include "legendrian/legendrian.hpp"

int main() {
  using namespace legendrian;

  // Left-handed trefoil with tb = -5: three tb = -1 unknots with contact
  // (-1)-surgery around a single (+1)-surgery on a tb = -2 unknot.
  SurgeryDiagram d;
  d.components = {{"L1", -1, 0, -1}, {"L2", -1, 0, -1}, {"L3", -2, 1, 1}, {"L4", -1, 0, -1}};
  d.offdiag = IntMatrix{{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}};
  d.knot = {-2, 1, {0, 1, -2, 1}};

  InvariantReport r = invariant_report(d);
  std::cout << "tb = " << r.tb << ", rot = +-" << r.rot_plus << ", d3 = " << format_rational(r.d3) << '\n';

  TightCount t = exceptional_bound(kLeftHandedTrefoil, r.tb);
  std::cout << "tight structures on the complement: " << *t.total
            << ", at most " << *t.exceptional_upper_bound << " strongly exceptional\n";

  // The same knot as the first member of a generated family.
  InvariantReport g = invariant_report(gen_lht(0));
  std::cout << "generated family agrees: " << std::boolalpha << (g.tb == r.tb && g.d3 == r.d3) << '\n';
}
