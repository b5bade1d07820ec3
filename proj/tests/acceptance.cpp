#include <iostream>

#include "legendrian/acceptance.hpp"

int main() {
  bool ok = true;
  for (const auto& r : legendrian::acceptance::run_all()) {
    std::cout << legendrian::acceptance::summary_line(r) << '\n';
    for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
