#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "legendrian/families.hpp"
#include "legendrian/invariants.hpp"

using namespace legendrian;

namespace {

ErrorKind error_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

std::vector<SurgeryDiagram> corpus() {
  std::vector<SurgeryDiagram> out{fixtures::fig4()};
  for (Int m = 0; m <= 8; ++m) out.push_back(gen_lht(m));
  for (Int p = 2; p <= 4; ++p)
    for (Int n = 1; n <= 3; ++n)
      for (Int k = 0; k <= p - 1; ++k) out.push_back(gen_pos(p, n, k, p - 1 - k));
  for (Int p = 2; p <= 4; ++p)
    for (Int n = 2; n <= 3; ++n)
      for (Int k = 0; k <= p - 2; ++k)
        for (Int u = 0; u <= n - 2; ++u) out.push_back(gen_neg(p, n, k, p - 2 - k, u, n - 2 - u));
  return out;
}

}  // namespace

TEST_CASE("tb = -5 trefoil report", "[invariants]") {
  InvariantReport r = invariant_report(fixtures::fig4());
  CHECK(r.tb == -5);
  CHECK(r.rot_plus == 6);
  CHECK(r.rot_minus == -6);
  CHECK(r.d3 == Rational(3, 2));
  CHECK(r.detM == -1);
  CHECK(r.detM0 == 3);
  CHECK(r.sigma == -2);
  CHECK(r.chi == 5);
  CHECK(r.c_squared == 6);
  CHECK(r.q_plus == 1);
  CHECK(r.is_homology_sphere);
  CHECK(overtwisted_verdict(r.tb, r.d3, kLeftHandedTrefoil) == Verdict::Overtwisted);
}

TEST_CASE("Hopf invariant conversion", "[invariants]") {
  CHECK(d3_to_hopf(Rational(3, 2)) == -2);
  CHECK(d3_to_hopf(Rational(-1, 2)) == 0);
  CHECK(d3_to_hopf(Rational(1, 2)) == -1);
}

TEST_CASE("overtwisted verdict", "[invariants]") {
  CHECK(overtwisted_verdict(-5, Rational(3, 2), std::nullopt) == Verdict::Overtwisted);
  CHECK(overtwisted_verdict(-7, Rational(-1, 2), kLeftHandedTrefoil) == Verdict::Inconclusive);
  // Above the Bennequin bound even with the tight d3.
  CHECK(overtwisted_verdict(-5, Rational(-1, 2), kLeftHandedTrefoil) == Verdict::Overtwisted);
  CHECK(overtwisted_verdict(2, Rational(-1, 2), kRightHandedTrefoil) == Verdict::Overtwisted);
  CHECK(overtwisted_verdict(1, Rational(-1, 2), kRightHandedTrefoil) == Verdict::Inconclusive);
}

TEST_CASE("precondition failures", "[invariants]") {
  // Two parallel -1 unknots that link once more than needed: M = [[-2, -2], [-2, -2]] is singular.
  SurgeryDiagram singular;
  singular.components = {{"a", -1, 0, -1}, {"b", -1, 0, -1}};
  singular.offdiag = IntMatrix{{0, -2}, {-2, 0}};
  singular.knot = {-1, 0, {0, 0}};
  CHECK(error_kind([&] { invariant_report(singular); }) == ErrorKind::SingularMatrix);
  CHECK(error_kind([&] { tb_of(singular); }) == ErrorKind::SingularMatrix);

  // A single -1 surgery on a tb = -1 unknot gives a lens space with det M = -2.
  SurgeryDiagram lens;
  lens.components = {{"u", -1, 0, -1}};
  lens.offdiag = IntMatrix(1);
  lens.knot = {-1, 0, {0}};
  CHECK(error_kind([&] { d3_of(lens); }) == ErrorKind::NotHomologySphere);
  CHECK(error_kind([&] { invariant_report(lens); }) == ErrorKind::NotHomologySphere);
  CHECK(tb_of(lens) == -1);
}

TEST_CASE("rot parity, d3 half-integrality and orientation antisymmetry", "[invariants][property]") {
  for (const auto& d : corpus()) {
    InvariantReport r = invariant_report(d);
    CHECK((r.tb + r.rot_plus) % 2 != 0);
    CHECK(r.rot_minus == -r.rot_plus);
    CHECK(denominator_of(r.d3) == 2);
    InvariantReport back = invariant_report(reversed(d));
    CHECK(back.rot_plus == r.rot_minus);
    CHECK(back.tb == r.tb);
    CHECK(back.d3 == r.d3);
  }
}

TEST_CASE("deflated invariants match the full computation", "[invariants][deflate]") {
  for (const auto& d : corpus()) {
    DeflationGroups groups = d.groups ? *d.groups : singleton_groups(d.size());
    DeflatedDiagram dd = deflate(d, groups);
    CHECK(invariant_report(dd) == invariant_report(d));
  }
}

TEST_CASE("left-handed trefoil family sweep", "[invariants][families]") {
  for (Int m = 0; m <= 12; ++m) {
    InvariantReport r = invariant_report(gen_lht(m));
    CHECK(r.tb == m - 5);
    CHECK(r.rot_plus == 6 - m);
    CHECK(r.d3 == Rational(3, 2));
    CHECK(r.sigma == -2 - m);
    CHECK(r.chi == m + 5);
    CHECK(r.c_squared == 6 - m);
    CHECK(abs(r.detM) == 1);
  }
}

#include "legendrian/acceptance.hpp"

TEST_CASE("acceptance recorder reports mismatches", "[invariants][acceptance]") {
  acceptance::detail::Recorder rec(0, "mutation");
  rec.equal("d3 without the +q term", Rational(1, 2), Rational(3, 2));
  rec.expect(true, "fine");
  auto result = rec.finish();
  CHECK(!result.pass);
  CHECK(result.checks == 2);
  REQUIRE(result.failures.size() == 1);
  CHECK(result.failures[0] == "d3 without the +q term: got 1/2, expected 3/2");
}
