#pragma once

// End-to-end reproduction checks. Each criterion restates the expected values
// on its own instead of reusing the closed forms in families.hpp, so a wrong
// formula there cannot hide a wrong computation here.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "legendrian/diagram.hpp"
#include "legendrian/families.hpp"
#include "legendrian/invariants.hpp"
#include "legendrian/oracle.hpp"
#include "legendrian/seifert.hpp"

namespace legendrian::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

namespace detail {

class Recorder {
 public:
  Recorder(int id, std::string name) { result_.id = id, result_.name = std::move(name); }

  template <typename A, typename B>
  void equal(const std::string& what, const A& got, const B& want) {
    ++result_.checks;
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << show(got) << ", expected " << show(want);
    fail(os.str());
  }

  void expect(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) fail(what);
  }

  template <typename Fn>
  void guarded(const std::string& what, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      ++result_.checks;
      fail(what + ": threw " + e.what());
    }
  }

  CriterionResult finish() {
    result_.pass = result_.failures.empty();
    return std::move(result_);
  }

 private:
  template <typename T>
  static std::string show(const T& v) {
    if constexpr (std::is_same_v<T, Rational>) {
      return format_rational(v);
    } else if constexpr (std::is_same_v<T, std::optional<Int>>) {
      return v ? std::to_string(*v) : std::string("Unknown");
    } else if constexpr (std::is_same_v<T, DlzCase>) {
      return std::string(to_string(v));
    } else {
      std::ostringstream os;
      os << v;
      return os.str();
    }
  }

  void fail(std::string message) {
    if (result_.failures.size() < 8) result_.failures.push_back(std::move(message));
  }

  CriterionResult result_;
};

inline std::string at(const char* family, std::initializer_list<Int> params) {
  std::string s = std::string(family) + "(";
  bool first = true;
  for (Int v : params) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + ")";
}

inline Int sign_pow(Int e) { return e % 2 == 0 ? 1 : -1; }

inline IntMatrix random_symmetric(std::mt19937& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

// The diagrams in the positive and negative sweeps.
inline std::vector<std::pair<std::string, SurgeryDiagram>> sweep_diagrams() {
  std::vector<std::pair<std::string, SurgeryDiagram>> out;
  for (Int p = 2; p <= 5; ++p)
    for (Int n = 1; n <= 4; ++n)
      for (Int k = 0; k <= p - 1; ++k) out.emplace_back(at("pos", {p, n, k, p - 1 - k}), gen_pos(p, n, k, p - 1 - k));
  for (Int p = 2; p <= 5; ++p)
    for (Int n = 2; n <= 4; ++n)
      for (Int k = 0; k <= p - 2; ++k)
        for (Int u = 0; u <= n - 2; ++u)
          out.emplace_back(at("neg", {p, n, k, p - 2 - k, u, n - 2 - u}), gen_neg(p, n, k, p - 2 - k, u, n - 2 - u));
  return out;
}

}  // namespace detail

/// The tb = -5 left-handed trefoil diagram, surgery knots left to right.
inline SurgeryDiagram trefoil_tb_minus_5() {
  SurgeryDiagram d;
  d.components = {{"L1", -1, 0, -1}, {"L2", -1, 0, -1}, {"L3", -2, 1, 1}, {"L4", -1, 0, -1}};
  d.offdiag = IntMatrix{{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}};
  d.knot = {-2, 1, {0, 1, -2, 1}};
  return d;
}

inline CriterionResult criterion_1() {
  detail::Recorder rec(1, "tb = -5 trefoil reproduction");
  rec.guarded("trefoil", [&] {
    SurgeryDiagram d = trefoil_tb_minus_5();
    InvariantReport r = invariant_report(d);
    rec.equal("tb", r.tb, Int{-5});
    rec.equal("rot", r.rot_plus, Int{6});
    rec.equal("rot reversed", r.rot_minus, Int{-6});
    rec.equal("d3", r.d3, Rational(3, 2));
    rec.equal("det M", r.detM, BigInt(-1));
    rec.equal("det M0", r.detM0, BigInt(3));
    rec.equal("sigma", r.sigma, -2);
    rec.equal("chi", r.chi, Int{5});
    rec.equal("c^2", r.c_squared, Rational(6));
    IntVector rot = rot_vector(d);
    RationalVector x = solve(linking_matrix(d), std::span<const BigInt>(rot));
    RationalVector want{Rational(2), Rational(4), Rational(6), Rational(3)};
    rec.expect(x == want, "x = M^-1 rot should be (2,4,6,3)");
  });
  return rec.finish();
}

inline CriterionResult criterion_2() {
  detail::Recorder rec(2, "left-handed trefoil family m = 0..12");
  for (Int m = 0; m <= 12; ++m) {
    const std::string tag = detail::at("lht", {m});
    rec.guarded(tag, [&] {
      InvariantReport r = invariant_report(gen_lht(m));
      rec.equal(tag + " tb", r.tb, m - 5);
      rec.equal(tag + " |rot|", abs(r.rot_plus), abs(m - 6));
      rec.equal(tag + " rot antisymmetry", r.rot_minus, -r.rot_plus);
      rec.equal(tag + " d3", r.d3, Rational(3, 2));
      rec.equal(tag + " sigma", Int{r.sigma}, -2 - m);
      rec.equal(tag + " chi", r.chi, m + 5);
      rec.equal(tag + " c^2", r.c_squared, Rational(6 - m));
      rec.equal(tag + " |det M|", BigInt(abs(r.detM)), BigInt(1));
    });
  }
  return rec.finish();
}

inline CriterionResult criterion_3() {
  detail::Recorder rec(3, "(p, np+1) torus knot sweep");
  for (Int p = 2; p <= 5; ++p)
    for (Int n = 1; n <= 4; ++n) {
      std::set<Int> rots;
      for (Int k = 0; k <= p - 1; ++k) {
        const Int l = p - 1 - k;
        const std::string tag = detail::at("pos", {p, n, k, l});
        rec.guarded(tag, [&] {
          InvariantReport r = invariant_report(gen_pos(p, n, k, l));
          const Int s = p - l + k;
          const Int sign = detail::sign_pow(n + p);
          rec.equal(tag + " tb", r.tb, n * p * p + p + 1);
          rec.equal(tag + " rot", r.rot_plus, n * p * (l - k) - n * p * p - p);
          rec.equal(tag + " d3", r.d3, Rational(n * (1 - s * s), 4) + Rational(1, 2));
          rec.equal(tag + " det M", r.detM, BigInt(sign));
          rec.equal(tag + " det M0", r.detM0, BigInt(sign * (n * p * p + p + 3)));
          rec.equal(tag + " c^2", r.c_squared, Rational(-n * s * s - p));
          rec.expect(r.d3 != Rational(-1, 2), tag + " d3 must differ from -1/2");
          rots.insert(r.rot_plus);
          rots.insert(r.rot_minus);
        });
      }
      rec.equal(detail::at("pos", {p, n}) + " distinct rot values", rots.size(), static_cast<std::size_t>(2 * p));
    }
  return rec.finish();
}

inline CriterionResult criterion_4() {
  detail::Recorder rec(4, "(p, -(np-1)) torus knot sweep");
  for (Int p = 2; p <= 5; ++p)
    for (Int n = 2; n <= 4; ++n) {
      std::set<std::pair<Int, Rational>> records;
      for (Int k = 0; k <= p - 2; ++k)
        for (Int u = 0; u <= n - 2; ++u) {
          const Int l = p - 2 - k, v = n - 2 - u;
          const std::string tag = detail::at("neg", {p, n, k, l, u, v});
          rec.guarded(tag, [&] {
            InvariantReport r = invariant_report(gen_neg(p, n, k, l, u, v));
            const Int s = p - l + k;
            rec.equal(tag + " tb", r.tb, -n * p * p + p + 1);
            rec.equal(tag + " rot", r.rot_plus, n * p * p - p - n * p * (l - k) + p * (v - u));
            rec.equal(tag + " d3", r.d3, Rational(n * s * s + 2 * s * (v - u), 4) - Rational(1, 2));
            rec.equal(tag + " det M", r.detM, BigInt(detail::sign_pow(p + 1)));
            rec.equal(tag + " det M0", r.detM0, BigInt(detail::sign_pow(p - 1) * (-n * p * p + p + 3)));
            rec.equal(tag + " c^2", r.c_squared, Rational(n * s * s + 2 * s * (v - u) - p));
            rec.expect(r.d3 != Rational(-1, 2), tag + " d3 must differ from -1/2");
            records.emplace(r.rot_plus, r.d3);
            records.emplace(r.rot_minus, r.d3);
          });
        }
      rec.equal(detail::at("neg", {p, n}) + " distinct records", records.size(),
                static_cast<std::size_t>(2 * (p - 1) * (n - 1)));
    }
  return rec.finish();
}

inline CriterionResult criterion_5() {
  detail::Recorder rec(5, "(2, 3) special case");
  rec.guarded("pos(2,1)", [&] {
    FamilyParams prm;
    prm.p = 2;
    prm.n = 1;
    std::set<std::tuple<Int, Int, Rational>> got;
    for (const FamilyRow& row : enumerate(FamilyId::PosTorus, prm)) {
      got.emplace(row.computed.tb, row.computed.rot, row.computed.d3);
      rec.expect(row.agrees, "computed row differs from closed form");
    }
    std::set<std::tuple<Int, Int, Rational>> want{{7, 4, Rational(1, 2)},
                                                  {7, -4, Rational(1, 2)},
                                                  {7, 8, Rational(-3, 2)},
                                                  {7, -8, Rational(-3, 2)}};
    rec.expect(got == want, "pos(2,1) should give exactly (7,+-4,1/2) and (7,+-8,-3/2)");
  });
  return rec.finish();
}

inline CriterionResult criterion_6() {
  detail::Recorder rec(6, "counting pipeline");
  rec.guarded("lht tb=-5", [&] { rec.equal("(2,-3) tb=-5 total", exceptional_bound({2, -3}, -5).total, std::optional<Int>(2)); });
  for (Int k = 1; k <= 10; ++k) {
    const std::string tag = "(2,-3) tb=" + std::to_string(-6 - k);
    rec.guarded(tag, [&] {
      TightCount t = exceptional_bound({2, -3}, -6 - k);
      rec.equal(tag + " total", t.total, std::optional<Int>(k + 4));
      rec.equal(tag + " std", t.std_count, std::optional<Int>(k + 2));
      rec.equal(tag + " bound", t.exceptional_upper_bound, std::optional<Int>(2));
    });
  }
  rec.guarded("rht tb=7", [&] { rec.equal("(2,3) tb=7 total", exceptional_bound({2, 3}, 7).total, std::optional<Int>(4)); });
  for (Int p = 2; p <= 5; ++p)
    for (Int n = 1; n <= 4; ++n) {
      const Int q = n * p + 1, tb = n * p * p + p + 1;
      const std::string tag = detail::at("count", {p, q, tb});
      rec.guarded(tag, [&] { rec.equal(tag, exceptional_bound({p, q}, tb).total, std::optional<Int>(2 * p)); });
    }
  for (Int p = 2; p <= 5; ++p)
    for (Int n = 2; n <= 4; ++n) {
      const Int q = -(n * p - 1), tb = -n * p * p + p + 1;
      const std::string tag = detail::at("count", {p, q, tb});
      rec.guarded(tag, [&] {
        rec.equal(tag, exceptional_bound({p, q}, tb).total, std::optional<Int>(2 * (p - 1) * (n - 1)));
      });
    }
  return rec.finish();
}

inline CriterionResult criterion_7() {
  detail::Recorder rec(7, "left-handed trefoil synthesis");
  std::vector<Int> tbs{-5};
  for (Int tb = -7; tb >= -16; --tb) tbs.push_back(tb);
  for (Int tb : tbs) {
    const std::string tag = "tb=" + std::to_string(tb);
    rec.guarded(tag, [&] {
      auto found = static_cast<Int>(lht_exceptional_at(tb).size());
      TightCount t = exceptional_bound(kLeftHandedTrefoil, tb);
      rec.equal(tag + " enumeration", found, Int{2});
      rec.equal(tag + " upper bound", t.exceptional_upper_bound, std::optional<Int>(2));
    });
  }
  return rec.finish();
}

inline CriterionResult criterion_8() {
  detail::Recorder rec(8, "deflation equivalence");
  for (const auto& [tag, d] : detail::sweep_diagrams()) {
    rec.guarded(tag, [&] {
      InvariantReport full = invariant_report(d);
      InvariantReport defl = invariant_report(deflate(d, *d.groups));
      rec.expect(full == defl, tag + " deflated report differs from full report");
    });
  }
  return rec.finish();
}

inline CriterionResult criterion_9() {
  detail::Recorder rec(9, "property suites");
  rec.guarded("linear algebra", [&] {
    std::mt19937 rng(917);
    std::uniform_int_distribution<int> rhs(-9, 9);
    int compared = 0;
    for (int trial = 0; trial < 240; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
      IntMatrix m = detail::random_symmetric(rng, n, 5);
      BigInt det = determinant(m);
      rec.expect(det == oracle::cofactor_determinant(m), "determinant differs from cofactor expansion");
      ++compared;
      if (det == 0) continue;
      IntVector v(n);
      for (auto& e : v) e = rhs(rng);
      RationalVector x = solve(m, std::span<const BigInt>(v));
      RationalVector back = m.multiply(std::span<const Rational>(x));
      bool exact = true;
      for (std::size_t i = 0; i < n; ++i) exact = exact && back[i] == Rational(v[i]);
      rec.expect(exact, "M solve(M, v) != v");
    }
    rec.expect(compared >= 200, "fewer than 200 random matrices compared");
  });
  rec.guarded("continued fractions", [&] {
    std::mt19937 rng(3);
    std::uniform_int_distribution<Int> den(1, 300);
    for (int trial = 0; trial < 300; ++trial) {
      Int d = den(rng);
      std::uniform_int_distribution<Int> num(d + 1, 30 * d);
      Rational r(-num(rng), d);
      auto a = neg_cf_expand(r);
      rec.expect(std::all_of(a.begin(), a.end(), [](const BigInt& x) { return x <= -2; }), "coefficient above -2");
      rec.expect(neg_cf_evaluate(a) == r, "continued fraction does not round-trip");
    }
  });
  std::vector<std::pair<std::string, SurgeryDiagram>> corpus = detail::sweep_diagrams();
  corpus.emplace_back("trefoil", trefoil_tb_minus_5());
  for (Int m = 0; m <= 12; ++m) corpus.emplace_back(detail::at("lht", {m}), gen_lht(m));
  for (const auto& [tag, d] : corpus) {
    rec.guarded(tag, [&] {
      InvariantReport r = invariant_report(d);
      if (abs(r.detM) == 1) rec.equal(tag + " 2 d3 denominator", denominator_of(r.d3), BigInt(2));
      rec.expect((r.tb + r.rot_plus) % 2 != 0, tag + " tb + rot must be odd");
      InvariantReport rev = invariant_report(reversed(d));
      rec.equal(tag + " reversed rot", rev.rot_plus, -r.rot_plus);
      rec.expect(rev.tb == r.tb && rev.d3 == r.d3, tag + " reversal changes tb or d3");
    });
  }
  return rec.finish();
}

inline CriterionResult criterion_10() {
  detail::Recorder rec(10, "honest unknown");
  rec.guarded("(3,-5)", [&] {
    TightCount t = exceptional_bound({3, -5}, -13);
    rec.expect(t.slope && *t.slope > 1 && *t.slope < 2, "slope should lie in (1, 2)");
    rec.equal("case", t.kase, DlzCase::Unclassified);
    rec.equal("total", t.total, std::optional<Int>());
    rec.expect(!t.reason.empty(), "an Unknown total needs a reason");
  });
  return rec.finish();
}

inline std::vector<CriterionResult> run_all() {
  return {criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(),
          criterion_6(), criterion_7(), criterion_8(), criterion_9(), criterion_10()};
}

inline std::string summary_line(const CriterionResult& r) {
  std::string line = std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" +
                     std::to_string(r.checks) + " checks)";
  return line;
}

}  // namespace legendrian::acceptance
