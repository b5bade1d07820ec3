// legctl: invariants of contact surgery diagrams, tight-structure counts on
// torus-knot complements, and the exceptional-knot families.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "legendrian/acceptance.hpp"
#include "legendrian/legendrian.hpp"

using namespace legendrian;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInput = 2, kMath = 3, kVerify = 4 };

struct Options {
  std::string format = "table";
  std::string file;
  Int p = 0, q = 0, tb = 0;
  std::string family;
  FamilyParams params;
  std::string variant;
  std::string emit_dir;
  bool has_p = false, has_n = false, has_m = false;
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string yes_no(bool v) { return v ? "yes" : "no"; }

void row(const std::string& key, const std::string& value) {
  std::cout << "  " << std::left << std::setw(22) << key << value << '\n';
}

int cmd_invariants(const Options& opt) {
  SurgeryDiagram d = io::load_diagram(opt.file);
  InvariantReport r = invariant_report(d);
  Verdict verdict = overtwisted_verdict(r.tb, r.d3, std::nullopt);
  std::optional<bool> deflated_agrees;
  if (d.groups) deflated_agrees = invariant_report(deflate(d, *d.groups)) == r;

  if (opt.format == "json") {
    json j = io::to_json(r);
    j["hopf"] = format_rational(d3_to_hopf(r.d3));
    j["verdict"] = std::string(to_string(verdict));
    if (deflated_agrees) j["deflated_agrees"] = *deflated_agrees;
    print_json(j);
  } else {
    std::cout << opt.file << " (" << d.size() << " surgery components)\n";
    row("tb", std::to_string(r.tb));
    row("rot", std::to_string(r.rot_plus) + " / " + std::to_string(r.rot_minus) + " (reversed)");
    row("d3", format_rational(r.d3));
    row("det M", r.detM.str());
    row("det M0", r.detM0.str());
    row("signature", std::to_string(r.sigma));
    row("chi", std::to_string(r.chi));
    row("c^2", format_rational(r.c_squared));
    row("(+1)-surgeries", std::to_string(r.q_plus));
    row("homology sphere", yes_no(r.is_homology_sphere));
    row("verdict", std::string(to_string(verdict)));
    if (deflated_agrees) row("deflated cross-check", *deflated_agrees ? "agrees" : "DISAGREES");
  }
  return deflated_agrees.value_or(true) ? kOk : kMath;
}

std::string unknown_or(const std::optional<Int>& v) { return v ? std::to_string(*v) : "Unknown"; }

int cmd_count(const Options& opt) {
  TightCount t = exceptional_bound({opt.p, opt.q}, opt.tb);
  if (opt.format == "json") {
    json j = io::to_json(t);
    StdCount sc = std_count(t.knot, opt.tb);
    if (sc.rot_set) j["std_rot_set"] = *sc.rot_set;
    print_json(j);
    return kOk;
  }
  std::cout << to_string(t.knot) << " at tb = " << t.tb << '\n';
  row("slope", t.slope ? format_rational(*t.slope) : "infinite");
  row("case", std::string(to_string(t.kase)));
  row("total", unknown_or(t.total));
  row("standard", unknown_or(t.std_count));
  if (auto sc = std_count(t.knot, opt.tb); sc.rot_set && !sc.rot_set->empty()) {
    std::string rots;
    for (Int r : *sc.rot_set) rots += (rots.empty() ? "" : ", ") + std::to_string(r);
    row("standard rot", "{" + rots + "}");
  }
  row("exceptional bound", unknown_or(t.exceptional_upper_bound));
  if (t.reduction) {
    const SmallSeifert& s = *t.reduction;
    row("reduction", "M(" + s.e0.str() + "; " + format_rational(s.r1) + ", " + format_rational(s.r2) + ", " +
                         format_rational(s.r3) + ")");
  }
  if (!t.reason.empty()) row("unknown", t.reason);
  return kOk;
}

std::string params_label(FamilyId f, const FamilyParams& prm) {
  std::ostringstream os;
  switch (f) {
    case FamilyId::LhtM: os << "m=" << prm.m; break;
    case FamilyId::LhtStab: os << "k=" << prm.k; break;
    case FamilyId::RhtTable: os << "m=" << prm.m << " " << prm.variant; break;
    case FamilyId::PosTorus: os << "p=" << prm.p << " n=" << prm.n << " k=" << prm.k << " l=" << prm.l; break;
    case FamilyId::NegTorus:
      os << "p=" << prm.p << " n=" << prm.n << " k=" << prm.k << " l=" << prm.l << " u=" << prm.u << " v=" << prm.v;
      break;
  }
  return os.str();
}

std::string file_stem(FamilyId f, const FamilyParams& prm) {
  std::string label = std::string(to_string(f)) + "_" + params_label(f, prm);
  for (char& c : label)
    if (c == ' ' || c == '=') c = c == ' ' ? '_' : '-';
  return label;
}

FamilyParams checked_params(FamilyId f, const Options& opt) {
  auto need = [](bool given, const char* what) {
    if (!given) throw Error(ErrorKind::InvalidParams, std::string("missing ") + what);
  };
  FamilyParams prm = opt.params;
  switch (f) {
    case FamilyId::LhtM: need(opt.has_m, "--m"); break;
    case FamilyId::RhtTable:
      need(opt.has_m, "--m");
      if (opt.variant.size() > 1) throw Error(ErrorKind::InvalidParams, "--variant must be a or b");
      prm.variant = opt.variant.empty() ? 0 : opt.variant[0];
      break;
    case FamilyId::PosTorus:
    case FamilyId::NegTorus:
      need(opt.has_p, "--p");
      need(opt.has_n, "--n");
      break;
    case FamilyId::LhtStab: break;
  }
  return prm;
}

int cmd_family(const Options& opt) {
  auto f = family_from_string(opt.family);
  if (!f) throw Error(ErrorKind::InvalidParams, "unknown family '" + opt.family + "'");
  FamilyParams top = checked_params(*f, opt);
  if (!opt.emit_dir.empty() && !has_diagram(*f)) {
    throw Error(ErrorKind::InvalidParams, std::string(to_string(*f)) + " has tabulated values only, nothing to emit");
  }
  std::vector<FamilyRow> rows = enumerate(*f, top);

  std::vector<std::string> emitted;
  if (!opt.emit_dir.empty()) {
    std::filesystem::create_directories(opt.emit_dir);
    for (const FamilyParams& prm : expand_params(*f, top)) {
      auto path = std::filesystem::path(opt.emit_dir) / (file_stem(*f, prm) + ".json");
      io::save_diagram(generate(*f, prm), path.string());
      emitted.push_back(path.string());
    }
  }

  bool all_agree = std::all_of(rows.begin(), rows.end(), [](const FamilyRow& r) { return r.agrees; });
  if (opt.format == "json") {
    json j{{"family", opt.family}, {"rows", json::array()}, {"all_agree", all_agree}};
    for (const auto& r : rows) j["rows"].push_back(io::to_json(r));
    if (!emitted.empty()) j["emitted"] = emitted;
    print_json(j);
  } else {
    std::cout << std::left << std::setw(30) << "params" << std::setw(6) << "orient" << std::right << std::setw(6)
              << "tb" << std::setw(7) << "rot" << std::setw(7) << "d3" << "  " << std::left << std::setw(12)
              << "source" << "agrees\n";
    for (const auto& r : rows) {
      const auto& c = r.computed;
      std::cout << std::left << std::setw(30) << params_label(*f, c.params) << std::setw(6)
                << (c.orientation == 1 ? "+" : "-") << std::right << std::setw(6) << c.tb << std::setw(7) << c.rot
                << std::setw(7) << format_rational(c.d3) << "  " << std::left << std::setw(12)
                << std::string(to_string(c.source)) << (r.agrees ? "yes" : "NO");
      if (r.orientations_coincide) std::cout << "  orientations coincide (rot = 0)";
      std::cout << '\n';
    }
    std::cout << rows.size() << (rows.size() == 1 ? " distinct realisation" : " distinct realisations");
    if (*f == FamilyId::LhtM) std::cout << " (completeness of this family is conjectural)";
    std::cout << '\n';
    for (const auto& path : emitted) std::cout << "wrote " << path << '\n';
  }
  return all_agree ? kOk : kVerify;
}

int cmd_verify(const Options& opt) {
  auto results = acceptance::run_all();
  bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : results)
      j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"failures", r.failures}});
    print_json({{"criteria", j}, {"pass", ok}});
  } else {
    for (const auto& r : results) {
      std::cout << acceptance::summary_line(r) << '\n';
      for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    }
  }
  return ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of Legendrian knots in contact surgery diagrams"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };

  auto* inv = app.add_subcommand("invariants", "Report tb, rot, d3 and friends for a diagram file");
  inv->add_option("file", opt.file, "Diagram JSON file")->required();
  add_format(inv);

  auto* count = app.add_subcommand("count", "Count tight structures on a torus-knot complement");
  count->add_option("--p", opt.p)->required();
  count->add_option("--q", opt.q)->required();
  count->add_option("--tb", opt.tb)->required();
  add_format(count);

  auto* fam = app.add_subcommand("family", "Enumerate a family of exceptional realisations");
  fam->add_option("family", opt.family, "lht, pos, neg, rht-table or lht-stab")->required();
  fam->add_option("--p", opt.params.p)->each([&](const std::string&) { opt.has_p = true; });
  fam->add_option("--n", opt.params.n)->each([&](const std::string&) { opt.has_n = true; });
  fam->add_option("--m", opt.params.m)->each([&](const std::string&) { opt.has_m = true; });
  fam->add_option("--k", opt.params.k, "Stabilisations (lht-stab)");
  fam->add_option("--variant", opt.variant, "a or b (rht-table)");
  fam->add_option("--emit", opt.emit_dir, "Write the generated diagrams to this directory");
  add_format(fam);

  auto* verify = app.add_subcommand("verify-paper", "Run the reproduction checks");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*inv) return cmd_invariants(opt);
    if (*count) return cmd_count(opt);
    if (*fam) return cmd_family(opt);
    return cmd_verify(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return is_input_error(e.kind()) ? kInput : kMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
}
