#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

#include "legendrian/io.hpp"

using namespace legendrian;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run legctl(const std::string& args) {
  std::string cmd = std::string(LEGCTL_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const char* name) { return std::string(SAMPLES_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("invariants of the tb = -5 trefoil file", "[cli]") {
  Run table = legctl("invariants " + sample("trefoil_tb-5.json"));
  CHECK(table.code == 0);
  CHECK(contains(table.out, "d3                    3/2"));
  CHECK(contains(table.out, "Overtwisted"));

  Run js = legctl("invariants " + sample("trefoil_tb-5.json") + " --format json");
  REQUIRE(js.code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["tb"] == -5);
  CHECK(j["rot_plus"] == 6);
  CHECK(j["rot_minus"] == -6);
  CHECK(j["d3"] == "3/2");
  CHECK(j["detM"] == -1);
  CHECK(j["sigma"] == -2);
  CHECK(j["chi"] == 5);
  CHECK(j["verdict"] == "Overtwisted");
}

TEST_CASE("invariants error exits", "[cli]") {
  Run asym = legctl("invariants " + sample("asymmetric.json"));
  CHECK(asym.code == 2);
  CHECK(contains(asym.out, "linking matrix not symmetric"));
  Run lens = legctl("invariants " + sample("lens_space.json"));
  CHECK(lens.code == 3);
  CHECK(contains(lens.out, "not a homology sphere"));
  CHECK(legctl("invariants /nonexistent/file.json").code == 2);
  CHECK(legctl("invariants " + sample("trefoil_tb-5.json") + " --format xml").code == 2);
}

TEST_CASE("count", "[cli]") {
  auto j = nlohmann::json::parse(legctl("count --p 2 --q -3 --tb -9 --format json").out);
  CHECK(j["case"] == "DLZ2");
  CHECK(j["total"] == 7);
  CHECK(j["std_count"] == 5);
  CHECK(j["exceptional_upper_bound"] == 2);
  CHECK(j["reduction"]["r3"] == "2/7");

  j = nlohmann::json::parse(legctl("count --p 2 --q 3 --tb 7 --format json").out);
  CHECK(j["case"] == "DLZ1");
  CHECK(j["total"] == 4);
  CHECK(j["exceptional_upper_bound"] == 4);

  Run inf = legctl("count --p 2 --q -3 --tb -6");
  CHECK(inf.code == 0);
  CHECK(contains(inf.out, "infinite"));

  Run odd = legctl("count --p 3 --q -5 --tb -13 --format json");
  CHECK(odd.code == 0);
  j = nlohmann::json::parse(odd.out);
  CHECK(j["case"] == "Unclassified");
  CHECK(j["total"] == "Unknown");

  Run form = legctl("count --p 3 --q 5 --tb 0");
  CHECK(form.code == 0);
  CHECK(contains(form.out, "unknown"));

  CHECK(legctl("count --p 2 --q 4 --tb 0").code == 2);
  CHECK(legctl("count --p 2 --q 3").code == 2);
}

TEST_CASE("family", "[cli]") {
  auto j = nlohmann::json::parse(legctl("family pos --p 2 --n 1 --format json").out);
  CHECK(j["rows"].size() == 4);
  CHECK(j["all_agree"] == true);

  Run lht = legctl("family lht --m 6");
  CHECK(lht.code == 0);
  CHECK(contains(lht.out, "orientations coincide (rot = 0)"));

  j = nlohmann::json::parse(legctl("family neg --p 2 --n 2 --format json").out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["computed"]["tb"] == -5);

  CHECK(legctl("family rht-table --m 2 --variant b").code == 0);
  CHECK(legctl("family pos --p 1 --n 1").code == 2);
  CHECK(legctl("family pos --p 3").code == 2);
  CHECK(legctl("family rht-table --m 2 --variant c").code == 2);
  CHECK(legctl("family torus --p 3 --n 1").code == 2);
  CHECK(legctl("family rht-table --m 2 --emit " + std::string(WORK_DIR)).code == 2);
}

TEST_CASE("emitted diagrams reproduce the in-memory report", "[cli]") {
  namespace fs = std::filesystem;
  fs::remove_all(WORK_DIR);
  Run emit = legctl("family pos --p 2 --n 1 --emit " + std::string(WORK_DIR));
  REQUIRE(emit.code == 0);
  fs::path file = fs::path(WORK_DIR) / "pos_p-2_n-1_k-0_l-1.json";
  REQUIRE(fs::exists(file));

  Run report = legctl("invariants " + file.string() + " --format json");
  REQUIRE(report.code == 0);
  auto j = nlohmann::json::parse(report.out);
  CHECK(j["deflated_agrees"] == true);
  j.erase("deflated_agrees");
  j.erase("hopf");
  j.erase("verdict");
  CHECK(j == io::to_json(invariant_report(gen_pos(2, 1, 0, 1))));

  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(WORK_DIR)) {
    ++files;
    CHECK(io::load_diagram(entry.path().string()).groups.has_value());
  }
  CHECK(files == 2);
}

TEST_CASE("verify-paper", "[cli]") {
  Run v = legctl("verify-paper");
  CHECK(v.code == 0);
  std::size_t passes = 0, pos = 0;
  while ((pos = v.out.find("PASS [", pos)) != std::string::npos) ++passes, ++pos;
  CHECK(passes == 10);
  CHECK(!contains(v.out, "FAIL"));
}
