#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BETTI_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Field `col` of the first data row of a CSV table without quoted fields.
std::string cell(const std::string& csv, const std::string& col) {
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  auto split = [](std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
    return f;
  };
  const auto h = split(header), r = split(row);
  for (std::size_t i = 0; i < h.size() && i < r.size(); ++i)
    if (h[i] == col) return r[i];
  return "<missing " + col + ">";
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("betti_cli_test_" + name);
}

}  // namespace

TEST_CASE("cli: documented examples") {
  CHECK(cell(run("bound --id optm --d 2 --k 3").out, "value") == "18");
  CHECK(cell(run("bound --id total-degree --d 1 --k 4 --l 2").out, "value") == "1");
  CHECK(cell(run("bound --id refined-two-degree --d1 2 --d2 2 --k 2").out, "value") == "25");
  CHECK(cell(run("generic --quadrics 2 --k 5").out, "b") == "10");
  CHECK(cell(run("generic --simplex-d 3 --k 2 --l 1").out, "b") == "5");
  CHECK(cell(run("generic --multi 2,2").out, "b") == "6");
  CHECK(cell(run("generic --quadrics 2 --k 3 --setting projective").out, "b") == "4");
  CHECK(cell(run("chi --simplex-d 2 --k 3 --l 2").out, "chi") == "-4");
}

TEST_CASE("cli: exit codes") {
  CHECK(run("bound --id optm --d 2 --k 3").code == 0);
  CHECK(run("bound --id nope --d 2").code == 2);
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("bound --id optm --d 0 --k 3").code == 3);
  CHECK(run("bound --id optm --d 2 --k 40").code == 3);
  CHECK(run("bound --id optm --d 2 --k 40 --allow-large").code == 0);
  CHECK(run("generic --dmat 2,2 --setting projective").code == 4);
  CHECK(run("bound --id optm --d 2").code == 5);
  CHECK(run("bound --id optm --d 2 --k 3 --s 1").code == 5);
  CHECK(run("bound --id optm --d two --k 3").code == 5);
}

TEST_CASE("cli: csv is CRLF and json carries strings") {
  const Run csv = run("bound --id optm --d 2..3 --k 2");
  CHECK(csv.out == "id,params,value,kind,branch,assumptions,citation\r\n"
                   "optm,d=2;k=2,6,bound,d(2d-1)^(k-1),d >= 1; k >= 1,optm\r\n"
                   "optm,d=3;k=2,15,bound,d(2d-1)^(k-1),d >= 1; k >= 1,optm\r\n");
  const auto doc = nlohmann::json::parse(run("bound --id basu-kettner --s 1 --k 2 --i 0 --format json").out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "bound");
  CHECK(doc["rows"][0]["value"] == "7/2");
}

TEST_CASE("cli: --out and --config") {
  const auto out = scratch("out.csv");
  std::filesystem::remove(out);
  const Run r = run("bound --id optm --d 2 --k 3 --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out, std::ios::binary);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(cell(body.str(), "value") == "18");

  const auto cfg = scratch("config.json");
  std::ofstream(cfg) << R"({"params": {"d": "2", "k": "3"}})";
  CHECK(cell(run("bound --id optm --config " + cfg.string()).out, "value") == "18");
  // A flag on the command line wins over the file.
  CHECK(cell(run("bound --id optm --config " + cfg.string() + " --k 2").out, "value") == "6");
  std::filesystem::remove(out);
  std::filesystem::remove(cfg);
}

TEST_CASE("cli: compare, mixedvol, asymptotic, list") {
  const Run c = run("compare --ids total-degree,optm --d 3 --k 3 --l 1");
  CHECK(c.code == 0);
  CHECK(cell(c.out, "winner") == "total-degree");
  const Run mv = run("mixedvol --dmat \"2,3;4,5\" --alpha 1,1 --oracle");
  CHECK(cell(mv.out, "mixed_volume") == "11");
  CHECK(cell(mv.out, "oracle") == "11");
  CHECK(cell(run("mixedvol --simplex-sides 2,3 --alpha 1,2").out, "mixed_volume") == "3");
  const Run a = run("asymptotic --from 9 --to 9");
  CHECK(cell(a.out, "smaller") == "total-degree");
  const Run l = run("bound --list");
  CHECK(l.code == 0);
  CHECK(l.out.find("boxes-complex") != std::string::npos);
}

TEST_CASE("cli: verify suites") {
  const Run v = run("verify");
  CHECK(v.code == 0);
  for (const char* s : {"khovanskii-closed-forms", "mv-oracles", "identities", "chern"})
    CHECK(v.out.find(std::string(s) + ": PASS") != std::string::npos);
}
