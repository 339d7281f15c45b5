#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(CUBICPLANAR_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with_line(const std::string& s, const std::string& line) {
  return s.size() >= line.size() + 1 && s.compare(s.size() - line.size() - 1, line.size() + 1, line + "\n") == 0;
}

double num(const nlohmann::json& j) { return std::stod(j.get<std::string>()); }

}  // namespace

TEST_CASE("census") {
  auto r = run("census multigraph -N 8");
  CHECK(r.status == 0);
  CHECK(ends_with_line(r.out, "8, 1239875"));
  CHECK(r.out == golden("census_multigraph_8.txt"));
  CHECK(run("census multigraph -N 8 --format json").out == golden("census_multigraph_8.json"));
  auto tf = run("census triangle-free -N 10 --format csv");
  CHECK(tf.out == golden("census_triangle_free_10.csv"));
  CHECK(ends_with_line(run("census triangle-free -N 10").out, "10, 181440"));
  CHECK(ends_with_line(run("census connected -N 4").out, "4, 1"));
  // repeated runs are identical
  CHECK(run("census multigraph -N 8").out == r.out);
}

TEST_CASE("census by triangles") {
  auto r = run("census connected -N 8 --triangles --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.find("8,4,2520") != std::string::npos);
  CHECK(r.out.find("6,2,60") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("census bogus").status == 2);
  CHECK(run("census").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("census connected -N 8 --format xml").status == 2);
  CHECK(run("recurrence connected -N 10").status == 2);
}

TEST_CASE("constants") {
  auto r = run("constants connected --format json");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(num(j["growth"]) == doctest::Approx(3.132591).epsilon(1e-6));
  CHECK(num(j["amplitude"]) == doctest::Approx(0.060973).epsilon(1e-5));
  CHECK(j["modulus_unique"] == true);
  auto m = nlohmann::json::parse(run("constants multigraph --format json").out);
  CHECK(num(m["probability"]) == doctest::Approx(0.931778).epsilon(1e-6));
  auto b = nlohmann::json::parse(run("constants biconnected --format json").out);
  CHECK(num(b["growth"]) == doctest::Approx(3.129666).epsilon(1e-6));
  auto hi = nlohmann::json::parse(run("constants connected --bits 512 --format json").out);
  CHECK(hi["precision_bits"] == 512);
  CHECK(hi["rho"].get<std::string>().size() > j["rho"].get<std::string>().size());
}

TEST_CASE("moments") {
  auto t = nlohmann::json::parse(run("moments triangles --format json").out);
  CHECK(num(t["mu"]) == doctest::Approx(0.121974).epsilon(1e-5));
  CHECK(num(t["lambda"]) == doctest::Approx(0.064985).epsilon(1e-5));
  auto k = nlohmann::json::parse(run("moments brick --k4minus --format json").out);
  CHECK(num(k["mu"]) == doctest::Approx(0.004529).epsilon(1e-3));
  auto c = nlohmann::json::parse(run("moments cherry 6 1 --format json").out);
  CHECK(num(c["lambda"]) > 0);
  CHECK(run("moments cherry").status == 2);
}

TEST_CASE("verify") {
  auto q = run("verify quick");
  CHECK(q.status == 0);
  CHECK(q.out.find("FAIL") == std::string::npos);
  auto bad = run("verify full --corrupt-triangle-system");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("FAIL oracle triangle histogram n=8") != std::string::npos);
  CHECK(bad.out.find("FAIL triangle moments") != std::string::npos);
}

TEST_CASE("recurrence") {
  auto r = run("recurrence connected -N 40 --max-order 2 --max-degree 2 --format json");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("recurrence"));
  CHECK(j["family"] == "connected");
}
