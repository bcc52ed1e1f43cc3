#include <doctest.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ODKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("graph") {
  auto r = run("graph 'Alt(10)' --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("vertices").size() == 4);
  CHECK(j.at("edges").size() == 4);

  r = run("--format dot graph 'Ab(5,[4])'");
  CHECK(r.code == 0);
  CHECK(r.out == "graph GK {\n  \"5\";\n}\n");

  const auto a = run("graph 'Alt(624) x Ab(5,[4])' --format dot");
  const auto b = run("graph 'Alt(625)' --format dot");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  CHECK(run("graph 'Alt(5'").code == 5);
  CHECK(run("graph 'Ab(4,[1])'").code == 5);
  CHECK(run("graph 'Alt(200000)'").code == 4);
}

TEST_CASE("degpat") {
  CHECK(run("degpat 'Alt(10)'").out == "2:2 3:3 5:2 7:1\n");
  CHECK(run("degpat 'Alt(3)'").out == "3:0\n");
  const auto s = run("degpat 'Sym(625)'");
  const auto t = run("degpat 'Alt(624) x Grp(2*5^4; pi=2,5; edges=)'");
  CHECK(s.code == 0);
  CHECK(s.out == t.out);
  CHECK(run("degpat 'Alt(10)' --format dot").code == 5);
  CHECK(run("degpat 'Alt(3000000)' --sieve-limit 1000000").code == 4);
  // above the materialization threshold the on-demand path is used
  const auto big = run("degpat 'Alt(150001)'");
  CHECK(big.code == 0);
  std::size_t tokens = 0, primes = 0;
  for (char c : big.out) tokens += c == ':';
  for (std::uint64_t n = 2; n <= 150'001; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    primes += prime;
  }
  CHECK(tokens == primes);
  CHECK(run("degpat 'Alt(150000) x Ab(5,[1])'").out == run("degpat 'Alt(150000) x Grp(5; pi=5; edges=)'").out);
}

TEST_CASE("order") {
  CHECK(run("order 'Alt(5)'").out == "2^2 * 3 * 5\n");
  CHECK(run("order 'Sym(3)'").out == "2 * 3\n");
  CHECK(run("order 'Alt(625)'").out.find(" 5^156 ") != std::string::npos);
  CHECK(run("order 'Grp(2; pi=3; edges=)'").code == 5);
}

TEST_CASE("search") {
  const auto r = run("search --max-alpha 10 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("qualifying_alphas") == nlohmann::json({4, 6, 10}));
  CHECK(j.at("candidates").at(1).at("reason") == "p+4 = 23 is prime");
  CHECK(nlohmann::json::parse(run("search --max-alpha 1 --format json").out).at("qualifying_alphas").empty());
  CHECK(run("search --max-alpha 28").code == 4);
  CHECK(count_lines(run("search --max-alpha 10").out) == 11);
}

TEST_CASE("verify") {
  auto r = run("verify --alpha 4 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("od_class_size_lower_bound") == 6);
  CHECK(run("verify --alpha 3").code == 3);
  CHECK(run("verify --alpha 6 --sieve-limit 1000").code == 4);
  CHECK(run("verify --alpha 4").out.find("result: PASS") != std::string::npos);
  // identical inputs, identical bytes
  CHECK(run("verify --alpha 4 --format json").out == r.out);
}

TEST_CASE("odclass") {
  const auto alt = run("odclass --alpha 4 --family alt");
  CHECK(alt.code == 0);
  CHECK(count_lines(alt.out) == 6);
  CHECK(alt.out.rfind("Alt(625)\n", 0) == 0);
  CHECK(count_lines(run("odclass --alpha 4 --family sym").out) == 6);
  CHECK(count_lines(run("odclass --alpha 6 --family alt").out) == 12);
  CHECK(run("odclass --alpha 5").code == 3);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 5);
  CHECK(run("frobnicate").code == 5);
  CHECK(run("--help").code == 0);
}
