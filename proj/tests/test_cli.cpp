#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using subseq::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Outcome& o) { return nlohmann::json::parse(o.out); }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("subseq-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count examples") {
    TempDir dir;
    const std::string ab = dir.write("ab.txt", "ab\n");
    const Outcome k2 = invoke({"count", ab, ab, "--k", "2"});
    REQUIRE(k2.code == 0);
    const auto doc = parse(k2);
    CHECK(doc["command"] == "count");
    CHECK(doc["result"]["count"] == "1");

    const Outcome levels = invoke({"count", ab, ab, "--per-level"});
    REQUIRE(levels.code == 0);
    const auto ldoc = parse(levels);
    CHECK(ldoc["result"]["profile"] == nlohmann::json::array({"2", "1"}));
    CHECK(ldoc["result"]["total"] == "3");

    CHECK(invoke({"count", ab, ab, "--k", "0"}).code == 2);
  }

  TEST_CASE("envelope field order is fixed") {
    TempDir dir;
    const std::string ab = dir.write("ab.txt", "ab\n");
    const Outcome o = invoke({"count", ab, ab, "--k", "1"});
    REQUIRE(o.code == 0);
    const auto doc = nlohmann::ordered_json::parse(o.out);
    std::vector<std::string> keys;
    for (const auto& item : doc.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"command", "version", "inputs", "result", "exact_values", "log_values"});
  }

  TEST_CASE("chars and tokens encodings agree") {
    TempDir dir;
    const std::string xc = dir.write("x.txt", "abcab ba\n");
    const std::string yc = dir.write("y.txt", "bacca\n");
    const std::string xt = dir.write("x.tok", "0 1 2 0 1 1 0\n");
    const std::string yt = dir.write("y.tok", "1 0\n2 2 0\n");
    const auto chars = parse(invoke({"count", xc, yc, "--per-level"}));
    const auto tokens = parse(invoke({"count", xt, yt, "--per-level", "--encoding", "tokens"}));
    CHECK(chars["result"]["profile"] == tokens["result"]["profile"]);
    CHECK(chars["result"]["total"] == tokens["result"]["total"]);
    CHECK(chars["result"]["symbol_map"] == nlohmann::json::array({"a", "b", "c"}));
    const auto forced = parse(invoke({"count", xt, yt, "--k", "2", "--encoding", "tokens", "--alphabet", "7"}));
    CHECK(forced["result"]["alphabet_size"] == 7);
    CHECK(invoke({"count", xt, yt, "--k", "2", "--encoding", "tokens", "--alphabet", "2"}).code == 2);
  }

  TEST_CASE("malformed and missing input") {
    TempDir dir;
    const std::string ab = dir.write("ab.txt", "ab\n");
    const std::string two_lines = dir.write("two.txt", "ab\nba\n");
    const std::string bad_tokens = dir.write("bad.tok", "0 x 1\n");
    CHECK(invoke({"count", ab, dir.path("missing.txt"), "--k", "1"}).code == 4);
    CHECK(invoke({"count", ab, two_lines, "--k", "1"}).code == 2);
    CHECK(invoke({"count", bad_tokens, bad_tokens, "--encoding", "tokens"}).code == 2);
    CHECK(invoke({"count", ab, ab, "--encoding", "bytes"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"count", ab}).code == 2);
  }

  TEST_CASE("budget handling") {
    TempDir dir;
    const std::string w = dir.write("w.txt", std::string(30, 'a') + "\n");
    const Outcome over = invoke({"count", w, w, "--k", "3", "--bruteforce", "--budget", "100"});
    CHECK(over.code == 3);
    CHECK(over.out.empty());
    CHECK_FALSE(over.err.empty());
    const Outcome ok = invoke({"count", w, w, "--k", "2", "--bruteforce"});
    REQUIRE(ok.code == 0);
    CHECK(parse(ok)["result"]["count"] == "189225");

    ::setenv("SUBSEQ_BUDGET", "10", 1);
    CHECK(invoke({"count", w, w, "--k", "2", "--bruteforce"}).code == 3);
    CHECK(invoke({"moments", "--n", "3", "--k", "1", "--alphabet", "2", "--exhaustive"}).code == 3);
    CHECK(invoke({"count", w, w, "--k", "2", "--bruteforce", "--budget", "1000000"}).code == 0);
    ::setenv("SUBSEQ_BUDGET", "lots", 1);
    CHECK(invoke({"count", w, w, "--k", "2", "--bruteforce"}).code == 2);
    ::unsetenv("SUBSEQ_BUDGET");
  }

  TEST_CASE("moments examples") {
    const auto m = parse(invoke({"moments", "--n", "4", "--k", "2", "--alphabet", "2"}));
    CHECK(m["exact_values"]["expected"] == nlohmann::json{{"num", "9"}, {"den", "1"}});
    const auto t = parse(invoke({"moments", "--n", "2", "--alphabet", "2"}));
    CHECK(t["exact_values"]["expected"] == nlohmann::json{{"num", "9"}, {"den", "4"}});
    const auto b = parse(invoke({"moments", "--n", "1", "--k", "1", "--alphabet", "2", "--bounds"}));
    CHECK(b["exact_values"]["second_moment_lower"] == nlohmann::json{{"num", "1"}, {"den", "4"}});
    CHECK(b["exact_values"]["second_moment_upper"] == nlohmann::json{{"num", "1"}, {"den", "2"}});
    const auto alias = parse(invoke({"bounds", "--n", "1", "--k", "1", "--alphabet", "2"}));
    CHECK(alias["command"] == "bounds");
    CHECK(alias["exact_values"]["second_moment_upper"] == b["exact_values"]["second_moment_upper"]);
    const auto probs = parse(invoke({"moments", "--n", "3", "--probs", "1,0"}));
    CHECK(probs["exact_values"]["expected"] == nlohmann::json{{"num", "19"}, {"den", "1"}});
    const auto ex = parse(invoke({"moments", "--n", "2", "--k", "1", "--alphabet", "2", "--exhaustive"}));
    CHECK(ex["exact_values"]["second_moment_exhaustive"] == nlohmann::json{{"num", "5"}, {"den", "1"}});
  }

  TEST_CASE("moments errors") {
    CHECK(invoke({"moments", "--n", "3", "--probs", "1/2,1/3"}).code == 2);
    CHECK(invoke({"moments", "--n", "3", "--probs", "1/2,1/2", "--alphabet", "2"}).code == 2);
    CHECK(invoke({"moments", "--n", "3"}).code == 2);
    CHECK(invoke({"moments", "--n", "3", "--k", "0", "--alphabet", "2"}).code == 2);
    CHECK(invoke({"bounds", "--n", "3", "--k", "4", "--alphabet", "2"}).code == 2);
  }

  TEST_CASE("simulate output is byte-stable") {
    const std::vector<std::string> args = {"simulate", "--n", "12", "--k", "2", "--alphabet", "2",
                                           "--samples", "500", "--seed", "9"};
    const Outcome a = invoke(args);
    REQUIRE(a.code == 0);
    std::vector<std::string> threaded = args;
    threaded.push_back("--threads");
    threaded.push_back("4");
    const Outcome b = invoke(threaded);
    REQUIRE(b.code == 0);
    CHECK(a.out == invoke(args).out);
    const auto da = parse(a);
    const auto db = parse(b);
    CHECK(da["result"] == db["result"]);
    CHECK(da["result"]["report"]["histogram"].size() == 16);
    CHECK(invoke({"simulate", "--n", "12", "--k", "2", "--alphabet", "2", "--samples", "1"}).code == 2);
    CHECK(invoke({"simulate", "--n", "12", "--k", "2", "--probs", "1,0", "--samples", "10"}).code == 2);
    const auto trend = parse(invoke({"simulate", "--trend", "8,16", "--k", "1", "--alphabet", "2", "--samples", "200"}));
    CHECK(trend["result"]["trend"].size() == 2);
  }

  TEST_CASE("asymptotics examples") {
    const Outcome o = invoke({"asymptotics", "--n", "10", "--a", "1", "--alpha", "0", "--compare"});
    REQUIRE(o.code == 0);
    const auto doc = parse(o);
    CHECK(doc["log_values"]["exact"]["ln"].get<double>() == doctest::Approx(std::log(184755.0)).epsilon(1e-12));
    CHECK(doc["result"]["log_ratio_regime_vs_exact"].get<double>() == doctest::Approx(0.0126).epsilon(0.02));
    CHECK(doc["exact_values"]["expected_total"] == nlohmann::json{{"num", "184755"}, {"den", "1"}});

    const auto p = parse(invoke({"asymptotics", "--n", "100", "--a", "4", "--alpha", "0"}));
    CHECK(p["result"]["k_star"].get<double>() == doctest::Approx(100.0 / 3.0));
    CHECK(p["result"]["big_a"].get<double>() == doctest::Approx(4.5));
    CHECK(p["result"]["regime"] == "alpha=0");

    CHECK(invoke({"asymptotics", "--n", "10", "--a", "1", "--alpha", "2.5"}).code == 2);
    CHECK(invoke({"asymptotics", "--n", "10", "--a", "-1", "--alpha", "0.5"}).code == 2);
  }
}
