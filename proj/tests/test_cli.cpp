#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "reglab/cli.hpp"

using namespace reglab::cli;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "reglab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("reglab-test-" + tag + "-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  std::filesystem::remove_all(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("compute reproduces the l = 5 table") {
  unsetenv("REGLAB_CACHE");
  const auto r = run({"compute", "--l", "5", "--digits", "15"});
  CHECK(r.status == kOk);
  CHECK(r.out.find("0.427459772553180") != std::string::npos);
  CHECK(r.out.find("0.0603840144077692") != std::string::npos);
  CHECK(r.out.find("regulator (e_ind): 0.346139631939354") != std::string::npos);
  CHECK(r.out.find("oracle max rel diff") != std::string::npos);
}

TEST_CASE("validation errors exit with status 2") {
  const auto r = run({"compute", "--l", "4"});
  CHECK(r.status == kValidation);
  CHECK(r.err.find("gcd(l, 6) = 1") != std::string::npos);
  CHECK(run({"compute", "--l", "9"}).status == kValidation);
  CHECK(run({"compute", "--l", "1"}).status == kValidation);
  CHECK(run({"compute", "--l", "5", "--digits", "9"}).status == kValidation);
  CHECK(run({"compute", "--l", "5", "--format", "xml"}).status == kValidation);
  CHECK(run({"compute"}).status == kValidation);
  CHECK(run({"bogus"}).status == kValidation);
  CHECK(run({"fibers", "--g2", "t"}).status == kValidation);
  CHECK(run({"fibers", "--g2", "t +", "--g3", "1"}).status == kValidation);
}

TEST_CASE("version flag") {
  const auto r = run({"--version"});
  CHECK(r.status == kOk);
  CHECK(r.out.find(kVersion) != std::string::npos);
}

TEST_CASE("JSON output") {
  const auto r = run({"compute", "--l", "7", "--format", "json"});
  REQUIRE(r.status == kOk);
  const json doc = json::parse(r.out);
  CHECK(doc.at("l") == 7);
  CHECK(doc.at("h") == 4);
  CHECK(doc.at("I").size() == 6);
  CHECK(doc.at("J").size() == 6);
  CHECK(doc.at("regulator_e_ind").get<std::string>().rfind("0.6294878608605", 0) == 0);
  CHECK(doc.at("det_agreement_digits").get<int>() >= 25);
  CHECK(doc.at("oracle_check").contains("max_rel_diff"));
  CHECK(doc.at("sqrt_factor") == "sqrt(-l)");
  CHECK(doc.at("sign_policy").get<std::string>().find("magnitudes") == 0);
}

TEST_CASE("CSV output") {
  const auto r = run({"compute", "--l", "5", "--digits", "15", "--format", "csv", "--no-oracle"});
  REQUIRE(r.status == kOk);
  CHECK(r.out.rfind("l,j,I,J\n", 0) == 0);
  CHECK(r.out.find("5,4,0.0603840144077692,0.202670503662525") != std::string::npos);
}

TEST_CASE("cache round-trip is byte identical") {
  unsetenv("REGLAB_CACHE");
  const auto dir = fresh_dir("cache");
  const std::vector<std::string> args{"compute", "--l", "5", "--digits", "20", "--format", "json", "--cache", dir.string()};
  const auto first = run(args);
  REQUIRE(first.status == kOk);
  const auto file = dir / cache_file_name(5, 20);
  REQUIRE(std::filesystem::exists(file));
  const std::string stored = slurp(file);
  const auto second = run(args);
  CHECK(second.status == kOk);
  CHECK(second.out == first.out);
  CHECK(second.err.empty());
  CHECK(slurp(file) == stored);

  SUBCASE("corrupted file") {
    std::ofstream(file, std::ios::trunc) << "{ \"key\": ";
    const auto third = run(args);
    CHECK(third.status == kOk);
    CHECK(third.err.find("is corrupted; recomputing") != std::string::npos);
    CHECK(third.out == first.out);
    CHECK(slurp(file) == stored);
  }
  SUBCASE("tampered payload") {
    json entry = json::parse(stored);
    entry["payload"]["regulator_e_ind"] = "1.0";
    std::ofstream(file, std::ios::trunc) << entry.dump(2);
    const auto third = run(args);
    CHECK(third.err.find("failed its checksum") != std::string::npos);
    CHECK(third.out == first.out);
  }
  SUBCASE("stale key") {
    json entry = json::parse(stored);
    entry["key"]["version"] = "0.0.1";
    std::ofstream(file, std::ios::trunc) << entry.dump(2);
    const auto third = run(args);
    CHECK(third.err.find("stale key") != std::string::npos);
    CHECK(third.out == first.out);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache helpers") {
  CHECK(cache_file_name(5, 30) == std::string("reglab-l5-d30-n36-v") + kVersion + ".json");
  const json a = {{"x", "1"}}, b = {{"x", "2"}};
  CHECK(payload_checksum(a) == payload_checksum(a));
  CHECK(payload_checksum(a) != payload_checksum(b));
  CHECK(payload_checksum(a).size() == 8);
  std::ostringstream err;
  CHECK_FALSE(cache_load(fresh_dir("missing").string(), 5, 30, err).has_value());
  CHECK(err.str().empty());
}

TEST_CASE("REGLAB_CACHE overrides --cache") {
  const auto env_dir = fresh_dir("env");
  const auto flag_dir = fresh_dir("flag");
  setenv("REGLAB_CACHE", env_dir.string().c_str(), 1);
  const auto r = run({"compute", "--l", "5", "--digits", "12", "--no-oracle", "--cache", flag_dir.string()});
  unsetenv("REGLAB_CACHE");
  CHECK(r.status == kOk);
  CHECK(std::filesystem::exists(env_dir / cache_file_name(5, 12)));
  CHECK_FALSE(std::filesystem::exists(flag_dir));
  std::filesystem::remove_all(env_dir);
}

TEST_CASE("output does not depend on the number of jobs") {
  unsetenv("REGLAB_CACHE");
  const auto a = run({"compute", "--l", "11", "--digits", "25", "--format", "json", "--jobs", "1"});
  const auto b = run({"compute", "--l", "11", "--digits", "25", "--format", "json", "--jobs", "5"});
  CHECK(a.status == kOk);
  CHECK(a.out == b.out);
}

TEST_CASE("fibers subcommand") {
  const auto r = run({"fibers", "--l", "5"});
  CHECK(r.status == kOk);
  CHECK(r.out.find("I15") != std::string::npos);
  CHECK(r.out.find("IV") != std::string::npos);
  CHECK(r.out.find("epsilon = 2") != std::string::npos);
  const auto j = run({"fibers", "--l", "7", "--format", "json"});
  REQUIRE(j.status == kOk);
  const json doc = json::parse(j.out);
  CHECK(doc.at("epsilon") == 3);
  CHECK(run({"fibers", "--l", "6"}).status == kValidation);
}

TEST_CASE("pf subcommand") {
  const auto r = run({"pf", "--l", "1"});
  CHECK(r.status == kOk);
  CHECK(r.out.find("A = -6*t^2 + 6*t") != std::string::npos);
  CHECK(r.out.find("B = -4/3") != std::string::npos);
  CHECK(r.out.find("trace = 0") != std::string::npos);
  CHECK(r.out.find("degeneracy locus: empty") != std::string::npos);
  const auto c = run({"pf", "--g2", "t", "--g3", "1", "--format", "json"});
  REQUIRE(c.status == kOk);
  CHECK(json::parse(c.out).at("degeneracy_locus").empty());
}

TEST_CASE("oracle subcommand") {
  const auto r = run({"oracle", "--l", "5", "--format", "csv"});
  REQUIRE(r.status == kOk);
  CHECK(r.out.rfind("l,j,delta_series,delta_oracle,delta_rel_diff,gamma_series,gamma_oracle,gamma_rel_diff\n", 0) == 0);
  CHECK(r.out.find("5,1,14.5033683965089") != std::string::npos);
}

TEST_CASE("selfcheck passes") {
  unsetenv("REGLAB_CACHE");
  const auto r = run({"selfcheck"});
  CHECK(r.status == kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("8/8 checks passed") != std::string::npos);
  CHECK(run({"selfcheck", "--digits", "9"}).status == kValidation);
}
