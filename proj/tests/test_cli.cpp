#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli_app.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = psent::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("negativity json") {
  const auto r = call({"negativity", "--lambda", "0.5", "--case", "sq"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["negativity"].get<double>() == doctest::Approx(1.0).epsilon(1e-15));
  for (const char* key : {"negativity", "log_negativity", "delta_trace", "kmax", "lambda", "transmittance"})
    CHECK(j.contains(key));
  CHECK(j["kmax"] == 50);
  CHECK(j["transmittance"].get<double>() == 0.9);
}

TEST_CASE("negativity csv with dB") {
  const auto r = call({"negativity", "--lambda", "0.78", "--case", "pure", "--format", "csv", "--db"});
  REQUIRE(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "negativity,log_negativity,delta_trace,kmax,lambda,transmittance,squeezing_db");
  CHECK(l[1].find(",50,0.78,0.9,") != std::string::npos);
}

TEST_CASE("sweep csv file is stable") {
  const std::string path = std::string(PSENT_TEST_TMP) + "/f4.csv";
  const auto r = call({"sweep", "--measure", "logneg", "--out", path});
  REQUIRE(r.status == 0);
  const std::string first = slurp(path);
  const auto l = lines(first);
  REQUIRE(l.size() == 51);
  CHECK(l[0] == "lambda,value_sq,value_pure,value_mixed");
  CHECK(l[1].rfind("0.05,", 0) == 0);
  // at least 12 significant digits
  CHECK(l[1].substr(l[1].find(',') + 1, l[1].find(',', 5) - l[1].find(',') - 1).size() >= 14);
  REQUIRE(call({"sweep", "--measure", "logneg", "--out", path}).status == 0);
  CHECK(slurp(path) == first);
}

TEST_CASE("sweep marks unavailable points") {
  const auto r = call({"sweep", "--measure", "fidelity", "--grid", "0:0.5:2"});
  REQUIRE(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[1] == "0,0.5,,");
  CHECK(r.err.find("warning") != std::string::npos);

  const auto j = call({"sweep", "--measure", "fidelity", "--grid", "0:0.5:2", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["rows"][0]["value_pure"].is_null());
  CHECK(doc["rows"][1]["value_pure"].is_number());
}

TEST_CASE("crossover") {
  const auto r = call({"crossover", "--measure", "logneg", "--case", "mixed", "--T", "0.9"});
  REQUIRE(r.status == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  const auto j = call({"crossover", "--measure", "fidelity", "--case", "pure", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["lambda_star"].get<double>() == doctest::Approx(0.815).epsilon(0.006));
  CHECK(l[1].rfind("logneg,mixed,0.77", 0) == 0);
}

TEST_CASE("dense-limit and state") {
  const auto r = call({"dense-limit", "--betas", "1.0,0.05"});
  REQUIRE(r.status == 0);
  CHECK(lines(r.out).size() == 3);
  CHECK(lines(r.out)[0] == "beta,lambda_star_pure,lambda_star_mixed");

  const auto s = call({"state", "--case", "sq", "--kmax", "2", "--lambda", "0.5"});
  REQUIRE(s.status == 0);
  CHECK(lines(s.out)[0] == "K,a,b,value");
  const auto js = call({"state", "--case", "mixed", "--kmax", "3", "--format", "json"});
  REQUIRE(js.status == 0);
  CHECK(nlohmann::json::parse(js.out)["blocks"].size() == 4);
}

TEST_CASE("selftest") {
  const auto r = call({"selftest"});
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({}).status == 2);
  CHECK(call({"bogus"}).status == 2);
  CHECK(call({"sweep", "--grid", "0.1:0.5"}).status == 2);
  CHECK(call({"sweep", "--format", "xml"}).status == 2);
  CHECK(call({"negativity", "--case", "thermal"}).status == 2);
  CHECK(call({"negativity", "--help"}).status == 0);

  const auto z = call({"negativity", "--lambda", "0", "--case", "mixed"});
  CHECK(z.status == 1);
  CHECK(z.err.rfind("ZeroDetectionProbability: ", 0) == 0);
  const auto d = call({"negativity", "--lambda", "1.2"});
  CHECK(d.status == 1);
  CHECK(d.err.rfind("DomainError: ", 0) == 0);
}
