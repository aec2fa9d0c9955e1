#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cylindex/cli.hpp"
#include "cylindex/report.hpp"

using namespace cylindex;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json json_of(const Run& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("kernel reports the symbolic weight set") {
  const Run r = run({"kernel", "--m", "0", "--s", "1", "--t", "0", "--eps1", "1", "--eps2", "0"});
  REQUIRE(r.code == kExitOk);
  const Json j = json_of(r);
  CHECK(j["symbolic"]["variant"] == "all_integers");
  CHECK(j["symbolic"]["case"] == "I");
  CHECK(j["operator"] == "plus");
  CHECK(j["numeric"].empty());

  const Run two = run({"kernel", "--m", "2", "--t", "1", "--eps2", "1"});
  CHECK(json_of(two)["symbolic"]["weights"] == Json({2}));
  const Run minus =
      run({"kernel", "--m", "2", "--t", "1", "--eps2", "1", "--operator", "minus"});
  CHECK(json_of(minus)["symbolic"]["variant"] == "empty");
}

TEST_CASE("kernel --numeric agrees with the symbolic column") {
  const Run r = run({"--output", "csv", "kernel", "--m", "1", "--s", "2", "--t", "1", "--eps1",
                     "1", "--eps2", "1", "--numeric", "--n-min", "0", "--n-max", "5"});
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,symbolic,kernel_plus,kernel_minus,low_plus_0,low_minus_0");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    CHECK(line.substr(first + 1, 1) == line.substr(second + 1, 1));
  }
  CHECK(rows == 6);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"kernel"}).code == kExitUsage);
  CHECK(run({"kernel", "--m", "0", "--s", "-1"}).code == kExitUsage);
  CHECK(run({"--output", "xml", "kernel", "--m", "0", "--s", "1"}).code == kExitUsage);
  CHECK(run({"--R", "2", "kernel", "--m", "0", "--s", "1"}).code == kExitUsage);
  CHECK(run({"--tau-zero", "1", "--tau-gap", "0.5", "kernel", "--m", "0", "--s", "1"}).code ==
        kExitUsage);
  CHECK(run({"kernel", "--m", "0", "--n-min", "3", "--n-max", "1", "--s", "1"}).code ==
        kExitUsage);

  const Run nf = run({"kernel", "--m", "3", "--eps1", "1", "--eps2", "2"});
  CHECK(nf.code == kExitNonFredholm);
  CHECK(nf.err.find("error") != std::string::npos);

  // The numerical zero mode sits near 1e-12, so a tighter tau_zero cannot decide it.
  const Run ind = run({"--tau-zero", "1e-14", "kernel", "--m", "0", "--t", "1", "--eps2", "1",
                       "--numeric", "--n-min", "0", "--n-max", "0"});
  CHECK(ind.code == kExitIndeterminate);
  CHECK(ind.err.find("indeterminate") != std::string::npos);

  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("index schemes") {
  const Run chi = run({"index", "--scheme", "transverse", "--m", "0", "--window", "-1:6"});
  REQUIRE(chi.code == kExitOk);
  const Json j = json_of(chi);
  CHECK(j["pattern"] == "all_integers");
  CHECK(j["window"] == Json({-1, 6}));
  CHECK(j["multiplicities"].size() == 8);

  const Run rr = run({"--output", "csv", "index", "--scheme", "rr-loc", "--m", "2", "--window",
                      "1:3"});
  CHECK(rr.out == "n,multiplicity\n1,0\n2,1\n3,0\n");
  CHECK(run({"index", "--scheme", "rr-loc", "--m", "2", "--window", "3"}).code == kExitUsage);
  CHECK(run({"index", "--scheme", "rr-loc", "--m", "2", "--window", "a:b"}).code == kExitUsage);
  CHECK(run({"index", "--scheme", "rr-loc", "--m", "2", "--t", "0"}).code == kExitUsage);
}

TEST_CASE("sweep defaults to csv") {
  const Run r = run({"sweep", "--m", "1", "--ratios", "0,1,2"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out == "ratio,kernel_dim,weights\n0,1,1\n1,2,1;2\n2,3,2;3;4\n");
  const Run j = run({"--output", "json", "sweep", "--m", "0", "--ratios", "3"});
  CHECK(json_of(j)["rows"][0]["weights"] == Json({-1, 0, 1}));
  CHECK(run({"sweep", "--m", "0"}).code == kExitUsage);
}

TEST_CASE("model reports levels and characters") {
  const Run sphere = run({"model", "--kind", "sphere", "--level", "3"});
  REQUIRE(sphere.code == kExitOk);
  const Json j = json_of(sphere);
  CHECK(j["model"] == "sphere(3)");
  CHECK(j["rr_loc"]["multiplicities"] == j["sections"]["multiplicities"]);
  CHECK(j["levels"][2]["status"] == "fixed_point");

  const Run disc = run({"--output", "csv", "model", "--kind", "disc", "--level", "0",
                        "--polarity", "max", "--window", "-1:1"});
  CHECK(disc.out ==
        "n,status,local_index\n-1,regular,1\n0,fixed_point,1\n1,outside_image,0\n");
  CHECK(json_of(run({"model", "--kind", "cylinder", "--level", "1"})).contains("transverse"));
  CHECK(run({"model", "--kind", "sphere", "--level", "0"}).code == kExitUsage);
}

TEST_CASE("spectrum lists the lowest eigenvalues") {
  const Run r = run({"spectrum", "--m", "0", "--t", "1", "--eps2", "1", "--n", "0", "--k", "3"});
  REQUIRE(r.code == kExitOk);
  const Json j = json_of(r);
  CHECK(j["low_plus"].size() == 3);
  CHECK(j["kernel_plus"] == true);
  CHECK(j["kernel_minus"] == false);
  CHECK(run({"spectrum", "--m", "0", "--t", "1", "--n", "0", "--k", "0"}).code == kExitUsage);
}

TEST_CASE("config file with command-line override") {
  const auto path = std::filesystem::temp_directory_path() / "cylindex_test_config.ini";
  {
    std::ofstream f(path);
    f << "output=csv\nR=8\n";
  }
  const Run csv = run({"--config", path.string(), "kernel", "--m", "0", "--s", "1", "--n-min",
                       "0", "--n-max", "0"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out == "n,symbolic\n0,1\n");
  const Run over = run({"--config", path.string(), "--output", "json", "spectrum", "--m", "0",
                        "--t", "1", "--eps2", "1", "--n", "0"});
  CHECK(over.code == kExitOk);
  CHECK(json_of(over)["disc"]["R"] == 8.0);
  std::filesystem::remove(path);
}

TEST_CASE("thread count does not change the output") {
  const std::vector<std::string> args{"kernel", "--m", "-1", "--s", "1", "--t", "1", "--eps1",
                                      "1", "--eps2", "1", "--numeric"};
  std::vector<std::string> one{"--jobs", "1"};
  std::vector<std::string> four{"--jobs", "4"};
  one.insert(one.end(), args.begin(), args.end());
  four.insert(four.end(), args.begin(), args.end());
  const Run a = run(one);
  const Run b = run(four);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("verify passes and fails on a corrupted coefficient") {
  const Run ok = run({"--output", "json", "verify", "--suite", "quantization"});
  CHECK(ok.code == kExitOk);
  CHECK(json_of(ok)["passed"] == true);

  VerifyContext broken = VerifyContext::standard();
  const CoefficientFactory good = broken.coefficient;
  broken.coefficient = [good](const PerturbationParams& p, const ProfilePair& pr, int n) {
    const CoefficientFn c = good(p, pr, n);
    return CoefficientFn([c](double r) { return -c(r); });
  };
  std::ostringstream out, err;
  const int code = run_cli({"verify", "--suite", "appendix-a"}, out, err, broken);
  CHECK(code == kExitVerifyFailed);
  CHECK(out.str().find("FAIL appendix-a/numeric_oracle_agreement") != std::string::npos);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
}
