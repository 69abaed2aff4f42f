#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "cvw/cli.hpp"
#include "support/oracles.hpp"

using namespace cvw;
using namespace cvw::cli;
using nlohmann::json;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "cvw_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto p = scratch(name);
  std::ofstream(p) << content;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FailureKind failure_of(const std::function<void()>& f, std::string* pointer = nullptr) {
  try {
    f();
  } catch (const CliError& e) {
    if (pointer) *pointer = e.pointer();
    return e.kind();
  }
  FAIL("expected CliError");
  return FailureKind::ComputeError;
}

}  // namespace

TEST_CASE("command names") {
  for (const char* name : {"check-gaussian", "check-nongaussian", "witness-optimize", "kernel-spectrum",
                           "fock-iterate", "sweep-fig1", "sweep-fig2"}) {
    const auto c = parse_command(name);
    REQUIRE(c);
    CHECK(std::string(to_string(*c)) == name);
  }
  CHECK_FALSE(parse_command("plot"));
}

TEST_CASE("parse_state families") {
  const auto st = parse_state(json::parse(R"({"family":"squeezed_thermal","a":3,"b":3,"c":2})"));
  REQUIRE(std::holds_alternative<SqueezedThermalState>(st));
  const Matrix m = state_matrix(st);
  CHECK(m == StandardForm{3, 3, 2, 2}.to_matrix());

  const auto sf = parse_state(json::parse(R"({"standard_form":{"a":2,"b":3,"c1":1,"c2":0.5}})"));
  REQUIRE(std::holds_alternative<StandardForm>(sf));
  CHECK(std::get<StandardForm>(sf).c2 == 0.5);

  const auto ng = parse_state(json::parse(
      R"({"family":"ngpasg","kernel":{"family":"squeezed_thermal","a":3,"b":3,"c":2},"add":[1,1],"sub":[0,0]})"));
  REQUIRE(std::holds_alternative<NgpasgSpec>(ng));
  CHECK(std::get<NgpasgSpec>(ng).adds == std::vector<int>{1, 1});

  const auto ww = parse_state(json::parse(R"({"family":"werner_wolf_2x2","A":2,"B":2,"C":2,"D":2,"E":1,"F":1})"));
  CHECK(state_matrix(ww).rows() == 8);
  const auto ghz = parse_state(json::parse(R"({"family":"ghz","a":2,"c":0.5,"n":3})"));
  CHECK(state_matrix(ghz).rows() == 6);
  const auto mm = parse_state(json::parse(R"({"family":"symmetric_multimode","n":3,"a":2,"b":2.5,"c1":0.5,"c2":0.5})"));
  CHECK(state_matrix(mm).rows() == 6);
}

TEST_CASE("parse_state schema errors carry a JSON pointer") {
  std::string ptr;
  CHECK(failure_of([] { parse_state(json::parse(R"({"cm":[[1,0,0],[0,1,0],[0,0,1]]})")); }, &ptr) ==
        FailureKind::SchemaError);
  CHECK(ptr == "/cm");
  CHECK(failure_of([] { parse_state(json::parse(R"({"family":"squeezed_thermal","a":3,"b":"x","c":2})")); }, &ptr) ==
        FailureKind::SchemaError);
  CHECK(ptr == "/b");
  CHECK(failure_of([] { parse_state(json::parse(R"({"family":"ngpasg","kernel":{"family":"ghz","a":2,"c":0.5}})")); },
                   &ptr) == FailureKind::SchemaError);
  CHECK(ptr == "/kernel/n");
  CHECK(failure_of([] { parse_state(json::parse(R"({"cm":[[1,0],[0,"q"]]})")); }, &ptr) == FailureKind::SchemaError);
  CHECK(ptr == "/cm/1/1");
  CHECK(failure_of([] { parse_state(json::parse(R"({"family":"unknown"})")); }) == FailureKind::SchemaError);
  CHECK(failure_of([] { parse_state_file("/nonexistent/state.json"); }) == FailureKind::IoError);
  const std::string bad = write_file("bad.json", "{ not json");
  CHECK(failure_of([&] { parse_state_file(bad); }) == FailureKind::ParseError);
}

TEST_CASE("schedule parsing") {
  CHECK(parse_schedule("10,100,1000") == std::vector<double>{10, 100, 1000});
  CHECK(parse_schedule("1e2") == std::vector<double>{100});
  CHECK(failure_of([] { parse_schedule("10,abc"); }) == FailureKind::ParseError);
}

TEST_CASE("check-gaussian report and CM round trip") {
  oracle::Rng rng(61);
  const Matrix g = oracle::random_cm(2, rng);
  const std::string input = write_file("state.json", json{{"cm", matrix_to_json(g)}}.dump());
  JobSpec job;
  job.command = Command::CheckGaussian;
  job.input = input;
  job.output = scratch("report.json").string();
  std::ostringstream log;
  CHECK(run(job, log) == 0);
  const json report = json::parse(read_file(job.output));
  CHECK(report["command"] == "check-gaussian");
  CHECK(report["parameters"]["cutoff"] == kDefaultCutoff);
  const auto back = std::get<RawCM>(parse_state(json{{"cm", report["cm"]}})).cm;
  CHECK((back - g).cwiseAbs().maxCoeff() <= 1e-15);
  bool has_simon = false;
  for (const auto& v : report["verdicts"]) {
    has_simon |= v["criterion_id"] == "simon";
    const double margin = v["margin"];
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", margin);
    CHECK(std::stod(buf) == margin);
  }
  CHECK(has_simon);
  CHECK(log.str().find("simon margin") != std::string::npos);
}

TEST_CASE("check-gaussian boundary line") {
  JobSpec job;
  job.command = Command::CheckGaussian;
  job.input = write_file("st.json", R"({"family":"squeezed_thermal","a":3,"b":3,"c":2})");
  std::ostringstream log;
  CHECK(run(job, log) == 0);
  CHECK(log.str().find("squeezed_thermal margin 0 boundary") != std::string::npos);
}

TEST_CASE("verdicts never change the exit code; execution failures do") {
  JobSpec job;
  job.command = Command::CheckGaussian;
  job.input = write_file("ent.json", R"({"family":"symmetric_two_mode","a":2,"c1":1.7,"c2":1.7})");
  std::ostringstream log;
  CHECK(run(job, log) == 0);
  CHECK(log.str().find("entangled") != std::string::npos);

  job.input = write_file("unphys.json", R"({"family":"squeezed_thermal","a":1,"b":1,"c":2})");
  CHECK(failure_of([&] { run(job, log); }) == FailureKind::ComputeError);

  job.command = Command::FockIterate;
  job.input.clear();
  CHECK(failure_of([&] { run(job, log); }) == FailureKind::ParseError);
}

TEST_CASE("random sweep output is byte-identical per seed") {
  JobSpec job;
  job.command = Command::SweepFig1;
  job.seed = 42;
  job.samples = 30;
  std::ostringstream log;
  job.output = scratch("s1.csv").string();
  run(job, log);
  const std::string first = read_file(job.output);
  job.output = scratch("s2.csv").string();
  run(job, log);
  CHECK(first == read_file(job.output));
  CHECK(std::count(first.begin(), first.end(), '\n') == 31);
  CHECK(std::filesystem::exists(scratch("s1_failures.csv")));
  CHECK(std::filesystem::exists(scratch("s1_report.json")));
}

TEST_CASE("squeezed-thermal grid sweep writes both tables") {
  JobSpec job;
  job.command = Command::SweepFig2;
  job.input = write_file("grid.json", R"({"N":[0,1],"r":[0,0.3,0.6]})");
  job.output = scratch("fig2.csv").string();
  std::ostringstream log;
  CHECK(run(job, log) == 0);
  const std::string two = read_file(job.output);
  CHECK(two.rfind("N,r,r_boundary,margin,one_photon,two_photon\n", 0) == 0);
  CHECK(std::count(two.begin(), two.end(), '\n') == 7);
  CHECK(std::filesystem::exists(scratch("fig2_three_mode.csv")));
}

TEST_CASE("other commands run") {
  std::ostringstream log;
  JobSpec job;
  job.command = Command::KernelSpectrum;
  job.input = write_file("k.json", R"({"alpha":1,"r":0.5,"count":4})");
  CHECK(run(job, log) == 0);
  job.command = Command::WitnessOptimize;
  job.input = write_file("d.json", R"({"detect":{"m":[2,3,4,5,1,1]}})");
  CHECK(run(job, log) == 0);
  CHECK(log.str().find("lambda 0.22444899") != std::string::npos);
  job.command = Command::CheckNongaussian;
  job.input = write_file(
      "ng.json",
      R"({"family":"ngpasg","kernel":{"family":"squeezed_thermal","a":3,"b":3,"c":2},"add":[1,1],"sub":[0,0],
          "detect":{"cm":[[2,0,0,0],[0,2,0,0],[0,0,2,0],[0,0,0,2]]}})");
  CHECK(run(job, log) == 0);
  job.command = Command::FockIterate;
  job.input.clear();
  job.seed = 3;
  CHECK(run(job, log) == 0);
}
