#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oodlsp/cli.hpp"
#include "support.hpp"

using test_support::source_path;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = oodlsp::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("prefs prints the functionality column") {
  const auto r = run({"prefs", source_path("tables/table2.csv"), "--model",
                      source_path("models/paper-functionality.model")});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("77.19") != std::string::npos);
  CHECK(r.out.find("73.54") != std::string::npos);
  CHECK(r.out.find("69.70") != std::string::npos);
  CHECK(r.out.find("83.66") != std::string::npos);
}

TEST_CASE("prefs CSV output") {
  const auto r = run({"prefs", source_path("tables/table2.csv"), "--model",
                      source_path("models/paper-functionality.model"), "--format", "csv"});
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("design_id,node_code,name,preference,percent,rating\n", 0) == 0);
  CHECK(r.out.find("LMS-1,global,Global,") != std::string::npos);
}

TEST_CASE("broken design exits 2 with a position") {
  const auto r = run({"metrics", source_path("samples/broken.ood")});
  CHECK(r.status == oodlsp::cli::kParseError);
  CHECK(r.err.find("broken.ood:4:7: error:") != std::string::npos);
}

TEST_CASE("semantic design error exits 3") {
  const auto path = std::filesystem::temp_directory_path() / "oodlsp_cli_semantic.ood";
  {
    std::ofstream f(path);
    f << "class A : Nope {}\n";
  }
  const auto r = run({"metrics", path.string()});
  CHECK(r.status == oodlsp::cli::kModelError);
  std::filesystem::remove(path);
}

TEST_CASE("metrics of the chain sample") {
  const auto r = run({"metrics", source_path("samples/chain3.ood"), "--format", "csv"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("NOC,3\n") != std::string::npos);
  CHECK(r.out.find("NOH,1\n") != std::string::npos);
  CHECK(r.out.find("MDIT,3\n") != std::string::npos);
}

TEST_CASE("evaluate and report on sample designs") {
  const auto e = run({"evaluate", source_path("samples/library-a.ood"), "--model",
                      source_path("models/paper-faithful.model")});
  REQUIRE(e.status == 0);
  CHECK(e.out.find("library-a") != std::string::npos);

  const auto chart = std::filesystem::temp_directory_path() / "oodlsp_cli_chart.svg";
  const auto r = run({"report", source_path("samples/library-a.ood"), source_path("samples/library-b.ood"),
                      "--model", source_path("models/paper-faithful.model"), "--chart", chart.string()});
  REQUIRE(r.status == 0);
  CHECK(std::filesystem::exists(chart));
  std::filesystem::remove(chart);
}

TEST_CASE("report from factor preferences") {
  const auto r = run({"report", "--prefs", source_path("tables/table7-factors.csv"), "--model",
                      source_path("models/global-block.model")});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("78.89") != std::string::npos);
}

TEST_CASE("calibrate") {
  const auto r = run({"calibrate", "--observations", source_path("tables/table3-observations.csv"), "--arity", "3",
                      "--operators", "C--"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("operator C--") != std::string::npos);
  CHECK(r.out.find("underdetermined no") != std::string::npos);
}

TEST_CASE("usage and model errors") {
  CHECK(run({}).status == oodlsp::cli::kUsageError);
  CHECK(run({"frobnicate"}).status == oodlsp::cli::kUsageError);
  CHECK(run({"metrics", "/nonexistent/x.ood"}).status == oodlsp::cli::kUsageError);
  CHECK(run({"calibrate", "--observations", source_path("tables/table3-observations.csv"), "--arity", "3",
             "--grid-step", "0.02"})
            .status == oodlsp::cli::kUsageError);
  CHECK(run({"calibrate", "--observations", source_path("tables/table3-observations.csv"), "--arity", "4"})
            .status == oodlsp::cli::kParseError);
  CHECK(run({"report", "--model", source_path("models/global-block.model")}).status == oodlsp::cli::kUsageError);
  const auto help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("calibrate") != std::string::npos);
}
