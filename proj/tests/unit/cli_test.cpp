#include <unistd.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "dcq/instance_io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using dcq::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome dcq_run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("dcq_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string data(const char* name) { return std::string(DCQ_TEST_DATA_DIR) + "/" + name; }

std::string write(const std::string& name, const std::string& text) {
  const auto path = (scratch() / name).string();
  dcq::write_text_file(path, text);
  return path;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> column(const std::string& csv, std::size_t col) {
  std::vector<std::string> out;
  auto rows = lines(csv);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream in(rows[i]);
    std::string cell;
    for (std::size_t c = 0; c <= col; ++c) std::getline(in, cell, ',');
    out.push_back(cell);
  }
  return out;
}

}  // namespace

TEST_CASE("clique command on fixture files") {
  auto golden = dcq_run({"clique", data("five_disks.json"), "--json"});
  REQUIRE(golden.code == dcq::cli::kOk);
  const auto doc = nlohmann::json::parse(golden.out);
  CHECK(doc["size"] == 3);
  CHECK(doc["clique"] == nlohmann::json::array({"a", "b", "c"}));
  CHECK(doc["algorithm"] == "slab-kradii");
  CHECK(doc["instance_digest"].get<std::string>().size() == 16);
  CHECK(doc["witness_guess"].is_array());
  CHECK(doc["elapsed_ms"].get<double>() > 0);

  auto both = dcq_run({"clique", data("five_disks.json"), "--algo", "both", "--json"});
  REQUIRE(both.code == dcq::cli::kOk);
  CHECK(nlohmann::json::parse(both.out)["oracle"]["size"] == 3);

  auto oracle = dcq_run({"clique", data("five_disks.json"), "--algo", "oracle", "--json"});
  CHECK(nlohmann::json::parse(oracle.out)["witness_guess"].is_null());

  auto single = dcq_run({"clique", data("single_disk.json")});
  CHECK(single.code == dcq::cli::kOk);
  CHECK(single.out.find("size: 1") != std::string::npos);
}

TEST_CASE("exit codes are distinct per failure class") {
  CHECK(dcq_run({}).code == dcq::cli::kUsage);
  CHECK(dcq_run({"clique"}).code == dcq::cli::kUsage);
  CHECK(dcq_run({"clique", data("five_disks.json"), "--algo", "fast"}).code == dcq::cli::kUsage);

  const auto broken = write("broken.json", "{\"type\": \"disks\", \"disks\": [");
  CHECK(dcq_run({"clique", broken}).code == dcq::cli::kParseError);

  const auto dup = write("dup.json", R"({"type":"disks","disks":[
    {"id":"a","x":"0","y":"0","r":"1"},{"id":"a","x":"1","y":"0","r":"1"}]})");
  CHECK(dcq_run({"clique", dup}).code == dcq::cli::kValidationError);

  CHECK(dcq_run({"clique", data("five_disks.json"), "--budget", "3"}).code ==
        dcq::cli::kBudgetExceeded);
  auto warned = dcq_run({"clique", data("five_disks.json")});
  CHECK(warned.code == dcq::cli::kOk);
  CHECK(warned.err.empty());
}

TEST_CASE("gen command") {
  auto a = dcq_run({"gen", "--kind", "disks", "--n", "5", "--k", "1", "--seed", "7"});
  auto b = dcq_run({"gen", "--kind", "disks", "--n", "5", "--k", "1", "--seed", "7"});
  REQUIRE(a.code == dcq::cli::kOk);
  CHECK(a.out == b.out);
  CHECK(dcq_run({"gen", "--kind", "disks", "--n", "0"}).code == dcq::cli::kValidationError);

  auto balls = dcq_run({"gen", "--kind", "balls-parallel", "--planes", "2", "--k", "1",
                        "--seed", "1"});
  REQUIRE(balls.code == dcq::cli::kOk);
  CHECK_NOTHROW(dcq::parse_ball_instance(balls.out));
}

TEST_CASE("range build and query") {
  const auto inst = (scratch() / "unit.json").string();
  REQUIRE(dcq_run({"gen", "--kind", "unit", "--n", "9", "--seed", "3", "--extent", "4",
                   "--decimals", "2", "--out", inst})
              .code == dcq::cli::kOk);
  const auto tables = (scratch() / "unit.dcrq").string();
  REQUIRE(dcq_run({"range", "build", inst, "--out", tables}).code == dcq::cli::kOk);

  auto empty = dcq_run({"range", "query", "--tables", tables, "--instance", inst, "--rect", "50",
                        "50", "60", "60", "--json"});
  REQUIRE(empty.code == dcq::cli::kOk);
  CHECK(nlohmann::json::parse(empty.out)["size"] == 0);

  auto full = dcq_run({"range", "query", "--tables", tables, "--instance", inst, "--rect", "-1",
                       "-1", "5", "5", "--json"});
  auto clique = dcq_run({"clique", inst, "--json"});
  CHECK(nlohmann::json::parse(full.out)["size"] == nlohmann::json::parse(clique.out)["size"]);

  const auto other = (scratch() / "other.json").string();
  dcq_run({"gen", "--kind", "unit", "--n", "9", "--seed", "4", "--extent", "4", "--decimals",
           "2", "--out", other});
  CHECK(dcq_run({"range", "query", "--tables", tables, "--instance", other, "--rect", "0", "0",
                 "1", "1"})
            .code == dcq::cli::kValidationError);

  const auto junk = write("junk.dcrq", "not a table");
  CHECK(dcq_run({"range", "query", "--tables", junk, "--instance", inst, "--rect", "0", "0", "1",
                 "1"})
            .code == dcq::cli::kParseError);

  const auto degenerate = write("degenerate.json", R"({"type":"disks","disks":[
    {"id":"a","x":"0","y":"0","r":"1"},{"id":"b","x":"0","y":"1","r":"1"}]})");
  CHECK(dcq_run({"range", "build", degenerate, "--out", tables}).code ==
        dcq::cli::kValidationError);
  CHECK(dcq_run({"range", "build", degenerate, "--out", tables, "--perturb"}).code ==
        dcq::cli::kOk);
}

TEST_CASE("ball command") {
  const auto par = (scratch() / "par.json").string();
  REQUIRE(dcq_run({"gen", "--kind", "balls-parallel", "--n", "8", "--planes", "2", "--k", "2",
                   "--seed", "5", "--out", par})
              .code == dcq::cli::kOk);
  auto both = dcq_run({"ball", par, "--mode", "parallel", "--algo", "both"});
  CHECK(both.code == dcq::cli::kOk);
  CHECK(dcq_run({"ball", par, "--mode", "perp"}).code == dcq::cli::kValidationError);
  CHECK(dcq_run({"clique", par}).code == dcq::cli::kValidationError);

  // One plane: the 3D answer equals the 2D answer on the projection.
  const auto flat = write("flat.json", R"({"type":"balls","plane_kind":"parallel",
    "planes":[{"id":0,"z":"2"}],
    "balls":[{"id":"a","x":"0","y":"0","z":"2","r":"1","plane":0},
             {"id":"b","x":"1.5","y":"0.5","z":"2","r":"1","plane":0},
             {"id":"c","x":"0.5","y":"1","z":"2","r":"2","plane":0},
             {"id":"d","x":"6","y":"0","z":"2","r":"1","plane":0}]})");
  const auto flat2d = write("flat2d.json", R"({"type":"disks","disks":[
    {"id":"a","x":"0","y":"0","r":"1"},{"id":"b","x":"1.5","y":"0.5","r":"1"},
    {"id":"c","x":"0.5","y":"1","r":"2"},{"id":"d","x":"6","y":"0","r":"1"}]})");
  auto in3d = dcq_run({"ball", flat, "--mode", "parallel", "--json"});
  auto in2d = dcq_run({"clique", flat2d, "--json"});
  REQUIRE(in3d.code == dcq::cli::kOk);
  CHECK(nlohmann::json::parse(in3d.out)["clique"] == nlohmann::json::parse(in2d.out)["clique"]);
}

TEST_CASE("bench command") {
  const std::vector<std::string> args{"bench", "--suite", "kradii", "--sizes", "5,7",
                                      "--seeds", "1,2", "--algo", "both"};
  auto first = dcq_run(args);
  auto second = dcq_run(args);
  REQUIRE(first.code == dcq::cli::kOk);
  CHECK(lines(first.out)[0] == "n,k,r,algo,guesses,elapsed_ms,size");
  CHECK(column(first.out, 6) == column(second.out, 6));
  for (const auto& ms : column(first.out, 5)) CHECK(std::stod(ms) > 0);
  const auto ns = column(first.out, 0);
  const auto algos = column(first.out, 3);
  const auto guesses = column(first.out, 4);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (algos[i] != "slab") continue;
    const std::uint64_t n = std::stoull(ns[i]);
    CHECK(std::stoull(guesses[i]) == n + n * (n - 1) / 2);
  }
}
