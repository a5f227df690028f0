#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "weylva/series_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = weylva::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::map<std::string, std::string> read_path_csv(const std::string& csv) {
  std::map<std::string, std::string> m;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "path,value");
  while (std::getline(in, line)) {
    auto comma = line.find(',');
    m[line.substr(0, comma)] = line.substr(comma + 1);
  }
  return m;
}

void collect(const Json& j, const std::string& path, std::map<std::string, std::string>& m) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) collect(v, path.empty() ? k : path + "." + k, m);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) collect(j[i], path + "[" + std::to_string(i) + "]", m);
  } else if (j.is_number() || j.is_boolean()) {
    m[path] = j.dump();
  } else if (j.is_string()) {
    m[path] = j.get<std::string>();
  }
}

}  // namespace

TEST_CASE("p2 counts") {
  auto r = run({"p2", "--max", "6", "--no-timestamp"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["counts"] == Json::parse("[1,2,5,10,20,36,65]"));
  auto l = Json::parse(run({"p2", "--max", "1", "--list"}).out);
  CHECK(l["bipartitions"]["1"].size() == 2);
}

TEST_CASE("mta level 1") {
  auto j = Json::parse(run({"mta", "--level", "1"}).out);
  CHECK(j["bipartitions"].size() == 2);
  CHECK(j["constants"].size() == 2);
  CHECK(j["unity"].size() == 2);
  CHECK(j["passed"] == true);
  CHECK(j.contains("generated_at"));
}

TEST_CASE("deterministic output without timestamp") {
  for (std::vector<std::string> args : {std::vector<std::string>{"zhu", "--level", "2"},
                                        {"modules", "--family", "w0-", "--window", "5", "--depth", "1"},
                                        {"zhu-products", "--depth", "1"},
                                        {"characters", "--format", "csv"}}) {
    args.push_back("--no-timestamp");
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("generated_at") == std::string::npos);
  }
}

TEST_CASE("json and csv agree") {
  std::vector<std::vector<std::string>> configs = {{"zhu", "--level", "3"},
                                                   {"mta", "--level", "2"},
                                                   {"modules", "--family", "w0+", "--window", "4"},
                                                   {"flow", "--ell", "1", "--window", "2"}};
  for (auto args : configs) {
    args.push_back("--no-timestamp");
    auto json_args = args, csv_args = args;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    std::map<std::string, std::string> from_json;
    collect(Json::parse(run(json_args).out), "", from_json);
    auto from_csv = read_path_csv(run(csv_args).out);
    for (const auto& [k, v] : from_json) {
      REQUIRE(from_csv.count(k) == 1);
      std::string cell = from_csv[k];
      if (cell.size() >= 2 && cell.front() == '"') cell = cell.substr(1, cell.size() - 2);
      CHECK(cell == v);
    }
  }
  auto json = Json::parse(run({"characters", "--max-d", "5", "--j-window", "5"}).out);
  auto csv = run({"characters", "--max-d", "5", "--j-window", "5", "--format", "csv"}).out;
  CHECK(weylva::series_from_json(json).coefficients == weylva::series_from_csv(csv).coefficients);
}

TEST_CASE("configuration errors exit with 2 and a json error") {
  for (std::vector<std::string> args : {std::vector<std::string>{"zhu", "--level", "-1"},
                                        {"modules", "--family", "nope"},
                                        {"modules", "--family", "wlambda", "--lambda", "3/2"},
                                        {"modules", "--lambda", "x/y"},
                                        {"characters", "--max-d", "9", "--j-window", "4"},
                                        {"p2", "--format", "yaml"},
                                        {}}) {
    auto r = run(args);
    CHECK(r.code == 2);
    auto e = Json::parse(r.err);
    CHECK(e["error"]["kind"] == "config");
  }
}

TEST_CASE("output path and environment default") {
  auto dir = std::filesystem::temp_directory_path() / "weylva_cli_test";
  std::filesystem::create_directories(dir);
  auto file = dir / "explicit.json";
  CHECK(run({"zhu", "--level", "1", "--out", file.string()}).code == 0);
  CHECK(std::filesystem::exists(file));
  setenv("WEYLVA_OUT_DIR", dir.string().c_str(), 1);
  auto r = run({"p2", "--format", "csv"});
  unsetenv("WEYLVA_OUT_DIR");
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(dir / "p2.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify-all quick passes") {
  auto r = run({"verify-all", "--quick", "--no-timestamp"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["criteria"].size() == 11);
  for (const auto& c : j["criteria"]) CHECK(c["passed"] == true);
}
