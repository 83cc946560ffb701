#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "hardylab/report.hpp"

using namespace hardylab;

TEST_CASE("CSV and JSON rendering") {
  Table t{{"N", "value", "label"}, {}};
  CHECK(to_csv(t) == "N,value,label\n");
  CHECK(to_json(t).empty());
  t.add_row({format_number(std::int64_t(10)), format_number(0.1), "a,b"});
  t.add_row({"20", format_number(std::nan("")), "x"});
  t.add_row({"30", format_number(1e300), "y"});
  CHECK(to_csv(t) == "N,value,label\n10,0.1,\"a,b\"\n20,nan,x\n30,1e+300,y\n");
  const auto j = to_json(t);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["N"].is_number_integer());
  CHECK(j[0]["value"].get<double>() == 0.1);
  CHECK(j[1]["value"] == "nan");
  CHECK(j[0].begin().key() == "N");
  CHECK_THROWS(t.add_row({"1"}));
}

TEST_CASE("FNV-1a test vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("SVG has one polyline per series") {
  Plot p{"kappa", "N", "value", true, true, {{"one", {1, 10, 100}, {1, 0.1, 0.01}}, {"two", {1, 10}, {2, 0.2}}}};
  const auto svg = to_svg(p);
  std::size_t count = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++count;
  CHECK(count == 2);
  CHECK(svg.find(">one<") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}

TEST_CASE("ledger lines are appended as valid JSON") {
  const auto dir = std::filesystem::temp_directory_path() / "hardylab_report_test";
  std::filesystem::remove_all(dir);
  const auto path = dir / "ledger.jsonl";
  append_ledger(path, ordered_json{{"command", "a"}, {"exit_code", 0}});
  append_ledger(path, ordered_json{{"command", "b"}, {"exit_code", 4}});
  std::ifstream f(path);
  std::string line;
  int n = 0;
  while (std::getline(f, line)) {
    const auto j = ordered_json::parse(line);
    CHECK(j.contains("command"));
    ++n;
  }
  CHECK(n == 2);
  std::filesystem::remove_all(dir);
}
