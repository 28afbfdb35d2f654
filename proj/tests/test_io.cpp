#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "divclust/io.hpp"
#include "oracles.hpp"

using namespace divclust;

TEST_SUITE_BEGIN("io");

TEST_CASE("csv parsing") {
  const auto m = parse_distance_csv("0,1,10,11\n1,0,9,10\n10,9,0,1\n11,10,1,0\n");
  CHECK(m.size() == 4);
  CHECK(m(0, 3) == 11.0);

  const auto d = parse_data_csv("x\n0\n1\n10\n11\n", true);
  CHECK(std::equal(d.packed().begin(), d.packed().end(), m.packed().begin()));

  // CRLF and blank trailing lines are tolerated.
  CHECK(parse_distance_csv("0, 2\r\n2, 0\r\n\n")(0, 1) == 2.0);

  const auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code([] { parse_distance_csv("0,1\n1\n"); }) == ErrorCode::ParseError);
  CHECK(code([] { parse_distance_csv("0,abc\n1,0\n"); }) == ErrorCode::ParseError);
  CHECK(code([] { parse_distance_csv("0,1,2\n1,0,2\n"); }) == ErrorCode::NotSquare);
  CHECK(code([] { parse_distance_csv(""); }) == ErrorCode::ParseError);
  CHECK(code([] { read_file("/nonexistent/file.csv"); }) == ErrorCode::IoError);
}

TEST_CASE("tree json") {
  const auto m = oracle::line4();
  const auto t = divisive_hierarchy(m, SplitterId::two_seeds(CriterionId::AverageLink));
  const std::string text = tree_to_json(t);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["n"] == 4);
  CHECK(doc["nodes"].size() == 7);
  CHECK(doc["nodes"][0]["level"] == 11.0);
  CHECK(doc["nodes"][0]["children"] == nlohmann::json::array({1, 2}));
  CHECK(doc["nodes"][1]["members"] == nlohmann::json::array({0, 1}));
  CHECK_FALSE(doc["nodes"][3].contains("children"));

  const auto back = tree_from_json(text);
  CHECK(back.root().level == 11.0);
  CHECK(tree_to_json(back) == text);

  // Levels keep 9 significant digits.
  const DissimilarityMatrix odd(2, {1.0 / 3.0});
  const auto j = nlohmann::json::parse(tree_to_json(agglomerative_average_link(odd)));
  CHECK(j["nodes"][2]["level"].get<double>() == 0.333333333);

  CHECK_THROWS_AS(tree_from_json("{\"n\": 2}"), Error);
  CHECK_THROWS_AS(tree_from_json("not json"), Error);
  CHECK_THROWS_AS(tree_from_json(R"({"n":2,"nodes":[{"id":0,"members":[1,0],"level":1,"children":[1,2]},
      {"id":1,"members":[0],"level":0},{"id":2,"members":[1],"level":0}]})"),
                  Error);
}

TEST_CASE("newick") {
  const auto m = oracle::line4();
  CHECK(tree_to_newick(divisive_hierarchy(m, SplitterId::pddp())) ==
        "((o1:1,o2:1):10,(o3:1,o4:1):10);\n");
  CHECK(tree_to_newick(agglomerative_average_link(DissimilarityMatrix(2, {5}))) == "(o1:5,o2:5);\n");
}

TEST_CASE("svg") {
  const auto count = [](const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
    return n;
  };
  const auto m = oracle::line4();
  const std::string svg = tree_to_svg(divisive_hierarchy(m, SplitterId::macnaughton_smith()));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "class=\"junction\"") == 3);
  CHECK(count(svg, ">o") == 4);
  // Root at the top of the plot (y = 40), the low junctions at 1/11 of its height.
  CHECK(svg.find("V40.00") != std::string::npos);
  CHECK(count(svg, "V330.91") == 3);

  const std::string two = tree_to_svg(agglomerative_average_link(DissimilarityMatrix(2, {5})));
  CHECK(count(two, "class=\"junction\"") == 1);
}

TEST_SUITE_END();
