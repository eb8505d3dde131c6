#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gale/error.hpp"
#include "gale/io.hpp"
#include "support.hpp"

using namespace gale;

TEST_CASE("facet text: parse, comments and blank lines")
{
  const Complex x = parse_facet_text("# hollow triangle\n1 2\n\n  2 3\n1\t3\n   # indented comment\n");
  CHECK(x == boundary_simplex(3));
  CHECK(x.vertex_names() == std::vector<std::string>{"1", "2", "3"});
  CHECK(parse_facet_text("").empty());
  CHECK(parse_facet_text("# nothing\n").empty());
  // '#' after the first token is part of a name
  CHECK(parse_facet_text("a b#\n").index_of("b#").has_value());
}

TEST_CASE("facet text: errors carry line and column")
{
  try {
    parse_facet_text("1 2\n3 abcdefghijklmnopq\n");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).rfind("2:3: ", 0) == 0);
  }
  try {
    parse_facet_text("ok\n\n  caf\xc3\xa9\n");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("facet text: round trip")
{
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex x = testing::random_complex(rng, 8, 0);
    const std::string text = format_facet_text(x, std::string("sample"));
    CHECK(text.rfind("# sample\n", 0) == 0);
    CHECK(parse_facet_text(text) == x);
  }
}

TEST_CASE("json: round trip reproduces the complex exactly")
{
  testing::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex x = testing::random_complex(rng, 8, 0);
    const NamedComplex back = parse_complex_json(to_json(x, std::string("n")).dump());
    REQUIRE(back.name);
    CHECK(*back.name == "n");
    CHECK(back.complex.identical(x));
  }
  const Complex y = make_complex({{"b", "a"}, {"c"}});
  CHECK(to_json(y) == nlohmann::json::parse(R"({"vertices":["b","a","c"],"facets":[["c"],["b","a"]]})"));
}

TEST_CASE("json: without vertices the order is first appearance")
{
  const NamedComplex n = parse_complex_json(R"({"facets": [["3","1"],["1","2"]]})");
  CHECK_FALSE(n.name);
  CHECK(n.complex.vertex_names() == std::vector<std::string>{"3", "1", "2"});
}

TEST_CASE("json: errors")
{
  try {
    parse_complex_json("{\n  \"facets\": [[\"1\",]\n}");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_complex_json("[]"), InputError);
  CHECK_THROWS_AS(parse_complex_json(R"({"facets": 3})"), InputError);
  CHECK_THROWS_AS(parse_complex_json(R"({"facets": [[1,2]]})"), InputError);
  CHECK_THROWS_AS(parse_complex_json(R"({"facets": [[]]})"), InputError);
  CHECK_THROWS_AS(parse_complex_json(R"({"name": 4, "facets": []})"), InputError);
  CHECK_THROWS_AS(parse_complex_json(R"({"vertices": ["1"], "facets": [["1","2"]]})"), InputError);
  CHECK_THROWS_AS(parse_complex_json(R"({"vertices": ["1","2","3"], "facets": [["1","2"]]})"), InputError);
  CHECK_THROWS_AS(parse_complex_json(R"({"vertices": ["1","1"], "facets": [["1"]]})"), InputError);
  CHECK_THROWS_AS(parse_complex_json(R"({"facets": [["a b"]]})"), InputError);
}

TEST_CASE("faces to and from json")
{
  const Complex t = boundary_simplex(4);
  const Face f = t.face({"1", "4"});
  CHECK(face_to_json(t, f) == nlohmann::json::array({"1", "4"}));
  CHECK(face_from_json(t, nlohmann::json::array({"4", "1"})) == f);
  CHECK_THROWS_AS(face_from_json(t, nlohmann::json::array()), InputError);
  CHECK_THROWS_AS(face_from_json(t, nlohmann::json::array({"9"})), IllegalMove);
}

TEST_CASE("read_complex_file detects the format")
{
  const auto dir = std::filesystem::temp_directory_path();
  const auto text = dir / "gale_io_test.txt", json = dir / "gale_io_test.json";
  std::ofstream(text) << "1 2 3\n3 4\n";
  std::ofstream(json) << "  \n{\"name\": \"edge\", \"facets\": [[\"a\", \"b\"]]}";
  CHECK(read_complex_file(text).complex == make_complex({{"1", "2", "3"}, {"3", "4"}}));
  const NamedComplex j = read_complex_file(json);
  CHECK(j.name == std::optional<std::string>("edge"));
  CHECK(j.complex == make_complex({{"a", "b"}}));
  CHECK_THROWS_AS(read_complex_file(dir / "gale_io_missing.txt"), InputError);
  std::filesystem::remove(text);
  std::filesystem::remove(json);
}
