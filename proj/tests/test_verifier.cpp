#include <doctest.h>

#include <stdexcept>

#include "gale/error.hpp"
#include "gale/verifier.hpp"

using namespace gale;

namespace {

const CheckResult* find_check(const VerificationReport& r, const std::string& name)
{
  for (const auto& c : r.checks)
    if (c.check == name)
      return &c;
  return nullptr;
}

std::string last_line(const std::string& text)
{
  std::string t = text;
  while (!t.empty() && t.back() == '\n')
    t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST_CASE("preset catalog")
{
  const auto tokens = preset_catalog();
  CHECK(tokens.size() == 13);
  for (const auto& t : tokens) {
    const Preset p = preset(t);
    CHECK(p.name == t);
    CHECK_FALSE(p.citation.empty());
  }
  CHECK(preset("boundary:4").complex.identical(boundary_simplex(4)));
  CHECK(preset("sec1-second").complex == make_complex({{"1", "2", "3"}, {"3", "5"}}));
  CHECK(preset("path:3").complex == make_complex({{"1", "2"}, {"2", "3"}, {"3", "4"}}));
  CHECK(preset("counterexample-disk").complex.facets().size() == 11);
  CHECK(preset("counterexample-sphere").complex.facets().size() == 12);
  CHECK_THROWS_AS(preset("boundary:7"), InputError);
  CHECK_THROWS_AS(preset("boundary:"), InputError);
  CHECK_THROWS_AS(preset("boundary:x"), InputError);
  CHECK_THROWS_AS(preset("path:0"), InputError);
  CHECK_THROWS_AS(preset("nonsense"), InputError);
}

TEST_CASE("counterexample structure checks pass")
{
  const VerificationReport r = Verifier().counterexample_structure();
  CHECK(r.checks.size() == 12);
  CHECK(r.passed());
  REQUIRE(find_check(r, "disk boundary cycle"));
  CHECK(find_check(r, "disk boundary cycle")->observed == "{16,17,67}");
}

TEST_CASE("worked examples pass")
{
  const VerificationReport r = Verifier().worked_examples();
  CHECK(r.checks.size() >= 20);
  for (const auto& c : r.checks)
    CHECK_MESSAGE(c.pass, c.check << ": expected " << c.expected << ", observed " << c.observed);
}

TEST_CASE("gale: start positions lose for the mover")
{
  Verifier v;
  const VerificationReport r3 = v.gale(3);
  CHECK(r3.checks.size() == 3);
  CHECK(r3.passed());
  const VerificationReport r5 = v.gale(5);
  CHECK(r5.checks.size() == 5);
  CHECK(r5.passed());
  CHECK(r5.checks[4].observed == "LOSS");
  CHECK_THROWS_AS(v.gale(0), std::out_of_range);
  CHECK_THROWS_AS(v.gale(7), std::out_of_range);
}

TEST_CASE("strategy table: every listed reply wins")
{
  const VerificationReport r = verify_strategy_table();
  CHECK(r.checks.size() == 10);
  CHECK(r.passed());
  CHECK(find_check(r, "open {1,2} reply {3,5}"));
}

TEST_CASE("complement: small cases")
{
  Verifier v;
  const VerificationReport two = v.complement(2);
  REQUIRE(two.checks.size() == 2);
  CHECK(two.checks[0].check == "n=2 open {1} reply {2}");
  CHECK(two.passed());

  const VerificationReport three = v.complement(3);
  CHECK(three.checks.size() == 6);
  CHECK(three.passed());

  const VerificationReport four = v.complement(4);
  CHECK(four.checks.size() == 14);
  CHECK(four.passed());

  CHECK_THROWS_AS(v.complement(1), std::out_of_range);
  CHECK_THROWS_AS(v.complement(7), std::out_of_range);
}

TEST_CASE("complement: n=6 opening 123 answered by 456")
{
  const Complex start = boundary_simplex(6);
  const Complex after = delete_cofaces(start, start.face({"1", "2", "3"}));
  const Complex final_position = delete_cofaces(after, after.face({"4", "5", "6"}));
  CHECK(value(after) == PositionValue::Win);
  CHECK(value(final_position) == PositionValue::Loss);
}

TEST_CASE("opening sizes")
{
  Verifier v;
  for (int n = 3; n <= 5; ++n) {
    const VerificationReport r = v.opening_sizes(n);
    CHECK_MESSAGE(r.passed(), "n = " << n);
    CHECK(r.checks.back().observed == "{}");
  }
  CHECK_THROWS_AS(v.opening_sizes(2), std::out_of_range);
  CHECK_THROWS_AS(v.opening_sizes(7), std::out_of_range);
}

TEST_CASE("a wrong recorded outcome fails exactly its own check")
{
  VerifyOptions o;
  o.expected_overrides["counterexample-disk"] = PositionValue::Win;
  const VerificationReport r = Verifier(o).presets();
  CHECK(r.checks.size() == 13);
  REQUIRE(r.failures() == 1);
  const auto bad = std::find_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return !c.pass; });
  CHECK(bad->check == "preset counterexample-disk");
  CHECK(bad->expected == "WIN");
  CHECK(bad->observed == "LOSS");
  CHECK(last_line(r.to_text(false)) == "FAILED 12/13 checks");
}

TEST_CASE("labeled memo gives the same verdicts as canonical memo")
{
  VerifyOptions labeled;
  labeled.solver.canonical = false;
  Verifier a, b(labeled);
  CHECK(a.gale(4).to_json(false) == b.gale(4).to_json(false));
  CHECK(a.complement(4).to_json(false) == b.complement(4).to_json(false));
  CHECK(a.strategy_table().to_json(false) == b.strategy_table().to_json(false));
  CHECK(a.opening_sizes(4).to_json(false) == b.opening_sizes(4).to_json(false));
}

TEST_CASE("report formatting")
{
  const VerificationReport r = Verifier().gale(3);
  const std::string with = r.to_text(true), without = r.to_text(false);
  CHECK(with.find("time:") != std::string::npos);
  CHECK(without.find("time:") == std::string::npos);
  CHECK(last_line(without) == "PASSED 3/3 checks");

  const auto j = r.to_json(true);
  CHECK(j["pass"] == true);
  CHECK(j["title"] == r.title);
  REQUIRE(j["checks"].size() == 3);
  for (const char* key : {"check", "cite", "expected", "observed", "pass", "millis"})
    CHECK(j["checks"][0].contains(key));
  CHECK_FALSE(r.to_json(false)["checks"][0].contains("millis"));
}
