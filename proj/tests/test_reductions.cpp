#include <doctest.h>

#include <stdexcept>

#include "gale/canonical.hpp"
#include "gale/reductions.hpp"
#include "gale/solver.hpp"
#include "mirror.hpp"
#include "support.hpp"

using namespace gale;

namespace {

Complex tetra_minus_14()
{
  const Complex t = boundary_simplex(4);
  return delete_cofaces(t, t.face({"1", "4"}));
}

BinaryStar star_by_names(const Complex& x, const std::string& a, const std::string& b)
{
  int i = *x.index_of(a), j = *x.index_of(b);
  return i < j ? BinaryStar{i, j} : BinaryStar{j, i};
}

bool has_star(const Complex& x, const std::string& a, const std::string& b)
{
  auto stars = find_binary_stars(x);
  return std::find(stars.begin(), stars.end(), star_by_names(x, a, b)) != stars.end();
}

SolveOptions plain()
{
  SolveOptions o;
  o.reduce = false;
  return o;
}

}  // namespace

TEST_CASE("find_binary_stars")
{
  CHECK(has_star(tetra_minus_14(), "1", "4"));
  CHECK(find_binary_stars(boundary_simplex(3)).empty());

  // Diamond: check the definition directly on its face family.
  const Complex diamond = suspension(full_simplex(1));
  const auto fam = testing::family_of(diamond);
  const Mask bx = Mask{1} << *diamond.index_of("x"), by = Mask{1} << *diamond.index_of("y");
  CHECK(std::find(fam.begin(), fam.end(), bx | by) == fam.end());
  for (Mask a : fam) {
    if (a & bx)
      CHECK(std::find(fam.begin(), fam.end(), (a & ~bx) | by) != fam.end());
    if (a & by)
      CHECK(std::find(fam.begin(), fam.end(), (a & ~by) | bx) != fam.end());
  }
  CHECK(has_star(diamond, "x", "y"));
}

TEST_CASE("reduce_binary_star")
{
  const Complex x = tetra_minus_14();
  CHECK(reduce_binary_star(x, star_by_names(x, "1", "4")) == make_complex({{"2", "3"}}));

  const Complex base = make_complex({{"a", "b"}, {"b", "c"}});
  const Complex s = suspension(base);
  CHECK(reduce_binary_star(s, star_by_names(s, "x", "y")) == base);

  const Complex two = boundary_simplex(2);
  CHECK(reduce_binary_star(two, {0, 1}).empty());

  CHECK_THROWS_AS(reduce_binary_star(boundary_simplex(3), {0, 1}), std::invalid_argument);
}

TEST_CASE("reduce_fully")
{
  for (int n = 4; n <= 6; ++n) {
    const Complex start = boundary_simplex(n);
    const Complex after = delete_cofaces(start, start.face({"1", std::to_string(n)}));
    auto [reduced, trace] = reduce_fully(after);
    CHECK(trace.steps.size() == 1);
    CHECK(trace.steps[0].x_name == "1");
    CHECK(trace.steps[0].y_name == std::to_string(n));
    CHECK(is_isomorphic(reduced, full_simplex(n - 3)));
  }

  auto [same, empty_trace] = reduce_fully(boundary_simplex(3));
  CHECK(same.identical(boundary_simplex(3)));
  CHECK(empty_trace.steps.empty());

  // suspension(suspension(point)): points 1, x, y, x1, y1.
  auto [point, two_steps] = reduce_fully(suspension(suspension(full_simplex(0))));
  CHECK(two_steps.steps.size() == 2);
  CHECK(is_isomorphic(point, full_simplex(0)));
}

TEST_CASE("mirror_response")
{
  const Complex x = tetra_minus_14();
  const BinaryStar s = star_by_names(x, "1", "4");
  auto r = mirror_response(s, x.face({"1", "2"}));
  REQUIRE(r);
  CHECK(x.names_of(*r) == std::vector<std::string>{"2", "4"});
  CHECK_FALSE(mirror_response(s, x.face({"2", "3"})));

  const Complex d = suspension(full_simplex(1));
  const BinaryStar xy = star_by_names(d, "x", "y");
  CHECK(*mirror_response(xy, d.face({"x"})) == d.face({"y"}));
  CHECK_THROWS_AS(mirror_response(xy, Face{xy.pair_mask()}), std::logic_error);
}

TEST_CASE("property: binary-star reduction preserves the Grundy value (>= 500 cases, <= 6 vertices)")
{
  testing::Rng rng(1234);
  Solver reference(plain());
  int checked = 0;
  for (int trial = 0; trial < 700; ++trial) {
    const Complex x = trial % 2 == 0 ? testing::random_with_binary_star(rng, 4) : testing::random_complex(rng, 6);
    const GrundyValue g = reference.grundy(x);
    for (const BinaryStar& s : find_binary_stars(x)) {
      REQUIRE(reference.grundy(reduce_binary_star(x, s)) == g);
      ++checked;
    }
  }
  CHECK(checked >= 500);
}

TEST_CASE("property: suspension keeps the outcome (>= 200 cases, <= 4 vertices)")
{
  testing::Rng rng(555);
  Solver reference(plain());
  std::map<testing::Family, unsigned> memo;
  for (int trial = 0; trial < 250; ++trial) {
    const Complex x = testing::random_complex(rng, 4, 0);
    const Complex s = suspension(x);
    REQUIRE(reference.value(s) == reference.value(x));
    REQUIRE(testing::naive_grundy(testing::family_of(s), memo) == testing::naive_grundy(testing::family_of(x), memo));
  }
}

TEST_CASE("property: the suspension pair is a binary star whose removal restores X")
{
  testing::Rng rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex x = testing::random_complex(rng, 6, 0);
    const Complex s = suspension(x);
    const std::string xs = s.name(s.vertex_count() - 2), ys = s.name(s.vertex_count() - 1);
    REQUIRE(has_star(s, xs, ys));
    CHECK(is_isomorphic(reduce_binary_star(s, star_by_names(s, xs, ys)), x));
    CHECK(reduce_binary_star(s, star_by_names(s, xs, ys)) == x);
  }
}


TEST_CASE("property: the mirror strategy wins against random and optimal opponents")
{
  testing::Rng rng(2024);
  Solver solver;
  std::vector<Complex> positions;
  while (positions.size() < 100) {
    const Complex x = testing::random_with_binary_star(rng, 4);
    const Complex reduced = delete_vertices(x, star_by_names(x, "x", "y").pair_mask());
    if (solver.grundy(reduced) == 0)
      positions.push_back(x);
  }
  int random_wins = 0, optimal_wins = 0;
  for (const Complex& x : positions) {
    random_wins += testing::play_mirror_game(x, testing::Opponent::Random, rng, solver) ? 1 : 0;
    optimal_wins += testing::play_mirror_game(x, testing::Opponent::Optimal, rng, solver) ? 1 : 0;
  }
  CHECK(random_wins == 100);
  CHECK(optimal_wins == 100);
}
