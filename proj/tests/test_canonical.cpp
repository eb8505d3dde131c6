#include <doctest.h>

#include <chrono>
#include <set>

#include "gale/canonical.hpp"
#include "gale/complex.hpp"
#include "support.hpp"

using namespace gale;

namespace {

const std::vector<std::vector<std::string>> kDisk = {
  {"1", "2", "6"}, {"1", "3", "7"}, {"1", "2", "8"}, {"1", "3", "8"}, {"2", "4", "6"}, {"2", "4", "8"},
  {"4", "6", "8"}, {"3", "5", "7"}, {"3", "5", "8"}, {"5", "7", "8"}, {"6", "7", "8"}};

}  // namespace

TEST_CASE("relabeling by names does not change the key")
{
  const Complex a = boundary_simplex(3);
  const Complex b = make_complex({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(canonical_key(a) == canonical_key(b));
}

TEST_CASE("different triangulations of the same space get different keys")
{
  const Complex first = make_complex({{"1", "2", "3"}, {"3", "4"}, {"4", "5"}});
  const Complex second = make_complex({{"1", "2", "3"}, {"3", "5"}});
  CHECK(canonical_key(first) != canonical_key(second));
  CHECK_FALSE(is_isomorphic(first, second));
}

TEST_CASE("the disk's mirror swap is an automorphism and keeps the key")
{
  const std::map<std::string, std::string> swap = {{"2", "3"}, {"3", "2"}, {"4", "5"},
                                                   {"5", "4"}, {"6", "7"}, {"7", "6"}};
  // Independent check on the facet list itself.
  std::set<std::set<std::string>> original, mapped;
  for (const auto& f : kDisk) {
    original.insert({f.begin(), f.end()});
    std::set<std::string> g;
    for (const auto& v : f)
      g.insert(swap.count(v) ? swap.at(v) : v);
    mapped.insert(g);
  }
  REQUIRE(original == mapped);

  auto swapped = kDisk;
  for (auto& f : swapped)
    for (auto& v : f)
      v = swap.count(v) ? swap.at(v) : v;
  // Different first-appearance order, so different indexing.
  std::reverse(swapped.begin(), swapped.end());
  const Complex a = make_complex(kDisk);
  const Complex b = make_complex(swapped);
  CHECK_FALSE(a.identical(b));
  CHECK(canonical_key(a) == canonical_key(b));
}

TEST_CASE("is_isomorphic examples")
{
  testing::Rng rng(7);
  const Complex x = make_complex({{"1", "2", "3"}, {"3", "4"}, {"4", "5"}});
  CHECK(is_isomorphic(x, permuted(x, testing::random_permutation(rng, x.vertex_count()))));
  CHECK_FALSE(is_isomorphic(full_simplex(0), full_simplex(1)));
  const Complex cycle = make_complex({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  CHECK(is_isomorphic(cycle, suspension(boundary_simplex(2))));
  CHECK(is_isomorphic(Complex{}, Complex{}));
}

TEST_CASE("canonical form labeling reproduces the canonical facets")
{
  testing::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex x = testing::random_complex(rng, 7);
    const CanonicalForm form = canonical_form(x.facets());
    FacetList mapped = bits::permute(x.facets(), form.labeling);
    CHECK(mapped == form.facets);
  }
}

TEST_CASE("property: key is invariant under random relabeling (1000 cases, <= 6 vertices)")
{
  testing::Rng rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex x = testing::random_complex(rng, 6);
    const Complex y = permuted(x, testing::random_permutation(rng, x.vertex_count()));
    REQUIRE(canonical_key(x) == canonical_key(y));
  }
}

TEST_CASE("property: equal keys iff a brute-force isomorphism exists (<= 5 vertices)")
{
  testing::Rng rng(99);
  int isomorphic_pairs = 0, distinct_pairs = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Complex x = testing::random_complex(rng, 5);
    // Half the pairs are relabelings, half independent draws.
    const Complex y = trial % 2 == 0 ? permuted(x, testing::random_permutation(rng, x.vertex_count()))
                                     : testing::random_complex(rng, 5);
    const bool brute = testing::brute_isomorphic(x, y);
    REQUIRE((canonical_key(x) == canonical_key(y)) == brute);
    (brute ? isomorphic_pairs : distinct_pairs)++;
  }
  CHECK(isomorphic_pairs > 250);
  CHECK(distinct_pairs > 200);
}

TEST_CASE("highly symmetric complexes canonicalize quickly")
{
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<std::string>> points;
  for (int i = 0; i < 32; ++i)
    points.push_back({"p" + std::to_string(i)});
  const Complex many = make_complex(points);
  testing::Rng rng(3);
  CHECK(canonical_key(many) == canonical_key(permuted(many, testing::random_permutation(rng, 32))));
  CHECK(canonical_key(boundary_simplex(10)).bytes().size() == 1 + 10 * 2);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  CHECK(ms < 5000);
}
