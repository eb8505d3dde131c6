#pragma once

// Test-only generators and independent oracles. Nothing here calls the
// solver, the canonizer or the reduction code.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gale/complex.hpp"

namespace gale::testing {

using Rng = std::mt19937_64;

/// Random complex on up to max_vertices vertices named "1".."k".
inline Complex random_complex(Rng& rng, int max_vertices, int min_vertices = 1)
{
  std::uniform_int_distribution<int> nv(min_vertices, max_vertices);
  const int n = nv(rng);
  if (n == 0)
    return Complex{};
  std::uniform_int_distribution<int> nf(1, n + 2);
  std::uniform_int_distribution<Mask> pick(1, (Mask{1} << n) - 1);
  std::vector<std::vector<std::string>> facets;
  const int count = nf(rng);
  for (int i = 0; i < count; ++i) {
    Mask m = pick(rng);
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1u)
        names.push_back(std::to_string(v + 1));
    facets.push_back(names);
  }
  return make_complex(facets);
}

inline std::vector<int> random_permutation(Rng& rng, int n)
{
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// --- explicit face-family model -------------------------------------------

using Family = std::vector<Mask>;  // every face, sorted

inline Family family_of(const Complex& x)
{
  Family f;
  for (Mask facet : x.facets())
    for (Mask s = facet; s != 0; s = (s - 1) & facet)
      f.push_back(s);
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

inline Family family_move(const Family& f, Mask sigma)
{
  Family out;
  for (Mask t : f)
    if ((sigma & ~t) != 0)
      out.push_back(t);
  return out;
}

/// Mex recursion straight from the definition over explicit face families,
/// memoized only on the exact labeled family.
inline unsigned naive_grundy(const Family& f, std::map<Family, unsigned>& memo)
{
  if (f.empty())
    return 0;
  if (auto it = memo.find(f); it != memo.end())
    return it->second;
  std::vector<bool> seen(f.size() + 1, false);
  for (Mask sigma : f) {
    unsigned g = naive_grundy(family_move(f, sigma), memo);
    if (g < seen.size())
      seen[g] = true;
  }
  unsigned m = 0;
  while (seen[m])
    ++m;
  memo.emplace(f, m);
  return m;
}

inline unsigned naive_grundy(const Complex& x)
{
  std::map<Family, unsigned> memo;
  return naive_grundy(family_of(x), memo);
}

/// Plain negamax, no memo at all.
inline bool naive_mover_wins(const Family& f)
{
  for (Mask sigma : f)
    if (!naive_mover_wins(family_move(f, sigma)))
      return true;
  return false;
}

/// Brute-force isomorphism over all vertex bijections.
inline bool brute_isomorphic(const Complex& x, const Complex& y)
{
  if (x.vertex_count() != y.vertex_count())
    return false;
  const int n = x.vertex_count();
  Family fy = family_of(y);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    Family fx;
    for (Mask m : family_of(x)) {
      Mask g = 0;
      for (int v = 0; v < n; ++v)
        if ((m >> v) & 1u)
          g |= Mask{1} << p[v];
      fx.push_back(g);
    }
    std::sort(fx.begin(), fx.end());
    if (fx == fy)
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// A complex with a guaranteed binary star: a random base on vertices
/// "1".."k", plus "x" and "y" coned over the same random subcomplex.
inline Complex random_with_binary_star(Rng& rng, int max_base_vertices)
{
  Complex base = random_complex(rng, max_base_vertices, 1);
  std::vector<std::vector<std::string>> facets;
  for (Mask f : base.facets())
    facets.push_back(base.names_of(Face{f}));
  facets.push_back({"x"});
  facets.push_back({"y"});
  std::bernoulli_distribution keep(0.4);
  for (Mask f : family_of(base)) {
    if (!keep(rng))
      continue;
    auto names = base.names_of(Face{f});
    auto with_x = names, with_y = names;
    with_x.push_back("x");
    with_y.push_back("y");
    facets.push_back(with_x);
    facets.push_back(with_y);
  }
  return make_complex(facets);
}

}  // namespace gale::testing
