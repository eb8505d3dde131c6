#include "gale/bits.hpp"

#include <algorithm>
#include <numeric>

namespace gale::bits {

void normalize(FacetList& facets)
{
  std::sort(facets.begin(), facets.end(), [](Mask a, Mask b) { return face_less(b, a); });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  FacetList kept;
  kept.reserve(facets.size());
  for (Mask f : facets) {
    if (f == 0)
      continue;
    bool covered = false;
    for (Mask k : kept) {
      if (subset(f, k)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), face_less);
  facets = std::move(kept);
}

Mask support(std::span<const Mask> facets)
{
  Mask u = 0;
  for (Mask f : facets)
    u |= f;
  return u;
}

bool is_face(std::span<const Mask> facets, Mask sigma)
{
  if (sigma == 0)
    return false;
  return std::any_of(facets.begin(), facets.end(), [sigma](Mask f) { return subset(sigma, f); });
}

std::vector<Mask> all_faces(std::span<const Mask> facets)
{
  std::vector<Mask> out;
  for (Mask f : facets) {
    // standard submask walk
    for (Mask s = f; s != 0; s = (s - 1) & f)
      out.push_back(s);
  }
  std::sort(out.begin(), out.end(), face_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t face_count(std::span<const Mask> facets)
{
  return all_faces(facets).size();
}

FacetList delete_cofaces(std::span<const Mask> facets, Mask sigma)
{
  FacetList out;
  out.reserve(facets.size() + 4);
  for (Mask f : facets) {
    if (!subset(sigma, f)) {
      out.push_back(f);
      continue;
    }
    for (Mask rest = sigma; rest != 0; rest &= rest - 1) {
      const Mask v = rest & (~rest + 1);
      out.push_back(f & ~v);
    }
  }
  normalize(out);
  return out;
}

FacetList delete_vertices(std::span<const Mask> facets, Mask vertices)
{
  FacetList out;
  out.reserve(facets.size());
  for (Mask f : facets)
    out.push_back(f & ~vertices);
  normalize(out);
  return out;
}

std::vector<FacetList> components(std::span<const Mask> facets)
{
  std::vector<FacetList> out;
  if (facets.empty())
    return out;

  // Merge facet masks into connected vertex groups.
  std::vector<Mask> groups;
  for (Mask f : facets) {
    Mask merged = f;
    std::vector<Mask> rest;
    for (Mask g : groups) {
      if (g & merged)
        merged |= g;
      else
        rest.push_back(g);
    }
    rest.push_back(merged);
    groups = std::move(rest);
  }
  std::sort(groups.begin(), groups.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });

  out.resize(groups.size());
  for (Mask f : facets) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (f & groups[i]) {
        out[i].push_back(f);
        break;
      }
    }
  }
  return out;
}

FacetList compact(std::span<const Mask> facets, Mask support)
{
  int remap[kCapacity];
  int next = 0;
  for (int i = 0; i < kCapacity; ++i)
    remap[i] = (support >> i) & 1u ? next++ : -1;

  FacetList out;
  out.reserve(facets.size());
  for (Mask f : facets) {
    Mask g = 0;
    for (Mask rest = f; rest != 0; rest &= rest - 1)
      g |= Mask{1} << remap[std::countr_zero(rest)];
    out.push_back(g);
  }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

FacetList permute(std::span<const Mask> facets, std::span<const int> perm)
{
  FacetList out;
  out.reserve(facets.size());
  for (Mask f : facets) {
    Mask g = 0;
    for (Mask rest = f; rest != 0; rest &= rest - 1)
      g |= Mask{1} << perm[std::countr_zero(rest)];
    out.push_back(g);
  }
  normalize(out);
  return out;
}

FacetList link(std::span<const Mask> facets, int v)
{
  const Mask bit = Mask{1} << v;
  FacetList out;
  for (Mask f : facets)
    if (f & bit)
      out.push_back(f & ~bit);
  normalize(out);
  return out;
}

}  // namespace gale::bits
