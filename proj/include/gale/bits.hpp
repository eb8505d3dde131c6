#pragma once

// Bit-mask algorithms over facet lists. A facet list is an antichain of
// vertex masks kept sorted by (popcount, mask). Everything here is
// name-free; Complex wraps these with vertex names.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace gale {

using Mask = std::uint32_t;

inline constexpr int kCapacity = 32;

using FacetList = std::vector<Mask>;

namespace bits {

inline int size(Mask m) { return std::popcount(m); }

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Ordering used for faces everywhere: by size, then by mask value.
inline bool face_less(Mask a, Mask b)
{
  const int sa = size(a), sb = size(b);
  return sa != sb ? sa < sb : a < b;
}

/// Drops empty and non-maximal sets, deduplicates, sorts by face order.
void normalize(FacetList& facets);

/// Union of all facets.
Mask support(std::span<const Mask> facets);

bool is_face(std::span<const Mask> facets, Mask sigma);

/// Every non-empty subset of every facet, deduplicated, in face order.
std::vector<Mask> all_faces(std::span<const Mask> facets);

std::size_t face_count(std::span<const Mask> facets);

/// The game move: removes sigma and every face containing it.
FacetList delete_cofaces(std::span<const Mask> facets, Mask sigma);

/// Removes every face meeting `vertices`.
FacetList delete_vertices(std::span<const Mask> facets, Mask vertices);

/// Connected components of the 1-skeleton, ordered by lowest vertex bit.
std::vector<FacetList> components(std::span<const Mask> facets);

/// Renumbers the vertices in `support` to 0..k-1 preserving order.
FacetList compact(std::span<const Mask> facets, Mask support);

/// Maps bit i to bit perm[i]; result is normalized.
FacetList permute(std::span<const Mask> facets, std::span<const int> perm);

/// Generators of the link of vertex v (facets F containing v, as F\{v}),
/// normalized. An isolated vertex has an empty generator list.
FacetList link(std::span<const Mask> facets, int v);

}  // namespace bits
}  // namespace gale
