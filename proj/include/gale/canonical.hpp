#pragma once

// Exact canonical labeling of complexes up to vertex renaming.
//
// Vertices are partitioned by iterated incidence hashing; the partition is
// then individualized cell by cell, and every discrete leaf yields a
// relabeled facet list. The least such list is the canonical form.
// Automorphisms discovered at equal leaves prune sibling branches that lie
// in the same orbit. Hashes only steer refinement, so the form is exact.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gale/bits.hpp"

namespace gale {

class Complex;

class CanonicalKey
{
public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

private:
  std::string bytes_;
};

struct CanonicalKeyHash
{
  std::size_t operator()(const CanonicalKey& k) const noexcept
  {
    return std::hash<std::string>{}(k.bytes());
  }
};

struct CanonicalForm
{
  int vertex_count = 0;
  /// Facets over canonical indices 0..vertex_count-1, in face order.
  FacetList facets;
  /// labeling[i] is the canonical index of the i-th vertex of the input's
  /// support, counting support bits from the lowest.
  std::vector<int> labeling;
};

CanonicalForm canonical_form(std::span<const Mask> facets);

/// Serializes a canonical form: vertex count, then each facet in 1, 2 or 4
/// little-endian bytes depending on the vertex count.
CanonicalKey encode(const CanonicalForm& form);

CanonicalKey canonical_key(std::span<const Mask> facets);
CanonicalKey canonical_key(const Complex& x);

bool is_isomorphic(const Complex& x, const Complex& y);

}  // namespace gale
