#pragma once

// Binary-star reduction.
//
// Two vertices x, y with no edge between them form a binary star when
// swapping x and y maps the faces through x exactly onto the faces
// through y. Deleting both vertices (with everything on them) leaves a
// position with the same Grundy value: the player who wins the smaller
// game answers any move touching x or y with its swapped twin.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gale/complex.hpp"

namespace gale {

struct BinaryStar
{
  int x = 0;
  int y = 0;

  Mask pair_mask() const { return (Mask{1} << x) | (Mask{1} << y); }

  friend bool operator==(const BinaryStar&, const BinaryStar&) = default;
};

struct ReductionStep
{
  std::string x_name;
  std::string y_name;
  std::size_t facets_before = 0;
  std::size_t facets_after = 0;
};

struct ReductionTrace
{
  std::vector<ReductionStep> steps;
};

namespace bits {

bool is_binary_star(std::span<const Mask> facets, int x, int y);

/// Pairs (x < y) in lexicographic index order.
std::vector<BinaryStar> binary_stars(std::span<const Mask> facets);

std::optional<BinaryStar> first_binary_star(std::span<const Mask> facets);

/// Reduces until no binary star is left. Vertex bits are not renumbered.
FacetList reduce_fully(std::span<const Mask> facets);

}  // namespace bits

std::vector<BinaryStar> find_binary_stars(const Complex& x);

/// Throws std::invalid_argument if `star` is not a binary star of `x`.
Complex reduce_binary_star(const Complex& x, BinaryStar star);

std::pair<Complex, ReductionTrace> reduce_fully(const Complex& x);

/// The swapped twin of a move touching the star, or nullopt for moves
/// elsewhere. Throws std::logic_error if the move contains both vertices.
std::optional<Face> mirror_response(BinaryStar star, Face move);

}  // namespace gale
