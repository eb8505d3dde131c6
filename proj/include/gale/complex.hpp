#pragma once

// Simplicial complexes as game positions.
//
// A Complex is a value: an ordered list of vertex names plus the antichain
// of its maximal faces. Every vertex of the complex lies in some facet;
// operations that remove the last face on a vertex also drop the vertex
// and renumber the survivors in their original order.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gale/bits.hpp"

namespace gale {

/// A non-empty set of vertex indices within one complex. Doubles as a move.
class Face
{
public:
  constexpr Face() = default;
  constexpr explicit Face(Mask members) : members_(members) {}

  constexpr Mask members() const { return members_; }
  int size() const { return bits::size(members_); }
  int dimension() const { return size() - 1; }
  bool contains(int vertex) const { return (members_ >> vertex) & 1u; }

  friend constexpr bool operator==(Face, Face) = default;
  friend std::strong_ordering operator<=>(Face a, Face b)
  {
    if (a.members_ == b.members_)
      return std::strong_ordering::equal;
    return bits::face_less(a.members_, b.members_) ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
  }

private:
  Mask members_ = 0;
};

class Complex
{
public:
  Complex() = default;

  /// Builds from raw masks over `names`; normalizes facets and drops
  /// vertices that lie in no facet.
  static Complex from_masks(std::vector<std::string> names, FacetList facets);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  bool empty() const { return facets_.empty(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int index) const { return names_.at(index); }
  std::optional<int> index_of(std::string_view name) const;

  std::span<const Mask> facets() const { return facets_; }
  std::vector<Face> facet_faces() const;

  /// Looks up a face by vertex names; throws IllegalMove for unknown names.
  Face face(std::span<const std::string> names) const;
  Face face(std::initializer_list<std::string_view> names) const;

  bool contains(Face f) const { return bits::is_face(facets_, f.members()); }

  std::vector<std::string> names_of(Face f) const;
  /// "{1,2,4}" style rendering.
  std::string describe(Face f) const;

  /// Exact representation equality: same names in the same order, same masks.
  bool identical(const Complex& other) const
  {
    return names_ == other.names_ && facets_ == other.facets_;
  }

  /// Same vertex names and the same face family, regardless of indexing.
  friend bool operator==(const Complex& a, const Complex& b);

private:
  std::vector<std::string> names_;
  FacetList facets_;
};

/// True for 1-16 printable, non-whitespace ASCII characters.
bool valid_vertex_name(std::string_view name);

/// Downward closure of the given sets; vertices indexed by first appearance.
Complex make_complex(const std::vector<std::vector<std::string>>& facet_list);

/// Every legal move, in (size, mask) order.
std::vector<Face> faces(const Complex& x);

Complex delete_cofaces(const Complex& x, Face sigma);

/// All proper non-empty subsets of {1..n}.
Complex boundary_simplex(int n);

/// All non-empty subsets of {1..k+1}.
Complex full_simplex(int k);

Complex suspension(const Complex& x);

Complex disjoint_union(const Complex& x, const Complex& y);

std::vector<Complex> connected_components(const Complex& x);

/// Vertex i's membership moves to index perm[i]; names stay by index, so the
/// result is an isomorphic copy with different labels.
Complex permuted(const Complex& x, std::span<const int> perm);

/// Renames vertices; names must be valid and distinct.
Complex renamed(const Complex& x, std::vector<std::string> names);

/// The complex induced on the complement of a set of vertices.
Complex delete_vertices(const Complex& x, Mask vertices);

}  // namespace gale
