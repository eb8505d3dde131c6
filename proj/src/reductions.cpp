#include "gale/reductions.hpp"

#include <cstdint>
#include <stdexcept>

namespace gale {

namespace bits {

bool is_binary_star(std::span<const Mask> facets, int x, int y)
{
  if (x == y)
    return false;
  const Mask bx = Mask{1} << x, by = Mask{1} << y;
  const Mask used = support(facets);
  if (!(used & bx) || !(used & by))
    return false;
  if (is_face(facets, bx | by))
    return false;
  // Faces through x minus x, compared with faces through y minus y. Both
  // are downward closed and contain the empty set, so their maximal
  // elements decide equality.
  return link(facets, x) == link(facets, y);
}

std::vector<BinaryStar> binary_stars(std::span<const Mask> facets)
{
  std::vector<BinaryStar> out;
  const Mask used = support(facets);
  std::vector<int> vertices;
  for (Mask r = used; r != 0; r &= r - 1)
    vertices.push_back(std::countr_zero(r));
  std::vector<FacetList> links;
  for (int v : vertices)
    links.push_back(link(facets, v));

  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (links[i] == links[j] &&
          !is_face(facets, (Mask{1} << vertices[i]) | (Mask{1} << vertices[j])))
        out.push_back({vertices[i], vertices[j]});
  return out;
}

std::optional<BinaryStar> first_binary_star(std::span<const Mask> facets)
{
  const Mask used = support(facets);
  // Twins must agree on how many facets they lie in, and on the sizes of
  // those facets; this rejects most pairs before any link is built.
  std::uint64_t degree[kCapacity] = {};
  for (Mask f : facets) {
    const std::uint64_t w = (std::uint64_t{1} << 32) | static_cast<std::uint64_t>(1u << (size(f) - 1));
    for (Mask r = f; r != 0; r &= r - 1)
      degree[std::countr_zero(r)] += w;
  }
  for (Mask ri = used; ri != 0; ri &= ri - 1) {
    const int x = std::countr_zero(ri);
    FacetList lx;
    bool have_lx = false;
    for (Mask rj = ri & (ri - 1); rj != 0; rj &= rj - 1) {
      const int y = std::countr_zero(rj);
      if (degree[x] != degree[y])
        continue;
      if (is_face(facets, (Mask{1} << x) | (Mask{1} << y)))
        continue;
      if (!have_lx) {
        lx = link(facets, x);
        have_lx = true;
      }
      if (lx == link(facets, y))
        return BinaryStar{x, y};
    }
  }
  return std::nullopt;
}

FacetList reduce_fully(std::span<const Mask> facets)
{
  FacetList cur(facets.begin(), facets.end());
  while (auto star = first_binary_star(cur))
    cur = delete_vertices(cur, star->pair_mask());
  return cur;
}

}  // namespace bits

std::vector<BinaryStar> find_binary_stars(const Complex& x)
{
  return bits::binary_stars(x.facets());
}

Complex reduce_binary_star(const Complex& x, BinaryStar star)
{
  if (!bits::is_binary_star(x.facets(), star.x, star.y))
    throw std::invalid_argument("vertex pair is not a binary star of the position");
  return delete_vertices(x, star.pair_mask());
}

std::pair<Complex, ReductionTrace> reduce_fully(const Complex& x)
{
  ReductionTrace trace;
  Complex cur = x;
  while (auto star = bits::first_binary_star(cur.facets())) {
    ReductionStep step;
    step.x_name = cur.name(star->x);
    step.y_name = cur.name(star->y);
    step.facets_before = cur.facets().size();
    cur = delete_vertices(cur, star->pair_mask());
    step.facets_after = cur.facets().size();
    trace.steps.push_back(std::move(step));
  }
  return {std::move(cur), std::move(trace)};
}

std::optional<Face> mirror_response(BinaryStar star, Face move)
{
  const Mask bx = Mask{1} << star.x, by = Mask{1} << star.y;
  const Mask m = move.members();
  if ((m & bx) && (m & by))
    throw std::logic_error("move contains both vertices of a binary star");
  if (m & bx)
    return Face{(m & ~bx) | by};
  if (m & by)
    return Face{(m & ~by) | bx};
  return std::nullopt;
}

}  // namespace gale
