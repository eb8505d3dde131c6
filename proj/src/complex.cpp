#include "gale/complex.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "gale/error.hpp"

namespace gale {

namespace {

std::vector<std::string> numbered_names(int count)
{
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i)
    names.push_back(std::to_string(i));
  return names;
}

// Face family as sorted sets of names; used for index-independent equality.
std::set<std::vector<std::string>> named_facets(const Complex& x)
{
  std::set<std::vector<std::string>> out;
  for (Mask f : x.facets()) {
    auto names = x.names_of(Face{f});
    std::sort(names.begin(), names.end());
    out.insert(std::move(names));
  }
  return out;
}

}  // namespace

Complex Complex::from_masks(std::vector<std::string> names, FacetList facets)
{
  if (names.size() > static_cast<std::size_t>(kCapacity))
    throw CapacityError("complex has " + std::to_string(names.size()) + " vertices; capacity is " +
                        std::to_string(kCapacity));
  bits::normalize(facets);
  const Mask used = bits::support(facets);

  Complex x;
  for (std::size_t i = 0; i < names.size(); ++i)
    if ((used >> i) & 1u)
      x.names_.push_back(std::move(names[i]));
  if (std::popcount(used) != static_cast<int>(x.names_.size()))
    throw Error("facet references a vertex without a name");
  x.facets_ = bits::compact(facets, used);
  return x;
}

std::optional<int> Complex::index_of(std::string_view name) const
{
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return static_cast<int>(i);
  return std::nullopt;
}

std::vector<Face> Complex::facet_faces() const
{
  std::vector<Face> out;
  for (Mask f : facets_)
    out.emplace_back(f);
  return out;
}

Face Complex::face(std::span<const std::string> names) const
{
  Mask m = 0;
  for (const auto& n : names) {
    auto i = index_of(n);
    if (!i)
      throw IllegalMove("unknown vertex '" + n + "'");
    m |= Mask{1} << *i;
  }
  return Face{m};
}

Face Complex::face(std::initializer_list<std::string_view> names) const
{
  std::vector<std::string> v(names.begin(), names.end());
  return face(v);
}

std::vector<std::string> Complex::names_of(Face f) const
{
  std::vector<std::string> out;
  for (Mask rest = f.members(); rest != 0; rest &= rest - 1)
    out.push_back(names_.at(std::countr_zero(rest)));
  return out;
}

std::string Complex::describe(Face f) const
{
  std::string s = "{";
  bool first = true;
  for (const auto& n : names_of(f)) {
    if (!first)
      s += ',';
    s += n;
    first = false;
  }
  return s + "}";
}

bool operator==(const Complex& a, const Complex& b)
{
  if (a.identical(b))
    return true;
  if (a.vertex_count() != b.vertex_count() || a.facets().size() != b.facets().size())
    return false;
  return named_facets(a) == named_facets(b);
}

bool valid_vertex_name(std::string_view name)
{
  if (name.empty() || name.size() > 16)
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) { return c > 0x20 && c < 0x7f; });
}

Complex make_complex(const std::vector<std::vector<std::string>>& facet_list)
{
  std::vector<std::string> names;
  FacetList masks;
  for (const auto& set : facet_list) {
    if (set.empty())
      throw InputError("empty facet");
    Mask m = 0;
    for (const auto& n : set) {
      if (!valid_vertex_name(n))
        throw InputError("malformed vertex name '" + n + "'");
      auto it = std::find(names.begin(), names.end(), n);
      std::size_t index = static_cast<std::size_t>(it - names.begin());
      if (it == names.end()) {
        if (names.size() == static_cast<std::size_t>(kCapacity))
          throw CapacityError("more than " + std::to_string(kCapacity) + " vertices");
        names.push_back(n);
      }
      m |= Mask{1} << index;
    }
    masks.push_back(m);
  }
  return Complex::from_masks(std::move(names), std::move(masks));
}

std::vector<Face> faces(const Complex& x)
{
  std::vector<Face> out;
  for (Mask m : bits::all_faces(x.facets()))
    out.emplace_back(m);
  return out;
}

Complex delete_cofaces(const Complex& x, Face sigma)
{
  if (!x.contains(sigma))
    throw IllegalMove(x.describe(sigma) + " is not a face of the position");
  return Complex::from_masks(x.vertex_names(), bits::delete_cofaces(x.facets(), sigma.members()));
}

Complex boundary_simplex(int n)
{
  if (n < 1 || n > kCapacity)
    throw CapacityError("boundary_simplex: n must be in 1.." + std::to_string(kCapacity));
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  FacetList facets;
  if (n > 1)
    for (int i = 0; i < n; ++i)
      facets.push_back(all & ~(Mask{1} << i));
  return Complex::from_masks(numbered_names(n), std::move(facets));
}

Complex full_simplex(int k)
{
  if (k < 0 || k + 1 > kCapacity)
    throw CapacityError("full_simplex: k must be in 0.." + std::to_string(kCapacity - 1));
  const int n = k + 1;
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  return Complex::from_masks(numbered_names(n), {all});
}

Complex suspension(const Complex& x)
{
  const int n = x.vertex_count();
  if (n + 2 > kCapacity)
    throw CapacityError("suspension exceeds vertex capacity");

  std::string xs = "x", ys = "y";
  for (int i = 1; x.index_of(xs) || x.index_of(ys); ++i) {
    xs = "x" + std::to_string(i);
    ys = "y" + std::to_string(i);
  }
  auto names = x.vertex_names();
  names.push_back(xs);
  names.push_back(ys);
  const Mask bx = Mask{1} << n, by = Mask{1} << (n + 1);

  FacetList facets;
  if (x.empty()) {
    facets = {bx, by};
  } else {
    for (Mask f : x.facets()) {
      facets.push_back(f | bx);
      facets.push_back(f | by);
    }
  }
  return Complex::from_masks(std::move(names), std::move(facets));
}

Complex disjoint_union(const Complex& x, const Complex& y)
{
  const int nx = x.vertex_count();
  if (nx + y.vertex_count() > kCapacity)
    throw CapacityError("disjoint union exceeds vertex capacity");

  auto names = x.vertex_names();
  std::unordered_set<std::string> taken(names.begin(), names.end());
  taken.insert(y.vertex_names().begin(), y.vertex_names().end());
  for (const auto& n : y.vertex_names()) {
    std::string candidate = n;
    if (x.index_of(n)) {
      do
        candidate += '\'';
      while (taken.count(candidate));
      if (!valid_vertex_name(candidate))
        throw InputError("cannot disambiguate vertex name '" + n + "'");
      taken.insert(candidate);
    }
    names.push_back(candidate);
  }

  FacetList facets(x.facets().begin(), x.facets().end());
  for (Mask f : y.facets())
    facets.push_back(f << nx);
  return Complex::from_masks(std::move(names), std::move(facets));
}

std::vector<Complex> connected_components(const Complex& x)
{
  std::vector<Complex> out;
  for (auto& part : bits::components(x.facets()))
    out.push_back(Complex::from_masks(x.vertex_names(), std::move(part)));
  return out;
}

Complex permuted(const Complex& x, std::span<const int> perm)
{
  if (static_cast<int>(perm.size()) != x.vertex_count())
    throw Error("permutation size does not match vertex count");
  return Complex::from_masks(x.vertex_names(), bits::permute(x.facets(), perm));
}

Complex renamed(const Complex& x, std::vector<std::string> names)
{
  if (static_cast<int>(names.size()) != x.vertex_count())
    throw Error("rename: wrong number of names");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_vertex_name(n))
      throw InputError("malformed vertex name '" + n + "'");
    if (!seen.insert(n).second)
      throw InputError("duplicate vertex name '" + n + "'");
  }
  return Complex::from_masks(std::move(names), FacetList(x.facets().begin(), x.facets().end()));
}

Complex delete_vertices(const Complex& x, Mask vertices)
{
  return Complex::from_masks(x.vertex_names(), bits::delete_vertices(x.facets(), vertices));
}

}  // namespace gale
