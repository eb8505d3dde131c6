#include "gale/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "gale/complex.hpp"

namespace gale {

namespace {

std::uint64_t mix(std::uint64_t z)
{
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

using Perm = std::array<std::uint8_t, kCapacity>;

// Ordered partition of the vertices. lab lists vertices cell by cell;
// start[v] is the position in lab where v's cell begins, so start doubles
// as the cell's color and its rank.
struct Partition
{
  Perm lab{};
  Perm start{};
  int cells = 0;
};

class Canonizer
{
public:
  Canonizer(int n, FacetList facets) : n_(n), facets_(std::move(facets)) {}

  CanonicalForm run()
  {
    Partition root;
    for (int v = 0; v < n_; ++v) {
      root.lab[v] = static_cast<std::uint8_t>(v);
      root.start[v] = 0;
    }
    root.cells = n_ > 0 ? 1 : 0;
    std::vector<int> prefix;
    search(root, prefix);

    CanonicalForm form;
    form.vertex_count = n_;
    form.facets = best_;
    form.labeling.assign(best_label_.begin(), best_label_.begin() + n_);
    return form;
  }

private:
  void refine(Partition& p) const
  {
    std::array<std::uint64_t, kCapacity> sig{};
    for (;;) {
      sig.fill(0);
      for (Mask f : facets_) {
        std::uint64_t h = mix(static_cast<std::uint64_t>(bits::size(f)) << 40);
        for (Mask r = f; r != 0; r &= r - 1)
          h += mix(p.start[std::countr_zero(r)] + 1);
        h = mix(h);
        for (Mask r = f; r != 0; r &= r - 1)
          sig[std::countr_zero(r)] += h;
      }

      int cells = 0;
      for (int s = 0; s < n_;) {
        int e = s + 1;
        while (e < n_ && p.start[p.lab[e]] == s)
          ++e;
        std::sort(p.lab.begin() + s, p.lab.begin() + e,
                  [&](std::uint8_t a, std::uint8_t b) { return sig[a] < sig[b]; });
        int cell_start = s;
        for (int i = s; i < e; ++i) {
          if (i > s && sig[p.lab[i]] != sig[p.lab[i - 1]]) {
            cell_start = i;
            ++cells;
          }
          p.start[p.lab[i]] = static_cast<std::uint8_t>(cell_start);
        }
        ++cells;
        s = e;
      }
      const bool stable = cells == p.cells;
      p.cells = cells;
      if (stable)
        return;
    }
  }

  static void individualize(Partition& p, int v, int s, int e)
  {
    auto it = std::find(p.lab.begin() + s, p.lab.begin() + e, v);
    std::rotate(p.lab.begin() + s, it, it + 1);
    p.start[v] = static_cast<std::uint8_t>(s);
    for (int i = s + 1; i < e; ++i)
      p.start[p.lab[i]] = static_cast<std::uint8_t>(s + 1);
    ++p.cells;
  }

  FacetList encode_leaf(const Partition& p) const
  {
    FacetList out;
    out.reserve(facets_.size());
    for (Mask f : facets_) {
      Mask g = 0;
      for (Mask r = f; r != 0; r &= r - 1)
        g |= Mask{1} << p.start[std::countr_zero(r)];
      out.push_back(g);
    }
    std::sort(out.begin(), out.end(), bits::face_less);
    return out;
  }

  // Records an automorphism if `enc` matches the leaf labeled `label`.
  bool match(const FacetList& enc, const Partition& p, const FacetList& other, const Perm& label)
  {
    if (enc != other)
      return false;
    Perm inverse{};
    for (int v = 0; v < n_; ++v)
      inverse[label[v]] = static_cast<std::uint8_t>(v);
    Perm gamma{};
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inverse[p.start[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity)
      automorphisms_.push_back(gamma);
    return true;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b)
  {
    return static_cast<int>(std::mismatch(a.begin(), a.end(), b.begin(), b.end()).first - a.begin());
  }

  // Returns the depth to backtrack to, or -1 to carry on.
  int leaf(const Partition& p, const std::vector<int>& prefix)
  {
    FacetList enc = encode_leaf(p);
    if (!have_best_) {
      first_ = best_ = enc;
      for (int v = 0; v < n_; ++v)
        first_label_[v] = best_label_[v] = p.start[v];
      first_path_ = best_path_ = prefix;
      have_best_ = true;
      return -1;
    }
    // A leaf equivalent to an earlier one means the subtree below the
    // common ancestor is an image of one already searched.
    if (match(enc, p, first_, first_label_))
      return common_prefix(prefix, first_path_);
    if (match(enc, p, best_, best_label_))
      return common_prefix(prefix, best_path_);
    if (std::lexicographical_compare(enc.begin(), enc.end(), best_.begin(), best_.end(), bits::face_less)) {
      best_ = std::move(enc);
      for (int v = 0; v < n_; ++v)
        best_label_[v] = p.start[v];
      best_path_ = prefix;
    }
    return -1;
  }

  int find(std::array<int, kCapacity>& parent, int v) const
  {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  }

  bool same_orbit_as_tried(int v, const std::vector<int>& tried, const std::vector<int>& prefix) const
  {
    if (tried.empty() || automorphisms_.empty())
      return false;
    std::array<int, kCapacity> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    bool any = false;
    for (const Perm& g : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int u) { return g[u] == u; });
      if (!fixes)
        continue;
      any = true;
      for (int u = 0; u < n_; ++u) {
        int a = find(parent, u), b = find(parent, g[u]);
        if (a != b)
          parent[a] = b;
      }
    }
    if (!any)
      return false;
    const int root = find(parent, v);
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(parent, t) == root; });
  }

  int search(Partition p, std::vector<int>& prefix)
  {
    refine(p);
    if (p.cells == n_)
      return leaf(p, prefix);
    int s = 0, e = 0;
    for (s = 0; s < n_; s = e) {
      e = s + 1;
      while (e < n_ && p.start[p.lab[e]] == s)
        ++e;
      if (e - s > 1)
        break;
    }
    const int depth = static_cast<int>(prefix.size());
    std::vector<int> members(p.lab.begin() + s, p.lab.begin() + e);
    std::vector<int> tried;
    for (int v : members) {
      if (same_orbit_as_tried(v, tried, prefix))
        continue;
      tried.push_back(v);
      Partition child = p;
      individualize(child, v, s, e);
      prefix.push_back(v);
      const int jump = search(child, prefix);
      prefix.pop_back();
      if (jump >= 0 && jump < depth)
        return jump;
    }
    return -1;
  }

  int n_;
  FacetList facets_;
  bool have_best_ = false;
  FacetList first_, best_;
  Perm first_label_{}, best_label_{};
  std::vector<int> first_path_, best_path_;
  std::vector<Perm> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(std::span<const Mask> facets)
{
  const Mask used = bits::support(facets);
  FacetList compacted = bits::compact(facets, used);
  return Canonizer(std::popcount(used), std::move(compacted)).run();
}

CanonicalKey encode(const CanonicalForm& form)
{
  const int width = form.vertex_count <= 8 ? 1 : form.vertex_count <= 16 ? 2 : 4;
  std::string bytes;
  bytes.reserve(1 + form.facets.size() * width);
  bytes.push_back(static_cast<char>(form.vertex_count));
  for (Mask f : form.facets)
    for (int b = 0; b < width; ++b)
      bytes.push_back(static_cast<char>((f >> (8 * b)) & 0xffu));
  return CanonicalKey{std::move(bytes)};
}

CanonicalKey canonical_key(std::span<const Mask> facets)
{
  return encode(canonical_form(facets));
}

CanonicalKey canonical_key(const Complex& x)
{
  return canonical_key(x.facets());
}

bool is_isomorphic(const Complex& x, const Complex& y)
{
  if (x.vertex_count() != y.vertex_count() || x.facets().size() != y.facets().size())
    return false;
  return canonical_key(x) == canonical_key(y);
}

}  // namespace gale
