#pragma once

// Exact Sprague-Grundy solver.
//
// A position's Grundy value is the XOR of its connected components'
// values; a component's value is the mex over all of its faces of the
// value after deleting that face. Component values are memoized in a
// transposition table keyed by the exact canonical form, so isomorphic
// positions are solved once. Stored values are final, which makes the
// table safe to share between threads without ordering concerns.

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gale/canonical.hpp"
#include "gale/complex.hpp"
#include "gale/error.hpp"

namespace gale {

using GrundyValue = std::uint32_t;

enum class PositionValue { Win, Loss };

inline PositionValue classify(GrundyValue g) { return g != 0 ? PositionValue::Win : PositionValue::Loss; }

/// "WIN" or "LOSS".
std::string_view to_string(PositionValue v);
std::optional<PositionValue> parse_position_value(std::string_view s);

enum class MovePolicy { FirstWinning, Stall };

std::string_view to_string(MovePolicy p);
std::optional<MovePolicy> parse_move_policy(std::string_view s);

class CacheError : public Error
{
public:
  using Error::Error;
};

class TranspositionTable
{
public:
  static constexpr std::uint32_t kCacheVersion = 1;

  std::optional<GrundyValue> find(const CanonicalKey& key) const;
  /// Returns false if the key was already present; the stored value wins.
  bool insert(const CanonicalKey& key, GrundyValue value);

  std::size_t size() const;
  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }
  void clear();

  /// Binary cache file: 8-byte magic, u32 version, u64 record count, then
  /// per record a u16 key length, the key bytes and a u32 value.
  void save(const std::filesystem::path& path) const;
  /// Merges a cache file. Throws CacheError on a bad magic, version or
  /// truncated body, leaving the table unchanged.
  std::size_t load(const std::filesystem::path& path);

private:
  static constexpr std::size_t kShards = 64;

  struct Shard
  {
    mutable std::mutex mutex;
    std::unordered_map<CanonicalKey, GrundyValue, CanonicalKeyHash> map;
  };

  Shard& shard_for(const CanonicalKey& key) const;

  mutable std::array<Shard, kShards> shards_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

struct SolveOptions
{
  /// Strip binary stars before solving each component.
  bool reduce = true;
  /// Split positions into connected components and XOR their values.
  bool decompose = true;
  /// Memoize on canonical forms; when false, on the exact labeled facets.
  bool canonical = true;
  /// Abort with CapacityError once the table holds this many entries (0 = unbounded).
  std::size_t table_cap = 0;
  /// Worker threads for the root's moves.
  int threads = 1;
};

struct SolveReport
{
  PositionValue value = PositionValue::Loss;
  GrundyValue grundy = 0;
  std::vector<Face> winning_moves;
  /// Table entries added by this solve.
  std::size_t states_explored = 0;
  std::size_t table_entries = 0;
  double elapsed_ms = 0.0;
};

class Solver
{
public:
  explicit Solver(SolveOptions options = {});
  Solver(SolveOptions options, std::shared_ptr<TranspositionTable> table);

  const SolveOptions& options() const { return options_; }
  TranspositionTable& table() { return *table_; }
  std::shared_ptr<TranspositionTable> shared_table() const { return table_; }

  GrundyValue grundy(const Complex& x);
  GrundyValue grundy(std::span<const Mask> facets);
  PositionValue value(const Complex& x) { return classify(grundy(x)); }

  /// Faces whose deletion leaves a zero position, in face order.
  std::vector<Face> winning_moves(const Complex& x);

  std::optional<Face> best_move(const Complex& x, MovePolicy policy);

  SolveReport solve(const Complex& x);

private:
  GrundyValue total(std::span<const Mask> facets);
  GrundyValue component(std::span<const Mask> facets);
  CanonicalKey key_of(std::span<const Mask> facets) const;
  /// Values after each face of x (face order), computed on options_.threads workers.
  std::vector<GrundyValue> child_values(std::span<const Mask> facets, std::span<const Mask> moves);

  SolveOptions options_;
  std::shared_ptr<TranspositionTable> table_;
};

GrundyValue mex(std::span<const GrundyValue> values);

GrundyValue grundy(const Complex& x);
PositionValue value(const Complex& x);
std::vector<Face> winning_moves(const Complex& x);
std::optional<Face> best_move(const Complex& x, MovePolicy policy);
SolveReport solve_with_stats(const Complex& x, const SolveOptions& options = {});

}  // namespace gale
