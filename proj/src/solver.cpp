#include "gale/solver.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <thread>

#include "gale/reductions.hpp"

namespace gale {

std::string_view to_string(PositionValue v)
{
  return v == PositionValue::Win ? "WIN" : "LOSS";
}

std::optional<PositionValue> parse_position_value(std::string_view s)
{
  if (s == "WIN")
    return PositionValue::Win;
  if (s == "LOSS")
    return PositionValue::Loss;
  return std::nullopt;
}

std::string_view to_string(MovePolicy p)
{
  return p == MovePolicy::Stall ? "stall" : "first-winning";
}

std::optional<MovePolicy> parse_move_policy(std::string_view s)
{
  if (s == "stall")
    return MovePolicy::Stall;
  if (s == "first-winning")
    return MovePolicy::FirstWinning;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// TranspositionTable

namespace {

constexpr char kMagic[8] = {'G', 'A', 'L', 'E', 'T', 'T', 'B', 'L'};

template <typename T>
void put(std::ostream& os, T v)
{
  for (std::size_t i = 0; i < sizeof(T); ++i)
    os.put(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xffu));
}

template <typename T>
bool get(std::istream& is, T& v)
{
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    int c = is.get();
    if (c == EOF)
      return false;
    acc |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  v = static_cast<T>(acc);
  return true;
}

}  // namespace

TranspositionTable::Shard& TranspositionTable::shard_for(const CanonicalKey& key) const
{
  return shards_[CanonicalKeyHash{}(key) % kShards];
}

std::optional<GrundyValue> TranspositionTable::find(const CanonicalKey& key) const
{
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  auto it = s.map.find(key);
  if (it == s.map.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

bool TranspositionTable::insert(const CanonicalKey& key, GrundyValue value)
{
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  return s.map.emplace(key, value).second;
}

std::size_t TranspositionTable::size() const
{
  std::size_t n = 0;
  for (auto& s : shards_) {
    std::lock_guard lock(s.mutex);
    n += s.map.size();
  }
  return n;
}

void TranspositionTable::clear()
{
  for (auto& s : shards_) {
    std::lock_guard lock(s.mutex);
    s.map.clear();
  }
  hits_ = 0;
  misses_ = 0;
}

void TranspositionTable::save(const std::filesystem::path& path) const
{
  std::vector<std::pair<CanonicalKey, GrundyValue>> records;
  for (auto& s : shards_) {
    std::lock_guard lock(s.mutex);
    records.insert(records.end(), s.map.begin(), s.map.end());
  }
  std::sort(records.begin(), records.end());

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os)
    throw CacheError("cannot write cache file " + path.string());
  os.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(os, kCacheVersion);
  put<std::uint64_t>(os, records.size());
  for (const auto& [key, value] : records) {
    put<std::uint16_t>(os, static_cast<std::uint16_t>(key.bytes().size()));
    os.write(key.bytes().data(), static_cast<std::streamsize>(key.bytes().size()));
    put<std::uint32_t>(os, value);
  }
  if (!os)
    throw CacheError("error writing cache file " + path.string());
}

std::size_t TranspositionTable::load(const std::filesystem::path& path)
{
  std::ifstream is(path, std::ios::binary);
  if (!is)
    throw CacheError("cannot open cache file " + path.string());
  char magic[sizeof kMagic];
  if (!is.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, kMagic))
    throw CacheError("not a solver cache file: " + path.string());
  std::uint32_t version = 0;
  std::uint64_t count = 0;
  if (!get(is, version) || !get(is, count))
    throw CacheError("truncated cache header");
  if (version != kCacheVersion)
    throw CacheError("cache version " + std::to_string(version) + " is not supported (expected " +
                     std::to_string(kCacheVersion) + ")");

  std::vector<std::pair<CanonicalKey, GrundyValue>> records;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint16_t len = 0;
    if (!get(is, len))
      throw CacheError("truncated cache record");
    std::string bytes(len, '\0');
    if (!is.read(bytes.data(), len))
      throw CacheError("truncated cache record");
    GrundyValue value = 0;
    if (!get(is, value))
      throw CacheError("truncated cache record");
    records.emplace_back(CanonicalKey{std::move(bytes)}, value);
  }
  std::size_t added = 0;
  for (auto& [key, value] : records)
    added += insert(key, value) ? 1 : 0;
  return added;
}

// ---------------------------------------------------------------------------
// Solver

GrundyValue mex(std::span<const GrundyValue> values)
{
  std::vector<bool> seen(values.size() + 1, false);
  for (GrundyValue v : values)
    if (v < seen.size())
      seen[v] = true;
  GrundyValue m = 0;
  while (seen[m])
    ++m;
  return m;
}

Solver::Solver(SolveOptions options) : Solver(options, std::make_shared<TranspositionTable>()) {}

Solver::Solver(SolveOptions options, std::shared_ptr<TranspositionTable> table)
  : options_(options), table_(std::move(table))
{
  if (options_.threads < 1)
    options_.threads = 1;
}

CanonicalKey Solver::key_of(std::span<const Mask> facets) const
{
  if (options_.canonical)
    return canonical_key(facets);
  // Labeled keys carry a tag byte no canonical key starts with.
  std::string bytes(1, static_cast<char>(0xff));
  for (Mask f : facets)
    for (int b = 0; b < 4; ++b)
      bytes.push_back(static_cast<char>((f >> (8 * b)) & 0xffu));
  return CanonicalKey{std::move(bytes)};
}

GrundyValue Solver::total(std::span<const Mask> facets)
{
  if (facets.empty())
    return 0;
  if (!options_.decompose)
    return component(facets);
  auto parts = bits::components(facets);
  if (parts.size() == 1)
    return component(facets);
  GrundyValue g = 0;
  for (const auto& part : parts)
    g ^= component(part);
  return g;
}

GrundyValue Solver::component(std::span<const Mask> facets)
{
  if (options_.reduce) {
    FacetList reduced = bits::reduce_fully(facets);
    if (reduced.size() != facets.size() || !std::equal(reduced.begin(), reduced.end(), facets.begin()))
      return total(reduced);
  }

  const CanonicalKey key = key_of(facets);
  if (auto hit = table_->find(key))
    return *hit;

  const auto moves = bits::all_faces(facets);
  std::vector<GrundyValue> values;
  values.reserve(moves.size());
  // Largest faces first.
  for (auto it = moves.rbegin(); it != moves.rend(); ++it)
    values.push_back(total(bits::delete_cofaces(facets, *it)));
  const GrundyValue g = mex(values);

  if (options_.table_cap != 0 && table_->size() >= options_.table_cap)
    throw CapacityError("transposition table cap of " + std::to_string(options_.table_cap) +
                        " entries reached (hits " + std::to_string(table_->hits()) + ", misses " +
                        std::to_string(table_->misses()) + ")");
  table_->insert(key, g);
  return g;
}

std::vector<GrundyValue> Solver::child_values(std::span<const Mask> facets, std::span<const Mask> moves)
{
  std::vector<GrundyValue> values(moves.size(), 0);
  const int workers = std::min<int>(options_.threads, static_cast<int>(moves.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < moves.size(); ++i)
      values[i] = total(bits::delete_cofaces(facets, moves[i]));
    return values;
  }

  // Hand out moves largest-first; each worker recurses sequentially.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= moves.size())
        return;
      const std::size_t i = moves.size() - 1 - k;
      try {
        values[i] = total(bits::delete_cofaces(facets, moves[i]));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next = moves.size();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back(work);
  for (auto& t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
  return values;
}

GrundyValue Solver::grundy(std::span<const Mask> facets)
{
  return total(facets);
}

GrundyValue Solver::grundy(const Complex& x)
{
  if (x.vertex_count() > kCapacity)
    throw CapacityError("position exceeds vertex capacity");
  return total(x.facets());
}

std::vector<Face> Solver::winning_moves(const Complex& x)
{
  const auto moves = bits::all_faces(x.facets());
  const auto values = child_values(x.facets(), moves);
  std::vector<Face> out;
  for (std::size_t i = 0; i < moves.size(); ++i)
    if (values[i] == 0)
      out.emplace_back(moves[i]);
  return out;
}

std::optional<Face> Solver::best_move(const Complex& x, MovePolicy policy)
{
  const auto moves = bits::all_faces(x.facets());
  if (moves.empty())
    return std::nullopt;
  const auto values = child_values(x.facets(), moves);
  for (std::size_t i = 0; i < moves.size(); ++i)
    if (values[i] == 0)
      return Face{moves[i]};

  if (policy == MovePolicy::FirstWinning)
    return Face{moves.front()};

  // Losing position: leave the opponent as few winning replies as possible.
  std::size_t best = 0, best_count = SIZE_MAX;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const FacetList after = bits::delete_cofaces(x.facets(), moves[i]);
    std::size_t count = 0;
    for (Mask reply : bits::all_faces(after))
      count += total(bits::delete_cofaces(after, reply)) == 0 ? 1 : 0;
    if (count < best_count) {
      best = i;
      best_count = count;
    }
  }
  return Face{moves[best]};
}

SolveReport Solver::solve(const Complex& x)
{
  const auto start = std::chrono::steady_clock::now();
  const std::size_t before = table_->size();

  const auto moves = bits::all_faces(x.facets());
  const auto values = child_values(x.facets(), moves);

  SolveReport report;
  report.grundy = mex(values);
  for (std::size_t i = 0; i < moves.size(); ++i)
    if (values[i] == 0)
      report.winning_moves.emplace_back(moves[i]);

  // Record the root itself; this also re-derives its value through the
  // component/reduction path.
  if (total(x.facets()) != report.grundy)
    throw std::logic_error("solver inconsistency: root value differs between derivations");

  report.value = classify(report.grundy);
  report.table_entries = table_->size();
  report.states_explored = report.table_entries - before;
  report.elapsed_ms =
    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

GrundyValue grundy(const Complex& x)
{
  return Solver{}.grundy(x);
}

PositionValue value(const Complex& x)
{
  return Solver{}.value(x);
}

std::vector<Face> winning_moves(const Complex& x)
{
  return Solver{}.winning_moves(x);
}

std::optional<Face> best_move(const Complex& x, MovePolicy policy)
{
  return Solver{}.best_move(x, policy);
}

SolveReport solve_with_stats(const Complex& x, const SolveOptions& options)
{
  return Solver{options}.solve(x);
}

}  // namespace gale
