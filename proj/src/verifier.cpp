#include "gale/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gale/canonical.hpp"
#include "gale/error.hpp"
#include "gale/reductions.hpp"

namespace gale {

namespace {

using Names = std::vector<std::vector<std::string>>;

Complex path_complex(int edges)
{
  Names facets;
  for (int i = 1; i <= edges; ++i)
    facets.push_back({std::to_string(i), std::to_string(i + 1)});
  return make_complex(facets);
}

Names disk_facets()
{
  return {{"1", "2", "6"}, {"1", "3", "7"}, {"1", "2", "8"}, {"1", "3", "8"},
          {"2", "4", "6"}, {"2", "4", "8"}, {"4", "6", "8"}, {"3", "5", "7"},
          {"3", "5", "8"}, {"5", "7", "8"}, {"6", "7", "8"}};
}

Names sphere_facets()
{
  Names f = disk_facets();
  f.push_back({"1", "6", "7"});
  return f;
}

int parse_param(std::string_view token, std::string_view prefix)
{
  const std::string_view digits = token.substr(prefix.size());
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError("bad preset parameter in '" + std::string(token) + "'");
  return std::stoi(std::string(digits));
}

class Stopwatch
{
public:
  double millis() const
  {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckResult make_check(std::string check, std::string cite, std::string expected, std::string observed,
                       const Stopwatch& clock)
{
  CheckResult r;
  r.check = std::move(check);
  r.cite = std::move(cite);
  r.pass = expected == observed;
  r.expected = std::move(expected);
  r.observed = std::move(observed);
  r.millis = clock.millis();
  return r;
}

std::string yes_no(bool b)
{
  return b ? "yes" : "no";
}

std::size_t count_faces_of_size(const Complex& x, int size)
{
  auto all = faces(x);
  return static_cast<std::size_t>(
    std::count_if(all.begin(), all.end(), [size](Face f) { return f.size() == size; }));
}

// Edges (by sorted name pair) lying in exactly `k` triangles.
std::set<std::string> edges_in_triangles(const Complex& x, int k)
{
  std::set<std::string> out;
  for (Face e : faces(x)) {
    if (e.size() != 2)
      continue;
    int n = 0;
    for (Mask f : x.facets())
      n += bits::size(f) == 3 && bits::subset(e.members(), f) ? 1 : 0;
    if (n == k) {
      auto names = x.names_of(e);
      std::sort(names.begin(), names.end());
      out.insert(names[0] + names[1]);
    }
  }
  return out;
}

std::string join(const std::set<std::string>& items)
{
  std::string s = "{";
  bool first = true;
  for (const auto& i : items) {
    s += (first ? "" : ",") + i;
    first = false;
  }
  return s + "}";
}

}  // namespace

Preset preset(std::string_view token)
{
  Preset p;
  p.name = std::string(token);
  if (token.starts_with("boundary:")) {
    const int n = parse_param(token, "boundary:");
    if (n < 1 || n > 6)
      throw InputError("boundary preset supports n = 1..6");
    p.complex = boundary_simplex(n);
    p.expected = PositionValue::Loss;
    p.citation = "start position of the n = " + std::to_string(n) + " game: second player wins";
  } else if (token == "sec1-first") {
    p.complex = make_complex({{"1", "2", "3"}, {"3", "4"}, {"4", "5"}});
    p.expected = PositionValue::Win;
    p.citation = "filled triangle 123 with tail 3-4-5: first player wins by erasing vertex 3";
  } else if (token == "sec1-second") {
    p.complex = make_complex({{"1", "2", "3"}, {"3", "5"}});
    p.expected = PositionValue::Loss;
    p.citation = "filled triangle 123 with edge 35: second player wins by the pairing strategy";
  } else if (token.starts_with("path:")) {
    const int k = parse_param(token, "path:");
    if (k < 1 || k > 3)
      throw InputError("path preset supports k = 1..3 edges");
    p.complex = path_complex(k);
    p.expected = PositionValue::Win;
    p.citation = "subdivided interval: first player takes the central simplex and mirrors";
  } else if (token == "counterexample-disk") {
    p.complex = make_complex(disk_facets());
    p.expected = PositionValue::Loss;
    p.citation = "8-vertex triangulated disk: second player wins";
  } else if (token == "counterexample-sphere") {
    p.complex = make_complex(sphere_facets());
    p.expected = PositionValue::Win;
    p.citation = "the disk closed up by triangle 167: first player wins";
  } else {
    throw InputError("unknown preset '" + std::string(token) + "'");
  }
  return p;
}

std::vector<std::string> preset_catalog()
{
  std::vector<std::string> out;
  for (int n = 1; n <= 6; ++n)
    out.push_back("boundary:" + std::to_string(n));
  out.push_back("sec1-first");
  out.push_back("sec1-second");
  for (int k = 1; k <= 3; ++k)
    out.push_back("path:" + std::to_string(k));
  out.push_back("counterexample-disk");
  out.push_back("counterexample-sphere");
  return out;
}

// ---------------------------------------------------------------------------
// VerificationReport

bool VerificationReport::passed() const
{
  return failures() == 0;
}

std::size_t VerificationReport::failures() const
{
  return static_cast<std::size_t>(
    std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

void VerificationReport::append(const VerificationReport& other)
{
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json VerificationReport::to_json(bool with_timing) const
{
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"check", c.check},       {"cite", c.cite}, {"expected", c.expected},
                        {"observed", c.observed}, {"pass", c.pass}};
    if (with_timing)
      j["millis"] = c.millis;
    checks_json.push_back(std::move(j));
  }
  return {{"title", title}, {"pass", passed()}, {"checks", std::move(checks_json)}};
}

std::string VerificationReport::to_text(bool with_timing) const
{
  std::ostringstream os;
  os << "== " << title << " ==\n";
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.check << "  expected=" << c.expected
       << " observed=" << c.observed << '\n';
    if (with_timing)
      os << "     time: " << c.millis << " ms\n";
  }
  os << (passed() ? "PASSED " : "FAILED ") << (checks.size() - failures()) << "/" << checks.size()
     << " checks\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Verifier

Verifier::Verifier(VerifyOptions options) : options_(std::move(options)), solver_(options_.solver) {}

CheckResult Verifier::value_check(std::string check, std::string cite, const Complex& x,
                                  PositionValue expected)
{
  Stopwatch clock;
  const PositionValue observed = solver_.value(x);
  return make_check(std::move(check), std::move(cite), std::string(to_string(expected)),
                    std::string(to_string(observed)), clock);
}

VerificationReport Verifier::gale(int max_n)
{
  if (max_n < 1 || max_n > 6)
    throw std::out_of_range("gale check supports max n = 1..6");
  VerificationReport r{"every start position is a second-player win, n <= " + std::to_string(max_n), {}};
  for (int n = 1; n <= max_n; ++n)
    r.checks.push_back(value_check("start n=" + std::to_string(n),
                                   "start position of the n = " + std::to_string(n) +
                                     " game: second player wins",
                                   boundary_simplex(n), PositionValue::Loss));
  return r;
}

VerificationReport Verifier::complement(int n)
{
  if (n < 2 || n > 6)
    throw std::out_of_range("complement check supports n = 2..6");
  VerificationReport r{"complementary reply wins, n = " + std::to_string(n), {}};
  const Complex start = boundary_simplex(n);
  const Mask all = (Mask{1} << n) - 1;
  const std::string cite = "complementary reply to any opening leaves a second-player win";

  for (Face opening : faces(start)) {
    Stopwatch clock;
    const Complex after = delete_cofaces(start, opening);
    const Face complement_face{all & ~opening.members()};
    std::string name = "n=" + std::to_string(n) + " open " + start.describe(opening);

    if (complement_face.members() == 0) {
      r.checks.push_back(make_check(name + " has no complement; opening loses", cite, "WIN",
                                    std::string(to_string(solver_.value(after))), clock));
      continue;
    }
    name += " reply " + start.describe(complement_face);
    const auto reply_names = start.names_of(complement_face);
    bool legal = std::all_of(reply_names.begin(), reply_names.end(),
                             [&](const std::string& v) { return after.index_of(v).has_value(); });
    Face reply;
    if (legal) {
      reply = after.face(reply_names);
      legal = after.contains(reply);
    }
    if (!legal) {
      r.checks.push_back(make_check(name, cite, "LOSS", "illegal reply", clock));
      continue;
    }
    const Complex final_position = delete_cofaces(after, reply);
    r.checks.push_back(
      make_check(name, cite, "LOSS", std::string(to_string(solver_.value(final_position))), clock));
  }
  return r;
}

VerificationReport Verifier::complement_up_to(int max_n)
{
  VerificationReport r{"complementary reply wins, n <= " + std::to_string(max_n), {}};
  for (int n = 2; n <= max_n; ++n)
    r.append(complement(n));
  return r;
}

VerificationReport Verifier::opening_sizes(int n)
{
  if (n < 3 || n > 6)
    throw std::out_of_range("opening-size check supports n = 3..6");
  VerificationReport r{"openings of size 1, n-2, n-1 lose, n = " + std::to_string(n), {}};
  const Complex start = boundary_simplex(n);
  const std::set<int> bad_sizes = {1, n - 2, n - 1};
  const std::string tag = "n=" + std::to_string(n) + " ";

  for (Face opening : faces(start)) {
    if (!bad_sizes.count(opening.size()))
      continue;
    r.checks.push_back(value_check(tag + "open " + start.describe(opening) + " size " +
                                     std::to_string(opening.size()) + " leaves a first-player win",
                                   "openings of size 1, n-2 and n-1 are losing",
                                   delete_cofaces(start, opening), PositionValue::Win));
  }

  // An edge opening makes its endpoints a binary star; removing them leaves
  // the filled simplex on the other n-2 vertices.
  const Complex filled = full_simplex(n - 3);
  for (Face edge : faces(start)) {
    if (edge.size() != 2)
      continue;
    Stopwatch clock;
    const Complex after = delete_cofaces(start, edge);
    auto [reduced, trace] = reduce_fully(after);
    const bool shape = trace.steps.size() == 1 && is_isomorphic(reduced, filled);
    r.checks.push_back(make_check(tag + "edge opening " + start.describe(edge) +
                                    " reduces to the filled simplex on n-2 vertices",
                                  "endpoints of a removed edge form a binary star", "yes",
                                  yes_no(shape), clock));
    r.checks.push_back(value_check(tag + "reduced edge opening " + start.describe(edge) +
                                     " is a first-player win",
                                   "a filled simplex is won by passing through its interior", reduced,
                                   PositionValue::Win));
  }

  // Edge openings are settled by the reduction above.
  Stopwatch clock;
  std::set<std::string> uncovered;
  for (int s = 1; s <= n - 1; ++s)
    if (!bad_sizes.count(s) && s != 2)
      uncovered.insert(std::to_string(s));
  const std::string expected = n == 6 ? "{3}" : "{}";
  r.checks.push_back(make_check(tag + "opening sizes not settled by size or edge reduction",
                                "for n = 6 only size-3 openings need a search; for n <= 5 none do",
                                expected, join(uncovered), clock));
  return r;
}

VerificationReport Verifier::strategy_table()
{
  VerificationReport r{"pairing strategy on triangle 123 with edge 35", {}};
  const Preset p = preset("sec1-second");
  const std::vector<std::pair<Names::value_type, Names::value_type>> pairs = {
    {{"5"}, {"1", "2", "3"}}, {{"1", "2", "3"}, {"5"}}, {{"3"}, {"1"}},
    {{"3"}, {"2"}},           {{"1"}, {"3"}},           {{"2"}, {"3"}},
    {{"1", "2"}, {"3", "5"}}, {{"3", "5"}, {"1", "2"}}, {{"1", "3"}, {"2", "3"}},
    {{"2", "3"}, {"1", "3"}},
  };
  const std::string cite = "second player answers 5/123, 3/(1 or 2), 12/35, 13/23";

  for (const auto& [open_names, reply_names] : pairs) {
    Stopwatch clock;
    const Face opening = p.complex.face(open_names);
    const Complex after = delete_cofaces(p.complex, opening);
    std::string name = "open " + p.complex.describe(opening) + " reply " + p.complex.describe(p.complex.face(reply_names));
    bool legal = std::all_of(reply_names.begin(), reply_names.end(),
                             [&](const std::string& v) { return after.index_of(v).has_value(); }) &&
                 after.contains(after.face(reply_names));
    if (!legal) {
      r.checks.push_back(make_check(name, cite, "LOSS", "illegal reply", clock));
      continue;
    }
    const Complex final_position = delete_cofaces(after, after.face(reply_names));
    r.checks.push_back(
      make_check(name, cite, "LOSS", std::string(to_string(solver_.value(final_position))), clock));
  }
  return r;
}

VerificationReport Verifier::presets()
{
  VerificationReport r{"preset outcomes", {}};
  for (const auto& token : preset_catalog()) {
    Preset p = preset(token);
    if (auto it = options_.expected_overrides.find(token); it != options_.expected_overrides.end())
      p.expected = it->second;
    r.checks.push_back(value_check("preset " + token, p.citation, p.complex, p.expected));
  }
  return r;
}

VerificationReport Verifier::counterexample_structure()
{
  VerificationReport r{"counterexample triangulation structure", {}};
  const Complex disk = preset("counterexample-disk").complex;
  const Complex sphere = preset("counterexample-sphere").complex;
  const std::string cite = "8-vertex disk drawn with outer triangle 1-6-7";

  auto euler = [](const Complex& x) {
    return static_cast<long>(count_faces_of_size(x, 1)) - static_cast<long>(count_faces_of_size(x, 2)) +
           static_cast<long>(count_faces_of_size(x, 3));
  };

  auto add = [&](std::string check, std::string expected, auto&& observe) {
    Stopwatch clock;
    std::string observed = observe();
    r.checks.push_back(make_check(std::move(check), cite, std::move(expected), std::move(observed), clock));
  };

  add("disk vertices", "8", [&] { return std::to_string(disk.vertex_count()); });
  add("disk edges", "18", [&] { return std::to_string(count_faces_of_size(disk, 2)); });
  add("disk triangles", "11", [&] { return std::to_string(count_faces_of_size(disk, 3)); });
  add("disk Euler characteristic", "1", [&] { return std::to_string(euler(disk)); });
  add("disk boundary cycle", "{16,17,67}", [&] { return join(edges_in_triangles(disk, 1)); });
  add("disk interior vertices", "{2,3,4,5,8}", [&] {
    std::set<std::string> interior(disk.vertex_names().begin(), disk.vertex_names().end());
    for (const auto& e : edges_in_triangles(disk, 1)) {
      interior.erase(e.substr(0, 1));
      interior.erase(e.substr(1, 1));
    }
    return join(interior);
  });
  add("disk automorphism (2 3)(4 5)(6 7)", "yes", [&] {
    std::vector<std::string> names;
    const std::map<std::string, std::string> swap = {{"2", "3"}, {"3", "2"}, {"4", "5"},
                                                     {"5", "4"}, {"6", "7"}, {"7", "6"}};
    for (const auto& n : disk.vertex_names())
      names.push_back(swap.count(n) ? swap.at(n) : n);
    return yes_no(renamed(disk, names) == disk);
  });
  add("sphere vertices", "8", [&] { return std::to_string(sphere.vertex_count()); });
  add("sphere edges", "18", [&] { return std::to_string(count_faces_of_size(sphere, 2)); });
  add("sphere triangles", "12", [&] { return std::to_string(count_faces_of_size(sphere, 3)); });
  add("sphere Euler characteristic", "2", [&] { return std::to_string(euler(sphere)); });
  add("sphere edges each in two triangles", "yes",
      [&] { return yes_no(edges_in_triangles(sphere, 2).size() == count_faces_of_size(sphere, 2)); });
  return r;
}

VerificationReport Verifier::worked_examples()
{
  VerificationReport r{"worked examples", {}};
  auto add = [&](std::string check, std::string cite, std::string expected, auto&& observe) {
    Stopwatch clock;
    std::string observed = observe();
    r.checks.push_back(make_check(std::move(check), std::move(cite), std::move(expected), std::move(observed), clock));
  };

  add("n=1 start has no legal moves", "one-element set: nothing to name", "0",
      [] { return std::to_string(faces(boundary_simplex(1)).size()); });
  add("n=2 start moves", "two-element set: only the singletons", "{1} {2}", [] {
    const Complex x = boundary_simplex(2);
    std::string s;
    for (Face f : faces(x))
      s += (s.empty() ? "" : " ") + x.describe(f);
    return s;
  });

  const Complex tetra = boundary_simplex(4);
  const Complex after14 = delete_cofaces(tetra, tetra.face({"1", "4"}));
  const Complex after234 = delete_cofaces(after14, after14.face({"2", "3", "4"}));
  const Complex after3 = delete_cofaces(after234, after234.face({"3"}));
  const std::string seq = "hollow tetrahedron, moves 14, 234, 3";
  add("hollow tetrahedron moves", seq, "14", [&] { return std::to_string(faces(tetra).size()); });
  add("after 14: triangles 123 and 234", seq, "yes",
      [&] { return yes_no(after14 == make_complex({{"1", "2", "3"}, {"2", "3", "4"}})); });
  add("after 234: triangle 123 with edges 24, 34", seq, "yes",
      [&] { return yes_no(after234 == make_complex({{"1", "2", "3"}, {"2", "4"}, {"3", "4"}})); });
  add("after 3: path 1-2-4", seq, "yes", [&] { return yes_no(after3 == make_complex({{"1", "2"}, {"2", "4"}})); });
  add("path 1-2-4 legal moves", seq, "5", [&] { return std::to_string(faces(after3).size()); });
  add("path 1-2-4: {2} wins", seq, "yes", [&] {
    auto wins = solver_.winning_moves(after3);
    return yes_no(std::find(wins.begin(), wins.end(), after3.face({"2"})) != wins.end());
  });
  add("path 1-2-4 minus {2} is the n=2 start", seq, "yes",
      [&] { return yes_no(is_isomorphic(delete_cofaces(after3, after3.face({"2"})), boundary_simplex(2))); });

  const Complex first = preset("sec1-first").complex;
  const Complex second = preset("sec1-second").complex;
  const std::string cite1 = "two triangulations of the same space with different outcomes";
  add("sec1 complexes are not isomorphic", cite1, "no", [&] { return yes_no(is_isomorphic(first, second)); });
  add("sec1-first: {3} wins", cite1, "yes", [&] {
    auto wins = solver_.winning_moves(first);
    return yes_no(std::find(wins.begin(), wins.end(), first.face({"3"})) != wins.end());
  });
  add("sec1-first minus {3} is two disjoint edges", cite1, "yes", [&] {
    const Complex edge = make_complex({{"a", "b"}});
    return yes_no(is_isomorphic(delete_cofaces(first, first.face({"3"})), disjoint_union(edge, edge)));
  });

  const std::string cite2 = "suspension of an interval is a diamond with the same outcome";
  const Complex interval = full_simplex(1);
  const Complex diamond = suspension(interval);
  add("suspended interval is the diamond 12x, 12y", cite2, "yes",
      [&] { return yes_no(diamond == make_complex({{"1", "2", "x"}, {"1", "2", "y"}})); });
  add("diamond suspension points form a binary star", cite2, "yes", [&] {
    auto stars = find_binary_stars(diamond);
    const BinaryStar xy{*diamond.index_of("x"), *diamond.index_of("y")};
    return yes_no(std::find(stars.begin(), stars.end(), xy) != stars.end());
  });
  add("diamond reduces to the interval", cite2, "yes", [&] {
    return yes_no(reduce_binary_star(diamond, {*diamond.index_of("x"), *diamond.index_of("y")}) == interval);
  });
  add("diamond and interval outcomes agree", cite2, "yes",
      [&] { return yes_no(solver_.value(diamond) == solver_.value(interval)); });

  for (int k = 0; k <= 4; ++k)
    r.checks.push_back(value_check("filled " + std::to_string(k) + "-simplex",
                                   "a filled simplex is won by passing through its interior",
                                   full_simplex(k), PositionValue::Win));
  return r;
}

VerificationReport Verifier::all()
{
  VerificationReport r{"all recorded claims", {}};
  r.append(presets());
  r.append(counterexample_structure());
  r.append(worked_examples());
  r.append(strategy_table());
  for (int n = 3; n <= 6; ++n)
    r.append(opening_sizes(n));
  const VerificationReport gale_report = gale(6);
  r.append(gale_report);

  for (int n = 2; n <= 6; ++n) {
    const VerificationReport c = complement(n);
    r.append(c);
    // Each opening having a winning reply means the start loses for the mover.
    Stopwatch clock;
    const bool start_loses = gale_report.checks[n - 1].observed == "LOSS";
    r.checks.push_back(make_check("n=" + std::to_string(n) + " complement result agrees with start outcome",
                                  "a winning reply to every opening makes the start a second-player win",
                                  "consistent", c.passed() && !start_loses ? "inconsistent" : "consistent",
                                  clock));
  }
  return r;
}

VerificationReport verify_gale(int max_n, const VerifyOptions& options)
{
  return Verifier(options).gale(max_n);
}

VerificationReport verify_complement_conjecture(int n, const VerifyOptions& options)
{
  return Verifier(options).complement(n);
}

VerificationReport verify_opening_sizes(int n, const VerifyOptions& options)
{
  return Verifier(options).opening_sizes(n);
}

VerificationReport verify_strategy_table(const VerifyOptions& options)
{
  return Verifier(options).strategy_table();
}

VerificationReport verify_all(const VerifyOptions& options)
{
  return Verifier(options).all();
}

}  // namespace gale
