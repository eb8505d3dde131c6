#pragma once

// Named positions with recorded outcomes, and batch checks over them.
//
// Expected outcomes are written down here, never computed, so a solver
// regression shows up as a failed check instead of a changed baseline.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gale/complex.hpp"
#include "gale/solver.hpp"

namespace gale {

struct Preset
{
  std::string name;
  Complex complex;
  PositionValue expected = PositionValue::Loss;
  std::string citation;
};

/// Tokens: boundary:1..6, sec1-first, sec1-second, path:1..3,
/// counterexample-disk, counterexample-sphere. Unknown tokens throw InputError.
Preset preset(std::string_view token);
std::vector<std::string> preset_catalog();

struct CheckResult
{
  std::string check;
  std::string cite;
  std::string expected;
  std::string observed;
  bool pass = false;
  double millis = 0.0;
};

struct VerificationReport
{
  std::string title;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
  void append(const VerificationReport& other);

  /// One object per check: {check, cite, expected, observed, pass, millis}.
  nlohmann::json to_json(bool with_timing = true) const;
  /// Human-readable; timings sit on their own "time:" lines.
  std::string to_text(bool with_timing = true) const;
};

struct VerifyOptions
{
  SolveOptions solver;
  /// Replaces a preset's recorded outcome; used to self-test the harness.
  std::map<std::string, PositionValue> expected_overrides;
};

class Verifier
{
public:
  explicit Verifier(VerifyOptions options = {});

  Solver& solver() { return solver_; }

  /// boundary_simplex(n) is a mover loss for n = 1..max_n (max_n <= 6).
  VerificationReport gale(int max_n);
  /// Every opening of boundary_simplex(n) is answered by its complement (2 <= n <= 6).
  VerificationReport complement(int n);
  VerificationReport complement_up_to(int max_n);
  /// Openings of size 1, n-2, n-1 lose; edge openings reduce to a filled simplex (3 <= n <= 6).
  VerificationReport opening_sizes(int n);
  VerificationReport strategy_table();
  VerificationReport presets();
  VerificationReport counterexample_structure();
  VerificationReport worked_examples();
  /// Everything above at the largest feasible sizes, plus consistency checks.
  VerificationReport all();

private:
  CheckResult value_check(std::string check, std::string cite, const Complex& x, PositionValue expected);

  VerifyOptions options_;
  Solver solver_;
};

VerificationReport verify_gale(int max_n, const VerifyOptions& options = {});
VerificationReport verify_complement_conjecture(int n, const VerifyOptions& options = {});
VerificationReport verify_opening_sizes(int n, const VerifyOptions& options = {});
VerificationReport verify_strategy_table(const VerifyOptions& options = {});
VerificationReport verify_all(const VerifyOptions& options = {});

}  // namespace gale
