#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uqfi {

struct VerifyOptions {
  int trials = 1000;
  std::uint64_t seed = 42;
  // Test hook: build every channel with the as-printed B7. Used to show the
  // checks catch the non-Hermitian coefficient.
  bool inject_printed_b7 = false;
};

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  bool informational = false;  // reported, never fails the run
  std::size_t samples = 0;
};

struct VerifySection {
  char tag;  // 'a'..'f'
  std::string title;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifySection> sections;

  bool passed() const;
  const VerifySection& section(char tag) const;
  /// Fixed-format text; identical for identical options on any thread count.
  std::string text() const;
};

/// Runs every oracle cross-check on seeded random draws:
///   (a) closed-form channel vs Bogoliubov isometry
///   (b) analytic teleportation vs three-qubit circuit
///   (c) coefficient form vs explicit angle form of Bob's state
///   (d) analytic vs finite-difference Bloch partials
///   (e) module invariants
///   (f) as-printed B7 Hermiticity violation (documentation only)
/// Throws DomainError for trials < 1.
VerifyReport verify(const VerifyOptions& options);

}  // namespace uqfi
