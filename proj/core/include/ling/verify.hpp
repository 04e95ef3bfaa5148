#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ling/evaluate.hpp"
#include "ling/netlist.hpp"

namespace ling {

enum class SweepMode { exhaustive, random };

/// Exhaustive sweeps are limited to this many primary-input bits (2^20 vectors).
inline constexpr unsigned kExhaustiveInputCap = 20;

/// Stored counterexamples per report.
inline constexpr std::size_t kMaxStoredFailures = 16;

struct SweepOptions {
  SweepMode mode = SweepMode::exhaustive;
  std::uint64_t samples = 100000;  // uniform random vectors, random mode only
  std::uint64_t seed = 42;
  unsigned jobs = 1;
};

struct Failure {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool cin = false;
  SumCarry expected;
  SumCarry actual;
  std::string check;  // identity label, empty for output mismatches

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerifyReport {
  SweepMode mode = SweepMode::exhaustive;
  std::uint64_t vectors_tested = 0;
  std::uint64_t failure_count = 0;  // all violations, not just the stored ones
  std::vector<Failure> failures;    // smallest vectors first, at most kMaxStoredFailures
  std::optional<std::uint64_t> seed;  // random mode only

  bool passed() const { return failures.empty(); }

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

std::string_view to_string(SweepMode mode);

/// Vectors swept for an adder of the given shape. Exhaustive mode enumerates
/// a, b, cin with a in the low bits; random mode lists the corner vectors first
/// and then `samples` uniform draws, deduplicated.
std::vector<OperandVector> sweep_vectors(unsigned width, bool has_cin, const SweepOptions& options);

/// Operands {0, 1, 2^w-1, 2^(w-1), 0101..., 1010...} paired with each other
/// (and both carry-in values), deduplicated.
std::vector<OperandVector> corner_vectors(unsigned width, bool has_cin);

/// Compares an adder netlist with integer addition. Throws
/// std::invalid_argument if the netlist is not adder-shaped or an exhaustive
/// sweep exceeds kExhaustiveInputCap.
VerifyReport verify_against_oracle(const Netlist& netlist, const SweepOptions& options = {});

/// Checks H[i] = c[i] | c[i-1] against a CLA reference built from the same
/// inputs, plus c[i] = p[i] & H[i] and g[i] -> p[i], on every vector and bit.
VerifyReport check_ling_identities(const Netlist& ling, const SweepOptions& options = {});

/// Builds ling-flat(width, has_cin) and runs the identity suite on it.
VerifyReport check_ling_identities(unsigned width, bool has_cin, const SweepOptions& options = {});

/// Output-by-output comparison. Adder-shaped pairs of equal width and carry-in
/// are swept over operands; other netlists over raw input assignments (at most
/// 64 inputs). Throws std::invalid_argument on I/O shape mismatch.
VerifyReport equivalence_check(const Netlist& lhs, const Netlist& rhs,
                               const SweepOptions& options = {});

std::string to_json(const VerifyReport& report);

}  // namespace ling
