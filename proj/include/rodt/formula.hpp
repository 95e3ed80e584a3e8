#pragma once

#include "rodt/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rodt {

enum class GateKind { AND, OR };

// Threshold gate: outputs 1 iff at least k of its n inputs are 1.
struct GateSpec {
  int k;
  int n;
};

// Uniform read-once threshold formula: a full n-ary tree of the given depth
// whose gates are either one fixed threshold at every level or alternate
// between AND (k=n) and OR (k=1) starting from the root. Depth 0 is a single
// variable.
struct FormulaSpec {
  enum class Schedule { Constant, Alternating };

  Schedule schedule;
  int depth;
  GateSpec gate;       // Constant schedule
  int fanout;          // Alternating schedule
  GateKind root_kind;  // Alternating schedule

  static FormulaSpec constant(int k, int n, int depth);
  static FormulaSpec alternating(int n, GateKind root_kind, int depth);

  // Gate at a level of internal nodes; level 0 is the root, valid levels are
  // 0..depth-1.
  GateSpec gate_at_level(int level) const;
  int gate_fanout() const;
  BigInt leaf_count() const;
  // leaf_count as size_t; throws std::length_error past the cap.
  std::size_t leaf_count_checked(std::size_t cap) const;
};

struct Assignment {
  std::vector<std::uint8_t> bits;  // leaf values in left-to-right order

  bool operator==(const Assignment&) const = default;
};

std::string assignment_str(const Assignment& a);
Assignment parse_assignment(const std::string& s);

struct ReluctantCounts {
  BigInt n0;  // reluctant inputs with root value 0
  BigInt n1;  // root value 1
};

int evaluate(const FormulaSpec& f, const Assignment& a);
bool is_reluctant(const FormulaSpec& f, const Assignment& a);
ReluctantCounts reluctant_counts(const FormulaSpec& f);

// Uniform over reluctant inputs (root bias n1/(n0+n1) taken exactly), or
// uniform over those with the conditioned root value. Deterministic per seed.
Assignment sample_reluctant(const FormulaSpec& f, std::uint64_t seed,
                            std::optional<int> condition = std::nullopt);

// Every reluctant assignment exactly once (root value 0 block first). Throws
// std::length_error with the exact count when it exceeds cap.
std::vector<Assignment> enumerate_reluctant(const FormulaSpec& f,
                                            std::uint64_t cap = 1000000);

}  // namespace rodt
