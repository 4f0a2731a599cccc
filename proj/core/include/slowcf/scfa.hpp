#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slowcf/exact.hpp"

namespace slowcf {

/// Closed subinterval [lo, hi] of [0,1] with reduced rational endpoints
/// p/q, p'/q' satisfying p q' - p' q = -1.
class UnimodularInterval {
public:
  UnimodularInterval(Rational lo, Rational hi); // throws DomainError(NotUnimodular)

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }

  bool contains(const QuadraticSurd& x) const; // closed on both sides
  Rational width() const { return hi_ - lo_; }

  bool operator==(const UnimodularInterval& o) const noexcept = default;

private:
  Rational lo_, hi_;
};

/// Ordered unimodular partition of [0,1]: first lo = 0, last hi = 1,
/// consecutive cells share exactly their common endpoint.
class UnimodularPartition {
public:
  /// Validates reducedness, unimodularity, chaining and coverage.
  /// Errors: NotUnimodular(i), GapOrOverlap(i), BadEndpoints (indices 1-based).
  static UnimodularPartition validate(const std::vector<std::pair<Rational, Rational>>& raw);

  int size() const noexcept { return static_cast<int>(cells_.size()); }
  const UnimodularInterval& cell(int i) const { return cells_.at(static_cast<size_t>(i - 1)); }
  const std::vector<UnimodularInterval>& cells() const noexcept { return cells_; }

  /// The N-1 interior endpoints, in increasing order.
  std::vector<Rational> interior_points() const;

  bool operator==(const UnimodularPartition& o) const noexcept = default;

private:
  explicit UnimodularPartition(std::vector<UnimodularInterval> cells) : cells_(std::move(cells)) {}
  std::vector<UnimodularInterval> cells_;
};

/// The branch h_i as a matrix: [[p'-p, p],[q'-q, q]] * [[-1,1],[0,1]]^((1-sign)/2).
/// Maps [0,1] bijectively onto the cell, with det = sign.
Mobius branch_matrix(const UnimodularInterval& cell, int sign);

/// Slow continued fraction algorithm: a unimodular partition plus a sign per
/// cell. Branch matrices are derived at construction and immutable afterwards.
class Scfa {
public:
  Scfa(UnimodularPartition partition, std::vector<int> signs, std::string name = "custom");

  int branch_count() const noexcept { return partition_.size(); }
  const UnimodularPartition& partition() const noexcept { return partition_; }
  const UnimodularInterval& cell(int i) const { return partition_.cell(i); }
  int sign(int i) const { return signs_.at(static_cast<size_t>(i - 1)); }
  /// h_i, 1-based.
  const Mobius& branch(int i) const { return branches_.at(static_cast<size_t>(i - 1)); }
  /// h_i^{-1}, precomputed.
  const Mobius& branch_inverse(int i) const { return inverses_.at(static_cast<size_t>(i - 1)); }

  /// {i : x in closed cell i}; singleton for interior points, two digits at
  /// the N-1 interior partition points. Throws OutOfRange outside [0,1].
  std::vector<int> locate(const QuadraticSurd& x) const;

  /// Digit of a point that is not an interior partition endpoint (the unique
  /// element of locate(x) for irrational x); binary search, no allocation.
  /// Precondition: x in [0,1].
  int locate_interior(const QuadraticSurd& x) const;

  /// h_i^{-1}(x); requires i in locate(x), else WrongBranch.
  QuadraticSurd forward_step(const QuadraticSurd& x, int digit) const;

  /// True when this is F_N for N = branch_count(): partition
  /// [0,1/N],[1/N,1/(N-1)],...,[1/2,1] with signs +1,-1,...,-1.
  bool is_fn_family() const;

  const std::string& name() const noexcept { return name_; }

  bool operator==(const Scfa& o) const {
    return partition_ == o.partition_ && signs_ == o.signs_;
  }

private:
  UnimodularPartition partition_;
  std::vector<int> signs_;
  std::vector<Mobius> branches_;
  std::vector<Mobius> inverses_;
  std::vector<QuadraticSurd> endpoints_; // partition endpoints, cached for locate
  std::string name_;
};

/// Builtin registry: farey | backwards | even | odd | fN:<k> (k >= 2).
/// Throws DomainError(UnknownName).
Scfa builtin(std::string_view name);

/// SCFA spec file support (JSON):
///   {"partition": [["0/1","1/2"],["1/2","1/1"]], "signs": [1,-1]}
Scfa scfa_from_json(std::string_view json_text);
std::string scfa_to_json(const Scfa& s);

} // namespace slowcf
