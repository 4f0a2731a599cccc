#include "slowcf/scfa.hpp"

#include <charconv>
#include <stdexcept>

namespace slowcf {

UnimodularInterval::UnimodularInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) {
    throw DomainError(ErrorKind::NotUnimodular,
                      "interval endpoints out of order: [" + lo_.str() + ", " + hi_.str() + "]");
  }
  Int det = lo_.num() * hi_.den() - hi_.num() * lo_.den();
  if (det != -1) {
    throw DomainError(ErrorKind::NotUnimodular,
                      "p q' - p' q = " + det.get_str() + " for [" + lo_.str() + ", " + hi_.str() +
                          "], expected -1");
  }
}

bool UnimodularInterval::contains(const QuadraticSurd& x) const {
  return QuadraticSurd(lo_) <= x && x <= QuadraticSurd(hi_);
}

UnimodularPartition UnimodularPartition::validate(
    const std::vector<std::pair<Rational, Rational>>& raw) {
  if (raw.empty()) {
    throw DomainError(ErrorKind::BadEndpoints, "empty partition");
  }
  std::vector<UnimodularInterval> cells;
  cells.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    try {
      cells.emplace_back(raw[i].first, raw[i].second);
    } catch (const DomainError& e) {
      throw DomainError(e.kind(), e.what(), static_cast<long>(i + 1));
    }
  }
  if (!cells.front().lo().is_zero() || cells.back().hi() != Rational(1)) {
    throw DomainError(ErrorKind::BadEndpoints,
                      "partition must start at 0/1 and end at 1/1, got [" +
                          cells.front().lo().str() + ", " + cells.back().hi().str() + "]");
  }
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    if (cells[i].hi() != cells[i + 1].lo()) {
      throw DomainError(ErrorKind::GapOrOverlap,
                        "cells " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                            " do not chain: " + cells[i].hi().str() +
                            " != " + cells[i + 1].lo().str(),
                        static_cast<long>(i + 2));
    }
  }
  return UnimodularPartition(std::move(cells));
}

std::vector<Rational> UnimodularPartition::interior_points() const {
  std::vector<Rational> pts;
  pts.reserve(cells_.size() - 1);
  for (std::size_t i = 0; i + 1 < cells_.size(); ++i) pts.push_back(cells_[i].hi());
  return pts;
}

Mobius branch_matrix(const UnimodularInterval& cell, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("branch sign must be +-1");
  const Int& p = cell.lo().num();
  const Int& q = cell.lo().den();
  const Int& pp = cell.hi().num();
  const Int& qq = cell.hi().den();
  Mobius base(pp - p, p, qq - q, q);
  if (sign == 1) return base;
  static const Mobius flip(-1, 1, 0, 1); // T(x) = 1 - x
  return base * flip;
}

Scfa::Scfa(UnimodularPartition partition, std::vector<int> signs, std::string name)
    : partition_(std::move(partition)), signs_(std::move(signs)), name_(std::move(name)) {
  if (static_cast<int>(signs_.size()) != partition_.size()) {
    throw std::invalid_argument("sign count must match partition size");
  }
  if (partition_.size() < 2) {
    throw std::invalid_argument("an SCFA needs at least 2 branches");
  }
  branches_.reserve(signs_.size());
  inverses_.reserve(signs_.size());
  for (int i = 1; i <= partition_.size(); ++i) {
    branches_.push_back(branch_matrix(partition_.cell(i), sign(i)));
    inverses_.push_back(branches_.back().inverse());
  }
  endpoints_.reserve(signs_.size() + 1);
  endpoints_.emplace_back(partition_.cell(1).lo());
  for (int i = 1; i <= partition_.size(); ++i) endpoints_.emplace_back(partition_.cell(i).hi());
}

std::vector<int> Scfa::locate(const QuadraticSurd& x) const {
  // endpoints_[i] is the left end of cell i+1; compare against the cached
  // surd forms of the partition endpoints
  int n = branch_count();
  if (x < endpoints_.front() || x > endpoints_.back()) {
    throw DomainError(ErrorKind::OutOfRange, x.str() + " lies outside [0,1]");
  }
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (endpoints_[static_cast<size_t>(i - 1)] <= x && x <= endpoints_[static_cast<size_t>(i)]) {
      out.push_back(i);
    }
  }
  return out;
}

int Scfa::locate_interior(const QuadraticSurd& x) const {
  int lo = 1, hi = branch_count();
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (x <= endpoints_[static_cast<size_t>(mid)]) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

QuadraticSurd Scfa::forward_step(const QuadraticSurd& x, int digit) const {
  if (digit < 1 || digit > branch_count()) {
    throw DomainError(ErrorKind::WrongBranch, "digit " + std::to_string(digit) + " out of range",
                      digit);
  }
  if (!cell(digit).contains(x)) {
    throw DomainError(ErrorKind::WrongBranch,
                      x.str() + " is not in cell " + std::to_string(digit), digit);
  }
  return branch_inverse(digit)(x);
}

bool Scfa::is_fn_family() const {
  int n = branch_count();
  if (sign(1) != 1) return false;
  for (int i = 2; i <= n; ++i) {
    if (sign(i) != -1) return false;
  }
  if (cell(1).lo() != Rational(0) || cell(1).hi() != Rational(1, n)) return false;
  for (int i = 2; i <= n; ++i) {
    if (cell(i).lo() != Rational(1, n - i + 2) || cell(i).hi() != Rational(1, n - i + 1)) {
      return false;
    }
  }
  return true;
}

namespace {

Scfa make_fn(int n, std::string name) {
  if (n < 2) throw DomainError(ErrorKind::UnknownName, "fN requires k >= 2");
  std::vector<std::pair<Rational, Rational>> raw;
  raw.emplace_back(Rational(0), Rational(1, n));
  for (int k = n; k >= 2; --k) raw.emplace_back(Rational(1, k), Rational(1, k - 1));
  std::vector<int> signs(static_cast<size_t>(n), -1);
  signs[0] = 1;
  return Scfa(UnimodularPartition::validate(raw), std::move(signs), std::move(name));
}

} // namespace

Scfa builtin(std::string_view name) {
  auto two_cell = [](int s1, int s2, std::string nm) {
    std::vector<std::pair<Rational, Rational>> raw = {{Rational(0), Rational(1, 2)},
                                                      {Rational(1, 2), Rational(1)}};
    return Scfa(UnimodularPartition::validate(raw), {s1, s2}, std::move(nm));
  };
  auto three_cell = [](int s1, int s2, int s3, std::string nm) {
    std::vector<std::pair<Rational, Rational>> raw = {{Rational(0), Rational(1, 3)},
                                                      {Rational(1, 3), Rational(1, 2)},
                                                      {Rational(1, 2), Rational(1)}};
    return Scfa(UnimodularPartition::validate(raw), {s1, s2, s3}, std::move(nm));
  };
  if (name == "farey") return two_cell(1, -1, "farey");
  if (name == "backwards") return two_cell(1, 1, "backwards");
  if (name == "even") return three_cell(1, -1, 1, "even");
  if (name == "odd") return three_cell(1, 1, -1, "odd");
  if (name.rfind("fN:", 0) == 0) {
    std::string_view num = name.substr(3);
    int k = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec == std::errc() && ptr == num.data() + num.size() && k >= 2) {
      return make_fn(k, std::string(name));
    }
  }
  throw DomainError(ErrorKind::UnknownName, "unknown builtin SCFA \"" + std::string(name) + "\"");
}

} // namespace slowcf
