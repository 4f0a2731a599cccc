#pragma once

#include <cstddef>
#include <vector>

#include "slowcf/scfa.hpp"
#include "slowcf/symbolic.hpp"

namespace slowcf {

/// Jump transformation data: G(F, E) for E = union of cells lo..hi. Only
/// contiguous cell ranges are accepted; arbitrary unions are rejected at
/// construction.
class JumpSpec {
public:
  JumpSpec(Scfa scfa, int lo, int hi);

  const Scfa& scfa() const noexcept { return scfa_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  bool in_e(int digit) const noexcept { return digit >= lo_ && digit <= hi_; }
  /// E is a proper subset of [0,1] unless the range covers every cell.
  bool proper() const noexcept { return !(lo_ == 1 && hi_ == scfa_.branch_count()); }

private:
  Scfa scfa_;
  int lo_, hi_;
};

/// The branch words mu_j of G(F,E) up to the given length, in
/// length-lexicographic order: every word of the shape (E^c-digit)* (E-digit).
/// These index the images of the O_infinity generators under the jump
/// embedding. Requires a proper E.
std::vector<Word> jump_words(const JumpSpec& spec, std::size_t max_len);

/// Greedily cuts the itinerary into blocks, each ending at its first E-digit;
/// returns the first `count` blocks. Throws NotInDomain when the period
/// contains no E-digit (the point never returns to E).
std::vector<Word> jump_blocks(const JumpSpec& spec, const Itinerary& it, std::size_t count);

/// Same on a finite stream prefix; returns only the complete blocks it holds.
std::vector<Word> jump_blocks(const JumpSpec& spec, const Word& prefix);

/// One accelerated step: the block length r+1 plus the block's terminal
/// E-digit. For F_R induced on its last cell the length is the regular
/// continued fraction partial quotient.
struct QuotientStep {
  std::size_t length;
  int terminal;
  bool operator==(const QuotientStep&) const noexcept = default;
};

std::vector<QuotientStep> partial_quotients(const JumpSpec& spec, const Itinerary& it,
                                            std::size_t count);
std::vector<QuotientStep> partial_quotients(const JumpSpec& spec, const Word& prefix);

} // namespace slowcf
