#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slowcf/scfa.hpp"
#include "slowcf/symbolic.hpp"

namespace slowcf {

/// Normal form S_left S_right^* U^flip over the alphabet {1..N}, plus the
/// zero element. The flip symbol U (the order-two automorphism swapping the
/// two generators) only exists over alphabet size 2. Multiplication reduces
/// S_r^* S_l by prefix cancellation and annihilates on mismatch.
class CuntzMonomial {
public:
  static CuntzMonomial zero(int alphabet);
  static CuntzMonomial one(int alphabet);
  static CuntzMonomial isometry(int alphabet, Word w);          // S_w
  static CuntzMonomial co_isometry(int alphabet, Word w);       // S_w^*
  static CuntzMonomial flip_unitary();                          // U over alphabet 2
  static CuntzMonomial make(int alphabet, Word left, Word right, int flip);

  int alphabet() const noexcept { return alphabet_; }
  bool is_zero() const noexcept { return zero_; }
  bool is_one() const noexcept { return !zero_ && left_.empty() && right_.empty() && flip_ == 0; }
  const Word& left() const noexcept { return left_; }
  const Word& right() const noexcept { return right_; }
  int flip() const noexcept { return flip_; }

  CuntzMonomial adjoint() const;
  CuntzMonomial operator*(const CuntzMonomial& o) const; // AlphabetMismatch

  bool operator==(const CuntzMonomial& o) const noexcept = default;

  std::string str() const; // "S_12 S_2* U", "1", "0"

private:
  CuntzMonomial(int alphabet, Word left, Word right, int flip, bool zero);
  int alphabet_;
  Word left_, right_;
  int flip_;
  bool zero_;
};

/// Letter swap 1 <-> 2 applied to both words (the flip-flop automorphism on
/// monomials); requires alphabet 2.
CuntzMonomial theta(const CuntzMonomial& m);

// ---------------------------------------------------------------------------
// Isometry families
// ---------------------------------------------------------------------------

struct IsometryFamilyReport {
  bool prefix_free = true;
  int violation_i = -1, violation_j = -1; // 0-based offending pair
  Rational kraft;                         // sum alphabet^-len
  enum class Completeness { Complete, Asymptotic, Incomplete } completeness;
  std::optional<std::size_t> truncated_at; // echo of the truncation bound

  bool complete() const { return completeness == Completeness::Complete; }
};

/// Verifies the Cuntz relations for a family of composite isometries
/// {S_w : w in words}: pairwise prefix-freeness gives S_w^* S_w' = delta, and
/// Kraft sum 1 gives sum S_w S_w^* = 1. Pass `truncated_at` for an infinite
/// family cut at a length bound; completeness is then reported Asymptotic
/// when the Kraft remainder is within one alphabet power of the bound
/// (a truncation certificate), Incomplete otherwise.
IsometryFamilyReport verify_isometry_family(const std::vector<Word>& words, int alphabet,
                                            std::optional<std::size_t> truncated_at = {});

// ---------------------------------------------------------------------------
// Representation labels
// ---------------------------------------------------------------------------

/// Classification data of the permutative representation labeled by a number:
/// its itinerary, the atom count, and the eigenword S_v fixing the basis
/// vector of the periodic tail (absent for stream labels). The eigenword is
/// reported in least-rotation form; every rotation labels the same class.
struct RepresentationLabel {
  std::string scfa_name;
  std::string number;
  std::variant<StreamPrefix, Itinerary> itinerary;
  Atoms atoms;
  std::optional<Word> eigenword;
};

/// Stable-keyed JSON, e.g.
/// {"scfa":"fN:2","number":"(-1+1*sqrt(2))/1","itinerary":{"pre":[],"per":[1,2]},
///  "atoms":2,"eigenword":[1,2]}
std::string label_to_json(const RepresentationLabel& label);

/// Labels the representation attached to a number source under the given
/// SCFA. Streams are encoded to `stream_digits` digits and report countably
/// many atoms.
RepresentationLabel classify(const Scfa& s, const NumberSource& x, std::size_t stream_digits = 32);

/// Three-valued equivalence answer; stream-backed inputs are only decidable
/// up to the digit horizon.
enum class Ternary { False, True, Unknown };

struct EquivResult {
  Ternary value;
  bool exact;           // true iff decided from eventually periodic data
  std::size_t horizon;  // digit window used for stream inputs

  bool is_true() const { return value == Ternary::True; }
  std::string str() const;
};

/// Plain itinerary tail equivalence (~_F) of two number sources under any
/// SCFA: true iff some itinerary of x is tail equivalent to some itinerary
/// of y (rationals contribute their one or two itineraries). This decides
/// PGL2(Z)-equivalence only for the F_N family; elsewhere it is just the
/// symbolic relation.
EquivResult tail_equivalence(const Scfa& s, const NumberSource& x, const NumberSource& y,
                             std::size_t horizon = 64);

/// Whether x and y label unitarily equivalent representations, i.e. whether
/// their itineraries are tail equivalent. Only valid over the F_N family
/// (throws NotFNFamily otherwise). Rationals all share the tail 1,1,1,...
EquivResult equivalent_reps(const Scfa& s, const NumberSource& x, const NumberSource& y,
                            std::size_t horizon = 64);

} // namespace slowcf
