#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slowcf/scfa.hpp"
#include "slowcf/symbolic.hpp"

namespace slowcf {

/// The two backwards-map branches and the reflection, as matrices:
/// b1 = [[1,0],[1,1]], b2 = [[0,1],[-1,2]], T = [[-1,1],[0,1]] (x -> 1-x).
const Mobius& b1_matrix();
const Mobius& b2_matrix();
const Mobius& flip_matrix();

/// A branch factored over the Stern-Brocot alphabet: letters in {L, R}
/// (L = b1, R = b2) followed by an optional reflection, representing
/// b_letters * T^flip.
struct BWord {
  std::string letters; // over {'L','R'}
  int flip = 0;        // 0 or 1

  bool operator==(const BWord&) const noexcept = default;
  std::string str() const; // "LLR^T" style: letters plus ".T" when flipped
};

/// Matrix value of a BWord.
Mobius bword_matrix(const BWord& w);

/// Stern-Brocot factorization of branch i: walks the mediant splitting from
/// [0,1] down to cell i, emitting L for the left child and R for the right;
/// flip = (1 - sign_i)/2. Postcondition: bword_matrix(result) == branch(i).
BWord factor_branch(const Scfa& s, int i);

/// factor_branch for every branch; the letter words always form a complete
/// prefix code (the leaves of a finite binary tree).
std::vector<BWord> psi_embedding(const Scfa& s);

enum class PrefixCodeStatus { Complete, PrefixViolation, Incomplete };

struct PrefixCodeResult {
  PrefixCodeStatus status;
  int i = -1, j = -1; // offending pair for PrefixViolation (0-based)
  Rational kraft;     // sum of 2^-len over the words

  bool complete() const { return status == PrefixCodeStatus::Complete; }
};

/// Binary prefix-code check over {L,R}: Complete iff pairwise prefix-free and
/// the Kraft sum equals 1 (the binary-tree-leaves condition).
PrefixCodeResult prefix_code_check(const std::vector<std::string>& words);

/// Normalizes a word over {L, R, T}: pushes reflections rightward with
/// T b1 T = b2 and T b2 T = b1, returning a single trailing flip exponent.
/// The matrix value is preserved.
BWord flip_normalize(std::string_view word);

// ---------------------------------------------------------------------------
// The F_N Serret transducer
// ---------------------------------------------------------------------------

struct TransducerEdge {
  int from;    // state index
  int input;   // digit 1..N
  Word output; // possibly empty word over 1..N
  int to;      // state index
};

/// Deterministic, total transducer over states b1^k T^e (0 <= k <= N-2,
/// e in {0,1}) whose edges realize v h_i = h_mu w. Running it rewrites an
/// itinerary of x into an itinerary of v(x); outputs are always tail
/// equivalent to inputs.
class Transducer {
public:
  int n() const noexcept { return n_; }
  int state_count() const noexcept { return 2 * (n_ - 1); }
  int state_index(int k, int e) const;   // k in [0, N-2], e in {0,1}
  std::pair<int, int> state_ke(int idx) const;
  std::string state_label(int idx) const; // "1", "T", "b1^k", "b1^k T"
  /// Parses "1", "T", "b1", "b1T", "b1^2 T", ... Throws ParseError.
  int parse_state_label(std::string_view label) const;

  const TransducerEdge& edge(int state, int input) const;
  std::vector<TransducerEdge> edges() const; // all, ordered by (state, input)

  /// Feeds an eventually periodic input from the given start state until the
  /// (state, period-phase) pair repeats; returns the eventually periodic
  /// output.
  Itinerary run(const Itinerary& input, int start_state) const;

  std::string to_dot() const;

  /// Structural fact behind tail equivalence: after removing every state that
  /// carries a self loop with input == output, the edge graph is acyclic.
  bool cycles_hit_identity_selfloop() const;

private:
  friend Transducer build_transducer_fn(int n);
  Transducer(int n) : n_(n) {}
  int n_;
  std::vector<TransducerEdge> table_; // indexed state * n + (input-1)
};

/// Builds the F_N transducer by bounded search over output words mu with
/// v h_i = h_mu w (word length <= 2N, matrix entries bounded), asserting
/// determinism and totality and cross-checking every edge against the
/// independent case-list oracle. Throws SearchExhausted if the bound is hit.
Transducer build_transducer_fn(int n);

/// Independent oracle for the F_N transducer edges, by case analysis on the
/// state shape. `output` is nullopt where the case list leaves the output
/// word unspecified (a wildcard).
struct CaseEdgePrediction {
  char case_id; // 'a'..'f'
  int to_k, to_e;
  std::optional<Word> output;
};
CaseEdgePrediction transducer_case_oracle(int n, int k, int e, int input);

} // namespace slowcf
