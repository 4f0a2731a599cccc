#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "slowcf/scfa.hpp"

namespace slowcf {

/// Finite word over the digit alphabet {1..N}.
using Word = std::vector<int>;

std::string word_str(const Word& w, char sep = ',');
Word parse_word(std::string_view csv); // "1,2,1" -> {1,2,1}

/// Eventually periodic digit sequence pre . per^inf, held in canonical minimal
/// form: the period is primitive (not a proper power) and the preperiod never
/// ends with a rotation-aligned copy of the period. With both conditions the
/// representation of a sequence is unique, so operator== compares sequences.
class Itinerary {
public:
  Itinerary(Word preperiod, Word period);

  const Word& preperiod() const noexcept { return pre_; }
  const Word& period() const noexcept { return per_; }

  /// n-th digit of the expansion, 0-based.
  int at(std::size_t n) const;
  /// The sequence with its first digit dropped (canonicalized).
  Itinerary shifted() const;
  /// Lexicographically least rotation of the primitive period.
  Word least_rotation() const;

  bool operator==(const Itinerary& o) const noexcept = default;

  /// "per:1,2" or "pre:1 per:2,1".
  std::string str() const;
  static Itinerary parse(std::string_view text);

private:
  Word pre_, per_;
};

bool tail_equivalent(const Itinerary& x, const Itinerary& y);
bool eventual_equivalent(const Itinerary& x, const Itinerary& y);

/// Finite prefix of a digit stream whose tail is not (known to be) periodic.
struct StreamPrefix {
  Word digits;
  std::string str() const; // "2,1,2,...[+more]"
};

/// Atom count of a representation label: the primitive period length for
/// eventually periodic itineraries, countably infinite for stream prefixes.
struct Atoms {
  bool omega = false;
  std::size_t count = 0;

  static Atoms finite(std::size_t n) { return {false, n}; }
  static Atoms infinite() { return {true, 0}; }
  bool operator==(const Atoms&) const noexcept = default;
  std::string str() const { return omega ? "omega" : std::to_string(count); }
};

Atoms atom_count(const Itinerary& it);
Atoms atom_count(const StreamPrefix& sp);

// ---------------------------------------------------------------------------
// Number sources
// ---------------------------------------------------------------------------

/// Stream of regular continued fraction partial quotients a_1, a_2, ...
/// (all >= 1). quotient(i) is 0-based; nullopt signals an exhausted (finite)
/// stream. Stateful generators make this single-owner: do not share across
/// threads.
class RcfStream {
public:
  using Generator = std::function<std::optional<Int>(std::size_t)>;

  RcfStream(std::string name, Generator gen);

  const std::string& name() const noexcept { return name_; }
  std::optional<Int> quotient(std::size_t i) const;

  /// The classic aperiodic example: e-2 = [1,2,1, 1,4,1, 1,6,1, ...].
  static RcfStream e_minus_2();
  /// Finite stream; exhausts after the given quotients (value is rational).
  static RcfStream from_quotients(std::vector<Int> quotients, std::string name = "finite");
  /// Infinite stream of the RCF of an irrational surd in (0,1), by the
  /// classical floor recursion.
  static RcfStream from_surd(const QuadraticSurd& x);

private:
  std::string name_;
  Generator gen_;
};

/// A number the library can label: an exact surd/rational, or an RCF stream.
using NumberSource = std::variant<QuadraticSurd, RcfStream>;

// ---------------------------------------------------------------------------
// Encoding / decoding
// ---------------------------------------------------------------------------

/// Itinerary of an irrational quadratic surd x in [0,1]: iterates the forward
/// map recording exact orbit points; the orbit provably repeats, splitting the
/// digits into preperiod and primitive period.
Itinerary encode_surd(const Scfa& s, const QuadraticSurd& x);

/// All itineraries of a rational x in [0,1]: one for x in {0,1}, exactly two
/// for interior rationals (a branch at the first partition-endpoint hit).
std::vector<Itinerary> encode_rational(const Scfa& s, const Rational& x);

struct StreamEncodeResult {
  StreamPrefix prefix;
  /// Exact enclosure of the stream's value implied by the consumed quotients.
  Rational value_lo, value_hi;
  std::size_t quotients_consumed = 0;
};

/// First `count` digits of the stream's itinerary. Maintains a shrinking
/// exact rational enclosure of the current orbit point; emits a digit only
/// when the whole enclosure lies in one cell and strictly avoids interior
/// partition endpoints. Throws DomainError(Stall) with the stall position if
/// the stream exhausts while the enclosure straddles a boundary.
StreamEncodeResult encode_stream(const Scfa& s, const RcfStream& src, std::size_t count);

/// The unique point with the given eventually periodic itinerary: the fixed
/// point of the period matrix selected by cylinder membership, pushed through
/// the preperiod branches. Throws NoFixedPointInCylinder on corrupt input.
QuadraticSurd decode(const Scfa& s, const Itinerary& it);

/// decode on raw words, without canonicalization (any eventually periodic
/// representation of the same sequence decodes to the same point).
QuadraticSurd decode_words(const Scfa& s, const Word& preperiod, const Word& period);

/// Endpoints of the cylinder h_{w_1} o ... o h_{w_n}([0,1]); (0,1) for the
/// empty word.
std::pair<Rational, Rational> decode_prefix(const Scfa& s, const Word& w);

} // namespace slowcf
