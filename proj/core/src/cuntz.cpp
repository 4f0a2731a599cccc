#include "slowcf/cuntz.hpp"

#include <algorithm>
#include <stdexcept>

namespace slowcf {

CuntzMonomial::CuntzMonomial(int alphabet, Word left, Word right, int flip, bool zero)
    : alphabet_(alphabet), left_(std::move(left)), right_(std::move(right)), flip_(flip),
      zero_(zero) {
  if (alphabet_ < 2) throw std::invalid_argument("Cuntz alphabet needs N >= 2");
  if (flip_ != 0 && alphabet_ != 2) {
    throw DomainError(ErrorKind::AlphabetMismatch, "the flip symbol U only exists over O_2");
  }
  for (int d : left_) {
    if (d < 1 || d > alphabet_) throw std::invalid_argument("letter outside the alphabet");
  }
  for (int d : right_) {
    if (d < 1 || d > alphabet_) throw std::invalid_argument("letter outside the alphabet");
  }
  if (zero_) {
    left_.clear();
    right_.clear();
    flip_ = 0;
  }
}

CuntzMonomial CuntzMonomial::zero(int alphabet) { return {alphabet, {}, {}, 0, true}; }
CuntzMonomial CuntzMonomial::one(int alphabet) { return {alphabet, {}, {}, 0, false}; }
CuntzMonomial CuntzMonomial::isometry(int alphabet, Word w) {
  return {alphabet, std::move(w), {}, 0, false};
}
CuntzMonomial CuntzMonomial::co_isometry(int alphabet, Word w) {
  return {alphabet, {}, std::move(w), 0, false};
}
CuntzMonomial CuntzMonomial::flip_unitary() { return {2, {}, {}, 1, false}; }
CuntzMonomial CuntzMonomial::make(int alphabet, Word left, Word right, int flip) {
  return {alphabet, std::move(left), std::move(right), flip, false};
}

namespace {
Word swap_letters(const Word& w) {
  Word out = w;
  for (int& d : out) d = (d == 1) ? 2 : 1;
  return out;
}
} // namespace

CuntzMonomial theta(const CuntzMonomial& m) {
  if (m.alphabet() != 2) {
    throw DomainError(ErrorKind::AlphabetMismatch, "the flip-flop acts on O_2 only");
  }
  if (m.is_zero()) return m;
  return CuntzMonomial::make(2, swap_letters(m.left()), swap_letters(m.right()), m.flip());
}

CuntzMonomial CuntzMonomial::adjoint() const {
  if (zero_) return *this;
  // (S_l S_r* U^e)* = U^e S_r S_l*; push the flip to the right
  Word l = right_, r = left_;
  if (flip_ != 0) {
    l = swap_letters(l);
    r = swap_letters(r);
  }
  return {alphabet_, std::move(l), std::move(r), flip_, false};
}

CuntzMonomial CuntzMonomial::operator*(const CuntzMonomial& o) const {
  if (alphabet_ != o.alphabet_) {
    throw DomainError(ErrorKind::AlphabetMismatch,
                      "cannot multiply monomials over different alphabets");
  }
  if (zero_ || o.zero_) return zero(alphabet_);
  // push this->flip through o: U S_l S_r* = S_theta(l) S_theta(r)* U
  Word l2 = o.left_, r2 = o.right_;
  if (flip_ != 0) {
    l2 = swap_letters(l2);
    r2 = swap_letters(r2);
  }
  int flip = flip_ ^ o.flip_;
  // reduce S_{right_}^* S_{l2}
  const Word& r1 = right_;
  if (l2.size() >= r1.size()) {
    if (!std::equal(r1.begin(), r1.end(), l2.begin())) return zero(alphabet_);
    // l2 = r1 . t: S_{l1 t} S_{r2}*
    Word left = left_;
    left.insert(left.end(), l2.begin() + static_cast<long>(r1.size()), l2.end());
    return {alphabet_, std::move(left), std::move(r2), flip, false};
  }
  if (!std::equal(l2.begin(), l2.end(), r1.begin())) return zero(alphabet_);
  // r1 = l2 . t: S_{l1} S_{r2 t}*
  Word right = r2;
  right.insert(right.end(), r1.begin() + static_cast<long>(l2.size()), r1.end());
  return {alphabet_, left_, std::move(right), flip, false};
}

std::string CuntzMonomial::str() const {
  if (zero_) return "0";
  if (is_one()) return "1";
  std::string out;
  if (!left_.empty()) out += "S_" + word_str(left_);
  if (!right_.empty()) {
    if (!out.empty()) out += " ";
    out += "S_" + word_str(right_) + "*";
  }
  if (flip_ != 0) {
    if (!out.empty()) out += " ";
    out += "U";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isometry families
// ---------------------------------------------------------------------------

IsometryFamilyReport verify_isometry_family(const std::vector<Word>& words, int alphabet,
                                            std::optional<std::size_t> truncated_at) {
  if (alphabet < 2) throw std::invalid_argument("alphabet needs N >= 2");
  if (words.empty()) throw std::invalid_argument("empty isometry family");
  IsometryFamilyReport rep;
  rep.truncated_at = truncated_at;
  for (std::size_t i = 0; i < words.size() && rep.prefix_free; ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      const Word& a = words[i];
      const Word& b = words[j];
      if (b.size() >= a.size() && std::equal(a.begin(), a.end(), b.begin())) {
        rep.prefix_free = false;
        rep.violation_i = static_cast<int>(i);
        rep.violation_j = static_cast<int>(j);
        break;
      }
    }
  }
  Rational kraft(0);
  std::size_t longest = 0;
  for (const Word& w : words) {
    Int den = 1;
    for (std::size_t k = 0; k < w.size(); ++k) den *= alphabet;
    kraft = kraft + Rational(1, den);
    longest = std::max(longest, w.size());
  }
  rep.kraft = kraft;
  if (kraft == Rational(1)) {
    rep.completeness = IsometryFamilyReport::Completeness::Complete;
  } else if (truncated_at.has_value()) {
    // truncation certificate: the missing Kraft mass fits in one more level
    Int den = 1;
    for (std::size_t k = 0; k + 1 < std::max<std::size_t>(*truncated_at, 1); ++k) den *= alphabet;
    Rational slack(1, den); // alphabet^-(L-1)
    rep.completeness = (kraft < Rational(1) && Rational(1) - kraft <= slack)
                           ? IsometryFamilyReport::Completeness::Asymptotic
                           : IsometryFamilyReport::Completeness::Incomplete;
  } else {
    rep.completeness = IsometryFamilyReport::Completeness::Incomplete;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

std::string label_to_json(const RepresentationLabel& label) {
  // hand-emitted for byte stability
  std::string out = "{\"scfa\":\"" + label.scfa_name + "\",\"number\":\"" + label.number + "\",";
  out += "\"itinerary\":";
  if (std::holds_alternative<Itinerary>(label.itinerary)) {
    const Itinerary& it = std::get<Itinerary>(label.itinerary);
    out += "{\"pre\":[" + word_str(it.preperiod()) + "],\"per\":[" + word_str(it.period()) + "]}";
  } else {
    const StreamPrefix& sp = std::get<StreamPrefix>(label.itinerary);
    out += "{\"prefix\":[" + word_str(sp.digits) + "]}";
  }
  out += ",\"atoms\":";
  out += label.atoms.omega ? "\"omega\"" : std::to_string(label.atoms.count);
  if (label.eigenword.has_value()) {
    out += ",\"eigenword\":[" + word_str(*label.eigenword) + "]";
  }
  out += "}";
  return out;
}

RepresentationLabel classify(const Scfa& s, const NumberSource& x, std::size_t stream_digits) {
  RepresentationLabel label;
  label.scfa_name = s.name();
  if (std::holds_alternative<RcfStream>(x)) {
    const RcfStream& src = std::get<RcfStream>(x);
    label.number = src.name();
    StreamEncodeResult enc = encode_stream(s, src, stream_digits);
    label.atoms = atom_count(enc.prefix);
    label.itinerary = std::move(enc.prefix);
    return label;
  }
  const QuadraticSurd& v = std::get<QuadraticSurd>(x);
  label.number = v.str();
  Itinerary it = v.is_rational() ? encode_rational(s, v.to_rational()).front() : encode_surd(s, v);
  label.atoms = atom_count(it);
  label.eigenword = it.least_rotation();
  label.itinerary = std::move(it);
  return label;
}

std::string EquivResult::str() const {
  switch (value) {
    case Ternary::True: return exact ? "true" : "true (horizon " + std::to_string(horizon) + ")";
    case Ternary::False:
      return exact ? "false" : "false (horizon " + std::to_string(horizon) + ")";
    case Ternary::Unknown: return "unknown (horizon " + std::to_string(horizon) + ")";
  }
  return "unknown";
}

namespace {

// itineraries (for eventually periodic sources) or a digit window (streams)
struct DigitView {
  bool periodic;
  std::vector<Itinerary> its;   // one or two when periodic
  std::vector<Word> windows;    // horizon digits per alternative
};

DigitView view_of(const Scfa& s, const NumberSource& x, std::size_t horizon) {
  DigitView v;
  if (std::holds_alternative<RcfStream>(x)) {
    v.periodic = false;
    v.windows.push_back(encode_stream(s, std::get<RcfStream>(x), horizon).prefix.digits);
    return v;
  }
  const QuadraticSurd& q = std::get<QuadraticSurd>(x);
  v.periodic = true;
  if (q.is_rational()) {
    v.its = encode_rational(s, q.to_rational());
  } else {
    v.its.push_back(encode_surd(s, q));
  }
  for (const Itinerary& it : v.its) {
    Word w;
    w.reserve(horizon);
    for (std::size_t n = 0; n < horizon; ++n) w.push_back(it.at(n));
    v.windows.push_back(std::move(w));
  }
  return v;
}

// shifted tail match between two digit windows
bool windows_match(const Word& a, const Word& b, long h) {
  for (long shift = -h / 2; shift <= h / 2; ++shift) {
    bool match = true;
    bool any = false;
    for (long na = h / 4; na < h; ++na) {
      long nb = na - shift;
      if (nb < 0 || nb >= h) continue;
      any = true;
      if (a[static_cast<std::size_t>(na)] != b[static_cast<std::size_t>(nb)]) {
        match = false;
        break;
      }
    }
    if (any && match) return true;
  }
  return false;
}

} // namespace

EquivResult tail_equivalence(const Scfa& s, const NumberSource& x, const NumberSource& y,
                             std::size_t horizon) {
  if (horizon < 8) horizon = 8;
  DigitView vx = view_of(s, x, horizon);
  DigitView vy = view_of(s, y, horizon);
  if (vx.periodic && vy.periodic) {
    // some itinerary of x tail equivalent to some itinerary of y
    for (const Itinerary& a : vx.its) {
      for (const Itinerary& b : vy.its) {
        if (tail_equivalent(a, b)) return {Ternary::True, true, horizon};
      }
    }
    return {Ternary::False, true, horizon};
  }
  long h = static_cast<long>(horizon);
  for (const Word& a : vx.windows) {
    for (const Word& b : vy.windows) {
      if (windows_match(a, b, h)) return {Ternary::Unknown, false, horizon};
    }
  }
  return {Ternary::False, false, horizon};
}

EquivResult equivalent_reps(const Scfa& s, const NumberSource& x, const NumberSource& y,
                            std::size_t horizon) {
  if (!s.is_fn_family()) {
    throw DomainError(ErrorKind::NotFNFamily,
                      "tail equivalence decides PGL2(Z)-equivalence only for the F_N family");
  }
  return tail_equivalence(s, x, y, horizon);
}

} // namespace slowcf
