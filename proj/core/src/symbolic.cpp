#include "slowcf/symbolic.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace slowcf {

std::string word_str(const Word& w, char sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out.push_back(sep);
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view csv) {
  Word out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (tok.empty()) {
      throw DomainError(ErrorKind::ParseError, "empty digit in word \"" + std::string(csv) + "\"");
    }
    int v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') {
        throw DomainError(ErrorKind::ParseError,
                          "bad digit \"" + std::string(tok) + "\" in word");
      }
      v = v * 10 + (ch - '0');
    }
    out.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Itinerary
// ---------------------------------------------------------------------------

namespace {

// Smallest w0 with w = w0^k.
Word primitive_root(const Word& w) {
  std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = (w[i] == w[i % p]);
    if (ok) return Word(w.begin(), w.begin() + static_cast<long>(p));
  }
  return w;
}

Word rotate_left(const Word& v, std::size_t s) {
  std::size_t n = v.size();
  Word out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = v[(j + s) % n];
  return out;
}

} // namespace

Itinerary::Itinerary(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw std::invalid_argument("itinerary period must be nonempty");
  for (int d : pre_) {
    if (d < 1) throw std::invalid_argument("itinerary digits must be >= 1");
  }
  for (int d : per_) {
    if (d < 1) throw std::invalid_argument("itinerary digits must be >= 1");
  }
  per_ = primitive_root(per_);
  // roll a trailing period copy out of the preperiod: u.a (v'.a)^inf = u (a.v')^inf
  while (!pre_.empty() && pre_.back() == per_.back()) {
    per_.insert(per_.begin(), per_.back());
    per_.pop_back();
    pre_.pop_back();
  }
}

int Itinerary::at(std::size_t n) const {
  if (n < pre_.size()) return pre_[n];
  return per_[(n - pre_.size()) % per_.size()];
}

Itinerary Itinerary::shifted() const {
  if (!pre_.empty()) return Itinerary(Word(pre_.begin() + 1, pre_.end()), per_);
  return Itinerary({}, rotate_left(per_, 1));
}

Word Itinerary::least_rotation() const {
  std::size_t n = per_.size();
  if (n <= 1) return per_;
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      int a = per_[(best + k) % n];
      int b = per_[(i + k) % n];
      if (b != a) {
        if (b < a) best = i;
        break;
      }
    }
  }
  return rotate_left(per_, best);
}

std::string Itinerary::str() const {
  std::string out;
  if (!pre_.empty()) out += "pre:" + word_str(pre_) + " ";
  out += "per:" + word_str(per_);
  return out;
}

Itinerary Itinerary::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  std::size_t per_pos = s.find("per:");
  if (per_pos == std::string::npos) {
    throw DomainError(ErrorKind::ParseError, "itinerary needs a \"per:\" part: \"" + s + "\"");
  }
  Word pre;
  if (per_pos != 0) {
    if (s.rfind("pre:", 0) != 0) {
      throw DomainError(ErrorKind::ParseError, "bad itinerary prefix in \"" + s + "\"");
    }
    pre = parse_word(std::string_view(s).substr(4, per_pos - 4));
  }
  Word per = parse_word(std::string_view(s).substr(per_pos + 4));
  if (per.empty()) {
    throw DomainError(ErrorKind::ParseError, "itinerary period must be nonempty");
  }
  return Itinerary(std::move(pre), std::move(per));
}

bool tail_equivalent(const Itinerary& x, const Itinerary& y) {
  if (x.period().size() != y.period().size()) return false;
  return x.least_rotation() == y.least_rotation();
}

bool eventual_equivalent(const Itinerary& x, const Itinerary& y) {
  std::size_t p = x.period().size();
  if (p != y.period().size()) return false;
  // tails aligned at equal indices: y.per must be x.per rotated by the
  // preperiod length difference
  std::size_t shift = (y.preperiod().size() + p - (x.preperiod().size() % p)) % p;
  return y.period() == rotate_left(x.period(), shift);
}

std::string StreamPrefix::str() const { return word_str(digits) + ",...[+more]"; }

Atoms atom_count(const Itinerary& it) { return Atoms::finite(it.period().size()); }

// A finite prefix never certifies periodicity, so stream labels report
// countably many atoms.
Atoms atom_count(const StreamPrefix&) { return Atoms::infinite(); }

// ---------------------------------------------------------------------------
// RcfStream
// ---------------------------------------------------------------------------

RcfStream::RcfStream(std::string name, Generator gen)
    : name_(std::move(name)), gen_(std::move(gen)) {}

std::optional<Int> RcfStream::quotient(std::size_t i) const { return gen_(i); }

RcfStream RcfStream::e_minus_2() {
  return RcfStream("e-2", [](std::size_t i) -> std::optional<Int> {
    // 1,2,1, 1,4,1, 1,6,1, 1,8,1, ...
    if (i % 3 == 1) return Int(2 + 2 * static_cast<unsigned long>(i / 3));
    return Int(1);
  });
}

RcfStream RcfStream::from_quotients(std::vector<Int> quotients, std::string name) {
  for (const Int& q : quotients) {
    if (q < 1) throw std::invalid_argument("RCF quotients must be positive");
  }
  auto data = std::make_shared<std::vector<Int>>(std::move(quotients));
  return RcfStream(std::move(name), [data](std::size_t i) -> std::optional<Int> {
    if (i < data->size()) return (*data)[i];
    return std::nullopt;
  });
}

RcfStream RcfStream::from_surd(const QuadraticSurd& x) {
  static const QuadraticSurd zero{Rational(0)};
  static const QuadraticSurd one{Rational(1)};
  if (x.is_rational() || x <= zero || x >= one) {
    throw std::invalid_argument("from_surd needs an irrational surd in (0,1)");
  }
  struct State {
    QuadraticSurd current;
    std::vector<Int> cache;
  };
  auto st = std::make_shared<State>(State{x, {}});
  static const Mobius recip(0, 1, 1, 0);
  return RcfStream("rcf(" + x.str() + ")", [st](std::size_t i) -> std::optional<Int> {
    while (st->cache.size() <= i) {
      QuadraticSurd inv = recip(st->current);
      Int a = inv.floor();
      st->cache.push_back(a);
      st->current = Mobius(1, -a, 0, 1)(inv);
    }
    return st->cache[i];
  });
}

// ---------------------------------------------------------------------------
// Encoding
// ---------------------------------------------------------------------------

namespace {
// canonical surds are unique per value, so a structural order suffices for
// orbit bookkeeping and is much cheaper than the value order
struct SurdStructuralLess {
  bool operator()(const QuadraticSurd& x, const QuadraticSurd& y) const {
    int c = cmp(x.a(), y.a());
    if (c != 0) return c < 0;
    c = cmp(x.b(), y.b());
    if (c != 0) return c < 0;
    c = cmp(x.c(), y.c());
    if (c != 0) return c < 0;
    return cmp(x.d(), y.d()) < 0;
  }
};
} // namespace

Itinerary encode_surd(const Scfa& s, const QuadraticSurd& x0) {
  if (x0.is_rational()) {
    throw std::invalid_argument("encode_surd requires an irrational surd; use encode_rational");
  }
  s.locate(x0); // range check: throws OutOfRange outside [0,1]
  std::map<QuadraticSurd, std::size_t, SurdStructuralLess> visited;
  Word digits;
  QuadraticSurd x = x0;
  while (true) {
    auto [slot, inserted] = visited.emplace(x, digits.size());
    if (!inserted) {
      std::size_t j = slot->second;
      Word pre(digits.begin(), digits.begin() + static_cast<long>(j));
      Word per(digits.begin() + static_cast<long>(j), digits.end());
      return Itinerary(std::move(pre), std::move(per));
    }
    // irrational points never hit rational endpoints: the digit is unique
    int d = s.locate_interior(x);
    digits.push_back(d);
    x = s.branch_inverse(d)(x);
  }
}

std::vector<Itinerary> encode_rational(const Scfa& s, const Rational& x0) {
  // termination guard per the endpoint argument: the orbit reaches {0,1}
  // within (#partition points) * (initial denominator)^2 steps
  Int bound = Int(s.branch_count() + 1) * (x0.den() + 1) * (x0.den() + 1) + 64;
  std::vector<Itinerary> out;

  struct Route {
    Rational x;
    Word digits;
    std::map<Rational, std::size_t> visited;
  };
  std::vector<Route> stack;
  stack.push_back({x0, {}, {}});
  while (!stack.empty()) {
    Route r = std::move(stack.back());
    stack.pop_back();
    while (true) {
      auto found = r.visited.find(r.x);
      if (found != r.visited.end()) {
        std::size_t j = found->second;
        Word pre(r.digits.begin(), r.digits.begin() + static_cast<long>(j));
        Word per(r.digits.begin() + static_cast<long>(j), r.digits.end());
        out.emplace_back(std::move(pre), std::move(per));
        break;
      }
      if (Int(static_cast<unsigned long>(r.digits.size())) > bound) {
        throw std::logic_error("rational orbit exceeded its termination bound");
      }
      r.visited.emplace(r.x, r.digits.size());
      std::vector<int> ds = s.locate(QuadraticSurd(r.x));
      // explore larger digits later; continue this route with the smallest
      for (std::size_t k = ds.size(); k > 1; --k) {
        Route branch = r;
        branch.digits.push_back(ds[k - 1]);
        branch.x = s.forward_step(QuadraticSurd(r.x), ds[k - 1]).to_rational();
        stack.push_back(std::move(branch));
      }
      r.digits.push_back(ds.front());
      r.x = s.forward_step(QuadraticSurd(r.x), ds.front()).to_rational();
    }
  }
  // routes were pushed depth-first with the smallest digit continuing first,
  // so order by first divergent digit for determinism
  std::sort(out.begin(), out.end(), [](const Itinerary& a, const Itinerary& b) {
    for (std::size_t n = 0;; ++n) {
      int da = a.at(n), db = b.at(n);
      if (da != db) return da < db;
      if (n > a.preperiod().size() + b.preperiod().size() +
                  2 * a.period().size() * b.period().size() + 4) {
        return false; // equal sequences
      }
    }
  });
  if (out.size() > 2) {
    throw std::logic_error("rational encoding produced more than two itineraries");
  }
  return out;
}

StreamEncodeResult encode_stream(const Scfa& s, const RcfStream& src, std::size_t count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  Mobius state = Mobius::identity();   // orbit point = state(tail), tail in [0,1]
  Mobius emitted_product = Mobius::identity();
  Word digits;
  std::size_t consumed = 0;

  auto enclosure = [](const Mobius& m) {
    Rational u = m(Rational(0));
    Rational v = m(Rational(1));
    if (v < u) std::swap(u, v);
    return std::make_pair(u, v);
  };

  while (digits.size() < count) {
    auto [lo, hi] = enclosure(state);
    int digit = 0;
    for (int i = 1; i <= s.branch_count(); ++i) {
      const UnimodularInterval& c = s.cell(i);
      if (!(c.lo() <= lo && hi <= c.hi())) continue;
      if (i > 1 && !(c.lo() < lo)) continue;                  // interior endpoint on the left
      if (i < s.branch_count() && !(hi < c.hi())) continue;   // interior endpoint on the right
      digit = i;
      break;
    }
    if (digit != 0) {
      digits.push_back(digit);
      state = s.branch(digit).inverse() * state;
      emitted_product = emitted_product * s.branch(digit);
      continue;
    }
    std::optional<Int> q = src.quotient(consumed);
    if (!q.has_value()) {
      throw DomainError(ErrorKind::Stall,
                        "stream exhausted with enclosure [" + lo.str() + ", " + hi.str() +
                            "] astride a partition point after " +
                            std::to_string(digits.size()) + " digits",
                        static_cast<long>(digits.size()));
    }
    if (*q < 1) throw std::invalid_argument("RCF quotients must be positive");
    state = state * Mobius(0, 1, 1, *q);
    ++consumed;
  }

  auto [vlo, vhi] = enclosure(emitted_product * state);
  StreamEncodeResult res;
  res.prefix.digits = std::move(digits);
  res.value_lo = std::move(vlo);
  res.value_hi = std::move(vhi);
  res.quotients_consumed = consumed;
  return res;
}

// ---------------------------------------------------------------------------
// Decoding
// ---------------------------------------------------------------------------

namespace {

Mobius product_range(const Scfa& s, const Word& w, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return s.branch(w[lo]);
  std::size_t mid = lo + (hi - lo) / 2;
  return product_range(s, w, lo, mid) * product_range(s, w, mid, hi);
}

// h_{w_1} ... h_{w_n} as a balanced product (entries grow linearly in |w|,
// so left-to-right accumulation would be quadratic on long periods)
Mobius word_product(const Scfa& s, const Word& w) {
  for (int d : w) {
    if (d < 1 || d > s.branch_count()) {
      throw DomainError(ErrorKind::WrongBranch, "digit " + std::to_string(d) + " out of range", d);
    }
  }
  if (w.empty()) return Mobius::identity();
  return product_range(s, w, 0, w.size());
}

std::pair<Rational, Rational> image_of_unit(const Mobius& m) {
  Rational u = m(Rational(0));
  Rational v = m(Rational(1));
  if (v < u) std::swap(u, v);
  return {u, v};
}

} // namespace

std::pair<Rational, Rational> decode_prefix(const Scfa& s, const Word& w) {
  return image_of_unit(word_product(s, w));
}

QuadraticSurd decode_words(const Scfa& s, const Word& preperiod, const Word& period) {
  if (period.empty()) throw std::invalid_argument("decode needs a nonempty period");
  Mobius m = word_product(s, period);
  if (m.is_identity()) {
    throw std::logic_error("period matrix is the identity"); // impossible for genuine branches
  }
  std::vector<QuadraticSurd> roots = m.fixed_points();
  auto [lo, hi] = image_of_unit(m); // the one-period cylinder
  QuadraticSurd slo{lo}, shi{hi};
  std::vector<QuadraticSurd> inside;
  for (const QuadraticSurd& r : roots) {
    if (slo <= r && r <= shi) inside.push_back(r);
  }
  if (inside.size() > 1) {
    // a double hit: refine with a second period repetition
    auto [lo2, hi2] = image_of_unit(m * m);
    QuadraticSurd slo2{lo2}, shi2{hi2};
    std::vector<QuadraticSurd> refined;
    for (const QuadraticSurd& r : inside) {
      if (slo2 <= r && r <= shi2) refined.push_back(r);
    }
    inside = std::move(refined);
  }
  if (inside.empty()) {
    throw DomainError(ErrorKind::NoFixedPointInCylinder,
                      "no fixed point of the period matrix lies in the cylinder of per:" +
                          word_str(period));
  }
  if (inside.size() != 1) {
    throw std::logic_error("ambiguous fixed point after refinement");
  }
  return word_product(s, preperiod)(inside.front());
}

QuadraticSurd decode(const Scfa& s, const Itinerary& it) {
  return decode_words(s, it.preperiod(), it.period());
}

} // namespace slowcf
