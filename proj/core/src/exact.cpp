#include "slowcf/exact.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace slowcf {

int sgn(const Int& x) noexcept { return mpz_sgn(x.get_mpz_t()); }

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
  return true;
}

namespace {
// Trial-division bound for radicand reduction; cofactors above kSquarefreeBound^2
// that are not perfect squares cannot be certified squarefree.
constexpr unsigned long kSquarefreeBound = 1000000UL;

Int floor_div(const Int& n, const Int& d) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Int gcd(const Int& x, const Int& y) {
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}
} // namespace

SquarefreeSplit squarefree_split(Int n) {
  if (n < 0) throw std::invalid_argument("squarefree_split of negative number");
  if (n <= 1) return {Int(1), std::move(n)};
  Int root = 1;
  Int m = std::move(n);
  unsigned long k = 2;
  while (true) {
    Int kk = Int(static_cast<unsigned long>(k)) * static_cast<unsigned long>(k);
    if (kk > m) break;
    if (k > kSquarefreeBound) {
      Int s;
      if (is_perfect_square(m, &s)) {
        root *= s;
        m = 1;
        break;
      }
      throw DomainError(ErrorKind::RadicandTooLarge,
                        "cannot certify squarefree part of radicand " + m.get_str());
    }
    while (mpz_divisible_ui_p(m.get_mpz_t(), k * k) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), k * k);
      root *= k;
    }
    ++k;
  }
  return {root, m};
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd(num_, den_);
  if (g > 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Int Rational::floor() const { return floor_div(num_, den_); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const noexcept {
  Int lhs = num_ * o.den_;
  Int rhs = o.num_ * den_;
  int c = mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return num_.get_str() + "/" + den_.get_str(); }

Rational mediant(const Rational& a, const Rational& b) {
  return Rational(a.num() + b.num(), a.den() + b.den());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------
// Parsing helpers
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
  std::string text; // whitespace already stripped
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat(std::string_view word) {
    if (text.compare(pos, word.size(), word) == 0) {
      pos += word.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError(ErrorKind::ParseError,
                      what + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  }
};

Cursor make_cursor(std::string_view raw) {
  Cursor c;
  c.text.reserve(raw.size());
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) c.text.push_back(ch);
  }
  return c;
}

Int parse_int(Cursor& c) {
  std::size_t start = c.pos;
  if (c.peek() == '+' || c.peek() == '-') ++c.pos;
  std::size_t digits = 0;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    ++c.pos;
    ++digits;
  }
  if (digits == 0) c.fail("expected integer");
  std::string tok = c.text.substr(start, c.pos - start);
  if (tok[0] == '+') tok.erase(0, 1);
  return Int(tok);
}

} // namespace

Rational Rational::parse(std::string_view text) {
  Cursor c = make_cursor(text);
  Int n = parse_int(c);
  Int d = 1;
  if (c.eat('/')) d = parse_int(c);
  if (!c.done()) c.fail("trailing input after rational");
  if (d == 0) c.fail("zero denominator");
  return Rational(std::move(n), std::move(d));
}

// ---------------------------------------------------------------------------
// QuadraticSurd
// ---------------------------------------------------------------------------

QuadraticSurd::QuadraticSurd(const Rational& r) : a_(r.num()), b_(0), c_(r.den()), d_(1) {}

QuadraticSurd::QuadraticSurd(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ == 0) throw std::invalid_argument("surd with zero denominator");
  if (d_ < 0) throw std::invalid_argument("surd with negative radicand");
  if (b_ != 0 && d_ > 1) {
    SquarefreeSplit s = squarefree_split(d_);
    d_ = s.squarefree;
    b_ *= s.root;
  }
  normalize();
}

void QuadraticSurd::normalize() {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 1;
  } else if (d_ == 1) { // sqrt(1) folds into the rational part
    a_ += b_;
    b_ = 0;
  }
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  Int g = gcd(gcd(a_, b_), c_);
  if (g > 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational QuadraticSurd::to_rational() const {
  if (b_ != 0) throw std::domain_error("surd is irrational");
  return Rational(a_, c_);
}

Int QuadraticSurd::floor() const {
  if (b_ == 0) return floor_div(a_, c_);
  Int m = b_ * b_ * d_;
  Int s = isqrt(m);
  Int fl; // floor(b*sqrt(d))
  if (b_ > 0) {
    fl = s;
  } else {
    fl = -s;
    if (s * s != m) fl -= 1;
  }
  return floor_div(a_ + fl, c_);
}

namespace {

// Sign of A + B*sqrt(p) with integer A, B and p >= 0 (p need not be squarefree).
int sign_one_radical(const Int& A, const Int& B, const Int& p) {
  if (B == 0 || p == 0) return sgn(A);
  int sA = sgn(A), sB = sgn(B);
  if (sA >= 0 && sB >= 0) return (sA == 0 && sB == 0) ? 0 : 1;
  if (sA <= 0 && sB <= 0) return (sA == 0 && sB == 0) ? 0 : -1;
  Int lhs = A * A;
  Int rhs = B * B * p;
  int c = mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
  if (c == 0) return 0;
  return c > 0 ? sA : sB;
}

// Sign of A + B*sqrt(p) + C*sqrt(q); resolved with integer squaring only.
int sign_two_radicals(const Int& A, const Int& B, const Int& p, const Int& C, const Int& q) {
  if (B == 0 || p == 0) return sign_one_radical(A, C, q);
  if (C == 0 || q == 0) return sign_one_radical(A, B, p);
  if (p == q) return sign_one_radical(A, B + C, p);

  int sB = sgn(B), sC = sgn(C);
  int sT; // sign of B*sqrt(p) + C*sqrt(q)
  if (sB >= 0 && sC >= 0) {
    sT = 1;
  } else if (sB <= 0 && sC <= 0) {
    sT = -1;
  } else {
    Int lhs = B * B * p;
    Int rhs = C * C * q;
    int c = mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
    sT = (c == 0) ? 0 : (c > 0 ? sB : sC);
  }
  int sA = sgn(A);
  if (sA == 0) return sT;
  if (sT == 0) return sA;
  if (sA == sT) return sA;
  // |A| vs |B*sqrt(p) + C*sqrt(q)|: compare A^2 with T^2 = B^2 p + C^2 q + 2BC sqrt(pq)
  Int lin = A * A - B * B * p - C * C * q;
  Int rad = Int(-2) * B * C;
  int inner = sign_one_radical(lin, rad, p * q);
  if (inner == 0) return 0;
  return inner > 0 ? sA : sT;
}

} // namespace

int QuadraticSurd::compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  // sign of (a1 + b1 sqrt(d1))/c1 - (a2 + b2 sqrt(d2))/c2 with c1, c2 >= 1
  Int A = x.a_ * y.c_ - y.a_ * x.c_;
  Int B = x.b_ * y.c_;
  Int C = -(y.b_ * x.c_);
  if (x.d_ == y.d_) return sign_one_radical(A, B + C, x.d_);
  return sign_two_radicals(A, B, x.d_, C, y.d_);
}

std::string QuadraticSurd::str() const {
  if (b_ == 0) return a_.get_str() + "/" + c_.get_str();
  std::string out = "(" + a_.get_str();
  out += (b_ > 0) ? "+" : "-";
  Int babs = abs(b_);
  out += babs.get_str() + "*sqrt(" + d_.get_str() + "))/" + c_.get_str();
  return out;
}

QuadraticSurd QuadraticSurd::parse(std::string_view text) {
  Cursor c = make_cursor(text);
  if (c.eat('(')) {
    Int a = parse_int(c);
    int sign = 0;
    if (c.eat('+')) {
      sign = 1;
    } else if (c.eat('-')) {
      sign = -1;
    } else {
      c.fail("expected '+' or '-' before radical term");
    }
    Int b = parse_int(c);
    if (sign < 0) b = -b;
    if (!c.eat('*')) c.fail("expected '*'");
    if (!c.eat("sqrt(")) c.fail("expected 'sqrt('");
    Int d = parse_int(c);
    if (d < 0) c.fail("negative radicand");
    if (!c.eat(')')) c.fail("expected ')' after radicand");
    if (!c.eat(')')) c.fail("expected ')' closing numerator");
    if (!c.eat('/')) c.fail("expected '/'");
    Int den = parse_int(c);
    if (!c.done()) c.fail("trailing input after surd");
    if (den == 0) c.fail("zero denominator");
    return QuadraticSurd(std::move(a), std::move(b), std::move(den), std::move(d));
  }
  Int n = parse_int(c);
  Int den = 1;
  if (c.eat('/')) den = parse_int(c);
  if (!c.done()) c.fail("trailing input after rational");
  if (den == 0) c.fail("zero denominator");
  return QuadraticSurd(Rational(std::move(n), std::move(den)));
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// Mobius
// ---------------------------------------------------------------------------

Mobius::Mobius(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Int det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1) {
    throw std::invalid_argument("Mobius requires determinant +-1, got " + det.get_str());
  }
  canonicalize();
}

void Mobius::canonicalize() {
  const Int* entries[4] = {&a_, &b_, &c_, &d_};
  for (const Int* e : entries) {
    int s = sgn(*e);
    if (s > 0) return;
    if (s < 0) break;
  }
  a_ = -a_;
  b_ = -b_;
  c_ = -c_;
  d_ = -d_;
}

const Mobius& Mobius::identity() {
  static const Mobius id(1, 0, 0, 1);
  return id;
}

int Mobius::det() const {
  Int d = a_ * d_ - b_ * c_;
  return d > 0 ? 1 : -1;
}

bool Mobius::is_identity() const { return b_ == 0 && c_ == 0 && a_ == d_; }

Mobius Mobius::inverse() const {
  // adjugate; exact inverse up to the +-I identification
  return Mobius(d_, -b_, -c_, a_);
}

Mobius Mobius::operator*(const Mobius& o) const {
  return Mobius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

Rational Mobius::operator()(const Rational& x) const {
  Int num = a_ * x.num() + b_ * x.den();
  Int den = c_ * x.num() + d_ * x.den();
  if (den == 0) {
    throw DomainError(ErrorKind::Pole, "Mobius denominator vanishes at " + x.str());
  }
  return Rational(std::move(num), std::move(den));
}

QuadraticSurd Mobius::operator()(const QuadraticSurd& x) const {
  if (x.is_rational()) return QuadraticSurd((*this)(x.to_rational()));
  // numerator (A + B sqrt(d)), denominator (E + F sqrt(d)), common factor 1/x.c cancels
  Int A = a_ * x.a() + b_ * x.c();
  Int B = a_ * x.b();
  Int E = c_ * x.a() + d_ * x.c();
  Int F = c_ * x.b();
  Int denom = E * E - F * F * x.d();
  if (denom == 0) {
    // with d squarefree > 1 this forces E = F = 0, i.e. a genuine pole
    throw DomainError(ErrorKind::Pole, "Mobius denominator vanishes at " + x.str());
  }
  Int na = A * E - B * F * x.d();
  Int nb = B * E - A * F;
  // the radicand is unchanged and already squarefree
  QuadraticSurd out;
  out.a_ = std::move(na);
  out.b_ = std::move(nb);
  out.c_ = std::move(denom);
  out.d_ = x.d();
  out.normalize();
  return out;
}

std::vector<QuadraticSurd> Mobius::fixed_points() const {
  if (is_identity()) {
    throw DomainError(ErrorKind::Degenerate, "every point is fixed by the identity");
  }
  // roots of c x^2 + (d - a) x - b = 0
  Int A = c_;
  Int B = d_ - a_;
  Int C = -b_;
  if (A == 0) {
    if (B == 0) return {}; // translation x -> x + b, no finite fixed point
    return {QuadraticSurd(Rational(-C, B))};
  }
  Int g = gcd(gcd(A, B), C);
  if (g > 1) {
    mpz_divexact(A.get_mpz_t(), A.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(B.get_mpz_t(), B.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(C.get_mpz_t(), C.get_mpz_t(), g.get_mpz_t());
  }
  Int disc = B * B - 4 * A * C;
  if (disc < 0) return {};
  if (disc == 0) return {QuadraticSurd(Rational(-B, 2 * A))};
  SquarefreeSplit s = squarefree_split(disc);
  if (s.squarefree == 1) {
    return {QuadraticSurd(Rational(-B + s.root, 2 * A)),
            QuadraticSurd(Rational(-B - s.root, 2 * A))};
  }
  return {QuadraticSurd(-B, s.root, 2 * A, s.squarefree),
          QuadraticSurd(-B, -s.root, 2 * A, s.squarefree)};
}

std::string Mobius::str() const {
  return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() + "," + d_.get_str() +
         "]]";
}

std::ostream& operator<<(std::ostream& os, const Mobius& m) { return os << m.str(); }

} // namespace slowcf
