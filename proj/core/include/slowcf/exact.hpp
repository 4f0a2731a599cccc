#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "slowcf/errors.hpp"

namespace slowcf {

/// Arbitrary-precision integer. All exact arithmetic in the library sits on
/// top of this type; nothing below ever touches floating point.
using Int = mpz_class;

int sgn(const Int& x) noexcept;

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);

/// n = square * square + squarefree with squarefree squarefree.
struct SquarefreeSplit {
  Int root;       // the extracted square's root
  Int squarefree; // certified squarefree cofactor
};

/// Extracts the square part of n >= 0 by trial division up to an internal
/// bound followed by a perfect-square check on the cofactor. Inputs whose
/// squarefreeness cannot be certified are rejected with RadicandTooLarge
/// rather than silently mis-normalized.
SquarefreeSplit squarefree_split(Int n);

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Reduced fraction num/den with den >= 1 and gcd(num, den) = 1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {} // NOLINT(google-explicit-constructor)
  Rational(long n) : num_(n), den_(1) {}           // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d);
  Rational(long n, long d) : Rational(Int(n), Int(d)) {}

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  Int floor() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const; // throws std::domain_error on /0

  bool operator==(const Rational& o) const noexcept = default;
  std::strong_ordering operator<=>(const Rational& o) const noexcept;

  /// "p/q" (always with the denominator, e.g. "0/1").
  std::string str() const;
  /// Parses "p", "p/q"; whitespace-insensitive. Throws DomainError(ParseError).
  static Rational parse(std::string_view text);

private:
  Int num_;
  Int den_;
  void reduce();
};

Rational mediant(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// ---------------------------------------------------------------------------
// QuadraticSurd
// ---------------------------------------------------------------------------

/// Exact real of the form (a + b*sqrt(d))/c with c >= 1, gcd(a,b,c) = 1,
/// d squarefree, and the canonical rational embedding b = 0, d = 1. This is
/// the universe of every number the library can decode.
class QuadraticSurd {
public:
  QuadraticSurd() : a_(0), b_(0), c_(1), d_(1) {}
  QuadraticSurd(const Rational& r); // NOLINT(google-explicit-constructor)
  QuadraticSurd(Int a, Int b, Int c, Int d);

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& c() const noexcept { return c_; }
  const Int& d() const noexcept { return d_; }

  bool is_rational() const noexcept { return b_ == 0; }
  /// Requires is_rational().
  Rational to_rational() const;

  Int floor() const;
  bool is_zero() const noexcept { return b_ == 0 && a_ == 0; }

  /// Exact trichotomy by integer sign analysis; never uses floating point.
  static int compare(const QuadraticSurd& x, const QuadraticSurd& y);

  bool operator==(const QuadraticSurd& o) const noexcept = default;
  bool operator<(const QuadraticSurd& o) const { return compare(*this, o) < 0; }
  bool operator<=(const QuadraticSurd& o) const { return compare(*this, o) <= 0; }
  bool operator>(const QuadraticSurd& o) const { return compare(*this, o) > 0; }
  bool operator>=(const QuadraticSurd& o) const { return compare(*this, o) >= 0; }

  /// Canonical text: "p/q" for rationals, "(a+b*sqrt(d))/c" otherwise.
  std::string str() const;
  /// Parses the full number grammar: "p/q" or "(a+b*sqrt(d))/c",
  /// whitespace-insensitive, signs allowed on each integer.
  static QuadraticSurd parse(std::string_view text);

private:
  friend class Mobius; // fast path: images keep the (already squarefree) radicand
  Int a_, b_, c_, d_;
  void normalize();
};

/// Strict weak order for ordered containers keyed by exact value.
struct SurdLess {
  bool operator()(const QuadraticSurd& x, const QuadraticSurd& y) const {
    return QuadraticSurd::compare(x, y) < 0;
  }
};

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x);

// ---------------------------------------------------------------------------
// Mobius
// ---------------------------------------------------------------------------

/// Integer 2x2 matrix [[a,b],[c,d]] with |det| = 1, acting as
/// x -> (ax+b)/(cx+d), taken modulo +-I. The canonical representative has its
/// first nonzero entry (in order a,b,c,d) positive, so PGL2(Z) equality is
/// structural equality.
class Mobius {
public:
  Mobius(Int a, Int b, Int c, Int d); // throws std::invalid_argument unless |det| = 1

  static const Mobius& identity();

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& c() const noexcept { return c_; }
  const Int& d() const noexcept { return d_; }

  int det() const; // +1 or -1
  bool is_identity() const;

  Mobius inverse() const;
  Mobius operator*(const Mobius& o) const;

  QuadraticSurd operator()(const QuadraticSurd& x) const; // PoleError
  Rational operator()(const Rational& x) const;           // PoleError

  /// Real fixed points, i.e. the real roots of c x^2 + (d-a) x - b = 0,
  /// returned as exact surds (0, 1, or 2 of them). Throws DegenerateError on
  /// the identity. Coefficients are content-reduced first so discriminants of
  /// long branch products stay small.
  std::vector<QuadraticSurd> fixed_points() const;

  bool operator==(const Mobius& o) const noexcept = default;

  std::string str() const; // "[[a,b],[c,d]]"

private:
  Int a_, b_, c_, d_;
  void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const Mobius& m);

} // namespace slowcf
