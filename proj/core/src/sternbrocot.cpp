#include "slowcf/sternbrocot.hpp"

#include <stdexcept>

namespace slowcf {

const Mobius& b1_matrix() {
  static const Mobius m(1, 0, 1, 1);
  return m;
}

const Mobius& b2_matrix() {
  static const Mobius m(0, 1, -1, 2);
  return m;
}

const Mobius& flip_matrix() {
  static const Mobius m(-1, 1, 0, 1);
  return m;
}

std::string BWord::str() const {
  std::string out = letters.empty() ? std::string("e") : letters;
  if (flip != 0) out += ".T";
  return out;
}

Mobius bword_matrix(const BWord& w) {
  Mobius m = Mobius::identity();
  for (char ch : w.letters) {
    switch (ch) {
      case 'L': m = m * b1_matrix(); break;
      case 'R': m = m * b2_matrix(); break;
      default: throw std::invalid_argument("BWord letters must be L or R");
    }
  }
  if (w.flip != 0) m = m * flip_matrix();
  return m;
}

BWord factor_branch(const Scfa& s, int i) {
  if (i < 1 || i > s.branch_count()) throw std::invalid_argument("branch index out of range");
  const Rational& tlo = s.cell(i).lo();
  const Rational& thi = s.cell(i).hi();
  Rational lo(0), hi(1);
  BWord out;
  // depth of a unimodular interval in the mediant tree is below q + q'
  Int guard = tlo.den() + thi.den() + 2;
  while (!(lo == tlo && hi == thi)) {
    if (Int(static_cast<unsigned long>(out.letters.size())) > guard) {
      throw std::logic_error("mediant walk failed to reach a partition cell");
    }
    Rational mid = mediant(lo, hi);
    if (thi <= mid) {
      out.letters.push_back('L');
      hi = std::move(mid);
    } else if (mid <= tlo) {
      out.letters.push_back('R');
      lo = std::move(mid);
    } else {
      throw std::logic_error("partition cell straddles a mediant"); // impossible if unimodular
    }
  }
  out.flip = (1 - s.sign(i)) / 2;
  return out;
}

std::vector<BWord> psi_embedding(const Scfa& s) {
  std::vector<BWord> out;
  out.reserve(static_cast<std::size_t>(s.branch_count()));
  std::vector<std::string> letters;
  for (int i = 1; i <= s.branch_count(); ++i) {
    out.push_back(factor_branch(s, i));
    letters.push_back(out.back().letters);
  }
  // Lemma: the words are the leaves of a finite binary tree
  if (!prefix_code_check(letters).complete()) {
    throw std::logic_error("branch factorization is not a complete prefix code");
  }
  return out;
}

PrefixCodeResult prefix_code_check(const std::vector<std::string>& words) {
  PrefixCodeResult res{PrefixCodeStatus::Complete, -1, -1, Rational(0)};
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      if (words[j].size() >= words[i].size() &&
          words[j].compare(0, words[i].size(), words[i]) == 0) {
        res.status = PrefixCodeStatus::PrefixViolation;
        res.i = static_cast<int>(i);
        res.j = static_cast<int>(j);
        return res;
      }
    }
  }
  Rational kraft(0);
  for (const std::string& w : words) {
    Int den = 1;
    den <<= w.size(); // 2^len
    kraft = kraft + Rational(1, den);
  }
  res.kraft = kraft;
  res.status = (kraft == Rational(1)) ? PrefixCodeStatus::Complete : PrefixCodeStatus::Incomplete;
  return res;
}

BWord flip_normalize(std::string_view word) {
  BWord out;
  int pending = 0;
  for (char ch : word) {
    switch (ch) {
      case 'T':
        pending ^= 1;
        break;
      case 'L':
        out.letters.push_back(pending ? 'R' : 'L'); // T b1 = b2 T
        break;
      case 'R':
        out.letters.push_back(pending ? 'L' : 'R'); // T b2 = b1 T
        break;
      default:
        throw std::invalid_argument("flip_normalize expects letters over {L,R,T}");
    }
  }
  out.flip = pending;
  return out;
}

} // namespace slowcf
