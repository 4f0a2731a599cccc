#include "slowcf/jump.hpp"

#include <stdexcept>

namespace slowcf {

JumpSpec::JumpSpec(Scfa scfa, int lo, int hi) : scfa_(std::move(scfa)), lo_(lo), hi_(hi) {
  if (lo_ < 1 || hi_ < lo_ || hi_ > scfa_.branch_count()) {
    throw std::invalid_argument("jump range must satisfy 1 <= lo <= hi <= N");
  }
}

std::vector<Word> jump_words(const JumpSpec& spec, std::size_t max_len) {
  if (!spec.proper()) {
    throw std::invalid_argument("jump words need E to be a proper subset of the cells");
  }
  std::vector<int> outside, inside;
  for (int i = 1; i <= spec.scfa().branch_count(); ++i) {
    (spec.in_e(i) ? inside : outside).push_back(i);
  }
  std::vector<Word> out;
  // words (E^c)^(len-1) . E, enumerated length-lexicographically
  std::vector<Word> heads = {Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const Word& head : heads) {
      for (int e : inside) {
        Word w = head;
        w.push_back(e);
        out.push_back(std::move(w));
      }
    }
    if (len == max_len) break;
    std::vector<Word> next;
    next.reserve(heads.size() * outside.size());
    for (const Word& head : heads) {
      for (int c : outside) {
        Word w = head;
        w.push_back(c);
        next.push_back(std::move(w));
      }
    }
    heads = std::move(next);
    if (heads.empty()) break; // E^c empty: only the single-digit words exist
  }
  return out;
}

std::vector<Word> jump_blocks(const JumpSpec& spec, const Itinerary& it, std::size_t count) {
  bool returns = false;
  for (int d : it.period()) {
    if (d > spec.scfa().branch_count()) {
      throw std::invalid_argument("itinerary digit outside the SCFA alphabet");
    }
    returns = returns || spec.in_e(d);
  }
  if (!returns) {
    throw DomainError(ErrorKind::NotInDomain,
                      "period " + word_str(it.period()) + " never enters E=[" +
                          std::to_string(spec.lo()) + ".." + std::to_string(spec.hi()) + "]");
  }
  std::vector<Word> blocks;
  Word current;
  for (std::size_t n = 0; blocks.size() < count; ++n) {
    int d = it.at(n);
    current.push_back(d);
    if (spec.in_e(d)) {
      blocks.push_back(std::move(current));
      current.clear();
    }
  }
  return blocks;
}

std::vector<Word> jump_blocks(const JumpSpec& spec, const Word& prefix) {
  std::vector<Word> blocks;
  Word current;
  for (int d : prefix) {
    if (d > spec.scfa().branch_count()) {
      throw std::invalid_argument("digit outside the SCFA alphabet");
    }
    current.push_back(d);
    if (spec.in_e(d)) {
      blocks.push_back(std::move(current));
      current.clear();
    }
  }
  return blocks; // an incomplete trailing block is dropped
}

namespace {
std::vector<QuotientStep> to_steps(const std::vector<Word>& blocks) {
  std::vector<QuotientStep> out;
  out.reserve(blocks.size());
  for (const Word& b : blocks) out.push_back({b.size(), b.back()});
  return out;
}
} // namespace

std::vector<QuotientStep> partial_quotients(const JumpSpec& spec, const Itinerary& it,
                                            std::size_t count) {
  return to_steps(jump_blocks(spec, it, count));
}

std::vector<QuotientStep> partial_quotients(const JumpSpec& spec, const Word& prefix) {
  return to_steps(jump_blocks(spec, prefix));
}

} // namespace slowcf
