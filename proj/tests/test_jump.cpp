#include <doctest.h>

#include "slowcf/jump.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace slowcf;
using slowcf::testing::Rng;

namespace {
Word w(std::initializer_list<int> d) { return Word(d); }
} // namespace

TEST_SUITE_BEGIN("jump");

TEST_CASE("jumpWords examples") {
  // F_R induced on its last cell: blocks 1^{a-1} 2
  JumpSpec gauss(builtin("farey"), 2, 2);
  CHECK(jump_words(gauss, 3) == std::vector<Word>{w({2}), w({1, 2}), w({1, 1, 2})});

  JumpSpec even23(builtin("even"), 2, 3);
  CHECK(jump_words(even23, 2) == std::vector<Word>{w({2}), w({3}), w({1, 2}), w({1, 3})});

  JumpSpec back1(builtin("backwards"), 1, 1);
  CHECK(jump_words(back1, 2) == std::vector<Word>{w({1}), w({2, 1})});

  CHECK_THROWS_AS(jump_words(JumpSpec(builtin("farey"), 1, 2), 3), std::invalid_argument);
  CHECK_THROWS_AS(JumpSpec(builtin("farey"), 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(JumpSpec(builtin("farey"), 0, 1), std::invalid_argument);
}

TEST_CASE("jumpDigitStream examples") {
  Scfa farey = builtin("farey");
  JumpSpec gauss(farey, 2, 2);

  Itinerary r2 = encode_surd(farey, QuadraticSurd::parse("(-1+1*sqrt(2))/1"));
  auto blocks = jump_blocks(gauss, r2, 3);
  CHECK(blocks == std::vector<Word>{w({1, 2}), w({1, 2}), w({1, 2})});

  Itinerary golden = encode_surd(farey, QuadraticSurd::parse("(-1+1*sqrt(5))/2"));
  CHECK(jump_blocks(gauss, golden, 2) == std::vector<Word>{w({2}), w({2})});

  try {
    jump_blocks(gauss, Itinerary({}, {1}), 1); // x = 0 never enters (1/2, 1)
    FAIL("expected NotInDomain");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NotInDomain);
  }
}

TEST_CASE("partialQuotients examples") {
  Scfa farey = builtin("farey");
  JumpSpec gauss(farey, 2, 2);

  // e-2: the Farey-coded stream accelerates to the RCF quotients 1,2,1,1,4,...
  StreamEncodeResult e2 = encode_stream(farey, RcfStream::e_minus_2(), 30);
  auto steps = partial_quotients(gauss, e2.prefix.digits);
  REQUIRE(steps.size() >= 6);
  std::vector<std::size_t> lens;
  for (std::size_t i = 0; i < 6; ++i) lens.push_back(steps[i].length);
  CHECK(lens == std::vector<std::size_t>{1, 2, 1, 1, 4, 1});

  Itinerary r2 = encode_surd(farey, QuadraticSurd::parse("(-1+1*sqrt(2))/1"));
  for (const QuotientStep& q : partial_quotients(gauss, r2, 5)) {
    CHECK(q.length == 2);
    CHECK(q.terminal == 2);
  }
  Itinerary golden = encode_surd(farey, QuadraticSurd::parse("(-1+1*sqrt(5))/2"));
  for (const QuotientStep& q : partial_quotients(gauss, golden, 5)) CHECK(q.length == 1);
}

TEST_CASE("Zagier ceiling digits via the backwards map") {
  // inducing F_B on its last cell: ceiling digit = block length + 1
  Scfa back = builtin("backwards");
  JumpSpec zagier(back, 2, 2);
  Rng rng(55);
  static const Mobius recip(0, 1, 1, 0);
  for (int trial = 0; trial < 40; ++trial) {
    QuadraticSurd x = slowcf::testing::random_unit_surd(rng, 40);
    if (x.is_zero()) continue;
    Itinerary it = encode_surd(back, x);
    bool enters = false;
    for (int d : it.period()) enters = enters || d == 2;
    if (!enters) continue;
    auto steps = partial_quotients(zagier, it, 8);
    // ceiling oracle: c_k = ceil(1/y), y <- c_k - 1/y
    QuadraticSurd y = x;
    for (const QuotientStep& st : steps) {
      QuadraticSurd inv = recip(y);
      Int ceil_digit = inv.floor() + 1; // 1/y irrational, so ceil = floor + 1
      CHECK(Int(static_cast<unsigned long>(st.length + 1)) == ceil_digit);
      CHECK(st.terminal == 2);
      y = Mobius(-1, ceil_digit, 0, 1)(inv); // ceil - 1/y
    }
  }
}

TEST_CASE("property: jump words are prefix-free") {
  Rng rng(56);
  for (int trial = 0; trial < 30; ++trial) {
    Scfa s = slowcf::testing::random_scfa(rng, 6, 30);
    int n = s.branch_count();
    int lo = static_cast<int>(rng.uniform(1, n));
    int hi = static_cast<int>(rng.uniform(lo, n));
    if (lo == 1 && hi == n) continue;
    JumpSpec spec(s, lo, hi);
    auto words = jump_words(spec, 5);
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (i == j) continue;
        bool prefix = words[j].size() >= words[i].size() &&
                      std::equal(words[i].begin(), words[i].end(), words[j].begin());
        CHECK_FALSE(prefix);
      }
    }
  }
}

TEST_CASE("property: Gauss correspondence with the floor-recursion oracle") {
  Rng rng(57);
  Scfa farey = builtin("farey");
  JumpSpec gauss(farey, 2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    QuadraticSurd x = slowcf::testing::random_unit_surd(rng, 60);
    if (x.is_rational() || x.is_zero()) continue;
    Itinerary it = encode_surd(farey, x);
    auto steps = partial_quotients(gauss, it, 30);
    std::vector<Int> oracle = slowcf::testing::rcf_floor_oracle(x, 30);
    for (std::size_t k = 0; k < 30; ++k) {
      CHECK(Int(static_cast<unsigned long>(steps[k].length)) == oracle[k]);
    }
  }
}

TEST_CASE("property: blocks concatenate to the original itinerary") {
  Rng rng(58);
  for (int trial = 0; trial < 30; ++trial) {
    Scfa s = slowcf::testing::random_scfa(rng, 5, 30);
    int n = s.branch_count();
    int lo = static_cast<int>(rng.uniform(1, n));
    int hi = static_cast<int>(rng.uniform(lo, n));
    JumpSpec spec(s, lo, hi);
    Itinerary it = slowcf::testing::random_itinerary(rng, n);
    bool enters = false;
    for (int d : it.period()) enters = enters || spec.in_e(d);
    if (!enters) continue;
    auto blocks = jump_blocks(spec, it, 12);
    Word flat;
    for (const Word& b : blocks) flat.insert(flat.end(), b.begin(), b.end());
    for (std::size_t k = 0; k < flat.size(); ++k) CHECK(flat[k] == it.at(k));
  }
}

TEST_SUITE_END();
