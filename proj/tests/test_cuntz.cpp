#include <doctest.h>

#include "slowcf/cuntz.hpp"
#include "slowcf/sternbrocot.hpp"
#include "slowcf/jump.hpp"
#include "support/generators.hpp"

using namespace slowcf;
using slowcf::testing::Rng;

namespace {
CuntzMonomial S(std::initializer_list<int> w) { return CuntzMonomial::isometry(2, Word(w)); }
CuntzMonomial Sst(std::initializer_list<int> w) { return CuntzMonomial::co_isometry(2, Word(w)); }

CuntzMonomial random_monomial(Rng& rng, int alphabet) {
  auto word = [&](long maxlen) {
    Word w;
    long len = rng.uniform(0, maxlen);
    for (long i = 0; i < len; ++i) w.push_back(static_cast<int>(rng.uniform(1, alphabet)));
    return w;
  };
  if (rng.uniform(0, 9) == 0) return CuntzMonomial::zero(alphabet);
  int flip = (alphabet == 2 && rng.coin()) ? 1 : 0;
  return CuntzMonomial::make(alphabet, word(4), word(4), flip);
}

// psi letter words over the O_2 alphabet: L -> 1, R -> 2
std::vector<Word> psi_letter_words(const Scfa& s) {
  std::vector<Word> out;
  for (const BWord& b : psi_embedding(s)) {
    Word w;
    for (char ch : b.letters) w.push_back(ch == 'L' ? 1 : 2);
    out.push_back(std::move(w));
  }
  return out;
}
} // namespace

TEST_SUITE_BEGIN("cuntz");

TEST_CASE("multiply examples") {
  // middle cancellation
  CHECK(CuntzMonomial::make(2, {1}, {2}, 0) * CuntzMonomial::make(2, {2}, {1}, 0) ==
        CuntzMonomial::make(2, {1}, {1}, 0));
  // orthogonality
  CHECK((CuntzMonomial::make(2, {1}, {2}, 0) * CuntzMonomial::make(2, {1}, {2}, 0)).is_zero());
  // U S_1 = S_2 U
  CuntzMonomial U = CuntzMonomial::flip_unitary();
  CHECK(U * S({1}) == CuntzMonomial::make(2, {2}, {}, 1));
  CHECK(U * S({1}) == S({2}) * U);
  // S_i* S_j = delta_ij
  CHECK((Sst({1}) * S({2})).is_zero());
  CHECK(Sst({1}) * S({1}) == CuntzMonomial::one(2));
  // prefix cancellation both ways
  CHECK(Sst({1}) * S({1, 2}) == S({2}));
  CHECK(Sst({1, 2}) * S({1}) == Sst({2}));
}

TEST_CASE("alphabet rules") {
  CHECK_THROWS_AS(CuntzMonomial::isometry(3, {1}) * CuntzMonomial::isometry(2, {1}), DomainError);
  CHECK_THROWS_AS(CuntzMonomial::make(3, {1}, {}, 1), DomainError);
  CHECK_THROWS_AS(CuntzMonomial::isometry(2, {3}), std::invalid_argument);
  CHECK(CuntzMonomial::zero(2) * S({1}) == CuntzMonomial::zero(2));
}

TEST_CASE("adjoint and flip involution") {
  CuntzMonomial m = CuntzMonomial::make(2, {1, 2}, {2}, 1);
  CHECK(m.adjoint().adjoint() == m);
  CHECK(theta(theta(m)) == m);
  // U is self adjoint and U^2 = 1
  CuntzMonomial U = CuntzMonomial::flip_unitary();
  CHECK(U.adjoint() == U);
  CHECK(U * U == CuntzMonomial::one(2));
  // adjoint is an anti-homomorphism on random pairs
  Rng rng(91);
  for (int t = 0; t < 200; ++t) {
    CuntzMonomial a = random_monomial(rng, 2);
    CuntzMonomial b = random_monomial(rng, 2);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
  }
}

TEST_CASE("property: associativity and projections") {
  Rng rng(92);
  for (int t = 0; t < 1000; ++t) {
    int alphabet = rng.coin() ? 2 : 3;
    CuntzMonomial a = random_monomial(rng, alphabet);
    CuntzMonomial b = random_monomial(rng, alphabet);
    CuntzMonomial c = random_monomial(rng, alphabet);
    CHECK((a * b) * c == a * (b * c));
  }
  for (int t = 0; t < 100; ++t) {
    Word w;
    long len = rng.uniform(0, 5);
    for (long i = 0; i < len; ++i) w.push_back(static_cast<int>(rng.uniform(1, 2)));
    CuntzMonomial p = CuntzMonomial::make(2, w, w, 0); // S_w S_w^*
    CHECK(p * p == p);
    CHECK(p.adjoint() == p);
  }
}

TEST_CASE("complete families resolve every basis word exactly once") {
  // a complete prefix code acts as a partition of unity on basis words:
  // each length-8 word has exactly one family member as a prefix
  std::vector<std::vector<Word>> families = {
      {{1}, {2}},
      {{1, 1}, {1, 2}, {2}},                 // psi words of F_E mapped to O_2
      {{1, 1, 1}, {1, 1, 2}, {1, 2}, {2}}};  // psi words of F_4
  for (const auto& family : families) {
    for (int mask = 0; mask < 256; ++mask) {
      Word u;
      for (int bit = 0; bit < 8; ++bit) u.push_back(((mask >> bit) & 1) + 1);
      int hits = 0;
      for (const Word& w : family) {
        if (w.size() <= u.size() && std::equal(w.begin(), w.end(), u.begin())) ++hits;
      }
      CHECK(hits == 1);
      // and symbolically: sum of S_w S_w^* fixes e_u with one surviving term
      int surviving = 0;
      for (const Word& w : family) {
        CuntzMonomial term = CuntzMonomial::make(2, w, w, 0) * CuntzMonomial::isometry(2, u);
        if (!term.is_zero()) {
          ++surviving;
          CHECK(term == CuntzMonomial::isometry(2, u));
        }
      }
      CHECK(surviving == 1);
    }
  }
}

TEST_CASE("verifyIsometryFamily examples") {
  // psi words of F_E = {LL, LR, R}
  auto fe = verify_isometry_family(psi_letter_words(builtin("even")), 2);
  CHECK(fe.prefix_free);
  CHECK(fe.complete());
  CHECK(fe.kraft == Rational(1));

  // phi words of (F_R, last cell) truncated at length 10
  JumpSpec gauss(builtin("farey"), 2, 2);
  auto phi = verify_isometry_family(jump_words(gauss, 10), 2, 10);
  CHECK(phi.prefix_free);
  CHECK(phi.completeness == IsometryFamilyReport::Completeness::Asymptotic);
  CHECK(Rational(1) - phi.kraft == Rational(1, Int(1) << 10));

  auto bad = verify_isometry_family({{1}, {1, 2}}, 2);
  CHECK_FALSE(bad.prefix_free);
  CHECK(bad.violation_i == 0);
  CHECK(bad.violation_j == 1);

  // genuinely incomplete family is not certified asymptotic
  auto inc = verify_isometry_family({{1, 1}, {2}}, 2, 10);
  CHECK(inc.completeness == IsometryFamilyReport::Completeness::Incomplete);
}

TEST_CASE("psi embedding satisfies the Cuntz relations symbolically") {
  for (const char* name : {"farey", "backwards", "even", "odd"}) {
    Scfa s = builtin(name);
    std::vector<CuntzMonomial> images;
    auto bwords = psi_embedding(s);
    for (const BWord& b : bwords) {
      Word w;
      for (char ch : b.letters) w.push_back(ch == 'L' ? 1 : 2);
      images.push_back(CuntzMonomial::make(2, w, {}, b.flip));
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = 0; j < images.size(); ++j) {
        CuntzMonomial prod = images[j].adjoint() * images[i];
        if (i == j) {
          CHECK(prod == CuntzMonomial::one(2));
        } else {
          CHECK(prod.is_zero());
        }
      }
    }
  }
}

TEST_CASE("classify examples") {
  RepresentationLabel zero = classify(builtin("fN:3"), QuadraticSurd(Rational(0)));
  CHECK(zero.atoms == Atoms::finite(1));
  CHECK(zero.eigenword == Word{1});

  RepresentationLabel r2 = classify(builtin("fN:2"), QuadraticSurd::parse("(-1+1*sqrt(2))/1"));
  CHECK(r2.atoms == Atoms::finite(2));
  CHECK(r2.eigenword == Word{1, 2}); // least rotation of {1,2}/{2,1}

  RepresentationLabel e2 = classify(builtin("fN:2"), RcfStream::e_minus_2(), 26);
  CHECK(e2.atoms.omega);
  CHECK_FALSE(e2.eigenword.has_value());
  CHECK(e2.number == "e-2");
}

TEST_CASE("label JSON is byte-stable") {
  RepresentationLabel r2 = classify(builtin("fN:2"), QuadraticSurd::parse("(-1+1*sqrt(2))/1"));
  CHECK(label_to_json(r2) ==
        R"({"scfa":"fN:2","number":"(-1+1*sqrt(2))/1","itinerary":{"pre":[],"per":[1,2]},"atoms":2,"eigenword":[1,2]})");
  CHECK(label_to_json(r2) == label_to_json(r2));

  RepresentationLabel e2 = classify(builtin("fN:2"), RcfStream::e_minus_2(), 5);
  CHECK(label_to_json(e2) ==
        R"({"scfa":"fN:2","number":"e-2","itinerary":{"prefix":[2,1,2,2,2]},"atoms":"omega"})");
}

TEST_CASE("equivalentReps examples") {
  Scfa f2 = builtin("fN:2");
  QuadraticSurd r2 = QuadraticSurd::parse("(-1+1*sqrt(2))/1");
  QuadraticSurd tr2 = QuadraticSurd::parse("(2-1*sqrt(2))/1");
  QuadraticSurd golden = QuadraticSurd::parse("(-1+1*sqrt(5))/2");

  CHECK(equivalent_reps(f2, r2, tr2).is_true());
  CHECK(equivalent_reps(f2, r2, golden).value == Ternary::False);
  CHECK(equivalent_reps(builtin("fN:3"), QuadraticSurd(Rational(1, 3)),
                        QuadraticSurd(Rational(5, 7)))
            .is_true());
  // rational vs irrational is never equivalent
  CHECK(equivalent_reps(f2, QuadraticSurd(Rational(1, 3)), golden).value == Ternary::False);
  CHECK_THROWS_AS(equivalent_reps(builtin("backwards"), r2, golden), DomainError);
}

TEST_CASE("equivalentReps with stream inputs is horizon-bounded") {
  Scfa f2 = builtin("fN:2");
  EquivResult same = equivalent_reps(f2, RcfStream::e_minus_2(), RcfStream::e_minus_2(), 48);
  CHECK(same.value == Ternary::Unknown);
  CHECK_FALSE(same.exact);
  EquivResult diff = equivalent_reps(f2, RcfStream::e_minus_2(),
                                     QuadraticSurd::parse("(-1+1*sqrt(5))/2"), 48);
  CHECK(diff.value == Ternary::False);
  CHECK_FALSE(diff.exact);
  CHECK(diff.str() == "false (horizon 48)");
}

TEST_CASE("tail equivalence as a plain relation on any SCFA") {
  Scfa back = builtin("backwards");
  QuadraticSurd zero{Rational(0)}, one{Rational(1)}, half{Rational(1, 2)};
  // 0 has tail 1,1,1,... and 1 has tail 2,2,2,... under the backwards map
  CHECK(tail_equivalence(back, zero, one).value == Ternary::False);
  // 1/2 owns two itineraries; one of them shares 1's tail
  CHECK(tail_equivalence(back, half, one).is_true());
  CHECK(tail_equivalence(back, half, zero).is_true());
  // under F_N it coincides with equivalent_reps
  Scfa f3 = builtin("fN:3");
  QuadraticSurd r2 = QuadraticSurd::parse("(-1+1*sqrt(2))/1");
  QuadraticSurd golden = QuadraticSurd::parse("(-1+1*sqrt(5))/2");
  CHECK(tail_equivalence(f3, r2, golden).value == equivalent_reps(f3, r2, golden).value);
  CHECK(tail_equivalence(f3, zero, half).value == equivalent_reps(f3, zero, half).value);
}

TEST_CASE("property: classify o decode is tail consistent") {
  Rng rng(93);
  Scfa f3 = builtin("fN:3");
  for (int t = 0; t < 60; ++t) {
    Itinerary it = slowcf::testing::random_itinerary(rng, 3);
    QuadraticSurd x = decode(f3, it);
    RepresentationLabel label = classify(f3, x);
    REQUIRE(std::holds_alternative<Itinerary>(label.itinerary));
    CHECK(tail_equivalent(std::get<Itinerary>(label.itinerary), it));
  }
}

TEST_CASE("property: equivalentReps(x, M x) holds for branch words") {
  Rng rng(94);
  for (int n : {2, 3, 4}) {
    Scfa fn = builtin("fN:" + std::to_string(n));
    for (int t = 0; t < 34; ++t) {
      QuadraticSurd x = slowcf::testing::random_unit_surd(rng, 50);
      Mobius m = Mobius::identity();
      long len = rng.uniform(1, 6);
      for (long i = 0; i < len; ++i) {
        m = m * fn.branch(static_cast<int>(rng.uniform(1, n)));
      }
      QuadraticSurd y = m(x); // branch words map [0,1] into [0,1]
      CHECK(equivalent_reps(fn, x, y).is_true());
    }
  }
}

TEST_SUITE_END();
