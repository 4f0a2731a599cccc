#include <doctest.h>

#include "slowcf/sternbrocot.hpp"
#include "support/generators.hpp"

using namespace slowcf;
using slowcf::testing::Rng;

TEST_SUITE_BEGIN("transducer");

TEST_CASE("N=2 structure") {
  Transducer t = build_transducer_fn(2);
  CHECK(t.state_count() == 2);
  CHECK(t.edges().size() == 4);
  int s1 = t.state_index(0, 0);
  int sT = t.state_index(0, 1);
  CHECK(t.state_label(s1) == "1");
  CHECK(t.state_label(sT) == "T");
  // self loops at state 1 for both inputs
  CHECK(t.edge(s1, 1).to == s1);
  CHECK(t.edge(s1, 1).output == Word{1});
  CHECK(t.edge(s1, 2).to == s1);
  CHECK(t.edge(s1, 2).output == Word{2});
  // (T, h_1) -> outputs h_2, moves to 1:  T b1 = (b2 T) 1
  CHECK(t.edge(sT, 1).to == s1);
  CHECK(t.edge(sT, 1).output == Word{2});
  CHECK(t.edge(sT, 2).to == s1);
  CHECK(t.edge(sT, 2).output == Word{1});
}

TEST_CASE("N=3 is total and deterministic with 12 edges") {
  Transducer t = build_transducer_fn(3);
  CHECK(t.state_count() == 4);
  CHECK(t.edges().size() == 12);
  // totality and determinism are structural: exactly one edge per (state, input)
  for (int s = 0; s < t.state_count(); ++s) {
    for (int i = 1; i <= 3; ++i) {
      const TransducerEdge& e = t.edge(s, i);
      CHECK(e.from == s);
      CHECK(e.input == i);
      CHECK(e.to >= 0);
      CHECK(e.to < t.state_count());
    }
  }
  // epsilon-output edge from T on the last input (case e)
  CHECK(t.edge(t.state_index(0, 1), 3).output.empty());
  CHECK(t.edge(t.state_index(0, 1), 3).to == t.state_index(1, 0));
}

TEST_CASE("edges match the case-list oracle") {
  for (int n = 2; n <= 6; ++n) {
    Transducer t = build_transducer_fn(n);
    for (int s = 0; s < t.state_count(); ++s) {
      auto [k, e] = t.state_ke(s);
      for (int i = 1; i <= n; ++i) {
        CaseEdgePrediction pred = transducer_case_oracle(n, k, e, i);
        const TransducerEdge& edge = t.edge(s, i);
        CHECK(edge.to == t.state_index(pred.to_k, pred.to_e));
        if (pred.output.has_value()) CHECK(edge.output == *pred.output);
      }
    }
    CHECK(t.cycles_hit_identity_selfloop());
  }
}

TEST_CASE("edges satisfy v h_i = h_mu w as matrices") {
  for (int n = 2; n <= 5; ++n) {
    Transducer t = build_transducer_fn(n);
    Scfa f = builtin("fN:" + std::to_string(n));
    auto state_matrix = [&](int idx) {
      auto [k, e] = t.state_ke(idx);
      Mobius m = Mobius::identity();
      for (int c = 0; c < k; ++c) m = m * b1_matrix();
      if (e != 0) m = m * flip_matrix();
      return m;
    };
    for (const TransducerEdge& e : t.edges()) {
      Mobius lhs = state_matrix(e.from) * f.branch(e.input);
      Mobius rhs = Mobius::identity();
      for (int d : e.output) rhs = rhs * f.branch(d);
      rhs = rhs * state_matrix(e.to);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("runTransducer examples") {
  Transducer t = build_transducer_fn(2);
  int s1 = t.state_index(0, 0);
  int sT = t.state_index(0, 1);
  CHECK(t.run(Itinerary({}, {1}), s1) == Itinerary({}, {1}));
  CHECK(t.run(Itinerary({}, {2}), sT) == Itinerary({1}, {2}));
  CHECK(t.parse_state_label("T") == sT);
  CHECK(t.parse_state_label("1") == s1);
  Transducer t4 = build_transducer_fn(4);
  CHECK(t4.parse_state_label("b1^2 T") == t4.state_index(2, 1));
  CHECK(t4.parse_state_label("b1") == t4.state_index(1, 0));
  CHECK_THROWS_AS(t4.parse_state_label("b1^9"), DomainError);
}

TEST_CASE("property: output is tail equivalent to input from every state") {
  Rng rng(77);
  for (int n = 2; n <= 6; ++n) {
    Transducer t = build_transducer_fn(n);
    for (int trial = 0; trial < 100; ++trial) {
      Itinerary in = slowcf::testing::random_itinerary(rng, n);
      Itinerary out = t.run(in, t.state_index(0, 0));
      CHECK(tail_equivalent(in, out));
      // arbitrary start states preserve tail equivalence as well
      int start = static_cast<int>(rng.uniform(0, t.state_count() - 1));
      CHECK(tail_equivalent(in, t.run(in, start)));
    }
  }
}

TEST_CASE("transducer rewrites itineraries of v(x)") {
  // run from state T: the output should be the itinerary of T(x) = 1-x
  Scfa f2 = builtin("fN:2");
  Transducer t = build_transducer_fn(2);
  QuadraticSurd x = QuadraticSurd::parse("(-1+1*sqrt(2))/1");  // sqrt(2)-1
  QuadraticSurd tx = QuadraticSurd::parse("(2-1*sqrt(2))/1");  // 1-x
  Itinerary via_transducer = t.run(encode_surd(f2, x), t.state_index(0, 1));
  CHECK(via_transducer == encode_surd(f2, tx));
}

TEST_CASE("property: run from state v encodes v(x), for every state") {
  // every state matrix b1^k T^e maps [0,1] into [0,1], so the rewriting
  // semantics is testable exactly: run(Enc(x), v) == Enc(v(x))
  Rng rng(78);
  for (int n = 2; n <= 5; ++n) {
    Scfa fn = builtin("fN:" + std::to_string(n));
    Transducer t = build_transducer_fn(n);
    for (int trial = 0; trial < 25; ++trial) {
      QuadraticSurd x = slowcf::testing::random_unit_surd(rng, 30);
      Itinerary enc = encode_surd(fn, x);
      for (int idx = 0; idx < t.state_count(); ++idx) {
        auto [k, e] = t.state_ke(idx);
        Mobius v = Mobius::identity();
        for (int c = 0; c < k; ++c) v = v * b1_matrix();
        if (e != 0) v = v * flip_matrix();
        CHECK(t.run(enc, idx) == encode_surd(fn, v(x)));
      }
    }
  }
}

TEST_CASE("DOT export") {
  Transducer t = build_transducer_fn(2);
  std::string dot = t.to_dot();
  CHECK(dot.find("digraph transducer_f2") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"1\" [label=\"h_1 / h_1\"]") != std::string::npos);
  CHECK(dot.find("\"T\" -> \"1\" [label=\"h_2 / h_1\"]") != std::string::npos);
  // 2 node declarations + 4 edges
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++arrows;
  CHECK(arrows == 4);
  // epsilon output renders as "-"
  std::string dot3 = build_transducer_fn(3).to_dot();
  CHECK(dot3.find("/ -\"") != std::string::npos);
}

TEST_SUITE_END();
