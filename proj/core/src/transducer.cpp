#include "slowcf/sternbrocot.hpp"

#include <array>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace slowcf {

int Transducer::state_index(int k, int e) const {
  if (k < 0 || k > n_ - 2 || e < 0 || e > 1) throw std::invalid_argument("bad transducer state");
  return k + (n_ - 1) * e;
}

std::pair<int, int> Transducer::state_ke(int idx) const {
  if (idx < 0 || idx >= state_count()) throw std::invalid_argument("bad transducer state index");
  return {idx % (n_ - 1), idx / (n_ - 1)};
}

std::string Transducer::state_label(int idx) const {
  auto [k, e] = state_ke(idx);
  if (k == 0) return e ? "T" : "1";
  std::string out = "b1^" + std::to_string(k);
  if (e) out += " T";
  return out;
}

int Transducer::parse_state_label(std::string_view label) const {
  std::string s;
  for (char ch : label) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  int e = 0;
  if (!s.empty() && s.back() == 'T') {
    e = 1;
    s.pop_back();
  }
  int k = 0;
  if (s == "1" || s.empty()) {
    k = 0;
  } else if (s == "b1") {
    k = 1;
  } else if (s.rfind("b1^", 0) == 0) {
    try {
      k = std::stoi(s.substr(3));
    } catch (...) {
      throw DomainError(ErrorKind::ParseError, "bad transducer state \"" + std::string(label) + "\"");
    }
  } else {
    throw DomainError(ErrorKind::ParseError, "bad transducer state \"" + std::string(label) + "\"");
  }
  if (k < 0 || k > n_ - 2) {
    throw DomainError(ErrorKind::ParseError, "state exponent out of range for N=" + std::to_string(n_));
  }
  return state_index(k, e);
}

const TransducerEdge& Transducer::edge(int state, int input) const {
  if (state < 0 || state >= state_count() || input < 1 || input > n_) {
    throw std::invalid_argument("transducer edge lookup out of range");
  }
  return table_[static_cast<std::size_t>(state * n_ + (input - 1))];
}

std::vector<TransducerEdge> Transducer::edges() const { return table_; }

Itinerary Transducer::run(const Itinerary& input, int start_state) const {
  if (start_state < 0 || start_state >= state_count()) {
    throw std::invalid_argument("bad transducer start state");
  }
  for (int d : input.preperiod()) {
    if (d > n_) throw std::invalid_argument("input digit outside transducer alphabet");
  }
  for (int d : input.period()) {
    if (d > n_) throw std::invalid_argument("input digit outside transducer alphabet");
  }
  int state = start_state;
  Word out;
  for (int d : input.preperiod()) {
    const TransducerEdge& e = edge(state, d);
    out.insert(out.end(), e.output.begin(), e.output.end());
    state = e.to;
  }
  const Word& per = input.period();
  std::map<std::pair<int, std::size_t>, std::size_t> seen; // (state, phase) -> emitted count
  std::size_t phase = 0;
  while (true) {
    auto [slot, inserted] = seen.emplace(std::make_pair(state, phase), out.size());
    if (!inserted) {
      std::size_t j = slot->second;
      Word pre(out.begin(), out.begin() + static_cast<long>(j));
      Word cyc(out.begin() + static_cast<long>(j), out.end());
      if (cyc.empty()) throw std::logic_error("transducer cycle produced no output");
      return Itinerary(std::move(pre), std::move(cyc));
    }
    const TransducerEdge& e = edge(state, per[phase]);
    out.insert(out.end(), e.output.begin(), e.output.end());
    state = e.to;
    phase = (phase + 1) % per.size();
  }
}

bool Transducer::cycles_hit_identity_selfloop() const {
  std::vector<bool> anchored(static_cast<std::size_t>(state_count()), false);
  for (int s = 0; s < state_count(); ++s) {
    for (int i = 1; i <= n_; ++i) {
      const TransducerEdge& e = edge(s, i);
      if (e.to == s && e.output == Word{i}) {
        anchored[static_cast<std::size_t>(s)] = true;
        break;
      }
    }
  }
  // the subgraph on non-anchored states must be acyclic
  enum Color { White, Gray, Black };
  std::vector<Color> color(static_cast<std::size_t>(state_count()), White);
  std::function<bool(int)> has_cycle = [&](int s) -> bool {
    color[static_cast<std::size_t>(s)] = Gray;
    for (int i = 1; i <= n_; ++i) {
      int t = edge(s, i).to;
      if (anchored[static_cast<std::size_t>(t)]) continue;
      if (color[static_cast<std::size_t>(t)] == Gray) return true;
      if (color[static_cast<std::size_t>(t)] == White && has_cycle(t)) return true;
    }
    color[static_cast<std::size_t>(s)] = Black;
    return false;
  };
  for (int s = 0; s < state_count(); ++s) {
    if (!anchored[static_cast<std::size_t>(s)] && color[static_cast<std::size_t>(s)] == White) {
      if (has_cycle(s)) return false;
    }
  }
  return true;
}

namespace {

std::string output_label(const Word& w) {
  if (w.empty()) return "-";
  bool wide = false;
  for (int d : w) wide = wide || d > 9;
  std::string s = "h_";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0 && wide) s.push_back(',');
    s += std::to_string(w[i]);
  }
  return s;
}

} // namespace

std::string Transducer::to_dot() const {
  std::string out = "digraph transducer_f" + std::to_string(n_) + " {\n  rankdir=LR;\n";
  for (int s = 0; s < state_count(); ++s) {
    out += "  \"" + state_label(s) + "\";\n";
  }
  for (int s = 0; s < state_count(); ++s) {
    for (int i = 1; i <= n_; ++i) {
      const TransducerEdge& e = edge(s, i);
      out += "  \"" + state_label(s) + "\" -> \"" + state_label(e.to) + "\" [label=\"h_" +
             std::to_string(i) + " / " + output_label(e.output) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

CaseEdgePrediction transducer_case_oracle(int n, int k, int e, int input) {
  if (input < 1 || input > n || k < 0 || k > n - 2 || (e != 0 && e != 1)) {
    throw std::invalid_argument("transducer_case_oracle argument out of range");
  }
  if (e == 0) {
    if (input == 1) return {'a', k, 0, Word{1}};             // self loop on h_1
    if (k == 0) return {'b', 0, 0, Word{input}};             // self loop at 1
    return {'b', 0, 0, std::nullopt};                        // output unspecified
  }
  if (input == 1) return {'c', n - 2, 0, Word{n - k}};
  if (input < n) return {'d', 0, 0, Word{n - k, input + 1}};
  if (k != n - 2) return {'e', k + 1, 0, Word{}};            // epsilon output
  return {'f', 0, 0, Word{1}};
}

Transducer build_transducer_fn(int n) {
  if (n < 2) throw std::invalid_argument("the F_N family needs N >= 2");
  Scfa f = builtin("fN:" + std::to_string(n));

  Transducer t(n);
  t.table_.resize(static_cast<std::size_t>(t.state_count() * n),
                  TransducerEdge{0, 0, {}, 0});

  auto state_matrix = [&](int k, int e) {
    Mobius m = Mobius::identity();
    for (int c = 0; c < k; ++c) m = m * b1_matrix();
    if (e != 0) m = m * flip_matrix();
    return m;
  };

  using Key = std::array<Int, 4>;
  auto key_of = [](const Mobius& m) { return Key{m.a(), m.b(), m.c(), m.d()}; };

  // Enumerate the branch monoid {h_mu} breadth-first, shortest word per
  // matrix, pruned by output length and entry size.
  const std::size_t max_len = 2 * static_cast<std::size_t>(n);
  const Int entry_bound = Int(4) * n * n;
  auto within_bound = [&](const Mobius& m) {
    return abs(m.a()) <= entry_bound && abs(m.b()) <= entry_bound &&
           abs(m.c()) <= entry_bound && abs(m.d()) <= entry_bound;
  };
  std::map<Key, Word> monoid;
  std::deque<std::pair<Mobius, Word>> queue;
  monoid.emplace(key_of(Mobius::identity()), Word{});
  queue.emplace_back(Mobius::identity(), Word{});
  while (!queue.empty()) {
    auto [m, w] = queue.front();
    queue.pop_front();
    if (w.size() >= max_len) continue;
    for (int i = 1; i <= n; ++i) {
      Mobius next = m * f.branch(i);
      if (!within_bound(next)) continue;
      Word nw = w;
      nw.push_back(i);
      if (monoid.emplace(key_of(next), nw).second) queue.emplace_back(next, nw);
    }
  }

  std::vector<Mobius> state_mats;
  std::vector<Mobius> state_invs;
  for (int idx = 0; idx < t.state_count(); ++idx) {
    auto [k, e] = t.state_ke(idx);
    state_mats.push_back(state_matrix(k, e));
    state_invs.push_back(state_mats.back().inverse());
  }

  for (int idx = 0; idx < t.state_count(); ++idx) {
    auto [k, e] = t.state_ke(idx);
    for (int i = 1; i <= n; ++i) {
      Mobius x = state_mats[static_cast<std::size_t>(idx)] * f.branch(i);
      // solve v h_i = h_mu w over all candidate targets w
      int hits = 0;
      TransducerEdge found{idx, i, {}, -1};
      for (int widx = 0; widx < t.state_count(); ++widx) {
        Mobius y = x * state_invs[static_cast<std::size_t>(widx)];
        auto slot = monoid.find(key_of(y));
        if (slot == monoid.end()) continue;
        ++hits;
        found.output = slot->second;
        found.to = widx;
      }
      if (hits == 0) {
        throw DomainError(ErrorKind::SearchExhausted,
                          "no output word of length <= " + std::to_string(max_len) +
                              " realizes state " + t.state_label(idx) + " on input h_" +
                              std::to_string(i));
      }
      if (hits > 1) {
        throw std::logic_error("transducer edge is not unique at state " + t.state_label(idx));
      }
      // cross-check against the case-list oracle
      CaseEdgePrediction pred = transducer_case_oracle(n, k, e, i);
      if (found.to != t.state_index(pred.to_k, pred.to_e) ||
          (pred.output.has_value() && *pred.output != found.output)) {
        throw std::logic_error("transducer edge disagrees with the case-list oracle at state " +
                               t.state_label(idx) + ", input h_" + std::to_string(i));
      }
      t.table_[static_cast<std::size_t>(idx * n + (i - 1))] = std::move(found);
    }
  }

  if (!t.cycles_hit_identity_selfloop()) {
    throw std::logic_error("transducer has a cycle avoiding identity self loops");
  }
  return t;
}

} // namespace slowcf
