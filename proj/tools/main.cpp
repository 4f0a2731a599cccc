// slowcf: exact slow-continued-fraction toolkit.
//
// Verbs: validate, itinerary, decode, equiv, classify, jump, embed-psi,
// embed-phi, transducer, render. Exit codes: 0 success, 1 usage error,
// 2 domain error (the error name is printed verbatim).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "slowcf/cuntz.hpp"
#include "slowcf/jump.hpp"
#include "slowcf/scfa.hpp"
#include "slowcf/sternbrocot.hpp"
#include "slowcf/symbolic.hpp"
#include "render.hpp"

using namespace slowcf;
using ordered_json = nlohmann::ordered_json;

namespace {

Scfa load_scfa(const std::string& selector) {
  try {
    return builtin(selector);
  } catch (const DomainError& e) {
    if (e.kind() != ErrorKind::UnknownName) throw;
  }
  if (std::filesystem::exists(selector)) {
    std::ifstream in(selector);
    std::stringstream buf;
    buf << in.rdbuf();
    return scfa_from_json(buf.str());
  }
  throw DomainError(ErrorKind::UnknownName,
                    "\"" + selector + "\" is neither a builtin name nor a spec file");
}

NumberSource parse_number(const std::string& text) {
  if (text == "e-2") return RcfStream::e_minus_2();
  return QuadraticSurd::parse(text);
}

ordered_json itinerary_json(const Itinerary& it) {
  ordered_json j;
  j["pre"] = it.preperiod();
  j["per"] = it.period();
  return j;
}

void emit(std::ostream& os, const ordered_json& j) { os << j.dump() << "\n"; }

std::pair<int, int> parse_cells(const std::string& text) {
  std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

// enough stream digits to cover `count` jump blocks
Word stream_digits_for_blocks(const Scfa& s, const RcfStream& src, const JumpSpec& spec,
                              std::size_t count) {
  std::size_t horizon = 8 * count + 8;
  for (int rounds = 0; rounds < 8; ++rounds) {
    Word digits = encode_stream(s, src, horizon).prefix.digits;
    if (jump_blocks(spec, digits).size() >= count) return digits;
    horizon *= 2;
  }
  throw DomainError(ErrorKind::NotInDomain, "stream produced too few jump blocks");
}

struct Options {
  std::string scfa, number, x, y, itinerary, format = "text", cells, run, start = "1", output;
  int n = 2, width = 640, height = 480;
  std::size_t count = 32, horizon = 64, maxlen = 12;
  bool quotients = false, tails_only = false;
};

int run_validate(const Options& o) {
  Scfa s = load_scfa(o.scfa);
  if (o.format == "json") {
    ordered_json j;
    j["valid"] = true;
    j["n"] = s.branch_count();
    j["partition"] = ordered_json::array();
    for (int i = 1; i <= s.branch_count(); ++i) {
      j["partition"].push_back({s.cell(i).lo().str(), s.cell(i).hi().str()});
    }
    j["signs"] = ordered_json::array();
    for (int i = 1; i <= s.branch_count(); ++i) j["signs"].push_back(s.sign(i));
    emit(std::cout, j);
  } else {
    std::cout << "valid, N=" << s.branch_count() << "\n";
  }
  return 0;
}

int run_itinerary(const Options& o) {
  Scfa s = load_scfa(o.scfa);
  NumberSource src = parse_number(o.number);
  if (std::holds_alternative<RcfStream>(src)) {
    StreamEncodeResult r = encode_stream(s, std::get<RcfStream>(src), o.count);
    if (o.format == "json") {
      ordered_json j;
      j["prefix"] = r.prefix.digits;
      emit(std::cout, j);
    } else {
      std::cout << r.prefix.str() << "\n";
    }
    return 0;
  }
  const QuadraticSurd& v = std::get<QuadraticSurd>(src);
  std::vector<Itinerary> its;
  if (v.is_rational()) {
    its = encode_rational(s, v.to_rational());
  } else {
    its.push_back(encode_surd(s, v));
  }
  if (o.format == "json") {
    ordered_json j;
    j["itineraries"] = ordered_json::array();
    for (const Itinerary& it : its) j["itineraries"].push_back(itinerary_json(it));
    emit(std::cout, j);
  } else {
    for (const Itinerary& it : its) std::cout << it.str() << "\n";
  }
  return 0;
}

int run_decode(const Options& o) {
  Scfa s = load_scfa(o.scfa);
  QuadraticSurd x = decode(s, Itinerary::parse(o.itinerary));
  if (o.format == "json") {
    ordered_json j;
    j["number"] = x.str();
    emit(std::cout, j);
  } else {
    std::cout << x.str() << "\n";
  }
  return 0;
}

int run_equiv(const Options& o) {
  Scfa s = load_scfa(o.scfa);
  EquivResult r = o.tails_only
                      ? tail_equivalence(s, parse_number(o.x), parse_number(o.y), o.horizon)
                      : equivalent_reps(s, parse_number(o.x), parse_number(o.y), o.horizon);
  // ~_F on its own is not a PGL2(Z) decision outside the F_N family
  bool relation_only = o.tails_only && !s.is_fn_family();
  if (o.format == "json") {
    ordered_json j;
    const char* key = relation_only ? "tail_equivalent" : "equivalent";
    switch (r.value) {
      case Ternary::True: j[key] = true; break;
      case Ternary::False: j[key] = false; break;
      case Ternary::Unknown: j[key] = "unknown"; break;
    }
    if (relation_only) j["relation"] = "~_F, not PGL2(Z)";
    j["exact"] = r.exact;
    if (!r.exact) j["horizon"] = r.horizon;
    emit(std::cout, j);
  } else {
    std::string text = r.exact ? (r.value == Ternary::True ? "true" : "false") : r.str();
    if (relation_only) text += " (~_F under " + s.name() + ", not PGL2(Z))";
    std::cout << text << "\n";
  }
  return 0;
}

int run_classify(const Options& o) {
  Scfa s = load_scfa(o.scfa);
  RepresentationLabel label = classify(s, parse_number(o.number), o.count);
  if (o.format == "json") {
    std::cout << label_to_json(label) << "\n";
    return 0;
  }
  std::cout << "scfa: " << label.scfa_name << "\n";
  std::cout << "number: " << label.number << "\n";
  if (std::holds_alternative<Itinerary>(label.itinerary)) {
    std::cout << "itinerary: " << std::get<Itinerary>(label.itinerary).str() << "\n";
  } else {
    std::cout << "itinerary: " << std::get<StreamPrefix>(label.itinerary).str() << "\n";
  }
  std::cout << "atoms: " << label.atoms.str() << "\n";
  if (label.eigenword.has_value()) {
    std::cout << "eigenword: " << word_str(*label.eigenword) << "\n";
  }
  return 0;
}

int run_jump(const Options& o) {
  Scfa s = load_scfa(o.scfa);
  auto [lo, hi] = parse_cells(o.cells);
  JumpSpec spec(s, lo, hi);
  NumberSource src = parse_number(o.number);

  std::vector<Word> blocks;
  if (std::holds_alternative<RcfStream>(src)) {
    Word digits = stream_digits_for_blocks(s, std::get<RcfStream>(src), spec, o.count);
    blocks = jump_blocks(spec, digits);
    blocks.resize(std::min(blocks.size(), o.count));
  } else {
    const QuadraticSurd& v = std::get<QuadraticSurd>(src);
    Itinerary it = v.is_rational() ? encode_rational(s, v.to_rational()).front()
                                   : encode_surd(s, v);
    blocks = jump_blocks(spec, it, o.count);
  }

  bool single_cell = (lo == hi);
  if (o.format == "json") {
    ordered_json j;
    if (o.quotients) {
      j["quotients"] = ordered_json::array();
      for (const Word& b : blocks) {
        if (single_cell) {
          j["quotients"].push_back(b.size());
        } else {
          j["quotients"].push_back({b.size(), b.back()});
        }
      }
    } else {
      j["blocks"] = blocks;
    }
    emit(std::cout, j);
  } else if (o.quotients) {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i != 0) out += ",";
      out += single_cell ? std::to_string(blocks[i].size())
                         : "(" + std::to_string(blocks[i].size()) + "," +
                               std::to_string(blocks[i].back()) + ")";
    }
    std::cout << out << "\n";
  } else {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i != 0) std::cout << " ";
      std::cout << "[" << word_str(blocks[i]) << "]";
    }
    std::cout << "\n";
  }
  return 0;
}

int run_embed_psi(const Options& o) {
  Scfa s = load_scfa(o.scfa);
  std::vector<BWord> words = psi_embedding(s);
  std::vector<std::string> letters;
  for (const BWord& b : words) letters.push_back(b.letters);
  PrefixCodeResult code = prefix_code_check(letters);
  if (o.format == "json") {
    ordered_json j;
    j["words"] = ordered_json::array();
    for (const BWord& b : words) {
      ordered_json w;
      w["letters"] = b.letters;
      w["flip"] = b.flip;
      j["words"].push_back(w);
    }
    j["prefix_code"] = code.complete() ? "complete" : "incomplete";
    emit(std::cout, j);
  } else {
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::cout << (i + 1) << ": " << words[i].str() << "\n";
    }
    std::cout << "prefix code: " << (code.complete() ? "complete" : "incomplete") << "\n";
  }
  return 0;
}

int run_embed_phi(const Options& o) {
  Scfa s = load_scfa(o.scfa);
  auto [lo, hi] = parse_cells(o.cells);
  JumpSpec spec(s, lo, hi);
  std::vector<Word> words = jump_words(spec, o.maxlen);
  IsometryFamilyReport rep = verify_isometry_family(words, s.branch_count(), o.maxlen);
  const char* completeness = rep.complete() ? "complete"
                             : rep.completeness == IsometryFamilyReport::Completeness::Asymptotic
                                 ? "asymptotic"
                                 : "incomplete";
  if (o.format == "json") {
    ordered_json j;
    j["words"] = words;
    j["prefix_free"] = rep.prefix_free;
    j["kraft"] = rep.kraft.str();
    j["completeness"] = completeness;
    emit(std::cout, j);
  } else {
    for (const Word& w : words) std::cout << word_str(w) << "\n";
    std::cout << "prefix_free: " << (rep.prefix_free ? "true" : "false")
              << ", kraft: " << rep.kraft.str() << ", completeness: " << completeness << "\n";
  }
  return 0;
}

int run_transducer(const Options& o) {
  Transducer t = build_transducer_fn(o.n);
  if (!o.run.empty()) {
    Itinerary input = Itinerary::parse(o.run);
    Itinerary out = t.run(input, t.parse_state_label(o.start));
    if (o.format == "json") {
      emit(std::cout, itinerary_json(out));
    } else {
      std::cout << out.str() << "\n";
    }
    return 0;
  }
  if (o.format == "dot") {
    std::cout << t.to_dot();
    return 0;
  }
  if (o.format == "json") {
    ordered_json j;
    j["n"] = t.n();
    j["states"] = ordered_json::array();
    for (int s = 0; s < t.state_count(); ++s) j["states"].push_back(t.state_label(s));
    j["edges"] = ordered_json::array();
    for (const TransducerEdge& e : t.edges()) {
      ordered_json je;
      je["from"] = t.state_label(e.from);
      je["input"] = e.input;
      je["output"] = e.output;
      je["to"] = t.state_label(e.to);
      j["edges"].push_back(je);
    }
    emit(std::cout, j);
    return 0;
  }
  std::cout << "F_" << t.n() << " transducer: " << t.state_count() << " states, "
            << t.edges().size() << " edges\n";
  for (const TransducerEdge& e : t.edges()) {
    std::cout << "  " << t.state_label(e.from) << " --h_" << e.input << "/"
              << (e.output.empty() ? "-" : word_str(e.output)) << "--> " << t.state_label(e.to)
              << "\n";
  }
  return 0;
}

int run_render(const Options& o) {
  Scfa s = load_scfa(o.scfa);
  std::string svg = render_scfa(s, o.width, o.height);
  if (!o.output.empty()) {
    std::ofstream out(o.output);
    out << svg;
  } else {
    std::cout << svg;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact slow continued fraction algorithms: itineraries, equivalence, transducers"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    std::string desc = "output format (";
    for (std::size_t i = 0; i < allowed.size(); ++i) {
      if (i != 0) desc += "|";
      desc += allowed[i];
    }
    desc += ")";
    cmd->add_option("--format", o.format, desc)->check(CLI::IsMember(allowed));
  };

  CLI::App* validate = app.add_subcommand("validate", "validate an SCFA (builtin or spec file)");
  validate->add_option("--scfa", o.scfa, "builtin name or spec file path")->required();
  add_format(validate, {"text", "json"});

  CLI::App* itinerary = app.add_subcommand("itinerary", "encode a number's itinerary");
  itinerary->add_option("--scfa", o.scfa)->required();
  itinerary->add_option("--number", o.number, "p/q, (a+b*sqrt(d))/c, or e-2")->required();
  itinerary->add_option("--count", o.count, "stream digits to emit");
  add_format(itinerary, {"text", "json"});

  CLI::App* decode_cmd = app.add_subcommand("decode", "decode an eventually periodic itinerary");
  decode_cmd->add_option("--scfa", o.scfa)->required();
  decode_cmd->add_option("--itinerary", o.itinerary, "e.g. \"pre:1,2 per:1\"")->required();
  add_format(decode_cmd, {"text", "json"});

  CLI::App* equiv = app.add_subcommand("equiv", "decide PGL2(Z)-equivalence over F_N");
  equiv->add_option("--scfa", o.scfa)->required();
  equiv->add_option("--x", o.x)->required();
  equiv->add_option("--y", o.y)->required();
  equiv->add_option("--horizon", o.horizon, "digit horizon for stream inputs");
  equiv->add_flag("--tails-only", o.tails_only,
                  "compare itinerary tails (~_F) under any SCFA; "
                  "not a PGL2(Z) decision outside the F_N family");
  add_format(equiv, {"text", "json"});

  CLI::App* classify_cmd = app.add_subcommand("classify", "label the associated representation");
  classify_cmd->add_option("--scfa", o.scfa)->required();
  classify_cmd->add_option("--number", o.number)->required();
  classify_cmd->add_option("--count", o.count, "stream digits to examine");
  add_format(classify_cmd, {"text", "json"});

  CLI::App* jump = app.add_subcommand("jump", "jump-transformation blocks and quotients");
  jump->add_option("--scfa", o.scfa)->required();
  jump->add_option("--cells", o.cells, "inducing cells, e.g. 2..2 or 2..3")->required();
  jump->add_option("--number", o.number)->required();
  jump->add_option("--count", o.count, "blocks to emit");
  jump->add_flag("--quotients", o.quotients, "print block lengths instead of blocks");
  add_format(jump, {"text", "json"});

  CLI::App* psi = app.add_subcommand("embed-psi", "Stern-Brocot factorization of the branches");
  psi->add_option("--scfa", o.scfa)->required();
  add_format(psi, {"text", "json"});

  CLI::App* phi = app.add_subcommand("embed-phi", "jump-embedding generator words");
  phi->add_option("--scfa", o.scfa)->required();
  phi->add_option("--cells", o.cells)->required();
  phi->add_option("--maxlen", o.maxlen, "word length bound");
  add_format(phi, {"text", "json"});

  CLI::App* trans = app.add_subcommand("transducer", "build or run the F_N Serret transducer");
  trans->add_option("--n", o.n, "family index N >= 2")->required();
  trans->add_option("--run", o.run, "itinerary to rewrite, e.g. \"per:2\"");
  trans->add_option("--start", o.start, "start state label (1, T, b1^k, b1^k T)");
  add_format(trans, {"text", "json", "dot"});

  CLI::App* render = app.add_subcommand("render", "SVG plot of the forward map");
  render->add_option("--scfa", o.scfa)->required();
  render->add_option("--width", o.width);
  render->add_option("--height", o.height);
  render->add_option("--output", o.output, "write to file instead of stdout");
  add_format(render, {"svg"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1; // usage errors exit 1; --help exits 0
  }

  try {
    if (validate->parsed()) return run_validate(o);
    if (itinerary->parsed()) return run_itinerary(o);
    if (decode_cmd->parsed()) return run_decode(o);
    if (equiv->parsed()) return run_equiv(o);
    if (classify_cmd->parsed()) return run_classify(o);
    if (jump->parsed()) return run_jump(o);
    if (psi->parsed()) return run_embed_psi(o);
    if (phi->parsed()) return run_embed_phi(o);
    if (trans->parsed()) return run_transducer(o);
    if (render->parsed()) return run_render(o);
  } catch (const DomainError& e) {
    if (e.kind() == ErrorKind::ParseError) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 1;
    }
    std::cerr << e.display() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
