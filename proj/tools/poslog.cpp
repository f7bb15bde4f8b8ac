// Copyright 2026 The poslog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// poslog: command-line front end. Exit codes: 0 success or property holds,
// 1 property fails (a witness is printed), 2 usage, syntax or resource error.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "poslog/algebra.hpp"
#include "poslog/automata.hpp"
#include "poslog/corpus.hpp"
#include "poslog/error.hpp"
#include "poslog/formulas.hpp"
#include "poslog/games.hpp"
#include "poslog/polynomial.hpp"
#include "poslog/semantics.hpp"
#include "poslog/translate.hpp"
#include "poslog/words.hpp"

namespace {

using namespace poslog;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

struct Limits {
  std::size_t max_states = kDefaultStateCap;
  std::uint64_t max_words = kDefaultWordCap;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Predicate names written inside the braces of a word.
void collect_word_preds(std::string_view text, std::set<std::string>& out) {
  std::size_t i = 0;
  while ((i = text.find('{', i)) != std::string_view::npos) {
    std::size_t close = text.find('}', i);
    if (close == std::string_view::npos) return;
    auto letter = PredicateSet::parse(text.substr(i + 1, close - i - 1));
    out.insert(letter->names().begin(), letter->names().end());
    i = close + 1;
  }
}

PredicateSetPtr choose_preds(const std::string& given, const std::set<std::string>& used) {
  if (!given.empty()) return PredicateSet::parse(given);
  return PredicateSet::make(std::vector<std::string>(used.begin(), used.end()));
}

Signature parse_signature(const std::string& name) {
  if (name == "b0") return Signature::b0();
  if (name == "less") return Signature::less();
  if (name == "succ") return Signature::succ();
  if (name == "all") return Signature::all();
  throw UsageError("unknown signature '" + name + "' (b0, less, succ, all)");
}

// A language given as an automaton file or a formula.
struct LanguageInput {
  std::string dfa, nfa, fo, tl, preds;

  void add_to(CLI::App* app) {
    app->add_option("--dfa", dfa, "DFA file ('-' for stdin)");
    app->add_option("--nfa", nfa, "NFA file ('-' for stdin)");
    app->add_option("--fo", fo, "FO sentence");
    app->add_option("--tl", tl, "temporal formula");
    app->add_option("--preds", preds, "predicate set, e.g. a,b");
  }

  bool given() const { return !dfa.empty() || !nfa.empty() || !fo.empty() || !tl.empty(); }

  Dfa load(const Limits& lim) const {
    int count = !dfa.empty() + !nfa.empty() + !fo.empty() + !tl.empty();
    if (count != 1) throw UsageError("give exactly one of --dfa, --nfa, --fo, --tl");
    if (!dfa.empty()) return parse_dfa(read_file(dfa));
    if (!nfa.empty()) return minimize(determinize(parse_nfa(read_file(nfa)), lim.max_states));
    PredicateSetPtr p = preds.empty() ? nullptr : PredicateSet::parse(preds);
    if (!fo.empty()) return compile_fo(parse_fo(fo), p, lim.max_states);
    return compile_tl(parse_tl(tl), p, lim.max_states);
  }
};

void print_witness(const MonotonicityResult& r) {
  std::cout << "  u = '" << render_word(*r.u) << "' (in L)\n"
            << "  v = '" << render_word(*r.v) << "' (not in L), u <= v\n";
}

// --- eval -------------------------------------------------------------------

struct EvalCmd {
  std::string word, fo, tl, preds;
  std::vector<std::string> vals;
  std::optional<std::size_t> at;

  void setup(CLI::App* app) {
    app->add_option("--word", word, "word, e.g. {a}{a,b}{}")->required();
    app->add_option("--fo", fo, "FO formula");
    app->add_option("--tl", tl, "temporal formula");
    app->add_option("--preds", preds, "predicate set (default: names used)");
    app->add_option("--val", vals, "variable assignment x=i (FO)");
    app->add_option("--at", at, "evaluate a temporal formula at this position");
  }

  int run() const {
    if (fo.empty() == tl.empty()) throw UsageError("give exactly one of --fo, --tl");
    std::set<std::string> used;
    collect_word_preds(word, used);
    std::optional<Fo> f;
    std::optional<Tl> t;
    if (!fo.empty()) {
      f = parse_fo(fo);
      used.merge(predicates_of(*f));
    } else {
      t = parse_tl(tl);
      used.merge(predicates_of(*t));
    }
    Word w = parse_word(word, choose_preds(preds, used));
    bool value;
    if (f) {
      Valuation nu;
      for (const auto& v : vals) {
        auto eq = v.find('=');
        if (eq == std::string::npos) throw UsageError("--val expects x=i");
        nu[v.substr(0, eq)] = std::stoul(v.substr(eq + 1));
      }
      value = eval_fo(w, nu, *f);
    } else {
      value = at ? eval_tl_at(w, *at, *t) : eval_ltl(w, *t);
    }
    std::cout << (value ? "true" : "false") << '\n';
    return value ? kHolds : kFails;
  }
};

// --- classify ----------------------------------------------------------------

struct ClassifyCmd {
  std::string fo, tl, fragment, signature = "all";

  void setup(CLI::App* app) {
    app->add_option("--fo", fo, "FO formula");
    app->add_option("--tl", tl, "temporal formula");
    app->add_option("--fragment", fragment, "check one fragment (fo2+, ltl+, sigma2+, ...)");
    app->add_option("--signature", signature, "binary predicates allowed: b0, less, succ, all");
  }

  int run() const {
    if (fo.empty() == tl.empty()) throw UsageError("give exactly one of --fo, --tl");
    const Signature sig = parse_signature(signature);
    std::optional<Fo> f;
    std::optional<Tl> t;
    if (!fo.empty()) f = parse_fo(fo); else t = parse_tl(tl);
    auto check = [&](FragmentId id) { return f ? classify(*f, id, sig) : classify(*t, id); };
    if (!fragment.empty()) {
      FragmentId id = parse_fragment(fragment);
      if (is_fo_fragment(id) != f.has_value()) {
        throw UsageError("fragment '" + fragment + "' does not apply to this logic");
      }
      bool in = check(id);
      std::cout << fragment_name(id) << ": " << (in ? "true" : "false") << '\n';
      return in ? kHolds : kFails;
    }
    if (f) {
      std::cout << "positive: " << (is_positive(*f) ? "true" : "false") << '\n'
                << "variables: " << distinct_vars(*f) << '\n'
                << "quantifier rank: " << quantifier_rank(*f) << '\n';
    } else {
      std::cout << "positive: " << (is_positive(*t) ? "true" : "false") << '\n';
    }
    for (int i = 0; i <= static_cast<int>(FragmentId::UTLplus_PFHG); ++i) {
      auto id = static_cast<FragmentId>(i);
      if (is_fo_fragment(id) != f.has_value()) continue;
      std::cout << fragment_name(id) << ": " << (check(id) ? "true" : "false") << '\n';
    }
    return kHolds;
  }
};

// --- translate ---------------------------------------------------------------

struct TranslateCmd {
  std::string from, to, formula, preds;

  void setup(CLI::App* app) {
    app->add_option("--from", from, "ltl+, utl+, tl, fo2+, fo2+<, poly")->required();
    app->add_option("--to", to, "fo3+, fo2+, fo3, utl+, sigma2+, sigma2-, pi2+")->required();
    app->add_option("formula", formula, "input formula or polynomial expression")->required();
    app->add_option("--preds", preds, "predicate set of a polynomial expression");
  }

  int run() const {
    if (from == "ltl+" && to == "fo3+") return print(render(ltlp_to_fo3p(parse_tl(formula))));
    if (from == "utl+" && to == "fo2+") {
      Tl t = parse_tl(formula);
      if (!classify(t, FragmentId::UTLplus)) throw UsageError("input is not in UTL+");
      return print(render(utlp_to_fo2p(t)));
    }
    if (from == "tl" && to == "fo3") return print(render(tl_to_fo(parse_tl(formula))));
    if (from == "fo2+" && to == "utl+") return print(render(fo2p_to_utlp(parse_fo(formula))));
    if (from == "fo2+<" && to == "utl+") {
      return print(render(fo2p_less_to_utlp(parse_fo(formula, Signature::less()))));
    }
    if (from == "poly") {
      if (preds.empty()) throw UsageError("--preds is required for polynomial expressions");
      PolynomialExpr p = parse_polynomial(formula, PredicateSet::parse(preds));
      if (to == "sigma2+") return print(render(sigma2p_upward_closure(p)));
      if (to == "sigma2-") return print(render(sigma2m_downward_closure(p)));
      if (to == "pi2+") return print(render(pi2p_dual_closure(p)));
    }
    throw UsageError("unsupported translation " + from + " -> " + to);
  }

  static int print(const std::string& s) {
    std::cout << s << '\n';
    return kHolds;
  }
};

// --- compile -----------------------------------------------------------------

struct CompileCmd {
  std::string fo, tl, preds;

  void setup(CLI::App* app) {
    app->add_option("--fo", fo, "FO sentence");
    app->add_option("--tl", tl, "temporal formula");
    app->add_option("--preds", preds, "predicate set (default: names used)");
  }

  int run(const Limits& lim) const {
    LanguageInput in;
    in.fo = fo;
    in.tl = tl;
    in.preds = preds;
    if (fo.empty() == tl.empty()) throw UsageError("give exactly one of --fo, --tl");
    std::cout << render_automaton(in.load(lim));
    return kHolds;
  }
};

// --- equiv -------------------------------------------------------------------

struct EquivCmd {
  std::string lhs, rhs, logic = "tl", preds;
  std::size_t max_len = 4;
  bool nonempty = false;

  void setup(CLI::App* app) {
    app->add_option("lhs", lhs, "formula; prefix fo: or tl: to override --logic")->required();
    app->add_option("rhs", rhs, "formula; prefix fo: or tl: to override --logic")->required();
    app->add_option("--logic", logic, "default logic of both sides: fo or tl");
    app->add_option("--max-len", max_len, "longest word checked");
    app->add_option("--preds", preds, "predicate set (default: names used)");
    app->add_flag("--nonempty", nonempty, "skip the empty word");
  }

  struct Side {
    std::optional<Fo> fo;
    std::optional<Tl> tl;
  };

  Side parse_side(const std::string& text) const {
    std::string kind = logic, body = text;
    if (text.rfind("fo:", 0) == 0 || text.rfind("tl:", 0) == 0) {
      kind = text.substr(0, 2);
      body = text.substr(3);
    }
    Side s;
    if (kind == "fo") {
      s.fo = parse_fo(body);
      if (!free_variables(*s.fo).empty()) throw UsageError("FO side must be a sentence");
    } else if (kind == "tl") {
      s.tl = parse_tl(body);
    } else {
      throw UsageError("--logic must be fo or tl");
    }
    return s;
  }

  static WordChecker checker(const Side& s) {
    if (s.fo) return [f = *s.fo](const Word& w) { return eval_fo(w, {}, f); };
    return [t = *s.tl](const Word& w) { return eval_ltl(w, t); };
  }

  int run(const Limits& lim) const {
    Side a = parse_side(lhs), b = parse_side(rhs);
    std::set<std::string> used;
    for (const Side* s : {&a, &b}) used.merge(s->fo ? predicates_of(*s->fo) : predicates_of(*s->tl));
    auto r = equiv_bruteforce(checker(a), checker(b), choose_preds(preds, used), max_len,
                              nonempty, lim.max_words);
    if (r.equivalent) {
      std::cout << "equivalent on all words of length <= " << max_len << " (" << r.words_checked
                << " words)\n";
      return kHolds;
    }
    std::cout << "not equivalent: counterexample '" << render_word(*r.counterexample) << "'\n";
    return kFails;
  }
};

// --- monotone ----------------------------------------------------------------

struct MonotoneCmd {
  LanguageInput in;
  std::string monoid_file;
  std::string via = "both";

  void setup(CLI::App* app) {
    in.add_to(app);
    app->add_option("--monoid", monoid_file, "monoid file (implies --via monoid)");
    app->add_option("--via", via, "monoid, automata or both")
        ->check(CLI::IsMember({"monoid", "automata", "both"}));
  }

  int run(const Limits& lim) const {
    if (!monoid_file.empty()) {
      if (in.given()) throw UsageError("give either --monoid or a language, not both");
      auto r = is_monotone_monoid(parse_monoid(read_file(monoid_file)));
      std::cout << "monotone: " << (r.monotone ? "true" : "false") << '\n';
      if (!r.monotone) print_witness(r);
      return r.monotone ? kHolds : kFails;
    }
    Dfa d = in.load(lim);
    std::optional<MonotonicityResult> by_automaton, by_monoid;
    if (via != "monoid") by_automaton = is_monotone_automaton(d);
    if (via != "automata") by_monoid = is_monotone_monoid(syntactic_monoid(d));
    if (by_automaton && by_monoid) {
      if (by_automaton->monotone != by_monoid->monotone) {
        std::cout << "monotone: deciders disagree (automata " << by_automaton->monotone
                  << ", monoid " << by_monoid->monotone << ")\n";
        return kFails;
      }
      std::cout << "monotone: " << (by_automaton->monotone ? "true" : "false") << " (agree)\n";
      if (!by_automaton->monotone) {
        std::cout << "automata witness:\n";
        print_witness(*by_automaton);
        std::cout << "monoid witness:\n";
        print_witness(*by_monoid);
      }
      return by_automaton->monotone ? kHolds : kFails;
    }
    const MonotonicityResult& r = by_automaton ? *by_automaton : *by_monoid;
    std::cout << "monotone: " << (r.monotone ? "true" : "false") << '\n';
    if (!r.monotone) print_witness(r);
    return r.monotone ? kHolds : kFails;
  }
};

// --- closure -----------------------------------------------------------------

struct ClosureCmd {
  LanguageInput in;
  bool up = false, down = false, dual = false;

  void setup(CLI::App* app) {
    in.add_to(app);
    app->add_flag("--up", up, "upward closure L↑");
    app->add_flag("--down", down, "downward closure L↓");
    app->add_flag("--dual", dual, "dual closure ((L^c)↓)^c");
  }

  int run(const Limits& lim) const {
    if (up + down + dual != 1) throw UsageError("give exactly one of --up, --down, --dual");
    Dfa d = in.load(lim);
    Dfa out = up     ? upward_closure_dfa(d, lim.max_states)
              : down ? minimize(determinize(downward_closure(d.to_nfa()), lim.max_states))
                     : dual_closure(d, lim.max_states);
    std::cout << render_automaton(out);
    return kHolds;
  }
};

// --- monoid ------------------------------------------------------------------

struct MonoidCmd {
  LanguageInput in;
  std::string monoid_file;
  bool transition = false;
  std::size_t max_elements = kDefaultMonoidCap;

  void setup(CLI::App* app, bool build) {
    in.add_to(app);
    if (!build) app->add_option("--monoid", monoid_file, "monoid file");
    if (build) app->add_flag("--transition", transition, "transition monoid of the DFA as given");
    app->add_option("--max-elements", max_elements, "monoid element cap");
  }

  FiniteMonoid load(const Limits& lim) const {
    if (!monoid_file.empty()) {
      if (in.given()) throw UsageError("give either --monoid or a language, not both");
      return parse_monoid(read_file(monoid_file));
    }
    Dfa d = in.load(lim);
    return transition ? transition_monoid(d, max_elements) : syntactic_monoid(d, max_elements);
  }

  int build(const Limits& lim) const {
    std::cout << render_monoid(load(lim));
    return kHolds;
  }

  int order(const Limits& lim) const {
    FiniteMonoid m = load(lim);
    SyntacticOrder o = syntactic_order(m);
    for (Element a = 0; a < m.size(); ++a) {
      for (Element b = 0; b < m.size(); ++b) {
        if (a != b && o.leq(a, b)) std::cout << a << " <= " << b << '\n';
      }
    }
    return kHolds;
  }

  int print(const Limits& lim) const {
    FiniteMonoid m = load(lim);
    std::cout << "elements: " << m.size() << "\nidentity: " << m.identity() << '\n';
    for (Element e = 0; e < m.size(); ++e) {
      const auto& rep = m.representatives()[e];
      std::cout << e << (m.accepting(e) ? " accepting" : "") << " rep '"
                << (rep ? render_word(*rep) : std::string("(unreachable)")) << "'\n";
    }
    for (Letter l : all_letters(m.predicates())) {
      std::cout << "h(" << render_letter(l, m.predicates()) << ") = " << m.image(l) << '\n';
    }
    return kHolds;
  }
};

// --- ef ----------------------------------------------------------------------

struct EfCmd {
  std::string u0, u1, preds, signature = "b0", role = "spoiler";
  std::size_t k = 1, n = 1;
  bool trace = false;

  void setup(CLI::App* app, bool play) {
    app->add_option("--u0", u0, "first word (unary predicates transfer u0 -> u1)")->required();
    app->add_option("--u1", u1, "second word")->required();
    app->add_option("-k,--rounds", k, "rounds");
    app->add_option("-n,--tokens", n, "tokens");
    app->add_option("--preds", preds, "predicate set (default: names used)");
    app->add_option("--signature", signature, "b0, less or succ");
    if (play) {
      app->add_option("--role", role, "your role")->check(CLI::IsMember({"spoiler", "duplicator"}));
    } else {
      app->add_flag("--trace", trace, "print the principal line of play");
    }
  }

  GameConfig config(const Limits& lim) const {
    std::set<std::string> used;
    collect_word_preds(u0, used);
    collect_word_preds(u1, used);
    auto p = choose_preds(preds, used);
    return GameConfig{parse_word(u0, p), parse_word(u1, p), k, n, parse_signature(signature),
                      std::nullopt, lim.max_states};
  }

  int solve(const Limits& lim) const {
    GameConfig c = config(lim);
    GameResult r = ef_winner(c);
    std::cout << player_name(r.winner) << '\n';
    if (trace) std::cout << render_trace(c, r.trace);
    return kHolds;
  }

  int play(const Limits& lim) const {
    GameConfig c = config(lim);
    EfSolver solver(c);
    const bool human_spoiler = role == "spoiler";
    std::cout << "predicted winner: " << player_name(solver.winner()) << '\n';
    if (!solver.legal(solver.initial())) {
      std::cout << "Spoiler wins\n";
      return kHolds;
    }
    GameState state = solver.initial();
    for (std::size_t left = k; left > 0; --left) {
      std::cout << "round " << k - left + 1 << " of " << k << '\n';
      Move m;
      if (human_spoiler) {
        std::cout << "your move (word 0|1, token 1.." << n << ", position): " << std::flush;
        std::size_t token = 0;
        if (!(std::cin >> m.side >> token >> m.position)) return kHolds;
        const Word& w = m.side == 0 ? c.u0 : c.u1;
        if ((m.side != 0 && m.side != 1) || token < 1 || token > n || m.position >= w.size()) {
          throw UsageError("illegal move");
        }
        m.token = token - 1;
      } else {
        auto best = solver.spoiler_move(state, left);
        m = best ? *best : Move{c.u0.empty() ? 1 : 0, 0, 0};
        std::cout << "Spoiler: token " << m.token + 1 << " on u" << m.side << '[' << m.position
                  << "]\n";
      }
      std::optional<std::size_t> reply;
      if (human_spoiler) {
        reply = solver.duplicator_reply(state, left, m);
        if (!reply) {
          std::cout << "Duplicator has no legal reply\nSpoiler wins\n";
          return kHolds;
        }
        std::cout << "Duplicator: u" << 1 - m.side << '[' << *reply << "]\n";
      } else {
        std::cout << "your reply (position on u" << 1 - m.side << "): " << std::flush;
        std::size_t pos = 0;
        if (!(std::cin >> pos)) return kHolds;
        GameState next = solver.apply(state, m, pos);
        const Word& other = m.side == 0 ? c.u1 : c.u0;
        if (pos >= other.size() || !solver.legal(next)) {
          std::cout << "illegal reply\nSpoiler wins\n";
          return kHolds;
        }
        reply = pos;
      }
      state = solver.apply(state, m, *reply);
    }
    std::cout << "Duplicator wins\n";
    return kHolds;
  }
};

// --- corpus ------------------------------------------------------------------

struct CorpusCmd {
  std::string what;
  std::size_t n = 1;

  void setup(CLI::App* app) {
    app->add_option("what", what, "K, K-between, K-between-formula, bracketK, u0, u1, bu0, bu1")
        ->required();
    app->add_option("n", n, "repetitions for witness words");
  }

  // Automata are printed as minimal DFAs so they feed straight into --dfa.
  static Dfa minimal(const Nfa& n) { return minimize(determinize(n)); }

  int run() const {
    if (what == "K") std::cout << render_automaton(minimal(build_K()));
    else if (what == "K-between") std::cout << render_automaton(minimal(build_K_between()));
    else if (what == "K-between-formula") std::cout << render(fo2_between_formula()) << '\n';
    else if (what == "bracketK") std::cout << render_automaton(minimal(build_bracketK()));
    else if (what == "u0") std::cout << render_word(gen_u0(n)) << '\n';
    else if (what == "u1") std::cout << render_word(gen_u1(n)) << '\n';
    else if (what == "bu0") std::cout << render_word_binary(gen_bracket_u0(n)) << '\n';
    else if (what == "bu1") std::cout << render_word_binary(gen_bracket_u1(n)) << '\n';
    else throw UsageError("unknown corpus item '" + what + "'");
    return kHolds;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive logics on words: evaluation, translation, automata, monoids, games"};
  app.require_subcommand(1);
  Limits lim;
  app.add_option("--max-states", lim.max_states, "state cap for automata and games");
  app.add_option("--max-words", lim.max_words, "word cap for brute-force checks");

  EvalCmd eval;
  ClassifyCmd classify_cmd;
  TranslateCmd translate;
  CompileCmd compile;
  EquivCmd equiv;
  MonotoneCmd monotone;
  ClosureCmd closure;
  MonoidCmd monoid_build, monoid_order, monoid_print;
  EfCmd ef_solve, ef_play;
  CorpusCmd corpus;

  auto* eval_app = app.add_subcommand("eval", "evaluate a formula on a word");
  eval.setup(eval_app);
  auto* classify_app = app.add_subcommand("classify", "fragment membership of a formula");
  classify_cmd.setup(classify_app);
  auto* translate_app = app.add_subcommand("translate", "translate between logics");
  translate.setup(translate_app);
  auto* compile_app = app.add_subcommand("compile", "compile a formula to a minimal DFA");
  compile.setup(compile_app);
  auto* equiv_app = app.add_subcommand("equiv", "brute-force equivalence on short words");
  equiv.setup(equiv_app);
  auto* monotone_app = app.add_subcommand("monotone", "decide monotonicity");
  monotone.setup(monotone_app);
  auto* closure_app = app.add_subcommand("closure", "closure automata");
  closure.setup(closure_app);

  auto* monoid_app = app.add_subcommand("monoid", "syntactic monoids");
  monoid_app->require_subcommand(1);
  auto* mbuild = monoid_app->add_subcommand("build", "print the syntactic monoid");
  monoid_build.setup(mbuild, true);
  auto* morder = monoid_app->add_subcommand("order", "print the syntactic order");
  monoid_order.setup(morder, false);
  auto* mprint = monoid_app->add_subcommand("print", "summarize a monoid");
  monoid_print.setup(mprint, false);

  auto* ef_app = app.add_subcommand("ef", "Ehrenfeucht-Fraisse games for positive logic");
  ef_app->require_subcommand(1);
  auto* esolve = ef_app->add_subcommand("solve", "compute the winner");
  ef_solve.setup(esolve, false);
  auto* eplay = ef_app->add_subcommand("play", "play against the computed strategy");
  ef_play.setup(eplay, true);

  auto* corpus_app = app.add_subcommand("corpus", "counter-example languages and words");
  corpus_app->require_subcommand(1);
  auto* emit = corpus_app->add_subcommand("emit", "print a corpus item");
  corpus.setup(emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kHolds : kError;
  }

  try {
    if (eval_app->parsed()) return eval.run();
    if (classify_app->parsed()) return classify_cmd.run();
    if (translate_app->parsed()) return translate.run();
    if (compile_app->parsed()) return compile.run(lim);
    if (equiv_app->parsed()) return equiv.run(lim);
    if (monotone_app->parsed()) return monotone.run(lim);
    if (closure_app->parsed()) return closure.run(lim);
    if (mbuild->parsed()) return monoid_build.build(lim);
    if (morder->parsed()) return monoid_order.order(lim);
    if (mprint->parsed()) return monoid_print.print(lim);
    if (esolve->parsed()) return ef_solve.solve(lim);
    if (eplay->parsed()) return ef_play.play(lim);
    if (emit->parsed()) return corpus.run();
  } catch (const poslog::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
