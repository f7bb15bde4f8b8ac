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

#include "poslog/corpus.hpp"

#include <array>
#include <map>

#include "poslog/error.hpp"

namespace poslog {

PredicateSetPtr abc_predicates() {
  static const PredicateSetPtr preds = PredicateSet::make({"a", "b", "c"});
  return preds;
}

PredicateSetPtr bit_predicates() {
  static const PredicateSetPtr preds = PredicateSet::make({"p"});
  return preds;
}

namespace {

struct Abc {
  std::array<std::uint16_t, 3> bit;  // bit of a, b, c

  explicit Abc(const PredicateSet& preds) {
    if (preds.size() != 3) throw UsageError("K needs exactly the predicates a, b, c");
    const char* names[] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i) {
      auto idx = preds.index_of(names[i]);
      if (!idx) throw UsageError("K needs exactly the predicates a, b, c");
      bit[i] = static_cast<std::uint16_t>(1u << *idx);
    }
  }
  Letter single(int i) const { return Letter{bit[i]}; }
  Letter pair(int i, int j) const { return Letter{static_cast<std::uint16_t>(bit[i] | bit[j])}; }
  Letter top() const { return Letter{static_cast<std::uint16_t>(bit[0] | bit[1] | bit[2])}; }
};

// The double letters {a,b}, {b,c}, {c,a} and the six forbidden successions.
constexpr int kAB = 0, kBC = 1, kCA = 2;
constexpr std::array<std::array<int, 2>, 3> kDoubles{{{0, 1}, {1, 2}, {2, 0}}};
constexpr std::array<std::array<int, 2>, 6> kBadPairs{
    {{kAB, kAB}, {kBC, kBC}, {kCA, kCA}, {kAB, kCA}, {kBC, kAB}, {kCA, kBC}}};

Letter double_letter(const Abc& abc, int d) {
  return abc.pair(kDoubles[d][0], kDoubles[d][1]);
}

void add_all_letters(Nfa& n, State from, State to) {
  for (Letter l : all_letters(n.predicates())) n.add_transition(from, l, to);
}

// Adds ((abc)*)↑ ∪ A*⊤A* with its own initial states.
void add_K(Nfa& n, const Abc& abc) {
  State cyc[3];
  for (State& q : cyc) q = n.add_state();
  n.set_initial(cyc[0]);
  n.set_accepting(cyc[0]);
  for (int i = 0; i < 3; ++i) {
    for (Letter l : all_letters(n.predicates())) {
      if (letter_leq(abc.single(i), l)) n.add_transition(cyc[i], l, cyc[(i + 1) % 3]);
    }
  }
  State search = n.add_state(), found = n.add_state(true);
  n.set_initial(search);
  add_all_letters(n, search, search);
  add_all_letters(n, found, found);
  n.add_transition(search, abc.top(), found);
}

bool contains_all(Letter l, Letter sub) { return letter_leq(sub, l); }

}  // namespace

Nfa build_K(PredicateSetPtr preds) {
  Abc abc(*preds);
  Nfa n(preds);
  add_K(n, abc);
  return n;
}

bool in_K(const Word& w) {
  Abc abc(w.predicates());
  for (Letter l : w.letters()) {
    if (l == abc.top()) return true;
  }
  if (w.size() % 3 != 0) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!contains_all(w[i], abc.single(static_cast<int>(i % 3)))) return false;
  }
  return true;
}

Word gen_u0(std::size_t n) {
  auto preds = abc_predicates();
  Abc abc(*preds);
  Word w(preds);
  for (std::size_t i = 0; i < 3 * n; ++i) w.push_back(abc.single(static_cast<int>(i % 3)));
  return w;
}

Word gen_u1(std::size_t n) {
  auto preds = abc_predicates();
  Abc abc(*preds);
  Word w(preds);
  for (std::size_t i = 0; i < 3 * n + 2; ++i) {
    w.push_back(double_letter(abc, static_cast<int>(i % 3)));
  }
  return w;
}

Nfa build_K_between(PredicateSetPtr preds) {
  Abc abc(*preds);
  Nfa n(preds);
  add_K(n, abc);
  State search = n.add_state(), found = n.add_state(true);
  n.set_initial(search);
  add_all_letters(n, search, search);
  add_all_letters(n, found, found);
  for (const auto& pair : kBadPairs) {
    State mid = n.add_state();
    n.add_transition(search, double_letter(abc, pair[0]), mid);
    n.add_transition(mid, double_letter(abc, pair[1]), found);
  }
  return n;
}

bool in_K_between(const Word& w) {
  if (in_K(w)) return true;
  Abc abc(w.predicates());
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    for (const auto& pair : kBadPairs) {
      if (w[i] == double_letter(abc, pair[0]) && w[i + 1] == double_letter(abc, pair[1])) {
        return true;
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// The two-variable formula.
//
// Outside the "bad" words (a ⊤ letter or a forbidden pair of double
// letters), every letter is a singleton or a double letter, and consecutive
// double letters follow {a,b} → {b,c} → {c,a} → {a,b}. Such a run has two
// readings: the upper one ({a,b} as a, {b,c} as b, {c,a} as c) and the
// lower one ({a,b} as b, {b,c} as c, {c,a} as a). The word is in
// ((abc)*)↑ iff the singletons (anchors) and the runs between them can be
// read as one abc-cycle starting with a and ending with c.

namespace {

const char* kName[] = {"a", "b", "c"};

int next_of(int s) { return (s + 1) % 3; }
int prev_of(int s) { return (s + 2) % 3; }

// Double letter read as r in the upper (resp. lower) reading.
int upper_double(int r) { return r; }               // a→{a,b}, b→{b,c}, c→{c,a}
int lower_double(int r) { return (r + 2) % 3; }     // b→{a,b}, c→{b,c}, a→{c,a}

std::string single(int s, const std::string& v) {
  std::string out = "(" + std::string(kName[s]) + "(" + v + ")";
  for (int o = 0; o < 3; ++o) {
    if (o != s) out += " & !" + std::string(kName[o]) + "(" + v + ")";
  }
  return out + ")";
}

std::string any_single(const std::string& v) {
  return "(" + single(0, v) + " | " + single(1, v) + " | " + single(2, v) + ")";
}

std::string dbl(int d, const std::string& v) {
  return "(" + std::string(kName[kDoubles[d][0]]) + "(" + v + ") & " +
         kName[kDoubles[d][1]] + "(" + v + "))";
}

std::string other(const std::string& v) { return v == "x" ? "y" : "x"; }

// Letter condition at v+1 / v−1, reusing the other variable.
std::string at_next(const std::string& v, const std::string& cond_on_other) {
  std::string w = other(v);
  return "(exists " + w + ". S(" + v + "," + w + ") & " + cond_on_other + ")";
}
std::string at_prev(const std::string& v, const std::string& cond_on_other) {
  std::string w = other(v);
  return "(exists " + w + ". S(" + w + "," + v + ") & " + cond_on_other + ")";
}

std::string is_first(const std::string& v) {
  std::string w = other(v);
  return "!(exists " + w + ". " + w + "<" + v + ")";
}
std::string is_last(const std::string& v) {
  std::string w = other(v);
  return "!(exists " + w + ". " + v + "<" + w + ")";
}

// Letter at the first (resp. last) position.
std::string first_letter(int d) {
  return "(exists x. " + is_first("x") + " & " + dbl(d, "x") + ")";
}
std::string last_letter(int d) {
  return "(exists x. " + is_last("x") + " & " + dbl(d, "x") + ")";
}

const char* kSingleGuard = "(a & !b & !c) | (b & !a & !c) | (c & !a & !b)";

std::string bad() {
  std::string pairs;
  for (const auto& p : kBadPairs) {
    if (!pairs.empty()) pairs += " | ";
    pairs += "(" + dbl(p[0], "x") + " & " + dbl(p[1], "y") + ")";
  }
  return "(exists x. a(x) & b(x) & c(x)) | (exists x. exists y. S(x,y) & (" + pairs + "))";
}

// Anchors s at x and t at y, x < y, only double letters in between.
std::string compatible(int s, int t) {
  std::string alts;
  if (t == next_of(s)) alts = "S(x,y) | ";
  for (auto reading : {upper_double, lower_double}) {
    alts += "(" + at_next("x", dbl(reading(next_of(s)), "y")) + " & " +
            at_prev("y", dbl(reading(prev_of(t)), "x")) + ")";
    if (reading == upper_double) alts += " | ";
  }
  return "(forall x. forall y. !(" + single(s, "x") + " & " + single(t, "y") +
         " & x<y & !btw[" + kSingleGuard + "](x,y)) | " + alts + ")";
}

// First anchor t at y: the run before it starts with a and ends with prev(t).
std::string start(int t) {
  std::string no_anchor_before = "!(exists x. x<y & " + any_single("x") + ")";
  std::string ok = t == 0 ? is_first("y") + " | " : "";
  ok += "(" + first_letter(kAB) + " & " + at_prev("y", dbl(upper_double(prev_of(t)), "x")) +
        ") | (" + first_letter(kCA) + " & " + at_prev("y", dbl(lower_double(prev_of(t)), "x")) +
        ")";
  return "(forall y. !(" + single(t, "y") + " & " + no_anchor_before + ") | " + ok + ")";
}

// Last anchor s at x: the run after it starts with next(s) and ends with c.
std::string end(int s) {
  std::string no_anchor_after = "!(exists y. x<y & " + any_single("y") + ")";
  std::string ok = s == 2 ? is_last("x") + " | " : "";
  ok += "(" + last_letter(kCA) + " & " + at_next("x", dbl(upper_double(next_of(s)), "y")) +
        ") | (" + last_letter(kBC) + " & " + at_next("x", dbl(lower_double(next_of(s)), "y")) +
        ")";
  return "(forall x. !(" + single(s, "x") + " & " + no_anchor_after + ") | " + ok + ")";
}

std::string no_anchor() {
  return "((exists x. " + any_single("x") + ") | !(exists x. true) | (" + first_letter(kAB) +
         " & " + last_letter(kCA) + ") | (" + first_letter(kCA) + " & " + last_letter(kBC) + "))";
}

}  // namespace

Fo fo2_between_formula() {
  std::string good = "(forall x. a(x) | b(x) | c(x))";
  for (int s = 0; s < 3; ++s) {
    for (int t = 0; t < 3; ++t) good += " & " + compatible(s, t);
  }
  for (int t = 0; t < 3; ++t) good += " & " + start(t);
  for (int s = 0; s < 3; ++s) good += " & " + end(s);
  good += " & " + no_anchor();
  return parse_fo(bad() + " | (" + good + ")");
}

// ---------------------------------------------------------------------------
// Brackets

namespace {

struct BracketInfo {
  Bracket symbol;
  const char* name;
  const char* code;
};

constexpr BracketInfo kBrackets[] = {
    {Bracket::A, "a", "001"},     {Bracket::B, "b", "010"},   {Bracket::C, "c", "100"},
    {Bracket::Sep, "#", "100001"}, {Bracket::AB, "ab", "011"}, {Bracket::BC, "bc", "110"},
    {Bracket::CA, "ca", "101"},
};

const BracketInfo& info(Bracket s) { return kBrackets[static_cast<int>(s)]; }

void append_code(Word& w, std::string_view code) {
  for (char ch : code) w.push_back(Letter{static_cast<std::uint16_t>(ch == '1')});
}

std::string bits_of(const Word& w) {
  if (w.predicates().size() != 1) throw UsageError("[K] words use a single predicate");
  std::string s;
  for (Letter l : w.letters()) s += l.bits ? '1' : '0';
  return s;
}

const std::string& cycle_code() {
  static const std::string code = [] {
    std::string s;
    for (Bracket b : {Bracket::A, Bracket::Sep, Bracket::B, Bracket::Sep, Bracket::C, Bracket::Sep}) {
      s += info(b).code;
    }
    return s;
  }();
  return code;
}

}  // namespace

std::string_view bracket_code(Bracket s) { return info(s).code; }
std::string_view bracket_name(Bracket s) { return info(s).name; }

Word encode_brackets(const std::vector<Bracket>& symbols) {
  Word w(bit_predicates());
  for (Bracket s : symbols) append_code(w, info(s).code);
  return w;
}

std::vector<Bracket> parse_brackets(std::string_view text) {
  std::vector<Bracket> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '[') throw SyntaxError("expected '['", i);
    std::size_t close = text.find(']', i);
    if (close == std::string_view::npos) throw SyntaxError("missing ']'", i);
    std::string_view name = text.substr(i + 1, close - i - 1);
    bool found = false;
    for (const auto& b : kBrackets) {
      if (name == b.name) {
        out.push_back(b.symbol);
        found = true;
      }
    }
    if (!found) throw SyntaxError("unknown bracket symbol '" + std::string(name) + "'", i + 1);
    i = close + 1;
  }
  return out;
}

Nfa build_bracketK() {
  auto preds = bit_predicates();
  const Letter zero{0}, one{1};
  Nfa n(preds);
  // (([a][#][b][#][c][#])*)↑
  const std::string& code = cycle_code();
  std::vector<State> cyc;
  for (std::size_t i = 0; i < code.size(); ++i) cyc.push_back(n.add_state());
  n.set_initial(cyc[0]);
  n.set_accepting(cyc[0]);
  for (std::size_t i = 0; i < code.size(); ++i) {
    State to = cyc[(i + 1) % code.size()];
    n.add_transition(cyc[i], one, to);
    if (code[i] == '0') n.add_transition(cyc[i], zero, to);
  }
  State search = n.add_state(), found = n.add_state(true);
  n.set_initial(search);
  add_all_letters(n, search, search);
  add_all_letters(n, found, found);
  // 1 (A⁴ ∖ 0⁴) 1: track how many middle letters were read and whether one
  // of them was a 1.
  State mid[5][2];
  for (auto& row : mid) {
    row[0] = n.add_state();
    row[1] = n.add_state();
  }
  n.add_transition(search, one, mid[0][0]);
  for (int k = 0; k < 4; ++k) {
    for (int seen = 0; seen < 2; ++seen) {
      n.add_transition(mid[k][seen], zero, mid[k + 1][seen]);
      n.add_transition(mid[k][seen], one, mid[k + 1][1]);
    }
  }
  n.add_transition(mid[4][1], one, found);
  // 1⁵
  State run = search;
  for (int k = 0; k < 4; ++k) {
    State next = n.add_state();
    n.add_transition(run, one, next);
    run = next;
  }
  n.add_transition(run, one, found);
  return n;
}

bool in_bracketK(const Word& w) {
  const std::string s = bits_of(w);
  if (s.find("11111") != std::string::npos) return true;
  for (std::size_t i = 0; i + 6 <= s.size(); ++i) {
    if (s[i] == '1' && s[i + 5] == '1' && s.substr(i + 1, 4) != "0000") return true;
  }
  const std::string& code = cycle_code();
  if (s.size() % code.size() != 0) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (code[i % code.size()] == '1' && s[i] != '1') return false;
  }
  return true;
}

Word gen_bracket_u0(std::size_t n) {
  std::vector<Bracket> seq;
  for (std::size_t i = 0; i < n; ++i) {
    seq.insert(seq.end(), {Bracket::A, Bracket::Sep, Bracket::B, Bracket::Sep, Bracket::C,
                           Bracket::Sep});
  }
  return encode_brackets(seq);
}

Word gen_bracket_u1(std::size_t n) {
  std::vector<Bracket> seq;
  for (std::size_t i = 0; i < n; ++i) {
    seq.insert(seq.end(), {Bracket::AB, Bracket::Sep, Bracket::BC, Bracket::Sep, Bracket::CA,
                           Bracket::Sep});
  }
  seq.insert(seq.end(), {Bracket::AB, Bracket::Sep});
  return encode_brackets(seq);
}

}  // namespace poslog
