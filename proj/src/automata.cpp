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

#include "poslog/automata.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "poslog/error.hpp"
#include "poslog/semantics.hpp"
#include "poslog/translate.hpp"

namespace poslog {

// ---------------------------------------------------------------------------
// Nfa

Nfa::Nfa(PredicateSetPtr preds, std::size_t states)
    : preds_(std::move(preds)), accepting_(states, false), edges_(states) {
  if (!preds_) throw UsageError("automaton without predicate set");
}

std::size_t Nfa::num_transitions() const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

void Nfa::check(State q) const {
  if (q >= edges_.size()) {
    throw UsageError("state " + std::to_string(q) + " out of range");
  }
}

State Nfa::add_state(bool accepting) {
  edges_.emplace_back();
  accepting_.push_back(accepting);
  return static_cast<State>(edges_.size() - 1);
}

void Nfa::set_initial(State q) {
  check(q);
  if (std::find(initial_.begin(), initial_.end(), q) == initial_.end()) {
    initial_.push_back(q);
  }
}

void Nfa::set_accepting(State q, bool value) {
  check(q);
  accepting_[q] = value;
}

void Nfa::add_transition(State from, Letter letter, State to) {
  check(from);
  check(to);
  if (letter.bits >= preds_->alphabet_size()) {
    throw UsageError("letter outside the alphabet");
  }
  auto& out = edges_[from];
  for (const Edge& e : out) {
    if (e.letter == letter && e.to == to) return;
  }
  out.push_back({letter, to});
}

bool Nfa::accepts(const Word& w) const {
  if (!(w.predicates() == *preds_)) {
    throw UsageError("word and automaton use different predicate sets");
  }
  std::vector<bool> cur(num_states(), false);
  for (State q : initial_) cur[q] = true;
  for (Letter a : w.letters()) {
    std::vector<bool> nxt(num_states(), false);
    for (State q = 0; q < num_states(); ++q) {
      if (!cur[q]) continue;
      for (const Edge& e : edges_[q]) {
        if (e.letter == a) nxt[e.to] = true;
      }
    }
    cur.swap(nxt);
  }
  for (State q = 0; q < num_states(); ++q) {
    if (cur[q] && accepting_[q]) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(PredicateSetPtr preds, std::size_t states, State initial)
    : preds_(std::move(preds)),
      alphabet_(preds_ ? preds_->alphabet_size() : 0),
      initial_(initial),
      accepting_(states, false),
      delta_(states * alphabet_, 0) {
  if (!preds_) throw UsageError("automaton without predicate set");
  if (states == 0) throw UsageError("a complete DFA needs at least one state");
  if (initial >= states) throw UsageError("initial state out of range");
}

State Dfa::run(const Word& w) const {
  if (!(w.predicates() == *preds_)) {
    throw UsageError("word and automaton use different predicate sets");
  }
  State q = initial_;
  for (Letter a : w.letters()) q = next(q, a);
  return q;
}

Nfa Dfa::to_nfa() const {
  Nfa n(preds_, num_states());
  n.set_initial(initial_);
  for (State q = 0; q < num_states(); ++q) {
    n.set_accepting(q, accepting_[q]);
    for (std::size_t a = 0; a < alphabet_; ++a) {
      n.add_transition(q, Letter{static_cast<std::uint16_t>(a)},
                       delta_[q * alphabet_ + a]);
    }
  }
  return n;
}

bool operator==(const Dfa& a, const Dfa& b) {
  return *a.preds_ == *b.preds_ && a.initial_ == b.initial_ &&
         a.accepting_ == b.accepting_ && a.delta_ == b.delta_;
}

// ---------------------------------------------------------------------------
// Subset construction and minimization

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<State>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (State s : v) h = (h ^ s) * 0x100000001b3ull;
    return h;
  }
};

void check_cap(std::size_t states, std::size_t cap) {
  if (states > cap) {
    throw ResourceError("automaton exceeds the state cap of " +
                        std::to_string(cap));
  }
}

Letter letter_of(std::size_t bits) {
  return Letter{static_cast<std::uint16_t>(bits)};
}

}  // namespace

Dfa determinize(const Nfa& n, std::size_t max_states) {
  const std::size_t alpha = n.predicates().alphabet_size();
  std::unordered_map<std::vector<State>, State, VectorHash> index;
  std::vector<std::vector<State>> sets;
  std::vector<State> delta;

  auto intern = [&](std::vector<State> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto [it, fresh] = index.try_emplace(s, static_cast<State>(sets.size()));
    if (fresh) {
      sets.push_back(std::move(s));
      check_cap(sets.size(), max_states);
    }
    return it->second;
  };

  intern(n.initial());
  std::vector<std::vector<State>> buckets(alpha);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto& b : buckets) b.clear();
    for (State q : sets[i]) {
      for (const auto& e : n.edges(q)) buckets[e.letter.bits].push_back(e.to);
    }
    for (std::size_t a = 0; a < alpha; ++a) delta.push_back(intern(buckets[a]));
  }

  Dfa d(n.predicates_ptr(), sets.size(), 0);
  for (State s = 0; s < sets.size(); ++s) {
    bool acc = std::any_of(sets[s].begin(), sets[s].end(),
                           [&](State q) { return n.accepting(q); });
    d.set_accepting(s, acc);
    for (std::size_t a = 0; a < alpha; ++a) {
      d.set_transition(s, letter_of(a), delta[s * alpha + a]);
    }
  }
  return d;
}

Dfa minimize(const Dfa& d) {
  const std::size_t alpha = d.alphabet_size();

  // Reachable states.
  std::vector<State> reach{d.initial()};
  std::vector<bool> seen(d.num_states(), false);
  seen[d.initial()] = true;
  for (std::size_t i = 0; i < reach.size(); ++i) {
    for (std::size_t a = 0; a < alpha; ++a) {
      State t = d.next(reach[i], letter_of(a));
      if (!seen[t]) {
        seen[t] = true;
        reach.push_back(t);
      }
    }
  }

  // Moore refinement on the reachable part.
  std::vector<State> cls(d.num_states(), 0);
  std::size_t count = 0;
  {
    bool any_acc = false, any_rej = false;
    for (State q : reach) (d.accepting(q) ? any_acc : any_rej) = true;
    for (State q : reach) cls[q] = (any_acc && any_rej && d.accepting(q)) ? 1 : 0;
    count = (any_acc && any_rej) ? 2 : 1;
  }
  std::vector<State> sig(alpha + 1);
  while (true) {
    std::unordered_map<std::vector<State>, State, VectorHash> ids;
    std::vector<State> next_cls(d.num_states(), 0);
    for (State q : reach) {
      sig[0] = cls[q];
      for (std::size_t a = 0; a < alpha; ++a) sig[a + 1] = cls[d.next(q, letter_of(a))];
      auto [it, fresh] = ids.try_emplace(sig, static_cast<State>(ids.size()));
      next_cls[q] = it->second;
    }
    bool stable = ids.size() == count;
    count = ids.size();
    cls.swap(next_cls);
    if (stable) break;
  }

  // Canonical numbering: breadth-first from the initial class.
  std::vector<State> rep(count, 0), number(count, static_cast<State>(-1));
  for (State q : reach) rep[cls[q]] = q;
  std::vector<State> order{cls[d.initial()]};
  number[cls[d.initial()]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < alpha; ++a) {
      State c = cls[d.next(rep[order[i]], letter_of(a))];
      if (number[c] == static_cast<State>(-1)) {
        number[c] = static_cast<State>(order.size());
        order.push_back(c);
      }
    }
  }
  Dfa m(d.predicates_ptr(), count, 0);
  for (State i = 0; i < count; ++i) {
    State q = rep[order[i]];
    m.set_accepting(i, d.accepting(q));
    for (std::size_t a = 0; a < alpha; ++a) {
      m.set_transition(i, letter_of(a), number[cls[d.next(q, letter_of(a))]]);
    }
  }
  return m;
}

Dfa complement(const Dfa& d) {
  Dfa c = d;
  for (State q = 0; q < d.num_states(); ++q) c.set_accepting(q, !d.accepting(q));
  return c;
}

Dfa product(const Dfa& a, const Dfa& b, BoolOp op, std::size_t max_states) {
  if (!(a.predicates() == b.predicates())) {
    throw UsageError("automata use different predicate sets");
  }
  const std::size_t alpha = a.alphabet_size();
  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    std::uint64_t key = (std::uint64_t{p} << 32) | q;
    auto [it, fresh] = index.try_emplace(key, static_cast<State>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(p, q);
      check_cap(pairs.size(), max_states);
    }
    return it->second;
  };
  intern(a.initial(), b.initial());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (std::size_t l = 0; l < alpha; ++l) {
      delta.push_back(intern(a.next(p, letter_of(l)), b.next(q, letter_of(l))));
    }
  }
  Dfa d(a.predicates_ptr(), pairs.size(), 0);
  for (State s = 0; s < pairs.size(); ++s) {
    bool x = a.accepting(pairs[s].first), y = b.accepting(pairs[s].second);
    bool acc = false;
    switch (op) {
      case BoolOp::And: acc = x && y; break;
      case BoolOp::Or: acc = x || y; break;
      case BoolOp::AndNot: acc = x && !y; break;
      case BoolOp::Xor: acc = x != y; break;
    }
    d.set_accepting(s, acc);
    for (std::size_t l = 0; l < alpha; ++l) {
      d.set_transition(s, letter_of(l), delta[s * alpha + l]);
    }
  }
  return d;
}

Dfa intersection(const Dfa& a, const Dfa& b) {
  return minimize(product(a, b, BoolOp::And));
}

Dfa union_of(const Dfa& a, const Dfa& b) {
  return minimize(product(a, b, BoolOp::Or));
}

namespace {

// Breadth-first search over a successor relation; letters are tried in
// increasing order so the first accepting hit is the least shortest word.
template <typename Successors>
std::optional<Word> bfs_word(PredicateSetPtr preds, std::size_t states,
                             const std::vector<State>& sources,
                             const std::vector<bool>& accepting,
                             Successors&& successors) {
  constexpr State kNone = static_cast<State>(-1);
  std::vector<State> parent(states, kNone);
  std::vector<Letter> via(states);
  std::vector<bool> seen(states, false);
  std::deque<State> queue;
  for (State s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (accepting[s]) {
      std::vector<Letter> letters;
      for (State t = s; parent[t] != kNone; t = parent[t]) letters.push_back(via[t]);
      std::reverse(letters.begin(), letters.end());
      return Word(std::move(preds), std::move(letters));
    }
    successors(s, [&](Letter a, State t) {
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = s;
        via[t] = a;
        queue.push_back(t);
      }
    });
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> shortest_accepted(const Dfa& d) {
  std::vector<bool> acc(d.num_states());
  for (State q = 0; q < d.num_states(); ++q) acc[q] = d.accepting(q);
  return bfs_word(d.predicates_ptr(), d.num_states(), {d.initial()}, acc,
                  [&](State q, auto&& visit) {
                    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
                      visit(letter_of(a), d.next(q, letter_of(a)));
                    }
                  });
}

std::optional<Word> shortest_accepted(const Nfa& n) {
  // A shortest path in the NFA is not necessarily the least word of that
  // length, so search the subset automaton instead.
  return shortest_accepted(determinize(n));
}

bool is_empty(const Dfa& d) { return !shortest_accepted(d).has_value(); }

bool is_empty(const Nfa& n) {
  std::vector<bool> acc(n.num_states());
  for (State q = 0; q < n.num_states(); ++q) acc[q] = n.accepting(q);
  return !bfs_word(n.predicates_ptr(), n.num_states(), n.initial(), acc,
                   [&](State q, auto&& visit) {
                     for (const auto& e : n.edges(q)) visit(e.letter, e.to);
                   })
              .has_value();
}

bool is_subset(const Dfa& a, const Dfa& b) {
  return is_empty(product(a, b, BoolOp::AndNot));
}

bool is_equiv(const Dfa& a, const Dfa& b) {
  return is_empty(product(a, b, BoolOp::Xor));
}

Dfa universal_dfa(PredicateSetPtr preds) {
  Dfa d(std::move(preds), 1, 0);
  d.set_accepting(0);
  return d;
}

Dfa empty_dfa(PredicateSetPtr preds) { return Dfa(std::move(preds), 1, 0); }

// ---------------------------------------------------------------------------
// Closures

namespace {

Nfa close_letters(const Nfa& n, bool upward) {
  Nfa out(n.predicates_ptr(), n.num_states());
  for (State q : n.initial()) out.set_initial(q);
  const std::uint16_t full = n.predicates().full_letter().bits;
  for (State q = 0; q < n.num_states(); ++q) {
    out.set_accepting(q, n.accepting(q));
    for (const auto& e : n.edges(q)) {
      // Enumerate supersets (resp. subsets) of e.letter.
      std::uint16_t free = upward ? static_cast<std::uint16_t>(full & ~e.letter.bits)
                                  : e.letter.bits;
      std::uint16_t sub = free;
      while (true) {
        std::uint16_t b = upward ? static_cast<std::uint16_t>(e.letter.bits | sub) : sub;
        out.add_transition(q, Letter{b}, e.to);
        if (sub == 0) break;
        sub = static_cast<std::uint16_t>((sub - 1) & free);
      }
    }
  }
  return out;
}

}  // namespace

Nfa monotone_closure(const Nfa& n) { return close_letters(n, true); }
Nfa downward_closure(const Nfa& n) { return close_letters(n, false); }

Dfa upward_closure_dfa(const Dfa& d, std::size_t max_states) {
  return minimize(determinize(monotone_closure(d.to_nfa()), max_states));
}

Dfa dual_closure(const Dfa& d, std::size_t max_states) {
  Nfa down = downward_closure(complement(d).to_nfa());
  return minimize(complement(determinize(down, max_states)));
}

MonotonicityResult is_monotone_automaton(const Dfa& d) {
  // Pair states (p, q) track runs on u and v with u ≤ v letterwise; a pair
  // with p accepting and q rejecting witnesses non-monotonicity.
  const std::size_t n = d.num_states();
  const std::size_t alpha = d.alphabet_size();
  constexpr std::uint64_t kNone = static_cast<std::uint64_t>(-1);
  auto key = [n](State p, State q) { return std::uint64_t{p} * n + q; };
  std::vector<std::uint64_t> parent(n * n, kNone);
  std::vector<std::pair<Letter, Letter>> via(n * n);
  std::vector<bool> seen(n * n, false);
  std::deque<std::uint64_t> queue;
  std::uint64_t start = key(d.initial(), d.initial());
  seen[start] = true;
  queue.push_back(start);
  while (!queue.empty()) {
    std::uint64_t s = queue.front();
    queue.pop_front();
    State p = static_cast<State>(s / n), q = static_cast<State>(s % n);
    if (d.accepting(p) && !d.accepting(q)) {
      std::vector<Letter> us, vs;
      for (std::uint64_t t = s; parent[t] != kNone; t = parent[t]) {
        us.push_back(via[t].first);
        vs.push_back(via[t].second);
      }
      std::reverse(us.begin(), us.end());
      std::reverse(vs.begin(), vs.end());
      MonotonicityResult r;
      r.monotone = false;
      r.u = Word(d.predicates_ptr(), std::move(us));
      r.v = Word(d.predicates_ptr(), std::move(vs));
      return r;
    }
    for (std::size_t a = 0; a < alpha; ++a) {
      for (std::size_t b = 0; b < alpha; ++b) {
        if ((a & ~b) != 0) continue;
        std::uint64_t t = key(d.next(p, letter_of(a)), d.next(q, letter_of(b)));
        if (!seen[t]) {
          seen[t] = true;
          parent[t] = s;
          via[t] = {letter_of(a), letter_of(b)};
          queue.push_back(t);
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Formula compilation
//
// Subformulas compile to DFAs over an extended alphabet with one extra track
// per variable ("@x"). An automaton for φ only has to be correct on words in
// which every free variable of φ is marked at exactly one position; other
// tracks are ignored.

namespace {

class FoCompiler {
 public:
  FoCompiler(PredicateSetPtr base, const std::set<std::string>& vars,
             std::size_t cap)
      : base_(std::move(base)), cap_(cap) {
    std::vector<std::string> names = base_->names();
    if (names.size() + vars.size() > kMaxPredicates) {
      throw ResourceError("too many predicates and variables to compile (" +
                          std::to_string(names.size() + vars.size()) + " > " +
                          std::to_string(kMaxPredicates) + ")");
    }
    for (const auto& v : vars) {
      track_[v] = names.size();
      names.push_back("@" + v);
    }
    ext_ = PredicateSet::make(std::move(names));
    alpha_ = ext_->alphabet_size();
  }

  const PredicateSetPtr& extended() const { return ext_; }

  Dfa compile(const Fo& f) {
    switch (f.kind()) {
      case FoKind::True: return universal_dfa(ext_);
      case FoKind::False: return empty_dfa(ext_);
      case FoKind::Atom: return atom(f.pred(), f.var());
      case FoKind::Bin: return binary(f.bin_pred(), f.var(), f.var2());
      case FoKind::Not: return complement(compile(f.lhs()));
      case FoKind::And:
        return minimize(product(compile(f.lhs()), compile(f.rhs()), BoolOp::And, cap_));
      case FoKind::Or:
        return minimize(product(compile(f.lhs()), compile(f.rhs()), BoolOp::Or, cap_));
      case FoKind::Exists: return exists(f.var(), compile(f.lhs()));
      case FoKind::Forall:
        return complement(exists(f.var(), complement(compile(f.lhs()))));
    }
    throw UsageError("unsupported formula");
  }

  /// Drops the variable tracks of a sentence automaton.
  Dfa restrict_to_base(const Dfa& d) const {
    Dfa out(base_, d.num_states(), d.initial());
    for (State q = 0; q < d.num_states(); ++q) {
      out.set_accepting(q, d.accepting(q));
      for (std::size_t a = 0; a < base_->alphabet_size(); ++a) {
        out.set_transition(q, letter_of(a), d.next(q, letter_of(a)));
      }
    }
    return minimize(out);
  }

 private:
  std::size_t bit(const std::string& var) const { return track_.at(var); }
  bool marked(std::size_t a, const std::string& var) const {
    return (a >> bit(var)) & 1u;
  }

  // Builds a DFA from a step function on a small state space; state 0 is
  // initial.
  template <typename Step>
  Dfa table(std::size_t states, std::vector<State> accepting, Step&& step) const {
    Dfa d(ext_, states, 0);
    for (State s : accepting) d.set_accepting(s);
    for (State q = 0; q < states; ++q) {
      for (std::size_t a = 0; a < alpha_; ++a) d.set_transition(q, letter_of(a), step(q, a));
    }
    return minimize(d);
  }

  Dfa atom(const std::string& pred, const std::string& var) const {
    auto idx = base_->index_of(pred);
    if (!idx) throw UsageError("unknown predicate '" + pred + "'");
    const std::size_t p = *idx;
    // 0: not yet seen the marked position, 1: accept, 2: reject.
    return table(3, {1}, [&](State q, std::size_t a) -> State {
      if (q != 0) return q;
      if (!marked(a, var)) return 0;
      return ((a >> p) & 1u) ? 1 : 2;
    });
  }

  Dfa binary(const BinaryPredicate& bp, const std::string& x,
             const std::string& y) const {
    if (x == y) {
      bool v = bp.kind != BinKind::Between && bp.holds(0, 0, {}, *base_);
      return v ? universal_dfa(ext_) : empty_dfa(ext_);
    }
    switch (bp.kind) {
      case BinKind::Eq: return order(x, y, /*lt=*/false, /*eq=*/true, /*gt=*/false);
      case BinKind::Neq: return order(x, y, true, false, true);
      case BinKind::Le: return order(x, y, true, true, false);
      case BinKind::Lt: return order(x, y, true, false, false);
      case BinKind::Succ: return succ(x, y);
      case BinKind::NotSucc: return complement(succ(x, y));
      case BinKind::Between: return between(*bp.guard, x, y);
    }
    throw UsageError("unsupported binary predicate");
  }

  // Accepts according to the relative order of the marked positions.
  Dfa order(const std::string& x, const std::string& y, bool lt, bool eq,
            bool gt) const {
    // 0: none, 1: x only seen, 2: y only seen, 3: x<y, 4: x=y, 5: x>y.
    std::vector<State> acc;
    if (lt) acc.push_back(3);
    if (eq) acc.push_back(4);
    if (gt) acc.push_back(5);
    return table(6, acc, [&](State q, std::size_t a) -> State {
      bool mx = marked(a, x), my = marked(a, y);
      switch (q) {
        case 0:
          if (mx && my) return 4;
          if (mx) return 1;
          if (my) return 2;
          return 0;
        case 1: return my ? 3 : 1;
        case 2: return mx ? 5 : 2;
        default: return q;
      }
    });
  }

  Dfa succ(const std::string& x, const std::string& y) const {
    // 0: before x, 1: just saw x, 2: accept, 3: reject.
    return table(4, {2}, [&](State q, std::size_t a) -> State {
      bool mx = marked(a, x), my = marked(a, y);
      switch (q) {
        case 0:
          if (my) return 3;
          return mx ? 1 : 0;
        case 1: return my ? 2 : 3;
        default: return q;
      }
    });
  }

  Dfa between(const Guard& g, const std::string& x, const std::string& y) const {
    // 0: none, 1: one endpoint seen, 2: one endpoint and a guard position,
    // 3: accept, 4: reject.
    return table(5, {3}, [&](State q, std::size_t a) -> State {
      bool mx = marked(a, x), my = marked(a, y);
      switch (q) {
        case 0:
          if (mx && my) return 4;
          return (mx || my) ? 1 : 0;
        case 1:
          if (mx || my) return 4;
          return g.holds(letter_of(a), *ext_) ? 2 : 1;
        case 2: return (mx || my) ? 3 : 2;
        default: return q;
      }
    });
  }

  Dfa exists(const std::string& var, const Dfa& body) const {
    // Intersect with "var marked exactly once", then forget the track.
    Dfa once = table(3, {1}, [&](State q, std::size_t a) -> State {
      if (!marked(a, var)) return q;
      return q == 0 ? 1 : 2;
    });
    Dfa both = product(body, once, BoolOp::And, cap_);
    const std::uint16_t mask = static_cast<std::uint16_t>(1u << bit(var));
    Nfa proj(ext_, both.num_states());
    proj.set_initial(both.initial());
    for (State q = 0; q < both.num_states(); ++q) {
      proj.set_accepting(q, both.accepting(q));
      for (std::size_t a = 0; a < alpha_; ++a) {
        proj.add_transition(q, letter_of(a), both.next(q, letter_of(a)));
        proj.add_transition(q, letter_of(a ^ mask), both.next(q, letter_of(a)));
      }
    }
    return minimize(determinize(proj, cap_));
  }

  PredicateSetPtr base_;
  PredicateSetPtr ext_;
  std::map<std::string, std::size_t> track_;
  std::size_t alpha_ = 0;
  std::size_t cap_;
};

PredicateSetPtr default_predicates(const std::set<std::string>& used) {
  return PredicateSet::make(std::vector<std::string>(used.begin(), used.end()));
}

void check_known(const std::set<std::string>& used, const PredicateSet& preds) {
  for (const auto& p : used) {
    if (!preds.index_of(p)) throw UsageError("unknown predicate '" + p + "'");
  }
}

}  // namespace

Dfa compile_fo(const Fo& sentence, PredicateSetPtr preds, std::size_t max_states) {
  auto free = free_variables(sentence);
  if (!free.empty()) {
    throw UsageError("compile_fo needs a sentence; free variable '" +
                     *free.begin() + "'");
  }
  auto used = predicates_of(sentence);
  if (!preds) preds = default_predicates(used);
  check_known(used, *preds);
  FoCompiler c(preds, variables(sentence), max_states);
  return c.restrict_to_base(c.compile(sentence));
}

Dfa compile_tl(const Tl& f, PredicateSetPtr preds, std::size_t max_states) {
  auto used = predicates_of(f);
  if (!preds) preds = default_predicates(used);
  check_known(used, *preds);
  // Evaluate at the first position: ∃x(∀y x≤y ∧ ⟦φ⟧(x)).
  Fo first = Fo::forall("y", Fo::bin(BinKind::Le, "x", "y"));
  Fo sentence = Fo::exists("x", Fo::conj(first, tl_to_fo(f, "x")));
  Dfa d = compile_fo(sentence, preds, max_states);
  // The sentence rejects ε; give ε its own initial state.
  Dfa out(preds, d.num_states() + 1, static_cast<State>(d.num_states()));
  const State fresh = static_cast<State>(d.num_states());
  for (State q = 0; q < d.num_states(); ++q) {
    out.set_accepting(q, d.accepting(q));
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      out.set_transition(q, letter_of(a), d.next(q, letter_of(a)));
    }
  }
  out.set_accepting(fresh, eval_empty(f));
  for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
    out.set_transition(fresh, letter_of(a), d.next(d.initial(), letter_of(a)));
  }
  return minimize(out);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct RawAutomaton {
  std::optional<std::size_t> states;
  std::vector<State> initial;
  std::vector<State> accepting;
  PredicateSetPtr preds;
  struct Trans {
    State from;
    Letter letter;
    State to;
  };
  std::vector<Trans> trans;
};

State parse_state(std::string_view tok, std::size_t offset) {
  State v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw SyntaxError("expected a state number, got '" + std::string(tok) + "'", offset);
  }
  return v;
}

std::vector<std::pair<std::string_view, std::size_t>> split_ws(std::string_view s,
                                                               std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i), base + i);
    i = j;
  }
  return out;
}

RawAutomaton parse_raw(std::string_view text) {
  RawAutomaton raw;
  std::size_t pos = 0;
  std::vector<std::pair<std::string_view, std::size_t>> trans_lines;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    std::size_t line_start = pos;
    pos = end + 1;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::size_t colon = t.find(':');
    if (colon == std::string_view::npos) {
      throw SyntaxError("expected 'key: value'", line_start);
    }
    std::string_view key = trim(t.substr(0, colon));
    std::string_view value = t.substr(colon + 1);
    std::size_t value_pos = line_start + static_cast<std::size_t>(value.data() - line.data());
    if (key == "states") {
      raw.states = parse_state(trim(value), value_pos);
    } else if (key == "initial") {
      for (auto [tok, off] : split_ws(value, value_pos)) raw.initial.push_back(parse_state(tok, off));
    } else if (key == "accepting") {
      for (auto [tok, off] : split_ws(value, value_pos)) raw.accepting.push_back(parse_state(tok, off));
    } else if (key == "predicates") {
      raw.preds = PredicateSet::parse(trim(value));
    } else if (key == "trans") {
      trans_lines.emplace_back(value, value_pos);
    } else {
      throw SyntaxError("unknown key '" + std::string(key) + "'", line_start);
    }
  }
  if (!raw.states) throw SyntaxError("missing 'states:' line", text.size());
  if (!raw.preds) throw SyntaxError("missing 'predicates:' line", text.size());
  for (auto [value, off] : trans_lines) {
    std::size_t open = value.find('{'), close = value.find('}');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
      throw SyntaxError("expected 'q {letter} q''", off);
    }
    State from = parse_state(trim(value.substr(0, open)), off);
    Letter l = parse_letter(value.substr(open, close - open + 1), *raw.preds);
    State to = parse_state(trim(value.substr(close + 1)), off + close + 1);
    raw.trans.push_back({from, l, to});
  }
  auto in_range = [&](State q) {
    if (q >= *raw.states) {
      throw UsageError("state " + std::to_string(q) + " out of range");
    }
  };
  for (State q : raw.initial) in_range(q);
  for (State q : raw.accepting) in_range(q);
  for (const auto& tr : raw.trans) {
    in_range(tr.from);
    in_range(tr.to);
  }
  return raw;
}

}  // namespace

Nfa parse_nfa(std::string_view text) {
  RawAutomaton raw = parse_raw(text);
  Nfa n(raw.preds, *raw.states);
  for (State q : raw.initial) n.set_initial(q);
  for (State q : raw.accepting) n.set_accepting(q);
  for (const auto& tr : raw.trans) n.add_transition(tr.from, tr.letter, tr.to);
  return n;
}

Dfa parse_dfa(std::string_view text) {
  RawAutomaton raw = parse_raw(text);
  if (raw.initial.size() != 1) {
    throw UsageError("a DFA needs exactly one initial state");
  }
  const std::size_t alpha = raw.preds->alphabet_size();
  Dfa d(raw.preds, *raw.states, raw.initial.front());
  std::vector<bool> defined(*raw.states * alpha, false);
  for (State q : raw.accepting) d.set_accepting(q);
  for (const auto& tr : raw.trans) {
    std::size_t k = tr.from * alpha + tr.letter.bits;
    if (defined[k] && d.next(tr.from, tr.letter) != tr.to) {
      throw UsageError("nondeterministic transition from state " +
                       std::to_string(tr.from));
    }
    defined[k] = true;
    d.set_transition(tr.from, tr.letter, tr.to);
  }
  for (std::size_t k = 0; k < defined.size(); ++k) {
    if (!defined[k]) {
      throw UsageError("missing transition from state " + std::to_string(k / alpha) +
                       " on " + render_letter(letter_of(k % alpha), *raw.preds));
    }
  }
  return d;
}

namespace {

void render_header(std::ostringstream& os, std::size_t states,
                   const std::vector<State>& initial,
                   const std::vector<bool>& accepting, const PredicateSet& preds) {
  os << "states: " << states << "\ninitial:";
  for (State q : initial) os << ' ' << q;
  os << "\naccepting:";
  for (State q = 0; q < accepting.size(); ++q) {
    if (accepting[q]) os << ' ' << q;
  }
  os << "\npredicates: " << preds.render() << '\n';
}

}  // namespace

std::string render_automaton(const Nfa& n) {
  std::ostringstream os;
  std::vector<bool> acc(n.num_states());
  for (State q = 0; q < n.num_states(); ++q) acc[q] = n.accepting(q);
  render_header(os, n.num_states(), n.initial(), acc, n.predicates());
  for (State q = 0; q < n.num_states(); ++q) {
    auto edges = n.edges(q);
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
      return std::pair(a.letter.bits, a.to) < std::pair(b.letter.bits, b.to);
    });
    for (const auto& e : edges) {
      os << "trans: " << q << ' ' << render_letter(e.letter, n.predicates()) << ' '
         << e.to << '\n';
    }
  }
  return os.str();
}

std::string render_automaton(const Dfa& d) {
  std::ostringstream os;
  std::vector<bool> acc(d.num_states());
  for (State q = 0; q < d.num_states(); ++q) acc[q] = d.accepting(q);
  render_header(os, d.num_states(), {d.initial()}, acc, d.predicates());
  for (State q = 0; q < d.num_states(); ++q) {
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      os << "trans: " << q << ' ' << render_letter(letter_of(a), d.predicates()) << ' '
         << d.next(q, letter_of(a)) << '\n';
    }
  }
  return os.str();
}

}  // namespace poslog
