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

#include "poslog/translate.hpp"

#include <algorithm>
#include <stdexcept>

#include "poslog/error.hpp"

namespace poslog {

// ---------------------------------------------------------------------------
// Temporal → first-order. `x` is the current position, `y` and `z` are the
// two other names; every clause rotates them so three names suffice.

namespace {

Fo lt(const std::string& a, const std::string& b) { return Fo::bin(BinKind::Lt, a, b); }
Fo le(const std::string& a, const std::string& b) { return Fo::bin(BinKind::Le, a, b); }
Fo succ(const std::string& a, const std::string& b) { return Fo::bin(BinKind::Succ, a, b); }

Fo tl_clause(const Tl& f, const std::string& x, const std::string& y, const std::string& z) {
  auto at_y = [&](const Tl& g) { return tl_clause(g, y, x, z); };
  const Tl& a = f.lhs();
  const Tl& b = f.rhs();
  switch (f.kind()) {
    case TlKind::True: return Fo::top();
    case TlKind::False: return Fo::bottom();
    case TlKind::Atom: return Fo::atom(f.pred(), x);
    case TlKind::Not: return Fo::negate(tl_clause(a, x, y, z));
    case TlKind::And: return Fo::conj(tl_clause(a, x, y, z), tl_clause(b, x, y, z));
    case TlKind::Or: return Fo::disj(tl_clause(a, x, y, z), tl_clause(b, x, y, z));
    case TlKind::X: return Fo::exists(y, Fo::conj(succ(x, y), at_y(a)));
    case TlKind::Y: return Fo::exists(y, Fo::conj(succ(y, x), at_y(a)));
    case TlKind::F: return Fo::exists(y, Fo::conj(lt(x, y), at_y(a)));
    case TlKind::G: return Fo::forall(y, Fo::disj(le(y, x), at_y(a)));
    case TlKind::P: return Fo::exists(y, Fo::conj(lt(y, x), at_y(a)));
    case TlKind::H: return Fo::forall(y, Fo::disj(le(x, y), at_y(a)));
    case TlKind::U: {
      // ∃y, x≤y ∧ ψ(y) ∧ ∀z, (z<x ∨ y≤z ∨ φ(z))
      Fo guard = Fo::disj(Fo::disj(lt(z, x), le(y, z)), tl_clause(a, z, x, y));
      return Fo::exists(y, Fo::conj(Fo::conj(le(x, y), at_y(b)), Fo::forall(z, guard)));
    }
    case TlKind::S: {
      Fo guard = Fo::disj(Fo::disj(le(z, y), lt(x, z)), tl_clause(a, z, x, y));
      return Fo::exists(y, Fo::conj(Fo::conj(le(y, x), at_y(b)), Fo::forall(z, guard)));
    }
    case TlKind::R: {
      // φ R ψ ≡ ψ U (φ∧ψ) ∨ ψ at every later-or-equal position.
      Fo until = tl_clause(Tl::binary(TlKind::U, b, Tl::conj(a, b)), x, y, z);
      return Fo::disj(until, Fo::forall(y, Fo::disj(lt(y, x), at_y(b))));
    }
    case TlKind::Q: {
      Fo since = tl_clause(Tl::binary(TlKind::S, b, Tl::conj(a, b)), x, y, z);
      return Fo::disj(since, Fo::forall(y, Fo::disj(lt(x, y), at_y(b))));
    }
    case TlKind::XU:
    case TlKind::YS:
      return tl_clause(desugar(f), x, y, z);
  }
  return Fo::bottom();
}

std::string other_name(const std::string& var, const char* preferred, const char* fallback) {
  return var == preferred ? fallback : preferred;
}

}  // namespace

Fo ltlp_to_fo3p(const Tl& f) {
  if (!classify(f, FragmentId::LTLplus)) {
    throw UsageError("ltlp_to_fo3p expects an LTL+ formula, got " + render(f));
  }
  Fo first = Fo::forall("y", le("x", "y"));
  return Fo::exists("x", Fo::conj(first, tl_clause(f, "x", "y", "z")));
}

Fo utlp_to_fo2p(const Tl& f, const std::string& var) {
  if (!classify(f, FragmentId::UTLplus)) {
    throw UsageError("utlp_to_fo2p expects a UTL+ formula, got " + render(f));
  }
  return tl_clause(f, var, other_name(var, "y", "x"), "z");
}

Fo tl_to_fo(const Tl& f, const std::string& var) {
  std::string y = other_name(var, "y", "x");
  std::string z = (var == "z" || y == "z") ? (var == "x" || y == "x" ? "w" : "x") : "z";
  return tl_clause(f, var, y, z);
}

// ---------------------------------------------------------------------------
// Position formulas.

namespace {

// Representative offsets of y relative to x for each relative position.
constexpr int kOffset[] = {-2, -1, 0, 1, 2};

constexpr bool truth_at(BinKind k, int x, int y) {
  switch (k) {
    case BinKind::Eq: return x == y;
    case BinKind::Neq: return x != y;
    case BinKind::Le: return x <= y;
    case BinKind::Lt: return x < y;
    case BinKind::Succ: return y == x + 1;
    case BinKind::NotSucc: return y != x + 1;
    case BinKind::Between: break;
  }
  return false;
}

RelPos mirror(RelPos tau) {
  return static_cast<RelPos>(4 - static_cast<int>(tau));
}

CoarsePos mirror(CoarsePos tau) {
  return static_cast<CoarsePos>(2 - static_cast<int>(tau));
}

}  // namespace

bool position_truth(BinKind k, RelPos tau) {
  if (k == BinKind::Between) {
    throw UsageError("between predicates are not determined by relative position");
  }
  return truth_at(k, 10, 10 + kOffset[static_cast<int>(tau)]);
}

bool position_truth(BinKind k, CoarsePos tau) {
  if (k == BinKind::Succ || k == BinKind::NotSucc || k == BinKind::Between) {
    throw UsageError("only =, !=, <, <= are determined by coarse relative position");
  }
  return truth_at(k, 10, 10 + 2 * (static_cast<int>(tau) - 1));
}

Fo position_formula(RelPos tau, const std::string& x, const std::string& y) {
  switch (tau) {
    case RelPos::FarBefore: return Fo::conj(lt(y, x), Fo::bin(BinKind::NotSucc, y, x));
    case RelPos::Pred: return succ(y, x);
    case RelPos::Same: return Fo::bin(BinKind::Eq, y, x);
    case RelPos::Next: return succ(x, y);
    case RelPos::FarAfter: return Fo::conj(lt(x, y), Fo::bin(BinKind::NotSucc, x, y));
  }
  return Fo::bottom();
}

Fo position_formula(CoarsePos tau, const std::string& x, const std::string& y) {
  switch (tau) {
    case CoarsePos::Before: return lt(y, x);
    case CoarsePos::Same: return Fo::bin(BinKind::Eq, y, x);
    case CoarsePos::After: return lt(x, y);
  }
  return Fo::bottom();
}

// ---------------------------------------------------------------------------
// Monotone rewrite.

namespace {

template <typename Fn>
Fo map_free_atoms(const Fo& f, const std::string& pivot, const Fn& fn) {
  switch (f.kind()) {
    case FoKind::Atom:
      return f.var() == pivot ? fn(f) : f;
    case FoKind::Not:
      return Fo::negate(map_free_atoms(f.lhs(), pivot, fn));
    case FoKind::And:
      return Fo::conj(map_free_atoms(f.lhs(), pivot, fn), map_free_atoms(f.rhs(), pivot, fn));
    case FoKind::Or:
      return Fo::disj(map_free_atoms(f.lhs(), pivot, fn), map_free_atoms(f.rhs(), pivot, fn));
    case FoKind::Exists:
    case FoKind::Forall:
      if (f.var() == pivot) return f;
      return f.kind() == FoKind::Exists ? Fo::exists(f.var(), map_free_atoms(f.body(), pivot, fn))
                                        : Fo::forall(f.var(), map_free_atoms(f.body(), pivot, fn));
    default:
      return f;
  }
}

}  // namespace

std::vector<std::string> pivot_atoms(const Fo& psi, const std::string& pivot) {
  std::vector<std::string> out;
  map_free_atoms(psi, pivot, [&](const Fo& atom) {
    if (std::find(out.begin(), out.end(), atom.pred()) == out.end()) out.push_back(atom.pred());
    return atom;
  });
  return out;
}

Fo substitute_pivot_atoms(const Fo& psi, const std::string& pivot,
                          const std::vector<std::string>& atoms, std::uint64_t subset) {
  return map_free_atoms(psi, pivot, [&](const Fo& atom) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i] == atom.pred()) return (subset >> i) & 1u ? Fo::top() : Fo::bottom();
    }
    return atom;
  });
}

Fo monotone_rewrite(const Fo& psi, const std::string& pivot) {
  if (!is_positive(psi)) throw UsageError("monotone_rewrite expects a positive formula");
  std::vector<std::string> atoms = pivot_atoms(psi, pivot);
  if (atoms.empty()) return psi;
  if (atoms.size() > 20) throw ResourceError("too many unary atoms on the pivot");
  std::vector<Fo> disjuncts;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << atoms.size()); ++s) {
    std::vector<Fo> chosen;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if ((s >> i) & 1u) chosen.push_back(Fo::atom(atoms[i], pivot));
    }
    Fo rest = substitute_pivot_atoms(psi, pivot, atoms, s);
    disjuncts.push_back(chosen.empty() ? rest : Fo::conj(Fo::conj_all(chosen), rest));
  }
  return Fo::disj_all(disjuncts);
}

// ---------------------------------------------------------------------------
// FO² → UTL.

namespace {

// Binary atoms on a single variable have a fixed truth value.
Fo drop_reflexive_atoms(const Fo& f) {
  switch (f.kind()) {
    case FoKind::Bin:
      if (f.var() != f.var2()) return f;
      if (f.bin_pred().kind == BinKind::Between) return Fo::bottom();
      return position_truth(f.bin_pred().kind, RelPos::Same) ? Fo::top() : Fo::bottom();
    case FoKind::Not: return Fo::negate(drop_reflexive_atoms(f.lhs()));
    case FoKind::And: return Fo::conj(drop_reflexive_atoms(f.lhs()), drop_reflexive_atoms(f.rhs()));
    case FoKind::Or: return Fo::disj(drop_reflexive_atoms(f.lhs()), drop_reflexive_atoms(f.rhs()));
    case FoKind::Exists: return Fo::exists(f.var(), drop_reflexive_atoms(f.body()));
    case FoKind::Forall: return Fo::forall(f.var(), drop_reflexive_atoms(f.body()));
    default: return f;
  }
}

class Fo2Translator {
 public:
  explicit Fo2Translator(bool coarse) : coarse_(coarse) {}

  // f has free variables ⊆ {p}; the result holds at position i iff f holds
  // with p = i.
  Tl run(const Fo& f, const std::string& p, const std::string& q) const {
    switch (f.kind()) {
      case FoKind::True: return Tl::top();
      case FoKind::False: return Tl::bottom();
      case FoKind::Atom: return Tl::atom(f.pred());
      case FoKind::Bin:
        // Reflexive atoms were removed up front; anything left mentions q.
        throw std::logic_error("binary atom with a free second variable");
      case FoKind::Not:
        throw UsageError("negation in a positive translation input");
      case FoKind::And: return Tl::conj(run(f.lhs(), p, q), run(f.rhs(), p, q));
      case FoKind::Or: return Tl::disj(run(f.lhs(), p, q), run(f.rhs(), p, q));
      case FoKind::Exists:
      case FoKind::Forall:
        if (f.var() == p) return run(swap_variables(f, p, q), p, q);
        return quantifier(f, p, q);
    }
    return Tl::bottom();
  }

 private:
  // Maximal subformulas whose only free variable is p: unary atoms on p and
  // quantified subformulas in which p occurs free.
  void collect_guards(const Fo& f, const std::string& p, std::vector<Fo>& out) const {
    if (f.kind() == FoKind::And || f.kind() == FoKind::Or) {
      collect_guards(f.lhs(), p, out);
      collect_guards(f.rhs(), p, out);
      return;
    }
    auto free = free_variables(f);
    if (free.size() == 1 && *free.begin() == p) {
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
  }

  Fo replace_guards(const Fo& f, const std::string& p, const std::vector<Fo>& guards,
                    std::uint64_t subset) const {
    if (f.kind() == FoKind::And) {
      return Fo::conj(replace_guards(f.lhs(), p, guards, subset),
                      replace_guards(f.rhs(), p, guards, subset));
    }
    if (f.kind() == FoKind::Or) {
      return Fo::disj(replace_guards(f.lhs(), p, guards, subset),
                      replace_guards(f.rhs(), p, guards, subset));
    }
    for (std::size_t i = 0; i < guards.size(); ++i) {
      if (guards[i] == f) return (subset >> i) & 1u ? Fo::top() : Fo::bottom();
    }
    return f;
  }

  template <typename Pos>
  Fo trivialize(const Fo& f, const std::string& p, Pos tau) const {
    switch (f.kind()) {
      case FoKind::And: return Fo::conj(trivialize(f.lhs(), p, tau), trivialize(f.rhs(), p, tau));
      case FoKind::Or: return Fo::disj(trivialize(f.lhs(), p, tau), trivialize(f.rhs(), p, tau));
      case FoKind::Bin: {
        // After guard replacement every remaining binary atom at this level
        // relates p and q.
        const bool forward = f.var() == p;
        return position_truth(f.bin_pred().kind, forward ? tau : mirror(tau)) ? Fo::top()
                                                                               : Fo::bottom();
      }
      default:
        return f;
    }
  }

  static Tl assemble(RelPos tau, bool exists, const Tl& chi) {
    using K = TlKind;
    const Tl first = Tl::unary(K::H, Tl::bottom());
    const Tl last = Tl::unary(K::G, Tl::bottom());
    switch (tau) {
      case RelPos::FarBefore:
        return exists ? Tl::unary(K::Y, Tl::unary(K::P, chi))
                      : Tl::disj(Tl::unary(K::Y, Tl::unary(K::H, chi)), first);
      case RelPos::Pred:
        return exists ? Tl::unary(K::Y, chi) : Tl::disj(Tl::unary(K::Y, chi), first);
      case RelPos::Same:
        return chi;
      case RelPos::Next:
        return exists ? Tl::unary(K::X, chi) : Tl::disj(Tl::unary(K::X, chi), last);
      case RelPos::FarAfter:
        return exists ? Tl::unary(K::X, Tl::unary(K::F, chi))
                      : Tl::disj(Tl::unary(K::X, Tl::unary(K::G, chi)), last);
    }
    return chi;
  }

  static Tl assemble(CoarsePos tau, bool exists, const Tl& chi) {
    switch (tau) {
      case CoarsePos::Before: return Tl::unary(exists ? TlKind::P : TlKind::H, chi);
      case CoarsePos::Same: return chi;
      case CoarsePos::After: return Tl::unary(exists ? TlKind::F : TlKind::G, chi);
    }
    return chi;
  }

  template <typename Positions>
  Tl split(const Fo& body, const std::string& p, const std::string& q, bool exists,
           const Positions& positions) const {
    std::vector<Tl> parts;
    for (auto tau : positions) {
      Fo local = simplify_constants(trivialize(body, p, tau));
      if (local.kind() == (exists ? FoKind::False : FoKind::True)) continue;
      Tl chi = run(local, q, p);
      parts.push_back(assemble(tau, exists, chi));
    }
    return exists ? Tl::disj_all(parts) : Tl::conj_all(parts);
  }

  Tl quantifier(const Fo& f, const std::string& p, const std::string& q) const {
    const bool exists = f.kind() == FoKind::Exists;
    std::vector<Fo> guards;
    collect_guards(f.body(), p, guards);
    if (guards.size() > 16) throw ResourceError("too many pivot subformulas to split on");
    std::vector<Tl> guard_tl;
    for (const Fo& g : guards) guard_tl.push_back(run(g, p, q));
    std::vector<Tl> disjuncts;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << guards.size()); ++s) {
      Fo body = replace_guards(f.body(), p, guards, s);
      Tl rest = coarse_ ? split(body, p, q, exists, kCoarsePositions)
                        : split(body, p, q, exists, kRelPositions);
      std::vector<Tl> conj;
      for (std::size_t i = 0; i < guards.size(); ++i) {
        if ((s >> i) & 1u) conj.push_back(guard_tl[i]);
      }
      conj.push_back(rest);
      disjuncts.push_back(Tl::conj_all(conj));
    }
    return Tl::disj_all(disjuncts);
  }

  bool coarse_;
};

Tl fo2_translate(const Fo& f, bool coarse) {
  const Signature sig = coarse ? Signature::less() : Signature::b0();
  if (!is_positive(f)) throw UsageError("negation in a positive translation input");
  if (!uses_only(f, sig)) {
    throw UsageError(std::string("binary predicate outside ") + sig.render());
  }
  auto names = variables(f);
  if (names.size() > 2) throw UsageError("formula uses a third variable");
  auto free = free_variables(f);
  if (free.size() > 1) throw UsageError("formula has more than one free variable");
  std::string p = !free.empty() ? *free.begin() : (!names.empty() ? *names.begin() : "x");
  std::string q;
  for (const auto& n : names) {
    if (n != p) q = n;
  }
  if (q.empty()) q = p == "y" ? "x" : "y";
  Tl out = Fo2Translator(coarse).run(drop_reflexive_atoms(f), p, q);
  return simplify_constants(out);
}

}  // namespace

Tl fo2p_to_utlp(const Fo& f) { return fo2_translate(f, false); }
Tl fo2p_less_to_utlp(const Fo& f) { return fo2_translate(f, true); }

}  // namespace poslog
