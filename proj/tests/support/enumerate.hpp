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

#pragma once

// Exhaustive formula enumeration by AST size (node count). Formulas of the
// largest requested size are streamed to a callback instead of stored, since
// that layer dominates the count.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "poslog/formulas.hpp"

namespace poslog::testing {

struct FoGrammar {
  std::vector<std::string> vars{"x", "y"};
  std::vector<std::string> preds{"a", "b"};
  std::vector<BinKind> bins{BinKind::Eq, BinKind::Neq, BinKind::Le,
                            BinKind::Lt, BinKind::Succ, BinKind::NotSucc};
  std::vector<Guard> guards;  // between predicates btw[g]
  bool constants = true;
  bool negation = false;
  bool quantifiers = true;
};

struct TlGrammar {
  std::vector<std::string> preds{"a", "b"};
  std::vector<TlKind> unary{TlKind::X, TlKind::F, TlKind::G};
  std::vector<TlKind> binary{TlKind::And, TlKind::Or, TlKind::U, TlKind::R};
  bool constants = true;
};

class FoEnumerator {
 public:
  FoEnumerator(FoGrammar grammar, std::size_t stored_size);

  /// Every formula of exactly `size` nodes; size may exceed the stored size
  /// by at most one.
  void for_each(std::size_t size, const std::function<void(const Fo&)>& fn) const;
  const std::vector<Fo>& of_size(std::size_t size) const { return by_size_.at(size); }
  std::size_t count(std::size_t size) const;

 private:
  void build(std::size_t size, const std::function<void(const Fo&)>& fn) const;

  FoGrammar g_;
  std::vector<std::vector<Fo>> by_size_;
};

class TlEnumerator {
 public:
  TlEnumerator(TlGrammar grammar, std::size_t stored_size);

  void for_each(std::size_t size, const std::function<void(const Tl&)>& fn) const;
  const std::vector<Tl>& of_size(std::size_t size) const { return by_size_.at(size); }

 private:
  void build(std::size_t size, const std::function<void(const Tl&)>& fn) const;

  TlGrammar g_;
  std::vector<std::vector<Tl>> by_size_;
};

}  // namespace poslog::testing

namespace poslog {
// Readable gtest failure messages.
inline void PrintTo(const Fo& f, std::ostream* os) { *os << render(f); }
inline void PrintTo(const Tl& f, std::ostream* os) { *os << render(f); }
}  // namespace poslog
