// Copyright 2026 The loci Authors.
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

// Declaration format:
//
//   poset V { elements: bot c a b; order: bot <= c, c <= a, c <= b }
//   fn f : V -> V { bot -> bot; c -> c; a -> a; b -> c }
//   rel Q on V kind=preorder { a ~ b; bot <= c }
//
// `order` is closed reflexively and transitively. Relation kinds: `raw`
// keeps the pairs as written, `preorder` closes reflexively and
// transitively, `equiv` closes to an equivalence. `x ~ y` stands for both
// `x <= y` and `y <= x`. `#` starts a comment.

#ifndef LOCI_TEXT_FORMAT_HPP
#define LOCI_TEXT_FORMAT_HPP

#include <string>
#include <string_view>

#include "loci/catalog.hpp"
#include "loci/error.hpp"

namespace loci {

/// A syntax or resolution error at a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Named definitions with unique names per kind.
class Workspace {
 public:
  const Named<PosetPtr>& posets() const { return posets_; }
  const Named<FnTable>& functions() const { return functions_; }
  const Named<Rel>& relations() const { return relations_; }

  /// Throw InvalidArgument on a duplicate name.
  void add(std::string name, PosetPtr p);
  void add(std::string name, FnTable f);
  void add(std::string name, Rel r);
  void import(const ExampleBundle& bundle);

  const PosetPtr* find_poset(std::string_view name) const;
  const FnTable* find_fn(std::string_view name) const;
  const Rel* find_rel(std::string_view name) const;
  /// Throw InvalidArgument for unknown names.
  const PosetPtr& poset(std::string_view name) const;
  const FnTable& fn(std::string_view name) const;
  const Rel& rel(std::string_view name) const;

  /// Workspace name of a poset, matched by carrier; nullptr when absent.
  const std::string* name_of(const PosetPtr& p) const;

  friend bool operator==(const Workspace& a, const Workspace& b);

 private:
  Named<PosetPtr> posets_;
  Named<FnTable> functions_;
  Named<Rel> relations_;
};

/// Parses declarations into `ws`; names may refer to posets already in it.
void parse_into(Workspace& ws, std::string_view source);
Workspace parse_workspace(std::string_view source);

/// True when `name` reads back as a single identifier.
bool is_identifier(std::string_view name);

std::string export_poset(std::string_view name, const Poset& p);
/// Throws InvalidArgument when the function's posets are not in `ws`.
std::string export_fn(const Workspace& ws, std::string_view name, const FnTable& f);
std::string export_rel(const Workspace& ws, std::string_view name, const Rel& r);
/// Posets, then functions, then relations, each in declaration order.
std::string export_workspace(const Workspace& ws);

}  // namespace loci

#endif  // LOCI_TEXT_FORMAT_HPP
