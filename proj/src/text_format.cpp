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

#include "loci/text_format.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace loci {
namespace {

template <typename T>
const T* find_named(const Named<T>& items, std::string_view name) {
  for (const auto& [n, item] : items) {
    if (n == name) return &item;
  }
  return nullptr;
}

template <typename T>
void add_named(Named<T>& items, std::string name, T item, const char* kind) {
  if (find_named(items, name)) {
    throw InvalidArgument(std::string("duplicate ") + kind + " '" + name + "'");
  }
  items.emplace_back(std::move(name), std::move(item));
}

// ---- lexer ----

struct Token {
  enum class Kind { kIdent, kPunct, kEnd };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool plain_ident_char(unsigned char c) {
  if (std::isalnum(c) || c >= 0x80) return true;
  switch (c) {
    case '_': case '\'': case '*': case '.': case '+': case '!': case '?': case '/': case '$':
      return true;
    default:
      return false;
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Token::Kind::kEnd, "", line_, column_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = peek();
      if (c == '#') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    const std::size_t line = line_;
    const std::size_t col = column_;
    const char c = peek();
    auto punct = [&](std::size_t len) {
      Token t{Token::Kind::kPunct, std::string(src_.substr(pos_, len)), line, col};
      for (std::size_t i = 0; i < len; ++i) advance();
      return t;
    };
    if (c == '<' && peek(1) == '=') return punct(2);
    if (c == '-' && peek(1) == '>') return punct(2);
    if (c == '{' || c == '}' || c == ':' || c == ';' || c == ',' || c == '~' || c == '=') {
      return punct(1);
    }
    std::string text;
    while (pos_ < src_.size()) {
      const char d = peek();
      if (plain_ident_char(static_cast<unsigned char>(d)) || (d == '-' && peek(1) != '>')) {
        text += d;
        advance();
      } else if (d == '(' || d == '[') {
        text += group();
      } else {
        break;
      }
    }
    if (text.empty()) {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    return {Token::Kind::kIdent, std::move(text), line, col};
  }

  // A balanced run of () and [] groups; commas allowed inside.
  std::string group() {
    const std::size_t line = line_;
    const std::size_t col = column_;
    std::string text;
    std::string open;
    do {
      const char d = peek();
      if (d == '(' || d == '[') {
        open += d;
      } else if (d == ')' || d == ']') {
        const char want = d == ')' ? '(' : '[';
        if (open.back() != want) throw ParseError(line_, column_, "mismatched bracket in name");
        open.pop_back();
      } else if (d == '\0' || d == '\n' || d == '{' || d == '}' || d == ';' ||
                 std::isspace(static_cast<unsigned char>(d))) {
        throw ParseError(line, col, "unterminated bracket in name");
      }
      text += d;
      advance();
    } while (!open.empty());
    return text;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// ---- parser ----

class Parser {
 public:
  Parser(Workspace& ws, std::string_view src) : ws_(ws), tokens_(Lexer(src).run()) {}

  void run() {
    while (cur().kind != Token::Kind::kEnd) {
      const Token& head = cur();
      if (is_word("poset")) {
        poset_decl();
      } else if (is_word("fn")) {
        fn_decl();
      } else if (is_word("rel")) {
        rel_decl();
      } else {
        fail(head, "expected 'poset', 'fn' or 'rel', found '" + head.text + "'");
      }
    }
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  bool is_word(std::string_view w) const {
    return cur().kind == Token::Kind::kIdent && cur().text == w;
  }
  bool is_punct(std::string_view p) const {
    return cur().kind == Token::Kind::kPunct && cur().text == p;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column, msg);
  }

  static std::string describe(const Token& t) {
    return t.kind == Token::Kind::kEnd ? "end of input" : "'" + t.text + "'";
  }

  const Token& ident(const char* what) {
    if (cur().kind != Token::Kind::kIdent) {
      fail(cur(), std::string("expected ") + what + ", found " + describe(cur()));
    }
    return tokens_[pos_++];
  }

  void expect(std::string_view p) {
    if (!is_punct(p)) fail(cur(), "expected '" + std::string(p) + "', found " + describe(cur()));
    ++pos_;
  }

  void keyword(std::string_view w) {
    if (!is_word(w)) fail(cur(), "expected '" + std::string(w) + "', found " + describe(cur()));
    ++pos_;
  }

  bool accept(std::string_view p) {
    if (!is_punct(p)) return false;
    ++pos_;
    return true;
  }

  void separator() {
    if (!accept(";")) accept(",");
  }

  const PosetPtr& poset_ref(const Token& t) {
    const PosetPtr* p = ws_.find_poset(t.text);
    if (!p) fail(t, "unknown poset '" + t.text + "'");
    return *p;
  }

  static Index element_ref(const PosetPtr& p, const Token& t, const std::string& poset_name) {
    auto i = p->find(t.text);
    if (!i) fail(t, "'" + t.text + "' is not an element of " + poset_name);
    return *i;
  }

  template <typename Build>
  static auto validated(const Token& at, Build&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  template <typename T>
  void define(const Token& name, T item) {
    try {
      ws_.add(name.text, std::move(item));
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  void poset_decl() {
    ++pos_;
    const Token& name = ident("poset name");
    expect("{");
    keyword("elements");
    expect(":");
    std::vector<std::string> elements;
    while (cur().kind == Token::Kind::kIdent) elements.push_back(tokens_[pos_++].text);
    std::vector<NamedPair> covers;
    std::vector<const Token*> cover_tokens;
    separator();
    if (is_word("order")) {
      ++pos_;
      expect(":");
      while (cur().kind == Token::Kind::kIdent) {
        const Token& lo = ident("element");
        expect("<=");
        const Token& hi = ident("element");
        for (const Token* t : {&lo, &hi}) {
          if (std::find(elements.begin(), elements.end(), t->text) == elements.end()) {
            fail(*t, "'" + t->text + "' is not an element of " + name.text);
          }
        }
        covers.push_back({lo.text, hi.text});
        separator();
      }
    }
    expect("}");
    define(name, validated(name, [&] { return Poset::build(std::move(elements), covers); }));
  }

  void fn_decl() {
    ++pos_;
    const Token& name = ident("function name");
    expect(":");
    const Token& dom_tok = ident("domain");
    expect("->");
    const Token& cod_tok = ident("codomain");
    const PosetPtr dom = poset_ref(dom_tok);
    const PosetPtr cod = poset_ref(cod_tok);
    expect("{");
    std::vector<std::pair<std::string, std::string>> table;
    while (cur().kind == Token::Kind::kIdent) {
      const Token& x = ident("input");
      expect("->");
      const Token& y = ident("output");
      element_ref(dom, x, dom_tok.text);
      element_ref(cod, y, cod_tok.text);
      table.emplace_back(x.text, y.text);
      separator();
    }
    expect("}");
    define(name, validated(name, [&] { return check_monotone(dom, cod, table); }));
  }

  void rel_decl() {
    ++pos_;
    const Token& name = ident("relation name");
    keyword("on");
    const Token& carrier_tok = ident("poset name");
    const PosetPtr carrier = poset_ref(carrier_tok);
    keyword("kind");
    expect("=");
    const Token& kind = ident("relation kind");
    if (kind.text != "raw" && kind.text != "preorder" && kind.text != "equiv") {
      fail(kind, "relation kind must be raw, preorder or equiv");
    }
    expect("{");
    Rel r(carrier);
    while (cur().kind == Token::Kind::kIdent) {
      const Token& a = ident("element");
      const bool both = is_punct("~");
      if (!both && !is_punct("<=")) fail(cur(), "expected '<=' or '~', found " + describe(cur()));
      ++pos_;
      const Token& b = ident("element");
      const Index i = element_ref(carrier, a, carrier_tok.text);
      const Index j = element_ref(carrier, b, carrier_tok.text);
      r.insert(i, j);
      if (both) r.insert(j, i);
      separator();
    }
    expect("}");
    if (kind.text == "preorder") r = close(r, Closure::kReflexiveTransitive);
    if (kind.text == "equiv") r = close(r, Closure::kEquivalence);
    define(name, std::move(r));
  }

  Workspace& ws_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---- export ----

const std::string& checked(const std::string& name) {
  if (!is_identifier(name)) throw InvalidArgument("name '" + name + "' cannot be written back");
  return name;
}

std::string body(const std::vector<std::string>& items) {
  std::string out = "{\n";
  for (const auto& item : items) out += "  " + item + ";\n";
  return out + "}\n";
}

const std::string& poset_name(const Workspace& ws, const PosetPtr& p) {
  const std::string* n = ws.name_of(p);
  if (!n) throw InvalidArgument("poset is not declared in the workspace");
  return *n;
}

}  // namespace

void Workspace::add(std::string name, PosetPtr p) {
  add_named(posets_, std::move(name), std::move(p), "poset");
}
void Workspace::add(std::string name, FnTable f) {
  add_named(functions_, std::move(name), std::move(f), "function");
}
void Workspace::add(std::string name, Rel r) {
  add_named(relations_, std::move(name), std::move(r), "relation");
}

void Workspace::import(const ExampleBundle& bundle) {
  for (const auto& [n, p] : bundle.posets) add(n, p);
  for (const auto& [n, f] : bundle.functions) add(n, f);
  for (const auto& [n, r] : bundle.relations) add(n, r);
}

const PosetPtr* Workspace::find_poset(std::string_view name) const {
  return find_named(posets_, name);
}
const FnTable* Workspace::find_fn(std::string_view name) const {
  return find_named(functions_, name);
}
const Rel* Workspace::find_rel(std::string_view name) const {
  return find_named(relations_, name);
}

const PosetPtr& Workspace::poset(std::string_view name) const {
  if (auto p = find_poset(name)) return *p;
  throw InvalidArgument("unknown poset '" + std::string(name) + "'");
}
const FnTable& Workspace::fn(std::string_view name) const {
  if (auto f = find_fn(name)) return *f;
  throw InvalidArgument("unknown function '" + std::string(name) + "'");
}
const Rel& Workspace::rel(std::string_view name) const {
  if (auto r = find_rel(name)) return *r;
  throw InvalidArgument("unknown relation '" + std::string(name) + "'");
}

const std::string* Workspace::name_of(const PosetPtr& p) const {
  for (const auto& [n, q] : posets_) {
    if (q == p) return &n;
  }
  for (const auto& [n, q] : posets_) {
    if (*q == *p) return &n;
  }
  return nullptr;
}

bool operator==(const Workspace& a, const Workspace& b) {
  if (a.posets_.size() != b.posets_.size()) return false;
  for (std::size_t i = 0; i < a.posets_.size(); ++i) {
    if (a.posets_[i].first != b.posets_[i].first) return false;
    if (!(*a.posets_[i].second == *b.posets_[i].second)) return false;
  }
  return a.functions_ == b.functions_ && a.relations_ == b.relations_;
}

void parse_into(Workspace& ws, std::string_view source) { Parser(ws, source).run(); }

Workspace parse_workspace(std::string_view source) {
  Workspace ws;
  parse_into(ws, source);
  return ws;
}

bool is_identifier(std::string_view name) {
  try {
    const auto tokens = Lexer(name).run();
    return tokens.size() == 2 && tokens[0].kind == Token::Kind::kIdent && tokens[0].text == name;
  } catch (const ParseError&) {
    return false;
  }
}

std::string export_poset(std::string_view name, const Poset& p) {
  std::string elements = "elements:";
  for (const auto& n : p.names()) elements += " " + checked(n);
  std::vector<std::string> items = {elements};
  const auto covers = p.covering_pairs();
  if (!covers.empty()) {
    std::string order = "order:";
    for (std::size_t i = 0; i < covers.size(); ++i) {
      order += (i ? ", " : " ") + p.name(covers[i].first) + " <= " + p.name(covers[i].second);
    }
    items.push_back(order);
  }
  return "poset " + checked(std::string(name)) + " " + body(items);
}

std::string export_fn(const Workspace& ws, std::string_view name, const FnTable& f) {
  std::vector<std::string> items;
  for (Index x = 0; x < f.dom()->size(); ++x) {
    items.push_back(f.dom()->name(x) + " -> " + f.cod()->name(f(x)));
  }
  return "fn " + checked(std::string(name)) + " : " + poset_name(ws, f.dom()) + " -> " +
         poset_name(ws, f.cod()) + " " + body(items);
}

std::string export_rel(const Workspace& ws, std::string_view name, const Rel& r) {
  const Poset& a = *r.carrier();
  std::vector<std::string> items;
  std::string kind = "raw";
  if (r.is_preorder()) {
    kind = r.is_symmetric() ? "equiv" : "preorder";
    const OrderedPartition op = to_ordered_partition(r);
    std::vector<Index> reps;
    for (ElementSet block : op.blocks()) {
      const Index rep = block.first();
      reps.push_back(rep);
      block.for_each([&](Index x) {
        if (x != rep) items.push_back(a.name(rep) + " ~ " + a.name(x));
      });
    }
    for (const auto& [lo, hi] : block_poset(op)->covering_pairs()) {
      items.push_back(a.name(reps[lo]) + " <= " + a.name(reps[hi]));
    }
  } else {
    for (const auto& [x, y] : r.pairs()) items.push_back(a.name(x) + " <= " + a.name(y));
  }
  return "rel " + checked(std::string(name)) + " on " + poset_name(ws, r.carrier()) +
         " kind=" + kind + " " + body(items);
}

std::string export_workspace(const Workspace& ws) {
  std::string out;
  for (const auto& [n, p] : ws.posets()) out += export_poset(n, *p);
  for (const auto& [n, f] : ws.functions()) out += export_fn(ws, n, f);
  for (const auto& [n, r] : ws.relations()) out += export_rel(ws, n, r);
  return out;
}

}  // namespace loci
