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

#include "loci/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "loci/catalog.hpp"
#include "loci/powerdomain.hpp"
#include "loci/render.hpp"
#include "loci/text_format.hpp"

namespace loci {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

TEST(TextFormat, CatalogBundlesRoundTrip) {
  for (const auto& name : list_examples()) {
    SCOPED_TRACE(name);
    Workspace ws;
    ws.import(get_example(name, 4));
    const std::string text = export_workspace(ws);
    const Workspace back = parse_workspace(text);
    EXPECT_TRUE(back == ws);
    EXPECT_EQ(export_workspace(back), text);
  }
}

TEST(TextFormat, ParsesDeclarations) {
  const Workspace ws = parse_workspace(R"(
# lifted booleans
poset B { elements: bot T F; order: bot <= T, bot <= F }
poset U { elements: u }
fn isT : B -> B { bot -> bot; T -> T; F -> bot }
rel Q on B kind=preorder { T <= F; bot <= T }
rel E on B kind=equiv { T ~ F }
rel R on B kind=raw { T <= F }
)");
  const Poset& b = *ws.poset("B");
  EXPECT_EQ(b.size(), 3u);
  EXPECT_TRUE(b.lt(b.at("bot"), b.at("F")));
  EXPECT_EQ(ws.fn("isT")(b.at("F")), b.at("bot"));
  const Rel& q = ws.rel("Q");
  EXPECT_TRUE(q.contains(b.at("bot"), b.at("F")));
  EXPECT_TRUE(q.is_reflexive());
  EXPECT_TRUE(ws.rel("E").contains(b.at("F"), b.at("T")));
  EXPECT_EQ(ws.rel("R").pair_count(), 1u);
  EXPECT_EQ(*ws.name_of(ws.poset("U")), "U");
}

TEST(TextFormat, ErrorsCarryPositions) {
  try {
    parse_workspace("poset A { elements: x y }\nfn f : A -> A { x -> z; y -> y }\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("z"), std::string::npos);
  }
  try {
    parse_workspace("poset A {\n  elements: x y;\n  order x <= y\n}\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 9u);
  }
  EXPECT_THROW(parse_workspace("fn f : A -> A { }"), ParseError);
  EXPECT_THROW(parse_workspace("poset A { elements: x; order: x <= y }"), ParseError);
  EXPECT_THROW(parse_workspace("poset A { elements: x } poset A { elements: y }"), Error);
  EXPECT_THROW(parse_workspace("poset A { elements: x y; order: x <= y, y <= x }"), Error);
  EXPECT_THROW(parse_workspace("poset A { elements: x y; order: x <= y }\n"
                               "fn f : A -> A { x -> y; y -> x }"),
               Error);
}

TEST(Render, Relations) {
  const ExampleBundle v = get_example("V");
  const PosetPtr p = v.poset("V");
  EXPECT_EQ(render_relation(Rel::all(p)), "{bot c a b}");
  EXPECT_EQ(render_relation(Rel::identity(p)), "{bot} | {c} | {a} | {b}");
  EXPECT_EQ(render_relation(Rel::order(p)), "{bot} <= {c}, {c} <= {a}, {c} <= {b}");
  Rel raw(p);
  raw.insert(p->at("a"), p->at("b"));
  EXPECT_EQ(render_relation(raw), "pairs: a <= b");
  EXPECT_EQ(render_set(*p, ElementSet()), "{}");
}

TEST(Render, DotShapes) {
  const std::string v = emit_dot("V", *get_example("V").poset("V"));
  EXPECT_EQ(count(v, "->"), 3u);
  EXPECT_EQ(count(v, "[label="), 4u);
  const std::string one = emit_dot("one", *Poset::discrete({"x"}));
  EXPECT_EQ(count(one, "[label="), 1u);
  EXPECT_EQ(count(one, "->"), 0u);
  const std::string pd = emit_dot("P", *Powerdomain(lift(Poset::discrete({"T", "F"}))).poset());
  EXPECT_EQ(count(pd, "[label="), 7u);
  const PosetPtr c = Poset::chain({"0", "1", "2"});
  EXPECT_EQ(count(emit_dot("c", *c, true), "->"), 3u);
}

TEST(Cli, CheckExitCodes) {
  const Outcome v = run({"--example", "parity", "check", "--fn", "f1", "--pre", "All", "--post",
                         "order"});
  EXPECT_EQ(v.code, kExitViolated);
  EXPECT_EQ(v.out, "VIOLATION: a=0 a'=1 f(a)=1 f(a')=0\n");
  const Outcome h = run({"--example", "parity", "check", "--fn", "f0", "--pre", "All", "--post",
                         "order", "--ti"});
  EXPECT_EQ(h.code, kExitHolds);
  EXPECT_EQ(h.out, "HOLDS\n");
  const Outcome bad = run({"--example", "parity", "check", "--fn", "f9", "--pre", "All",
                           "--post", "order"});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_EQ(bad.err.rfind("error: ", 0), 0u);
  const Outcome mode = run({"--example", "V", "check", "--fn", "f2", "--pre", "order", "--post",
                            "order", "--mode", "loi"});
  EXPECT_EQ(mode.code, kExitError);
  EXPECT_EQ(run({"--example", "V", "bogus"}).code, kExitError);
}

TEST(Cli, KernelsAndRealisability) {
  EXPECT_EQ(run({"--example", "V", "kernel", "--fn", "f2", "--ordered"}).out,
            "{bot} <= {c b} <= {a}\n");
  EXPECT_EQ(run({"--example", "V", "knowledge", "--fn", "f2", "--input", "b"}).out, "{c b}\n");
  EXPECT_EQ(run({"--example", "three-chain", "cp", "--rel", "S"}).out, "{0 1 2}\n");
  const Outcome u = run({"--example", "three-chain", "realisable", "--rel", "S"});
  EXPECT_EQ(u.code, kExitViolated);
  EXPECT_EQ(u.out, "UNREALISABLE\ncycle: {0 2} -> {1} -> {0 2}\n");
  const Outcome r = run({"--example", "V", "realisable", "--rel", "Id", "--poset", "V",
                         "--witness"});
  EXPECT_EQ(r.code, kExitHolds);
  ASSERT_EQ(r.out.rfind("REALISABLE\n", 0), 0u);
  // The witness parses back once its domain is known.
  Workspace ws;
  ws.import(get_example("V"));
  EXPECT_NO_THROW(parse_into(ws, r.out.substr(11)));
  EXPECT_EQ(ws.fn("Id_witness").range().size(), 4u);
}

TEST(Cli, EnumerateAndPowerdomain) {
  const Outcome loci = run({"--example", "V", "enumerate", "--poset", "V", "--what", "loci"});
  EXPECT_EQ(loci.out.substr(0, loci.out.find('\n')), "14");
  EXPECT_EQ(count(loci.out, "\n"), 15u);
  const Outcome capped = run({"--example", "parity", "--n", "8", "enumerate", "--poset", "Z",
                              "--what", "loi"});
  EXPECT_EQ(capped.code, kExitError);
  const Outcome pd = run({"--example", "iseven", "powerdomain", "--poset", "Bool_bot"});
  EXPECT_EQ(pd.code, kExitHolds);
  const Workspace ws = parse_workspace(pd.out);
  EXPECT_EQ(ws.poset("P(Bool_bot)")->size(), 7u);
}

TEST(Cli, HasseAndCatalog) {
  const Outcome h = run({"--example", "V", "hasse", "--poset", "V"});
  EXPECT_EQ(count(h.out, "->"), 3u);
  const Outcome lat = run({"--example", "V", "hasse", "--poset", "V", "--lattice", "loci"});
  EXPECT_EQ(count(lat.out, "[label="), 14u);
  const Outcome list = run({"catalog", "--list"});
  for (const auto& name : list_examples()) EXPECT_NE(list.out.find(name), std::string::npos);
  const Outcome exported = run({"catalog", "--name", "kite", "--export"});
  Workspace ws;
  ws.import(get_example("kite"));
  EXPECT_TRUE(parse_workspace(exported.out) == ws);
}

TEST(Cli, ReadsDeclarationFiles) {
  const auto path = std::filesystem::temp_directory_path() / "loci_cli_test.loci";
  {
    std::ofstream f(path);
    f << "poset B { elements: bot T F; order: bot <= T, bot <= F }\n"
         "fn leak : B -> B { bot -> bot; T -> T; F -> F }\n";
  }
  const Outcome o = run({"--file", path.string(), "check", "--fn", "leak", "--pre", "All",
                         "--post", "order", "--ti"});
  EXPECT_EQ(o.code, kExitViolated);
  EXPECT_EQ(o.out, "VIOLATION: a=T a'=F f(a)=T f(a')=F\n");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"--file", path.string(), "hasse", "--poset", "B"}).code, kExitError);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"--example", "V", "hasse", "--poset", "V", "--lattice", "loci"},
      {"--example", "kite", "enumerate", "--poset", "Kite", "--what", "loci"},
      {"catalog", "--name", "nd-bool", "--export"},
  };
  for (const auto& c : commands) EXPECT_EQ(run(c).out, run(c).out);
}

}  // namespace
}  // namespace loci
