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

#include "loci/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "loci/powerdomain.hpp"

namespace loci {
namespace {

template <typename T>
const T& lookup(const Named<T>& items, std::string_view n, const char* kind,
                const std::string& bundle) {
  for (const auto& [name, item] : items) {
    if (name == n) return item;
  }
  throw InvalidArgument("bundle '" + bundle + "' has no " + kind + " named '" + std::string(n) +
                        "'");
}

std::vector<std::string> numerals(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

FnTable tabulate(const PosetPtr& dom, const PosetPtr& cod,
                 const std::function<std::string(const std::string&)>& f) {
  std::vector<Index> t(dom->size());
  for (Index x = 0; x < dom->size(); ++x) t[x] = cod->at(f(dom->name(x)));
  return FnTable(dom, cod, std::move(t));
}

FnTable by_names(const PosetPtr& dom, const PosetPtr& cod,
                 std::initializer_list<std::pair<std::string, std::string>> table) {
  const std::vector<std::pair<std::string, std::string>> rows(table);
  return check_monotone(dom, cod, rows);
}

void require_size(std::size_t n, std::size_t lo, std::size_t hi, const char* bundle) {
  if (n < lo || n > hi) {
    throw InvalidArgument(std::string(bundle) + " needs n between " + std::to_string(lo) +
                          " and " + std::to_string(hi));
  }
}

PosetPtr lifted_bool() { return lift(Poset::discrete({"T", "F"})); }

PosetPtr lifted_diamond() {
  const PosetPtr two = Poset::chain({"bot", "*"});
  return lift(product(two, two));
}

ExampleBundle v_bundle(std::size_t) {
  const NamedPair covers[] = {{"bot", "c"}, {"c", "a"}, {"c", "b"}};
  const PosetPtr v = Poset::build({"bot", "c", "a", "b"}, covers);
  ExampleBundle b;
  b.name = "V";
  b.posets = {{"V", v}};
  b.functions = {
      {"f1", FnTable::constant(v, v, v->at("a"))},
      {"f2", by_names(v, v, {{"bot", "bot"}, {"c", "c"}, {"a", "a"}, {"b", "c"}})},
  };
  b.notes =
      "Four-point poset bot < c < a, b. f1 is constant at a; f2 collapses b onto c. "
      "Its lattice of complete preorders has 14 elements.";
  return b;
}

ExampleBundle parity_bundle(std::size_t n) {
  require_size(n, 1, kMaxCarrier, "parity");
  const PosetPtr z = Poset::discrete(numerals(n));
  const PosetPtr z2 = lift(Poset::discrete({"0", "1"}));
  const PosetPtr par = Poset::discrete({"Even", "Odd"});
  auto even = [](const std::string& x) { return std::stoul(x) % 2 == 0; };
  ExampleBundle b;
  b.name = "parity";
  b.posets = {{"Z", z}, {"Z2_bot", z2}, {"Parity", par}};
  b.functions = {
      {"f0", tabulate(z, z2, [&](const std::string& x) { return even(x) ? "1" : "bot"; })},
      {"f1", tabulate(z, z2, [&](const std::string& x) { return even(x) ? "1" : "0"; })},
      {"f2", tabulate(z, par, [&](const std::string& x) { return even(x) ? "Even" : "Odd"; })},
  };
  b.notes =
      "Parity tests on Z = {0..n-1}. f0 diverges on odd inputs, f1 answers 0, f2 answers with "
      "a string. All three share a kernel; f0 has a strictly coarser ordered kernel.";
  return b;
}

ExampleBundle colours_bundle(std::size_t) {
  const PosetPtr d = Poset::discrete({"Red", "Orange", "Green", "Blue"});
  const PosetPtr bools = Poset::discrete({"True", "False"});
  const PosetPtr answers = Poset::discrete({"PrimaryRed", "PrimaryBlue", "NotPrimary"});
  ExampleBundle b;
  b.name = "colours";
  b.posets = {{"Colour", d}, {"Bool", bools}, {"Answer", answers}};
  b.functions = {
      {"isPrimary", by_names(d, bools,
                             {{"Red", "True"}, {"Orange", "False"}, {"Green", "False"},
                              {"Blue", "True"}})},
      {"isTrafficLight", by_names(d, bools,
                                  {{"Red", "True"}, {"Orange", "True"}, {"Green", "True"},
                                   {"Blue", "False"}})},
      {"primary", by_names(d, answers,
                           {{"Red", "PrimaryRed"}, {"Orange", "NotPrimary"},
                            {"Green", "NotPrimary"}, {"Blue", "PrimaryBlue"}})},
  };
  b.notes =
      "Unordered colours. isPrimary and isTrafficLight have incomparable kernels whose join is "
      "the kernel of primary.";
  return b;
}

ExampleBundle kite_bundle(std::size_t) {
  const NamedPair covers[] = {
      {"bot", "Tail"},
      {"bot", "Body(bot,bot)"},
      {"Body(bot,bot)", "Body(*,bot)"},
      {"Body(bot,bot)", "Body(bot,*)"},
      {"Body(*,bot)", "Body(*,*)"},
      {"Body(bot,*)", "Body(*,*)"},
  };
  const PosetPtr kite = Poset::build(
      {"bot", "Tail", "Body(bot,bot)", "Body(*,bot)", "Body(bot,*)", "Body(*,*)"}, covers);
  const PosetPtr bools = Poset::discrete({"True", "False"});
  ExampleBundle b;
  b.name = "kite";
  b.posets = {{"Bool", bools}, {"Kite", kite}};
  b.functions = {
      {"f_kite", by_names(bools, kite, {{"True", "Body(*,bot)"}, {"False", "Body(bot,*)"}})},
      {"g_kite", by_names(bools, kite, {{"True", "Body(*,bot)"}, {"False", "Tail"}})},
      {"g_kite_mirror", by_names(bools, kite, {{"True", "Tail"}, {"False", "Body(bot,*)"}})},
  };
  b.notes =
      "Kite = Body () () | Tail. f_kite is termination-insensitively secure; g_kite and its "
      "mirror image are not, and no equivalence-based termination observer separates them.";
  return b;
}

ExampleBundle diamond_bundle(std::size_t) {
  const PosetPtr a = lift(Poset::discrete({"0", "1", "2"}));
  const std::pair<Index, Index> dia[] = {
      {a->at("bot"), a->at("0")}, {a->at("bot"), a->at("1")},
      {a->at("0"), a->at("2")},   {a->at("1"), a->at("2")},
  };
  ExampleBundle b;
  b.name = "diamond-counterexample";
  b.posets = {{"A", a}};
  b.functions = {
      {"g_dia", by_names(a, a, {{"bot", "bot"}, {"0", "0"}, {"1", "1"}, {"2", "bot"}})},
      {"id", FnTable::identity(a)},
  };
  b.relations = {
      {"Q_dia", close(Rel::from_pairs(a, dia), Closure::kReflexiveTransitive)},
  };
  b.notes =
      "A = {0,1,2} lifted. Q_dia keeps every element distinct but arranges them in a diamond "
      "with 2 on top. g_dia shows that the compatible extension does not compose.";
  return b;
}

ExampleBundle iseven_bundle(std::size_t n) {
  require_size(n, 1, kMaxCarrier, "iseven");
  const PosetPtr z = Poset::discrete(numerals(n));
  const PosetPtr bb = lifted_bool();
  const PosetPtr d = lifted_diamond();
  auto even = [](const std::string& x) { return std::stoul(x) % 2 == 0; };
  ExampleBundle b;
  b.name = "iseven";
  b.posets = {{"N", z}, {"Bool_bot", bb}, {"D", d}};
  b.functions = {
      {"isEven1", tabulate(z, bb, [&](const std::string& x) { return even(x) ? "T" : "F"; })},
      {"isEven2",
       tabulate(z, d, [&](const std::string& x) { return even(x) ? "(*,bot)" : "(bot,*)"; })},
  };
  b.notes =
      "isEven1 answers in lifted booleans, isEven2 in a lifted diamond of pairs. Their "
      "ordered kernels coincide but isEven1 is not a monotone postprocessing of isEven2.";
  return b;
}

ExampleBundle omega_bundle(std::size_t n) {
  require_size(n, 2, kMaxCarrier - 1, "omega");
  std::vector<std::string> stages = numerals(n);
  stages.push_back("w");
  const PosetPtr omega = Poset::chain(stages);
  const PosetPtr z = Poset::discrete(numerals(n));
  ExampleBundle b;
  b.name = "omega";
  b.posets = {{"N", z}, {"Omega", omega}};
  b.functions = {
      {"S1", tabulate(z, omega,
                      [](const std::string& x) {
                        return x == "0" ? std::string("w") : std::to_string(std::stoul(x) - 1);
                      })},
      {"S2", tabulate(z, omega,
                      [](const std::string& x) { return x == "0" ? std::string("w") : "0"; })},
  };
  b.notes =
      "Streams truncated to a chain 0 < 1 < ... < n-1 with a separate top w. S1's ordered "
      "kernel is a chain and S2's has two points. In any finite truncation a monotone "
      "postprocessor from S1 to S2 exists; its absence needs the infinite limit.";
  return b;
}

ExampleBundle three_chain_bundle(std::size_t) {
  const PosetPtr a = Poset::chain({"0", "1", "2"});
  const ElementSet blocks[] = {ElementSet::singleton(0) | ElementSet::singleton(2),
                               ElementSet::singleton(1)};
  ExampleBundle b;
  b.name = "three-chain";
  b.posets = {{"A", a}};
  b.functions = {{"id", FnTable::identity(a)}};
  b.relations = {{"S", Rel::from_blocks(a, blocks)}};
  b.notes =
      "Chain 0 < 1 < 2 with S = {0,2}{1}. S is not realisable, Cp(S) = All, and the identity "
      "satisfies All => All but not All => S.";
  return b;
}

ExampleBundle nd_bool_bundle(std::size_t) {
  const PosetPtr bb = lifted_bool();
  const Powerdomain pd(bb);
  const PosetPtr bools = Poset::discrete({"True", "False"});
  ExampleBundle b;
  b.name = "nd-bool";
  b.posets = {{"Bool", bools}, {"Bool_bot", bb}, {"P(Bool_bot)", pd.poset()}};
  b.functions = {
      {"C", by_names(bools, pd.poset(), {{"True", "[bot,T]"}, {"False", "[bot,F]"}})},
  };
  b.notes =
      "Plotkin powerdomain of lifted booleans (7 elements). C may diverge or answer its input; "
      "its two outputs share the upper bound [bot,T,F].";
  return b;
}

using Builder = ExampleBundle (*)(std::size_t);

const std::map<std::string, Builder, std::less<>>& registry() {
  static const std::map<std::string, Builder, std::less<>> r = {
      {"V", v_bundle},
      {"colours", colours_bundle},
      {"diamond-counterexample", diamond_bundle},
      {"iseven", iseven_bundle},
      {"kite", kite_bundle},
      {"nd-bool", nd_bool_bundle},
      {"omega", omega_bundle},
      {"parity", parity_bundle},
      {"three-chain", three_chain_bundle},
  };
  return r;
}

}  // namespace

const PosetPtr& ExampleBundle::poset(std::string_view n) const {
  return lookup(posets, n, "poset", name);
}

const FnTable& ExampleBundle::fn(std::string_view n) const {
  return lookup(functions, n, "function", name);
}

const Rel& ExampleBundle::rel(std::string_view n) const {
  return lookup(relations, n, "relation", name);
}

ExampleBundle get_example(std::string_view name, std::size_t n) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) {
    std::string known;
    for (const auto& [k, _] : r) known += (known.empty() ? "" : ", ") + k;
    throw InvalidArgument("unknown example '" + std::string(name) + "'; available: " + known);
  }
  return it->second(n);
}

std::vector<std::string> list_examples() {
  std::vector<std::string> out;
  for (const auto& [k, _] : registry()) out.push_back(k);
  return out;
}

}  // namespace loci
