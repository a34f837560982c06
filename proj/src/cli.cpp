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

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "loci/catalog.hpp"
#include "loci/loci.hpp"
#include "loci/loi.hpp"
#include "loci/powerdomain.hpp"
#include "loci/render.hpp"
#include "loci/text_format.hpp"
#include "loci/tini.hpp"

namespace loci {
namespace {

// Lattice diagrams are quadratic in node count and unreadable beyond this.
constexpr std::size_t kMaxLatticeNodes = 512;

struct Options {
  std::vector<std::string> files;
  std::vector<std::string> examples;
  std::size_t n = kDefaultIntegerCarrier;
  std::size_t cap = kDefaultEnumerationCap;

  std::string fn, pre, post, mode = "any", input, rel, poset, what, lattice, name;
  bool ti = false, ordered = false, witness = false, full = false, list = false,
       export_ = false;
};

Workspace load(const Options& o) {
  Workspace ws;
  for (const auto& e : o.examples) ws.import(get_example(e, o.n));
  for (const auto& path : o.files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      parse_into(ws, buf.str());
    } catch (const ParseError& e) {
      throw InvalidArgument(path + ": " + e.what());
    }
  }
  return ws;
}

Rel resolve_rel(const Workspace& ws, const std::string& name, const PosetPtr& carrier) {
  if (const Rel* r = ws.find_rel(name)) {
    if (carrier && !same_carrier(r->carrier(), carrier)) {
      throw CarrierMismatch("relation '" + name + "' is not on the expected poset");
    }
    return *r;
  }
  if (name == "All" || name == "Id" || name == "order") {
    if (!carrier) throw InvalidArgument("'" + name + "' needs --poset to fix its carrier");
    if (name == "All") return Rel::all(carrier);
    if (name == "Id") return Rel::identity(carrier);
    return Rel::order(carrier);
  }
  throw InvalidArgument("unknown relation '" + name + "'");
}

PosetPtr optional_poset(const Workspace& ws, const Options& o) {
  return o.poset.empty() ? nullptr : ws.poset(o.poset);
}

int cmd_check(const Workspace& ws, const Options& o, std::ostream& out) {
  const FnTable& f = ws.fn(o.fn);
  const Rel p = resolve_rel(ws, o.pre, f.dom());
  const Rel q = resolve_rel(ws, o.post, f.cod());
  FlowResult result = FlowResult::holding();
  if (o.ti) {
    result = ti_flow_check(f, p, q);
  } else {
    if (o.mode == "loi") {
      require_equivalence(p, "precondition");
      require_equivalence(q, "postcondition");
    } else if (o.mode == "loci") {
      require_complete(p, "precondition");
      require_complete(q, "postcondition");
    }
    result = flow_check(f, p, q);
  }
  if (result.holds()) {
    out << "HOLDS\n";
    return kExitHolds;
  }
  out << render_violation(f, *result.violation()) << "\n";
  return kExitViolated;
}

int cmd_kernel(const Workspace& ws, const Options& o, std::ostream& out) {
  const FnTable& f = ws.fn(o.fn);
  out << render_relation(o.ordered ? ordered_kernel(f) : kernel(f)) << "\n";
  return kExitHolds;
}

int cmd_knowledge(const Workspace& ws, const Options& o, std::ostream& out) {
  const FnTable& f = ws.fn(o.fn);
  const Index a = f.dom()->at(o.input);
  out << render_set(*f.dom(), o.ordered ? ordered_knowledge_set(f, a) : knowledge_set(f, a))
      << "\n";
  return kExitHolds;
}

int cmd_cp(const Workspace& ws, const Options& o, std::ostream& out) {
  out << render_relation(cp(resolve_rel(ws, o.rel, optional_poset(ws, o)))) << "\n";
  return kExitHolds;
}

int cmd_er(const Workspace& ws, const Options& o, std::ostream& out) {
  out << render_relation(er(resolve_rel(ws, o.rel, optional_poset(ws, o)))) << "\n";
  return kExitHolds;
}

int cmd_realisable(const Workspace& ws, const Options& o, std::ostream& out) {
  const Rel r = resolve_rel(ws, o.rel, optional_poset(ws, o));
  const PhiResult result = phi_realisability(r);
  if (const auto* yes = std::get_if<Realisable>(&result)) {
    out << "REALISABLE\n";
    if (o.witness) {
      Workspace w;
      const std::string* dom = ws.name_of(r.carrier());
      w.add(dom ? *dom : "A", r.carrier());
      w.add(o.rel + "_quotient", yes->quotient);
      w.add(o.rel + "_witness", yes->map);
      out << export_poset(o.rel + "_quotient", *yes->quotient)
          << export_fn(w, o.rel + "_witness", yes->map);
    }
    return kExitHolds;
  }
  const auto& cycle = std::get<Unrealisable>(result).cycle;
  out << "UNREALISABLE\ncycle:";
  for (ElementSet b : cycle) out << " " << render_set(*r.carrier(), b) << " ->";
  out << " " << render_set(*r.carrier(), cycle.front()) << "\n";
  return kExitViolated;
}

std::vector<Rel> enumerate(const PosetPtr& a, const std::string& what, std::size_t cap) {
  return what == "loi" ? enumerate_loi(a, cap) : enumerate_loci(a, cap);
}

int cmd_enumerate(const Workspace& ws, const Options& o, std::ostream& out) {
  const auto rels = enumerate(ws.poset(o.poset), o.what, o.cap);
  out << rels.size() << "\n";
  for (const Rel& r : rels) out << render_relation(r) << "\n";
  return kExitHolds;
}

int cmd_hasse(const Workspace& ws, const Options& o, std::ostream& out) {
  if (!o.rel.empty()) {
    const Rel q = resolve_rel(ws, o.rel, optional_poset(ws, o));
    out << emit_dot(o.rel, to_ordered_partition(q), o.full);
    return kExitHolds;
  }
  if (o.poset.empty()) throw InvalidArgument("hasse needs --poset or --rel");
  const PosetPtr a = ws.poset(o.poset);
  if (o.lattice.empty()) {
    out << emit_dot(o.poset, *a, o.full);
    return kExitHolds;
  }
  const auto rels = enumerate(a, o.lattice, o.cap);
  if (rels.size() > kMaxLatticeNodes) {
    throw CapExceeded("lattice has " + std::to_string(rels.size()) + " elements; limit is " +
                      std::to_string(kMaxLatticeNodes));
  }
  const std::string title = (o.lattice == "loi" ? "LoI(" : "LoCI(") + o.poset + ")";
  out << emit_lattice_dot(title, rels, o.full);
  return kExitHolds;
}

int cmd_powerdomain(const Workspace& ws, const Options& o, std::ostream& out) {
  const Powerdomain pd(ws.poset(o.poset));
  out << export_poset("P(" + o.poset + ")", *pd.poset());
  return kExitHolds;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& n : list_examples()) out << n << "\n";
    return kExitHolds;
  }
  if (o.name.empty()) throw InvalidArgument("catalog needs --list or --name");
  const ExampleBundle b = get_example(o.name, o.n);
  if (o.export_) {
    Workspace w;
    w.import(b);
    out << export_workspace(w);
    return kExitHolds;
  }
  auto names = [](const auto& items) {
    std::string s;
    for (const auto& [n, _] : items) s += " " + n;
    return s;
  };
  out << b.name << ": " << b.notes << "\n"
      << "posets:" << names(b.posets) << "\n"
      << "functions:" << names(b.functions) << "\n"
      << "relations:" << names(b.relations) << "\n";
  return kExitHolds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Information-flow lattices over finite posets", "loci");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--file", o.files, "Declaration file (repeatable)");
  app.add_option("--example", o.examples, "Catalog bundle to import (repeatable)");
  app.add_option("--n", o.n, "Size of integer-like carriers in catalog bundles");
  app.add_option("--cap", o.cap, "Largest carrier accepted by enumeration");

  const auto modes = CLI::IsMember({"any", "loi", "loci"});
  const auto lattices = CLI::IsMember({"loi", "loci"});

  auto* check = app.add_subcommand("check", "Check f: P => Q");
  check->add_option("--fn", o.fn)->required();
  check->add_option("--pre", o.pre)->required();
  check->add_option("--post", o.post)->required();
  check->add_flag("--ti", o.ti, "Termination-insensitive check");
  check->add_option("--mode", o.mode, "Require equivalences (loi) or complete preorders (loci)")
      ->check(modes);

  auto* kern = app.add_subcommand("kernel", "Kernel of a function");
  kern->add_option("--fn", o.fn)->required();
  kern->add_flag("--ordered", o.ordered);

  auto* know = app.add_subcommand("knowledge", "Knowledge set of one input");
  know->add_option("--fn", o.fn)->required();
  know->add_option("--input", o.input)->required();
  know->add_flag("--ordered", o.ordered);

  auto* cpc = app.add_subcommand("cp", "Least complete preorder containing a relation");
  auto* erc = app.add_subcommand("er", "Symmetric part of a preorder");
  auto* real = app.add_subcommand("realisable", "Decide whether an equivalence is a kernel");
  for (auto* s : {cpc, erc, real}) {
    s->add_option("--rel", o.rel)->required();
    s->add_option("--poset", o.poset, "Carrier for All, Id and order");
  }
  real->add_flag("--witness", o.witness, "Print a realising function");

  auto* en = app.add_subcommand("enumerate", "List LoCI or LoI of a poset");
  en->add_option("--poset", o.poset)->required();
  en->add_option("--what", o.what)->required()->check(lattices);

  auto* hasse = app.add_subcommand("hasse", "GraphViz Hasse diagram");
  hasse->add_option("--poset", o.poset);
  hasse->add_option("--rel", o.rel);
  hasse->add_option("--lattice", o.lattice, "Draw LoI or LoCI of --poset")->check(lattices);
  hasse->add_flag("--full", o.full, "Draw every order pair, not only covers");

  auto* pd = app.add_subcommand("powerdomain", "Plotkin powerdomain of a poset");
  pd->add_option("--poset", o.poset)->required();

  auto* cat = app.add_subcommand("catalog", "Built-in examples");
  cat->add_flag("--list", o.list);
  cat->add_option("--name", o.name);
  cat->add_flag("--export", o.export_, "Print the bundle as declarations");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitError;
  }

  try {
    if (cat->parsed()) return cmd_catalog(o, out);
    const Workspace ws = load(o);
    if (check->parsed()) return cmd_check(ws, o, out);
    if (kern->parsed()) return cmd_kernel(ws, o, out);
    if (know->parsed()) return cmd_knowledge(ws, o, out);
    if (cpc->parsed()) return cmd_cp(ws, o, out);
    if (erc->parsed()) return cmd_er(ws, o, out);
    if (real->parsed()) return cmd_realisable(ws, o, out);
    if (en->parsed()) return cmd_enumerate(ws, o, out);
    if (hasse->parsed()) return cmd_hasse(ws, o, out);
    return cmd_powerdomain(ws, o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace loci
