// Copyright 2026 The raag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "raag/cli.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "raag/arboreal.hpp"
#include "raag/checks.hpp"
#include "raag/conjugacy.hpp"
#include "raag/errors.hpp"
#include "raag/lattice.hpp"
#include "raag/structure.hpp"

namespace raag {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string graph_path;
  std::string op;
  std::vector<std::string> args;
  std::string w, x, a;
  bool json = false;
  CheckConfig check;
};

struct Result {
  Json json;
  std::string text;
};

Result of(const GroupElement& e) { return {e.str(), e.str()}; }
Result of(bool b) { return {b, b ? "true" : "false"}; }
Result of(std::size_t n) { return {n, std::to_string(n)}; }

Result of(const std::vector<GroupElement>& es) {
  Result r{Json::array(), ""};
  for (const auto& e : es) {
    r.json.push_back(e.str());
    r.text += e.str() + "\n";
  }
  if (!r.text.empty()) r.text.pop_back();
  return r;
}

std::string join_names(const std::vector<GroupElement>& es) {
  std::string out;
  for (const auto& e : es) out += (out.empty() ? "" : ", ") + e.str();
  return out;
}

// Resolves the operands of an operation from named options and positionals.
class Operands {
 public:
  Operands(const Options& o, GraphPtr g) : opts_(o), graph_(std::move(g)) {}

  /// `names` lists the operands in positional order; w, x and a may also be
  /// supplied by option.
  std::vector<GroupElement> take(const std::vector<std::string>& names) const {
    std::vector<GroupElement> out;
    std::size_t next = 0;
    for (const auto& n : names) {
      const std::string* named = nullptr;
      if (n == "w" && !opts_.w.empty()) named = &opts_.w;
      if (n == "x" && !opts_.x.empty()) named = &opts_.x;
      if (n == "a" && !opts_.a.empty()) named = &opts_.a;
      if (named) {
        out.push_back(GroupElement::parse(graph_, *named));
      } else {
        if (next >= opts_.args.size()) throw ParseError("missing operand '" + n + "' for '" + opts_.op + "'");
        out.push_back(GroupElement::parse(graph_, opts_.args[next++]));
      }
    }
    if (next != opts_.args.size()) throw ParseError("too many operands for '" + opts_.op + "'");
    return out;
  }

  long long integer(const std::string& text) const {
    try {
      std::size_t used = 0;
      long long v = std::stoll(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("expected an integer, got '" + text + "'");
  }

  const Options& opts() const { return opts_; }
  const GraphPtr& graph() const { return graph_; }

 private:
  const Options& opts_;
  GraphPtr graph_;
};

using Handler = std::function<Result(const Operands&)>;

const std::map<std::string, Handler>& eval_ops() {
  static const std::map<std::string, Handler> ops = {
      {"normalize", [](const Operands& o) { return of(o.take({"w"})[0]); }},
      {"mul",
       [](const Operands& o) {
         auto v = o.take({"x", "y"});
         return of(multiply(v[0], v[1]));
       }},
      {"inv", [](const Operands& o) { return of(invert(o.take({"x"})[0])); }},
      {"pow",
       [](const Operands& o) {
         const auto& args = o.opts().args;
         if (args.size() != 2) throw ParseError("pow takes a word and an exponent");
         return of(power(GroupElement::parse(o.graph(), args[0]), o.integer(args[1])));
       }},
      {"len", [](const Operands& o) { return of(o.take({"x"})[0].length()); }},
      {"meet",
       [](const Operands& o) {
         auto v = o.take({"x", "y"});
         return of(meet(v[0], v[1]));
       }},
      {"median",
       [](const Operands& o) {
         auto v = o.take({"x", "y", "z"});
         return of(median(v[0], v[1], v[2]));
       }},
      {"join",
       [](const Operands& o) {
         auto v = o.take({"x", "y"});
         auto j = join(v[0], v[1]);
         return j ? of(*j) : Result{nullptr, "none"};
       }},
      {"orth",
       [](const Operands& o) {
         auto v = o.take({"x", "y"});
         return of(is_orthogonal(v[0], v[1]));
       }},
      {"prefix",
       [](const Operands& o) {
         auto v = o.take({"x", "y"});
         return of(is_prefix(v[0], v[1]));
       }},
      {"interval",
       [](const Operands& o) {
         auto v = o.take({"x", "y"});
         return of(interval(v[0], v[1], o.opts().check.interval_cap).elements);
       }},
      {"boundary",
       [](const Operands& o) {
         auto v = o.take({"x"});
         return of(boundary(interval(GroupElement::identity(o.graph()), v[0], o.opts().check.interval_cap)));
       }},
  };
  return ops;
}

const std::map<std::string, Handler>& dyn_ops() {
  static const std::map<std::string, Handler> ops = {
      {"cyclred",
       [](const Operands& o) {
         const auto r = cyclic_reduce(o.take({"w"})[0]);
         return Result{Json{{"u", r.u.str()}, {"v", r.v.str()}}, "u: " + r.u.str() + "\nv: " + r.v.str()};
       }},
      {"conj",
       [](const Operands& o) {
         const auto& args = o.opts().args;
         if (args.size() != 2) throw ParseError("conj takes two words");
         const auto w1 = GroupElement::parse(o.graph(), args[0]);
         const auto w2 = GroupElement::parse(o.graph(), args[1]);
         const auto res = conjugacy(w1, w2, o.opts().check.conj_cap);
         Json j{{"conjugate", res.conjugate}};
         std::string text = res.conjugate ? "true" : "false";
         if (res.certificate) {
           j["certificate"] = res.certificate->str();
           text += "\ncertificate: " + res.certificate->str();
         }
         return Result{std::move(j), std::move(text)};
       }},
      {"phi",
       [](const Operands& o) {
         auto v = o.take({"w", "x"});
         return of(fold_phi(v[0], v[1]));
       }},
      {"axis",
       [](const Operands& o) {
         auto v = o.take({"w", "x"});
         return of(in_axis(v[0], v[1]));
       }},
      {"preceq",
       [](const Operands& o) {
         auto v = o.take({"w", "x", "y"});
         return of(preceq(v[0], v[1], v[2]));
       }},
      {"sim",
       [](const Operands& o) {
         auto v = o.take({"w", "x", "y"});
         return of(sim(v[0], v[1], v[2]));
       }},
      {"equiv",
       [](const Operands& o) {
         auto v = o.take({"w", "x", "y"});
         return of(equiv(v[0], v[1], v[2], o.opts().check.interval_cap));
       }},
      {"ll",
       [](const Operands& o) {
         auto v = o.take({"w", "x", "y"});
         return of(ll(v[0], v[1], v[2], o.opts().check.interval_cap));
       }},
      {"qdir",
       [](const Operands& o) {
         auto v = o.take({"w", "x", "y"});
         return of(qdir(v[0], v[1], v[2]));
       }},
      {"psi",
       [](const Operands& o) {
         auto v = o.take({"w", "a", "x"});
         return of(psi_fold(v[0], v[1], v[2]));
       }},
      {"slice",
       [](const Operands& o) {
         auto v = o.take({"w", "a", "x"});
         return of(in_axis_slice(v[0], v[1], v[2]));
       }},
      {"decompose",
       [](const Operands& o) {
         auto v = o.take({"w", "a", "x"});
         const auto [y, z] = decompose_axis(v[0], v[1], v[2]);
         return Result{Json{{"y", y.str()}, {"z", z.str()}}, "y: " + y.str() + "\nz: " + z.str()};
       }},
      {"dirjoin",
       [](const Operands& o) {
         auto v = o.take({"w", "a", "x", "y"});
         return of(dir_join(v[0], v[1], v[2], v[3]));
       }},
  };
  return ops;
}

Json pairs_json(const PrimitiveDecomposition& d) {
  Json pairs = Json::array();
  for (const auto& [p, m] : d.pairs) pairs.push_back({{"p", p.str()}, {"m", m}});
  return pairs;
}

std::string pairs_text(const PrimitiveDecomposition& d) {
  std::string out;
  for (const auto& [p, m] : d.pairs) out += (out.empty() ? "" : " ") + ("(" + p.str() + ", " + std::to_string(m) + ")");
  return out;
}

Json names_json(const std::vector<GroupElement>& es) {
  Json j = Json::array();
  for (const auto& e : es) j.push_back(e.str());
  return j;
}

const std::map<std::string, Handler>& struct_ops() {
  static const std::map<std::string, Handler> ops = {
      {"prim", [](const Operands& o) { return of(is_primitive(o.take({"w"})[0])); }},
      {"root",
       [](const Operands& o) {
         const auto& args = o.opts().args;
         if (args.empty() || args.size() > 2) throw ParseError("root takes a word and an optional degree");
         const auto w = GroupElement::parse(o.graph(), args[0]);
         if (args.size() == 2) {
           const long long m = o.integer(args[1]);
           if (m < 1) throw ParseError("root degree must be positive");
           auto r = mth_root(w, static_cast<std::size_t>(m));
           return r ? of(*r) : Result{nullptr, "none"};
         }
         const auto [p, m] = max_root(w);
         return Result{Json{{"p", p.str()}, {"m", m}}, "root: " + p.str() + "\nexponent: " + std::to_string(m)};
       }},
      {"decompose",
       [](const Operands& o) {
         const auto d = prim_decompose(o.take({"w"})[0]);
         return Result{Json{{"conjugator", d.conjugator.str()}, {"pairs", pairs_json(d)}},
                       "conjugator: " + d.conjugator.str() + "\npairs: " + pairs_text(d)};
       }},
      {"centralizer",
       [](const Operands& o) {
         const auto w = o.take({"w"})[0];
         const auto c = centralizer(w);
         Json j = Json::object();
         if (!w.is_identity()) {
           const auto d = prim_decompose(w);
           j["conjugator"] = d.conjugator.str();
           j["pairs"] = pairs_json(d);
         }
         j["raag_gens"] = names_json(c.raag_generators);
         j["abelian_gens"] = names_json(c.abelian_generators);
         return Result{std::move(j),
                       "raag: " + join_names(c.raag_generators) + "\nabelian: " + join_names(c.abelian_generators)};
       }},
      {"center",
       [](const Operands& o) {
         o.take({});
         Result r{Json::array(), ""};
         for (auto s : center(*o.graph())) {
           r.json.push_back(o.graph()->name(s));
           r.text += (r.text.empty() ? "" : " ") + o.graph()->name(s);
         }
         return r;
       }},
      {"hbasis", [](const Operands& o) { return of(h_basis(o.take({"w"})[0])); }},
  };
  return ops;
}

Json config_json(const Options& o, bool with_sampling) {
  Json c{{"graph", o.graph_path}};
  if (with_sampling) {
    c["seed"] = o.check.seed;
    c["samples"] = o.check.samples;
    c["max_len"] = o.check.max_len;
  }
  c["interval_cap"] = o.check.interval_cap;
  c["conj_cap"] = o.check.conj_cap;
  return c;
}

void write_check_text(const CheckReport& report, std::ostream& out) {
  for (const auto& p : report.properties) {
    out << p.suite << "/" << p.property << ": " << p.passed << " passed, " << p.vacuous << " vacuous, "
        << p.inconclusive << " inconclusive, " << p.failures << " failed" << (p.warn_only ? " (warn-only)" : "")
        << "\n";
    for (const auto& c : p.counterexamples) {
      out << "  counterexample:";
      for (const auto& [k, v] : c) out << " " << k << "=\"" << v << "\"";
      out << "\n";
    }
  }
  out << (report.ok() ? "ok" : "FAILED: " + std::to_string(report.hard_failures()) + " failures") << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-angled Artin group toolkit"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-g,--graph", o.graph_path, "commutation graph file")->required();
    sub->add_flag("--json", o.json, "emit a JSON document");
    sub->add_option("--interval-cap", o.check.interval_cap, "largest cell to enumerate")->check(CLI::PositiveNumber);
    sub->add_option("--conj-cap", o.check.conj_cap, "largest conjugate set to explore")->check(CLI::PositiveNumber);
  };
  auto operations = [&](CLI::App* sub, const std::map<std::string, Handler>& ops) {
    std::vector<std::string> names;
    for (const auto& [k, v] : ops) names.push_back(k);
    sub->add_option("op", o.op, "operation")->required()->check(CLI::IsMember(names));
    sub->add_option("args", o.args, "words");
    common(sub);
  };

  auto* eval = app.add_subcommand("eval", "group and order operations");
  operations(eval, eval_ops());
  auto* dyn = app.add_subcommand("dyn", "conjugacy and the dynamics of an element");
  operations(dyn, dyn_ops());
  dyn->add_option("--w", o.w, "the element w");
  dyn->add_option("--x", o.x, "the point x");
  dyn->add_option("--a", o.a, "the base point a");
  auto* strct = app.add_subcommand("struct", "primitives, roots and centralizers");
  operations(strct, struct_ops());

  auto* check = app.add_subcommand("check", "run property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check->add_option("suite", o.op, "suite name")->required()->check(CLI::IsMember(suites));
  common(check);
  check->add_option("--samples", o.check.samples, "samples per property")->check(CLI::PositiveNumber);
  check->add_option("--seed", o.check.seed, "64-bit seed");
  check->add_option("--max-len", o.check.max_len, "longest sampled word")->check(CLI::PositiveNumber);
  check->add_option("--workers", o.check.workers, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    const GraphPtr graph = load_graph_file(o.graph_path);
    Json doc;
    if (check->parsed()) {
      const CheckReport report = run_checks(graph, o.op, o.check);
      if (o.json) {
        doc = {{"command", "check " + o.op}, {"config", config_json(o, true)}, {"report", to_json(report)}};
        out << doc.dump(2) << "\n";
      } else {
        write_check_text(report, out);
      }
      return report.ok() ? kExitOk : kExitCheckFailed;
    }
    const auto& ops = eval->parsed() ? eval_ops() : dyn->parsed() ? dyn_ops() : struct_ops();
    const std::string group = eval->parsed() ? "eval" : dyn->parsed() ? "dyn" : "struct";
    const Result r = ops.at(o.op)(Operands(o, graph));
    if (o.json) {
      doc = {{"command", group + " " + o.op}, {"config", config_json(o, false)}, {"result", r.json}};
      out << doc.dump(2) << "\n";
    } else {
      out << r.text << "\n";
    }
    return kExitOk;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace raag
