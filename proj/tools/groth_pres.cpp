//===- groth_pres.cpp - Command-line front end ----------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/cells.hpp"
#include "grothpres/classify.hpp"
#include "grothpres/counting.hpp"
#include "grothpres/oracle.hpp"
#include "grothpres/qe.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace grothpres;
using json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, NotEquivalent = 1, Usage = 2, Input = 3 };

struct Common {
  std::string model = "k=0";
  std::vector<std::string> consts;
  bool json = false;
};

ModelSpec build_model(const Common &c) {
  ModelSpec spec;
  if (c.model.rfind("k=", 0) != 0)
    throw std::invalid_argument("--model expects k=INT");
  std::size_t used = 0;
  long k = std::stol(c.model.substr(2), &used);
  if (k < 0 || used != c.model.size() - 2)
    throw std::invalid_argument("--model expects k=INT");
  spec.k = static_cast<std::size_t>(k);
  for (const auto &d : c.consts) {
    auto eq = d.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--const expects NAME=VALUE");
    std::string name = d.substr(0, eq);
    if (spec.constants.count(name))
      throw std::invalid_argument("constant '" + name + "' given twice");
    spec.constants[name] = parse_group_element(d.substr(eq + 1), spec.k);
  }
  spec.validate();
  return spec;
}

Formula parse(const std::string &text, const ModelSpec &spec) {
  return parse_formula(text, spec.constant_names());
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

std::string name_of(const std::vector<std::string> &names, std::uint32_t v) {
  return v < names.size() ? names[v] : "t" + std::to_string(v);
}

json component_json(std::size_t i, const Component &c) {
  json j;
  j["coord"] = i;
  if (c.kind == Fiber::Point) {
    j["kind"] = "point";
    j["value"] = c.point.to_string();
    return j;
  }
  j["kind"] = "interval";
  j["lo"] = c.lower ? c.lower->to_string() : "-inf";
  auto hi = c.upper_exclusive();
  j["hi"] = hi ? hi->to_string() : "inf";
  j["mod"] = c.modulus.get_str();
  j["res"] = c.residue.get_str();
  return j;
}

std::string component_text(const std::string &var, const Component &c) {
  if (c.kind == Fiber::Point)
    return var + " = " + c.point.to_string();
  auto hi = c.upper_exclusive();
  std::string out = var + " in [" + (c.lower ? c.lower->to_string() : "-inf") +
                    ", " + (hi ? hi->to_string() : "inf") + ")";
  if (c.modulus > 1)
    out += ", " + var + " % " + c.modulus.get_str() + " = " + c.residue.get_str();
  return out;
}

json class_json(const ClassNF &c) { return json::parse(c.to_json()); }

json dims_json(const std::vector<std::optional<unsigned>> &dims) {
  json a = json::array();
  for (const auto &d : dims)
    a.push_back(d ? json(*d) : json("-inf"));
  return a;
}

int run_selftest(bool as_json) {
  using namespace grothpres::oracle;
  struct Row {
    std::string name;
    bool pass;
  };
  std::vector<Row> rows;
  auto check = [&](const std::string &name, auto &&fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception &) {
      ok = false;
    }
    rows.push_back({name, ok});
  };
  const ModelSpec z;
  check("enumerate residues", [] {
    return enumerate_box(parse_formula("x % 3 = 1 & 0 <= x & x < 10"), {"x"}, 20) ==
           std::vector<Point>{{1}, {4}, {7}};
  });
  check("enumerate grid", [] {
    return enumerate_box(parse_formula("0 <= x & x <= 2 & 0 <= y & y <= 1"),
                         {"x", "y"}, 5)
               .size() == 6;
  });
  check("brute count pairs", [] {
    auto c = brute_count(parse_formula("0 <= x1 & x1 < x2 & x2 < 5"), {"x1", "x2"}, 8);
    return c && *c == 10;
  });
  check("brute count unbounded", [] {
    return !brute_count(parse_formula("x >= 0"), {"x"}, 8).has_value();
  });
  check("growth exponents", [] {
    return growth_exponent(parse_formula("x >= 0"), {"x"}) == 1 &&
           growth_exponent(parse_formula("0 <= x1 & x1 < x2"), {"x1", "x2"}) == 2 &&
           growth_exponent(parse_formula("x = 3"), {"x"}) == 0;
  });
  check("serial and parallel sweeps agree", [] {
    Evaluator ev(parse_formula("3*x - 2*y <= 7 & x + y % 4 = 1"), {"x", "y"});
    return count_box(ev, 40) == count_box_serial(ev, 40) &&
           enumerate_box(ev, 20) == enumerate_box_serial(ev, 20);
  });
  check("random bounded classes", [&] {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 40; ++i) {
      GenOptions o;
      o.nvars = 1 + i % 2;
      o.quantifiers = i % 2;
      o.box = 5;
      Formula f = random_formula(rng, o);
      auto bc = brute_count(f, free_vars_ordered(f), 6);
      ClassNF c = grothendieck_class(f, z);
      if (!bc || c != class_bounded(Polynomial(Integer(*bc)), 0))
        return false;
    }
    return true;
  });
  check("random eliminations", [] {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 40; ++i) {
      GenOptions o;
      o.nvars = 1 + i % 2;
      o.quantifiers = 1;
      Formula f = random_formula(rng, o);
      if (disagreement(f, eliminate(f), free_vars_ordered(f), 10))
        return false;
    }
    return true;
  });
  bool all = true;
  json j = json::array();
  for (const auto &r : rows) {
    all = all && r.pass;
    if (as_json)
      j.push_back({{"check", r.name}, {"pass", r.pass}});
    else
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "\n";
  }
  if (as_json)
    std::cout << j.dump() << "\n";
  return all ? Ok : NotEquivalent;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Definable sets in Z-groups: elimination, cells, counting and classes"};
  app.require_subcommand(1);
  Common common;
  std::vector<std::string> formulas;
  std::string params, domain = "true";
  std::size_t level = 0;
  bool has_level = false;

  auto add_common = [&](CLI::App *sub, std::size_t nformulas) {
    sub->add_option("--model", common.model, "k=INT");
    sub->add_option("--const", common.consts, "NAME=[q_k,...,q_1;z]");
    sub->add_flag("--json", common.json, "JSON output");
    if (nformulas)
      sub->add_option("formula", formulas, "formula")
          ->expected(static_cast<int>(nformulas))
          ->required();
  };
  auto *qe = app.add_subcommand("qe", "eliminate quantifiers");
  add_common(qe, 1);
  auto *cells = app.add_subcommand("cells", "cell decomposition");
  add_common(cells, 1);
  auto *cls = app.add_subcommand("class", "class in the Grothendieck semiring");
  add_common(cls, 1);
  auto *card = app.add_subcommand("card", "hyper-cardinality of a bounded set");
  add_common(card, 1);
  auto *count = app.add_subcommand("count", "parametric point count");
  add_common(count, 1);
  count->add_option("--params", params, "y1,y2")->required();
  auto *equiv = app.add_subcommand("equiv", "definable bijection test");
  add_common(equiv, 2);
  auto *famequiv = app.add_subcommand("famequiv", "definable family of bijections test");
  add_common(famequiv, 2);
  famequiv->add_option("--params", params, "y1,y2")->required();
  famequiv->add_option("--domain", domain, "formula in the parameters");
  auto *dim = app.add_subcommand("dim", "multidimension");
  add_common(dim, 1);
  dim->add_option("--level", level, "single level i")->each([&](const std::string &) {
    has_level = true;
  });
  auto *eats = app.add_subcommand("eats", "does [F1] absorb [F2]");
  add_common(eats, 2);
  auto *selftest = app.add_subcommand("selftest", "oracle suite");
  selftest->add_flag("--json", common.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return Usage;
  }

  try {
    if (*selftest)
      return run_selftest(common.json);
    const ModelSpec spec = build_model(common);
    const bool js = common.json;

    if (*qe) {
      Formula out = simplify(eliminate(parse(formulas[0], spec)));
      if (js)
        std::cout << json{{"formula", print(out)}}.dump() << "\n";
      else
        std::cout << print(out) << "\n";
      return Ok;
    }
    if (*cells) {
      Formula f = parse(formulas[0], spec);
      auto cs = decompose(f, spec);
      if (js) {
        json j;
        j["vars"] = cs.empty() ? free_vars_ordered(f) : cs[0].vars;
        j["cells"] = json::array();
        for (const auto &c : cs) {
          json comps = json::array();
          for (std::size_t i = 0; i < c.comps.size(); ++i)
            comps.push_back(component_json(i, c.comps[i]));
          j["cells"].push_back(comps);
        }
        std::cout << j.dump() << "\n";
      } else {
        if (cs.empty())
          std::cout << "empty\n";
        for (const auto &c : cs) {
          std::string line;
          for (std::size_t i = 0; i < c.comps.size(); ++i)
            line += (i ? "; " : "") + component_text(c.vars[i], c.comps[i]);
          std::cout << (line.empty() ? "point" : line) << "\n";
        }
      }
      return Ok;
    }
    if (*cls) {
      ClassNF c = grothendieck_class(parse(formulas[0], spec), spec);
      std::cout << (js ? c.to_json() : c.to_string()) << "\n";
      return Ok;
    }
    if (*card) {
      Formula f = parse(formulas[0], spec);
      Polynomial p;
      try {
        p = hyper_card(f, spec);
      } catch (const Unbounded &) {
        std::cerr << "unbounded set\n";
        return Input;
      }
      std::string s = p.to_string(b_name);
      if (js)
        std::cout << json{{"card", s}}.dump() << "\n";
      else
        std::cout << s << "\n";
      return Ok;
    }
    if (*count) {
      auto ps = split_list(params);
      auto pieces = count_family(parse(formulas[0], spec), ps, spec);
      auto nm = [&](std::uint32_t v) { return name_of(ps, v); };
      json j = json::array();
      for (const auto &p : pieces) {
        std::string g = print(to_formula(p.guard));
        std::string c = p.infinite ? "inf" : p.count.to_string(nm);
        if (js)
          j.push_back({{"guard", g}, {"count", c}});
        else
          std::cout << g << " : " << c << "\n";
      }
      if (js)
        std::cout << j.dump() << "\n";
      return Ok;
    }
    if (*equiv) {
      auto r = decide_equiv(parse(formulas[0], spec), parse(formulas[1], spec), spec);
      if (js)
        std::cout << json{{"verdict", r.equivalent ? "Equivalent" : "NotEquivalent"},
                          {"first", class_json(r.first)},
                          {"second", class_json(r.second)}}
                         .dump()
                  << "\n";
      else
        std::cout << (r.equivalent ? "Equivalent: " : "NotEquivalent: ")
                  << r.first.to_string() << (r.equivalent ? " = " : " != ")
                  << r.second.to_string() << "\n";
      return r.equivalent ? Ok : NotEquivalent;
    }
    if (*famequiv) {
      auto ps = split_list(params);
      bool eq = false;
      try {
        eq = family_equiv(parse(formulas[0], spec), parse(formulas[1], spec), ps,
                          parse(domain, spec), spec);
      } catch (const UnboundedFiber &u) {
        std::cerr << "unbounded fiber where " << print(u.guard) << "\n";
        return Input;
      }
      const char *v = eq ? "Equivalent" : "NotEquivalent";
      if (js)
        std::cout << json{{"verdict", v}}.dump() << "\n";
      else
        std::cout << v << "\n";
      return eq ? Ok : NotEquivalent;
    }
    if (*dim) {
      if (has_level && level > spec.k)
        throw std::invalid_argument("level out of range");
      Formula f = parse(formulas[0], spec);
      MDim d = mdim_of(f, spec);
      std::vector<std::optional<unsigned>> dims;
      for (std::size_t i = 0; i <= spec.k; ++i) {
        if (has_level && i != level)
          continue;
        std::optional<unsigned> best;
        for (const auto &p : d)
          best = std::max(best.value_or(0), p[i]);
        dims.push_back(best);
      }
      if (js) {
        std::cout << json{{"mdim", d}, {"dims", dims_json(dims)}}.dump() << "\n";
      } else {
        std::cout << "mdim " << mdim_to_string(d) << "\n";
        for (std::size_t i = 0, n = 0; i <= spec.k; ++i) {
          if (has_level && i != level)
            continue;
          const auto &v = dims[n++];
          std::cout << "dim_" << i << " " << (v ? std::to_string(*v) : "-inf") << "\n";
        }
      }
      return Ok;
    }
    if (*eats) {
      ClassNF a = grothendieck_class(parse(formulas[0], spec), spec);
      ClassNF b = grothendieck_class(parse(formulas[1], spec), spec);
      bool e = eats_rel(a, b);
      if (js)
        std::cout << json{{"eats", e}}.dump() << "\n";
      else
        std::cout << (e ? "yes" : "no") << "\n";
      return Ok;
    }
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Input;
  } catch (const Unbounded &e) {
    std::cerr << e.what() << "\n";
    return Input;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Input;
  }
  return Usage;
}
