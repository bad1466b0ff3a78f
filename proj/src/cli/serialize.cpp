/*
   Copyright 2026 The snw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "snw/cli/serialize.hpp"

#include <json.hpp>

namespace snw::cli {

using json = nlohmann::ordered_json;

namespace {

std::string power(const std::string& base, std::uint64_t e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto add = [&](const std::string& f) { s += (s.empty() ? "" : "*") + f; };
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.alpha[i]) add(power("x" + std::to_string(i + 1), m.alpha[i]));
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.beta[i]) add(power("y" + std::to_string(i + 1), m.beta[i]));
  return s;
}

std::string term_text(const Scalar& c, const std::string& body) {
  if (body.empty()) return to_string(c);
  if (c == 1) return body;
  if (c == -1) return "-" + body;
  return to_string(c) + "*" + body;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string s = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i][0] == '-')
      s += " - " + terms[i].substr(1);
    else
      s += " + " + terms[i];
  }
  return s;
}

std::string list_text(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "]";
}

json one_based(const IndexSet& I) {
  json a = json::array();
  for (auto i : I.elements()) a.push_back(i + 1);
  return a;
}

json element_terms(const Element& a) {
  json terms = json::array();
  for (const auto& [m, c] : a.terms())
    terms.push_back(json{{"a", m.alpha}, {"b", m.beta}, {"c", to_string(c)}});
  return terms;
}

json polynomial_terms(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [a, c] : p.terms()) terms.push_back(json{{"a", a}, {"c", to_string(c)}});
  return terms;
}

std::string lambda_text(const TorusVector& lambda) {
  bool ones = true;
  std::vector<std::string> items;
  for (const auto& l : lambda) {
    ones = ones && l == 1;
    items.push_back(to_string(l));
  }
  return ones ? "1" : list_text(items);
}

json perm_json(const Permutation& p) {
  json a = json::array();
  for (auto i : p.images()) a.push_back(i + 1);
  return a;
}

struct TextVisitor {
  std::string operator()(const Element& a) const { return element_text(a); }
  std::string operator()(const Scalar& s) const { return to_string(s); }
  std::string operator()(const Boolean& b) const { return b.value ? "true" : "false"; }
  std::string operator()(const Integer& i) const { return std::to_string(i.value); }
  std::string operator()(const MixedElement& m) const { return mixed_text(m); }
  std::string operator()(const FactorList& f) const {
    if (f.empty()) return "[]";
    std::string s;
    for (const auto& factor : f)
      s += (s.empty() ? "" : "; ") + factor.I.to_string() + ": " + element_text(factor.u.element());
    return s;
  }
  std::string operator()(const SizeReport& r) const {
    return "s=" + std::to_string(r.s) + ", deg=" + (r.identity ? "identity" : std::to_string(r.deg));
  }
  std::string operator()(const UnitSplit& u) const {
    return "(" + to_string(u.lambda) + "; " + element_text(u.u.element()) + ")";
  }
  std::string operator()(const GroupElement& g) const {
    return "(" + g.tau().to_string() + "; " + lambda_text(g.lambda()) + "; " + element_text(g.u().element()) + ")";
  }
  std::string operator()(const EndoP& p) const {
    std::vector<std::string> items;
    for (const auto& pi : p.p()) items.push_back(polynomial_text(pi));
    return list_text(items);
  }
  std::string operator()(const IdealDescriptor& d) const { return d.to_string(); }
  std::string operator()(const SubgroupReport& r) const {
    std::string s = "order " + std::to_string(r.order) + "; generators ";
    if (r.generators.empty()) return s + "none";
    for (std::size_t i = 0; i < r.generators.size(); ++i)
      s += (i ? ", " : "") + r.generators[i].to_string();
    return s;
  }
  std::string operator()(const GenericStructure& g) const {
    std::string s = "m=" + std::to_string(g.m) + "; blocks";
    if (g.blocks.empty()) s += " none";
    for (const auto& [h, k] : g.blocks) s += " (" + std::to_string(h) + "," + std::to_string(k) + ")";
    return s + "; order " + std::to_string(g.predicted_order);
  }
  std::string operator()(const Polynomial& p) const { return polynomial_text(p); }
  std::string operator()(const ElementList& l) const {
    std::vector<std::string> items;
    for (const auto& e : l) items.push_back(element_text(e));
    return list_text(items);
  }
  std::string operator()(const FiniteImage& f) const {
    return "x -> " + element_text(f.x_image) + "; y -> " + element_text(f.y_image) + "; dim " +
           std::to_string(f.dimension);
  }
};

struct JsonVisitor {
  json operator()(const Element& a) const {
    return json{{"kind", "element"}, {"dim", a.dim()}, {"terms", element_terms(a)}};
  }
  json operator()(const Scalar& s) const { return json{{"kind", "scalar"}, {"value", to_string(s)}}; }
  json operator()(const Boolean& b) const { return json{{"kind", "bool"}, {"value", b.value}}; }
  json operator()(const Integer& i) const { return json{{"kind", "integer"}, {"value", i.value}}; }
  json operator()(const MixedElement& m) const {
    json terms = json::array();
    for (const auto& [k, c] : m.terms())
      terms.push_back(json{{"I", one_based(k.I)}, {"a", k.alpha}, {"b", k.beta}, {"v", k.laurent}, {"c", to_string(c)}});
    return json{{"kind", "mixed"}, {"dim", m.dim()}, {"terms", terms}};
  }
  json operator()(const FactorList& f) const {
    json factors = json::array();
    std::size_t dim = 0;
    for (const auto& factor : f) {
      dim = factor.u.dim();
      factors.push_back(json{{"I", one_based(factor.I)}, {"terms", element_terms(factor.u.element())}});
    }
    json out{{"kind", "factors"}};
    if (dim) out["dim"] = dim;
    out["factors"] = factors;
    return out;
  }
  json operator()(const SizeReport& r) const {
    json out{{"kind", "size"}, {"s", r.s}};
    if (r.identity)
      out["deg"] = "identity";
    else
      out["deg"] = r.deg;
    return out;
  }
  json operator()(const UnitSplit& u) const {
    return json{{"kind", "unit"}, {"dim", u.u.dim()}, {"lambda", to_string(u.lambda)}, {"terms", element_terms(u.u.element())}};
  }
  json operator()(const GroupElement& g) const {
    json lambda = json::array();
    for (const auto& l : g.lambda()) lambda.push_back(to_string(l));
    return json{{"kind", "group"},
                {"dim", g.dim()},
                {"triple", json{{"tau", perm_json(g.tau())}, {"lambda", lambda}, {"u", element_terms(g.u().element())}}}};
  }
  json operator()(const EndoP& p) const {
    json items = json::array();
    for (const auto& pi : p.p()) items.push_back(polynomial_terms(pi));
    return json{{"kind", "endo"}, {"dim", p.dim()}, {"p", items}};
  }
  json operator()(const IdealDescriptor& d) const {
    json primes = json::array();
    for (auto I : d.min_primes()) primes.push_back(one_based(I));
    return json{{"kind", "ideal"}, {"dim", d.dim()}, {"primes", primes}};
  }
  json operator()(const SubgroupReport& r) const {
    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back(perm_json(g));
    return json{{"kind", "subgroup"}, {"order", r.order}, {"generators", gens}};
  }
  json operator()(const GenericStructure& g) const {
    json blocks = json::array();
    for (const auto& [h, k] : g.blocks) blocks.push_back(json::array({h, k}));
    return json{{"kind", "generic"}, {"m", g.m}, {"blocks", blocks}, {"order", g.predicted_order}};
  }
  json operator()(const Polynomial& p) const {
    return json{{"kind", "polynomial"}, {"dim", p.dim()}, {"terms", polynomial_terms(p)}};
  }
  json operator()(const ElementList& l) const {
    json items = json::array();
    for (const auto& e : l) items.push_back(element_terms(e));
    json out{{"kind", "list"}};
    if (!l.empty()) out["dim"] = l.front().dim();
    out["items"] = items;
    return out;
  }
  json operator()(const FiniteImage& f) const {
    return json{{"kind", "finite_image"},
                {"dim", 1},
                {"x", element_terms(f.x_image)},
                {"y", element_terms(f.y_image)},
                {"dimension", f.dimension}};
  }
};

}  // namespace

std::string element_text(const Element& a) {
  std::vector<std::string> terms;
  for (const auto& [m, c] : a.terms()) terms.push_back(term_text(c, monomial_text(m)));
  return join_terms(terms);
}

std::string polynomial_text(const Polynomial& p) { return element_text(p.to_element()); }

std::string mixed_text(const MixedElement& m) {
  std::vector<std::string> terms;
  for (const auto& [k, c] : m.terms()) {
    std::string body;
    auto add = [&](const std::string& f) { body += (body.empty() ? "" : "*") + f; };
    for (std::size_t i = 0; i < m.dim(); ++i) {
      const std::string idx = "[" + std::to_string(i + 1) + "]";
      if (k.I.contains(i))
        add("E" + idx + "(" + std::to_string(k.alpha[i]) + "," + std::to_string(k.beta[i]) + ")");
      else if (k.laurent[i] != 0)
        add("v" + idx + "(" + std::to_string(k.laurent[i]) + ")");
    }
    terms.push_back(term_text(c, body));
  }
  return join_terms(terms);
}

std::string to_text(const Value& v) { return std::visit(TextVisitor{}, v); }

std::string to_json_line(const Value& v) { return std::visit(JsonVisitor{}, v).dump(); }

std::string serialize(const Value& v, Mode mode) {
  return mode == Mode::Json ? to_json_line(v) : to_text(v);
}

std::string error_json_line(const std::string& code, const std::string& message) {
  return json{{"kind", "error"}, {"code", code}, {"message", message}}.dump();
}

std::string syntax_error_json_line(std::size_t column, const std::vector<std::string>& expected,
                                   const std::string& message) {
  return json{{"kind", "error"}, {"code", "SyntaxError"}, {"column", column}, {"expected", expected}, {"message", message}}
      .dump();
}

}  // namespace snw::cli
