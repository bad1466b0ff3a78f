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

#include "snw/cli/session.hpp"

#include <istream>
#include <ostream>

#include "snw/action.hpp"
#include "snw/errors.hpp"

namespace snw::cli {

namespace {

[[noreturn]] void type_error(const std::string& what) { throw Error(ErrorCode::TypeError, what); }

Value binding_value(const Binding& b) {
  return std::visit([](const auto& v) -> Value { return v; }, b);
}

std::uint64_t natural_of(const Expr& e) {
  if (e.kind != Expr::Kind::Number || e.number < 0 || e.number.get_den() != 1 ||
      !e.number.get_num().fits_ulong_p())
    type_error("expected a natural number");
  return e.number.get_num().get_ui();
}

}  // namespace

Session::Session(std::size_t dim, Mode mode) : dim_(dim), mode_(mode) {
  if (dim == 0 || dim > kMaxDim) throw Error(ErrorCode::DimensionError, "bad session dimension");
}

Element Session::eval_element(const Expr& e) const {
  auto index_of = [&](std::size_t one_based) -> std::size_t {
    if (one_based == 0) {
      if (dim_ != 1) throw Error(ErrorCode::DimensionError, "bare generator needs an index when n > 1");
      return 0;
    }
    if (one_based > dim_) {
      throw Error(ErrorCode::DimensionError,
                  "generator index " + std::to_string(one_based) + " exceeds dimension " + std::to_string(dim_));
    }
    return one_based - 1;
  };
  switch (e.kind) {
    case Expr::Kind::Number: return Element::constant(dim_, e.number);
    case Expr::Kind::X: return Element::x(dim_, index_of(e.index));
    case Expr::Kind::Y: return Element::y(dim_, index_of(e.index));
    case Expr::Kind::Unit:
      if (e.k > UINT32_MAX || e.l > UINT32_MAX) throw Error(ErrorCode::InvalidArgument, "matrix unit index too large");
      return Element::E(dim_, index_of(e.index), static_cast<std::uint32_t>(e.k), static_cast<std::uint32_t>(e.l));
    case Expr::Kind::Laurent: {
      Monomial m = Monomial::one(dim_);
      const std::size_t i = index_of(e.index);
      if (e.shift >= 0)
        m.alpha[i] = static_cast<std::uint32_t>(e.shift);
      else
        m.beta[i] = static_cast<std::uint32_t>(-e.shift);
      return Element::from_monomial(m);
    }
    case Expr::Kind::Name: {
      auto it = bindings_.find(e.name);
      if (it == bindings_.end()) throw Error(ErrorCode::NameError, "unbound name '" + e.name + "'");
      if (auto* el = std::get_if<Element>(&it->second)) return *el;
      type_error("'" + e.name + "' is not an element");
    }
    case Expr::Kind::Add: return eval_element(*e.children[0]) + eval_element(*e.children[1]);
    case Expr::Kind::Sub: return eval_element(*e.children[0]) - eval_element(*e.children[1]);
    case Expr::Kind::Mul: return eval_element(*e.children[0]) * eval_element(*e.children[1]);
    case Expr::Kind::Neg: return -eval_element(*e.children[0]);
    case Expr::Kind::Pow: return eval_element(*e.children[0]).pow(e.power);
    case Expr::Kind::Set:
    case Expr::Kind::List: type_error("expected an element, found a collection");
  }
  type_error("unknown expression");
}

namespace {

class Evaluator {
 public:
  Evaluator(const Session& s) : s_(s), n_(s.dim()) {}

  Element element(const ExprPtr& e) const { return s_.eval_element(*e); }

  Scalar scalar(const ExprPtr& e) const {
    const Element a = element(e);
    if (a.is_zero()) return 0;
    if (a.terms().size() != 1 || a.terms().begin()->first != Monomial::one(n_)) type_error("expected a scalar");
    return a.terms().begin()->second;
  }

  std::size_t index(const ExprPtr& e) const {
    const auto i = natural_of(*e);
    if (i < 1 || i > n_) throw Error(ErrorCode::DimensionError, "index " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i - 1);
  }

  IndexSet index_set(const ExprPtr& e) const {
    if (e->kind != Expr::Kind::Set) type_error("expected an index set like {1,2}");
    std::vector<std::size_t> idx;
    for (const auto& c : e->children) idx.push_back(index(c));
    return IndexSet::of(idx);
  }

  const Binding* bound(const ExprPtr& e) const {
    if (e->kind != Expr::Kind::Name) return nullptr;
    auto it = s_.bindings().find(e->name);
    if (it == s_.bindings().end()) throw Error(ErrorCode::NameError, "unbound name '" + e->name + "'");
    return &it->second;
  }

  IdealDescriptor descriptor(const ExprPtr& e) const {
    if (const Binding* b = bound(e)) {
      if (auto* d = std::get_if<IdealDescriptor>(b)) return *d;
      type_error("'" + e->name + "' is not an ideal descriptor");
    }
    if (e->kind != Expr::Kind::Set) type_error("expected a descriptor like {{1},{2}}");
    std::vector<IndexSet> primes;
    for (const auto& c : e->children) primes.push_back(index_set(c));
    return IdealDescriptor(n_, std::move(primes));
  }

  GroupElement group(const ExprPtr& e) const {
    if (const Binding* b = bound(e)) {
      if (auto* g = std::get_if<GroupElement>(b)) return *g;
    }
    type_error("expected a bound group element");
  }

  ElementList elements(const ExprPtr& e) const {
    if (const Binding* b = bound(e)) {
      if (auto* l = std::get_if<ElementList>(b)) return *l;
      type_error("'" + e->name + "' is not a list");
    }
    if (e->kind != Expr::Kind::List) type_error("expected a list like [a, b]");
    ElementList out;
    for (const auto& c : e->children) out.push_back(element(c));
    return out;
  }

  std::vector<Polynomial> polys(const ExprPtr& e, bool in_y) const {
    if (const Binding* b = bound(e)) {
      if (auto* p = std::get_if<EndoP>(b)) return p->p();
    }
    std::vector<Polynomial> out;
    for (const auto& a : elements(e)) out.push_back(Polynomial::from_element(in_y ? involution(a) : a));
    if (out.size() != n_) throw Error(ErrorCode::DimensionError, "tuple length must equal the dimension");
    return out;
  }

  Exponents naturals(const ExprPtr& e) const {
    if (e->kind != Expr::Kind::List) type_error("expected a list of naturals");
    Exponents out;
    for (const auto& c : e->children) {
      const auto v = natural_of(*c);
      if (v > UINT32_MAX) throw Error(ErrorCode::InvalidArgument, "exponent too large");
      out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
  }

 private:
  const Session& s_;
  std::size_t n_;
};

void arity(const Command& cmd, std::size_t count) {
  if (cmd.args.size() != count) {
    std::string name = cmd.name + (cmd.sub.empty() ? "" : " " + cmd.sub) + (cmd.kind.empty() ? "" : " " + cmd.kind);
    throw Error(ErrorCode::InvalidArgument,
                name + " takes " + std::to_string(count) + " argument" + (count == 1 ? "" : "s"));
  }
}

}  // namespace

Value Session::eval_value(const Command& cmd) {
  Evaluator ev(*this);
  const auto& a = cmd.args;
  const std::string& c = cmd.name;

  if (c == "nf") {
    arity(cmd, 1);
    if (a[0]->kind == Expr::Kind::Name) {
      auto it = bindings_.find(a[0]->name);
      if (it != bindings_.end()) return binding_value(it->second);
    }
    if (a[0]->kind == Expr::Kind::List) return ev.elements(a[0]);
    if (a[0]->kind == Expr::Kind::Set) return ev.descriptor(a[0]);
    return ev.element(a[0]);
  }
  if (c == "decomp") { arity(cmd, 1); return to_mixed(ev.element(a[0])); }
  if (c == "component") {
    arity(cmd, 2);
    PatternF f;
    for (auto bit : ev.naturals(a[1])) {
      if (bit > 1) type_error("pattern entries must be 0 or 1");
      f.bits.push_back(bit == 1);
    }
    return component(ev.element(a[0]), f);
  }
  if (c == "member") {
    arity(cmd, 2);
    const Element e = ev.element(a[0]);
    if (a[1]->kind == Expr::Kind::Name && a[1]->name == "F") return Boolean{in_Fn(e)};
    if (a[1]->kind == Expr::Kind::Name && a[1]->name == "A") return Boolean{in_an(e)};
    if (a[1]->kind == Expr::Kind::Name && a[1]->name == "KF") return Boolean{in_K_plus_Fn(e)};
    return Boolean{in_ideal_pI(e, ev.index_set(a[1]))};
  }
  if (c == "det") {
    arity(cmd, 1);
    if (const Binding* b = ev.bound(a[0]); b && std::holds_alternative<GroupElement>(*b))
      return det_g(std::get<GroupElement>(*b));
    return global_det(MonoidElement(ev.element(a[0])));
  }
  if (c == "inv") {
    arity(cmd, 1);
    if (const Binding* b = ev.bound(a[0]); b && std::holds_alternative<GroupElement>(*b))
      return inverse_g(std::get<GroupElement>(*b));
    const Element e = ev.element(a[0]);
    if (in_monoid(e)) return invert(MonoidElement(e)).element();
    const UnitSplit split = try_unit_split(e);
    return invert(split.u).element() * Scalar(1 / split.lambda);
  }
  if (c == "unit") { arity(cmd, 1); return try_unit_split(ev.element(a[0])); }
  if (c == "index") { arity(cmd, 1); return Integer{index_s1(ev.element(a[0]))}; }
  if (c == "eta") { arity(cmd, 1); return involution(ev.element(a[0])); }
  if (c == "act") {
    arity(cmd, 2);
    return act(ev.element(a[0]), Polynomial::from_element(ev.element(a[1])));
  }
  if (c == "vol") { arity(cmd, 1); return Integer{static_cast<std::int64_t>(volume(ev.element(a[0])))}; }
  if (c == "size") { arity(cmd, 1); return size(MonoidElement(ev.element(a[0]))); }
  if (c == "factor") { arity(cmd, 1); return peel_factorize(MonoidElement(ev.element(a[0]))); }
  if (c == "comm") { arity(cmd, 2); return commutator(ev.element(a[0]), ev.element(a[1])); }

  if (c == "aut") {
    const std::string& s = cmd.sub;
    if (s == "make") {
      const std::string& k = cmd.kind;
      if (k == "swap") { arity(cmd, 2); return make_transposition(dim_, ev.index(a[0]), ev.index(a[1])); }
      if (k == "torus") { arity(cmd, 2); return make_torus(dim_, ev.index(a[0]), ev.scalar(a[1])); }
      if (k == "diag") { arity(cmd, 2); return make_diagonal(dim_, ev.index_set(a[0]), ev.scalar(a[1])); }
      if (k == "elem") {
        arity(cmd, 4);
        const IndexSet I = ev.index_set(a[0]);
        const Exponents kk = ev.naturals(a[1]), ll = ev.naturals(a[2]);
        const auto idx = I.elements();
        if (kk.size() != idx.size() || ll.size() != idx.size())
          throw Error(ErrorCode::InvalidArgument, "k and l need one entry per index in I");
        Exponents kf(dim_, 0), lf(dim_, 0);
        for (std::size_t t = 0; t < idx.size(); ++t) {
          kf[idx[t]] = kk[t];
          lf[idx[t]] = ll[t];
        }
        return make_elementary(dim_, I, kf, lf, ev.scalar(a[3]));
      }
      if (k == "inner") { arity(cmd, 1); return make_inner(MonoidElement(ev.element(a[0]))); }
      if (k == "perm") {
        arity(cmd, 1);
        std::vector<std::size_t> img;
        for (auto v : ev.naturals(a[0])) {
          if (v < 1) throw Error(ErrorCode::InvalidArgument, "permutation entries are 1-based");
          img.push_back(v - 1);
        }
        if (img.size() != dim_) throw Error(ErrorCode::DimensionError, "permutation length must equal the dimension");
        return GroupElement(Permutation(img), TorusVector(dim_, Scalar(1)), MonoidElement::one(dim_));
      }
      if (k == "lambda") {
        arity(cmd, 1);
        if (a[0]->kind != Expr::Kind::List) type_error("expected a list of scalars");
        TorusVector t;
        for (const auto& e : a[0]->children) t.push_back(ev.scalar(e));
        if (t.size() != dim_) throw Error(ErrorCode::DimensionError, "torus length must equal the dimension");
        return GroupElement(Permutation::identity(dim_), t, MonoidElement::one(dim_));
      }
    }
    if (s == "compose") { arity(cmd, 2); return compose(ev.group(a[0]), ev.group(a[1])); }
    if (s == "inv") { arity(cmd, 1); return inverse_g(ev.group(a[0])); }
    if (s == "apply") { arity(cmd, 2); return apply(ev.group(a[0]), ev.element(a[1])); }
    if (s == "det") { arity(cmd, 1); return det_g(ev.group(a[0])); }
    if (s == "recover") { arity(cmd, 2); return recover(ev.elements(a[0]), ev.elements(a[1])); }
  }

  if (c == "endo") {
    const std::string& s = cmd.sub;
    if (s == "check") { arity(cmd, 1); return Boolean{check_pij(ev.polys(a[0], false))}; }
    if (s == "apply") { arity(cmd, 2); return sigma_p_apply(EndoP(ev.polys(a[0], false)), ev.element(a[1])); }
    if (s == "compose") {
      arity(cmd, 2);
      return compose_sigma(EndoP(ev.polys(a[0], false)), EndoP(ev.polys(a[1], false)));
    }
    if (s == "tapply") { arity(cmd, 2); return tau_q_apply(EndoQ(ev.polys(a[0], true)), ev.element(a[1])); }
    if (s == "finite") {
      arity(cmd, 1);
      const auto m = natural_of(*a[0]);
      if (m > 64) throw Error(ErrorCode::InvalidArgument, "m is limited to 64");
      return finite_image_endo(static_cast<unsigned>(m));
    }
  }

  if (c == "ideal") {
    const std::string& s = cmd.sub;
    if (s == "member") { arity(cmd, 2); return Boolean{ideal_member(ev.element(a[1]), ev.descriptor(a[0]))}; }
    if (s == "stab") { arity(cmd, 1); return stabilizer_sym(ev.descriptor(a[0])); }
    if (s == "generic") { arity(cmd, 1); return generic_structure(ev.descriptor(a[0])); }
    if (s == "index") {
      arity(cmd, 1);
      return Integer{static_cast<std::int64_t>(stabilizer_index(ev.descriptor(a[0])))};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + c + "'");
}

std::optional<Value> Session::eval(const Command& cmd) {
  if (cmd.name == "setdim") {
    if (cmd.args.size() != 1) throw Error(ErrorCode::InvalidArgument, "setdim takes 1 argument");
    const auto n = natural_of(*cmd.args[0]);
    if (n < 1 || n > kMaxDim) throw Error(ErrorCode::DimensionError, "dimension must be in 1.." + std::to_string(kMaxDim));
    dim_ = static_cast<std::size_t>(n);
    bindings_.clear();
    return std::nullopt;
  }
  if (cmd.name == "let") {
    Value v = eval_value(*cmd.rhs);
    Binding b = std::visit(
        [](auto&& x) -> Binding {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Element> || std::is_same_v<T, GroupElement> ||
                        std::is_same_v<T, EndoP> || std::is_same_v<T, IdealDescriptor> ||
                        std::is_same_v<T, ElementList>) {
            return x;
          } else if constexpr (std::is_same_v<T, Scalar>) {
            type_error("scalars are bound as elements; write the value as an expression");
          } else {
            type_error("this value cannot be bound");
          }
        },
        std::move(v));
    bindings_.insert_or_assign(cmd.target, std::move(b));
    return std::nullopt;
  }
  return eval_value(cmd);
}

Session::Outcome Session::run_line(const std::string& line) {
  Outcome out;
  try {
    auto cmd = parse(line);
    if (!cmd) return out;
    auto v = eval(*cmd);
    if (v) out.output = serialize(*v, mode_);
  } catch (const SyntaxError& e) {
    out.status = 2;
    out.output = mode_ == Mode::Json ? syntax_error_json_line(e.column(), e.expected(), e.what())
                                     : std::string("error SyntaxError: ") + e.what();
  } catch (const Error& e) {
    out.status = 1;
    out.output = mode_ == Mode::Json ? error_json_line(std::string(e.name()), e.what())
                                     : "error " + std::string(e.name()) + ": " + e.what();
  } catch (const std::exception& e) {
    out.status = 1;
    out.output = mode_ == Mode::Json ? error_json_line("InternalError", e.what())
                                     : std::string("error InternalError: ") + e.what();
  }
  return out;
}

int Session::run_script(std::istream& in, std::ostream& out) {
  int code = 0;
  std::string line;
  while (std::getline(in, line)) {
    const Outcome o = run_line(line);
    if (!o.output.empty()) out << o.output << '\n';
    if (o.status == 2) code = 2;
    else if (o.status == 1 && code == 0) code = 1;
  }
  out.flush();
  return code;
}

}  // namespace snw::cli
