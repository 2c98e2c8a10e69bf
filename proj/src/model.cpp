//===- model.cpp - The Z-group Q^k x Z and QF evaluation ------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "grothpres/model.hpp"

#include <cctype>

namespace grothpres {

GroupElement::GroupElement(std::vector<Rational> rat, Integer z)
    : rat_(std::move(rat)), z_(std::move(z)) {
  for (auto &q : rat_)
    q.canonicalize();
}

GroupElement GroupElement::integer(std::size_t k, Integer z) {
  GroupElement g(k);
  g.z_ = std::move(z);
  return g;
}

GroupElement GroupElement::unit(std::size_t k, std::size_t i) {
  GroupElement g(k);
  if (i == 0)
    g.z_ = 1;
  else
    g.rat_[i - 1] = 1;
  return g;
}

void GroupElement::set_coord(std::size_t i, Rational q) {
  q.canonicalize();
  rat_[i - 1] = std::move(q);
}

int GroupElement::sig() const {
  for (std::size_t i = rat_.size(); i > 0; --i)
    if (rat_[i - 1] != 0)
      return static_cast<int>(i);
  return z_ != 0 ? 0 : -1;
}

int GroupElement::sign() const {
  for (std::size_t i = rat_.size(); i > 0; --i)
    if (int s = sgn(rat_[i - 1]))
      return s;
  return sgn(z_);
}

GroupElement GroupElement::lifted(std::size_t new_k) const {
  GroupElement g = *this;
  g.rat_.resize(std::max(new_k, rat_.size()));
  return g;
}

namespace {

void check_same_k(const GroupElement &a, const GroupElement &b) {
  if (a.k() != b.k())
    throw std::invalid_argument("group elements of different rank");
}

} // namespace

GroupElement &GroupElement::operator+=(const GroupElement &o) {
  check_same_k(*this, o);
  for (std::size_t i = 0; i < rat_.size(); ++i)
    rat_[i] += o.rat_[i];
  z_ += o.z_;
  return *this;
}

GroupElement &GroupElement::operator-=(const GroupElement &o) {
  check_same_k(*this, o);
  for (std::size_t i = 0; i < rat_.size(); ++i)
    rat_[i] -= o.rat_[i];
  z_ -= o.z_;
  return *this;
}

GroupElement &GroupElement::operator*=(const Integer &c) {
  for (auto &q : rat_)
    q *= c;
  z_ *= c;
  return *this;
}

int cmp(const GroupElement &a, const GroupElement &b) {
  check_same_k(a, b);
  for (std::size_t i = a.rat_.size(); i > 0; --i) {
    int c = cmp(a.rat_[i - 1], b.rat_[i - 1]);
    if (c)
      return c < 0 ? -1 : 1;
  }
  int c = cmp(a.z_, b.z_);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string GroupElement::to_string() const {
  if (rat_.empty())
    return z_.get_str();
  std::string out = "[";
  for (std::size_t i = rat_.size(); i > 0; --i) {
    out += rat_[i - 1].get_str();
    if (i > 1)
      out += ",";
  }
  out += ";" + z_.get_str() + "]";
  return out;
}

namespace {

std::string trim(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

bool is_integer_text(const std::string &s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

Integer parse_integer(const std::string &raw) {
  std::string s = trim(raw);
  if (!is_integer_text(s))
    throw std::invalid_argument("malformed integer '" + raw + "'");
  if (s[0] == '+')
    s = s.substr(1);
  return Integer(s);
}

Rational parse_rational(const std::string &raw) {
  std::string s = trim(raw);
  auto slash = s.find('/');
  if (slash == std::string::npos)
    return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + raw + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

} // namespace

GroupElement parse_group_element(const std::string &text, std::size_t k) {
  std::string s = trim(text);
  if (s.empty())
    throw std::invalid_argument("empty group element");
  if (s.front() != '[') {
    return GroupElement::integer(k, parse_integer(s));
  }
  if (s.back() != ']')
    throw std::invalid_argument("missing ']' in '" + text + "'");
  std::string inner = s.substr(1, s.size() - 2);
  auto semi = inner.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("missing ';' in '" + text + "'");
  Integer z = parse_integer(inner.substr(semi + 1));
  std::string head = trim(inner.substr(0, semi));
  std::vector<Rational> most_first;
  if (!head.empty()) {
    std::size_t start = 0;
    for (;;) {
      auto comma = head.find(',', start);
      most_first.push_back(parse_rational(head.substr(start, comma - start)));
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
  }
  if (most_first.size() != k)
    throw std::invalid_argument("expected " + std::to_string(k) +
                                " rational coordinates in '" + text + "'");
  std::vector<Rational> rat(most_first.rbegin(), most_first.rend());
  return GroupElement(std::move(rat), std::move(z));
}

FloorDivResult floor_div(const GroupElement &a, const Integer &m) {
  if (m <= 0)
    throw std::invalid_argument("floor_div by nonpositive modulus");
  FloorDivResult res{GroupElement(a.k()), 0};
  for (std::size_t i = 1; i <= a.k(); ++i)
    res.q.set_coord(i, a.coord(i) / Rational(m));
  Integer q;
  mpz_fdiv_qr(q.get_mpz_t(), res.r.get_mpz_t(), a.int_coord().get_mpz_t(),
              m.get_mpz_t());
  res.q.set_int_coord(q);
  return res;
}

Integer residue(const GroupElement &a, const Integer &m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.int_coord().get_mpz_t(), m.get_mpz_t());
  return r;
}

std::set<std::string> ModelSpec::constant_names() const {
  std::set<std::string> out;
  for (const auto &kv : constants)
    out.insert(kv.first);
  return out;
}

void ModelSpec::validate() const {
  for (const auto &[name, g] : constants)
    if (g.k() != k)
      throw std::invalid_argument("constant '" + name + "' has rank " +
                                  std::to_string(g.k()) + ", model has " +
                                  std::to_string(k));
}

GroupElement eval_term(const LinearTerm &t, const Assignment &point,
                       const ModelSpec &spec) {
  GroupElement v = GroupElement::integer(spec.k, t.literal());
  for (const auto &[name, c] : t.vars()) {
    auto it = point.find(name);
    if (it == point.end())
      throw EvalError("unbound variable '" + name + "'");
    v += it->second * c;
  }
  for (const auto &[name, c] : t.consts()) {
    auto it = spec.constants.find(name);
    if (it == spec.constants.end())
      throw EvalError("undeclared constant '" + name + "'");
    v += it->second * c;
  }
  return v;
}

bool eval_qf(const Formula &f, const Assignment &point, const ModelSpec &spec) {
  return std::visit(
      [&](const auto &x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Formula::True>) {
          return true;
        } else if constexpr (std::is_same_v<T, Formula::False>) {
          return false;
        } else if constexpr (std::is_same_v<T, Formula::Atom>) {
          int c = eval_term(x.lhs - x.rhs, point, spec).sign();
          switch (x.cmp) {
          case Cmp::Lt: return c < 0;
          case Cmp::Le: return c <= 0;
          case Cmp::Eq: return c == 0;
          case Cmp::Ne: return c != 0;
          case Cmp::Ge: return c >= 0;
          case Cmp::Gt: return c > 0;
          }
          return false;
        } else if constexpr (std::is_same_v<T, Formula::Cong>) {
          GroupElement v = eval_term(x.term - LinearTerm(x.residue), point, spec);
          return residue(v, x.modulus) == 0;
        } else if constexpr (std::is_same_v<T, Formula::Not>) {
          return !eval_qf(x.body, point, spec);
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          for (const auto &a : x.args)
            if (!eval_qf(a, point, spec))
              return false;
          return true;
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          for (const auto &a : x.args)
            if (eval_qf(a, point, spec))
              return true;
          return false;
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          return !eval_qf(x.lhs, point, spec) || eval_qf(x.rhs, point, spec);
        } else {
          throw EvalError("eval_qf on a quantified formula");
        }
      },
      f.node());
}

} // namespace grothpres
