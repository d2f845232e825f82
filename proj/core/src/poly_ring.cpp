#include "hwprobe/poly_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hwprobe/error.hpp"

namespace hwprobe {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names,
                   std::vector<int> weights, OrderKind order)
    : field_(field),
      names_(std::move(names)),
      weights_(std::move(weights)),
      order_(order) {
  if (names_.size() != weights_.size())
    throw InputError("variable and weight counts differ");
  if (names_.size() > static_cast<std::size_t>(kMaxVars))
    throw InputError("at most " + std::to_string(kMaxVars) +
                     " variables are supported");
  for (int w : weights_)
    if (w < 1) throw InputError("variable weights must be positive");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw InputError("invalid variable name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw InputError("invalid variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw InputError("duplicate variable '" + n + "'");
  }
}

int PolyRing::maxWeight() const {
  int w = 1;
  for (int x : weights_) w = std::max(w, x);
  return w;
}

std::shared_ptr<const PolyRing> PolyRing::withOrder(OrderKind order) const {
  return std::make_shared<PolyRing>(field_, names_, weights_, order);
}

Monomial PolyRing::monomial(std::span<const int> exponents) const {
  if (exponents.size() != names_.size())
    throw InputError("exponent vector length does not match variable count");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw InputError("negative exponent");
    m.exp[i] = static_cast<std::uint16_t>(exponents[i]);
    m.degree += exponents[i] * weights_[i];
  }
  return m;
}

Monomial PolyRing::variable(int index, int power) const {
  Monomial m;
  m.exp[index] = static_cast<std::uint16_t>(power);
  m.degree = weights_[index] * power;
  return m;
}

std::vector<Monomial> PolyRing::monomialsOfDegree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> exps(static_cast<std::size_t>(numVars()), 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == numVars()) {
      if (remaining == 0) out.push_back(monomial(exps));
      return;
    }
    const int w = weights_[static_cast<std::size_t>(var)];
    for (int e = 0; e * w <= remaining; ++e) {
      exps[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, remaining - e * w);
    }
    exps[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, d);
  return out;
}

int PolyRing::weightedDegree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < numVars(); ++i) d += m.exp[i] * weights_[i];
  return d;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (int i = 0; i < numVars(); ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    m.degree += m.exp[i] * weights_[i];
  }
  return m;
}

Poly PolyRing::constant(std::int64_t c) const {
  return fromTerm(one(), field_.fromInt(c));
}

Poly PolyRing::fromTerm(const Monomial& m, Coeff c) const {
  Poly p;
  if (c != 0) p.terms.push_back({m, c});
  return p;
}

Poly PolyRing::add(const Poly& f, const Poly& g) const {
  return addMultiple(f, g, one(), 1);
}

Poly PolyRing::sub(const Poly& f, const Poly& g) const {
  return addMultiple(f, g, one(), field_.neg(1));
}

Poly PolyRing::neg(const Poly& f) const { return scale(f, field_.neg(1)); }

Poly PolyRing::scale(const Poly& f, Coeff c) const {
  Poly r;
  if (c == 0) return r;
  r.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) r.terms.push_back({t.mono, field_.mul(t.coef, c)});
  return r;
}

Poly PolyRing::mulTerm(const Poly& f, const Monomial& m, Coeff c) const {
  Poly r;
  if (c == 0) return r;
  r.terms.reserve(f.terms.size());
  for (const auto& t : f.terms)
    r.terms.push_back({t.mono * m, field_.mul(t.coef, c)});
  return r;
}

Poly PolyRing::addMultiple(const Poly& f, const Poly& g, const Monomial& m,
                           Coeff c) const {
  if (c == 0 || g.isZero()) return f;
  Poly r;
  r.terms.reserve(f.terms.size() + g.terms.size());
  auto i = f.terms.begin();
  auto j = g.terms.begin();
  while (i != f.terms.end() || j != g.terms.end()) {
    if (j == g.terms.end()) {
      r.terms.push_back(*i++);
      continue;
    }
    Monomial gm = j->mono * m;
    int cmp = i == f.terms.end() ? -1 : compare(i->mono, gm);
    if (cmp > 0) {
      r.terms.push_back(*i++);
    } else if (cmp < 0) {
      r.terms.push_back({gm, field_.mul(j->coef, c)});
      ++j;
    } else {
      Coeff s = field_.add(i->coef, field_.mul(j->coef, c));
      if (s != 0) r.terms.push_back({gm, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly PolyRing::normalize(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
    return compare(a.mono, b.mono) > 0;
  });
  Poly r;
  for (const auto& t : terms) {
    if (!r.terms.empty() && r.terms.back().mono == t.mono) {
      r.terms.back().coef = field_.add(r.terms.back().coef, t.coef);
      if (r.terms.back().coef == 0) r.terms.pop_back();
    } else if (t.coef != 0) {
      r.terms.push_back(t);
    }
  }
  return r;
}

Poly PolyRing::mul(const Poly& f, const Poly& g) const {
  if (f.isZero() || g.isZero()) return {};
  if (g.terms.size() == 1) return mulTerm(f, g.lead().mono, g.lead().coef);
  if (f.terms.size() == 1) return mulTerm(g, f.lead().mono, f.lead().coef);
  std::vector<Term> all;
  all.reserve(f.terms.size() * g.terms.size());
  for (const auto& a : f.terms)
    for (const auto& b : g.terms)
      all.push_back({a.mono * b.mono, field_.mul(a.coef, b.coef)});
  return normalize(std::move(all));
}

Poly PolyRing::pow(const Poly& f, int e) const {
  Poly r = constant(1);
  for (int i = 0; i < e; ++i) r = mul(r, f);
  return r;
}

bool PolyRing::isHomogeneous(const Poly& f) const {
  for (const auto& t : f.terms)
    if (t.mono.degree != f.terms.front().mono.degree) return false;
  return true;
}

int PolyRing::degree(const Poly& f) const {
  int d = -1;
  for (const auto& t : f.terms) d = std::max(d, t.mono.degree);
  return d;
}

std::string PolyRing::toString(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < numVars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names_[i];
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::toString(const Poly& f) const {
  if (f.isZero()) return "0";
  std::string s;
  for (const auto& t : f.terms) {
    std::int64_t c = field_.toSymmetric(t.coef);
    bool negative = c < 0;
    std::int64_t a = negative ? -c : c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (t.mono.isOne()) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += toString(t.mono);
    }
  }
  return s;
}

int PolyRing::variableIndex(const std::string& name) const {
  for (int i = 0; i < numVars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

namespace {

// Recursive-descent parser for the polynomial grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := integer | name | '(' expr ')'
class PolyParser {
 public:
  PolyParser(const PolyRing& ring, std::string_view text, std::size_t line)
      : ring_(ring), text_(text), line_(line) {}

  Poly parse() {
    skipSpace();
    if (pos_ >= text_.size()) fail("empty polynomial");
    Poly p = expr();
    skipSpace();
    if (pos_ < text_.size()) fail("unexpected token");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what, line_, pos_ + 1, currentToken());
  }

  std::string currentToken() const {
    if (pos_ >= text_.size()) return "<end>";
    std::size_t end = pos_;
    if (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_') {
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
    } else {
      ++end;
    }
    return std::string(text_.substr(pos_, end - pos_));
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly result;
    bool first = true;
    while (true) {
      bool negative = false;
      if (accept('-')) {
        negative = true;
      } else if (accept('+')) {
      } else if (!first) {
        return result;
      }
      Poly t = term();
      result = negative ? ring_.sub(result, t) : ring_.add(result, t);
      first = false;
    }
  }

  Poly term() {
    Poly p = factor();
    while (accept('*')) p = ring_.mul(p, factor());
    return p;
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skipSpace();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected exponent");
      std::size_t start = pos_;
      long long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > 10000) {
          pos_ = start;
          fail("exponent too large");
        }
        ++pos_;
      }
      base = ring_.pow(base, static_cast<int>(e));
    }
    return base;
  }

  Poly atom() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t value = 0;
      const auto p = static_cast<std::int64_t>(ring_.field().characteristic());
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = (value * 10 + (text_[pos_] - '0')) % p;
        ++pos_;
      }
      return ring_.constant(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = currentToken();
      int index = ring_.variableIndex(name);
      if (index < 0) fail("unknown variable");
      pos_ += name.size();
      return ring_.var(index);
    }
    fail("unexpected character");
  }

  const PolyRing& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parsePoly(const PolyRing& ring, std::string_view text, std::size_t line) {
  return PolyParser(ring, text, line).parse();
}

}  // namespace hwprobe
