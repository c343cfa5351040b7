#include "hkd/poly.hpp"

#include <algorithm>
#include <cctype>

#include "hkd/errors.hpp"

namespace hkd {

Poly::Poly(PrimeField field, std::vector<Term> raw_terms)
    : F_(field), terms_(std::move(raw_terms)) {
  normalize();
}

void Poly::normalize() {
  for (auto& t : terms_) {
    if (t.m.e[0] < 0 || t.m.e[1] < 0 || t.m.e[2] < 0)
      throw ValidationError("Poly: negative exponent");
    t.c %= F_.p;
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return drl_greater(a.m, b.m); });
  std::vector<Term> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().m == t.m)
      merged.back().c = F_.add(merged.back().c, t.c);
    else
      merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.c == 0; }),
               merged.end());
  terms_ = std::move(merged);
  for (size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].m.deg() != terms_[0].m.deg())
      throw ValidationError("Poly: not homogeneous");
}

const Term& Poly::lead() const {
  if (terms_.empty()) throw ValidationError("Poly: lead term of zero");
  return terms_.front();
}

Poly Poly::operator+(const Poly& o) const {
  if (F_ != o.F_) throw ValidationError("Poly: mixed fields");
  std::vector<Term> t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return Poly(F_, std::move(t));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(o.F_.neg(1)); }

Poly Poly::scaled(uint32_t c) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.c = F_.mul(term.c, c);
  return Poly(F_, std::move(t));
}

Poly Poly::times_monomial(const Mono& m, uint32_t c) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) {
    term.m = term.m * m;
    term.c = F_.mul(term.c, c);
  }
  return Poly(F_, std::move(t));
}

Poly Poly::operator*(const Poly& o) const {
  if (F_ != o.F_) throw ValidationError("Poly: mixed fields");
  std::vector<Term> t;
  t.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) t.push_back({a.m * b.m, F_.mul(a.c, b.c)});
  return Poly(F_, std::move(t));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(F_.inv(lead().c));
}

Poly Poly::pow(unsigned long e) const {
  Poly result(F_, {Term{{{0, 0, 0}}, 1}});
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Poly Poly::exponent_scaled(long q) const {
  if (q < 1) throw ValidationError("Poly: exponent scale must be >= 1");
  std::vector<Term> t = terms_;
  for (auto& term : t)
    term.m = {{static_cast<int32_t>(term.m.e[0] * q), static_cast<int32_t>(term.m.e[1] * q),
               static_cast<int32_t>(term.m.e[2] * q)}};
  return Poly(F_, std::move(t));
}

std::string Poly::to_string(const std::array<std::string, 3>& vars) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int v = 0; v < 3; ++v) {
      if (t.m.e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[v];
      if (t.m.e[v] > 1) mono += "^" + std::to_string(t.m.e[v]);
    }
    if (mono.empty())
      out += std::to_string(t.c);
    else if (t.c == 1)
      out += mono;
    else
      out += std::to_string(t.c) + "*" + mono;
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_space() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_space();
    return i >= s.size();
  }
  char peek() {
    skip_space();
    return s[i];
  }
};

long parse_integer(Cursor& c) {
  c.skip_space();
  size_t start = c.i;
  while (c.i < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw ValidationError("Poly: expected integer in '" + c.s + "'");
  return std::stol(c.s.substr(start, c.i - start));
}

}  // namespace

Poly Poly::parse(const std::string& text, PrimeField field,
                 const std::array<std::string, 3>& vars) {
  Cursor c{text};
  std::vector<Term> terms;
  bool first = true;
  while (!c.done()) {
    long long sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      throw ValidationError("Poly: expected '+' or '-' in '" + text + "'");
    }
    first = false;

    long long coeff = 1;
    Mono m;
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      if (c.done()) break;
      if (isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff *= parse_integer(c);
        saw_factor = true;
      } else {
        int var = -1;
        c.skip_space();
        for (int v = 0; v < 3; ++v) {
          if (c.s.compare(c.i, vars[v].size(), vars[v]) == 0) {
            var = v;
            c.i += vars[v].size();
            break;
          }
        }
        if (var < 0) break;
        long e = 1;
        if (!c.done() && c.peek() == '^') {
          ++c.i;
          e = parse_integer(c);
        }
        m.e[var] += static_cast<int32_t>(e);
        saw_factor = true;
      }
      expect_factor = false;
      if (!c.done() && c.peek() == '*') {
        ++c.i;
        expect_factor = true;
      }
    }
    if (!saw_factor) throw ValidationError("Poly: empty term in '" + text + "'");
    terms.push_back({m, field.normalize(sign * coeff)});
  }
  if (terms.empty()) throw ValidationError("Poly: no terms in '" + text + "'");
  return Poly(field, std::move(terms));
}

Poly partial_derivative(const Poly& f, int var) {
  if (var < 0 || var > 2) throw ValidationError("partial_derivative: bad variable index");
  std::vector<Term> t;
  for (const auto& term : f.terms()) {
    if (term.m.e[var] == 0) continue;
    Mono m = term.m;
    const uint32_t factor = f.field().normalize(m.e[var]);
    m.e[var] -= 1;
    t.push_back({m, f.field().mul(term.c, factor)});
  }
  return Poly(f.field(), std::move(t));
}

}  // namespace hkd
