#include "waring/parse.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "waring/errors.hpp"

namespace waring {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

std::string read_number(Cursor& c) {
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i < c.s.size() && c.s[c.i] == '.') {
    ++c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  } else if (c.i < c.s.size() && c.s[c.i] == '/') {
    std::size_t slash = c.i;
    ++c.i;
    std::size_t den = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == den) {
      c.i = slash;  // "/" belongs to something else; leave it
    }
  }
  return c.s.substr(start, c.i - start);
}

int read_exponent(Cursor& c) {
  // past '^'
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw ParseError("expected exponent after '^'", start);
  return std::stoi(c.s.substr(start, c.i - start));
}

struct Term {
  Rational coeff = 1;
  int xe = 0, ye = 0;
};

Term parse_term(Cursor& c) {
  Term t;
  bool any = false;
  for (;;) {
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t pos = c.i;
      std::string num = read_number(c);
      try {
        t.coeff *= rational_from_string(num);
      } catch (const std::exception&) {
        throw ParseError("bad number '" + num + "'", pos);
      }
      any = true;
    } else if (ch == 'x' || ch == 'y') {
      ++c.i;
      int e = 1;
      if (c.peek() == '^') {
        ++c.i;
        e = read_exponent(c);
      }
      (ch == 'x' ? t.xe : t.ye) += e;
      any = true;
    } else if (ch == '*') {
      ++c.i;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      throw ParseError(std::string("unknown variable '") + ch + "' (only x, y allowed)", c.i);
    } else {
      break;
    }
  }
  if (!any) throw ParseError("expected a term", c.i);
  return t;
}

}  // namespace

BinaryForm parse_form(const std::string& text) {
  Cursor c{text};
  if (c.done()) throw ParseError("empty input", 0);
  std::map<std::pair<int, int>, Rational> monomials;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", c.i);
    }
    Term t = parse_term(c);
    monomials[{t.xe, t.ye}] += sign * t.coeff;
    first = false;
  }
  for (auto it = monomials.begin(); it != monomials.end();) {
    if (it->second == 0)
      it = monomials.erase(it);
    else
      ++it;
  }
  if (monomials.empty()) throw ZeroFormError();
  int degree = -1;
  for (const auto& [exps, coeff] : monomials) {
    int d = exps.first + exps.second;
    if (degree < 0) degree = d;
    if (d != degree)
      throw ParseError("polynomial is not homogeneous (degrees " +
                           std::to_string(degree) + " and " + std::to_string(d) + ")",
                       text.size());
  }
  BinaryForm f = BinaryForm::zero(degree);
  for (const auto& [exps, coeff] : monomials) f.coeffs[exps.first] += coeff;
  if (f.is_zero()) throw ZeroFormError();
  return f;
}

std::string render_form(const BinaryForm& f) {
  std::string out;
  const char vx = f.role == RingRole::dual ? 'X' : 'x';
  const char vy = f.role == RingRole::dual ? 'Y' : 'y';
  for (int i = f.degree; i >= 0; --i) {
    const Rational& c = f.coeffs[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const int ye = f.degree - i;
    std::string vars;
    if (i > 0) {
      vars += vx;
      if (i > 1) vars += "^" + std::to_string(i);
    }
    if (ye > 0) {
      if (!vars.empty()) vars += "*";
      vars += vy;
      if (ye > 1) vars += "^" + std::to_string(ye);
    }
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + "*" + vars;
    }
  }
  return out;
}

}  // namespace waring
