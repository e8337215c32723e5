#include "text_format.hpp"

#include <cctype>
#include <stdexcept>

namespace affvoa::text {

namespace {

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Index one past the ')' matching the '(' at position open.
std::size_t close_paren(const std::string& s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i + 1;
  }
  throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
}

Term parse_term(const std::string& body, int sign) {
  Term t;
  t.sign = sign;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == '*')) ++i;
  };
  skip();
  if (i < body.size() && (std::isdigit(static_cast<unsigned char>(body[i])))) {
    std::size_t j = i;
    while (j < body.size() && (std::isdigit(static_cast<unsigned char>(body[j])) || body[j] == '/')) ++j;
    t.coeff = body.substr(i, j - i);
    i = j;
  } else if (i < body.size() && body[i] == '(') {
    std::size_t j = close_paren(body, i);
    t.coeff = body.substr(i, j - i);
    i = j;
  }
  while (true) {
    skip();
    if (i >= body.size()) break;
    if (body.compare(i, 3, "|0>") == 0) {
      t.vacuum = true;
      i += 3;
      skip();
      if (i != body.size()) throw std::invalid_argument("text after |0> in '" + body + "'");
      break;
    }
    const char head = body[i];
    if ((head != 'E' && head != 'F' && head != 'H') || i + 1 >= body.size() || body[i + 1] != '(')
      throw std::invalid_argument("unexpected token at '" + body.substr(i) + "'");
    std::size_t j = close_paren(body, i + 1);
    Factor f{body.substr(i, j - i), std::nullopt};
    i = j;
    if (i < body.size() && body[i] == '(') {
      std::size_t k = close_paren(body, i);
      std::string inner = strip(body.substr(i + 1, k - i - 2));
      try {
        std::size_t used = 0;
        f.mode = std::stoi(inner, &used);
        if (used != inner.size()) throw std::invalid_argument("");
      } catch (const std::logic_error&) {
        throw std::invalid_argument("bad mode index '(" + inner + ")'");
      }
      i = k;
    }
    t.factors.push_back(std::move(f));
  }
  if (t.coeff.empty() && t.factors.empty() && !t.vacuum) throw std::invalid_argument("empty term");
  return t;
}

}  // namespace

std::vector<Term> parse_sum(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty expression");
  std::vector<Term> terms;
  int depth = 0;
  int sign = 1;
  std::size_t start = 0;
  bool pending = false;  // seen non-space content in current term
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const char c = i < s.size() ? s[i] : '\0';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    const bool boundary = i == s.size() || (depth == 0 && (c == '+' || c == '-'));
    if (!boundary) {
      if (!std::isspace(static_cast<unsigned char>(c))) pending = true;
      continue;
    }
    if (pending) {
      terms.push_back(parse_term(s.substr(start, i - start), sign));
      sign = 1;
    } else if (i == s.size()) {
      throw std::invalid_argument("expression ends with an operator: '" + s + "'");
    }
    if (i < s.size()) {
      if (c == '-') sign = -sign;
      start = i + 1;
      pending = false;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
  return terms;
}

}  // namespace affvoa::text
