#include "vmrt/poly_io.hpp"

#include <cctype>
#include <sstream>

#include "vmrt/error.hpp"

namespace vmrt {

std::string format(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    Rat mag = abs(c);
    const bool constant = total_degree(e) == 0;
    bool need_star = false;
    if (constant || mag != 1) {
      out << to_string(mag);
      need_star = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << '*';
      out << p.vars()[i];
      if (e[i] > 1) out << '^' << e[i];
      need_star = true;
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  SparsePoly parse() {
    SparsePoly result(vars_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = take() == '-';
    }
    while (true) {
      auto [e, c] = parse_term();
      result.add_term(e, negative ? Rat(-c) : c);
      skip_ws();
      if (at_end()) break;
      char op = take();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negative = op == '-';
    }
    return result;
  }

 private:
  std::pair<Exponents, Rat> parse_term() {
    Exponents e(vars_.size(), 0);
    Rat c(1);
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Int num = parse_uint();
        skip_ws();
        Int den(1);
        if (!at_end() && peek() == '/') {
          take();
          skip_ws();
          den = parse_uint();
          if (den == 0) fail("zero denominator");
        }
        Rat q(num, den);
        q.canonicalize();
        c *= q;
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::string name;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) name.push_back(take());
        auto idx = vars_.index_of(name);
        if (!idx) fail("unknown symbol '" + name + "'");
        skip_ws();
        unsigned power = 1;
        if (!at_end() && peek() == '^') {
          take();
          skip_ws();
          Int p = parse_uint();
          if (!p.fits_uint_p()) fail("exponent too large");
          power = static_cast<unsigned>(p.get_ui());
        }
        e[*idx] += power;
      } else {
        fail(std::string("unexpected '") + peek() + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      take();
    }
    return {std::move(e), c};
  }

  Int parse_uint() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(take());
    if (digits.empty()) fail("expected a number");
    return Int(digits, 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, "polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  const VarList& vars_;
  size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_polynomial(std::string_view text, const VarList& vars) { return Parser(text, vars).parse(); }

int max_symbol_index(std::string_view text, char prefix) {
  int best = -1;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != prefix) continue;
    if (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1]))) continue;
    size_t j = i + 1;
    int value = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      value = value * 10 + (text[j] - '0');
      ++j;
    }
    if (j > i + 1) best = std::max(best, value);
  }
  return best;
}

}  // namespace vmrt
