#include "mgn/expression.hpp"

#include <cctype>
#include <limits>

#include "mgn/class_library.hpp"
#include "mgn/errors.hpp"

namespace mgn {

namespace {

class Parser {
 public:
  Parser(const SpaceId& space, std::string_view text) : space_(space), text_(text) {}

  DivisorClass run() {
    DivisorClass out(space_);
    skip_ws();
    if (peek() == '0' && is_lone_zero()) {
      ++pos_;
      expect_end();
      return out;
    }
    Rational sign(1);
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    term(sign, out);
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      term(c == '-' ? Rational(-1) : Rational(1), out);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
  }

  bool is_lone_zero() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p == text_.size();
  }

  long integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<int>::max() - 9) / 10) fail("integer too large");
      v = v * 10 + (take() - '0');
    }
    return v;
  }

  int small_int() { return static_cast<int>(integer()); }

  // rational := ['-'] INT ['/' INT]
  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip_ws();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    if (digits.empty()) fail("expected a rational");
    std::string text = (negative ? "-" : "") + digits;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::string den;
      while (std::isdigit(static_cast<unsigned char>(peek()))) den += take();
      if (den.empty()) fail("expected a denominator");
      text += "/" + den;
    }
    try {
      return parse_rational(text);
    } catch (const ParseError&) {
      throw ParseError("invalid rational '" + text + "'", start);
    }
  }

  void term(const Rational& sign, DivisorClass& out) {
    skip_ws();
    Coefficient coeff(sign);
    const char c = peek();
    if (c == '?') {
      ++pos_;
      expect('*');
      coeff = Coefficient::unknown();
      skip_ws();
      const std::size_t at = pos_;
      if (peek() == 'B' || peek() == 'D' || peek() == 'K') throw ParseError("'?' applies to generators only", at);
    } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      coeff = Rational(sign * rational());
      expect('*');
    }
    skip_ws();
    const std::size_t at = pos_;
    switch (peek()) {
      case 'B':
      case 'D':
      case 'K': {
        DivisorClass named = named_class();
        if (!(named.space() == space_))
          throw SpaceMismatch("'" + std::string(text_.substr(at, pos_ - at)) + "' lives on " +
                              to_string(named.space()) + ", expression is on " + to_string(space_));
        for (const auto& [x, v] : named.terms()) out.accumulate(x, coeff.value() * v);
        return;
      }
      default:
        generator(coeff, out);
    }
  }

  DivisorClass named_class() {
    const std::size_t at = pos_;
    if (text_.substr(pos_, 3) == "BN(") {
      pos_ += 3;
      const int h = small_int();
      expect(')');
      return brill_noether(h);
    }
    if (text_.substr(pos_, 4) == "DGA(") {
      pos_ += 4;
      PointedBNSpec spec;
      spec.g = small_int();
      expect(';');
      spec.a.push_back(small_int());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        spec.a.push_back(small_int());
        skip_ws();
      }
      expect(')');
      return pointed_bn_partial(spec);
    }
    if (text_.substr(pos_, 2) == "K(") {
      pos_ += 2;
      const int g = small_int();
      expect(',');
      const int n = small_int();
      expect(')');
      return canonical_tracked(make_space(g, n));
    }
    throw ParseError("unknown named class", at);
  }

  void generator(const Coefficient& coeff, DivisorClass& out) {
    const std::size_t at = pos_;
    const char c = peek();
    if (c == 'l') {
      ++pos_;
      out.accumulate(GeneratorIndex::lambda(), coeff);
      return;
    }
    if (c == 'w') {
      ++pos_;
      const int i = small_int();
      if (i < 1 || i > space_.n)
        throw InvalidGenerator("w" + std::to_string(i) + " outside 1.." + std::to_string(space_.n));
      out.accumulate(GeneratorIndex::omega(i), coeff);
      return;
    }
    if (text_.substr(pos_, 3) == "psi") {
      pos_ += 3;
      const int i = small_int();
      if (i < 1 || i > space_.n)
        throw InvalidGenerator("psi" + std::to_string(i) + " outside 1.." + std::to_string(space_.n));
      const DivisorClass psi = psi_in_omega_basis(space_, i);
      for (const auto& [x, v] : psi.terms()) out.accumulate(x, v.value() * coeff);
      return;
    }
    if (c == 'd') {
      ++pos_;
      const int genus = small_int();
      skip_ws();
      if (peek() != ';') {
        if (genus == 0) {
          out.accumulate(GeneratorIndex::delta_irr(), coeff);
          return;
        }
        if (space_.n != 0) throw ParseError("expected ';' after genus (shorthand d" + std::to_string(genus) +
                                                " is only valid with no marked points)",
                                            pos_);
        out.accumulate(canonicalize(space_, genus, PointSet{}), coeff);
        return;
      }
      ++pos_;
      expect('{');
      PointSet s;
      skip_ws();
      if (peek() != '}') {
        while (true) {
          const std::size_t pt_at = pos_;
          const int p = small_int();
          if (p < 1 || p > space_.n)
            throw InvalidGenerator("marked point " + std::to_string(p) + " outside 1.." + std::to_string(space_.n) +
                                   " at position " + std::to_string(pt_at));
          s = s.with(p);
          skip_ws();
          if (peek() != ',') break;
          ++pos_;
        }
      }
      expect('}');
      out.accumulate(canonicalize(space_, genus, s), coeff);
      return;
    }
    throw ParseError("expected a generator", at);
  }

  SpaceId space_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DivisorClass parse_class(const SpaceId& space, std::string_view text) {
  validate(space);
  return Parser(space, text).run();
}

std::string format_class(const DivisorClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [x, v] : c.terms()) {
    const std::string gen = to_string(x);
    if (v.is_unknown()) {
      out += (out.empty() ? "" : " + ") + std::string("?*") + gen;
      continue;
    }
    const bool negative = v.value() < 0;
    const Rational mag = abs(v.value());
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += gen;
  }
  return out;
}

}  // namespace mgn
