#include "mgn/rational.hpp"

#include <cctype>

#include "mgn/errors.hpp"

namespace mgn {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  if (slash != std::string_view::npos && !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'", num.size() + 1);

  mpz_class p(std::string(num), 10);
  mpz_class q(1);
  if (slash != std::string_view::npos) q = mpz_class(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  if (negative) p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace mgn
