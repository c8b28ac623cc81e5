#include "hopfkit/scalar.hpp"

#include <cctype>
#include <string>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
    throw ValidationError("not a rational number: '" + std::string(text) + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace hopfkit
