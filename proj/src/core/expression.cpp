#include "hopfkit/expression.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : s_(text), alphabet_(alphabet) {}

  NCPoly parse_element_only() {
    NCPoly p = element();
    expect_end();
    return p;
  }

  TensorPoly parse_tensor_only() {
    TensorPoly t;
    skip_ws();
    bool negative = false;
    if (consume('-')) negative = true;
    else consume('+');
    while (true) {
      TensorPoly tt = tensor_term();
      t.add_scaled(tt, negative ? Scalar(-1) : Scalar(1));
      skip_ws();
      if (consume('+')) negative = false;
      else if (consume('-')) negative = true;
      else break;
    }
    expect_end();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
  }

  bool at_factor_start() {
    skip_ws();
    return pos_ < s_.size() && (is_ident_start(s_[pos_]) || s_[pos_] == '(' || is_digit(s_[pos_]));
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Scalar rational() {
    std::string num = digits();
    const std::size_t save = pos_;
    if (consume('/')) {
      skip_ws();
      if (pos_ < s_.size() && is_digit(s_[pos_])) {
        std::string den = digits();
        if (mpz_class(den) == 0) fail("zero denominator");
        return parse_rational(num + "/" + den);
      }
      pos_ = save;
    }
    return parse_rational(num);
  }

  NCPoly element() {
    NCPoly out;
    bool negative = false;
    if (consume('-')) negative = true;
    else consume('+');
    while (true) {
      out.add_scaled(term(), negative ? Scalar(-1) : Scalar(1));
      if (consume('+')) negative = false;
      else if (consume('-')) negative = true;
      else break;
    }
    return out;
  }

  NCPoly term() {
    skip_ws();
    NCPoly acc = constant(1);
    bool need_factor = true;
    if (pos_ < s_.size() && is_digit(s_[pos_])) {
      acc = constant(rational());
      need_factor = false;
      if (consume('*')) {
        need_factor = true;
      } else if (at_factor_start() && !is_digit(s_[pos_])) {
        need_factor = true;
      }
      if (!need_factor) return power_suffix(acc);
    }
    if (need_factor) acc = acc * factor();
    while (consume('*')) acc = acc * factor();
    return acc;
  }

  NCPoly power_suffix(NCPoly base) {
    while (consume('^')) {
      const std::string e = digits();
      const unsigned long n = std::stoul(e);
      if (n == 0) fail("exponent must be positive");
      NCPoly r = base;
      for (unsigned long i = 1; i < n; ++i) r = r * base;
      base = std::move(r);
    }
    return base;
  }

  NCPoly factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a factor");
    NCPoly base;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = element();
      if (!consume(')')) fail("expected ')'");
    } else if (is_digit(c)) {
      base = constant(rational());
    } else if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      auto letter = alphabet_.find(name);
      if (!letter) throw ParseError(start, "unknown generator '" + std::string(name) + "'");
      base = generator(*letter);
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    return power_suffix(std::move(base));
  }

  TensorPoly tensor_term() {
    NCPoly left = term();
    if (!consume('@')) {
      if (left.is_zero()) return {};
      fail("expected '@'");
    }
    NCPoly right = term();
    return tensor(left, right);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const Alphabet& alphabet_;
};

/// Sign-separated rendering of c * body. `body` is empty for constants.
void append_term(std::string& out, const Scalar& c, const std::string& body) {
  const bool first = out.empty();
  const bool negative = c < 0;
  const Scalar a = negative ? Scalar(-c) : c;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (body.empty()) {
    out += to_string(a);
  } else if (a == 1) {
    out += body;
  } else {
    out += to_string(a) + "*" + body;
  }
}

template <class Key, class Less, class Render>
std::string format_terms(const LinearCombination<Key>& p, Less less, Render render) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Key, Scalar>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return less(b.first, a.first); });
  std::string out;
  for (const auto& [k, c] : terms) render(out, k, c);
  return out;
}

}  // namespace

NCPoly parse_element(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse_element_only();
}

TensorPoly parse_tensor(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse_tensor_only();
}

std::string format_element(const NCPoly& p, const Alphabet& alphabet) {
  const MonomialOrder ord(alphabet);
  return format_terms(
      p, [&](const Word& a, const Word& b) { return ord.less(a, b); },
      [&](std::string& out, const Word& w, const Scalar& c) {
        append_term(out, c, w.empty() ? std::string() : format_word(w, alphabet));
      });
}

namespace {

template <class Tuple>
std::string format_tuple_terms(const LinearCombination<Tuple>& t, const Alphabet& alphabet,
                               std::vector<Word> (*legs)(const Tuple&)) {
  const MonomialOrder ord(alphabet);
  auto less = [&](const Tuple& a, const Tuple& b) {
    const auto la = legs(a);
    const auto lb = legs(b);
    return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end(),
                                        [&](const Word& x, const Word& y) { return ord.less(x, y); });
  };
  return format_terms(t, less, [&](std::string& out, const Tuple& k, const Scalar& c) {
    const auto ls = legs(k);
    std::string body;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (i) body += '@';
      body += format_word(ls[i], alphabet);
    }
    // A leading unit leg folds into the coefficient ("2@X" rather than "2*1@X").
    if (c != 1 && c != -1 && ls.front().empty()) {
      const bool negative = c < 0;
      std::string rest = body.substr(1);
      const bool first = out.empty();
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      out += to_string(negative ? Scalar(-c) : c) + rest;
      return;
    }
    append_term(out, c, body);
  });
}

std::vector<Word> pair_legs(const WordPair& p) { return {p.first, p.second}; }
std::vector<Word> tuple_legs(const WordTuple& t) { return t; }

}  // namespace

std::string format_tensor(const TensorPoly& t, const Alphabet& alphabet) {
  return format_tuple_terms<WordPair>(t, alphabet, &pair_legs);
}

std::string format_chain(const TensorChain& t, const Alphabet& alphabet) {
  return format_tuple_terms<WordTuple>(t, alphabet, &tuple_legs);
}

}  // namespace hopfkit
