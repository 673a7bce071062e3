#include "weylkit/parse.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "weylkit/errors.hpp"

namespace weylkit {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t rank) : text_(text), rank_(rank) {
    if (rank_ == 0) rank_ = infer_rank(text);
  }

  CharElt char_expr() {
    CharElt total;
    bool neg = accept('-');
    if (!neg) accept('+');
    for (;;) {
      CharElt t = char_term();
      if (neg) t = -t;
      total += t;
      if (accept('+')) {
        neg = false;
      } else if (accept('-')) {
        neg = true;
      } else {
        return total;
      }
    }
  }

  OpExpr op_expr() {
    OpExpr out;
    bool neg = accept('-');
    if (!neg) accept('+');
    for (;;) {
      OpTerm t = op_term();
      if (neg) t.coeff = -t.coeff;
      if (t.coeff != 0) out.terms.push_back(std::move(t));
      if (accept('+')) {
        neg = false;
      } else if (accept('-')) {
        neg = true;
      } else {
        return out;
      }
    }
  }

  Weight weight_list() {
    skip_ws();
    const std::size_t start = pos_;
    std::vector<Weight::value_type> coords;
    coords.push_back(integer_value());
    while (accept(',')) coords.push_back(integer_value());
    if (rank_ == 0) rank_ = coords.size();
    if (coords.size() == 1 && coords[0] == 0) return Weight(rank_);
    if (coords.size() != rank_) {
      fail("a weight with " + std::to_string(rank_) + " coordinates", start);
    }
    return Weight(std::span<const Weight::value_type>(coords));
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

 private:
  CharElt char_term() {
    CharElt acc = char_factor();
    while (accept('*')) acc = acc * char_factor();
    return acc;
  }

  CharElt char_factor() {
    CharElt base = char_primary();
    if (accept('^')) {
      const bool neg = accept('-');
      const std::size_t at = pos_;
      Integer k = integer_literal();
      if (!k.fits_slong_p()) fail("a small exponent", at);
      try {
        return power(base, (neg ? -1 : 1) * k.get_si(), rank_);
      } catch (const NotDivisible&) {
        fail("a monomial base for a negative exponent", at);
      }
    }
    return base;
  }

  CharElt char_primary() {
    skip_ws();
    if (accept('(')) {
      CharElt inner = char_expr();
      expect(')');
      return inner;
    }
    if (peek_digit()) {
      Integer c = integer_literal();
      if (rank_ == 0) rank_ = 1;
      return CharElt::constant(rank_, c);
    }
    if (accept('e')) {
      expect('[');
      Weight w = weight_list();
      expect(']');
      return CharElt::monomial(w);
    }
    fail("an integer, e[...] or '('");
  }

  OpTerm op_term() {
    OpTerm t;
    op_factor(t);
    while (accept('*')) op_factor(t);
    return t;
  }

  void op_factor(OpTerm& t) {
    skip_ws();
    if (peek_digit()) {
      t.coeff *= integer_literal();
      return;
    }
    const std::size_t at = pos_;
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      word += text_[pos_++];
    }
    OpFactor f;
    if (word == "top") {
      f.kind = OpFactor::Kind::Top;
    } else if (word == "m") {
      f.kind = OpFactor::Kind::Multiply;
      expect('[');
      f.multiplier = char_expr();
      expect(']');
    } else if (word == "d" || word == "dp" || word == "w") {
      f.kind = word == "d" ? OpFactor::Kind::Delta
               : word == "dp" ? OpFactor::Kind::DeltaPrime
                              : OpFactor::Kind::Reflect;
      expect('[');
      const std::size_t idx_at = pos_;
      Integer j = integer_literal();
      if (j < 1 || j > static_cast<long>(rank_)) {
        fail("a simple index in 1.." + std::to_string(rank_), idx_at);
      }
      f.index = static_cast<std::size_t>(j.get_si() - 1);
      expect(']');
    } else {
      fail("d[j], dp[j], w[j], top, m[...] or an integer", at);
    }
    t.factors.push_back(std::move(f));
  }

  Weight::value_type integer_value() {
    skip_ws();
    const std::size_t at = pos_;
    const bool neg = accept('-');
    if (!neg) accept('+');
    Integer v = integer_literal();
    if (neg) v = -v;
    if (!v.fits_slong_p()) fail("a coordinate that fits in 64 bits", at);
    return v.get_si();
  }

  Integer integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  // Coordinate count of the first monomial that is not the rank-free e[0];
  // 0 if there is none.
  static std::size_t infer_rank(std::string_view text) {
    for (std::size_t at = text.find("e["); at != std::string_view::npos; at = text.find("e[", at + 2)) {
      const std::size_t close = text.find(']', at);
      if (close == std::string_view::npos) return 0;
      const std::string_view body = text.substr(at + 2, close - at - 2);
      const std::size_t commas = static_cast<std::size_t>(std::count(body.begin(), body.end(), ','));
      if (commas > 0 || body.find_first_not_of(" 0") != std::string_view::npos) return commas + 1;
    }
    return 0;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected, std::size_t at = std::string_view::npos) {
    if (at == std::string_view::npos) at = pos_;
    std::string found = at < text_.size() ? "'" + std::string(1, text_[at]) + "'" : "end of input";
    throw ParseError("at position " + std::to_string(at) + ": expected " + expected + ", found " +
                     found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t rank_;
};

}  // namespace

CharElt parse_char(std::string_view text, std::size_t rank) {
  Parser p(text, rank);
  CharElt u = p.char_expr();
  p.finish();
  return u;
}

OpExpr parse_operator(std::string_view text, std::size_t rank) {
  Parser p(text, rank);
  OpExpr op = p.op_expr();
  p.finish();
  return op;
}

Weight parse_weight(std::string_view text, std::size_t rank) {
  Parser p(text, rank);
  const bool bracket = p.accept('[');
  Weight w = p.weight_list();
  if (bracket) p.expect(']');
  p.finish();
  return w;
}

}  // namespace weylkit
