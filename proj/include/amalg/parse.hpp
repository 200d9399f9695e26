#pragma once

#include <cctype>
#include <limits>
#include <string>
#include <string_view>

#include "error.hpp"
#include "tower.hpp"

namespace amalg {

namespace detail {

// expr   := factor ( '*'? factor )*
// factor := atom ( '^' int )*
// atom   := 'e' | 'h(' n ';' a ',' b ',' c ')' | 'L[' 3 rows ']' | 't(' N ')' | '(' expr ')'
class Parser
{
public:
  Parser(const Tower& tower, std::string_view text) : tower_(tower), text_(text) {}

  Word parse()
  {
    Word w = expr();
    skip();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

private:
  const Tower& tower_;
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw Error(Errc::syntax, msg, pos_); }

  void skip()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c)
  {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c)
  {
    if (!peek(c))
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_atom()
  {
    skip();
    if (pos_ >= text_.size())
      return false;
    char c = text_[pos_];
    return c == 'e' || c == 'h' || c == 'L' || c == 't' || c == '(';
  }

  Int integer()
  {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+')
      s.erase(0, 1);
    return Int(s);
  }

  std::int64_t small_integer()
  {
    auto at = pos_;
    Int v = integer();
    if (v > Int(std::numeric_limits<std::int64_t>::max()) ||
        v < Int(std::numeric_limits<std::int64_t>::min())) {
      pos_ = at;
      fail("integer out of range");
    }
    return static_cast<std::int64_t>(v);
  }

  Word expr()
  {
    Word w = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        w = tower_.mul(w, factor());
      } else if (starts_atom()) {
        w = tower_.mul(w, factor());
      } else {
        return w;
      }
    }
  }

  Word factor()
  {
    Word w = atom();
    while (peek('^')) {
      ++pos_;
      w = tower_.pow(w, integer());
    }
    return w;
  }

  Word atom()
  {
    skip();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    std::size_t at = pos_;
    switch (text_[pos_++]) {
    case 'e': return tower_.identity();
    case '(': {
      Word w = expr();
      expect(')');
      return w;
    }
    case 'h': {
      expect('(');
      auto n = small_integer();
      if (n < 0)
        fail("negative H_n index");
      expect(';');
      auto a = small_integer();
      expect(',');
      auto b = small_integer();
      expect(',');
      auto c = small_integer();
      expect(')');
      if (static_cast<std::size_t>(n) >= tower_.primes().size())
        throw Error(Errc::index_out_of_range,
                    "h(" + std::to_string(n) + ";...) has no configured prime", at);
      return tower_.h(static_cast<std::size_t>(n), a, b, c);
    }
    case 'L': {
      expect('[');
      LambdaMatrix::Entries e;
      for (int i = 0; i < 9; ++i) {
        if (i > 0)
          expect(i % 3 == 0 ? ';' : ',');
        e[i] = integer();
      }
      expect(']');
      try {
        return tower_.lambda(LambdaMatrix::from_entries(std::move(e)));
      } catch (const Error& err) {
        throw Error(Errc::syntax, err.what(), at);
      }
    }
    case 't': {
      expect('(');
      auto n = small_integer();
      if (n < 1)
        fail("stable letter level must be >= 1");
      expect(')');
      return tower_.stable(static_cast<unsigned>(n), 1);
    }
    default: pos_ = at; fail("unexpected '" + std::string(1, text_[at]) + "'");
    }
  }
};

} // namespace detail

/// Parses the element grammar into a reduced word. Throws Error with
/// Errc::syntax (and a position) or Errc::index_out_of_range.
inline Word parse_element(const Tower& tower, std::string_view text)
{
  return detail::Parser(tower, text).parse();
}

} // namespace amalg
