#include <cctype>
#include <sstream>

#include "profab/errors.hpp"
#include "profab/pseudonumber.hpp"

namespace profab {

namespace {

// Recursive-descent parser for
//   sum     := ['+'|'-'] product { ('+'|'-') product }
//   product := unary { '*' unary }
//   unary   := '-' unary | primary
//   primary := integer | '[' integer '^' '(' 'w' '-' integer ')' ']' | '(' sum ')'
class Parser {
 public:
  Parser(std::string_view text, const Supernatural& pi) : text_(text), pi_(pi) {}

  Pseudonumber parse() {
    Pseudonumber value = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  Integer natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Pseudonumber sum() {
    Pseudonumber acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = product();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + product();
      } else if (accept('-')) {
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

  Pseudonumber product() {
    Pseudonumber acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Pseudonumber unary() {
    if (accept('-')) return -unary();
    return primary();
  }

  Pseudonumber primary() {
    skip_space();
    if (accept('(')) {
      Pseudonumber inner = sum();
      expect(')');
      return inner;
    }
    if (accept('[')) {
      const std::size_t at = pos_;
      const Integer base = natural();
      expect('^');
      expect('(');
      expect('w');
      expect('-');
      const Integer offset = natural();
      expect(')');
      expect(']');
      if (!offset.fits_uint_p() || offset == 0 || offset > UINT32_MAX) {
        throw ParseError("offset must be a positive 32-bit integer", at);
      }
      if (base < 2) throw ParseError("base must be >= 2", at);
      return Pseudonumber::omega_power(pi_, base, static_cast<std::uint32_t>(offset.get_ui()));
    }
    Pseudonumber out(natural());
    return Pseudonumber::normalize(out.constant(), {}, pi_);
  }

  std::string_view text_;
  const Supernatural& pi_;
  std::size_t pos_ = 0;
};

void write_term(std::ostringstream& os, const Term& t, bool leading) {
  const bool negative = t.coeff < 0;
  const Integer magnitude = abs(t.coeff);
  if (leading) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (magnitude != 1) os << magnitude.get_str() << '*';
  os << '[' << t.base.get_str() << "^(w-" << t.offset << ")]";
}

}  // namespace

Pseudonumber parse_pseudonumber(std::string_view text, const Supernatural& pi) {
  return Parser(text, pi).parse();
}

std::string to_string(const Pseudonumber& u) {
  std::ostringstream os;
  bool leading = true;
  if (u.constant() != 0 || u.terms().empty()) {
    os << u.constant().get_str();
    leading = false;
  }
  for (const Term& t : u.terms()) {
    write_term(os, t, leading);
    leading = false;
  }
  return os.str();
}

}  // namespace profab
