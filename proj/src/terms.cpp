#include "profab/terms.hpp"

#include <algorithm>
#include <cctype>

#include "profab/errors.hpp"

namespace profab {

SigmaTerm SigmaTerm::var(std::size_t index) {
  return SigmaTerm(std::make_shared<const Node>(Node{Kind::var, index, 0, {}}));
}

SigmaTerm SigmaTerm::product(SigmaTerm left, SigmaTerm right) {
  return SigmaTerm(std::make_shared<const Node>(
      Node{Kind::product, 0, 0, {std::move(left), std::move(right)}}));
}

SigmaTerm SigmaTerm::omega_inv(SigmaTerm child) {
  return SigmaTerm(std::make_shared<const Node>(Node{Kind::omega_inv, 0, 0, {std::move(child)}}));
}

SigmaTerm SigmaTerm::prime_power(SigmaTerm child, Prime p) {
  if (!is_prime(p)) throw InputError("exponent base " + std::to_string(p) + " is not prime");
  return SigmaTerm(
      std::make_shared<const Node>(Node{Kind::prime_power, 0, p, {std::move(child)}}));
}

bool SigmaTerm::operator==(const SigmaTerm& other) const {
  if (node_ == other.node_) return true;
  return node_->kind == other.node_->kind && node_->index == other.node_->index &&
         node_->prime == other.node_->prime && node_->children == other.node_->children;
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::span<const std::string> variables)
      : text_(text), variables_(variables) {}

  SigmaTerm parse() {
    SigmaTerm t = term();
    skip();
    if (pos_ < text_.size()) throw ParseError("unexpected character in term", pos_);
    return t;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool factor_ahead() {
    skip();
    return pos_ < text_.size() && (text_[pos_] == '(' || name_start(text_[pos_]));
  }

  SigmaTerm term() {
    SigmaTerm t = factor();
    while (true) {
      if (accept('*')) {
        t = SigmaTerm::product(std::move(t), factor());
      } else if (factor_ahead()) {
        t = SigmaTerm::product(std::move(t), factor());
      } else {
        return t;
      }
    }
  }

  SigmaTerm factor() {
    SigmaTerm t = atom();
    while (accept('^')) {
      expect('(');
      skip();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const std::size_t at = pos_;
        const std::uint64_t p = number();
        if (!is_prime(p)) throw ParseError("exponent base is not prime", at);
        expect('^');
        expect('(');
        omega_minus_one();
        expect(')');
        t = SigmaTerm::prime_power(std::move(t), p);
      } else {
        omega_minus_one();
        t = SigmaTerm::omega_inv(std::move(t));
      }
      expect(')');
    }
    return t;
  }

  void omega_minus_one() {
    skip();
    if (!accept('w')) throw ParseError("expected 'w-1'", pos_);
    expect('-');
    skip();
    if (!accept('1')) throw ParseError("expected 'w-1'", pos_);
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ - start > 18) throw ParseError("number too large", start);
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  SigmaTerm atom() {
    if (accept('(')) {
      SigmaTerm t = term();
      expect(')');
      return t;
    }
    skip();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !name_start(text_[pos_])) {
      throw ParseError("expected a variable or '('", pos_);
    }
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) throw ParseError("unknown variable '" + name + "'", start);
    return SigmaTerm::var(static_cast<std::size_t>(it - variables_.begin()));
  }

  std::string_view text_;
  std::span<const std::string> variables_;
  std::size_t pos_ = 0;
};

void print(const SigmaTerm& t, std::span<const std::string> variables, std::string& out) {
  switch (t.kind()) {
    case SigmaTerm::Kind::var:
      out += variables[t.index()];
      break;
    case SigmaTerm::Kind::product:
      print(t.left(), variables, out);
      out += "*";
      if (t.right().kind() == SigmaTerm::Kind::product) {
        out += "(";
        print(t.right(), variables, out);
        out += ")";
      } else {
        print(t.right(), variables, out);
      }
      break;
    case SigmaTerm::Kind::omega_inv:
    case SigmaTerm::Kind::prime_power:
      if (t.child().kind() == SigmaTerm::Kind::product) {
        out += "(";
        print(t.child(), variables, out);
        out += ")";
      } else {
        print(t.child(), variables, out);
      }
      if (t.kind() == SigmaTerm::Kind::omega_inv) {
        out += "^(w-1)";
      } else {
        out += "^(" + std::to_string(t.prime()) + "^(w-1))";
      }
      break;
  }
}

}  // namespace

SigmaTerm parse_term(std::string_view text, std::span<const std::string> variables) {
  return TermParser(text, variables).parse();
}

std::string to_string(const SigmaTerm& t, std::span<const std::string> variables) {
  std::string out;
  print(t, variables, out);
  return out;
}

std::vector<Pseudonumber> abelianize(const Supernatural& pi, const SigmaTerm& t,
                                     std::size_t variable_count) {
  switch (t.kind()) {
    case SigmaTerm::Kind::var: {
      if (t.index() >= variable_count) throw InputError("term variable out of range");
      std::vector<Pseudonumber> out(variable_count);
      out[t.index()] = Pseudonumber(1);
      return out;
    }
    case SigmaTerm::Kind::product: {
      std::vector<Pseudonumber> out = abelianize(pi, t.left(), variable_count);
      const std::vector<Pseudonumber> right = abelianize(pi, t.right(), variable_count);
      for (std::size_t i = 0; i < variable_count; ++i) out[i] += right[i];
      return out;
    }
    case SigmaTerm::Kind::omega_inv: {
      std::vector<Pseudonumber> out = abelianize(pi, t.child(), variable_count);
      for (Pseudonumber& c : out) c = -c;
      return out;
    }
    case SigmaTerm::Kind::prime_power: {
      if (!pi.in_P(t.prime())) {
        throw SignatureError("prime " + std::to_string(t.prime()) + " has infinite exponent in pi");
      }
      const Pseudonumber scale = Pseudonumber::omega_power(pi, Integer(static_cast<unsigned long>(t.prime())), 1);
      std::vector<Pseudonumber> out = abelianize(pi, t.child(), variable_count);
      for (Pseudonumber& c : out) c = scale * c;
      return out;
    }
  }
  throw std::logic_error("unreachable term kind");
}

}  // namespace profab
