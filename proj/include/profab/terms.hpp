#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "profab/pseudonumber.hpp"

namespace profab {

/// σ-term over a finite variable set: variables, products, x^(ω-1) and x^(p^(ω-1)).
class SigmaTerm {
 public:
  enum class Kind { var, product, omega_inv, prime_power };

  static SigmaTerm var(std::size_t index);
  static SigmaTerm product(SigmaTerm left, SigmaTerm right);
  static SigmaTerm omega_inv(SigmaTerm child);
  static SigmaTerm prime_power(SigmaTerm child, Prime p);

  Kind kind() const { return node_->kind; }
  /// Variable index (Kind::var only).
  std::size_t index() const { return node_->index; }
  /// The prime of a prime_power node.
  Prime prime() const { return node_->prime; }
  const SigmaTerm& left() const { return node_->children.at(0); }
  const SigmaTerm& right() const { return node_->children.at(1); }
  const SigmaTerm& child() const { return node_->children.at(0); }

  bool operator==(const SigmaTerm& other) const;

 private:
  struct Node {
    Kind kind;
    std::size_t index = 0;
    Prime prime = 0;
    std::vector<SigmaTerm> children;
  };
  explicit SigmaTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// term := factor {('*'|' ') factor}; factor := atom ['^' '(' power ')'];
/// atom := name | '(' term ')'; power := 'w-1' | prime '^' '(' 'w-1' ')'.
/// Powers may be chained (`x^(w-1)^(w-1)`).
SigmaTerm parse_term(std::string_view text, std::span<const std::string> variables);

std::string to_string(const SigmaTerm& t, std::span<const std::string> variables);

/// Coefficients of the image of t in the free Ab_π-object on the variables.
std::vector<Pseudonumber> abelianize(const Supernatural& pi, const SigmaTerm& t,
                                     std::size_t variable_count);

}  // namespace profab
