#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "treegroups/word.hpp"

namespace tg {

/// Word expressions:
///
///   word   := factor+
///   factor := atom ('^' expo)?
///   expo   := (integer | atom) ('^' expo)?      right associative
///   atom   := 'a' | 'b' | 'c' | 'd' | 'e' | '(' word ')'
///
/// Whitespace and '*' are ignored separators. An atom exponent means
/// conjugation, g^h = h⁻¹ g h; integers may be negative. So `a^b^2` is
/// a^(b^2) and `d^(ab)` is (ab)⁻¹ d (ab).
struct Expr {
  struct Letter {
    char letter;
  };
  struct Product {
    std::vector<Expr> factors;
  };
  struct Power {
    std::unique_ptr<Expr> base;
    long long exponent;
  };
  struct Conj {
    std::unique_ptr<Expr> base;
    std::unique_ptr<Expr> by;
  };

  std::variant<Letter, Product, Power, Conj> node;

  Expr clone() const;
  /// Fully parenthesized form, for diagnostics and tests.
  std::string to_string() const;
};

/// Throws ParseError (with the 0-based offset) on syntax errors and on empty
/// input.
Expr parse_word(std::string_view text);

/// Evaluates the expression as a reduced word over σ^phase ω.
Word lower(const Expr& e, const OmegaSeq& omega, std::size_t phase = 0);

/// parse_word followed by lower.
Word parse_expression(std::string_view text, const OmegaSeq& omega, std::size_t phase = 0);

}  // namespace tg
