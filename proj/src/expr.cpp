#include "treegroups/expr.hpp"

#include <charconv>

#include "treegroups/errors.hpp"

namespace tg {

Expr Expr::clone() const {
  return std::visit(
      [](const auto& n) -> Expr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Letter>) {
          return Expr{n};
        } else if constexpr (std::is_same_v<T, Product>) {
          Product p;
          for (const auto& f : n.factors) p.factors.push_back(f.clone());
          return Expr{std::move(p)};
        } else if constexpr (std::is_same_v<T, Power>) {
          return Expr{Power{std::make_unique<Expr>(n.base->clone()), n.exponent}};
        } else {
          return Expr{Conj{std::make_unique<Expr>(n.base->clone()), std::make_unique<Expr>(n.by->clone())}};
        }
      },
      node);
}

std::string Expr::to_string() const {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Letter>) {
          return std::string(1, n.letter);
        } else if constexpr (std::is_same_v<T, Product>) {
          std::string s = "(";
          for (const auto& f : n.factors) s += f.to_string();
          return s + ")";
        } else if constexpr (std::is_same_v<T, Power>) {
          return "[" + n.base->to_string() + "^" + std::to_string(n.exponent) + "]";
        } else {
          return "[" + n.base->to_string() + "^" + n.by->to_string() + "]";
        }
      },
      node);
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("expression: empty input", pos_);
    Expr e = word();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg + " at position " + std::to_string(pos_), pos_);
  }

  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '*')) ++pos_;
  }

  bool at_atom_start() const {
    if (pos_ >= text_.size()) return false;
    const char ch = text_[pos_];
    return ch == '(' || (ch >= 'a' && ch <= 'e');
  }

  Expr word() {
    Expr::Product p;
    while (true) {
      skip();
      if (!at_atom_start()) break;
      p.factors.push_back(factor());
    }
    if (p.factors.empty()) {
      if (pos_ == text_.size()) fail("unexpected end of input");
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    if (p.factors.size() == 1) return std::move(p.factors.front());
    return Expr{std::move(p)};
  }

  Expr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch >= 'a' && ch <= 'e') {
      ++pos_;
      return Expr{Expr::Letter{ch}};
    }
    if (ch == '(') {
      ++pos_;
      skip();
      if (pos_ < text_.size() && text_[pos_] == ')') fail("empty parentheses");
      Expr inner = word();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  // The exponent chain after a '^', applied right to left.
  Expr apply_exponent(Expr base) {
    skip();
    if (pos_ < text_.size() && (text_[pos_] == '-' || (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
      const std::size_t start = pos_;
      if (text_[pos_] == '-') ++pos_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
      long long n = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, n);
      if (ec != std::errc() || ptr != text_.data() + pos_) {
        pos_ = start;
        fail("malformed integer exponent");
      }
      skip();
      if (pos_ < text_.size() && text_[pos_] == '^') fail("an integer exponent cannot itself be raised");
      return Expr{Expr::Power{std::make_unique<Expr>(std::move(base)), n}};
    }
    Expr by = atom();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      by = apply_exponent(std::move(by));
    }
    return Expr{Expr::Conj{std::make_unique<Expr>(std::move(base)), std::make_unique<Expr>(std::move(by))}};
  }

  Expr factor() {
    Expr base = atom();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return apply_exponent(std::move(base));
    }
    return base;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_word(std::string_view text) { return Parser(text).parse(); }

Word lower(const Expr& e, const OmegaSeq& omega, std::size_t phase) {
  return std::visit(
      [&](const auto& n) -> Word {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Letter>) {
          if (n.letter == 'e') return Word::identity(omega, phase);
          return Word(std::string_view(&n.letter, 1), omega, phase);
        } else if constexpr (std::is_same_v<T, Expr::Product>) {
          Word out = Word::identity(omega, phase);
          for (const auto& f : n.factors) out = out * lower(f, omega, phase);
          return out;
        } else if constexpr (std::is_same_v<T, Expr::Power>) {
          return lower(*n.base, omega, phase).pow(n.exponent);
        } else {
          return lower(*n.base, omega, phase).conj(lower(*n.by, omega, phase));
        }
      },
      e.node);
}

Word parse_expression(std::string_view text, const OmegaSeq& omega, std::size_t phase) {
  return lower(parse_word(text), omega, phase);
}

}  // namespace tg
