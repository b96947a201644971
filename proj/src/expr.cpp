#include "gralg/expr.hpp"

#include <cctype>

namespace gralg {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Bindings& vars) : s_(s), vars_(vars) {}

  Count parse() {
    Count v = comparison();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("expression '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  Count comparison() {
    Count l = sum();
    if (eat("==")) return l == sum() ? 1 : 0;
    if (eat("!=")) return l != sum() ? 1 : 0;
    if (eat("<=")) return l <= sum() ? 1 : 0;
    if (eat(">=")) return l >= sum() ? 1 : 0;
    if (eat("<")) return l < sum() ? 1 : 0;
    if (eat(">")) return l > sum() ? 1 : 0;
    return l;
  }
  Count sum() {
    Count v = product();
    for (;;) {
      if (eat("+")) v += product();
      else if (eat("-")) v -= product();
      else return v;
    }
  }
  Count product() {
    Count v = unary();
    while (eat("*")) v *= unary();
    return v;
  }
  Count unary() {
    if (eat("-")) return -unary();
    return power();
  }
  Count power() {
    Count base = atom();
    if (!eat("^")) return base;
    const Count e = unary();  // right associative
    if (e < 0 || e > 4096) fail("exponent out of range");
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
  }
  Count atom() {
    skip();
    if (eat("(")) {
      Count v = comparison();
      if (!eat(")")) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Count v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const auto name = s_.substr(start, pos_ - start);
      const auto it = vars_.find(name);
      if (it == vars_.end()) fail("unbound variable '" + std::string(name) + "'");
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const Bindings& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Count eval_expr(std::string_view text, const Bindings& vars) { return Parser(text, vars).parse(); }

}  // namespace gralg
