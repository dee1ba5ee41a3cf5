#include "e3lab/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>

#include "e3lab/errors.hpp"

namespace e3lab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Polynomial::Term> parse() {
    std::vector<Polynomial::Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    terms.push_back(term(sign));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-' ? -1.0 : 1.0));
    }
    return terms;
  }

 private:
  Polynomial::Term term(double sign) {
    Polynomial::Term t;
    t.coefficient = sign;
    factor(t);
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Polynomial::Term& t) {
    skip_space();
    if (at_end()) fail("expected a factor");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      t.coefficient *= number();
      return;
    }
    const int var = variable();
    int power = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      const auto* first = text_.data() + pos_;
      const auto* last = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(first, last, power);
      if (ec != std::errc() || power < 0) fail("expected a nonnegative integer power");
      pos_ += static_cast<std::size_t>(ptr - first);
    }
    t.powers[static_cast<std::size_t>(var)] += power;
  }

  double number() {
    // std::from_chars for double is unavailable in older libstdc++; strtod
    // on a bounded copy is enough here.
    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.' ||
            text_[end] == 'e' || text_[end] == 'E' ||
            ((text_[end] == '+' || text_[end] == '-') && end > pos_ &&
             (text_[end - 1] == 'e' || text_[end - 1] == 'E')))) {
      ++end;
    }
    const std::string token(text_.substr(pos_, end - pos_));
    char* stop = nullptr;
    const double v = std::strtod(token.c_str(), &stop);
    if (stop != token.c_str() + token.size() || !std::isfinite(v)) fail("malformed number");
    pos_ = end;
    return v;
  }

  int variable() {
    static const std::map<std::string, int> names = {
        {"M1", 0}, {"M2", 1}, {"M3", 2}, {"G1", 3}, {"G2", 4}, {"G3", 5},
        {"Gamma1", 3}, {"Gamma2", 4}, {"Gamma3", 5}};
    std::size_t end = pos_;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    const auto it = names.find(std::string(text_.substr(pos_, end - pos_)));
    if (it == names.end()) fail("unknown variable");
    pos_ = end;
    return it->second;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const char* what) const {
    throw InvalidParameter("polynomial: " + std::string(what) + " at column " +
                           std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double monomial(const std::array<int, 6>& powers, const Vec6& x) {
  double v = 1.0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (int k = 0; k < powers[i]; ++k) v *= x(static_cast<int>(i));
  }
  return v;
}

}  // namespace

Polynomial::Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

Polynomial Polynomial::parse(std::string_view text) { return Polynomial(Parser(text).parse()); }

double Polynomial::operator()(const E3State& state) const {
  const Vec6 x = state.to_vector();
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.coefficient * monomial(t.powers, x);
  return sum;
}

Vec6 Polynomial::gradient(const E3State& state) const {
  const Vec6 x = state.to_vector();
  Vec6 g = Vec6::Zero();
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < 6; ++i) {
      if (t.powers[i] == 0) continue;
      auto reduced = t.powers;
      --reduced[i];
      g(static_cast<int>(i)) += t.coefficient * t.powers[i] * monomial(reduced, x);
    }
  }
  return g;
}

std::string Polynomial::to_string() const {
  static const char* const names[] = {"M1", "M2", "M3", "G1", "G2", "G3"};
  std::string out;
  for (const auto& t : terms_) {
    char buf[32];
    const bool minus = !out.empty() && t.coefficient < 0.0;
    std::snprintf(buf, sizeof buf, "%.17g", minus ? -t.coefficient : t.coefficient);
    if (!out.empty()) out += minus ? " - " : " + ";
    out += buf;
    for (std::size_t i = 0; i < 6; ++i) {
      if (t.powers[i] == 0) continue;
      out += '*';
      out += names[i];
      if (t.powers[i] > 1) out += '^' + std::to_string(t.powers[i]);
    }
  }
  return out.empty() ? "0" : out;
}

ScalarField Polynomial::as_field() const {
  const Polynomial self = *this;
  return {to_string(), [self](const E3State& s) { return self(s); },
          [self](const E3State& s) { return self.gradient(s); }};
}

}  // namespace e3lab
