#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "e3lab/poisson.hpp"

namespace e3lab {

/// Real polynomial in the six coordinates M1, M2, M3, G1, G2, G3.
///
/// Text form is a sum of monomials, e.g. "M2", "0.5*M1*G2 - M3^2 + 1".
/// Each factor is a number or a variable with an optional nonnegative
/// integer power. No parentheses.
class Polynomial {
 public:
  struct Term {
    double coefficient = 0.0;
    std::array<int, 6> powers{};
  };

  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms);

  /// Throws InvalidParameter with the offending column on malformed input.
  static Polynomial parse(std::string_view text);

  double operator()(const E3State& state) const;
  Vec6 gradient(const E3State& state) const;
  const std::vector<Term>& terms() const { return terms_; }
  std::string to_string() const;

  /// The polynomial as a ScalarField with its analytic gradient.
  ScalarField as_field() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace e3lab
