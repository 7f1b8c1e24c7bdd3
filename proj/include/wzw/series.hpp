#pragma once

#include <string>
#include <vector>

#include "wzw/rational.hpp"

namespace wzw {

/// Truncation of a formal power series in one named parameter: rational
/// coefficients for degrees 0..order, everything above dropped.
class TruncatedSeries {
public:
  TruncatedSeries(std::string var, int order)
      : var_(std::move(var)), c_(static_cast<std::size_t>(order) + 1) {}

  static TruncatedSeries monomial(const std::string& var, int order, int degree,
                                  const Rational& coeff);

  const std::string& var() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int d) const { return c_.at(static_cast<std::size_t>(d)); }
  void set_coeff(int d, const Rational& v) { c_.at(static_cast<std::size_t>(d)) = v; }
  void add_coeff(int d, const Rational& v) { c_.at(static_cast<std::size_t>(d)) += v; }

  bool is_zero() const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;  // truncated convolution
  TruncatedSeries scaled(const Rational& c) const;
  bool operator==(const TruncatedSeries& o) const { return var_ == o.var_ && c_ == o.c_; }

  std::string str() const;  // e.g. "1 + 2*tau - 1/3*tau^2"

private:
  std::string var_;
  std::vector<Rational> c_;
};

}  // namespace wzw
