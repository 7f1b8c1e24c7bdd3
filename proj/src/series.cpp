#include "wzw/series.hpp"

#include <stdexcept>

namespace wzw {

TruncatedSeries TruncatedSeries::monomial(const std::string& var, int order, int degree,
                                          const Rational& coeff) {
  TruncatedSeries s(var, order);
  if (degree < 0) throw std::invalid_argument("TruncatedSeries: negative degree");
  if (degree <= order) s.set_coeff(degree, coeff);
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  if (var_ != o.var_ || c_.size() != o.c_.size())
    throw std::invalid_argument("TruncatedSeries: mismatched series");
  TruncatedSeries r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  if (var_ != o.var_ || c_.size() != o.c_.size())
    throw std::invalid_argument("TruncatedSeries: mismatched series");
  TruncatedSeries r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (var_ != o.var_ || c_.size() != o.c_.size())
    throw std::invalid_argument("TruncatedSeries: mismatched series");
  TruncatedSeries r(var_, order());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries r(*this);
  for (auto& x : r.c_) x *= c;
  return r;
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (std::size_t d = 0; d < c_.size(); ++d) {
    if (c_[d].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[d].str();
    if (d == 1)
      out += "*" + var_;
    else if (d > 1)
      out += "*" + var_ + "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace wzw
