#include "subord/power_series.hpp"

#include <algorithm>
#include <cmath>

#include "subord/errors.hpp"

namespace subord {
namespace {
constexpr double kExponentTol = 1e-12;
}

PowerSeries::PowerSeries(std::vector<PowerTerm> terms, double order)
    : terms_(std::move(terms)), order_(order) {
  for (const auto& t : terms_) {
    if (!(t.exponent >= 0.0)) {
      throw Error(ErrorCode::invalid_parameter, "power series exponents must be non-negative");
    }
  }
  normalize();
}

PowerSeries PowerSeries::exp_abs(double rate, double order) {
  std::vector<PowerTerm> terms;
  double c = 1.0;
  for (int m = 0; m <= static_cast<int>(std::floor(order + kExponentTol)); ++m) {
    terms.push_back({static_cast<double>(m), c});
    c *= rate / static_cast<double>(m + 1);
  }
  return PowerSeries(std::move(terms), order);
}

PowerSeries PowerSeries::constant(std::complex<double> c, double order) {
  return PowerSeries({{0.0, c}}, order);
}

std::complex<double> PowerSeries::constant_term() const noexcept {
  if (!terms_.empty() && terms_.front().exponent < kExponentTol) return terms_.front().coefficient;
  return {};
}

void PowerSeries::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const PowerTerm& a, const PowerTerm& b) { return a.exponent < b.exponent; });
  std::vector<PowerTerm> merged;
  for (const auto& t : terms_) {
    if (t.exponent > order_ + kExponentTol) continue;
    if (!merged.empty() && std::abs(merged.back().exponent - t.exponent) < kExponentTol) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const PowerTerm& t) { return t.coefficient == 0.0; });
  terms_ = std::move(merged);
}

PowerSeries PowerSeries::operator+(const PowerSeries& other) const {
  auto terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return PowerSeries(std::move(terms), std::min(order_, other.order_));
}

PowerSeries PowerSeries::operator-(const PowerSeries& other) const {
  return *this + other * std::complex<double>(-1.0);
}

PowerSeries PowerSeries::operator*(const PowerSeries& other) const {
  std::vector<PowerTerm> terms;
  const double order = std::min(order_, other.order_);
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      const double e = a.exponent + b.exponent;
      if (e <= order + kExponentTol) terms.push_back({e, a.coefficient * b.coefficient});
    }
  }
  return PowerSeries(std::move(terms), order);
}

PowerSeries PowerSeries::operator*(std::complex<double> scale) const {
  auto terms = terms_;
  for (auto& t : terms) t.coefficient *= scale;
  return PowerSeries(std::move(terms), order_);
}

PowerSeries PowerSeries::shifted(double by) const {
  auto terms = terms_;
  for (auto& t : terms) t.exponent += by;
  return PowerSeries(std::move(terms), order_);
}

PowerSeries PowerSeries::reciprocal() const {
  const auto c0 = constant_term();
  if (c0 == 0.0) throw Error(ErrorCode::invalid_parameter, "reciprocal needs a constant term");
  // 1/(c0 (1 - u)) = c0^{-1} sum_n u^n with u = 1 - S/c0; u has only positive exponents.
  const PowerSeries u = PowerSeries::constant(1.0, order_) - (*this) * (1.0 / c0);
  PowerSeries sum = PowerSeries::constant(1.0, order_);
  PowerSeries power = PowerSeries::constant(1.0, order_);
  for (int n = 0; n < 256; ++n) {
    power = power * u;
    if (power.empty()) break;
    sum = sum + power;
  }
  return sum * (1.0 / c0);
}

PowerSeries PowerSeries::quotient(const PowerSeries& den) const {
  if (den.empty()) throw Error(ErrorCode::invalid_parameter, "division by an empty series");
  const double p = den.terms_.front().exponent;
  if (!terms_.empty() && terms_.front().exponent < p - kExponentTol) {
    throw Error(ErrorCode::invalid_parameter, "quotient is unbounded at the origin");
  }
  const double order = std::min(order_, den.order_) - p;
  auto lower = [p, order](const std::vector<PowerTerm>& src) {
    std::vector<PowerTerm> out;
    for (const auto& t : src) out.push_back({std::max(0.0, t.exponent - p), t.coefficient});
    return PowerSeries(std::move(out), order);
  };
  return lower(terms_) * lower(den.terms_).reciprocal();
}

PowerSeries PowerSeries::truncated(double order) const {
  return PowerSeries(terms_, std::min(order, order_));
}

std::complex<double> PowerSeries::evaluate(double abs_y) const {
  std::complex<double> s = 0.0;
  for (const auto& t : terms_) {
    s += t.coefficient * (t.exponent == 0.0 ? 1.0 : std::pow(abs_y, t.exponent));
  }
  return s;
}

}  // namespace subord
