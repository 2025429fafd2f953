#pragma once

#include <complex>
#include <vector>

namespace subord {

struct PowerTerm {
  double exponent;
  std::complex<double> coefficient;
};

/// Truncated series  sum_r c_r |y|^r  with real exponents r >= 0, kept sorted
/// by exponent. Terms beyond `order` are discarded by every operation.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(std::vector<PowerTerm> terms, double order);

  /// e^{rate |y|} through `order`.
  static PowerSeries exp_abs(double rate, double order);
  static PowerSeries constant(std::complex<double> c, double order);

  const std::vector<PowerTerm>& terms() const noexcept { return terms_; }
  double order() const noexcept { return order_; }
  bool empty() const noexcept { return terms_.empty(); }
  /// Coefficient of |y|^0 (zero when absent).
  std::complex<double> constant_term() const noexcept;

  PowerSeries operator+(const PowerSeries& other) const;
  PowerSeries operator-(const PowerSeries& other) const;
  PowerSeries operator*(const PowerSeries& other) const;
  PowerSeries operator*(std::complex<double> scale) const;
  /// Multiply by |y|^by (by >= 0).
  PowerSeries shifted(double by) const;
  /// Reciprocal; requires a nonzero constant term.
  PowerSeries reciprocal() const;
  /// this / den when the lowest exponent of den does not exceed ours; the
  /// order drops by that exponent. Throws invalid-parameter otherwise.
  PowerSeries quotient(const PowerSeries& den) const;
  PowerSeries truncated(double order) const;

  std::complex<double> evaluate(double abs_y) const;

 private:
  void normalize();

  std::vector<PowerTerm> terms_;
  double order_ = 0.0;
};

}  // namespace subord
