#pragma once

#include <vector>

#include "subord/fourier.hpp"

namespace subord {

/// Complex coefficients in ascending order; trailing zeros are trimmed, so
/// the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coeffs);
  Polynomial(std::initializer_list<cplx> coeffs) : Polynomial(std::vector<cplx>(coeffs)) {}

  static Polynomial monomial(int degree, cplx c = 1.0);

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  cplx leading() const noexcept { return coeffs_.empty() ? cplx(0.0) : coeffs_.back(); }

  cplx operator()(double x) const noexcept;
  cplx operator()(cplx x) const noexcept;
  /// sum |c_k| (1 + |x|)^k, the size against which residuals at x are judged.
  double scale(double x) const noexcept;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx c) const;

  /// Quotient by (x - root); `remainder` receives P(root).
  Polynomial deflate(cplx root, cplx* remainder = nullptr) const;

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

struct RealRoot {
  double location;
  int multiplicity;
};

/// Real roots through companion-matrix eigenvalues, clustered within
/// `cluster_tolerance`. Throws verification-failure when a reported root
/// leaves a residual above 1e-8 of the local scale.
std::vector<RealRoot> real_roots(const Polynomial& p, double cluster_tolerance = 1e-7);

}  // namespace subord
