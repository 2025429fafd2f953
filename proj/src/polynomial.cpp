#include "subord/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "subord/errors.hpp"

namespace subord {

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::invalid_parameter, "polynomial coefficients must be finite");
    }
  }
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int degree, cplx c) {
  std::vector<cplx> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

cplx Polynomial::operator()(double x) const noexcept { return (*this)(cplx(x)); }

cplx Polynomial::operator()(cplx x) const noexcept {
  cplx s = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * x + *it;
  return s;
}

double Polynomial::scale(double x) const noexcept {
  double s = 0.0;
  double w = 1.0;
  for (const auto& c : coeffs_) {
    s += std::abs(c) * w;
    w *= 1.0 + std::abs(x);
  }
  return s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<cplx> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * cplx(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<cplx> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(cplx c) const {
  auto v = coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::deflate(cplx root, cplx* remainder) const {
  if (coeffs_.size() < 2) {
    if (remainder) *remainder = leading();
    return {};
  }
  // synthetic division from the top
  std::vector<cplx> q(coeffs_.size() - 1);
  cplx carry = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = carry * root + coeffs_[i];
    q[i - 1] = carry;
  }
  if (remainder) *remainder = carry * root + coeffs_[0];
  return Polynomial(std::move(q));
}

std::vector<RealRoot> real_roots(const Polynomial& p, double cluster_tolerance) {
  if (!(cluster_tolerance > 0.0)) {
    throw Error(ErrorCode::invalid_parameter, "cluster tolerance must be positive");
  }
  if (p.degree() < 1) return {};
  const auto& c = p.coeffs();
  const int n = p.degree();

  std::vector<cplx> eig;
  // exact zeros at the origin are split off so the companion matrix stays small
  int zeros = 0;
  while (c[static_cast<std::size_t>(zeros)] == 0.0) ++zeros;
  eig.assign(static_cast<std::size_t>(zeros), cplx(0.0));
  const int m = n - zeros;
  if (m > 0) {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) comp(i, m - 1) = -c[static_cast<std::size_t>(zeros + i)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    for (int i = 0; i < m; ++i) eig.push_back(solver.eigenvalues()[i]);
  }

  std::vector<double> reals;
  for (const auto& z : eig) {
    if (std::abs(z.imag()) <= cluster_tolerance * (1.0 + std::abs(z.real()))) reals.push_back(z.real());
  }
  std::sort(reals.begin(), reals.end());

  std::vector<RealRoot> out;
  std::vector<double> sums;
  for (double r : reals) {
    if (!out.empty() && r - out.back().location <= cluster_tolerance * (1.0 + std::abs(r))) {
      sums.back() += r;
      ++out.back().multiplicity;
      out.back().location = sums.back() / out.back().multiplicity;
    } else {
      out.push_back({r, 1});
      sums.push_back(r);
    }
  }
  for (const auto& r : out) {
    if (std::abs(p(r.location)) > 1e-8 * p.scale(r.location)) {
      throw Error(ErrorCode::verification_failure,
                  "root " + std::to_string(r.location) + " fails the residual check");
    }
  }
  return out;
}

}  // namespace subord
