#include "subord/diffops.hpp"

#include <algorithm>
#include <cmath>

#include "subord/errors.hpp"

namespace subord {
namespace {

constexpr double kMatchTolerance = 1e-6;
constexpr double kDegenerateGap = 1e-8;
constexpr double kGrowthFactor = 1.5;

bool same_root(double a, double b) { return std::abs(a - b) <= kMatchTolerance * (1.0 + std::abs(a)); }

const RealRoot* find_root(const std::vector<RealRoot>& roots, double x) {
  for (const auto& r : roots) {
    if (same_root(r.location, x)) return &r;
  }
  return nullptr;
}

std::string num(double x) { return format_exponent(x); }

// sup |n/d| on nodes x0 + (i + 1/2) h inside (x0 - delta, x0 + delta); the
// nearest node sits h/2 from the center, so a pole there shows up as growth
double local_sup(const Polynomial& n, const Polynomial& d, double x0, double delta, double h) {
  const auto count = static_cast<long long>(std::floor(delta / h - 0.5));
  double s = 0.0;
  for (long long i = -count - 1; i <= count; ++i) {
    const double x = x0 + (static_cast<double>(i) + 0.5) * h;
    const cplx den = d(x);
    if (den == 0.0) return kInf;
    s = std::max(s, std::abs(n(x) / den));
  }
  return s;
}

}  // namespace

HypothesisCheck lemma2_hypotheses(const Polynomial& q, const Polynomial& p1, const Polynomial& p2,
                                  double cluster_tolerance) {
  HypothesisCheck check;
  auto fail = [&](std::string why) {
    check.admissible = false;
    check.violations.push_back(std::move(why));
  };
  if (p1.is_zero()) {
    fail("P1 is the zero polynomial");
    return check;
  }
  const int r = p1.degree();
  if (q.degree() > r) fail("deg Q = " + std::to_string(q.degree()) + " exceeds deg P1 = " + std::to_string(r));
  if (p2.degree() > r) fail("deg P2 = " + std::to_string(p2.degree()) + " exceeds deg P1 = " + std::to_string(r));

  const auto r1 = real_roots(p1, cluster_tolerance);
  const auto r2 = p2.is_zero() ? r1 : real_roots(p2, cluster_tolerance);
  for (const auto& a : r1) {
    if (!find_root(r2, a.location)) continue;
    const double qa = std::abs(q(a.location));
    if (qa > 1e-8 * std::max(1.0, q.scale(a.location))) {
      fail("common real zero x = " + num(a.location) + " of P1 and P2 with |Q(x)| = " + num(qa));
    }
  }
  return check;
}

Lemma2Decomposition lemma2_construct(const Polynomial& q, const Polynomial& p1,
                                     const Polynomial& p2, const GridSpec& grid,
                                     double cluster_tolerance) {
  const auto check = lemma2_hypotheses(q, p1, p2, cluster_tolerance);
  if (!check.admissible) {
    std::string msg = "decomposition hypotheses fail:";
    for (const auto& v : check.violations) msg += " " + v + ";";
    throw Error(ErrorCode::hypotheses_violated, msg);
  }
  if (p2.is_zero()) throw Error(ErrorCode::invalid_parameter, "P2 must be a nonzero polynomial");

  const auto r1 = real_roots(p1, cluster_tolerance);
  const auto r2 = real_roots(p2, cluster_tolerance);
  for (std::size_t i = 1; i < r1.size(); ++i) {
    if (r1[i].location - r1[i - 1].location < kDegenerateGap) {
      throw Error(ErrorCode::neighborhood_degenerate,
                  "roots of P1 at " + num(r1[i - 1].location) + " and " + num(r1[i].location));
    }
  }

  std::vector<Neighborhood> hoods;
  for (std::size_t i = 0; i < r1.size(); ++i) {
    const double x0 = r1[i].location;
    double delta = 1.0;
    for (const auto& b : r2) {
      if (!find_root(r1, b.location)) delta = std::min(delta, 0.5 * std::abs(b.location - x0));
    }
    for (std::size_t j = 0; j < r1.size(); ++j) {
      if (j != i) delta = std::min(delta, 0.5 * std::abs(r1[j].location - x0));
    }
    const RealRoot* shared = find_root(r2, x0);
    hoods.push_back({x0, delta, r1[i].multiplicity, shared ? shared->multiplicity : 0});
  }

  const double eta = grid.dual_spacing();
  std::vector<Multiplier::Piece> h1_pieces;
  std::vector<Multiplier::Piece> h2_pieces;
  for (const auto& nb : hoods) {
    const double a = nb.center - nb.delta;
    const double b = nb.center + nb.delta;
    const cplx ha = q(a) / p1(a);
    const cplx hb = q(b) / p1(b);
    const cplx slope = (hb - ha) / (b - a);
    const Polynomial lin({ha - slope * a, slope});
    const Polynomial n = q - lin * p1;

    const double s16 = local_sup(n, p2, nb.center, nb.delta, eta / 16.0);
    const double s32 = local_sup(n, p2, nb.center, nb.delta, eta / 32.0);
    const double s64 = local_sup(n, p2, nb.center, nb.delta, eta / 64.0);
    if (s32 >= kGrowthFactor * s16 && s64 >= kGrowthFactor * s32) {
      throw Error(ErrorCode::multiplicity_obstruction,
                  "(Q - h1 P1)/P2 is unbounded near x = " + num(nb.center) + " (P2 multiplicity " +
                      std::to_string(nb.p2_multiplicity) + ")");
    }

    // cancel the common factor (x - x0)^m so h2 is evaluated without 0/0
    Polynomial nr = n;
    Polynomial dr = p2;
    for (int k = 0; k < nb.p2_multiplicity; ++k) {
      cplx rem_d;
      cplx rem_n;
      const Polynomial dq = dr.deflate(nb.center, &rem_d);
      const Polynomial nq = nr.deflate(nb.center, &rem_n);
      if (std::abs(rem_n) > 1e-8 * std::max(1.0, nr.scale(nb.center))) {
        throw Error(ErrorCode::multiplicity_obstruction,
                    "Q - h1 P1 vanishes to lower order than P2 at x = " + num(nb.center));
      }
      (void)rem_d;
      dr = dq;
      nr = nq;
    }

    h1_pieces.push_back({a, b, [lin](double x) { return lin(x); }});
    h2_pieces.push_back({a, b, [nr, dr](double x) { return nr(x) / dr(x); }});
  }

  Lemma2Decomposition dec{
      q,
      p1,
      p2,
      Multiplier::piecewise("h1", std::move(h1_pieces), [q, p1](double x) { return q(x) / p1(x); }),
      Multiplier::piecewise("h2", std::move(h2_pieces), [](double) { return cplx(0.0); }),
      std::move(hoods),
      {}};
  dec.diagnostics = lemma2_diagnostics(dec, grid);
  return dec;
}

Lemma2Diagnostics lemma2_diagnostics(const Lemma2Decomposition& dec, const GridSpec& grid,
                                     std::size_t local_refinement) {
  Lemma2Diagnostics d;
  d.h1_infinity = dec.q.degree() == dec.p1.degree() ? dec.q.leading() / dec.p1.leading() : cplx(0.0);

  auto scan = [&](const std::vector<double>& ys) {
    cplx prev1;
    cplx prev2;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const double y = ys[i];
      const cplx h1 = dec.h1(y);
      const cplx h2 = dec.h2(y);
      const cplx qv = dec.q(y);
      d.identity_residual = std::max(d.identity_residual, std::abs(qv - h1 * dec.p1(y) - h2 * dec.p2(y)));
      d.q_sup = std::max(d.q_sup, std::abs(qv));
      d.h2_sup = std::max(d.h2_sup, std::abs(h2));
      if (i > 0) {
        const double dy = y - ys[i - 1];
        d.lip_h1 = std::max(d.lip_h1, std::abs(h1 - prev1) / dy);
        d.lip_h2 = std::max(d.lip_h2, std::abs(h2 - prev2) / dy);
      }
      prev1 = h1;
      prev2 = h2;
    }
  };

  std::vector<double> ys(grid.size());
  for (std::size_t k = 0; k < ys.size(); ++k) ys[k] = grid.dual_node(k);
  scan(ys);
  const double h = grid.dual_spacing() / static_cast<double>(local_refinement);
  for (const auto& nb : dec.neighborhoods) {
    std::vector<double> local;
    const auto count = static_cast<std::size_t>(std::ceil(2.0 * nb.delta / h));
    for (std::size_t i = 0; i <= count; ++i) {
      local.push_back(std::min(nb.center - nb.delta + static_cast<double>(i) * h, nb.center + nb.delta));
    }
    scan(local);
  }
  return d;
}

SampledFunction apply_diffop(const Polynomial& p, const SampledFunction& f) {
  if (f.side() != Side::space) {
    throw Error(ErrorCode::invalid_parameter, "apply_diffop expects a space-side function");
  }
  const auto& grid = f.grid();
  auto spectrum = forward_ft(f);
  std::vector<cplx> v(spectrum.values().begin(), spectrum.values().end());
  double peak = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] *= p(grid.dual_node(k));
    peak = std::max(peak, std::abs(v[k]));
  }
  const double edge = std::max(std::abs(v.front()), std::abs(v.back()));
  if (edge > 1e-8 * peak) {
    throw Error(ErrorCode::bandwidth_exceeded,
                "P(y) f^(y) at the band edge is " + num(edge / peak) + " of its peak");
  }
  return inverse_ft(SampledFunction(grid, std::move(v), Side::frequency));
}

YoungExponents young_exponents(double q, int deg_q, int deg_p1, int /*deg_p2*/) {
  if (!(q >= 1.0)) throw Error(ErrorCode::invalid_parameter, "q must be >= 1");
  if (deg_q > deg_p1) throw Error(ErrorCode::invalid_parameter, "deg Q exceeds deg P1");
  const ExponentRange all{1.0, q};
  return {deg_q == deg_p1 ? ExponentRange{q, q} : all, all};
}

double young_partner(double q, double p) {
  const double inv = 1.0 + 1.0 / q - 1.0 / p;
  if (inv < 0.0 || inv > 1.0) {
    throw Error(ErrorCode::inadmissible_exponents, "no Young partner for q=" + num(q) + ", p=" + num(p));
  }
  return inv == 0.0 ? kInf : 1.0 / inv;
}

IdentityResidual verify_identity(const Lemma2Decomposition& dec, const SampledFunction& f) {
  const auto& grid = f.grid();
  const auto lhs = apply_diffop(dec.q, f);
  const auto h1 = dec.h1.sample(grid);
  const auto h2 = dec.h2.sample(grid);
  const auto rhs = apply_multiplier(apply_diffop(dec.p1, f), h1) +
                   apply_multiplier(apply_diffop(dec.p2, f), h2);
  const double lsup = lp_norm(lhs, kInf);
  return {lp_norm(lhs - rhs, kInf) / (1.0 + lsup), lsup};
}

DiffopConstant diffop_constant(const Lemma2Decomposition& dec, double q, double p1, double p2,
                               const GridSpec& grid) {
  const auto ye = young_exponents(q, dec.q.degree(), dec.p1.degree(), dec.p2.degree());
  if (!ye.p1.contains(p1) || !ye.p2.contains(p2)) {
    throw Error(ErrorCode::inadmissible_exponents,
                "(p1, p2) = (" + num(p1) + ", " + num(p2) + ") not admissible for q = " + num(q));
  }
  auto factor = [&](const Multiplier& h, cplx limit, double p, const char* what) {
    WienerOptions opt;
    opt.known_limit = limit;
    if (p == q) return require_converged(wiener_norm_estimate(h, grid, opt), what).total;
    if (limit != 0.0) {
      throw Error(ErrorCode::inadmissible_exponents, std::string(what) + " has an atom; need p = q");
    }
    return density_lp_norm(h, grid, young_partner(q, p), opt);
  };
  DiffopConstant c;
  c.k1 = factor(dec.h1, dec.diagnostics.h1_infinity, p1, "h1");
  c.k2 = factor(dec.h2, cplx(0.0), p2, "h2");
  c.constant = std::max(c.k1, c.k2);
  return c;
}

SubordinationReport diffop_subordination(const Lemma2Decomposition& dec, double q, double p1,
                                         double p2, const std::vector<TestInput>& tests,
                                         const GridSpec& grid, double tolerance) {
  SubordinationReport report;
  report.tolerance = tolerance;
  report.constant = diffop_constant(dec, q, p1, p2, grid).constant;
  const std::string exps = "q=" + num(q) + ";p1=" + num(p1) + ";p2=" + num(p2);
  for (const auto& t : tests) {
    if (!(t.f.grid() == grid)) throw Error(ErrorCode::grid_mismatch, "test '" + t.id + "'");
    const std::string id = t.id + "/" + exps;
    try {
      const double lhs = lp_norm(apply_diffop(dec.q, t.f), q);
      const double rhs = lp_norm(apply_diffop(dec.p1, t.f), p1) + lp_norm(apply_diffop(dec.p2, t.f), p2);
      report.cases.push_back(make_case(id, t.id, exps, std::nullopt, lhs, rhs));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::bandwidth_exceeded) throw;
      CaseResult c;
      c.case_id = id;
      c.test_function = t.id;
      c.exponents = exps;
      c.skipped = true;
      c.note = e.what();
      report.cases.push_back(std::move(c));
    }
  }
  report.finalize();
  return report;
}

}  // namespace subord
