#include "curvatura/hypergeom.hpp"

#include <cmath>
#include <limits>

#include "curvatura/parallel.hpp"

namespace curvatura {

namespace {

void require_positive_radius(double z) {
  if (!(z > 0.0)) {
    throw DomainError("radial coordinate must be positive, got " +
                      std::to_string(z));
  }
}

}  // namespace

MetricPair metric_at(double z, const GradVals& grad, double e_pp) {
  require_positive_radius(z);
  const double sh = std::sinh(z);
  const double warp = sh * sh;  // phi(rho) = sinh^2 rho
  MetricPair out;
  out.g.tt = warp + grad.dt * grad.dt;
  out.g.tp = grad.dt * grad.dp;
  out.g.pp = warp * e_pp + grad.dp * grad.dp;

  // g^{ij} = (e^{ij} - z^i z^j / (phi + |grad' z|^2)) / phi
  const double zt_up = grad.dt;            // e^{tt} z_t
  const double zp_up = grad.dp / e_pp;     // e^{pp} z_p
  const double denom = warp + grad.norm2;
  out.g_inv.tt = (1.0 - zt_up * zt_up / denom) / warp;
  out.g_inv.tp = (-zt_up * zp_up / denom) / warp;
  out.g_inv.pp = (1.0 / e_pp - zp_up * zp_up / denom) / warp;
  return out;
}

Sym2 second_fundamental_at(double z, const GradVals& grad,
                           const Sym2& hess_prime, double e_pp) {
  require_positive_radius(z);
  const double sh = std::sinh(z);
  const double ch = std::cosh(z);
  const double coth2 = 2.0 * ch / sh;  // d(log phi)/d rho
  const double shch = sh * ch;         // (1/2) d phi / d rho
  const double pref = sh / std::sqrt(sh * sh + grad.norm2);
  Sym2 b;
  b.tt = pref * (-hess_prime.tt + coth2 * grad.dt * grad.dt + shch);
  b.tp = pref * (-hess_prime.tp + coth2 * grad.dt * grad.dp);
  b.pp = pref * (-hess_prime.pp + coth2 * grad.dp * grad.dp + shch * e_pp);
  return b;
}

LambdaVec principal_curvatures(const Sym2& g, const Sym2& b, int k,
                               long node_for_error) {
  // Cholesky g = L L^T
  if (!(g.tt > 0.0)) throw DegenerateMetricError(node_for_error);
  const double l11 = std::sqrt(g.tt);
  const double l21 = g.tp / l11;
  const double d22 = g.pp - l21 * l21;
  if (!(d22 > 0.0)) throw DegenerateMetricError(node_for_error);
  const double l22 = std::sqrt(d22);

  // A = L^-1 b L^-T, symmetric 2x2, with q = l21/l11
  const double q = l21 / l11;
  const double a11 = b.tt / (l11 * l11);
  const double off = (b.tp - q * b.tt) / (l11 * l22);
  const double a22 = (b.pp - 2.0 * q * b.tp + q * q * b.tt) / (l22 * l22);

  const double mean = 0.5 * (a11 + a22);
  const double gap = 0.5 * (a11 - a22);
  const double r = std::hypot(gap, off);
  Eigen::VectorXd lam(2);
  lam(0) = mean + r;
  lam(1) = mean - r;
  return LambdaVec(lam, k);
}

std::pair<double, double> tau_eta(double z, const GradVals& grad) {
  require_positive_radius(z);
  const double sh = std::sinh(z);
  const double warp = sh * sh;
  const double tau = warp / std::sqrt(warp + grad.norm2);
  return {tau, -std::cosh(z)};
}

Sym2 covariant_hessian_z(double z, const GradVals& grad,
                         const Sym2& hess_prime, double e_pp) {
  require_positive_radius(z);
  const double sh = std::sinh(z);
  const double ch = std::cosh(z);
  const double warp = sh * sh;
  const double sc = sh * ch;
  const double denom = warp + grad.norm2;
  Sym2 out;
  out.tt = (warp * hess_prime.tt - 2.0 * sc * grad.dt * grad.dt +
            sc * grad.norm2) /
           denom;
  out.tp = (warp * hess_prime.tp - 2.0 * sc * grad.dt * grad.dp) / denom;
  out.pp = (warp * hess_prime.pp - 2.0 * sc * grad.dp * grad.dp +
            sc * grad.norm2 * e_pp) /
           denom;
  return out;
}

CurvatureData curvature_field(const RadialGraph& graph,
                              const SphericalGrid& grid, int k) {
  CurvatureData out;
  out.g = Sym2Field(grid);
  out.g_inv = Sym2Field(grid);
  out.b = Sym2Field(grid);
  out.lambda1 = ScalarField(grid);
  out.lambda2 = ScalarField(grid);
  out.tau = ScalarField(grid);
  out.eta = ScalarField(grid);
  out.f = ScalarField(grid);
  out.admissible.assign(grid.num_nodes(), 0);

  const ScalarField& z = graph.z;
  parallel_for(grid.num_nodes(), [&](long i) {
    int j = static_cast<int>(i / grid.n_phi());
    int m = static_cast<int>(i % grid.n_phi());
    const double e_pp = grid.e_pp(j);
    const double zv = z.values[i];
    GradVals gv = grad_eval(grid, FieldView(z), j, m);
    Sym2 hp = hess_prime_eval(grid, FieldView(z), j, m);
    MetricPair mp = metric_at(zv, gv, e_pp);
    Sym2 b = second_fundamental_at(zv, gv, hp, e_pp);
    LambdaVec lam = principal_curvatures(mp.g, b, k, i);
    auto [tau, eta] = tau_eta(zv, gv);

    out.g.tt[i] = mp.g.tt;
    out.g.tp[i] = mp.g.tp;
    out.g.pp[i] = mp.g.pp;
    out.g_inv.tt[i] = mp.g_inv.tt;
    out.g_inv.tp[i] = mp.g_inv.tp;
    out.g_inv.pp[i] = mp.g_inv.pp;
    out.b.tt[i] = b.tt;
    out.b.tp[i] = b.tp;
    out.b.pp[i] = b.pp;
    out.lambda1.values[i] = lam.values(0);
    out.lambda2.values[i] = lam.values(1);
    out.tau.values[i] = tau;
    out.eta.values[i] = eta;

    ConeDiagnostic cone = in_gamma_k(lam);
    out.admissible[i] = cone.inside ? 1 : 0;
    out.f.values[i] = cone.inside
                          ? f_value(lam)
                          : std::numeric_limits<double>::quiet_NaN();
  });

  out.cone_violations = 0;
  for (std::uint8_t a : out.admissible) {
    if (!a) ++out.cone_violations;
  }
  return out;
}

}  // namespace curvatura
