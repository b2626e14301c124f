#pragma once

#include <cstdint>
#include <utility>

#include "curvatura/sphere_grid.hpp"
#include "curvatura/symfunc.hpp"

namespace curvatura {

/// Graph {(u, z(u))} over the sphere in hyperbolic space, kept inside the
/// annulus [R1, R2] by the solver.
struct RadialGraph {
  ScalarField z;
  double R1 = 0.0;
  double R2 = 0.0;
};

struct MetricPair {
  Sym2 g;
  Sym2 g_inv;
};

/// Induced metric g = sinh^2(z) e + dz (x) dz and its inverse
/// g^{ij} = (e^{ij} - z^i z^j / (phi + |grad' z|^2)) / phi.
MetricPair metric_at(double z, const GradVals& grad, double e_pp);

/// Second fundamental form
///   b_ij = sinh(z)/sqrt(sinh^2 z + |grad' z|^2)
///          { -grad'_ij z + 2 coth(z) z_i z_j + sinh(z) cosh(z) e_ij }.
Sym2 second_fundamental_at(double z, const GradVals& grad,
                           const Sym2& hess_prime, double e_pp);

/// Eigenvalues of b relative to g, sorted descending. Cholesky whitening
/// g = L L^T followed by the symmetric eigenproblem of L^-1 b L^-T keeps the
/// eigenvalues real and turns a non-positive-definite g into a clean error.
LambdaVec principal_curvatures(const Sym2& g, const Sym2& b, int k,
                               long node_for_error = -1);

/// tau = sinh^2 z / sqrt(sinh^2 z + |grad' z|^2), eta = -cosh z.
std::pair<double, double> tau_eta(double z, const GradVals& grad);

/// Hessian of z with respect to the induced metric,
///   grad_ij z = (phi grad'_ij z - 2 s c z_i z_j + s c |grad' z|^2 e_ij)
///               / (phi + |grad' z|^2).
Sym2 covariant_hessian_z(double z, const GradVals& grad,
                         const Sym2& hess_prime, double e_pp);

struct CurvatureData {
  Sym2Field g, g_inv, b;
  ScalarField lambda1, lambda2;  // sorted descending
  ScalarField tau, eta;
  ScalarField f;  // f(lambda); NaN where the cone is violated
  std::vector<std::uint8_t> admissible;
  long cone_violations = 0;
};

/// Pointwise composition of the kernels above over the whole grid. Nodes
/// whose curvatures leave Gamma_k are flagged, not fatal.
CurvatureData curvature_field(const RadialGraph& graph,
                              const SphericalGrid& grid, int k);

}  // namespace curvatura
