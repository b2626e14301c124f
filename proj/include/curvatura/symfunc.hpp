#pragma once

#include <Eigen/Dense>

#include "curvatura/errors.hpp"

namespace curvatura {

/// A vector of principal curvatures together with the cone order k of the
/// equation it belongs to. Admissibility means sigma_j > 0 for j = 1..k,
/// the computable characterization of the Garding cone Gamma_k.
struct LambdaVec {
  Eigen::VectorXd values;
  int k = 1;

  LambdaVec() = default;
  LambdaVec(Eigen::VectorXd v, int cone_order)
      : values(std::move(v)), k(cone_order) {
    if (values.size() < 1) throw ArgumentError("LambdaVec needs n >= 1");
    if (k < 1 || k > n()) throw ArgumentError("LambdaVec needs 1 <= k <= n");
  }
  int n() const { return static_cast<int>(values.size()); }
};

struct ConeDiagnostic {
  bool inside = false;
  int first_failing_j = 0;  // 0 when inside
  double min_sigma = 0.0;   // smallest sigma_j over j = 1..k
  int argmin_j = 0;
};

/// j-th elementary symmetric polynomial of the entries, sigma_0 = 1.
double sigma_k(const LambdaVec& lambda, int j);

/// f(lambda) = (sigma_k / C(n,k))^(1/k), positive and degree-one homogeneous
/// on Gamma_k. Throws ConeViolation off the cone.
double f_value(const LambdaVec& lambda);

/// Partial derivatives f_i = df/dlambda_i; strictly positive on Gamma_k and
/// satisfying the Euler identity sum_i f_i lambda_i = f.
Eigen::VectorXd f_grad(const LambdaVec& lambda);

/// Hessian d2f/dlambda_i dlambda_j; symmetric, negative semidefinite on
/// Gamma_k.
Eigen::MatrixXd f_hess(const LambdaVec& lambda);

/// sigma_j > 0 for every j = 1..k, with the worst margin reported.
ConeDiagnostic in_gamma_k(const LambdaVec& lambda);

/// Full second derivative of B -> f(eigenvalues(B)) at the diagonal matrix
/// diag(lambda), contracted twice with the symmetric matrix eta:
///
///   sum_{i,j} f_ij eta_ii eta_jj + sum_{i != j} (f_i - f_j)/(lambda_i -
///   lambda_j) eta_ij^2,
///
/// the difference quotient replaced by its limit f_ii - f_ij when
/// |lambda_i - lambda_j| <= 1e-7 (1 + max|lambda|).
double andrews_contract(const LambdaVec& lambda, const Eigen::MatrixXd& eta);

namespace detail {
/// All elementary symmetric polynomials e_0..e_n of v via the coefficient
/// recurrence (exact expansion of prod (x + v_i)).
Eigen::VectorXd elementary_symmetric(const Eigen::VectorXd& v);
double binomial(int n, int k);
}  // namespace detail

}  // namespace curvatura
