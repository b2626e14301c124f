#include "curvatura/symfunc.hpp"

#include <cmath>

namespace curvatura {

namespace detail {

Eigen::VectorXd elementary_symmetric(const Eigen::VectorXd& v) {
  const int n = static_cast<int>(v.size());
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n + 1);
  e(0) = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j >= 1; --j) {
      e(j) += v(i) * e(j - 1);
    }
  }
  return e;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

namespace {

// Elementary symmetric polynomials of v with entry `skip` removed.
Eigen::VectorXd elementary_symmetric_without(const Eigen::VectorXd& v,
                                             int skip) {
  const int n = static_cast<int>(v.size());
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  e(0) = 1.0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    if (i == skip) continue;
    ++filled;
    for (int j = filled; j >= 1; --j) {
      e(j) += v(i) * e(j - 1);
    }
  }
  return e;
}

Eigen::VectorXd elementary_symmetric_without2(const Eigen::VectorXd& v,
                                              int skip_a, int skip_b) {
  const int n = static_cast<int>(v.size());
  Eigen::VectorXd e = Eigen::VectorXd::Zero(std::max(n - 1, 1));
  e(0) = 1.0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    if (i == skip_a || i == skip_b) continue;
    ++filled;
    for (int j = filled; j >= 1; --j) {
      e(j) += v(i) * e(j - 1);
    }
  }
  return e;
}

// Throws ConeViolation at the first nonpositive sigma_j, j = 1..k.
void require_admissible(const LambdaVec& lambda) {
  Eigen::VectorXd e = elementary_symmetric(lambda.values);
  for (int j = 1; j <= lambda.k; ++j) {
    if (!(e(j) > 0.0)) throw ConeViolation(j, e(j));
  }
}

}  // namespace
}  // namespace detail

double sigma_k(const LambdaVec& lambda, int j) {
  if (j < 0 || j > lambda.n()) {
    throw ArgumentError("sigma_k: j must lie in [0, n]");
  }
  return detail::elementary_symmetric(lambda.values)(j);
}

double f_value(const LambdaVec& lambda) {
  detail::require_admissible(lambda);
  const double s = sigma_k(lambda, lambda.k);
  const double c = detail::binomial(lambda.n(), lambda.k);
  return std::pow(s / c, 1.0 / lambda.k);
}

Eigen::VectorXd f_grad(const LambdaVec& lambda) {
  detail::require_admissible(lambda);
  const int n = lambda.n();
  const int k = lambda.k;
  const double s = sigma_k(lambda, k);
  const double f = std::pow(s / detail::binomial(n, k), 1.0 / k);
  Eigen::VectorXd g(n);
  for (int i = 0; i < n; ++i) {
    // d sigma_k / d lambda_i = sigma_{k-1} of the other entries
    const double si =
        detail::elementary_symmetric_without(lambda.values, i)(k - 1);
    g(i) = f * si / (k * s);
  }
  return g;
}

Eigen::MatrixXd f_hess(const LambdaVec& lambda) {
  detail::require_admissible(lambda);
  const int n = lambda.n();
  const int k = lambda.k;
  if (k == 1) return Eigen::MatrixXd::Zero(n, n);

  const double s = sigma_k(lambda, k);
  const double f = std::pow(s / detail::binomial(n, k), 1.0 / k);
  Eigen::VectorXd si(n);
  for (int i = 0; i < n; ++i) {
    si(i) = detail::elementary_symmetric_without(lambda.values, i)(k - 1);
  }
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double sij = 0.0;
      if (i != j && k >= 2) {
        sij = detail::elementary_symmetric_without2(lambda.values, i, j)(k - 2);
      }
      // f_ij = (f/k) [ (1-k)/k * S_i S_j / S^2 + S_ij / S ], with S_ii = 0
      const double v =
          (f / k) * ((1.0 - k) / k * si(i) * si(j) / (s * s) + sij / s);
      h(i, j) = v;
      h(j, i) = v;
    }
  }
  return h;
}

ConeDiagnostic in_gamma_k(const LambdaVec& lambda) {
  Eigen::VectorXd e = detail::elementary_symmetric(lambda.values);
  ConeDiagnostic d;
  d.inside = true;
  d.min_sigma = e(1);
  d.argmin_j = 1;
  for (int j = 1; j <= lambda.k; ++j) {
    if (e(j) < d.min_sigma) {
      d.min_sigma = e(j);
      d.argmin_j = j;
    }
    if (!(e(j) > 0.0) && d.inside) {
      d.inside = false;
      d.first_failing_j = j;
    }
  }
  return d;
}

double andrews_contract(const LambdaVec& lambda, const Eigen::MatrixXd& eta) {
  const int n = lambda.n();
  if (eta.rows() != n || eta.cols() != n) {
    throw ArgumentError("andrews_contract: eta must be n x n");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (eta(i, j) != eta(j, i)) {
        throw ArgumentError("andrews_contract: eta must be symmetric");
      }
    }
  }
  const Eigen::VectorXd grad = f_grad(lambda);
  const Eigen::MatrixXd hess = f_hess(lambda);

  double diag_term = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      diag_term += hess(i, j) * eta(i, i) * eta(j, j);
    }
  }

  const double coalesce =
      1e-7 * (1.0 + lambda.values.cwiseAbs().maxCoeff());
  double off_term = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dl = lambda.values(i) - lambda.values(j);
      double q;
      if (std::abs(dl) <= coalesce) {
        // analytic limit of the difference quotient for symmetric f
        q = hess(i, i) - hess(i, j);
      } else {
        q = (grad(i) - grad(j)) / dl;
      }
      off_term += 2.0 * q * eta(i, j) * eta(i, j);
    }
  }
  return diag_term + off_term;
}

}  // namespace curvatura
