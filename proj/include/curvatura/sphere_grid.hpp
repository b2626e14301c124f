#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "curvatura/errors.hpp"

namespace curvatura {

/// Latitude-longitude grid on the unit sphere. Colatitudes carry a half-cell
/// offset, theta_j = (j + 1/2) pi / n_theta, so no node sits on a pole and
/// every stencil crossing a pole can read the antipodal column instead.
class SphericalGrid {
 public:
  SphericalGrid(int n_theta, int n_phi);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  long num_nodes() const { return static_cast<long>(n_theta_) * n_phi_; }

  double theta(int j) const { return theta_[j]; }
  double phi(int m) const { return phi_[m]; }
  double h_theta() const { return h_theta_; }
  double h_phi() const { return h_phi_; }

  double sin_theta(int j) const { return sin_theta_[j]; }
  double cos_theta(int j) const { return cos_theta_[j]; }

  /// Round metric e = diag(1, sin^2 theta) and its inverse.
  double e_tt() const { return 1.0; }
  double e_pp(int j) const { return sin_theta_[j] * sin_theta_[j]; }
  double e_inv_pp(int j) const { return 1.0 / e_pp(j); }

  long index(int j, int m) const {
    return static_cast<long>(j) * n_phi_ + m;
  }

  /// Maps an extended index (j possibly outside [0, n_theta)) onto the
  /// physical node reached by continuing the meridian through the pole:
  /// theta -> -theta corresponds to the antipodal column phi + pi.
  std::pair<int, int> resolve(int j, int m) const {
    if (j < 0) {
      j = -1 - j;
      m += n_phi_ / 2;
    } else if (j >= n_theta_) {
      j = 2 * n_theta_ - 1 - j;
      m += n_phi_ / 2;
    }
    m %= n_phi_;
    if (m < 0) m += n_phi_;
    return {j, m};
  }

  /// Direction cosines of the node (x = sin t cos p, y = sin t sin p,
  /// z = cos t).
  void direction(int j, int m, double& x, double& y, double& z) const {
    x = sin_theta_[j] * cos_phi_[m];
    y = sin_theta_[j] * sin_phi_[m];
    z = cos_theta_[j];
  }

 private:
  int n_theta_;
  int n_phi_;
  double h_theta_;
  double h_phi_;
  std::vector<double> theta_, phi_;
  std::vector<double> sin_theta_, cos_theta_, sin_phi_, cos_phi_;
};

/// build_grid is the validated constructor spelled as a free function.
SphericalGrid build_grid(int n_theta, int n_phi);

struct ScalarField {
  const SphericalGrid* grid = nullptr;
  std::vector<double> values;  // theta-major, n_theta * n_phi

  ScalarField() = default;
  explicit ScalarField(const SphericalGrid& g, double fill = 0.0)
      : grid(&g), values(g.num_nodes(), fill) {}

  double& at(int j, int m) { return values[grid->index(j, m)]; }
  double at(int j, int m) const { return values[grid->index(j, m)]; }
};

/// Symmetric 2x2 tensor in the (theta, phi) coordinate basis. Symmetry is
/// structural: only three components are stored.
struct Sym2 {
  double tt = 0.0, tp = 0.0, pp = 0.0;

  double det() const { return tt * pp - tp * tp; }
  double trace() const { return tt + pp; }
};

struct Sym2Field {
  const SphericalGrid* grid = nullptr;
  std::vector<double> tt, tp, pp;

  Sym2Field() = default;
  explicit Sym2Field(const SphericalGrid& g)
      : grid(&g),
        tt(g.num_nodes(), 0.0),
        tp(g.num_nodes(), 0.0),
        pp(g.num_nodes(), 0.0) {}

  Sym2 at(int j, int m) const {
    long i = grid->index(j, m);
    return {tt[i], tp[i], pp[i]};
  }
  void set(int j, int m, const Sym2& s) {
    long i = grid->index(j, m);
    tt[i] = s.tt;
    tp[i] = s.tp;
    pp[i] = s.pp;
  }
};

/// Read access to nodal data with ghost semantics: indices outside the
/// physical range resolve through the pole, the value multiplied by
/// `parity` (-1 for tensor components with an odd number of theta indices).
struct FieldView {
  const SphericalGrid* grid;
  const double* data;
  double parity = 1.0;

  FieldView(const SphericalGrid& g, const double* d, double p = 1.0)
      : grid(&g), data(d), parity(p) {}
  FieldView(const ScalarField& f, double p = 1.0)
      : grid(f.grid), data(f.values.data()), parity(p) {}

  double operator()(int j, int m) const {
    if (j >= 0 && j < grid->n_theta()) {
      m %= grid->n_phi();
      if (m < 0) m += grid->n_phi();
      return data[grid->index(j, m)];
    }
    auto [jj, mm] = grid->resolve(j, m);
    return parity * data[grid->index(jj, mm)];
  }
};

/// Records which physical nodes a stencil evaluation touches. Values are
/// irrelevant; the branch structure of the stencils depends only on indices,
/// so the recorded set matches a real evaluation exactly.
struct RecordingView {
  const SphericalGrid* grid;
  std::vector<long>* out;

  double operator()(int j, int m) const {
    auto [jj, mm] = grid->resolve(j, m);
    out->push_back(grid->index(jj, mm));
    return 0.0;
  }
};

// ---------------------------------------------------------------------------
// Stencils. Interior columns in theta use the 4th-order central formulas;
// rows whose 5-point stencil would cross a pole fall back to 2nd order.
// The phi direction is cleanly periodic and always 4th order.
// ---------------------------------------------------------------------------

template <class V>
double fd1_theta(const SphericalGrid& g, const V& f, int j, int m) {
  const double h = g.h_theta();
  if (j >= 2 && j <= g.n_theta() - 3) {
    return (f(j - 2, m) - 8.0 * f(j - 1, m) + 8.0 * f(j + 1, m) -
            f(j + 2, m)) /
           (12.0 * h);
  }
  return (f(j + 1, m) - f(j - 1, m)) / (2.0 * h);
}

template <class V>
double fd2_theta(const SphericalGrid& g, const V& f, int j, int m) {
  const double h = g.h_theta();
  if (j >= 2 && j <= g.n_theta() - 3) {
    return (-f(j - 2, m) + 16.0 * f(j - 1, m) - 30.0 * f(j, m) +
            16.0 * f(j + 1, m) - f(j + 2, m)) /
           (12.0 * h * h);
  }
  return (f(j - 1, m) - 2.0 * f(j, m) + f(j + 1, m)) / (h * h);
}

template <class V>
double fd1_phi(const SphericalGrid& g, const V& f, int j, int m) {
  const double h = g.h_phi();
  return (f(j, m - 2) - 8.0 * f(j, m - 1) + 8.0 * f(j, m + 1) -
          f(j, m + 2)) /
         (12.0 * h);
}

template <class V>
double fd2_phi(const SphericalGrid& g, const V& f, int j, int m) {
  const double h = g.h_phi();
  return (-f(j, m - 2) + 16.0 * f(j, m - 1) - 30.0 * f(j, m) +
          16.0 * f(j, m + 1) - f(j, m + 2)) /
         (12.0 * h * h);
}

/// Mixed partial as the phi-derivative of the theta-derivative. The phi
/// stencil never crosses a pole, so this composition is symmetric with
/// differentiating in the other order.
template <class V>
double fd_mixed(const SphericalGrid& g, const V& f, int j, int m) {
  const double h = g.h_phi();
  auto ft = [&](int mm) { return fd1_theta(g, f, j, mm); };
  return (ft(m - 2) - 8.0 * ft(m - 1) + 8.0 * ft(m + 1) - ft(m + 2)) /
         (12.0 * h);
}

struct GradVals {
  double dt = 0.0;     // dz/dtheta
  double dp = 0.0;     // dz/dphi
  double norm2 = 0.0;  // e^{ij} z_i z_j
};

template <class V>
GradVals grad_eval(const SphericalGrid& g, const V& f, int j, int m) {
  GradVals out;
  out.dt = fd1_theta(g, f, j, m);
  out.dp = fd1_phi(g, f, j, m);
  out.norm2 = out.dt * out.dt + out.dp * out.dp * g.e_inv_pp(j);
  return out;
}

/// Covariant Hessian on the round sphere,
///   grad'_{ij} z = d_ij z - Gamma'^k_{ij} d_k z,
/// with the closed-form Christoffels Gamma^theta_{phi phi} = -sin t cos t,
/// Gamma^phi_{theta phi} = cot t.
template <class V>
Sym2 hess_prime_eval(const SphericalGrid& g, const V& f, int j, int m) {
  const double dt = fd1_theta(g, f, j, m);
  const double dp = fd1_phi(g, f, j, m);
  const double st = g.sin_theta(j);
  const double ct = g.cos_theta(j);
  Sym2 out;
  out.tt = fd2_theta(g, f, j, m);
  out.tp = fd_mixed(g, f, j, m) - (ct / st) * dp;
  out.pp = fd2_phi(g, f, j, m) + st * ct * dt;
  return out;
}

GradVals grad_at(const ScalarField& z, int j, int m);
Sym2 hess_prime_at(const ScalarField& z, int j, int m);

struct GradField {
  ScalarField dtheta, dphi, norm2;
};

/// Whole-field covariant gradient (z_theta, z_phi) and |grad' z|^2.
GradField grad_sphere(const ScalarField& z);

/// Whole-field covariant Hessian grad'_{ij} z.
Sym2Field hess_sphere(const ScalarField& z);

/// Physical nodes read when evaluating grad_at + hess_prime_at (plus the
/// node value itself) at (j, m). Sorted, deduplicated.
std::vector<long> collect_node_reads(const SphericalGrid& g, int j, int m);

}  // namespace curvatura
