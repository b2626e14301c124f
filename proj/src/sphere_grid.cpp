#include "curvatura/sphere_grid.hpp"

#include <algorithm>

#include "curvatura/parallel.hpp"

namespace curvatura {

SphericalGrid::SphericalGrid(int n_theta, int n_phi)
    : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta < 8 || n_theta % 2 != 0) {
    throw ConfigError("n_theta must be even and >= 8");
  }
  if (n_phi < 16 || n_phi % 2 != 0) {
    throw ConfigError("n_phi must be even and >= 16");
  }
  h_theta_ = M_PI / n_theta;
  h_phi_ = 2.0 * M_PI / n_phi;
  theta_.resize(n_theta);
  sin_theta_.resize(n_theta);
  cos_theta_.resize(n_theta);
  for (int j = 0; j < n_theta; ++j) {
    theta_[j] = (j + 0.5) * h_theta_;
    sin_theta_[j] = std::sin(theta_[j]);
    cos_theta_[j] = std::cos(theta_[j]);
  }
  phi_.resize(n_phi);
  sin_phi_.resize(n_phi);
  cos_phi_.resize(n_phi);
  for (int m = 0; m < n_phi; ++m) {
    phi_[m] = m * h_phi_;
    sin_phi_[m] = std::sin(phi_[m]);
    cos_phi_[m] = std::cos(phi_[m]);
  }
}

SphericalGrid build_grid(int n_theta, int n_phi) {
  return SphericalGrid(n_theta, n_phi);
}

GradVals grad_at(const ScalarField& z, int j, int m) {
  return grad_eval(*z.grid, FieldView(z), j, m);
}

Sym2 hess_prime_at(const ScalarField& z, int j, int m) {
  return hess_prime_eval(*z.grid, FieldView(z), j, m);
}

GradField grad_sphere(const ScalarField& z) {
  const SphericalGrid& g = *z.grid;
  GradField out{ScalarField(g), ScalarField(g), ScalarField(g)};
  FieldView v(z);
  parallel_for(g.num_nodes(), [&](long i) {
    int j = static_cast<int>(i / g.n_phi());
    int m = static_cast<int>(i % g.n_phi());
    GradVals gv = grad_eval(g, v, j, m);
    out.dtheta.values[i] = gv.dt;
    out.dphi.values[i] = gv.dp;
    out.norm2.values[i] = gv.norm2;
  });
  return out;
}

Sym2Field hess_sphere(const ScalarField& z) {
  const SphericalGrid& g = *z.grid;
  Sym2Field out(g);
  FieldView v(z);
  parallel_for(g.num_nodes(), [&](long i) {
    int j = static_cast<int>(i / g.n_phi());
    int m = static_cast<int>(i % g.n_phi());
    Sym2 h = hess_prime_eval(g, v, j, m);
    out.tt[i] = h.tt;
    out.tp[i] = h.tp;
    out.pp[i] = h.pp;
  });
  return out;
}

std::vector<long> collect_node_reads(const SphericalGrid& g, int j, int m) {
  std::vector<long> reads;
  reads.reserve(64);
  RecordingView rec{&g, &reads};
  grad_eval(g, rec, j, m);
  hess_prime_eval(g, rec, j, m);
  reads.push_back(g.index(j, m));
  std::sort(reads.begin(), reads.end());
  reads.erase(std::unique(reads.begin(), reads.end()), reads.end());
  return reads;
}

}  // namespace curvatura
