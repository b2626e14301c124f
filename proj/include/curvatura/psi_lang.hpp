#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvatura/errors.hpp"
#include "curvatura/sphere_grid.hpp"

namespace curvatura {

enum class UnaryFn { Neg, Sinh, Cosh, Tanh, Coth, Exp, Log, Sin, Cos, Sqrt, Abs };
enum class BinOp { Add, Sub, Mul, Div, Pow };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree for psi(u, rho). The direction u enters through its
/// ambient direction cosines x, y, z, which keeps prescribed data smooth
/// across the poles of the chart.
struct Expr {
  enum class Kind { Number, Variable, Unary, Binary };
  enum class Var { Rho, X, Y, Z };

  Kind kind = Kind::Number;
  double number = 0.0;
  Var var = Var::Rho;
  UnaryFn fn = UnaryFn::Neg;
  BinOp op = BinOp::Add;
  ExprPtr lhs, rhs;  // unary nodes use lhs only
};

ExprPtr make_number(double v);
ExprPtr make_variable(Expr::Var v);
ExprPtr make_unary(UnaryFn fn, ExprPtr a);
ExprPtr make_binary(BinOp op, ExprPtr a, ExprPtr b);

/// Point on the unit sphere by direction cosines.
struct SurfacePoint {
  double x = 0.0, y = 0.0, z = 1.0;
};

SurfacePoint node_direction(const SphericalGrid& grid, int j, int m);

ExprPtr parse(const std::string& source);
std::string print(const ExprPtr& e);
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);
bool depends_on_rho(const ExprPtr& e);

double eval(const ExprPtr& e, const SurfacePoint& u, double rho);

/// Symbolic derivative with respect to rho (lightly simplified).
ExprPtr derivative_rho(const ExprPtr& e);

/// eval(derivative_rho(e)); convenience form, hot paths cache the derivative.
double eval_drho(const ExprPtr& e, const SurfacePoint& u, double rho);

/// Problem data of the prescribed-curvature equation: cone order k (the PDE
/// is posed on S^2, so k in [1,2]), annulus radii, homotopy base radius Rbar
/// with A = tanh(Rbar), homotopy exponent epsilon, and psi as an expression.
struct ProblemSpec {
  int k = 2;
  double R1 = 0.0, R2 = 0.0, Rbar = 0.0;
  double epsilon = 1.0;
  ExprPtr psi;
  ExprPtr psi_drho;  // cached symbolic derivative
  double A = 0.0;    // tanh(Rbar), so that A coth(Rbar) = 1
  std::string psi_source;
};

ProblemSpec make_problem_spec(int k, double R1, double R2, double Rbar,
                              double epsilon, const std::string& psi_source);

struct HypothesisViolation {
  int j = 0, m = 0;
  double theta = 0.0, phi = 0.0, rho = 0.0;
  double value = 0.0;  // the failing margin
};

/// Sampled certificate of Theorem-style hypotheses: barrier inequalities
/// psi(u, R1) >= coth^k R1, psi(u, R2) <= coth^k R2, and monotonicity
/// d/drho (psi sinh^k rho) <= 0, the derivative taken symbolically.
struct HypothesisReport {
  bool barrier_R1_pass = false;
  bool barrier_R2_pass = false;
  bool monotonicity_pass = false;
  bool positivity_pass = false;

  double worst_barrier_R1 = 0.0;  // min over nodes of psi(u,R1) - coth^k R1
  double worst_barrier_R2 = 0.0;  // min over nodes of coth^k R2 - psi(u,R2)
  double worst_monotonicity = 0.0;  // max over samples of d/drho(psi sinh^k)
  double min_psi = 0.0;

  HypothesisViolation worst_barrier_R1_at, worst_barrier_R2_at,
      worst_monotonicity_at;
  std::vector<HypothesisViolation> barrier_R1_violations,
      barrier_R2_violations, monotonicity_violations;
  long violation_cap = 16;
  long barrier_R1_violation_count = 0, barrier_R2_violation_count = 0,
       monotonicity_violation_count = 0;

  int n_rho = 0;
  int n_theta = 0, n_phi = 0;
  double tolerance = 1e-12;

  bool pass() const {
    return barrier_R1_pass && barrier_R2_pass && monotonicity_pass &&
           positivity_pass;
  }
};

HypothesisReport check_hypotheses(const ProblemSpec& spec,
                                  const SphericalGrid& grid, int n_rho);

/// psibar^t(u, rho) = t psi(u, rho)^(1/k) + (1 - t) A^eps coth^(1+eps)(rho).
double homotopy_psibar(const ProblemSpec& spec, double t,
                       const SurfacePoint& u, double rho);

inline double coth(double x) { return std::cosh(x) / std::sinh(x); }

}  // namespace curvatura
