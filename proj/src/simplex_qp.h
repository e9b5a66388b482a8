#pragma once

#include <Eigen/Dense>
#include <vector>

namespace rupert {

// Exact active-set minimization of q(lambda) = c.lambda + sigma*||G lambda||^2
// over the probability simplex, where the columns of G are points in R^d.
// This is the one quadratic engine behind the trust-region dual, the min-norm
// stationarity certificate (c = 0, sigma = 1), and the extreme-point filter.
//
// The method maintains a support set, solves the equality-constrained KKT
// system restricted to it, and walks toward that solution dropping zeroed
// coordinates (Wolfe's min-norm-point scheme generalized to a linear term).
// Restricted solves are exact up to roundoff, so convergence is finite; `gap`
// is the simplex duality gap lambda.grad q - min_t (grad q)_t, an upper bound
// on q(lambda) - q(lambda*).
struct SimplexQpResult {
  Eigen::VectorXd lambda;       // on the simplex, zero off the support
  Eigen::VectorXd image;        // G lambda
  std::vector<int> support;     // indices with lambda > 0
  double value = 0.0;           // q(lambda)
  double gap = 0.0;
  bool converged = false;
  int iterations = 0;
};

SimplexQpResult simplex_qp_min(const Eigen::MatrixXd& G, const Eigen::VectorXd& c,
                               double sigma, double rel_tol = 1e-15,
                               int max_iters = 0,  // 0 = pick from problem size
                               const std::vector<int>* warm_support = nullptr);

}  // namespace rupert
