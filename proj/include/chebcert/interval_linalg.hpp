#pragma once

#include <optional>
#include <stdexcept>

#include <Eigen/Dense>

#include "chebcert/interval.hpp"

namespace chebcert {

struct IvSolveError : std::runtime_error {
  double residual_bound;
  explicit IvSolveError(double r)
      : std::runtime_error("iv_gauss_solve: residual norm bound " + std::to_string(r) +
                           " >= 1, matrix singular or unverifiable"),
        residual_bound(r) {}
};

// Enclosure of A^{-1} B for every member of the interval matrices A, B.
// Method: numeric approximate inverse C of mid(A), then a Neumann-series
// enclosure driven by the bound on ||I - C A|| in the induced
// max-absolute-column-sum norm. Throws IvSolveError when that bound is >= 1.
RigorousMatrix iv_gauss_solve(const RigorousMatrix& A, const RigorousMatrix& B);

// Upper bound on ||I - C A||_1 for the approximate inverse C of mid(A);
// exposed for reuse by the block certification.
double iv_residual_norm(const Eigen::MatrixXd& C, const RigorousMatrix& A);

Eigen::MatrixXd midpoint(const RigorousMatrix& A);

}  // namespace chebcert
