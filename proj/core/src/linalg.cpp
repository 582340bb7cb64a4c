#include "sivcm/linalg.hpp"

#include <cmath>
#include <string>

namespace sivcm {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::non_finite: return "NonFinite";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::singular_after_ridge: return "SingularAfterRidge";
    case errc::empty_window: return "EmptyWindow";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::no_feasible_point: return "NoFeasiblePoint";
    case errc::too_few_observations: return "TooFewObservations";
    case errc::all_infinite: return "AllInfinite";
    case errc::malformed_csv: return "MalformedCsv";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::io_error: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_square_symmetric(const Eigen::Ref<const Eigen::MatrixXd>& m,
                            double rel_tol) {
  if (m.rows() != m.cols()) {
    raise(errc::invalid_argument, "matrix must be square");
  }
  if (!m.allFinite()) {
    raise(errc::non_finite, "matrix has non-finite entries");
  }
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return;
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > rel_tol * scale) {
    raise(errc::not_symmetric,
          "matrix asymmetry " + std::to_string(asym / scale) +
              " exceeds relative tolerance");
  }
}

}  // namespace

SymEig sym_eig(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  check_square_symmetric(m, 1e-8);
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) {
    raise(errc::non_finite, "eigendecomposition failed to converge");
  }
  // Eigen returns ascending order.
  SymEig out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

PseudoInverse gen_inverse(const Eigen::Ref<const Eigen::MatrixXd>& m,
                          double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    raise(errc::invalid_argument, "gen_inverse rel_tol must lie in (0,1)");
  }
  const SymEig eig = sym_eig(m);
  const Eigen::Index d = m.rows();
  PseudoInverse out;
  out.matrix = Eigen::MatrixXd::Zero(d, d);
  const double lmax = eig.values.cwiseAbs().maxCoeff();
  if (lmax == 0.0) {
    return out;  // rank 0 by convention
  }
  const double cutoff = rel_tol * lmax;
  for (Eigen::Index j = 0; j < d; ++j) {
    const double lambda = eig.values(j);
    if (std::abs(lambda) > cutoff) {
      out.matrix.noalias() +=
          eig.vectors.col(j) * eig.vectors.col(j).transpose() / lambda;
      ++out.rank;
    }
  }
  out.matrix = 0.5 * (out.matrix + out.matrix.transpose());
  return out;
}

Eigen::MatrixXd inv_sqrt_psd(const Eigen::Ref<const Eigen::MatrixXd>& m,
                             double rel_tol) {
  const SymEig eig = sym_eig(m);
  const Eigen::Index d = m.rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
  const double lmax = eig.values.cwiseAbs().maxCoeff();
  if (lmax == 0.0) return out;
  const double cutoff = rel_tol * lmax;
  for (Eigen::Index j = 0; j < d; ++j) {
    const double lambda = eig.values(j);
    if (lambda > cutoff) {
      out.noalias() += eig.vectors.col(j) * eig.vectors.col(j).transpose() /
                       std::sqrt(lambda);
    }
  }
  return 0.5 * (out + out.transpose());
}

namespace {

bool residual_ok(const Eigen::MatrixXd& m, const Eigen::MatrixXd& x,
                 const Eigen::MatrixXd& b) {
  if (!x.allFinite()) return false;
  const double res = (m * x - b).norm();
  return res <= 1e-8 * (m.norm() * x.norm() + b.norm());
}

}  // namespace

SpdSolve solve_spd(const Eigen::Ref<const Eigen::MatrixXd>& m,
                   const Eigen::Ref<const Eigen::MatrixXd>& b) {
  check_square_symmetric(m, 1e-8);
  if (b.rows() != m.rows()) {
    raise(errc::invalid_argument, "solve_spd rhs has wrong row count");
  }
  if (!b.allFinite()) {
    raise(errc::non_finite, "solve_spd rhs has non-finite entries");
  }

  SpdSolve out;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(m);
  if (ldlt.info() == Eigen::Success) {
    out.solution = ldlt.solve(b);
    if (residual_ok(m, out.solution, b)) {
      return out;
    }
  }

  const Eigen::Index d = m.rows();
  const double ridge = 1e-8 * m.trace() / static_cast<double>(d);
  const Eigen::MatrixXd ridged =
      m + ridge * Eigen::MatrixXd::Identity(d, d);
  Eigen::LDLT<Eigen::MatrixXd> ldlt2(ridged);
  out.ridged = true;
  if (ldlt2.info() == Eigen::Success) {
    out.solution = ldlt2.solve(b);
    if (residual_ok(ridged, out.solution, b)) {
      return out;
    }
  }
  raise(errc::singular_after_ridge,
        "system remains numerically singular after ridging");
}

}  // namespace sivcm
