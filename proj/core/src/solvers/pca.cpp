#include "lingbridge/solvers/pca.hpp"

#include <algorithm>
#include <cmath>

#include "lingbridge/solvers/standardize.hpp"

namespace lingbridge::solvers {

PcaResult pca_first_component(const Matrix& s) {
  if (s.rows() < 2) throw InputError("pca: need at least 2 rows, got " + std::to_string(s.rows()));
  if (!all_finite(s)) throw InputError("pca: scores contain non-finite values");
  const Standardizer st = Standardizer::fit(s);
  PcaResult out;
  for (Eigen::Index j = 0; j < s.cols(); ++j) {
    (st.constant[static_cast<std::size_t>(j)] ? out.dropped_columns : out.kept_columns)
        .push_back(static_cast<std::size_t>(j));
  }
  if (out.kept_columns.empty()) throw InputError("pca: every column has zero variance");

  const Eigen::Index n = s.rows();
  const Eigen::Index k = static_cast<Eigen::Index>(out.kept_columns.size());
  Matrix z(n, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    const auto j = static_cast<Eigen::Index>(out.kept_columns[static_cast<std::size_t>(c)]);
    z.col(c) = (s.col(j).array() - st.means(j)) / st.stds(j);
  }
  const Matrix corr = z.transpose() * z / static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(corr);
  if (eig.info() != Eigen::Success) throw NumericError("pca: eigen-decomposition failed");
  Vector v = eig.eigenvectors().col(k - 1);
  out.explained_variance_ratio = eig.eigenvalues()(k - 1) / corr.trace();

  Vector scores = z * v;
  const Vector row_mean = z.rowwise().mean();
  const double agreement = (scores.array() - scores.mean()).matrix().dot((row_mean.array() - row_mean.mean()).matrix());
  bool flip = agreement < 0.0;
  if (std::abs(agreement) <= 1e-12 * std::max(1.0, scores.norm() * row_mean.norm())) {
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    flip = v(arg) < 0.0;
  }
  if (flip) {
    v = -v;
    scores = -scores;
  }
  out.loadings = std::move(v);
  out.scores = std::move(scores);
  return out;
}

}  // namespace lingbridge::solvers
