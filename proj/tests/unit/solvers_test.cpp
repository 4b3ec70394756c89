#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "lingbridge/rng.hpp"
#include "lingbridge/solvers/elasticnet.hpp"
#include "lingbridge/solvers/logistic.hpp"
#include "lingbridge/solvers/metrics.hpp"
#include "lingbridge/solvers/pca.hpp"
#include "lingbridge/solvers/rrr.hpp"
#include "lingbridge/solvers/standardize.hpp"

using namespace lingbridge;
using namespace lingbridge::solvers;

namespace {

Matrix gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.normal();
  }
  return m;
}

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

/// Cyclic Jacobi rotations; returns eigenvalues (diagonal) and vectors (columns).
std::pair<Vector, Matrix> jacobi_eigen(Matrix a) {
  const Eigen::Index n = a.rows();
  Matrix v = Matrix::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (off < 1e-30) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  return {a.diagonal(), v};
}

double soft(double z, double g) { return z > g ? z - g : (z < -g ? z + g : 0.0); }

double l1_objective(const Matrix& x, const Vector& y, const Vector& w, double b, double c) {
  return logistic_loss(x, y, w, b) + w.lpNorm<1>() / c;
}

}  // namespace

// -- ElasticNet -------------------------------------------------------------

TEST(ElasticNet, ExactFitTwoPoints) {
  Matrix x(2, 1);
  x << 1, -1;
  auto m = elasticnet_fit(x, vec({1, -1}), 0.0, 0.5, 1e-12);
  EXPECT_NEAR(m.weights(0), 1.0, 1e-12);
  EXPECT_NEAR(m.intercept, 0.0, 1e-12);
}

TEST(ElasticNet, HugeAlphaShrinksToMean) {
  Matrix x = gaussian(30, 4, 1);
  Vector y = x.col(0) * 2.0 + Vector::Constant(30, 3.0);
  auto m = elasticnet_fit(x, y, 1e6, 0.5);
  EXPECT_TRUE(m.weights.isZero(0.0));
  EXPECT_NEAR(m.intercept, y.mean(), 1e-12);
}

TEST(ElasticNet, AlphaZeroMatchesNormalEquations) {
  Matrix x = gaussian(60, 5, 2);
  Vector beta = vec({1.5, -2.0, 0.3, 0.0, 4.0});
  Vector y = x * beta + 0.1 * gaussian(60, 1, 3).col(0) + Vector::Constant(60, 0.7);

  Matrix xa(60, 6);
  xa << x, Vector::Ones(60);
  Vector ols = (xa.transpose() * xa).ldlt().solve(xa.transpose() * y);

  SolverControl control;
  control.tol = 1e-13;
  control.max_iter = 100000;
  auto m = elasticnet_fit(x, y, ElasticNetParams{0.0, 0.5}, control);
  EXPECT_LT((m.weights - ols.head(5)).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_NEAR(m.intercept, ols(5), 1e-6);
}

TEST(ElasticNet, SoftThresholdClosedForm) {
  Matrix x = gaussian(40, 1, 4);
  x.col(0).array() -= x.col(0).mean();
  x.col(0) /= std::sqrt(x.col(0).squaredNorm() / 40.0);
  Vector y = 0.8 * x.col(0) + gaussian(40, 1, 5).col(0);
  double n = 40.0;
  for (double alpha : {0.01, 0.1, 0.5, 5.0}) {
    double cov = x.col(0).dot(y.array().matrix() - Vector::Constant(40, y.mean())) / n;
    double var = x.col(0).squaredNorm() / n;
    double expected = soft(cov, alpha) / var;
    auto m = elasticnet_fit(x, y, alpha, 1.0, 1e-12);
    EXPECT_NEAR(m.weights(0), expected, 1e-8) << "alpha " << alpha;
  }
}

TEST(ElasticNet, ObjectiveNonIncreasingPerSweep) {
  Matrix x = gaussian(80, 12, 6);
  x.col(3) = x.col(2) + 0.05 * x.col(3);  // correlated pair slows convergence
  Vector y = x.col(2) - x.col(7) + gaussian(80, 1, 7).col(0);
  SolverControl control;
  control.tol = 1e-10;
  control.record_objective = true;
  for (double l1 : {0.1, 0.5, 1.0}) {
    auto m = elasticnet_fit(x, y, ElasticNetParams{0.05, l1}, control);
    ASSERT_GT(m.objective_trace.size(), 2u);
    for (std::size_t i = 1; i < m.objective_trace.size(); ++i) {
      EXPECT_LE(m.objective_trace[i], m.objective_trace[i - 1] + 1e-12) << "sweep " << i;
    }
    EXPECT_NEAR(m.objective_trace.back(), elasticnet_objective(x, y, m), 1e-12);
  }
}

TEST(ElasticNet, WarmStartedGridMatchesColdFits) {
  Matrix x = gaussian(50, 6, 8);
  Vector y = x.col(1) * 3.0 + gaussian(50, 1, 9).col(0);
  ElasticNetProblem problem(x);
  SolverControl control;
  control.tol = 1e-12;
  auto grid = default_elasticnet_grid();
  auto fits = problem.fit_grid(y, grid, control);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto cold = problem.fit(y, grid[i], control);
    EXPECT_LT((fits[i].weights - cold.weights).cwiseAbs().maxCoeff(), 1e-8);
  }
}

// -- L1 logistic ------------------------------------------------------------

TEST(Logistic, GradientMatchesFiniteDifferences) {
  Matrix x = gaussian(40, 3, 10);
  Vector y(40);
  for (int i = 0; i < 40; ++i) y(i) = x(i, 0) + 0.5 * x(i, 1) > 0 ? 1.0 : 0.0;
  Vector w = vec({0.4, -0.3, 0.2});
  double b = 0.1;
  Vector grad;
  logistic_loss(x, y, w, b, &grad);
  const double h = 1e-6;
  for (Eigen::Index j = 0; j <= 3; ++j) {
    Vector wp = w, wm = w;
    double bp = b, bm = b;
    if (j < 3) {
      wp(j) += h;
      wm(j) -= h;
    } else {
      bp += h;
      bm -= h;
    }
    double fd = (logistic_loss(x, y, wp, bp) - logistic_loss(x, y, wm, bm)) / (2 * h);
    EXPECT_LT(std::abs(fd - grad(j)) / std::max(std::abs(grad(j)), 1e-8), 1e-5) << "coordinate " << j;
  }
}

TEST(Logistic, SubgradientOptimality) {
  Matrix x = gaussian(120, 6, 11);
  Vector y(120);
  Rng rng(12);
  for (int i = 0; i < 120; ++i) {
    double z = 1.5 * x(i, 0) - x(i, 2) + 0.3;
    y(i) = rng.uniform01() < 1.0 / (1.0 + std::exp(-z)) ? 1.0 : 0.0;
  }
  LogisticControl control;
  for (double c : {1.0, 10.0, 100.0}) {
    auto m = logistic_l1_fit(x, y, c, control);
    ASSERT_TRUE(m.converged);
    Vector grad;
    logistic_loss(x, y, m.weights, m.intercept, &grad);
    double tol = 10 * control.tol;
    for (Eigen::Index j = 0; j < 6; ++j) {
      if (m.weights(j) != 0.0) {
        double s = m.weights(j) > 0 ? 1.0 : -1.0;
        EXPECT_LT(std::abs(grad(j) + s / c), tol) << "C " << c << " j " << j;
      } else {
        EXPECT_LE(std::abs(grad(j)), 1.0 / c + tol) << "C " << c << " j " << j;
      }
    }
    EXPECT_LT(std::abs(grad(6)), tol);
  }
}

TEST(Logistic, SeparableOneDimension) {
  Matrix x(2, 1);
  x << -1, 1;
  auto m = logistic_l1_fit(x, vec({0, 1}), 1e4);
  EXPECT_EQ(accuracy(vec({0, 1}), m.predict(x)), 1.0);
}

TEST(Logistic, TinyCGivesPrior) {
  Matrix x = gaussian(50, 3, 13);
  Vector y(50);
  for (int i = 0; i < 50; ++i) y(i) = i < 15 ? 1.0 : 0.0;
  auto m = logistic_l1_fit(x, y, 1e-4);
  EXPECT_TRUE(m.weights.isZero(0.0));
  EXPECT_NEAR(m.predict_proba(x)(0), 0.3, 1e-6);
}

TEST(Logistic, SingleClassRejected) {
  Matrix x = gaussian(5, 2, 14);
  EXPECT_THROW(logistic_l1_fit(x, Vector::Ones(5), 1.0), InputError);
  EXPECT_THROW(logistic_l1_fit(x, vec({0, 1, 2, 0, 1}), 1.0), InputError);
}

TEST(Logistic, NoiseColumnLosesToSignal) {
  // Column 0 drives the label, column 1 is noise. Oracle: brute-force grid
  // over the two weights with the intercept minimized by golden section.
  Matrix x = gaussian(200, 2, 15);
  Vector y(200);
  Rng rng(16);
  for (int i = 0; i < 200; ++i) y(i) = rng.uniform01() < 1.0 / (1.0 + std::exp(-2.0 * x(i, 0))) ? 1.0 : 0.0;

  auto loose = logistic_l1_fit(x, y, 1000.0);
  EXPECT_LT(std::abs(loose.weights(1)), std::abs(loose.weights(0)));

  const double c = 10.0;
  auto m = logistic_l1_fit(x, y, c, LogisticControl{1e-9, 100000});
  EXPECT_EQ(m.weights(1), 0.0);

  auto best_b = [&](const Vector& w) {
    double lo = -3, hi = 3;
    for (int it = 0; it < 80; ++it) {
      double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      if (l1_objective(x, y, w, m1, c) < l1_objective(x, y, w, m2, c)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    return (lo + hi) / 2;
  };
  double grid_best = 1e300, grid_w1 = 1e300;
  for (double w0 = 0.0; w0 <= 3.0; w0 += 0.05) {
    for (double w1 = -0.5; w1 <= 0.5001; w1 += 0.05) {
      Vector w = vec({w0, w1});
      double f = l1_objective(x, y, w, best_b(w), c);
      if (f < grid_best) {
        grid_best = f;
        grid_w1 = w1;
      }
    }
  }
  EXPECT_NEAR(grid_w1, 0.0, 1e-9);
  EXPECT_LE(l1_objective(x, y, m.weights, m.intercept, c), grid_best + 1e-12);
}

// -- reduced-rank regression ----------------------------------------------------

TEST(Rrr, FullRankEqualsOls) {
  Matrix x = gaussian(100, 5, 17);
  Matrix y = x * gaussian(5, 4, 18) + 0.1 * gaussian(100, 4, 19);
  auto map = rrr_fit(x, y, 4);

  Matrix xa(100, 6);
  xa << x, Vector::Ones(100);
  Matrix ols = xa.colPivHouseholderQr().solve(y);
  EXPECT_LT((map.coefficients - ols.topRows(5)).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_LT((map.intercepts.transpose() - ols.row(5)).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Rrr, FittedRankBounded) {
  Matrix x = gaussian(100, 6, 20);
  Matrix y = x * gaussian(6, 5, 21) + 0.2 * gaussian(100, 5, 22);
  for (std::size_t r = 1; r <= 4; ++r) {
    auto map = rrr_fit(x, y, r);
    Eigen::JacobiSVD<Matrix> svd(map.coefficients);
    auto s = svd.singularValues();
    EXPECT_LT(s(static_cast<Eigen::Index>(r)), 1e-8 * s(0)) << "rank " << r;
  }
}

TEST(Rrr, RankOneTruthRecovered) {
  Matrix x = gaussian(80, 5, 23);
  Vector u = gaussian(5, 1, 24).col(0), v = gaussian(4, 1, 25).col(0);
  Matrix y = x * (u * v.transpose());
  auto map = rrr_fit(x, y, 1);
  EXPECT_LT((map.apply(x) - y).squaredNorm() / static_cast<double>(y.size()), 1e-10);
}

TEST(Rrr, NestedRanksMonotone) {
  Matrix x = gaussian(80, 5, 26);
  Matrix w = gaussian(5, 2, 27) * gaussian(2, 4, 28);
  Matrix y = x * w + 0.05 * gaussian(80, 4, 29);
  auto mse = [&](std::size_t r) { return (rrr_fit(x, y, r).apply(x) - y).squaredNorm(); };
  EXPECT_GE(mse(1), mse(2));
  EXPECT_GE(mse(2), mse(4) - 1e-12);
}

TEST(Rrr, RankAboveDimsClamped) {
  Matrix x = gaussian(30, 3, 30);
  Matrix y = gaussian(30, 2, 31);
  auto map = rrr_fit(x, y, 10);
  EXPECT_TRUE(map.rank_clamped);
  EXPECT_EQ(map.rank_bound, 2u);
}

// -- PCA ---------------------------------------------------------------------------

TEST(Pca, MatchesJacobiOracle) {
  Matrix s = gaussian(30, 4, 32);
  s.col(1) += 0.8 * s.col(0);
  s.col(3) = 5.0 * s.col(3) + 2.0 * s.col(0);
  auto res = pca_first_component(s);

  Matrix z = s;
  for (Eigen::Index c = 0; c < z.cols(); ++c) {
    double mu = z.col(c).mean();
    double sd = std::sqrt((z.col(c).array() - mu).square().mean());
    z.col(c) = (z.col(c).array() - mu) / sd;
  }
  Matrix corr = z.transpose() * z / 30.0;
  auto [vals, vecs] = jacobi_eigen(corr);
  Eigen::Index top;
  vals.maxCoeff(&top);
  Vector oracle = z * vecs.col(top);
  double sign = oracle.dot(res.scores) >= 0 ? 1.0 : -1.0;
  EXPECT_LT((res.scores - sign * oracle).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_NEAR(res.explained_variance_ratio, vals(top) / vals.sum(), 1e-10);
}

TEST(Pca, TwoIdenticalColumns) {
  Matrix s(3, 2);
  s << 1, 1, 2, 2, 3, 3;
  auto res = pca_first_component(s);
  Vector dir = vec({-1, 0, 1});
  EXPECT_NEAR(std::abs(res.scores.normalized().dot(dir.normalized())), 1.0, 1e-12);
  EXPECT_GT(res.scores(2), res.scores(0));
}

TEST(Pca, SingleColumnIsZScore) {
  Matrix s(4, 1);
  s << 2, 4, 4, 10;
  auto res = pca_first_component(s);
  double mu = 5.0, sd = std::sqrt((9.0 + 1.0 + 1.0 + 25.0) / 4.0);
  Vector z = (s.col(0).array() - mu) / sd;
  EXPECT_LT((res.scores - z).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Pca, OrthogonalNoiseColumnLeavesScores) {
  Matrix s = gaussian(25, 3, 33);
  s.col(1) += s.col(0);
  s.col(2) += 0.5 * s.col(0);
  auto base = pca_first_component(s);

  Matrix centered = s.rowwise() - s.colwise().mean();
  Vector noise = gaussian(25, 1, 34).col(0);
  noise.array() -= noise.mean();
  // Least-squares residual: orthogonal to every centered column.
  Vector coef = centered.colPivHouseholderQr().solve(noise);
  noise -= centered * coef;
  Matrix wider(25, 4);
  wider << s, 1e-3 * noise;
  auto res = pca_first_component(wider);
  EXPECT_LT((res.scores - base.scores).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Pca, ConstantColumnDropped) {
  Matrix s(4, 2);
  s << 1, 7, 2, 7, 3, 7, 5, 7;
  auto res = pca_first_component(s);
  EXPECT_EQ(res.dropped_columns, (std::vector<std::size_t>{1}));
  EXPECT_THROW(pca_first_component(Matrix::Constant(3, 2, 1.0)), InputError);
}

// -- standardization and metrics ---------------------------------------------------

TEST(Standardize, ConstantColumnFlaggedAndZero) {
  Matrix x(3, 2);
  x << 1, 5, 2, 5, 3, 5;
  auto [z, st] = standardize(x);
  EXPECT_TRUE(st.constant[1]);
  EXPECT_FALSE(st.constant[0]);
  EXPECT_TRUE(z.col(1).isZero(0.0));
}

TEST(Standardize, UnitMomentsAndRoundTrip) {
  Matrix x = gaussian(50, 4, 35) * 3.0;
  x.col(2).array() += 100.0;
  auto [z, st] = standardize(x);
  for (Eigen::Index c = 0; c < 4; ++c) {
    EXPECT_NEAR(z.col(c).mean(), 0.0, 1e-12);
    EXPECT_NEAR(std::sqrt(z.col(c).squaredNorm() / 50.0), 1.0, 1e-12);
  }
  EXPECT_LT((st.invert(z) - x).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Metrics, R2HandCases) {
  Vector y = vec({1, 2, 3});
  EXPECT_EQ(r2_score(y, y), 1.0);
  EXPECT_EQ(r2_score(y, Vector::Constant(3, 2.0)), 0.0);
  EXPECT_EQ(r2_score(y, vec({1, 2, 4})), 0.5);
  EXPECT_EQ(r2_score(Vector::Constant(3, 1.0), y), 0.0);
}
