#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lingbridge/rng.hpp"
#include "lingbridge/solvers/cv.hpp"
#include "lingbridge/solvers/serialize.hpp"

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

}  // namespace

TEST(Folds, BalancedAndDeterministic) {
  auto a = assign_folds(17, 5, 3);
  EXPECT_EQ(a, assign_folds(17, 5, 3));
  EXPECT_NE(a, assign_folds(17, 5, 4));
  std::vector<std::size_t> sizes(5, 0);
  for (auto f : a) sizes.at(f)++;
  EXPECT_LE(*std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end()), 1u);
}

TEST(Folds, InvalidCounts) {
  EXPECT_THROW(assign_folds(10, 1, 0), InputError);
  EXPECT_THROW(assign_folds(3, 4, 0), InputError);
}

TEST(Folds, TrainAndTestPartitionRows) {
  auto folds = assign_folds(20, 4, 9);
  for (std::size_t f = 0; f < 4; ++f) {
    auto in = fold_rows(folds, f, true), out = fold_rows(folds, f, false);
    EXPECT_EQ(in.size() + out.size(), 20u);
    std::set<std::size_t> all(in.begin(), in.end());
    all.insert(out.begin(), out.end());
    EXPECT_EQ(all.size(), 20u);
  }
}

TEST(GridSearch, SinglePointIsBest) {
  Matrix x = gaussian(30, 3, 1);
  Vector y = x.col(0);
  auto r = cv_elasticnet(x, y, {{0.5, 0.5}}, 3, 0);
  EXPECT_EQ(r.report.best_index, 0u);
  EXPECT_EQ(r.model.params, (ElasticNetParams{0.5, 0.5}));
}

TEST(GridSearch, EmptyGridRejected) {
  Matrix x = gaussian(30, 3, 1);
  EXPECT_THROW(cv_elasticnet(x, x.col(0), {}, 3, 0), InputError);
}

TEST(GridSearch, DuplicatePointsTieDeterministically) {
  Matrix x = gaussian(40, 3, 2);
  Vector y = x.col(1) + 0.1 * x.col(2);
  std::vector<ElasticNetParams> grid{{0.01, 0.5}, {0.01, 0.5}, {0.01, 0.5}};
  auto r = cv_elasticnet(x, y, grid, 4, 5);
  EXPECT_EQ(r.report.mean_scores[0], r.report.mean_scores[1]);
  EXPECT_EQ(r.report.best_index, 0u);
}

TEST(GridSearch, TieGoesToLargerAlpha) {
  // Both alphas zero out the single useless feature on every fold.
  Matrix x = gaussian(40, 1, 3);
  Vector y = gaussian(40, 1, 4).col(0);
  auto r = cv_elasticnet(x, y, {{50.0, 1.0}, {100.0, 1.0}}, 4, 0);
  EXPECT_EQ(r.report.mean_scores[0], r.report.mean_scores[1]);
  EXPECT_EQ(r.report.best_index, 1u);
}

TEST(GridSearch, NoiselessDataPrefersSmallAlpha) {
  Matrix x = gaussian(60, 4, 5);
  Vector y = x * Vector::LinSpaced(4, 1.0, 4.0);
  auto r = cv_elasticnet(x, y, {{0.001, 0.5}, {100.0, 0.5}}, 3, 0);
  EXPECT_EQ(r.model.params.alpha, 0.001);
  EXPECT_LT(r.report.mean_scores[0], r.report.mean_scores[1]);
}

TEST(GridSearch, SameSeedSameReport) {
  Matrix x = gaussian(50, 5, 6);
  Vector y = x.col(0) - x.col(3) + gaussian(50, 1, 7).col(0);
  auto a = cv_elasticnet(x, y, default_elasticnet_grid(), 3, 11);
  auto b = cv_elasticnet(x, y, default_elasticnet_grid(), 3, 11);
  EXPECT_EQ(a.report.mean_scores, b.report.mean_scores);
  EXPECT_TRUE(a.model.weights == b.model.weights);
}

TEST(LogisticCv, PicksAndRefits) {
  Matrix x = gaussian(100, 4, 8);
  Vector y(100);
  for (int i = 0; i < 100; ++i) y(i) = x(i, 0) > 0 ? 1.0 : 0.0;
  auto serial = cv_logistic(x, y, {1, 10, 100}, 5, 0);
  auto threaded = cv_logistic(x, y, {1, 10, 100}, 5, 0, {}, 3);
  EXPECT_EQ(serial.report.mean_scores, threaded.report.mean_scores);
  EXPECT_GT(serial.report.mean_scores[serial.report.best_index], 0.8);
  EXPECT_EQ(serial.report.metric, CvMetric::accuracy);
}

TEST(RrrCv, RankOneTruthSelectsRankOne) {
  Matrix x = gaussian(120, 5, 9);
  Matrix w = gaussian(5, 1, 10) * gaussian(1, 4, 11);
  Matrix y = x * w + 0.05 * gaussian(120, 4, 12);
  auto r = cv_rrr(x, y, {1, 2, 4}, 3, 0);
  EXPECT_EQ(r.map.rank_bound, 1u);
}

TEST(Serialize, ModelsRoundTrip) {
  Matrix x = gaussian(40, 3, 13);
  Vector y = x.col(0) + 0.2 * gaussian(40, 1, 14).col(0);
  auto en = cv_elasticnet(x, y, default_elasticnet_grid(), 3, 0);
  auto lm = linear_model_from_json(to_json(en.model));
  EXPECT_TRUE(lm.weights == en.model.weights);
  EXPECT_EQ(lm.intercept, en.model.intercept);

  auto rep = cv_report_from_json(to_json(en.report));
  EXPECT_EQ(rep.mean_scores, en.report.mean_scores);
  EXPECT_EQ(rep.grid, en.report.grid);

  Vector labels = (x.col(1).array() > 0).cast<double>();
  auto lg = logistic_l1_fit(x, labels, 10.0);
  auto lg2 = logistic_model_from_json(to_json(lg));
  EXPECT_TRUE(lg2.predict_proba(x) == lg.predict_proba(x));
}

TEST(Serialize, WrongVersionNamesBoth) {
  std::string doc = R"({"format":"lingbridge.standardizer","format_version":7,"means":{"rows":0,"data":[]},"stds":{"rows":0,"data":[]},"constant":[]})";
  try {
    standardizer_from_json(doc);
    FAIL();
  } catch (const InputError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("7"), std::string::npos) << msg;
    EXPECT_NE(msg.find("1"), std::string::npos) << msg;
  }
}
