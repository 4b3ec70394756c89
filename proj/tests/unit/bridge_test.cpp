#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "corpus_gen.hpp"
#include "lingbridge/bridge/frontend.hpp"
#include "lingbridge/bridge/pipeline.hpp"
#include "lingbridge/bridge/serialize.hpp"
#include "lingbridge/eval/baselines.hpp"
#include "lingbridge/eval/synthetic.hpp"
#include "lingbridge/solvers/metrics.hpp"

using namespace lingbridge;
using namespace lingbridge::bridge;
using featx::FeatureMatrix;

namespace {

FeatureMatrix named(const Matrix& values, const std::string& prefix) {
  FeatureMatrix m;
  m.values = values;
  for (Eigen::Index r = 0; r < values.rows(); ++r) m.row_ids.push_back("r" + std::to_string(r));
  for (Eigen::Index c = 0; c < values.cols(); ++c) m.names.push_back(prefix + std::to_string(c));
  return m;
}

Matrix gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.normal();
  }
  return m;
}

eval::SyntheticConfig small_config(std::uint64_t seed = 0) {
  eval::SyntheticConfig c;
  c.n_parallel = 300;
  c.src_dim = 10;
  c.tgt_dim = 8;
  c.true_rank = 3;
  c.n_db = 200;
  c.n_eval = 30;
  c.seed = seed;
  return c;
}

const eval::SyntheticBenchmark& bench() {
  static const auto b = eval::generate_synthetic_benchmark(small_config());
  return b;
}

CorrespondenceOptions fast_corr() {
  CorrespondenceOptions o;
  o.grid = {{1e-3, 0.5}, {1e-2, 0.5}, {1e-1, 0.5}};
  return o;
}

const CorrespondenceModel& bench_corr() {
  static const auto c = train_correspondence(bench().parallel_source, bench().parallel_target, fast_corr());
  return c;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lingbridge_bridge_" + name)).string();
}

}  // namespace

// -- correspondence ------------------------------------------------------------

TEST(Correspondence, IdentityCorpusNearPerfectR2) {
  Matrix x = gaussian(200, 5, 1);
  CorrespondenceOptions o;
  o.grid = {{1e-4, 0.5}, {1e-2, 0.5}};
  auto model = train_correspondence(named(x, "src"), named(x, "tgt"), o);
  for (const auto& t : model.targets()) EXPECT_GT(t.train_r2, 0.99) << t.name;
}

TEST(Correspondence, PureNoiseTargetLowR2) {
  Matrix x = gaussian(1000, 6, 2);
  Matrix y(1000, 2);
  y << x.col(0) + x.col(1), gaussian(1000, 1, 3);
  auto model = train_correspondence(named(x, "src"), named(y, "tgt"), fast_corr());
  EXPECT_GT(model.targets()[0].train_r2, 0.9);
  EXPECT_LT(model.targets()[1].train_r2, 0.1);
  EXPECT_EQ(model.ranked_target_names().front(), "tgt0");
}

TEST(Correspondence, SingleTarget) {
  Matrix x = gaussian(60, 3, 4);
  auto model = train_correspondence(named(x, "src"), named(x.col(0), "tgt"), fast_corr());
  EXPECT_EQ(model.targets().size(), 1u);
}

TEST(Correspondence, ConstantTargetIsDegenerate) {
  Matrix x = gaussian(60, 3, 5);
  Matrix y(60, 2);
  y << x.col(0), Vector::Constant(60, 4.0);
  auto model = train_correspondence(named(x, "src"), named(y, "tgt"), fast_corr());
  EXPECT_TRUE(model.targets()[1].degenerate);
  EXPECT_EQ(model.targets()[1].model.intercept, 4.0);
}

TEST(Correspondence, JobsDoNotChangeResult) {
  auto o = fast_corr();
  o.jobs = 3;
  auto threaded = train_correspondence(bench().parallel_source, bench().parallel_target, o);
  const auto& serial = bench_corr();
  ASSERT_EQ(threaded.targets().size(), serial.targets().size());
  for (std::size_t i = 0; i < serial.targets().size(); ++i) {
    EXPECT_TRUE(threaded.targets()[i].model.weights == serial.targets()[i].model.weights);
    EXPECT_EQ(threaded.targets()[i].train_r2, serial.targets()[i].train_r2);
  }
}

TEST(Correspondence, FullRankRrrMatchesUnpenalizedElasticNet) {
  Matrix x = gaussian(150, 5, 6);
  Matrix y = x * gaussian(5, 3, 7) + 0.3 * gaussian(150, 3, 8);
  auto src = named(x, "src"), tgt = named(y, "tgt");
  CorrespondenceOptions o;
  o.grid = {{0.0, 1.0}};
  o.rank_grid = {3};
  o.control.tol = 1e-12;
  auto ind = train_correspondence(src, tgt, o);
  auto rrr = train_correspondence_rrr(src, tgt, o);
  EXPECT_EQ(rrr.mode(), CorrespondenceMode::reduced_rank);
  EXPECT_LT((ind.predict(x) - rrr.predict(x)).cwiseAbs().maxCoeff(), 1e-4);
}

TEST(Correspondence, RrrSelectsRankOneTruth) {
  Matrix x = gaussian(200, 6, 9);
  Matrix y = x * (gaussian(6, 1, 10) * gaussian(1, 4, 11)) + 0.05 * gaussian(200, 4, 12);
  CorrespondenceOptions o;
  o.rank_grid = {1, 2, 4};
  auto model = train_correspondence_rrr(named(x, "src"), named(y, "tgt"), o);
  EXPECT_EQ(model.map().rank_bound, 1u);
  ASSERT_TRUE(model.rank_report().has_value());
}

TEST(Correspondence, RrrLowRankFitsWorseOnRankThreeTruth) {
  Matrix x = gaussian(200, 6, 13);
  Matrix y = x * (gaussian(6, 3, 14) * gaussian(3, 5, 15)) + 0.05 * gaussian(200, 5, 16);
  auto fit = [&](std::size_t r) {
    CorrespondenceOptions o;
    o.rank_grid = {r};
    auto m = train_correspondence_rrr(named(x, "src"), named(y, "tgt"), o);
    return (m.predict(x) - y).squaredNorm();
  };
  EXPECT_GT(fit(1), fit(3));
}

TEST(MapFeatures, InterceptOnlyModel) {
  solvers::LinearModel lm;
  lm.weights = Vector::Zero(2);
  lm.intercept = 2.5;
  CorrespondenceModel model({"a", "b"}, {TargetModel{"t", lm, 0.0, true, std::nullopt}});
  featx::FeatureVector v;
  v.push("a", 100.0);
  v.push("b", -3.0);
  EXPECT_EQ(model.map_features(v).at("t"), 2.5);
}

TEST(MapFeatures, IdentityModelReproducesHeldOutRows) {
  Matrix x = gaussian(300, 4, 17);
  CorrespondenceOptions o;
  o.grid = {{1e-4, 0.5}};
  auto model = train_correspondence(named(x, "src"), named(x, "tgt"), o);
  Matrix held = gaussian(20, 4, 18);
  EXPECT_LT((model.predict(held) - held).cwiseAbs().maxCoeff(), 0.05);
}

TEST(MapFeatures, AffineCombination) {
  const auto& corr = bench_corr();
  auto x1 = bench().eval_source.row(0), x2 = bench().eval_source.row(1);
  double a = 0.3;
  featx::FeatureVector mix = x1;
  for (std::size_t i = 0; i < mix.size(); ++i) mix.values[i] = a * x1.values[i] + (1 - a) * x2.values[i];
  auto m1 = corr.map_features(x1), m2 = corr.map_features(x2), mm = corr.map_features(mix);
  for (std::size_t i = 0; i < mm.size(); ++i) {
    EXPECT_NEAR(mm.values[i], a * m1.values[i] + (1 - a) * m2.values[i], 1e-10);
  }
}

TEST(MapFeatures, NameMismatchListsNames) {
  const auto& corr = bench_corr();
  auto v = bench().eval_source.row(0);
  v.names[0] = "bogus";
  try {
    corr.map_features(v);
    FAIL();
  } catch (const InputError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("bogus"), std::string::npos) << msg;
    EXPECT_NE(msg.find(bench().eval_source.names[0]), std::string::npos) << msg;
  }
}

// -- joint feature selection -------------------------------------------------------

TEST(Jfs, AllTargetsMatchesUnselectedClassifier) {
  const auto& corr = bench_corr();
  auto k = corr.targets().size();
  auto jfs = joint_feature_select(corr, bench().db, bench().db_labels, k);
  auto full = train_classifier(bench().db.select_columns(corr.target_names()), bench().db_labels);
  EXPECT_TRUE(jfs.classifier.model.weights == full.model.weights);
  EXPECT_EQ(jfs.classifier.model.intercept, full.model.intercept);
}

TEST(Jfs, KOneUsesBestTarget) {
  const auto& corr = bench_corr();
  auto jfs = joint_feature_select(corr, bench().db, bench().db_labels, 1);
  EXPECT_EQ(jfs.classifier.feature_names.size(), 1u);
  EXPECT_EQ(jfs.selected_targets.front(), corr.ranked_target_names().front());
}

TEST(Jfs, HigherR2TargetSelected) {
  solvers::LinearModel lm;
  lm.weights = Vector::Zero(1);
  CorrespondenceModel corr({"s"}, {TargetModel{"low", lm, 0.1, false, std::nullopt},
                                   TargetModel{"high", lm, 0.9, false, std::nullopt}});
  EXPECT_EQ(top_k_targets(corr, 1), (std::vector<std::string>{"high"}));
}

TEST(Jfs, KOutOfRangeRejected) {
  const auto& corr = bench_corr();
  EXPECT_THROW(top_k_targets(corr, 0), InputError);
  EXPECT_THROW(top_k_targets(corr, corr.targets().size() + 1), InputError);
}

TEST(Jfs, SelectionsArePrefixes) {
  const auto& corr = bench_corr();
  auto n = corr.targets().size();
  for (std::size_t k = 1; k < n; ++k) {
    auto a = top_k_targets(corr, k), b = top_k_targets(corr, k + 1);
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
  }
  auto ranked = corr.ranked_target_names();
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    auto find = [&](const std::string& name) {
      for (const auto& t : corr.targets()) {
        if (t.name == name) return t.train_r2;
      }
      return -1.0;
    };
    EXPECT_GE(find(ranked[i - 1]), find(ranked[i]));
  }
}

TEST(Jfs, DroppingTargetKeepsRemainingInputs) {
  const auto& corr = bench_corr();
  auto mapped = corr.map_matrix(bench().eval_source);
  auto names = top_k_targets(corr, 3);
  auto fewer = top_k_targets(corr, 2);
  auto a = mapped.select_columns(names), b = mapped.select_columns(fewer);
  for (std::size_t i = 0; i < fewer.size(); ++i) {
    EXPECT_TRUE(a.values.col(static_cast<Eigen::Index>(i)) == b.values.col(static_cast<Eigen::Index>(i)));
  }
}

TEST(SweepK, OneRowPerTargetAndFullKMatchesPlain) {
  const auto& b = bench();
  EvalSet ev{&b.eval_source, &b.eval_severity};
  auto curve = sweep_k(bench_corr(), b.db, b.db_labels, ev);
  ASSERT_EQ(curve.points.size(), bench_corr().targets().size());

  PipelineOptions o;
  o.mode = PipelineMode::plain;
  o.correspondence = fast_corr();
  auto plain = train_pipeline(b.parallel_source, b.parallel_target, b.db, b.db_labels, o);
  auto scores = eval::scores_from_severity(b.eval_source.row_ids, b.eval_severity);
  double rho = eval::evaluate_pipeline(plain.model, b.eval_source, scores).rho;
  ASSERT_TRUE(curve.points.back().spearman.has_value());
  EXPECT_EQ(*curve.points.back().spearman, rho);
}

// -- pipeline ---------------------------------------------------------------------------

TEST(Pipeline, ModesAndK) {
  const auto& b = bench();
  PipelineOptions o;
  o.correspondence = fast_corr();
  o.mode = PipelineMode::plain;
  auto plain = train_pipeline(b.parallel_source, b.parallel_target, b.db, b.db_labels, o).model;
  EXPECT_EQ(plain.k, plain.correspondence.targets().size());

  o.mode = PipelineMode::jfs;
  o.k_policy = KPolicy::fixed;
  o.k = 2;
  auto jfs = train_pipeline(b.parallel_source, b.parallel_target, b.db, b.db_labels, o).model;
  EXPECT_EQ(jfs.k, 2u);
  EXPECT_EQ(jfs.selected_targets.size(), 2u);

  o.mode = PipelineMode::rrr;
  auto rrr = train_pipeline(b.parallel_source, b.parallel_target, b.db, b.db_labels, o).model;
  EXPECT_EQ(rrr.correspondence.mode(), CorrespondenceMode::reduced_rank);
}

TEST(Pipeline, ZeroWeightClassifierGivesSigmoidIntercept) {
  const auto& b = bench();
  PipelineOptions o;
  o.correspondence = fast_corr();
  o.mode = PipelineMode::plain;
  auto model = train_pipeline(b.parallel_source, b.parallel_target, b.db, b.db_labels, o).model;
  model.classifier.model.weights.setZero();
  model.classifier.model.intercept = 0.4;
  double expected = 1.0 / (1.0 + std::exp(-0.4));
  for (std::size_t r = 0; r < 5; ++r) {
    EXPECT_NEAR(predict_dementia(model, b.eval_source.row(r)).probability, expected, 1e-15);
  }
}

TEST(Pipeline, IdenticalInputsIdenticalOutputs) {
  const auto& b = bench();
  PipelineOptions o;
  o.correspondence = fast_corr();
  auto model = train_pipeline(b.parallel_source, b.parallel_target, b.db, b.db_labels, o).model;
  auto p1 = predict_dementia(model, b.eval_source.row(3));
  auto p2 = predict_dementia(model, b.eval_source.row(3));
  EXPECT_EQ(p1.probability, p2.probability);
  EXPECT_EQ(p1.mapped.values, p2.mapped.values);
  EXPECT_EQ(p1.mapped.size(), model.correspondence.targets().size());
}

TEST(Pipeline, SaveLoadBitIdentical) {
  const auto& b = bench();
  PipelineOptions o;
  o.correspondence = fast_corr();
  auto model = train_pipeline(b.parallel_source, b.parallel_target, b.db, b.db_labels, o).model;
  auto path = temp_path("pipeline.json");
  save_pipeline(model, path);
  auto back = load_pipeline(path);
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    featx::FeatureVector v;
    for (const auto& n : model.correspondence.source_names()) v.push(n, 3.0 * rng.normal());
    EXPECT_EQ(predict_dementia(model, v).probability, predict_dementia(back, v).probability);
  }
  EXPECT_EQ(pipeline_to_json(back), pipeline_to_json(model));
  std::filesystem::remove(path);
}

TEST(Pipeline, TruncatedFileRejected) {
  const auto& b = bench();
  PipelineOptions o;
  o.correspondence = fast_corr();
  auto text = pipeline_to_json(train_pipeline(b.parallel_source, b.parallel_target, b.db, b.db_labels, o).model);
  EXPECT_THROW(pipeline_from_json(text.substr(0, text.size() / 2)), InputError);
}

TEST(Pipeline, UnknownVersionNamesVersions) {
  const auto& b = bench();
  PipelineOptions o;
  o.correspondence = fast_corr();
  auto text = pipeline_to_json(train_pipeline(b.parallel_source, b.parallel_target, b.db, b.db_labels, o).model);
  const std::string key = "\n \"format_version\": 1";
  auto pos = text.find(key);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, key.size(), "\n \"format_version\": 9");
  try {
    pipeline_from_json(text);
    FAIL();
  } catch (const InputError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("9"), std::string::npos) << msg;
    EXPECT_NE(msg.find("version 1"), std::string::npos) << msg;
  }
}

// -- raw-narration frontend ------------------------------------------------------------

TEST(Frontend, NarrationPredictionMatchesMatrixPath) {
  auto parallel = testgen::parallel(150, 1);
  auto db = testgen::labelled(80, 2);
  auto lex_zh = testgen::mandarin_lexicon(), lex_en = testgen::english_lexicon();
  auto ex = extract_corpus(parallel, db, lex_zh, lex_en);
  EXPECT_EQ(ex.parallel_source.row_ids.front(), "p0");
  EXPECT_EQ(ex.db.names, ex.parallel_target.names);

  PipelineOptions o;
  o.correspondence = fast_corr();
  auto model = train_pipeline(ex.parallel_source, ex.parallel_target, ex.db, ex.labels, o).model;
  model.frontend = ex.frontend;

  auto cohort = testgen::cohort(6, 3);
  auto src = extract_source(ex.frontend, cohort.mandarin, lex_zh);
  Vector by_matrix = predict_dementia(model, src);
  for (std::size_t i = 0; i < cohort.mandarin.size(); ++i) {
    auto p = predict_dementia(model, cohort.mandarin[i], lex_zh);
    EXPECT_EQ(p.probability, by_matrix(static_cast<Eigen::Index>(i)));
    EXPECT_GT(p.probability, 0.0);
    EXPECT_LT(p.probability, 1.0);
  }
}
