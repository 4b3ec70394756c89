#include "lingbridge/eval/baselines.hpp"

#include "lingbridge/eval/spearman.hpp"
#include "lingbridge/solvers/cv.hpp"
#include "lingbridge/solvers/standardize.hpp"

namespace lingbridge::eval {

UnilingualResult unilingual_baseline(const Matrix& x, const Vector& severity, std::size_t folds, std::uint64_t seed,
                                     double ridge) {
  if (x.rows() != severity.size()) throw InputError("unilingual baseline: feature rows and scores differ in length");
  const auto n = static_cast<std::size_t>(x.rows());
  if (n < folds) {
    throw InputError("unilingual baseline: " + std::to_string(n) + " patients cannot fill " + std::to_string(folds) +
                     " folds");
  }
  const auto assignment = solvers::assign_folds(n, folds, seed);
  UnilingualResult out;
  for (std::size_t f = 0; f < folds; ++f) {
    const auto train = solvers::fold_rows(assignment, f, false);
    const auto test = solvers::fold_rows(assignment, f, true);
    if (test.size() < 2 || train.size() < 2) {
      throw InputError("unilingual baseline: fold " + std::to_string(f) + " has fewer than 2 patients");
    }
    const Matrix xt = solvers::take_rows(x, train);
    const Vector yt = solvers::take_rows(severity, train);
    const auto st = solvers::Standardizer::fit(xt);
    const Matrix zt = st.apply(xt);
    const double y_mean = yt.mean();
    Matrix gram = zt.transpose() * zt / static_cast<double>(zt.rows());
    gram.diagonal().array() += ridge;
    const Vector w = gram.ldlt().solve(zt.transpose() * (yt.array() - y_mean).matrix() / static_cast<double>(zt.rows()));
    if (!all_finite(w)) throw NumericError("unilingual baseline: least-squares solve failed");
    const Vector pred = (st.apply(solvers::take_rows(x, test)) * w).array() + y_mean;
    out.fold_rho.push_back(spearman_rho(pred, solvers::take_rows(severity, test)));
  }
  double sum = 0;
  for (double r : out.fold_rho) sum += r;
  out.mean_rho = sum / static_cast<double>(out.fold_rho.size());
  return out;
}

double translate_baseline(const bridge::DementiaClassifier& classifier, const featx::FeatureMatrix& translated,
                          const DementiaScores& scores) {
  return spearman_rho(classifier.predict_proba(translated), scores.aligned(translated.row_ids));
}

PipelineEvaluation evaluate_pipeline(const bridge::PipelineModel& pipeline, const featx::FeatureMatrix& source,
                                     const DementiaScores& scores) {
  PipelineEvaluation out;
  out.patient_ids = source.row_ids;
  const Vector severity = scores.aligned(source.row_ids);
  out.probabilities = bridge::predict_dementia(pipeline, source);
  out.rho = spearman_rho(out.probabilities, severity);
  return out;
}

}  // namespace lingbridge::eval
