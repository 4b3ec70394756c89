#include "lingbridge/bridge/serialize.hpp"

#include <fstream>
#include <sstream>

#include "solvers/json_io.hpp"

namespace lingbridge::bridge {

namespace {

using nlohmann::json;
namespace sd = solvers::detail;

constexpr std::string_view kPipelineFormat = "lingbridge.pipeline";
constexpr std::string_view kCorrespondenceFormat = "lingbridge.correspondence";

json encode(const CorrespondenceModel& m) {
  json targets = json::array();
  for (const auto& t : m.targets()) {
    json jt = {{"name", t.name}, {"train_r2", t.train_r2}, {"degenerate", t.degenerate}};
    if (m.mode() == CorrespondenceMode::independent) jt["model"] = sd::encode(t.model);
    if (t.cv) jt["cv"] = sd::encode(*t.cv);
    targets.push_back(std::move(jt));
  }
  json j = {{"mode", std::string(to_string(m.mode()))}, {"source_names", m.source_names()}, {"targets", targets}};
  if (m.mode() == CorrespondenceMode::reduced_rank) {
    j["map"] = sd::encode(m.map());
    if (m.rank_report()) j["rank_cv"] = sd::encode(*m.rank_report());
  }
  return j;
}

CorrespondenceModel decode_correspondence(const json& j) {
  const auto mode = parse_correspondence_mode(j.at("mode").get<std::string>());
  auto source_names = j.at("source_names").get<std::vector<std::string>>();
  std::vector<TargetModel> targets;
  for (const auto& jt : j.at("targets")) {
    TargetModel t;
    t.name = jt.at("name").get<std::string>();
    t.train_r2 = jt.at("train_r2").get<double>();
    t.degenerate = jt.value("degenerate", false);
    if (mode == CorrespondenceMode::independent) t.model = sd::decode_linear_model(jt.at("model"));
    if (jt.contains("cv")) t.cv = sd::decode_cv_report(jt.at("cv"));
    targets.push_back(std::move(t));
  }
  if (mode == CorrespondenceMode::independent) return CorrespondenceModel(std::move(source_names), std::move(targets));

  auto map = sd::decode_linear_map(j.at("map"));
  if (map.coefficients.cols() != static_cast<Eigen::Index>(targets.size())) {
    throw InputError("correspondence: map has the wrong number of targets");
  }
  for (std::size_t t = 0; t < targets.size(); ++t) {
    targets[t].model.weights = map.coefficients.col(static_cast<Eigen::Index>(t));
    targets[t].model.intercept = map.intercepts(static_cast<Eigen::Index>(t));
    targets[t].model.params = {0.0, 0.0};
  }
  std::optional<solvers::CvReport> report;
  if (j.contains("rank_cv")) report = sd::decode_cv_report(j.at("rank_cv"));
  return CorrespondenceModel(std::move(source_names), std::move(targets), std::move(map), std::move(report));
}

json encode(const DementiaClassifier& c) {
  return {{"feature_names", c.feature_names},
          {"standardizer", sd::encode(c.standardizer)},
          {"model", sd::encode(c.model)},
          {"cv", sd::encode(c.cv)}};
}

DementiaClassifier decode_classifier(const json& j) {
  DementiaClassifier c;
  c.feature_names = j.at("feature_names").get<std::vector<std::string>>();
  c.standardizer = sd::decode_standardizer(j.at("standardizer"));
  c.model = sd::decode_logistic_model(j.at("model"));
  c.cv = sd::decode_cv_report(j.at("cv"));
  const auto n = static_cast<Eigen::Index>(c.feature_names.size());
  if (c.standardizer.dims() != n || c.model.weights.size() != n) {
    throw InputError("classifier: feature count does not match its weights");
  }
  return c;
}

json encode(const featx::PruneMask& m) { return json::parse(m.to_json()); }
json encode(const featx::CfgVocabulary& v) { return json::parse(v.to_json()); }

template <class F>
auto decoding(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string pipeline_to_json(const PipelineModel& model) {
  json body = {{"mode", std::string(to_string(model.mode))},
               {"k", model.k},
               {"k_policy", std::string(to_string(model.k_policy))},
               {"selected_targets", model.selected_targets},
               {"correspondence", encode(model.correspondence)},
               {"classifier", encode(model.classifier)},
               {"full_classifier", encode(model.full_classifier)}};
  if (model.frontend) {
    body["frontend"] = {{"source_prune", encode(model.frontend->source_prune)},
                        {"target_prune", encode(model.frontend->target_prune)},
                        {"source_vocab", encode(model.frontend->source_vocab)},
                        {"target_vocab", encode(model.frontend->target_vocab)}};
  }
  json doc = {{"format", std::string(kPipelineFormat)}, {"format_version", kPipelineFormatVersion}};
  doc.update(body);
  return doc.dump(1);
}

PipelineModel pipeline_from_json(const std::string& text) {
  const json j = sd::parse_document(text, "pipeline");
  sd::check_header(j, kPipelineFormat, kPipelineFormatVersion);
  return decoding("pipeline", [&] {
    PipelineModel p;
    p.mode = parse_pipeline_mode(j.at("mode").get<std::string>());
    p.k = j.at("k").get<std::size_t>();
    p.k_policy = parse_k_policy(j.at("k_policy").get<std::string>());
    p.selected_targets = j.at("selected_targets").get<std::vector<std::string>>();
    p.correspondence = decode_correspondence(j.at("correspondence"));
    p.classifier = decode_classifier(j.at("classifier"));
    p.full_classifier = decode_classifier(j.at("full_classifier"));
    if (j.contains("frontend")) {
      const auto& f = j.at("frontend");
      p.frontend = PipelineFrontend{featx::PruneMask::from_json(f.at("source_prune").dump()),
                                    featx::PruneMask::from_json(f.at("target_prune").dump()),
                                    featx::CfgVocabulary::from_json(f.at("source_vocab").dump()),
                                    featx::CfgVocabulary::from_json(f.at("target_vocab").dump())};
    }
    if (p.selected_targets.size() != p.k || p.classifier.feature_names.size() != p.k) {
      throw InputError("pipeline: k does not match the selected targets");
    }
    return p;
  });
}

void save_pipeline(const PipelineModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << pipeline_to_json(model) << '\n';
  if (!out) throw InputError("failed writing " + path);
}

PipelineModel load_pipeline(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return pipeline_from_json(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string correspondence_to_json(const CorrespondenceModel& model) {
  json doc = {{"format", std::string(kCorrespondenceFormat)}, {"format_version", kPipelineFormatVersion}};
  doc.update(encode(model));
  return doc.dump(1);
}

CorrespondenceModel correspondence_from_json(const std::string& text) {
  const json j = sd::parse_document(text, "correspondence");
  sd::check_header(j, kCorrespondenceFormat, kPipelineFormatVersion);
  return decoding("correspondence", [&] { return decode_correspondence(j); });
}

}  // namespace lingbridge::bridge
