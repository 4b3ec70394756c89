#include "lingbridge/corpus/loaders.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lingbridge/csv.hpp"

namespace lingbridge::corpus {

using nlohmann::json;

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

Narration narration_from_object(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected a JSON object");
  Narration n;
  try {
    n.id = require(obj, "id", where).get<std::string>();
    n.lang = parse_language(require(obj, "lang", where).get<std::string>());
    for (const auto& js : require(obj, "sentences", where)) {
      Sentence s;
      for (const auto& jt : require(js, "tokens", where)) {
        if (!jt.is_array() || jt.size() != 2) throw InputError(where + ": token must be [surface, pos]");
        s.tokens.push_back(Token{jt[0].get<std::string>(), jt[1].get<std::string>()});
      }
      s.parse = require(js, "parse", where).get<std::string>();
      n.sentences.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  validate(n);
  return n;
}

json narration_to_object(const Narration& n) {
  json sentences = json::array();
  for (const auto& s : n.sentences) {
    json tokens = json::array();
    for (const auto& t : s.tokens) tokens.push_back(json::array({t.surface, t.pos}));
    sentences.push_back(json{{"tokens", std::move(tokens)}, {"parse", s.parse}});
  }
  return json{{"id", n.id}, {"lang", std::string(to_string(n.lang))}, {"sentences", std::move(sentences)}};
}

/// Calls fn(object, line_number) for every non-blank JSONL line.
template <class Fn>
void for_each_json_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
    }
    fn(obj, line_no);
  }
}

void check_lang(const Narration& n, Language lang, std::size_t line_no) {
  if (n.lang != lang) {
    throw InputError("line " + std::to_string(line_no) + ": narration '" + n.id + "' has lang " +
                     std::string(to_string(n.lang)) + ", expected " + std::string(to_string(lang)));
  }
}

}  // namespace

std::vector<Narration> read_narrations(std::istream& in, Language lang) {
  std::vector<Narration> out;
  for_each_json_line(in, [&](const json& obj, std::size_t line_no) {
    out.push_back(narration_from_object(obj, "line " + std::to_string(line_no)));
    check_lang(out.back(), lang, line_no);
  });
  return out;
}

std::vector<Narration> load_narrations(const std::string& path, Language lang) {
  auto in = open_input(path);
  return read_narrations(in, lang);
}

std::vector<LabeledNarration> read_labeled_narrations(std::istream& in, Language lang) {
  std::vector<LabeledNarration> out;
  for_each_json_line(in, [&](const json& obj, std::size_t line_no) {
    const std::string where = "line " + std::to_string(line_no);
    LabeledNarration ln;
    ln.narration = narration_from_object(obj, where);
    check_lang(ln.narration, lang, line_no);
    const json& label = require(obj, "label", where);
    ln.label = parse_label(label.is_string() ? label.get<std::string>() : label.dump());
    out.push_back(std::move(ln));
  });
  return out;
}

std::vector<LabeledNarration> load_labeled_narrations(const std::string& path, Language lang) {
  auto in = open_input(path);
  return read_labeled_narrations(in, lang);
}

std::vector<ParallelPair> read_parallel(std::istream& in) {
  std::vector<ParallelPair> out;
  for_each_json_line(in, [&](const json& obj, std::size_t line_no) {
    const std::string where = "line " + std::to_string(line_no);
    ParallelPair p;
    try {
      p.pair_id = require(obj, "pair_id", where).get<std::string>();
    } catch (const json::exception& e) {
      throw InputError(where + ": " + e.what());
    }
    const std::string pw = where + " pair '" + p.pair_id + "'";
    for (const char* side : {"source", "target"}) {
      auto it = obj.find(side);
      if (it == obj.end() || it->is_null()) throw InputError(pw + ": missing " + side + " side");
    }
    p.source = narration_from_object(obj["source"], pw + " source");
    p.target = narration_from_object(obj["target"], pw + " target");
    if (p.source.lang == p.target.lang) throw InputError(pw + ": source and target share a language");
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<ParallelPair> load_parallel(const std::string& path) {
  auto in = open_input(path);
  return read_parallel(in);
}

FrequencyLexicon read_lexicon(std::istream& in) {
  FrequencyLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::pair<std::string, double>> entries;
  double default_zipf = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "lexicon line " + std::to_string(line_no);
    if (line_no == 1 && line.rfind("#default", 0) == 0) {
      default_zipf = csv::parse_double(std::string_view(line).substr(8), where);
      if (default_zipf < 0.0) throw InputError(where + ": default must be >= 0");
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw InputError(where + ": expected token<TAB>zipf");
    const double zipf = csv::parse_double(std::string_view(line).substr(tab + 1), where);
    if (zipf < 0.0) throw InputError(where + ": frequency must be >= 0");
    entries.emplace_back(line.substr(0, tab), zipf);
  }
  lex = FrequencyLexicon(default_zipf);
  for (const auto& [token, zipf] : entries) lex.set(token, zipf);
  return lex;
}

FrequencyLexicon load_lexicon(const std::string& path) {
  auto in = open_input(path);
  return read_lexicon(in);
}

TaskScoreTable read_task_scores(std::istream& in) {
  const auto records = csv::read(in);
  if (records.empty()) throw InputError("task-score CSV is empty");
  const auto& header = records.front().fields;
  if (header.empty() || header.front() != "patient_id") {
    throw InputError("task-score CSV header must start with patient_id");
  }
  TaskScoreTable table;
  table.task_names.assign(header.begin() + 1, header.end());
  if (table.task_names.empty()) throw InputError("task-score CSV has no task columns");
  const std::size_t n_tasks = table.task_names.size();
  std::vector<std::vector<double>> rows;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where = "task-score line " + std::to_string(rec.line);
    if (rec.fields.size() != n_tasks + 1) {
      throw InputError(where + ": expected " + std::to_string(n_tasks + 1) + " cells, got " +
                       std::to_string(rec.fields.size()));
    }
    const std::string& id = rec.fields.front();
    if (id.empty()) throw InputError(where + ": empty patient_id");
    if (!seen.insert(id).second) throw InputError(where + ": duplicate patient_id '" + id + "'");
    std::vector<double> row;
    for (std::size_t t = 0; t < n_tasks; ++t) {
      const std::string& cell = rec.fields[t + 1];
      if (cell.empty()) throw InputError(where + ": missing score for task '" + table.task_names[t] + "'");
      row.push_back(csv::parse_double(cell, where));
    }
    table.patient_ids.push_back(id);
    rows.push_back(std::move(row));
  }
  if (rows.size() < 2) throw InputError("task-score CSV needs at least 2 patients");
  table.scores.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n_tasks));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t t = 0; t < n_tasks; ++t) {
      table.scores(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t)) = rows[r][t];
    }
  }
  return table;
}

TaskScoreTable load_task_scores(const std::string& path) {
  auto in = open_input(path);
  return read_task_scores(in);
}

std::string narration_to_json(const Narration& narration) { return narration_to_object(narration).dump(); }

Narration narration_from_json(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return narration_from_object(obj, "narration");
}

std::string parallel_pair_to_json(const ParallelPair& pair) {
  return json{{"pair_id", pair.pair_id},
              {"source", narration_to_object(pair.source)},
              {"target", narration_to_object(pair.target)}}
      .dump();
}

}  // namespace lingbridge::corpus
