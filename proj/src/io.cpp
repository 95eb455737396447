#include "datamix/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace datamix {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[40];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::optional<double> parse_double(std::string_view text) {
  // Trim ordinary spaces; from_chars is strict about everything else.
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto result =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

LabeledTable read_labeled_table_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_number = 0;
  std::vector<std::string> header;
  std::vector<bool> numeric;
  LabeledTable table;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t comma = line.find(',', start);
      std::string cell = line.substr(start, comma - start);
      if (!cell.empty() && cell.back() == '\r') cell.pop_back();
      cells.push_back(std::move(cell));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (header.empty()) {
      header = cells;
      for (const auto& name : header) {
        const bool skip = name == "model_id" || name.starts_with("tag:");
        numeric.push_back(!skip);
        if (!skip) {
          table.labels.push_back(name);
          table.columns.emplace_back();
        }
      }
      continue;
    }
    if (cells.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) +
                           " cells, found " + std::to_string(cells.size()),
                       line_number, cells.size());
    }
    std::size_t column = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!numeric[i]) continue;
      const auto value = parse_double(cells[i]);
      if (!value) {
        throw ParseError("bad numeric value '" + cells[i] + "'", line_number,
                         i + 1);
      }
      table.columns[column++].push_back(*value);
    }
  }
  if (header.empty()) throw DataError("table has no header row");
  return table;
}

LabeledTable read_labeled_table(const std::filesystem::path& path) {
  return read_labeled_table_text(read_text_file(path));
}

std::uint64_t fnv1a_hash(std::string_view text) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path.string());
  out << text;
  if (!out) throw DataError("write failed: " + path.string());
}

namespace {

constexpr std::string_view kMetricPrefix = "metric:";
constexpr std::string_view kTagPrefix = "tag:";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t comma = line.find(',', start);
    std::string cell = line.substr(start, comma - start);
    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
    cells.push_back(std::move(cell));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

struct CsvColumn {
  enum class Kind { kDomain, kMetric, kTag } kind;
  std::size_t domain_index = 0;  // for kDomain
  std::string metric_name;       // for kMetric / kTag
};

// Header layout: domain columns (snake_cased catalog names), metric
// columns, and free-form tag columns ("model_id", or any "tag:" prefix).
// The "metric:" prefix is optional for interop; a bare unknown name inside
// the domain block is a misspelled domain, after the last domain column it
// is a metric.
std::vector<CsvColumn> classify_header(const std::vector<std::string>& header,
                                       const DomainCatalog& catalog) {
  std::vector<std::string> domain_columns;
  domain_columns.reserve(catalog.size());
  for (const auto& d : catalog.domains()) {
    domain_columns.push_back(snake_case(d.name));
  }

  std::size_t last_domain = 0;
  bool any_domain = false;
  for (std::size_t i = 0; i < header.size(); ++i) {
    for (std::size_t j = 0; j < domain_columns.size(); ++j) {
      if (header[i] == domain_columns[j]) {
        last_domain = i;
        any_domain = true;
      }
    }
  }
  if (!any_domain) {
    throw UnknownDomainColumnError(
        "no domain columns found; expected names like '" + domain_columns[0] +
        "'");
  }

  std::vector<CsvColumn> columns;
  columns.reserve(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string& name = header[i];
    if (name.starts_with(kMetricPrefix)) {
      columns.push_back(
          {CsvColumn::Kind::kMetric, 0, name.substr(kMetricPrefix.size())});
      continue;
    }
    if (name == "model_id" || name.starts_with(kTagPrefix)) {
      std::string tag =
          name.starts_with(kTagPrefix) ? name.substr(kTagPrefix.size()) : name;
      columns.push_back({CsvColumn::Kind::kTag, 0, std::move(tag)});
      continue;
    }
    bool matched = false;
    for (std::size_t j = 0; j < domain_columns.size(); ++j) {
      if (name == domain_columns[j]) {
        columns.push_back({CsvColumn::Kind::kDomain, j, {}});
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (i < last_domain) {
      throw UnknownDomainColumnError("column '" + name +
                                     "' is not a catalog domain");
    }
    columns.push_back({CsvColumn::Kind::kMetric, 0, name});  // bare metric
  }
  return columns;
}

RegressionDataset parse_csv_runs(const std::string& text,
                                 const DomainCatalog& catalog,
                                 const std::string& target_metric,
                                 const IngestOptions& options) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_number = 0;

  std::vector<CsvColumn> columns;
  std::vector<TrainingRun> runs;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split_csv_line(line);
    if (columns.empty()) {
      columns = classify_header(cells, catalog);
      continue;
    }
    if (cells.size() != columns.size()) {
      throw ParseError("expected " + std::to_string(columns.size()) +
                           " cells, found " + std::to_string(cells.size()),
                       line_number, cells.size());
    }
    std::vector<double> weights(catalog.size(), 0.0);
    std::map<std::string, double> metrics;
    std::map<std::string, std::string> tags;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (columns[i].kind == CsvColumn::Kind::kTag) {
        tags[columns[i].metric_name] = cells[i];
        continue;
      }
      const auto value = parse_double(cells[i]);
      if (!value || !std::isfinite(*value)) {
        throw ParseError("bad numeric value '" + cells[i] + "'", line_number,
                         i + 1);
      }
      if (columns[i].kind == CsvColumn::Kind::kDomain) {
        weights[columns[i].domain_index] = *value;
      } else {
        metrics[columns[i].metric_name] = *value;
      }
    }
    double sum = 0.0;
    for (double w : weights) {
      if (w < 0.0) {
        throw ParseError("negative domain weight", line_number, 1);
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > options.weight_tolerance + 1e-9) {
      throw WeightSumOutOfToleranceError(
          "row " + std::to_string(line_number) + ": weights sum to " +
          format_double(sum) + ", outside tolerance " +
          format_double(options.weight_tolerance));
    }
    TrainingRun run;
    run.mixture = normalize(weights);
    run.metrics = std::move(metrics);
    run.tags = std::move(tags);
    runs.push_back(std::move(run));
  }
  if (columns.empty()) throw DataError("log has no header row");
  return RegressionDataset(catalog, std::move(runs), target_metric);
}

RegressionDataset parse_json_runs(const std::string& text,
                                  const DomainCatalog& catalog,
                                  const std::string& target_metric,
                                  const IngestOptions& options) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_number = 0;
  std::vector<TrainingRun> runs;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("bad json: ") + e.what(), line_number, 1);
    }
    if (!record.contains("weights") || !record.contains("metrics")) {
      throw ParseError("record needs 'weights' and 'metrics'", line_number, 1);
    }
    std::vector<double> weights(catalog.size(), 0.0);
    const json& jw = record["weights"];
    if (jw.is_array()) {
      if (jw.size() != catalog.size()) {
        throw ParseError("weights array has " + std::to_string(jw.size()) +
                             " entries for a " + std::to_string(catalog.size()) +
                             "-domain catalog",
                         line_number, 1);
      }
      for (std::size_t i = 0; i < weights.size(); ++i) {
        weights[i] = jw[i].get<double>();
      }
    } else if (jw.is_object()) {
      for (const auto& [key, value] : jw.items()) {
        std::optional<std::size_t> index = catalog.index_of(key);
        if (!index) {
          // Also accept snake_cased names.
          for (std::size_t i = 0; i < catalog.size(); ++i) {
            if (snake_case(catalog.domain(i).name) == key) index = i;
          }
        }
        if (!index) {
          throw UnknownDomainColumnError("unknown domain '" + key + "' (line " +
                                         std::to_string(line_number) + ")");
        }
        weights[*index] = value.get<double>();
      }
    } else {
      throw ParseError("'weights' must be an array or object", line_number, 1);
    }
    double sum = 0.0;
    for (double w : weights) sum += w;
    if (std::abs(sum - 1.0) > options.weight_tolerance + 1e-9) {
      throw WeightSumOutOfToleranceError(
          "line " + std::to_string(line_number) + ": weights sum to " +
          format_double(sum));
    }
    TrainingRun run;
    run.mixture = normalize(weights);
    for (const auto& [key, value] : record["metrics"].items()) {
      run.metrics[key] = value.get<double>();
    }
    if (record.contains("tags")) {
      for (const auto& [key, value] : record["tags"].items()) {
        run.tags[key] = value.get<std::string>();
      }
    }
    runs.push_back(std::move(run));
  }
  return RegressionDataset(catalog, std::move(runs), target_metric);
}

void write_provenance(std::ostream& out,
                      const std::optional<Provenance>& provenance) {
  if (!provenance) return;
  out << "# seed=" << provenance->seed << "\n# config_hash="
      << provenance->config_hash << "\n";
}

}  // namespace

RegressionDataset ingest_runs_text(const std::string& text,
                                   const DomainCatalog& catalog,
                                   const std::string& target_metric,
                                   const IngestOptions& options) {
  return options.json_lines
             ? parse_json_runs(text, catalog, target_metric, options)
             : parse_csv_runs(text, catalog, target_metric, options);
}

RegressionDataset ingest_runs(const std::filesystem::path& path,
                              const DomainCatalog& catalog,
                              const std::string& target_metric,
                              const IngestOptions& options) {
  return ingest_runs_text(read_text_file(path), catalog, target_metric,
                          options);
}

void write_runs_csv(std::ostream& out, const RegressionDataset& dataset,
                    const std::optional<Provenance>& provenance) {
  write_provenance(out, provenance);
  const auto& catalog = dataset.catalog();

  // Metric columns: union over runs, sorted (std::map iteration order).
  std::map<std::string, bool> metric_names;
  for (const auto& run : dataset.runs()) {
    for (const auto& [name, value] : run.metrics) metric_names[name] = true;
  }

  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (i) out << ',';
    out << snake_case(catalog.domain(i).name);
  }
  for (const auto& [name, present] : metric_names) {
    out << ",metric:" << name;
  }
  out << '\n';
  for (const auto& run : dataset.runs()) {
    for (std::size_t i = 0; i < run.mixture.size(); ++i) {
      if (i) out << ',';
      out << format_double(run.mixture[i]);
    }
    for (const auto& [name, present] : metric_names) {
      out << ',';
      const auto it = run.metrics.find(name);
      if (it == run.metrics.end()) {
        throw DataError("run missing metric '" + name +
                        "' while writing a rectangular log");
      }
      out << format_double(it->second);
    }
    out << '\n';
  }
}

void write_mixtures_csv(std::ostream& out, const DomainCatalog& catalog,
                        std::span<const Mixture> mixtures,
                        const std::optional<Provenance>& provenance) {
  write_provenance(out, provenance);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (i) out << ',';
    out << snake_case(catalog.domain(i).name);
  }
  out << '\n';
  for (const auto& mixture : mixtures) {
    if (mixture.size() != catalog.size()) {
      throw DimensionMismatchError("mixture does not match catalog size");
    }
    for (std::size_t i = 0; i < mixture.size(); ++i) {
      if (i) out << ',';
      out << format_double(mixture[i]);
    }
    out << '\n';
  }
}

std::string mixture_json(const DomainCatalog& catalog, const Mixture& mixture,
                         const std::optional<Provenance>& provenance) {
  if (mixture.size() != catalog.size()) {
    throw DimensionMismatchError("mixture does not match catalog size");
  }
  json doc;
  doc["format"] = "datamix-mixture";
  doc["version"] = 1;
  json weights = json::object();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    weights[snake_case(catalog.domain(i).name)] = mixture[i];
  }
  doc["weights"] = weights;
  doc["domain_order"] = json::array();
  for (const auto& d : catalog.domains()) {
    doc["domain_order"].push_back(snake_case(d.name));
  }
  if (provenance) {
    doc["seed"] = provenance->seed;
    doc["config_hash"] = provenance->config_hash;
  }
  return doc.dump(2) + "\n";
}

Mixture mixture_from_json_text(const std::string& text,
                               const DomainCatalog& catalog) {
  const json doc = json::parse(text);
  const json& weights = doc.at("weights");
  std::vector<double> values(catalog.size(), 0.0);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const std::string key = snake_case(catalog.domain(i).name);
    if (!weights.contains(key)) {
      throw UnknownDomainColumnError("mixture json missing domain '" + key +
                                     "'");
    }
    values[i] = weights.at(key).get<double>();
  }
  return Mixture::validated(std::move(values));
}

namespace {

json tree_to_json(const RegressionTree& tree) {
  json nodes = json::array();
  for (const auto& node : tree.nodes) {
    if (node.is_leaf()) {
      nodes.push_back({{"value", node.value}});
    } else {
      nodes.push_back({{"feature", node.feature},
                       {"threshold", node.threshold},
                       {"left", node.left},
                       {"right", node.right}});
    }
  }
  return nodes;
}

RegressionTree tree_from_json(const json& nodes) {
  RegressionTree tree;
  for (const auto& jn : nodes) {
    TreeNode node;
    if (jn.contains("feature")) {
      node.feature = jn.at("feature").get<int>();
      node.threshold = jn.at("threshold").get<double>();
      node.left = jn.at("left").get<int>();
      node.right = jn.at("right").get<int>();
    } else {
      node.value = jn.at("value").get<double>();
    }
    tree.nodes.push_back(node);
  }
  return tree;
}

}  // namespace

std::string model_json(const ModelDocument& document) {
  json doc;
  doc["format"] = "datamix-model";
  doc["version"] = 1;
  doc["domains"] = document.domain_names;
  doc["target_metric"] = document.target_metric;
  doc["seed"] = document.seed;
  doc["config_hash"] = document.config_hash;
  if (const auto* linear = std::get_if<LinearModel>(&document.model)) {
    doc["family"] = "ridge";
    doc["intercept"] = linear->intercept;
    doc["coefficients"] = linear->coefficients;
    doc["penalty"] = linear->penalty;
  } else {
    const auto& ensemble = std::get<GradientBoostedEnsemble>(document.model);
    doc["family"] = "gbdt";
    doc["base_prediction"] = ensemble.base_prediction;
    doc["learning_rate"] = ensemble.learning_rate;
    doc["iterations"] = ensemble.iterations;
    json trees = json::array();
    for (const auto& tree : ensemble.trees) trees.push_back(tree_to_json(tree));
    doc["trees"] = std::move(trees);
  }
  return doc.dump(2) + "\n";
}

ModelDocument model_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad model json: ") + e.what(), 1, 1);
  }
  if (doc.value("format", "") != "datamix-model") {
    throw DataError("not a model document");
  }
  if (doc.value("version", 0) != 1) {
    throw DataError("unsupported model version");
  }
  ModelDocument document;
  document.domain_names =
      doc.value("domains", std::vector<std::string>{});
  document.target_metric = doc.value("target_metric", "");
  document.seed = doc.value("seed", std::uint64_t{0});
  document.config_hash = doc.value("config_hash", std::uint64_t{0});
  const std::string family = doc.at("family").get<std::string>();
  if (family == "ridge") {
    LinearModel model;
    model.intercept = doc.at("intercept").get<double>();
    model.coefficients = doc.at("coefficients").get<std::vector<double>>();
    model.penalty = doc.at("penalty").get<double>();
    document.model = std::move(model);
  } else if (family == "gbdt") {
    GradientBoostedEnsemble model;
    model.base_prediction = doc.at("base_prediction").get<double>();
    model.learning_rate = doc.at("learning_rate").get<double>();
    model.iterations = doc.at("iterations").get<std::size_t>();
    for (const auto& jt : doc.at("trees")) {
      model.trees.push_back(tree_from_json(jt));
    }
    document.model = std::move(model);
  } else {
    throw DataError("unknown model family '" + family + "'");
  }
  return document;
}

ModelDocument load_model(const std::filesystem::path& path) {
  return model_from_json_text(read_text_file(path));
}

void save_model(const std::filesystem::path& path,
                const ModelDocument& document) {
  write_text_file(path, model_json(document));
}

}  // namespace datamix
