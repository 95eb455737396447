#include "datamix/pile.hpp"

#include <cmath>

#include "datamix/io.hpp"

namespace datamix {

namespace {

// Corpus sizes in GiB, scaled by 1e9 into integer token proxies so the
// token distribution keeps the exact published ratios.
constexpr std::uint64_t kGiBTokenScale = 1'000'000'000;

struct CatalogEntry {
  const char* name;
  double gib;
};

constexpr CatalogEntry kPileDomains[] = {
    {"Pile-CC", 227.12},          {"PubMed Central", 180.55},
    {"ArXiv", 112.42},            {"Github", 95.16},
    {"FreeLaw", 76.73},           {"Stack Exchange", 64.39},
    {"USPTO Backgrounds", 45.81}, {"PubMed Abstracts", 38.53},
    {"Gutenberg (PG-19)", 27.19}, {"Wikipedia (en)", 19.13},
    {"DM Mathematics", 15.49},    {"Ubuntu IRC", 11.03},
    {"EuroParl", 9.17},           {"HackerNews", 7.80},
    {"PhilPapers", 4.76},         {"NIH ExPorter", 3.79},
    {"Enron Emails", 1.76},
};

// Published reference mixtures, catalog order, exact published decimals.
struct PresetEntry {
  const char* name;
  double weights[17];
};

const PresetEntry kPresets[] = {
    {"human",
     {0.142, 0.136, 0.134, 0.054, 0.049, 0.118, 0.053, 0.107, 0.025, 0.117,
      0.025, 0.009, 0.005, 0.01, 0.003, 0.007, 0.004}},
    {"doremi",
     {0.743, 0.006, 0.004, 0.022, 0.005, 0.019, 0.004, 0.014, 0.009, 0.086,
      0.002, 0.011, 0.008, 0.016, 0.034, 0.008, 0.009}},
    {"pile_cc_only",
     {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
      0.0, 0.0, 0.0}},
    {"regmix",
     {0.87, 0.003, 0.001, 0.0, 0.001, 0.0, 0.002, 0.024, 0.002, 0.016, 0.0,
      0.064, 0.0, 0.012, 0.0, 0.001, 0.002}},
};

}  // namespace

const DomainCatalog& pile_catalog() {
  static const DomainCatalog catalog = [] {
    std::vector<DomainInfo> domains;
    for (const auto& entry : kPileDomains) {
      domains.push_back(
          {entry.name, static_cast<std::uint64_t>(std::llround(
                           entry.gib * static_cast<double>(kGiBTokenScale)))});
    }
    return DomainCatalog(std::move(domains));
  }();
  return catalog;
}

const Mixture& pile_preset(std::string_view name) {
  static const std::vector<std::pair<std::string, Mixture>> presets = [] {
    std::vector<std::pair<std::string, Mixture>> out;
    for (const auto& entry : kPresets) {
      out.emplace_back(entry.name,
                       Mixture::validated(
                           std::vector<double>(std::begin(entry.weights),
                                               std::end(entry.weights)),
                           Mixture::kPublishedTolerance));
    }
    return out;
  }();
  for (const auto& [preset_name, mixture] : presets) {
    if (preset_name == name) return mixture;
  }
  throw DataError("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> pile_preset_names() {
  std::vector<std::string> names;
  for (const auto& entry : kPresets) names.emplace_back(entry.name);
  return names;
}

ResultTable load_fixture_result_table() {
  const DomainCatalog& catalog = pile_catalog();
  const std::size_t domain_count = catalog.size();

  // Header: model_id, domain columns in catalog order, then task columns.
  const std::string text = detail::kResultTableCsv;
  ResultTable table;
  std::size_t pos = 0;
  auto next_line = [&]() -> std::string {
    if (pos >= text.size()) return {};
    const std::size_t end = text.find('\n', pos);
    std::string line = text.substr(pos, end - pos);
    pos = (end == std::string::npos) ? text.size() : end + 1;
    return line;
  };

  std::vector<std::string> header;
  {
    std::string line = next_line();
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t comma = line.find(',', start);
      header.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  for (std::size_t i = 0; i < domain_count; ++i) {
    table.domain_names.push_back(catalog.domain(i).name);
  }
  table.task_names.assign(header.begin() + 1 + domain_count, header.end());

  for (std::string line = next_line(); !line.empty(); line = next_line()) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    std::vector<double> weights;
    weights.reserve(domain_count);
    for (std::size_t i = 0; i < domain_count; ++i) {
      weights.push_back(parse_double(cells.at(1 + i)).value());
    }
    ResultRow row;
    row.model_id = cells.at(0);
    // Published weights carry 3 decimals; validate at the relaxed tolerance
    // and keep them as printed.
    row.mixture = Mixture::validated(std::move(weights),
                                     Mixture::kPublishedTolerance);
    for (std::size_t i = 0; i < table.task_names.size(); ++i) {
      row.scores[table.task_names[i]] =
          parse_double(cells.at(1 + domain_count + i)).value();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

RegressionDataset dataset_from_result_table(const ResultTable& table,
                                            const std::string& target_metric) {
  std::vector<TrainingRun> runs;
  runs.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    TrainingRun run{row.mixture, row.scores, {{"model_id", row.model_id}}};
    runs.push_back(std::move(run));
  }
  return RegressionDataset(pile_catalog(), std::move(runs), target_metric);
}

LabeledTable fixture_weight_columns() {
  const ResultTable table = load_fixture_result_table();
  LabeledTable out;
  for (const auto& name : table.domain_names) {
    out.labels.push_back(snake_case(name));
    out.columns.emplace_back();
  }
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.mixture.size(); ++i) {
      out.columns[i].push_back(row.mixture[i]);
    }
  }
  return out;
}

LabeledTable fixture_score_columns() {
  const ResultTable table = load_fixture_result_table();
  LabeledTable out;
  out.labels = table.task_names;
  out.columns.resize(table.task_names.size());
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < table.task_names.size(); ++i) {
      out.columns[i].push_back(row.scores.at(table.task_names[i]));
    }
  }
  return out;
}

}  // namespace datamix
