#include "datamix/pipeline.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "datamix/pile.hpp"
#include "datamix/rng.hpp"
#include "datamix/sampler.hpp"

namespace datamix {

using nlohmann::json;

namespace {

constexpr std::string_view kFixtureLogsPath = "fixture:result-table";

Objective objective_from_string(const std::string& text) {
  if (text == "min" || text == "minimize") return Objective::kMinimize;
  if (text == "max" || text == "maximize") return Objective::kMaximize;
  throw DataError("objective must be 'min' or 'max', got '" + text + "'");
}

std::string objective_to_string(Objective objective) {
  return objective == Objective::kMinimize ? "min" : "max";
}

std::vector<DomainInfo> domains_from_json(const json& array) {
  std::vector<DomainInfo> domains;
  for (const auto& entry : array) {
    domains.push_back({entry.at("name").get<std::string>(),
                       entry.value("available_tokens", std::uint64_t{0})});
  }
  return domains;
}

}  // namespace

PipelineConfig pipeline_config_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad config json: ") + e.what(), 1, 1);
  }

  PipelineConfig config;
  if (doc.contains("catalog")) {
    const json& catalog = doc["catalog"];
    if (catalog.is_string()) {
      config.catalog_path = catalog.get<std::string>();
    } else if (catalog.is_array()) {
      config.catalog_inline = domains_from_json(catalog);
    } else {
      throw DataError("'catalog' must be a path or a domain array");
    }
  }
  config.logs_path = doc.at("logs").get<std::string>();
  config.target_metric = doc.at("target_metric").get<std::string>();
  config.logs_json_lines = doc.value("logs_json_lines", false);
  config.family = doc.value("family", std::string("gbdt"));
  if (config.family != "ridge" && config.family != "gbdt") {
    throw DataError("family must be 'ridge' or 'gbdt'");
  }
  if (doc.contains("gbdt")) {
    const json& g = doc["gbdt"];
    config.gbdt.iterations = g.value("iterations", config.gbdt.iterations);
    config.gbdt.learning_rate =
        g.value("learning_rate", config.gbdt.learning_rate);
    config.gbdt.max_leaves = g.value("max_leaves", config.gbdt.max_leaves);
    config.gbdt.min_samples_leaf =
        g.value("min_samples_leaf", config.gbdt.min_samples_leaf);
  }
  if (doc.contains("ridge")) {
    const json& r = doc["ridge"];
    if (r.contains("grid")) {
      config.ridge_grid = r["grid"].get<std::vector<double>>();
    }
    config.ridge_folds = r.value("folds", config.ridge_folds);
  }
  if (doc.contains("sampler")) {
    const json& s = doc["sampler"];
    config.sample_count = s.value("count", config.sample_count);
    config.multiplier_low = s.value("multiplier_low", config.multiplier_low);
    config.multiplier_high = s.value("multiplier_high", config.multiplier_high);
    config.min_weight_floor =
        s.value("min_weight_floor", config.min_weight_floor);
  }
  if (doc.contains("simulation")) {
    const json& s = doc["simulation"];
    config.candidate_count = s.value("candidates", config.candidate_count);
    config.top_k = s.value("top_k", config.top_k);
    if (s.contains("objective")) {
      config.objective =
          objective_from_string(s["objective"].get<std::string>());
    }
    config.threads = s.value("threads", config.threads);
  }
  config.seed = doc.value("seed", std::uint64_t{0});
  config.output_dir =
      std::filesystem::path(doc.value("output_dir", std::string(".")));
  return config;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  return pipeline_config_from_json_text(read_text_file(path));
}

std::string pipeline_config_json(const PipelineConfig& config) {
  json doc;
  if (config.catalog_inline) {
    json catalog = json::array();
    for (const auto& d : *config.catalog_inline) {
      catalog.push_back(
          {{"name", d.name}, {"available_tokens", d.available_tokens}});
    }
    doc["catalog"] = catalog;
  } else if (config.catalog_path) {
    doc["catalog"] = config.catalog_path->string();
  }
  doc["logs"] = config.logs_path.string();
  doc["target_metric"] = config.target_metric;
  doc["logs_json_lines"] = config.logs_json_lines;
  doc["family"] = config.family;
  doc["gbdt"] = {{"iterations", config.gbdt.iterations},
                 {"learning_rate", config.gbdt.learning_rate},
                 {"max_leaves", config.gbdt.max_leaves},
                 {"min_samples_leaf", config.gbdt.min_samples_leaf}};
  doc["ridge"] = {{"grid", config.ridge_grid}, {"folds", config.ridge_folds}};
  doc["sampler"] = {{"count", config.sample_count},
                    {"multiplier_low", config.multiplier_low},
                    {"multiplier_high", config.multiplier_high},
                    {"min_weight_floor", config.min_weight_floor}};
  doc["simulation"] = {{"candidates", config.candidate_count},
                       {"top_k", config.top_k},
                       {"objective", objective_to_string(config.objective)},
                       {"threads", config.threads}};
  doc["seed"] = config.seed;
  doc["output_dir"] = config.output_dir.string();
  return doc.dump(2) + "\n";
}

DomainCatalog load_catalog_file(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad catalog json: ") + e.what(), 1, 1);
  }
  return DomainCatalog(domains_from_json(doc.at("domains")));
}

DomainCatalog resolve_catalog(const PipelineConfig& config) {
  if (config.catalog_inline) return DomainCatalog(*config.catalog_inline);
  if (config.catalog_path) return load_catalog_file(*config.catalog_path);
  return pile_catalog();
}

RegressionDataset ingest_pipeline_logs(const PipelineConfig& config,
                                       const DomainCatalog& catalog) {
  IngestOptions options;
  options.json_lines = config.logs_json_lines;
  if (config.logs_path == kFixtureLogsPath) {
    options.json_lines = false;
    return ingest_runs_text(detail::kResultTableCsv, catalog,
                            config.target_metric, options);
  }
  return ingest_runs(config.logs_path, catalog, config.target_metric, options);
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  const DomainCatalog catalog = resolve_catalog(config);
  const std::uint64_t config_hash = fnv1a_hash(pipeline_config_json(config));
  const Provenance provenance{config.seed, config_hash};

  std::filesystem::create_directories(config.output_dir);

  // 1. Design-stage mixture sample over the catalog token distribution.
  SamplerConfig design{token_distribution(catalog), config.multiplier_low,
                       config.multiplier_high, Rng::derive(config.seed, 1),
                       config.min_weight_floor};
  const std::vector<Mixture> design_mixtures =
      sample_mixtures(design, config.sample_count);
  const auto sampled_path = config.output_dir / "sampled_mixtures.csv";
  {
    std::ostringstream out;
    write_mixtures_csv(out, catalog, design_mixtures, provenance);
    write_text_file(sampled_path, out.str());
  }

  // 2. Ingest training logs and fit the surrogate.
  const RegressionDataset dataset = ingest_pipeline_logs(config, catalog);
  Regressor model;
  std::uint64_t fit_seed = Rng::derive(config.seed, 2);
  if (config.family == "ridge") {
    model = fit_ridge_cv(dataset, config.ridge_grid, config.ridge_folds,
                         fit_seed)
                .first;
  } else {
    GbdtParams gbdt = config.gbdt;
    gbdt.seed = fit_seed;
    model = fit_gbdt(dataset, gbdt).first;
  }

  ModelDocument document;
  document.model = model;
  for (const auto& d : catalog.domains()) {
    document.domain_names.push_back(d.name);
  }
  document.target_metric = config.target_metric;
  document.seed = config.seed;
  document.config_hash = config_hash;
  const auto model_path = config.output_dir / "model.json";
  save_model(model_path, document);

  // 3. Simulate the candidate space and reduce to the top-k.
  SimulationConfig sim;
  sim.candidate_count = config.candidate_count;
  sim.top_k = config.top_k;
  sim.objective = config.objective;
  sim.threads = config.threads;
  sim.sampler = SamplerConfig{token_distribution(catalog),
                              config.multiplier_low, config.multiplier_high,
                              Rng::derive(config.seed, 3),
                              config.min_weight_floor};
  const MixtureRanking ranking = simulate(model, sim);

  const auto ranking_path = config.output_dir / "ranking.csv";
  {
    std::ostringstream out;
    out << "# seed=" << provenance.seed
        << "\n# config_hash=" << provenance.config_hash << "\n";
    out << "rank,draw_id,prediction";
    for (const auto& d : catalog.domains()) out << ',' << snake_case(d.name);
    out << '\n';
    for (std::size_t pos = 0; pos < ranking.order.size(); ++pos) {
      const std::size_t idx = ranking.order[pos];
      out << pos + 1 << ',' << ranking.draw_ids[idx] << ','
          << format_double(ranking.predictions[idx]);
      for (double w : ranking.candidates[idx].weights()) {
        out << ',' << format_double(w);
      }
      out << '\n';
    }
    write_text_file(ranking_path, out.str());
  }

  // 4. Emit the final mixture.
  const auto final_path = config.output_dir / "final_mixture.json";
  write_text_file(final_path,
                  mixture_json(catalog, ranking.best_average, provenance));

  PipelineResult result;
  result.final_mixture = ranking.best_average;
  result.config_hash = config_hash;
  result.sampled_mixtures_path = sampled_path;
  result.model_path = model_path;
  result.ranking_path = ranking_path;
  result.final_mixture_path = final_path;
  return result;
}

}  // namespace datamix
