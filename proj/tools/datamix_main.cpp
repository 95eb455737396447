// datamix command line: sample candidate mixtures, fit surrogates on
// training logs, simulate the mixture space, and evaluate the results.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "datamix/io.hpp"
#include "datamix/metrics.hpp"
#include "datamix/optimizer.hpp"
#include "datamix/pile.hpp"
#include "datamix/pipeline.hpp"
#include "datamix/regressors.hpp"
#include "datamix/sampler.hpp"
#include "datamix/synthbench.hpp"

namespace {

using namespace datamix;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

DomainCatalog catalog_from_option(const std::string& catalog_path) {
  if (catalog_path.empty()) return pile_catalog();
  return load_catalog_file(catalog_path);
}

LabeledTable table_from_spec(const std::string& spec) {
  if (spec == "fixture:weights") return fixture_weight_columns();
  if (spec == "fixture:scores") return fixture_score_columns();
  return read_labeled_table(spec);
}

RegressionDataset dataset_from_option(const std::string& logs,
                                      const DomainCatalog& catalog,
                                      const std::string& target,
                                      bool json_lines) {
  IngestOptions options;
  options.json_lines = json_lines;
  if (logs == "fixture:result-table") {
    options.json_lines = false;
    return ingest_runs_text(detail::kResultTableCsv, catalog, target, options);
  }
  return ingest_runs(logs, catalog, target, options);
}

std::string percent(const std::optional<double>& value) {
  if (!value) return "undefined";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", *value * 100.0);
  return buffer;
}

int run_app(int argc, char** argv) {
  CLI::App app{"Data mixture selection via regression surrogates"};
  app.require_subcommand(1);

  // --- sample ---
  auto* sample_cmd =
      app.add_subcommand("sample", "Sample Dirichlet candidate mixtures");
  std::size_t sample_count = 512;
  std::uint64_t sample_seed = 0;
  std::string sample_catalog, sample_out;
  double mult_low = 0.1, mult_high = 5.0, weight_floor = 0.0;
  sample_cmd->add_option("--count", sample_count, "Number of mixtures");
  sample_cmd->add_option("--seed", sample_seed, "RNG seed");
  sample_cmd->add_option("--catalog", sample_catalog, "Catalog JSON path");
  sample_cmd->add_option("--multiplier-low", mult_low, "Dirichlet multiplier lower bound");
  sample_cmd->add_option("--multiplier-high", mult_high, "Dirichlet multiplier upper bound");
  sample_cmd->add_option("--min-weight-floor", weight_floor,
                         "Clamp weights below this to zero");
  sample_cmd->add_option("--out", sample_out, "Output CSV (default stdout)");
  sample_cmd->callback([&] {
    const DomainCatalog catalog = catalog_from_option(sample_catalog);
    SamplerConfig config{token_distribution(catalog), mult_low, mult_high,
                         sample_seed, weight_floor};
    const auto mixtures = sample_mixtures(config, sample_count);
    std::ostringstream spec;
    spec << "sample count=" << sample_count << " seed=" << sample_seed
         << " low=" << mult_low << " high=" << mult_high
         << " floor=" << weight_floor << " catalog=" << sample_catalog;
    std::ostringstream out;
    write_mixtures_csv(out, catalog, mixtures,
                       Provenance{sample_seed, fnv1a_hash(spec.str())});
    write_output(sample_out, out.str());
  });

  // --- fit ---
  auto* fit_cmd = app.add_subcommand("fit", "Fit a surrogate on training logs");
  std::string fit_family = "gbdt", fit_logs, fit_target, fit_catalog,
              fit_out = "model.json";
  bool fit_json_lines = false;
  std::uint64_t fit_seed = 0;
  std::optional<double> fit_penalty;
  std::vector<double> fit_grid(kDefaultPenaltyGrid.begin(),
                               kDefaultPenaltyGrid.end());
  std::size_t fit_folds = 5;
  GbdtParams gbdt;
  fit_cmd->add_option("--family", fit_family, "ridge | gbdt")
      ->check(CLI::IsMember({"ridge", "gbdt"}));
  fit_cmd->add_option("--logs", fit_logs, "Training log CSV (or fixture:result-table)")
      ->required();
  fit_cmd->add_option("--target", fit_target, "Target metric name")->required();
  fit_cmd->add_option("--catalog", fit_catalog, "Catalog JSON path");
  fit_cmd->add_flag("--json-lines", fit_json_lines, "Logs are JSON lines");
  fit_cmd->add_option("--seed", fit_seed, "Seed for CV fold shuffling");
  fit_cmd->add_option("--penalty", fit_penalty,
                      "Fixed ridge penalty (skips cross-validation)");
  fit_cmd->add_option("--grid", fit_grid, "Ridge penalty grid");
  fit_cmd->add_option("--folds", fit_folds, "Cross-validation folds");
  fit_cmd->add_option("--iterations", gbdt.iterations, "Boosting iterations");
  fit_cmd->add_option("--learning-rate", gbdt.learning_rate, "Boosting learning rate");
  fit_cmd->add_option("--max-leaves", gbdt.max_leaves, "Max leaves per tree");
  fit_cmd->add_option("--min-samples-leaf", gbdt.min_samples_leaf,
                      "Minimum samples per leaf");
  fit_cmd->add_option("--out", fit_out, "Model JSON path");
  fit_cmd->callback([&] {
    const DomainCatalog catalog = catalog_from_option(fit_catalog);
    const RegressionDataset data =
        dataset_from_option(fit_logs, catalog, fit_target, fit_json_lines);
    ModelDocument document;
    FitReport report;
    if (fit_family == "ridge") {
      if (fit_penalty) {
        std::tie(document.model, report) = fit_ridge(data, *fit_penalty);
      } else {
        auto [model, r] = fit_ridge_cv(data, fit_grid, fit_folds, fit_seed);
        document.model = std::move(model);
        report = std::move(r);
      }
    } else {
      gbdt.seed = fit_seed;
      auto [model, r] = fit_gbdt(data, gbdt);
      document.model = std::move(model);
      report = std::move(r);
    }
    for (const auto& d : catalog.domains()) {
      document.domain_names.push_back(d.name);
    }
    document.target_metric = fit_target;
    document.seed = fit_seed;
    save_model(fit_out, document);
    std::cout << "fit " << fit_family << " on " << data.run_count()
              << " runs, training mse " << format_double(report.training_mse);
    if (!report.cv_scores.empty()) {
      double best_penalty = 0.0;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& [penalty, score] : report.cv_scores) {
        if (score < best) {
          best = score;
          best_penalty = penalty;
        }
      }
      std::cout << ", cv penalty " << format_double(best_penalty);
    }
    std::cout << " -> " << fit_out << "\n";
  });

  // --- simulate ---
  auto* sim_cmd =
      app.add_subcommand("simulate", "Rank sampled candidates under a model");
  std::string sim_model, sim_catalog, sim_out = "final_mixture.json",
                                      sim_ranking_out;
  std::size_t sim_candidates = 1'000'000, sim_top_k = 100;
  std::string sim_objective = "min";
  std::uint64_t sim_seed = 0;
  unsigned sim_threads = 1;
  bool sim_weighted = false;
  double sim_mult_low = 0.1, sim_mult_high = 5.0, sim_floor = 0.0;
  sim_cmd->add_option("--model", sim_model, "Model JSON path")->required();
  sim_cmd->add_option("--catalog", sim_catalog, "Catalog JSON path");
  sim_cmd->add_option("--candidates", sim_candidates, "Candidate count");
  sim_cmd->add_option("--top-k", sim_top_k, "Mixtures averaged into the result");
  sim_cmd->add_option("--objective", sim_objective, "min | max")
      ->check(CLI::IsMember({"min", "max"}));
  sim_cmd->add_option("--seed", sim_seed, "RNG seed");
  sim_cmd->add_option("--threads", sim_threads, "Worker threads (0 = all)");
  sim_cmd->add_option("--multiplier-low", sim_mult_low, "Dirichlet multiplier lower bound");
  sim_cmd->add_option("--multiplier-high", sim_mult_high, "Dirichlet multiplier upper bound");
  sim_cmd->add_option("--min-weight-floor", sim_floor,
                      "Clamp weights below this to zero");
  sim_cmd->add_flag("--weighted-average", sim_weighted,
                    "Prediction-weighted top-k average");
  sim_cmd->add_option("--out", sim_out, "Final mixture JSON path");
  sim_cmd->add_option("--ranking-out", sim_ranking_out, "Top-k ranking CSV");
  sim_cmd->callback([&] {
    const DomainCatalog catalog = catalog_from_option(sim_catalog);
    const ModelDocument document = load_model(sim_model);
    if (!document.domain_names.empty() &&
        document.domain_names.size() != catalog.size()) {
      throw DimensionMismatchError(
          "model was fitted on " + std::to_string(document.domain_names.size()) +
          " domains, catalog has " + std::to_string(catalog.size()));
    }
    SimulationConfig config;
    config.candidate_count = sim_candidates;
    config.top_k = sim_top_k;
    config.objective =
        sim_objective == "max" ? Objective::kMaximize : Objective::kMinimize;
    config.threads = sim_threads;
    config.prediction_weighted_average = sim_weighted;
    config.sampler = SamplerConfig{token_distribution(catalog), sim_mult_low,
                                   sim_mult_high, sim_seed, sim_floor};
    const MixtureRanking ranking = simulate(document.model, config);
    const Provenance provenance{sim_seed, document.config_hash};
    write_output(sim_out, mixture_json(catalog, ranking.best_average, provenance));
    if (!sim_ranking_out.empty()) {
      std::ostringstream out;
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
      write_text_file(sim_ranking_out, out.str());
    }
    std::cerr << "simulated " << sim_candidates << " candidates -> " << sim_out
              << "\n";
  });

  // --- evaluate ---
  auto* eval_cmd =
      app.add_subcommand("evaluate", "Score a model on held-out runs");
  std::string eval_model, eval_holdout, eval_target, eval_catalog;
  bool eval_json_lines = false;
  eval_cmd->add_option("--model", eval_model, "Model JSON path")->required();
  eval_cmd->add_option("--holdout", eval_holdout, "Held-out log CSV")->required();
  eval_cmd->add_option("--target", eval_target,
                       "Target metric (default: the model's)");
  eval_cmd->add_option("--catalog", eval_catalog, "Catalog JSON path");
  eval_cmd->add_flag("--json-lines", eval_json_lines, "Logs are JSON lines");
  eval_cmd->callback([&] {
    const DomainCatalog catalog = catalog_from_option(eval_catalog);
    const ModelDocument document = load_model(eval_model);
    const std::string target =
        eval_target.empty() ? document.target_metric : eval_target;
    const RegressionDataset held_out =
        dataset_from_option(eval_holdout, catalog, target, eval_json_lines);
    const MetricsReport report = evaluate_regressor(document.model, held_out);
    std::cout << "n " << report.n << "\nspearman_rho_pct "
              << percent(report.spearman_rho) << "\npearson_r_pct "
              << percent(report.pearson_r) << "\nmse "
              << format_double(report.mse) << "\n";
  });

  // --- correlate ---
  auto* corr_cmd = app.add_subcommand(
      "correlate", "Pearson grid between two column tables");
  std::string corr_left, corr_right, corr_out;
  bool negate_left = false;
  corr_cmd->add_option("--left", corr_left,
                       "Left table CSV (or fixture:weights / fixture:scores)")
      ->required();
  corr_cmd->add_option("--right", corr_right, "Right table CSV")->required();
  corr_cmd->add_flag("--negate-left", negate_left,
                     "Negate left columns first (loss -> goodness)");
  corr_cmd->add_option("--out", corr_out, "Output CSV (default stdout)");
  corr_cmd->callback([&] {
    const LabeledTable left = table_from_spec(corr_left);
    const LabeledTable right = table_from_spec(corr_right);
    const CorrelationMatrix matrix = correlate_tables(left, right, negate_left);
    write_output(corr_out, correlation_csv(matrix));
  });

  // --- bench ---
  auto* bench_cmd = app.add_subcommand(
      "bench", "Rank-prediction benchmark on a synthetic surface");
  std::string bench_surface = "interaction_heavy", bench_out;
  std::vector<std::size_t> bench_counts{64, 128, 256, 512};
  std::size_t bench_held_out = 256;
  std::uint64_t bench_seed = 0;
  std::size_t bench_iterations = 1000;
  bench_cmd->add_option("--surface", bench_surface,
                        "linear | log_bend | interaction_heavy");
  bench_cmd->add_option("--train-counts", bench_counts, "Proxy-run counts");
  bench_cmd->add_option("--held-out", bench_held_out, "Held-out mixtures");
  bench_cmd->add_option("--seed", bench_seed, "RNG seed");
  bench_cmd->add_option("--iterations", bench_iterations,
                        "Boosting iterations for the tree family");
  bench_cmd->add_option("--out", bench_out, "Output CSV (default stdout)");
  bench_cmd->callback([&] {
    const SyntheticSurface surface = benchmark_surface(bench_surface);
    BenchmarkParams params = default_benchmark_params(surface);
    params.train_counts = bench_counts;
    params.held_out_count = bench_held_out;
    params.gbdt.iterations = bench_iterations;
    const auto rows = run_rank_benchmark(surface, params, bench_seed);
    std::ostringstream out;
    out << "train_count,family,spearman_rho\n";
    for (const auto& row : rows) {
      out << row.train_count << ',' << row.family << ','
          << format_double(row.spearman_rho) << '\n';
    }
    write_output(bench_out, out.str());
  });

  // --- run ---
  auto* run_cmd =
      app.add_subcommand("run", "Full pipeline: sample, fit, simulate, emit");
  std::string run_config, run_output_dir;
  run_cmd->add_option("--config", run_config, "Pipeline config JSON")->required();
  run_cmd->add_option("--output-dir", run_output_dir, "Override output directory");
  run_cmd->callback([&] {
    PipelineConfig config = load_pipeline_config(run_config);
    if (!run_output_dir.empty()) config.output_dir = run_output_dir;
    const PipelineResult result = run_pipeline(config);
    std::cout << "final mixture -> " << result.final_mixture_path.string()
              << "\nconfig hash " << result.config_hash << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const datamix::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const datamix::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const datamix::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
