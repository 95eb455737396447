#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "datamix/domain.hpp"
#include "datamix/metrics.hpp"

namespace datamix {

/// The 17-domain catalog this project ships as its default, ordered by
/// corpus size. Token counts are size-proportional proxies (1e9 per GiB of
/// source data), so the token distribution reproduces the corpus ratios.
const DomainCatalog& pile_catalog();

/// Published reference mixtures over the default catalog: "human",
/// "doremi", "pile_cc_only", "regmix". Weights are kept exactly as
/// published (3-decimal vectors; some sum to 0.998).
const Mixture& pile_preset(std::string_view name);
std::vector<std::string> pile_preset_names();

/// The bundled 64-model result table: per-model domain weights and
/// downstream task scores (13 tasks, percentages). Mixtures validate at the
/// published-data tolerance and are not renormalized.
ResultTable load_fixture_result_table();

/// Converts result-table rows into a regression dataset over the default
/// catalog, with every task score exposed as a metric.
RegressionDataset dataset_from_result_table(const ResultTable& table,
                                            const std::string& target_metric);

/// Fixture columns as labeled tables for correlation analysis: the domain
/// weight columns and the task score columns, one row per model.
LabeledTable fixture_weight_columns();
LabeledTable fixture_score_columns();

namespace detail {
extern const char* const kResultTableCsv;
}

}  // namespace datamix
