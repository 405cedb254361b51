#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sumeval/evaluator.hpp"

namespace sumeval::eval {

enum class ReportFormat { Table, Csv, Json, Markdown };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Deterministic rendering with values in percent to two decimals. Table
/// and Markdown show macro F1 only, one row per system in report order,
/// columns in ROUGE-1, ROUGE-2, ROUGE-L, BERTScore order. CSV and JSON
/// also carry precision, recall, pair counts and missing ids.
std::string render_report(const MetricReport& report, ReportFormat format);

}  // namespace sumeval::eval
