#include "sumeval/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace sumeval::eval {
namespace {

std::string fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

double round2(double value) { return std::round(value * 100.0) / 100.0; }

// An empty report still renders the full header.
std::vector<MetricKind> layout_columns(const MetricReport& report) {
  if (report.systems.empty()) return {std::begin(kAllMetrics), std::end(kAllMetrics)};
  return report.columns();
}

std::vector<std::string> header_cells(const std::vector<MetricKind>& columns) {
  std::vector<std::string> cells{"Approach"};
  for (MetricKind k : columns) cells.emplace_back(display_name(k));
  return cells;
}

std::vector<std::vector<std::string>> f1_rows(const MetricReport& report,
                                              const std::vector<MetricKind>& columns) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& system : report.systems) {
    std::vector<std::string> cells{system.name};
    for (MetricKind k : columns) {
      const MetricResult* m = system.find(k);
      cells.push_back(m ? fixed2(m->f1) : "-");
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string render_table(const MetricReport& report) {
  const auto columns = layout_columns(report);
  const auto header = header_cells(columns);
  const auto rows = f1_rows(report, columns);

  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      // Count code points, not bytes, so Greek names line up.
      std::size_t n = 0;
      for (unsigned char ch : cells[c]) n += (ch & 0xC0) != 0x80;
      width[c] = std::max(width[c], n);
    }
  };
  measure(header);
  for (const auto& r : rows) measure(r);

  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::size_t n = 0;
      for (unsigned char ch : cells[c]) n += (ch & 0xC0) != 0x80;
      const std::string pad(width[c] - n, ' ');
      if (c > 0) out += "  ";
      out += c == 0 ? cells[c] + pad : pad + cells[c];
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };

  std::string out = line(header);
  std::size_t total = 0;
  for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c > 0 ? 2 : 0);
  out += std::string(total, '-') + "\n";
  for (const auto& r : rows) out += line(r);
  return out;
}

std::string render_markdown(const MetricReport& report) {
  const auto columns = layout_columns(report);
  auto line = [](const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    return out + "\n";
  };
  std::string out = line(header_cells(columns));
  out += "| --- |";
  for (std::size_t i = 0; i < columns.size(); ++i) out += " ---: |";
  out += "\n";
  for (const auto& r : f1_rows(report, columns)) out += line(r);
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const MetricReport& report) {
  std::string out = "system,metric,precision,recall,f1,pairs,missing\n";
  for (const auto& system : report.systems) {
    for (MetricKind k : kAllMetrics) {
      const MetricResult* m = system.find(k);
      if (!m) continue;
      std::string missing;
      for (const auto& id : m->missing) {
        if (!missing.empty()) missing += ';';
        missing += id;
      }
      out += csv_escape(system.name) + "," + std::string(to_string(k)) + "," +
             fixed2(m->precision) + "," + fixed2(m->recall) + "," + fixed2(m->f1) + "," +
             std::to_string(m->pairs) + "," + csv_escape(missing) + "\n";
    }
  }
  return out;
}

std::string render_json(const MetricReport& report) {
  using nlohmann::ordered_json;
  ordered_json systems = ordered_json::array();
  for (const auto& system : report.systems) {
    ordered_json metrics = ordered_json::object();
    for (MetricKind k : kAllMetrics) {
      const MetricResult* m = system.find(k);
      if (!m) continue;
      metrics[std::string(to_string(k))] = {
          {"p", round2(m->precision)}, {"r", round2(m->recall)}, {"f1", round2(m->f1)},
          {"pairs", m->pairs},         {"missing", m->missing}};
    }
    systems.push_back({{"name", system.name}, {"metrics", std::move(metrics)}});
  }
  ordered_json root = {{"systems", std::move(systems)}};
  return root.dump(2) + "\n";
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "markdown") return ReportFormat::Markdown;
  return std::nullopt;
}

std::string render_report(const MetricReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table: return render_table(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Markdown: return render_markdown(report);
  }
  return render_table(report);
}

}  // namespace sumeval::eval
