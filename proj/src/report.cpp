#include "wellspring/report.hpp"

#include <cstdio>
#include <ctime>

#include <json.hpp>

namespace wellspring::cli {

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const Report& r) {
  std::string out;
  out += "# suite: " + r.suite + "\n";
  out += "# version: " + r.version + "\n";
  out += "# generated: " + r.timestamp + "\n";
  out += "# config: " + r.config_json + "\n";
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    if (i) out += ',';
    out += r.columns[i];
  }
  out += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  out += std::string("# verdict: ") + (r.verdict.pass ? "PASS" : "FAIL") +
         " worst=" + format_double(r.verdict.worst) +
         " tolerance=" + format_double(r.verdict.tolerance);
  if (!r.verdict.note.empty()) out += " (" + r.verdict.note + ")";
  out += '\n';
  return out;
}

std::string to_json_text(const Report& r) {
  nlohmann::json doc;
  doc["suite"] = r.suite;
  doc["version"] = r.version;
  doc["generated"] = r.timestamp;
  doc["config"] = nlohmann::json::parse(r.config_json);
  doc["columns"] = r.columns;
  doc["rows"] = r.rows;
  doc["verdict"] = {{"pass", r.verdict.pass},
                    {"worst", r.verdict.worst},
                    {"tolerance", r.verdict.tolerance},
                    {"note", r.verdict.note}};
  return doc.dump(2) + "\n";
}

}  // namespace wellspring::cli
