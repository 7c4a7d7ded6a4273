#pragma once

#include <string>
#include <vector>

namespace wellspring::cli {

struct Verdict {
  bool pass = true;
  double worst = 0.0;      // worst-case residual seen by the suite
  double tolerance = 0.0;  // threshold the worst case was held to
  std::string note;
};

// One suite's numeric table plus the metadata needed to reproduce it.
// Deterministic for a fixed config except for the timestamp.
struct Report {
  std::string suite;
  std::string version;
  std::string timestamp;    // ISO-8601 UTC
  std::string config_json;  // config echo, compact JSON
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  Verdict verdict;
};

// Current time as ISO-8601 UTC ("2026-01-02T03:04:05Z").
std::string timestamp_utc();

// Shortest text that round-trips the double ("%.17g").
std::string format_double(double x);

// '#'-commented metadata, header row, one data row per line, trailing
// verdict comment.  '.' decimal, LF endings.
std::string to_csv(const Report& r);

// Same content as a JSON document; the config echo is embedded as an object.
std::string to_json_text(const Report& r);

}  // namespace wellspring::cli
