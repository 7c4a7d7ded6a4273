#include "wellspring/config.hpp"

#include <cmath>
#include <utility>

#include <json.hpp>

#include "wellspring/packets.hpp"

namespace wellspring::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw config_error(msg); }

void reject_unknown_keys(const json& obj, const std::string& scope,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) {
        known = true;
        break;
      }
    if (!known)
      fail("unknown config key \"" + (scope.empty() ? "" : scope + ".") +
           item.key() + "\"");
  }
}

double require_number(const json& v, const std::string& name) {
  if (!v.is_number()) fail("config value \"" + name + "\" must be a number");
  return v.get<double>();
}

double require_positive(const json& v, const std::string& name) {
  const double x = require_number(v, name);
  if (!(x > 0.0) || !std::isfinite(x))
    fail("config value \"" + name + "\" must be positive and finite");
  return x;
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  cfg.packet = {{1.0, 0.0}, {1.0, 0.0}};
  cfg.times.t_end = packets::beat_period(cfg.well);
  cfg.grid_h = cfg.well.L / 2000.0;
  return cfg;
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed config JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("config document must be a JSON object");
  reject_unknown_keys(doc, "",
                      {"well", "packet", "times", "grid", "tolerances"});

  RunConfig cfg;
  if (doc.contains("well")) {
    const json& w = doc["well"];
    if (!w.is_object()) fail("config value \"well\" must be an object");
    reject_unknown_keys(w, "well", {"L", "m", "hbar"});
    if (w.contains("L")) cfg.well.L = require_positive(w["L"], "well.L");
    if (w.contains("m")) cfg.well.m = require_positive(w["m"], "well.m");
    if (w.contains("hbar"))
      cfg.well.hbar = require_positive(w["hbar"], "well.hbar");
  }

  if (doc.contains("packet")) {
    const json& p = doc["packet"];
    if (!p.is_array() || p.empty())
      fail("config value \"packet\" must be a non-empty array of [re, im] "
           "pairs");
    for (std::size_t i = 0; i < p.size(); ++i) {
      const json& entry = p[i];
      const std::string name = "packet[" + std::to_string(i) + "]";
      if (!entry.is_array() || entry.size() != 2)
        fail("config value \"" + name + "\" must be an [re, im] pair");
      cfg.packet.emplace_back(require_number(entry[0], name + "[0]"),
                              require_number(entry[1], name + "[1]"));
    }
    double norm2 = 0.0;
    for (const auto& a : cfg.packet) norm2 += std::norm(a);
    if (!(norm2 > 0.0))
      fail("config value \"packet\" must have at least one nonzero "
           "coefficient");
  } else {
    cfg.packet = {{1.0, 0.0}, {1.0, 0.0}};
  }

  bool t_end_given = false;
  if (doc.contains("times")) {
    const json& t = doc["times"];
    if (!t.is_object()) fail("config value \"times\" must be an object");
    reject_unknown_keys(t, "times", {"t_start", "t_end", "samples"});
    if (t.contains("t_start"))
      cfg.times.t_start = require_number(t["t_start"], "times.t_start");
    if (t.contains("t_end")) {
      cfg.times.t_end = require_number(t["t_end"], "times.t_end");
      t_end_given = true;
    }
    if (t.contains("samples")) {
      const json& s = t["samples"];
      if (!s.is_number_integer() || s.get<long long>() < 1)
        fail("config value \"times.samples\" must be a positive integer");
      cfg.times.samples = static_cast<unsigned>(s.get<long long>());
    }
  }
  if (!t_end_given)
    cfg.times.t_end = cfg.times.t_start + packets::beat_period(cfg.well);
  if (!(cfg.times.t_end > cfg.times.t_start))
    fail("config value \"times.t_end\" must exceed \"times.t_start\"");

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    if (!g.is_object()) fail("config value \"grid\" must be an object");
    reject_unknown_keys(g, "grid", {"h"});
    if (g.contains("h")) cfg.grid_h = require_positive(g["h"], "grid.h");
  }
  if (cfg.grid_h == 0.0) cfg.grid_h = cfg.well.L / 2000.0;

  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) fail("config value \"tolerances\" must be an object");
    reject_unknown_keys(t, "tolerances", {"symbolic", "oracle"});
    if (t.contains("symbolic"))
      cfg.tol_symbolic =
          require_positive(t["symbolic"], "tolerances.symbolic");
    if (t.contains("oracle"))
      cfg.tol_oracle = require_positive(t["oracle"], "tolerances.oracle");
  }
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  json doc;
  doc["well"] = {{"L", cfg.well.L}, {"m", cfg.well.m}, {"hbar", cfg.well.hbar}};
  json packet = json::array();
  for (const auto& a : cfg.packet) packet.push_back({a.real(), a.imag()});
  doc["packet"] = std::move(packet);
  doc["times"] = {{"t_start", cfg.times.t_start},
                  {"t_end", cfg.times.t_end},
                  {"samples", cfg.times.samples}};
  doc["grid"] = {{"h", cfg.grid_h}};
  doc["tolerances"] = {{"symbolic", cfg.tol_symbolic},
                       {"oracle", cfg.tol_oracle}};
  return doc.dump();
}

}  // namespace wellspring::cli
