#pragma once

// Instance files (JSON, UTF-8). Three forms:
//   {"name", "n", "points": [[x, y], ...], "stove_times": [...], "speed"}
//   {"name", "n", "matrix": [[...], ...]}                      (used as-is)
//   {"name", "n", "stove_times": [...], "clean": [...], "prep": [...]}
// The writer emits keys in the order shown.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "cooksched/error.hpp"
#include "cooksched/instance.hpp"

namespace cooksched {

using ordered_json = nlohmann::ordered_json;

inline ordered_json instance_to_json(const Instance& inst) {
  ordered_json j;
  j["name"] = inst.name;
  j["n"] = inst.size();
  if (const auto* g = inst.geometry()) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : g->points) pts.push_back({p.x, p.y});
    j["points"] = std::move(pts);
    j["stove_times"] = inst.stove_times;
    j["speed"] = g->speed;
  } else if (const auto* k = inst.kitchen()) {
    j["stove_times"] = inst.stove_times;
    j["clean"] = k->clean;
    j["prep"] = k->prep;
  } else {
    const auto& m = *inst.explicit_matrix();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto r = m.row(i);
      rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    j["matrix"] = std::move(rows);
    if (!inst.stove_times.empty()) j["stove_times"] = inst.stove_times;
  }
  return j;
}

template <typename Json>
Instance instance_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ValidationError("instance file must contain a JSON object");
    const bool has_points = j.contains("points");
    const bool has_matrix = j.contains("matrix");
    const bool has_kitchen = j.contains("clean") || j.contains("prep");
    if (static_cast<int>(has_points) + static_cast<int>(has_matrix) + static_cast<int>(has_kitchen) != 1) {
      throw ValidationError("instance must provide exactly one of points, matrix, or clean/prep");
    }
    Instance inst;
    inst.name = j.value("name", std::string{});
    if (j.contains("stove_times")) inst.stove_times = j.at("stove_times").template get<std::vector<double>>();

    if (has_points) {
      Geometry g;
      for (const auto& p : j.at("points")) {
        if (!p.is_array() || p.size() != 2) throw ValidationError("each point must be [x, y]");
        g.points.push_back({p[0].template get<double>(), p[1].template get<double>()});
      }
      if (!j.contains("speed")) throw ConfigError("instance with points needs a speed");
      g.speed = j.at("speed").template get<double>();
      inst.source = std::move(g);
    } else if (has_matrix) {
      inst.source = CostMatrix::from_rows(j.at("matrix").template get<std::vector<std::vector<double>>>());
    } else {
      KitchenTable k;
      k.clean = j.at("clean").template get<std::vector<double>>();
      k.prep = j.at("prep").template get<std::vector<double>>();
      inst.source = std::move(k);
    }
    if (j.contains("n") && j.at("n").template get<std::size_t>() != inst.size()) {
      throw ValidationError("instance '" + inst.name + "': n = " + std::to_string(j.at("n").template get<std::size_t>()) +
                            " but data has " + std::to_string(inst.size()) + " orders");
    }
    validate(inst);
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed instance JSON: ") + e.what());
  }
}

inline Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read instance file " + path.string());
  try {
    Instance inst = instance_from_json(nlohmann::json::parse(in));
    if (inst.name.empty()) inst.name = path.stem().string();
    return inst;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_instance(const std::filesystem::path& path, const Instance& inst) {
  write_text(path, instance_to_json(inst).dump(2) + "\n");
}

/// Shortest decimal text that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

inline double parse_double(std::string_view text) {
  double v = 0.0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
    throw ValidationError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace cooksched
