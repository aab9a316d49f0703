#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "linstrand/clutter.hpp"
#include "linstrand/error.hpp"

namespace linstrand {

// Instance files are JSON objects with either
//   "parts": [[names...], ...] and "edges": [[names...], ...]
// or
//   "points": [[label, ...], ...]   (one coordinate label per factor)
// or, for an unpartitioned clutter,
//   "edges" with an optional "vertices" list.
// File order of the names defines the vertex order.
namespace detail {

inline std::vector<std::string> string_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError(std::string(what) + " must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline std::string coordinate_label(const nlohmann::json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

}  // namespace detail

inline Clutter parse_instance(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("instance: top level must be an object");
  try {
    if (doc.contains("points")) {
      if (doc.contains("parts") || doc.contains("edges") || doc.contains("vertices")) {
        throw ParseError("instance: 'points' excludes 'parts', 'edges' and 'vertices'");
      }
      const auto& pts = doc.at("points");
      if (!pts.is_array()) throw ParseError("instance: 'points' must be an array");
      std::vector<std::vector<std::string>> points;
      for (const auto& p : pts) {
        if (!p.is_array()) throw ParseError("instance: every point must be an array");
        std::vector<std::string> coords;
        for (const auto& x : p) coords.push_back(detail::coordinate_label(x));
        points.push_back(std::move(coords));
      }
      return from_point_configuration(points);
    }

    if (!doc.contains("edges")) throw ParseError("instance: missing 'edges'");
    std::vector<std::vector<std::string>> edge_names;
    if (!doc.at("edges").is_array()) throw ParseError("instance: 'edges' must be an array");
    for (const auto& e : doc.at("edges")) edge_names.push_back(detail::string_list(e, "an edge"));

    VertexTable table;
    if (doc.contains("parts")) {
      if (doc.contains("vertices")) throw ParseError("instance: 'parts' excludes 'vertices'");
      std::vector<std::vector<std::string>> parts;
      if (!doc.at("parts").is_array()) throw ParseError("instance: 'parts' must be an array");
      for (const auto& p : doc.at("parts")) parts.push_back(detail::string_list(p, "a part"));
      table = VertexTable::partitioned(parts);
    } else if (doc.contains("vertices")) {
      table = VertexTable::unpartitioned(detail::string_list(doc.at("vertices"), "'vertices'"));
    } else {
      std::vector<std::string> names;
      for (const auto& e : edge_names) {
        for (const auto& n : e) {
          if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
        }
      }
      table = VertexTable::unpartitioned(names);
    }

    std::vector<VertexSet> edges;
    for (const auto& e : edge_names) {
      VertexSet s;
      for (const auto& name : e) {
        auto id = table.find(name);
        if (!id) throw ParseError("instance: unknown vertex '" + name + "'");
        if (s.contains(*id)) throw ParseError("instance: vertex '" + name + "' repeated in an edge");
        s = s.with(*id);
      }
      edges.push_back(s);
    }
    return Clutter(std::move(table), std::move(edges));
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("instance: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

inline nlohmann::json serialize_instance(const Clutter& c) {
  nlohmann::json doc = nlohmann::json::object();
  const VertexTable& table = c.table();
  if (table.has_partition()) {
    nlohmann::json parts = nlohmann::json::array();
    for (VertexSet p : table.part_sets()) parts.push_back(table.names(p));
    doc["parts"] = std::move(parts);
  } else {
    doc["vertices"] = table.names(table.all());
  }
  nlohmann::json edges = nlohmann::json::array();
  for (VertexSet e : c.edges()) edges.push_back(table.names(e));
  doc["edges"] = std::move(edges);
  return doc;
}

inline Clutter parse_instance_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("instance: invalid JSON: ") + e.what());
  }
  return parse_instance(doc);
}

inline Clutter read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

}  // namespace linstrand
