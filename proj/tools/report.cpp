// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <algorithm>
#include <cmath>

#include "chshkit/io.hpp"

namespace chshkit::cli {

namespace {

void emit(const nlohmann::ordered_json& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) {
          out += ",\n";
        }
        first = false;
        out += pad + nlohmann::json(key).dump() + ": ";
        emit(item, depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(v.begin(), v.end(), [](const auto& e) {
        return !e.is_structured();
      });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) {
          out += flat ? ", " : ",\n";
        }
        first = false;
        if (!flat) {
          out += pad;
        }
        emit(item, depth + 1, out);
      }
      out += flat ? "]" : "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::string to_report_text(const nlohmann::ordered_json& doc) {
  std::string out;
  emit(doc, 0, out);
  out += '\n';
  return out;
}

}  // namespace chshkit::cli
