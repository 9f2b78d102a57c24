// SPDX-License-Identifier: Apache-2.0

#include "chshkit/io.hpp"

#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "chshkit/errors.hpp"
#include "json.hpp"

namespace chshkit {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_sequences_csv(std::ostream& out, const NamedSequences& seqs) {
  if (seqs.names.size() != seqs.columns.size() || seqs.columns.empty()) {
    throw ShapeError("write_sequences_csv: one name per column required");
  }
  const std::size_t n = seqs.columns.front().size();
  for (const auto& c : seqs.columns) {
    if (c.size() != n) {
      throw ShapeError("write_sequences_csv: columns differ in length");
    }
  }
  std::string buf;
  for (std::size_t j = 0; j < seqs.names.size(); ++j) {
    buf += (j ? "," : "") + seqs.names[j];
  }
  buf += '\n';
  out << buf;
  buf.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < seqs.columns.size(); ++j) {
      if (j) {
        buf += ',';
      }
      buf += seqs.columns[j][i] > 0 ? "+1" : "-1";
    }
    buf += '\n';
    if (buf.size() > (1u << 16)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

void write_pair_csv(std::ostream& out, const SequencePair& pair) {
  write_sequences_csv(out, NamedSequences{{"a", "b"}, {pair.a, pair.b}});
}

void write_octet_csv(std::ostream& out, const OctetSequences& octet) {
  write_sequences_csv(out, NamedSequences{{"a_oo", "b_oo", "a_bo", "b_ob"},
                                          {octet.a_oo(), octet.b_oo(),
                                           octet.a_bo(), octet.b_ob()}});
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream row(line);
  while (std::getline(row, cell, ',')) {
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') {
    cells.emplace_back();
  }
  return cells;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
}

}  // namespace

NamedSequences read_sequences_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError("sequence CSV: missing header row");
  }
  strip_cr(line);
  NamedSequences out;
  out.names = split_row(line);
  if (out.names.empty()) {
    throw FormatError("sequence CSV: empty header row");
  }
  std::vector<std::vector<std::int8_t>> cols(out.names.size());
  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    strip_cr(line);
    if (line.empty()) {
      continue;
    }
    const auto cells = split_row(line);
    if (cells.size() != cols.size()) {
      throw FormatError("sequence CSV: row " + std::to_string(row_no) + " has " +
                        std::to_string(cells.size()) + " cells, expected " +
                        std::to_string(cols.size()));
    }
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (cells[j] == "+1") {
        cols[j].push_back(1);
      } else if (cells[j] == "-1") {
        cols[j].push_back(-1);
      } else {
        throw FormatError("sequence CSV: row " + std::to_string(row_no) +
                          " has cell '" + cells[j] + "', expected +1 or -1");
      }
    }
  }
  if (cols.front().empty()) {
    throw FormatError("sequence CSV: no data rows");
  }
  for (auto& c : cols) {
    out.columns.emplace_back(std::move(c));
  }
  return out;
}

void write_band_map_csv(std::ostream& out, const std::vector<BandRow>& rows) {
  out << "theta1,theta2,theta3,lo,hi,width\n";
  for (const auto& r : rows) {
    out << format_double(r.theta.theta1()) << ',' << format_double(r.theta.theta2())
        << ',' << format_double(r.theta.theta3()) << ',' << format_double(r.band.lo())
        << ',' << format_double(r.band.hi()) << ',' << format_double(r.band.width())
        << '\n';
  }
}

F4Candidate parse_grid_candidate(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("grid candidate: ") + e.what());
  }
  if (!doc.is_object()) {
    throw FormatError("grid candidate: document must be an object");
  }
  if (!doc.contains("kind") || doc["kind"] != "grid") {
    throw FormatError("grid candidate: field \"kind\" must be \"grid\"");
  }
  if (!doc.contains("resolution") || !doc["resolution"].is_number_integer()) {
    throw FormatError("grid candidate: integer field \"resolution\" is required");
  }
  if (!doc.contains("values") || !doc["values"].is_array()) {
    throw FormatError("grid candidate: array field \"values\" is required");
  }
  GridPayload payload;
  payload.resolution = doc["resolution"].get<int>();
  payload.values.reserve(doc["values"].size());
  for (const auto& v : doc["values"]) {
    if (!v.is_number()) {
      throw FormatError("grid candidate: \"values\" must hold numbers only");
    }
    payload.values.push_back(v.get<double>());
  }
  std::string name = "grid";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw FormatError("grid candidate: \"name\" must be a string");
    }
    name = doc["name"].get<std::string>();
  }
  return F4Candidate::grid(std::move(payload), std::move(name));
}

F4Candidate read_grid_candidate(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  return parse_grid_candidate(text);
}

std::string serialize_grid_candidate(const GridPayload& payload,
                                     const std::string& name) {
  std::string out = "{\"kind\":\"grid\",\"name\":";
  out += nlohmann::json(name).dump();
  out += ",\"resolution\":" + std::to_string(payload.resolution) + ",\"values\":[";
  for (std::size_t i = 0; i < payload.values.size(); ++i) {
    if (i) {
      out += ',';
    }
    out += format_double(payload.values[i]);
  }
  out += "]}\n";
  return out;
}

}  // namespace chshkit
