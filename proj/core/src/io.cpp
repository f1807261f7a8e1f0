#include "lssd/io.hpp"

#include <limits>
#include <sstream>

#include "json.hpp"

namespace lssd {

namespace {

using json = nlohmann::ordered_json;

long long to_ll(const Int& x, const char* what) {
  if (x > std::numeric_limits<long long>::max() ||
      x < std::numeric_limits<long long>::min())
    throw io_error(std::string(what) + " exceeds the JSON integer range");
  return static_cast<long long>(x);
}

long long require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw io_error(std::string("document needs integer field '") + field +
                   "'");
  return j[field].get<long long>();
}

std::string block_key(int i, int j) {
  return std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

std::string lssd_to_json(const LssdGraph& g, const std::string& metadata) {
  json meta;
  try {
    meta = json::parse(metadata);
  } catch (const json::exception& e) {
    throw io_error(std::string("metadata is not valid JSON: ") + e.what());
  }
  if (!meta.is_object()) throw io_error("metadata must be a JSON object");

  json doc;
  doc["v"] = to_ll(g.params.v, "v");
  doc["k"] = to_ll(g.params.k, "k");
  doc["lambda"] = to_ll(g.params.lambda, "lambda");
  doc["w"] = g.w;
  json blocks = json::object();
  for (const auto& [key, b] : g.blocks) {
    json rows = json::array();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < b.cols(); ++c)
        row.push_back(b.get(r, c) ? 1 : 0);
      rows.push_back(std::move(row));
    }
    blocks[block_key(key.first, key.second)] = std::move(rows);
  }
  doc["blocks"] = std::move(blocks);
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

LssdGraph lssd_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw io_error(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw io_error("document must be a JSON object");

  long long v = require_int(doc, "v");
  long long k = require_int(doc, "k");
  long long lambda = require_int(doc, "lambda");
  long long w = require_int(doc, "w");
  if (w < 2 || w > 10000) throw io_error("w out of range");
  if (v < 2 || v > 1000000) throw io_error("v out of range");

  LssdGraph g;
  g.w = static_cast<int>(w);
  g.params = validate_params(Int(v), Int(k), Int(lambda));

  if (!doc.contains("blocks") || !doc["blocks"].is_object())
    throw io_error("document needs object field 'blocks'");
  const json& blocks = doc["blocks"];
  std::size_t expected = static_cast<std::size_t>(w) *
                         static_cast<std::size_t>(w - 1) / 2;
  if (blocks.size() != expected)
    throw io_error("blocks holds " + std::to_string(blocks.size()) +
                   " entries, expected " + std::to_string(expected) +
                   " for w = " + std::to_string(w));

  const std::size_t sv = static_cast<std::size_t>(v);
  for (int i = 1; i <= g.w; ++i)
    for (int j = i + 1; j <= g.w; ++j) {
      std::string key = block_key(i, j);
      if (!blocks.contains(key))
        throw io_error("blocks[" + key + "] is missing");
      const json& rows = blocks[key];
      if (!rows.is_array() || rows.size() != sv)
        throw io_error("blocks[" + key + "] must be a " + std::to_string(v) +
                       "-row array");
      BinMatrix b(sv, sv);
      for (std::size_t r = 0; r < sv; ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != sv)
          throw io_error("blocks[" + key + "][" + std::to_string(r) +
                         "] must have " + std::to_string(v) + " entries");
        for (std::size_t c = 0; c < sv; ++c) {
          const json& e = row[c];
          if (!e.is_number_integer() ||
              (e.get<long long>() != 0 && e.get<long long>() != 1))
            throw io_error("blocks[" + key + "][" + std::to_string(r) + "][" +
                           std::to_string(c) + "] = " + e.dump() +
                           " is not 0 or 1");
          if (e.get<long long>() == 1) b.set(r, c, true);
        }
      }
      g.blocks.emplace(std::make_pair(i, j), std::move(b));
    }
  return g;
}

std::string gram_to_json(const ScaledGram& g) {
  json doc;
  doc["dim"] = g.dim;
  doc["scale"] = to_ll(g.scale, "scale");
  json entries = json::array();
  for (std::size_t i = 0; i < g.entries.rows(); ++i)
    for (std::size_t j = 0; j < g.entries.cols(); ++j)
      entries.push_back(to_ll(g.entries(i, j), "entry"));
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string hadamard_to_text(const Hadamard& h) {
  std::string out = std::to_string(h.n) + "\n";
  for (int i = 0; i < h.n; ++i) {
    for (int j = 0; j < h.n; ++j) out += h.at(i, j) > 0 ? '+' : '-';
    out += '\n';
  }
  return out;
}

Hadamard hadamard_from_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n < 1 || n > 100000)
    throw io_error("first line must be the order");
  Hadamard h(static_cast<int>(n));
  std::string row;
  std::getline(in, row);
  for (long long i = 0; i < n; ++i) {
    if (!std::getline(in, row))
      throw io_error("row " + std::to_string(i + 1) + " is missing");
    while (!row.empty() && (row.back() == '\r' || row.back() == ' '))
      row.pop_back();
    if (static_cast<long long>(row.size()) != n)
      throw io_error("row " + std::to_string(i + 1) + " has " +
                     std::to_string(row.size()) + " symbols, expected " +
                     std::to_string(n));
    for (long long j = 0; j < n; ++j) {
      char c = row[static_cast<std::size_t>(j)];
      if (c != '+' && c != '-')
        throw io_error("row " + std::to_string(i + 1) + " holds '" +
                       std::string(1, c) + "', expected '+' or '-'");
      h.at(static_cast<int>(i), static_cast<int>(j)) = c == '+' ? 1 : -1;
    }
  }
  return h;
}

std::string oa_to_text(const OrthArray& o) {
  std::string out = std::to_string(o.n) + " " + std::to_string(o.cols) + "\n";
  for (int r = 0; r < o.rows(); ++r) {
    for (int c = 0; c < o.cols; ++c) {
      if (c) out += ' ';
      out += std::to_string(o.at(r, c));
    }
    out += '\n';
  }
  return out;
}

OrthArray oa_from_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, cols = 0;
  if (!(in >> n >> cols) || n < 1 || cols < 1 || n > 10000 || cols > 10000)
    throw io_error("first line must be 'n cols'");
  OrthArray o;
  o.n = static_cast<int>(n);
  o.cols = static_cast<int>(cols);
  o.cells.resize(static_cast<std::size_t>(o.rows()) *
                 static_cast<std::size_t>(o.cols));
  for (int r = 0; r < o.rows(); ++r)
    for (int c = 0; c < o.cols; ++c) {
      long long x = 0;
      if (!(in >> x))
        throw io_error("cell (" + std::to_string(r) + "," +
                       std::to_string(c) + ") is missing or not an integer");
      if (x < 1 || x > n)
        throw io_error("cell (" + std::to_string(r) + "," +
                       std::to_string(c) + ") = " + std::to_string(x) +
                       " is outside 1.." + std::to_string(n));
      o.at(r, c) = static_cast<int>(x);
    }
  long long extra = 0;
  if (in >> extra) throw io_error("trailing data after the last row");
  return o;
}

}  // namespace lssd
