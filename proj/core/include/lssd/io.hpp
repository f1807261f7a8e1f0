#pragma once

#include <stdexcept>
#include <string>

#include "lssd/geometry.hpp"
#include "lssd/hadamard.hpp"
#include "lssd/linked_system.hpp"

namespace lssd {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON document {v, k, lambda, w, blocks: {"i,j": v x v 01 arrays, 1-based
// i < j}, metadata}.  metadata must serialize a JSON object; it is carried
// on write and ignored on read.
std::string lssd_to_json(const LssdGraph& g,
                         const std::string& metadata = "{}");
LssdGraph lssd_from_json(const std::string& text);

// JSON document {dim, scale, entries} with entries row-major.
std::string gram_to_json(const ScaledGram& g);

// First line the order, then one row per line of '+'/'-'.
std::string hadamard_to_text(const Hadamard& h);
Hadamard hadamard_from_text(const std::string& text);

// First line "n cols", then n^2 rows of space-separated symbols 1..n.
std::string oa_to_text(const OrthArray& o);
OrthArray oa_from_text(const std::string& text);

}  // namespace lssd
