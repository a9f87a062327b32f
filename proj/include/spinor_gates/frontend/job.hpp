#pragma once

// Extraction job files:
//   { "p": 4, "alphas": [[re, im], ...] | "uniform", "target": "0101",
//     "iterations": 3 }            iterations is optional

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "spinor_gates/extraction/extraction.hpp"
#include "spinor_gates/frontend/parse_error.hpp"

namespace spinor_gates {

struct ExtractionJob {
  int p = 0;
  Amplitudes alphas;
  std::string target;
  std::optional<int> iterations;

  std::size_t target_index() const { return bitstring_index(target); }
};

namespace detail {

inline ParseError json_error_at(std::string_view text, std::size_t byte, const std::string& msg) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return ParseError(msg, line, column);
}

}  // namespace detail

/// Validates and converts a job document. Schema errors are reported as
/// ParseError at line 1, column 1 with the offending field named.
inline ExtractionJob parse_job(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw detail::json_error_at(text, e.byte, "invalid JSON");
  }
  auto schema = [](const std::string& msg) { return ParseError("job: " + msg, 1, 1); };
  if (!doc.is_object()) throw schema("top level must be an object");

  ExtractionJob job;
  if (!doc.contains("p") || !doc["p"].is_number_integer()) throw schema("'p' must be an integer");
  job.p = doc["p"].get<int>();
  if (job.p < 1 || job.p > kMaxQubits) throw schema("'p' out of range 1.." + std::to_string(kMaxQubits));
  const std::size_t dim = std::size_t{1} << job.p;

  if (!doc.contains("alphas")) throw schema("missing 'alphas'");
  const auto& alphas = doc["alphas"];
  if (alphas.is_string()) {
    if (alphas.get<std::string>() != "uniform") throw schema("'alphas' string must be \"uniform\"");
    job.alphas = uniform_amplitudes(job.p);
  } else if (alphas.is_array()) {
    if (alphas.size() != dim) throw schema("'alphas' must have 2^p = " + std::to_string(dim) + " entries");
    job.alphas.reserve(dim);
    for (const auto& a : alphas) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
        throw schema("each alpha must be [re, im]");
      job.alphas.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
  } else {
    throw schema("'alphas' must be an array or \"uniform\"");
  }

  if (!doc.contains("target") || !doc["target"].is_string()) throw schema("'target' must be a bitstring");
  job.target = doc["target"].get<std::string>();
  if (static_cast<int>(job.target.size()) != job.p ||
      job.target.find_first_not_of("01") != std::string::npos)
    throw schema("'target' must be a bitstring of length p");

  if (doc.contains("iterations") && !doc["iterations"].is_null()) {
    if (!doc["iterations"].is_number_integer() || doc["iterations"].get<int>() < 0)
      throw schema("'iterations' must be a non-negative integer");
    job.iterations = doc["iterations"].get<int>();
  }
  return job;
}

}  // namespace spinor_gates
