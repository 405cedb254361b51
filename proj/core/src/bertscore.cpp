#include "sumeval/bertscore.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sumeval/error.hpp"

namespace sumeval::bertscore {
namespace {

using nlohmann::json;

double dot(std::span<const double> u, std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

// Sums after sorting so the result does not depend on row order.
double order_free_mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

std::string at_line(std::size_t line, const std::string& source) {
  return source + ":" + std::to_string(line) + ": ";
}

}  // namespace

EmbeddingMatrix::EmbeddingMatrix(std::string text_id, std::size_t dim)
    : text_id_(std::move(text_id)), dim_(dim) {
  if (dim_ == 0) throw DataError("embedding dimension must be at least 1");
}

EmbeddingMatrix::EmbeddingMatrix(std::string text_id,
                                 std::vector<std::string> token_labels,
                                 const std::vector<std::vector<double>>& rows,
                                 std::size_t dim)
    : text_id_(std::move(text_id)), labels_(std::move(token_labels)), dim_(dim) {
  if (dim_ == 0) throw DataError("embedding dimension must be at least 1");
  if (labels_.size() != rows.size()) {
    throw DataError("'" + text_id_ + "': " + std::to_string(labels_.size()) +
                    " token labels but " + std::to_string(rows.size()) +
                    " vectors");
  }
  values_.reserve(rows.size() * dim_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != dim_) {
      throw DataError("'" + text_id_ + "': vector " + std::to_string(r) +
                      " has length " + std::to_string(row.size()) +
                      ", expected " + std::to_string(dim_));
    }
    double norm_sq = 0.0;
    for (double x : row) {
      if (!std::isfinite(x)) {
        throw DataError("'" + text_id_ + "': vector " + std::to_string(r) +
                        " has a non-finite component");
      }
      norm_sq += x * x;
    }
    if (norm_sq == 0.0) {
      throw DataError("'" + text_id_ + "': vector " + std::to_string(r) +
                      " is the zero vector");
    }
    const double norm = std::sqrt(norm_sq);
    for (double x : row) values_.push_back(x / norm);
  }
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("cosine: dimension mismatch");
  }
  const double nu = std::sqrt(dot(u, u));
  const double nv = std::sqrt(dot(v, v));
  if (nu == 0.0 || nv == 0.0) {
    throw std::invalid_argument("cosine: zero vector");
  }
  return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

Prf greedy_match_score(const EmbeddingMatrix& candidate,
                       const EmbeddingMatrix& reference) {
  if (candidate.dim() != reference.dim()) {
    throw std::invalid_argument(
        "greedy_match_score: dimension mismatch (" +
        std::to_string(candidate.dim()) + " vs " +
        std::to_string(reference.dim()) + ")");
  }
  if (candidate.empty() || reference.empty()) return {};

  const std::size_t m = candidate.rows();
  const std::size_t n = reference.rows();
  constexpr double lowest = -std::numeric_limits<double>::infinity();
  std::vector<double> best_for_candidate(m, lowest);
  std::vector<double> best_for_reference(n, lowest);
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = candidate.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      // Rows are unit length, so the dot product is the cosine.
      const double sim = std::clamp(dot(c, reference.row(j)), -1.0, 1.0);
      best_for_candidate[i] = std::max(best_for_candidate[i], sim);
      best_for_reference[j] = std::max(best_for_reference[j], sim);
    }
  }
  return Prf::from(order_free_mean(std::move(best_for_candidate)),
                   order_free_mean(std::move(best_for_reference)));
}

Prf bertscore_pair(const EmbeddingProvider& provider,
                   std::string_view candidate_id, std::string_view reference_id) {
  return bertscore_pair(provider, candidate_id, provider, reference_id);
}

Prf bertscore_pair(const EmbeddingProvider& candidates,
                   std::string_view candidate_id,
                   const EmbeddingProvider& references,
                   std::string_view reference_id) {
  const EmbeddingMatrix& cand = candidates.lookup(candidate_id);
  const EmbeddingMatrix& ref = references.lookup(reference_id);
  if (cand.dim() != ref.dim()) {
    throw DataError("embedding dimension mismatch: '" + std::string(candidate_id) +
                    "' has " + std::to_string(cand.dim()) + ", '" +
                    std::string(reference_id) + "' has " +
                    std::to_string(ref.dim()));
  }
  return greedy_match_score(cand, ref);
}

EmbeddingStore EmbeddingStore::open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embedding store " + path.string());
  return read(in, path.string());
}

EmbeddingStore EmbeddingStore::read(std::istream& in, std::string source_name) {
  EmbeddingStore store;
  store.source_name_ = std::move(source_name);
  const std::string& src = store.source_name_;

  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(at_line(line_no, src) + "malformed JSON: " + e.what());
    }
    if (!obj.is_object()) {
      throw DataError(at_line(line_no, src) + "expected a JSON object");
    }

    try {
      if (!have_header) {
        const auto& dim = obj.at("dim");
        if (!dim.is_number_integer() || dim.get<long long>() < 1) {
          throw DataError(at_line(line_no, src) + "header 'dim' must be a positive integer");
        }
        store.header_.dim = dim.get<std::size_t>();
        store.header_.model = obj.value("model", std::string{});
        store.header_.normalized = obj.value("normalized", false);
        store.header_.special_tokens_excluded =
            obj.value("special_tokens_excluded", true);
        have_header = true;
        continue;
      }

      auto id = obj.at("id").get<std::string>();
      auto tokens = obj.at("tokens").get<std::vector<std::string>>();
      auto vectors = obj.at("vectors").get<std::vector<std::vector<double>>>();
      if (store.index_.count(id) != 0) {
        throw DataError(at_line(line_no, src) + "duplicate id '" + id + "'");
      }
      EmbeddingMatrix matrix(id, std::move(tokens), vectors, store.header_.dim);
      store.index_.emplace(id, store.matrices_.size());
      store.matrices_.push_back(std::move(matrix));
    } catch (const json::exception& e) {
      throw DataError(at_line(line_no, src) + e.what());
    } catch (const DataError& e) {
      const std::string what = e.what();
      if (what.rfind(src + ":", 0) == 0) throw;
      throw DataError(at_line(line_no, src) + what);
    }
  }
  if (!have_header) {
    throw DataError(src + ": missing header line");
  }
  return store;
}

const EmbeddingMatrix& EmbeddingStore::lookup(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw DataError(source_name_ + ": unknown id '" + std::string(id) + "'");
  }
  return matrices_[it->second];
}

bool EmbeddingStore::contains(std::string_view id) const {
  return index_.count(std::string(id)) != 0;
}

std::string EmbeddingStore::source() const {
  return source_name_ + " (model=" + header_.model + ")";
}

std::vector<std::string> EmbeddingStore::ids() const {
  std::vector<std::string> out;
  out.reserve(matrices_.size());
  for (const auto& m : matrices_) out.push_back(m.text_id());
  return out;
}

}  // namespace sumeval::bertscore
