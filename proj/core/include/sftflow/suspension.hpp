#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "sftflow/intlin.hpp"
#include "sftflow/markov.hpp"

namespace sftflow {

/// Ceiling function depending on the 0th coordinate only: one positive
/// value per state.
class CeilingFunction {
 public:
  explicit CeilingFunction(std::vector<long> values);
  static CeilingFunction constant(std::size_t states, long value);

  std::size_t size() const noexcept { return values_.size(); }
  long operator[](std::size_t j) const { return values_[j]; }
  // Chain length beyond the base vertex: f_j - 1.
  long extra(std::size_t j) const { return values_[j] - 1; }
  long total() const;
  const std::vector<long>& values() const noexcept { return values_; }

  friend bool operator==(const CeilingFunction&, const CeilingFunction&) = default;

 private:
  std::vector<long> values_;
};

/// Discrete suspension A_f. State j becomes the chain j_0 -> ... -> j_{f_j-1};
/// the last vertex of the chain inherits j's out-edges, aimed at the k_0.
/// Vertices are ordered state-major, chain-minor and labelled "j_i".
BinMatrix suspend(const BinMatrix& a, const CeilingFunction& f);

/// Integer cocycle f^n. For n >= 1 `symbols` holds x_0..x_{n-1}; for
/// n <= -1 it holds x_n..x_{-1}. Only the first |n| symbols are read.
Integer cocycle_sum(const CeilingFunction& f, std::span<const std::size_t> symbols,
                    long n);

struct MarkovCeiling {
  BinMatrix matrix;
  CeilingFunction ceiling;
};

/// Recodes a ceiling that depends on a window of k coordinates as one that
/// depends on coordinate 0 of the k-th higher block presentation.
MarkovCeiling reduce_to_markov_ceiling(const BinMatrix& a, std::size_t k,
                                       const std::map<Word, long>& values);

}  // namespace sftflow
