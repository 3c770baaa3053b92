#include "sftflow/suspension.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "sftflow/errors.hpp"

namespace sftflow {

CeilingFunction::CeilingFunction(std::vector<long> values) : values_(std::move(values)) {
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] < 1) {
      throw PreconditionError("ceiling value for state " + std::to_string(j + 1) +
                              " is " + std::to_string(values_[j]) +
                              "; ceilings must be positive");
    }
  }
}

CeilingFunction CeilingFunction::constant(std::size_t states, long value) {
  return CeilingFunction(std::vector<long>(states, value));
}

long CeilingFunction::total() const {
  return std::accumulate(values_.begin(), values_.end(), 0L);
}

BinMatrix suspend(const BinMatrix& a, const CeilingFunction& f) {
  const std::size_t n = a.size();
  if (f.size() != n) {
    throw DimensionError("suspend: ceiling has " + std::to_string(f.size()) +
                         " values for " + std::to_string(n) + " states");
  }
  std::vector<std::size_t> base(n);
  std::size_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    base[j] = total;
    total += static_cast<std::size_t>(f[j]);
  }

  std::vector<std::uint8_t> entries(total * total, 0);
  std::vector<std::string> labels;
  labels.reserve(total);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t extra = static_cast<std::size_t>(f.extra(j));
    for (std::size_t i = 0; i < extra; ++i) {
      entries[(base[j] + i) * total + base[j] + i + 1] = 1;
    }
    const std::size_t last = base[j] + extra;
    for (std::size_t k = 0; k < n; ++k) {
      if (a(j, k)) entries[last * total + base[k]] = 1;
    }
    for (std::size_t i = 0; i <= extra; ++i) {
      labels.push_back(std::to_string(j + 1) + "_" + std::to_string(i));
    }
  }
  return BinMatrix(total, std::move(entries), std::move(labels));
}

Integer cocycle_sum(const CeilingFunction& f, std::span<const std::size_t> symbols,
                    long n) {
  const std::size_t count = static_cast<std::size_t>(n < 0 ? -n : n);
  if (symbols.size() < count) {
    throw DimensionError("cocycle_sum: need " + std::to_string(count) +
                         " symbols, got " + std::to_string(symbols.size()));
  }
  Integer sum = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (symbols[i] >= f.size()) {
      throw DimensionError("cocycle_sum: symbol " + std::to_string(symbols[i] + 1) +
                           " outside the alphabet");
    }
    sum += f[symbols[i]];
  }
  return n < 0 ? Integer(-sum) : sum;
}

MarkovCeiling reduce_to_markov_ceiling(const BinMatrix& a, std::size_t k,
                                       const std::map<Word, long>& values) {
  WordPresentation hb = higher_block(a, k);
  std::vector<long> ceiling;
  ceiling.reserve(hb.words.size());
  for (const Word& w : hb.words) {
    auto it = values.find(w);
    if (it == values.end()) {
      throw PreconditionError("reduce_to_markov_ceiling: no value for word " +
                              word_to_string(w, a.size()));
    }
    ceiling.push_back(it->second);
  }
  CeilingFunction f(std::move(ceiling));
  return {std::move(hb.matrix), std::move(f)};
}

}  // namespace sftflow
