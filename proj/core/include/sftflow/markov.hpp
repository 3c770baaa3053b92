#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "sftflow/intlin.hpp"

namespace sftflow {

/// Square 0-1 transition matrix of a topological Markov shift. States are
/// 0-based here; file formats and reports number them from 1.
class BinMatrix {
 public:
  BinMatrix(std::size_t n, std::vector<std::uint8_t> entries,
            std::vector<std::string> labels = {});

  static BinMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  // Throws DimensionError unless m is square with entries in {0, 1}.
  static BinMatrix from_int_matrix(const IntMatrix& m,
                                   std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j] != 0; }
  const std::vector<std::uint8_t>& entries() const noexcept { return entries_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Attached label, or the 1-based index when unlabelled.
  std::string label(std::size_t i) const;
  BinMatrix with_labels(std::vector<std::string> labels) const;

  std::size_t out_degree(std::size_t i) const;
  std::size_t in_degree(std::size_t j) const;
  BinMatrix transpose() const;
  IntMatrix to_int() const;

  friend bool operator==(const BinMatrix&, const BinMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> entries_;
  std::vector<std::string> labels_;
};

BinMatrix full_shift(std::size_t symbols);
BinMatrix golden_mean();

using Word = std::vector<std::size_t>;

// Words print with 1-based symbols; separated by '.' once N exceeds 9.
std::string word_to_string(const Word& w, std::size_t alphabet);

struct WordPresentation {
  std::size_t block_length;
  std::vector<Word> words;
  BinMatrix matrix;
};

/// Strong connectivity with every state on a cycle; [0] is reducible.
bool is_irreducible(const BinMatrix& a);
bool is_permutation(const BinMatrix& a);

/// gcd of cycle lengths; requires an irreducible matrix.
std::size_t period(const BinMatrix& a);

/// All paths of k symbols, in lexicographic order.
std::vector<Word> admissible_words(const BinMatrix& a, std::size_t k);

/// k-th higher block presentation; k = 1 returns a unchanged.
WordPresentation higher_block(const BinMatrix& a, std::size_t k);

}  // namespace sftflow
