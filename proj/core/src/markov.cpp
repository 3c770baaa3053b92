#include "sftflow/markov.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <utility>

#include "sftflow/errors.hpp"

namespace sftflow {

BinMatrix::BinMatrix(std::size_t n, std::vector<std::uint8_t> entries,
                     std::vector<std::string> labels)
    : n_(n), entries_(std::move(entries)), labels_(std::move(labels)) {
  if (n_ == 0) throw DimensionError("BinMatrix: size must be at least 1");
  if (entries_.size() != n_ * n_) {
    throw DimensionError("BinMatrix: " + std::to_string(entries_.size()) +
                         " entries for size " + std::to_string(n_));
  }
  for (std::uint8_t e : entries_) {
    if (e > 1) throw DimensionError("BinMatrix: entries must be 0 or 1");
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw DimensionError("BinMatrix: " + std::to_string(labels_.size()) +
                         " labels for size " + std::to_string(n_));
  }
}

BinMatrix BinMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t n = rows.size();
  std::vector<std::uint8_t> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionError("BinMatrix: rows must have length N");
    for (int x : row) {
      if (x != 0 && x != 1) throw DimensionError("BinMatrix: entries must be 0 or 1");
      entries.push_back(static_cast<std::uint8_t>(x));
    }
  }
  return BinMatrix(n, std::move(entries));
}

BinMatrix BinMatrix::from_int_matrix(const IntMatrix& m,
                                     std::vector<std::string> labels) {
  if (!m.is_square()) throw DimensionError("BinMatrix: matrix is not square");
  std::vector<std::uint8_t> entries;
  entries.reserve(m.rows() * m.cols());
  for (const Integer& x : m.entries()) {
    if (x != 0 && x != 1) throw DimensionError("BinMatrix: entries must be 0 or 1");
    entries.push_back(x == 1 ? 1 : 0);
  }
  return BinMatrix(m.rows(), std::move(entries), std::move(labels));
}

std::string BinMatrix::label(std::size_t i) const {
  return labels_.empty() ? std::to_string(i + 1) : labels_[i];
}

BinMatrix BinMatrix::with_labels(std::vector<std::string> labels) const {
  return BinMatrix(n_, entries_, std::move(labels));
}

std::size_t BinMatrix::out_degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += (*this)(i, j);
  return d;
}

std::size_t BinMatrix::in_degree(std::size_t j) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += (*this)(i, j);
  return d;
}

BinMatrix BinMatrix::transpose() const {
  std::vector<std::uint8_t> t(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[j * n_ + i] = entries_[i * n_ + j];
  return BinMatrix(n_, std::move(t), labels_);
}

IntMatrix BinMatrix::to_int() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = entries_[i * n_ + j];
  return m;
}

BinMatrix full_shift(std::size_t symbols) {
  return BinMatrix(symbols, std::vector<std::uint8_t>(symbols * symbols, 1));
}

BinMatrix golden_mean() { return BinMatrix::from_rows({{1, 1}, {1, 0}}); }

std::string word_to_string(const Word& w, std::size_t alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && alphabet > 9) out += '.';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

namespace {

// States reachable from `start` by paths of length >= 1.
std::vector<bool> reachable_in_one_or_more(const BinMatrix& a, std::size_t start) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(start, j) && !seen[j]) {
      seen[j] = true;
      frontier.push(j);
    }
  }
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) && !seen[j]) {
        seen[j] = true;
        frontier.push(j);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_irreducible(const BinMatrix& a) {
  auto all = [](const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
  };
  return all(reachable_in_one_or_more(a, 0)) &&
         all(reachable_in_one_or_more(a.transpose(), 0));
}

bool is_permutation(const BinMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.out_degree(i) != 1 || a.in_degree(i) != 1) return false;
  }
  return true;
}

std::size_t period(const BinMatrix& a) {
  if (!is_irreducible(a)) throw PreconditionError("period: matrix is reducible");
  const std::size_t n = a.size();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(n, kUnseen);
  std::queue<std::size_t> frontier;
  level[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) && level[j] == kUnseen) {
        level[j] = level[i] + 1;
        frontier.push(j);
      }
    }
  }
  // Every edge i -> j closes a walk whose length differs from a cycle
  // length by a multiple of the period.
  long g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(i, j)) continue;
      const long diff = static_cast<long>(level[i]) + 1 - static_cast<long>(level[j]);
      g = std::gcd(g, diff);
    }
  }
  return static_cast<std::size_t>(g);
}

std::vector<Word> admissible_words(const BinMatrix& a, std::size_t k) {
  if (k == 0) throw PreconditionError("admissible_words: k must be positive");
  std::vector<Word> words;
  for (std::size_t s = 0; s < a.size(); ++s) words.push_back({s});
  for (std::size_t len = 1; len < k; ++len) {
    std::vector<Word> next;
    for (const Word& w : words) {
      for (std::size_t s = 0; s < a.size(); ++s) {
        if (!a(w.back(), s)) continue;
        Word ext = w;
        ext.push_back(s);
        next.push_back(std::move(ext));
      }
    }
    words = std::move(next);
  }
  return words;
}

WordPresentation higher_block(const BinMatrix& a, std::size_t k) {
  if (k == 0) throw PreconditionError("higher_block: k must be positive");
  if (k == 1) {
    std::vector<Word> words;
    for (std::size_t s = 0; s < a.size(); ++s) words.push_back({s});
    return {1, std::move(words), a};
  }
  std::vector<Word> words = admissible_words(a, k);
  if (words.empty()) {
    throw PreconditionError("higher_block: no admissible words of length " +
                            std::to_string(k));
  }
  const std::size_t m = words.size();
  std::vector<std::uint8_t> entries(m * m, 0);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      // w_p -> w_q iff w_p[1..] == w_q[..k-1]; admissibility of the
      // concatenation then follows from that of both words.
      if (std::equal(words[p].begin() + 1, words[p].end(), words[q].begin())) {
        entries[p * m + q] = 1;
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const Word& w : words) labels.push_back(word_to_string(w, a.size()));
  return {k, std::move(words), BinMatrix(m, std::move(entries), std::move(labels))};
}

}  // namespace sftflow
