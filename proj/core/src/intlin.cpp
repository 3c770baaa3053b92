#include "sftflow/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "sftflow/errors.hpp"

namespace sftflow {

namespace {

void require_square(const IntMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw DimensionError(std::string(op) + ": matrix is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("IntMatrix: " + std::to_string(entries_.size()) +
                         " entries for a " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " matrix");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Integer> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("IntMatrix: ragged rows");
    for (long x : row) entries.emplace_back(x);
  }
  return IntMatrix(r, c, std::move(entries));
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const { return sftflow::is_zero(entries_); }

bool IntMatrix::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return sgn(x) >= 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix sum: shape mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix difference: shape mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntMatrix operator*(const Integer& scalar, const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = scalar * a(i, j);
  return out;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols() != v.size()) {
    throw DimensionError("matrix-vector product: " + std::to_string(a.cols()) +
                         " columns, vector of length " + std::to_string(v.size()));
  }
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (v[j] != 0 && a(i, j) != 0) acc += a(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw DimensionError("vector difference: length mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector to_int_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long x : values) out.emplace_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> ascending)
    : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending)
    : IntPolynomial(to_int_vector(ascending)) {}

Integer IntPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntVector SmithDecomposition::diagonal() const {
  const std::size_t n = std::min(d.rows(), d.cols());
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = d(i, i);
  return out;
}

// ---------------------------------------------------------------------------
// Determinant

Integer det(const IntMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Position of the entry of least nonzero |value| in the trailing block
// starting at (t, t); returns false when the block is zero.
bool find_min_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi,
                    std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      if (!found || mpz_cmpabs(d(i, j).get_mpz_t(), best.get_mpz_t()) < 0) {
        best = d(i, j);
        pi = i;
        pj = j;
        found = true;
        if (best == 1 || best == -1) return true;
      }
    }
  }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithDecomposition out{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& d = out.d;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_min_pivot(d, t, pi, pj)) break;
    for (;;) {
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool cleared = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) cleared = false;
      }
      if (!cleared) {
        find_min_pivot(d, t, pi, pj);
        continue;
      }

      // Row and column are clear; the pivot must divide the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
      find_min_pivot(d, t, pi, pj);
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial

IntPolynomial char_poly(const IntMatrix& m) {
  require_square(m, "char_poly");
  const std::size_t n = m.rows();

  // Samples y_k = det(kI - m) at k = 0..n.
  std::vector<Integer> samples(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    IntMatrix shifted = -m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += static_cast<unsigned long>(k);
    samples[k] = det(shifted);
  }

  // Lagrange interpolation over Q.
  std::vector<mpq_class> coeffs(n + 1, mpq_class(0));
  for (std::size_t k = 0; k <= n; ++k) {
    if (samples[k] == 0) continue;
    // basis = prod_{j != k} (t - j), accumulated ascending.
    std::vector<Integer> basis{1};
    Integer denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      std::vector<Integer> next(basis.size() + 1);
      for (std::size_t p = 0; p < basis.size(); ++p) {
        next[p + 1] += basis[p];
        next[p] -= basis[p] * static_cast<unsigned long>(j);
      }
      basis = std::move(next);
      denom *= Integer(static_cast<long>(k) - static_cast<long>(j));
    }
    for (std::size_t p = 0; p <= n; ++p) {
      mpq_class term(basis[p] * samples[k], denom);
      term.canonicalize();
      coeffs[p] += term;
    }
  }

  std::vector<Integer> out(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    if (coeffs[p].get_den() != 1) {
      throw Error("char_poly: interpolated coefficient is not an integer");
    }
    out[p] = coeffs[p].get_num();
  }
  return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  }
  return out;
}

IntMatrix mat_pow(const IntMatrix& m, std::size_t k) {
  require_square(m, "mat_pow");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool eventual_kernel_member(const IntMatrix& m, std::span<const Integer> v) {
  require_square(m, "eventual_kernel_member");
  if (v.size() != m.cols()) {
    throw DimensionError("eventual_kernel_member: vector of length " +
                         std::to_string(v.size()) + " for a " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  }
  IntVector w(v.begin(), v.end());
  for (std::size_t step = 0; step < m.rows(); ++step) {
    if (is_zero(w)) return true;
    w = m * w;
  }
  return is_zero(w);
}

}  // namespace sftflow
