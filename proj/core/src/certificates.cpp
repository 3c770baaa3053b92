#include "sftflow/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sftflow/errors.hpp"
#include "sftflow/flow_invariants.hpp"
#include "sftflow/suspension.hpp"

namespace sftflow {

namespace {

std::string shape(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_shape(const IntMatrix& m, std::size_t rows, std::size_t cols,
                   const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(std::string(what) + " is " + shape(m) + ", expected " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + " is not square");
}

}  // namespace

Verdict verify_shift_equivalence(const IntMatrix& a, const IntMatrix& b,
                                 const SECertificate& cert) {
  require_square(a, "A");
  require_square(b, "B");
  const std::size_t n = a.rows();
  const std::size_t m = b.rows();
  require_shape(cert.h, n, m, "H");
  require_shape(cert.k, m, n, "K");

  if (cert.lag == 0) return Verdict::fail("lag must be positive");
  if (!a.is_nonnegative() || !b.is_nonnegative())
    return Verdict::fail("nonnegativity: A and B must be nonnegative");
  if (!cert.h.is_nonnegative()) return Verdict::fail("nonnegativity: H has a negative entry");
  if (!cert.k.is_nonnegative()) return Verdict::fail("nonnegativity: K has a negative entry");
  if (mat_pow(a, cert.lag) != cert.h * cert.k) return Verdict::fail("A^l ≠ HK");
  if (mat_pow(b, cert.lag) != cert.k * cert.h) return Verdict::fail("B^l ≠ KH");
  if (a * cert.h != cert.h * b) return Verdict::fail("AH ≠ HB");
  if (cert.k * a != b * cert.k) return Verdict::fail("KA ≠ BK");
  return Verdict::pass();
}

Verdict verify_shift_equivalence(const BinMatrix& a, const BinMatrix& b,
                                 const SECertificate& cert) {
  return verify_shift_equivalence(a.to_int(), b.to_int(), cert);
}

Verdict verify_elementary_sse(const IntMatrix& a, const IntMatrix& b,
                              const IntMatrix& r, const IntMatrix& s) {
  require_square(a, "A");
  require_square(b, "B");
  require_shape(r, a.rows(), b.rows(), "R");
  require_shape(s, b.rows(), a.rows(), "S");
  if (!r.is_nonnegative()) return Verdict::fail("nonnegativity: R has a negative entry");
  if (!s.is_nonnegative()) return Verdict::fail("nonnegativity: S has a negative entry");
  if (r * s != a) return Verdict::fail("A ≠ RS");
  if (s * r != b) return Verdict::fail("B ≠ SR");
  return Verdict::pass();
}

SECertificate to_certificate(const ElementarySSE& e) { return {e.r, e.s, 1}; }

SECertificate kronecker_certificate(const ElementarySSE& e) {
  return {kronecker(e.s.transpose(), e.r), kronecker(e.r.transpose(), e.s), 1};
}

Verdict verify_kronecker_se(const BinMatrix& a, const BinMatrix& b,
                            const SECertificate& cert) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  require_shape(cert.h, n * n, m * m, "H");
  require_shape(cert.k, m * m, n * n, "K");
  if (cert.lag == 0) return Verdict::fail("lag must be positive");
  if (!cert.h.is_nonnegative()) return Verdict::fail("nonnegativity: H has a negative entry");
  if (!cert.k.is_nonnegative()) return Verdict::fail("nonnegativity: K has a negative entry");

  const IntMatrix ia = a.to_int();
  const IntMatrix ib = b.to_int();
  const IntMatrix at_a = kronecker(ia.transpose(), ia);
  const IntMatrix bt_b = kronecker(ib.transpose(), ib);
  const IntMatrix one_a = kronecker(IntMatrix::identity(n), ia);
  const IntMatrix one_b = kronecker(IntMatrix::identity(m), ib);
  const IntMatrix at_one = kronecker(ia.transpose(), IntMatrix::identity(n));
  const IntMatrix bt_one = kronecker(ib.transpose(), IntMatrix::identity(m));
  const IntMatrix& h = cert.h;
  const IntMatrix& k = cert.k;

  if (mat_pow(at_a, cert.lag) != h * k) return Verdict::fail("(A^t⊗A)^l ≠ HK");
  if (mat_pow(bt_b, cert.lag) != k * h) return Verdict::fail("(B^t⊗B)^l ≠ KH");
  if (one_a * h != h * one_b) return Verdict::fail("(1⊗A)H ≠ H(1⊗B)");
  if (k * one_a != one_b * k) return Verdict::fail("K(1⊗A) ≠ (1⊗B)K");
  if (at_one * h != h * bt_one) return Verdict::fail("(A^t⊗1)H ≠ H(B^t⊗1)");
  if (k * at_one != bt_one * k) return Verdict::fail("K(A^t⊗1) ≠ (B^t⊗1)K");
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Bounded search

namespace {

// Advances `digits` as a base-(max+1) counter; false on wrap-around.
bool increment(std::vector<unsigned>& digits, unsigned max) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < max) {
      ++digits[i];
      return true;
    }
    digits[i] = 0;
  }
  return false;
}

}  // namespace

std::optional<ElementarySSE> search_elementary_sse(const IntMatrix& a,
                                                   const IntMatrix& b,
                                                   std::size_t inner_dim_max,
                                                   unsigned entry_max) {
  require_square(a, "A");
  require_square(b, "B");
  const std::size_t n = a.rows();
  const std::size_t m = b.rows();
  if (m > inner_dim_max) return std::nullopt;

  const double space =
      std::pow(static_cast<double>(entry_max) + 1.0, static_cast<double>(2 * n * m));
  if (space > kMaxSearchCandidates) {
    throw SearchSpaceError("search_elementary_sse: " + std::to_string(space) +
                           " candidates exceed the budget of 1e8");
  }

  // All nonnegative columns of length m with entries <= entry_max.
  std::vector<IntVector> columns;
  {
    std::vector<unsigned> digits(m, 0);
    do {
      IntVector c(m);
      for (std::size_t i = 0; i < m; ++i) c[i] = digits[i];
      columns.push_back(std::move(c));
    } while (increment(digits, entry_max));
  }

  std::vector<unsigned> r_digits(n * m, 0);
  do {
    IntMatrix r(n, m);
    for (std::size_t i = 0; i < n * m; ++i) r(i / m, i % m) = r_digits[i];

    // Column c of S must satisfy R s = A e_c.
    std::vector<std::vector<const IntVector*>> options(n);
    bool feasible = true;
    for (std::size_t c = 0; c < n && feasible; ++c) {
      const IntVector target = a.col(c);
      for (const IntVector& s : columns) {
        if (r * s == target) options[c].push_back(&s);
      }
      feasible = !options[c].empty();
    }
    if (!feasible) continue;

    std::vector<std::size_t> pick(n, 0);
    for (;;) {
      IntMatrix s(m, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < m; ++i) s(i, c) = (*options[c][pick[c]])[i];
      if (s * r == b) return ElementarySSE{std::move(r), std::move(s)};

      std::size_t c = n;
      while (c-- > 0) {
        if (++pick[c] < options[c].size()) break;
        pick[c] = 0;
      }
      if (c == static_cast<std::size_t>(-1)) break;
    }
  } while (increment(r_digits, entry_max));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Splittings and moves

Splitting out_split(const BinMatrix& a, std::size_t state,
                    const std::vector<std::size_t>& first_part) {
  const std::size_t n = a.size();
  if (state >= n) throw DimensionError("out_split: state out of range");
  std::vector<bool> in_first(n, false);
  for (std::size_t k : first_part) {
    if (k >= n || !a(state, k)) {
      throw PreconditionError("out_split: " + std::to_string(k + 1) +
                              " is not an out-neighbour of " + std::to_string(state + 1));
    }
    in_first[k] = true;
  }
  const std::size_t first_count = first_part.size();
  if (first_count == 0 || first_count >= a.out_degree(state)) {
    throw PreconditionError("out_split: both parts must be nonempty");
  }

  const std::size_t m = n + 1;
  auto parent = [state](std::size_t i) { return i <= state ? i : i - 1; };

  IntMatrix r(n, m);
  IntMatrix s(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    r(parent(i), i) = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (!a(parent(i), k)) continue;
      if (i == state && !in_first[k]) continue;
      if (i == state + 1 && in_first[k]) continue;
      s(i, k) = 1;
    }
  }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    std::string l = a.label(parent(i));
    if (i == state) l += ".1";
    if (i == state + 1) l += ".2";
    labels.push_back(std::move(l));
  }
  BinMatrix split = BinMatrix::from_int_matrix(s * r, std::move(labels));
  return {std::move(split), {std::move(r), std::move(s)}};
}

Splitting in_split(const BinMatrix& a, std::size_t state,
                   const std::vector<std::size_t>& first_part) {
  Splitting t = out_split(a.transpose(), state, first_part);
  // A^t = R S, B^t = S R  =>  A = S^t R^t, B = R^t S^t.
  return {t.matrix.transpose(), {t.witness.s.transpose(), t.witness.r.transpose()}};
}

namespace {

// Subsets of `nbrs` that contain nbrs[0] and are proper, in lexicographic
// order; each unordered two-part partition appears once.
std::vector<std::vector<std::size_t>> first_parts(const std::vector<std::size_t>& nbrs) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t rest = nbrs.size() - 1;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << rest); ++mask) {
    std::vector<std::size_t> part{nbrs[0]};
    for (std::size_t i = 0; i < rest; ++i) {
      if (mask & (std::size_t{1} << i)) part.push_back(nbrs[i + 1]);
    }
    out.push_back(std::move(part));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string partition_label(const std::vector<std::size_t>& nbrs,
                            const std::vector<std::size_t>& first) {
  auto set = [](const std::vector<std::size_t>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i] + 1);
    return s + "}";
  };
  std::vector<std::size_t> second;
  for (std::size_t k : nbrs) {
    if (std::find(first.begin(), first.end(), k) == first.end()) second.push_back(k);
  }
  return set(first) + "|" + set(second);
}

}  // namespace

std::vector<FlowMove> flow_moves(const BinMatrix& a) {
  require_franks_hypothesis(a, "A");
  const std::size_t n = a.size();
  std::vector<FlowMove> moves;

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<long> f(n, 1);
    f[j] = 2;
    moves.push_back({"expand " + std::to_string(j + 1), suspend(a, CeilingFunction(f)),
                     std::nullopt});
  }

  for (int direction = 0; direction < 2; ++direction) {
    const bool out = direction == 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> nbrs;
      for (std::size_t k = 0; k < n; ++k) {
        if (out ? a(j, k) : a(k, j)) nbrs.push_back(k);
      }
      if (nbrs.size() < 2) continue;
      for (const auto& first : first_parts(nbrs)) {
        Splitting sp = out ? out_split(a, j, first) : in_split(a, j, first);
        moves.push_back({(out ? "out-split " : "in-split ") + std::to_string(j + 1) + " " +
                             partition_label(nbrs, first),
                         std::move(sp.matrix), std::move(sp.witness)});
      }
    }
  }
  return moves;
}

}  // namespace sftflow
