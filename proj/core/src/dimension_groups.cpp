#include "sftflow/dimension_groups.hpp"

#include <algorithm>
#include <utility>

#include "sftflow/errors.hpp"

namespace sftflow {

namespace {

bool same_context(const BinMatrix& a, const BinMatrix& b) {
  return a.size() == b.size() && a.entries() == b.entries();
}

void require_length(const IntVector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + ": vector of length " +
                         std::to_string(v.size()) + ", expected " + std::to_string(n));
  }
}

IntVector apply_power(const IntMatrix& m, IntVector v, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) v = m * v;
  return v;
}

IntVector tensor(const IntVector& u, const IntVector& v) {
  IntVector out(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = u[i] * v[j];
  return out;
}

// A ⊗ A^t, the connecting map of Δ̃_A.
IntMatrix quad_connecting_map(const BinMatrix& a) {
  const IntMatrix ia = a.to_int();
  return kronecker(ia, ia.transpose());
}

}  // namespace

// ---------------------------------------------------------------------------
// Triplet

IntMatrix connecting_map(const BinMatrix& a, Transition t) {
  return t == Transition::kTranspose ? a.to_int().transpose() : a.to_int();
}

DimElement make_dim_element(const BinMatrix& a, Transition t, IntVector v,
                            std::size_t level) {
  require_length(v, a.size(), "make_dim_element");
  return {a, t, std::move(v), level};
}

DimElement lift(const DimElement& x, std::size_t levels) {
  return {x.context, x.transition,
          apply_power(connecting_map(x.context, x.transition), x.vector, levels),
          x.level + levels};
}

bool dim_equal(const DimElement& x, const DimElement& y) {
  if (!same_context(x.context, y.context) || x.transition != y.transition) {
    throw DimensionError("dim_equal: elements live in different groups");
  }
  const std::size_t level = std::max(x.level, y.level);
  const DimElement lx = lift(x, level - x.level);
  const DimElement ly = lift(y, level - y.level);
  return eventual_kernel_member(connecting_map(x.context, x.transition),
                                lx.vector - ly.vector);
}

DimElement delta(const DimElement& x) {
  return {x.context, x.transition, x.vector, x.level + 1};
}

DimElement delta_inv(const DimElement& x) {
  return {x.context, x.transition, connecting_map(x.context, x.transition) * x.vector,
          x.level};
}

bool positive_at_level(const DimElement& x, std::size_t extra) {
  const DimElement l = lift(x, extra);
  return std::all_of(l.vector.begin(), l.vector.end(),
                     [](const Integer& c) { return sgn(c) >= 0; });
}

// ---------------------------------------------------------------------------
// Quadruplet

QuadElement make_quad_element(const BinMatrix& a, IntVector v, std::size_t level) {
  require_length(v, a.size() * a.size(), "make_quad_element");
  return {a, std::move(v), level};
}

QuadElement zero_quad(const BinMatrix& a, std::size_t level) {
  return {a, IntVector(a.size() * a.size()), level};
}

QuadElement split_tensor(const BinMatrix& a, const IntVector& u, std::size_t n,
                         const IntVector& v, std::size_t m) {
  require_length(u, a.size(), "split_tensor");
  require_length(v, a.size(), "split_tensor");
  const IntMatrix ia = a.to_int();
  const std::size_t level = std::max(n, m);
  return {a,
          tensor(apply_power(ia, u, level - n), apply_power(ia.transpose(), v, level - m)),
          level};
}

QuadElement lift(const QuadElement& q, std::size_t levels) {
  return {q.context, apply_power(quad_connecting_map(q.context), q.vector, levels),
          q.level + levels};
}

namespace {

// Both operands lifted to their common level.
std::pair<QuadElement, QuadElement> aligned(const QuadElement& p, const QuadElement& q,
                                            const char* op) {
  if (!same_context(p.context, q.context)) {
    throw DimensionError(std::string(op) + ": elements live in different groups");
  }
  const std::size_t level = std::max(p.level, q.level);
  return {lift(p, level - p.level), lift(q, level - q.level)};
}

}  // namespace

bool quad_equal(const QuadElement& p, const QuadElement& q) {
  auto [lp, lq] = aligned(p, q, "quad_equal");
  return eventual_kernel_member(quad_connecting_map(p.context), lp.vector - lq.vector);
}

bool positive_at_level(const QuadElement& q, std::size_t extra) {
  const QuadElement l = lift(q, extra);
  return std::all_of(l.vector.begin(), l.vector.end(),
                     [](const Integer& c) { return sgn(c) >= 0; });
}

QuadElement operator+(const QuadElement& p, const QuadElement& q) {
  auto [lp, lq] = aligned(p, q, "quad sum");
  return {p.context, lp.vector + lq.vector, lp.level};
}

QuadElement operator-(const QuadElement& p, const QuadElement& q) {
  auto [lp, lq] = aligned(p, q, "quad difference");
  return {p.context, lp.vector - lq.vector, lp.level};
}

QuadElement u_tilde(const BinMatrix& a) {
  const std::size_t n = a.size();
  IntVector w(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector ej(n);
    ej[j] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!a(j, i)) continue;
      IntVector ei(n);
      ei[i] = 1;
      w = w + tensor(ej, ei);
    }
  }
  return {a, std::move(w), 1};
}

QuadElement delta_tilde(const QuadElement& q) {
  const std::size_t n = q.context.size();
  const IntMatrix ia = q.context.to_int();
  return {q.context, kronecker(ia * ia, IntMatrix::identity(n)) * q.vector, q.level + 1};
}

QuadElement se_induced_map(const BinMatrix& a, const BinMatrix& b,
                           const SECertificate& cert, const QuadElement& q) {
  if (!same_context(q.context, a)) {
    throw DimensionError("se_induced_map: element does not live over A");
  }
  const Verdict v = verify_shift_equivalence(a, b, cert);
  if (!v) throw CertificateError("invalid shift-equivalence certificate: " + v.reason);

  const IntMatrix bt = b.to_int().transpose();
  const IntMatrix right = mat_pow(bt, cert.lag) * cert.h.transpose();
  return {b, kronecker(cert.k, right) * q.vector, q.level + cert.lag};
}

bool verify_quadruplet_transport(const BinMatrix& a, const BinMatrix& b,
                                 const SECertificate& cert) {
  return quad_equal(se_induced_map(a, b, cert, u_tilde(a)), u_tilde(b));
}

QuadElement suspension_k_class(const BinMatrix& a, const CeilingFunction& f,
                               KClassVariant variant) {
  const std::size_t n = a.size();
  if (f.size() != n) {
    throw DimensionError("suspension_k_class: ceiling has " + std::to_string(f.size()) +
                         " values for " + std::to_string(n) + " states");
  }
  IntVector w(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const long c = variant == KClassVariant::kDisplayed ? f.extra(j) : f[j];
    if (c == 0) continue;
    // e_j ⊗ A^t e_j: row j of A in block j.
    for (std::size_t i = 0; i < n; ++i) {
      if (a(j, i)) w[j * n + i] = c;
    }
  }
  return {a, std::move(w), 1};
}

}  // namespace sftflow
