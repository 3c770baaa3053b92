#pragma once

// Dimension triplets and quadruplets as inductive-limit groups.
//
// Conventions, fixed here and checked by the invariance tests:
//
//   Δ_A     = lim(Z^N, A^t):  [v, n] ~ [A^t v, n + 1]
//   Δ_{A^t} = lim(Z^N, A):    [u, n] ~ [A u, n + 1]
//   Δ̃_A    = Δ_{A^t} ⊗ Δ_A = lim(Z^N ⊗ Z^N, A ⊗ A^t)
//
// A quadruplet element is a single vector w in Z^{N^2} at one level L,
// standing for the sum of [u, L] ⊗ [v, L] over the simple tensors u ⊗ v
// making up w (Kronecker order: index i*N + j pairs u_i with v_j).
//
// Equality in a limit is decided by lifting both sides to a common level
// and testing the difference for membership in the eventual kernel of the
// connecting map, which is exact.

#include <cstddef>

#include "sftflow/certificates.hpp"
#include "sftflow/intlin.hpp"
#include "sftflow/markov.hpp"
#include "sftflow/suspension.hpp"

namespace sftflow {

enum class Transition {
  kTranspose,  // connecting map A^t: the future triplet Δ_A
  kDirect,     // connecting map A:   the past triplet Δ_{A^t}
};

struct DimElement {
  BinMatrix context;
  Transition transition = Transition::kTranspose;
  IntVector vector;
  std::size_t level = 0;
};

DimElement make_dim_element(const BinMatrix& a, Transition t, IntVector v,
                            std::size_t level);
IntMatrix connecting_map(const BinMatrix& a, Transition t);

DimElement lift(const DimElement& x, std::size_t levels);
bool dim_equal(const DimElement& x, const DimElement& y);

// [v, n] -> [v, n + 1]
DimElement delta(const DimElement& x);
// [v, n] -> [T v, n], T the connecting map
DimElement delta_inv(const DimElement& x);

/// All coordinates nonnegative after lifting `extra` more levels. A class
/// is in the positive cone iff this holds for some `extra`.
bool positive_at_level(const DimElement& x, std::size_t extra);

struct QuadElement {
  BinMatrix context;
  IntVector vector;  // length N^2
  std::size_t level = 0;
};

QuadElement make_quad_element(const BinMatrix& a, IntVector v, std::size_t level);
QuadElement zero_quad(const BinMatrix& a, std::size_t level = 0);

/// [u, n] ⊗ [v, m] with u in Δ_{A^t} and v in Δ_A.
QuadElement split_tensor(const BinMatrix& a, const IntVector& u, std::size_t n,
                         const IntVector& v, std::size_t m);

QuadElement lift(const QuadElement& q, std::size_t levels);
bool quad_equal(const QuadElement& p, const QuadElement& q);
bool positive_at_level(const QuadElement& q, std::size_t extra);

QuadElement operator+(const QuadElement& p, const QuadElement& q);
QuadElement operator-(const QuadElement& p, const QuadElement& q);

/// Σ_j [e_j, 1] ⊗ [A^t e_j, 1].
QuadElement u_tilde(const BinMatrix& a);

/// δ_{A^t}^{-1} ⊗ δ_A: [u, n] ⊗ [v, m] -> [A u, n] ⊗ [v, m + 1].
/// On a level-L vector this is (A^2 ⊗ 1) w at level L + 1.
QuadElement delta_tilde(const QuadElement& q);

/// Isomorphism Δ̃_A -> Δ̃_B induced by a shift-equivalence certificate:
/// [u, n] ⊗ [v, m] -> [K u, n + lag] ⊗ [H^t v, m]. On a level-L vector this
/// is (K ⊗ (B^t)^lag H^t) w at level L + lag. Throws CertificateError when
/// the certificate does not verify.
QuadElement se_induced_map(const BinMatrix& a, const BinMatrix& b,
                           const SECertificate& cert, const QuadElement& q);

/// True iff the induced map sends ũ_A to ũ_B. Holds for every valid
/// certificate; throws CertificateError for an invalid one.
bool verify_quadruplet_transport(const BinMatrix& a, const BinMatrix& b,
                                 const SECertificate& cert);

enum class KClassVariant {
  kDisplayed,  // coefficients f_j - 1
  kChainCount, // coefficients f_j, one per chain vertex
};

/// K-theory class of the suspension projection: Σ_j c_j [e_j, 1] ⊗ [A^t e_j, 1]
/// with c_j = f_j - 1 (or f_j for kChainCount).
QuadElement suspension_k_class(const BinMatrix& a, const CeilingFunction& f,
                               KClassVariant variant = KClassVariant::kDisplayed);

}  // namespace sftflow
