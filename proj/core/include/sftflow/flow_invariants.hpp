#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sftflow/intlin.hpp"
#include "sftflow/markov.hpp"

namespace sftflow {

/// Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with d_i >= 2 and d_i | d_{i+1}.
/// Canonical, so group isomorphism is equality of presentations.
struct AbelianGroupPresentation {
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;

  bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
  bool is_finite() const { return free_rank == 0; }
  // Product of the invariant factors; only meaningful for finite groups.
  Integer order() const;
  // "0", "Z/2", "Z^2 ⊕ Z/3 ⊕ Z/6".
  std::string to_string() const;

  friend bool operator==(const AbelianGroupPresentation&,
                         const AbelianGroupPresentation&) = default;
};

/// Cokernel of m as a canonical presentation.
AbelianGroupPresentation cokernel(const IntMatrix& m);

/// Characteristic polynomial split as t^zero_multiplicity * poly with
/// poly(0) != 0. poly determines the multiset of nonzero eigenvalues.
struct SpectrumFingerprint {
  IntPolynomial poly;
  std::size_t zero_multiplicity = 0;

  friend bool operator==(const SpectrumFingerprint&,
                         const SpectrumFingerprint&) = default;
};

SpectrumFingerprint fingerprint_of(const IntPolynomial& char_polynomial);

/// det(I - A).
Integer ps_determinant(const BinMatrix& a);

/// Z^N / (I - A) Z^N.
AbelianGroupPresentation bowen_franks(const BinMatrix& a);

SpectrumFingerprint spectrum_fingerprint(const BinMatrix& a);
SpectrumFingerprint spectrum_fingerprint(const IntMatrix& a);

bool same_nonzero_spectrum(const BinMatrix& a, const BinMatrix& b);

/// Compares nonzero spectra of A^t ⊗ A and B^t ⊗ B.
bool kronecker_spectrum_equal(const BinMatrix& a, const BinMatrix& b);

struct SpectralChainReport {
  bool kronecker_equal = false;
  bool nonzero_spectrum_equal = false;
  bool determinant_equal = false;
  // Set when an implication kronecker => spectrum => determinant fails.
  // That is a theorem for irreducible non-permutation inputs, so a set
  // flag means a bug.
  bool violation = false;
};

/// Evaluates the chain on irreducible non-permutation A, B.
SpectralChainReport spectral_chain_report(const BinMatrix& a, const BinMatrix& b);

/// Throws PreconditionError naming `name` unless a is irreducible and not a
/// permutation matrix.
void require_franks_hypothesis(const BinMatrix& a, const std::string& name);

/// Franks: equal det(I - A) and equal Bowen-Franks groups.
bool flow_equivalent(const BinMatrix& a, const BinMatrix& b);

}  // namespace sftflow
