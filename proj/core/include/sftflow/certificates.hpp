#pragma once

// Shift-equivalence and strong-shift-equivalence witnesses: verification,
// bounded search, and one-step flow-equivalence moves. Deciding shift
// equivalence in general is not attempted; a failed search proves nothing.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sftflow/intlin.hpp"
#include "sftflow/markov.hpp"

namespace sftflow {

/// A^lag = H K, B^lag = K H, A H = H B, K A = B K with H, K >= 0.
struct SECertificate {
  IntMatrix h;  // N x M
  IntMatrix k;  // M x N
  std::size_t lag = 1;
};

/// A = R S and B = S R with R, S >= 0.
struct ElementarySSE {
  IntMatrix r;  // N x M
  IntMatrix s;  // M x N
};

/// Outcome of a verification. `reason` names the first relation that fails.
struct Verdict {
  bool ok = true;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

Verdict verify_shift_equivalence(const IntMatrix& a, const IntMatrix& b,
                                 const SECertificate& cert);
Verdict verify_shift_equivalence(const BinMatrix& a, const BinMatrix& b,
                                 const SECertificate& cert);

Verdict verify_elementary_sse(const IntMatrix& a, const IntMatrix& b,
                              const IntMatrix& r, const IntMatrix& s);

/// (R, S) as a lag-1 shift-equivalence certificate (H = R, K = S).
SECertificate to_certificate(const ElementarySSE& e);

/// Lifts an elementary equivalence A = RS, B = SR to a lag-1 certificate
/// between A^t ⊗ A and B^t ⊗ B: H = S^t ⊗ R, K = R^t ⊗ S.
SECertificate kronecker_certificate(const ElementarySSE& e);

/// Checks the six relations between A^t ⊗ A and B^t ⊗ B:
///   (A^t⊗A)^l = HK, (B^t⊗B)^l = KH,
///   (1⊗A)H = H(1⊗B), K(1⊗A) = (1⊗B)K,
///   (A^t⊗1)H = H(B^t⊗1), K(A^t⊗1) = (B^t⊗1)K.
Verdict verify_kronecker_se(const BinMatrix& a, const BinMatrix& b,
                            const SECertificate& cert);

inline constexpr double kMaxSearchCandidates = 1e8;

/// Exhaustive search for A = RS, B = SR with entries in [0, entry_max].
/// The inner dimension is forced to B's size; if that exceeds
/// inner_dim_max nothing is searched. Candidates are visited with R in
/// lexicographic order, then S column by column, and the first match is
/// returned. Throws SearchSpaceError when (entry_max+1)^(2NM) exceeds
/// kMaxSearchCandidates.
std::optional<ElementarySSE> search_elementary_sse(const IntMatrix& a,
                                                   const IntMatrix& b,
                                                   std::size_t inner_dim_max,
                                                   unsigned entry_max);

/// Splits `state` into two copies. `first_part` lists the out-neighbours
/// (for out-splitting) that stay with the first copy; the rest go to the
/// second. The copies sit at `state` and `state + 1`.
struct Splitting {
  BinMatrix matrix;
  ElementarySSE witness;  // original = R S, split = S R
};
Splitting out_split(const BinMatrix& a, std::size_t state,
                    const std::vector<std::size_t>& first_part);
Splitting in_split(const BinMatrix& a, std::size_t state,
                   const std::vector<std::size_t>& first_part);

struct FlowMove {
  std::string label;
  BinMatrix matrix;
  std::optional<ElementarySSE> witness;  // set for splittings
};

/// One-step flow-equivalent neighbours of an irreducible non-permutation A:
/// symbol expansions by state, then out-splittings, then in-splittings of
/// a single state into two, each in lexicographic partition order.
std::vector<FlowMove> flow_moves(const BinMatrix& a);

}  // namespace sftflow
