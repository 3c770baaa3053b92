#include "sftflow/flow_invariants.hpp"

#include "sftflow/errors.hpp"

namespace sftflow {

Integer AbelianGroupPresentation::order() const {
  Integer n = 1;
  for (const Integer& d : invariant_factors) n *= d;
  return n;
}

std::string AbelianGroupPresentation::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank == 1) out = "Z";
  if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
  for (const Integer& d : invariant_factors) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z/" + d.get_str();
  }
  return out;
}

AbelianGroupPresentation cokernel(const IntMatrix& m) {
  const IntVector diag = smith_normal_form(m).diagonal();
  AbelianGroupPresentation g;
  for (const Integer& d : diag) {
    if (d == 0) {
      ++g.free_rank;
    } else if (d != 1) {
      g.invariant_factors.push_back(d);
    }
  }
  // Rows beyond the diagonal contribute free summands.
  if (m.rows() > diag.size()) g.free_rank += m.rows() - diag.size();
  return g;
}

SpectrumFingerprint fingerprint_of(const IntPolynomial& char_polynomial) {
  const auto c = char_polynomial.coefficients();
  std::size_t z = 0;
  while (z < c.size() && c[z] == 0) ++z;
  return {IntPolynomial(std::vector<Integer>(c.begin() + static_cast<std::ptrdiff_t>(z), c.end())), z};
}

namespace {

IntMatrix identity_minus(const BinMatrix& a) {
  return IntMatrix::identity(a.size()) - a.to_int();
}

}  // namespace

Integer ps_determinant(const BinMatrix& a) { return det(identity_minus(a)); }

AbelianGroupPresentation bowen_franks(const BinMatrix& a) {
  return cokernel(identity_minus(a));
}

SpectrumFingerprint spectrum_fingerprint(const IntMatrix& a) {
  return fingerprint_of(char_poly(a));
}

SpectrumFingerprint spectrum_fingerprint(const BinMatrix& a) {
  return spectrum_fingerprint(a.to_int());
}

bool same_nonzero_spectrum(const BinMatrix& a, const BinMatrix& b) {
  return spectrum_fingerprint(a).poly == spectrum_fingerprint(b).poly;
}

bool kronecker_spectrum_equal(const BinMatrix& a, const BinMatrix& b) {
  const IntMatrix ia = a.to_int();
  const IntMatrix ib = b.to_int();
  return spectrum_fingerprint(kronecker(ia.transpose(), ia)).poly ==
         spectrum_fingerprint(kronecker(ib.transpose(), ib)).poly;
}

void require_franks_hypothesis(const BinMatrix& a, const std::string& name) {
  if (!is_irreducible(a)) throw PreconditionError(name + " is reducible");
  if (is_permutation(a)) throw PreconditionError(name + " is a permutation matrix");
}

SpectralChainReport spectral_chain_report(const BinMatrix& a, const BinMatrix& b) {
  require_franks_hypothesis(a, "A");
  require_franks_hypothesis(b, "B");
  SpectralChainReport r;
  r.kronecker_equal = kronecker_spectrum_equal(a, b);
  r.nonzero_spectrum_equal = same_nonzero_spectrum(a, b);
  r.determinant_equal = ps_determinant(a) == ps_determinant(b);
  r.violation = (r.kronecker_equal && !r.nonzero_spectrum_equal) ||
                (r.nonzero_spectrum_equal && !r.determinant_equal);
  return r;
}

bool flow_equivalent(const BinMatrix& a, const BinMatrix& b) {
  require_franks_hypothesis(a, "A");
  require_franks_hypothesis(b, "B");
  return ps_determinant(a) == ps_determinant(b) && bowen_franks(a) == bowen_franks(b);
}

}  // namespace sftflow
