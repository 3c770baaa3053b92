// sftflow: flow- and shift-equivalence invariants of 0-1 Markov shifts.
//
// Exit codes: 0 pass/equivalent, 1 fail/not equivalent, 2 parse or usage
// error, 3 hypothesis violation (reducible, permutation, bad ceiling).

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sftflow/certificates.hpp"
#include "sftflow/dimension_groups.hpp"
#include "sftflow/errors.hpp"
#include "sftflow/flow_invariants.hpp"
#include "sftflow/matrix_io.hpp"
#include "sftflow/suspension.hpp"

namespace {

using namespace sftflow;
using ordered_json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kFail = 1, kParse = 2, kHypothesis = 3 };

struct Options {
  bool json = false;
  std::string format = "text";
};

ordered_json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ordered_json vector_json(const IntVector& v) {
  ordered_json out = ordered_json::array();
  for (const Integer& x : v) out.push_back(integer_json(x));
  return out;
}

std::string value_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "n/a";
  return v.dump();
}

// Text rendering of a report: one "key: value" line per scalar, nested
// objects indented, arrays of scalars inline.
void print_text(std::ostream& os, const ordered_json& report, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = report.begin(); it != report.end(); ++it) {
    const ordered_json& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      print_text(os, v, indent + 1);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << it.key() << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << pad << "  [" << i + 1 << "]\n";
        print_text(os, v[i], indent + 2);
      }
    } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      os << pad << it.key() << ":\n";
      std::string line;
      std::istringstream lines(v.get<std::string>());
      while (std::getline(lines, line)) os << pad << "  " << line << '\n';
    } else {
      os << pad << it.key() << ": " << value_text(v) << '\n';
    }
  }
}

void emit(const Options& opt, const ordered_json& report) {
  if (opt.json) {
    std::cout << report.dump(2) << '\n';
  } else {
    print_text(std::cout, report);
  }
}

ordered_json group_json(const AbelianGroupPresentation& g) {
  ordered_json out;
  out["text"] = g.to_string();
  out["free_rank"] = g.free_rank;
  out["invariant_factors"] = vector_json(g.invariant_factors);
  return out;
}

ordered_json fingerprint_json(const SpectrumFingerprint& f) {
  ordered_json out;
  out["polynomial"] = f.poly.to_string();
  out["coefficients"] =
      vector_json(IntVector(f.poly.coefficients().begin(), f.poly.coefficients().end()));
  out["zero_multiplicity"] = f.zero_multiplicity;
  return out;
}

ordered_json flow_pair_json(const BinMatrix& a) {
  ordered_json out;
  out["size"] = a.size();
  out["det_I_minus_A"] = integer_json(ps_determinant(a));
  out["bowen_franks"] = group_json(bowen_franks(a));
  return out;
}

ordered_json quad_json(const QuadElement& q) {
  ordered_json out;
  out["level"] = q.level;
  out["vector"] = vector_json(q.vector);
  return out;
}

// ---------------------------------------------------------------------------

int cmd_invariants(const Options& opt, const std::string& path) {
  const MatrixFile file = read_matrix_file(path);
  const BinMatrix& a = file.matrix;
  const bool irreducible = is_irreducible(a);
  ordered_json r;
  r["file"] = path;
  r["size"] = a.size();
  r["irreducible"] = irreducible;
  r["permutation"] = is_permutation(a);
  r["period"] = irreducible ? ordered_json(period(a)) : ordered_json(nullptr);
  r["det_I_minus_A"] = integer_json(ps_determinant(a));
  r["bowen_franks"] = group_json(bowen_franks(a));
  r["char_poly"] = char_poly(a.to_int()).to_string();
  r["fingerprint"] = fingerprint_json(spectrum_fingerprint(a));
  if (file.ceiling) {
    r["ceiling"] = file.ceiling->values();
  }
  emit(opt, r);
  return kPass;
}

int cmd_floweq(const Options& opt, const std::string& path_a, const std::string& path_b) {
  const BinMatrix a = read_matrix_file(path_a).matrix;
  const BinMatrix b = read_matrix_file(path_b).matrix;
  const bool eq = flow_equivalent(a, b);
  ordered_json r;
  r["verdict"] = eq ? "EQUIVALENT" : "NOT-EQUIVALENT";
  r["A"] = flow_pair_json(a);
  r["B"] = flow_pair_json(b);
  emit(opt, r);
  return eq ? kPass : kFail;
}

int cmd_suspend(const Options& opt, const std::string& path,
                const std::vector<long>& ceiling_values, bool check) {
  const MatrixFile file = read_matrix_file(path);
  std::optional<CeilingFunction> f;
  if (!ceiling_values.empty()) {
    f.emplace(ceiling_values);
  } else if (file.ceiling) {
    f = file.ceiling;
  } else {
    throw ParseError(0, 0, "no ceiling given (use --ceiling or a \"ceiling\" field)");
  }
  if (f->size() != file.matrix.size()) {
    throw PreconditionError("ceiling has " + std::to_string(f->size()) + " values for " +
                            std::to_string(file.matrix.size()) + " states");
  }
  const BinMatrix af = suspend(file.matrix, *f);
  std::cout << (opt.format == "json" ? write_json(af) : write_text(af));

  if (!check) return kPass;
  const Integer det_a = ps_determinant(file.matrix);
  const Integer det_af = ps_determinant(af);
  const auto bf_a = bowen_franks(file.matrix);
  const auto bf_af = bowen_franks(af);
  const bool ok = det_a == det_af && bf_a == bf_af;
  std::cerr << "check: det(I-A) " << det_a << " -> " << det_af << ", BF " << bf_a.to_string()
            << " -> " << bf_af.to_string() << (ok ? ", preserved" : ", NOT preserved") << '\n';
  return ok ? kPass : kFail;
}

int cmd_verify_se(const Options& opt, const std::string& path_a, const std::string& path_b,
                  const std::string& path_cert) {
  const BinMatrix a = read_matrix_file(path_a).matrix;
  const BinMatrix b = read_matrix_file(path_b).matrix;
  const SECertificate cert = read_certificate(path_cert);
  Verdict v;
  try {
    v = verify_shift_equivalence(a, b, cert);
  } catch (const DimensionError& e) {
    v = Verdict::fail(std::string("shape: ") + e.what());
  }
  ordered_json r;
  r["verdict"] = v.ok ? "PASS" : "FAIL";
  r["reason"] = v.ok ? ordered_json(nullptr) : ordered_json(v.reason);
  r["lag"] = cert.lag;
  r["A_size"] = a.size();
  r["B_size"] = b.size();
  emit(opt, r);
  return v.ok ? kPass : kFail;
}

int cmd_quadcheck(const Options& opt, const std::string& path_a, const std::string& path_b,
                  const std::string& path_cert) {
  const BinMatrix a = read_matrix_file(path_a).matrix;
  const BinMatrix b = read_matrix_file(path_b).matrix;
  const SECertificate cert = read_certificate(path_cert);
  ordered_json r;
  Verdict v;
  try {
    v = verify_shift_equivalence(a, b, cert);
  } catch (const DimensionError& e) {
    v = Verdict::fail(std::string("shape: ") + e.what());
  }
  r["certificate"] = v.ok ? "valid" : "invalid";
  if (!v.ok) {
    r["verdict"] = "FAIL";
    r["reason"] = v.reason;
    emit(opt, r);
    return kFail;
  }
  const QuadElement ua = u_tilde(a);
  const QuadElement ub = u_tilde(b);
  const QuadElement image = se_induced_map(a, b, cert, ua);
  const bool transported = quad_equal(image, ub);
  r["verdict"] = transported ? "PASS" : "FAIL";
  r["u_tilde_A"] = quad_json(ua);
  r["u_tilde_B"] = quad_json(ub);
  r["image_of_u_tilde_A"] = quad_json(image);
  r["image_equals_u_tilde_B"] = transported;
  r["delta_tilde_fixes_u_tilde_A"] = quad_equal(delta_tilde(ua), ua);
  r["delta_tilde_fixes_u_tilde_B"] = quad_equal(delta_tilde(ub), ub);
  emit(opt, r);
  return transported ? kPass : kFail;
}

int cmd_moves(const Options& opt, const std::string& path) {
  const BinMatrix a = read_matrix_file(path).matrix;
  const std::vector<FlowMove> moves = flow_moves(a);
  const Integer det_a = ps_determinant(a);
  const auto bf_a = bowen_franks(a);
  bool all_ok = true;
  ordered_json list = ordered_json::array();
  for (const FlowMove& m : moves) {
    ordered_json item;
    item["label"] = m.label;
    item["size"] = m.matrix.size();
    item["matrix"] = write_text(m.matrix);
    const bool invariants_match =
        ps_determinant(m.matrix) == det_a && bowen_franks(m.matrix) == bf_a;
    item["invariants_match"] = invariants_match;
    all_ok = all_ok && invariants_match;
    if (m.witness) {
      const Verdict w = verify_elementary_sse(a.to_int(), m.matrix.to_int(), m.witness->r,
                                              m.witness->s);
      item["witness_verified"] = w.ok;
      all_ok = all_ok && w.ok;
    }
    list.push_back(std::move(item));
  }
  ordered_json r;
  r["verdict"] = all_ok ? "PASS" : "FAIL";
  r["size"] = a.size();
  r["det_I_minus_A"] = integer_json(det_a);
  r["bowen_franks"] = group_json(bf_a);
  r["count"] = moves.size();
  r["moves"] = std::move(list);
  emit(opt, r);
  return all_ok ? kPass : kFail;
}

int cmd_spectra(const Options& opt, const std::string& path_a, const std::string& path_b) {
  const BinMatrix a = read_matrix_file(path_a).matrix;
  const BinMatrix b = read_matrix_file(path_b).matrix;
  const SpectralChainReport rep = spectral_chain_report(a, b);
  auto word = [](bool same) { return same ? "equal" : "differ"; };
  ordered_json r;
  r["summary"] = std::string("kronecker: ") + word(rep.kronecker_equal) +
                 ", nonzero-spectrum: " + word(rep.nonzero_spectrum_equal) +
                 ", det: " + word(rep.determinant_equal);
  r["kronecker"] = word(rep.kronecker_equal);
  r["nonzero-spectrum"] = word(rep.nonzero_spectrum_equal);
  r["det"] = word(rep.determinant_equal);
  r["violation"] = rep.violation;
  r["A"] = fingerprint_json(spectrum_fingerprint(a));
  r["B"] = fingerprint_json(spectrum_fingerprint(b));
  emit(opt, r);
  return rep.violation ? kFail : kPass;
}

int report_error(const Options& opt, int code, const std::string& kind, const std::string& what) {
  if (opt.json) {
    ordered_json r;
    r["error"] = kind;
    r["message"] = what;
    r["exit_code"] = code;
    std::cout << r.dump(2) << '\n';
  }
  std::cerr << "sftflow: " << kind << ": " << what << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flow- and shift-equivalence invariants of 0-1 Markov shifts", "sftflow"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON report");
  app.add_option("--format", opt.format, "Matrix output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file_a, file_b, cert_file;
  std::vector<long> ceiling;
  bool check = false;

  auto* inv = app.add_subcommand("invariants", "Report the invariants of one matrix");
  inv->add_option("FILE", file_a)->required();

  auto* feq = app.add_subcommand("floweq", "Decide flow equivalence (Franks)");
  feq->add_option("A", file_a)->required();
  feq->add_option("B", file_b)->required();

  auto* sus = app.add_subcommand("suspend", "Discrete suspension by a ceiling function");
  sus->add_option("FILE", file_a)->required();
  sus->add_option("--ceiling", ceiling, "Comma-separated ceiling values")->delimiter(',');
  sus->add_flag("--check", check, "Check det and Bowen-Franks preservation");

  auto* vse = app.add_subcommand("verify-se", "Verify a shift-equivalence certificate");
  vse->add_option("A", file_a)->required();
  vse->add_option("B", file_b)->required();
  vse->add_option("CERT", cert_file)->required();

  auto* quad = app.add_subcommand("quadcheck", "Transport of the dimension quadruplet");
  quad->add_option("A", file_a)->required();
  quad->add_option("B", file_b)->required();
  quad->add_option("CERT", cert_file)->required();

  auto* mov = app.add_subcommand("moves", "One-step flow-equivalence moves");
  mov->add_option("FILE", file_a)->required();

  auto* spc = app.add_subcommand("spectra", "Kronecker / nonzero spectrum / det chain");
  spc->add_option("A", file_a)->required();
  spc->add_option("B", file_b)->required();

  for (auto* sub : {inv, feq, sus, vse, quad, mov, spc}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*inv) return cmd_invariants(opt, file_a);
    if (*feq) return cmd_floweq(opt, file_a, file_b);
    if (*sus) return cmd_suspend(opt, file_a, ceiling, check);
    if (*vse) return cmd_verify_se(opt, file_a, file_b, cert_file);
    if (*quad) return cmd_quadcheck(opt, file_a, file_b, cert_file);
    if (*mov) return cmd_moves(opt, file_a);
    if (*spc) return cmd_spectra(opt, file_a, file_b);
  } catch (const ParseError& e) {
    return report_error(opt, kParse, "parse error", e.what());
  } catch (const PreconditionError& e) {
    return report_error(opt, kHypothesis, "hypothesis violation", e.what());
  } catch (const DimensionError& e) {
    return report_error(opt, kParse, "dimension error", e.what());
  } catch (const Error& e) {
    return report_error(opt, kParse, "error", e.what());
  }
  return kParse;
}
