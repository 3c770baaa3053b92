#pragma once

// Matrix and certificate files.
//
// Plain text (canonical form, ASCII, LF line endings, single spaces):
//
//   2
//   1 1
//   1 0
//
// Structured (JSON):
//
//   {"size":2,"entries":[1,1,1,0],"labels":["a","b"],"ceiling":[2,1]}
//
// with "labels" and "ceiling" optional. Certificates are JSON objects
// {"H":[[...],...],"K":[[...],...],"lag":l}; entries may be written as
// numbers or as decimal strings for values beyond 64 bits.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "sftflow/certificates.hpp"
#include "sftflow/markov.hpp"
#include "sftflow/suspension.hpp"

namespace sftflow {

struct MatrixFile {
  BinMatrix matrix;
  std::optional<CeilingFunction> ceiling;
};

/// Detects the format from the first non-blank character ('{' means JSON).
/// Throws ParseError with a 1-based line and column; a non-positive
/// ceiling value throws PreconditionError instead.
MatrixFile parse_matrix_file(std::string_view text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

std::string write_text(const BinMatrix& a);
std::string write_json(const BinMatrix& a,
                       const std::optional<CeilingFunction>& ceiling = std::nullopt);

SECertificate parse_certificate(std::string_view text);
SECertificate read_certificate(const std::filesystem::path& path);
std::string write_certificate(const SECertificate& cert);

}  // namespace sftflow
