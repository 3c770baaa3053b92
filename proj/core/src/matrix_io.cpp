#include "sftflow/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sftflow/errors.hpp"

namespace sftflow {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

MatrixFile parse_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  std::size_t li = 0;
  auto next_nonblank = [&]() {
    while (li < lines.size() && tokenize(lines[li]).empty()) ++li;
  };
  next_nonblank();
  if (li >= lines.size()) throw ParseError(1, 1, "empty matrix file");

  const auto header = tokenize(lines[li]);
  if (header.size() != 1) {
    throw ParseError(li + 1, header.size() > 1 ? header[1].column : 1,
                     "first line must hold only the matrix size");
  }
  std::size_t n = 0;
  {
    const auto& t = header[0];
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || n == 0) {
      throw ParseError(li + 1, t.column, "size must be a positive integer, got '" +
                                             std::string(t.text) + "'");
    }
  }
  ++li;

  std::vector<std::uint8_t> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r, ++li) {
    if (li >= lines.size()) {
      throw ParseError(li + 1, 1, "expected " + std::to_string(n) + " rows, got " +
                                      std::to_string(r));
    }
    const auto row = tokenize(lines[li]);
    if (row.size() != n) {
      const std::size_t col = row.size() > n ? row[n].column : lines[li].size() + 1;
      throw ParseError(li + 1, col, "row " + std::to_string(r + 1) + " has " +
                                        std::to_string(row.size()) + " entries, expected " +
                                        std::to_string(n));
    }
    for (const Token& t : row) {
      if (t.text != "0" && t.text != "1") {
        throw ParseError(li + 1, t.column,
                         "entry must be 0 or 1, got '" + std::string(t.text) + "'");
      }
      entries.push_back(t.text == "1" ? 1 : 0);
    }
  }
  for (; li < lines.size(); ++li) {
    const auto extra = tokenize(lines[li]);
    if (!extra.empty()) throw ParseError(li + 1, extra[0].column, "unexpected trailing data");
  }
  return {BinMatrix(n, std::move(entries)), std::nullopt};
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(1, 1, what); }

json parse_json_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, col, "malformed JSON");
  }
}

MatrixFile parse_json(std::string_view text) {
  const json doc = parse_json_document(text);
  if (!doc.is_object()) schema_error("matrix document must be an object");
  if (!doc.contains("size") || !doc["size"].is_number_unsigned() ||
      doc["size"].get<std::size_t>() == 0) {
    schema_error("\"size\" must be a positive integer");
  }
  const std::size_t n = doc["size"].get<std::size_t>();
  if (!doc.contains("entries") || !doc["entries"].is_array() ||
      doc["entries"].size() != n * n) {
    schema_error("\"entries\" must be an array of size*size values");
  }
  std::vector<std::uint8_t> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const json& e = doc["entries"][i];
    if (!e.is_number_integer() || (e.get<long>() != 0 && e.get<long>() != 1)) {
      schema_error("entry " + std::to_string(i) + " must be 0 or 1");
    }
    entries.push_back(static_cast<std::uint8_t>(e.get<long>()));
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc["labels"];
    if (!l.is_array() || l.size() != n) schema_error("\"labels\" must hold size strings");
    for (const json& s : l) {
      if (!s.is_string()) schema_error("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }

  std::optional<CeilingFunction> ceiling;
  if (doc.contains("ceiling")) {
    const json& c = doc["ceiling"];
    if (!c.is_array() || c.size() != n) schema_error("\"ceiling\" must hold size integers");
    std::vector<long> values;
    for (const json& v : c) {
      if (!v.is_number_integer()) schema_error("ceiling values must be integers");
      values.push_back(v.get<long>());
    }
    ceiling.emplace(std::move(values));
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "size" && it.key() != "entries" && it.key() != "labels" &&
        it.key() != "ceiling") {
      schema_error("unknown field \"" + it.key() + "\"");
    }
  }
  return {BinMatrix(n, std::move(entries), std::move(labels)), std::move(ceiling)};
}

Integer parse_integer(const json& v, const char* what) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<unsigned long long>()))
                                  : Integer(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  schema_error(std::string(what) + " entries must be integers");
}

IntMatrix parse_int_matrix(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    schema_error(std::string("\"") + key + "\" must be an array of rows");
  }
  const json& rows = doc[key];
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : (rows[0].is_array() ? rows[0].size() : 0);
  std::vector<Integer> entries;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != c) {
      schema_error(std::string("\"") + key + "\" rows must be arrays of equal length");
    }
    for (const json& v : row) entries.push_back(parse_integer(v, key));
  }
  return IntMatrix(r, c, std::move(entries));
}

ordered_json matrix_to_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& x = m(i, j);
      if (x.fits_slong_p()) {
        row.push_back(x.get_si());
      } else {
        row.push_back(x.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  return parse_matrix_file(slurp(path));
}

std::string write_text(const BinMatrix& a) {
  std::string out = std::to_string(a.size()) + "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) out += ' ';
      out += a(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string write_json(const BinMatrix& a, const std::optional<CeilingFunction>& ceiling) {
  ordered_json doc;
  doc["size"] = a.size();
  doc["entries"] = a.entries();
  if (a.has_labels()) doc["labels"] = a.labels();
  if (ceiling) doc["ceiling"] = ceiling->values();
  return doc.dump() + "\n";
}

SECertificate parse_certificate(std::string_view text) {
  const json doc = parse_json_document(text);
  if (!doc.is_object()) schema_error("certificate must be an object");
  SECertificate cert{parse_int_matrix(doc, "H"), parse_int_matrix(doc, "K"), 1};
  if (!doc.contains("lag") || !doc["lag"].is_number_unsigned()) {
    schema_error("\"lag\" must be a nonnegative integer");
  }
  cert.lag = doc["lag"].get<std::size_t>();
  return cert;
}

SECertificate read_certificate(const std::filesystem::path& path) {
  return parse_certificate(slurp(path));
}

std::string write_certificate(const SECertificate& cert) {
  ordered_json doc;
  doc["H"] = matrix_to_json(cert.h);
  doc["K"] = matrix_to_json(cert.k);
  doc["lag"] = cert.lag;
  return doc.dump() + "\n";
}

}  // namespace sftflow
