#include "hypertoric/report_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hypertoric/error.hpp"

namespace hypertoric::report_io {

using nlohmann::json;

namespace {

const Integer kSafeMax("9007199254740991");  // 2^53 - 1

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

bool is_integer_token(std::string_view tok) {
  std::size_t i = (tok.size() > 1 && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  return true;
}

Integer integer_from_token(std::string_view tok) {
  std::string s(tok);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

struct Token {
  std::string_view text;
  std::size_t col;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// "# kind: B" or "#kind B"; returns the declared kind if the comment is one.
std::optional<MatrixKind> kind_directive(std::string_view comment, std::size_t line) {
  std::string_view body = trim(comment.substr(1));
  if (body.substr(0, 4) != "kind") return std::nullopt;
  body.remove_prefix(4);
  if (!body.empty() && body.front() == ':') body.remove_prefix(1);
  else if (body.empty() || !std::isspace(static_cast<unsigned char>(body.front())))
    return std::nullopt;
  body = trim(body);
  if (body == "A" || body == "a") return MatrixKind::A;
  if (body == "B" || body == "b") return MatrixKind::B;
  parse_fail(line, 1, "kind must be A or B, got '" + std::string(body) + "'");
}

MatrixKind kind_from_string(const std::string& s) {
  if (s == "A") return MatrixKind::A;
  if (s == "B") return MatrixKind::B;
  throw Error(ErrorCode::ParseError, "kind must be \"A\" or \"B\", got \"" + s + "\"");
}

json integer_json(const Integer& x) {
  if (mpz_cmpabs(x.get_mpz_t(), kSafeMax.get_mpz_t()) <= 0) return json(x.get_si());
  return json(x.get_str());
}

Integer integer_of(const json& j) {
  if (j.is_number_integer()) return Integer(j.dump(), 10);
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (!is_integer_token(s)) throw Error(ErrorCode::ParseError, "not an integer: \"" + s + "\"");
    return integer_from_token(s);
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

std::size_t count_of(const json& j) {
  if (!j.is_number_unsigned()) throw Error(ErrorCode::ParseError, "expected a count, got " + j.dump());
  return j.get<std::size_t>();
}

json rows_json(const IntMatrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(integer_json(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_of(const json& rows, std::size_t cols_if_empty) {
  if (!rows.is_array()) throw Error(ErrorCode::ParseError, "matrix rows must be an array");
  std::vector<IntVector> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "matrix row must be an array");
    IntVector v;
    for (const auto& x : row) v.push_back(integer_of(x));
    out.push_back(std::move(v));
  }
  try {
    return IntMatrix::from_rows(out, cols_if_empty);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json index_json(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

std::vector<std::size_t> index_of(const json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    const std::size_t v = count_of(x);
    if (v == 0) throw Error(ErrorCode::ParseError, "indices are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

json group_json(const AbelianGroup& g) {
  json factors = json::array();
  for (const auto& f : g.torsion()) factors.push_back(integer_json(f));
  auto order = g.order();
  return json{{"free_rank", g.free_rank()},
              {"invariant_factors", std::move(factors)},
              {"order", order ? integer_json(*order) : json(nullptr)}};
}

AbelianGroup group_of(const json& j) {
  std::vector<Integer> factors;
  for (const auto& f : j.at("invariant_factors")) factors.push_back(integer_of(f));
  return AbelianGroup::from_diagonal(factors, count_of(j.at("free_rank")));
}

MatrixInput parse_json_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    parse_fail(line, col, "invalid JSON");
  }
  if (!doc.is_object() || !doc.contains("rows"))
    throw Error(ErrorCode::ParseError, "JSON matrix needs a \"rows\" array");
  MatrixInput out;
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw Error(ErrorCode::ParseError, "\"kind\" must be a string");
    out.kind = kind_from_string(doc["kind"].get<std::string>());
  }
  const std::size_t cols = doc.contains("cols") ? count_of(doc["cols"]) : 0;
  out.matrix = matrix_of(doc["rows"], cols);
  if (doc.contains("cols") && out.matrix.cols() != cols)
    throw Error(ErrorCode::ParseError, "\"cols\" disagrees with the row length");
  return out;
}

MatrixInput parse_text_matrix(std::string_view text) {
  MatrixInput out;
  std::optional<std::pair<std::size_t, std::size_t>> shape;
  std::vector<IntVector> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty()) continue;
    if (content.front() == '#') {
      if (auto k = kind_directive(content, line_no)) out.kind = *k;
      continue;
    }
    const auto tokens = split(line);
    for (const auto& t : tokens) {
      if (!is_integer_token(t.text))
        parse_fail(line_no, t.col, "expected an integer, got '" + std::string(t.text) + "'");
    }
    if (!shape) {
      if (tokens.size() != 2) parse_fail(line_no, 1, "header must be 'rows cols'");
      Integer r = integer_from_token(tokens[0].text);
      Integer c = integer_from_token(tokens[1].text);
      if (r < 0 || r > 4096) parse_fail(line_no, tokens[0].col, "bad row count");
      if (c < 0 || c > 4096) parse_fail(line_no, tokens[1].col, "bad column count");
      shape.emplace(r.get_ui(), c.get_ui());
      continue;
    }
    if (rows.size() == shape->first) parse_fail(line_no, 1, "more rows than the header declares");
    if (tokens.size() != shape->second) {
      const std::size_t col = tokens.size() > shape->second ? tokens[shape->second].col
                                                            : line.size() + 1;
      parse_fail(line_no, col,
                 "row has " + std::to_string(tokens.size()) + " entries, expected " +
                     std::to_string(shape->second));
    }
    IntVector row;
    for (const auto& t : tokens) row.push_back(integer_from_token(t.text));
    rows.push_back(std::move(row));
  }
  if (!shape) parse_fail(line_no, 1, "missing header");
  if (rows.size() != shape->first) {
    parse_fail(line_no, 1, "expected " + std::to_string(shape->first) + " rows, found " +
                               std::to_string(rows.size()));
  }
  out.matrix = IntMatrix::from_rows(rows, shape->second);
  return out;
}

}  // namespace

std::string_view kind_name(MatrixKind kind) { return kind == MatrixKind::A ? "A" : "B"; }

MatrixInput parse_matrix(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json_matrix(text);
  return parse_text_matrix(text);
}

MatrixInput read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string emit_matrix_text(const IntMatrix& M, MatrixKind kind) {
  std::string out;
  if (kind == MatrixKind::B) out += "# kind: B\n";
  out += std::to_string(M.rows()) + " " + std::to_string(M.cols()) + "\n";
  if (M.rows() && M.cols()) out += M.to_string() + "\n";
  return out;
}

std::string emit_matrix_json(const IntMatrix& M, MatrixKind kind) {
  json doc{{"cols", M.cols()}, {"kind", std::string(kind_name(kind))}, {"rows", rows_json(M)}};
  return doc.dump();
}

std::string emit_group(const AbelianGroup& group) { return group_json(group).dump(); }

std::string emit_report(const AnalysisReport& r) {
  json blocks = json::array();
  for (const auto& b : r.decomposition.blocks)
    blocks.push_back(json{{"columns", index_json(b.columns)}, {"d", b.d}, {"n", b.n}});
  json multiplicities = json::array();
  for (std::size_t l : r.cover.multiplicities) multiplicities.push_back(l);
  json strata = json::array();
  for (const auto& s : r.strata_summary) strata.push_back(json{{"count", s.count}, {"dim", s.dim}});

  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["input"] = json{{"cols", r.input.cols()},
                      {"kind", std::string(kind_name(r.kind))},
                      {"matrix", rows_json(r.input)},
                      {"rows", r.input.rows()}};
  doc["n"] = r.n;
  doc["d"] = r.d;
  doc["dim"] = r.dim;
  doc["smooth"] = r.smooth;
  doc["simple"] = r.simple;
  doc["sing_codim"] = r.sing_codim ? json(*r.sing_codim) : json(nullptr);
  doc["isolated"] = r.isolated;
  doc["pi1"] = group_json(r.pi1);
  doc["decomposition"] = json{
      {"blocks", std::move(blocks)}, {"loops", index_json(r.decomposition.loops)}, {"p", r.decomposition.p}};
  doc["irreducible"] = r.irreducible;
  doc["two_form_dim"] = r.two_form_dim;
  doc["cover"] = json{{"A_under", rows_json(r.cover.A_under)},
                      {"B_bar", rows_json(r.cover.B_bar)},
                      {"deck", group_json(r.cover.deck)},
                      {"gamma_order", integer_json(r.cover.gamma_order)},
                      {"multiplicities", std::move(multiplicities)}};
  doc["strata_summary"] = std::move(strata);
  return doc.dump();
}

AnalysisReport parse_report(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("schema_version") != kSchemaVersion)
      throw Error(ErrorCode::ParseError, "unsupported schema_version " + doc["schema_version"].dump());
    AnalysisReport r;
    const json& input = doc.at("input");
    r.kind = kind_from_string(input.at("kind").get<std::string>());
    r.input = matrix_of(input.at("matrix"), count_of(input.at("cols")));
    if (r.input.rows() != count_of(input.at("rows")))
      throw Error(ErrorCode::ParseError, "input row count mismatch");
    r.n = count_of(doc.at("n"));
    r.d = count_of(doc.at("d"));
    r.dim = count_of(doc.at("dim"));
    r.smooth = doc.at("smooth").get<bool>();
    r.simple = doc.at("simple").get<bool>();
    if (!doc.at("sing_codim").is_null()) r.sing_codim = count_of(doc["sing_codim"]);
    r.isolated = doc.at("isolated").get<bool>();
    r.pi1 = group_of(doc.at("pi1"));
    const json& dec = doc.at("decomposition");
    r.decomposition.p = count_of(dec.at("p"));
    r.decomposition.loops = index_of(dec.at("loops"));
    for (const auto& b : dec.at("blocks"))
      r.decomposition.blocks.push_back({index_of(b.at("columns")), count_of(b.at("n")), count_of(b.at("d"))});
    r.irreducible = doc.at("irreducible").get<bool>();
    r.two_form_dim = count_of(doc.at("two_form_dim"));
    const json& cover = doc.at("cover");
    for (const auto& l : cover.at("multiplicities")) r.cover.multiplicities.push_back(count_of(l));
    r.cover.A_under = matrix_of(cover.at("A_under"), r.cover.multiplicities.size());
    r.cover.B_bar = matrix_of(cover.at("B_bar"), r.n - r.d);
    r.cover.deck = group_of(cover.at("deck"));
    r.cover.gamma_order = integer_of(cover.at("gamma_order"));
    for (const auto& s : doc.at("strata_summary"))
      r.strata_summary.push_back({count_of(s.at("dim")), count_of(s.at("count"))});
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
  }
}

}  // namespace hypertoric::report_io
