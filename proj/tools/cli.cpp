#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hypertoric/analysis.hpp"
#include "hypertoric/arrangement.hpp"
#include "hypertoric/error.hpp"
#include "hypertoric/fungroup.hpp"
#include "hypertoric/gale.hpp"
#include "hypertoric/generators.hpp"
#include "hypertoric/linalg.hpp"
#include "hypertoric/report_io.hpp"

namespace hypertoric::cli {

namespace {

struct Options {
  std::string kind;
  std::size_t flat_limit = matroid::kDefaultFlatLimit;
  std::size_t iso_limit = matroid::kDefaultIsoLimit;
  bool json = false;

  std::string file;
  std::string file2;
  bool oracle = false;
  std::uint64_t oracle_bound = fungroup::kDefaultOracleBound;
  std::string alpha;
  std::string example_kind;
  std::vector<long> example_params;
  std::string output;
};

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(idx[k] + 1);
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string indent(const IntMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0)
    return "  (" + std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + ")\n";
  std::string out;
  std::istringstream lines(M.to_string());
  for (std::string line; std::getline(lines, line);) out += "  " + line + "\n";
  return out;
}

report_io::MatrixInput load(const Options& o, const std::string& path) {
  auto in = report_io::read_matrix_file(path);
  if (o.kind == "A") in.kind = MatrixKind::A;
  if (o.kind == "B") in.kind = MatrixKind::B;
  return in;
}

Config config_of(const Options& o) {
  Config c;
  c.flat_limit = o.flat_limit;
  c.iso_limit = o.iso_limit;
  c.oracle_bound = o.oracle_bound;
  return c;
}

IntVector parse_alpha(const std::string& text) {
  IntVector out;
  std::string tok;
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream words(norm);
  while (words >> tok) {
    const std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size() ||
        !std::all_of(tok.begin() + static_cast<long>(start), tok.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw Error(ErrorCode::ParseError, "alpha entries must be integers, got '" + tok + "'");
    }
    out.emplace_back(tok[0] == '+' ? tok.substr(1) : tok, 10);
  }
  return out;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto in = load(o, o.file);
  IntMatrix A, B;
  if (in.kind == MatrixKind::A) {
    A = in.matrix;
    B = linalg::kernel_basis(A);
  } else {
    B = in.matrix;
    A = linalg::kernel_basis(B.transpose()).transpose();
    if (A.rows() == 0) A = IntMatrix(0, B.rows());
  }
  auto diags = gale::verify_gale_pair(A, B);
  if (A.cols() == A.rows() && diags.empty()) diags.push_back({"ZeroBRow", "n = d, the kernel is zero"});
  if (diags.empty()) {
    out << "valid: n = " << A.cols() << ", d = " << A.rows() << "\n";
    return 0;
  }
  for (const auto& d : diags) out << d.code << ": " << d.detail << "\n";
  return 1;
}

int cmd_gale(const Options& o, std::ostream& out) {
  const auto in = load(o, o.file);
  const auto datum = make_datum(in.matrix, in.kind);
  if (in.kind == MatrixKind::A) {
    out << report_io::emit_matrix_text(datum.pair.B, MatrixKind::B);
  } else {
    out << report_io::emit_matrix_text(datum.pair.A, MatrixKind::A);
  }
  return 0;
}

int cmd_simplify(const Options& o, std::ostream& out) {
  const auto in = load(o, o.file);
  const auto datum = make_datum(in.matrix, in.kind);
  const auto& data = datum.parallel;
  out << "B_bar (" << data.class_count() << " classes):\n" << indent(data.representatives);
  out << "multiplicities:";
  for (std::size_t l : data.multiplicities) out << ' ' << l;
  out << "\n";
  for (std::size_t k = 0; k < data.class_count(); ++k) {
    out << "class " << k + 1 << ":";
    for (std::size_t j : data.classes[k]) out << ' ' << (data.signs[j] < 0 ? "-" : "+") << j + 1;
    out << "\n";
  }
  return 0;
}

int cmd_pi1(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = load(o, o.file);
  const auto datum = make_datum(in.matrix, in.kind);
  const AbelianGroup group = fungroup::pi1(datum.parallel);
  if (o.json) {
    out << report_io::emit_group(group) << "\n";
  } else {
    out << group.to_string() << "\n";
  }
  if (!o.oracle) return 0;
  const AbelianGroup check = fungroup::pi1_oracle(datum.parallel, o.oracle_bound);
  if (check == group) {
    if (!o.json) out << "oracle: " << check.to_string() << " (agrees)\n";
    return 0;
  }
  err << "oracle disagrees: " << check.to_string() << "\n";
  return 1;
}

int cmd_strata(const Options& o, std::ostream& out) {
  const auto in = load(o, o.file);
  const auto datum = make_datum(in.matrix, in.kind);
  out << "rank\tdim\tmult\tflat\tslice\n";
  for (const auto& s : arrangement::strata(datum.pair, o.flat_limit)) {
    out << s.flat.rank << '\t' << s.stratum_dim << '\t' << (s.multiplicated ? "yes" : "no") << '\t'
        << "{" << join_indices(s.flat.elements) << "}" << '\t' << s.slice_note << "\n";
  }
  return 0;
}

void print_decomposition(const DecompositionReport& dec, std::ostream& out) {
  out << "p = " << dec.p << ", r = " << dec.r() << "\n";
  if (dec.p) out << "loops: " << join_indices(dec.loops) << "\n";
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    const auto& blk = dec.blocks[b];
    out << "block " << b + 1 << ": columns " << join_indices(blk.columns) << " (n = " << blk.n
        << ", d = " << blk.d << ")\n";
  }
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto in = load(o, o.file);
  const AnalysisReport r = analyze(in.matrix, in.kind, config_of(o));
  if (o.json) {
    out << report_io::emit_report(r) << "\n";
    return 0;
  }
  out << "n = " << r.n << ", d = " << r.d << ", dim = " << r.dim << "\n";
  out << "smooth: " << yes_no(r.smooth) << "\n";
  out << "simple: " << yes_no(r.simple) << "\n";
  out << "sing_codim: " << (r.sing_codim ? std::to_string(*r.sing_codim) : "none") << "\n";
  out << "isolated: " << yes_no(r.isolated) << "\n";
  out << "pi1: " << r.pi1.to_string() << "\n";
  out << "decomposition: ";
  print_decomposition(r.decomposition, out);
  out << "irreducible: " << yes_no(r.irreducible) << "\n";
  out << "two_form_dim: " << r.two_form_dim << "\n";
  out << "cover: s = " << r.cover.multiplicities.size() << ", deck = " << r.cover.deck.to_string()
      << ", |Gamma| = " << r.cover.gamma_order.get_str() << "\n";
  out << "strata:";
  for (const auto& s : r.strata_summary) out << " dim " << s.dim << " x" << s.count << ";";
  out << "\n";
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto in = load(o, o.file);
  const auto datum = make_datum(in.matrix, in.kind);
  const auto dec = decompose(datum.pair.A);
  print_decomposition(dec, out);
  out << "irreducible: " << yes_no(is_irreducible(dec)) << "\n";
  out << "two_form_dim: " << two_form_dim(dec) << "\n";
  return 0;
}

int cmd_cover(const Options& o, std::ostream& out) {
  const auto in = load(o, o.file);
  const auto datum = make_datum(in.matrix, in.kind);
  const auto cover = universal_cover(datum);
  out << "A_under:\n" << indent(cover.A_under);
  out << "B_bar:\n" << indent(cover.B_bar);
  out << "multiplicities:";
  for (std::size_t l : cover.multiplicities) out << ' ' << l;
  out << "\n";
  out << "deck: " << cover.deck.to_string() << "\n";
  out << "gamma_order: " << cover.gamma_order.get_str() << "\n";
  const auto check = verify_simplification_diagram(datum.pair, cover.B_bar, datum.parallel,
                                                   cover.A_under);
  out << "diagram: " << (check.ok ? "ok" : "FAILED") << "\n";
  for (const auto& d : check.diagnostics) out << "  " << d << "\n";
  return check.ok ? 0 : 1;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto a = load(o, o.file);
  const auto b = load(o, o.file2);
  const auto da = make_datum(a.matrix, a.kind);
  const auto db = make_datum(b.matrix, b.kind);
  const auto witness = classify_equal(da.pair.A, db.pair.A, o.iso_limit);
  if (!witness) {
    out << "DIFFERENT\n";
    return 0;
  }
  out << "EQUAL\n";
  out << "witness: " << join_indices(*witness) << "\n";
  return 0;
}

int cmd_generic(const Options& o, std::ostream& out) {
  const auto in = load(o, o.file);
  const auto datum = make_datum(in.matrix, in.kind);
  const IntVector alpha = parse_alpha(o.alpha);
  const bool generic = arrangement::is_generic(datum.pair, alpha, o.flat_limit);
  const auto arr = arrangement::affine_offsets(datum.pair, alpha);
  out << (generic ? "generic" : "not generic") << "\n";
  out << "offsets:";
  for (const auto& x : arr.offsets) out << ' ' << x.get_str();
  out << "\n";
  return 0;
}

int cmd_moment(const Options& o, std::ostream& out) {
  const auto in = load(o, o.file);
  const auto datum = make_datum(in.matrix, in.kind);
  const std::string text = moment_ideal(datum.pair.A).text();
  if (!text.empty()) out << text << "\n";
  return 0;
}

int cmd_example(const Options& o, std::ostream& out) {
  const auto ex = generators::generate_example(o.example_kind, o.example_params);
  const std::string text = o.json ? report_io::emit_matrix_json(ex.matrix, ex.kind) + "\n"
                                  : report_io::emit_matrix_text(ex.matrix, ex.kind);
  if (o.output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::BadParams, "cannot write " + o.output);
  file << text;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of affine hypertoric varieties from integer matrix data", "hypertoric"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--kind", o.kind, "Input is the A side or the B side")
      ->check(CLI::IsMember({"A", "B"}));
  app.add_option("--flat-limit", o.flat_limit, "Largest ground set for flat enumeration")
      ->check(CLI::Range(std::size_t{1}, kernels::kMaxTableGround));
  app.add_option("--iso-limit", o.iso_limit, "Largest ground set for isomorphism search")
      ->check(CLI::Range(std::size_t{1}, kernels::kMaxTableGround));
  app.add_flag("--json", o.json, "Machine-readable output");

  auto file_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Matrix file")->required();
    return sub;
  };
  auto* validate = file_cmd("validate", "Check the Gale pair invariants");
  auto* gale = file_cmd("gale", "Print the Gale dual matrix");
  auto* simplify = file_cmd("simplify", "Parallel classes and the simplification");
  auto* pi1 = file_cmd("pi1", "Fundamental group of the regular locus");
  pi1->add_flag("--oracle", o.oracle, "Cross-check by enumerating Gamma");
  pi1->add_option("--oracle-bound", o.oracle_bound, "Largest |Gamma| the oracle enumerates");
  auto* strata = file_cmd("strata", "Stratification by flats");
  auto* analyze_cmd = file_cmd("analyze", "Full invariant report");
  auto* decompose_cmd = file_cmd("decompose", "Block decomposition");
  auto* cover = file_cmd("cover", "Universal cover datum and diagram check");
  auto* classify = file_cmd("classify", "Compare two data up to equivalence");
  classify->add_option("file2", o.file2, "Second matrix file")->required();
  auto* generic = file_cmd("generic", "Genericity of a character alpha");
  generic->add_option("--alpha", o.alpha, "Integer vector, comma or space separated")->required();
  auto* moment = file_cmd("moment", "Moment map ideal");
  auto* example = app.add_subcommand("example", "Generate an example matrix");
  example->add_option("kind", o.example_kind, "atype | minnilp | omin | graph")
      ->required()
      ->check(CLI::IsMember({"atype", "minnilp", "omin", "graph"}));
  example->add_option("params", o.example_params, "Integer parameters");
  example->add_option("-o,--output", o.output, "Write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (gale->parsed()) return cmd_gale(o, out);
    if (simplify->parsed()) return cmd_simplify(o, out);
    if (pi1->parsed()) return cmd_pi1(o, out, err);
    if (strata->parsed()) return cmd_strata(o, out);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (cover->parsed()) return cmd_cover(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (generic->parsed()) return cmd_generic(o, out);
    if (moment->parsed()) return cmd_moment(o, out);
    if (example->parsed()) return cmd_example(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hypertoric::cli
