#include "qba/cli.hpp"

#include <cctype>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qba/bweyl.hpp"
#include "qba/crosscheck.hpp"
#include "qba/error.hpp"
#include "qba/io.hpp"
#include "qba/lang.hpp"

namespace qba {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Dot };

struct Options {
  std::optional<unsigned> n;
  std::string basis;
  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned samples = 20;
  bool witness = false;
  std::vector<std::string> inputs;
};

/// Thrown for command-line misuse that CLI11 cannot see (bad combinations, bad n).
struct UsageError : Error {
  using Error::Error;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  throw UsageError("unknown format '" + s + "'");
}

bool is_ring_basis_name(const std::string& s) { return s == "M" || s == "X" || s == "W"; }

/// One command-line operand: an expression, or a JSON coefficient dump.
struct Operand {
  std::string source;
  std::optional<Expr> expr;
  std::optional<RingElem> ring;
  std::optional<OpCoeffs> op;
};

/// Operands resolved against one shared variable context.
struct Workspace {
  std::vector<Operand> operands;
  VarContext ctx;

  bool is_operator(std::size_t i) const {
    const Operand& o = operands[i];
    if (o.op) return true;
    if (o.ring) return false;
    return is_operator_expr(*o.expr);
  }

  OpCoeffs as_op(std::size_t i) const {
    const Operand& o = operands[i];
    if (o.op) return *o.op;
    if (o.ring) {
      // A function acts as the multiplication operator sum x^a y^{}.
      TermSet terms;
      for (Subset a : convert(*o.ring, RingBasis::X).support()) terms.insert({a, Subset{}});
      return OpCoeffs(o.ring->dim(), OpBasis::XY, std::move(terms));
    }
    return eval_quantum(*o.expr, ctx);
  }

  RingElem as_ring(std::size_t i) const {
    const Operand& o = operands[i];
    if (o.ring) return *o.ring;
    if (o.op) throw UsageError("operand " + std::to_string(i + 1) + " is an operator, not a function");
    return eval_classical(*o.expr, ctx);
  }
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Workspace load(const Options& opt, std::istream& in) {
  Workspace ws;
  bool used_stdin = false;
  std::vector<Expr> exprs;
  std::optional<unsigned> json_n;
  for (const std::string& raw : opt.inputs) {
    Operand o;
    o.source = raw;
    if (raw == "-") {
      if (used_stdin) throw UsageError("stdin can be read only once");
      used_stdin = true;
      o.source = read_all(in);
      while (!o.source.empty() && std::isspace(static_cast<unsigned char>(o.source.back()))) o.source.pop_back();
    }
    const auto first = o.source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && o.source[first] == '{') {
      json j;
      try {
        j = json::parse(o.source);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
      }
      if (j.contains("terms"))
        o.op = op_from_json(j);
      else
        o.ring = ring_from_json(j);
      const unsigned n = o.op ? o.op->dim() : o.ring->dim();
      if (json_n && *json_n != n) throw DimensionError("operands have different dimensions");
      json_n = n;
    } else {
      o.expr = parse(o.source);
      exprs.push_back(*o.expr);
    }
    ws.operands.push_back(std::move(o));
  }

  VarContext ctx = VarContext::infer(exprs);
  unsigned need = ctx.dim();
  if (json_n) {
    if (!exprs.empty() && need > *json_n) throw DimensionError("expression needs more variables than the JSON operand");
    need = *json_n;
  }
  if (opt.n) {
    if (*opt.n < need) throw UsageError("-n " + std::to_string(*opt.n) + " is smaller than the " + std::to_string(need) + " variables in use");
    if (json_n && *opt.n != *json_n) throw DimensionError("-n does not match the JSON operand");
    need = *opt.n;
  }
  ws.ctx = ctx.with_min_dim(need);
  return ws;
}

void print_op(std::ostream& out, const OpCoeffs& f, Format fmt) {
  if (fmt == Format::Json)
    out << to_json(f).dump() << "\n";
  else
    out << to_text(f) << "\n";
}

void print_ring(std::ostream& out, const RingElem& f, Format fmt) {
  if (fmt == Format::Json)
    out << to_json(f).dump() << "\n";
  else
    out << to_text(f) << "\n";
}

json matrix_json(const Gf2Matrix& m) {
  json rows = json::array();
  std::istringstream grid(to_grid(m));
  for (std::string line; std::getline(grid, line);) rows.push_back(line);
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

void print_matrix(std::ostream& out, const Gf2Matrix& m, unsigned n, Format fmt) {
  switch (fmt) {
    case Format::Text: out << to_grid(m) << "\n"; break;
    case Format::Json: out << matrix_json(m).dump() << "\n"; break;
    case Format::Dot: out << to_dot(m, n); break;
  }
}

int cmd_eval(const Options& opt, std::istream& in, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::Dot) throw UsageError("eval does not support dot output; use the dot command");
  const Workspace ws = load(opt, in);
  const bool ring_basis = is_ring_basis_name(opt.basis);
  if (!ws.is_operator(0) && (opt.basis.empty() || ring_basis)) {
    const RingElem f = ws.as_ring(0);
    if (opt.basis.empty() && fmt == Format::Text && ws.operands[0].expr) {
      out << format(normalize(*ws.operands[0].expr, ws.ctx)) << "\n";
      return kExitOk;
    }
    print_ring(out, convert(f, opt.basis.empty() ? RingBasis::X : parse_ring_basis(opt.basis)), fmt);
    return kExitOk;
  }
  if (ring_basis) throw UsageError("operator expressions need an operator basis (MY, XY, WY, MS, XS, WS)");
  const OpCoeffs f = ws.as_op(0);
  if (opt.basis.empty() && fmt == Format::Text) {
    out << format(expr_from_op(f, ws.ctx)) << "\n";
    return kExitOk;
  }
  print_op(out, convert_op_basis(f, opt.basis.empty() ? OpBasis::XY : parse_op_basis(opt.basis)), fmt);
  return kExitOk;
}

int cmd_mul(const Options& opt, std::istream& in, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::Dot) throw UsageError("mul prints text or json");
  const Workspace ws = load(opt, in);
  const OpBasis basis = opt.basis.empty() ? OpBasis::XY : parse_op_basis(opt.basis);
  print_op(out, op_mul(convert_op_basis(ws.as_op(0), basis), ws.as_op(1)), fmt);
  return kExitOk;
}

int cmd_convert(const Options& opt, std::istream& in, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::Dot) throw UsageError("convert prints text or json");
  const Workspace ws = load(opt, in);
  if (is_ring_basis_name(opt.basis)) {
    print_ring(out, convert(ws.as_ring(0), parse_ring_basis(opt.basis)), fmt);
  } else {
    print_op(out, convert_op_basis(ws.as_op(0), parse_op_basis(opt.basis)), fmt);
  }
  return kExitOk;
}

int cmd_entail(const Options& opt, std::istream& in, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::Dot) throw UsageError("entail prints text or json");
  const Workspace ws = load(opt, in);
  const Expr* p = ws.operands[0].expr ? &*ws.operands[0].expr : nullptr;
  const Expr* q = ws.operands[1].expr ? &*ws.operands[1].expr : nullptr;
  if (!p || !q) throw UsageError("entail takes two expressions");

  const bool classical = !is_operator_expr(*p) && !is_operator_expr(*q);
  EntailResult r;
  if (classical && !opt.witness)
    r.entails = entails_classical(*p, *q, ws.ctx);
  else
    r = entails_quantum(*p, *q, ws.ctx, opt.witness);

  if (fmt == Format::Json) {
    json j{{"entails", r.entails}};
    if (r.witness) j["witness"] = matrix_json(*r.witness);
    out << j.dump() << "\n";
  } else {
    out << (r.entails ? "yes" : "no") << "\n";
    if (r.witness) out << to_grid(*r.witness) << "\n";
  }
  return r.entails ? kExitOk : kExitNo;
}

int cmd_equiv(const Options& opt, std::istream& in, std::ostream& out) {
  const Format fmt = parse_format(opt.format);
  const Workspace ws = load(opt, in);
  const bool same = to_matrix(ws.as_op(0)) == to_matrix(ws.as_op(1));
  if (fmt == Format::Json)
    out << json{{"equivalent", same}}.dump() << "\n";
  else
    out << (same ? "yes" : "no") << "\n";
  return same ? kExitOk : kExitNo;
}

int cmd_matrix(const Options& opt, std::istream& in, std::ostream& out, bool force_dot) {
  const Format fmt = force_dot ? Format::Dot : parse_format(opt.format);
  const Workspace ws = load(opt, in);
  print_matrix(out, to_matrix(ws.as_op(0)), ws.ctx.dim(), fmt);
  return kExitOk;
}

int cmd_crosscheck(const Options& opt, std::ostream& out) {
  CrosscheckConfig cfg;
  if (opt.n) cfg.max_n = *opt.n;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  const CrosscheckReport report = run_crosscheck(cfg);
  const Format fmt = parse_format(opt.format);
  if (fmt == Format::Json) {
    json checks = json::array();
    for (const CheckOutcome& c : report.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
    out << json{{"checks", checks}, {"all_passed", report.all_passed()}}.dump() << "\n";
  } else {
    out << format_report(report);
  }
  return report.all_passed() ? kExitOk : kExitNo;
}

/// Echoes the offending input with a caret under the error offset.
void report_parse_error(std::ostream& err, const ParseError& e, const Options& opt) {
  err << "error: " << e.what() << "\n";
  if (opt.inputs.empty()) return;
  for (const std::string& src : opt.inputs) {
    if (src == "-" || e.offset() > src.size()) continue;
    err << "  " << src << "\n  " << std::string(e.offset(), ' ') << "^\n";
    break;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean differential operators: evaluate, multiply, convert and decide entailment"};
  app.name(args.empty() ? "qba" : args.front());
  app.require_subcommand(1);

  Options opt;
  const auto formats = CLI::IsMember({"text", "json", "dot"});
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("-n", opt.n, "Number of variables (defaults to the number in use)")->check(CLI::Range(1u, kMaxDim));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format: text, json or dot")->check(formats);
  };

  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression and print it canonically or in a basis");
  eval->add_option("expr", opt.inputs, "Expression, JSON dump, or - for stdin")->required()->expected(1);
  add_n(eval);
  eval->add_option("--basis", opt.basis, "M, X, W for functions; MY, XY, WY, MS, XS, WS for operators");
  add_format(eval);

  CLI::App* mul = app.add_subcommand("mul", "Multiply two operators (apply the right one first)");
  mul->add_option("operands", opt.inputs, "Two expressions or JSON dumps")->required()->expected(2);
  add_n(mul);
  mul->add_option("--basis", opt.basis, "Basis of the product (default XY)");
  add_format(mul);

  CLI::App* conv = app.add_subcommand("convert", "Re-express a function or operator in another basis");
  conv->add_option("input", opt.inputs, "Expression or JSON dump")->required()->expected(1);
  add_n(conv);
  conv->add_option("--basis", opt.basis, "Target basis")->required();
  add_format(conv);

  CLI::App* entail = app.add_subcommand("entail", "Decide whether P entails Q (exit 0 yes, 1 no)");
  entail->add_option("exprs", opt.inputs, "P and Q")->required()->expected(2);
  add_n(entail);
  entail->add_flag("--witness", opt.witness, "Print a matrix R with P = Q R");
  add_format(entail);

  CLI::App* equiv = app.add_subcommand("equiv", "Decide whether two expressions denote the same operator");
  equiv->add_option("exprs", opt.inputs, "Two expressions")->required()->expected(2);
  add_n(equiv);
  add_format(equiv);

  CLI::App* matrix = app.add_subcommand("matrix", "Print the operator matrix on function values");
  matrix->add_option("expr", opt.inputs, "Expression or JSON dump")->required()->expected(1);
  add_n(matrix);
  add_format(matrix);

  CLI::App* dot = app.add_subcommand("dot", "Print the operator as a Graphviz digraph");
  dot->add_option("expr", opt.inputs, "Expression or JSON dump")->required()->expected(1);
  add_n(dot);

  CLI::App* cross = app.add_subcommand("crosscheck", "Compare every closed formula with the matrix oracle");
  cross->add_option("-n", opt.n, "Largest n to test (default 3)")->check(CLI::Range(1u, kMaxDim));
  cross->add_option("--samples", opt.samples, "Random trials per check");
  cross->add_option("--seed", opt.seed, "Random seed");
  add_format(cross);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("qba");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(opt, in, out);
    if (mul->parsed()) return cmd_mul(opt, in, out);
    if (conv->parsed()) return cmd_convert(opt, in, out);
    if (entail->parsed()) return cmd_entail(opt, in, out);
    if (equiv->parsed()) return cmd_equiv(opt, in, out);
    if (matrix->parsed()) return cmd_matrix(opt, in, out, false);
    if (dot->parsed()) return cmd_matrix(opt, in, out, true);
    if (cross->parsed()) return cmd_crosscheck(opt, out);
  } catch (const ParseError& e) {
    report_parse_error(err, e, opt);
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qba
