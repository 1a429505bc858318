#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "celliep/celliep.hpp"
#include "celliep/json_io.hpp"

namespace celliep::cli {

namespace {

using json = json_io::json;

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string vector;
  std::string matrix;
  std::string spectrum;
  std::string tails;
  std::string mult;
  std::string perm;
  std::string out;
  double tol = kSpectrumTolerance;
  std::size_t n = 0;
  double lambda = 0.0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Inline JSON, or the contents of a file holding JSON.
json load(const std::string& raw, const char* flag) {
  const std::string text = trim(raw);
  if (text.empty()) throw ParseFailure(std::string(flag) + " is required");
  const char c = text.front();
  std::string body = text;
  if (c != '[' && c != '{' && c != '"' && c != '-' && !std::isdigit(static_cast<unsigned char>(c))) {
    std::ifstream in(text);
    if (!in) throw ParseFailure(std::string(flag) + ": cannot read file '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw ParseFailure(std::string(flag) + ": " + e.what());
  }
}

template <class F>
auto parse_as(const char* flag, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseFailure(std::string(flag) + ": " + e.what());
  }
}

void check_order(std::size_t n) {
  if (n > kMaxOrder)
    throw DomainError("order " + std::to_string(n) + " exceeds the limit of " +
                      std::to_string(kMaxOrder));
}

PositiveVector read_vector(const Options& o) {
  const json j = load(o.vector, "--vector");
  auto x = parse_as("--vector", [&] { return json_io::vector_from_json(j); });
  check_order(x.size());
  return x;
}

Matrix read_matrix(const Options& o) {
  const json j = load(o.matrix, "--matrix");
  auto m = parse_as("--matrix", [&] { return json_io::matrix_from_json(j); });
  check_order(m.rows());
  return m;
}

std::vector<double> read_reals(const std::string& raw, const char* flag) {
  const json j = load(raw, flag);
  return parse_as(flag, [&] { return json_io::values_from_json(j); });
}

std::vector<std::size_t> read_counts(const std::string& raw, const char* flag) {
  const json j = load(raw, flag);
  if (!j.is_array()) throw ParseFailure(std::string(flag) + " must be an array of integers");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ParseFailure(std::string(flag) + " must contain nonnegative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

GroupedSpec read_grouped(const Options& o) {
  GroupedSpec g(read_reals(o.tails, "--tails"), read_counts(o.mult, "--mult"));
  check_order(g.order());
  return g;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string list(const std::vector<double>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s + "}";
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

/// Solution plus an independent Jacobi check of the constructed matrix.
json solution_report(const IEPSolution& s, double tol, std::ostream& err) {
  const CellMatrix d = construct_cell_matrix(s.x);
  const Spectrum check = eig_symmetric(d.matrix());
  const bool ok = same_multiset(check.values(), s.full_spectrum.values(), tol);
  json j = json_io::to_json(s);
  j["matrix"] = json_io::to_json(d.matrix());
  j["verified_spectrum"] = check.values();
  j["verified"] = ok;
  std::vector<double> x(s.x.entries().begin(), s.x.entries().end());
  err << "generating vector x = " << list(x) << "\n"
      << "head eigenvalues    = " << list(s.head) << "\n"
      << "spectrum            = " << list(s.full_spectrum.values()) << "\n"
      << "jacobi check        : " << verdict(ok) << "\n";
  return j;
}

json cmd_construct(const Options& o, std::ostream& err) {
  const CellMatrix d = construct_cell_matrix(read_vector(o));
  err << "constructed " << d.order() << "x" << d.order() << " cell matrix\n";
  return json_io::to_json(d.matrix());
}

json cmd_spectrum(const Options& o, std::ostream& err) {
  if (o.vector.empty() == o.matrix.empty())
    throw ParseFailure("spectrum needs exactly one of --vector, --matrix");
  Matrix m;
  std::optional<PositiveVector> x;
  if (!o.vector.empty()) {
    x = read_vector(o);
    m = construct_cell_matrix(*x).matrix();
  } else {
    m = read_matrix(o);
    try {
      x = recognize_cell(m);
    } catch (const DomainError&) {
    }
  }
  const Spectrum oracle = eig_symmetric(m);
  json j{{"eigenvalues", oracle.values()}};
  err << "eigenvalues (jacobi)    = " << list(oracle.values()) << "\n";

  std::string note;
  if (!x) {
    note = "not a cell matrix";
  } else {
    try {
      const Spectrum reduced = spectrum_via_reduction(*x, o.tol);
      const bool agree = reduced.matches(oracle);
      j["via_reduction"] = reduced.values();
      j["agree"] = agree;
      err << "eigenvalues (reduction) = " << list(reduced.values()) << "\n"
          << "agreement               : " << verdict(agree) << "\n";
    } catch (const DomainError& e) {
      note = e.what();
    }
  }
  if (!note.empty()) {
    j["via_reduction"] = nullptr;
    j["reduction_note"] = note;
    err << "reduction not applicable: " << note << "\n";
  }
  return j;
}

json cmd_reduce(const Options& o, std::ostream& err) {
  const PositiveVector x = read_vector(o);
  const ReductionResult r = reduce_grouped(x);
  const ReductionAudit audit = audit_reduction(x, r);
  json j = json_io::to_json(r);
  j["audit"] = {{"max_forced_zero", audit.max_forced_zero},
                {"max_core_error", audit.max_core_error},
                {"max_block_error", audit.max_block_error}};
  err << "core order " << r.core.rows() << ", " << r.ops.size() << " elementary ops\n"
      << "largest forced-zero entry " << fmt(audit.max_forced_zero) << "\n";
  return j;
}

json cmd_solve3(const Options& o, std::ostream& err) {
  const auto v = read_reals(o.spectrum, "--spectrum");
  if (v.size() != 3) throw DomainError("solve3 needs exactly three eigenvalues");
  return solution_report(solve_cubic_iep(CubicSpectrumTarget(v[0], v[1], v[2])), o.tol, err);
}

json cmd_solve_uniform(const Options& o, std::ostream& err) {
  check_order(o.n);
  return solution_report(solve_uniform(o.n, o.lambda), o.tol, err);
}

json cmd_solve_two_group(const Options& o, std::ostream& err) {
  const auto tails = read_reals(o.tails, "--tails");
  const auto mult = read_counts(o.mult, "--mult");
  if (tails.size() != 2 || mult.size() != 2)
    throw DomainError("solve-2group needs two tails and two multiplicities");
  check_order(mult[0] + mult[1]);
  return solution_report(solve_two_group(tails[0], tails[1], mult[0], mult[1]), o.tol, err);
}

json cmd_solve_grouped(const Options& o, std::ostream& err) {
  return solution_report(solve_grouped(read_grouped(o)), o.tol, err);
}

json cmd_verify_perm(const Options& o, std::ostream& err) {
  const PositiveVector x = read_vector(o);
  const std::string raw = trim(o.perm);
  const json pj = !raw.empty() && raw.front() == '(' ? json(raw) : load(raw, "--perm");
  const Permutation pi = parse_as("--perm", [&] { return json_io::permutation_from_json(pj, x.size()); });
  const InvarianceReport report = spectrum_invariance_check(x, pi, o.tol);
  json j = json_io::to_json(report);
  j["permutation"] = json_io::to_json(pi);
  j["permuted"] = permute_vector(x, pi).to_vector();
  err << "pi = " << pi.to_cycle_string() << ", " << report.steps << " transpositions\n"
      << "transposition similarity : " << verdict(report.transpositions_ok) << "\n"
      << "spectra agree            : " << verdict(report.spectra_match) << "\n";
  return j;
}

json cmd_verify_membership(const Options& o, std::ostream& err) {
  const Spectrum s(read_reals(o.spectrum, "--spectrum"));
  const MembershipReport report = verify_membership(s, read_grouped(o), o.tol);
  err << "membership: " << (report.accepted ? "ACCEPT" : "REJECT") << "\n";
  for (const auto& f : report.failures) err << "  " << f << "\n";
  return json_io::to_json(report);
}

json cmd_detcheck(const Options& o, std::ostream& err) {
  const PositiveVector x = read_vector(o);
  const Matrix d = construct_cell_matrix(x).matrix();
  json rows = json::array();
  bool all = true;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    const double formula = principal_subdeterminant(x, i);
    const double numeric = numeric_determinant(d.leading(i));
    const double rel = std::abs(formula - numeric) / std::max(1.0, std::abs(formula));
    const bool ok = rel <= o.tol;
    all = all && ok;
    rows.push_back({{"order", i}, {"formula", formula}, {"numeric", numeric},
                    {"relative_error", rel}, {"agree", ok}});
    err << "order " << i << ": formula " << fmt(formula) << ", elimination " << fmt(numeric)
        << "  " << verdict(ok) << "\n";
  }
  return json{{"orders", std::move(rows)}, {"agree", all}};
}

json error_object(const char* kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cell matrix spectra, reductions and inverse eigenvalue constructions", "celliep"};
  app.require_subcommand(1, 1);
  Options o;

  using Handler = std::function<json(const Options&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const char* name, const char* desc, Handler h) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--tol", o.tol, "Relative tolerance for spectrum matching");
    sub->add_option("--out", o.out, "Write the JSON result to this file");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  auto* construct = add("construct", "Build D(x) from a generating vector", cmd_construct);
  construct->add_option("--vector", o.vector, "Generating vector (JSON or file)")->required();

  auto* spectrum = add("spectrum", "Eigenvalues by Jacobi and, when grouped, by reduction",
                       cmd_spectrum);
  spectrum->add_option("--vector", o.vector, "Generating vector (JSON or file)");
  spectrum->add_option("--matrix", o.matrix, "Matrix (JSON or file)");

  auto* reduce = add("reduce", "Elementary-similarity reduction of a grouped cell matrix",
                     cmd_reduce);
  reduce->add_option("--vector", o.vector, "Generating vector (JSON or file)")->required();

  auto* solve3 = add("solve3", "3x3 construction from {l1, l2, l3}", cmd_solve3);
  solve3->add_option("--spectrum", o.spectrum, "Three eigenvalues")->required();

  auto* uniform = add("solve-uniform", "Spectrum {(n-1)l, -l, ..., -l}", cmd_solve_uniform);
  uniform->add_option("--n", o.n, "Order")->required();
  uniform->add_option("--lambda", o.lambda, "lambda > 0")->required();

  auto* two = add("solve-2group", "Two groups with closed-form head eigenvalues",
                  cmd_solve_two_group);
  two->add_option("--tails", o.tails, "[lambda3, lambda4]")->required();
  two->add_option("--mult", o.mult, "[l1, l2]")->required();

  auto* grouped = add("solve-grouped", "k groups, head eigenvalues from the core",
                      cmd_solve_grouped);
  grouped->add_option("--tails", o.tails, "Negative tail eigenvalues")->required();
  grouped->add_option("--mult", o.mult, "Group sizes (>= 2)")->required();

  auto* vperm = add("verify-perm", "Spectrum invariance under a permutation", cmd_verify_perm);
  vperm->add_option("--vector", o.vector, "Generating vector (JSON or file)")->required();
  vperm->add_option("--perm", o.perm, "Mapping, {\"cycles\": ...} or \"(1 4)(2 5)\"")
      ->required();

  auto* vmem = add("verify-membership", "Check a spectrum against a grouped construction",
                   cmd_verify_membership);
  vmem->add_option("--spectrum", o.spectrum, "Candidate spectrum")->required();
  vmem->add_option("--tails", o.tails, "Negative tail eigenvalues")->required();
  vmem->add_option("--mult", o.mult, "Group sizes (>= 2)")->required();

  auto* det = add("detcheck", "Closed-form vs eliminated principal minors", cmd_detcheck);
  det->add_option("--vector", o.vector, "Generating vector (JSON or file)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << error_object("parse", e.what()).dump() << "\n";
    err << app.help();
    return kParseError;
  }

  auto emit = [&](const json& j) {
    const std::string text = j.dump(2);
    if (o.out.empty()) {
      out << text << "\n";
      return;
    }
    std::ofstream f(o.out);
    if (!f) throw ParseFailure("cannot write '" + o.out + "'");
    f << text << "\n";
  };

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      if (!(o.tol >= 0.0)) throw ParseFailure("--tol must be nonnegative");
      emit(handler(o, err));
      return kOk;
    } catch (const ParseFailure& e) {
      out << error_object("parse", e.what()).dump() << "\n";
      return kParseError;
    } catch (const ConvergenceError& e) {
      out << error_object("convergence", e.what()).dump() << "\n";
      return kConvergenceError;
    } catch (const DomainError& e) {
      out << error_object("domain", e.what()).dump() << "\n";
      return kDomainError;
    }
  }
  return kParseError;
}

}  // namespace celliep::cli
