#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "birdtrack/basis.hpp"
#include "birdtrack/epsilon.hpp"
#include "birdtrack/json_io.hpp"
#include "birdtrack/tracebasis.hpp"
#include "birdtrack/verify.hpp"

namespace birdtrack::cli {

using json = nlohmann::json;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"basis", "gram", "singlets", "trace-basis", "lr",
                                          "transient", "eval", "verify", "correlator"};
  return c;
}

enum class Format { Json, Latex, Text };

struct CommandConfig {
  std::string command;
  std::optional<int> k, m, n, N;
  std::string source = "builtin";
  Format format = Format::Text;
  std::uint64_t seed = 1;
  std::string output;  // empty: stdout
};

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  if (s == "text") return Format::Text;
  fail(ErrorCode::ParseError, "format must be json, latex or text");
}

/// Raised for invalid flag combinations; maps to exit status 2.
struct ConfigError : Error {
  using Error::Error;
};

[[noreturn]] inline void config_fail(const std::string& msg) { throw ConfigError(ErrorCode::ParseError, msg); }

inline int need(const std::optional<int>& v, const char* flag, const std::string& cmd, int lo) {
  if (!v) config_fail(cmd + " requires --" + flag);
  if (*v < lo) config_fail("--" + std::string(flag) + " must be at least " + std::to_string(lo));
  return *v;
}

inline void forbid(const std::optional<int>& v, const char* flag, const std::string& cmd) {
  if (v) config_fail(cmd + " does not take --" + flag);
}

/// Per-command flag validation, before any computation.
inline void validate(const CommandConfig& c) {
  const auto& cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), c.command) == cmds.end()) config_fail("unknown command '" + c.command + "'");
  const auto& cmd = c.command;
  const bool uses_k = cmd == "basis" || cmd == "gram" || cmd == "singlets" || cmd == "trace-basis" || cmd == "eval" ||
                      cmd == "correlator";
  const bool uses_mn = cmd == "lr" || cmd == "transient";
  if (uses_k) {
    need(c.k, "k", cmd, 1);
    forbid(c.m, "m", cmd);
    forbid(c.n, "n", cmd);
  } else if (uses_mn) {
    need(c.m, "m", cmd, 0);
    need(c.n, "n", cmd, 0);
    forbid(c.k, "k", cmd);
    need(c.N, "N", cmd, 2);
  } else {
    forbid(c.k, "k", cmd);
    forbid(c.m, "m", cmd);
    forbid(c.n, "n", cmd);
  }
  if (cmd == "eval" || cmd == "correlator") need(c.N, "N", cmd, 1);
  if (c.N && *c.N < 1) config_fail("--N must be positive");
  if (cmd == "correlator" && *c.k > 3) config_fail("correlator supports k <= 3");
  if (cmd == "singlets" && *c.k > 4) config_fail("singlets supports k <= 4");
  parse_source(c.source);
  if (cmd == "trace-basis" && c.source != "builtin" && c.source != "trace" && c.source != "trace+orthogonalize")
    config_fail("trace-basis takes --source trace or trace+orthogonalize");
  if (c.format == Format::Latex && cmd != "singlets" && cmd != "basis" && cmd != "gram" && cmd != "trace-basis")
    config_fail("latex output is available for basis, gram, singlets and trace-basis");
}

// ---------------------------------------------------------------------------
// Rendering helpers.

inline std::string latex_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int d = p.degree(); d >= 0; --d) {
    mpq_class c = p.coefficient(d);
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = abs(c);
    std::string coef;
    if (a != 1 || d == 0) coef = a.get_den() == 1 ? a.get_num().get_str() : "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    std::string mono = d == 0 ? "" : d == 1 ? "N" : "N^{" + std::to_string(d) + "}";
    s += (s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ")) + coef + mono;
  }
  return s;
}

inline std::string latex_rf(const RationalFunction& r) {
  if (r.is_polynomial()) return latex_poly(r.num());
  return "\\frac{" + latex_poly(r.num()) + "}{" + latex_poly(r.den()) + "}";
}

inline std::string latex_coeff(const RadicalCoefficient& c) {
  if (c.is_zero()) return "0";
  std::string s;
  for (const auto& [r, m] : c.terms()) {
    if (!s.empty()) s += " + ";
    s += latex_rf(m);
    if (!(r == Polynomial(1))) s += "\\sqrt{" + latex_poly(r) + "}";
  }
  return s;
}

/// Terms of a bent state or operator keyed by the underlying permutation.
inline std::string latex_element(const InvariantElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [p, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += "\\left(" + latex_coeff(c) + "\\right)" + format_cycles(p);
  }
  return s;
}

inline std::string text_element(const InvariantElement& e) {
  std::string s;
  for (const auto& [p, c] : e.terms()) s += (s.empty() ? "" : " + ") + ("(" + c.to_string() + ")*" + format_cycles(p));
  return s.empty() ? "0" : s;
}

inline json gram_json(const std::vector<std::vector<RadicalCoefficient>>& g) {
  json rows = json::array();
  for (const auto& r : g) {
    json row = json::array();
    for (const auto& c : r) row.push_back(io::to_json(c));
    rows.push_back(row);
  }
  return rows;
}

inline json rational_matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& v : r) row.push_back(io::rational_to_json(v));
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Commands. Each writes to `out` and returns the exit status.

inline int cmd_basis(const CommandConfig& c, std::ostream& out) {
  const int k = *c.k;
  auto src = parse_source(c.source);
  auto states = basis_states(k, src);
  if (c.format == Format::Json) {
    json list = json::array();
    for (const auto& s : states) list.push_back(io::to_json(s));
    out << io::versioned({{"command", "basis"}, {"k", k}, {"source", c.source}, {"states", list}}).dump(2) << "\n";
  } else if (c.format == Format::Latex) {
    out << "\\begin{tabular}{rl}\n";
    for (std::size_t i = 0; i < states.size(); ++i) out << (i + 1) << " & $" << latex_element(states[i]) << "$ \\\\\n";
    out << "\\end{tabular}\n";
  } else {
    for (std::size_t i = 0; i < states.size(); ++i) out << "state " << (i + 1) << ": " << text_element(states[i]) << "\n";
  }
  return 0;
}

inline int cmd_gram(const CommandConfig& c, std::ostream& out) {
  auto states = basis_states(*c.k, parse_source(c.source));
  auto g = gram_matrix(states);
  if (c.format == Format::Json) {
    json body{{"command", "gram"}, {"k", *c.k}, {"source", c.source}, {"gram", gram_json(g)}};
    if (c.N) {
      body["N"] = *c.N;
      body["specialized"] = rational_matrix_json(specialize(g, *c.N));
    }
    out << io::versioned(body).dump(2) << "\n";
  } else if (c.format == Format::Latex) {
    out << "\\begin{pmatrix}\n";
    for (const auto& r : g) {
      for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " & " : "") << latex_coeff(r[j]);
      out << " \\\\\n";
    }
    out << "\\end{pmatrix}\n";
  } else {
    for (const auto& r : g) {
      for (std::size_t j = 0; j < r.size(); ++j) out << (j ? "\t" : "") << r[j].to_string();
      out << "\n";
    }
    if (c.N) {
      out << "at N=" << *c.N << ":\n";
      for (const auto& r : specialize(g, *c.N)) {
        for (std::size_t j = 0; j < r.size(); ++j) out << (j ? "\t" : "") << r[j].get_str();
        out << "\n";
      }
    }
  }
  return 0;
}

inline int cmd_singlets(const CommandConfig& c, std::ostream& out) {
  auto states = basis_states(*c.k, parse_source(c.source));
  auto table = singlet_table(states);
  const std::size_t n = table.size();
  std::size_t projectors = 0, transitions = 0;
  for (const auto& row : table)
    for (const auto& s : row) (s.kind == SingletOperator::Kind::Projector ? projectors : transitions)++;
  if (c.format == Format::Json) {
    json ops = json::array();
    for (const auto& row : table)
      for (const auto& s : row) ops.push_back(io::to_json(s));
    out << io::versioned({{"command", "singlets"},
                          {"k", *c.k},
                          {"source", c.source},
                          {"projectors", projectors},
                          {"transitions", transitions},
                          {"operators", ops}})
               .dump(2)
        << "\n";
  } else if (c.format == Format::Latex) {
    out << "% states\n\\begin{tabular}{rl}\n";
    for (std::size_t i = 0; i < n; ++i) out << "$m_{" << (i + 1) << "}$ & $" << latex_element(states[i]) << "$ \\\\\n";
    out << "\\end{tabular}\n\n% operators: chi |m_i><m_j|\n\\begin{tabular}{c|" << std::string(n, 'c') << "}\n";
    for (std::size_t j = 0; j < n; ++j) out << " & $m_{" << (j + 1) << "}^\\dagger$";
    out << " \\\\\n\\hline\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << "$m_{" << (i + 1) << "}$";
      for (std::size_t j = 0; j < n; ++j) {
        const auto& s = table[i][j];
        out << " & $" << (s.kind == SingletOperator::Kind::Projector ? "P" : "T") << "_{" << (i + 1) << (j + 1)
            << "}: \\chi = " << latex_coeff(s.normalization) << "$";
      }
      out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
  } else {
    out << projectors << " projectors, " << transitions << " transition operators\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out << table[i][j].kind_string() << " (" << (i + 1) << "," << (j + 1) << ") chi = " << table[i][j].normalization.to_string()
            << "\n";
  }
  return 0;
}

inline int cmd_trace_basis(const CommandConfig& c, std::ostream& out) {
  const int k = *c.k;
  const bool ortho = c.source == "trace+orthogonalize";
  std::vector<InvariantElement> states = ortho ? orthogonal_trace_states(k) : trace_basis_states(k);
  std::vector<std::string> labels;
  if (ortho && k == 3) labels = {"(1)(2)(3)", "(1)(2 3)", "(1 2)(3)", "(1 3)(2)", "f", "d"};
  else if (ortho) {
    auto order = trace_basis_order(k);
    for (int idx : gram_schmidt(trace_basis_states(k)).kept) labels.push_back(format_cycles(order[idx]));
  } else
    for (const auto& p : trace_basis_order(k)) labels.push_back(format_cycles(p));
  std::vector<RadicalCoefficient> norms;
  for (const auto& s : states) norms.push_back(inner_product(s, s));
  if (c.format == Format::Json) {
    json list = json::array();
    for (std::size_t i = 0; i < states.size(); ++i)
      list.push_back({{"label", labels[i]}, {"norm", io::to_json(norms[i])}, {"state", io::to_json(states[i])}});
    out << io::versioned({{"command", "trace-basis"}, {"k", k}, {"source", c.source}, {"states", list}}).dump(2) << "\n";
  } else if (c.format == Format::Latex) {
    out << "\\begin{tabular}{ll}\n";
    for (std::size_t i = 0; i < states.size(); ++i) out << "$" << labels[i] << "$ & $" << latex_coeff(norms[i]) << "$ \\\\\n";
    out << "\\end{tabular}\n";
  } else {
    for (std::size_t i = 0; i < states.size(); ++i) out << labels[i] << "\tnorm " << norms[i].to_string() << "\n";
  }
  return 0;
}

inline int cmd_lr(const CommandConfig& c, std::ostream& out) {
  const int N = *c.N;
  auto shapes = lr_decomposition(*c.m, *c.n, N);
  mpq_class total = lr_total_dimension(shapes, N);
  mpz_class expect;
  mpz_ui_pow_ui(expect.get_mpz_t(), N, *c.m + *c.n);
  if (c.format == Format::Json) {
    json list = json::array();
    for (const auto& s : shapes) {
      auto stripped = strip_full_columns(s, N);
      list.push_back({{"shape", io::to_json(s)}, {"reduced", io::to_json(stripped)},
                      {"dimension", io::rational_to_json(irrep_dimension_at(stripped, N))}});
    }
    out << io::versioned({{"command", "lr"}, {"m", *c.m}, {"n", *c.n}, {"N", N}, {"shapes", list},
                          {"total_dimension", io::rational_to_json(total)}, {"conserved", total == expect}})
               .dump(2)
        << "\n";
  } else {
    for (const auto& s : shapes) {
      auto stripped = strip_full_columns(s, N);
      out << s.to_string() << " -> " << stripped.to_string() << " dim " << irrep_dimension_at(stripped, N).get_str() << "\n";
    }
    out << "total " << total.get_str() << " = " << N << "^" << (*c.m + *c.n) << ": " << (total == expect ? "yes" : "no") << "\n";
  }
  return total == expect ? 0 : 1;
}

inline int cmd_transient(const CommandConfig& c, std::ostream& out) {
  auto params = transient_singlet_params(*c.m, *c.n, *c.N);
  if (c.format == Format::Json) {
    json list = json::array();
    for (const auto& p : params) list.push_back(io::to_json(p));
    out << io::versioned({{"command", "transient"}, {"m", *c.m}, {"n", *c.n}, {"N", *c.N}, {"records", list}}).dump(2) << "\n";
  } else {
    if (params.empty()) out << "no transient singlets\n";
    for (const auto& p : params) out << "a=" << p.a << " b=" << p.b << " k=" << p.k << " alpha=" << p.alpha << "\n";
  }
  return 0;
}

inline int cmd_eval(const CommandConfig& c, std::ostream& out) {
  auto src = parse_source(c.source);
  const int count = singlet_count(*c.k, *c.N, src);
  if (c.format == Format::Json)
    out << io::versioned({{"command", "eval"}, {"k", *c.k}, {"N", *c.N}, {"source", c.source}, {"singlet_count", count}}).dump(2)
        << "\n";
  else
    out << "singlet count " << count << "\n";
  return 0;
}

inline int cmd_verify(const CommandConfig& c, std::ostream& out) {
  auto results = run_invariant_suite(c.seed);
  int passed = 0;
  for (const auto& r : results) passed += r.passed;
  const int failed = static_cast<int>(results.size()) - passed;
  if (c.format == Format::Json) {
    json list = json::array();
    for (const auto& r : results) list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out << io::versioned({{"command", "verify"}, {"passed", passed}, {"failed", failed}, {"checks", list}}).dump(2) << "\n";
  } else {
    for (const auto& r : results) out << (r.passed ? "PASS  " : "FAIL  ") << r.name << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
    out << passed << " passed, " << failed << " failed\n";
  }
  return failed ? 1 : 0;
}

/// <m_i| U_1 x ... x U_k x conj(V_1) x ... |m_j> with seeded unitaries.
inline int cmd_correlator(const CommandConfig& c, std::ostream& out) {
  const int k = *c.k, N = *c.N;
  auto states = basis_states(k, parse_source(c.source));
  std::vector<ComplexMatrix> legs;
  for (int i = 0; i < 2 * k; ++i) legs.push_back(sample_special_unitary(N, c.seed + i));
  ComplexMatrix m = correlator_matrix(states, legs, N);
  if (c.format == Format::Json) {
    out << io::versioned({{"command", "correlator"}, {"k", k}, {"N", N}, {"seed", c.seed}, {"matrix", io::to_json(m)}}).dump(2)
        << "\n";
  } else {
    std::ostringstream s;
    s.precision(12);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index q = 0; q < m.cols(); ++q) s << (q ? "\t" : "") << m(r, q).real() << (m(r, q).imag() < 0 ? "-" : "+") << std::abs(m(r, q).imag()) << "i";
      s << "\n";
    }
    out << s.str();
  }
  return 0;
}

inline json error_json(std::string_view kind, std::string_view code, std::string_view message) {
  return io::versioned({{"error", {{"kind", kind}, {"code", code}, {"message", message}}}});
}

/// 0 success, 1 verification failure, 2 configuration error.
inline int run(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
  } catch (const Error& e) {
    err << error_json("config", to_string(e.code()), e.what()).dump() << "\n";
    return 2;
  }
  std::ostringstream buf;
  int status = 0;
  try {
    const auto& cmd = c.command;
    if (cmd == "basis") status = cmd_basis(c, buf);
    else if (cmd == "gram") status = cmd_gram(c, buf);
    else if (cmd == "singlets") status = cmd_singlets(c, buf);
    else if (cmd == "trace-basis") status = cmd_trace_basis(c, buf);
    else if (cmd == "lr") status = cmd_lr(c, buf);
    else if (cmd == "transient") status = cmd_transient(c, buf);
    else if (cmd == "eval") status = cmd_eval(c, buf);
    else if (cmd == "verify") status = cmd_verify(c, buf);
    else status = cmd_correlator(c, buf);
  } catch (const Error& e) {
    // Library preconditions (unsupported k, dimension caps) reject the request itself.
    err << error_json("config", to_string(e.code()), e.what()).dump() << "\n";
    return 2;
  }
  if (c.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(c.output);
    if (!f) {
      err << error_json("config", "ParseError", "cannot open " + c.output).dump() << "\n";
      return 2;
    }
    f << buf.str();
  }
  if (status == 1) err << error_json("verification", "Failed", c.command + " reported failing checks").dump() << "\n";
  return status;
}

}  // namespace birdtrack::cli
