#include "j3/cli/app.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "j3/cli/format.hpp"

namespace j3::cli {
namespace {

using nlohmann::json;

struct Settings {
  bool json = false;
  bool oracle = false;
  int precision = kDefaultPrecision;
  double tol = kDefaultTol;
};

/// Failure already reported to the user, carrying the exit code.
struct Reported {
  int code;
};

class Session {
 public:
  Session(const Settings& s, std::ostream& out, std::ostream& err)
      : s_(s), out_(out), err_(err), ev_({s.tol, s.oracle}) {}

  Value eval(const std::string& text, const Environment& env = {}) {
    return ev_.evaluate(*parse(text), env).value;
  }
  J3 eval_j3(const std::string& text) { return to_j3(eval(text)); }
  OracleProbe& probe() { return ev_.probe(); }
  double tol() const { return s_.tol; }

  void emit(const Value& v) {
    EvalResult r{v, std::nullopt};
    if (s_.oracle) r.oracle_delta = ev_.probe().max_deviation();
    if (s_.json) {
      out_ << to_json(r).dump() << '\n';
      return;
    }
    out_ << format_text(v, s_.precision) << '\n';
    if (r.oracle_delta) out_ << "oracle_delta = " << format_real(*r.oracle_delta, 3) << '\n';
  }

  void report(const std::string& code, const std::string& message,
              std::optional<std::size_t> column = std::nullopt) {
    if (s_.json) {
      out_ << error_json(code, message, column).dump() << '\n';
    } else {
      err_ << "error: " << message << '\n';
    }
  }

  /// Runs `body`, reporting any failure. Returns the exit code.
  template <typename F>
  int guarded(F&& body) {
    try {
      body();
      return 0;
    } catch (const ParseError& e) {
      report("ParseError", e.what(), e.column());
      return 2;
    } catch (const EvalError& e) {
      report(e.code(), e.what());
      return 1;
    } catch (const MathError& e) {
      report(std::string(to_string(e.code())), e.what());
      return 1;
    }
  }

 private:
  Settings s_;
  std::ostream& out_;
  std::ostream& err_;
  Evaluator ev_;
};

bool is_reserved(const std::string& name) {
  return is_builtin_constant(name) || builtin_arity(name) >= 0 || name == "let" || name == "_";
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int repl(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err, bool interactive) {
  Environment env;
  std::string line;
  while (true) {
    if (interactive) out << "j3> " << std::flush;
    if (!std::getline(in, line)) break;
    line = trim(line);
    if (line.empty()) continue;
    if (line == "quit" || line == "exit") break;

    Session session(s, out, err);
    session.guarded([&] {
      std::string name;
      std::string expr = line;
      if (line.rfind("let ", 0) == 0) {
        const auto eq = line.find('=');
        name = trim(line.substr(4, eq == std::string::npos ? std::string::npos : eq - 4));
        if (eq == std::string::npos || !is_identifier(name)) {
          throw ParseError(5, name, "'let NAME = EXPR'");
        }
        if (is_reserved(name)) throw EvalError("ReservedName", "'" + name + "' is reserved");
        expr = line.substr(eq + 1);
      }
      const Value v = session.eval(expr, env);
      if (std::holds_alternative<double>(v) || std::holds_alternative<J3>(v)) {
        env.insert_or_assign("_", to_j3(v));
        if (!name.empty()) env.insert_or_assign(name, to_j3(v));
      } else if (!name.empty()) {
        throw EvalError("TypeError", "only numbers can be bound to names");
      }
      session.emit(v);
    });
  }
  if (interactive) out << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, bool interactive) {
  CLI::App app{"Calculator for J3-numbers u + vj + wjj.", "j3"};
  Settings s;
  app.add_flag("--json", s.json, "Print results as JSON");
  app.add_flag("--oracle", s.oracle, "Cross-check products and inverses against the matrix route");
  app.add_option("--precision", s.precision, "Significant digits in text output")
      ->check(CLI::Range(1, 17));
  app.add_option("--tol", s.tol, "Classification tolerance")->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  std::string expr, s_expr, t_expr, a_expr, p_expr, q_expr;
  long branch = 0;
  auto sub = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->fallthrough();
    return c;
  };
  auto* c_eval = sub("eval", "Evaluate an expression");
  c_eval->add_option("expr", expr)->required();
  auto* c_repl = sub("repl", "Read-evaluate-print loop");
  auto* c_classify = sub("classify", "Zero, Invertible, ZeroDivisorL or ZeroDivisorM");
  c_classify->add_option("expr", expr)->required();
  auto* c_lin = sub("solve-linear", "Solve s * x = t");
  c_lin->add_option("--s", s_expr)->required();
  c_lin->add_option("--t", t_expr)->required();
  auto* c_quad = sub("solve-quadratic", "Solve a * x^2 + b * x + c = 0 (a = 1 if omitted)");
  c_quad->add_option("--a", a_expr);
  c_quad->add_option("--p,--b", p_expr)->required();
  c_quad->add_option("--q,--c", q_expr)->required();
  auto* c_sqrt = sub("sqrt", "Square roots of a real number");
  c_sqrt->add_option("real", expr)->required();
  auto* c_dec = sub("decompose", "Polar factors and cylindrical coordinates");
  c_dec->add_option("expr", expr)->required();
  auto* c_exp = sub("exp", "Exponential");
  c_exp->add_option("expr", expr)->required();
  auto* c_log = sub("log", "Logarithm");
  c_log->add_option("expr", expr)->required();
  c_log->add_option("--branch", branch, "Add 2 pi k gamma");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (s.json) {
      out << error_json("UsageError", e.what()).dump() << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return 2;
  }

  if (c_repl->parsed()) return repl(s, in, out, err, interactive);

  Session session(s, out, err);
  return session.guarded([&] {
    if (c_eval->parsed()) {
      session.emit(session.eval(expr));
    } else if (c_classify->parsed()) {
      session.emit(classify(session.eval_j3(expr), session.tol()));
    } else if (c_lin->parsed()) {
      const J3 st = session.eval_j3(s_expr);
      const J3 tt = session.eval_j3(t_expr);
      const SolutionSet sol = solve_linear(st, tt, session.tol());
      for (const J3& x : sample_points(sol)) session.probe().mul(st, x);
      session.emit(sol);
    } else if (c_quad->parsed()) {
      const J3 a = a_expr.empty() ? kOne : session.eval_j3(a_expr);
      const J3 b = session.eval_j3(p_expr);
      const J3 c = session.eval_j3(q_expr);
      const SolutionSet sol = solve_quadratic(a, b, c, session.tol());
      for (const J3& x : sample_points(sol)) {
        session.probe().mul(a, session.probe().mul(x, x));
        session.probe().mul(b, x);
      }
      session.emit(sol);
    } else if (c_sqrt->parsed()) {
      const J3 r = session.eval_j3(expr);
      if (r.v() != 0.0 || r.w() != 0.0) throw EvalError("TypeError", "sqrt takes a real number");
      const SolutionSet sol = sqrt_real(r.u());
      for (const J3& x : sol.values) session.probe().mul(x, x);
      session.emit(sol);
    } else if (c_dec->parsed()) {
      const J3 x = session.eval_j3(expr);
      const PolarForm pf = polar_decompose(x);
      session.probe().mul(pf.p, pf.u_dir);
      session.emit(Decomposition{pf, to_cyl(x)});
    } else if (c_exp->parsed()) {
      const J3 x = session.eval_j3(expr);
      const J3 y = exp(x);
      session.emit(chop(y, modulus(y) * std::max(1.0, modulus(x))));
    } else if (c_log->parsed()) {
      const J3 y = log_branch(session.eval_j3(expr), branch);
      session.emit(chop(y, modulus(y)));
    }
  });
}

}  // namespace j3::cli
