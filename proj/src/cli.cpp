#include "superspace/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "superspace/errors.hpp"
#include "superspace/io.hpp"
#include "superspace/irreps.hpp"
#include "superspace/operators.hpp"
#include "superspace/sphere.hpp"
#include "superspace/verify.hpp"

namespace superspace {

namespace {

struct Options {
  int m = 0;
  int n = 0;
  std::string format = "text";
  std::string input_file;
  std::string polynomial;
  int max_k = 6;
  std::string part = "full";
  std::string route = "berezin";
  std::string weights;
  bool integral_one = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  int only = 0;
};

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--m", o.m, "number of commuting variables")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", o.n, "number of anticommuting pairs")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_input(CLI::App* cmd, Options& o) {
  add_params(cmd, o);
  cmd->add_option("--input", o.input_file, "read the polynomial from FILE");
  cmd->add_option("polynomial", o.polynomial, "polynomial text or JSON (default: stdin)");
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Polynomial read_polynomial(const Options& o, std::istream& in) {
  std::string text = o.polynomial;
  if (text.empty()) {
    if (!o.input_file.empty()) {
      std::ifstream file(o.input_file);
      if (!file) throw PreconditionError("cannot open " + o.input_file);
      text = read_all(file);
    } else {
      text = read_all(in);
    }
  }
  const SpaceParams params(o.m, o.n);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
    Polynomial p = polynomial_from_json(j);
    require_same_params(p.params(), params);
    return p;
  }
  // Trailing newlines from files and pipes are not part of the polynomial.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return parse_polynomial(text, params);
}

bool json_output(const Options& o) { return o.format == "json"; }

void emit_polynomial(const Options& o, const Polynomial& p, std::ostream& out) {
  if (json_output(o))
    out << polynomial_to_json(p).dump() << '\n';
  else
    out << format_polynomial(p) << '\n';
}

void emit_value(const Options& o, const PiScaledValue& v, std::ostream& out) {
  if (json_output(o))
    out << pi_value_to_json(v).dump() << '\n';
  else
    out << v.to_string() << '\n';
}

void emit_report_text(const DecompositionReport& r, std::ostream& out) {
  out << "k = " << r.k << (r.ladder == Ladder::Fermionic ? " (fermionic ladder)" : "") << '\n';
  if (r.components.empty()) out << "  (zero)\n";
  for (const auto& c : r.components) out << "  i = " << c.i << ": " << format_polynomial(c.harmonic) << '\n';
}

int cmd_dims(const Options& o, std::ostream& out) {
  const SpaceParams s(o.m, o.n);
  if (o.max_k < 0) throw PreconditionError("--max-k must be nonnegative");
  if (json_output(o)) {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 0; k <= o.max_k; ++k) {
      const auto [lhs, rhs] = dim_check(s, k);
      rows.push_back({{"k", k},
                      {"dimP", dim_Pk(s, k)},
                      {"dimH", dim_Hk(s, k)},
                      {"dimHb", dim_Hk_bosonic(s.m(), k)},
                      {"dimHf", dim_Hk_fermionic(s.n(), k)},
                      {"irrepSum", rhs}});
      (void)lhs;
    }
    out << nlohmann::json{{"m", s.m()}, {"n", s.n()}, {"M", s.super_dimension()}, {"rows", rows}}.dump() << '\n';
    return kExitOk;
  }
  out << "m = " << s.m() << ", n = " << s.n() << ", M = " << s.super_dimension() << '\n';
  out << "k\tdim P_k\tdim H_k\tdim H^b_k\tdim H^f_k\tirrep sum\n";
  for (int k = 0; k <= o.max_k; ++k)
    out << k << '\t' << dim_Pk(s, k) << '\t' << dim_Hk(s, k) << '\t' << dim_Hk_bosonic(s.m(), k) << '\t'
        << dim_Hk_fermionic(s.n(), k) << '\t' << dim_check(s, k).second << '\n';
  return kExitOk;
}

int cmd_laplace(const Options& o, std::istream& in, std::ostream& out) {
  const Polynomial p = read_polynomial(o, in);
  const Polynomial r = o.part == "b" ? laplace_b(p) : o.part == "f" ? laplace_f(p) : laplace(p);
  emit_polynomial(o, r, out);
  return kExitOk;
}

int cmd_fischer(const Options& o, std::istream& in, std::ostream& out) {
  const Polynomial p = read_polynomial(o, in);
  if (p.is_homogeneous()) {
    const auto report = fischer_decompose(p);
    if (json_output(o))
      out << to_json(report).dump() << '\n';
    else
      emit_report_text(report, out);
    return kExitOk;
  }
  const auto reports = fischer_decompose_buckets(p);
  if (json_output(o)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump() << '\n';
  } else {
    for (const auto& r : reports) emit_report_text(r, out);
  }
  return kExitOk;
}

int cmd_irreps(const Options& o, std::istream& in, std::ostream& out) {
  const auto parts = irrep_decompose(read_polynomial(o, in));
  if (json_output(o)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : parts) arr.push_back(to_json(c));
    out << arr.dump() << '\n';
    return kExitOk;
  }
  if (parts.empty()) out << "(zero)\n";
  for (const auto& c : parts)
    out << "(l,p,q) = (" << c.label.l << "," << c.label.p << "," << c.label.q << "): " << format_polynomial(c.part)
        << '\n';
  return kExitOk;
}

std::vector<Rational> parse_weights(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty weight", 0);
    out.push_back(parse_rational(item.substr(a, b - a + 1)));
  }
  return out;
}

int cmd_sphere(const Options& o, std::istream& in, std::ostream& out) {
  const Polynomial p = read_polynomial(o, in);
  if (o.integral_one) {
    const Rational v = integral_one(p);
    if (json_output(o))
      out << nlohmann::json{{"integral", "one"}, {"value", to_string(v)}}.dump() << '\n';
    else
      out << to_string(v) << '\n';
    return kExitOk;
  }
  std::vector<Rational> w;
  if (o.weights.empty()) {
    w.assign(static_cast<std::size_t>(o.n + 1), Rational(0));
    w[0] = 1;
  } else {
    w = parse_weights(o.weights);
  }
  const SphereFunctional T(p.params(), std::move(w));
  const Rational v = T(p);
  if (json_output(o)) {
    auto j = to_json(T);
    j["value"] = to_string(v);
    out << j.dump() << '\n';
  } else {
    out << to_string(v) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions options;
  options.seed = o.seed;
  std::vector<CheckResult> results;
  if (o.only != 0) {
    results.push_back(run_criterion(o.only, options));
  } else {
    results = run_acceptance(options);
    for (auto& r : run_invariants(options)) results.push_back(std::move(r));
  }
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (json_output(o))
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases},
                     {"counterexample", r.counterexample}});
    else
      out << format_result(r) << '\n';
  }
  if (json_output(o)) out << arr.dump() << '\n';
  return ok ? kExitOk : kExitInvariant;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Exact harmonic analysis in superspace R^{m|2n}", "superspace");
  app.require_subcommand(1);

  auto* dims = app.add_subcommand("dims", "dim P_k, dim H_k and the irreducible dimension sum for k <= max-k");
  add_params(dims, o);
  dims->add_option("--max-k", o.max_k, "largest degree (default 6)");

  auto* lap = app.add_subcommand("laplace", "apply the super Laplacian or one of its parts");
  add_input(lap, o);
  lap->add_option("--part", o.part, "full, b or f")->check(CLI::IsMember({"full", "b", "f"}));

  auto* fischer = app.add_subcommand("fischer", "Fischer decomposition of each degree bucket");
  add_input(fischer, o);

  auto* irreps = app.add_subcommand("irreps", "irreducible pieces of a homogeneous harmonic");
  add_input(irreps, o);

  auto* piz = app.add_subcommand("pizzetti", "Pizzetti integral over the supersphere");
  add_input(piz, o);

  auto* ber = app.add_subcommand("berezin", "integral of R exp(x^2) over superspace");
  add_input(ber, o);
  ber->add_option("--route", o.route, "berezin (fermionic derivative and Gaussian moments) or laplace (exp(-Delta/4))")
      ->check(CLI::IsMember({"berezin", "laplace"}));

  auto* sphere = app.add_subcommand("sphere", "sum_i a_i int_i R for weights a_0..a_n");
  add_input(sphere, o);
  sphere->add_option("--weights", o.weights, "comma separated a_0,...,a_n (default 1,0,...,0)");
  sphere->add_flag("--integral-one", o.integral_one, "evaluate the closed form of int_1 instead");

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria and invariant suites");
  verify->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--only", o.only, "run a single acceptance criterion (1..12)")->check(CLI::Range(1, 12));

  std::vector<const char*> argv{"superspace"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*dims) return cmd_dims(o, out);
    if (*lap) return cmd_laplace(o, in, out);
    if (*fischer) return cmd_fischer(o, in, out);
    if (*irreps) return cmd_irreps(o, in, out);
    if (*piz) {
      emit_value(o, pizzetti(read_polynomial(o, in)), out);
      return kExitOk;
    }
    if (*ber) {
      const Polynomial p = read_polynomial(o, in);
      emit_value(o, o.route == "laplace" ? superspace_pizzetti(p) : berezin(p), out);
      return kExitOk;
    }
    if (*sphere) return cmd_sphere(o, in, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPole;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace superspace
