#include "dimjac/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dimjac/dynamics/integrator.hpp"
#include "dimjac/dynamics/newtonian.hpp"
#include "dimjac/dynamics/output.hpp"
#include "dimjac/jacobi/coisotropic.hpp"
#include "dimjac/jacobi/polynomial_parser.hpp"
#include "dimjac/jacobi/product.hpp"
#include "dimjac/jacobi/serialize.hpp"
#include "dimjac/lang/evaluator.hpp"
#include "dimjac/lang/format.hpp"
#include "dimjac/lang/parser.hpp"
#include "dimjac/verify/suites.hpp"

#ifndef DIMJAC_DEFAULT_DATA_DIR
#define DIMJAC_DEFAULT_DATA_DIR "data"
#endif

namespace dimjac::cli {

using nlohmann::json;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimension: return kExitDimension;
    case ErrorKind::kParse: return kExitParse;
    case ErrorKind::kIo: return kExitIo;
    case ErrorKind::kStructural:
    case ErrorKind::kDomain: return kExitStructural;
  }
  return kExitStructural;
}

namespace {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimension: return "dimension";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kStructural: return "structural";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kDomain: return "domain";
  }
  return "structural";
}

struct Options {
  bool json = false;
  bool rational = false;
};

// Relative system paths that do not exist fall back to the bundled data.
std::filesystem::path resolve_data_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative() && !std::filesystem::exists(p)) {
    auto bundled = std::filesystem::path(DIMJAC_DEFAULT_DATA_DIR) / p;
    if (std::filesystem::exists(bundled)) return bundled;
  }
  return p;
}

UnitSystemPtr load_system(const std::string& path) {
  return std::make_shared<const UnitSystem>(UnitSystem::load(resolve_data_path(path)));
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ------------------------------------------------------------ quantities

struct Rendered {
  std::string text, value, unit;
};

template <Magnitude M>
Rendered render(const BasicQuantity<M>& q, lang::FormatStyle style, const std::string& unit) {
  if (unit.empty()) {
    std::string text = lang::format_quantity(q, style);
    auto space = text.find(' ');
    if (space == std::string::npos) return {text, text, ""};
    return {text, text.substr(0, space), text.substr(space + 1)};
  }
  auto expr = lang::parse(unit);
  if (expr->kind != lang::QuantityExpr::Kind::kLiteral || expr->number != "1" || !expr->unit)
    throw ParseError(0, "a unit expression", "'" + unit + "'");
  auto meaning = lang::resolve_unit(*expr->unit, *q.system());
  if (meaning.dim != q.dim())
    throw DimensionMismatch("cannot express " + q.system()->render_dim(q.dim()) + " in " + unit +
                            " (" + q.system()->render_dim(meaning.dim) + ")");
  M value = scale_exact(q.magnitude(), Rational(1 / meaning.scale));
  std::string v = magnitude_text(value);
  return {v + " " + unit, v, unit};
}

template <Magnitude M>
json quantity_json(const BasicQuantity<M>& q, const Rendered& r, const std::string& expr) {
  json j;
  j["expression"] = expr;
  j["text"] = r.text;
  j["unit"] = r.unit;
  if constexpr (std::is_same_v<M, double>)
    j["value"] = std::strtod(r.value.c_str(), nullptr);
  else
    j["value"] = r.value;
  j["dim"] = std::vector<int>(q.dim().exponents().begin(), q.dim().exponents().end());
  j["dimension"] = q.system()->render_dim(q.dim());
  return j;
}

lang::FormatStyle parse_style(const std::string& s) {
  return s == "base" ? lang::FormatStyle::kBase : lang::FormatStyle::kCanonical;
}

template <Magnitude M>
int eval_as(const Options& o, const std::string& expr, const std::string& from,
            const std::string& to, const std::string& unit, const std::string& style,
            std::ostream& out) {
  auto source = load_system(from);
  auto q = lang::evaluate<M>(expr, source);
  if (!to.empty()) q = convert(q, load_system(to));
  auto r = render(q, parse_style(style), unit);
  if (o.json)
    print_json(out, quantity_json(q, r, expr));
  else
    out << r.text << '\n';
  return kExitOk;
}

int eval_command(const Options& o, const std::string& expr, const std::string& from,
                 const std::string& to, const std::string& unit, const std::string& style,
                 std::ostream& out) {
  return o.rational ? eval_as<Rational>(o, expr, from, to, unit, style, out)
                    : eval_as<double>(o, expr, from, to, unit, style, out);
}

// ------------------------------------------------------------ structures

int jacobi_check_command(const Options& o, const std::string& file, bool conditions,
                         std::ostream& out, std::ostream& err) {
  auto l = load_structure(file);
  auto check = is_jacobi_pair(l);
  std::optional<ExtensionReport> report;
  if (conditions) report = check_extension_conditions(l);
  if (o.json) {
    json j{{"jacobi", check.ok}};
    if (!check.ok) {
      j["identity"] = check.identity;
      j["witness"] = check.witness;
    }
    if (report) {
      json list = json::array();
      for (const auto& c : report->conditions) list.push_back({{"ok", c.ok}, {"witness", c.witness}});
      j["conditions"] = list;
    }
    print_json(out, j);
  } else {
    out << (check.ok ? "Jacobi pair" : "not a Jacobi pair") << '\n';
    if (!check.ok) out << "identity: " << check.identity << "\nwitness: " << check.witness << '\n';
    if (report)
      for (std::size_t i = 0; i < 4; ++i) {
        const auto& c = report->conditions[i];
        out << "condition " << i + 1 << ": " << (c.ok ? "holds" : "fails");
        if (!c.ok) out << " (" << c.witness << ")";
        out << '\n';
      }
  }
  if (!check.ok) {
    err << "error: not a Jacobi pair: " << check.identity << " has component " << check.witness
        << '\n';
    return kExitStructural;
  }
  return kExitOk;
}

std::pair<int, int> parse_weights(const std::string& text) {
  auto comma = text.find(',');
  auto number = [&](std::string_view s, std::size_t offset) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError(offset, "an integer weight", "'" + std::string(s) + "'");
    return v;
  };
  if (comma == std::string::npos) throw ParseError(text.size(), "weights 'm,n'", "'" + text + "'");
  std::string_view all(text);
  return {number(all.substr(0, comma), 0), number(all.substr(comma + 1), comma + 1)};
}

int bracket_command(const Options& o, const std::string& file, const std::string& f_text,
                    const std::string& g_text, const std::string& weights, std::ostream& out) {
  auto l = load_structure(file);
  auto f = parse_polynomial(f_text, l.names());
  auto g = parse_polynomial(g_text, l.names());
  PotentialSection result;
  if (weights.empty()) {
    result = {1, jacobi_bracket(l, f, g)};
  } else {
    auto [m, n] = parse_weights(weights);
    result = dimensioned_bracket(l, {m, f}, {n, g});
  }
  std::string text = result.body.to_string(l.names());
  if (o.json) {
    json j{{"bracket", text}, {"terms", polynomial_to_json(result.body)}};
    if (!weights.empty()) j["weight"] = result.weight;
    print_json(out, j);
  } else if (weights.empty()) {
    out << text << '\n';
  } else {
    out << text << " (weight " << result.weight << ")\n";
  }
  return kExitOk;
}

void print_structure(std::ostream& out, const LichnerowiczStructure& l) {
  out << "vars:";
  for (const auto& n : l.names()) out << ' ' << n;
  out << "\npi: " << l.pi().to_string(l.names()) << "\nR: " << l.r().to_string(l.names())
      << '\n';
}

int product_command(const Options& o, const std::string& a, const std::string& b,
                    std::ostream& out) {
  auto l = product_jacobi(load_structure(a), load_structure(b));
  if (o.json)
    print_json(out, structure_to_json(l));
  else
    print_structure(out, l);
  return kExitOk;
}

CoordinateSubspace parse_zero_set(const std::string& text, const LichnerowiczStructure& l) {
  CoordinateSubspace s;
  std::stringstream in(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(in, item, ',')) {
    std::size_t start = offset;
    offset += item.size() + 1;
    auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw ParseError(start, "a coordinate name or index", "nothing");
    item = item.substr(b, e - b + 1);
    auto it = std::find(l.names().begin(), l.names().end(), item);
    if (it != l.names().end()) {
      s.zero_set.push_back(static_cast<std::size_t>(it - l.names().begin()));
      continue;
    }
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), index);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError(start, "a coordinate name or index", "'" + item + "'");
    s.zero_set.push_back(index);
  }
  return s;
}

int coisotropic_command(const Options& o, const std::string& file, const std::string& zero,
                        std::ostream& out) {
  auto l = load_structure(file);
  auto jacobi = is_jacobi_pair(l);
  if (!jacobi.ok)
    throw NotJacobi("coisotropy needs a Jacobi pair; " + jacobi.identity + " has component " +
                    jacobi.witness);
  auto c = is_coisotropic(l, parse_zero_set(zero, l));
  if (o.json) {
    json j{{"coisotropic", c.ok}};
    if (!c.ok) j["witness"] = c.witness;
    print_json(out, j);
  } else {
    out << (c.ok ? "coisotropic" : "not coisotropic") << '\n';
    if (!c.ok) out << "witness: " << c.witness << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------ dynamics

Rational json_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) return decimal_rational(j.get<double>());
  throw DocumentError("mass matrix entries must be numbers or rational strings");
}

HamiltonianSpec load_hamiltonian(const std::string& path) {
  json j = read_json_file(path);
  try {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
      throw DocumentError("hamiltonian document needs an integer 'n'");
    long n = j["n"].get<long>();
    if (n < 1 || n > 15) throw DocumentError("'n' must be between 1 and 15");
    auto dof = static_cast<std::size_t>(n);
    if (j.contains("h")) {
      auto names = darboux_names(dof);
      return HamiltonianSpec(dof, polynomial_from_json(j["h"], names));
    }
    if (!j.contains("mass") || !j["mass"].is_array())
      throw DocumentError("hamiltonian document needs 'h' or 'mass'");
    RationalMatrix mass;
    for (const auto& row : j["mass"]) {
      if (!row.is_array()) throw DocumentError("'mass' must be a list of rows");
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(json_rational(x));
      mass.push_back(std::move(r));
    }
    if (mass.size() != dof) throw DocumentError("'mass' must have n rows");
    std::vector<std::string> positions;
    auto names = darboux_names(dof);
    positions.assign(names.begin(), names.begin() + n);
    Polynomial v(dof);
    if (j.contains("potential")) v = polynomial_from_json(j["potential"], positions);
    return newtonian_energy(mass, v);
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("malformed hamiltonian document: ") + e.what());
  }
}

std::vector<double> parse_state(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    std::string trimmed = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), v);
    if (trimmed.empty() || ec != std::errc() || ptr != trimmed.data() + trimmed.size())
      throw ParseError(start, "a number", trimmed.empty() ? "nothing" : "'" + trimmed + "'");
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  body(f);
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

struct SimulateArgs {
  std::string h_file, state, method = "rk4", out_file, plot_file;
  double dt = 1e-3;
  long steps = 1000;
};

int simulate_command(const Options& o, const SimulateArgs& a, std::ostream& out,
                     std::ostream& err) {
  auto h = load_hamiltonian(a.h_file);
  auto values = parse_state(a.state);
  if (values.size() != h.dimension())
    throw InvalidState("state has " + std::to_string(values.size()) + " components, expected " +
                       std::to_string(h.dimension()) + " (q, p, z)");
  auto s0 = ContactState::from_flat(values);
  IntegratorConfig cfg{a.dt, a.steps, parse_method(a.method)};
  auto traj = integrate(h, s0, cfg);
  if (!a.out_file.empty()) write_file(a.out_file, [&](std::ostream& f) { write_csv(f, traj); });
  if (!a.plot_file.empty()) write_file(a.plot_file, [&](std::ostream& f) { write_svg(f, traj); });
  const auto& last = traj.samples.back();
  double drift = energy_drift(h, traj);
  if (o.json) {
    json j{{"steps", traj.samples.size() - 1},
           {"t", last.t},
           {"q", last.state.q()},
           {"p", last.state.p()},
           {"z", last.state.z()},
           {"h", last.h},
           {"max_drift", drift},
           {"truncated", traj.truncated}};
    if (traj.truncated) j["diagnostic"] = traj.diagnostic;
    print_json(out, j);
  } else if (a.out_file.empty()) {
    write_csv(out, traj);
  } else {
    out << "steps: " << traj.samples.size() - 1 << "\nt: " << format_double(last.t)
        << "\nfinal:";
    for (std::size_t i = 0; i < last.state.dof(); ++i)
      out << " q_" << i + 1 << '=' << format_double(last.state.q()[i]);
    for (std::size_t i = 0; i < last.state.dof(); ++i)
      out << " p_" << i + 1 << '=' << format_double(last.state.p()[i]);
    out << " z=" << format_double(last.state.z()) << "\nh: " << format_double(last.h)
        << "\nmax drift: " << format_double(drift) << '\n';
  }
  if (traj.truncated) {
    err << "error: " << traj.diagnostic << '\n';
    return kExitStructural;
  }
  return kExitOk;
}

// ------------------------------------------------------------ selftest

int selftest_command(const Options& o, const std::string& data_dir, const std::string& only,
                     std::ostream& out) {
  auto suites = verify::acceptance_suites(data_dir);
  bool all = true;
  json rows = json::array();
  if (!o.json)
    out << std::left << std::setw(4) << "id" << std::setw(50) << "suite" << std::setw(8)
        << "result" << std::setw(12) << "time" << "detail\n";
  for (const auto& suite : suites) {
    if (!only.empty() && suite.id != only) continue;
    auto report = verify::run_suite(suite);
    all = all && report.passed();
    std::ostringstream time;
    time << std::fixed << std::setprecision(3) << report.seconds << "s";
    std::string detail = report.result.detail;
    if (report.result.ok && !report.passed()) detail = "over the time limit; " + detail;
    if (o.json) {
      rows.push_back({{"id", suite.id},
                      {"suite", suite.title},
                      {"passed", report.passed()},
                      {"cases", report.result.cases},
                      {"seconds", report.seconds},
                      {"limit_seconds", suite.limit_seconds},
                      {"detail", detail}});
    } else {
      out << std::left << std::setw(4) << suite.id << std::setw(50) << suite.title << std::setw(8)
          << (report.passed() ? "PASS" : "FAIL") << std::setw(12) << time.str() << detail
          << '\n';
    }
  }
  if (o.json) print_json(out, {{"passed", all}, {"suites", rows}});
  return all ? kExitOk : kExitSelftestFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dimensioned quantities, Jacobi structures and contact dynamics", "dimjac"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_flag("--rational", o.rational, "Exact rational arithmetic");

  std::string expr, system_file = "si.json", to_file, unit, style = "canonical";
  auto* eval = app.add_subcommand("eval", "Evaluate a quantity expression");
  eval->add_option("--system", system_file, "Unit system JSON (default si.json)");
  eval->add_option("--unit", unit, "Express the result in this unit");
  eval->add_option("--style", style, "canonical or base")->check(CLI::IsMember({"canonical", "base"}));
  eval->add_option("expression", expr, "Quantity expression")->required();

  std::string from_file;
  auto* conv = app.add_subcommand("convert", "Evaluate in one unit system, report in another");
  conv->add_option("--from,--system", from_file, "Source unit system JSON")->required();
  conv->add_option("--to", to_file, "Target unit system JSON")->required();
  conv->add_option("--unit", unit, "Express the result in this unit of the target system");
  conv->add_option("--style", style, "canonical or base")->check(CLI::IsMember({"canonical", "base"}));
  conv->add_option("expression", expr, "Quantity expression")->required();

  std::string structure_file;
  bool conditions = false;
  auto* check = app.add_subcommand("jacobi-check", "Check the Jacobi pair identities");
  check->add_option("file", structure_file, "Structure JSON")->required();
  check->add_flag("--conditions", conditions, "Also report the four extension conditions");

  std::string f_text, g_text, weights;
  auto* bracket = app.add_subcommand("bracket", "Jacobi or dimensioned bracket of two polynomials");
  bracket->add_option("file", structure_file, "Structure JSON")->required();
  bracket->add_option("--f", f_text, "First polynomial")->required();
  bracket->add_option("--g", g_text, "Second polynomial")->required();
  bracket->add_option("--weights", weights, "Weights 'm,n' for the dimensioned bracket");

  std::string second_file;
  auto* product = app.add_subcommand("product", "Product Jacobi structure");
  product->add_option("first", structure_file, "First structure JSON")->required();
  product->add_option("second", second_file, "Second structure JSON")->required();

  std::string zero;
  auto* cois = app.add_subcommand("coisotropic", "Coisotropy of a coordinate subspace");
  cois->add_option("file", structure_file, "Structure JSON")->required();
  cois->add_option("--zero", zero, "Vanishing coordinates, names or indices, comma separated")
      ->required();

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Integrate contact Hamiltonian dynamics");
  simulate->set_help_flag("--help", "Print this help message and exit");
  simulate->add_option("--h", sim.h_file, "Hamiltonian JSON")->required();
  simulate->add_option("--state", sim.state, "Initial state q,p,z")->required();
  simulate->add_option("--dt", sim.dt, "Time step");
  simulate->add_option("--steps", sim.steps, "Number of steps");
  simulate->add_option("--method", sim.method, "rk4 or euler");
  simulate->add_option("--out", sim.out_file, "CSV trajectory file");
  simulate->add_option("--plot", sim.plot_file, "SVG chart of h and z");

  std::string data_dir = DIMJAC_DEFAULT_DATA_DIR, only;
  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");
  selftest->add_option("--data", data_dir, "Directory holding the unit system files");
  selftest->add_option("--only", only, "Run a single suite by id");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (eval->parsed()) return eval_command(o, expr, system_file, "", unit, style, out);
    if (conv->parsed()) return eval_command(o, expr, from_file, to_file, unit, style, out);
    if (check->parsed()) return jacobi_check_command(o, structure_file, conditions, out, err);
    if (bracket->parsed()) return bracket_command(o, structure_file, f_text, g_text, weights, out);
    if (product->parsed()) return product_command(o, structure_file, second_file, out);
    if (cois->parsed()) return coisotropic_command(o, structure_file, zero, out);
    if (simulate->parsed()) return simulate_command(o, sim, out, err);
    if (selftest->parsed()) return selftest_command(o, data_dir, only, out);
  } catch (const Error& e) {
    if (o.json) print_json(out, {{"error", {{"kind", kind_name(e.kind()), }, {"message", e.what()}}}});
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitStructural;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitStructural;
  }
  return kExitParse;
}

}  // namespace dimjac::cli
