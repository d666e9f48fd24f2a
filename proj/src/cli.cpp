#include "symcover/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "symcover/automorphism.hpp"
#include "symcover/cayley.hpp"
#include "symcover/graph_io.hpp"
#include "symcover/symmetric_basis.hpp"
#include "symcover/symmetry.hpp"

namespace symcover {

namespace {

struct Common {
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out = "json";
};

std::string parity_reason(int r, FormType t) {
  const FormType need = induced_type_of_symmetric_space(r);
  std::ostringstream os;
  os << "r = " << r << " is " << r % 4 << " mod 4, so a symmetric basis spans "
     << (need == FormType::Elliptic ? "an elliptic" : "a hyperbolic")
     << " space; the requested form is " << to_string(t);
  return os.str();
}

int cmd_basis(const Common& c, int r, const std::string& type_name, const std::string& method,
              std::ostream& out) {
  if (r < 1) throw std::invalid_argument("basis: r must be positive");
  const FormType t = parse_form_type(type_name);
  nlohmann::json j = {{"command", "basis"}, {"r", r}, {"type", to_string(t)}, {"method", method}};

  std::optional<SymmetricBasis> basis;
  if (method == "construct") {
    basis = construct_symmetric_basis(r, t);
  } else {
    if (2 * r > kMaxBruteForceDim) {
      throw std::invalid_argument("basis: --method=brute is limited to 2r <= " +
                       std::to_string(kMaxBruteForceDim));
    }
    basis = brute_force_symmetric_basis(standard_form(r, t), c.threads);
  }
  if (basis && !is_symmetric_basis(basis->form, basis->vectors)) {
    throw std::logic_error("basis: result failed verification");
  }
  const bool predicted = exists_symmetric_basis(r, t);
  if (basis.has_value() != predicted) {
    throw std::logic_error("basis: search disagrees with the existence criterion");
  }

  if (!basis) {
    const std::string reason = parity_reason(r, t);
    if (c.out == "json") {
      j["exists"] = false;
      j["reason"] = reason;
      out << j.dump(2) << '\n';
    } else {
      out << "NOT-EXISTS: " << reason << '\n';
    }
    return kExitOk;
  }
  if (c.out == "json") {
    j["exists"] = true;
    j["verified"] = true;
    j.update(to_json(*basis));
    out << j.dump(2) << '\n';
  } else {
    out << "symmetric basis of the standard " << to_string(t) << " form, r = " << r << " ("
        << method << ")\n";
    out << render_table(*basis);
  }
  return kExitOk;
}

std::vector<std::string> expand_checks(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& c : raw) {
    if (c == "all") return {};
    out.push_back(c);
  }
  return out;
}

int cmd_verify(const Common& c, int r, const std::vector<std::string>& checks,
               const std::string& export_path, bool timings, std::ostream& out) {
  if (r < 1 || r > kMaxCayleyRank) {
    throw std::invalid_argument("verify: r must be in 1.." + std::to_string(kMaxCayleyRank) + ", got " +
                     std::to_string(r));
  }
  MainTheoremOptions opts;
  opts.checks = expand_checks(checks);
  opts.seed = c.seed;
  const MainTheoremReport rep = verify_main_theorem(r, opts);

  if (!export_path.empty()) {
    const ExtraspecialGroup group = from_symmetric_generators(r);
    const auto gens = group.generators();
    std::ofstream f(export_path);
    if (!f) throw std::invalid_argument("verify: cannot write " + export_path);
    f << to_graph6(build_cayley(group, gens)) << '\n';
    if (!f) throw std::invalid_argument("verify: write failed for " + export_path);
  }

  if (c.out == "json") {
    nlohmann::json j = to_json(rep, timings);
    j["command"] = "verify";
    j["seed"] = c.seed;
    if (!export_path.empty()) j["exported"] = export_path;
    out << j.dump(2) << '\n';
  } else {
    out << "r = " << r << ", " << rep.vertices << " vertices";
    if (rep.aut_order) out << ", |Aut| = " << *rep.aut_order;
    out << " (formula " << rep.expected_order << ")\n";
    for (const auto& ch : rep.checks) {
      out << (ch.passed ? "PASS " : "FAIL ") << std::left << std::setw(16) << ch.name << ch.detail;
      if (timings) out << " [" << std::fixed << std::setprecision(1) << ch.millis << " ms]";
      out << '\n';
    }
  }
  return rep.all_passed() ? kExitOk : kExitCheckFailed;
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("aut: cannot read " + path);
  if (format == "edges") return read_dimacs(f);
  std::ostringstream ss;
  ss << f.rdbuf();
  return from_graph6(ss.str());
}

int cmd_aut(const Common& c, const std::string& path, const std::string& format,
            std::ostream& out) {
  Graph g;
  try {
    g = load_graph(path, format);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("aut: ") + e.what());
  }
  const AutomorphismSearch s = automorphism_search(g);
  const PermGroup& aut = s.group;
  const bool vt = is_vertex_transitive(g, aut);
  const bool at = is_arc_transitive(g, aut);
  std::optional<bool> two_at;
  const auto val = g.valency();
  if (!val) {
    two_at = false;
  } else if (*val >= 2 && g.is_connected()) {
    two_at = is_2_arc_transitive(g, aut);
  }
  std::vector<std::string> gens;
  for (const auto& p : aut.generators()) gens.push_back(p.cycle_string());
  std::ostringstream order;
  order << aut.order();

  if (c.out == "json") {
    nlohmann::json j = {{"command", "aut"},
                        {"n", g.n()},
                        {"edges", g.edge_count()},
                        {"order", order.str()},
                        {"generators", gens},
                        {"base", s.base},
                        {"orbit_sizes", s.orbit_sizes},
                        {"vertex_transitive", vt},
                        {"arc_transitive", at}};
    j["two_arc_transitive"] = two_at ? nlohmann::json(*two_at) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "n = " << g.n() << ", " << g.edge_count() << " edges\n";
    out << "order: " << order.str() << '\n';
    out << "vertex-transitive: " << yn(vt) << '\n';
    out << "arc-transitive: " << yn(at) << '\n';
    out << "2-arc-transitive: " << (two_at ? yn(*two_at) : "n/a") << '\n';
    out << "generators:\n";
    for (const auto& p : gens) out << "  " << p << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric bases, extraspecial 2-groups and their Cayley graphs"};
  app.name("symcover");
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--seed", common.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--threads", common.threads, "Worker threads for brute-force search")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--out", common.out, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  int basis_r = 0;
  std::string basis_type;
  std::string method = "construct";
  auto* basis = app.add_subcommand("basis", "Construct a symmetric basis of the standard form");
  basis->add_option("r", basis_r, "Half the dimension")->required();
  basis->add_option("type", basis_type, "hyperbolic or elliptic")->required();
  basis->add_option("--method", method)
      ->check(CLI::IsMember({"construct", "brute"}))
      ->capture_default_str();

  int verify_r = 0;
  std::vector<std::string> checks{"all"};
  std::string export_path;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Check the Cayley graph of 2^{2r+1} on symmetric generators");
  verify->add_option("r", verify_r, "Rank")->required();
  verify->add_option("--checks", checks, "all, or a comma list of checks")
      ->delimiter(',')
      ->check(CLI::IsMember({"all", "regular", "cover", "2at", "normal", "order", "stab",
                             "embedding", "walks"}));
  verify->add_option("--export-graph", export_path, "Write the graph in graph6");
  verify->add_flag("--timings", timings, "Include per-check timings");

  std::string aut_path;
  std::string format = "graph6";
  auto* aut = app.add_subcommand("aut", "Automorphism group of a graph read from a file");
  aut->add_option("path", aut_path, "Input file")->required();
  aut->add_option("--format", format)
      ->check(CLI::IsMember({"graph6", "edges"}))
      ->capture_default_str();

  std::vector<std::string> argv_store{"symcover"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (basis->parsed()) return cmd_basis(common, basis_r, basis_type, method, out);
    if (verify->parsed()) return cmd_verify(common, verify_r, checks, export_path, timings, out);
    return cmd_aut(common, aut_path, format, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace symcover
