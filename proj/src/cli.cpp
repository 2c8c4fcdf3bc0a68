#include "inselim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <thread>

#include "inselim/generate.hpp"
#include "inselim/serialize.hpp"
#include "inselim/verify.hpp"
#include "inselim/virasoro.hpp"

namespace inselim {

namespace {

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// CLI11 rejects positional values that look like options, which would hit
// every elimination literal "-<tree>".  No option starts with "-(", so such
// tokens are marked with a sentinel byte before parsing and unmarked at the
// point of use.
constexpr char kDashMark = '\x01';

std::string unmark(const std::string& s) {
  return !s.empty() && s.front() == kDashMark ? s.substr(1) : s;
}

Element parse_element_arg(const std::string& arg) {
  std::string text = unmark(arg);
  if (!text.empty() && text.front() == '{')
    return element_from_json(nlohmann::ordered_json::parse(text));
  return Element(BasisElement::from_text(text));
}

void emit(const nlohmann::ordered_json& j, std::ostream& out) { out << j.dump() << "\n"; }

int emit_report(const Report& rep, bool timings, const std::string& out_path, std::ostream& out) {
  auto j = rep.to_json(timings);
  emit(j, out);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open " + out_path + " for writing");
    file << j.dump() << "\n";
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic toolkit for the insertion-elimination Lie algebra"};
  app.name("inselim");
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "latex"}))
      ->capture_default_str();

  auto* trees = app.add_subcommand("trees", "enumeration and tree statistics");
  trees->fallthrough();
  trees->require_subcommand(1);
  auto* trees_enum = trees->add_subcommand("enumerate", "all canonical trees of a given size");
  trees_enum->fallthrough();
  int enum_n = 0;
  trees_enum->add_option("--n", enum_n, "vertex count")->required();
  bool enum_stats = false;
  trees_enum->add_flag("--stats", enum_stats, "include per-tree statistics");
  auto* trees_xi = trees->add_subcommand("xi", "root-preserving automorphism count");
  trees_xi->fallthrough();
  std::string xi_tree;
  trees_xi->add_option("tree", xi_tree, "tree in parenthesis encoding")->required();

  auto* brk = app.add_subcommand("bracket", "Lie bracket of two basis elements");
  brk->fallthrough();
  std::string brk_a, brk_b;
  brk->add_option("a", brk_a, "first basis element (d, +<tree>, -<tree>)")->required();
  brk->add_option("b", brk_b, "second basis element")->required();

  auto* sig = app.add_subcommand("sigma", "apply the anti-involution");
  sig->fallthrough();
  std::string sig_arg;
  sig->add_option("element", sig_arg, "basis element or element JSON")->required();

  auto* tau = app.add_subcommand("tau", "apply a graded automorphism");
  tau->fallthrough();
  std::string tau_zeta_arg;
  bool tau_zero_flag = false;
  auto* tau_zeta_opt = tau->add_option("--zeta", tau_zeta_arg, "scale degree n by zeta^n");
  auto* tau_zero_opt = tau->add_flag("--zero", tau_zero_flag, "apply the involution tau_0");
  tau_zeta_opt->excludes(tau_zero_opt);
  std::string tau_arg;
  tau->add_option("element", tau_arg, "basis element or element JSON")->required();

  auto* dec = app.add_subcommand("decompose", "rewrite over the generating set");
  dec->fallthrough();
  std::string dec_arg;
  dec->add_option("element", dec_arg, "insertion basis element +<tree>")->required();
  bool dec_check = false;
  dec->add_flag("--check", dec_check, "re-evaluate the result and compare");

  auto* ver = app.add_subcommand("verify", "run a verification sweep");
  ver->fallthrough();
  std::string ver_suite;
  ver->add_option("suite", ver_suite,
                  "jacobi | antisymmetry | grading | sigma | xi-identity | aut-relation | "
                  "self-centralizing | ladder-free")
      ->required();
  int ver_max_degree = 0;
  ver->add_option("--max-degree", ver_max_degree, "degree budget")->required();
  int ver_trials = 50;
  ver->add_option("--trials", ver_trials, "random elements per slice")->capture_default_str();
  std::uint64_t ver_seed = 42;
  ver->add_option("--seed", ver_seed, "random seed")->capture_default_str();
  int ver_jobs = 0;
  ver->add_option("--jobs", ver_jobs, "worker count (0 = auto)");
  std::string ver_out;
  ver->add_option("--out", ver_out, "also write the report to this path");
  bool ver_timings = false;
  ver->add_flag("--timings", ver_timings, "include elapsed_ms in the report");

  auto* der = app.add_subcommand("derivations", "solve the degree-0 derivation equations");
  der->fallthrough();
  int der_truncate = 0;
  der->add_option("--truncate", der_truncate, "degree window bound")->required();

  auto* vir = app.add_subcommand("virasoro", "generalized Virasoro instance");
  vir->fallthrough();
  vir->require_subcommand(1);
  auto* vbr = vir->add_subcommand("bracket", "bracket of two index basis vectors");
  vbr->fallthrough();
  long vbr_q = 1;
  vbr->add_option("--q", vbr_q, "index group (1/q)Z")->required();
  std::string vbr_alpha, vbr_beta;
  vbr->add_option("--alpha", vbr_alpha, "first index")->required();
  vbr->add_option("--beta", vbr_beta, "second index")->required();
  auto* vver = vir->add_subcommand("verify", "run a Virasoro verification sweep");
  vver->fallthrough();
  std::string vver_suite;
  vver->add_option("suite", vver_suite, "jacobi | tau_hom | kappa_hom | delta_leibniz")
      ->required();
  long vver_q = 1;
  vver->add_option("--q", vver_q, "index group (1/q)Z")->required();
  int vver_bound = 0;
  vver->add_option("--bound", vver_bound, "index window bound")->required();
  std::string vver_theta = "3";
  vver->add_option("--theta", vver_theta, "generator image for tau_hom/delta_leibniz")
      ->capture_default_str();
  std::string vver_zeta = "-1";
  vver->add_option("--zeta", vver_zeta, "index scale for kappa_hom")->capture_default_str();
  int vver_jobs = 0;
  vver->add_option("--jobs", vver_jobs, "worker count (0 = auto)");
  std::string vver_out;
  vver->add_option("--out", vver_out, "also write the report to this path");
  bool vver_timings = false;
  vver->add_flag("--timings", vver_timings, "include elapsed_ms in the report");

  try {
    for (auto& a : args)
      if (a.rfind("-(", 0) == 0) a.insert(a.begin(), kDashMark);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto emit_element = [&](const Element& x) {
    if (format == "latex")
      out << element_to_latex(x) << "\n";
    else
      emit(element_to_json(x), out);
    return 0;
  };

  try {
    if (format == "latex" && !(brk->parsed() || sig->parsed() || tau->parsed())) {
      err << "error: --format latex applies only to element output\n";
      return 2;
    }

    if (trees_enum->parsed()) {
      const auto& ts = enumerate_trees(enum_n);
      auto j = nlohmann::ordered_json::array();
      for (const auto& t : ts) {
        if (!enum_stats) {
          j.push_back(t.canon());
          continue;
        }
        TreeStats st = stats(t);
        auto row = nlohmann::ordered_json::object();
        row["tree"] = t.canon();
        row["size"] = st.size;
        row["depth"] = st.depth;
        row["rdeg"] = st.rdeg;
        row["compsize"] = st.compsize;
        j.push_back(std::move(row));
      }
      emit(j, out);
      return 0;
    }
    if (trees_xi->parsed()) {
      RootedTree t = RootedTree::parse(xi_tree);
      auto j = nlohmann::ordered_json::object();
      j["tree"] = t.canon();
      j["xi"] = to_string(sym_count(t));
      emit(j, out);
      return 0;
    }
    if (brk->parsed())
      return emit_element(bracket(BasisElement::from_text(unmark(brk_a)),
                                  BasisElement::from_text(unmark(brk_b))));
    if (sig->parsed()) return emit_element(sigma(parse_element_arg(sig_arg)));
    if (tau->parsed()) {
      if (tau_zero_flag) return emit_element(tau_zero(parse_element_arg(tau_arg)));
      if (tau_zeta_opt->count() == 0)
        throw std::invalid_argument("tau needs either --zeta or --zero");
      return emit_element(tau_zeta(parse_rational(tau_zeta_arg), parse_element_arg(tau_arg)));
    }
    if (dec->parsed()) {
      BasisElement b = BasisElement::from_text(unmark(dec_arg));
      if (b.kind() != BasisElement::Kind::insertion)
        throw std::invalid_argument("decompose expects an insertion basis element");
      LiePolynomial p = decompose(b.tree());
      if (dec_check && !(evaluate(p) == Element(b))) {
        err << "decomposition of " << b.text() << " failed to re-evaluate\n";
        return 1;
      }
      emit(poly_to_json(p), out);
      return 0;
    }
    if (ver->parsed()) {
      int jobs = ver_jobs > 0 ? ver_jobs : default_jobs();
      Report rep;
      if (ver_suite == "self-centralizing")
        rep = self_centralizing_check(ver_max_degree, ver_trials, ver_seed, jobs);
      else if (ver_suite == "ladder-free")
        rep = ladder_free_sweep(ver_max_degree);
      else if (auto s = suite_from_name(ver_suite))
        rep = run_suite(*s, ver_max_degree, jobs);
      else
        throw std::invalid_argument("unknown suite: " + ver_suite);
      return emit_report(rep, ver_timings, ver_out, out);
    }
    if (der->parsed()) {
      DerivationSpace ds = derivation_space(der_truncate);
      auto j = nlohmann::ordered_json::object();
      j["truncate"] = der_truncate;
      j["dimension"] = ds.dimension;
      auto basis = nlohmann::ordered_json::array();
      for (const auto& images : ds.basis) {
        auto row = nlohmann::ordered_json::object();
        for (const auto& [b, img] : images) row[b.text()] = element_to_json(img);
        basis.push_back(std::move(row));
      }
      j["basis"] = std::move(basis);
      emit(j, out);
      return 0;
    }
    if (vbr->parsed()) {
      VElement x = VElement::e(vbr_q, parse_rational(vbr_alpha));
      VElement y = VElement::e(vbr_q, parse_rational(vbr_beta));
      emit(velement_to_json(v_bracket(x, y)), out);
      return 0;
    }
    if (vver->parsed()) {
      auto s = v_suite_from_name(vver_suite);
      if (!s) throw std::invalid_argument("unknown suite: " + vver_suite);
      int jobs = vver_jobs > 0 ? vver_jobs : default_jobs();
      Report rep = v_verify(*s, vver_q, vver_bound, parse_rational(vver_theta),
                            parse_rational(vver_zeta), jobs);
      return emit_report(rep, vver_timings, vver_out, out);
    }
    err << "error: no command given\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace inselim
