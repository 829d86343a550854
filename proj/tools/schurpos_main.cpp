#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schurpos/serialize.hpp"
#include "schurpos/verify.hpp"

namespace {

using namespace schurpos;

// exit codes: 0 success, 1 verification or membership failure, 2 input error
struct CliError {
  int code;
  std::string message;
};

Partition parse_partition(const std::string& text) {
  if (text == "-") return Partition{};
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw CliError{2, "cannot parse partition entry '" + item + "'"};
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw CliError{2, e.what()};
  }
}

void guard_degree(int degree, bool force) {
  if (degree > 10 && !force)
    throw CliError{2, "degree " + std::to_string(degree) +
                          " exceeds the desk-scale cap of 10; pass --force to override"};
}

std::string rational_text(const Rational& c) {
  std::ostringstream out;
  out << c;
  return out.str();
}

void print_expansion(const SymFunc::Expansion& exp, const std::string& output) {
  if (output == "json") {
    std::cout << expansion_to_json(exp).dump() << "\n";
    return;
  }
  if (exp.terms.empty()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& [lam, c] : exp.terms)
    std::cout << basis_char(exp.basis) << lam.to_string() << ": " << rational_text(c) << "\n";
}

struct Common {
  std::string output = "json";
  bool force = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--output", output, "serialization: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--force", force, "lift the degree-10 guard");
  }
};

int run_expand(const std::string& family, const std::string& index_str, int k,
               const std::string& basis_str, const Common& common) {
  Partition lam = parse_partition(index_str);
  guard_degree(lam.size(), common.force);
  Basis target = basis_from_char(basis_str[0]);
  SymFunc f;
  try {
    if (family == "kschur") {
      if (k < 1) throw CliError{2, "--k is required (and positive) for the kschur family"};
      f = kschur_in_h(k, lam);
    } else if (family == "schur-p") {
      f = p_lambda(StrictPartition(lam));
    } else if (family == "schur-q") {
      f = q_lambda(StrictPartition(lam));
    } else {
      f = SymFunc::from_basis(basis_from_char(family[0]), {{lam, Rational(1)}});
    }
  } catch (const std::invalid_argument& e) {
    throw CliError{2, e.what()};
  }
  print_expansion(f.to_basis(target), common.output);
  return 0;
}

int run_branch(int k, const std::string& lambda_str, const Common& common) {
  Partition lam = parse_partition(lambda_str);
  guard_degree(lam.size(), common.force);
  KCoeffs coords;
  try {
    coords = branch(k, lam);
  } catch (const std::invalid_argument& e) {
    throw CliError{2, e.what()};
  }
  if (common.output == "json") {
    Json terms = Json::array();
    for (const auto& [mu, c] : coords) {
      Json t;
      t["partition"] = partition_to_json(mu);
      t["num"] = checked_ll(numerator(c));
      t["den"] = checked_ll(denominator(c));
      terms.push_back(std::move(t));
    }
    Json out;
    out["basis"] = "kschur";
    out["k"] = k + 1;
    out["terms"] = std::move(terms);
    std::cout << out.dump() << "\n";
  } else {
    if (coords.empty()) std::cout << "0\n";
    for (const auto& [mu, c] : coords) std::cout << mu.to_string() << ": " << rational_text(c) << "\n";
  }
  return 0;
}

int run_theta(const std::string& input, const std::string& basis_override, const Common& common) {
  Json j;
  Basis in_basis;
  SymFunc f;
  try {
    j = load_json_file(input);
    auto [b, terms] = basis_terms_from_json(j);
    in_basis = b;
    f = SymFunc::from_basis(b, terms);
  } catch (const SerializeError& e) {
    throw CliError{2, e.what()};
  }
  Basis out_basis = basis_override.empty() ? in_basis : basis_from_char(basis_override[0]);
  print_expansion(theta(f).to_basis(out_basis), common.output);
  return 0;
}

int run_gamma(const std::string& input, int bound, const Common& common) {
  SymFunc f;
  try {
    f = symfunc_from_json(load_json_file(input));
  } catch (const SerializeError& e) {
    throw CliError{2, e.what()};
  }
  std::optional<int> generator_bound;
  if (bound != 0) generator_bound = bound;
  GammaExpansion expansion;
  try {
    expansion = gamma_expand(f, generator_bound);
  } catch (const std::invalid_argument& e) {
    throw CliError{2, e.what()};
  }
  if (common.output == "json") {
    std::cout << gamma_to_json(f, expansion).dump() << "\n";
  } else if (!expansion.ok()) {
    std::cout << "error: " << gamma_error_name(*expansion.error);
    if (expansion.error == GammaError::even_p_support)
      std::cout << " at p" << expansion.witness.to_string();
    std::cout << "\n";
  } else {
    if (expansion.terms.empty()) std::cout << "0\n";
    for (const auto& [gamma, c] : expansion.terms)
      std::cout << "P" << gamma.to_string() << ": " << c << "\n";
  }
  return expansion.ok() ? 0 : 1;
}

int run_hopf(const std::string& path, const std::string& element, const Common& common) {
  HopfPresentation hp;
  try {
    hp = presentation_from_json(load_json_file(path));
  } catch (const SerializeError& e) {
    throw CliError{2, e.what()};
  }
  ValidationReport report = validate(hp);
  Json out;
  Json rep;
  rep["associative"] = report.associative;
  rep["coassociative"] = report.coassociative;
  rep["counital"] = report.counital;
  rep["bialgebra-compatible"] = report.bialgebra_compatible;
  rep["cocommutative"] = report.cocommutative;
  rep["unital"] = report.unital;
  rep["character-multiplicative"] = report.character_multiplicative;
  rep["failures"] = report.failures;
  out["report"] = std::move(rep);
  if (!element.empty() && report.ok()) {
    HopfElement el;
    try {
      el = element_of(hp, element);
    } catch (const std::invalid_argument& e) {
      throw CliError{2, e.what()};
    }
    QSymFunc image = canonical_morphism(hp, el);
    auto sym = qsym_to_sym(image);
    out["element"] = element;
    out["qsym"] = qsym_to_json(image);
    out["symmetric"] = sym.ok();
    if (sym.ok()) {
      SymFunc::Expansion exp{Basis::M, sym.m_terms, true};
      for (const auto& [lam, c] : exp.terms)
        if (!is_integral(c)) exp.integral = false;
      out["sym"] = expansion_to_json(exp);
      out["integral-image"] = exp.integral;
    } else {
      out["witness"] = Json::array({composition_to_json(sym.witness->first),
                                    composition_to_json(sym.witness->second)});
    }
  }
  if (common.output == "json") {
    std::cout << out.dump() << "\n";
  } else {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::cout << "associative: " << flag(report.associative) << "\n"
              << "coassociative: " << flag(report.coassociative) << "\n"
              << "counital: " << flag(report.counital) << "\n"
              << "bialgebra-compatible: " << flag(report.bialgebra_compatible) << "\n"
              << "cocommutative: " << flag(report.cocommutative) << "\n"
              << "unital: " << flag(report.unital) << "\n"
              << "character-multiplicative: " << flag(report.character_multiplicative) << "\n";
    for (const auto& msg : report.failures) std::cout << "failure: " << msg << "\n";
    if (out.contains("qsym")) {
      for (const auto& t : out["qsym"]["terms"])
        std::cout << "M" << t["composition"].dump() << ": " << t["num"].get<long long>()
                  << (t["den"].get<long long>() != 1 ? "/" + std::to_string(t["den"].get<long long>())
                                                     : "")
                  << "\n";
      std::cout << "symmetric: " << flag(out["symmetric"].get<bool>()) << "\n";
    }
  }
  return report.ok() ? 0 : 1;
}

int run_verify(const std::string& suite, int max_degree, int k, const std::string& command_echo,
               const Common& common) {
  auto ids = suite_criteria(suite);
  if (!ids) throw CliError{2, "unknown suite '" + suite + "'"};
  if (max_degree != -1) guard_degree(max_degree, common.force);
  VerifyOptions opt;
  if (max_degree != -1) opt.max_degree = max_degree;
  if (k != 0) opt.k = k;

  bool json = common.output == "json";
  if (json) {
    Json echo;
    echo["command"] = command_echo;
    std::cout << echo.dump() << "\n";
  }
  auto start = std::chrono::steady_clock::now();
  long long total_items = 0, total_failures = 0;
  bool budgets_ok = true;
  for (int id : *ids) {
    CriterionResult result = run_criterion(id, opt);
    total_items += static_cast<long long>(result.items.size());
    total_failures += result.failures();
    budgets_ok = budgets_ok && result.within_budget;
    for (std::size_t i = 0; i < result.items.size(); ++i) {
      const auto& item = result.items[i];
      if (json) {
        Json line;
        line["criterion"] = result.id;
        line["item"] = static_cast<long long>(i);
        line["input"] = item.input;
        line["pass"] = item.pass;
        if (!item.pass && !item.detail.empty()) line["detail"] = item.detail;
        std::cout << line.dump() << "\n";
      } else {
        std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << "c" << result.id << " " << item.input;
        if (!item.pass && !item.detail.empty()) std::cout << "  (" << item.detail << ")";
        std::cout << "\n";
      }
    }
    if (json) {
      Json line;
      line["criterion"] = result.id;
      line["name"] = result.name;
      line["items"] = static_cast<long long>(result.items.size());
      line["failures"] = result.failures();
      line["budget_seconds"] = result.budget_seconds;
      line["seconds"] = result.seconds;
      line["pass"] = result.pass;
      std::cout << line.dump() << "\n";
    } else {
      std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << "c" << result.id << " " << result.name
                << ": " << result.items.size() << " items, " << result.failures() << " failures"
                << "\n";
    }
  }
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (json) {
    Json summary;
    summary["summary"] = {{"criteria", static_cast<long long>(ids->size())},
                          {"items", total_items},
                          {"failures", total_failures}};
    summary["duration_ms"] = ms;
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << "summary: " << ids->size() << " criteria, " << total_items << " items, "
              << total_failures << " failures\n";
  }
  return (total_failures == 0 && budgets_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* dir = std::getenv("SCHURPOS_CACHE_DIR"); dir && *dir) {
    try {
      enable_disk_cache(dir);
    } catch (const std::exception& e) {
      std::cerr << "warning: transition cache disabled: " << e.what() << "\n";
    }
  }

  CLI::App app{"exact symmetric function expansions, k-Schur branching, and Hopf checks"};
  app.require_subcommand(1);

  auto* expand = app.add_subcommand("expand", "expand a basis element in a target basis");
  std::string family, index_str, expand_basis;
  int expand_k = 0;
  Common expand_common;
  expand->add_option("--family", family, "kschur, schur-p, schur-q, h, e, p, m or s")
      ->required()
      ->check(CLI::IsMember({"kschur", "schur-p", "schur-q", "h", "e", "p", "m", "s"}));
  expand->add_option("--index", index_str, "partition as comma-separated decreasing integers; - is empty")
      ->required();
  expand->add_option("--k", expand_k, "bound for the kschur family");
  expand->add_option("--basis", expand_basis, "target basis: m, e, h, p or s")
      ->required()
      ->check(CLI::IsMember({"m", "e", "h", "p", "s"}));
  expand_common.attach(expand);

  auto* branch_cmd = app.add_subcommand("branch", "expand a k-Schur function in the (k+1)-Schur basis");
  int branch_k = 0;
  std::string branch_lambda;
  Common branch_common;
  branch_cmd->add_option("--k", branch_k, "source bound")->required()->check(CLI::PositiveNumber);
  branch_cmd->add_option("--lambda", branch_lambda, "k-bounded partition")->required();
  branch_common.attach(branch_cmd);

  auto* theta_cmd = app.add_subcommand("theta", "apply the odd-doubling ring morphism to a serialized function");
  std::string theta_input, theta_basis;
  Common theta_common;
  theta_cmd->add_option("--input", theta_input, "JSON file with a serialized symmetric function")
      ->required();
  theta_cmd->add_option("--basis", theta_basis, "output basis; defaults to the input basis")
      ->check(CLI::IsMember({"m", "e", "h", "p", "s"}));
  theta_common.attach(theta_cmd);

  auto* gamma_cmd = app.add_subcommand("gamma", "expand in the odd one-row generators");
  std::string gamma_input;
  int gamma_bound = 0;
  Common gamma_common;
  gamma_cmd->add_option("--input", gamma_input, "JSON file with a serialized symmetric function")
      ->required();
  gamma_cmd->add_option("--bound", gamma_bound, "largest generator subscript allowed (odd)");
  gamma_common.attach(gamma_cmd);

  auto* hopf_cmd = app.add_subcommand("hopf", "validate a presentation and print the canonical morphism");
  std::string hopf_path, hopf_element;
  Common hopf_common;
  hopf_cmd->add_option("--presentation", hopf_path, "presentation JSON file")->required();
  hopf_cmd->add_option("--element", hopf_element, "basis label to map through the morphism");
  hopf_common.attach(hopf_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run verification sweeps");
  std::string suite;
  int verify_degree = -1, verify_k = 0;
  Common verify_common;
  verify_cmd
      ->add_option("--suite", suite,
                   "kschur-pos, branch-pos, p-pos, coeff, theta, ranks, hopf, oracle, all, or c1..c13")
      ->required();
  verify_cmd->add_option("--max-degree", verify_degree, "override the sweep degree");
  verify_cmd->add_option("--k", verify_k, "restrict positivity sweeps to one k");
  verify_common.attach(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];

  try {
    if (*expand) return run_expand(family, index_str, expand_k, expand_basis, expand_common);
    if (*branch_cmd) return run_branch(branch_k, branch_lambda, branch_common);
    if (*theta_cmd) return run_theta(theta_input, theta_basis, theta_common);
    if (*gamma_cmd) return run_gamma(gamma_input, gamma_bound, gamma_common);
    if (*hopf_cmd) return run_hopf(hopf_path, hopf_element, hopf_common);
    if (*verify_cmd) return run_verify(suite, verify_degree, verify_k, echo.str(), verify_common);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
