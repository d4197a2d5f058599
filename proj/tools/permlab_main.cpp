// Command-line front end: generation of the code families, distance analysis,
// the constructive labelings, the exact searches, and the bound evaluations,
// with stable text or JSON output suitable for golden-file testing.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "permlab/bounds.hpp"
#include "permlab/io.hpp"
#include "permlab/search.hpp"

using json = nlohmann::ordered_json;
using namespace permlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudgetExceeded = 3;

struct GlobalOptions {
  bool json_output = false;
  bool zero_indexed = false;
  bool stats = false;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0.0;
  int threads = 1;
  std::string out_path;
};

SearchBudget budget_of(const GlobalOptions& options) {
  return SearchBudget{options.budget_nodes, options.budget_seconds};
}

// Rewrites every integer token of a 0-indexed permutation/set text into its
// 1-indexed counterpart.
std::string shift_indices_up(const std::string& text) {
  std::string result;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      result += std::to_string(std::stoll(text.substr(i, j - i)) + 1);
      i = j;
    } else {
      result += text[i++];
    }
  }
  return result;
}

Permutation parse_perm_arg(const std::string& text, int degree_hint,
                           const GlobalOptions& options) {
  return parse_permutation(
      options.zero_indexed ? shift_indices_up(text) : text, degree_hint);
}

std::vector<int> parse_index_set(const std::string& text,
                                 const GlobalOptions& options) {
  std::vector<int> values;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ' ')) {
    std::istringstream part(token);
    std::string piece;
    while (std::getline(part, piece, ',')) {
      if (piece.empty()) continue;
      values.push_back(std::stoi(piece) + (options.zero_indexed ? 1 : 0));
    }
  }
  return values;
}

std::string display_perm(const Permutation& f, const GlobalOptions& options) {
  if (!options.zero_indexed) return format_vector(f);
  std::ostringstream out;
  for (int i = 1; i <= f.degree(); ++i) {
    if (i > 1) out << ' ';
    out << f(i) - 1;
  }
  return out.str();
}

std::string display_cycles(const Permutation& f, const GlobalOptions& options) {
  if (!options.zero_indexed) return format_cycles(f);
  std::ostringstream out;
  for (const auto& cycle : cycle_decomposition(f)) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out << ' ';
      out << cycle[i] - 1;
    }
    out << ')';
  }
  return out.str();
}

json display_set(const std::vector<int>& values, const GlobalOptions& options) {
  json array = json::array();
  for (int v : values) array.push_back(options.zero_indexed ? v - 1 : v);
  return array;
}

// ---------------------------------------------------------------------------
// Result envelope

struct CommandResult {
  std::string status = "ok";
  json payload = json::object();
  std::string human_summary;
  int exit_code = kExitOk;
};

void emit(const CommandResult& result, const std::string& command,
          const GlobalOptions& options) {
  if (options.json_output) {
    json envelope;
    envelope["command"] = command;
    envelope["status"] = result.status;
    envelope["payload"] = result.payload;
    std::cout << envelope.dump(2) << "\n";
  } else if (!result.human_summary.empty()) {
    std::cout << result.human_summary << "\n";
  }
}

// ---------------------------------------------------------------------------
// Certificates

json certificate_to_json(const LabelingCertificate& certificate,
                         const GlobalOptions& options) {
  json j;
  j["type"] = "labeling-certificate";
  j["kind"] = std::string(to_string(certificate.kind));
  j["n"] = certificate.label.degree();
  j["indexing"] = options.zero_indexed ? "zero-based" : "one-based";
  j["label"] = display_perm(certificate.label, options);
  j["achieved_distance"] = certificate.achieved_distance;
  return j;
}

LabelingCertificate certificate_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate " + path);
  json j = json::parse(in);
  if (j.value("type", "") != "labeling-certificate") {
    throw std::runtime_error("not a labeling certificate: " + path);
  }
  const int n = j.at("n").get<int>();
  std::string label_text = j.at("label").get<std::string>();
  if (j.value("indexing", "one-based") == "zero-based") {
    label_text = shift_indices_up(label_text);
  }
  LabelingCertificate certificate{
      parse_permutation(label_text, n),
      j.at("achieved_distance").get<int>(),
      labeling_kind_from_string(j.value("kind", "searched"))
          .value_or(LabelingKind::searched)};
  return certificate;
}

void write_certificate(const LabelingCertificate& certificate,
                       const GlobalOptions& options) {
  if (options.out_path.empty()) return;
  std::ofstream out(options.out_path);
  if (!out) throw std::runtime_error("cannot open " + options.out_path);
  out << certificate_to_json(certificate, options).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Shared snippets

PermutationCode load_code(const std::string& path) {
  if (path.empty()) throw std::runtime_error("--code is required");
  return read_code_file(path);
}

CommandResult code_output(const PermutationCode& code,
                          const std::string& provenance,
                          const GlobalOptions& options) {
  CommandResult result;
  result.payload["n"] = code.degree();
  result.payload["size"] = code.size();
  result.payload["is_group"] = code.is_group();
  if (!options.out_path.empty()) {
    write_code_file(std::filesystem::path(options.out_path), code, provenance);
    result.payload["file"] = options.out_path;
    result.human_summary = "wrote " + options.out_path + ": n=" +
                           std::to_string(code.degree()) + ", " +
                           std::to_string(code.size()) + " codewords";
  } else if (options.json_output) {
    json lines = json::array();
    for (const auto& f : code.elements()) lines.push_back(display_perm(f, options));
    result.payload["code"] = lines;
  } else {
    std::ostringstream out;
    write_code_file(out, code, provenance);
    result.human_summary = out.str();
    // Trim the trailing newline; emit() adds one.
    if (!result.human_summary.empty() && result.human_summary.back() == '\n') {
      result.human_summary.pop_back();
    }
  }
  return result;
}

json bound_report_json(const BoundReport& report) {
  json j;
  j["type"] = "bound-report";
  j["kind"] = std::string(to_string(report.kind));
  j["valid"] = report.valid;
  if (report.guaranteed_distance) {
    j["guaranteed_distance"] = *report.guaranteed_distance;
  } else {
    j["guaranteed_distance"] = nullptr;
  }
  if (report.lhs_value) {
    j["lhs_value"] = *report.lhs_value;
  } else {
    j["lhs_value"] = nullptr;
  }
  json params = json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  j["parameters"] = params;
  j["reason"] = report.reason;
  return j;
}

std::string bound_report_summary(const BoundReport& report) {
  std::ostringstream out;
  out << "kind: " << to_string(report.kind) << "\n";
  out << "valid: " << (report.valid ? "yes" : "no");
  if (!report.valid && !report.reason.empty()) out << " (" << report.reason << ")";
  out << "\n";
  if (report.lhs_value) out << "lhs: " << *report.lhs_value << "\n";
  if (report.guaranteed_distance) {
    out << "guaranteed distance: " << *report.guaranteed_distance << "\n";
  }
  for (const auto& [key, value] : report.parameters) {
    out << key << " = " << value << "\n";
  }
  std::string text = out.str();
  text.pop_back();
  return text;
}

CommandResult search_outcome_result(const SearchOutcome& outcome,
                                    const std::string& what,
                                    const GlobalOptions& options) {
  CommandResult result;
  result.payload["op"] = what;
  result.payload["exhaustive"] = outcome.exhaustive;
  if (outcome.value) {
    result.payload["value"] = *outcome.value;
  } else {
    result.payload["value"] = nullptr;
  }
  if (outcome.infinite) result.payload["infinite"] = true;
  if (outcome.witness_label) {
    result.payload["witness_label"] = display_perm(*outcome.witness_label, options);
  }
  if (outcome.witness_path) {
    result.payload["witness_path"] = display_set(*outcome.witness_path, options);
  }
  if (outcome.witness_pair) {
    result.payload["witness_pair"] = {
        {"a", display_set(outcome.witness_pair->a, options)},
        {"b", display_set(outcome.witness_pair->b, options)}};
  }
  if (options.stats) result.payload["nodes"] = outcome.nodes_explored;
  if (!outcome.exhaustive) {
    result.status = "budget-exceeded";
    result.exit_code = kExitBudgetExceeded;
  }
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation-code labeling toolkit (Chebyshev metric)"};
  app.require_subcommand(1);
  GlobalOptions options;
  app.add_flag("--json", options.json_output, "emit a JSON envelope");
  app.add_flag("--zero-indexed", options.zero_indexed,
               "read and print points 0-indexed");
  app.add_flag("--stats", options.stats, "include node counters in payloads");
  app.add_option("--budget-nodes", options.budget_nodes,
                 "node limit for searches (0 = unlimited)");
  app.add_option("--budget-seconds", options.budget_seconds,
                 "time limit for searches (0 = unlimited)");
  app.add_option("--threads", options.threads, "worker threads for search lmax")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", options.out_path, "output file path");

  std::string code_path;
  std::string graph_path;
  std::string gens_path;
  std::string perm_text;
  std::string set_a_text;
  std::string set_b_text;
  std::string certificate_path;
  long long n_value = 0;
  long long p_value = 0;
  long long q_value = 0;
  double prob_p = 0.0;
  double prob_t = 0.0;
  double bound_size = 0.0;
  int min_deg = 0;
  int grid = 400;
  int cap = 0;
  std::size_t closure_cap = 1000000;
  bool decide = false;

  // gen ------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a code family");
  gen->require_subcommand(1);
  auto* gen_cyclic = gen->add_subcommand("cyclic", "cyclic group of an n-cycle");
  gen_cyclic->add_option("--n", n_value, "degree; uses the cycle (1,2,...,n)");
  gen_cyclic->add_option("--generator", perm_text, "explicit n-cycle");
  auto* gen_dihedral = gen->add_subcommand("dihedral", "dihedral group D_n");
  gen_dihedral->add_option("--n", n_value, "degree")->required();
  auto* gen_agl = gen->add_subcommand("agl", "affine group AGL(p)");
  gen_agl->add_option("--p", p_value, "odd prime")->required();
  auto* gen_closure = gen->add_subcommand("closure", "closure of generators");
  gen_closure->add_option("--gens", gens_path, "code file with the generators")
      ->required();
  gen_closure->add_option("--cap", closure_cap, "size cap (default 10^6)");

  // distance / relabel -----------------------------------------------------
  auto* distance = app.add_subcommand("distance", "minimal distance of a code");
  distance->add_option("--code", code_path)->required();
  auto* relabel_cmd = app.add_subcommand("relabel", "conjugate a code");
  relabel_cmd->add_option("--code", code_path)->required();
  relabel_cmd->add_option("--label", perm_text, "labeling permutation")->required();

  // label -------------------------------------------------------------------
  auto* label = app.add_subcommand("label", "constructive labelings");
  label->require_subcommand(1);
  auto* label_worst = label->add_subcommand("worst", "labeling of distance <= 2");
  label_worst->add_option("--code", code_path)->required();
  auto* label_one = label->add_subcommand("one", "labeling of distance exactly 1");
  label_one->add_option("--code", code_path)->required();
  auto* label_cyclic = label->add_subcommand("cyclic", "optimal cyclic labeling");
  label_cyclic->add_option("--n", n_value, "degree; uses the cycle (1,2,...,n)");
  label_cyclic->add_option("--generator", perm_text, "explicit n-cycle");
  auto* label_pair = label->add_subcommand("from-pair", "labeling from neighboring sets");
  label_pair->add_option("--code", code_path)->required();
  label_pair->add_option("--set-a", set_a_text)->required();
  label_pair->add_option("--set-b", set_b_text)->required();

  // search --------------------------------------------------------------------
  auto* search = app.add_subcommand("search", "exact searches over labelings");
  search->require_subcommand(1);
  auto* search_lmax = search->add_subcommand("lmax", "maximal achievable distance");
  search_lmax->add_option("--code", code_path)->required();
  auto* search_lmin = search->add_subcommand("lmin", "minimal achievable distance");
  search_lmin->add_option("--code", code_path)->required();
  auto* search_two = search->add_subcommand("two-distance", "decide L_max >= 2");
  search_two->add_option("--code", code_path)->required();
  auto* search_neighboring =
      search->add_subcommand("neighboring", "smallest neighboring order");
  search_neighboring->add_option("--code", code_path)->required();
  search_neighboring->add_option("--cap", cap, "largest order to try");

  // bound -----------------------------------------------------------------------
  auto* bound = app.add_subcommand("bound", "closed-form and probabilistic bounds");
  bound->require_subcommand(1);
  auto* bound_prob = bound->add_subcommand("prob", "probabilistic labeling bound");
  bound_prob->add_option("--code", code_path)->required();
  bound_prob->add_option("--p", prob_p, "evaluate at this p (with --t)");
  bound_prob->add_option("--t", prob_t, "evaluate at this t (with --p)");
  bound_prob->add_option("--grid", grid, "grid resolution for the optimizer");
  auto* bound_min_degree = bound->add_subcommand("min-degree", "minimal-degree bound");
  bound_min_degree->add_option("--size", bound_size, "|C|")->required();
  bound_min_degree->add_option("--min-deg", min_deg)->required();
  bound_min_degree->add_option("--n", n_value)->required();
  bound_min_degree->add_option("--p", prob_p)->required();
  bound_min_degree->add_option("--t", prob_t)->required();
  auto* bound_cyclic = bound->add_subcommand("cyclic", "optimal cyclic distance");
  bound_cyclic->add_option("--n", n_value)->required();
  auto* bound_agl = bound->add_subcommand("agl-asymptotic", "AGL(q) parameters");
  bound_agl->add_option("--q", q_value)->required();
  auto* bound_dihedral =
      bound->add_subcommand("dihedral-asymptotic", "D_n parameters");
  bound_dihedral->add_option("--n", n_value)->required();
  auto* bound_cycle_index = bound->add_subcommand("cycle-index", "Z_f or Z_AGL(p)");
  bound_cycle_index->add_option("--p", p_value, "prime for Z_AGL(p)");
  bound_cycle_index->add_option("--perm", perm_text, "permutation for Z_f");
  bound_cycle_index->add_option("--n", n_value, "degree hint for --perm");
  auto* bound_theorem8 = bound->add_subcommand("theorem8", "counting comparison");
  bound_theorem8->add_option("--p", p_value)->required();
  auto* bound_neighboring =
      bound->add_subcommand("neighboring-lower", "lower bound on O(AGL(p))");
  bound_neighboring->add_option("--p", p_value)->required();

  // reduce / verify -----------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "problem reductions");
  reduce->require_subcommand(1);
  auto* reduce_ham = reduce->add_subcommand(
      "ham-path", "graph -> code with L_max >= 2 iff a Hamiltonian path exists");
  reduce_ham->add_option("--graph", graph_path)->required();
  reduce_ham->add_flag("--decide", decide, "also decide both sides");
  auto* verify = app.add_subcommand("verify", "re-check a labeling certificate");
  verify->add_option("--code", code_path)->required();
  verify->add_option("--certificate", certificate_path)->required();

  // Global flags may appear after the subcommand.
  for (CLI::App* command :
       {gen, gen_cyclic, gen_dihedral, gen_agl, gen_closure, distance,
        relabel_cmd, label, label_worst, label_one, label_cyclic, label_pair,
        search, search_lmax, search_lmin, search_two, search_neighboring, bound,
        bound_prob, bound_min_degree, bound_cyclic, bound_agl, bound_dihedral,
        bound_cycle_index, bound_theorem8, bound_neighboring, reduce, reduce_ham,
        verify}) {
    command->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    return app.exit(error) == 0 ? kExitOk : kExitInvalidInput;
  }

  std::string command;
  CommandResult result;
  try {
    if (gen_cyclic->parsed()) {
      command = "gen cyclic";
      Permutation generator = perm_text.empty()
                                  ? Permutation::from_cycles(
                                        static_cast<int>(n_value),
                                        {[&] {
                                          if (n_value < 1) {
                                            throw std::invalid_argument(
                                                "gen cyclic needs --n or --generator");
                                          }
                                          std::vector<int> cycle(
                                              static_cast<std::size_t>(n_value));
                                          std::iota(cycle.begin(), cycle.end(), 1);
                                          return cycle;
                                        }()})
                                  : parse_perm_arg(perm_text, 0, options);
      result = code_output(cyclic_group(generator),
                           "family: cyclic n=" + std::to_string(generator.degree()),
                           options);
    } else if (gen_dihedral->parsed()) {
      command = "gen dihedral";
      result = code_output(dihedral(static_cast<int>(n_value)),
                           "family: dihedral n=" + std::to_string(n_value), options);
    } else if (gen_agl->parsed()) {
      command = "gen agl";
      result = code_output(agl(static_cast<int>(p_value)),
                           "family: agl p=" + std::to_string(p_value), options);
    } else if (gen_closure->parsed()) {
      command = "gen closure";
      const PermutationCode generators = load_code(gens_path);
      result = code_output(closure(generators.elements(), closure_cap),
                           "family: closure", options);
    } else if (distance->parsed()) {
      command = "distance";
      const PermutationCode code = load_code(code_path);
      const int d = min_distance(code);
      result.payload["min_distance"] = d;
      result.payload["n"] = code.degree();
      result.payload["size"] = code.size();
      result.human_summary = std::to_string(d);
    } else if (relabel_cmd->parsed()) {
      command = "relabel";
      const PermutationCode code = load_code(code_path);
      const Permutation l = parse_perm_arg(perm_text, code.degree(), options);
      const PermutationCode conjugated = relabel(code, l);
      result = code_output(conjugated, "relabeled code", options);
      if (code.size() >= 2) {
        result.payload["min_distance_before"] = min_distance(code);
        result.payload["min_distance_after"] = min_distance(conjugated);
      }
    } else if (label_worst->parsed() || label_one->parsed() ||
               label_cyclic->parsed() || label_pair->parsed()) {
      std::optional<LabelingCertificate> certificate;
      json extra = json::object();
      if (label_worst->parsed()) {
        command = "label worst";
        certificate = worst_labeling(load_code(code_path));
      } else if (label_one->parsed()) {
        command = "label one";
        certificate = distance_one_labeling(load_code(code_path));
        if (!certificate) {
          result.payload["present"] = false;
          result.human_summary =
              "absent: the difference set has no involution (L_min = 2)";
          emit(result, command, options);
          return kExitOk;
        }
      } else if (label_cyclic->parsed()) {
        command = "label cyclic";
        Permutation generator = [&] {
          if (!perm_text.empty()) return parse_perm_arg(perm_text, 0, options);
          if (n_value < 2) {
            throw std::invalid_argument("label cyclic needs --n >= 2 or --generator");
          }
          std::vector<int> cycle(static_cast<std::size_t>(n_value));
          std::iota(cycle.begin(), cycle.end(), 1);
          return Permutation::from_cycles(static_cast<int>(n_value), {cycle});
        }();
        certificate = cyclic_optimal_labeling(generator);
        extra["relabeled_generator"] =
            display_cycles(conjugate(certificate->label, generator), options);
      } else {
        command = "label from-pair";
        const PermutationCode code = load_code(code_path);
        NeighboringPair pair{parse_index_set(set_a_text, options),
                             parse_index_set(set_b_text, options)};
        std::sort(pair.a.begin(), pair.a.end());
        std::sort(pair.b.begin(), pair.b.end());
        certificate = labeling_from_pair(code, pair);
        extra["guaranteed_distance"] = code.degree() - pair.order() + 1;
      }
      result.payload = certificate_to_json(*certificate, options);
      for (auto& [key, value] : extra.items()) result.payload[key] = value;
      write_certificate(*certificate, options);
      std::ostringstream summary;
      summary << "kind: " << to_string(certificate->kind) << "\n"
              << "achieved distance: " << certificate->achieved_distance << "\n"
              << "label: " << display_perm(certificate->label, options);
      for (auto& [key, value] : extra.items()) {
        summary << "\n" << key << ": " << value;
      }
      result.human_summary = summary.str();
    } else if (search_lmax->parsed() || search_lmin->parsed()) {
      const bool maximize = search_lmax->parsed();
      command = maximize ? "search lmax" : "search lmin";
      const PermutationCode code = load_code(code_path);
      const SearchOutcome outcome =
          maximize ? exact_lmax(code, budget_of(options), options.threads)
                   : exact_lmin(code, budget_of(options));
      result = search_outcome_result(outcome, maximize ? "lmax" : "lmin", options);
      std::ostringstream summary;
      summary << (maximize ? "L_max" : "L_min");
      if (outcome.value) {
        summary << (outcome.exhaustive ? " = " : " >= ") << *outcome.value;
      } else {
        summary << ": budget exceeded before any bound";
      }
      summary << (outcome.exhaustive ? " (exhaustive)" : " (budget exceeded)");
      if (outcome.witness_label && !options.out_path.empty()) {
        write_certificate(
            LabelingCertificate{*outcome.witness_label,
                                min_distance(relabel(code, *outcome.witness_label)),
                                LabelingKind::searched},
            options);
      }
      result.human_summary = summary.str();
    } else if (search_two->parsed()) {
      command = "search two-distance";
      const PermutationCode code = load_code(code_path);
      const SearchOutcome outcome = two_distance(code, budget_of(options));
      result = search_outcome_result(outcome, "two-distance", options);
      if (outcome.value) {
        result.payload["value"] = (*outcome.value != 0);
        result.human_summary = *outcome.value != 0 ? "true" : "false";
      } else {
        result.human_summary = "budget exceeded";
      }
      if (outcome.witness_label && !options.out_path.empty()) {
        write_certificate(
            LabelingCertificate{*outcome.witness_label,
                                min_distance(relabel(code, *outcome.witness_label)),
                                LabelingKind::searched},
            options);
      }
    } else if (search_neighboring->parsed()) {
      command = "search neighboring";
      const PermutationCode code = load_code(code_path);
      const int effective_cap = cap > 0 ? cap : code.degree();
      const SearchOutcome outcome = min_neighboring_order(code, effective_cap);
      result = search_outcome_result(outcome, "neighboring", options);
      result.payload["cap"] = effective_cap;
      if (outcome.infinite) {
        result.human_summary = "O(C) = infinity (exhaustive)";
        result.status = "ok";
        result.exit_code = kExitOk;
      } else if (outcome.value) {
        std::ostringstream summary;
        summary << "O(C) = " << *outcome.value;
        if (outcome.witness_pair) {
          summary << " via A=" << display_set(outcome.witness_pair->a, options).dump()
                  << " B=" << display_set(outcome.witness_pair->b, options).dump();
        }
        result.human_summary = summary.str();
      } else {
        result.human_summary = "no pair up to cap " + std::to_string(effective_cap);
        result.status = "budget-exceeded";
        result.exit_code = kExitBudgetExceeded;
      }
    } else if (bound_prob->parsed()) {
      command = "bound prob";
      const PermutationCode code = load_code(code_path);
      const DifferenceSet diff = difference_set(code);
      BoundReport report;
      if (prob_p > 0.0 || prob_t > 0.0) {
        const double lhs = prob_bound_lhs(diff, prob_p, prob_t);
        report.kind = BoundKind::prob_general;
        report.lhs_value = lhs;
        report.parameters["n"] = code.degree();
        report.parameters["p"] = prob_p;
        report.parameters["t"] = prob_t;
        if (lhs < 1.0 - kLhsMargin) {
          report.valid = true;
          report.guaranteed_distance =
              code.degree() + 1 -
              static_cast<long long>(std::floor(2.0 * prob_p * code.degree() + prob_t));
        } else {
          report.reason = "inequality not satisfied";
        }
      } else {
        report = prob_bound_optimize(diff, grid);
      }
      result.payload = bound_report_json(report);
      result.human_summary = bound_report_summary(report);
    } else if (bound_min_degree->parsed()) {
      command = "bound min-degree";
      const BoundReport report = min_degree_bound(
          bound_size, min_deg, static_cast<int>(n_value), prob_p, prob_t);
      result.payload = bound_report_json(report);
      result.human_summary = bound_report_summary(report);
    } else if (bound_cyclic->parsed()) {
      command = "bound cyclic";
      const long long value = cyclic_lmax_formula(n_value);
      result.payload["n"] = n_value;
      result.payload["k"] = cyclic_k(n_value);
      result.payload["lmax"] = value;
      result.human_summary = std::to_string(value);
    } else if (bound_agl->parsed()) {
      command = "bound agl-asymptotic";
      const BoundReport report = agl_asymptotic_params(q_value);
      result.payload = bound_report_json(report);
      result.human_summary = bound_report_summary(report);
    } else if (bound_dihedral->parsed()) {
      command = "bound dihedral-asymptotic";
      const BoundReport report = dihedral_asymptotic_params(n_value);
      result.payload = bound_report_json(report);
      result.human_summary = bound_report_summary(report);
    } else if (bound_cycle_index->parsed()) {
      command = "bound cycle-index";
      CycleIndexPolynomial polynomial;
      if (p_value > 0) {
        polynomial = agl_cycle_index(static_cast<int>(p_value));
        result.payload["p"] = p_value;
      } else if (!perm_text.empty()) {
        const Permutation f =
            parse_perm_arg(perm_text, static_cast<int>(n_value), options);
        polynomial = cycle_index_poly(f);
        result.payload["perm"] = display_perm(f, options);
      } else {
        throw std::invalid_argument("cycle-index needs --p or --perm");
      }
      json coefficients = json::array();
      std::ostringstream summary;
      for (int s = 0; s <= polynomial.degree(); ++s) {
        coefficients.push_back(polynomial.coefficient(s).str());
        if (s > 0) summary << " ";
        summary << polynomial.coefficient(s).str();
      }
      result.payload["coefficients"] = coefficients;
      result.human_summary = summary.str();
    } else if (bound_theorem8->parsed()) {
      command = "bound theorem8";
      const SubsetCountingReport report = agl_subset_counting_check(static_cast<int>(p_value));
      result.payload["p"] = report.p;
      result.payload["subset_coefficient"] = report.subset_coefficient.str();
      result.payload["central_binomial"] = report.central_binomial.str();
      result.payload["analytic_bound"] = report.analytic_bound;
      result.payload["coefficient_within_bound"] = report.coefficient_within_bound;
      result.payload["binomial_exceeds_bound"] = report.binomial_exceeds_bound;
      result.payload["chain_holds"] = report.chain_holds;
      std::ostringstream summary;
      summary << "a_(p-1)/2 = " << report.subset_coefficient.str()
              << "\nanalytic bound ~ " << report.analytic_bound
              << "\nC(p,(p-1)/2) = " << report.central_binomial.str()
              << "\nchain holds: " << (report.chain_holds ? "yes" : "no");
      result.human_summary = summary.str();
    } else if (bound_neighboring->parsed()) {
      command = "bound neighboring-lower";
      const NeighboringBound lower =
          neighboring_lower_bound_agl(static_cast<int>(p_value));
      result.payload["p"] = p_value;
      if (lower.infinite) {
        result.payload["infinite"] = true;
        result.human_summary = "O(AGL(p)) = infinity";
      } else {
        result.payload["lower_bound"] = lower.value;
        result.human_summary = "O(AGL(p)) >= " + std::to_string(lower.value);
      }
    } else if (reduce_ham->parsed()) {
      command = "reduce ham-path";
      const Graph graph = read_graph_file(graph_path);
      const PermutationCode code = hamiltonian_to_code(graph);
      result.payload["n"] = graph.vertex_count();
      result.payload["graph_edges"] = graph.edge_count();
      result.payload["code_size"] = code.size();
      if (!options.out_path.empty()) {
        write_code_file(std::filesystem::path(options.out_path), code,
                        "reduction: ham-path non-edges");
        result.payload["file"] = options.out_path;
      }
      std::ostringstream summary;
      summary << "code of " << code.size() << " permutations on n="
              << graph.vertex_count();
      if (decide) {
        const SearchOutcome ham = hamiltonian_path_exists(graph, budget_of(options));
        result.payload["hamiltonian_path"] = ham.value && *ham.value != 0;
        if (ham.witness_path) {
          result.payload["path"] = display_set(*ham.witness_path, options);
        }
        if (code.size() >= 2) {
          const SearchOutcome two = two_distance(code, budget_of(options));
          result.payload["two_distance"] = two.value && *two.value != 0;
          result.payload["agree"] =
              (ham.value && two.value) ? (*ham.value == *two.value) : false;
        } else {
          // Complete graph: the code degenerates to the identity alone and
          // the path trivially exists.
          result.payload["two_distance"] = true;
          result.payload["agree"] = ham.value && *ham.value == 1;
        }
        summary << "\nhamiltonian path: "
                << (result.payload["hamiltonian_path"].get<bool>() ? "yes" : "no")
                << "\ntwo-distance: "
                << (result.payload["two_distance"].get<bool>() ? "yes" : "no");
      }
      result.human_summary = summary.str();
    } else if (verify->parsed()) {
      command = "verify";
      const PermutationCode code = load_code(code_path);
      const LabelingCertificate certificate =
          certificate_from_file(certificate_path);
      const PermutationCode conjugated = relabel(code, certificate.label);
      // Independent recomputation: the raw all-pairs definition rather than
      // the difference-set shortcut.
      int recomputed = conjugated.degree();
      const auto& elements = conjugated.elements();
      for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
          recomputed = std::min(recomputed,
                                linf_distance(elements[i], elements[j]));
        }
      }
      bool consistent = recomputed == certificate.achieved_distance;
      if (certificate.kind == LabelingKind::worst) {
        consistent = consistent && recomputed <= 2;
      }
      if (certificate.kind == LabelingKind::distance_one) {
        consistent = consistent && recomputed == 1;
      }
      result.payload["claimed_distance"] = certificate.achieved_distance;
      result.payload["recomputed_distance"] = recomputed;
      result.payload["kind"] = std::string(to_string(certificate.kind));
      result.payload["consistent"] = consistent;
      result.human_summary =
          consistent ? "certificate verifies: achieved " +
                           std::to_string(recomputed)
                     : "MISMATCH: claimed " +
                           std::to_string(certificate.achieved_distance) +
                           " but recomputed " + std::to_string(recomputed);
      if (!consistent) {
        result.status = "invalid-input";
        result.exit_code = kExitInvalidInput;
      }
    }
  } catch (const CapExceeded& error) {
    CommandResult failure;
    failure.status = "budget-exceeded";
    failure.payload["error"] = error.what();
    failure.payload["partial_size"] = error.partial_size();
    emit(failure, command, options);
    std::cerr << "error: " << error.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const std::exception& error) {
    CommandResult failure;
    failure.status = "invalid-input";
    failure.payload["error"] = error.what();
    emit(failure, command, options);
    std::cerr << "error: " << error.what() << "\n";
    return kExitInvalidInput;
  }

  emit(result, command, options);
  return result.exit_code;
}
