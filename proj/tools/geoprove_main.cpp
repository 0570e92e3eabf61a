// geoprove: prove and discover elementary geometry statements with
// explicit cofactor certificates and a difficulty score.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "geoprove/discovery.hpp"
#include "geoprove/errors.hpp"
#include "geoprove/json_io.hpp"
#include "geoprove/transcript.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnproved = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "A=(0,0),B=(0,1)" with rational coordinates like 1/2
geoprove::Specialization parse_specialize_list(const std::string& text) {
  geoprove::Specialization out;
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  while (pos < text.size()) {
    skip_ws();
    std::size_t eq = text.find('=', pos);
    if (eq == std::string::npos) throw std::runtime_error("expected name=(x,y) in specialize list");
    std::string name = text.substr(pos, eq - pos);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    pos = eq + 1;
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw std::runtime_error("expected '(' in specialize list");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw std::runtime_error("expected ')' in specialize list");
    std::string pair = text.substr(pos + 1, close - pos - 1);
    std::size_t comma = pair.find(',');
    if (comma == std::string::npos) throw std::runtime_error("expected two coordinates in specialize list");
    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    };
    out.assignments.push_back({name,
                               {geoprove::Rational::from_string(trim(pair.substr(0, comma))),
                                geoprove::Rational::from_string(trim(pair.substr(comma + 1)))}});
    pos = close + 1;
    skip_ws();
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  if (out.assignments.empty()) throw std::runtime_error("empty specialize list");
  return out;
}

struct CommonOptions {
  std::string input;
  std::string order = "tdeg";
  std::string encoding;  // empty: follow the file pragma, default direct
  std::string specialize = "auto";
  std::string route = "auto";
  bool minimize = true;
  std::size_t budget_spairs = geoprove::kDefaultSpairBudget;
  int budget_degree = -1;
  bool json_output = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("input", opts.input, ".geo construction file")->required();
  cmd->add_option("--order", opts.order, "monomial order: tdeg or plex")
      ->check(CLI::IsMember({"tdeg", "plex"}));
  cmd->add_option("--encoding", opts.encoding,
                  "perpendicularity encoding: direct or translation (overrides the file pragma)")
      ->check(CLI::IsMember({"direct", "translation"}));
  cmd->add_option("--specialize", opts.specialize,
                  "auto, none, or an explicit list like \"A=(0,0),B=(0,1)\"");
  cmd->add_option("--route", opts.route,
                  "ladder (direct proof preferred), reductio (prove 1 over the "
                  "hypotheses and the negated thesis), or auto (reductio once "
                  "coordinates are specialized)")
      ->check(CLI::IsMember({"auto", "ladder", "reductio"}));
  cmd->add_flag("--minimize,!--no-minimize", opts.minimize,
                "minimize the certificate cofactor degrees (default on)");
  cmd->add_option("--budget-spairs", opts.budget_spairs, "Buchberger S-pair budget");
  cmd->add_option("--budget-degree", opts.budget_degree,
                  "cap for the difficulty minimization search (-1: no cap)");
  cmd->add_flag("--json", opts.json_output, "emit JSON instead of text");
}

std::size_t spair_budget_with_env(const CLI::App* cmd, const CommonOptions& opts) {
  if (cmd->count("--budget-spairs") > 0) return opts.budget_spairs;
  if (const char* env = std::getenv("GEOPROVE_BUDGET_SPAIRS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring malformed GEOPROVE_BUDGET_SPAIRS='" << env << "'\n";
  }
  return opts.budget_spairs;
}

geoprove::Encoding pick_encoding(const CLI::App* cmd, const CommonOptions& opts,
                                 const geoprove::Construction& c) {
  if (cmd->count("--encoding") > 0) return geoprove::encoding_from_string(opts.encoding);
  if (c.encoding) return *c.encoding;
  return geoprove::Encoding::Direct;
}

geoprove::Specialization pick_specialization(const CommonOptions& opts,
                                             const geoprove::PolySystem& sys) {
  if (opts.specialize == "none") return {};
  if (opts.specialize == "auto") return geoprove::default_specialization(sys);
  return parse_specialize_list(opts.specialize);
}

int run_prove(const CLI::App* cmd, const CommonOptions& opts) {
  auto construction = geoprove::parse_construction(read_file(opts.input));
  auto encoding = pick_encoding(cmd, opts, construction);
  auto sys0 = geoprove::translate(construction, encoding);
  auto spec = pick_specialization(opts, sys0);
  auto sys = spec.empty() ? sys0 : geoprove::specialize(sys0, spec);

  geoprove::ProveOptions prove_opts;
  prove_opts.spair_budget = spair_budget_with_env(cmd, opts);
  prove_opts.degree_budget = opts.budget_degree;
  prove_opts.minimize = opts.minimize;
  if (opts.route == "reductio" || (opts.route == "auto" && !spec.empty()))
    prove_opts.route = geoprove::ProofRoute::Reductio;

  auto ord = geoprove::system_order(sys, opts.order);
  auto cert = geoprove::prove(sys, ord, prove_opts);

  if (opts.json_output) {
    nlohmann::json out{{"system", geoprove::to_json(sys)},
                       {"certificate", geoprove::to_json(cert)},
                       {"transcript",
                        geoprove::to_json(geoprove::build_transcript(sys0, spec, cert))}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << geoprove::render(sys0, spec, cert, "text");
    std::cout << "\nCertificate (JSON):\n" << geoprove::to_json(cert).dump(2) << "\n";
  }
  return cert.mode == geoprove::TruthMode::Unproved ? kExitUnproved : kExitOk;
}

int run_translate(const CLI::App* cmd, const CommonOptions& opts) {
  auto construction = geoprove::parse_construction(read_file(opts.input));
  auto encoding = pick_encoding(cmd, opts, construction);
  auto sys = geoprove::translate(construction, encoding);
  if (opts.specialize != "none") {
    auto spec = pick_specialization(opts, sys);
    if (!spec.empty()) sys = geoprove::specialize(sys, spec);
  }
  std::cout << geoprove::to_json(sys).dump(2) << "\n";
  return kExitOk;
}

struct DiscoverCli {
  std::string kinds = "collinear,equal_length,perpendicular,parallel";
  int trials = 5;
  std::uint64_t seed = 0;
  int jobs = 1;
};

int run_discover(const CLI::App* cmd, const CommonOptions& opts, const DiscoverCli& dopts) {
  auto construction = geoprove::parse_construction(read_file(opts.input));
  auto encoding = pick_encoding(cmd, opts, construction);

  geoprove::DiscoveryOptions d;
  d.kinds.clear();
  std::stringstream ss(dopts.kinds);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto kind = geoprove::predicate_kind_from_string(item);
    if (!kind) throw std::runtime_error("unknown candidate kind '" + item + "'");
    d.kinds.insert(*kind);
  }
  d.trials = dopts.trials;
  d.seed = dopts.seed;
  d.jobs = dopts.jobs;
  d.order_label = opts.order;
  d.prove_options.spair_budget = spair_budget_with_env(cmd, opts);
  d.prove_options.degree_budget = opts.budget_degree;
  d.prove_options.minimize = opts.minimize;
  if (opts.route == "reductio") d.prove_options.route = geoprove::ProofRoute::Reductio;
  if (opts.specialize != "none") {
    auto sys = geoprove::translate(construction, encoding);
    d.specialization = pick_specialization(opts, sys);
  }

  auto report = geoprove::discover(construction, encoding, d);
  report.construction_id = opts.input;
  if (opts.json_output)
    std::cout << geoprove::to_json(report).dump(2) << "\n";
  else
    std::cout << report.to_table();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic prover for elementary geometry statements"};
  app.require_subcommand(1);

  CommonOptions prove_opts, translate_opts, discover_opts;
  DiscoverCli discover_extra;

  auto* prove_cmd = app.add_subcommand("prove", "prove the thesis of a construction");
  add_common(prove_cmd, prove_opts);

  auto* translate_cmd =
      app.add_subcommand("translate", "emit the polynomial system as JSON");
  add_common(translate_cmd, translate_opts);

  auto* discover_cmd =
      app.add_subcommand("discover", "enumerate, filter, prove and rank statements");
  add_common(discover_cmd, discover_opts);
  discover_cmd->add_option("--kinds", discover_extra.kinds,
                           "comma list of candidate kinds to enumerate");
  discover_cmd->add_option("--trials", discover_extra.trials, "numeric prefilter trials")
      ->check(CLI::PositiveNumber);
  discover_cmd->add_option("--seed", discover_extra.seed, "random seed for the prefilter");
  discover_cmd->add_option("--jobs", discover_extra.jobs, "parallel proving workers")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (prove_cmd->parsed()) return run_prove(prove_cmd, prove_opts);
    if (translate_cmd->parsed()) return run_translate(translate_cmd, translate_opts);
    if (discover_cmd->parsed())
      return run_discover(discover_cmd, discover_opts, discover_extra);
  } catch (const geoprove::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const geoprove::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
