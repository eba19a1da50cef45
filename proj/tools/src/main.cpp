#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "toric/cli.hpp"

namespace {

void add_fan_options(CLI::App* sub, toric::cli::RunConfig& config, std::string& fan_path, std::string& catalog) {
  sub->add_option("fan", fan_path, "Fan file")->check(CLI::ExistingFile);
  sub->add_option("--catalog", catalog, "Built-in fan by name (P1, P2, P3, P1xP1, F1, F2, dP6)");
  sub->add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, toric::cli::Format>{{"table", toric::cli::Format::Table},
                                                    {"json", toric::cli::Format::Json}},
          CLI::ignore_case));
}

template <class T>
void add_optional(CLI::App* sub, const std::string& name, std::optional<T>& target, const std::string& help) {
  sub->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

void add_vector(CLI::App* sub, const std::string& name, std::optional<std::vector<std::int64_t>>& target,
                const std::string& help) {
  sub->add_option_function<std::vector<std::int64_t>>(
         name, [&target](const std::vector<std::int64_t>& v) { target = v; }, help)
      ->delimiter(',')
      ->allow_extra_args(false);
}

}  // namespace

int main(int argc, char** argv) {
  using toric::cli::Command;
  CLI::App app{"Frobenius push-forwards and line-bundle cohomology on smooth complete toric varieties", "toric"};
  app.require_subcommand(1);

  toric::cli::RunConfig config;
  std::string fan_path;
  std::string catalog;
  std::map<CLI::App*, Command> commands;

  auto sub = [&](const char* name, const char* help, Command c) {
    CLI::App* s = app.add_subcommand(name, help);
    commands[s] = c;
    if (c != Command::Selftest) add_fan_options(s, config, fan_path, catalog);
    else
      s->add_option("--format", config.format, "Output format")
          ->transform(CLI::CheckedTransformer(
              std::map<std::string, toric::cli::Format>{{"table", toric::cli::Format::Table},
                                                        {"json", toric::cli::Format::Json}},
              CLI::ignore_case));
    s->add_option("--threads", config.threads, "Worker threads");
    return s;
  };

  sub("validate", "Check that the fan is smooth and complete", Command::Validate);
  sub("classes", "Print the Picard lattice basis and ray classes", Command::Classes);

  CLI::App* dec = sub("decompose", "Split the Frobenius push-forward of a line bundle", Command::Decompose);
  add_optional(dec, "--ell", config.ell, "Frobenius degree");
  add_vector(dec, "--class", config.pic_class, "Pic coordinates, comma separated");
  add_vector(dec, "--divisor", config.divisor, "T-divisor coefficients, comma separated");
  dec->add_option("--power", config.power, "Iterate: decompose at ell^power, cross-checked stepwise");
  dec->add_option("--budget", config.budget, "Maximum number of cube points enumerated");

  CLI::App* id = sub("verify-identity", "Check S(x) = M(x) S(x^ell) up to a degree bound", Command::VerifyIdentity);
  add_optional(id, "--ell", config.ell, "Frobenius degree");
  id->add_option("--bound", config.bound, "Grading degree bound");

  CLI::App* coh = sub("cohomology", "Cohomology table of a line bundle", Command::Cohomology);
  add_vector(coh, "--class", config.pic_class, "Pic coordinates, comma separated");
  add_vector(coh, "--divisor", config.divisor, "T-divisor coefficients, comma separated");

  sub("regions", "Vertices of K, the sets B_k and the cones C_I", Command::Regions);

  CLI::App* hk = sub("hk", "h^k by the oracle and by stabilized multiplicities", Command::Hk);
  add_vector(hk, "--class", config.pic_class, "Pic coordinates, comma separated");
  add_vector(hk, "--divisor", config.divisor, "T-divisor coefficients, comma separated");
  add_optional(hk, "--k", config.k, "Cohomological degree");
  hk->add_option("--max-ell", config.max_ell, "Largest Frobenius degree tried");

  sub("selftest", "Run the invariant suite on the built-in catalog", Command::Selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : toric::cli::kUsage;
  }

  for (const auto& [s, c] : commands)
    if (s->parsed()) config.command = c;
  if (!fan_path.empty()) config.fan_path = fan_path;
  if (!catalog.empty()) config.catalog_name = catalog;
  return toric::cli::run(config, std::cout, std::cerr);
}
