// orbitbound: exact computations for boundary screening of orbit spaces of
// irreducible representations of the compact simple Lie groups.

#include "orbitbound/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace orbitbound;

namespace {

int exit_code_of(const Error& e) {
  switch (e.code()) {
    case Errc::resource_exhausted: return 3;
    case Errc::invalid_argument:
    case Errc::not_applicable:
    case Errc::unsupported:
    case Errc::data_error: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact boundary-screening calculations for compact simple Lie groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--data-dir", cfg.data_dir, "directory with the bounds/catalog/golden data files");
  app.add_option("--cache-dir", cfg.cache_dir, "weight-system cache directory");
  app.add_flag("--no-cache", cfg.no_cache, "bypass the weight-system cache");
  app.add_option("--budget", cfg.budget, "weight-system dimension budget");

  std::string type_str, hw_str, golden_path;
  int max_rank = 8;

  auto* c_enum = app.add_subcommand("enumerate", "candidates with real dimension within the group bound");
  c_enum->add_option("type", type_str, "simple type, e.g. A2, B5, E8")->required();

  auto* c_screen = app.add_subcommand("screen", "run the nice-involution screen on one representation");
  c_screen->add_option("type", type_str)->required();
  c_screen->add_option("hw", hw_str, "highest weight, e.g. 0,0,2")->required();

  auto* c_inv = app.add_subcommand("involutions", "involution representatives and symmetric quotients");
  c_inv->add_option("type", type_str)->required();

  auto* c_weights = app.add_subcommand("weights", "full weight system with multiplicities");
  c_weights->add_option("type", type_str)->required();
  c_weights->add_option("hw", hw_str)->required();

  auto* c_scan = app.add_subcommand("scan-la", "fundamental-weight scan of 2m|l|^2=|a|^2");
  c_scan->add_option("--max-rank", max_rank, "scan families up to this rank")->default_val(8);

  auto* c_g2 = app.add_subcommand("lemma-g2", "empty-boundary chain for (G2, S^2_0 R^7)");

  auto* c_verify = app.add_subcommand("verify-paper", "evaluate every registered claim against the golden file");
  c_verify->add_option("--golden", golden_path, "claim registry path");

  for (auto* sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.golden_path = golden_path;
    cfg.validate();
    Env env(cfg);
    Json doc;
    int rc = 0;
    if (c_enum->parsed()) {
      doc = cmd_enumerate(env, type_str);
    } else if (c_screen->parsed()) {
      doc = cmd_screen(env, type_str, hw_str);
    } else if (c_inv->parsed()) {
      doc = cmd_involutions(env, type_str);
    } else if (c_weights->parsed()) {
      doc = cmd_weights(env, type_str, hw_str);
    } else if (c_scan->parsed()) {
      doc = cmd_scan_la(env, max_rank);
    } else if (c_g2->parsed()) {
      doc = cmd_lemma_g2(env);
    } else if (c_verify->parsed()) {
      doc = cmd_verify_paper(env);
      rc = doc.at("ok").get<bool>() ? 0 : 1;
    }
    std::cout << render(doc, cfg.format);
    return rc;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_of(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
