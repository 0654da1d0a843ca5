#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "crb/errors.hpp"
#include "crbcli/commands.hpp"

int main(int argc, char** argv) {
  using namespace crb::cli;
  CLI::App app{"crb: pre-Bloch invariants of spherical CR triangulations"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::string mode = "extended", beta;
  if (const char* env = std::getenv("CRB_PREC")) o.prec = std::atol(env);
  app.add_option("--prec", o.prec, "working precision in bits (default 128, or $CRB_PREC)");
  app.add_option("--mode", mode, "certificate mode: strict, extended or complex")
      ->check(CLI::IsMember({"strict", "extended", "complex"}));
  app.add_option("--beta", beta, "parameter of the fig8-family catalog entry, e.g. 1/8");
  app.add_flag("--json", o.json, "machine-readable report");

  std::string path;
  auto with_path = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "triangulation file or catalog:NAME")->required();
    return sub;
  };
  CLI::App* validate = with_path("validate", "check the structure of a triangulation");
  CLI::App* invariant = with_path("invariant", "print beta(M) and verify a certificate");
  invariant->add_option("--certificate", o.certificate, "certificate file");
  CLI::App* delta = with_path("delta", "reduce delta(beta(M)) in the exterior square");
  CLI::App* dilog = with_path("dilog", "enclose D(beta(M)) at each complex embedding");
  dilog->add_option("--tol", o.tol, "radius bound for PASS");
  CLI::App* pachner = with_path("pachner", "apply a Pachner move and compare D");
  pachner->add_option("--move", o.move, "23, 32 or 14")->required();
  pachner->add_option("--face", o.face, "pairing index for a 2-3 move");
  pachner->add_option("--simplex", o.simplex, "tetrahedron index for 3-2 and 1-4 moves");
  pachner->add_option("--new-point", o.new_point, R"(JSON point, e.g. {"z":["1","1"],"it":["0","2"]})");
  pachner->add_option("--out", o.out, "write the new triangulation here");
  pachner->add_option("--tol", o.tol, "radius bound for PASS");

  std::string action = "list";
  std::optional<std::string> name;
  CLI::App* catalog = app.add_subcommand("catalog", "list, show or extract shipped examples");
  catalog->add_option("action", action, "list, show or extract")->check(CLI::IsMember({"list", "show", "extract"}));
  catalog->add_option("name", name, "entry name");
  catalog->add_option("--out", o.out, "directory for extract");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  try {
    o.mode = crb::parse_mode(mode);
    if (!beta.empty()) o.beta = crb::parse_rational(beta);
  } catch (const crb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  if (*validate) return cmd_validate(path, o, out, err);
  if (*invariant) return cmd_invariant(path, o, out, err);
  if (*delta) return cmd_delta(path, o, out, err);
  if (*dilog) return cmd_dilog(path, o, out, err);
  if (*pachner) return cmd_pachner(path, o, out, err);
  return cmd_catalog(action, name, o, out, err);
}
