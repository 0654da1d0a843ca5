#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "crb/prebloch.hpp"
#include "crbcli/catalog.hpp"

namespace crb::cli {

// Exit codes of every command.
enum Exit : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct Options {
  Mode mode = Mode::Extended;
  long prec = 128;
  std::optional<std::string> certificate;
  std::optional<double> tol;
  bool json = false;
  std::optional<std::string> move;
  std::optional<long> face;
  std::optional<long> simplex;
  std::optional<std::string> new_point;
  std::optional<std::string> out;
  std::optional<Rational> beta;
};

// "catalog:NAME" or a file path.
struct Input {
  Triangulation tri;
  std::string symbol = "β(M)";
  std::optional<CatalogEntry> entry;
};
Input load_input(const std::string& path, const Options& o);

// Default D tolerance at a working precision: 10^(8 - floor(prec log10 2)).
double default_tolerance(long prec);

int cmd_validate(const std::string& path, const Options& o, std::ostream& out, std::ostream& err);
int cmd_invariant(const std::string& path, const Options& o, std::ostream& out, std::ostream& err);
int cmd_delta(const std::string& path, const Options& o, std::ostream& out, std::ostream& err);
int cmd_dilog(const std::string& path, const Options& o, std::ostream& out, std::ostream& err);
int cmd_pachner(const std::string& path, const Options& o, std::ostream& out, std::ostream& err);
// action: "list", "show" or "extract" (writes NAME.json and certificates to
// o.out).
int cmd_catalog(const std::string& action, const std::optional<std::string>& name, const Options& o,
                std::ostream& out, std::ostream& err);

}  // namespace crb::cli
