#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crbcli/io.hpp"

namespace crb::cli {

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::string symbol;  // e.g. "β(W)"
  Triangulation tri;
  std::optional<CertificateFile> certificate;
  // Certificate reducing torsion_mult * beta to 0.
  std::optional<CertificateFile> torsion;
  long torsion_mult = 3;
  std::optional<Rational> beta;
};

std::vector<std::string> catalog_names();
// beta applies to fig8-family only (default 1/2). Parse error for unknown
// names.
CatalogEntry catalog_entry(const std::string& name, const std::optional<Rational>& beta = std::nullopt);

// Two copies of one tetrahedron over Q(i), the second with vertices 0 and 1
// swapped, glued along all four faces by vertex ids.
Triangulation random_double(std::mt19937& rng);

// [u0u1u2u3] - [u0u1u2u4] on five random generic points over Q(i), glued
// along u0u1u2 only.
Triangulation random_bipyramid(std::mt19937& rng);

// Outcome of running a multi-stage certificate from `start`.
struct StageOutcome {
  Mode mode = Mode::Extended;
  PreBlochElement reduced;
  bool ok = false;
  std::string detail;
};

struct CertificateOutcome {
  std::vector<StageOutcome> stages;
  bool verified = false;
  // "extended mode", or one mode per stage when they differ.
  std::string modes() const;
};

// A stage runs in the stricter of its own mode and `mode`; stops at the first
// failing stage.
CertificateOutcome run_certificate(const PreBlochElement& start, const CertificateFile& cert, Mode mode);

}  // namespace crb::cli
