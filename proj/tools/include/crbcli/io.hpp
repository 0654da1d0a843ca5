#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crb/prebloch.hpp"
#include "crb/simplicial.hpp"

namespace crb::cli {

// One reduction step of a certificate. Without a target the stage just
// subtracts its relations; a stage may demand a mode (complex for steps that
// only hold in P(C)).
struct Stage {
  std::optional<Mode> mode;
  std::optional<PreBlochElement> target;
  Certificate relations;
};

struct CertificateFile {
  std::vector<Stage> stages;
};

// Parse errors carry "source:line:col: message".
Triangulation parse_triangulation(const std::string& text, const std::string& source = "<input>");
Triangulation load_triangulation(const std::string& path);
std::string dump_triangulation(const Triangulation& t);

CertificateFile parse_certificate(const std::string& text, const NumberField& field,
                                  const std::string& source = "<input>");
CertificateFile load_certificate(const std::string& path, const NumberField& field);
std::string dump_certificate(const CertificateFile& c);

// {"inf": true}, {"z": E, "it": E} or {"z": E, "t": E}.
Point parse_point(const std::string& text, const NumberField& field, const std::string& source = "<point>");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace crb::cli
