#include "crbcli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>

#include <json.hpp>

#include "crb/dilog.hpp"
#include "crb/errors.hpp"
#include "crb/wedge.hpp"
#include "crbcli/moves.hpp"

namespace crb::cli {

namespace {

using json = nlohmann::json;

const char* kTorsionWording = "order divides 3 (verified); order exactly 3 per paper (not machine-verified)";

// Runs body, mapping library errors to exit code 2.
template <class F>
int guarded(std::ostream& err, F body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

std::string ball_json(const RealBall& b) { return b.to_string(25); }

bool within(const RealBall& b, double tol) { return b.contains_zero() && b.rad().to_double() < tol; }

std::string status(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

double default_tolerance(long prec) {
  return std::pow(10.0, 8 - std::floor(static_cast<double>(prec) * std::log10(2.0)));
}

Input load_input(const std::string& path, const Options& o) {
  Input in;
  const std::string prefix = "catalog:";
  if (path.rfind(prefix, 0) == 0) {
    CatalogEntry e = catalog_entry(path.substr(prefix.size()), o.beta);
    in.tri = e.tri;
    in.symbol = e.symbol;
    in.entry = std::move(e);
  } else {
    in.tri = load_triangulation(path);
  }
  return in;
}

int cmd_validate(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Input in = load_input(path, o);
    ValidationReport r = validate_structure(in.tri);
    if (o.json) {
      json j;
      j["ok"] = r.ok();
      for (const auto& l : r.lines) j["checks"].push_back({{"id", l.id}, {"status", status_name(l.status)}, {"witness", l.witness}});
      out << j.dump(2) << "\n";
    } else {
      out << r.to_string();
      out << "validation: " << (r.ok() ? "PASS" : "FAIL") << "\n";
    }
    return r.ok() ? kOk : kCheckFailed;
  });
}

int cmd_invariant(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Input in = load_input(path, o);
    PreBlochElement beta = beta_triangulation(in.tri);
    std::optional<CertificateFile> cert;
    if (o.certificate) {
      cert = load_certificate(*o.certificate, in.tri.field);
    } else if (in.entry) {
      cert = in.entry->certificate;
    }
    json j;
    j["symbol"] = in.symbol;
    j["beta"] = beta.to_string();
    if (!o.json) out << in.symbol << " = " << beta.to_string() << "\n";
    int code = kOk;
    if (cert) {
      CertificateOutcome r = run_certificate(beta, *cert, o.mode);
      j["certificate"] = {{"verified", r.verified}, {"modes", r.modes()}};
      for (const auto& st : r.stages) {
        j["certificate"]["stages"].push_back(
            {{"mode", mode_name(st.mode)}, {"ok", st.ok}, {"reduced", st.reduced.to_string()}, {"detail", st.detail}});
      }
      if (r.verified) {
        std::string chain = in.symbol;
        for (const auto& st : r.stages) chain += " = " + st.reduced.to_string();
        j["certificate"]["chain"] = chain;
        if (!o.json) out << chain << "; certificate VERIFIED (" << r.modes() << ")\n";
      } else {
        code = kCheckFailed;
        if (!o.json) {
          out << "certificate FAILED at stage " << r.stages.size() << " (" << mode_name(r.stages.back().mode)
              << " mode): " << r.stages.back().detail << "\n";
        }
      }
    }
    if (in.entry && in.entry->torsion && !o.certificate) {
      long k = in.entry->torsion_mult;
      CertificateOutcome t = run_certificate(k * beta, *in.entry->torsion, o.mode);
      j["torsion"] = {{"multiple", k}, {"reduces_to_zero", t.verified}};
      if (t.verified) j["torsion"]["claim"] = kTorsionWording;
      if (!o.json) {
        if (t.verified) {
          out << k << "·" << in.symbol << " = 0 (six_c); torsion: " << kTorsionWording << "\n";
        } else {
          out << k << "·" << in.symbol << ": torsion certificate FAILED: " << t.stages.back().detail << "\n";
        }
      }
      if (!t.verified) code = kCheckFailed;
    }
    if (o.json) out << j.dump(2) << "\n";
    return code;
  });
}

int cmd_delta(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Input in = load_input(path, o);
    PreBlochElement beta = beta_triangulation(in.tri);
    WedgeElement w = delta_map(beta);
    MultiplicativeBasis basis = build_mult_basis(wedge_entries(w), in.tri.field);
    CanonicalWedge c = wedge_reduce(w, basis);
    bool zero = c.is_zero();
    if (o.json) {
      out << json{{"symbol", in.symbol}, {"report", wedge_report(c, basis)}, {"in_bloch_group", zero}}.dump(2) << "\n";
    } else {
      out << "δ(" << in.symbol << ")\n" << wedge_report(c, basis) << "IN BLOCH GROUP: " << (zero ? "yes" : "no")
          << "\n";
    }
    return zero ? kOk : kCheckFailed;
  });
}

int cmd_dilog(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.prec < 32) throw Error(ErrorKind::PrecisionExhausted, "--prec must be at least 32 bits");
    Input in = load_input(path, o);
    PreBlochElement beta = beta_triangulation(in.tri);
    double tol = o.tol.value_or(default_tolerance(o.prec));
    auto values = D_per_embedding(beta, o.prec);
    bool ok = true;
    json j;
    j["symbol"] = in.symbol;
    j["prec"] = o.prec;
    j["tolerance"] = tol;
    j["embeddings"] = json::array();
    if (!o.json) out << "D(" << in.symbol << ") at " << o.prec << " bits, tolerance " << tol << "\n";
    for (const auto& e : values) {
      bool pass = within(e.value, tol);
      ok = ok && pass;
      j["embeddings"].push_back({{"root", e.root_index}, {"value", ball_json(e.value)}, {"pass", pass}});
      if (!o.json) out << "  root " << e.root_index << ": " << e.value.to_string(25) << "  " << status(pass) << "\n";
    }
    if (values.empty() && !o.json) out << "  no complex embedding; D vanishes identically\n";
    j["pass"] = ok;
    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      out << "dilogarithm: " << status(ok) << "\n";
    }
    return ok ? kOk : kCheckFailed;
  });
}

int cmd_pachner(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!o.move) throw Error(ErrorKind::Parse, "--move is required (23, 32 or 14)");
    Input in = load_input(path, o);
    const Triangulation& t = in.tri;
    Triangulation next;
    std::string what;
    if (*o.move == "23") {
      if (!o.face) throw Error(ErrorKind::Parse, "--move 23 needs --face PAIRING");
      next = apply_move_23(t, static_cast<std::size_t>(*o.face));
      what = "2-3 across pairing " + std::to_string(*o.face);
    } else if (*o.move == "32") {
      if (!o.simplex) throw Error(ErrorKind::Parse, "--move 32 needs --simplex TET");
      next = apply_move_32(t, static_cast<std::size_t>(*o.simplex));
      what = "3-2 at tet " + std::to_string(*o.simplex);
    } else if (*o.move == "14") {
      if (!o.simplex || !o.new_point) throw Error(ErrorKind::Parse, "--move 14 needs --simplex TET and --new-point");
      next = apply_move_14(t, static_cast<std::size_t>(*o.simplex), parse_point(*o.new_point, t.field));
      what = "1-4 in tet " + std::to_string(*o.simplex);
    } else {
      throw Error(ErrorKind::Parse, "unknown move '" + *o.move + "'");
    }
    RealBall before = D_of_element(beta_triangulation(t), o.prec);
    RealBall after = D_of_element(beta_triangulation(next), o.prec);
    RealBall diff = after - before;
    double tol = o.tol.value_or(default_tolerance(o.prec));
    bool ok = within(diff, tol);
    if (o.out) write_file(*o.out, dump_triangulation(next));
    if (o.json) {
      out << json{{"move", what},
                  {"tetrahedra", next.tets.size()},
                  {"D_before", ball_json(before)},
                  {"D_after", ball_json(after)},
                  {"difference", ball_json(diff)},
                  {"pass", ok}}
                 .dump(2)
          << "\n";
    } else {
      out << "move: " << what << " (" << t.tets.size() << " -> " << next.tets.size() << " tetrahedra)\n";
      out << "D(β before) = " << before.to_string(25) << "\n";
      out << "D(β after)  = " << after.to_string(25) << "\n";
      out << "difference  = " << diff.to_string(25) << "  " << status(ok) << "\n";
      if (o.out) {
        out << "wrote " << *o.out << "\n";
      } else {
        out << dump_triangulation(next);
      }
    }
    return ok ? kOk : kCheckFailed;
  });
}

int cmd_catalog(const std::string& action, const std::optional<std::string>& name, const Options& o,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (action == "list") {
      for (const auto& n : catalog_names()) out << n << "  " << catalog_entry(n).summary << "\n";
      return kOk;
    }
    if (!name) throw Error(ErrorKind::Parse, "catalog " + action + " needs an entry name");
    CatalogEntry e = catalog_entry(*name, o.beta);
    if (action == "show") {
      out << dump_triangulation(e.tri);
      return kOk;
    }
    if (action == "extract") {
      std::filesystem::path dir = o.out.value_or(".");
      std::filesystem::create_directories(dir);
      auto put = [&](const std::string& file, const std::string& text) {
        write_file((dir / file).string(), text);
        out << "wrote " << (dir / file).string() << "\n";
      };
      put(e.name + ".json", dump_triangulation(e.tri));
      if (e.certificate) put(e.name + ".cert.json", dump_certificate(*e.certificate));
      if (e.torsion) put(e.name + ".torsion.json", dump_certificate(*e.torsion));
      return kOk;
    }
    throw Error(ErrorKind::Parse, "unknown catalog action '" + action + "'");
  });
}

}  // namespace crb::cli
