#include "crbcli/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "crb/errors.hpp"

namespace crb::cli {

using json = nlohmann::json;

namespace {

// Semantic error at a JSON pointer; located in the source text afterwards.
struct SchemaError {
  std::string pointer;
  std::string message;
};

class Locator {
 public:
  explicit Locator(std::string_view s) : s_(s) {}

  std::optional<std::size_t> find(const std::string& pointer) {
    std::vector<std::string> tokens;
    for (std::size_t k = 1; k <= pointer.size();) {
      std::size_t e = std::min(pointer.find('/', k), pointer.size());
      std::string t = pointer.substr(k, e - k);
      for (std::size_t p; (p = t.find("~1")) != std::string::npos;) t.replace(p, 2, "/");
      for (std::size_t p; (p = t.find("~0")) != std::string::npos;) t.replace(p, 2, "~");
      tokens.push_back(t);
      k = e + 1;
    }
    i_ = 0;
    ws();
    for (const auto& tok : tokens) {
      if (i_ >= s_.size()) return std::nullopt;
      if (s_[i_] == '{') {
        ++i_;
        bool found = false;
        while (true) {
          ws();
          if (i_ >= s_.size() || s_[i_] == '}') return std::nullopt;
          std::string key = str();
          ws();
          ++i_;  // ':'
          ws();
          if (key == tok) {
            found = true;
            break;
          }
          skip();
          ws();
          if (i_ < s_.size() && s_[i_] == ',') ++i_;
        }
        if (!found) return std::nullopt;
      } else if (s_[i_] == '[') {
        ++i_;
        long idx = std::stol(tok);
        for (long k = 0; k < idx; ++k) {
          ws();
          skip();
          ws();
          if (i_ >= s_.size() || s_[i_] != ',') return std::nullopt;
          ++i_;
        }
        ws();
      } else {
        return std::nullopt;
      }
    }
    return i_;
  }

 private:
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::string str() {
    std::string out;
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\') ++i_;
      if (i_ < s_.size()) out += s_[i_++];
    }
    ++i_;
    return out;
  }
  void skip() {
    if (i_ >= s_.size()) return;
    char c = s_[i_];
    if (c == '"') {
      str();
    } else if (c == '{' || c == '[') {
      int depth = 0;
      while (i_ < s_.size()) {
        char d = s_[i_];
        if (d == '"') {
          str();
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') --depth;
        ++i_;
        if (depth == 0) break;
      }
    } else {
      while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != '}' && s_[i_] != ']' &&
             !std::isspace(static_cast<unsigned char>(s_[i_])))
        ++i_;
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

std::string position(std::string_view text, std::size_t offset) {
  long line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    auto p = msg.find("; last read");
    throw Error(ErrorKind::Parse, source + ":" + position(text, at) + ": invalid JSON" +
                                      (p == std::string::npos ? "" : msg.substr(msg.find(':', p))));
  }
}

// Runs a schema reader, converting failures into located parse errors.
template <class F>
auto located(const std::string& text, const std::string& source, F&& f) {
  try {
    return f();
  } catch (const SchemaError& e) {
    Locator loc(text);
    auto off = loc.find(e.pointer);
    std::string where = off ? position(text, *off) : "1:1";
    throw Error(ErrorKind::Parse, source + ":" + where + ": " + e.message + " (at " +
                                      (e.pointer.empty() ? "/" : e.pointer) + ")");
  }
}

std::string ptr(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string ptr(const std::string& base, std::size_t k) { return base + "/" + std::to_string(k); }

const json& member(const json& j, const std::string& at, const std::string& key) {
  if (!j.is_object()) throw SchemaError{at, "expected an object"};
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError{at, "missing key \"" + key + "\""};
  return *it;
}

Rational read_rational(const json& j, const std::string& at) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  if (!j.is_string()) throw SchemaError{at, "numbers are written as rational strings \"p/q\""};
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    throw SchemaError{at, "malformed rational \"" + j.get<std::string>() + "\""};
  }
}

long read_int(const json& j, const std::string& at) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    Rational q = read_rational(j, at);
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  }
  throw SchemaError{at, "expected an integer"};
}

std::vector<Rational> read_rationals(const json& j, const std::string& at) {
  if (!j.is_array()) throw SchemaError{at, "expected an array of rationals"};
  std::vector<Rational> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(read_rational(j[k], ptr(at, k)));
  return out;
}

FieldElement read_element(const json& j, const NumberField& F, const std::string& at) {
  if (j.is_string() || j.is_number_integer()) return F.from_rational(read_rational(j, at));
  std::vector<Rational> c = read_rationals(j, at);
  if (c.size() > static_cast<std::size_t>(F.degree())) {
    throw SchemaError{at, "element has more coordinates than the field degree"};
  }
  return F.element(c);
}

json write_element(const FieldElement& a) {
  json out = json::array();
  for (const auto& c : a.coeffs()) out.push_back(format_rational(c));
  return out;
}

Point read_point(const json& j, const NumberField& F, const std::string& at) {
  if (!j.is_object()) throw SchemaError{at, "a point is an object"};
  if (j.contains("inf")) {
    if (!j["inf"].is_boolean() || !j["inf"].get<bool>()) throw SchemaError{ptr(at, "inf"), "expected true"};
    return Point::at_infinity();
  }
  FieldElement z = read_element(member(j, at, "z"), F, ptr(at, "z"));
  try {
    if (j.contains("it")) return Point::from_zh(z, read_element(j["it"], F, ptr(at, "it")));
    if (j.contains("t")) return Point::from_zt(z, read_element(j["t"], F, ptr(at, "t")));
  } catch (const Error& e) {
    throw SchemaError{at, e.what()};
  }
  throw SchemaError{at, "a finite point needs \"it\" (i times the height) or \"t\""};
}

json write_point(const Point& p) {
  if (p.infinity) return json{{"inf", true}};
  return json{{"z", write_element(p.z)}, {"it", write_element(p.h)}};
}

NumberField read_field(const json& j, const std::string& at) {
  std::vector<Rational> m = read_rationals(member(j, at, "minpoly"), ptr(at, "minpoly"));
  long emb = j.contains("embedding") ? read_int(j["embedding"], ptr(at, "embedding")) : 0;
  std::vector<Rational> sigma = read_rationals(member(j, at, "sigma"), ptr(at, "sigma"));
  if (m.size() == 2 && m[0] == 0 && m[1] == 1 && emb == 0) return NumberField::rationals();
  try {
    return NumberField::define(m, static_cast<int>(emb), sigma);
  } catch (const Error& e) {
    throw SchemaError{at, e.what()};
  }
}

json write_field(const NumberField& F) {
  json m = json::array(), s = json::array();
  for (const auto& c : F.minpoly()) m.push_back(format_rational(c));
  for (const auto& c : F.sigma_image()) s.push_back(format_rational(c));
  return json{{"minpoly", m}, {"embedding", F.embedding_index()}, {"sigma", s}};
}

FaceRef read_face(const json& j, const std::string& at) {
  if (!j.is_array() || j.size() != 4) throw SchemaError{at, "a face is [tet, i, j, k]"};
  FaceRef f;
  f.tet = static_cast<int>(read_int(j[0], ptr(at, 0)));
  for (int k = 0; k < 3; ++k) f.v[k] = static_cast<int>(read_int(j[k + 1], ptr(at, k + 1)));
  return f;
}

json write_face(const FaceRef& f) { return json::array({f.tet, f.v[0], f.v[1], f.v[2]}); }

const char* kQuadKeys[4] = {"z01", "z10", "z23", "z32"};

void check_version(const json& root) {
  if (!root.is_object()) throw SchemaError{"", "top level must be an object"};
  if (root.contains("crb") && read_int(root["crb"], "/crb") != 1) throw SchemaError{"/crb", "unsupported schema version"};
}

Triangulation read_triangulation(const json& root) {
  check_version(root);
  Triangulation t;
  t.field = read_field(member(root, "", "field"), "/field");
  const json& tets = member(root, "", "tetrahedra");
  if (!tets.is_array()) throw SchemaError{"/tetrahedra", "expected an array"};
  const json* points = root.contains("points") ? &root["points"] : nullptr;
  if (points && (!points->is_array() || points->size() != tets.size())) {
    throw SchemaError{"/points", "expected one entry per tetrahedron"};
  }
  for (std::size_t s = 0; s < tets.size(); ++s) {
    const std::string at = ptr("/tetrahedra", s);
    const json& j = tets[s];
    if (!j.is_object()) throw SchemaError{at, "expected an object"};
    TetRecord rec;
    if (j.contains("verts")) {
      const json& v = j["verts"];
      if (!v.is_array() || v.size() != 4) throw SchemaError{ptr(at, "verts"), "expected four vertex ids"};
      for (int k = 0; k < 4; ++k) rec.verts[k] = read_int(v[k], ptr(ptr(at, "verts"), k));
    }
    if (j.contains("sign")) {
      long sg = read_int(j["sign"], ptr(at, "sign"));
      if (sg != 1 && sg != -1) throw SchemaError{ptr(at, "sign"), "sign must be 1 or -1"};
      rec.sign = static_cast<int>(sg);
    }
    if (points && !(*points)[s].is_null()) {
      const std::string pat = ptr("/points", s);
      const json& pj = (*points)[s];
      if (!pj.is_array() || pj.size() != 4) throw SchemaError{pat, "expected four points"};
      std::array<Point, 4> pts;
      for (int k = 0; k < 4; ++k) pts[k] = read_point(pj[k], t.field, ptr(pat, k));
      rec.points = pts;
    }
    bool has_all = true;
    for (const char* key : kQuadKeys) has_all &= j.contains(key);
    if (has_all) {
      rec.q = Quadruple{read_element(j["z01"], t.field, ptr(at, "z01")), read_element(j["z10"], t.field, ptr(at, "z10")),
                        read_element(j["z23"], t.field, ptr(at, "z23")), read_element(j["z32"], t.field, ptr(at, "z32"))};
    } else if (rec.points) {
      try {
        rec.q = cross_ratios(*rec.points, t.field);
      } catch (const Error& e) {
        throw SchemaError{ptr("/points", s), e.what()};
      }
    } else {
      for (const char* key : kQuadKeys) member(j, at, key);
    }
    t.tets.push_back(std::move(rec));
  }
  if (root.contains("pairings")) {
    const json& ps = root["pairings"];
    if (!ps.is_array()) throw SchemaError{"/pairings", "expected an array"};
    std::vector<Pairing> out;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const std::string at = ptr("/pairings", k);
      out.push_back({read_face(member(ps[k], at, "face"), ptr(at, "face")),
                     read_face(member(ps[k], at, "mate"), ptr(at, "mate"))});
    }
    t.pairings = std::move(out);
  }
  return t;
}

PreBlochElement read_pb(const json& j, const NumberField& F, const std::string& at) {
  PreBlochElement e;
  if (j.is_string() && j.get<std::string>() == "0") return e;
  if (!j.is_object()) throw SchemaError{at, "expected {\"terms\": [...], \"cf\": n}"};
  if (j.contains("terms")) {
    const json& ts = j["terms"];
    if (!ts.is_array()) throw SchemaError{ptr(at, "terms"), "expected an array"};
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const std::string tat = ptr(ptr(at, "terms"), k);
      FieldElement z = read_element(member(ts[k], tat, "z"), F, ptr(tat, "z"));
      long n = read_int(member(ts[k], tat, "n"), ptr(tat, "n"));
      try {
        e.add(z, n);
      } catch (const Error& err) {
        throw SchemaError{tat, err.what()};
      }
    }
  }
  if (j.contains("cf")) e.add_cf(read_int(j["cf"], ptr(at, "cf")));
  return e;
}

json write_pb(const PreBlochElement& e) {
  json terms = json::array();
  for (const auto& [z, n] : e.terms()) terms.push_back(json{{"z", write_element(z)}, {"n", n}});
  return json{{"terms", terms}, {"cf", e.cf()}};
}

Certificate read_relations(const json& j, const NumberField& F, const std::string& at) {
  if (!j.is_array()) throw SchemaError{at, "expected an array of relations"};
  Certificate c;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string rat = ptr(at, k);
    const json& r = j[k];
    RelationInstance inst;
    const json& kind = member(r, rat, "kind");
    try {
      inst.kind = parse_relation_name(kind.is_string() ? kind.get<std::string>() : "");
    } catch (const Error& e) {
      throw SchemaError{ptr(rat, "kind"), e.what()};
    }
    inst.mult = r.contains("mult") ? read_int(r["mult"], ptr(rat, "mult")) : 1;
    if (r.contains("args")) {
      const json& args = r["args"];
      if (!args.is_array()) throw SchemaError{ptr(rat, "args"), "expected an array"};
      for (std::size_t a = 0; a < args.size(); ++a) {
        inst.args.push_back(read_element(args[a], F, ptr(ptr(rat, "args"), a)));
      }
    }
    c.push_back(std::move(inst));
  }
  return c;
}

CertificateFile read_certificate(const json& root, const NumberField& F) {
  check_version(root);
  CertificateFile cf;
  auto read_stage = [&](const json& j, const std::string& at) {
    Stage st;
    if (j.contains("mode")) {
      try {
        st.mode = parse_mode(j["mode"].is_string() ? j["mode"].get<std::string>() : "");
      } catch (const Error& e) {
        throw SchemaError{ptr(at, "mode"), e.what()};
      }
    }
    if (j.contains("target")) st.target = read_pb(j["target"], F, ptr(at, "target"));
    st.relations = read_relations(member(j, at, "relations"), F, ptr(at, "relations"));
    return st;
  };
  if (root.contains("stages")) {
    const json& ss = root["stages"];
    if (!ss.is_array()) throw SchemaError{"/stages", "expected an array"};
    for (std::size_t k = 0; k < ss.size(); ++k) cf.stages.push_back(read_stage(ss[k], ptr("/stages", k)));
  } else {
    cf.stages.push_back(read_stage(root, ""));
  }
  return cf;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, path + ": cannot write file");
  out << text;
}

Triangulation parse_triangulation(const std::string& text, const std::string& source) {
  json root = parse_json(text, source);
  return located(text, source, [&] { return read_triangulation(root); });
}

Triangulation load_triangulation(const std::string& path) { return parse_triangulation(read_file(path), path); }

std::string dump_triangulation(const Triangulation& t) {
  json root{{"crb", 1}, {"field", write_field(t.field)}};
  json tets = json::array();
  bool any_points = false;
  for (const auto& rec : t.tets) {
    json j{{"verts", rec.verts}};
    for (int k = 0; k < 4; ++k) {
      const FieldElement& z = k == 0 ? rec.q.z01 : k == 1 ? rec.q.z10 : k == 2 ? rec.q.z23 : rec.q.z32;
      j[kQuadKeys[k]] = write_element(z);
    }
    if (rec.sign != 1) j["sign"] = rec.sign;
    tets.push_back(j);
    any_points |= rec.points.has_value();
  }
  root["tetrahedra"] = tets;
  if (any_points) {
    json pts = json::array();
    for (const auto& rec : t.tets) {
      if (!rec.points) {
        pts.push_back(nullptr);
        continue;
      }
      json four = json::array();
      for (const auto& p : *rec.points) four.push_back(write_point(p));
      pts.push_back(four);
    }
    root["points"] = pts;
  }
  if (t.pairings) {
    json ps = json::array();
    for (const auto& p : *t.pairings) ps.push_back(json{{"face", write_face(p.face)}, {"mate", write_face(p.mate)}});
    root["pairings"] = ps;
  }
  return root.dump(2) + "\n";
}

CertificateFile parse_certificate(const std::string& text, const NumberField& field, const std::string& source) {
  json root = parse_json(text, source);
  return located(text, source, [&] { return read_certificate(root, field); });
}

CertificateFile load_certificate(const std::string& path, const NumberField& field) {
  return parse_certificate(read_file(path), field, path);
}

std::string dump_certificate(const CertificateFile& c) {
  json stages = json::array();
  for (const auto& st : c.stages) {
    json j;
    if (st.mode) j["mode"] = mode_name(*st.mode);
    if (st.target) j["target"] = write_pb(*st.target);
    json rels = json::array();
    for (const auto& r : st.relations) {
      json args = json::array();
      for (const auto& a : r.args) args.push_back(write_element(a));
      rels.push_back(json{{"kind", relation_name(r.kind)}, {"mult", r.mult}, {"args", args}});
    }
    j["relations"] = rels;
    stages.push_back(j);
  }
  return json{{"crb", 1}, {"stages", stages}}.dump(2) + "\n";
}

Point parse_point(const std::string& text, const NumberField& field, const std::string& source) {
  json root = parse_json(text, source);
  return located(text, source, [&] { return read_point(root, field, ""); });
}

}  // namespace crb::cli
