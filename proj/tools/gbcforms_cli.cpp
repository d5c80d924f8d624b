// gbcforms: command-line front end for the gbc core library.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 bad arguments or
// malformed mesh document, 3 mesh validation error, 4 I/O error, 5 internal.

#include <gbc/basis.hpp>
#include <gbc/conformity.hpp>
#include <gbc/coordinates.hpp>
#include <gbc/corpus.hpp>
#include <gbc/counting.hpp>
#include <gbc/error.hpp>
#include <gbc/mesh.hpp>
#include <gbc/mesh_io.hpp>
#include <gbc/random.hpp>
#include <gbc/reproduction.hpp>
#include <gbc/suite.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace gbc;

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2, kInvalid = 3, kIo = 4, kInternal = 5 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::Contract:
    case ErrorKind::Domain:
    case ErrorKind::UnsupportedTarget: return kUsage;
    case ErrorKind::Validation:
    case ErrorKind::Degenerate:
    case ErrorKind::Topology:
    case ErrorKind::NonManifold:
    case ErrorKind::Inconsistent: return kInvalid;
    case ErrorKind::Io: return kIo;
    default: return kInternal;
  }
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

int report_error(std::string_view kind, int code, const std::string& message) {
  std::cerr << "gbcforms: error kind=" << kind << " exit=" << code << ": " << one_line(message) << '\n';
  return code;
}

struct Common {
  double tol = 1e-8;
  std::uint64_t seed = 42;
  int samples = 100;
  std::string out;
  std::string format;  // empty until resolved per subcommand
};

void add_common(CLI::App* cmd, Common& c, const char* default_format) {
  cmd->add_option("--tol", c.tol, "Pass/fail tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Seed for sample points and random payloads")->capture_default_str();
  cmd->add_option("--samples", c.samples, "Interior samples per element")->capture_default_str()->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", c.out, "Write output here instead of standard output");
  cmd->add_option("--format", c.format, std::string("Output format (default ") + default_format + ")")
      ->check(CLI::IsMember({"json", "csv"}));
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + c.out);
  f << text;
  if (!f) throw Error(ErrorKind::Io, "write failed for " + c.out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedMesh {
  MeshComplex mesh;
  std::string name;
  std::string digest;
};

LoadedMesh load(const std::string& path) {
  const std::string text = read_file(path);
  return {build_complex(parse_mesh(text)), std::filesystem::path(path).filename().string(), sha256_hex(text)};
}

SuiteOptions options_from(const Common& c, SuiteKind kind) {
  SuiteOptions o;
  o.suite = kind;
  o.tol = c.tol;
  o.seed = c.seed;
  o.samples = c.samples;
  return o;
}

int finish_report(const Common& c, SuiteReport report) {
  emit(c, c.format == "csv" ? to_csv(report) : to_json(report));
  return report.pass() ? kPass : kFail;
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "expected comma-separated numbers, got \"" + text + "\"");
    }
  }
  return out;
}

Family parse_family(const std::string& s) {
  if (s == "P") return Family::P;
  if (s == "Pminus") return Family::Pminus;
  throw Error(ErrorKind::Parse, "family must be P or Pminus");
}

/// "W:0,1", "P:2,0,1", "P:0,1:rot", "L:3" (a coordinate)
BasisDescriptor parse_descriptor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::Parse, "descriptor \"" + text + "\" needs a family prefix");
  const std::string head = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  bool rot = false;
  if (rest.size() > 4 && rest.ends_with(":rot")) {
    rot = true;
    rest.resize(rest.size() - 4);
  }
  BasisDescriptor d;
  for (double v : parse_numbers(rest)) {
    if (v < 0 || v != static_cast<int>(v)) throw Error(ErrorKind::Parse, "descriptor ids must be non-negative integers");
    d.indices.push_back(static_cast<int>(v));
  }
  if (head == "W") {
    d.family = Family::Pminus;
  } else if (head == "P" || head == "L") {
    d.family = Family::P;
  } else {
    throw Error(ErrorKind::Parse, "descriptor family must be W, P or L");
  }
  d.k = static_cast<int>(d.indices.size()) - 1;
  d.rot = rot;
  if (d.k < 0 || (head == "L" && d.k != 0)) throw Error(ErrorKind::Parse, "malformed descriptor \"" + text + "\"");
  return d;
}

/// Parse a reproduction target: identity, one, position, constant:c1,c2[,c3],
/// linear:a11,a12,..(row major), scalar-linear:a1,a2[,a3].
PolyField parse_target(const std::string& text, int n) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::vector<double> v = colon == std::string::npos ? std::vector<double>{} : parse_numbers(text.substr(colon + 1));
  auto need = [&](std::size_t count) {
    if (v.size() != count) throw Error(ErrorKind::Parse, "target " + kind + " needs " + std::to_string(count) + " numbers");
  };
  if (kind == "identity") return PolyField::identity(n);
  if (kind == "one") return PolyField::scalar_one(n);
  if (kind == "position") return PolyField::position(n);
  if (kind == "constant" || kind == "scalar-linear") {
    need(static_cast<std::size_t>(n));
    Vec c = Eigen::Map<const Eigen::VectorXd>(v.data(), n);
    return kind == "constant" ? PolyField::constant(c) : PolyField::scalar_linear(c);
  }
  if (kind == "linear") {
    need(static_cast<std::size_t>(n * n));
    Mat a(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = v[static_cast<std::size_t>(r * n + c)];
    return PolyField::linear(a);
  }
  throw Error(ErrorKind::Parse, "unknown target \"" + text + "\"");
}

Vec parse_point(const std::string& text, int n) {
  const auto v = parse_numbers(text);
  if (static_cast<int>(v.size()) != n) throw Error(ErrorKind::Parse, "point \"" + text + "\" needs " + std::to_string(n) + " coordinates");
  return Eigen::Map<const Eigen::VectorXd>(v.data(), n);
}

void check_element(const MeshComplex& m, int e) {
  if (e < 0 || e >= static_cast<int>(m.elements().size())) {
    throw Error(ErrorKind::Contract, "element id " + std::to_string(e) + " out of range");
  }
}

// ---- subcommands ---------------------------------------------------------

int cmd_validate(const std::string& path, const Common& c) {
  const LoadedMesh lm = load(path);
  nlohmann::ordered_json j;
  j["mesh"] = lm.name;
  j["digest"] = lm.digest;
  j["valid"] = true;
  j["dimension"] = lm.mesh.dimension();
  j["vertices"] = lm.mesh.vertices().size();
  j["elements"] = lm.mesh.elements().size();
  auto facets = nlohmann::ordered_json::array();
  for (const Facet& f : lm.mesh.facets()) {
    nlohmann::ordered_json x;
    x["id"] = f.id;
    x["vertices"] = f.vertex_ids;
    std::vector<int> elems;
    for (const auto& s : f.sides) elems.push_back(s.element);
    x["elements"] = elems;
    x["interior"] = f.interior();
    facets.push_back(std::move(x));
  }
  j["facets"] = std::move(facets);
  emit(c, j.dump(2) + "\n");
  return kPass;
}

int cmd_coords(const std::string& path, const Common& c, std::optional<int> element, const std::vector<std::string>& points) {
  const LoadedMesh lm = load(path);
  const MeshComplex& m = lm.mesh;
  const int n = m.dimension();
  std::ostringstream os;
  os.precision(17);
  os << "element," << (n == 2 ? "x,y" : "x,y,z") << ",vertex,lambda," << (n == 2 ? "dx,dy" : "dx,dy,dz") << '\n';

  std::vector<int> elems;
  if (element) {
    check_element(m, *element);
    elems.push_back(*element);
  } else {
    for (int e = 0; e < static_cast<int>(m.elements().size()); ++e) elems.push_back(e);
  }
  for (int e : elems) {
    const Element& el = m.element(e);
    std::vector<Vec> xs;
    for (const auto& p : points) xs.push_back(parse_point(p, n));
    if (points.empty()) xs = sample_interior(el.shape, static_cast<std::size_t>(c.samples), SampleStream::derive(c.seed, static_cast<std::uint64_t>(e)));
    for (const Vec& x : xs) {
      const CoordinateSet cs = wachspress(el.shape, x);
      for (int i = 0; i < cs.size(); ++i) {
        os << e;
        for (int a = 0; a < n; ++a) os << ',' << x[a];
        os << ',' << el.global_ids[static_cast<std::size_t>(i)] << ',' << cs.values[static_cast<std::size_t>(i)];
        for (int a = 0; a < n; ++a) os << ',' << cs.gradients[static_cast<std::size_t>(i)][a];
        os << '\n';
      }
    }
  }
  emit(c, os.str());
  return kPass;
}

int cmd_count(const std::string& path, const Common& c) {
  const LoadedMesh lm = load(path);
  const MeshComplex& m = lm.mesh;
  bool consistent = true;
  std::ostringstream os;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  os << "element,n,k,family,constructed,boundary,polynomial,enumerated,note\n";
  for (int e = 0; e < static_cast<int>(m.elements().size()); ++e) {
    const Polytope& p = m.element(e).shape;
    for (const CountRecord& r : count_all(p)) {
      const auto enumerated = static_cast<long>(enumerate_basis(p, {r.family, r.k, false}).size());
      consistent = consistent && enumerated == r.constructed;
      const std::string fam = r.k == 0 ? "any" : std::string(to_string(r.family));
      os << e << ',' << r.n << ',' << r.k << ',' << fam << ',' << r.constructed << ',' << r.boundary << ','
         << r.polynomial << ',' << enumerated << ",\"" << r.note.value_or("") << "\"\n";
      nlohmann::ordered_json x;
      x["element"] = e;
      x["n"] = r.n;
      x["k"] = r.k;
      x["family"] = fam;
      x["constructed"] = r.constructed;
      x["boundary"] = r.boundary;
      x["polynomial"] = r.polynomial;
      x["enumerated"] = enumerated;
      if (r.note) x["note"] = *r.note;
      rows.push_back(std::move(x));
    }
  }
  emit(c, c.format == "json" ? rows.dump(2) + "\n" : os.str());
  return consistent ? kPass : kFail;
}

int cmd_verify_repro(const std::string& path, const Common& c, const std::string& family, std::optional<int> k, bool rot,
                     const std::string& target) {
  const LoadedMesh lm = load(path);
  SuiteOptions o = options_from(c, SuiteKind::Repro);
  SuiteReport report;
  report.version = std::string(tool_version());
  report.mesh = lm.name;
  report.digest = lm.digest;
  report.options = o;

  if (family.empty() && !k && target.empty()) {
    report.records = repro_checks(lm.mesh, o);
  } else {
    if (family.empty() || !k || target.empty()) throw Error(ErrorKind::Parse, "--family, --k and --target go together");
    const BasisSpec spec{parse_family(family), *k, rot};
    const PolyField t = parse_target(target, lm.mesh.dimension());
    const ReproductionCase only{"custom:" + target, spec, t, c.tol};
    report.records = repro_checks(lm.mesh, o, only);
  }
  sort_records(report.records);
  return finish_report(c, std::move(report));
}

int cmd_verify_conformity(const std::string& path, const Common& c, const std::string& family, std::optional<int> k,
                          bool rot, int facet_samples) {
  const LoadedMesh lm = load(path);
  SuiteOptions o = options_from(c, SuiteKind::Conformity);
  o.facet_samples = facet_samples;
  std::optional<BasisSpec> only;
  if (!family.empty() || k) {
    if (family.empty() || !k) throw Error(ErrorKind::Parse, "--family and --k go together");
    only = BasisSpec{parse_family(family), *k, rot};
    trace_kind_for(lm.mesh.dimension(), *only);  // rejects top-degree families
  }
  SuiteReport report;
  report.version = std::string(tool_version());
  report.mesh = lm.name;
  report.digest = lm.digest;
  report.options = o;
  report.records = conformity_checks(lm.mesh, o, only);
  sort_records(report.records);
  return finish_report(c, std::move(report));
}

int cmd_sample_field(const std::string& path, const Common& c, std::optional<int> element, const std::string& descriptor,
                     std::optional<int> facet_id) {
  const LoadedMesh lm = load(path);
  const MeshComplex& m = lm.mesh;
  const int n = m.dimension();
  const BasisDescriptor global = parse_descriptor(descriptor);

  // Localize the descriptor on an element; nullopt if a vertex is missing.
  auto localize = [&](int e) -> std::optional<BasisDescriptor> {
    BasisDescriptor d = global;
    for (int& i : d.indices) {
      i = m.element(e).local_of(i);
      if (i < 0) return std::nullopt;
    }
    return d;
  };

  std::ostringstream os;
  os.precision(17);
  const bool scalar = scalar_proxy(n, global.k);
  os << "element," << (n == 2 ? "x,y" : "x,y,z");
  if (scalar) {
    os << ",value";
  } else {
    os << (n == 2 ? ",u,v" : ",u,v,w");
  }

  if (facet_id) {
    if (*facet_id < 0 || *facet_id >= static_cast<int>(m.facets().size())) throw Error(ErrorKind::Contract, "facet id out of range");
    const Facet& f = m.facet(*facet_id);
    const FacetFrame frame = facet_frame(f);
    if (!scalar) os << (n == 2 ? ",tangential" : ",tangential1,tangential2") << ",normal";
    os << '\n';
    const auto xs = sample_facet(f, static_cast<std::size_t>(c.samples), c.seed);
    int used = 0;
    for (const FacetSide& side : f.sides) {
      if (element && side.element != *element) continue;
      const auto d = localize(side.element);
      if (!d) continue;
      ++used;
      for (const Vec& x : xs) {
        const FieldSample u = evaluate(*d, wachspress(m.element(side.element).shape, x));
        os << side.element;
        for (int a = 0; a < n; ++a) os << ',' << x[a];
        for (Eigen::Index a = 0; a < u.value.size(); ++a) os << ',' << u.value[a];
        if (!scalar) {
          for (const Vec& t : frame.tangents) os << ',' << t.dot(u.value);
          os << ',' << frame.normal.dot(u.value);
        }
        os << '\n';
      }
    }
    if (used == 0) throw Error(ErrorKind::Contract, "no element on this facet contains every vertex of " + descriptor);
  } else {
    if (!element) throw Error(ErrorKind::Parse, "sample-field needs --element or --facet");
    check_element(m, *element);
    const auto d = localize(*element);
    if (!d) throw Error(ErrorKind::Contract, "element " + std::to_string(*element) + " lacks a vertex of " + descriptor);
    os << '\n';
    const Polytope& p = m.element(*element).shape;
    for (const Vec& x : sample_interior(p, static_cast<std::size_t>(c.samples), c.seed)) {
      const FieldSample u = evaluate(*d, wachspress(p, x));
      os << *element;
      for (int a = 0; a < n; ++a) os << ',' << x[a];
      for (Eigen::Index a = 0; a < u.value.size(); ++a) os << ',' << u.value[a];
      os << '\n';
    }
  }
  emit(c, os.str());
  return kPass;
}

int cmd_gen_corpus(const std::string& dir) {
  for (const auto& p : generate_corpus(dir)) std::cout << p.string() << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized barycentric basis construction and verification"};
  app.set_version_flag("--version", std::string(gbc::tool_version()));
  app.require_subcommand(1);

  std::string mesh;
  Common c;
  std::optional<int> element, k, facet;
  std::string family, target, descriptor, suite = "all", dir;
  bool rot = false;
  int facet_samples = 20;
  std::vector<std::string> points;

  auto* validate = app.add_subcommand("validate", "Validate a mesh and list its facets");
  auto* coords = app.add_subcommand("coords", "Wachspress coordinates and gradients as CSV");
  auto* count = app.add_subcommand("count", "Basis counts per element");
  auto* identities = app.add_subcommand("verify-identities", "Coordinate identity checks");
  auto* repro = app.add_subcommand("verify-repro", "Polynomial reproduction checks");
  auto* conformity = app.add_subcommand("verify-conformity", "Trace continuity checks on interior facets");
  auto* field = app.add_subcommand("sample-field", "Sample one basis function as CSV");
  auto* corpus = app.add_subcommand("gen-corpus", "Write the bundled meshes");
  auto* run = app.add_subcommand("run-suite", "Run a check suite and write a report");

  for (auto* cmd : {validate, coords, count, identities, repro, conformity, field, run}) {
    cmd->add_option("mesh", mesh, "Mesh document (JSON)")->required();
  }
  for (auto* cmd : {validate, identities, repro, conformity, run}) add_common(cmd, c, "json");
  for (auto* cmd : {coords, count, field}) add_common(cmd, c, "csv");

  coords->add_option("--element", element, "Element id (default: all)");
  coords->add_option("--point", points, "Point as x,y[,z]; repeatable (default: interior samples)");
  repro->add_option("--family", family, "P or Pminus");
  repro->add_option("--k", k, "Form degree");
  repro->add_flag("--rot", rot, "Rotated 2D 1-form variant");
  repro->add_option("--target", target,
                    "identity | one | position | constant:c.. | scalar-linear:a.. | linear:a11,a12,.. (row major)");
  conformity->add_option("--family", family, "P or Pminus");
  conformity->add_option("--k", k, "Form degree");
  conformity->add_flag("--rot", rot, "Rotated 2D 1-form variant");
  conformity->add_option("--facet-samples", facet_samples, "Samples per facet")->capture_default_str()->check(CLI::PositiveNumber);
  field->add_option("--element", element, "Element id");
  field->add_option("--descriptor", descriptor, "Basis function in global vertex ids, e.g. W:1,4 or P:1,4:rot")->required();
  field->add_option("--facet", facet, "Sample on this facet from every incident element");
  corpus->add_option("--out", dir, "Output directory")->required();
  run->add_option("--suite", suite, "identities | repro | conformity | count | all")
      ->capture_default_str()
      ->check(CLI::IsMember({"identities", "repro", "conformity", "count", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", kUsage, e.what());
  }

  if (c.format.empty()) c.format = (*coords || *count || *field) ? "csv" : "json";

  try {
    if (*validate) return cmd_validate(mesh, c);
    if (*coords) return cmd_coords(mesh, c, element, points);
    if (*count) return cmd_count(mesh, c);
    if (*identities) {
      const LoadedMesh lm = load(mesh);
      return finish_report(c, run_suite(lm.mesh, options_from(c, SuiteKind::Identities), lm.name, lm.digest));
    }
    if (*repro) return cmd_verify_repro(mesh, c, family, k, rot, target);
    if (*conformity) return cmd_verify_conformity(mesh, c, family, k, rot, facet_samples);
    if (*field) return cmd_sample_field(mesh, c, element, descriptor, facet);
    if (*corpus) return cmd_gen_corpus(dir);
    if (*run) {
      const LoadedMesh lm = load(mesh);
      return finish_report(c, run_suite(lm.mesh, options_from(c, parse_suite_kind(suite)), lm.name, lm.digest));
    }
  } catch (const gbc::ValidationError& e) {
    return report_error("validation", kInvalid, e.what());
  } catch (const gbc::Error& e) {
    return report_error(gbc::to_string(e.kind()), exit_code(e.kind()), e.what());
  } catch (const std::exception& e) {
    return report_error("internal", kInternal, e.what());
  }
  return kUsage;
}
