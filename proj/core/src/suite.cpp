#include <gbc/conformity.hpp>
#include <gbc/coordinates.hpp>
#include <gbc/counting.hpp>
#include <gbc/error.hpp>
#include <gbc/mesh_io.hpp>
#include <gbc/random.hpp>
#include <gbc/suite.hpp>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <tuple>

#ifndef GBC_VERSION
#define GBC_VERSION "0.0.0"
#endif

namespace gbc {

std::string_view tool_version() { return GBC_VERSION; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::Internal, "SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int a = 0; a < len; ++a) {
    out.push_back(hex[md[a] >> 4]);
    out.push_back(hex[md[a] & 0xF]);
  }
  return out;
}

std::string_view to_string(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::Identities: return "identities";
    case SuiteKind::Repro: return "repro";
    case SuiteKind::Conformity: return "conformity";
    case SuiteKind::Count: return "count";
    case SuiteKind::All: return "all";
  }
  return "?";
}

SuiteKind parse_suite_kind(std::string_view name) {
  for (SuiteKind k : {SuiteKind::Identities, SuiteKind::Repro, SuiteKind::Conformity, SuiteKind::Count, SuiteKind::All})
    if (to_string(k) == name) return k;
  throw Error(ErrorKind::Contract, "unknown suite \"" + std::string(name) + "\"");
}

SuiteRecord make_record(std::string check, int element, int facet, double residual, double tolerance, bool lower_bound,
                        std::string detail) {
  const bool pass = lower_bound ? residual > tolerance : residual <= tolerance;
  return {std::move(check), element, facet, residual, tolerance, lower_bound, pass, std::move(detail)};
}

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const SuiteRecord& r) { return !r.pass; }));
}

namespace {

// Stream ids keep element, facet and span draws on independent variates.
constexpr std::uint64_t kElementStream = 0;
constexpr std::uint64_t kFacetStream = 1u << 20;
constexpr std::uint64_t kBoundaryStream = 2u << 20;
constexpr std::uint64_t kSpanStream = 3u << 20;

std::string spec_tag(const BasisSpec& s) {
  std::string t = (s.family == Family::P ? "P" : "Pminus") + std::to_string(s.k);
  if (s.rot) t += "-rot";
  return t;
}

bool is_simplex(const Polytope& p) { return p.num_vertices() == p.dimension() + 1; }

std::vector<Vec> element_samples(const MeshComplex& mesh, int e, const SuiteOptions& o) {
  return sample_interior(mesh.element(e).shape, static_cast<std::size_t>(std::max(o.samples, 0)),
                         SampleStream::derive(o.seed, kElementStream + static_cast<std::uint64_t>(e)));
}

double simplex_recovery(const Polytope& p, const std::vector<Vec>& samples) {
  double worst = 0.0;
  for (const Vec& x : samples) {
    const CoordinateSet cs = wachspress(p, x);
    for (const auto& spec : all_specs(p.dimension()))
      for (const auto& d : enumerate_basis(p, spec))
        worst = std::max(worst, field_distance(evaluate(d, cs), whitney_simplex_reference(d, p, x)));
  }
  return worst;
}

}  // namespace

std::vector<SuiteRecord> identity_checks(const MeshComplex& mesh, const SuiteOptions& o) {
  std::vector<SuiteRecord> out;
  constexpr double kStep = 1e-4;
  for (int e = 0; e < static_cast<int>(mesh.elements().size()); ++e) {
    const Polytope& p = mesh.element(e).shape;
    const auto samples = element_samples(mesh, e, o);

    IdentityResiduals worst;
    double negative = 0.0, oracle = 0.0;
    int oracle_points = 0;
    for (const Vec& x : samples) {
      const CoordinateSet cs = wachspress(p, x);
      const IdentityResiduals r = coordinate_identity_residuals(cs, p);
      worst.partition_of_unity = std::max(worst.partition_of_unity, r.partition_of_unity);
      worst.linear_precision = std::max(worst.linear_precision, r.linear_precision);
      worst.gradient_sum = std::max(worst.gradient_sum, r.gradient_sum);
      worst.gradient_precision = std::max(worst.gradient_precision, r.gradient_precision);
      for (double l : cs.values) negative = std::max(negative, -l);

      if (p.boundary_distance(x) > 2.0 * kStep) {
        const auto fd = gradient_fd_oracle(p, x, kStep);
        for (std::size_t i = 0; i < fd.size(); ++i) oracle = std::max(oracle, (fd[i] - cs.gradients[i]).cwiseAbs().maxCoeff());
        ++oracle_points;
      }
    }

    const double diam = p.diameter();
    out.push_back(make_record("coords/partition-of-unity", e, -1, worst.partition_of_unity, 1e-10));
    out.push_back(make_record("coords/linear-precision", e, -1, worst.linear_precision, 1e-10 * diam));
    out.push_back(make_record("coords/gradient-sum", e, -1, worst.gradient_sum, o.tol / diam));
    out.push_back(make_record("coords/gradient-precision", e, -1, worst.gradient_precision, o.tol));
    out.push_back(make_record("coords/non-negative", e, -1, negative, 1e-12));
    out.push_back(make_record("coords/gradient-oracle", e, -1, oracle, o.tol, false,
                              "points=" + std::to_string(oracle_points)));
    if (is_simplex(p)) out.push_back(make_record("basis/simplex-recovery", e, -1, simplex_recovery(p, samples), 1e-12));
  }
  return out;
}

namespace {

/// Max difference between a Whitney combination and its P-family expansion.
double trimmed_in_full(const Polytope& p, const CoefficientVector& whitney, const std::vector<Vec>& samples) {
  const CoefficientVector full = expand_to_p(whitney, p.num_vertices(), p.dimension());
  double worst = 0.0;
  for (const Vec& x : samples) {
    const CoordinateSet cs = wachspress(p, x);
    worst = std::max(worst, field_distance(combine(whitney, cs), combine(full, cs)));
  }
  return worst;
}

struct SpanCase {
  std::string id;
  BasisSpec spec;
  FieldFunction target;
  double tolerance;
  bool lower_bound;
};

std::vector<SpanCase> span_cases(int n, double tol) {
  const FieldFunction one = [](const Vec&) { return FieldSample::scalar(1.0); };
  const FieldFunction sum = [](const Vec& x) { return FieldSample::scalar(x.sum()); };
  const FieldFunction quadratic = [](const Vec& x) { return FieldSample::scalar(x[0] * x[0]); };
  std::vector<SpanCase> out;
  if (n == 2) {
    out.push_back({"span/top-whitney-constant", {Family::Pminus, 2, false}, one, tol, false});
  } else {
    out.push_back({"span/top-P-constant", {Family::P, 3, false}, one, tol, false});
    out.push_back({"span/top-P-linear", {Family::P, 3, false}, sum, tol, false});
    out.push_back({"span/top-whitney-constant", {Family::Pminus, 3, false}, one, tol, false});
  }
  out.push_back({"span/quadratic-rejected", {Family::P, 0, false}, quadratic, 1e-3, true});
  return out;
}

std::vector<SuiteRecord> run_case(const Polytope& p, int e, const ReproductionCase& c, const std::vector<Vec>& samples,
                                  const SuiteOptions& o) {
  std::vector<SuiteRecord> out;
  const double tol = std::min(c.tolerance, o.tol);
  try {
    const ResidualReport rep = verify_reproduction(p, c.spec, c.target, samples);
    out.push_back(make_record("repro/" + c.id, e, -1, rep.max_residual, tol, false,
                              "worst_sample=" + std::to_string(rep.worst_sample)));
    if (c.spec.family == Family::Pminus && c.spec.k > 0) {
      double worst = 0.0;
      for (const auto& cv : rep.coefficients) worst = std::max(worst, trimmed_in_full(p, cv, samples));
      out.push_back(make_record("repro/trimmed-in-full/" + c.id, e, -1, worst, 1e-10));
    }
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::UnsupportedTarget) throw;
    // no explicit coefficients: certify membership with the span oracle
    const BasisSpec& s = c.spec;
    const int cols = static_cast<int>(enumerate_basis(p, s).size());
    const int comps = scalar_proxy(p.dimension(), s.k) ? 1 : p.dimension();
    const auto count = static_cast<std::size_t>(std::max(o.samples, 2 * cols / comps + 10));
    const auto pts = sample_interior(p, count, SampleStream::derive(o.seed, kElementStream + static_cast<std::uint64_t>(e)));
    const SpanResult r = span_contains(p, s, c.target, pts);
    out.push_back(make_record("span/" + c.id, e, -1, r.residual, o.tol, false, "rank=" + std::to_string(r.rank)));
  }
  return out;
}

}  // namespace

std::vector<SuiteRecord> repro_checks(const MeshComplex& mesh, const SuiteOptions& o,
                                      const std::optional<ReproductionCase>& only) {
  std::vector<SuiteRecord> out;
  const int n = mesh.dimension();
  for (int e = 0; e < static_cast<int>(mesh.elements().size()); ++e) {
    const Polytope& p = mesh.element(e).shape;
    const auto samples = element_samples(mesh, e, o);

    std::vector<ReproductionCase> cases;
    if (only) {
      cases.push_back(*only);
    } else {
      cases = identity_cases(n);
      const auto lin = linear_cases(n, o.seed, o.span_draws);
      cases.insert(cases.end(), lin.begin(), lin.end());
    }
    for (const auto& c : cases) {
      auto recs = run_case(p, e, c, samples, o);
      out.insert(out.end(), recs.begin(), recs.end());
    }
    if (only) continue;

    for (const auto& c : span_cases(n, o.tol)) {
      const int cols = static_cast<int>(enumerate_basis(p, c.spec).size());
      const auto count = static_cast<std::size_t>(std::max(o.samples, 2 * cols + 10));
      const auto pts = sample_interior(p, count, SampleStream::derive(o.seed, kElementStream + static_cast<std::uint64_t>(e)));
      const SpanResult r = span_contains(p, c.spec, c.target, pts);
      out.push_back(make_record(c.id, e, -1, r.residual, c.tolerance, c.lower_bound, "rank=" + std::to_string(r.rank)));
    }
  }
  return out;
}

std::vector<SuiteRecord> conformity_checks(const MeshComplex& mesh, const SuiteOptions& o,
                                           const std::optional<BasisSpec>& only) {
  std::vector<SuiteRecord> out;
  const int n = mesh.dimension();
  const auto fs = static_cast<std::size_t>(std::max(o.facet_samples, 1));

  for (int fid : mesh.interior_facets()) {
    const Facet& facet = mesh.facet(fid);
    const auto samples = sample_facet(facet, fs, SampleStream::derive(o.seed, kFacetStream + static_cast<std::uint64_t>(fid)));

    for (const auto& spec : all_specs(n)) {
      if (spec.k == n) continue;
      if (only && spec != *only) continue;
      const std::string tag = spec_tag(spec);
      const TraceKind kind = trace_kind_for(n, spec);

      if (kind == TraceKind::Value) {
        const JumpReport hat = hat_value_jump(mesh, fid, samples);
        out.push_back(make_record("conformity/hat-values", -1, fid, hat.max_jump, 1e-10, false, hat.worst));
      } else {
        const JumpReport r =
            kind == TraceKind::Tangential ? tangential_jump(mesh, fid, spec, samples) : normal_jump(mesh, fid, spec, samples);
        out.push_back(make_record("conformity/" + to_string(kind) + "/" + tag, -1, fid, r.max_jump, o.tol, false,
                                  "worst=" + r.worst + " descriptors=" + std::to_string(r.entries.size())));
      }
      for (int d = 0; d < o.span_draws; ++d) {
        const std::uint64_t seed = SampleStream::derive(o.seed, kSpanStream + static_cast<std::uint64_t>(d));
        const JumpReport r = random_span_jump(mesh, fid, spec, seed, samples);
        out.push_back(make_record("conformity/span/" + tag + "#" + std::to_string(d), -1, fid, r.max_jump, o.tol));
      }
      if (spec.k == 1 && spec.family == Family::P && !spec.rot) {
        const JumpReport r = random_span_jump(mesh, fid, spec, o.seed, samples, true);
        out.push_back(make_record("conformity/span-mismatch/" + tag, -1, fid, r.max_jump, 1e-3, true));
      }
    }
  }

  if (only) return out;

  // Boundary vanishing on every facet of every element, reported by mesh facet id.
  for (const Facet& facet : mesh.facets()) {
    for (const FacetSide& side : facet.sides) {
      const Polytope& p = mesh.element(side.element).shape;
      std::vector<Vec> pts;
      for (int i : p.facet(side.local_facet)) pts.push_back(p.vertex(i));
      const auto seed = SampleStream::derive(SampleStream::derive(o.seed, kBoundaryStream + static_cast<std::uint64_t>(facet.id)),
                                             static_cast<std::uint64_t>(side.element));
      const auto samples = sample_convex_combinations(pts, fs, seed);
      const BoundaryReport r = boundary_vanishing_check(p, side.local_facet, samples);
      if (r.checked == 0) continue;  // every vertex lies on this facet
      out.push_back(make_record("boundary/value", side.element, facet.id, r.max_value, 1e-10));
      out.push_back(make_record("boundary/tangential-gradient", side.element, facet.id, r.max_tangential, o.tol));
      out.push_back(make_record("boundary/inward-gradient", side.element, facet.id, r.min_inward, 0.0, true));
    }
  }
  return out;
}

std::vector<SuiteRecord> count_checks(const MeshComplex& mesh) {
  std::vector<SuiteRecord> out;
  for (int e = 0; e < static_cast<int>(mesh.elements().size()); ++e) {
    const Polytope& p = mesh.element(e).shape;
    for (const CountRecord& c : count_all(p)) {
      const auto enumerated = static_cast<long>(enumerate_basis(p, {c.family, c.k, false}).size());
      std::ostringstream detail;
      detail << "constructed=" << c.constructed << " boundary=" << c.boundary << " polynomial=" << c.polynomial;
      if (c.note) detail << " note=" << *c.note;
      const std::string tag = c.k == 0 ? "k0" : spec_tag({c.family, c.k, false});
      out.push_back(make_record("count/" + tag, e, -1, static_cast<double>(std::labs(c.constructed - enumerated)), 0.0,
                                false, detail.str()));
    }
  }
  return out;
}

void sort_records(std::vector<SuiteRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const SuiteRecord& a, const SuiteRecord& b) {
    return std::tie(a.check, a.element, a.facet) < std::tie(b.check, b.element, b.facet);
  });
}

SuiteReport run_suite(const MeshComplex& mesh, const SuiteOptions& options, std::string mesh_name, std::string digest) {
  SuiteReport report;
  report.version = std::string(tool_version());
  report.mesh = std::move(mesh_name);
  report.digest = std::move(digest);
  report.options = options;

  auto take = [&report](std::vector<SuiteRecord> r) { report.records.insert(report.records.end(), r.begin(), r.end()); };
  const SuiteKind s = options.suite;
  if (s == SuiteKind::Identities || s == SuiteKind::All) take(identity_checks(mesh, options));
  if (s == SuiteKind::Repro || s == SuiteKind::All) take(repro_checks(mesh, options));
  if (s == SuiteKind::Conformity || s == SuiteKind::All) take(conformity_checks(mesh, options));
  if (s == SuiteKind::Count || s == SuiteKind::All) take(count_checks(mesh));
  sort_records(report.records);
  return report;
}

SuiteReport run_suite(const std::filesystem::path& mesh_path, const SuiteOptions& options) {
  std::ifstream in(mesh_path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + mesh_path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const MeshComplex mesh = build_complex(parse_mesh(text));
  return run_suite(mesh, options, mesh_path.filename().string(), sha256_hex(text));
}

std::string to_json(const SuiteReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["tool"] = "gbcforms";
  j["version"] = report.version;
  j["mesh"] = report.mesh;
  j["digest"] = report.digest;
  j["suite"] = std::string(to_string(report.options.suite));
  j["tol"] = report.options.tol;
  j["seed"] = report.options.seed;
  j["samples"] = report.options.samples;
  j["facet_samples"] = report.options.facet_samples;
  j["span_draws"] = report.options.span_draws;
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json x;
    x["check"] = r.check;
    x["element"] = r.element;
    x["facet"] = r.facet;
    x["residual"] = r.residual;
    x["tolerance"] = r.tolerance;
    x["bound"] = r.lower_bound ? "lower" : "upper";
    x["pass"] = r.pass;
    if (!r.detail.empty()) x["detail"] = r.detail;
    records.push_back(std::move(x));
  }
  j["records"] = std::move(records);
  j["summary"] = {{"records", report.records.size()}, {"failed", report.failures()}, {"pass", report.pass()}};
  return j.dump(2) + "\n";
}

std::string to_csv(const SuiteReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << "check,element,facet,residual,tolerance,bound,pass,detail\n";
  for (const auto& r : report.records) {
    std::string detail = r.detail;
    for (std::size_t a = 0; (a = detail.find('"', a)) != std::string::npos; a += 2) detail.insert(a, 1, '"');
    os << r.check << ',' << r.element << ',' << r.facet << ',' << r.residual << ',' << r.tolerance << ','
       << (r.lower_bound ? "lower" : "upper") << ',' << (r.pass ? "pass" : "fail") << ",\"" << detail << "\"\n";
  }
  return os.str();
}

}  // namespace gbc
