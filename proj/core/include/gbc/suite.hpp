#pragma once

#include <gbc/basis.hpp>
#include <gbc/mesh.hpp>
#include <gbc/reproduction.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gbc {

std::string_view tool_version();

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

enum class SuiteKind { Identities, Repro, Conformity, Count, All };

std::string_view to_string(SuiteKind kind);
/// Throws Error(Contract) on an unknown name.
SuiteKind parse_suite_kind(std::string_view name);

struct SuiteOptions {
  SuiteKind suite = SuiteKind::All;
  double tol = 1e-8;
  std::uint64_t seed = 42;
  /// Interior samples per element.
  int samples = 100;
  /// Samples per facet, the first being the facet centroid.
  int facet_samples = 20;
  /// Random span elements per facet and family.
  int span_draws = 5;
};

/// One measured quantity. Passing means residual <= tolerance, or
/// residual > tolerance for lower-bound checks (negative controls, inward
/// gradient signs).
struct SuiteRecord {
  std::string check;
  int element = -1;
  int facet = -1;
  double residual = 0.0;
  double tolerance = 0.0;
  bool lower_bound = false;
  bool pass = false;
  /// Free-form context, e.g. count columns or the worst descriptor.
  std::string detail;
};

SuiteRecord make_record(std::string check, int element, int facet, double residual, double tolerance,
                        bool lower_bound = false, std::string detail = {});

struct SuiteReport {
  std::string version;
  std::string mesh;    // file name (or corpus name) of the input
  std::string digest;  // SHA-256 of the input document
  SuiteOptions options;
  std::vector<SuiteRecord> records;

  bool pass() const;
  std::size_t failures() const;
};

/// Coordinate identities, gradient oracle and (on simplices) recovery of the
/// classical simplicial bases, per element.
std::vector<SuiteRecord> identity_checks(const MeshComplex& mesh, const SuiteOptions& options);

/// Matrix identities, linear-field reproduction, trimmed-in-full consistency
/// and span-oracle checks, per element. With `only` set, just that case.
std::vector<SuiteRecord> repro_checks(const MeshComplex& mesh, const SuiteOptions& options,
                                      const std::optional<ReproductionCase>& only = std::nullopt);

/// Trace jumps on interior facets (per descriptor and for random span
/// elements), hat-function single-valuedness, and boundary vanishing on every
/// element facet. With `only` set, just that family.
std::vector<SuiteRecord> conformity_checks(const MeshComplex& mesh, const SuiteOptions& options,
                                           const std::optional<BasisSpec>& only = std::nullopt);

/// Table counts per element, cross-checked against enumerate_basis.
std::vector<SuiteRecord> count_checks(const MeshComplex& mesh);

/// Sort records by (check, element, facet), the report order.
void sort_records(std::vector<SuiteRecord>& records);

SuiteReport run_suite(const MeshComplex& mesh, const SuiteOptions& options, std::string mesh_name,
                      std::string digest);

/// Load, digest, validate and run. Propagates Error(Io), Error(Parse) and
/// ValidationError.
SuiteReport run_suite(const std::filesystem::path& mesh_path, const SuiteOptions& options);

std::string to_json(const SuiteReport& report);
std::string to_csv(const SuiteReport& report);

}  // namespace gbc
