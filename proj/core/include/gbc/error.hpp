#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbc {

enum class ErrorKind {
  Domain,             // point outside the closed polytope, bad form degree, ...
  Degenerate,         // zero area / zero volume / zero-length facet
  Topology,           // vertex star not cyclically orderable, Euler check
  NonManifold,        // facet claimed by more than two elements
  Inconsistent,       // shared vertex ids but incompatible geometry
  Validation,         // element failed validate_polytope
  Stencil,            // finite-difference stencil leaves the polytope
  Contract,           // caller broke a documented precondition
  UnsupportedTarget,  // target field outside the family's guaranteed span
  Parse,              // malformed mesh document
  Io,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gbc
