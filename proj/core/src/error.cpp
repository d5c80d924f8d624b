#include <gbc/error.hpp>

namespace gbc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Topology: return "topology";
    case ErrorKind::NonManifold: return "non-manifold";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Stencil: return "stencil";
    case ErrorKind::Contract: return "contract";
    case ErrorKind::UnsupportedTarget: return "unsupported-target";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace gbc
