#include "hypercordial/error.hpp"

namespace hypercordial {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_uniform: return "non_uniform";
    case Errc::duplicate_vertex_in_edge: return "duplicate_vertex_in_edge";
    case Errc::vertex_out_of_range: return "vertex_out_of_range";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::disconnected: return "disconnected";
    case Errc::has_cycle: return "has_cycle";
    case Errc::empty_hypertree: return "empty_hypertree";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::invalid_label: return "invalid_label";
    case Errc::infeasible: return "infeasible";
    case Errc::invalid_size: return "invalid_size";
    case Errc::invalid_config: return "invalid_config";
    case Errc::theorem_not_applicable: return "theorem_not_applicable";
    case Errc::internal_contradiction: return "internal_contradiction";
    case Errc::parse_error: return "parse_error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message, std::string detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace hypercordial
