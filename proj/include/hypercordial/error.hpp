#pragma once

#include <stdexcept>
#include <string>

namespace hypercordial {

enum class Errc {
  non_uniform,
  duplicate_vertex_in_edge,
  vertex_out_of_range,
  duplicate_edge,
  disconnected,
  has_cycle,
  empty_hypertree,
  length_mismatch,
  invalid_label,
  infeasible,
  invalid_size,
  invalid_config,
  theorem_not_applicable,
  internal_contradiction,
  parse_error,
};

const char* errc_name(Errc code);

// Library-wide exception: a machine-checkable code plus a human-readable
// message. `detail` carries extra diagnostic payload (e.g. a dumped
// extension plan when the labeler's step assertions fail).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string detail = {});

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace hypercordial
