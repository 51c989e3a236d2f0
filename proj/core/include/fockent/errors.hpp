#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fockent {

/// Failure conditions raised by the library. Every throwing operation
/// documents which of these it can raise.
enum class errc {
  length_mismatch,
  fermion_occupancy_violation,
  mixed_particle_number,
  occupation_overflow,
  shape_mismatch,
  index_out_of_range,
  stats_mismatch,
  empty_state,
  empty_sector,
  not_density_matrix,
  wrong_particle_number,
  wrong_statistics,
  degeneracy_violation,
  syntax_error,
  arity_mismatch,
  too_large,
};

const char* to_string(errc code);

/// Exception carrying an errc and, for text-level errors, the byte offset
/// into the source string where the problem was detected.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(errc code, const std::string& message, std::size_t offset)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  errc code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  errc code_;
  std::optional<std::size_t> offset_;
};

}  // namespace fockent
