#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmk {

enum class errc {
  not_double_occurrence,
  unknown_chord,
  limit_exceeded,
  index_out_of_range,
  not_symmetric,
  nonzero_diagonal,
  invalid_inversion_set,
  parity_violation,
  already_chosen,
  invalid_n,
  not_meander_matrix,
  reconstruction_inconsistent,
  isolated_chord,
  parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::not_double_occurrence:
      return "NotDoubleOccurrence";
    case errc::unknown_chord:
      return "UnknownChord";
    case errc::limit_exceeded:
      return "LimitExceeded";
    case errc::index_out_of_range:
      return "IndexOutOfRange";
    case errc::not_symmetric:
      return "NotSymmetric";
    case errc::nonzero_diagonal:
      return "NonzeroDiagonal";
    case errc::invalid_inversion_set:
      return "InvalidInversionSet";
    case errc::parity_violation:
      return "ParityViolation";
    case errc::already_chosen:
      return "AlreadyChosen";
    case errc::invalid_n:
      return "InvalidN";
    case errc::not_meander_matrix:
      return "NotMeanderMatrix";
    case errc::reconstruction_inconsistent:
      return "ReconstructionInconsistent";
    case errc::isolated_chord:
      return "IsolatedChord";
    case errc::parse_error:
      return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the errc kinds above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace gmk
