#pragma once

#include <stdexcept>
#include <string>

namespace xw {

enum class errc {
  non_square,
  even_side,
  invalid_character,
  asymmetric_grid,
  edge_not_present,
  ambiguous_comparison,
  index_collision,
  no_such_cell,
  inconsistent_floor_counts,
  cell_collision,
  out_of_range,
  limit_exceeded,
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_square: return "NonSquare";
    case errc::even_side: return "EvenSide";
    case errc::invalid_character: return "InvalidCharacter";
    case errc::asymmetric_grid: return "AsymmetricGrid";
    case errc::edge_not_present: return "EdgeNotPresent";
    case errc::ambiguous_comparison: return "AmbiguousComparison";
    case errc::index_collision: return "IndexCollision";
    case errc::no_such_cell: return "NoSuchCell";
    case errc::inconsistent_floor_counts: return "InconsistentFloorCounts";
    case errc::cell_collision: return "CellCollision";
    case errc::out_of_range: return "OutOfRange";
    case errc::limit_exceeded: return "LimitExceeded";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace xw
