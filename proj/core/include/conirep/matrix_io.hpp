#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "conirep/cone.hpp"

namespace conirep {

/// CSV matrix: one row per state, comma-separated reals. Lines starting with
/// '#' and blank lines are skipped. Throws InputError on ragged rows,
/// unparsable fields, or negative entries.
StateMatrix read_matrix_csv(std::istream& in);
StateMatrix read_matrix_file(const std::filesystem::path& path);

/// Shortest round-trip representation of every entry; `comment` (if any) is
/// written as a leading '#' line.
void write_matrix_csv(std::ostream& out, const StateMatrix& c, const std::string& comment = {});

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace conirep
