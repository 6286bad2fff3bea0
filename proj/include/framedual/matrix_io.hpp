#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "framedual/numerics.hpp"

namespace framedual {

// Matrix files are CSV with an optional first line "# field=real|complex|rational".
// Entries: decimal ("1.5", "-2e-3"), rational ("3/4") or complex ("1-2.5i", "i").
//
// Without a header the field is inferred: any complex entry gives Complex,
// otherwise any decimal entry gives Real, otherwise Rational. A real file that
// contains a p/q entry is promoted to Rational. With `exact` every decimal is
// read as the exact rational it spells.
Matrix parse_matrix(std::string_view text, bool exact = false);
Matrix read_matrix_file(const std::filesystem::path& path, bool exact = false);

/// Exact rationals are written as integers or p/q; floating values use the
/// shortest decimal that round-trips.
std::string format_double(double x);
std::string format_entry(const Scalar& s);
std::string format_matrix(const Matrix& a);

/// Writes through a temporary sibling file and renames it into place.
void write_text_atomic(const std::filesystem::path& path, std::string_view text);
void write_matrix_file(const std::filesystem::path& path, const Matrix& a);

/// Parses "1.25", "-3", "7/4", "1e-3" to an exact rational (decimal value, not binary).
Rational parse_rational(std::string_view token);

}  // namespace framedual
