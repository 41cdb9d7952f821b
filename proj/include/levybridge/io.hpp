#pragma once

#include <filesystem>
#include <string>

#include "levybridge/grid.hpp"

namespace levy::io {

/// CSV writers: '.' decimal, ',' separator, LF endings, 17 significant digits.
void write_real_field_csv(const std::filesystem::path& path, const RealField& field,
                          const std::string& value_header = "value");
void write_complex_field_csv(const std::filesystem::path& path, const ComplexField& field);

/// Two-column "x,value" reader; x must be uniform ascending with a
/// power-of-two row count (the periodic grid convention: x_max = last + dx).
RealField read_real_field_csv(const std::filesystem::path& path);

/// Columnar dump helpers for profile data (p,h), (x,k), ...
void write_profile_csv(const std::filesystem::path& path, const std::string& header,
                       std::span<const double> col1, std::span<const double> col2);

std::string format_double(double v);   ///< "%.17g"

}  // namespace levy::io
