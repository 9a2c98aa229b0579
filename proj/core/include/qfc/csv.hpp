// csv.hpp: locale-independent numeric text output.

#pragma once

#include <string>
#include <vector>

namespace qfc {

// 17 significant digits, C locale; non-finite values print as nan, inf, -inf.
std::string format_double(double value);

std::string csv_text(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

// Throws std::runtime_error if the file exists and `overwrite` is false, or
// on I/O failure.
void write_text_file(const std::string& path, const std::string& text, bool overwrite);

}  // namespace qfc
