#pragma once

#include <complex>
#include <string>

namespace eitangle {

// Shortest representation that round-trips the double exactly (never more
// than 17 significant digits), locale-independent.
std::string format_double(double v);

// Complex literal of the form "re", "re+imi" or "re-imi".
std::string format_complex(std::complex<double> v);

// Parses the same complex literal forms accepted by the CLI.
std::complex<double> parse_complex(const std::string& text);

}  // namespace eitangle
