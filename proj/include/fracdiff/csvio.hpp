#ifndef FRACDIFF_CSVIO_HPP
#define FRACDIFF_CSVIO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "fracdiff/grid.hpp"

namespace fracdiff {

// Full-precision (17 significant digits) decimal formatting, locale-free.
std::string fmt_double(double x);

// GridFunction CSV: header "x,re,im", one row per node.  Lines starting with
// '#' are skipped on read.
void write_grid_function(std::ostream& os, const GridFunction& u);
GridFunction read_grid_function(std::istream& is);

void write_grid_function_file(const std::string& path, const GridFunction& u,
                              const std::string& provenance = "");
GridFunction read_grid_function_file(const std::string& path);

std::uint64_t fnv1a64(const std::string& s);

// "# <command>, <params-hash>, <seed>, <version>"
std::string provenance_line(const std::string& command, const std::string& params_json,
                            std::uint64_t seed);

extern const char* const kVersion;

} // namespace fracdiff

#endif
