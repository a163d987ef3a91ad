#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncpos::cli {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and usage text to `err`. Returns 0 on success, 1 when a check
/// fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Vertex k of the regular n-gon on the unit circle, vertex 1 at 90 degrees,
/// labels increasing clockwise. Components are rounded to 12 places.
std::pair<double, double> polygon_vertex(int k, int n);

}  // namespace ncpos::cli
