#pragma once

#include <string>
#include <vector>

namespace seal {

using Row = std::vector<std::string>;
using Rows = std::vector<Row>;

// Renders a row as a parenthesized tuple of single-quoted values, e.g.
// ('User1', 'View Grades').
std::string render_row(const Row& row);

}  // namespace seal
