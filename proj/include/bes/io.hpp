#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "bes/hypergraph.hpp"

namespace bes {

// Text format:
//   line 1        "r n m"
//   next m lines  r strictly increasing vertex ids separated by single spaces
// Lines starting with '#' are comments. Output uses canonical edge order and LF.

Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph_file(const std::string& path);

std::string serialize(const Hypergraph& F);
void write_hypergraph_file(const Hypergraph& F, const std::string& path);

}  // namespace bes
