#pragma once

#include <iosfwd>
#include <string>

#include "burn/graph.hpp"

namespace burn {

// Text format: first content line "n m", then m lines "u v" with 0-indexed
// endpoints. Blank lines and '#' comments are ignored anywhere.
ExplicitGraph read_edge_list(std::istream& in);
ExplicitGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const ExplicitGraph& g);

}  // namespace burn
