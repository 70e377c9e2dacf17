#pragma once

#include <cstddef>
#include <string>

#include "burn/graph.hpp"
#include "burn/hamming.hpp"

namespace burn {

class GraphSpecError : public InputError {
public:
    GraphSpecError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

// One-token mini-language:
//   path:N | cycle:N | complete:N | hamming:N,Q | file:PATH
// Parse failures throw GraphSpecError with the offending position; graphs
// too large to build throw ResourceError.
ExplicitGraph parse_graph_spec(const std::string& spec,
                               std::int64_t materialize_cap = kDefaultMaterializeCap);

}  // namespace burn
