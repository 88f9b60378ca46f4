#pragma once

#include "mct/kernels.hpp"

#include <vector>

namespace mct::kernels::detail {

// Single-source Brandes accumulation; adds the dependency of `source` onto
// every edge in `acc`. Shared by both kernel flavours so they only differ in
// how sources are scheduled and reduced.
void accumulate_source(const EdgeAdjacency& adj, std::size_t source, std::vector<double>& acc,
                       std::vector<std::size_t>& order, std::vector<long long>& dist,
                       std::vector<double>& sigma, std::vector<double>& delta);

}  // namespace mct::kernels::detail
