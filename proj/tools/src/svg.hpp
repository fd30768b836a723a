#pragma once

#include <string>

#include "catlab/statistics.hpp"

namespace catlab::cli {

/// Density-scaled histogram bars with a KDE polyline on top.
std::string render_histogram_svg(const stats::histogram_result& hist,
                                 const stats::density_curve& density,
                                 const std::string& title);

}  // namespace catlab::cli
