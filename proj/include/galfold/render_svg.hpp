#ifndef GALFOLD_RENDER_SVG_HPP
#define GALFOLD_RENDER_SVG_HPP

#include <string>
#include <vector>

#include "galfold/gallery.hpp"
#include "galfold/root_system.hpp"

namespace galfold {

/// Deterministic SVG of rank-2 galleries: fixed viewport from the exact
/// bounding box, walls drawn for levels within the box, each gallery a
/// polyline through panel/alcove barycenters with markers at folds.
/// Coordinates are emitted at fixed 4-decimal formatting; identical input
/// yields byte-identical output. Errc::RankUnsupported unless rank == 2.
std::string render_svg(const RootSystem& rs,
                       const std::vector<CombinatorialGallery>& galleries);

}  // namespace galfold

#endif  // GALFOLD_RENDER_SVG_HPP
