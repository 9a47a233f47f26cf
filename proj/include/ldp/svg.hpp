#pragma once

#include "ldp/polygon.hpp"

#include <string>

namespace ldp {

enum class SvgKind { Polygon, Dual, Sails, DualChain };

// Static SVG picture of an LDP polygon: the polygon itself, its dual, the
// spanning fan with shaded sails and refined-fan rays, or the chain of dual
// edges with sign coloring. Coordinates are emitted by exact integer
// scaling; no floating point is involved.
std::string render_svg(const LatticePolygon& p, SvgKind kind);

}  // namespace ldp
