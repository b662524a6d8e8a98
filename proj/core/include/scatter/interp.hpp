#pragma once

#include "scatter/grid.hpp"

namespace scatter {

// Trilinear sampling of a grid field; zero outside the cube.
double sample_trilinear(const RealField& f, const Vec3& p);

// Keys cubic-convolution sampling (a = -1/2); falls back to trilinear in the
// one-cell rim where the 4^3 stencil does not fit. Zero outside the cube.
double sample_tricubic(const RealField& f, const Vec3& p);

}  // namespace scatter
