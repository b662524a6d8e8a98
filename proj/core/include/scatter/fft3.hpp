#pragma once

#include <vector>

#include "scatter/vec3.hpp"

namespace scatter {

// Unnormalized 3-D c2c DFT of an n^3 cube, row-major.
// sign=+1 sums f_j e^{+2 pi i j.m / n}, sign=-1 the conjugate phase.
// Thread-safe (planning serialized internally).
void fft3(std::vector<cdouble>& data, int n, int sign);

}  // namespace scatter
