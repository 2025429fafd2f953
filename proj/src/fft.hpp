#pragma once

#include <complex>
#include <vector>

namespace subord::detail {

enum class FftDirection { forward, backward };

/// Unnormalized in-place DFT; forward uses e^{-2 pi i jk/N}.
void dft(std::vector<std::complex<double>>& data, FftDirection direction);

}  // namespace subord::detail
