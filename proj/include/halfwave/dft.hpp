#pragma once

#include <complex>
#include <vector>

namespace halfwave {

using cvec = std::vector<std::complex<double>>;

// Unscaled discrete Fourier transforms of arbitrary (here: odd) length.
//   forward:  out[m] = sum_j in[j] exp(-2 pi i j m / N)
//   backward: out[j] = sum_m in[m] exp(+2 pi i j m / N)
// Plans are cached per length; execution is safe to call concurrently.
void dft_forward(const cvec& in, cvec& out);
void dft_backward(const cvec& in, cvec& out);

}  // namespace halfwave
