#pragma once

// Initial data families for the spin flow, all sampled nodewise on the
// N-point lattice:
//   great_circle  S(theta) = (cos m theta, sin m theta, 0)
//   tilted        S = (sin a cos b, sin a sin b, cos a), a and b low-degree
//                 trigonometric polynomials (unit length by construction)
//   random_band   north pole plus a seeded band-limited perturbation,
//                 renormalized nodewise

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "halfwave/lattice.hpp"

namespace halfwave::data {

struct GreatCircle {
  int m = 1;
};

struct TiltedSmooth {
  double alpha0 = 1.1;
  std::vector<double> alpha_cos{0.7};
  std::vector<double> alpha_sin{0.0, 0.2};
  double beta0 = 0.3;
  std::vector<double> beta_cos{0.0, -0.4};
  std::vector<double> beta_sin{0.9};
};

struct RandomBand {
  std::uint64_t seed = 1;
  int kmax = 3;
  double amplitude = 0.5;
};

using InitialData = std::variant<GreatCircle, TiltedSmooth, RandomBand>;

lattice::Spins make_initial(const InitialData& d, int N);
std::string family_name(const InitialData& d);

}  // namespace halfwave::data
