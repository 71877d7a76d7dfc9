#pragma once

#include <variant>

#include "betti/combinat.hpp"
#include "betti/result.hpp"

namespace betti {

struct PullBack {
  std::int64_t k, m, d, D, s;
};

struct Image {
  std::int64_t k, m, d, D, s, i;
};

struct FourierMukai {
  std::int64_t k, m, d, D, s1, s2, i;
};

struct Transversal {
  std::int64_t k, kp, d, s, i;
};

using MapScenario = std::variant<PullBack, Image, FourierMukai, Transversal>;

BoundResult pull_back_bound(const PullBack& sc);
BoundResult image_bound(const Image& sc);
BoundResult fourier_mukai_bound(const FourierMukai& sc);
BoundResult transversal_bound(const Transversal& sc);
BoundResult application_bound(const MapScenario& sc);

/// Ambient dimension of the trace-normalised symmetric matrices that carry
/// the Grassmannian of (k'+1)-planes in R^(k+1).
std::int64_t transversal_m(std::int64_t k);

}  // namespace betti
