#pragma once

#include <array>
#include <string>
#include <string_view>

#include "lgh/lattice.hpp"

namespace lgh {

// Anisotropic coefficient table of the action
//
//   A = sum_{x,mu}    c1[mu] cos(phi_x + theta_{x,mu} - phi_{x+mu})
//     + sum_{x,mu<nu} c2[p]  cos(theta_{x,mu,nu})
//     + sum_{x,mu<nu} c3[p]  [ four L-shaped cosines, see action.hpp ]
//
// with p = plane_index(mu, nu). Entries may be zero or negative.
struct Couplings {
  std::array<double, 4> c1{};  // per direction
  std::array<double, 6> c2{};  // per plane pair, kPlanePairs order
  std::array<double, 6> c3{};  // per plane pair

  bool any_c1() const;
  bool any_c3() const;
};

// Named parameter families. The three scalars (c1, c2, c3) are spread over
// the anisotropic table as follows (t = temporal entry, s = spatial entry):
//
//   model    c1_t  c1_s  c2_t  c2_s  c3_t  c3_s
//   IP        c1    c1    c2    c2    0     0
//   ItPtLs    c1    0     c2    0     0     c3
//   ItPLs     c1    0     c2    c2    0     c3
//   PL        0     0     c2    c2    c3    c3
//
// PL ignores the c1 argument entirely.
enum class ModelPreset { IP, ItPtLs, ItPLs, PL };

Couplings preset_couplings(ModelPreset preset, double c1, double c2,
                           double c3);

ModelPreset model_preset_from_string(std::string_view name);
std::string to_string(ModelPreset preset);

}  // namespace lgh
