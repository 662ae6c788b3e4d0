#include "lgh/couplings.hpp"

#include <stdexcept>

namespace lgh {

bool Couplings::any_c1() const {
  for (double v : c1)
    if (v != 0.0) return true;
  return false;
}

bool Couplings::any_c3() const {
  for (double v : c3)
    if (v != 0.0) return true;
  return false;
}

Couplings preset_couplings(ModelPreset preset, double c1, double c2,
                           double c3) {
  Couplings out;
  const int t = 3;  // temporal direction
  switch (preset) {
    case ModelPreset::IP:
      out.c1.fill(c1);
      out.c2.fill(c2);
      out.c3.fill(0.0);
      break;
    case ModelPreset::ItPtLs:
      out.c1.fill(0.0);
      out.c1[t] = c1;
      for (int p = 0; p < 6; ++p) {
        const bool temporal = is_temporal_plane(kPlanePairs[p]);
        out.c2[p] = temporal ? c2 : 0.0;
        out.c3[p] = temporal ? 0.0 : c3;
      }
      break;
    case ModelPreset::ItPLs:
      out.c1.fill(0.0);
      out.c1[t] = c1;
      out.c2.fill(c2);
      for (int p = 0; p < 6; ++p)
        out.c3[p] = is_temporal_plane(kPlanePairs[p]) ? 0.0 : c3;
      break;
    case ModelPreset::PL:
      out.c1.fill(0.0);  // the c1 argument is ignored for PL
      out.c2.fill(c2);
      out.c3.fill(c3);
      break;
  }
  return out;
}

ModelPreset model_preset_from_string(std::string_view name) {
  if (name == "IP") return ModelPreset::IP;
  if (name == "ItPtLs") return ModelPreset::ItPtLs;
  if (name == "ItPLs") return ModelPreset::ItPLs;
  if (name == "PL") return ModelPreset::PL;
  throw std::invalid_argument("unknown model preset '" + std::string(name) +
                              "' (expected IP, ItPtLs, ItPLs or PL)");
}

std::string to_string(ModelPreset preset) {
  switch (preset) {
    case ModelPreset::IP: return "IP";
    case ModelPreset::ItPtLs: return "ItPtLs";
    case ModelPreset::ItPLs: return "ItPLs";
    case ModelPreset::PL: return "PL";
  }
  return "?";
}

}  // namespace lgh
