#pragma once

#include "osps/osps.hpp"

namespace osps::test {

inline const OrthoSPS& example() {
  static OrthoSPS value = bundle_to_osps(example_bundle());
  return value;
}

inline const OrthoSPS& triv2() {
  static OrthoSPS value = bundle_to_osps(triv2_bundle());
  return value;
}

inline const OrthoSPS& diamond() {
  static OrthoSPS value = bundle_to_osps(diamond_bundle());
  return value;
}

inline const OrthoSPS& chain3() {
  static OrthoSPS value = bundle_to_osps(chain3_bundle());
  return value;
}

inline Mask state_set(const StatePropertySystem& sps, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= bit(sps.state(n));
  return m;
}

inline Mask prop_set(const CompleteLattice& lat, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= bit(lat.index(n));
  return m;
}

}  // namespace osps::test
