#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rbi/kernel/poly.hpp"

namespace rbi {

/// Structure constants of the Racah algebra relations
///   [k1,k2] = k3
///   [k2,k3] = a2 k2^2 + a1 {k1,k2} + c1 k1 + d k2 + e1
///   [k3,k1] = a1 k1^2 + a2 {k1,k2} + c2 k2 + d k1 + e2
struct RacahConstants {
  Poly a1, a2, c1, c2, d, e1, e2;

  /// Every constant is its own symbol.
  static RacahConstants symbolic();
  std::vector<std::pair<std::string, Poly>> named() const;
  friend bool operator==(const RacahConstants&, const RacahConstants&) = default;
};

/// Structure constants of the Bannai-Ito relations
///   {X,Y} = Z + wZ,  {Y,Z} = X + wX,  {Z,X} = Y + wY
struct BiConstants {
  Poly omega_x, omega_y, omega_z;

  static BiConstants symbolic();
  std::vector<std::pair<std::string, Poly>> named() const;
  friend bool operator==(const BiConstants&, const BiConstants&) = default;
};

}  // namespace rbi
