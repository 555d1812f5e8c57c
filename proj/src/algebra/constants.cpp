#include "rbi/algebra/constants.hpp"

namespace rbi {

RacahConstants RacahConstants::symbolic() {
  return {Poly::var(sym::a1), Poly::var(sym::a2), Poly::var(sym::c1), Poly::var(sym::c2),
          Poly::var(sym::d),  Poly::var(sym::e1), Poly::var(sym::e2)};
}

std::vector<std::pair<std::string, Poly>> RacahConstants::named() const {
  return {{"a1", a1}, {"a2", a2}, {"c1", c1}, {"c2", c2}, {"d", d}, {"e1", e1}, {"e2", e2}};
}

BiConstants BiConstants::symbolic() {
  return {Poly::var(sym::omega_x), Poly::var(sym::omega_y), Poly::var(sym::omega_z)};
}

std::vector<std::pair<std::string, Poly>> BiConstants::named() const {
  return {{"omega_x", omega_x}, {"omega_y", omega_y}, {"omega_z", omega_z}};
}

}  // namespace rbi
