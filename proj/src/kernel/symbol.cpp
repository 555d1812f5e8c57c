#include "rbi/kernel/symbol.hpp"

#include "rbi/errors.hpp"

namespace rbi {
namespace {

struct SymbolName {
  std::string_view ascii;
  std::string_view alias;
};

constexpr std::array<SymbolName, kSymbolCount> kNames{{
    {"alpha", "α"},     {"beta", "β"},      {"gamma", "γ"},     {"delta", "δ"},
    {"rho1", "ρ1"},     {"rho2", "ρ2"},     {"r1", "r1"},       {"r2", "r2"},
    {"mu1", "μ1"},      {"mu2", "μ2"},      {"mu3", "μ3"},      {"g1", "g1"},
    {"g2", "g2"},       {"g3", "g3"},       {"a1", "a1"},       {"a2", "a2"},
    {"c1", "c1"},       {"c2", "c2"},       {"d", "d"},         {"e1", "e1"},
    {"e2", "e2"},       {"omegaX", "ωX"},   {"omegaY", "ωY"},   {"omegaZ", "ωZ"},
    {"x", "x"},         {"z", "z"},         {"lambda1", "λ1"},  {"lambda2", "λ2"},
    {"lambda3", "λ3"},  {"lambda4", "λ4"},  {"s", "s"},         {"t", "t"},
}};

}  // namespace

std::string_view Symbol::name() const { return kNames[index_].ascii; }

std::optional<Symbol> find_symbol(std::string_view name) {
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    if (kNames[k].ascii == name || kNames[k].alias == name) {
      return Symbol(static_cast<std::uint8_t>(k));
    }
  }
  return std::nullopt;
}

Symbol symbol(std::string_view name) {
  if (auto s = find_symbol(name)) return *s;
  throw UnknownSymbol("unknown symbol '" + std::string(name) + "'");
}

}  // namespace rbi
