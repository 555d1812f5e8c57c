#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rbi {

/// Number of commuting symbols polynomials can carry.
inline constexpr std::size_t kSymbolCount = 32;

/// Strong index into the fixed symbol table. The table is immutable and
/// its order is the variable order used by the deg-lex monomial ordering.
class Symbol {
 public:
  constexpr explicit Symbol(std::uint8_t index) : index_(index) {}
  constexpr std::uint8_t index() const noexcept { return index_; }
  std::string_view name() const;
  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  std::uint8_t index_;
};

/// Looks a symbol up by ASCII name ("rho1") or by its Greek alias ("ρ1").
std::optional<Symbol> find_symbol(std::string_view name);
/// Like find_symbol but throws UnknownSymbol.
Symbol symbol(std::string_view name);

namespace sym {
inline constexpr Symbol alpha{0}, beta{1}, gamma{2}, delta{3};
inline constexpr Symbol rho1{4}, rho2{5}, r1{6}, r2{7};
inline constexpr Symbol mu1{8}, mu2{9}, mu3{10};
inline constexpr Symbol g1{11}, g2{12}, g3{13};
inline constexpr Symbol a1{14}, a2{15}, c1{16}, c2{17}, d{18}, e1{19}, e2{20};
inline constexpr Symbol omega_x{21}, omega_y{22}, omega_z{23};
inline constexpr Symbol x{24}, z{25};
inline constexpr Symbol lambda1{26}, lambda2{27}, lambda3{28}, lambda4{29};
inline constexpr Symbol s{30}, t{31};
}  // namespace sym

}  // namespace rbi
