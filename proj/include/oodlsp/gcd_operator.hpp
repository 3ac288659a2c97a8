#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace oodlsp {

/// The seventeen levels of generalized conjunction/disjunction, ordered from
/// pure conjunction to pure disjunction. Orness grows by 1/16 per level.
enum class GcdSymbol : int {
  C = 0,
  CPlusPlus,
  CPlus,
  CPlusMinus,
  CA,
  CMinusPlus,
  CMinus,
  CMinusMinus,
  A,
  DMinusMinus,
  DMinus,
  DMinusPlus,
  DA,
  DPlusMinus,
  DPlus,
  DPlusPlus,
  D,
};

inline constexpr int kGcdLevelCount = 17;
inline constexpr int kMinArity = 2;
inline constexpr int kMaxArity = 8;

inline constexpr std::array<GcdSymbol, kGcdLevelCount> kAllGcdSymbols = {
    GcdSymbol::C,           GcdSymbol::CPlusPlus,   GcdSymbol::CPlus,
    GcdSymbol::CPlusMinus,  GcdSymbol::CA,          GcdSymbol::CMinusPlus,
    GcdSymbol::CMinus,      GcdSymbol::CMinusMinus, GcdSymbol::A,
    GcdSymbol::DMinusMinus, GcdSymbol::DMinus,      GcdSymbol::DMinusPlus,
    GcdSymbol::DA,          GcdSymbol::DPlusMinus,  GcdSymbol::DPlus,
    GcdSymbol::DPlusPlus,   GcdSymbol::D,
};

[[nodiscard]] constexpr int level(GcdSymbol s) noexcept { return static_cast<int>(s); }

[[nodiscard]] constexpr double orness(GcdSymbol s) noexcept {
  return static_cast<double>(level(s)) / 16.0;
}

[[nodiscard]] constexpr double andness(GcdSymbol s) noexcept { return 1.0 - orness(s); }

/// Text form as used in model files: "C", "C++", "C-+", "A", "DA", ...
[[nodiscard]] std::string_view to_string(GcdSymbol s) noexcept;

[[nodiscard]] std::optional<GcdSymbol> parse_gcd_symbol(std::string_view text) noexcept;

/// Power-mean exponent realizing `symbol` for a block of `arity` inputs.
/// Returns -inf for C and +inf for D. Throws LookupError for arities outside
/// [kMinArity, kMaxArity].
[[nodiscard]] double operator_exponent(GcdSymbol symbol, int arity);

/// Same, with the symbol given in text form. Throws LookupError on unknown
/// symbols.
[[nodiscard]] double operator_exponent(std::string_view symbol, int arity);

}  // namespace oodlsp
