#include "oodlsp/gcd_operator.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "oodlsp/preference.hpp"

namespace oodlsp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<std::string_view, kGcdLevelCount> kNames = {
    "C",  "C++", "C+",  "C+-", "CA",  "C-+", "C-",  "C--", "A",
    "D--", "D-", "D-+", "DA",  "D+-", "D+",  "D++", "D",
};

// Rows follow GcdSymbol order, columns arity 2..8. The A, C-- and C-+ rows at
// arities 2..5 are the published values; every other finite entry was
// root-found against the uniform-input andness estimator by
// tools/derive_exponents.cpp, which regenerates this include.
constexpr double kExponents[kGcdLevelCount][kMaxArity - kMinArity + 1] = {
#include "gcd_exponent_table.inc"
};

}  // namespace

std::string_view to_string(GcdSymbol s) noexcept { return kNames[static_cast<std::size_t>(level(s))]; }

std::optional<GcdSymbol> parse_gcd_symbol(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<GcdSymbol>(i);
  }
  return std::nullopt;
}

double operator_exponent(GcdSymbol symbol, int arity) {
  if (arity < kMinArity || arity > kMaxArity) {
    throw LookupError("no exponent for arity " + std::to_string(arity) + " (supported: " +
                      std::to_string(kMinArity) + ".." + std::to_string(kMaxArity) + ")");
  }
  if (symbol == GcdSymbol::C) return -kInf;
  if (symbol == GcdSymbol::D) return kInf;
  return kExponents[level(symbol)][arity - kMinArity];
}

double operator_exponent(std::string_view symbol, int arity) {
  const auto parsed = parse_gcd_symbol(symbol);
  if (!parsed) throw LookupError("unknown operator symbol '" + std::string(symbol) + "'");
  return operator_exponent(*parsed, arity);
}

}  // namespace oodlsp
