#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "holcheck/term.hpp"

namespace holcheck {

// Natural numbers are encoded as binary numerals over four constants:
//   0 -> zero, 1 -> one, even n -> bit0 (n/2), odd n > 1 -> bit1 ((n-1)/2).
// Decimal numerals in the surface syntax are sugar for these trees.
// Arithmetic on numeral values uses 128-bit naturals; operations that would
// overflow are rejected rather than wrapped.
using NatValue = unsigned __int128;

namespace nat {
inline constexpr const char* kZero = "zero";
inline constexpr const char* kOne = "one";
inline constexpr const char* kBit0 = "bit0";
inline constexpr const char* kBit1 = "bit1";
inline constexpr const char* kSuc = "Suc";
inline constexpr const char* kPlus = "plus";
inline constexpr const char* kTimes = "times";
}  // namespace nat

TermPtr mk_numeral(NatValue n);
// Value of a canonical numeral tree; nullopt for anything else (including
// non-canonical trees such as bit0 zero, which print structurally).
std::optional<NatValue> numeral_value(const TermPtr& t);
bool is_numeral(const TermPtr& t);

std::optional<NatValue> nat_from_decimal(std::string_view s);
std::string nat_to_decimal(NatValue n);

std::optional<NatValue> nat_checked_add(NatValue a, NatValue b);
std::optional<NatValue> nat_checked_mul(NatValue a, NatValue b);

}  // namespace holcheck
