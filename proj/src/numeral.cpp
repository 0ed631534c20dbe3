#include "holcheck/numeral.hpp"

#include <algorithm>

namespace holcheck {

namespace {

constexpr NatValue kMax = ~NatValue{0};

TermPtr zero_const() {
  static const TermPtr c = Term::constant(nat::kZero, nat_type());
  return c;
}

TermPtr one_const() {
  static const TermPtr c = Term::constant(nat::kOne, nat_type());
  return c;
}

TermPtr bit_const(bool odd) {
  static const TermPtr b0 = Term::constant(nat::kBit0, fun_type(nat_type(), nat_type()));
  static const TermPtr b1 = Term::constant(nat::kBit1, fun_type(nat_type(), nat_type()));
  return odd ? b1 : b0;
}

// Canonical positive numeral (n >= 1).
TermPtr mk_positive(NatValue n) {
  if (n == 1) return one_const();
  bool odd = (n & 1) != 0;
  return Term::app(bit_const(odd), mk_positive(n >> 1));
}

// Value of a canonical positive numeral subtree.
std::optional<NatValue> positive_value(const TermPtr& t) {
  if (t->is_const() && t->name() == nat::kOne) return NatValue{1};
  if (t->is_app() && t->fun()->is_const()) {
    bool b0 = t->fun()->name() == nat::kBit0;
    bool b1 = t->fun()->name() == nat::kBit1;
    if (!b0 && !b1) return std::nullopt;
    auto inner = positive_value(t->arg());
    if (!inner) return std::nullopt;
    if (*inner > (kMax - (b1 ? 1 : 0)) / 2) return std::nullopt;  // overflow
    return *inner * 2 + (b1 ? 1 : 0);
  }
  return std::nullopt;
}

}  // namespace

TermPtr mk_numeral(NatValue n) { return n == 0 ? zero_const() : mk_positive(n); }

std::optional<NatValue> numeral_value(const TermPtr& t) {
  if (t->is_const() && t->name() == nat::kZero) return NatValue{0};
  return positive_value(t);
}

bool is_numeral(const TermPtr& t) { return numeral_value(t).has_value(); }

std::optional<NatValue> nat_from_decimal(std::string_view s) {
  if (s.empty()) return std::nullopt;
  NatValue acc = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    NatValue d = static_cast<NatValue>(c - '0');
    if (acc > (kMax - d) / 10) return std::nullopt;
    acc = acc * 10 + d;
  }
  return acc;
}

std::string nat_to_decimal(NatValue n) {
  if (n == 0) return "0";
  std::string out;
  while (n > 0) {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(n % 10)));
    n /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<NatValue> nat_checked_add(NatValue a, NatValue b) {
  if (a > kMax - b) return std::nullopt;
  return a + b;
}

std::optional<NatValue> nat_checked_mul(NatValue a, NatValue b) {
  if (b != 0 && a > kMax / b) return std::nullopt;
  return a * b;
}

}  // namespace holcheck
