#include "mds/formulas.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mds {

namespace {

BigInt pow3(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

void require_order(bool ok, const char* name, int n) {
  if (!ok) throw std::domain_error(std::string(name) + " undefined at n = " + std::to_string(n));
}

std::string fraction(BigInt num, BigInt den) {
  const BigInt g = boost::multiprecision::gcd(abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace

BoundValue::BoundValue(BigInt coefficient, int exponent_thirds, BigInt offset_num, BigInt offset_den)
    : coefficient_(std::move(coefficient)),
      exponent_thirds_(exponent_thirds),
      offset_num_(std::move(offset_num)),
      offset_den_(std::move(offset_den)) {
  if (coefficient_ < 0 || exponent_thirds_ < 0 || offset_den_ <= 0)
    throw std::invalid_argument("BoundValue needs coefficient >= 0, exponent >= 0, denominator > 0");
}

std::optional<BigInt> BoundValue::exact_integer() const {
  if (offset_num_ % offset_den_ != 0) return std::nullopt;
  const BigInt offset = offset_num_ / offset_den_;
  if (coefficient_ == 0) return offset;
  if (exponent_thirds_ % 3 != 0) return std::nullopt;
  return coefficient_ * pow3(exponent_thirds_ / 3) + offset;
}

std::string BoundValue::str() const {
  if (auto v = exact_integer()) return v->str();
  std::string out;
  if (coefficient_ != 0) {
    if (coefficient_ != 1) out += coefficient_.str() + "*";
    out += "3^(" + fraction(exponent_thirds_, 3) + ")";
  }
  if (offset_num_ != 0) {
    if (!out.empty() && offset_num_ > 0) out += "+";
    out += fraction(offset_num_, offset_den_);
  }
  return out.empty() ? "0" : out;
}

double BoundValue::approx() const {
  return coefficient_.convert_to<double>() * std::pow(3.0, exponent_thirds_ / 3.0) +
         offset_num_.convert_to<double>() / offset_den_.convert_to<double>();
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "LESS";
    case Comparison::Equal: return "EQUAL";
    case Comparison::Greater: return "GREATER";
  }
  return "?";
}

Comparison compare(const BoundValue& bound, const BigInt& phi) {
  // bound ⋛ phi  ⇔  den·a·3^(m/3) ⋛ den·phi − num =: rhs, where the left side is >= 0.
  const BigInt rhs = bound.offset_den() * phi - bound.offset_num();
  const bool has_power = bound.coefficient() != 0;
  if (rhs < 0) return Comparison::Greater;
  if (rhs == 0) return has_power ? Comparison::Greater : Comparison::Equal;
  if (!has_power) return Comparison::Less;
  const BigInt lhs_scaled = bound.offset_den() * bound.coefficient();
  const BigInt lhs_cubed = lhs_scaled * lhs_scaled * lhs_scaled * pow3(bound.exponent_thirds());
  const BigInt rhs_cubed = rhs * rhs * rhs;
  if (lhs_cubed < rhs_cubed) return Comparison::Less;
  if (lhs_cubed > rhs_cubed) return Comparison::Greater;
  return Comparison::Equal;
}

BigInt to_bigint(Count value) {
  BigInt hi = static_cast<std::uint64_t>(value >> 64);
  BigInt lo = static_cast<std::uint64_t>(value);
  return (hi << 64) | lo;
}

Comparison compare(const BoundValue& bound, Count phi) { return compare(bound, to_bigint(phi)); }

BoundValue t_of(int n) {
  require_order(n >= 1, "t(n)", n);
  return BoundValue(1, n - 1, n - 1, 3);
}

BoundValue f1_of(int n) {
  require_order(n >= 3, "f1(n)", n);
  if (n % 3 == 0) return BoundValue(1, n);
  if (n % 3 == 1) return BoundValue(4, n - 4);
  if (n == 5) return BoundValue::integer(5);
  return BoundValue(16, n - 8);
}

BoundValue f2_of(int n) {
  require_order(n >= 4, "f2(n)", n);
  switch (n) {
    case 4: return BoundValue::integer(3);
    case 5: return BoundValue::integer(4);
    case 6: return BoundValue::integer(6);
    case 9: return BoundValue::integer(20);
    default: break;
  }
  if (n % 3 == 1) return BoundValue(11, n - 7);
  if (n % 3 == 2) return BoundValue(15, n - 8);
  return BoundValue(64, n - 12);
}

BoundValue conjecture_of(int n) {
  require_order(n >= 7, "conjecture(n)", n);
  if (n % 3 == 1) return t_of(n);
  if (n % 3 == 2) return BoundValue(4, n - 5, n - 5);
  return BoundValue(16, n - 9, 3 * n - 25);
}

namespace {

void check_claim_domain(double p, int k) {
  constexpr double eps = 1e-12;
  if (k < 1) throw std::domain_error("claim1: k must be a positive integer");
  if (p < 1.0 - eps) throw std::domain_error("claim1: p must be at least 1");
  if (k == 1 && p < 5.0 / 3.0 - eps) throw std::domain_error("claim1: p must be at least 5/3 when k = 1");
}

}  // namespace

double claim1_h(double p, int k) {
  check_claim_domain(p, k);
  const double c = 4.0 / 3.0;
  const double target = std::pow(3.0, p + k + c) + p + k + c;
  const double split = (std::pow(3.0, p + c) + p + c) + 3.0 * (std::pow(3.0, k) - 1.0) * (std::pow(3.0, p) + p) +
                       k * std::pow(3.0, p);
  return target - split;
}

double claim1_g(double p, int k) {
  check_claim_domain(p, k);
  return (std::cbrt(3.0) - 1.0 - p / std::pow(3.0, p)) - k / (std::pow(3.0, k + 1) - 3.0);
}

}  // namespace mds
