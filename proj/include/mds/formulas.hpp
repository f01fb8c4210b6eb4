#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mds/count.hpp"

namespace mds {

using BigInt = boost::multiprecision::cpp_int;

/// coefficient · 3^(exponent_thirds / 3) + offset_num / offset_den, with
/// coefficient >= 0, exponent_thirds >= 0 and offset_den > 0. The power may
/// be irrational; comparisons against integers stay exact by cubing.
class BoundValue {
 public:
  BoundValue(BigInt coefficient, int exponent_thirds, BigInt offset_num = 0, BigInt offset_den = 1);
  static BoundValue integer(BigInt value) { return BoundValue(0, 0, std::move(value)); }

  const BigInt& coefficient() const { return coefficient_; }
  int exponent_thirds() const { return exponent_thirds_; }
  const BigInt& offset_num() const { return offset_num_; }
  const BigInt& offset_den() const { return offset_den_; }

  std::optional<BigInt> exact_integer() const;
  bool is_integer() const { return exact_integer().has_value(); }

  /// Decimal for integers, otherwise e.g. "3^(7/3)+7/3".
  std::string str() const;

  /// Reporting only; never used for verdicts.
  double approx() const;

 private:
  BigInt coefficient_;
  int exponent_thirds_;
  BigInt offset_num_;
  BigInt offset_den_;
};

enum class Comparison { Less, Equal, Greater };

const char* to_string(Comparison c);

/// Exact ordering of `bound` relative to `phi`.
Comparison compare(const BoundValue& bound, const BigInt& phi);
Comparison compare(const BoundValue& bound, Count phi);

BigInt to_bigint(Count value);

/// 3^((n-1)/3) + (n-1)/3, for n >= 1.
BoundValue t_of(int n);
/// Largest count over forests of order n >= 3.
BoundValue f1_of(int n);
/// Second-largest count over forests of order n >= 4.
BoundValue f2_of(int n);
/// Conjectured largest count over trees of order n >= 7.
BoundValue conjecture_of(int n);

// Auxiliary functions from the inductive step that splits off k cherries.
// Double precision, reporting-grade only. Domain: p >= 1, k >= 1, and
// p >= 5/3 when k = 1; violations throw std::domain_error.
double claim1_h(double p, int k);
double claim1_g(double p, int k);

/// Tolerance used when judging grid positivity of h and g.
inline constexpr double kPositivityMargin = 1e-9;

}  // namespace mds
