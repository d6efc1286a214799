#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "fpl/types.hpp"

namespace fpl {

using BigInt = boost::multiprecision::cpp_int;

// a x b matrix of heights in [0,c], weakly decreasing along rows and columns.
struct PlanePartition {
  int a = 0, b = 0, c = 0;
  std::vector<std::vector<int>> rows;  // rows.size()==a, rows[i].size()==b

  static PlanePartition filled(int a, int b, int c, int h);
  void validate() const;  // throws incompatible_box on any violation
  long long boxes() const;
  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
  friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;
};

// Exact integer polynomial in q with non-negative exponents.
struct QPolynomial {
  std::vector<BigInt> coeff;  // coeff[k] multiplies q^k; no trailing zeros

  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  BigInt at_one() const;
  bool palindromic() const;
  std::string str() const;  // "1 + q + 2*q^2" style
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
};

// Number of plane partitions in an a x b x c box, product form
// prod (i+j+k-1)/(i+j+k-2) with exact num/den accumulation; asserts agreement
// with the binomial-ratio form.
BigInt macmahon(int a, int b, int c);

// The binomial-ratio form alone: prod_{j=1..b} C(a+b+c-j,a) / C(a+b-j,a).
BigInt macmahon_binomial(int a, int b, int c);

struct Rational {
  BigInt num, den;  // reduced, den > 0
  friend bool operator==(const Rational&, const Rational&) = default;
};

// The hyperfactorial form exactly as printed,
// H(a+b+c)H(a)H(b)H(c) / (H(a+b)H(b+c-1)H(c+a)) with H(p)=(p-1)!(p-2)!...1!,
// evaluated literally for diagnostic comparison (it disagrees with the other
// two forms; e.g. it yields 120 at (2,2,2) where the product form gives 20).
// Never used for counting. Requires a,b,c >= 1 so every H argument is >= 0.
Rational macmahon_hyperfactorial_as_printed(int a, int b, int c);

// q-analog: prod (1-q^{i+j+k-1})/(1-q^{i+j+k-2}), exact division.
QPolynomial macdonald_q(int a, int b, int c);

// All plane partitions in the box, lexicographic by row-major height list.
// Throws bound_exceeded if a*b*c > bound.
std::vector<PlanePartition> enumerate_pp(int a, int b, int c,
                                         long long bound = 64);

// All partitions reachable by adding or removing one box.
std::vector<PlanePartition> pp_flip_neighbors(const PlanePartition& pp);

PlanePartition complement(const PlanePartition& pp);

}  // namespace fpl
