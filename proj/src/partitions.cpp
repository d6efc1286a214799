#include "fpl/partitions.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

namespace fpl {

PlanePartition PlanePartition::filled(int a, int b, int c, int h) {
  PlanePartition pp;
  pp.a = a;
  pp.b = b;
  pp.c = c;
  pp.rows.assign(a, std::vector<int>(b, h));
  pp.validate();
  return pp;
}

void PlanePartition::validate() const {
  if (a < 0 || b < 0 || c < 0 || static_cast<int>(rows.size()) != a)
    throw Error(ErrorKind::incompatible_box, "bad matrix shape");
  for (int i = 0; i < a; ++i) {
    if (static_cast<int>(rows[i].size()) != b)
      throw Error(ErrorKind::incompatible_box, "bad row length");
    for (int j = 0; j < b; ++j) {
      int h = rows[i][j];
      if (h < 0 || h > c)
        throw Error(ErrorKind::incompatible_box, "height out of range");
      if (i > 0 && rows[i - 1][j] < h)
        throw Error(ErrorKind::incompatible_box, "column not decreasing");
      if (j > 0 && rows[i][j - 1] < h)
        throw Error(ErrorKind::incompatible_box, "row not decreasing");
    }
  }
}

long long PlanePartition::boxes() const {
  long long s = 0;
  for (const auto& r : rows)
    for (int h : r) s += h;
  return s;
}

BigInt QPolynomial::at_one() const {
  BigInt s = 0;
  for (const BigInt& k : coeff) s += k;
  return s;
}

bool QPolynomial::palindromic() const {
  int d = degree();
  for (int k = 0; k <= d; ++k)
    if (coeff[k] != coeff[d - k]) return false;
  return true;
}

std::string QPolynomial::str() const {
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    if (coeff[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += coeff[k].str();
    } else {
      if (coeff[k] != 1) out += coeff[k].str() + "*";
      out += (k == 1) ? "q" : "q^" + std::to_string(k);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

BigInt macmahon(int a, int b, int c) {
  BigInt num = 1, den = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) {
        num *= i + j + k - 1;
        den *= i + j + k - 2;
      }
  if (num % den != 0)
    throw Error(ErrorKind::structure, "product form not integral");
  return num / den;
}

static BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int t = 1; t <= k; ++t) {
    r *= n - k + t;
    r /= t;  // exact: r is always a binomial prefix
  }
  return r;
}

BigInt macmahon_binomial(int a, int b, int c) {
  BigInt num = 1, den = 1;
  for (int j = 1; j <= b; ++j) {
    num *= binomial(a + b + c - j, a);
    den *= binomial(a + b - j, a);
  }
  if (den == 0 || num % den != 0)
    throw Error(ErrorKind::structure, "binomial form not integral");
  return num / den;
}

static BigInt hyperfactorial(int p) {
  // H(p) = (p-1)! (p-2)! ... 1!
  BigInt h = 1, f = 1;
  for (int i = 1; i < p; ++i) {
    f *= i;
    h *= f;
  }
  return h;
}

Rational macmahon_hyperfactorial_as_printed(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1)
    throw Error(ErrorKind::invalid_triple, "hyperfactorial form needs a,b,c >= 1");
  Rational r;
  r.num = hyperfactorial(a + b + c) * hyperfactorial(a) * hyperfactorial(b) *
          hyperfactorial(c);
  r.den = hyperfactorial(a + b) * hyperfactorial(b + c - 1) *
          hyperfactorial(c + a);
  BigInt g = boost::multiprecision::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

QPolynomial macdonald_q(int a, int b, int c) {
  // Net exponent multiset of the (1-q^e) factors.
  std::map<int, long long> net;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) {
        net[i + j + k - 1] += 1;
        net[i + j + k - 2] -= 1;
      }
  // Intermediate quotients need not be polynomials, so assemble numerator
  // and denominator fully, then long-divide once (exact: the ratio is known
  // to be a polynomial, and the denominator has constant term 1).
  auto mul = [](std::vector<BigInt>& p, int e) {
    std::vector<BigInt> r(p.size() + e, 0);
    for (size_t i = 0; i < p.size(); ++i) {
      r[i] += p[i];
      r[i + e] -= p[i];
    }
    p = std::move(r);
  };
  std::vector<BigInt> num{1}, den{1};
  for (const auto& [e, cnt] : net) {
    if (e == 0 && cnt != 0)
      throw Error(ErrorKind::structure, "vanishing factor in q-product");
    for (long long t = 0; t < cnt; ++t) mul(num, e);
    for (long long t = 0; t < -cnt; ++t) mul(den, e);
  }
  if (num.size() < den.size())
    throw Error(ErrorKind::structure, "q-product has negative degree");
  std::vector<BigInt> p(num.size() - den.size() + 1, 0);
  for (size_t i = 0; i < p.size(); ++i) {
    BigInt v = num[i];
    for (size_t j = 1; j < den.size() && j <= i; ++j) v -= den[j] * p[i - j];
    p[i] = v;  // den[0] == 1
  }
  // exactness: multiplying back must reproduce the numerator
  std::vector<BigInt> chk(num.size(), 0);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < den.size(); ++j) chk[i + j] += p[i] * den[j];
  if (chk != num)
    throw Error(ErrorKind::structure, "q-product division not exact");
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  QPolynomial out;
  out.coeff = std::move(p);
  if (out.degree() != static_cast<long long>(a) * b * c)
    throw Error(ErrorKind::structure, "q-polynomial degree mismatch");
  return out;
}

static void enum_rec(int a, int b, int c, int i, int j,
                     std::vector<std::vector<int>>& h,
                     std::vector<PlanePartition>& out) {
  if (i == a) {
    PlanePartition pp;
    pp.a = a;
    pp.b = b;
    pp.c = c;
    pp.rows = h;
    out.push_back(std::move(pp));
    return;
  }
  int ni = j + 1 == b ? i + 1 : i;
  int nj = j + 1 == b ? 0 : j + 1;
  int cap = c;
  if (i > 0) cap = std::min(cap, h[i - 1][j]);
  if (j > 0) cap = std::min(cap, h[i][j - 1]);
  for (int v = 0; v <= cap; ++v) {
    h[i][j] = v;
    enum_rec(a, b, c, ni, nj, h, out);
  }
  h[i][j] = 0;
}

std::vector<PlanePartition> enumerate_pp(int a, int b, int c, long long bound) {
  if (a < 0 || b < 0 || c < 0)
    throw Error(ErrorKind::incompatible_box, "negative box side");
  if (static_cast<long long>(a) * b * c > bound)
    throw Error(ErrorKind::bound_exceeded, "box too large to enumerate");
  std::vector<PlanePartition> out;
  std::vector<std::vector<int>> h(a, std::vector<int>(b, 0));
  enum_rec(a, b, c, 0, 0, h, out);
  return out;
}

std::vector<PlanePartition> pp_flip_neighbors(const PlanePartition& pp) {
  pp.validate();
  std::vector<PlanePartition> out;
  for (int i = 0; i < pp.a; ++i)
    for (int j = 0; j < pp.b; ++j) {
      int h = pp.rows[i][j];
      bool can_add = h < pp.c && (i == 0 || pp.rows[i - 1][j] > h) &&
                     (j == 0 || pp.rows[i][j - 1] > h);
      bool can_del = h > 0 && (i == pp.a - 1 || pp.rows[i + 1][j] < h) &&
                     (j == pp.b - 1 || pp.rows[i][j + 1] < h);
      if (can_add) {
        PlanePartition q = pp;
        q.rows[i][j] += 1;
        out.push_back(std::move(q));
      }
      if (can_del) {
        PlanePartition q = pp;
        q.rows[i][j] -= 1;
        out.push_back(std::move(q));
      }
    }
  return out;
}

PlanePartition complement(const PlanePartition& pp) {
  pp.validate();
  PlanePartition q;
  q.a = pp.a;
  q.b = pp.b;
  q.c = pp.c;
  q.rows.assign(pp.a, std::vector<int>(pp.b, 0));
  for (int i = 0; i < pp.a; ++i)
    for (int j = 0; j < pp.b; ++j)
      q.rows[i][j] = pp.c - pp.rows[pp.a - 1 - i][pp.b - 1 - j];
  return q;
}

}  // namespace fpl
