#pragma once

// Laurent polynomials in q with unbounded integer coefficients.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "klr/error.hpp"

namespace klr {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
 public:
  using Terms = std::map<long long, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long c) {  // NOLINT: implicit constant
    if (c != 0) terms_[0] = c;
  }
  static LaurentPoly monomial(long long exp, BigInt coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
  }
  static LaurentPoly from_terms(const std::vector<std::pair<long long, BigInt>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coeff(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  long long min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  long long max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(long long exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scale(const BigInt& s) const {
    if (s == 0) return {};
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }
  /// Multiplication by q^k.
  LaurentPoly shift(long long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }
  /// q -> q^{-1}.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }
  BigInt eval_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }
  bool nonnegative() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  /// Exact division; throws DivisionInexact on a nonzero remainder.
  LaurentPoly divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::DivisionInexact, "division by zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const long long de = d.max_exp();
    const BigInt& dc = d.terms_.rbegin()->second;
    const long long span = d.max_exp() - d.min_exp();
    while (!rem.is_zero()) {
      if (rem.max_exp() - rem.min_exp() < span) {
        throw Error(ErrorKind::DivisionInexact, "nonzero remainder");
      }
      const long long e = rem.max_exp();
      const BigInt& c = rem.terms_.rbegin()->second;
      if (c % dc != 0) throw Error(ErrorKind::DivisionInexact, "coefficient not divisible");
      LaurentPoly t = monomial(e - de, c / dc);
      quot += t;
      rem -= t * d;
    }
    return quot;
  }

  /// Ascending exponents, e.g. "q^-2+4+6q^2+5q^4+2q^6".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      const long long e = it->first;
      BigInt c = it->second;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? "-" : "+";
      }
      if (e == 0) {
        out += c.str();
        continue;
      }
      if (c != 1) out += c.str();
      out += "q";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  bool operator==(const LaurentPoly&) const = default;

 private:
  Terms terms_;
};

/// [m]_d = q^{d(m-1)} + q^{d(m-3)} + ... + q^{d(1-m)}; [0] = 0; [-m] = -[m].
inline LaurentPoly quantum_int(long long m, long long d) {
  if (m == 0) return {};
  const bool neg = m < 0;
  if (neg) m = -m;
  LaurentPoly p;
  for (long long e = m - 1; e >= 1 - m; e -= 2) p.add_term(d * e, neg ? -1 : 1);
  return p;
}

inline LaurentPoly quantum_factorial(long long m, long long d) {
  if (m < 0) throw Error(ErrorKind::OutOfRange, "factorial of a negative integer");
  LaurentPoly p = 1;
  for (long long t = 1; t <= m; ++t) p *= quantum_int(t, d);
  return p;
}

inline LaurentPoly quantum_binomial(long long m, long long n, long long d) {
  if (n < 0 || n > m) throw Error(ErrorKind::OutOfRange, "binomial needs 0 <= n <= m");
  return quantum_factorial(m, d).divide_exact(quantum_factorial(n, d) * quantum_factorial(m - n, d));
}

/// 1 + q^{step} + q^{2 step} + ... + q^{(count-1) step}; zero when count <= 0.
inline LaurentPoly geometric_sum(long long count, long long step) {
  LaurentPoly p;
  for (long long a = 0; a < count; ++a) p.add_term(a * step, 1);
  return p;
}

}  // namespace klr
