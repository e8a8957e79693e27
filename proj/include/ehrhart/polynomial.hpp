#pragma once

#include <string>
#include <vector>

#include "ehrhart/numeric.hpp"

namespace ehrhart {

// Dense polynomial with exact integer coefficients, index = degree.
// Normalized: no trailing zero coefficient unless the polynomial is 0.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return constant(Int(1)); }
  static IntPolynomial constant(const Int& c) { return IntPolynomial({c}); }
  // z^k
  static IntPolynomial monomial(size_t k, const Int& c = Int(1)) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = c;
    return IntPolynomial(std::move(v));
  }
  // 1 + z + ... + z^{m-1}
  static IntPolynomial all_ones(size_t m) {
    return IntPolynomial(std::vector<Int>(m, Int(1)));
  }

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Int coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return IntPolynomial(std::move(r));
  }
  IntPolynomial operator-(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(r));
  }
  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Int> r(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(r));
  }
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }

  // substitution z -> z^m
  IntPolynomial inflate(size_t m) const {
    if (is_zero()) return zero();
    std::vector<Int> r((coeffs_.size() - 1) * m + 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i * m] = coeffs_[i];
    return IntPolynomial(std::move(r));
  }

  // Exact division; throws InexactDivision if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw InexactDivision("division by zero polynomial");
    if (is_zero()) return zero();
    if (degree() < divisor.degree())
      throw InexactDivision("degree of dividend below divisor");
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Int(0));
    const Int& lead = divisor.coeffs_.back();
    for (size_t k = quot.size(); k-- > 0;) {
      Int& top = rem[k + divisor.coeffs_.size() - 1];
      if (top % lead != 0) throw InexactDivision("non-integral quotient coefficient");
      quot[k] = top / lead;
      if (quot[k] == 0) continue;
      for (size_t j = 0; j < divisor.coeffs_.size(); ++j)
        rem[k + j] -= quot[k] * divisor.coeffs_[j];
    }
    for (const Int& c : rem)
      if (c != 0) throw InexactDivision("nonzero remainder");
    return IntPolynomial(std::move(quot));
  }

  Int eval_at_one() const {
    Int s(0);
    for (const Int& c : coeffs_) s += c;
    return s;
  }

  bool nonnegative() const {
    for (const Int& c : coeffs_)
      if (c < 0) return false;
    return true;
  }

  // c_i = c_{window - i} for i = 0..window (coefficients outside are 0)
  bool palindromic(long window) const {
    if (window < 0) return is_zero();
    for (long i = 0; 2 * i <= window; ++i)
      if (coeff(i) != coeff(window - i)) return false;
    return degree() <= window;
  }

  // Ascending-degree sparse text form, e.g. "1 + z^2 + z^4".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      const Int& c = coeffs_[i];
      if (c == 0) continue;
      Int a = abs(c);
      if (out.empty())
        out += (c < 0) ? "-" : "";
      else
        out += (c < 0) ? " - " : " + ";
      if (i == 0)
        out += a.get_str();
      else {
        if (a != 1) out += a.get_str();
        out += "z";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Int> coeffs_;
};

// Polynomial with exact rational coefficients (quasipolynomial constituents).
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rat coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

  bool operator==(const RatPolynomial& o) const { return coeffs_ == o.coeffs_; }

  Rat eval(const Rat& t) const {
    Rat v(0);
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
    return v;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      const Rat& c = coeffs_[i];
      if (c == 0) continue;
      Rat a = abs(c);
      if (out.empty())
        out += (c < 0) ? "-" : "";
      else
        out += (c < 0) ? " - " : " + ";
      if (i == 0)
        out += ehrhart::to_string(a);
      else {
        if (a != 1) out += ehrhart::to_string(a) + " ";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  std::vector<Rat> coeffs_;
};

}  // namespace ehrhart
