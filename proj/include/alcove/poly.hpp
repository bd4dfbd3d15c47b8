#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <string>

namespace alcove {

using Int = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in one variable u over arbitrary-precision
/// integers. Zero coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(int exp, Int coeff) {
    LaurentPoly p;
    p.set(exp, std::move(coeff));
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<int, Int>& coeffs() const { return c_; }

  Int coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
  }

  // Lowest / highest exponent with nonzero coefficient; only valid when
  // the polynomial is nonzero.
  int min_exp() const { return c_.begin()->first; }
  int degree() const { return c_.rbegin()->first; }

  void set(int exp, Int coeff) {
    if (coeff == 0)
      c_.erase(exp);
    else
      c_[exp] = std::move(coeff);
  }

  void add_term(int exp, const Int& coeff) {
    if (coeff == 0) return;
    Int& slot = c_[exp];
    slot += coeff;
    if (slot == 0) c_.erase(exp);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly scaled(const Int& k) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.add_term(e, c * k);
    return r;
  }

  /// Multiply by u^shift.
  LaurentPoly shifted(int shift) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.set(e + shift, c);
    return r;
  }

  /// The bar involution u -> u^{-1}.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.set(-e, c);
    return r;
  }

  /// Keep only terms with exponent <= max_exp.
  LaurentPoly truncated_above(int max_exp) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_)
      if (e <= max_exp) r.set(e, c);
    return r;
  }

  Int eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
  }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  /// Rendered as "c0 + c1*u + c2*u^2" in increasing exponent order.
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
      Int a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (e == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        os << "u";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

private:
  std::map<int, Int> c_;
};

}  // namespace alcove
