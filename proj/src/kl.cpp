#include "alcove/kl.hpp"

#include <stdexcept>

namespace alcove {

KLTable::KLTable(const RootSystem& rs, int p) : rs_(rs), p_(p) {
  if (p < rs.coxeter_number())
    throw std::invalid_argument("KL table needs p >= Coxeter number");
}

LaurentPoly KLTable::kl(const AffineElement& y, const AffineElement& x) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return compute(y, x);
}

Int KLTable::mu(const AffineElement& y, const AffineElement& x) {
  long long d = length(rs_, x, p_) - length(rs_, y, p_);
  if (d <= 0 || d % 2 == 0) return 0;
  return kl(y, x).coeff(static_cast<int>((d - 1) / 2));
}

LaurentPoly KLTable::compute(const AffineElement& y, const AffineElement& x) {
  if (y == x) return LaurentPoly::one();
  auto key = std::make_pair(y.key(), x.key());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (!bruhat_.leq(rs_, y, x, p_)) {
    memo_.emplace(std::move(key), LaurentPoly::zero());
    return LaurentPoly::zero();
  }

  long long lx = length(rs_, x, p_);
  long long ly = length(rs_, y, p_);

  // Right descent of x.
  int desc = -1;
  AffineElement v;  // v = x s
  for (int t = 0; t < num_generators(rs_); ++t) {
    AffineElement cand = aff_mul(x, aff_generator(rs_, t, p_));
    if (length(rs_, cand, p_) < lx) {
      desc = t;
      v = cand;
      break;
    }
  }
  if (desc < 0) throw std::logic_error("non-identity element without descent");

  AffineElement ys = aff_mul(y, aff_generator(rs_, desc, p_));
  bool ys_down = length(rs_, ys, p_) < ly;
  int c = ys_down ? 1 : 0;

  LaurentPoly result = compute(ys, v).shifted(1 - c) + compute(y, v).shifted(c);

  // mu-correction over z with zs < z, y <= z < x.
  for (const auto& z : bruhat_.lower_interval(rs_, v, p_)) {
    long long lz = length(rs_, z, p_);
    AffineElement zs = aff_mul(z, aff_generator(rs_, desc, p_));
    if (length(rs_, zs, p_) >= lz) continue;
    if (!bruhat_.leq(rs_, y, z, p_)) continue;
    long long d = lx - lz;
    if (d % 2 != 0) continue;  // mu(z, v) needs l(v) - l(z) odd
    Int m = compute(z, v).coeff(static_cast<int>((d - 2) / 2));
    if (m == 0) continue;
    result -= compute(y, z).scaled(m).shifted(static_cast<int>(d / 2));
  }

  // Invariants: polynomial in u, constant term 1, bounded degree,
  // nonnegative coefficients.
  if (result.is_zero() || result.min_exp() != 0 || result.coeff(0) != 1)
    throw std::logic_error("KL polynomial has bad constant term");
  if (2 * result.degree() > lx - ly - 1)
    throw std::logic_error("KL polynomial exceeds degree bound");
  for (const auto& [e, co] : result.coeffs())
    if (co < 0) throw std::logic_error("KL polynomial has negative coefficient");

  memo_.emplace(std::move(key), result);
  return result;
}

LaurentPoly r_polynomial(const RootSystem& rs, const AffineElement& y,
                         const AffineElement& x, int p, BruhatCache& cache) {
  if (y == x) return LaurentPoly::one();
  if (!cache.leq(rs, y, x, p)) return LaurentPoly::zero();

  long long lx = length(rs, x, p);
  long long ly = length(rs, y, p);
  int desc = -1;
  AffineElement xs;
  for (int t = 0; t < num_generators(rs); ++t) {
    AffineElement cand = aff_mul(x, aff_generator(rs, t, p));
    if (length(rs, cand, p) < lx) {
      desc = t;
      xs = cand;
      break;
    }
  }
  if (desc < 0) throw std::logic_error("non-identity element without descent");

  AffineElement ys = aff_mul(y, aff_generator(rs, desc, p));
  if (length(rs, ys, p) < ly) return r_polynomial(rs, ys, xs, p, cache);
  LaurentPoly u_minus_1;
  u_minus_1.add_term(1, 1);
  u_minus_1.add_term(0, -1);
  return u_minus_1 * r_polynomial(rs, y, xs, p, cache) +
         r_polynomial(rs, ys, xs, p, cache).shifted(1);
}

}  // namespace alcove
