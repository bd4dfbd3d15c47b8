#pragma once

#include <map>
#include <mutex>

#include "alcove/affine.hpp"
#include "alcove/poly.hpp"
#include "alcove/rootsys.hpp"

namespace alcove {

/// Memoized Kazhdan-Lusztig polynomials P_{y,x} for (W_p, S_p), in the
/// variable u = t^2.  Every cached entry satisfies P_{x,x} = 1, P_{y,x} = 0
/// for y not <= x, constant term 1 and deg <= (l(x)-l(y)-1)/2 for y < x, and
/// nonnegative coefficients (asserted on insertion).
class KLTable {
public:
  KLTable(const RootSystem& rs, int p);

  LaurentPoly kl(const AffineElement& y, const AffineElement& x);

  /// mu(y, x): coefficient of u^{(l(x)-l(y)-1)/2} in P_{y,x}.
  Int mu(const AffineElement& y, const AffineElement& x);

  BruhatCache& bruhat() { return bruhat_; }
  const RootSystem& root_system() const { return rs_; }
  int p() const { return p_; }

private:
  LaurentPoly compute(const AffineElement& y, const AffineElement& x);

  const RootSystem& rs_;
  int p_;
  BruhatCache bruhat_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, LaurentPoly> memo_;
  std::recursive_mutex mu_;
};

/// Hecke-algebra R-polynomials by the standard descent recursion.  Kept as an
/// independent route for cross-checking the KL recursion.
LaurentPoly r_polynomial(const RootSystem& rs, const AffineElement& y,
                         const AffineElement& x, int p, BruhatCache& cache);

}  // namespace alcove
