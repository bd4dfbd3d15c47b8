#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "alcove/rootsys.hpp"

namespace alcove {

/// Element of the affine Weyl group W_p = W \ltimes pZPhi, stored in the
/// rho-shifted picture: the element acts on v = u + rho by v -> M v + tau,
/// where M is the finite part and tau lies in p ZPhi (fundamental
/// coordinates).  The canonical form (M, tau) is unique.
struct AffineElement {
  WeylElement w;
  std::vector<int> tau;

  bool operator==(const AffineElement& o) const {
    return w == o.w && tau == o.tau;
  }
  bool operator!=(const AffineElement& o) const { return !(*this == o); }
  bool operator<(const AffineElement& o) const {
    if (w < o.w) return true;
    if (o.w < w) return false;
    return tau < o.tau;
  }

  std::vector<int> key() const;  // flattened form for map keys
};

AffineElement aff_identity(const RootSystem& rs);
AffineElement aff_mul(const AffineElement& a, const AffineElement& b);  // a o b
AffineElement aff_inverse(const RootSystem& rs, const AffineElement& a);

/// The affine reflection s_{alpha, np} (shifted picture: v -> v - (<v,a^vee> - np) alpha).
AffineElement aff_reflection(const RootSystem& rs, int root_index, long long n,
                             int p);

/// Generator tokens: 0..rank-1 are the simple reflections s_{alpha_i};
/// token rank is s_{alpha_0, -p} (reflection for the highest short root).
AffineElement aff_generator(const RootSystem& rs, int token, int p);
int num_generators(const RootSystem& rs);

/// Translation part of the canonical (finite part, translation) form, in
/// simple-root coordinates: the element acts on u by u -> w(u) + p*nu.
std::vector<int> translation_root_coords(const RootSystem& rs,
                                         const AffineElement& a, int p);

/// Dot action w.u = w(u + rho) - rho.
Weight dot_apply(const RootSystem& rs, const AffineElement& x,
                 const Weight& lambda);

/// Linear reflection s_{alpha,np}(u) = u - (<u,alpha^vee> - np) alpha.
Weight reflect(const RootSystem& rs, int root_index, long long n, int p,
               const Weight& u);

/// Alcove described by its wall indices: for all interior points u,
/// n_alpha * p < <u + rho, alpha^vee> < (n_alpha + 1) * p, one entry per
/// positive root in the root system's enumeration order.
struct Alcove {
  std::vector<long long> n;

  bool operator==(const Alcove& o) const { return n == o.n; }
  bool operator!=(const Alcove& o) const { return n != o.n; }
  bool operator<(const Alcove& o) const { return n < o.n; }
};

Alcove alcove_cminus(const RootSystem& rs);
Alcove alcove_cplus(const RootSystem& rs);

/// Alcove of a regular weight; nullopt when the weight is singular.
std::optional<Alcove> alcove_of(const RootSystem& rs, const Weight& lambda,
                                int p);

/// Image alcove under the affine reflection s_{alpha, mp}; purely
/// combinatorial index bookkeeping, no interior points needed.
Alcove reflect_alcove(const RootSystem& rs, const Alcove& c, int root_index,
                      long long m);

/// Adjacency: wall-index vectors differ in exactly one root, by one.
/// Returns the index of that root, or nullopt.
std::optional<int> adjacency_root(const Alcove& c, const Alcove& d);

/// Number of hyperplanes separating the alcove from C^-.
long long gallery_distance_to_cminus(const Alcove& c);

/// The unique x in W_p with x . C^- = c (dot action).  Throws
/// std::invalid_argument if p < h and std::domain_error if the wall-index
/// vector is not realizable.
AffineElement element_to_alcove_map(const RootSystem& rs, int p,
                                    const Alcove& c);

/// Alcove containing x . C^- (computed from an exact rational interior point).
Alcove alcove_image_of_cminus(const RootSystem& rs, const AffineElement& x,
                              int p);

/// Coxeter length with respect to S_p (base alcove C^-).
long long length(const RootSystem& rs, const AffineElement& x, int p);

/// A reduced word in generator tokens (see aff_generator); word order is
/// composition order, leftmost token applied last to points.
std::vector<int> reduced_word(const RootSystem& rs, const AffineElement& x,
                              int p);

/// Shared memo for Bruhat comparisons and lower interval enumeration.
/// Lookups may race; insertions are idempotent.
class BruhatCache {
public:
  bool leq(const RootSystem& rs, const AffineElement& y,
           const AffineElement& x, int p);
  /// All z <= x in Bruhat order.
  std::vector<AffineElement> lower_interval(const RootSystem& rs,
                                            const AffineElement& x, int p);

private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, bool> leq_;
  std::map<std::vector<int>, std::vector<AffineElement>> down_;
  std::mutex mu_;
};

bool bruhat_leq(const RootSystem& rs, const AffineElement& y,
                const AffineElement& x, int p, BruhatCache& cache);

bool is_regular(const RootSystem& rs, const Weight& lambda, int p);
bool in_jantzen_region(const RootSystem& rs, const Weight& lambda, int p);
bool is_restricted(const RootSystem& rs, const Weight& lambda, int p);

/// Label (generator token) of the common face of two adjacent alcoves;
/// nullopt when not adjacent.
std::optional<int> face_label(const RootSystem& rs, const Alcove& c,
                              const Alcove& d, int p);

/// The adjacent weight lambda-s across the s-labelled wall of lambda's alcove.
Weight adjacent_weight(const RootSystem& rs, const Weight& lambda, int token,
                       int p);

/// Base point of lambda's dot orbit: the unique representative in C^- cap X.
Weight orbit_base_point(const RootSystem& rs, const Weight& lambda, int p);

/// Strictly increasing chain 0 = xi_0 < ... < xi_m = lambda of adjacent
/// dominant regular weights (lambda must lie in W_p . 0 and be dominant).
std::vector<Weight> adjacent_path_from_zero(const RootSystem& rs,
                                            const Weight& lambda, int p);

struct AdjacentPair {
  Weight lower;
  Weight upper;  // upper = lower . s
  int token;
};

/// All pairs lambda < lambda-s with both members in Gamma cap W_p . 0, where
/// Gamma must be a finite ideal of dominant weights (validated).
std::vector<AdjacentPair> adjacent_pairs_in_ideal(
    const RootSystem& rs, const std::vector<Weight>& gamma, int p);

}  // namespace alcove
