#include "alcove/affine.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace alcove {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_p_geq_h(const RootSystem& rs, int p) {
  if (p < rs.coxeter_number())
    throw std::invalid_argument("p < Coxeter number: alcove machinery needs p >= h");
}

// Exact rational point num/den in shifted coordinates (v = u + rho).
struct RatPoint {
  std::vector<long long> num;
  long long den = 1;
};

RatPoint cminus_interior(const RootSystem& rs, int p) {
  // v = -(p/h) rho lies in C^-: <v, alpha^vee> = -(p/h) ht(alpha^vee)
  // with 1 <= ht <= h-1.
  RatPoint v;
  v.num.assign(rs.rank(), -p);
  v.den = rs.coxeter_number();
  return v;
}

RatPoint apply_affine(const RootSystem& rs, const AffineElement& x,
                      const RatPoint& v) {
  RatPoint r;
  r.den = v.den;
  r.num.assign(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i) {
    long long s = 0;
    for (int j = 0; j < rs.rank(); ++j)
      s += static_cast<long long>(x.w.m[i][j]) * v.num[j];
    r.num[i] = s + v.den * x.tau[i];
  }
  return r;
}

long long pair_point(const RootSystem& rs, const RatPoint& v, int root_index) {
  const Root& r = rs.positive_roots()[root_index];
  long long s = 0;
  for (int k = 0; k < rs.rank(); ++k) s += v.num[k] * r.alpha_vee[k];
  return s;  // equals den * <v, alpha^vee>
}

Alcove alcove_of_point(const RootSystem& rs, const RatPoint& v, int p) {
  Alcove c;
  c.n.resize(rs.num_positive_roots());
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    long long num = pair_point(rs, v, a);
    long long step = static_cast<long long>(p) * v.den;
    if (num % step == 0)
      throw std::logic_error("interior point landed on a hyperplane");
    c.n[a] = floor_div(num, step);
  }
  return c;
}

long long separation(long long n) {
  if (n >= 0) return n + 1;
  if (n <= -2) return -1 - n;
  return 0;
}

}  // namespace

std::vector<int> AffineElement::key() const {
  std::vector<int> k;
  for (const auto& row : w.m) k.insert(k.end(), row.begin(), row.end());
  k.insert(k.end(), tau.begin(), tau.end());
  return k;
}

AffineElement aff_identity(const RootSystem& rs) {
  return AffineElement{WeylElement::identity(rs.rank()),
                       std::vector<int>(rs.rank(), 0)};
}

AffineElement aff_mul(const AffineElement& a, const AffineElement& b) {
  AffineElement r;
  r.w = a.w.then(b.w);
  r.tau = a.w.apply_vec(b.tau);
  for (size_t i = 0; i < r.tau.size(); ++i) r.tau[i] += a.tau[i];
  return r;
}

AffineElement aff_inverse(const RootSystem& rs, const AffineElement& a) {
  AffineElement r;
  r.w = a.w.inverse();
  r.tau = r.w.apply_vec(a.tau);
  for (int& x : r.tau) x = -x;
  return r;
}

AffineElement aff_reflection(const RootSystem& rs, int root_index, long long n,
                             int p) {
  AffineElement r;
  r.w = rs.root_reflection(root_index);
  const Root& rt = rs.positive_roots()[root_index];
  r.tau.resize(rs.rank());
  for (int k = 0; k < rs.rank(); ++k)
    r.tau[k] = static_cast<int>(n * p * rt.fund[k]);
  return r;
}

int num_generators(const RootSystem& rs) { return rs.rank() + 1; }

AffineElement aff_generator(const RootSystem& rs, int token, int p) {
  if (token >= 0 && token < rs.rank()) {
    // s_{alpha_token}: the simple roots come first in the enumeration.
    return aff_reflection(rs, token, 0, p);
  }
  if (token == rs.rank())
    return aff_reflection(rs, rs.highest_short_root(), -1, p);
  throw std::invalid_argument("bad generator token");
}

std::vector<int> translation_root_coords(const RootSystem& rs,
                                         const AffineElement& a, int p) {
  std::vector<int> scaled(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    if (a.tau[i] % p != 0) throw std::logic_error("translation not in pZPhi");
    scaled[i] = a.tau[i] / p;
  }
  auto c = rs.weight_to_root_coords(Weight(scaled));
  if (!c) throw std::logic_error("translation not in pZPhi");
  return *c;
}

Weight dot_apply(const RootSystem& rs, const AffineElement& x,
                 const Weight& lambda) {
  Weight v = lambda + rs.rho();
  Weight r = x.w.apply(v);
  for (int i = 0; i < rs.rank(); ++i) r.v[i] += x.tau[i] - 1;
  return r;
}

Weight reflect(const RootSystem& rs, int root_index, long long n, int p,
               const Weight& u) {
  const Root& rt = rs.positive_roots().at(root_index);
  long long c = rs.pair(u, root_index) - n * p;
  Weight r = u;
  for (int k = 0; k < rs.rank(); ++k)
    r.v[k] -= static_cast<int>(c) * rt.fund[k];
  return r;
}

Alcove alcove_cminus(const RootSystem& rs) {
  Alcove c;
  c.n.assign(rs.num_positive_roots(), -1);
  return c;
}

Alcove alcove_cplus(const RootSystem& rs) {
  Alcove c;
  c.n.assign(rs.num_positive_roots(), 0);
  return c;
}

std::optional<Alcove> alcove_of(const RootSystem& rs, const Weight& lambda,
                                int p) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  Weight v = lambda + rs.rho();
  Alcove c;
  c.n.resize(rs.num_positive_roots());
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    long long pr = rs.pair(v, a);
    if (pr % p == 0) return std::nullopt;
    c.n[a] = floor_div(pr, p);
  }
  return c;
}

Alcove reflect_alcove(const RootSystem& rs, const Alcove& c, int root_index,
                      long long m) {
  const auto& roots = rs.positive_roots();
  const Root& a = roots[root_index];
  Alcove out;
  out.n.resize(roots.size());
  for (size_t g = 0; g < roots.size(); ++g) {
    const Root& gamma = roots[g];
    // <gamma, alpha^vee>
    long long pr = 0;
    for (int k = 0; k < rs.rank(); ++k)
      pr += static_cast<long long>(gamma.fund[k]) * a.alpha_vee[k];
    std::vector<int> image = gamma.alpha;
    for (int k = 0; k < rs.rank(); ++k)
      image[k] -= static_cast<int>(pr) * a.alpha[k];
    bool positive = false;
    for (int x : image)
      if (x > 0) positive = true;
    int d;
    if (positive) {
      d = rs.find_positive_root(image);
    } else {
      for (int& x : image) x = -x;
      d = rs.find_positive_root(image);
    }
    if (d < 0) throw std::logic_error("reflection left the root system");
    // <alpha, gamma^vee>
    long long cc = 0;
    for (int k = 0; k < rs.rank(); ++k)
      cc += static_cast<long long>(a.fund[k]) * gamma.alpha_vee[k];
    out.n[g] = (positive ? c.n[d] : -c.n[d] - 1) + m * cc;
  }
  return out;
}

std::optional<int> adjacency_root(const Alcove& c, const Alcove& d) {
  int where = -1;
  for (size_t i = 0; i < c.n.size(); ++i) {
    if (c.n[i] == d.n[i]) continue;
    if (where >= 0) return std::nullopt;
    if (c.n[i] - d.n[i] != 1 && d.n[i] - c.n[i] != 1) return std::nullopt;
    where = static_cast<int>(i);
  }
  if (where < 0) return std::nullopt;  // equal alcoves are not adjacent
  return where;
}

long long gallery_distance_to_cminus(const Alcove& c) {
  long long d = 0;
  for (long long n : c.n) d += separation(n);
  return d;
}

AffineElement element_to_alcove_map(const RootSystem& rs, int p,
                                    const Alcove& c) {
  require_p_geq_h(rs, p);
  if (static_cast<int>(c.n.size()) != rs.num_positive_roots())
    throw std::invalid_argument("alcove has wrong number of wall indices");
  Alcove d = c;
  AffineElement x = aff_identity(rs);
  long long guard = gallery_distance_to_cminus(d);
  while (gallery_distance_to_cminus(d) > 0) {
    bool crossed = false;
    for (int a = 0; a < rs.num_positive_roots() && !crossed; ++a) {
      if (d.n[a] == -1) continue;
      long long m = d.n[a] >= 0 ? d.n[a] : d.n[a] + 1;
      Alcove next = reflect_alcove(rs, d, a, m);
      if (adjacency_root(d, next)) {
        x = aff_mul(x, aff_reflection(rs, a, m, p));
        d = next;
        crossed = true;
      }
    }
    if (!crossed || --guard < -1)
      throw std::domain_error("wall-index vector is not a realizable alcove");
  }
  return x;
}

Alcove alcove_image_of_cminus(const RootSystem& rs, const AffineElement& x,
                              int p) {
  RatPoint v = apply_affine(rs, x, cminus_interior(rs, p));
  return alcove_of_point(rs, v, p);
}

long long length(const RootSystem& rs, const AffineElement& x, int p) {
  require_p_geq_h(rs, p);
  return gallery_distance_to_cminus(alcove_image_of_cminus(rs, x, p));
}

std::vector<int> reduced_word(const RootSystem& rs, const AffineElement& x,
                              int p) {
  require_p_geq_h(rs, p);
  RatPoint v = apply_affine(rs, x, cminus_interior(rs, p));
  const int a0 = rs.highest_short_root();
  std::vector<int> word;
  for (;;) {
    int token = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (v.num[i] > 0) {  // <v, alpha_i^vee> > 0
        token = i;
        break;
      }
    if (token < 0 && pair_point(rs, v, a0) < -static_cast<long long>(p) * v.den)
      token = rs.rank();
    if (token < 0) break;
    v = apply_affine(rs, aff_generator(rs, token, p), v);
    word.push_back(token);
  }
  if (static_cast<long long>(word.size()) != length(rs, x, p))
    throw std::logic_error("generator walk produced a non-reduced word");
  return word;
}

bool BruhatCache::leq(const RootSystem& rs, const AffineElement& y,
                      const AffineElement& x, int p) {
  if (y == x) return true;
  auto k = std::make_pair(y.key(), x.key());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = leq_.find(k);
    if (it != leq_.end()) return it->second;
  }
  long long ly = length(rs, y, p);
  long long lx = length(rs, x, p);
  bool result;
  if (ly >= lx) {
    result = false;
  } else {
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
    if (length(rs, ys, p) < ly)
      result = leq(rs, ys, xs, p);
    else
      result = leq(rs, y, xs, p);
  }
  std::lock_guard<std::mutex> lock(mu_);
  leq_.emplace(std::move(k), result);
  return result;
}

std::vector<AffineElement> BruhatCache::lower_interval(const RootSystem& rs,
                                                       const AffineElement& x,
                                                       int p) {
  auto k = x.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = down_.find(k);
    if (it != down_.end()) return it->second;
  }
  std::vector<AffineElement> result;
  long long lx = length(rs, x, p);
  if (lx == 0) {
    result.push_back(x);
  } else {
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
    std::set<AffineElement> acc;
    for (const auto& z : lower_interval(rs, xs, p)) {
      acc.insert(z);
      acc.insert(aff_mul(z, aff_generator(rs, desc, p)));
    }
    result.assign(acc.begin(), acc.end());
  }
  std::lock_guard<std::mutex> lock(mu_);
  down_.emplace(std::move(k), result);
  return result;
}

bool bruhat_leq(const RootSystem& rs, const AffineElement& y,
                const AffineElement& x, int p, BruhatCache& cache) {
  require_p_geq_h(rs, p);
  return cache.leq(rs, y, x, p);
}

bool is_regular(const RootSystem& rs, const Weight& lambda, int p) {
  Weight v = lambda + rs.rho();
  for (int a = 0; a < rs.num_positive_roots(); ++a)
    if (rs.pair(v, a) % p == 0) return false;
  return true;
}

bool in_jantzen_region(const RootSystem& rs, const Weight& lambda, int p) {
  if (!rs.is_dominant(lambda))
    throw std::domain_error("Jantzen region test needs a dominant weight");
  long long h = rs.coxeter_number();
  return rs.pair(lambda + rs.rho(), rs.highest_short_root()) <=
         static_cast<long long>(p) * (p - h + 2);
}

bool is_restricted(const RootSystem& rs, const Weight& lambda, int p) {
  if (!rs.is_dominant(lambda))
    throw std::domain_error("restrictedness test needs a dominant weight");
  for (int x : lambda.v)
    if (x >= p) return false;
  return true;
}

std::optional<int> face_label(const RootSystem& rs, const Alcove& c,
                              const Alcove& d, int p) {
  require_p_geq_h(rs, p);
  if (!adjacency_root(c, d)) return std::nullopt;
  AffineElement x = element_to_alcove_map(rs, p, c);
  AffineElement xp = element_to_alcove_map(rs, p, d);
  AffineElement s = aff_mul(aff_inverse(rs, x), xp);
  for (int t = 0; t < num_generators(rs); ++t)
    if (s == aff_generator(rs, t, p)) return t;
  throw std::logic_error("adjacent alcoves not related by a generator");
}

Weight orbit_base_point(const RootSystem& rs, const Weight& lambda, int p) {
  auto c = alcove_of(rs, lambda, p);
  if (!c) throw std::domain_error("singular weight has no alcove");
  AffineElement x = element_to_alcove_map(rs, p, *c);
  return dot_apply(rs, aff_inverse(rs, x), lambda);
}

Weight adjacent_weight(const RootSystem& rs, const Weight& lambda, int token,
                       int p) {
  auto c = alcove_of(rs, lambda, p);
  if (!c) throw std::domain_error("adjacent weight of a singular weight");
  AffineElement x = element_to_alcove_map(rs, p, *c);
  Weight base = dot_apply(rs, aff_inverse(rs, x), lambda);
  return dot_apply(rs, aff_mul(x, aff_generator(rs, token, p)), base);
}

std::vector<Weight> adjacent_path_from_zero(const RootSystem& rs,
                                            const Weight& lambda, int p) {
  require_p_geq_h(rs, p);
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("path endpoint must be dominant");
  if (!is_regular(rs, lambda, p))
    throw std::invalid_argument("path endpoint must be regular");
  Weight minus2rho = Weight(std::vector<int>(rs.rank(), -2));
  if (orbit_base_point(rs, lambda, p) != minus2rho)
    throw std::invalid_argument("weight is not in the dot orbit of 0");
  AffineElement x =
      element_to_alcove_map(rs, p, *alcove_of(rs, lambda, p));

  // Split x = w0 * y with y the minimal-length coset representative.
  AffineElement y = x;
  long long ly = length(rs, y, p);
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i = 0; i < rs.rank(); ++i) {
      AffineElement cand =
          aff_mul(AffineElement{rs.simple_reflection(i),
                                std::vector<int>(rs.rank(), 0)},
                  y);
      long long lc = length(rs, cand, p);
      if (lc < ly) {
        y = cand;
        ly = lc;
        stripped = true;
      }
    }
  }
  AffineElement w0aff = aff_mul(x, aff_inverse(rs, y));
  if (!(w0aff.w == rs.longest_element()))
    throw std::logic_error("coset stripping did not reach w0");

  std::vector<int> word = reduced_word(rs, y, p);
  std::vector<Weight> path;
  AffineElement acc = w0aff;
  path.push_back(dot_apply(rs, acc, minus2rho));
  for (int t : word) {
    acc = aff_mul(acc, aff_generator(rs, t, p));
    path.push_back(dot_apply(rs, acc, minus2rho));
  }
  for (const auto& xi : path)
    if (!rs.is_dominant(xi) || !is_regular(rs, xi, p))
      throw std::logic_error("path left the regular dominant cone");
  if (path.back() != lambda) throw std::logic_error("path misses its endpoint");
  return path;
}

std::vector<AdjacentPair> adjacent_pairs_in_ideal(
    const RootSystem& rs, const std::vector<Weight>& gamma, int p) {
  require_p_geq_h(rs, p);
  std::set<Weight> members(gamma.begin(), gamma.end());
  for (const auto& g : gamma) {
    if (!rs.is_dominant(g))
      throw std::invalid_argument("ideal members must be dominant");
    for (const auto& mu : dominant_weights_below(rs, g))
      if (!members.count(mu))
        throw std::invalid_argument("weight set is not an ideal");
  }
  Weight minus2rho = Weight(std::vector<int>(rs.rank(), -2));
  std::vector<AdjacentPair> pairs;
  for (const auto& lam : gamma) {
    if (!is_regular(rs, lam, p)) continue;
    auto c = alcove_of(rs, lam, p);
    AffineElement x = element_to_alcove_map(rs, p, *c);
    Weight base = dot_apply(rs, aff_inverse(rs, x), lam);
    if (base != minus2rho) continue;
    long long lx = length(rs, x, p);
    for (int t = 0; t < num_generators(rs); ++t) {
      AffineElement xs = aff_mul(x, aff_generator(rs, t, p));
      if (length(rs, xs, p) != lx + 1) continue;
      Weight mu = dot_apply(rs, xs, base);
      if (!rs.is_dominant(mu) || !members.count(mu)) continue;
      pairs.push_back(AdjacentPair{lam, mu, t});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const AdjacentPair& a, const AdjacentPair& b) {
              if (a.lower != b.lower) return a.lower < b.lower;
              if (a.upper != b.upper) return a.upper < b.upper;
              return a.token < b.token;
            });
  return pairs;
}

}  // namespace alcove
