#include "alcove/charring.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "alcove/linalg.hpp"

namespace alcove {

namespace {

Weight sub_dominant_rep(const RootSystem& rs, const SubSystem& sub, Weight w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : sub.simple)
      if (w.v[j] < 0) {
        w = rs.apply_simple(j, w);
        changed = true;
      }
  }
  return w;
}

Weight sub_antidominant_rep(const RootSystem& rs, const SubSystem& sub,
                            Weight w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : sub.simple)
      if (w.v[j] > 0) {
        w = rs.apply_simple(j, w);
        changed = true;
      }
  }
  return w;
}

std::vector<Weight> sub_orbit(const RootSystem& rs, const SubSystem& sub,
                              const Weight& w) {
  std::set<Weight> seen{w};
  std::queue<Weight> work;
  work.push(w);
  while (!work.empty()) {
    Weight v = work.front();
    work.pop();
    for (int j : sub.simple) {
      Weight s = rs.apply_simple(j, v);
      if (seen.insert(s).second) work.push(s);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

SubSystem SubSystem::full(const RootSystem& rs) {
  SubSystem s;
  for (int i = 0; i < rs.rank(); ++i) s.simple.push_back(i);
  for (int a = 0; a < rs.num_positive_roots(); ++a) s.pos_roots.push_back(a);
  return s;
}

bool is_dominant_sub(const RootSystem& rs, const SubSystem& sub,
                     const Weight& lambda) {
  for (int j : sub.simple)
    if (lambda.v[j] < 0) return false;
  return true;
}

FormalCharacter weyl_character_sub(const RootSystem& rs, const SubSystem& sub,
                                   const Weight& lambda) {
  if (!is_dominant_sub(rs, sub, lambda))
    throw std::invalid_argument("weyl_character_sub: weight not sub-dominant");
  const int k = static_cast<int>(sub.simple.size());

  // Box bound: root coordinates (over the kept simple roots) of
  // lambda - w0_H(lambda).
  Weight low = sub_antidominant_rep(rs, sub, lambda);
  Weight diff = lambda - low;
  std::vector<std::vector<long long>> cols(rs.rank(),
                                           std::vector<long long>(k));
  for (int t = 0; t < k; ++t) {
    Weight aj = rs.simple_root_weight(sub.simple[t]);
    for (int r = 0; r < rs.rank(); ++r) cols[r][t] = aj.v[r];
  }
  std::vector<long long> rhs(rs.rank());
  for (int r = 0; r < rs.rank(); ++r) rhs[r] = diff.v[r];
  auto sol = solve_exact(cols, rhs);
  if (!sol) throw std::logic_error("lambda - w0(lambda) outside root lattice");
  std::vector<long long> box(k);
  for (int t = 0; t < k; ++t) {
    if (!is_integral((*sol)[t]) || (*sol)[t] < Rat(0))
      throw std::logic_error("bad dominant-weight box");
    box[t] = boost::rational_cast<long long>((*sol)[t]);
  }

  // Sub-dominant weights below lambda, with their coordinate vectors.
  struct Cand {
    std::vector<long long> c;
    long long height;
    Weight mu;
  };
  std::vector<Cand> cands;
  std::vector<long long> c(k, 0);
  for (;;) {
    Weight mu = lambda;
    long long ht = 0;
    for (int t = 0; t < k; ++t) {
      Weight aj = rs.simple_root_weight(sub.simple[t]);
      mu -= static_cast<int>(c[t]) * aj;
      ht += c[t];
    }
    if (is_dominant_sub(rs, sub, mu)) cands.push_back({c, ht, mu});
    int t = 0;
    while (t < k && c[t] == box[t]) c[t++] = 0;
    if (t == k) break;
    ++c[t];
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.c < b.c;
  });

  // Freudenthal recursion on sub-dominant multiplicities.
  std::map<Weight, Int> mult;
  for (const Cand& cd : cands) {
    if (cd.height == 0) {
      mult[cd.mu] = 1;
      continue;
    }
    Int rhs_sum = 0;
    for (int idx : sub.pos_roots) {
      const Root& alpha = rs.positive_roots()[idx];
      // Longest step staying inside the coordinate box.
      long long kmax = -1;
      for (int t = 0; t < k; ++t) {
        int a = alpha.alpha[sub.simple[t]];
        if (a > 0) {
          long long lim = cd.c[t] / a;
          kmax = kmax < 0 ? lim : std::min(kmax, lim);
        }
      }
      Weight aw = rs.root_coords_to_weight(alpha.alpha);
      long long base_inner = rs.inner_with_root(cd.mu, idx);
      for (long long step = 1; step <= kmax; ++step) {
        Weight xi = cd.mu + static_cast<int>(step) * aw;
        auto it = mult.find(sub_dominant_rep(rs, sub, xi));
        if (it == mult.end()) continue;
        rhs_sum += it->second * Int(base_inner + step * alpha.norm2);
      }
    }
    rhs_sum *= 2;
    // (lambda + mu + 2 rho_H, lambda - mu), using (2 rho_H, alpha_j) = 2 d_j.
    Int denom = 0;
    Weight lpm = lambda + cd.mu;
    for (int t = 0; t < k; ++t) {
      int j = sub.simple[t];
      denom += Int(cd.c[t]) *
               Int(rs.inner_with_root(lpm, j) + 2 * rs.symmetrizer()[j]);
    }
    if (denom == 0) throw std::logic_error("Freudenthal denominator vanished");
    if (rhs_sum % denom != 0)
      throw std::logic_error("Freudenthal division not exact");
    Int m = rhs_sum / denom;
    if (m != 0) mult[cd.mu] = m;
  }

  FormalCharacter chi;
  for (const auto& [mu, m] : mult)
    for (const Weight& w : sub_orbit(rs, sub, mu)) chi[w.v] += m;
  return chi;
}

FormalCharacter weyl_character(const RootSystem& rs, const Weight& lambda) {
  return weyl_character_sub(rs, SubSystem::full(rs), lambda);
}

FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter r;
  for (const auto& [va, ca] : a)
    for (const auto& [vb, cb] : b) {
      std::vector<int> key(va.size());
      for (size_t i = 0; i < va.size(); ++i) key[i] = va[i] + vb[i];
      Int& slot = r[key];
      slot += ca * cb;
      if (slot == 0) r.erase(key);
    }
  return r;
}

Int char_dimension(const FormalCharacter& chi) {
  Int d = 0;
  for (const auto& [w, m] : chi) d += m;
  return d;
}

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("weyl_dimension: weight not dominant");
  Int num = 1, den = 1;
  Weight v = lambda + rs.rho();
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    num *= Int(rs.pair(v, a));
    den *= Int(rs.pair(rs.rho(), a));
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension not integral");
  return num / den;
}

DeltaVector brauer_decompose(const RootSystem& rs, const FormalCharacter& chi) {
  // W-invariance is equivalent to invariance under every simple reflection.
  for (const auto& [v, m] : chi)
    for (int i = 0; i < rs.rank(); ++i) {
      Weight s = rs.apply_simple(i, Weight(v));
      auto it = chi.find(s.v);
      if (it == chi.end() || it->second != m)
        throw std::domain_error("character is not Weyl-group invariant");
    }

  // Height functional <mu, 2 rho^vee>: strictly positive on positive roots,
  // so its maximizers over the support are maximal in the dominance order
  // and (by invariance) dominant.
  auto level = [&](const std::vector<int>& v) {
    Weight w(v);
    long long s = 0;
    for (int a = 0; a < rs.num_positive_roots(); ++a) s += rs.pair(w, a);
    return s;
  };

  FormalCharacter work = chi;
  DeltaVector dv;
  while (!work.empty()) {
    long long best = 0;
    bool have = false;
    for (const auto& [v, m] : work) {
      long long l = level(v);
      if (!have || l > best) {
        best = l;
        have = true;
      }
    }
    const std::vector<int>* top = nullptr;
    for (const auto& [v, m] : work)
      if (level(v) == best && rs.is_dominant(Weight(v)) && (!top || v > *top))
        top = &v;
    if (!top) throw std::logic_error("no dominant weight among maximizers");
    std::vector<int> key = *top;
    Int m = work[key];
    dv[key] += m;
    FormalCharacter del = weyl_character(rs, Weight(key));
    for (const auto& [v, c] : del) {
      Int& slot = work[v];
      slot -= m * c;
      if (slot == 0) work.erase(v);
    }
  }
  for (auto it = dv.begin(); it != dv.end();)
    it = it->second == 0 ? dv.erase(it) : std::next(it);
  return dv;
}

FormalCharacter delta_expand(const RootSystem& rs, const DeltaVector& dv) {
  FormalCharacter acc;
  for (const auto& [v, c] : dv) {
    Weight w(v);
    if (!rs.is_dominant(w))
      throw std::invalid_argument("delta_expand: non-dominant key");
    for (const auto& [u, m] : weyl_character(rs, w)) {
      Int& slot = acc[u];
      slot += c * m;
      if (slot == 0) acc.erase(u);
    }
  }
  return acc;
}

FormalCharacter frobenius_twist(const FormalCharacter& chi, int p) {
  FormalCharacter r;
  for (const auto& [v, m] : chi) {
    std::vector<int> key(v.size());
    for (size_t i = 0; i < v.size(); ++i) key[i] = p * v[i];
    r[key] = m;
  }
  return r;
}

LusztigResult lusztig_character(const RootSystem& rs, const Weight& lambda,
                                int p, KLTable& table) {
  if (!is_regular(rs, lambda, p))
    throw std::domain_error("Lusztig character of a singular weight");
  auto c = alcove_of(rs, lambda, p);
  AffineElement x = element_to_alcove_map(rs, p, *c);
  Weight base = dot_apply(rs, aff_inverse(rs, x), lambda);

  LusztigResult res;
  res.base = base;
  res.x = x;
  long long lx = length(rs, x, p);
  for (const auto& y : table.bruhat().lower_interval(rs, x, p)) {
    Weight mu = dot_apply(rs, y, base);
    if (!rs.is_dominant(mu)) continue;
    Int term = table.kl(y, x).eval_at_one();
    if ((lx - length(rs, y, p)) % 2 != 0) term = -term;
    Int& slot = res.delta[mu.v];
    slot += term;
    if (slot == 0) res.delta.erase(mu.v);
  }
  res.expansion = delta_expand(rs, res.delta);
  res.is_character = true;
  for (const auto& [v, m] : res.expansion)
    if (m < 0) res.is_character = false;
  auto topit = res.expansion.find(lambda.v);
  if (topit == res.expansion.end() || topit->second != 1)
    res.is_character = false;
  return res;
}

TwistReport verify_twist_identity(const RootSystem& rs, const Weight& lambda,
                                  int p, KLTable& table) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("twist identity needs a dominant weight");
  Weight plam = p * lambda;
  if (!is_regular(rs, plam, p))
    throw std::domain_error("p*lambda is singular");

  TwistReport rep;
  rep.lhs = brauer_decompose(rs, frobenius_twist(weyl_character(rs, lambda), p));
  rep.rhs = lusztig_character(rs, plam, p, table).delta;
  rep.verdict = rep.lhs == rep.rhs;

  char f = rs.type().family;
  int h = rs.coxeter_number();
  if ((f == 'A' || f == 'D') && p >= h) {
    rep.within_hypotheses = true;
    rep.note = "simply laced, p >= h";
  } else if (f == 'E' && p > h + 1) {
    rep.within_hypotheses = true;
    rep.note = "type E, p > h+1";
  } else {
    rep.within_hypotheses = false;
    rep.note = (f == 'A' || f == 'D' || f == 'E')
                   ? "simply laced but p below the proven range"
                   : "not simply laced; identity outside proven hypotheses";
  }
  return rep;
}

}  // namespace alcove
