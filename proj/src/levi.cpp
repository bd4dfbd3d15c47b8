#include "alcove/levi.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "alcove/linalg.hpp"

namespace alcove {

namespace {

// Match a connected Dynkin component against the standard Cartan tables by
// permutation.  A ahead of C so the rank-2 B/C ambiguity resolves to C
// (transposed enumerations of the same system).
CartanType classify_component(const std::vector<std::vector<int>>& sub) {
  const int k = static_cast<int>(sub.size());
  for (char f : {'A', 'C', 'B', 'D', 'E', 'F', 'G'}) {
    CartanType t;
    try {
      t = CartanType(f, k);
    } catch (const std::invalid_argument&) {
      continue;
    }
    RootSystem cand(t);
    const auto& m = cand.cartan();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = 0; j < k && ok; ++j)
          if (sub[perm[i]][perm[j]] != m[i][j]) ok = false;
      if (ok) return t;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  throw std::logic_error("Dynkin component matches no Cartan table");
}

// Coefficients of diff over {alpha_j : j in J}, or nullopt when diff is
// outside the rational span or non-integral.
std::optional<std::vector<long long>> levi_coords(const RootSystem& rs,
                                                  const Weight& diff,
                                                  const std::vector<int>& J) {
  const int k = static_cast<int>(J.size());
  std::vector<std::vector<long long>> cols(rs.rank(),
                                           std::vector<long long>(k));
  for (int t = 0; t < k; ++t) {
    Weight aj = rs.simple_root_weight(J[t]);
    for (int r = 0; r < rs.rank(); ++r) cols[r][t] = aj.v[r];
  }
  std::vector<long long> rhs(diff.v.begin(), diff.v.end());
  auto sol = solve_exact(cols, rhs);
  if (!sol) return std::nullopt;
  std::vector<long long> c(k);
  for (int t = 0; t < k; ++t) {
    if (!is_integral((*sol)[t])) return std::nullopt;
    c[t] = boost::rational_cast<long long>((*sol)[t]);
  }
  return c;
}

}  // namespace

std::string LeviDatum::type_str() const {
  if (components.empty()) return "trivial";
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].str();
  }
  return s;
}

LeviDatum levi_subsystem(const RootSystem& rs, const std::vector<int>& J) {
  LeviDatum d;
  std::set<int> js;
  for (int j : J) {
    if (j < 0 || j >= rs.rank())
      throw std::invalid_argument("Levi simple-root index out of range");
    js.insert(j);
  }
  d.sub.simple.assign(js.begin(), js.end());
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    const Root& r = rs.positive_roots()[a];
    bool inside = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (r.alpha[i] != 0 && !js.count(i)) inside = false;
    if (inside) d.sub.pos_roots.push_back(a);
  }

  // Connected components of the induced Dynkin graph, by smallest index.
  std::set<int> left(js);
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t q = 0; q < comp.size(); ++q)
      for (auto it = left.begin(); it != left.end();)
        if (rs.cartan()[comp[q]][*it] != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
    std::sort(comp.begin(), comp.end());
    std::vector<std::vector<int>> sub(comp.size(),
                                      std::vector<int>(comp.size()));
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = 0; j < comp.size(); ++j)
        sub[i][j] = rs.cartan()[comp[i]][comp[j]];
    d.components.push_back(classify_component(sub));
  }
  return d;
}

bool order_leq(const RootSystem& rs, const Weight& lambda, const Weight& mu,
               const std::vector<int>& J) {
  auto c = levi_coords(rs, mu - lambda, J);
  if (!c) return false;
  for (long long x : *c)
    if (x < 0) return false;
  return true;
}

bool order_leq_full(const RootSystem& rs, const Weight& lambda,
                    const Weight& mu) {
  std::vector<int> all(rs.rank());
  std::iota(all.begin(), all.end(), 0);
  return order_leq(rs, lambda, mu, all);
}

bool in_levi_root_lattice(const RootSystem& rs, const Weight& diff,
                          const std::vector<int>& J) {
  return levi_coords(rs, diff, J).has_value();
}

std::vector<Weight> ideal_generated(const RootSystem& rs,
                                    const std::vector<Weight>& F) {
  std::set<Weight> acc;
  for (const Weight& f : F) {
    auto below = dominant_weights_below(rs, f);
    acc.insert(below.begin(), below.end());
  }
  return {acc.begin(), acc.end()};
}

CosetResult coset_members(const RootSystem& rs, const LeviDatum& H,
                          const Weight& omega,
                          const std::vector<Weight>& gamma) {
  CosetResult res;
  for (const Weight& g : gamma)
    if (in_levi_root_lattice(rs, g - omega, H.sub.simple))
      res.members.push_back(g);
  std::sort(res.members.begin(), res.members.end());
  res.members.erase(std::unique(res.members.begin(), res.members.end()),
                    res.members.end());
  std::set<Weight> mem(res.members.begin(), res.members.end());

  // Coideal in (Gamma, <=): anything in Gamma above a member is a member.
  res.coideal_in_gamma = true;
  for (const Weight& m : res.members)
    for (const Weight& g : gamma)
      if (!mem.count(g) && order_leq_full(rs, m, g))
        res.coideal_in_gamma = false;

  // Ideal in (X+ cap coset, <=_H): every dominant weight <=_H a member is a
  // member.
  res.ideal_in_levi_order = true;
  for (const Weight& m : res.members) {
    // Walk m to the H-antidominant chamber to bound the coefficient box.
    Weight low = m;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int j : H.sub.simple)
        if (low.v[j] > 0) {
          low = rs.apply_simple(j, low);
          changed = true;
        }
    }
    auto box = levi_coords(rs, m - low, H.sub.simple);
    if (!box) throw std::logic_error("m - w0_H(m) outside Levi root lattice");
    const int k = static_cast<int>(H.sub.simple.size());
    std::vector<long long> c(k, 0);
    for (;;) {
      Weight a = m;
      for (int t = 0; t < k; ++t)
        a -= static_cast<int>(c[t]) * rs.simple_root_weight(H.sub.simple[t]);
      if (is_dominant_sub(rs, H.sub, a) && !mem.count(a))
        res.ideal_in_levi_order = false;
      int t = 0;
      while (t < k && c[t] == (*box)[t]) c[t++] = 0;
      if (t == k) break;
      ++c[t];
    }
  }
  return res;
}

FormalCharacter truncate_character(const RootSystem& rs,
                                   const FormalCharacter& chi,
                                   const LeviDatum& H, const Weight& omega) {
  FormalCharacter out;
  for (const auto& [v, m] : chi)
    if (in_levi_root_lattice(rs, Weight(v) - omega, H.sub.simple)) out[v] = m;
  return out;
}

bool donkin_check(const RootSystem& rs, const LeviDatum& H,
                  const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("donkin_check needs a dominant weight");
  FormalCharacter trunc =
      truncate_character(rs, weyl_character(rs, lambda), H, lambda);
  return trunc == weyl_character_sub(rs, H.sub, lambda);
}

}  // namespace alcove
