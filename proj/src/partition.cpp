#include "alcove/partition.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "alcove/affine.hpp"
#include "alcove/levi.hpp"

namespace alcove {

Partition::Partition(std::vector<long long> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

Partition Partition::parse(std::string_view s) {
  std::vector<long long> parts;
  std::string tok;
  std::istringstream is{std::string(s)};
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    long long val = std::stoll(tok, &pos);
    while (pos < tok.size() &&
           std::isspace(static_cast<unsigned char>(tok[pos])))
      ++pos;
    if (pos != tok.size() || tok.empty())
      throw std::invalid_argument("bad partition literal: " + std::string(s));
    parts.push_back(val);
  }
  return Partition(std::move(parts));
}

long long Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0LL);
}

std::vector<long long> Partition::padded(int n) const {
  if (length() > n)
    throw std::invalid_argument("partition has more than n parts");
  std::vector<long long> p = parts;
  p.resize(n, 0);
  return p;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

Weight partition_to_weight(const Partition& lam, int n) {
  auto p = lam.padded(n);
  std::vector<int> a(n - 1);
  for (int i = 0; i + 1 < n; ++i) a[i] = static_cast<int>(p[i] - p[i + 1]);
  return Weight(std::move(a));
}

Weight partition_to_weight_typeC(const Partition& lam, int n) {
  auto p = lam.padded(n);
  std::vector<int> a(n);
  for (int i = 0; i + 1 < n; ++i) a[i] = static_cast<int>(p[i] - p[i + 1]);
  a[n - 1] = static_cast<int>(p[n - 1]);
  return Weight(std::move(a));
}

bool dominance_leq(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size()) return false;
  int n = std::max(lam.length(), mu.length());
  long long sl = 0, sm = 0;
  for (int i = 0; i < n; ++i) {
    sl += lam.part(i);
    sm += mu.part(i);
    if (sl > sm) return false;
  }
  return true;
}

Partition dual_partition(const Partition& lam) {
  std::vector<long long> d;
  for (long long i = 1; i <= lam.part(0); ++i) {
    long long count = 0;
    for (long long x : lam.parts)
      if (x >= i) ++count;
    d.push_back(count);
  }
  return Partition(std::move(d));
}

namespace {

// Simple-root indices of A_{n-1} resp. C_n with the d-th node removed
// (d is the 1-based cut position).
std::vector<int> kept_indices(int rank, int d) {
  std::vector<int> J;
  for (int i = 0; i < rank; ++i)
    if (i != d - 1) J.push_back(i);
  return J;
}

// The cross-checks below run inside exhaustive sweeps; cache the root
// systems instead of rebuilding them per call.
const RootSystem& cached_system(CartanType t) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{t.family, t.rank}];
  if (!slot) slot = std::make_unique<RootSystem>(t);
  return *slot;
}

}  // namespace

bool coset_eq_d(const Partition& lam, const Partition& mu, int n, int d) {
  if (d < 1 || d >= n) throw std::invalid_argument("d out of range");
  auto pl = lam.padded(n), pm = mu.padded(n);
  long long prefl = 0, prefm = 0;
  for (int i = 0; i < d; ++i) {
    prefl += pl[i];
    prefm += pm[i];
  }
  bool criterion = prefl == prefm && lam.size() == mu.size();
  if (lam.size() == mu.size()) {
    // Cross-check against lattice membership in ZPhi_d inside A_{n-1}.
    const RootSystem& rs = cached_system(CartanType('A', n - 1));
    bool oracle = in_levi_root_lattice(
        rs, partition_to_weight(lam, n) - partition_to_weight(mu, n),
        kept_indices(n - 1, d));
    if (criterion != oracle)
      throw std::logic_error("prefix criterion disagrees with lattice oracle");
  }
  return criterion;
}

bool coset_eq_d_typeC(const Partition& lam, const Partition& mu, int n,
                      int d) {
  if (d < 1 || d > n) throw std::invalid_argument("d out of range");
  auto pl = lam.padded(n), pm = mu.padded(n);
  long long prefl = 0, prefm = 0;
  for (int i = 0; i < d; ++i) {
    prefl += pl[i];
    prefm += pm[i];
  }
  bool criterion = prefl == prefm && (lam.size() - mu.size()) % 2 == 0;
  if (d < n) {
    const RootSystem& rs = cached_system(CartanType('C', n));
    bool oracle = in_levi_root_lattice(
        rs,
        partition_to_weight_typeC(lam, n) - partition_to_weight_typeC(mu, n),
        kept_indices(n, d));
    if (criterion != oracle)
      throw std::logic_error("type-C criterion disagrees with lattice oracle");
  }
  return criterion;
}

bool is_regular_partition(const Partition& lam, int n, int p) {
  auto pl = lam.padded(n);
  bool reg = true;
  for (int i = 0; i < n && reg; ++i)
    for (int j = i + 1; j < n && reg; ++j)
      if (((pl[i] - pl[j]) - (i - j)) % p == 0) reg = false;
  if (n >= 2) {
    const RootSystem& rs = cached_system(CartanType('A', n - 1));
    if (reg != is_regular(rs, partition_to_weight(lam, n), p))
      throw std::logic_error("partition regularity disagrees with weight level");
  }
  return reg;
}

bool in_jantzen_partition(const Partition& mu, int n, int p) {
  auto pm = mu.padded(n);
  bool in = pm[0] - pm[n - 1] + n - 1 <=
            static_cast<long long>(p) * (p - n + 2);
  if (n >= 2) {
    const RootSystem& rs = cached_system(CartanType('A', n - 1));
    if (in != in_jantzen_region(rs, partition_to_weight(mu, n), p))
      throw std::logic_error("partition Jantzen test disagrees with weight level");
  }
  return in;
}

std::optional<ReflectionWitness> reflection_related(const Partition& nu,
                                                    const Partition& om, int n,
                                                    int p) {
  if (nu.size() != om.size())
    throw std::invalid_argument("reflection_related needs equal sizes");
  auto pn = nu.padded(n), po = om.padded(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long m = pn[i] - po[i];
      if (m <= 0) continue;
      if (pn[j] != po[j] - m) continue;
      bool rest = true;
      for (int t = 0; t < n && rest; ++t)
        if (t != i && t != j && pn[t] != po[t]) rest = false;
      if (!rest) continue;
      // (b): nu_i - nu_j + j - i = m mod p (1-based row indices).
      if (((pn[i] - pn[j] + (j - i)) - m) % p != 0) continue;
      return ReflectionWitness{i + 1, j + 1, m};
    }
  return std::nullopt;
}

std::pair<Partition, Partition> prefix_split(const Partition& lam, int d) {
  if (d < 1 || d > lam.length())
    throw std::invalid_argument("prefix_split: d out of range");
  std::vector<long long> head(lam.parts.begin(), lam.parts.begin() + d);
  std::vector<long long> tail(lam.parts.begin() + d, lam.parts.end());
  return {Partition(std::move(head)), Partition(std::move(tail))};
}

}  // namespace alcove
