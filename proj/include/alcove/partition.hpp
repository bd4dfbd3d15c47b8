#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alcove/rootsys.hpp"

namespace alcove {

/// Weakly decreasing sequence of nonnegative integers.  Stored normalized
/// (no trailing zeros); operations that are length-sensitive take an explicit
/// n and pad on the fly.
struct Partition {
  std::vector<long long> parts;

  Partition() = default;
  explicit Partition(std::vector<long long> p);

  static Partition parse(std::string_view s);

  long long size() const;  // |lambda|
  int length() const { return static_cast<int>(parts.size()); }
  long long part(int i) const {  // 0-based, 0 beyond the length
    return i < length() ? parts[i] : 0;
  }
  std::vector<long long> padded(int n) const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  std::string str() const;
};

/// SL_n dictionary: a_i = lambda_i - lambda_{i+1} in type A_{n-1}.
Weight partition_to_weight(const Partition& lam, int n);

/// Sp_2n dictionary: fundamental coordinates of the C_n weight
/// sum lambda_i eps_i.
Weight partition_to_weight_typeC(const Partition& lam, int n);

/// Dominance order by prefix sums; partitions of different sizes compare
/// false.
bool dominance_leq(const Partition& lam, const Partition& mu);

Partition dual_partition(const Partition& lam);

/// Type-A coset criterion: equality of d-prefix sizes.  Also computes the
/// lattice-membership definition (difference in Z Phi_d) and throws
/// std::logic_error if the two disagree.
bool coset_eq_d(const Partition& lam, const Partition& mu, int n, int d);

/// Type-C coset criterion: |lam^[d]| = |mu^[d]| and |lam| = |mu| mod 2,
/// cross-validated against C_n lattice membership.
bool coset_eq_d_typeC(const Partition& lam, const Partition& mu, int n, int d);

/// lambda_i - lambda_j != i - j mod p for all i < j <= n; asserted to agree
/// with the weight-level regularity predicate.
bool is_regular_partition(const Partition& lam, int n, int p);

/// mu_1 - mu_n + n - 1 <= p(p - n + 2); asserted to agree with the
/// weight-level Jantzen predicate.
bool in_jantzen_partition(const Partition& mu, int n, int p);

struct ReflectionWitness {
  int i = 0;  // 1-based row indices, i < j
  int j = 0;
  long long m = 0;
};

/// Witness (i, j, m) with nu_i = om_i + m, nu_j = om_j - m, all other rows
/// equal, and nu_i - nu_j + j - i = m mod p; nullopt if none.  Requires
/// |nu| = |om| (throws otherwise).
std::optional<ReflectionWitness> reflection_related(const Partition& nu,
                                                    const Partition& om, int n,
                                                    int p);

std::pair<Partition, Partition> prefix_split(const Partition& lam, int d);

}  // namespace alcove
