#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alcove {

/// Cartan type, e.g. A2 or C3.  Validates the rank restrictions of the
/// crystallographic families on construction.
struct CartanType {
  char family = 'A';
  int rank = 1;

  CartanType() = default;
  CartanType(char f, int r);

  static CartanType parse(std::string_view s);
  std::string str() const { return family + std::to_string(rank); }

  bool operator==(const CartanType& o) const {
    return family == o.family && rank == o.rank;
  }
};

/// Weight in fundamental-weight coordinates (coefficient of varpi_i).
struct Weight {
  std::vector<int> v;

  Weight() = default;
  explicit Weight(std::vector<int> coords) : v(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  int rank() const { return static_cast<int>(v.size()); }
  int operator[](int i) const { return v[i]; }
  int& operator[](int i) { return v[i]; }

  bool operator==(const Weight& o) const { return v == o.v; }
  bool operator!=(const Weight& o) const { return v != o.v; }
  bool operator<(const Weight& o) const { return v < o.v; }  // lexicographic

  Weight& operator+=(const Weight& o) {
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (int& x : a.v) x *= k;
    return a;
  }
  friend Weight operator-(Weight a) {
    for (int& x : a.v) x = -x;
    return a;
  }

  std::string str() const;
  static Weight parse(std::string_view s);
};

/// A positive root, stored in simple-root coordinates together with its
/// coroot (simple-coroot coordinates) and image in fundamental-weight
/// coordinates.
struct Root {
  std::vector<int> alpha;      // simple-root coordinates
  std::vector<int> alpha_vee;  // simple-coroot coordinates of the coroot
  std::vector<int> fund;       // alpha in fundamental-weight coordinates
  long long norm2 = 0;         // squared length (short roots normalized to 2)
};

/// Element of the finite Weyl group represented by its (integral, invertible)
/// action on fundamental-weight coordinates.
struct WeylElement {
  std::vector<std::vector<int>> m;  // row-major rank x rank matrix

  static WeylElement identity(int rank);
  bool is_identity() const;
  Weight apply(const Weight& w) const;
  std::vector<int> apply_vec(const std::vector<int>& x) const;
  WeylElement then(const WeylElement& first) const;  // (*this) o first
  WeylElement inverse() const;
  int det() const;

  bool operator==(const WeylElement& o) const { return m == o.m; }
  bool operator<(const WeylElement& o) const { return m < o.m; }
};

struct WeylOrbit {
  std::vector<Weight> orbit;    // sorted lexicographically
  Weight dominant;              // the unique dominant member
  WeylElement to_dominant;      // w with w(lambda) = dominant
};

/// Root system data built from Bourbaki Cartan tables by reflection closure.
class RootSystem {
public:
  explicit RootSystem(CartanType t);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// cartan()[i][j] = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return roots_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }

  const Weight& rho() const { return rho_; }
  int coxeter_number() const { return coxeter_; }
  int highest_short_root() const { return highest_short_; }
  const WeylElement& longest_element() const { return w0_; }
  long long weyl_order() const { return weyl_order_; }

  /// Symmetrizer: (alpha_i, alpha_i) = 2 d_i with short roots at d = 1.
  const std::vector<long long>& symmetrizer() const { return d_; }

  /// <lambda, alpha^vee> for the positive root with the given index.
  long long pair(const Weight& lambda, int root_index) const;

  /// <lambda, alpha_i^vee> for a simple root.
  long long pair_simple(const Weight& lambda, int i) const {
    return lambda.v[i];
  }

  bool is_dominant(const Weight& lambda) const;

  /// Simple reflection s_i as a linear map on fundamental coordinates.
  const WeylElement& simple_reflection(int i) const { return simple_refl_[i]; }

  /// Linear reflection in the root alpha (by index), s_alpha.
  WeylElement root_reflection(int root_index) const;

  Weight apply_simple(int i, const Weight& w) const;

  /// alpha_i as a Weight (fundamental coordinates).
  Weight simple_root_weight(int i) const;

  /// Convert simple-root coordinates to fundamental coordinates.
  Weight root_coords_to_weight(const std::vector<int>& c) const;

  /// Exact solve of lambda = sum c_i alpha_i; empty if lambda is not in Q*Phi
  /// with integer coefficients.
  std::optional<std::vector<int>> weight_to_root_coords(
      const Weight& lambda) const;

  /// Index of the positive root with the given simple-root coordinates, or -1.
  int find_positive_root(const std::vector<int>& alpha) const;

  WeylOrbit finite_weyl_orbit(const Weight& lambda) const;

  /// Dominant representative of the orbit (cheap, no orbit enumeration).
  Weight dominant_representative(const Weight& lambda) const;

  /// Inner product (x, alpha) against the positive root with the given
  /// index, scaled so short roots have norm 2: equals d_alpha * <x, alpha^vee>.
  long long inner_with_root(const Weight& x, int root_index) const;

private:
  void build_roots();
  void build_symmetrizer();
  void build_w0();

  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::vector<WeylElement> simple_refl_;
  std::vector<long long> d_;
  Weight rho_;
  int coxeter_ = 0;
  int highest_short_ = -1;
  WeylElement w0_;
  long long weyl_order_ = 0;
};

/// All dominant mu <= lambda (lambda - mu in N Phi^+), sorted
/// lexicographically.  lambda must be dominant.
std::vector<Weight> dominant_weights_below(const RootSystem& rs,
                                           const Weight& lambda);

}  // namespace alcove
