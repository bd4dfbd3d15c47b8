#include "alcove/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "alcove/linalg.hpp"
#include "alcove/poly.hpp"

namespace alcove {

CartanType::CartanType(char f, int r) : family(f), rank(r) {
  auto bad = [&] {
    throw std::invalid_argument("invalid Cartan type " + str());
  };
  switch (family) {
    case 'A':
      if (rank < 1) bad();
      break;
    case 'B':
    case 'C':
      if (rank < 2) bad();
      break;
    case 'D':
      if (rank < 3) bad();
      break;
    case 'E':
      if (rank < 6 || rank > 8) bad();
      break;
    case 'F':
      if (rank != 4) bad();
      break;
    case 'G':
      if (rank != 2) bad();
      break;
    default:
      bad();
  }
}

CartanType CartanType::parse(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("bad Cartan type literal");
  char f = static_cast<char>(std::toupper(s[0]));
  int r = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad Cartan type literal");
    r = r * 10 + (s[i] - '0');
  }
  return CartanType(f, r);
}

std::string Weight::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

Weight Weight::parse(std::string_view s) {
  std::vector<int> coords;
  std::string tok;
  std::istringstream is{std::string(s)};
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int val = std::stoi(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
      ++pos;
    if (pos != tok.size() || tok.empty())
      throw std::invalid_argument("bad weight literal: " + std::string(s));
    coords.push_back(val);
  }
  if (coords.empty())
    throw std::invalid_argument("bad weight literal: " + std::string(s));
  return Weight(std::move(coords));
}

WeylElement WeylElement::identity(int rank) {
  WeylElement e;
  e.m.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) e.m[i][i] = 1;
  return e;
}

bool WeylElement::is_identity() const {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<int> WeylElement::apply_vec(const std::vector<int>& x) const {
  const size_t n = m.size();
  std::vector<int> r(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r[i] += m[i][j] * x[j];
  return r;
}

Weight WeylElement::apply(const Weight& w) const {
  return Weight(apply_vec(w.v));
}

WeylElement WeylElement::then(const WeylElement& first) const {
  const size_t n = m.size();
  WeylElement r;
  r.m.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (m[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r.m[i][j] += m[i][k] * first.m[k][j];
    }
  return r;
}

WeylElement WeylElement::inverse() const {
  // Weyl group elements have finite order; iterate.
  WeylElement acc = *this;
  WeylElement prev = identity(static_cast<int>(m.size()));
  while (!acc.is_identity()) {
    prev = acc;
    acc = acc.then(*this);
  }
  return prev;
}

int WeylElement::det() const {
  // Integer matrix with determinant +-1; fraction-free elimination.
  auto a = m;
  const size_t n = a.size();
  long long det = 1;
  for (size_t c = 0, r = 0; c < n && r < n; ++c) {
    size_t pr = r;
    while (pr < n && a[pr][c] == 0) ++pr;
    if (pr == n) return 0;
    if (pr != r) {
      std::swap(a[pr], a[r]);
      det = -det;
    }
    for (size_t i = r + 1; i < n; ++i) {
      while (a[i][c] != 0) {  // integer-preserving row reduction
        long long q = a[r][c] / a[i][c];
        for (size_t j = c; j < n; ++j) a[r][j] -= static_cast<int>(q) * a[i][j];
        std::swap(a[r], a[i]);
        det = -det;
      }
    }
    det *= a[r][c];
    ++r;
  }
  return static_cast<int>(det > 0 ? 1 : -1);
}

namespace {

std::vector<std::vector<int>> cartan_table(const CartanType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j, int cij, int cji) {
    // 1-based indices; c[i][j] = <alpha_j, alpha_i^vee>.
    c[i - 1][j - 1] = cij;
    c[j - 1][i - 1] = cji;
  };
  switch (t.family) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_n short
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -1, -2);
      break;
    case 'C':  // alpha_n long
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -2, -1);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n, -1, -1);
      break;
    case 'E':
      bond(1, 3, -1, -1);
      bond(3, 4, -1, -1);
      bond(2, 4, -1, -1);
      bond(4, 5, -1, -1);
      bond(5, 6, -1, -1);
      if (n >= 7) bond(6, 7, -1, -1);
      if (n >= 8) bond(7, 8, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(1, 2, -1, -1);
      bond(2, 3, -1, -2);
      bond(3, 4, -1, -1);
      break;
    case 'G':  // alpha_1 short
      bond(1, 2, -3, -1);
      break;
  }
  return c;
}

}  // namespace

RootSystem::RootSystem(CartanType t) : type_(t) {
  cartan_ = cartan_table(type_);
  build_symmetrizer();
  build_roots();
  rho_ = Weight(std::vector<int>(rank(), 1));

  // Highest short root: the dominant root of minimal squared length.
  long long min_norm = roots_[0].norm2;
  for (const auto& r : roots_) min_norm = std::min(min_norm, r.norm2);
  for (size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].norm2 != min_norm) continue;
    bool dom = true;
    for (int x : roots_[i].fund)
      if (x < 0) dom = false;
    if (dom) {
      highest_short_ = static_cast<int>(i);
      break;
    }
  }
  if (highest_short_ < 0) throw std::logic_error("no highest short root");
  coxeter_ = 1;
  for (int x : roots_[highest_short_].alpha_vee) coxeter_ += x;

  // Simple reflections.
  simple_refl_.resize(rank());
  for (int i = 0; i < rank(); ++i) {
    WeylElement s = WeylElement::identity(rank());
    for (int k = 0; k < rank(); ++k) s.m[k][i] -= cartan_[k][i];
    simple_refl_[i] = s;
  }

  build_w0();
  weyl_order_ = static_cast<long long>(finite_weyl_orbit(rho_).orbit.size());
}

void RootSystem::build_symmetrizer() {
  const int n = rank();
  // Propagate length ratios along the Dynkin graph, then clear denominators.
  std::vector<Rat> d(n, Rat(0));
  d[0] = Rat(1);
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j) {
      if (i == j || cartan_[i][j] == 0 || d[j] != Rat(0)) continue;
      // d_i <a_j, a_i^vee> = d_j <a_i, a_j^vee>
      d[j] = d[i] * Rat(cartan_[i][j]) / Rat(cartan_[j][i]);
      q.push(j);
    }
  }
  Int lcm_den = 1;
  for (const auto& r : d)
    lcm_den = boost::multiprecision::lcm(lcm_den, r.denominator());
  std::vector<Int> num(n);
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    num[i] = d[i].numerator() * (lcm_den / d[i].denominator());
    g = boost::multiprecision::gcd(g, num[i]);
  }
  d_.resize(n);
  for (int i = 0; i < n; ++i) d_[i] = (num[i] / g).convert_to<long long>();
}

void RootSystem::build_roots() {
  const int n = rank();
  std::set<std::vector<int>> seen;
  std::vector<Root> all;
  std::queue<size_t> work;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.alpha.assign(n, 0);
    r.alpha_vee.assign(n, 0);
    r.alpha[i] = 1;
    r.alpha_vee[i] = 1;
    r.norm2 = 2 * d_[i];
    seen.insert(r.alpha);
    all.push_back(r);
    work.push(all.size() - 1);
  }
  while (!work.empty()) {
    Root r = all[work.front()];
    work.pop();
    for (int i = 0; i < n; ++i) {
      long long pr = 0;  // <alpha, alpha_i^vee>
      for (int k = 0; k < n; ++k) pr += static_cast<long long>(r.alpha[k]) * cartan_[i][k];
      long long prv = 0;  // <alpha_i, alpha^vee>
      for (int k = 0; k < n; ++k) prv += static_cast<long long>(r.alpha_vee[k]) * cartan_[k][i];
      Root s = r;
      s.alpha[i] -= static_cast<int>(pr);
      s.alpha_vee[i] -= static_cast<int>(prv);
      bool positive = false, negative = false;
      for (int x : s.alpha) {
        if (x > 0) positive = true;
        if (x < 0) negative = true;
      }
      if (negative || !positive) continue;
      if (seen.insert(s.alpha).second) {
        all.push_back(s);
        work.push(all.size() - 1);
      }
    }
  }
  auto height = [](const Root& r) {
    long long h = 0;
    for (int x : r.alpha) h += x;
    return h;
  };
  std::sort(all.begin(), all.end(), [&](const Root& a, const Root& b) {
    long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return b.alpha < a.alpha;  // alpha_0, alpha_1, ... among the simples
  });
  for (auto& r : all) {
    r.fund.assign(n, 0);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) r.fund[k] += cartan_[k][j] * r.alpha[j];
  }
  roots_ = std::move(all);
}

void RootSystem::build_w0() {
  Weight lam = rho_;
  WeylElement w = WeylElement::identity(rank());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank(); ++i) {
      if (lam.v[i] > 0) {
        lam = simple_refl_[i].apply(lam);
        w = simple_refl_[i].then(w);
        changed = true;
      }
    }
  }
  w0_ = w;
}

long long RootSystem::pair(const Weight& lambda, int root_index) const {
  const Root& r = roots_.at(root_index);
  long long s = 0;
  for (int k = 0; k < rank(); ++k)
    s += static_cast<long long>(lambda.v[k]) * r.alpha_vee[k];
  return s;
}

bool RootSystem::is_dominant(const Weight& lambda) const {
  for (int x : lambda.v)
    if (x < 0) return false;
  return true;
}

WeylElement RootSystem::root_reflection(int root_index) const {
  const Root& r = roots_.at(root_index);
  WeylElement s = WeylElement::identity(rank());
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j) s.m[k][j] -= r.fund[k] * r.alpha_vee[j];
  return s;
}

Weight RootSystem::apply_simple(int i, const Weight& w) const {
  return simple_refl_[i].apply(w);
}

Weight RootSystem::simple_root_weight(int i) const {
  std::vector<int> f(rank());
  for (int k = 0; k < rank(); ++k) f[k] = cartan_[k][i];
  return Weight(std::move(f));
}

Weight RootSystem::root_coords_to_weight(const std::vector<int>& c) const {
  std::vector<int> f(rank(), 0);
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j) f[k] += cartan_[k][j] * c[j];
  return Weight(std::move(f));
}

std::optional<std::vector<int>> RootSystem::weight_to_root_coords(
    const Weight& lambda) const {
  const int n = rank();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  std::vector<long long> b(n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) a[k][j] = cartan_[k][j];
    b[k] = lambda.v[k];
  }
  auto sol = solve_exact(a, b);
  if (!sol) return std::nullopt;
  std::vector<int> c(n);
  for (int j = 0; j < n; ++j) {
    if (!is_integral((*sol)[j])) return std::nullopt;
    c[j] = static_cast<int>((*sol)[j].numerator().convert_to<long long>());
  }
  return c;
}

int RootSystem::find_positive_root(const std::vector<int>& alpha) const {
  for (size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].alpha == alpha) return static_cast<int>(i);
  return -1;
}

Weight RootSystem::dominant_representative(const Weight& lambda) const {
  Weight lam = lambda;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank(); ++i)
      if (lam.v[i] < 0) {
        lam = simple_refl_[i].apply(lam);
        changed = true;
      }
  }
  return lam;
}

WeylOrbit RootSystem::finite_weyl_orbit(const Weight& lambda) const {
  WeylOrbit out;
  std::set<Weight> seen{lambda};
  std::queue<Weight> work;
  work.push(lambda);
  while (!work.empty()) {
    Weight w = work.front();
    work.pop();
    for (int i = 0; i < rank(); ++i) {
      Weight s = simple_refl_[i].apply(w);
      if (seen.insert(s).second) work.push(s);
    }
  }
  out.orbit.assign(seen.begin(), seen.end());

  Weight lam = lambda;
  WeylElement w = WeylElement::identity(rank());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank(); ++i)
      if (lam.v[i] < 0) {
        lam = simple_refl_[i].apply(lam);
        w = simple_refl_[i].then(w);
        changed = true;
      }
  }
  out.dominant = lam;
  out.to_dominant = w;
  return out;
}

long long RootSystem::inner_with_root(const Weight& x, int root_index) const {
  return (roots_.at(root_index).norm2 / 2) * pair(x, root_index);
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs,
                                           const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("dominant_weights_below: weight not dominant");
  // Any dominant mu <= lambda satisfies w0(lambda) <= mu, so the root
  // coordinates of lambda - mu fit in the box bounded by lambda - w0(lambda).
  Weight w0lam = rs.longest_element().apply(lambda);
  auto box = rs.weight_to_root_coords(lambda - w0lam);
  if (!box) throw std::logic_error("lambda - w0(lambda) not in root lattice");
  std::vector<Weight> out;
  std::vector<int> c(rs.rank(), 0);
  for (;;) {
    Weight mu = lambda - rs.root_coords_to_weight(c);
    if (rs.is_dominant(mu)) out.push_back(mu);
    int i = 0;
    while (i < rs.rank() && c[i] == (*box)[i]) c[i++] = 0;
    if (i == rs.rank()) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace alcove
