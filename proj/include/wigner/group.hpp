#ifndef WIGNER_GROUP_HPP
#define WIGNER_GROUP_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wigner/error.hpp"

namespace wigner {

/// A finite group of order N as an indexed Cayley table. Elements are the
/// integers 0..N-1 with the identity fixed at index 0. Immutable after
/// construction.
class GroupTable {
 public:
  GroupTable() = default;

  /// Validates the table (identity at 0, inverses, associativity, Latin
  /// square) and precomputes inverse and, for odd N, square-root tables.
  explicit GroupTable(std::vector<std::vector<int>> mul,
                      std::vector<std::string> names = {})
      : order_(static_cast<int>(mul.size())), mul_(std::move(mul)),
        names_(std::move(names)) {
    validate();
    build_inverses();
    if (order_ % 2 == 1) build_sqrt();
    if (names_.empty()) {
      names_.reserve(order_);
      for (int a = 0; a < order_; ++a) names_.push_back("g" + std::to_string(a));
    }
  }

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return 0; }
  const std::vector<std::vector<int>>& mul_table() const { return mul_; }
  const std::vector<std::string>& names() const { return names_; }

  /// g a g^-1
  int conj(int g, int a) const { return mul_[mul_[g][a]][inv_[g]]; }

  int pow(int a, long long k) const {
    int n = order_;
    long long ord = element_order(a);
    k %= ord;
    if (k < 0) k += ord;
    int r = 0;
    for (long long i = 0; i < k; ++i) r = mul_[r][a];
    (void)n;
    return r;
  }

  int element_order(int a) const {
    int r = a, k = 1;
    while (r != 0) {
      r = mul_[r][a];
      ++k;
    }
    return k;
  }

  bool has_sqrt() const { return !sqrt_.empty(); }

  /// Unique s with s^2 = a. Defined only for odd order.
  int sqrt_of(int a) const {
    if (sqrt_.empty())
      throw EvenOrderGroup("square root undefined: group order " +
                           std::to_string(order_) + " is even");
    return sqrt_[a];
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul_[a][b] != mul_[b][a]) return false;
    return true;
  }

 private:
  void validate() {
    if (order_ <= 0) throw NotAGroup("empty multiplication table");
    const int n = order_;
    for (auto& row : mul_) {
      if (static_cast<int>(row.size()) != n)
        throw NotAGroup("multiplication table is not square");
      for (int v : row)
        if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
    }
    for (int a = 0; a < n; ++a)
      if (mul_[0][a] != a || mul_[a][0] != a)
        throw NotAGroup("element 0 is not a two-sided identity");
    // Latin square
    for (int a = 0; a < n; ++a) {
      std::vector<char> seen_row(n, 0), seen_col(n, 0);
      for (int b = 0; b < n; ++b) {
        if (seen_row[mul_[a][b]]++) throw NotAGroup("row is not a permutation");
        if (seen_col[mul_[b][a]]++)
          throw NotAGroup("column is not a permutation");
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
            throw NotAGroup("associativity fails at (" + std::to_string(a) +
                            "," + std::to_string(b) + "," + std::to_string(c) +
                            ")");
  }

  void build_inverses() {
    inv_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mul_[a][b] == 0) inv_[a] = b;
    for (int a = 0; a < order_; ++a)
      if (inv_[a] < 0) throw NotAGroup("missing inverse");
  }

  // s = a^((k+1)/2) where k = order of a; k odd divides the odd group order.
  void build_sqrt() {
    sqrt_.assign(order_, 0);
    for (int a = 0; a < order_; ++a) {
      int k = element_order(a);
      int s = 0;
      for (int i = 0; i < (k + 1) / 2; ++i) s = mul_[s][a];
      sqrt_[a] = s;
    }
  }

  int order_ = 0;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> sqrt_;
  std::vector<std::string> names_;
};

/// Constructor descriptor for groups: cyclic, direct product, semidirect
/// product with a cyclic acting factor, or a raw Cayley table.
struct GroupSpec {
  enum class Kind { Cyclic, DirectProduct, Semidirect, RawTable };

  Kind kind = Kind::Cyclic;
  int n = 1;                           // Cyclic
  std::vector<GroupSpec> factors;      // DirectProduct / Semidirect children
  std::vector<int> action;             // Semidirect: image of normal under the
                                       // acting generator, as a permutation
  std::vector<std::vector<int>> table; // RawTable
  std::vector<std::string> names;      // RawTable labels (optional)

  static GroupSpec Cyclic(int n) {
    GroupSpec s;
    s.kind = Kind::Cyclic;
    s.n = n;
    return s;
  }
  static GroupSpec DirectProduct(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = Kind::DirectProduct;
    s.factors = {std::move(a), std::move(b)};
    return s;
  }
  static GroupSpec Semidirect(GroupSpec normal, GroupSpec acting,
                              std::vector<int> action) {
    GroupSpec s;
    s.kind = Kind::Semidirect;
    s.factors = {std::move(normal), std::move(acting)};
    s.action = std::move(action);
    return s;
  }
  static GroupSpec RawTable(std::vector<std::vector<int>> mul,
                            std::vector<std::string> names = {}) {
    GroupSpec s;
    s.kind = Kind::RawTable;
    s.table = std::move(mul);
    s.names = std::move(names);
    return s;
  }
};

inline GroupTable build_group(const GroupSpec& spec);

namespace detail {

inline GroupTable build_cyclic(int n) {
  if (n <= 0) throw NotAGroup("cyclic order must be positive");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    names[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
  }
  return GroupTable(std::move(mul), std::move(names));
}

inline GroupTable build_product(const GroupTable& A, const GroupTable& B) {
  const int na = A.order(), nb = B.order(), n = na * nb;
  auto idx = [nb](int a, int b) { return a * nb + b; };
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1) {
      names[idx(a1, b1)] = "(" + A.names()[a1] + "," + B.names()[b1] + ")";
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          mul[idx(a1, b1)][idx(a2, b2)] = idx(A.mul(a1, a2), B.mul(b1, b2));
    }
  return GroupTable(std::move(mul), std::move(names));
}

/// N x| H with H cyclic; `action` is the automorphism of N applied by the
/// generator of H. Element (h^k, x) gets index k*|N| + x.
inline GroupTable build_semidirect(const GroupTable& N, const GroupTable& H,
                                   const std::vector<int>& action) {
  const int nn = N.order(), nh = H.order();
  if (static_cast<int>(action.size()) != nn)
    throw InvalidAction("action permutation has wrong length");
  {
    std::vector<char> seen(nn, 0);
    for (int v : action) {
      if (v < 0 || v >= nn || seen[v]++)
        throw InvalidAction("action is not a permutation");
    }
  }
  if (action[0] != 0) throw InvalidAction("action does not fix the identity");
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b)
      if (action[N.mul(a, b)] != N.mul(action[a], action[b]))
        throw InvalidAction("action is not an automorphism");
  // H must act through the generator with the right period
  if (H.element_order(nh > 1 ? 1 : 0) != nh)
    throw InvalidAction("acting factor must be cyclic with generator at 1");
  std::vector<std::vector<int>> powers(nh, std::vector<int>(nn));
  std::iota(powers[0].begin(), powers[0].end(), 0);
  for (int k = 1; k < nh; ++k)
    for (int x = 0; x < nn; ++x) powers[k][x] = action[powers[k - 1][x]];
  {
    std::vector<int> full(nn);
    for (int x = 0; x < nn; ++x) full[x] = action[powers[nh - 1][x]];
    for (int x = 0; x < nn; ++x)
      if (full[x] != x)
        throw InvalidAction("action order does not divide the acting order");
  }
  const int n = nn * nh;
  auto idx = [nn](int k, int x) { return k * nn + x; };
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int k1 = 0; k1 < nh; ++k1)
    for (int x1 = 0; x1 < nn; ++x1) {
      names[idx(k1, x1)] =
          "(" + H.names()[k1] + ";" + N.names()[x1] + ")";
      for (int k2 = 0; k2 < nh; ++k2)
        for (int x2 = 0; x2 < nn; ++x2)
          // (h^k1, x1)(h^k2, x2) = (h^(k1+k2), phi^k2(x1) * x2)
          mul[idx(k1, x1)][idx(k2, x2)] =
              idx(H.mul(k1, k2), N.mul(powers[k2][x1], x2));
    }
  return GroupTable(std::move(mul), std::move(names));
}

}  // namespace detail

inline GroupTable build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return detail::build_cyclic(spec.n);
    case GroupSpec::Kind::DirectProduct:
      return detail::build_product(build_group(spec.factors[0]),
                                   build_group(spec.factors[1]));
    case GroupSpec::Kind::Semidirect:
      return detail::build_semidirect(build_group(spec.factors[0]),
                                      build_group(spec.factors[1]),
                                      spec.action);
    case GroupSpec::Kind::RawTable:
      return GroupTable(spec.table, spec.names);
  }
  throw Error("unreachable");
}

inline int sqrt_element(const GroupTable& G, int a) { return G.sqrt_of(a); }

/// Conjugacy classes as disjoint index sets, ordered by smallest member;
/// the identity class {0} comes first.
inline std::vector<std::vector<int>> conjugacy_classes(const GroupTable& G) {
  const int n = G.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> orbit;
    for (int g = 0; g < n; ++g) {
      int c = G.conj(g, a);
      if (cls[c] < 0) {
        cls[c] = static_cast<int>(classes.size());
        orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

/// Per-identity results of the odd-order square-root property suite.
struct SqrtReport {
  bool uniqueness = false;       // squaring is a bijection
  bool inverse_rule = false;     // (sqrt g)^-1 = sqrt(g^-1)
  bool commutes = false;         // g sqrt(g) = sqrt(g) g
  bool inverse_product = false;  // g^-1 sqrt(g) = sqrt(g^-1)
  bool conjugation = false;      // sqrt(g g' g^-1) = g sqrt(g') g^-1
  bool change_of_var_left = false;   // a=g'^-1 g, b=g' g has the stated
                                     // unique solution
  bool change_of_var_right = false;  // a=g g'^-1, b=g g' likewise
  bool all() const {
    return uniqueness && inverse_rule && commutes && inverse_product &&
           conjugation && change_of_var_left && change_of_var_right;
  }
};

inline SqrtReport verify_sqrt_properties(const GroupTable& G) {
  if (!G.has_sqrt())
    throw EvenOrderGroup("square-root suite requires odd group order");
  const int n = G.order();
  SqrtReport r;
  r.uniqueness = r.inverse_rule = r.commutes = r.inverse_product =
      r.conjugation = r.change_of_var_left = r.change_of_var_right = true;
  {
    std::vector<char> hit(n, 0);
    for (int g = 0; g < n; ++g) hit[G.mul(g, g)] = 1;
    for (int g = 0; g < n; ++g)
      if (!hit[g]) r.uniqueness = false;
    for (int g = 0; g < n; ++g) {
      int s = G.sqrt_of(g);
      if (G.mul(s, s) != g) r.uniqueness = false;
      if (G.inv(s) != G.sqrt_of(G.inv(g))) r.inverse_rule = false;
      if (G.mul(g, s) != G.mul(s, g)) r.commutes = false;
      if (G.mul(G.inv(g), s) != G.sqrt_of(G.inv(g))) r.inverse_product = false;
    }
  }
  for (int g = 0; g < n; ++g)
    for (int gp = 0; gp < n; ++gp) {
      if (G.sqrt_of(G.conj(g, gp)) != G.conj(g, G.sqrt_of(gp)))
        r.conjugation = false;
      // a = g'^-1 g, b = g' g  =>  g' = sqrt(b a^-1), g = sqrt(b a^-1) a
      {
        int a = G.mul(G.inv(gp), g), b = G.mul(gp, g);
        int s = G.sqrt_of(G.mul(b, G.inv(a)));
        if (s != gp || G.mul(s, a) != g ||
            G.mul(G.sqrt_of(G.mul(a, G.inv(b))), b) != g)
          r.change_of_var_left = false;
      }
      // a = g g'^-1, b = g g'  =>  g' = sqrt(a^-1 b), g = b sqrt(b^-1 a)
      {
        int a = G.mul(g, G.inv(gp)), b = G.mul(g, gp);
        int s = G.sqrt_of(G.mul(G.inv(a), b));
        if (s != gp || G.mul(b, G.sqrt_of(G.mul(G.inv(b), a))) != g ||
            G.mul(a, s) != g)
          r.change_of_var_right = false;
      }
    }
  return r;
}

inline bool is_abelian(const GroupTable& G) { return G.is_abelian(); }

/// If G is cyclic, returns a relabeling p with p[k] = gen^k for some
/// generator; this is an isomorphism C_N -> G. Empty if no element has
/// full order.
inline std::optional<std::vector<int>> cyclic_isomorphism(const GroupTable& G) {
  const int n = G.order();
  for (int a = 0; a < n; ++a) {
    if (G.element_order(a) == n) {
      std::vector<int> p(n);
      int r = 0;
      for (int k = 0; k < n; ++k) {
        p[k] = r;
        r = G.mul(r, a);
      }
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace wigner

#endif
