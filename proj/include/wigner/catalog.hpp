#ifndef WIGNER_CATALOG_HPP
#define WIGNER_CATALOG_HPP

#include <cctype>
#include <map>

#include "wigner/group.hpp"

namespace wigner {

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
  int order = 0;
  bool abelian = true;
};

namespace detail {

/// Heisenberg group of order 27: triples (a, b, c) over Z_3 with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
inline GroupSpec heisenberg27_spec() {
  auto idx = [](int a, int b, int c) { return (a * 3 + b) * 3 + c; };
  std::vector<std::vector<int>> mul(27, std::vector<int>(27));
  std::vector<std::string> names(27);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        names[idx(a, b, c)] = "(" + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(c) +
                              ")";
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2)
              mul[idx(a, b, c)][idx(a2, b2, c2)] =
                  idx((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
      }
  return GroupSpec::RawTable(std::move(mul), std::move(names));
}

/// Frobenius group of order 21 as C_7 x| C_3 with the generator of C_3
/// acting by x -> 2x mod 7.
inline GroupSpec f21_spec() {
  std::vector<int> action(7);
  for (int x = 0; x < 7; ++x) action[x] = (2 * x) % 7;
  return GroupSpec::Semidirect(GroupSpec::Cyclic(7), GroupSpec::Cyclic(3),
                               std::move(action));
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto add = [&v](std::string name, GroupSpec spec, int order,
                    bool abelian) {
      v.push_back({std::move(name), std::move(spec), order, abelian});
    };
    add("C3", GroupSpec::Cyclic(3), 3, true);
    add("C5", GroupSpec::Cyclic(5), 5, true);
    add("C7", GroupSpec::Cyclic(7), 7, true);
    add("C9", GroupSpec::Cyclic(9), 9, true);
    add("C3xC3",
        GroupSpec::DirectProduct(GroupSpec::Cyclic(3), GroupSpec::Cyclic(3)),
        9, true);
    add("C15", GroupSpec::Cyclic(15), 15, true);
    add("C3xC5",
        GroupSpec::DirectProduct(GroupSpec::Cyclic(3), GroupSpec::Cyclic(5)),
        15, true);
    add("F21", detail::f21_spec(), 21, false);
    add("Heis27", detail::heisenberg27_spec(), 27, false);
    return v;
  }();
  return entries;
}

inline const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

/// Parses group expressions: "C<n>", "<expr>x<expr>" (direct product),
/// catalog names ("F21", "Heis27"), and "C<n>:C<m>:<k>" for the semidirect
/// product with generator action x -> k x mod n.
inline GroupSpec parse_group_expr(const std::string& expr) {
  // direct product at top level
  auto xpos = expr.find('x');
  if (xpos != std::string::npos)
    return GroupSpec::DirectProduct(parse_group_expr(expr.substr(0, xpos)),
                                    parse_group_expr(expr.substr(xpos + 1)));
  auto colon = expr.find(':');
  if (colon != std::string::npos) {
    auto colon2 = expr.find(':', colon + 1);
    if (colon2 == std::string::npos)
      throw IoError("semidirect expression needs C<n>:C<m>:<k>");
    GroupSpec normal = parse_group_expr(expr.substr(0, colon));
    GroupSpec acting =
        parse_group_expr(expr.substr(colon + 1, colon2 - colon - 1));
    if (normal.kind != GroupSpec::Kind::Cyclic ||
        acting.kind != GroupSpec::Kind::Cyclic)
      throw IoError("semidirect expression factors must be cyclic");
    int k = std::stoi(expr.substr(colon2 + 1));
    std::vector<int> action(normal.n);
    for (int i = 0; i < normal.n; ++i)
      action[i] = static_cast<int>((1LL * k * i) % normal.n);
    return GroupSpec::Semidirect(std::move(normal), std::move(acting),
                                 std::move(action));
  }
  if (const CatalogEntry* e = catalog_find(expr)) return e->spec;
  if (expr.size() > 1 && (expr[0] == 'C' || expr[0] == 'c')) {
    for (size_t i = 1; i < expr.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(expr[i])))
        throw IoError("cannot parse group expression: " + expr);
    return GroupSpec::Cyclic(std::stoi(expr.substr(1)));
  }
  throw IoError("cannot parse group expression: " + expr);
}

}  // namespace wigner

#endif
