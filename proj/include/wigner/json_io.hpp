#ifndef WIGNER_JSON_IO_HPP
#define WIGNER_JSON_IO_HPP

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wigner/wigner.hpp"

namespace wigner {

using nlohmann::json;

namespace detail {

inline json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw IoError("expected a [re, im] pair");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw IoError("expected a matrix");
  Matrix m(j.size(), j[0].size());
  for (size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != j[0].size()) throw IoError("ragged matrix rows");
    for (size_t c = 0; c < j[r].size(); ++c)
      m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

}  // namespace detail

inline json group_to_json(const GroupTable& G) {
  return json{{"order", G.order()},
              {"names", G.names()},
              {"mul", G.mul_table()}};
}

inline GroupTable group_from_json(const json& j) {
  if (!j.contains("order") || !j.contains("mul"))
    throw IoError("group JSON needs 'order' and 'mul'");
  auto mul = j["mul"].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(mul.size()) != j["order"].get<int>())
    throw IoError("group JSON order disagrees with table size");
  std::vector<std::string> names;
  if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
  return GroupTable(std::move(mul), std::move(names));  // validates fully
}

inline json state_to_json(const StateVector& psi) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    arr.push_back(detail::complex_to_json(psi(i)));
  return arr;
}

inline StateVector state_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw IoError("state JSON must be an array");
  StateVector psi(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    psi(i) = detail::complex_from_json(j[i]);
  return psi;
}

inline json irreps_to_json(const IrrepSet& S) {
  json irreps = json::array();
  for (int j = 0; j < S.num_irreps(); ++j) {
    json mats = json::array();
    for (int g = 0; g < S.order(); ++g)
      mats.push_back(detail::matrix_to_json(S.D(j, g)));
    irreps.push_back(
        json{{"j", j}, {"dim", S.dim(j)}, {"matrices", std::move(mats)}});
  }
  return json{{"group", group_to_json(S.group)}, {"irreps", std::move(irreps)}};
}

inline IrrepSet irreps_from_json(const json& j) {
  if (!j.contains("group") || !j.contains("irreps"))
    throw IoError("irreps JSON needs 'group' and 'irreps'");
  IrrepSet S;
  S.group = group_from_json(j["group"]);
  for (const auto& ij : j["irreps"]) {
    Irrep ir;
    ir.dim = ij["dim"].get<int>();
    for (const auto& mj : ij["matrices"])
      ir.mats.push_back(detail::matrix_from_json(mj));
    if (static_cast<int>(ir.mats.size()) != S.order())
      throw IoError("irrep matrix count disagrees with group order");
    S.irreps.push_back(std::move(ir));
  }
  return S;
}

inline json wigner_to_json(const WignerTensor& W) {
  json data = json::object();
  for (int g = 0; g < W.order; ++g) {
    json per_g = json::object();
    for (size_t j = 0; j < W.data[g].size(); ++j)
      per_g[std::to_string(j)] = detail::matrix_to_json(W.data[g][j]);
    data[std::to_string(g)] = std::move(per_g);
  }
  return json{{"variant", variant_name(W.variant)},
              {"order", W.order},
              {"data", std::move(data)}};
}

inline WignerTensor wigner_from_json(const json& j) {
  WignerTensor W;
  std::string v = j.at("variant").get<std::string>();
  if (v == "I")
    W.variant = Variant::I;
  else if (v == "II")
    W.variant = Variant::II;
  else
    throw IoError("unknown Wigner variant: " + v);
  W.order = j.at("order").get<int>();
  W.data.assign(W.order, {});
  const json& data = j.at("data");
  for (int g = 0; g < W.order; ++g) {
    const json& per_g = data.at(std::to_string(g));
    for (size_t jj = 0; jj < per_g.size(); ++jj)
      W.data[g].push_back(
          detail::matrix_from_json(per_g.at(std::to_string(jj))));
  }
  return W;
}

inline json extended_to_json(const ExtendedWignerTensor& w) {
  json data = json::object();
  for (int g = 0; g < w.order; ++g) {
    json per_g = json::object();
    for (size_t j = 0; j < w.data[g].size(); ++j) {
      json flat = json::array();
      for (cplx z : w.data[g][j]) flat.push_back(detail::complex_to_json(z));
      per_g[std::to_string(j)] = std::move(flat);
    }
    data[std::to_string(g)] = std::move(per_g);
  }
  return json{{"variant", "extended"},
              {"order", w.order},
              {"dims", w.dims},
              {"data", std::move(data)}};
}

/// Diagonal (real quasi-probability) entries as CSV: one row per phase
/// space point (g, j, m).
inline std::string wigner_diagonal_csv(const WignerTensor& W,
                                       const GroupTable& G) {
  std::ostringstream out;
  out << "g,element,j,m,value\n";
  out.precision(17);
  for (int g = 0; g < W.order; ++g)
    for (size_t j = 0; j < W.data[g].size(); ++j)
      for (Eigen::Index m = 0; m < W.data[g][j].rows(); ++m)
        out << g << ',' << G.names()[g] << ',' << j << ',' << m << ','
            << W.data[g][j](m, m).real() << '\n';
  return out.str();
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << '\n';
}

inline void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

}  // namespace wigner

#endif
