// Command-line front end: group construction and inspection, irrep
// computation, Wigner distribution evaluation, and the full identity suite.

#include <iostream>

#include "CLI11.hpp"
#include "wigner/json_io.hpp"
#include "wigner/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// --group accepts a catalog name or a JSON file path
wigner::GroupTable resolve_group(const std::string& arg) {
  if (const wigner::CatalogEntry* e = wigner::catalog_find(arg))
    return wigner::build_group(e->spec);
  return wigner::group_from_json(wigner::load_json_file(arg));
}

void report_to_json(const wigner::VerificationReport& rep,
                    nlohmann::json& out) {
  out = nlohmann::json::array();
  for (const auto& r : rep.rows)
    out.push_back({{"group", r.group},
                   {"identity", r.identity},
                   {"tag", r.tag},
                   {"residual", r.residual},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner distributions on finite-group phase spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  double tolerance = 0.0;  // 0 = per-group defaults
  app.add_option("--seed", seed, "RNG seed for random-state suites");
  app.add_option("--tolerance", tolerance,
                 "override the per-group residual tolerance");

  // ---- group -------------------------------------------------------------
  auto* grp = app.add_subcommand("group", "build and inspect groups");
  grp->require_subcommand(1);
  std::string gm_spec, gm_out;
  auto* gmake = grp->add_subcommand("make", "build a group from an expression");
  gmake->add_option("--spec", gm_spec,
                    "group expression, e.g. C9, C3xC5, F21, C7:C3:2")
      ->required();
  gmake->add_option("--out", gm_out, "output JSON path (default stdout)");
  std::string gv_file;
  auto* gverify = grp->add_subcommand("verify", "validate a group JSON file");
  gverify->add_option("file", gv_file)->required();
  std::string gs_file;
  int gs_elem = 0;
  auto* gsqrt = grp->add_subcommand("sqrt", "square root of an element");
  gsqrt->add_option("file", gs_file)->required();
  gsqrt->add_option("--element", gs_elem)->required();

  // ---- irreps ------------------------------------------------------------
  auto* irr = app.add_subcommand("irreps", "irreducible representations");
  irr->require_subcommand(1);
  std::string ic_group, ic_out;
  auto* icompute = irr->add_subcommand("compute", "compute all unitary irreps");
  icompute->add_option("group", ic_group, "catalog name or group JSON path")
      ->required();
  icompute->add_option("--out", ic_out, "output JSON path (default stdout)");
  std::string iv_file;
  auto* iverify =
      irr->add_subcommand("verify", "residual table for an irrep dump");
  iverify->add_option("file", iv_file)->required();

  // ---- wigner ------------------------------------------------------------
  auto* wig = app.add_subcommand("wigner", "Wigner distributions");
  wig->require_subcommand(1);
  std::string wc_group, wc_state, wc_variant = "I", wc_out, wc_csv;
  auto* wcompute = wig->add_subcommand("compute", "evaluate a distribution");
  wcompute->add_option("--group", wc_group)->required();
  wcompute->add_option("--state", wc_state, "state JSON ([re,im] pairs)")
      ->required();
  wcompute->add_option("--variant", wc_variant, "I, II, or extended");
  wcompute->add_option("--out", wc_out, "output JSON path (default stdout)");
  wcompute->add_option("--csv", wc_csv, "also write diagonal entries as CSV");
  std::string wv_group;
  int wv_trials = 100;
  auto* wverify =
      wig->add_subcommand("verify", "run the invariant suite on one group");
  wverify->add_option("--group", wv_group)->required();
  wverify->add_option("--trials", wv_trials);
  bool wv_json = false;
  wverify->add_flag("--json", wv_json, "machine-readable report");
  std::string wm_group, wm_state;
  auto* wmarg = wig->add_subcommand("marginals", "position/momentum marginals");
  wmarg->add_option("--group", wm_group)->required();
  wmarg->add_option("--state", wm_state)->required();
  std::string wp_group;
  int wp_g = 0, wp_j = 0, wp_m = 0, wp_mp = 0;
  auto* wppo = wig->add_subcommand("ppo", "print one phase point operator");
  wppo->add_option("--group", wp_group)->required();
  wppo->add_option("--g", wp_g)->required();
  wppo->add_option("--j", wp_j)->required();
  wppo->add_option("--m", wp_m);
  wppo->add_option("--mp", wp_mp);

  // ---- catalog / verify-all ---------------------------------------------
  auto* cat = app.add_subcommand("catalog", "built-in group catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog groups");
  auto* vall =
      app.add_subcommand("verify-all", "full identity suite over the catalog");
  int va_trials = 100;
  bool va_json = false;
  vall->add_option("--trials", va_trials, "random states per group");
  vall->add_flag("--json", va_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    wigner::SuiteOptions opt;
    opt.seed = seed;
    if (tolerance > 0.0) {
      opt.tol_abelian = tolerance;
      opt.tol_nonabelian = tolerance;
    }

    if (gmake->parsed()) {
      wigner::GroupTable G =
          wigner::build_group(wigner::parse_group_expr(gm_spec));
      nlohmann::json j = wigner::group_to_json(G);
      if (gm_out.empty())
        std::cout << j.dump(2) << '\n';
      else
        wigner::save_json_file(gm_out, j);
      return kExitOk;
    }
    if (gverify->parsed()) {
      wigner::GroupTable G =
          wigner::group_from_json(wigner::load_json_file(gv_file));
      std::cout << "valid group of order " << G.order()
                << (G.is_abelian() ? " (abelian" : " (nonabelian")
                << (G.order() % 2 ? ", odd)" : ", even)") << '\n';
      auto classes = wigner::conjugacy_classes(G);
      std::cout << classes.size() << " conjugacy classes\n";
      return kExitOk;
    }
    if (gsqrt->parsed()) {
      wigner::GroupTable G =
          wigner::group_from_json(wigner::load_json_file(gs_file));
      if (gs_elem < 0 || gs_elem >= G.order())
        throw wigner::IoError("element index out of range");
      int s = G.sqrt_of(gs_elem);
      std::cout << "sqrt(" << G.names()[gs_elem] << ") = " << G.names()[s]
                << " (index " << s << ")\n";
      return kExitOk;
    }
    if (icompute->parsed()) {
      wigner::IrrepSet S = wigner::compute_irreps(resolve_group(ic_group));
      nlohmann::json j = wigner::irreps_to_json(S);
      if (ic_out.empty())
        std::cout << j.dump(2) << '\n';
      else
        wigner::save_json_file(ic_out, j);
      return kExitOk;
    }
    if (iverify->parsed()) {
      wigner::IrrepSet S =
          wigner::irreps_from_json(wigner::load_json_file(iv_file));
      wigner::IrrepResiduals r = wigner::verify_irreps(S);
      double tol = tolerance > 0.0
                       ? tolerance
                       : (S.group.is_abelian() ? 1e-12 : 1e-9);
      std::cout << "composition   (2.6a): " << r.composition << '\n'
                << "unitarity     (2.6b): " << r.unitarity << '\n'
                << "orthogonality (2.6c): " << r.orthogonality << '\n'
                << "completeness  (2.6d): " << r.completeness << '\n'
                << "dim square sum (2.6e): "
                << (r.dims_square_sum ? "exact" : "VIOLATED") << '\n'
                << "identity at e: " << r.identity_at_e << '\n';
      bool ok = r.dims_square_sum && r.max() <= tol;
      std::cout << (ok ? "PASS" : "FAIL") << " at tolerance " << tol << '\n';
      return ok ? kExitOk : kExitVerifyFail;
    }
    if (wcompute->parsed()) {
      wigner::GroupTable G = resolve_group(wc_group);
      wigner::IrrepSet S = wigner::compute_irreps(G);
      wigner::StateVector psi =
          wigner::state_from_json(wigner::load_json_file(wc_state));
      if (psi.size() != G.order())
        throw wigner::IoError("state length disagrees with group order");
      nlohmann::json out;
      wigner::WignerTensor W;
      if (wc_variant == "I" || wc_variant == "II") {
        W = wc_variant == "I" ? wigner::wigner_I(psi, S)
                              : wigner::wigner_II(psi, S);
        out = wigner::wigner_to_json(W);
      } else if (wc_variant == "extended") {
        out = wigner::extended_to_json(wigner::extended_wigner(psi, S));
      } else {
        std::cerr << "unknown variant: " << wc_variant << '\n';
        return kExitUsage;
      }
      if (wc_out.empty())
        std::cout << out.dump(2) << '\n';
      else
        wigner::save_json_file(wc_out, out);
      if (!wc_csv.empty()) {
        if (wc_variant == "extended")
          throw wigner::IoError("CSV export is for variants I and II");
        wigner::save_text_file(wc_csv, wigner::wigner_diagonal_csv(W, G));
      }
      return kExitOk;
    }
    if (wverify->parsed()) {
      wigner::GroupTable G = resolve_group(wv_group);
      opt.trials = wv_trials;
      wigner::VerificationReport rep;
      wigner::verify_group(wv_group, G, rep, opt);
      if (wv_json) {
        nlohmann::json j;
        report_to_json(rep, j);
        std::cout << j.dump(2) << '\n';
      } else {
        wigner::print_report(rep, std::cout);
      }
      return rep.all_passed() ? kExitOk : kExitVerifyFail;
    }
    if (wmarg->parsed()) {
      wigner::GroupTable G = resolve_group(wm_group);
      wigner::IrrepSet S = wigner::compute_irreps(G);
      wigner::MomentumBasis B = wigner::momentum_basis(S);
      wigner::StateVector psi =
          wigner::state_from_json(wigner::load_json_file(wm_state));
      if (psi.size() != G.order())
        throw wigner::IoError("state length disagrees with group order");
      wigner::WignerTensor W = wigner::wigner_I(psi, S);
      auto pos = wigner::marginal_position(W, S);
      auto mom = wigner::marginal_momentum(W, S);
      nlohmann::json out;
      out["position"] = pos;
      out["momentum"] = nlohmann::json::array();
      for (const auto& M : mom)
        out["momentum"].push_back(wigner::detail::matrix_to_json(M));
      std::cout << out.dump(2) << '\n';
      return kExitOk;
    }
    if (wppo->parsed()) {
      wigner::GroupTable G = resolve_group(wp_group);
      wigner::IrrepSet S = wigner::compute_irreps(G);
      if (wp_g < 0 || wp_g >= G.order() || wp_j < 0 ||
          wp_j >= S.num_irreps() || wp_m < 0 || wp_m >= S.dim(wp_j) ||
          wp_mp < 0 || wp_mp >= S.dim(wp_j))
        throw wigner::IoError("phase-space index out of range");
      wigner::Matrix op =
          wigner::phase_point_operator(S, wp_g, wp_j, wp_m, wp_mp);
      std::cout << wigner::detail::matrix_to_json(op).dump(2) << '\n';
      return kExitOk;
    }
    if (cat->parsed()) {
      std::cout << std::left << std::setw(10) << "name" << std::setw(8)
                << "order" << "abelian\n";
      for (const auto& e : wigner::catalog())
        std::cout << std::left << std::setw(10) << e.name << std::setw(8)
                  << e.order << (e.abelian ? "yes" : "no") << '\n';
      return kExitOk;
    }
    if (vall->parsed()) {
      opt.trials = va_trials;
      wigner::VerificationReport rep = wigner::verify_all(opt);
      if (va_json) {
        nlohmann::json j;
        report_to_json(rep, j);
        std::cout << j.dump(2) << '\n';
      } else {
        wigner::print_report(rep, std::cout);
      }
      return rep.all_passed() ? kExitOk : kExitVerifyFail;
    }
  } catch (const wigner::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const wigner::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
