#pragma once

#include <string>

#include "torickit/cli.hpp"

namespace fixtures {

using namespace torickit;

inline std::string path(const std::string& name) { return std::string(TORICKIT_FIXTURE_DIR) + "/" + name; }

inline IntVec v(std::initializer_list<long> xs) { return make_int_vec(xs); }

inline LatticePolygon P() {
  return validate_fano({v({2, 1}), v({1, 2}), v({-1, 2}), v({-2, -1}), v({-1, -2}), v({1, -2})});
}
inline LatticePolygon P2() { return validate_fano({v({1, 0}), v({0, 1}), v({-1, -1})}); }
inline LatticePolygon square() { return validate_fano({v({1, 1}), v({-1, 1}), v({-1, -1}), v({1, -1})}); }
inline LatticePolygon diamond() { return validate_fano({v({1, 0}), v({0, 1}), v({-1, 0}), v({0, -1})}); }

inline const IntMat& expected_weights() {
  static const IntMat w = make_int_mat({{0, 0, 1, 1, 1, 1}, {0, 1, 3, 1, 0, 6}, {1, 0, 1, 3, 6, 0}});
  return w;
}

inline io::ScaffoldingInput scaffolding_input() {
  return io::scaffolding_from_json(cli::load_file(path("paper-scaffolding.json")).json);
}

inline const cli::ScaffoldRun& run() {
  static const cli::ScaffoldRun r = cli::run_scaffold(scaffolding_input());
  return r;
}

inline ParamLaurent f() { return io::laurent_from_json(cli::load_file(path("paper-f.json")).json); }

inline CoxMonomial mono(const CoxPresentation& cox, std::initializer_list<std::pair<const char*, unsigned>> powers) {
  CoxMonomial e(cox.size(), 0);
  for (const auto& [name, k] : powers) e[cox.index_of(name)] = k;
  return e;
}

}  // namespace fixtures
