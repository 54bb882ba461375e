#include "matchkit/polytope.hpp"

namespace mk {

std::vector<LinearInequality> order_polytope_facets(
    const std::vector<std::vector<bool>>& geq) {
  int k = int(geq.size());
  auto strict = [&](int i, int j) { return i != j && geq[i][j]; };
  std::vector<LinearInequality> out;
  for (int i = 0; i < k; ++i) {
    bool minimal = true;
    for (int l = 0; l < k; ++l)
      if (strict(i, l)) minimal = false;
    if (minimal) out.push_back({LinearInequality::Kind::NonNeg, i, -1});
  }
  for (int i = 0; i < k; ++i) {
    bool maximal = true;
    for (int l = 0; l < k; ++l)
      if (strict(l, i)) maximal = false;
    if (maximal) out.push_back({LinearInequality::Kind::Upper, i, -1});
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!strict(i, j)) continue;
      bool cover = true;
      for (int l = 0; l < k && cover; ++l)
        if (strict(i, l) && strict(l, j)) cover = false;
      if (cover) out.push_back({LinearInequality::Kind::Precedence, i, j});
    }
  return out;
}

ExtendedFormulation extended_formulation(const Instance& inst) {
  RotationPoset poset = rotation_poset(inst);
  ExtendedFormulation ef;
  ef.map = affine_map(poset);
  ef.facets = order_polytope_facets(poset.geq);
  ef.rotations = int(poset.rotations.size());
  return ef;
}

std::string format_lp(const Instance& inst, const ExtendedFormulation& ef) {
  auto xvar = [&](int e) {
    auto [f, w] = ef.map.pairs[e];
    return "x_" + inst.firm_names[f] + "_" + inst.worker_names[w];
  };
  auto yvar = [](int r) { return "y_r" + std::to_string(r + 1); };

  std::string out = "max 0\nsubject to\n";
  for (int e = 0; e < int(ef.map.pairs.size()); ++e) {
    out += "e" + xvar(e).substr(1) + ": " + xvar(e);
    for (int r = 0; r < ef.rotations; ++r) {
      if (ef.map.a[e][r] == 1)
        out += " - " + yvar(r);
      else if (ef.map.a[e][r] == -1)
        out += " + " + yvar(r);
    }
    out += " = " + std::to_string(ef.map.x0[e]) + "\n";
  }
  for (const auto& f : ef.facets) {
    switch (f.kind) {
      case LinearInequality::Kind::NonNeg:
        out += "n_r" + std::to_string(f.i + 1) + ": " + yvar(f.i) + " >= 0\n";
        break;
      case LinearInequality::Kind::Upper:
        out += "u_r" + std::to_string(f.i + 1) + ": " + yvar(f.i) + " <= 1\n";
        break;
      case LinearInequality::Kind::Precedence:
        out += "p_r" + std::to_string(f.i + 1) + "_r" + std::to_string(f.j + 1) +
               ": " + yvar(f.i) + " - " + yvar(f.j) + " >= 0\n";
        break;
    }
  }
  out += "bounds\n";
  for (int e = 0; e < int(ef.map.pairs.size()); ++e) out += xvar(e) + " free\n";
  for (int r = 0; r < ef.rotations; ++r) out += yvar(r) + " free\n";
  out += "end\n";
  return out;
}

}  // namespace mk
