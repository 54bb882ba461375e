#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "matchkit/brute_force.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/optimize.hpp"
#include "matchkit/pipeline.hpp"
#include "matchkit/polytope.hpp"
#include "matchkit/represent.hpp"

namespace {

using namespace mk;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string set_text(Mask m, const std::vector<std::string>& names) {
  std::string s = "{";
  for (int i : elements(m)) {
    if (s.size() > 1) s += ',';
    s += names[i];
  }
  return s + "}";
}

std::string pairs_line(const Instance& inst, const Matching& mu) {
  std::string s;
  for (auto [f, w] : pair_list(mu)) {
    if (!s.empty()) s += ' ';
    s += inst.firm_names[f] + "," + inst.worker_names[w];
  }
  return s.empty() ? "(empty)" : s;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

int run_validate(const Instance& inst, int cap) {
  for (int f = 0; f < inst.firms(); ++f)
    if (set_size(inst.firm_acc[f]) > cap)
      throw std::invalid_argument("firm " + inst.firm_names[f] +
                                  " exceeds the acceptable-partner cap");
  for (int w = 0; w < inst.workers(); ++w)
    if (set_size(inst.worker_acc[w]) > cap)
      throw std::invalid_argument("worker " + inst.worker_names[w] +
                                  " exceeds the acceptable-partner cap");
  bool all = true;
  auto report = [&](AgentId a) {
    const auto& name = a.side == Side::Firm ? inst.firm_names[a.index]
                                            : inst.worker_names[a.index];
    const ChoiceSpec& cs = inst.spec(a);
    const char* kind = cs.kind == ChoiceSpec::Kind::MC           ? "MC"
                       : cs.kind == ChoiceSpec::Kind::Responsive ? "RESPONSIVE"
                                                                 : "TABLE";
    std::cout << "AGENT " << name << ' ' << kind;
    auto prop = [&](const char* label, Property p, int quota = 0) {
      bool ok = verify_property(inst, a, p, quota, cap);
      std::cout << ' ' << label << '=' << yn(ok);
      all = all && ok;
    };
    prop("substitutable", Property::Substitutable);
    prop("consistent", Property::Consistent);
    prop("cardinal-monotone", Property::CardinalMonotone);
    prop("path-independent", Property::PathIndependent);
    if (auto q = inst.declared_quota(a))
      prop("quota-filling", Property::QuotaFilling, *q);
    std::cout << '\n';
  };
  for (int f = 0; f < inst.firms(); ++f) report({Side::Firm, f});
  for (int w = 0; w < inst.workers(); ++w) report({Side::Worker, w});
  return all ? 0 : 1;
}

int run_solve(const Instance& inst, const std::string& side, bool trace) {
  Side proposing = side == "firms" ? Side::Firm : Side::Worker;
  Trace tr;
  Matching mu = deferred_acceptance(inst, proposing, nullptr,
                                    trace ? &tr : nullptr);
  if (trace) {
    const auto& pn =
        proposing == Side::Firm ? inst.firm_names : inst.worker_names;
    const auto& an =
        proposing == Side::Firm ? inst.worker_names : inst.firm_names;
    for (int s = 0; s < int(tr.size()); ++s) {
      std::cout << "STEP " << s + 1 << '\n';
      for (int p = 0; p < int(pn.size()); ++p)
        std::cout << "X " << pn[p] << ' ' << set_text(tr[s].x_live[p], an)
                  << '\n';
      for (int a = 0; a < int(an.size()); ++a)
        std::cout << "Y " << an[a] << ' ' << set_text(tr[s].y_held[a], pn)
                  << '\n';
    }
  }
  std::cout << format_matching(inst, mu);
  return 0;
}

int run_poset(const Instance& inst) {
  std::cout << format_poset(inst, rotation_poset(inst));
  return 0;
}

int run_enumerate(const Instance& inst, const std::string& method) {
  std::vector<Matching> all;
  if (method == "poset") {
    all = enumerate_stable(rotation_poset(inst));
  } else {
    all = enumerate_stable_bruteforce(inst);
    PairVec sp(inst.firms(), 0);
    for (const Matching& m : all) sp = pair_union(sp, m);
    // Same order the rotation route produces: coarse key counts the stable
    // pairs the firms would still take, which grows while descending.
    std::vector<std::pair<long long, Matching>> keyed;
    for (const Matching& m : all)
      keyed.emplace_back(pair_count(p_set(inst, m, sp)), m);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return matching_less(a.second, b.second);
              });
    for (size_t i = 0; i < all.size(); ++i) all[i] = keyed[i].second;
  }
  for (size_t i = 0; i < all.size(); ++i) {
    std::cout << "MATCHING " << i + 1 << '\n';
    std::cout << format_matching(inst, all[i]);
  }
  return 0;
}

int run_optimize(const Instance& inst, const std::string& wpath) {
  WeightVector w = parse_weights(inst, slurp(wpath));
  WeightedMatching best = max_weight_stable_matching(inst, w);
  std::cout << format_matching(inst, best.matching);
  std::cout << "VALUE " << best.value << '\n';
  return 0;
}

int run_polytope(const Instance& inst) {
  std::cout << format_lp(inst, extended_formulation(inst));
  return 0;
}

int run_verify(const Instance& inst) {
  std::vector<Matching> brute = enumerate_stable_bruteforce(inst);
  std::vector<Matching> fast = enumerate_stable(rotation_poset(inst));
  std::sort(fast.begin(), fast.end(), matching_less);
  // brute is already pair-list sorted
  std::cout << "stable-matchings poset=" << fast.size()
            << " brute=" << brute.size() << '\n';
  bool ok = fast == brute;
  if (!ok) {
    for (const Matching& m : brute)
      if (std::find(fast.begin(), fast.end(), m) == fast.end())
        std::cout << "MISSING " << pairs_line(inst, m) << '\n';
    for (const Matching& m : fast)
      if (std::find(brute.begin(), brute.end(), m) == brute.end())
        std::cout << "EXTRA " << pairs_line(inst, m) << '\n';
  }
  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable matchings under quota-filling choice functions"};
  app.require_subcommand(1);

  std::string file, side, wfile;
  std::string method = "poset", format = "lp";
  int cap = 10;
  bool trace = false;

  auto* validate =
      app.add_subcommand("validate", "check choice-function properties");
  validate->add_option("file", file)->required();
  validate->add_option("--cap", cap,
                       "largest acceptable-set size checked exhaustively");

  auto* solve = app.add_subcommand("solve", "proposer-optimal stable matching");
  solve->add_option("file", file)->required();
  solve->add_option("--side", side)
      ->required()
      ->check(CLI::IsMember({"firms", "workers"}));
  solve->add_flag("--trace", trace, "print one block per proposal round");

  auto* poset =
      app.add_subcommand("poset", "rotations and their precedence order");
  poset->add_option("file", file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "all stable matchings");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--method", method)
      ->check(CLI::IsMember({"poset", "brute"}));

  auto* optimize =
      app.add_subcommand("optimize", "maximum-weight stable matching");
  optimize->add_option("file", file)->required();
  optimize->add_option("--weights", wfile)->required();

  auto* polytope =
      app.add_subcommand("polytope", "extended formulation of the stable set");
  polytope->add_option("file", file)->required();
  polytope->add_option("--format", format)->check(CLI::IsMember({"lp"}));

  auto* verify =
      app.add_subcommand("verify", "cross-check enumeration by brute force");
  verify->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Instance inst = parse_instance(slurp(file));
    if (validate->parsed()) return run_validate(inst, cap);
    if (solve->parsed()) return run_solve(inst, side, trace);
    if (poset->parsed()) return run_poset(inst);
    if (enumerate->parsed()) return run_enumerate(inst, method);
    if (optimize->parsed()) return run_optimize(inst, wfile);
    if (polytope->parsed()) return run_polytope(inst);
    if (verify->parsed()) return run_verify(inst);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
