#include "matchkit/instance.hpp"

#include <algorithm>
#include <sstream>

namespace mk {

namespace {

struct Parser {
  std::map<std::string, AgentId> by_name;
  Instance inst;
  bool saw_firms = false, saw_workers = false;
  int line_no = 0;
  // agent currently receiving PREF/CHOICE lines, if any
  std::optional<AgentId> open_cf;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_no, msg);
  }

  AgentId lookup(const std::string& name) const {
    auto it = by_name.find(name);
    if (it == by_name.end()) fail("unknown agent '" + name + "'");
    return it->second;
  }

  ChoiceSpec& spec(AgentId a) {
    return a.side == Side::Firm ? inst.firm_cf[a.index]
                                : inst.worker_cf[a.index];
  }

  void declare(Side side, const std::vector<std::string>& names) {
    if (names.empty()) fail("empty agent list");
    for (const std::string& n : names) {
      if (by_name.count(n)) fail("duplicate agent '" + n + "'");
      auto& list = side == Side::Firm ? inst.firm_names : inst.worker_names;
      if (list.size() == 64) fail("more than 64 agents on one side");
      by_name[n] = {side, int(list.size())};
      list.push_back(n);
    }
  }

  void handle_cf(std::istringstream& ss) {
    std::string name, kind;
    if (!(ss >> name >> kind)) fail("CF needs an agent and a kind");
    AgentId a = lookup(name);
    ChoiceSpec& cs = spec(a);
    if (seen_cf(a)) fail("second CF for agent '" + name + "'");
    mark_cf(a);
    std::optional<int> quota;
    std::string tok;
    if (kind == "MC") {
      cs.kind = ChoiceSpec::Kind::MC;
      if (ss >> tok) {
        if (tok != "QUOTA") fail("expected QUOTA, got '" + tok + "'");
        quota = read_quota(ss);
      }
    } else if (kind == "RESPONSIVE") {
      cs.kind = ChoiceSpec::Kind::Responsive;
      if (!(ss >> tok) || tok != "QUOTA") fail("RESPONSIVE requires QUOTA");
      quota = read_quota(ss);
      cs.responsive_quota = *quota;
    } else if (kind == "TABLE") {
      cs.kind = ChoiceSpec::Kind::Table;
    } else {
      fail("unknown choice kind '" + kind + "'");
    }
    if (ss >> tok) fail("trailing tokens after CF");
    auto& q = a.side == Side::Firm ? inst.firm_quota : inst.worker_quota;
    q[a.index] = quota;
    open_cf = a;
  }

  int read_quota(std::istringstream& ss) {
    int q;
    if (!(ss >> q) || q < 1) fail("QUOTA requires a positive integer");
    return q;
  }

  std::vector<bool> firm_cf_seen, worker_cf_seen;
  bool seen_cf(AgentId a) const {
    return a.side == Side::Firm ? firm_cf_seen[a.index]
                                : worker_cf_seen[a.index];
  }
  void mark_cf(AgentId a) {
    (a.side == Side::Firm ? firm_cf_seen : worker_cf_seen)[a.index] = true;
  }

  void handle_pref(std::istringstream& ss) {
    std::string name;
    if (!(ss >> name)) fail("PREF needs an agent");
    AgentId a = lookup(name);
    if (!open_cf || open_cf->side != a.side || open_cf->index != a.index)
      fail("PREF for '" + name + "' outside its CF block");
    ChoiceSpec& cs = spec(a);
    if (cs.kind == ChoiceSpec::Kind::Table) fail("PREF under TABLE kind");
    if (cs.kind == ChoiceSpec::Kind::Responsive && !cs.orders.empty())
      fail("RESPONSIVE takes exactly one PREF line");
    std::vector<int> order;
    Mask seen = 0;
    std::string partner;
    while (ss >> partner) {
      AgentId p = lookup(partner);
      if (p.side == a.side) fail("'" + partner + "' is on the same side");
      if (has(seen, p.index)) fail("partner '" + partner + "' repeated");
      seen |= bit(p.index);
      order.push_back(p.index);
    }
    if (order.empty()) fail("empty PREF line");
    if (!cs.orders.empty()) {
      Mask first = 0;
      for (int i : cs.orders.front()) first |= bit(i);
      if (first != seen)
        fail("PREF lines of '" + name + "' list different partner sets");
    }
    cs.orders.push_back(order);
  }

  void handle_choice(std::istringstream& ss) {
    std::string name;
    if (!(ss >> name)) fail("CHOICE needs an agent");
    AgentId a = lookup(name);
    if (!open_cf || open_cf->side != a.side || open_cf->index != a.index)
      fail("CHOICE for '" + name + "' outside its CF block");
    ChoiceSpec& cs = spec(a);
    if (cs.kind != ChoiceSpec::Kind::Table) fail("CHOICE under non-TABLE kind");
    std::string rest;
    std::getline(ss, rest);
    auto arrow = rest.find("->");
    if (arrow == std::string::npos) fail("CHOICE needs '->'");
    Mask key = parse_set(rest.substr(0, arrow), a);
    Mask val = parse_set(rest.substr(arrow + 2), a);
    if (val & ~key) fail("chosen set not a subset of the offered set");
    if (cs.table.count(key)) fail("duplicate CHOICE for the same set");
    cs.table[key] = val;
  }

  Mask parse_set(const std::string& text, AgentId a) {
    auto l = text.find('{'), r = text.find('}');
    if (l == std::string::npos || r == std::string::npos || r < l)
      fail("expected a {...} set");
    Mask m = 0;
    std::string body = text.substr(l + 1, r - l - 1);
    std::istringstream bs(body);
    std::string item;
    while (std::getline(bs, item, ',')) {
      // trim
      size_t b = item.find_first_not_of(" \t");
      size_t e = item.find_last_not_of(" \t");
      if (b == std::string::npos) continue;
      item = item.substr(b, e - b + 1);
      AgentId p = lookup(item);
      if (p.side == a.side) fail("'" + item + "' is on the same side");
      if (has(m, p.index)) fail("partner '" + item + "' repeated");
      m |= bit(p.index);
    }
    return m;
  }

  void finalize() {
    for (int f = 0; f < inst.firms(); ++f)
      if (inst.firm_cf[f].kind == ChoiceSpec::Kind::Responsive &&
          inst.firm_cf[f].orders.empty())
        throw ParseError(line_no, "RESPONSIVE agent '" + inst.firm_names[f] +
                                      "' has no PREF line");
    for (int w = 0; w < inst.workers(); ++w)
      if (inst.worker_cf[w].kind == ChoiceSpec::Kind::Responsive &&
          inst.worker_cf[w].orders.empty())
        throw ParseError(line_no, "RESPONSIVE agent '" + inst.worker_names[w] +
                                      "' has no PREF line");
    // acceptability: union of order entries / table keys, per agent
    inst.firm_acc.assign(inst.firms(), 0);
    inst.worker_acc.assign(inst.workers(), 0);
    auto accumulate = [&](Side side) {
      int n = side == Side::Firm ? inst.firms() : inst.workers();
      auto& cfs = side == Side::Firm ? inst.firm_cf : inst.worker_cf;
      auto& acc = side == Side::Firm ? inst.firm_acc : inst.worker_acc;
      for (int i = 0; i < n; ++i) {
        for (const auto& o : cfs[i].orders)
          for (int p : o) acc[i] |= bit(p);
        for (const auto& [key, val] : cfs[i].table) acc[i] |= key;
      }
    };
    accumulate(Side::Firm);
    accumulate(Side::Worker);
    for (int f = 0; f < inst.firms(); ++f)
      for (int w = 0; w < inst.workers(); ++w)
        if (has(inst.firm_acc[f], w) != has(inst.worker_acc[w], f))
          throw ParseError(
              line_no, "non-mutual acceptability between '" +
                           inst.firm_names[f] + "' and '" +
                           inst.worker_names[w] + "'");
  }
};

}  // namespace

Instance parse_instance(const std::string& text) {
  Parser p;
  std::istringstream in(text);
  std::string raw;
  bool saw_header = false;
  while (std::getline(in, raw)) {
    ++p.line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    std::string word;
    if (!(ss >> word)) continue;
    if (!saw_header) {
      std::string v;
      if (word != "instance" || !(ss >> v) || v != "v1")
        p.fail("first line must be 'instance v1'");
      saw_header = true;
      continue;
    }
    if (word == "FIRMS" || word == "WORKERS") {
      bool& seen = word == "FIRMS" ? p.saw_firms : p.saw_workers;
      if (seen) p.fail(word + " declared twice");
      seen = true;
      std::vector<std::string> names;
      std::string n;
      while (ss >> n) names.push_back(n);
      p.declare(word == "FIRMS" ? Side::Firm : Side::Worker, names);
      p.inst.firm_cf.resize(p.inst.firms());
      p.inst.worker_cf.resize(p.inst.workers());
      p.inst.firm_quota.resize(p.inst.firms());
      p.inst.worker_quota.resize(p.inst.workers());
      p.firm_cf_seen.resize(p.inst.firms());
      p.worker_cf_seen.resize(p.inst.workers());
    } else if (word == "CF") {
      if (!p.saw_firms || !p.saw_workers)
        p.fail("CF before FIRMS/WORKERS declarations");
      p.handle_cf(ss);
    } else if (word == "PREF") {
      p.handle_pref(ss);
    } else if (word == "CHOICE") {
      p.handle_choice(ss);
    } else {
      p.fail("unknown directive '" + word + "'");
    }
  }
  if (!saw_header) throw ParseError(1, "first line must be 'instance v1'");
  if (!p.saw_firms || !p.saw_workers)
    throw ParseError(p.line_no, "missing FIRMS or WORKERS declaration");
  p.finalize();
  return p.inst;
}

Mask choose(const Instance& inst, AgentId a, Mask s, EvalCounter* evals) {
  if (s & ~inst.acceptable(a))
    throw std::invalid_argument("choose: set contains unacceptable partners");
  if (evals) ++evals->count;
  const ChoiceSpec& cs = inst.spec(a);
  switch (cs.kind) {
    case ChoiceSpec::Kind::MC: {
      Mask out = 0;
      for (const auto& order : cs.orders)
        for (int x : order)
          if (has(s, x)) {
            out |= bit(x);
            break;
          }
      return out;
    }
    case ChoiceSpec::Kind::Responsive: {
      Mask out = 0;
      int taken = 0;
      for (int x : cs.orders.front()) {
        if (taken == cs.responsive_quota) break;
        if (has(s, x)) {
          out |= bit(x);
          ++taken;
        }
      }
      return out;
    }
    case ChoiceSpec::Kind::Table: {
      if (s == 0) return 0;  // forced by C(S) ⊆ S; tables need not list it
      auto it = cs.table.find(s);
      if (it == cs.table.end())
        throw std::invalid_argument("choose: set missing from choice table");
      return it->second;
    }
  }
  return 0;
}

bool verify_property(const Instance& inst, AgentId a, Property p, int quota,
                     int cap) {
  Mask u = inst.acceptable(a);
  if (set_size(u) > cap)
    throw std::invalid_argument(
        "verify_property: agent exceeds the acceptable-partner cap");
  auto c = [&](Mask s) { return choose(inst, a, s); };
  // iterate all subsets of u, including empty and u itself
  auto for_subsets = [&](auto&& body) {
    for (Mask s = 0;; s = (s - u) & u) {
      if (!body(s)) return false;
      if (s == u) break;
    }
    return true;
  };
  switch (p) {
    case Property::Substitutable:
      // chosen partners stay chosen in any subset that retains them
      return for_subsets([&](Mask s) {
        Mask cs = c(s);
        for (Mask t = s;; t = (t - 1) & s) {
          if (cs & t & ~c(t)) return false;
          if (t == 0) break;
        }
        return true;
      });
    case Property::Consistent:
      // C(S) ⊆ T ⊆ S forces C(T) = C(S)
      return for_subsets([&](Mask s) {
        Mask cs = c(s);
        for (Mask t = s;; t = (t - 1) & s) {
          if ((cs & ~t) == 0 && c(t) != cs) return false;
          if (t == 0) break;
        }
        return true;
      });
    case Property::CardinalMonotone:
      return for_subsets([&](Mask s) {
        int n = set_size(c(s));
        for (Mask t = s;; t = (t - 1) & s) {
          if (set_size(c(t)) > n) return false;
          if (t == 0) break;
        }
        return true;
      });
    case Property::QuotaFilling:
      return for_subsets([&](Mask s) {
        return set_size(c(s)) == std::min(quota, set_size(s));
      });
    case Property::PathIndependent:
      return for_subsets([&](Mask s) {
        for (Mask t = 0;; t = (t - u) & u) {
          if (c(s | t) != c(c(s) | t)) return false;
          if (t == u) break;
        }
        return true;
      });
  }
  return false;
}

}  // namespace mk
