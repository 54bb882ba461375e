#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchkit/sets.hpp"

namespace mk {

enum class Side { Firm, Worker };

struct AgentId {
  Side side;
  int index;
};

// Thrown for malformed input files; carries the 1-based line number
// (0 when no line applies, e.g. an unreadable file).
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error(
            line_ > 0 ? "line " + std::to_string(line_) + ": " + what_
                      : what_),
        line(line_) {}
};

struct ChoiceSpec {
  enum class Kind { MC, Responsive, Table };
  Kind kind = Kind::MC;
  // MC: each order is a strict ranking of the acceptable partners, most
  // preferred first; the choice is the union of per-order maxima.
  std::vector<std::vector<int>> orders;
  int responsive_quota = 0;           // Responsive only
  std::map<Mask, Mask> table;         // Table only
};

// Counts choice-function evaluations when threaded through operations.
struct EvalCounter {
  long long count = 0;
};

struct Instance {
  std::vector<std::string> firm_names, worker_names;
  std::vector<ChoiceSpec> firm_cf, worker_cf;
  std::vector<Mask> firm_acc, worker_acc;  // mutual acceptability, by index
  std::vector<std::optional<int>> firm_quota, worker_quota;  // declared

  int firms() const { return int(firm_names.size()); }
  int workers() const { return int(worker_names.size()); }

  Mask acceptable(AgentId a) const {
    return a.side == Side::Firm ? firm_acc[a.index] : worker_acc[a.index];
  }
  const ChoiceSpec& spec(AgentId a) const {
    return a.side == Side::Firm ? firm_cf[a.index] : worker_cf[a.index];
  }
  std::optional<int> declared_quota(AgentId a) const {
    return a.side == Side::Firm ? firm_quota[a.index] : worker_quota[a.index];
  }
  const std::string& name(AgentId a) const {
    return a.side == Side::Firm ? firm_names[a.index] : worker_names[a.index];
  }
};

Instance parse_instance(const std::string& text);

// Evaluates agent a's choice function on S. S must be a subset of a's
// acceptable partners; Table specs additionally require S to be a key.
Mask choose(const Instance& inst, AgentId a, Mask s,
            EvalCounter* evals = nullptr);

enum class Property {
  Substitutable,
  Consistent,
  CardinalMonotone,
  QuotaFilling,  // takes the quota argument
  PathIndependent,
};

// Exhaustively checks the property over all subsets (or subset pairs) of the
// agent's acceptable partners. Throws if the agent has more than cap
// acceptable partners. quota is only read for QuotaFilling.
bool verify_property(const Instance& inst, AgentId a, Property p,
                     int quota = 0, int cap = 10);

}  // namespace mk
