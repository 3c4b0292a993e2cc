// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef REFGAME_REFEREE_HPP
#define REFGAME_REFEREE_HPP

#include <map>
#include <string>
#include <vector>

#include "refgame/core.hpp"

namespace refgame {

/**
 * Counts the primitive operations a referee step spends: word comparisons,
 * field operations, bit extractions and transition-table lookups.  Fresh
 * per step; wall time is never measured.
 */
struct CostMeter {
  std::uint64_t ops = 0;
  void add(std::uint64_t n = 1) { ops += n; }
};

struct CheckContext {
  CostMeter meter;
  AccessLog* access = nullptr;  // set by the replay auditor, null in play
};

/**
 * The simulated network's per-step check: dispatches the latest round of a
 * transcript to the owning game's rules with a fresh meter.  Reentrant;
 * the verdict depends only on (spec, instance, solution, transcript
 * prefix, round).
 */
class Referee {
 public:
  StepVerdict verify_step(const GameSpec& spec, ByteSpan instance, ByteSpan solution,
                          const Transcript& t, std::size_t round, AccessLog* access = nullptr) const;
};

struct BudgetRow {
  GameKind game = GameKind::matmul;
  std::size_t instances = 0;
  std::uint64_t max_cost = 0;
  std::uint64_t budget = 0;  // max referee_budget_h seen for the kind
};

struct BudgetReport {
  std::vector<BudgetRow> rows;  // grouped by game kind, kind order
  bool within_budget() const;
  std::string to_text() const;  // `game|instances|max_cost|budget`
};

// Replays every decided transcript through the referee and aggregates the
// per-kind maximum step cost against the recorded budgets.
BudgetReport budget_report(const std::vector<RecordedGame>& games);

// Replays a recorded game and checks the recorded verdict (and that every
// intermediate step was undecided).  Returns true when the record is
// exactly reproducible.  `access`, when given, collects the byte regions
// the replay consulted.
struct ReplayResult {
  bool confirmed = false;
  std::string detail;
  std::vector<std::uint64_t> step_costs;
};
ReplayResult replay_recorded_game(const RecordedGame& g, AccessLog* access = nullptr);

}  // namespace refgame

#endif  // REFGAME_REFEREE_HPP
