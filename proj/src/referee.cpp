// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "refgame/referee.hpp"

#include <algorithm>
#include <sstream>

#include "refgame/games/registry.hpp"

namespace refgame {

StepVerdict Referee::verify_step(const GameSpec& spec, ByteSpan instance, ByteSpan solution,
                                 const Transcript& t, std::size_t round, AccessLog* access) const {
  CheckContext ctx;
  ctx.access = access;
  if (round < 1 || round > t.moves.size()) {
    // engine misuse: judged rounds must exist
    return {Outcome::continue_game, 0, Reason::none};
  }
  return games::game_referee_step(spec.game_id, instance, solution, t, round, ctx);
}

bool BudgetReport::within_budget() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BudgetRow& r) { return r.max_cost <= r.budget; });
}

std::string BudgetReport::to_text() const {
  std::ostringstream os;
  for (const BudgetRow& r : rows)
    os << game_name(r.game) << "|" << r.instances << "|" << r.max_cost << "|" << r.budget << "\n";
  return os.str();
}

BudgetReport budget_report(const std::vector<RecordedGame>& games) {
  BudgetReport rep;
  std::vector<BudgetRow> rows(kGameKindCount);
  std::vector<bool> seen(kGameKindCount, false);
  Referee ref;
  for (const RecordedGame& g : games) {
    if (g.transcript.open()) continue;
    std::size_t idx = static_cast<std::size_t>(g.spec.game_id);
    rows[idx].game = g.spec.game_id;
    rows[idx].instances += 1;
    rows[idx].budget = std::max(rows[idx].budget, g.spec.referee_budget_h);
    seen[idx] = true;
    for (std::size_t r = 1; r <= g.transcript.moves.size(); ++r) {
      StepVerdict sv = ref.verify_step(g.spec, g.instance, g.solution, g.transcript, r);
      rows[idx].max_cost = std::max(rows[idx].max_cost, sv.metered_cost);
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (seen[i]) rep.rows.push_back(rows[i]);
  return rep;
}

ReplayResult replay_recorded_game(const RecordedGame& g, AccessLog* access) {
  ReplayResult res;
  if (g.transcript.open()) {
    res.detail = "transcript is open";
    return res;
  }
  if (access) {
    access->declare("instance", g.instance.size());
    access->declare("solution", g.solution.size());
  }
  Referee ref;
  const Verdict recorded = *g.transcript.verdict;

  // Re-judge each move against the prefix that preceded it.
  Transcript prefix;
  prefix.spec = g.spec;
  prefix.solution_ref = g.transcript.solution_ref;
  for (std::size_t i = 0; i < g.transcript.moves.size(); ++i) {
    const Move& m = g.transcript.moves[i];
    AppendError err = transcript_append(prefix, m);
    if (err != AppendError::ok) {
      res.detail = std::string("move ") + std::to_string(i + 1) + " rejected: " + append_error_name(err);
      return res;
    }
    StepVerdict sv = ref.verify_step(g.spec, g.instance, g.solution, prefix, i + 1, access);
    res.step_costs.push_back(sv.metered_cost);
    bool last = (i + 1 == g.transcript.moves.size());
    if (sv.outcome == Outcome::continue_game) {
      if (last) {
        // All moves replayed undecided: the verdict must be an abstention
        // (next mover timed out) or the round limit.
        break;
      }
      continue;
    }
    Party winner = (sv.outcome == Outcome::prover_wins) ? Party::prover : Party::challenger;
    if (!last) {
      res.detail = "game decided at round " + std::to_string(i + 1) + " but transcript continues";
      return res;
    }
    if (winner != recorded.winner || sv.reason != recorded.reason) {
      res.detail = "replayed " + std::string(party_name(winner)) + "/" + reason_name(sv.reason) +
                   " vs recorded " + party_name(recorded.winner) + "/" + reason_name(recorded.reason);
      return res;
    }
    res.confirmed = true;
    return res;
  }

  // Undecided after all recorded moves: check abstention-style verdicts.
  std::uint32_t next_round = static_cast<std::uint32_t>(g.transcript.moves.size()) + 1;
  if (g.transcript.moves.empty()) {
    if (recorded.winner == Party::prover && recorded.reason == Reason::no_challenge) {
      res.confirmed = true;
      return res;
    }
    res.detail = "empty transcript must decide prover/no_challenge";
    return res;
  }
  if (next_round > g.spec.round_bound_f) {
    if (recorded.winner == Party::prover && recorded.reason == Reason::round_limit) {
      res.confirmed = true;
      return res;
    }
    res.detail = "round bound exhausted; expected prover/round_limit";
    return res;
  }
  Party should_win = opponent(party_for_round(next_round));
  if (recorded.winner == should_win && recorded.reason == Reason::timeout) {
    res.confirmed = true;
    return res;
  }
  res.detail = std::string("expected ") + party_name(should_win) + "/timeout after abstention";
  return res;
}

}  // namespace refgame
