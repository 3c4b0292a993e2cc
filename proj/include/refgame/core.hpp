// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef REFGAME_CORE_HPP
#define REFGAME_CORE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "refgame/bytes.hpp"

namespace refgame {

enum class Party : std::uint8_t { challenger = 0, prover = 1 };

inline Party opponent(Party p) { return p == Party::prover ? Party::challenger : Party::prover; }

// The challenger opens; moves alternate strictly.  A round-1 abstention
// means the solution stands.
inline Party party_for_round(std::uint32_t round) {
  return (round % 2 == 1) ? Party::challenger : Party::prover;
}

const char* party_name(Party p);
std::optional<Party> parse_party(std::string_view s);

enum class GameKind : std::uint8_t {
  matmul = 0,
  set_intersection,
  sorting,
  gcd,
  turing_machine,
  optimization,
};
constexpr int kGameKindCount = 6;

const char* game_name(GameKind k);
std::optional<GameKind> parse_game(std::string_view s);

enum class Outcome : std::uint8_t { continue_game = 0, prover_wins, challenger_wins };

// Verdict codes.  One code per way a game can end; the transcript records
// (winner, reason) and the replay auditor must reproduce both.
enum class Reason : std::uint8_t {
  none = 0,          // step verdict: game continues
  no_challenge,      // challenger abstained in round 1; solution stands
  invalid_challenge, // challenger claim failed the referee's direct check
  challenge_upheld,  // challenger claim verified; decisive
  invalid_defense,   // prover defense failed its check
  defense_upheld,    // prover defense verified; decisive
  invalid_complaint, // prover complaint (TM game) failed its pointer check
  complaint_upheld,  // prover complaint verified
  timeout,           // required mover abstained
  malformed,         // undecodable / oversize / structurally wrong payload
  range,             // sorting case (iii) exposed an out-of-range index
  round_limit,       // round bound exhausted while undecided (engine safety net)
};

const char* reason_name(Reason r);
std::optional<Reason> parse_reason(std::string_view s);

/**
 * The (f,g,h) triple of a verification game instantiated for one concrete
 * instance: at most `round_bound_f` rounds, at most `message_bound_g` bytes
 * per move, and a per-step referee budget of `referee_budget_h` metered
 * operations.
 */
struct GameSpec {
  GameKind game_id = GameKind::matmul;
  std::uint32_t input_size_n = 1;
  std::uint32_t round_bound_f = 1;
  std::uint32_t message_bound_g = 1;
  std::uint64_t referee_budget_h = 1;
};

struct Move {
  Party author = Party::challenger;
  std::uint32_t round = 0;  // 1-based; move k has round k
  Bytes payload;
};

struct Verdict {
  Party winner = Party::prover;
  Reason reason = Reason::no_challenge;
};

struct Transcript {
  GameSpec spec;
  std::string solution_ref;
  std::vector<Move> moves;
  std::optional<Verdict> verdict;  // nullopt while the game is open

  bool open() const { return !verdict.has_value(); }
};

enum class AppendError : std::uint8_t { ok = 0, closed, bad_round, out_of_turn, oversize };

const char* append_error_name(AppendError e);

// Append-only: rejects moves against a decided transcript, wrong round
// numbering, wrong author parity, or payloads over message_bound_g.
AppendError transcript_append(Transcript& t, Move m);

struct StepVerdict {
  Outcome outcome = Outcome::continue_game;
  std::uint64_t metered_cost = 0;
  Reason reason = Reason::none;
};

struct Solution {
  std::string task_ref;
  Bytes payload;
  std::optional<std::int64_t> quality_q;  // optimization tasks only
  std::int64_t deposit_d = 0;
};

struct GameView {
  const GameSpec& spec;
  ByteSpan instance;
  ByteSpan solution;
  const Transcript& transcript;
};

// A strategy returns the next move payload, or nullopt to abstain.
using MoveFn = std::function<std::optional<Bytes>(const GameView&)>;

class Referee;

Transcript play_game(const GameSpec& spec, ByteSpan instance, ByteSpan solution,
                     const std::string& solution_ref, const MoveFn& prover,
                     const MoveFn& challenger, const Referee& referee);

/**
 * A finished game bundled with everything needed to re-check it offline:
 * the spec, the canonical instance and solution bytes, and the transcript.
 */
struct RecordedGame {
  GameSpec spec;
  Bytes instance;
  Bytes solution;
  Transcript transcript;
};

// Line-delimited export: header lines (game/spec/instance/solution), one
// `round|author|hex(payload)` line per move, terminated by
// `verdict|winner|reason`.  Bit-exact for equal inputs.
std::string export_transcript(const RecordedGame& g);
std::optional<RecordedGame> parse_recorded_game(const std::string& text);

}  // namespace refgame

#endif  // REFGAME_CORE_HPP
