// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "refgame/core.hpp"

#include <array>
#include <sstream>

#include "refgame/referee.hpp"

namespace refgame {

const char* party_name(Party p) { return p == Party::prover ? "prover" : "challenger"; }

std::optional<Party> parse_party(std::string_view s) {
  if (s == "prover") return Party::prover;
  if (s == "challenger") return Party::challenger;
  return std::nullopt;
}

static constexpr std::array<const char*, kGameKindCount> kGameNames = {
    "matmul", "intersection", "sorting", "gcd", "tm", "optimization"};

const char* game_name(GameKind k) { return kGameNames[static_cast<std::size_t>(k)]; }

std::optional<GameKind> parse_game(std::string_view s) {
  for (std::size_t i = 0; i < kGameNames.size(); ++i)
    if (s == kGameNames[i]) return static_cast<GameKind>(i);
  return std::nullopt;
}

static constexpr std::array<const char*, 12> kReasonNames = {
    "none",           "no_challenge",    "invalid_challenge", "challenge_upheld",
    "invalid_defense", "defense_upheld", "invalid_complaint", "complaint_upheld",
    "timeout",        "malformed",       "range",             "round_limit"};

const char* reason_name(Reason r) { return kReasonNames[static_cast<std::size_t>(r)]; }

std::optional<Reason> parse_reason(std::string_view s) {
  for (std::size_t i = 0; i < kReasonNames.size(); ++i)
    if (s == kReasonNames[i]) return static_cast<Reason>(i);
  return std::nullopt;
}

const char* append_error_name(AppendError e) {
  switch (e) {
    case AppendError::ok: return "ok";
    case AppendError::closed: return "closed";
    case AppendError::bad_round: return "bad_round";
    case AppendError::out_of_turn: return "out_of_turn";
    case AppendError::oversize: return "oversize";
  }
  return "?";
}

AppendError transcript_append(Transcript& t, Move m) {
  if (!t.open()) return AppendError::closed;
  if (m.round != t.moves.size() + 1) return AppendError::bad_round;
  if (m.author != party_for_round(m.round)) return AppendError::out_of_turn;
  if (m.payload.size() > t.spec.message_bound_g) return AppendError::oversize;
  t.moves.push_back(std::move(m));
  return AppendError::ok;
}

Transcript play_game(const GameSpec& spec, ByteSpan instance, ByteSpan solution,
                     const std::string& solution_ref, const MoveFn& prover,
                     const MoveFn& challenger, const Referee& referee) {
  Transcript t;
  t.spec = spec;
  t.solution_ref = solution_ref;

  for (std::uint32_t round = 1; round <= spec.round_bound_f; ++round) {
    Party mover = party_for_round(round);
    GameView view{spec, instance, solution, t};
    std::optional<Bytes> payload = (mover == Party::prover) ? prover(view) : challenger(view);

    if (!payload) {
      if (round == 1) {
        t.verdict = Verdict{Party::prover, Reason::no_challenge};
      } else {
        t.verdict = Verdict{opponent(mover), Reason::timeout};
      }
      return t;
    }

    Move m{mover, round, std::move(*payload)};
    AppendError err = transcript_append(t, std::move(m));
    if (err == AppendError::oversize) {
      t.verdict = Verdict{opponent(mover), Reason::malformed};
      return t;
    }
    if (err != AppendError::ok) {
      // engine misuse; treat as the mover's loss rather than crashing
      t.verdict = Verdict{opponent(mover), Reason::malformed};
      return t;
    }

    StepVerdict sv = referee.verify_step(spec, instance, solution, t, round);
    if (sv.outcome == Outcome::prover_wins) {
      t.verdict = Verdict{Party::prover, sv.reason};
      return t;
    }
    if (sv.outcome == Outcome::challenger_wins) {
      t.verdict = Verdict{Party::challenger, sv.reason};
      return t;
    }
  }

  // No referee decision within the round bound: the solution stands.
  t.verdict = Verdict{Party::prover, Reason::round_limit};
  return t;
}

std::string export_transcript(const RecordedGame& g) {
  std::ostringstream os;
  os << "game|" << game_name(g.spec.game_id) << "\n";
  os << "spec|" << g.spec.input_size_n << "|" << g.spec.round_bound_f << "|" << g.spec.message_bound_g
     << "|" << g.spec.referee_budget_h << "\n";
  os << "instance|" << to_hex(g.instance) << "\n";
  os << "solution|" << g.transcript.solution_ref << "|" << to_hex(g.solution) << "\n";
  for (const Move& m : g.transcript.moves)
    os << m.round << "|" << party_name(m.author) << "|" << to_hex(m.payload) << "\n";
  if (g.transcript.verdict)
    os << "verdict|" << party_name(g.transcript.verdict->winner) << "|"
       << reason_name(g.transcript.verdict->reason) << "\n";
  return os.str();
}

namespace {

bool split_fields(const std::string& line, std::vector<std::string>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    std::size_t bar = line.find('|', start);
    if (bar == std::string::npos) {
      out.push_back(line.substr(start));
      return true;
    }
    out.push_back(line.substr(start, bar - start));
    start = bar + 1;
  }
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  out = v;
  return true;
}

}  // namespace

std::optional<RecordedGame> parse_recorded_game(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> f;
  RecordedGame g;

  if (!std::getline(is, line) || !split_fields(line, f) || f.size() != 2 || f[0] != "game")
    return std::nullopt;
  auto kind = parse_game(f[1]);
  if (!kind) return std::nullopt;
  g.spec.game_id = *kind;

  if (!std::getline(is, line) || !split_fields(line, f) || f.size() != 5 || f[0] != "spec")
    return std::nullopt;
  std::uint64_t n, fr, mg, bh;
  if (!parse_u64(f[1], n) || !parse_u64(f[2], fr) || !parse_u64(f[3], mg) || !parse_u64(f[4], bh))
    return std::nullopt;
  g.spec.input_size_n = static_cast<std::uint32_t>(n);
  g.spec.round_bound_f = static_cast<std::uint32_t>(fr);
  g.spec.message_bound_g = static_cast<std::uint32_t>(mg);
  g.spec.referee_budget_h = bh;

  if (!std::getline(is, line) || !split_fields(line, f) || f.size() != 2 || f[0] != "instance")
    return std::nullopt;
  auto ib = from_hex(f[1]);
  if (!ib) return std::nullopt;
  g.instance = std::move(*ib);

  if (!std::getline(is, line) || !split_fields(line, f) || f.size() != 3 || f[0] != "solution")
    return std::nullopt;
  g.transcript.solution_ref = f[1];
  auto sb = from_hex(f[2]);
  if (!sb) return std::nullopt;
  g.solution = std::move(*sb);

  g.transcript.spec = g.spec;
  bool saw_verdict = false;
  std::uint32_t expect_round = 1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (!split_fields(line, f) || f.size() != 3) return std::nullopt;
    if (f[0] == "verdict") {
      auto w = parse_party(f[1]);
      auto r = parse_reason(f[2]);
      if (!w || !r || saw_verdict) return std::nullopt;
      g.transcript.verdict = Verdict{*w, *r};
      saw_verdict = true;
      continue;
    }
    if (saw_verdict) return std::nullopt;  // moves after the verdict
    std::uint64_t round;
    if (!parse_u64(f[0], round) || round != expect_round) return std::nullopt;
    auto author = parse_party(f[1]);
    if (!author || *author != party_for_round(expect_round)) return std::nullopt;
    auto payload = from_hex(f[2]);
    if (!payload) return std::nullopt;
    if (payload->size() > g.spec.message_bound_g) return std::nullopt;
    g.transcript.moves.push_back(Move{*author, expect_round, std::move(*payload)});
    ++expect_round;
  }
  if (!saw_verdict) return std::nullopt;
  return g;
}

}  // namespace refgame
