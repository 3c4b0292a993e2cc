// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef REFGAME_GAMES_REGISTRY_HPP
#define REFGAME_GAMES_REGISTRY_HPP

#include <optional>
#include <string>

#include "refgame/core.hpp"
#include "refgame/referee.hpp"

namespace refgame::games {

// Per-round rule check for the kind; `round` indexes the move being judged.
StepVerdict game_referee_step(GameKind kind, ByteSpan instance, ByteSpan solution,
                              const Transcript& t, std::size_t round, CheckContext& ctx);

// Oracle-backed strategy: full recomputation, least witness, abstain when
// there is nothing justified to play.
std::optional<Bytes> game_honest_move(GameKind kind, ByteSpan instance, ByteSpan solution,
                                      const Transcript& t, Party role);

// Structural validity of a solution payload for the instance (not truth).
bool game_validate_solution(GameKind kind, ByteSpan instance, ByteSpan solution);

// Instantiates the game's (f,g,h) bounds for the instance, constants recorded here.
GameSpec game_make_spec(GameKind kind, ByteSpan instance);

// Brute-force oracle solution for the instance.
Bytes game_solve(GameKind kind, ByteSpan instance);

bool game_is_optimization(GameKind kind);

// Declared quality of a solution payload (optimization kinds only).
std::optional<std::int64_t> game_quality(GameKind kind, ByteSpan instance, ByteSpan solution);

// Line-oriented fixture text round trip; the text begins with the kind name.
std::string instance_to_text(GameKind kind, ByteSpan instance);
std::optional<std::pair<GameKind, Bytes>> instance_from_text(const std::string& text);

}  // namespace refgame::games

#endif  // REFGAME_GAMES_REGISTRY_HPP
