// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef REFGAME_GAMES_SORTING_HPP
#define REFGAME_GAMES_SORTING_HPP

#include <optional>

#include "refgame/core.hpp"
#include "refgame/referee.hpp"

namespace refgame::games {

/**
 * Sorting n r-bit numbers: the prover claims f is a permutation with
 * A[f(1)] <= ... <= A[f(n)].  Challenges: (i) f(j) out of range,
 * (ii) f(i) = f(j) for i != j, (iii) adjacent inversion at j with b the
 * most significant differing bit (positions 1..r, most significant first).
 * A surviving case-(iii) claim is refuted by a differing bit b' < b.
 */
struct SortInstance {
  std::uint32_t r = 1;  // bits per number
  std::vector<std::uint64_t> a;
};

Bytes sort_encode_instance(const SortInstance& inst);
std::optional<SortInstance> sort_decode_instance(ByteSpan bytes);

Bytes sort_encode_solution(const std::vector<std::uint32_t>& f);
std::optional<std::vector<std::uint32_t>> sort_decode_solution(ByteSpan bytes);

Bytes sort_encode_case1(std::uint32_t j);
Bytes sort_encode_case2(std::uint32_t i, std::uint32_t j);
Bytes sort_encode_case3(std::uint32_t j, std::uint32_t b);
Bytes sort_encode_defense(std::uint32_t b_prime);

// Stable argsort, 1-based indices (ties keep original order).
std::vector<std::uint32_t> sort_solve(const SortInstance& inst);

// Most significant differing bit position of x,y within r bits; 0 if equal.
std::uint32_t ms_diff_bit(std::uint64_t x, std::uint64_t y, std::uint32_t r);

bool sort_validate_solution(ByteSpan instance, ByteSpan solution);
GameSpec sort_make_spec(ByteSpan instance);

StepVerdict sort_referee(ByteSpan instance, ByteSpan solution, const Transcript& t,
                         std::size_t round, CheckContext& ctx);
std::optional<Bytes> sort_honest_move(ByteSpan instance, ByteSpan solution, const Transcript& t,
                                      Party role);

std::string sort_instance_to_text(ByteSpan instance);
std::optional<Bytes> sort_instance_from_text(const std::string& text);

}  // namespace refgame::games

#endif  // REFGAME_GAMES_SORTING_HPP
