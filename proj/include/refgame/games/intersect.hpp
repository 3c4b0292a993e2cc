// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef REFGAME_GAMES_INTERSECT_HPP
#define REFGAME_GAMES_INTERSECT_HPP

#include <optional>

#include "refgame/core.hpp"
#include "refgame/referee.hpp"

namespace refgame::games {

/**
 * Set intersection in array form: the prover claims C = A (intersect) B.
 * Round 1 challenges: case (i) indices (i_a, i_b) with A(i_a) = B(i_b)
 * missing from C, or case (ii) an index j_c whose element is alien to the
 * intersection.  Round 2 defenses: an i_c with C(i_c) = A(i_a), or a pair
 * (j_a, j_b) witnessing membership.  Element equality is metered as one
 * full-width comparison.
 */
struct IntersectInstance {
  std::uint32_t r = 1;  // bits per element
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
};

Bytes intersect_encode_instance(const IntersectInstance& inst);
std::optional<IntersectInstance> intersect_decode_instance(ByteSpan bytes);

Bytes intersect_encode_solution(const IntersectInstance& inst, const std::vector<std::uint64_t>& c);
std::optional<std::vector<std::uint64_t>> intersect_decode_solution(const IntersectInstance& inst,
                                                                    ByteSpan bytes);

Bytes intersect_encode_case1(std::uint32_t i_a, std::uint32_t i_b);
Bytes intersect_encode_case2(std::uint32_t j_c);
Bytes intersect_encode_defense1(std::uint32_t i_c);
Bytes intersect_encode_defense2(std::uint32_t j_a, std::uint32_t j_b);

// Sorted unique common elements.
std::vector<std::uint64_t> intersect_solve(const IntersectInstance& inst);

bool intersect_validate_solution(ByteSpan instance, ByteSpan solution);
GameSpec intersect_make_spec(ByteSpan instance);

StepVerdict intersect_referee(ByteSpan instance, ByteSpan solution, const Transcript& t,
                              std::size_t round, CheckContext& ctx);
std::optional<Bytes> intersect_honest_move(ByteSpan instance, ByteSpan solution, const Transcript& t,
                                           Party role);

std::string intersect_instance_to_text(ByteSpan instance);
std::optional<Bytes> intersect_instance_from_text(const std::string& text);

}  // namespace refgame::games

#endif  // REFGAME_GAMES_INTERSECT_HPP
