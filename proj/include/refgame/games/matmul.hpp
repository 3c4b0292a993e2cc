// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef REFGAME_GAMES_MATMUL_HPP
#define REFGAME_GAMES_MATMUL_HPP

#include <optional>

#include "refgame/core.hpp"
#include "refgame/referee.hpp"

namespace refgame::games {

/**
 * Matrix multiplication over a fixed prime field: the prover claims
 * C = A*B.  Round 1: the challenger names coordinates (i,j) plus the
 * partial-sum ladder d_0..d_n with d_0 = 0 and d_n != c_ij.  Round 2: the
 * prover defends with a k where d_k != d_{k-1} + a_ik*b_kj.
 */
struct MatmulInstance {
  std::uint64_t p = 2;  // field modulus, small prime
  std::uint32_t n = 1;
  std::vector<std::uint64_t> a;  // row-major n*n, entries < p
  std::vector<std::uint64_t> b;
};

// Field elements are stored in the narrowest of 1/2/4/8 bytes that holds p-1.
unsigned field_elem_width(std::uint64_t p);

Bytes matmul_encode_instance(const MatmulInstance& inst);
std::optional<MatmulInstance> matmul_decode_instance(ByteSpan bytes);

Bytes matmul_encode_solution(const MatmulInstance& inst, const std::vector<std::uint64_t>& c);
std::optional<std::vector<std::uint64_t>> matmul_decode_solution(const MatmulInstance& inst, ByteSpan bytes);

Bytes matmul_encode_challenge(const MatmulInstance& inst, std::uint32_t i, std::uint32_t j,
                              const std::vector<std::uint64_t>& d);
Bytes matmul_encode_defense(std::uint32_t k);

// Independent recomputation: the full product, triple loop.
std::vector<std::uint64_t> matmul_solve(const MatmulInstance& inst);

bool matmul_validate_solution(ByteSpan instance, ByteSpan solution);
GameSpec matmul_make_spec(ByteSpan instance);

StepVerdict matmul_referee(ByteSpan instance, ByteSpan solution, const Transcript& t,
                           std::size_t round, CheckContext& ctx);
std::optional<Bytes> matmul_honest_move(ByteSpan instance, ByteSpan solution, const Transcript& t,
                                        Party role);

std::string matmul_instance_to_text(ByteSpan instance);
std::optional<Bytes> matmul_instance_from_text(const std::string& text);

}  // namespace refgame::games

#endif  // REFGAME_GAMES_MATMUL_HPP
