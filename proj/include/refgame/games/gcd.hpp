// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef REFGAME_GAMES_GCD_HPP
#define REFGAME_GAMES_GCD_HPP

#include <array>
#include <optional>

#include "refgame/core.hpp"
#include "refgame/referee.hpp"

namespace refgame::games {

/**
 * GCD with Bezout certificate: the prover claims (c,d,e,d',e') with
 * c = d*a + e*b, a = d'*c, b = e'*c.  Round 1: the challenger posts a
 * modulus p within the digit bound plus the seven residues and the network
 * re-checks the equations mod p.  Round 2: the prover disputes one residue
 * with sign flag, magnitude bits (most significant first) and running
 * partials tilde_m = (2*tilde_{m-1} + k_m) % p.  Round 3: the challenger
 * pinpoints one position: a recurrence violation, a bit that differs from
 * the published value of k (random access into the instance/solution
 * bytes), or a sign mismatch.
 */
struct GcdInstance {
  std::uint32_t n_digits = 1;  // decimal digits of the inputs
  std::int64_t a = 1;
  std::int64_t b = 1;
};

struct GcdClaim {
  std::int64_t c = 0, d = 0, e = 0, dp = 0, ep = 0;
};

// value order used everywhere: a,b,c,d,e,d',e'
constexpr std::uint8_t kGcdValueCount = 7;

Bytes gcd_encode_instance(const GcdInstance& inst);
std::optional<GcdInstance> gcd_decode_instance(ByteSpan bytes);

Bytes gcd_encode_solution(const GcdClaim& claim);
std::optional<GcdClaim> gcd_decode_solution(ByteSpan bytes);

Bytes gcd_encode_challenge(std::uint64_t p, const std::array<std::uint64_t, kGcdValueCount>& residues);

struct GcdDefense {
  std::uint8_t k_choice = 0;  // index into the value order
  bool negative = false;
  std::vector<std::uint8_t> bits;       // magnitude, most significant first
  std::vector<std::uint64_t> partials;  // same length as bits
};
Bytes gcd_encode_defense(const GcdDefense& d);

enum class GcdPinpointKind : std::uint8_t { recurrence = 1, bit_binding = 2, sign_binding = 3 };
Bytes gcd_encode_pinpoint(GcdPinpointKind kind, std::uint32_t m);

// Extended Euclid oracle: gcd plus Bezout coefficients and cofactors.
GcdClaim gcd_solve(const GcdInstance& inst);

// Digit bound for the challenge modulus: ceil(2*log10(n)) + 2 digits.
std::uint32_t gcd_digit_bound(std::uint32_t n_digits);
// Magnitude bit width: smallest W with 2^W >= 10^n_digits.
std::uint32_t gcd_bit_width(std::uint32_t n_digits);
// Remainder in {0..p-1}, even for negative numbers.
std::uint64_t mod_nonneg(std::int64_t v, std::uint64_t p);

bool gcd_validate_solution(ByteSpan instance, ByteSpan solution);
GameSpec gcd_make_spec(ByteSpan instance);

StepVerdict gcd_referee(ByteSpan instance, ByteSpan solution, const Transcript& t,
                        std::size_t round, CheckContext& ctx);
std::optional<Bytes> gcd_honest_move(ByteSpan instance, ByteSpan solution, const Transcript& t,
                                     Party role);

std::string gcd_instance_to_text(ByteSpan instance);
std::optional<Bytes> gcd_instance_from_text(const std::string& text);

}  // namespace refgame::games

#endif  // REFGAME_GAMES_GCD_HPP
