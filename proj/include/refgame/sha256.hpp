// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef REFGAME_SHA256_HPP
#define REFGAME_SHA256_HPP

#include <array>
#include <cstdint>
#include <string>

#include "refgame/bytes.hpp"

namespace refgame {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(ByteSpan data);
std::string sha256_hex(ByteSpan data);

}  // namespace refgame

#endif  // REFGAME_SHA256_HPP
