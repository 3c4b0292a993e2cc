// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef REFGAME_BYTES_HPP
#define REFGAME_BYTES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace refgame {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

std::string to_hex(ByteSpan data);
std::optional<Bytes> from_hex(std::string_view hex);

/**
 * Records which byte ranges of named buffers were consulted while a
 * transcript was re-checked.  Used by the replay auditor to tell tampered
 * bytes the referee actually read apart from bytes it never addressed.
 */
class AccessLog {
 public:
  void mark(const std::string& buffer, std::size_t off, std::size_t len);
  bool touched(const std::string& buffer, std::size_t off) const;
  std::size_t touched_bytes(const std::string& buffer) const;
  const std::map<std::string, std::vector<bool>>& buffers() const { return touched_; }
  void declare(const std::string& buffer, std::size_t size);

 private:
  std::map<std::string, std::vector<bool>> touched_;
};

/**
 * Bounds-checked reads over a byte buffer.  Cursor reads advance `pos`;
 * `*_at` reads are random access.  Every successful read is marked in the
 * attached AccessLog (when present), which is how referees honor the
 * random-access cost model while staying auditable.
 */
class ByteReader {
 public:
  ByteReader(ByteSpan data, std::string name = {}, AccessLog* log = nullptr);

  bool u8(std::uint8_t& out);
  bool u16(std::uint16_t& out);
  bool u32(std::uint32_t& out);
  bool u64(std::uint64_t& out);
  bool i64(std::int64_t& out);
  bool skip(std::size_t n);

  bool u8_at(std::size_t off, std::uint8_t& out) const;
  bool u32_at(std::size_t off, std::uint32_t& out) const;
  bool u64_at(std::size_t off, std::uint64_t& out) const;
  bool i64_at(std::size_t off, std::int64_t& out) const;

  std::size_t pos() const { return pos_; }
  std::size_t size() const { return data_.size(); }
  bool done() const { return pos_ == data_.size(); }

 private:
  bool read_le(std::size_t off, unsigned width, std::uint64_t& out) const;
  ByteSpan data_;
  std::size_t pos_ = 0;
  std::string name_;
  AccessLog* log_ = nullptr;
};

class ByteWriter {
 public:
  void u8(std::uint8_t v);
  void u16(std::uint16_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void i64(std::int64_t v);
  void raw(ByteSpan data);
  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

}  // namespace refgame

#endif  // REFGAME_BYTES_HPP
