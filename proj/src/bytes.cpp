// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "refgame/bytes.hpp"

namespace refgame {

static const char* kHexDigits = "0123456789abcdef";

std::string to_hex(ByteSpan data) {
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0xf]);
  }
  return out;
}

static int hex_val(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::optional<Bytes> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) return std::nullopt;
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_val(hex[i]);
    int lo = hex_val(hex[i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

void AccessLog::declare(const std::string& buffer, std::size_t size) {
  auto& v = touched_[buffer];
  if (v.size() < size) v.resize(size, false);
}

void AccessLog::mark(const std::string& buffer, std::size_t off, std::size_t len) {
  auto& v = touched_[buffer];
  if (v.size() < off + len) v.resize(off + len, false);
  for (std::size_t i = 0; i < len; ++i) v[off + i] = true;
}

bool AccessLog::touched(const std::string& buffer, std::size_t off) const {
  auto it = touched_.find(buffer);
  if (it == touched_.end()) return false;
  return off < it->second.size() && it->second[off];
}

std::size_t AccessLog::touched_bytes(const std::string& buffer) const {
  auto it = touched_.find(buffer);
  if (it == touched_.end()) return 0;
  std::size_t n = 0;
  for (bool b : it->second) n += b ? 1 : 0;
  return n;
}

ByteReader::ByteReader(ByteSpan data, std::string name, AccessLog* log)
    : data_(data), name_(std::move(name)), log_(log) {
  if (log_) log_->declare(name_, data_.size());
}

bool ByteReader::read_le(std::size_t off, unsigned width, std::uint64_t& out) const {
  if (off + width > data_.size()) return false;
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(data_[off + i]) << (8 * i);
  if (log_) log_->mark(name_, off, width);
  out = v;
  return true;
}

bool ByteReader::u8(std::uint8_t& out) {
  std::uint64_t v;
  if (!read_le(pos_, 1, v)) return false;
  pos_ += 1;
  out = static_cast<std::uint8_t>(v);
  return true;
}

bool ByteReader::u16(std::uint16_t& out) {
  std::uint64_t v;
  if (!read_le(pos_, 2, v)) return false;
  pos_ += 2;
  out = static_cast<std::uint16_t>(v);
  return true;
}

bool ByteReader::u32(std::uint32_t& out) {
  std::uint64_t v;
  if (!read_le(pos_, 4, v)) return false;
  pos_ += 4;
  out = static_cast<std::uint32_t>(v);
  return true;
}

bool ByteReader::u64(std::uint64_t& out) {
  if (!read_le(pos_, 8, out)) return false;
  pos_ += 8;
  return true;
}

bool ByteReader::i64(std::int64_t& out) {
  std::uint64_t v;
  if (!u64(v)) return false;
  out = static_cast<std::int64_t>(v);
  return true;
}

bool ByteReader::skip(std::size_t n) {
  if (pos_ + n > data_.size()) return false;
  pos_ += n;
  return true;
}

bool ByteReader::u8_at(std::size_t off, std::uint8_t& out) const {
  std::uint64_t v;
  if (!read_le(off, 1, v)) return false;
  out = static_cast<std::uint8_t>(v);
  return true;
}

bool ByteReader::u32_at(std::size_t off, std::uint32_t& out) const {
  std::uint64_t v;
  if (!read_le(off, 4, v)) return false;
  out = static_cast<std::uint32_t>(v);
  return true;
}

bool ByteReader::u64_at(std::size_t off, std::uint64_t& out) const { return read_le(off, 8, out); }

bool ByteReader::i64_at(std::size_t off, std::int64_t& out) const {
  std::uint64_t v;
  if (!read_le(off, 8, v)) return false;
  out = static_cast<std::int64_t>(v);
  return true;
}

void ByteWriter::u8(std::uint8_t v) { out_.push_back(v); }

void ByteWriter::u16(std::uint16_t v) {
  for (unsigned i = 0; i < 2; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u32(std::uint32_t v) {
  for (unsigned i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t v) {
  for (unsigned i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }

void ByteWriter::raw(ByteSpan data) { out_.insert(out_.end(), data.begin(), data.end()); }

}  // namespace refgame
