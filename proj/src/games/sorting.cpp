// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "refgame/games/sorting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace refgame::games {

namespace {

unsigned elem_width(std::uint32_t r) {
  if (r <= 8) return 1;
  if (r <= 16) return 2;
  if (r <= 32) return 4;
  return 8;
}

// layout: u32 r | u32 n | values (elem_width(r) bytes each)
struct InstanceRef {
  ByteReader r;
  std::uint32_t bits = 0, n = 0;
  unsigned w = 1;

  static std::optional<InstanceRef> open(ByteSpan bytes, AccessLog* log) {
    InstanceRef v{ByteReader(bytes, "instance", log)};
    if (!v.r.u32(v.bits) || v.bits < 1 || v.bits > 64) return std::nullopt;
    if (!v.r.u32(v.n) || v.n < 1) return std::nullopt;
    v.w = elem_width(v.bits);
    if (bytes.size() != 8 + static_cast<std::size_t>(v.n) * v.w) return std::nullopt;
    return v;
  }

  bool value_at(std::uint32_t idx, std::uint64_t& out) const {  // 1-based
    if (idx < 1 || idx > n) return false;
    std::uint64_t raw = 0;
    std::size_t off = 8 + static_cast<std::size_t>(idx - 1) * w;
    for (unsigned i = 0; i < w; ++i) {
      std::uint8_t b;
      if (!r.u8_at(off + i, b)) return false;
      raw |= static_cast<std::uint64_t>(b) << (8 * i);
    }
    out = raw;
    return true;
  }
};

// layout: u32 cnt | cnt x u32 indices
struct SolutionRef {
  ByteReader r;
  std::uint32_t cnt = 0;

  static std::optional<SolutionRef> open(ByteSpan bytes, AccessLog* log) {
    SolutionRef v{ByteReader(bytes, "solution", log)};
    if (!v.r.u32(v.cnt)) return std::nullopt;
    if (bytes.size() != 4 + static_cast<std::size_t>(v.cnt) * 4) return std::nullopt;
    return v;
  }
  bool f_at(std::uint32_t j, std::uint32_t& out) const {  // 1-based
    if (j < 1 || j > cnt) return false;
    return r.u32_at(4 + static_cast<std::size_t>(j - 1) * 4, out);
  }
};

// bit positions 1..r, most significant first
inline std::uint64_t bit_of(std::uint64_t v, std::uint32_t b, std::uint32_t r) {
  return (v >> (r - b)) & 1;
}

StepVerdict lose(Party loser, Reason reason, const CostMeter& m) {
  return {loser == Party::prover ? Outcome::challenger_wins : Outcome::prover_wins, m.ops, reason};
}

}  // namespace

Bytes sort_encode_instance(const SortInstance& inst) {
  ByteWriter w;
  w.u32(inst.r);
  w.u32(static_cast<std::uint32_t>(inst.a.size()));
  unsigned ew = elem_width(inst.r);
  for (auto x : inst.a)
    for (unsigned i = 0; i < ew; ++i) w.u8(static_cast<std::uint8_t>(x >> (8 * i)));
  return w.take();
}

std::optional<SortInstance> sort_decode_instance(ByteSpan bytes) {
  auto v = InstanceRef::open(bytes, nullptr);
  if (!v) return std::nullopt;
  SortInstance inst;
  inst.r = v->bits;
  inst.a.resize(v->n);
  for (std::uint32_t i = 1; i <= v->n; ++i)
    if (!v->value_at(i, inst.a[i - 1])) return std::nullopt;
  return inst;
}

Bytes sort_encode_solution(const std::vector<std::uint32_t>& f) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(f.size()));
  for (auto x : f) w.u32(x);
  return w.take();
}

std::optional<std::vector<std::uint32_t>> sort_decode_solution(ByteSpan bytes) {
  auto v = SolutionRef::open(bytes, nullptr);
  if (!v) return std::nullopt;
  std::vector<std::uint32_t> f(v->cnt);
  for (std::uint32_t i = 1; i <= v->cnt; ++i)
    if (!v->f_at(i, f[i - 1])) return std::nullopt;
  return f;
}

Bytes sort_encode_case1(std::uint32_t j) {
  ByteWriter w;
  w.u8(1);
  w.u32(j);
  return w.take();
}

Bytes sort_encode_case2(std::uint32_t i, std::uint32_t j) {
  ByteWriter w;
  w.u8(2);
  w.u32(i);
  w.u32(j);
  return w.take();
}

Bytes sort_encode_case3(std::uint32_t j, std::uint32_t b) {
  ByteWriter w;
  w.u8(3);
  w.u32(j);
  w.u32(b);
  return w.take();
}

Bytes sort_encode_defense(std::uint32_t b_prime) {
  ByteWriter w;
  w.u32(b_prime);
  return w.take();
}

std::vector<std::uint32_t> sort_solve(const SortInstance& inst) {
  std::vector<std::uint32_t> f(inst.a.size());
  std::iota(f.begin(), f.end(), 1);
  std::stable_sort(f.begin(), f.end(),
                   [&](std::uint32_t x, std::uint32_t y) { return inst.a[x - 1] < inst.a[y - 1]; });
  return f;
}

std::uint32_t ms_diff_bit(std::uint64_t x, std::uint64_t y, std::uint32_t r) {
  for (std::uint32_t b = 1; b <= r; ++b)
    if (bit_of(x, b, r) != bit_of(y, b, r)) return b;
  return 0;
}

bool sort_validate_solution(ByteSpan instance, ByteSpan solution) {
  auto inst = InstanceRef::open(instance, nullptr);
  if (!inst) return false;
  auto sol = SolutionRef::open(solution, nullptr);
  return sol && sol->cnt == inst->n;
}

GameSpec sort_make_spec(ByteSpan instance) {
  auto v = InstanceRef::open(instance, nullptr);
  GameSpec s;
  s.game_id = GameKind::sorting;
  if (!v) return s;
  s.input_size_n = v->n;
  s.round_bound_f = 2;
  s.message_bound_g = 9;
  std::uint32_t log2n = 0;
  for (std::uint64_t x = std::max<std::uint32_t>(2, v->n); x > 1; x >>= 1) ++log2n;
  s.referee_budget_h = 8ull * (log2n + 2);
  return s;
}

StepVerdict sort_referee(ByteSpan instance, ByteSpan solution, const Transcript& t,
                         std::size_t round, CheckContext& ctx) {
  CostMeter& m = ctx.meter;
  auto inst = InstanceRef::open(instance, ctx.access);
  if (!inst) return {Outcome::challenger_wins, m.ops, Reason::malformed};
  auto sol = SolutionRef::open(solution, ctx.access);
  if (!sol || sol->cnt != inst->n) return lose(Party::prover, Reason::malformed, m);
  const Move& move = t.moves[round - 1];
  std::string mname = "move" + std::to_string(round);

  if (round == 1) {
    ByteReader r(move.payload, mname, ctx.access);
    std::uint8_t kase;
    if (!r.u8(kase)) return lose(Party::challenger, Reason::malformed, m);

    if (kase == 1) {
      std::uint32_t j;
      if (!r.u32(j) || move.payload.size() != 5) return lose(Party::challenger, Reason::malformed, m);
      m.add(1);
      if (j < 1 || j > inst->n) return lose(Party::challenger, Reason::invalid_challenge, m);
      std::uint32_t fj;
      sol->f_at(j, fj);
      m.add(2);
      if (fj < 1 || fj > inst->n) return {Outcome::challenger_wins, m.ops, Reason::challenge_upheld};
      return lose(Party::challenger, Reason::invalid_challenge, m);
    }

    if (kase == 2) {
      std::uint32_t i, j;
      if (!r.u32(i) || !r.u32(j) || move.payload.size() != 9)
        return lose(Party::challenger, Reason::malformed, m);
      m.add(3);
      if (i < 1 || i > inst->n || j < 1 || j > inst->n || i == j)
        return lose(Party::challenger, Reason::invalid_challenge, m);
      std::uint32_t fi, fj;
      sol->f_at(i, fi);
      sol->f_at(j, fj);
      m.add(1);
      if (fi == fj) return {Outcome::challenger_wins, m.ops, Reason::challenge_upheld};
      return lose(Party::challenger, Reason::invalid_challenge, m);
    }

    if (kase == 3) {
      std::uint32_t j, b;
      if (!r.u32(j) || !r.u32(b) || move.payload.size() != 9)
        return lose(Party::challenger, Reason::malformed, m);
      m.add(2);
      if (j < 1 || j + 1 > inst->n || b < 1 || b > inst->bits)
        return lose(Party::challenger, Reason::invalid_challenge, m);
      std::uint32_t fj, fj1;
      sol->f_at(j, fj);
      sol->f_at(j + 1, fj1);
      m.add(2);
      if (fj < 1 || fj > inst->n || fj1 < 1 || fj1 > inst->n)
        return {Outcome::challenger_wins, m.ops, Reason::range};
      std::uint64_t x, y;
      inst->value_at(fj, x);
      inst->value_at(fj1, y);
      m.add(2);  // two bit extractions
      if (bit_of(x, b, inst->bits) != 1 || bit_of(y, b, inst->bits) != 0)
        return lose(Party::challenger, Reason::invalid_challenge, m);
      return {Outcome::continue_game, m.ops, Reason::none};
    }

    return lose(Party::challenger, Reason::malformed, m);
  }

  if (round == 2) {
    ByteReader r1(t.moves[0].payload, "move1", ctx.access);
    std::uint8_t kase;
    std::uint32_t j, b;
    if (!r1.u8(kase) || kase != 3 || !r1.u32(j) || !r1.u32(b))
      return lose(Party::challenger, Reason::malformed, m);
    ByteReader r(move.payload, mname, ctx.access);
    std::uint32_t b2;
    if (!r.u32(b2) || move.payload.size() != 4) return lose(Party::prover, Reason::malformed, m);
    m.add(2);
    if (b2 < 1 || b2 >= b) return {Outcome::challenger_wins, m.ops, Reason::invalid_defense};
    std::uint32_t fj, fj1;
    sol->f_at(j, fj);
    sol->f_at(j + 1, fj1);
    std::uint64_t x, y;
    inst->value_at(fj, x);
    inst->value_at(fj1, y);
    m.add(2);
    if (bit_of(x, b2, inst->bits) != bit_of(y, b2, inst->bits))
      return {Outcome::prover_wins, m.ops, Reason::defense_upheld};
    return {Outcome::challenger_wins, m.ops, Reason::invalid_defense};
  }

  return {Outcome::challenger_wins, m.ops, Reason::malformed};
}

std::optional<Bytes> sort_honest_move(ByteSpan instance, ByteSpan solution, const Transcript& t,
                                      Party role) {
  auto inst = sort_decode_instance(instance);
  if (!inst) return std::nullopt;
  auto f = sort_decode_solution(solution);
  if (!f || f->size() != inst->a.size()) return std::nullopt;
  std::uint32_t n = static_cast<std::uint32_t>(inst->a.size());

  if (role == Party::challenger && t.moves.empty()) {
    for (std::uint32_t j = 1; j <= n; ++j)
      if ((*f)[j - 1] < 1 || (*f)[j - 1] > n) return sort_encode_case1(j);
    for (std::uint32_t i = 1; i <= n; ++i)
      for (std::uint32_t j = i + 1; j <= n; ++j)
        if ((*f)[i - 1] == (*f)[j - 1]) return sort_encode_case2(i, j);
    for (std::uint32_t j = 1; j + 1 <= n; ++j) {
      std::uint64_t x = inst->a[(*f)[j - 1] - 1];
      std::uint64_t y = inst->a[(*f)[j] - 1];
      if (x > y) return sort_encode_case3(j, ms_diff_bit(x, y, inst->r));
    }
    return std::nullopt;
  }

  if (role == Party::prover && t.moves.size() == 1) {
    ByteReader r(t.moves[0].payload);
    std::uint8_t kase;
    std::uint32_t j, b;
    if (!r.u8(kase) || kase != 3 || !r.u32(j) || !r.u32(b)) return std::nullopt;
    if (j < 1 || j + 1 > n) return std::nullopt;
    std::uint32_t fj = (*f)[j - 1], fj1 = (*f)[j];
    if (fj < 1 || fj > n || fj1 < 1 || fj1 > n) return std::nullopt;
    std::uint32_t true_b = ms_diff_bit(inst->a[fj - 1], inst->a[fj1 - 1], inst->r);
    if (true_b != 0 && true_b < b) return sort_encode_defense(true_b);
    return std::nullopt;
  }

  return std::nullopt;
}

std::string sort_instance_to_text(ByteSpan instance) {
  auto inst = sort_decode_instance(instance);
  if (!inst) return {};
  std::ostringstream os;
  os << "sorting\n" << "r " << inst->r << "\n" << "A " << inst->a.size();
  for (auto x : inst->a) os << " " << x;
  os << "\n";
  return os.str();
}

std::optional<Bytes> sort_instance_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  SortInstance inst;
  if (!(is >> tag) || tag != "sorting") return std::nullopt;
  if (!(is >> tag >> inst.r) || tag != "r" || inst.r < 1 || inst.r > 64) return std::nullopt;
  std::uint64_t limit = inst.r >= 64 ? ~0ull : (1ull << inst.r) - 1;
  std::size_t n;
  if (!(is >> tag >> n) || tag != "A") return std::nullopt;
  inst.a.resize(n);
  for (auto& v : inst.a)
    if (!(is >> v) || v > limit) return std::nullopt;
  return sort_encode_instance(inst);
}

}  // namespace refgame::games
