// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "refgame/games/matmul.hpp"

#include <sstream>

namespace refgame::games {

namespace {

constexpr std::size_t kHdr = 12;  // u64 p | u32 n

// Lazy accessor over canonical instance bytes; the referee reads only the
// entries a check addresses.
struct InstanceRef {
  ByteReader r;
  std::uint64_t p = 0;
  std::uint32_t n = 0;
  unsigned w = 1;

  static std::optional<InstanceRef> open(ByteSpan bytes, AccessLog* log) {
    InstanceRef v{ByteReader(bytes, "instance", log)};
    if (!v.r.u64(v.p) || !v.r.u32(v.n)) return std::nullopt;
    if (v.p < 2 || v.p >= (1ull << 31) || v.n < 1) return std::nullopt;
    v.w = field_elem_width(v.p);
    std::size_t need = kHdr + 2ull * v.n * v.n * v.w;
    if (bytes.size() != need) return std::nullopt;
    return v;
  }

  bool elem(std::size_t base_idx, std::uint64_t& out) const {
    std::uint64_t raw = 0;
    std::size_t off = kHdr + base_idx * w;
    for (unsigned i = 0; i < w; ++i) {
      std::uint8_t b;
      if (!r.u8_at(off + i, b)) return false;
      raw |= static_cast<std::uint64_t>(b) << (8 * i);
    }
    out = raw;
    return true;
  }
  // 1-based coordinates
  bool a_at(std::uint32_t i, std::uint32_t k, std::uint64_t& out) const {
    return elem(static_cast<std::size_t>(i - 1) * n + (k - 1), out);
  }
  bool b_at(std::uint32_t k, std::uint32_t j, std::uint64_t& out) const {
    return elem(static_cast<std::size_t>(n) * n + static_cast<std::size_t>(k - 1) * n + (j - 1), out);
  }
};

bool solution_elem(ByteSpan solution, unsigned w, std::uint32_t n, std::uint32_t i, std::uint32_t j,
                   AccessLog* log, std::uint64_t& out) {
  ByteReader r(solution, "solution", log);
  std::size_t off = (static_cast<std::size_t>(i - 1) * n + (j - 1)) * w;
  std::uint64_t raw = 0;
  for (unsigned b = 0; b < w; ++b) {
    std::uint8_t byte;
    if (!r.u8_at(off + b, byte)) return false;
    raw |= static_cast<std::uint64_t>(byte) << (8 * b);
  }
  out = raw;
  return true;
}

StepVerdict lose(Party loser, Reason reason, const CostMeter& m) {
  return {loser == Party::prover ? Outcome::challenger_wins : Outcome::prover_wins, m.ops, reason};
}

}  // namespace

unsigned field_elem_width(std::uint64_t p) {
  std::uint64_t max = p - 1;
  if (max <= 0xff) return 1;
  if (max <= 0xffff) return 2;
  if (max <= 0xffffffffull) return 4;
  return 8;
}

Bytes matmul_encode_instance(const MatmulInstance& inst) {
  ByteWriter w;
  w.u64(inst.p);
  w.u32(inst.n);
  unsigned ew = field_elem_width(inst.p);
  auto put = [&](std::uint64_t v) {
    for (unsigned i = 0; i < ew; ++i) w.u8(static_cast<std::uint8_t>(v >> (8 * i)));
  };
  for (auto v : inst.a) put(v);
  for (auto v : inst.b) put(v);
  return w.take();
}

std::optional<MatmulInstance> matmul_decode_instance(ByteSpan bytes) {
  auto v = InstanceRef::open(bytes, nullptr);
  if (!v) return std::nullopt;
  MatmulInstance inst;
  inst.p = v->p;
  inst.n = v->n;
  std::size_t nn = static_cast<std::size_t>(inst.n) * inst.n;
  inst.a.resize(nn);
  inst.b.resize(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    if (!v->elem(i, inst.a[i]) || inst.a[i] >= inst.p) return std::nullopt;
    if (!v->elem(nn + i, inst.b[i]) || inst.b[i] >= inst.p) return std::nullopt;
  }
  return inst;
}

Bytes matmul_encode_solution(const MatmulInstance& inst, const std::vector<std::uint64_t>& c) {
  ByteWriter w;
  unsigned ew = field_elem_width(inst.p);
  for (auto v : c)
    for (unsigned i = 0; i < ew; ++i) w.u8(static_cast<std::uint8_t>(v >> (8 * i)));
  return w.take();
}

std::optional<std::vector<std::uint64_t>> matmul_decode_solution(const MatmulInstance& inst, ByteSpan bytes) {
  unsigned ew = field_elem_width(inst.p);
  std::size_t nn = static_cast<std::size_t>(inst.n) * inst.n;
  if (bytes.size() != nn * ew) return std::nullopt;
  std::vector<std::uint64_t> c(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    std::uint64_t raw = 0;
    for (unsigned b = 0; b < ew; ++b) raw |= static_cast<std::uint64_t>(bytes[i * ew + b]) << (8 * b);
    if (raw >= inst.p) return std::nullopt;
    c[i] = raw;
  }
  return c;
}

Bytes matmul_encode_challenge(const MatmulInstance& inst, std::uint32_t i, std::uint32_t j,
                              const std::vector<std::uint64_t>& d) {
  ByteWriter w;
  w.u32(i);
  w.u32(j);
  w.u32(static_cast<std::uint32_t>(d.size()));
  unsigned ew = field_elem_width(inst.p);
  for (auto v : d)
    for (unsigned b = 0; b < ew; ++b) w.u8(static_cast<std::uint8_t>(v >> (8 * b)));
  return w.take();
}

Bytes matmul_encode_defense(std::uint32_t k) {
  ByteWriter w;
  w.u32(k);
  return w.take();
}

std::vector<std::uint64_t> matmul_solve(const MatmulInstance& inst) {
  std::size_t n = inst.n;
  std::vector<std::uint64_t> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc = (acc + inst.a[i * n + k] * inst.b[k * n + j]) % inst.p;
      c[i * n + j] = acc;
    }
  return c;
}

bool matmul_validate_solution(ByteSpan instance, ByteSpan solution) {
  auto inst = matmul_decode_instance(instance);
  if (!inst) return false;
  return matmul_decode_solution(*inst, solution).has_value();
}

GameSpec matmul_make_spec(ByteSpan instance) {
  auto v = InstanceRef::open(instance, nullptr);
  GameSpec s;
  s.game_id = GameKind::matmul;
  if (!v) return s;
  s.input_size_n = v->n;
  s.round_bound_f = 2;
  s.message_bound_g = 12 + (v->n + 1) * v->w;  // the round-1 ladder dominates
  std::uint32_t log2n = 0;
  for (std::uint64_t x = v->n; x > 1; x >>= 1) ++log2n;
  s.referee_budget_h = 8ull * (log2n + 2);  // constant 8, log n shape
  return s;
}

StepVerdict matmul_referee(ByteSpan instance, ByteSpan solution, const Transcript& t,
                           std::size_t round, CheckContext& ctx) {
  CostMeter& m = ctx.meter;
  auto inst = InstanceRef::open(instance, ctx.access);
  if (!inst) return {Outcome::challenger_wins, m.ops, Reason::malformed};  // bad instance: scenario bug
  const Move& move = t.moves[round - 1];
  std::string mname = "move" + std::to_string(round);

  if (round == 1) {
    ByteReader r(move.payload, mname, ctx.access);
    std::uint32_t i, j, cnt;
    if (!r.u32(i) || !r.u32(j) || !r.u32(cnt)) return lose(Party::challenger, Reason::malformed, m);
    m.add(2);
    if (i < 1 || i > inst->n || j < 1 || j > inst->n)
      return lose(Party::challenger, Reason::invalid_challenge, m);
    m.add(1);
    if (cnt != inst->n + 1) return lose(Party::challenger, Reason::malformed, m);
    if (move.payload.size() != 12 + static_cast<std::size_t>(cnt) * inst->w)
      return lose(Party::challenger, Reason::malformed, m);
    auto d_at = [&](std::uint32_t idx, std::uint64_t& out) {
      std::uint64_t raw = 0;
      std::size_t off = 12 + static_cast<std::size_t>(idx) * inst->w;
      for (unsigned b = 0; b < inst->w; ++b) {
        std::uint8_t byte;
        if (!r.u8_at(off + b, byte)) return false;
        raw |= static_cast<std::uint64_t>(byte) << (8 * b);
      }
      out = raw;
      return true;
    };
    std::uint64_t d0, dn;
    if (!d_at(0, d0) || !d_at(inst->n, dn)) return lose(Party::challenger, Reason::malformed, m);
    m.add(2);
    if (dn >= inst->p) return lose(Party::challenger, Reason::malformed, m);
    if (d0 != 0) return lose(Party::challenger, Reason::invalid_challenge, m);
    std::uint64_t cij;
    if (!solution_elem(solution, inst->w, inst->n, i, j, ctx.access, cij))
      return lose(Party::prover, Reason::malformed, m);
    m.add(1);
    if (dn == cij) return lose(Party::challenger, Reason::invalid_challenge, m);
    return {Outcome::continue_game, m.ops, Reason::none};
  }

  if (round == 2) {
    // round-1 move already vetted; re-open it for the addressed reads
    ByteReader r1(t.moves[0].payload, "move1", ctx.access);
    std::uint32_t i, j;
    if (!r1.u32(i) || !r1.u32(j)) return lose(Party::challenger, Reason::malformed, m);
    ByteReader r(move.payload, mname, ctx.access);
    std::uint32_t k;
    if (!r.u32(k) || move.payload.size() != 4) return lose(Party::prover, Reason::malformed, m);
    m.add(1);
    if (k < 1 || k > inst->n) return lose(Party::prover, Reason::malformed, m);
    auto d_at = [&](std::uint32_t idx, std::uint64_t& out) {
      std::uint64_t raw = 0;
      std::size_t off = 12 + static_cast<std::size_t>(idx) * inst->w;
      for (unsigned b = 0; b < inst->w; ++b) {
        std::uint8_t byte;
        if (!r1.u8_at(off + b, byte)) return false;
        raw |= static_cast<std::uint64_t>(byte) << (8 * b);
      }
      out = raw;
      return true;
    };
    std::uint64_t dk, dk1, aik, bkj;
    if (!d_at(k, dk) || !d_at(k - 1, dk1)) return lose(Party::prover, Reason::malformed, m);
    m.add(2);
    if (dk >= inst->p || dk1 >= inst->p) return lose(Party::challenger, Reason::malformed, m);
    if (!inst->a_at(i, k, aik) || !inst->b_at(k, j, bkj))
      return lose(Party::prover, Reason::malformed, m);
    m.add(3);  // mul, add, mod
    std::uint64_t expect = (dk1 + aik % inst->p * (bkj % inst->p)) % inst->p;
    m.add(1);
    if (dk != expect) return {Outcome::prover_wins, m.ops, Reason::defense_upheld};
    return {Outcome::challenger_wins, m.ops, Reason::invalid_defense};
  }

  return {Outcome::challenger_wins, m.ops, Reason::malformed};
}

std::optional<Bytes> matmul_honest_move(ByteSpan instance, ByteSpan solution, const Transcript& t,
                                        Party role) {
  auto inst = matmul_decode_instance(instance);
  if (!inst) return std::nullopt;
  auto claimed = matmul_decode_solution(*inst, solution);
  if (!claimed) return std::nullopt;
  std::size_t n = inst->n;

  if (role == Party::challenger && t.moves.empty()) {
    auto truth = matmul_solve(*inst);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (truth[i * n + j] != (*claimed)[i * n + j]) {
          std::vector<std::uint64_t> d(n + 1, 0);
          for (std::size_t k = 1; k <= n; ++k)
            d[k] = (d[k - 1] + inst->a[i * n + (k - 1)] * inst->b[(k - 1) * n + j]) % inst->p;
          return matmul_encode_challenge(*inst, static_cast<std::uint32_t>(i + 1),
                                         static_cast<std::uint32_t>(j + 1), d);
        }
    return std::nullopt;  // correct product: no challenge
  }

  if (role == Party::prover && t.moves.size() == 1) {
    ByteReader r(t.moves[0].payload);
    std::uint32_t i, j, cnt;
    if (!r.u32(i) || !r.u32(j) || !r.u32(cnt)) return std::nullopt;
    if (i < 1 || i > n || j < 1 || j > n || cnt != n + 1) return std::nullopt;
    std::vector<std::uint64_t> d(cnt);
    for (auto& v : d) {
      std::uint64_t raw = 0;
      for (unsigned b = 0; b < field_elem_width(inst->p); ++b) {
        std::uint8_t byte;
        if (!r.u8(byte)) return std::nullopt;
        raw |= static_cast<std::uint64_t>(byte) << (8 * b);
      }
      v = raw;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      std::uint64_t aik = inst->a[(i - 1) * n + (k - 1)] % inst->p;
      std::uint64_t bkj = inst->b[(k - 1) * n + (j - 1)] % inst->p;
      if (d[k] != (d[k - 1] + aik * bkj) % inst->p)
        return matmul_encode_defense(static_cast<std::uint32_t>(k));
    }
    return std::nullopt;  // ladder is consistent: no defense exists
  }

  return std::nullopt;
}

std::string matmul_instance_to_text(ByteSpan instance) {
  auto inst = matmul_decode_instance(instance);
  if (!inst) return {};
  std::ostringstream os;
  os << "matmul\n" << "p " << inst->p << "\n" << "n " << inst->n << "\n";
  auto row = [&](const char* tag, const std::vector<std::uint64_t>& v) {
    os << tag;
    for (auto x : v) os << " " << x;
    os << "\n";
  };
  row("A", inst->a);
  row("B", inst->b);
  return os.str();
}

std::optional<Bytes> matmul_instance_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  MatmulInstance inst;
  if (!(is >> tag) || tag != "matmul") return std::nullopt;
  if (!(is >> tag >> inst.p) || tag != "p") return std::nullopt;
  if (!(is >> tag >> inst.n) || tag != "n") return std::nullopt;
  std::size_t nn = static_cast<std::size_t>(inst.n) * inst.n;
  inst.a.resize(nn);
  inst.b.resize(nn);
  if (!(is >> tag) || tag != "A") return std::nullopt;
  for (auto& v : inst.a)
    if (!(is >> v) || v >= inst.p) return std::nullopt;
  if (!(is >> tag) || tag != "B") return std::nullopt;
  for (auto& v : inst.b)
    if (!(is >> v) || v >= inst.p) return std::nullopt;
  return matmul_encode_instance(inst);
}

}  // namespace refgame::games
