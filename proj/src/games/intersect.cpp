// Copyright (c) 2026 The refgame developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "refgame/games/intersect.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace refgame::games {

namespace {

unsigned elem_width(std::uint32_t r) {
  if (r <= 8) return 1;
  if (r <= 16) return 2;
  if (r <= 32) return 4;
  return 8;
}

// layout: u32 r | u32 n_a | A | u32 n_b | B  (elements elem_width(r) bytes)
struct InstanceRef {
  ByteReader r;
  std::uint32_t bits = 0, n_a = 0, n_b = 0;
  unsigned w = 1;
  std::size_t a_off = 0, b_off = 0;

  static std::optional<InstanceRef> open(ByteSpan bytes, AccessLog* log) {
    InstanceRef v{ByteReader(bytes, "instance", log)};
    if (!v.r.u32(v.bits) || v.bits < 1 || v.bits > 64) return std::nullopt;
    v.w = elem_width(v.bits);
    if (!v.r.u32(v.n_a)) return std::nullopt;
    v.a_off = 8;
    if (!v.r.skip(static_cast<std::size_t>(v.n_a) * v.w)) return std::nullopt;
    if (!v.r.u32(v.n_b)) return std::nullopt;
    v.b_off = v.a_off + static_cast<std::size_t>(v.n_a) * v.w + 4;
    std::size_t need = v.b_off + static_cast<std::size_t>(v.n_b) * v.w;
    if (bytes.size() != need) return std::nullopt;
    return v;
  }

  bool elem_at(std::size_t off, std::uint64_t& out) const {
    std::uint64_t raw = 0;
    for (unsigned i = 0; i < w; ++i) {
      std::uint8_t b;
      if (!r.u8_at(off + i, b)) return false;
      raw |= static_cast<std::uint64_t>(b) << (8 * i);
    }
    out = raw;
    return true;
  }
  bool a_at(std::uint32_t i, std::uint64_t& out) const {  // 1-based
    return i >= 1 && i <= n_a && elem_at(a_off + static_cast<std::size_t>(i - 1) * w, out);
  }
  bool b_at(std::uint32_t i, std::uint64_t& out) const {
    return i >= 1 && i <= n_b && elem_at(b_off + static_cast<std::size_t>(i - 1) * w, out);
  }
};

struct SolutionRef {
  ByteReader r;
  std::uint32_t n_c = 0;
  unsigned w = 1;

  static std::optional<SolutionRef> open(ByteSpan bytes, unsigned w, AccessLog* log) {
    SolutionRef v{ByteReader(bytes, "solution", log)};
    v.w = w;
    if (!v.r.u32(v.n_c)) return std::nullopt;
    if (bytes.size() != 4 + static_cast<std::size_t>(v.n_c) * w) return std::nullopt;
    return v;
  }
  bool c_at(std::uint32_t i, std::uint64_t& out) const {
    if (i < 1 || i > n_c) return false;
    std::uint64_t raw = 0;
    std::size_t off = 4 + static_cast<std::size_t>(i - 1) * w;
    for (unsigned b = 0; b < w; ++b) {
      std::uint8_t byte;
      if (!r.u8_at(off + b, byte)) return false;
      raw |= static_cast<std::uint64_t>(byte) << (8 * b);
    }
    out = raw;
    return true;
  }
};

StepVerdict lose(Party loser, Reason reason, const CostMeter& m) {
  return {loser == Party::prover ? Outcome::challenger_wins : Outcome::prover_wins, m.ops, reason};
}

}  // namespace

Bytes intersect_encode_instance(const IntersectInstance& inst) {
  ByteWriter w;
  w.u32(inst.r);
  unsigned ew = elem_width(inst.r);
  auto put_arr = [&](const std::vector<std::uint64_t>& v) {
    w.u32(static_cast<std::uint32_t>(v.size()));
    for (auto x : v)
      for (unsigned i = 0; i < ew; ++i) w.u8(static_cast<std::uint8_t>(x >> (8 * i)));
  };
  put_arr(inst.a);
  put_arr(inst.b);
  return w.take();
}

std::optional<IntersectInstance> intersect_decode_instance(ByteSpan bytes) {
  auto v = InstanceRef::open(bytes, nullptr);
  if (!v) return std::nullopt;
  IntersectInstance inst;
  inst.r = v->bits;
  inst.a.resize(v->n_a);
  inst.b.resize(v->n_b);
  for (std::uint32_t i = 1; i <= v->n_a; ++i)
    if (!v->a_at(i, inst.a[i - 1])) return std::nullopt;
  for (std::uint32_t i = 1; i <= v->n_b; ++i)
    if (!v->b_at(i, inst.b[i - 1])) return std::nullopt;
  return inst;
}

Bytes intersect_encode_solution(const IntersectInstance& inst, const std::vector<std::uint64_t>& c) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(c.size()));
  unsigned ew = elem_width(inst.r);
  for (auto x : c)
    for (unsigned i = 0; i < ew; ++i) w.u8(static_cast<std::uint8_t>(x >> (8 * i)));
  return w.take();
}

std::optional<std::vector<std::uint64_t>> intersect_decode_solution(const IntersectInstance& inst,
                                                                    ByteSpan bytes) {
  auto v = SolutionRef::open(bytes, elem_width(inst.r), nullptr);
  if (!v) return std::nullopt;
  std::vector<std::uint64_t> c(v->n_c);
  for (std::uint32_t i = 1; i <= v->n_c; ++i)
    if (!v->c_at(i, c[i - 1])) return std::nullopt;
  return c;
}

Bytes intersect_encode_case1(std::uint32_t i_a, std::uint32_t i_b) {
  ByteWriter w;
  w.u8(1);
  w.u32(i_a);
  w.u32(i_b);
  return w.take();
}

Bytes intersect_encode_case2(std::uint32_t j_c) {
  ByteWriter w;
  w.u8(2);
  w.u32(j_c);
  return w.take();
}

Bytes intersect_encode_defense1(std::uint32_t i_c) {
  ByteWriter w;
  w.u32(i_c);
  return w.take();
}

Bytes intersect_encode_defense2(std::uint32_t j_a, std::uint32_t j_b) {
  ByteWriter w;
  w.u32(j_a);
  w.u32(j_b);
  return w.take();
}

std::vector<std::uint64_t> intersect_solve(const IntersectInstance& inst) {
  std::set<std::uint64_t> sa(inst.a.begin(), inst.a.end());
  std::set<std::uint64_t> common;
  for (auto x : inst.b)
    if (sa.count(x)) common.insert(x);
  return {common.begin(), common.end()};
}

bool intersect_validate_solution(ByteSpan instance, ByteSpan solution) {
  auto inst = InstanceRef::open(instance, nullptr);
  if (!inst) return false;
  return SolutionRef::open(solution, inst->w, nullptr).has_value();
}

GameSpec intersect_make_spec(ByteSpan instance) {
  auto v = InstanceRef::open(instance, nullptr);
  GameSpec s;
  s.game_id = GameKind::set_intersection;
  if (!v) return s;
  s.input_size_n = v->n_a + v->n_b;
  s.round_bound_f = 2;
  s.message_bound_g = 9;
  std::uint32_t log2n = 0;
  for (std::uint64_t x = std::max<std::uint32_t>(2, s.input_size_n); x > 1; x >>= 1) ++log2n;
  s.referee_budget_h = 8ull * (log2n + 2);
  return s;
}

StepVerdict intersect_referee(ByteSpan instance, ByteSpan solution, const Transcript& t,
                              std::size_t round, CheckContext& ctx) {
  CostMeter& m = ctx.meter;
  auto inst = InstanceRef::open(instance, ctx.access);
  if (!inst) return {Outcome::challenger_wins, m.ops, Reason::malformed};
  auto sol = SolutionRef::open(solution, inst->w, ctx.access);
  if (!sol) return lose(Party::prover, Reason::malformed, m);
  const Move& move = t.moves[round - 1];
  std::string mname = "move" + std::to_string(round);

  if (round == 1) {
    ByteReader r(move.payload, mname, ctx.access);
    std::uint8_t kase;
    if (!r.u8(kase)) return lose(Party::challenger, Reason::malformed, m);
    if (kase == 1) {
      std::uint32_t i_a, i_b;
      if (!r.u32(i_a) || !r.u32(i_b) || move.payload.size() != 9)
        return lose(Party::challenger, Reason::malformed, m);
      m.add(2);
      if (i_a < 1 || i_a > inst->n_a || i_b < 1 || i_b > inst->n_b)
        return lose(Party::challenger, Reason::invalid_challenge, m);
      std::uint64_t va, vb;
      inst->a_at(i_a, va);
      inst->b_at(i_b, vb);
      m.add(1);  // full-width element comparison
      if (va != vb) return lose(Party::challenger, Reason::invalid_challenge, m);
      return {Outcome::continue_game, m.ops, Reason::none};
    }
    if (kase == 2) {
      std::uint32_t j_c;
      if (!r.u32(j_c) || move.payload.size() != 5) return lose(Party::challenger, Reason::malformed, m);
      m.add(1);
      if (j_c < 1 || j_c > sol->n_c) return lose(Party::challenger, Reason::invalid_challenge, m);
      return {Outcome::continue_game, m.ops, Reason::none};
    }
    return lose(Party::challenger, Reason::malformed, m);
  }

  if (round == 2) {
    ByteReader r1(t.moves[0].payload, "move1", ctx.access);
    std::uint8_t kase;
    if (!r1.u8(kase)) return lose(Party::challenger, Reason::malformed, m);
    ByteReader r(move.payload, mname, ctx.access);
    if (kase == 1) {
      std::uint32_t i_a, i_b, i_c;
      if (!r1.u32(i_a) || !r1.u32(i_b)) return lose(Party::challenger, Reason::malformed, m);
      if (!r.u32(i_c) || move.payload.size() != 4) return lose(Party::prover, Reason::malformed, m);
      m.add(1);
      if (i_c < 1 || i_c > sol->n_c) return lose(Party::prover, Reason::invalid_defense, m);
      std::uint64_t va, vc;
      inst->a_at(i_a, va);
      sol->c_at(i_c, vc);
      m.add(1);
      if (va == vc) return {Outcome::prover_wins, m.ops, Reason::defense_upheld};
      return {Outcome::challenger_wins, m.ops, Reason::invalid_defense};
    }
    // case 2
    std::uint32_t j_c, j_a, j_b;
    if (!r1.u32(j_c)) return lose(Party::challenger, Reason::malformed, m);
    if (!r.u32(j_a) || !r.u32(j_b) || move.payload.size() != 8)
      return lose(Party::prover, Reason::malformed, m);
    m.add(2);
    if (j_a < 1 || j_a > inst->n_a || j_b < 1 || j_b > inst->n_b)
      return lose(Party::prover, Reason::invalid_defense, m);
    std::uint64_t vc, va, vb;
    sol->c_at(j_c, vc);
    inst->a_at(j_a, va);
    inst->b_at(j_b, vb);
    m.add(2);
    if (vc == va && va == vb) return {Outcome::prover_wins, m.ops, Reason::defense_upheld};
    return {Outcome::challenger_wins, m.ops, Reason::invalid_defense};
  }

  return {Outcome::challenger_wins, m.ops, Reason::malformed};
}

std::optional<Bytes> intersect_honest_move(ByteSpan instance, ByteSpan solution, const Transcript& t,
                                           Party role) {
  auto inst = intersect_decode_instance(instance);
  if (!inst) return std::nullopt;
  auto c = intersect_decode_solution(*inst, solution);
  if (!c) return std::nullopt;
  std::set<std::uint64_t> c_set(c->begin(), c->end());
  std::set<std::uint64_t> sa(inst->a.begin(), inst->a.end());
  std::set<std::uint64_t> sb(inst->b.begin(), inst->b.end());

  if (role == Party::challenger && t.moves.empty()) {
    // case (i) preferred: least (i_a, i_b) whose common element is missing from C
    for (std::uint32_t i_a = 1; i_a <= inst->a.size(); ++i_a)
      for (std::uint32_t i_b = 1; i_b <= inst->b.size(); ++i_b)
        if (inst->a[i_a - 1] == inst->b[i_b - 1] && !c_set.count(inst->a[i_a - 1]))
          return intersect_encode_case1(i_a, i_b);
    for (std::uint32_t j_c = 1; j_c <= c->size(); ++j_c) {
      std::uint64_t v = (*c)[j_c - 1];
      if (!sa.count(v) || !sb.count(v)) return intersect_encode_case2(j_c);
    }
    return std::nullopt;
  }

  if (role == Party::prover && t.moves.size() == 1) {
    ByteReader r(t.moves[0].payload);
    std::uint8_t kase;
    if (!r.u8(kase)) return std::nullopt;
    if (kase == 1) {
      std::uint32_t i_a, i_b;
      if (!r.u32(i_a) || !r.u32(i_b) || i_a < 1 || i_a > inst->a.size()) return std::nullopt;
      std::uint64_t v = inst->a[i_a - 1];
      for (std::uint32_t i_c = 1; i_c <= c->size(); ++i_c)
        if ((*c)[i_c - 1] == v) return intersect_encode_defense1(i_c);
      return std::nullopt;
    }
    if (kase == 2) {
      std::uint32_t j_c;
      if (!r.u32(j_c) || j_c < 1 || j_c > c->size()) return std::nullopt;
      std::uint64_t v = (*c)[j_c - 1];
      for (std::uint32_t j_a = 1; j_a <= inst->a.size(); ++j_a) {
        if (inst->a[j_a - 1] != v) continue;
        for (std::uint32_t j_b = 1; j_b <= inst->b.size(); ++j_b)
          if (inst->b[j_b - 1] == v) return intersect_encode_defense2(j_a, j_b);
        break;  // no matching b element exists for this value
      }
      return std::nullopt;
    }
  }

  return std::nullopt;
}

std::string intersect_instance_to_text(ByteSpan instance) {
  auto inst = intersect_decode_instance(instance);
  if (!inst) return {};
  std::ostringstream os;
  os << "intersection\n" << "r " << inst->r << "\n";
  auto row = [&](const char* tag, const std::vector<std::uint64_t>& v) {
    os << tag << " " << v.size();
    for (auto x : v) os << " " << x;
    os << "\n";
  };
  row("A", inst->a);
  row("B", inst->b);
  return os.str();
}

std::optional<Bytes> intersect_instance_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  IntersectInstance inst;
  if (!(is >> tag) || tag != "intersection") return std::nullopt;
  if (!(is >> tag >> inst.r) || tag != "r" || inst.r < 1 || inst.r > 64) return std::nullopt;
  std::uint64_t limit = inst.r >= 64 ? ~0ull : (1ull << inst.r) - 1;
  auto read_arr = [&](const char* want, std::vector<std::uint64_t>& out) {
    std::size_t n;
    if (!(is >> tag >> n) || tag != want) return false;
    out.resize(n);
    for (auto& v : out)
      if (!(is >> v) || v > limit) return false;
    return true;
  };
  if (!read_arr("A", inst.a) || !read_arr("B", inst.b)) return std::nullopt;
  return intersect_encode_instance(inst);
}

}  // namespace refgame::games
