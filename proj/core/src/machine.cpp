#include "weihrauch/machine.hpp"

#include <cassert>

#include "weihrauch/assembler.hpp"
#include "weihrauch/programs.hpp"

namespace weihrauch {

namespace {

constexpr uint64_t kMaxValueBits = 1 << 16;   // registers beyond this stall the run
constexpr uint64_t kMaxOraclePos = 1 << 22;   // oracle reads beyond this stall
constexpr int kMaxSimDepth = 64;

int operand_regs(Op op) {
  switch (op) {
    case Op::Const: return 1;
    case Op::Mov: return 2;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Mod: return 3;
    case Op::Jz: return 1;
    case Op::Jmp: return 0;
    case Op::Oracle: return 2;
    case Op::Arg: return 1;
    case Op::Out: return 1;
    case Op::Halt: return 0;
    case Op::Sim: return 6;
    case Op::Self: return 1;
  }
  return 0;
}

bool has_imm(Op op) { return op == Op::Const || op == Op::Jz || op == Op::Jmp; }

// --- bytecode ---------------------------------------------------------------

void put_varint(std::vector<uint8_t>& out, const Nat& v) {
  if (v == 0) {
    out.push_back(0);
    return;
  }
  Nat rest = v;
  while (rest > 0) {
    Nat group = rest & 0x7f;
    rest >>= 7;
    uint8_t b = static_cast<uint8_t>(group.get_ui());
    if (rest > 0) b |= 0x80;
    out.push_back(b);
  }
}

bool get_varint(const std::vector<uint8_t>& in, size_t& pos, Nat& out) {
  Nat v = 0;
  int shift = 0;
  size_t start = pos;
  for (;;) {
    if (pos >= in.size()) return false;
    uint8_t b = in[pos++];
    Nat group = b & 0x7f;
    v |= group << shift;
    shift += 7;
    if (!(b & 0x80)) {
      // canonical: the final group must be non-zero for multi-byte encodings
      if (pos - start > 1 && (b & 0x7f) == 0) return false;
      out = v;
      return true;
    }
    if (shift > 4096) return false;
  }
}

std::vector<uint8_t> serialize(const Program& prog) {
  std::vector<uint8_t> out;
  for (const Instr& ins : prog.code) {
    out.push_back(static_cast<uint8_t>(ins.op));
    for (int r = 0; r < operand_regs(ins.op); ++r) out.push_back(ins.reg[r]);
    if (has_imm(ins.op)) put_varint(out, ins.imm);
  }
  return out;
}

bool parse(const std::vector<uint8_t>& bytes, Program& prog) {
  prog.code.clear();
  size_t pos = 0;
  while (pos < bytes.size()) {
    uint8_t opb = bytes[pos++];
    if (opb > static_cast<uint8_t>(Op::Self)) return false;
    Instr ins;
    ins.op = static_cast<Op>(opb);
    for (int r = 0; r < operand_regs(ins.op); ++r) {
      if (pos >= bytes.size()) return false;
      ins.reg[r] = bytes[pos++];
    }
    if (has_imm(ins.op)) {
      if (!get_varint(bytes, pos, ins.imm)) return false;
    }
    prog.code.push_back(std::move(ins));
  }
  return true;
}

// bijective base-256: ℕ ↔ byte strings
Nat bytes_to_nat(const std::vector<uint8_t>& bytes) {
  Nat n = 0;
  for (uint8_t b : bytes) n = n * 256 + (b + 1);
  return n;
}

std::vector<uint8_t> nat_to_bytes(const Nat& value) {
  std::vector<uint8_t> out;
  Nat n = value;
  while (n > 0) {
    Nat d = ((n - 1) % 256) + 1;
    out.push_back(static_cast<uint8_t>(d.get_ui() - 1));
    n = (n - d) / 256;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

Program diverging_program() {
  Program p;
  Instr ins;
  ins.op = Op::Jmp;
  ins.imm = 0;
  p.code.push_back(ins);
  return p;
}

Program decode_program(const Nat& index) {
  if (index < prog::kCuratedCount) return prog::curated(to_u64(index));
  Nat body = index - prog::kCuratedCount;
  Program p;
  if (!parse(nat_to_bytes(body), p)) return diverging_program();
  return p;
}

Nat encode_program(const Program& p) {
  for (uint64_t i = 0; i < prog::kCuratedCount; ++i)
    if (prog::curated(i) == p) return nat(i);
  return bytes_to_nat(serialize(p)) + prog::kCuratedCount;
}

// --- interpreter -------------------------------------------------------------

namespace {

// oracle access: returns the symbol, charging any extra interpretation cost to
// `extra`, all within `avail` steps; nullopt = did not settle
using OracleFn =
    std::function<std::optional<Nat>(const Nat& pos, uint64_t avail, uint64_t& extra)>;

struct Frame {
  std::vector<Nat> regs;
  Frame() : regs(256) {}
  void reset() {
    for (Nat& r : regs) r = 0;
  }
};

// free-list of register frames; nested Sim runs each lease their own
std::vector<std::unique_ptr<Frame>>& frame_pool() {
  thread_local std::vector<std::unique_ptr<Frame>> pool;
  return pool;
}

struct FrameLease {
  std::unique_ptr<Frame> frame;
  FrameLease() {
    auto& pool = frame_pool();
    if (pool.empty()) {
      frame = std::make_unique<Frame>();
    } else {
      frame = std::move(pool.back());
      pool.pop_back();
    }
    frame->reset();
  }
  ~FrameLease() { frame_pool().push_back(std::move(frame)); }
};

bool too_big(const Nat& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) > kMaxValueBits; }

RunOutcome run_rec(const Program& prog, const OracleFn& oracle, const Nat& arg,
                   uint64_t budget, const std::optional<Nat>& self_index, int depth);

RunOutcome exhausted(uint64_t budget) {
  RunOutcome o;
  o.status = RunOutcome::Status::Running;
  o.steps = budget;
  return o;
}

RunOutcome run_rec(const Program& prog, const OracleFn& oracle, const Nat& arg,
                   uint64_t budget, const std::optional<Nat>& self_index, int depth) {
  if (depth > kMaxSimDepth) return exhausted(budget);
  FrameLease lease;
  std::vector<Nat>& regs = lease.frame->regs;
  Nat out_value = 0;
  uint64_t pc = 0;
  uint64_t steps = 0;
  std::optional<Nat> self_cache = self_index;

  for (;;) {
    if (pc >= prog.code.size()) {
      RunOutcome o;
      o.status = RunOutcome::Status::Halted;
      o.value = out_value;
      o.steps = steps;
      return o;
    }
    if (steps >= budget) return exhausted(budget);
    const Instr& ins = prog.code[pc];
    ++steps;
    switch (ins.op) {
      case Op::Const:
        regs[ins.reg[0]] = ins.imm;
        break;
      case Op::Mov:
        regs[ins.reg[0]] = regs[ins.reg[1]];
        break;
      case Op::Add:
        regs[ins.reg[0]] = regs[ins.reg[1]] + regs[ins.reg[2]];
        if (too_big(regs[ins.reg[0]])) return exhausted(budget);
        break;
      case Op::Sub: {
        const Nat& a = regs[ins.reg[1]];
        const Nat& b = regs[ins.reg[2]];
        regs[ins.reg[0]] = a > b ? Nat(a - b) : Nat(0);
        break;
      }
      case Op::Mul:
        regs[ins.reg[0]] = regs[ins.reg[1]] * regs[ins.reg[2]];
        if (too_big(regs[ins.reg[0]])) return exhausted(budget);
        break;
      case Op::Div: {
        const Nat& b = regs[ins.reg[2]];
        regs[ins.reg[0]] = b == 0 ? Nat(0) : Nat(regs[ins.reg[1]] / b);
        break;
      }
      case Op::Mod: {
        const Nat& b = regs[ins.reg[2]];
        regs[ins.reg[0]] = b == 0 ? regs[ins.reg[1]] : Nat(regs[ins.reg[1]] % b);
        break;
      }
      case Op::Jz:
        if (regs[ins.reg[0]] == 0) {
          pc = fits_u64(ins.imm) ? to_u64(ins.imm) : prog.code.size();
          continue;
        }
        break;
      case Op::Jmp:
        pc = fits_u64(ins.imm) ? to_u64(ins.imm) : prog.code.size();
        continue;
      case Op::Oracle: {
        const Nat& pos = regs[ins.reg[1]];
        if (!fits_u64(pos) || to_u64(pos) > kMaxOraclePos) return exhausted(budget);
        uint64_t extra = 0;
        auto v = oracle(pos, budget - steps, extra);
        steps += extra;
        if (steps > budget) return exhausted(budget);
        if (!v) return exhausted(budget);
        regs[ins.reg[0]] = std::move(*v);
        break;
      }
      case Op::Arg:
        regs[ins.reg[0]] = arg;
        break;
      case Op::Out:
        out_value = regs[ins.reg[0]];
        break;
      case Op::Halt: {
        RunOutcome o;
        o.status = RunOutcome::Status::Halted;
        o.value = out_value;
        o.steps = steps;
        return o;
      }
      case Op::Sim: {
        // rf rv rprog rarg rbudget rview
        const Nat& vbudget = regs[ins.reg[4]];
        const Nat& vview = regs[ins.reg[5]];
        uint64_t avail = budget - steps;
        uint64_t inner_budget =
            fits_u64(vbudget) ? std::min(to_u64(vbudget), avail) : avail;
        bool truncated = !fits_u64(vbudget) || to_u64(vbudget) > avail;

        Program inner = decode_program(regs[ins.reg[2]]);
        Nat inner_index = regs[ins.reg[2]];
        OracleFn inner_oracle;
        if (vview == 0) {
          inner_oracle = oracle;
        } else {
          auto [t, param] = cantor_unpair(vview - 1);
          Program tprog = decode_program(t);
          Nat tindex = t;
          Nat tparam = param;
          inner_oracle = [tprog, tindex, tparam, &oracle, depth](
                             const Nat& pos, uint64_t avail2,
                             uint64_t& extra) -> std::optional<Nat> {
            RunOutcome r = run_rec(tprog, oracle, cantor_pair(tparam, pos), avail2,
                                   tindex, depth + 2);
            extra = r.halted() ? r.steps : avail2;
            if (!r.halted()) return std::nullopt;
            return r.value;
          };
        }
        RunOutcome r =
            run_rec(inner, inner_oracle, regs[ins.reg[3]], inner_budget, inner_index, depth + 1);
        if (r.halted()) {
          steps += r.steps;
          if (steps > budget) return exhausted(budget);
          regs[ins.reg[0]] = nat(r.steps) + 1;
          regs[ins.reg[1]] = r.value;
        } else {
          if (truncated) return exhausted(budget);  // true verdict needs more than we have
          steps += inner_budget;
          if (steps > budget) return exhausted(budget);
          regs[ins.reg[0]] = 0;
          regs[ins.reg[1]] = 0;
        }
        break;
      }
      case Op::Self:
        if (!self_cache) self_cache = encode_program(prog);
        regs[ins.reg[0]] = *self_cache;
        break;
    }
    ++pc;
  }
}

}  // namespace

RunOutcome run_program(const Program& prog, const Name& oracle, const Nat& arg,
                       uint64_t budget, const std::optional<Nat>& self_index) {
  OracleFn base = [&oracle, budget](const Nat& pos, uint64_t avail,
                                    uint64_t& extra) -> std::optional<Nat> {
    extra = 0;
    (void)avail;
    return oracle.try_at(to_u64(pos), budget + 64);
  };
  return run_rec(prog, base, arg, budget, self_index, 0);
}

RunOutcome run(const Nat& index, const Name& oracle, const Nat& arg, uint64_t budget) {
  return run_program(decode_program(index), oracle, arg, budget, index);
}

std::optional<uint64_t> time_phi(const Nat& index, const Name& oracle, const Nat& arg,
                                 uint64_t budget) {
  RunOutcome o = run(index, oracle, arg, budget);
  if (!o.halted()) return std::nullopt;
  return o.steps;
}

uint8_t max_register(const Program& prog) {
  uint8_t m = 0;
  for (const Instr& ins : prog.code)
    for (int r = 0; r < operand_regs(ins.op); ++r) m = std::max(m, ins.reg[r]);
  return m;
}

Program shift_jump_targets(const Program& prog, uint64_t offset) {
  Program out = prog;
  for (Instr& ins : out.code)
    if (ins.op == Op::Jz || ins.op == Op::Jmp) ins.imm += nat(offset);
  return out;
}

Program replace_arg_reads(const Program& prog, uint8_t arg_register) {
  Program out = prog;
  for (Instr& ins : out.code)
    if (ins.op == Op::Arg) {
      ins.op = Op::Mov;
      ins.reg[1] = arg_register;
    }
  return out;
}

Nat smn(const Nat& i, const Nat& a) {
  Program body = decode_program(i);
  uint8_t A = max_register(body) + 1;
  if (A > 250) throw std::runtime_error("smn: program uses too many registers");
  uint8_t s1 = A + 1, s2 = A + 2, s3 = A + 3;
  auto mk = [](Op op, std::initializer_list<uint8_t> rs, Nat imm = Nat(0)) {
    Instr ins;
    ins.op = op;
    int k = 0;
    for (uint8_t r : rs) ins.reg[k++] = r;
    ins.imm = std::move(imm);
    return ins;
  };
  Program out;
  // A := ⟨a, n⟩ = (a+n)(a+n+1)/2 + n
  out.code.push_back(mk(Op::Arg, {A}));
  out.code.push_back(mk(Op::Const, {s1}, a));
  out.code.push_back(mk(Op::Add, {s2, s1, A}));
  out.code.push_back(mk(Op::Const, {s3}, Nat(1)));
  out.code.push_back(mk(Op::Add, {s3, s2, s3}));
  out.code.push_back(mk(Op::Mul, {s2, s2, s3}));
  out.code.push_back(mk(Op::Const, {s3}, Nat(2)));
  out.code.push_back(mk(Op::Div, {s2, s2, s3}));
  out.code.push_back(mk(Op::Add, {A, s2, A}));
  uint64_t prefix = out.code.size();
  Program shifted = shift_jump_targets(replace_arg_reads(body, A), prefix);
  out.code.insert(out.code.end(), shifted.code.begin(), shifted.code.end());
  return encode_program(out);
}

Nat pad_total(const Nat& n) {
  // Replays stages: stage s checks whether input position t settles within
  // budget s; if so the value+1 is emitted and t advances, then one dummy 0 is
  // emitted either way. Total for every oracle.
  std::string text =
      "  arg r0\n"
      "  const r1 0        ; symbols emitted\n"
      "  const r2 0        ; next input position\n"
      "  const r3 0        ; stage\n"
      "  const r8 1\n"
      "stage:\n"
      "  const r4 " + nat_str(n) + "\n"
      "  sim r5 r6 r4 r2 r3 r7\n"
      "  jz r5 nodata\n"
      "  add r6 r6 r8      ; value+1\n"
      "  sub r9 r1 r0\n"
      "  sub r10 r0 r1\n"
      "  add r9 r9 r10\n"
      "  jz r9 emitval\n"
      "  add r1 r1 r8\n"
      "  add r2 r2 r8\n"
      "nodata:\n"
      "  sub r9 r1 r0\n"
      "  sub r10 r0 r1\n"
      "  add r9 r9 r10\n"
      "  jz r9 emitzero\n"
      "  add r1 r1 r8\n"
      "  add r3 r3 r8\n"
      "  jmp stage\n"
      "emitval:\n"
      "  out r6\n"
      "  halt\n"
      "emitzero:\n"
      "  out r7\n"
      "  halt\n";
  return encode_program(assemble(text));
}

Nat kleene_fix(const Nat& r_index) {
  std::string text =
      "  self r0\n"
      "  const r1 0\n"
      "  const r2 " + nat_str(r_index) + "\n"
      "  const r10 1\n"
      "rloop:\n"
      "  sim r3 r4 r2 r0 r1 r5\n"
      "  jz r3 rnext\n"
      "  arg r6\n"
      "  const r7 0\n"
      "vloop:\n"
      "  sim r8 r9 r4 r6 r7 r5\n"
      "  jz r8 vnext\n"
      "  out r9\n"
      "  halt\n"
      "vnext:\n"
      "  add r7 r7 r10\n"
      "  jmp vloop\n"
      "rnext:\n"
      "  add r1 r1 r10\n"
      "  jmp rloop\n";
  return encode_program(assemble(text));
}

Name big_u(const Name& name, uint64_t budget_per_position) {
  Name left = Name::unpair_left(name);    // i followed by r
  Name right = Name::unpair_right(name);  // p
  Name oracle = Name::pair(Name::drop(left, 1), right);  // ⟨r,p⟩
  return Name::from_step([left, oracle, budget_per_position](
                             uint64_t m, uint64_t effort) -> std::optional<Nat> {
    auto i = left.try_at(0, effort);
    if (!i) return std::nullopt;
    RunOutcome o = run(*i, oracle, nat(m), budget_per_position);
    if (!o.halted()) return std::nullopt;
    return o.value;
  });
}

Name big_u_truncated(const Name& name, uint64_t n, uint64_t budget_per_position) {
  Name u = big_u(name, budget_per_position);
  Nat cap = n == 0 ? Nat(0) : nat(n - 1);
  return Name::from_step([u, cap](uint64_t m, uint64_t effort) -> std::optional<Nat> {
    auto v = u.try_at(m, effort);
    if (!v) return std::nullopt;
    return std::min(*v, cap);
  });
}

}  // namespace weihrauch
