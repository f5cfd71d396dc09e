#pragma once

#include <array>
#include <optional>
#include <vector>

#include "weihrauch/name.hpp"

namespace weihrauch {

// Register machine with an append-only output tape, an oracle read
// instruction, a clock-bounded simulation instruction and a self-index
// instruction. Programs are data; every natural decodes to some program
// (junk decodes to a diverging one).
enum class Op : uint8_t {
  Const,   // r := k
  Mov,     // r := s
  Add,     // r := s + t
  Sub,     // r := s ∸ t (truncated)
  Mul,     // r := s * t
  Div,     // r := s / t, x/0 = 0
  Mod,     // r := s mod t, x mod 0 = x
  Jz,      // if r == 0 goto label
  Jmp,     // goto label
  Oracle,  // r := oracle(s)
  Arg,     // r := argument
  Out,     // append r to the output tape
  Halt,    // stop; outcome value = last tape symbol (0 if none)
  Sim,     // rf,rv := bounded run of program r_prog on arg r_arg, budget r_bud, view r_view
  Self,    // r := own index
};

struct Instr {
  Op op;
  // register operands are < 256; Const/Jz/Jmp carry a Nat immediate in `imm`
  std::array<uint8_t, 6> reg{};
  Nat imm;

  bool operator==(const Instr& other) const {
    return op == other.op && reg == other.reg && imm == other.imm;
  }
};

struct Program {
  std::vector<Instr> code;
  bool operator==(const Program& other) const { return code == other.code; }
};

struct RunOutcome {
  enum class Status { Halted, Running };
  Status status = Status::Running;
  Nat value;       // meaningful when Halted
  uint64_t steps = 0;  // steps consumed (≤ budget)

  bool halted() const { return status == Status::Halted; }
};

// --- Gödel numbering -------------------------------------------------------

// Indices below `curated_count` denote the fixed program table (see
// programs.hpp); everything above is bijective base-256 bytecode. Junk
// bytecode decodes to the diverging program.
Program decode_program(const Nat& index);
Nat encode_program(const Program& prog);
Program diverging_program();

// --- Interpretation --------------------------------------------------------

// Deterministic; Halted outcomes are stable under larger budgets.
RunOutcome run_program(const Program& prog, const Name& oracle, const Nat& arg,
                       uint64_t budget, const std::optional<Nat>& self_index = std::nullopt);
RunOutcome run(const Nat& index, const Name& oracle, const Nat& arg, uint64_t budget);

// Step count of the halting run, if it halts within budget.
std::optional<uint64_t> time_phi(const Nat& index, const Name& oracle, const Nat& arg,
                                 uint64_t budget);

// --- The classic index constructions ----------------------------------------

// φ_{smn(i,a)}^p(n) = φ_i^p(⟨a,n⟩); total by syntactic construction.
Nat smn(const Nat& i, const Nat& a);

// φ_{pad_total(n)}^q is total for every q; it interleaves the settled outputs
// of φ_n^q, shifted by +1, with dummy zeros, so that the completed decode of
// the padded run equals the plain decode of φ_n^q whenever the latter is a
// valid name.
Nat pad_total(const Nat& n);

// Kleene fixed point: returns i with φ_i^p(n) = φ_{φ_r(i)}^p(n).
Nat kleene_fix(const Nat& r_index);

// U⟨⟨i,r⟩,p⟩ = φ_i^{⟨r,p⟩}; positions settle only when the corresponding run
// halts within the per-position budget, so unsettled positions surface
// through Name::try_at.
Name big_u(const Name& name, uint64_t budget_per_position);
// truncated variant: values clamped to min(n-1, value)
Name big_u_truncated(const Name& name, uint64_t n, uint64_t budget_per_position);

// helpers shared by program transformations
uint8_t max_register(const Program& prog);
Program shift_jump_targets(const Program& prog, uint64_t offset);
Program replace_arg_reads(const Program& prog, uint8_t arg_register);

}  // namespace weihrauch
