#pragma once

#include "weihrauch/machine.hpp"

namespace weihrauch {

// The curated head of the Gödel numbering. Small indices matter: dovetailing
// constructions only reach components with small indices at test depth.
namespace prog {

constexpr uint64_t kCuratedCount = 8;

constexpr uint64_t kDiverge = 0;      // runs forever on every input
constexpr uint64_t kCopy = 1;         // n ↦ oracle(n)
constexpr uint64_t kConstZero = 2;    // n ↦ 0
constexpr uint64_t kIdentity = 3;     // n ↦ n
// n ↦ k where ⟨n,k⟩+1 is the first symbol of that shape in the oracle;
// diverges if there is none. The engine of the diagonal arguments.
constexpr uint64_t kFirstAppearance = 4;
// n ↦ oracle(n)-1 if oracle(n) > 0, else diverges. Instances carry their
// partial-function table directly in the oracle.
constexpr uint64_t kTableLookup = 5;
// n ↦ first non-zero symbol of tuple component n, minus one; diverges if the
// component stays zero. Realizes σ on the partial-function side.
constexpr uint64_t kComponentValue = 6;
// n ↦ 0 if some oracle symbol equals n+1 (i.e. n ∈ range(oracle-1)), else
// diverges; its halting domain is exactly the enumerated range.
constexpr uint64_t kRangeMember = 7;

const Program& curated(uint64_t index);

// view transformer for Sim: argument ⟨k,m⟩ ↦ oracle(⟨k,m⟩); combined with a
// view parameter k this reads tuple component k.
Nat tuple_component_view();
// argument ⟨k,m⟩ ↦ oracle(⟨k, m+1⟩); tuple component k with its first symbol
// removed (the head carries per-component data in the chain constructions).
Nat shifted_component_view();
// argument ⟨k,m⟩ ↦ oracle(m+1); drops the first oracle symbol.
Nat tail_view();

// program index j with φ_j^{⟨p⟩}(k) = φ^{p_k}_{i_k}(n_k) where tuple component
// k of the oracle is ⟨i_k,n_k⟩ followed by p_k.
Nat stash_eval_program();
// same but the head of component k is ignored and the run is a membership
// test: halts iff φ^{p_k}_{i_k}(n_k) halts, returning 1 (dom flavor).
Nat stash_dom_program();
// φ_{j*}^{m⌢p}(n) = φ_m^p(n): evaluates the program named by the first oracle
// symbol on the rest of the oracle.
Nat head_eval_program();

// total s with φ^p_{s(i)}(n) = φ^p_i(⟨i,n⟩)
Nat diag_arg_index(const Nat& i);
// total s with φ^p_{s(i)}(n) = steps of φ^p_i(⟨i,n⟩) (time complexity)
Nat diag_step_index(const Nat& i);
// total s with φ^q_{s(i)}(⟨j,n⟩) = steps of φ^q_j(n); the translation used for
// the non-lowness bound (i is unused, kept for numbering uniformity)
Nat step_table_index();
// φ_{r(i)}^p(n) = 0 if 2n enters dom(φ_i^p) first, 1 if 2n+1 does, undefined
// if neither ever does (ties resolve to 0 at equal budgets).
Nat even_odd_first_index(const Nat& i);
// φ_{s(i)}^t = the binary-block embedding 0^{v0} 1 0^{v1} 1 ... of
// min(1, φ^t_i); total when φ^t_i is total with infinitely many positive
// values under min(1,·).
Nat binary_block_index(const Nat& i);

}  // namespace prog

}  // namespace weihrauch
