#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "weihrauch/word.hpp"

namespace weihrauch {

struct name_stalled : std::runtime_error {
  explicit name_stalled(uint64_t index)
      : std::runtime_error("name position " + std::to_string(index) +
                           " did not settle within the effort ceiling"),
        index(index) {}
  uint64_t index;
};

// A point of Baire space: a demand-driven, memoized infinite sequence of
// naturals. Immutable once constructed; memoization is internally
// synchronized so a Name can be shared among concurrent readers.
//
// Producers are sequential: the step function is called with index equal to
// the number of symbols settled so far, plus a monotonically growing effort
// budget. Returning nullopt means "not settled at this effort"; a later call
// may retry with more effort. Forcing a prefix of length n never touches
// indices >= n.
class Name {
 public:
  using Step = std::function<std::optional<Nat>(uint64_t index, uint64_t effort)>;

  Name();  // all zeros

  static Name from_step(Step step);
  static Name from_fn(std::function<Nat(uint64_t)> fn);
  static Name zeros();
  static Name constant(Nat c);
  // w followed by 0^ω
  static Name from_word(Word w);
  // w followed by tail,tail,tail,...
  static Name from_word_then(Word w, Nat tail);

  // Forces positions 0..i; throws name_stalled if the producer never settles.
  Nat at(uint64_t i) const;
  Word prefix(uint64_t n) const;

  // Bounded variants: return only what settles within the given effort.
  std::optional<Nat> try_at(uint64_t i, uint64_t effort) const;
  // Longest settled prefix of length <= n at this effort.
  Word try_prefix(uint64_t n, uint64_t effort) const;

  // Generator metadata. `activity` is the index after which the generator
  // guarantees only dummy/constant content; consumers other than clairvoyant
  // solvers must ignore it. `zero_from` additionally certifies that every
  // symbol at index >= zero_from is literally 0.
  std::optional<uint64_t> declared_activity() const;
  std::optional<uint64_t> certainly_zero_from() const;
  Name with_activity(uint64_t a) const;
  Name with_zero_from(uint64_t a) const;

  // --- combinators -------------------------------------------------------

  // ⟨p,q⟩(2n)=p(n), ⟨p,q⟩(2n+1)=q(n)
  static Name pair(const Name& p, const Name& q);
  static Name unpair_left(const Name& pq);
  static Name unpair_right(const Name& pq);

  // ⟨p_0,p_1,...⟩⟨n,k⟩ = p_n(k); the family is memoized internally.
  static Name tuple_seq(std::function<Name(uint64_t)> family);
  static Name tuple_seq(std::vector<Name> head, Name rest);
  static Name proj(const Name& t, uint64_t i);

  // m followed by p ("⟨m,p⟩ := mp" for m ∈ ℕ)
  static Name prepend(Nat m, const Name& p);
  static Name drop(const Name& p, uint64_t count);

  // p-1 as a name; positions only settle as non-zero input symbols appear,
  // so this diverges on names with finitely many non-zero symbols. Use
  // minus_one_word on prefixes for finite-depth work.
  static Name minus_one(const Name& p);

  // Completion coding of a proper point: symbolwise +1, so (result)-1 = p.
  static Name completed(const Name& p);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  explicit Name(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
};

// A monotone word function: w ⊑ w' implies step(w) ⊑ step(w'). These induce
// the continuous stream functions used by realizer-level constructions.
using WordFn = std::function<Word(const Word&)>;

// The stream function induced by a monotone word function, applied lazily:
// position j of the output settles once some input prefix (bounded by the
// query effort) makes f emit at least j+1 symbols.
Name stream_apply(WordFn f, const Name& in);

// Checks monotonicity of f on the chain of prefixes of w.
bool word_fn_monotone_on(const WordFn& f, const Word& w);

}  // namespace weihrauch
