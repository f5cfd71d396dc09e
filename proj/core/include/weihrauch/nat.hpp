#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <utility>

namespace weihrauch {

// Naturals are arbitrary precision. Program indices and Cantor pairs of them
// do not fit machine words.
using Nat = mpz_class;

inline Nat nat(uint64_t v) { return Nat(static_cast<unsigned long>(v)); }

// ⟨n,k⟩ = (n+k)(n+k+1)/2 + k
Nat cantor_pair(const Nat& n, const Nat& k);
std::pair<Nat, Nat> cantor_unpair(const Nat& c);

inline uint64_t cantor_pair_u(uint64_t n, uint64_t k) {
  return cantor_pair(nat(n), nat(k)).get_ui();
}
std::pair<uint64_t, uint64_t> cantor_unpair_u(uint64_t c);

bool fits_u64(const Nat& n);
uint64_t to_u64(const Nat& n);  // throws std::overflow_error if it does not fit

std::string nat_str(const Nat& n);

// Deterministic seedable generator (splitmix64); identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next();
  // uniform in [0, bound)
  uint64_t below(uint64_t bound);
  Rng fork(uint64_t salt);

 private:
  uint64_t state_;
};

}  // namespace weihrauch
