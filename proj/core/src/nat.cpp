#include "weihrauch/nat.hpp"

#include <stdexcept>

namespace weihrauch {

Nat cantor_pair(const Nat& n, const Nat& k) {
  Nat s = n + k;
  Nat t = s * (s + 1) / 2;
  return t + k;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& c) {
  // w = floor((sqrt(8c+1)-1)/2), k = c - w(w+1)/2, n = w - k
  Nat disc = 8 * c + 1;
  Nat root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  Nat w = (root - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat k = c - t;
  Nat n = w - k;
  return {n, k};
}

std::pair<uint64_t, uint64_t> cantor_unpair_u(uint64_t c) {
  auto [n, k] = cantor_unpair(nat(c));
  return {n.get_ui(), k.get_ui()};
}

bool fits_u64(const Nat& n) {
  return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 && mpz_sgn(n.get_mpz_t()) >= 0;
}

uint64_t to_u64(const Nat& n) {
  if (!fits_u64(n)) throw std::overflow_error("natural exceeds 64 bits: " + nat_str(n));
  uint64_t lo = mpz_get_ui(n.get_mpz_t());
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 63) {
    // get_ui is fine on 64-bit limbs, but be explicit about the top bit
    Nat check = nat(lo);
    if (check != n) throw std::overflow_error("natural exceeds 64 bits");
  }
  return lo;
}

std::string nat_str(const Nat& n) { return n.get_str(); }

uint64_t Rng::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t bound) {
  return bound == 0 ? 0 : next() % bound;
}

Rng Rng::fork(uint64_t salt) {
  Rng r(state_ ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  r.next();
  return r;
}

}  // namespace weihrauch
