#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gkp {

// Exact rational arithmetic for all threshold and profit computations.
// Feasibility logic never touches floating point; thresholds like
// eps_large * N are compared against integer side lengths exactly.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline long floor_to_long(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

inline long ceil_to_long(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Largest integer power p with base^p <= x, for rational base > 1 and x >= 1.
inline int floor_log(const Rat& base, long x) {
  int p = 0;
  Rat pow = 1;
  while (pow * base <= x) {
    pow *= base;
    ++p;
  }
  return p;
}

}  // namespace gkp
