#pragma once

// Exact rational scalars. Everything in this library that claims exactness is
// computed over Q; no floating point enters any verdict.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hypercert {

using Q = mpq_class;
using QVec = std::vector<Q>;

// Parses "p", "p/q" or "-p/q" (arbitrary precision). Throws parse_error on
// malformed input or zero denominator.
Q parse_rational(const std::string& s);

// "p/q" for non-integers, plain "p" otherwise.
std::string rational_str(const Q& v);

std::string vec_str(const QVec& v);

inline int sign_of(const Q& v) { return sgn(v); }

inline Q abs_q(const Q& v) { return v < 0 ? Q(-v) : v; }

// Power of ten as an exact rational, e.g. pow10_q(-9) = 1/10^9.
Q pow10_q(int exponent);

// True iff v = (p/q)^2 for some rational; if so, *root is the nonnegative root.
bool rational_square_root(const Q& v, Q* root);

// FNV-1a over a byte string; used for input digests in run reports.
std::uint64_t fnv1a64(const std::string& bytes);

// splitmix64; used to derive per-trial RNG seeds from (seed, trial index).
std::uint64_t mix64(std::uint64_t x);

} // namespace hypercert
