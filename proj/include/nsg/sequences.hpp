#pragma once

// The oplus operation on member indices, the induced partial order, the nu
// and tau sequences, and the reconstruction of a semigroup from either
// sequence.
//
// Both sequences follow closed forms past index 2c - g - 1:
//     nu_i  = i - g + 1
//     tau_(2c-g-2)+2i = tau_(2c-g-2)+2i+1 = (c - g - 1) + i
// so queries at arbitrary indices are total functions and "for all i"
// statements decide on the finite window [0, 2c - g + 2].

#include <cstdint>
#include <span>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

// Index addition: lambda(oplus(i,j)) = lambda(i) + lambda(j).
int64_t oplus(const NumericalSemigroup& s, int64_t i, int64_t j);

// i precedes j when lambda(j) - lambda(i) is a member.
bool preceq(const NumericalSemigroup& s, int64_t i, int64_t j);

// The unique m with oplus(i, m) = k; requires preceq(i, k), else
// NotComparable. (The difference operation is only meaningful below k.)
int64_t ominus(const NumericalSemigroup& s, int64_t k, int64_t i);

// N_i = {j : preceq(j, i)}, ascending. nu_i is its size.
std::vector<int64_t> n_set(const NumericalSemigroup& s, int64_t i);

// D(i) = {gaps l : lambda(i) - l is a gap}, ascending (gap values).
std::vector<int64_t> d_set(const NumericalSemigroup& s, int64_t i);

int64_t nu_at(const NumericalSemigroup& s, int64_t i);
int64_t tau_at(const NumericalSemigroup& s, int64_t i);

// Values for indices 0..last inclusive.
std::vector<int64_t> nu_prefix(const NumericalSemigroup& s, int64_t last);
std::vector<int64_t> tau_prefix(const NumericalSemigroup& s, int64_t last);

// Finite prefixes plus the tail parameters that generate all later terms.
struct SequenceProfile {
  std::vector<int64_t> nu;   // indices 0..horizon
  std::vector<int64_t> tau;  // indices 0..horizon
  int64_t conductor = 0;
  int64_t genus = 0;

  int64_t nu_at(int64_t i) const;
  int64_t tau_at(int64_t i) const;
};

// horizon < 0 selects the default 2c - g + 2; anything below 2c - g - 1
// would not pin the tail and is rejected.
SequenceProfile sequence_profile(const NumericalSemigroup& s,
                                 int64_t horizon = -1);

// Rebuilds the unique semigroup whose nu sequence starts with `prefix`
// (values for i = 0..len-1). The prefix must reach index 2c - g; the
// result's forward nu sequence is checked against the whole input.
NumericalSemigroup reconstruct_from_nu(std::span<const int64_t> prefix);
NumericalSemigroup reconstruct_from_nu(std::initializer_list<int64_t> prefix);

// Same from the tau sequence; the prefix must expose the paired tail
// pattern (index 2c - g suffices).
NumericalSemigroup reconstruct_from_tau(std::span<const int64_t> prefix);
NumericalSemigroup reconstruct_from_tau(std::initializer_list<int64_t> prefix);

}  // namespace nsg
