#pragma once

// Numerical semigroups: cofinite subsets of the non-negative integers
// containing 0 and closed under addition.
//
// A semigroup is stored canonically as conductor c, genus g, multiplicity
// m and a membership bitmap over the window [0, c + m). Everything >= c is
// a member, and no minimal generator can be >= c + m (x >= c + m implies
// x - m >= c, so x decomposes), so the window plus (c, g) decides every
// operation exactly. Values are immutable after construction and safe to
// share across threads.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "nsg/errors.hpp"

namespace nsg {

// Constructions reject parameters whose conductor would exceed this.
inline constexpr int64_t kMaxConductor = int64_t{1} << 31;

class NumericalSemigroup {
 public:
  // N0 itself: conductor 0, genus 0, multiplicity 1.
  static NumericalSemigroup trivial();

  // Additive closure of a set of positive generators; canonical regardless
  // of order and redundancy. Throws NotCoprime when gcd > 1.
  static NumericalSemigroup from_generators(std::span<const int64_t> gens);
  static NumericalSemigroup from_generators(std::initializer_list<int64_t> gens);

  // The semigroup whose gap set is exactly `gaps`. Throws NotClosed when
  // the complement is not closed under addition.
  static NumericalSemigroup from_gaps(std::span<const int64_t> gaps);
  static NumericalSemigroup from_gaps(std::initializer_list<int64_t> gaps);

  // Named families. Prime-power parameters are treated as plain integers
  // >= 2; no primality validation happens here.
  static NumericalSemigroup ordinary(int64_t c);               // {0} u [c, inf)
  static NumericalSemigroup hyperelliptic(int64_t k);          // <2, 2k+1>
  static NumericalSemigroup hermitian(int64_t q);              // <q, q+1>
  static NumericalSemigroup norm_trace(int64_t q, int64_t r);  // <(q^r-1)/(q-1), q^(r-1)>
  // {(m-1)i + mj : (i,j) != (1,0),...,(m-1,0)}. The classical
  // gcd(1, m^2-m+1) = 1 side condition is vacuous, so nothing beyond
  // m >= 2 is enforced.
  static NumericalSemigroup klein(int64_t m);
  // L_1 = N0, L_k = q*L_{k-1} u {n >= q^k - q^floor((k+1)/2)}.
  static NumericalSemigroup garcia_stichtenoth(int64_t q, int64_t m);
  // Generated by {i, i+1, ..., j}; equals the union over k of {ki..kj}.
  static NumericalSemigroup interval(int64_t i, int64_t j);
  // H_1 = N0 and H_k = a_k * H_{k-1} u {n >= a_k * b_{k-1}} for k = 2..n.
  // a and b must have equal length; a[0] and b[n-1] are never consumed.
  static NumericalSemigroup inductive(std::span<const int64_t> a,
                                      std::span<const int64_t> b);
  static NumericalSemigroup inductive(std::initializer_list<int64_t> a,
                                      std::initializer_list<int64_t> b);
  // d*S u {n >= d*lambda_k}, d >= 2. Shares oplus/nu/tau prefixes with S.
  static NumericalSemigroup scaled_cutoff(const NumericalSemigroup& s,
                                          int64_t d, int64_t k);

  int64_t conductor() const { return conductor_; }
  int64_t genus() const { return genus_; }
  int64_t multiplicity() const { return multiplicity_; }
  int64_t frobenius() const { return conductor_ - 1; }
  bool is_trivial() const { return conductor_ == 0; }

  // Membership. Always true for n >= conductor, false for n < 0.
  bool contains(int64_t n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return window_[static_cast<size_t>(n)];
  }

  // The enumeration: lambda(i) is the (i+1)-th smallest member.
  // lambda(i) = genus + i as soon as i >= conductor - genus.
  int64_t lambda(int64_t i) const {
    if (i < 0) throw InvalidParam("lambda: index must be non-negative");
    if (i >= static_cast<int64_t>(elements_.size())) return genus_ + i;
    return elements_[static_cast<size_t>(i)];
  }

  // Index of a member; throws NotMember for gaps.
  int64_t lambda_inv(int64_t x) const;

  // Membership bitmap over [0, conductor + multiplicity).
  const std::vector<bool>& small_elements() const { return window_; }

  // Members below the conductor, ascending (size conductor - genus).
  std::span<const int64_t> members_below_conductor() const { return elements_; }

  std::vector<int64_t> gap_list() const;

  bool operator==(const NumericalSemigroup& o) const {
    return conductor_ == o.conductor_ && genus_ == o.genus_ &&
           window_ == o.window_;
  }
  bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

 private:
  NumericalSemigroup() = default;
  // Canonicalizes a membership bitmap. The input must agree with the true
  // membership on [0, N) and have every integer >= N a member.
  static NumericalSemigroup finalize(std::vector<bool> member);
  static NumericalSemigroup scale_union(const NumericalSemigroup& s,
                                        int64_t d, int64_t tail_start);

  int64_t conductor_ = 0;
  int64_t genus_ = 0;
  int64_t multiplicity_ = 1;
  std::vector<bool> window_;
  std::vector<int64_t> elements_;  // members < conductor
};

// Derived structural invariants. dominant/subconductor are absent only for
// the trivial semigroup; the subdominant is additionally absent for
// ordinary semigroups (whose dominant is 0).
struct SemigroupProfile {
  int64_t frobenius = -1;
  std::optional<int64_t> dominant;      // largest member < c
  std::optional<int64_t> subconductor;  // start of the member run ending at d
  std::optional<int64_t> subdominant;   // largest member < c'
  std::vector<int64_t> generators;      // minimal generating set, sorted
  std::vector<int64_t> apery;           // {l in S : l - m not in S}, sorted
};

SemigroupProfile profile(const NumericalSemigroup& s);

// Minimal generating set: members that are not a sum of two positive members.
std::vector<int64_t> minimal_generators(const NumericalSemigroup& s);

// Apery set {w_0, ..., w_{m-1}}: per-residue minimal members mod multiplicity.
std::vector<int64_t> apery_set(const NumericalSemigroup& s);

}  // namespace nsg
