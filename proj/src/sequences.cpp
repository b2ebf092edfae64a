#include "nsg/sequences.hpp"

#include <algorithm>
#include <string>

namespace nsg {

namespace {

// First index of the nu tail (nu_i = i - g + 1 from here on).
int64_t nu_tail_start(int64_t c, int64_t g) { return 2 * c - g - 1; }

// Base index of the paired tau tail. Degenerates correctly for the
// trivial semigroup (-2) and conductor 2 (1).
int64_t tau_tail_base(int64_t c, int64_t g) { return 2 * c - g - 2; }

int64_t tau_tail_value(int64_t c, int64_t g, int64_t i) {
  return (c - g - 1) + (i - tau_tail_base(c, g)) / 2;
}

}  // namespace

int64_t oplus(const NumericalSemigroup& s, int64_t i, int64_t j) {
  return s.lambda_inv(s.lambda(i) + s.lambda(j));
}

bool preceq(const NumericalSemigroup& s, int64_t i, int64_t j) {
  return s.contains(s.lambda(j) - s.lambda(i));
}

int64_t ominus(const NumericalSemigroup& s, int64_t k, int64_t i) {
  const int64_t diff = s.lambda(k) - s.lambda(i);
  if (!s.contains(diff)) {
    throw NotComparable("ominus: index " + std::to_string(i) +
                        " does not precede " + std::to_string(k));
  }
  return s.lambda_inv(diff);
}

std::vector<int64_t> n_set(const NumericalSemigroup& s, int64_t i) {
  std::vector<int64_t> out;
  const int64_t li = s.lambda(i);
  for (int64_t j = 0; j <= i; ++j) {
    if (s.contains(li - s.lambda(j))) out.push_back(j);
  }
  return out;
}

std::vector<int64_t> d_set(const NumericalSemigroup& s, int64_t i) {
  std::vector<int64_t> out;
  const int64_t li = s.lambda(i);
  for (int64_t l = 1; l < std::min(li, s.conductor()); ++l) {
    if (!s.contains(l) && !s.contains(li - l)) out.push_back(l);
  }
  return out;
}

int64_t nu_at(const NumericalSemigroup& s, int64_t i) {
  if (i < 0) throw InvalidParam("nu: index must be non-negative");
  if (i >= nu_tail_start(s.conductor(), s.genus())) return i - s.genus() + 1;
  int64_t count = 0;
  const int64_t li = s.lambda(i);
  for (int64_t j = 0; j <= i; ++j) {
    if (s.contains(li - s.lambda(j))) ++count;
  }
  return count;
}

int64_t tau_at(const NumericalSemigroup& s, int64_t i) {
  if (i < 0) throw InvalidParam("tau: index must be non-negative");
  if (i >= tau_tail_base(s.conductor(), s.genus())) {
    return tau_tail_value(s.conductor(), s.genus(), i);
  }
  // Largest member l <= lambda_i / 2 with lambda_i - l a member.
  const int64_t li = s.lambda(i);
  for (int64_t l = li / 2; l >= 0; --l) {
    if (s.contains(l) && s.contains(li - l)) return s.lambda_inv(l);
  }
  return 0;  // unreachable: l = 0 always succeeds
}

std::vector<int64_t> nu_prefix(const NumericalSemigroup& s, int64_t last) {
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(std::max<int64_t>(0, last + 1)));
  for (int64_t i = 0; i <= last; ++i) out.push_back(nu_at(s, i));
  return out;
}

std::vector<int64_t> tau_prefix(const NumericalSemigroup& s, int64_t last) {
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(std::max<int64_t>(0, last + 1)));
  for (int64_t i = 0; i <= last; ++i) out.push_back(tau_at(s, i));
  return out;
}

int64_t SequenceProfile::nu_at(int64_t i) const {
  if (i < static_cast<int64_t>(nu.size())) return nu[static_cast<size_t>(i)];
  return i - genus + 1;
}

int64_t SequenceProfile::tau_at(int64_t i) const {
  if (i < static_cast<int64_t>(tau.size())) return tau[static_cast<size_t>(i)];
  return tau_tail_value(conductor, genus, i);
}

SequenceProfile sequence_profile(const NumericalSemigroup& s, int64_t horizon) {
  const int64_t c = s.conductor();
  const int64_t g = s.genus();
  if (horizon < 0) horizon = 2 * c - g + 2;
  if (horizon < nu_tail_start(c, g)) {
    throw InvalidParam("sequence_profile: horizon does not pin the tail");
  }
  SequenceProfile p;
  p.conductor = c;
  p.genus = g;
  p.nu = nu_prefix(s, horizon);
  p.tau = tau_prefix(s, horizon);
  return p;
}

NumericalSemigroup reconstruct_from_nu(std::span<const int64_t> prefix) {
  const int64_t len = static_cast<int64_t>(prefix.size());
  if (len == 0) throw PrefixTooShort("nu prefix is empty");

  auto validate_forward = [&](const NumericalSemigroup& s) {
    for (int64_t i = 0; i < len; ++i) {
      if (nu_at(s, i) != prefix[static_cast<size_t>(i)]) {
        throw InconsistentPrefix(
            "input is not the nu sequence of any numerical semigroup");
      }
    }
    return s;
  };

  // Last plateau. A strictly increasing prefix can only be the trivial
  // semigroup (every other nu sequence repeats a value).
  int64_t k = -1;
  for (int64_t i = 0; i + 1 < len; ++i) {
    if (prefix[static_cast<size_t>(i)] == prefix[static_cast<size_t>(i + 1)]) {
      k = i;
    }
  }
  if (k < 0) return validate_forward(NumericalSemigroup::trivial());

  const int64_t nu_k = prefix[static_cast<size_t>(k)];
  const int64_t g = k + 2 - nu_k;
  if (g < 1 || (k + g) % 2 != 0) {
    throw InconsistentPrefix("plateau position is impossible for a nu sequence");
  }
  const int64_t c = (k + g + 2) / 2;
  if (c < g + 1 || c > 2 * g) {
    throw InconsistentPrefix("derived conductor/genus are out of range");
  }
  // k = 2c - g - 2 needs nu up to index 2c - g - 1 = k + 1: already present.

  std::vector<bool> member(static_cast<size_t>(c + 1), false);
  member[0] = true;
  member[static_cast<size_t>(c)] = true;
  // 1 and c - 1 are gaps; decide 2..c-2 downwards. With gaps l in (i, c-1)
  // paired as l <-> c-1+i-l, membership of i follows from nu at c-1+i-g.
  for (int64_t i = c - 2; i >= 2; --i) {
    int64_t paired = 0;
    for (int64_t l = i + 1; l < c - 1; ++l) {
      const int64_t mirror = c - 1 + i - l;
      if (mirror <= i || mirror >= c - 1) continue;
      if (!member[static_cast<size_t>(l)] && !member[static_cast<size_t>(mirror)]) {
        ++paired;
      }
    }
    const int64_t idx = c - 1 + i - g;
    if (idx < 0 || idx >= len) {
      throw PrefixTooShort("nu prefix does not cover the reconstruction window");
    }
    const int64_t nu_val = prefix[static_cast<size_t>(idx)];
    const int64_t base = c + i - 2 * g + paired;
    if (nu_val == base) {
      member[static_cast<size_t>(i)] = true;
    } else if (nu_val != base + 2) {
      throw InconsistentPrefix("nu value contradicts the membership recursion");
    }
  }

  int64_t gaps = 0;
  for (int64_t n = 1; n < c; ++n) {
    if (!member[static_cast<size_t>(n)]) ++gaps;
  }
  if (gaps != g) {
    throw InconsistentPrefix("reconstructed gap count disagrees with the plateau");
  }
  std::vector<int64_t> gap_values;
  for (int64_t n = 1; n < c; ++n) {
    if (!member[static_cast<size_t>(n)]) gap_values.push_back(n);
  }
  NumericalSemigroup s = [&] {
    try {
      return NumericalSemigroup::from_gaps(gap_values);
    } catch (const NotClosed&) {
      throw InconsistentPrefix("reconstructed membership is not a semigroup");
    }
  }();
  return validate_forward(s);
}

NumericalSemigroup reconstruct_from_nu(std::initializer_list<int64_t> prefix) {
  return reconstruct_from_nu(std::span<const int64_t>(prefix.begin(), prefix.size()));
}

NumericalSemigroup reconstruct_from_tau(std::span<const int64_t> prefix) {
  const int64_t len = static_cast<int64_t>(prefix.size());
  if (len < 3) throw PrefixTooShort("tau prefix must expose the tail pattern");

  auto validate_forward = [&](const NumericalSemigroup& s) {
    for (int64_t i = 0; i < len; ++i) {
      if (tau_at(s, i) != prefix[static_cast<size_t>(i)]) {
        throw InconsistentPrefix(
            "input is not the tau sequence of any numerical semigroup");
      }
    }
    return s;
  };

  // Smallest k from which the prefix pairs up and steps by one:
  // tau_{k+2i} = tau_{k+2i+1}, tau_{k+2i+2} = tau_{k+2i+1} + 1.
  auto pattern_holds_from = [&](int64_t k) {
    for (int64_t pos = k; pos < len; pos += 2) {
      const int64_t v = prefix[static_cast<size_t>(pos)];
      if (pos + 1 < len && prefix[static_cast<size_t>(pos + 1)] != v) return false;
      if (pos + 2 < len && prefix[static_cast<size_t>(pos + 2)] != v + 1) return false;
    }
    return true;
  };
  int64_t k = -1;
  for (int64_t cand = 0; cand + 2 < len; ++cand) {
    if (pattern_holds_from(cand)) {
      k = cand;
      break;
    }
  }
  if (k < 0) throw PrefixTooShort("tau prefix never reaches its tail pattern");
  if (k == 0) return validate_forward(NumericalSemigroup::trivial());

  const int64_t tau_k = prefix[static_cast<size_t>(k)];
  const int64_t c = k - tau_k + 1;
  const int64_t g = k - 2 * tau_k;
  if (c < 2 || g < 1 || c < g + 1 || c > 2 * g) {
    throw InconsistentPrefix("tail position is impossible for a tau sequence");
  }

  // lambda_i = i + g from index c - g on; below that, descend using
  // lambda_i = min{lambda_j : tau_j = i} / 2.
  std::vector<int64_t> lam(static_cast<size_t>(c - g), -1);
  auto lambda_of = [&](int64_t j) -> int64_t {
    if (j >= c - g) return j + g;
    return lam[static_cast<size_t>(j)];
  };
  for (int64_t i = c - g - 1; i >= 1; --i) {
    int64_t best = -1;
    for (int64_t j = i + 1; j < len; ++j) {
      if (prefix[static_cast<size_t>(j)] != i) continue;
      const int64_t lj = lambda_of(j);
      if (lj < 0) throw InconsistentPrefix("tau prefix references an undecided member");
      if (best < 0 || lj < best) best = lj;
    }
    if (best < 0) {
      throw PrefixTooShort("tau prefix does not determine every small member");
    }
    if (best % 2 != 0) {
      throw InconsistentPrefix("minimal tau witness is odd; no half member exists");
    }
    lam[static_cast<size_t>(i)] = best / 2;
  }
  lam[0] = 0;
  for (int64_t i = 0; i + 1 < c - g; ++i) {
    if (lam[static_cast<size_t>(i)] >= lam[static_cast<size_t>(i + 1)]) {
      throw InconsistentPrefix("reconstructed members are not increasing");
    }
  }
  if (c - g >= 2 && lam.back() >= c) {
    throw InconsistentPrefix("reconstructed dominant reaches the conductor");
  }

  std::vector<bool> member(static_cast<size_t>(c + 1), false);
  for (int64_t v : lam) {
    if (v < 0 || v > c) throw InconsistentPrefix("reconstructed member out of range");
    member[static_cast<size_t>(v)] = true;
  }
  member[static_cast<size_t>(c)] = true;
  std::vector<int64_t> gap_values;
  for (int64_t n = 1; n < c; ++n) {
    if (!member[static_cast<size_t>(n)]) gap_values.push_back(n);
  }
  if (static_cast<int64_t>(gap_values.size()) != g) {
    throw InconsistentPrefix("reconstructed gap count disagrees with the tail");
  }
  NumericalSemigroup s = [&] {
    try {
      return NumericalSemigroup::from_gaps(gap_values);
    } catch (const NotClosed&) {
      throw InconsistentPrefix("reconstructed membership is not a semigroup");
    }
  }();
  return validate_forward(s);
}

NumericalSemigroup reconstruct_from_tau(std::initializer_list<int64_t> prefix) {
  return reconstruct_from_tau(std::span<const int64_t>(prefix.begin(), prefix.size()));
}

}  // namespace nsg
