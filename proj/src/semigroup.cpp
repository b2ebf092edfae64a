#include "nsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nsg {

namespace {

// Largest index holding `false`, or -1 when every bit is set.
int64_t last_gap(const std::vector<bool>& member) {
  for (int64_t n = static_cast<int64_t>(member.size()) - 1; n >= 0; --n) {
    if (!member[static_cast<size_t>(n)]) return n;
  }
  return -1;
}

int64_t checked_pow(int64_t base, int64_t exp) {
  int64_t v = 1;
  for (int64_t e = 0; e < exp; ++e) {
    if (v > kMaxConductor / base) {
      throw InvalidParam("parameter produces a conductor beyond the supported range");
    }
    v *= base;
  }
  return v;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::finalize(std::vector<bool> member) {
  NumericalSemigroup s;
  if (member.empty() || !member[0]) {
    throw InvalidParam("membership window must contain 0");
  }
  const int64_t lg = last_gap(member);
  s.conductor_ = lg + 1;
  if (s.conductor_ == 0) {
    s.multiplicity_ = 1;
    s.window_.assign(1, true);
    return s;
  }
  if (s.conductor_ > kMaxConductor) {
    throw InvalidParam("conductor exceeds the supported range");
  }
  s.multiplicity_ = s.conductor_;  // ordinary case: first member after 0 is c
  for (int64_t n = 1; n < s.conductor_; ++n) {
    if (member[static_cast<size_t>(n)]) {
      s.multiplicity_ = n;
      break;
    }
  }
  member.resize(static_cast<size_t>(s.conductor_ + s.multiplicity_), true);
  s.window_ = std::move(member);
  s.genus_ = 0;
  for (int64_t n = 1; n < s.conductor_; ++n) {
    if (!s.window_[static_cast<size_t>(n)]) ++s.genus_;
  }
  s.elements_.reserve(static_cast<size_t>(s.conductor_ - s.genus_));
  for (int64_t n = 0; n < s.conductor_; ++n) {
    if (s.window_[static_cast<size_t>(n)]) s.elements_.push_back(n);
  }
  return s;
}

NumericalSemigroup NumericalSemigroup::trivial() {
  NumericalSemigroup s;
  s.window_.assign(1, true);
  return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(
    std::span<const int64_t> gens_in) {
  if (gens_in.empty()) throw InvalidParam("generator list is empty");
  std::vector<int64_t> gens(gens_in.begin(), gens_in.end());
  for (int64_t v : gens) {
    if (v <= 0) throw InvalidParam("generators must be positive");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() == 1) return trivial();

  int64_t d = 0;
  for (int64_t v : gens) d = std::gcd(d, v);
  if (d > 1) {
    throw NotCoprime("gcd of the generators is " + std::to_string(d));
  }

  const int64_t a1 = gens.front();
  if (a1 > kMaxConductor) {
    // the conductor is at least the multiplicity
    throw InvalidParam("generators produce a conductor beyond the supported range");
  }
  // The closure stabilizes once a1 consecutive members appear: from such a
  // run everything above is reached by adding a1. Grow the window until
  // that run shows up; a1 * max is enough for two generators, so larger
  // inputs rarely need a second pass.
  int64_t width = 64;
  if (gens.back() <= kMaxConductor / a1) {
    width = std::max(width, a1 * gens.back() + 2);
  }
  width = std::min(width, kMaxConductor + a1);
  for (;;) {
    std::vector<bool> member(static_cast<size_t>(width), false);
    member[0] = true;
    int64_t run = 0;
    int64_t conductor = -1;
    for (int64_t n = 1; n < width; ++n) {
      bool in = false;
      for (int64_t a : gens) {
        if (a > n) break;
        if (member[static_cast<size_t>(n - a)]) {
          in = true;
          break;
        }
      }
      member[static_cast<size_t>(n)] = in;
      run = in ? run + 1 : 0;
      if (run == a1) {
        conductor = n - a1 + 1;
        break;
      }
    }
    if (conductor >= 0) {
      member.resize(static_cast<size_t>(conductor + a1), true);
      return finalize(std::move(member));
    }
    if (width >= kMaxConductor + a1) {
      throw InvalidParam("generators produce a conductor beyond the supported range");
    }
    width = std::min(width * 2, kMaxConductor + a1);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(
    std::initializer_list<int64_t> gens) {
  return from_generators(std::span<const int64_t>(gens.begin(), gens.size()));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int64_t> gaps) {
  if (gaps.empty()) return trivial();
  for (int64_t v : gaps) {
    if (v <= 0) throw InvalidParam("gaps must be positive");
  }
  const int64_t c = *std::max_element(gaps.begin(), gaps.end()) + 1;
  if (c > kMaxConductor) throw InvalidParam("gap set exceeds the supported range");
  std::vector<bool> member(static_cast<size_t>(c), true);
  for (int64_t v : gaps) member[static_cast<size_t>(v)] = false;
  // Sums of two positive members below the conductor are the only sums that
  // can land on a gap.
  for (int64_t a = 1; a < c; ++a) {
    if (!member[static_cast<size_t>(a)]) continue;
    for (int64_t b = a; a + b < c; ++b) {
      if (!member[static_cast<size_t>(b)]) continue;
      if (!member[static_cast<size_t>(a + b)]) {
        throw NotClosed("complement is not closed: " + std::to_string(a) + "+" +
                        std::to_string(b) + " is a gap");
      }
    }
  }
  return finalize(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_gaps(
    std::initializer_list<int64_t> gaps) {
  return from_gaps(std::span<const int64_t>(gaps.begin(), gaps.size()));
}

NumericalSemigroup NumericalSemigroup::ordinary(int64_t c) {
  if (c < 0) throw InvalidParam("ordinary: conductor must be non-negative");
  if (c > kMaxConductor) throw InvalidParam("ordinary: conductor too large");
  if (c <= 1) return trivial();
  std::vector<bool> member(static_cast<size_t>(c), false);
  member[0] = true;
  return finalize(std::move(member));
}

NumericalSemigroup NumericalSemigroup::hyperelliptic(int64_t k) {
  if (k < 1) throw InvalidParam("hyperelliptic: k must be positive");
  return from_generators({2, 2 * k + 1});
}

NumericalSemigroup NumericalSemigroup::hermitian(int64_t q) {
  if (q < 2) throw InvalidParam("hermitian: q must be at least 2");
  return from_generators({q, q + 1});
}

NumericalSemigroup NumericalSemigroup::norm_trace(int64_t q, int64_t r) {
  if (q < 2) throw InvalidParam("norm_trace: q must be at least 2");
  if (r < 1) throw InvalidParam("norm_trace: r must be positive");
  const int64_t b = checked_pow(q, r - 1);
  const int64_t a = (checked_pow(q, r) - 1) / (q - 1);
  if (a > 1 && b > 1 && (a - 1) > kMaxConductor / (b - 1)) {
    throw InvalidParam("norm_trace: conductor beyond the supported range");
  }
  return from_generators({a, b});
}

NumericalSemigroup NumericalSemigroup::klein(int64_t m) {
  if (m < 2) throw InvalidParam("klein: m must be at least 2");
  if (m > kMaxConductor / (m + 2)) throw InvalidParam("klein: m too large");
  // Genus is m(m-1)/2, so the conductor is at most m^2 - m; the window
  // below is wide enough to expose the full tail.
  const int64_t width = m * m + m + 2;
  std::vector<bool> member(static_cast<size_t>(width), false);
  for (int64_t i = 0; (m - 1) * i < width; ++i) {
    for (int64_t j = 0;; ++j) {
      const int64_t v = (m - 1) * i + m * j;
      if (v >= width) break;
      if (j == 0 && i >= 1 && i <= m - 1) continue;  // excluded pairs
      member[static_cast<size_t>(v)] = true;
    }
  }
  return finalize(std::move(member));
}

NumericalSemigroup NumericalSemigroup::scale_union(const NumericalSemigroup& s,
                                                   int64_t d,
                                                   int64_t tail_start) {
  if (tail_start <= 1) return trivial();
  if (tail_start > kMaxConductor) {
    throw InvalidParam("scaled construction exceeds the supported range");
  }
  // Membership beyond the tail start is total, so the window ends there.
  const int64_t width = tail_start + 1;
  std::vector<bool> member(static_cast<size_t>(width), false);
  for (int64_t n = 0; n < width; ++n) {
    if (n >= tail_start || (n % d == 0 && s.contains(n / d))) {
      member[static_cast<size_t>(n)] = true;
    }
  }
  return finalize(std::move(member));
}

NumericalSemigroup NumericalSemigroup::garcia_stichtenoth(int64_t q, int64_t m) {
  if (q < 2) throw InvalidParam("garcia_stichtenoth: q must be at least 2");
  if (m < 1) throw InvalidParam("garcia_stichtenoth: m must be positive");
  NumericalSemigroup s = trivial();
  for (int64_t k = 2; k <= m; ++k) {
    const int64_t cutoff = checked_pow(q, k) - checked_pow(q, (k + 1) / 2);
    s = scale_union(s, q, cutoff);
  }
  return s;
}

NumericalSemigroup NumericalSemigroup::interval(int64_t i, int64_t j) {
  if (i < 1) throw InvalidParam("interval: i must be positive");
  if (j < i) throw InvalidParam("interval: requires i <= j");
  if (i == 1) return trivial();
  if (j == i) {
    throw InvalidParam("interval: {i} with i > 1 has an infinite complement");
  }
  if (i > kMaxConductor) throw InvalidParam("interval: range too large");
  // The k-th block {ki..kj} merges with the next one as soon as
  // k(j - i) >= i - 1, and from there the tail is complete.
  const int64_t k_star = (i - 2 + (j - i)) / (j - i);  // ceil((i-1)/(j-i))
  const int64_t width = k_star * i + i + 1;
  if (width > kMaxConductor) throw InvalidParam("interval: range too large");
  std::vector<bool> member(static_cast<size_t>(width), false);
  for (int64_t k = 0; k * i < width; ++k) {
    for (int64_t v = k * i; v <= std::min<int64_t>(k * j, width - 1); ++v) {
      member[static_cast<size_t>(v)] = true;
    }
  }
  return finalize(std::move(member));
}

NumericalSemigroup NumericalSemigroup::inductive(std::span<const int64_t> a,
                                                 std::span<const int64_t> b) {
  if (a.empty() || a.size() != b.size()) {
    throw InvalidParam("inductive: a and b must be nonempty and equally long");
  }
  for (size_t t = 0; t < a.size(); ++t) {
    if (a[t] < 1 || b[t] < 1) {
      throw InvalidParam("inductive: sequence entries must be positive");
    }
  }
  NumericalSemigroup s = trivial();
  // The recursion consumes indices 2..n; step k scales by a_k and cuts the
  // tail at a_k * b_{k-1} (the previous b, literally).
  for (size_t k = 1; k < a.size(); ++k) {
    if (a[k] > kMaxConductor / b[k - 1]) {
      throw InvalidParam("inductive: cutoff beyond the supported range");
    }
    s = scale_union(s, a[k], a[k] * b[k - 1]);
  }
  return s;
}

NumericalSemigroup NumericalSemigroup::inductive(
    std::initializer_list<int64_t> a, std::initializer_list<int64_t> b) {
  return inductive(std::span<const int64_t>(a.begin(), a.size()),
                   std::span<const int64_t>(b.begin(), b.size()));
}

NumericalSemigroup NumericalSemigroup::scaled_cutoff(const NumericalSemigroup& s,
                                                     int64_t d, int64_t k) {
  if (d < 2) throw InvalidParam("scaled_cutoff: d must be at least 2");
  if (k < 0) throw InvalidParam("scaled_cutoff: k must be non-negative");
  const int64_t lk = s.lambda(k);
  if (lk != 0 && d > kMaxConductor / lk) {
    throw InvalidParam("scaled_cutoff: cutoff beyond the supported range");
  }
  return scale_union(s, d, d * lk);
}

int64_t NumericalSemigroup::lambda_inv(int64_t x) const {
  if (x >= conductor_) return x - genus_;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) {
    throw NotMember(std::to_string(x) + " is a gap");
  }
  return it - elements_.begin();
}

std::vector<int64_t> NumericalSemigroup::gap_list() const {
  std::vector<int64_t> gaps;
  gaps.reserve(static_cast<size_t>(genus_));
  for (int64_t n = 1; n < conductor_; ++n) {
    if (!window_[static_cast<size_t>(n)]) gaps.push_back(n);
  }
  return gaps;
}

std::vector<int64_t> minimal_generators(const NumericalSemigroup& s) {
  if (s.is_trivial()) return {1};
  // Generators all live below conductor + multiplicity.
  const int64_t hi = s.conductor() + s.multiplicity();
  std::vector<int64_t> gens;
  for (int64_t x = s.multiplicity(); x < hi; ++x) {
    if (!s.contains(x)) continue;
    bool decomposable = false;
    for (int64_t a = s.multiplicity(); a + a <= x; ++a) {
      if (s.contains(a) && s.contains(x - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

std::vector<int64_t> apery_set(const NumericalSemigroup& s) {
  const int64_t m = s.multiplicity();
  std::vector<int64_t> ap;
  ap.reserve(static_cast<size_t>(m));
  for (int64_t l = 0; l < s.conductor() + m; ++l) {
    if (s.contains(l) && !s.contains(l - m)) ap.push_back(l);
  }
  return ap;
}

SemigroupProfile profile(const NumericalSemigroup& s) {
  SemigroupProfile p;
  p.frobenius = s.frobenius();
  p.generators = minimal_generators(s);
  p.apery = apery_set(s);
  if (s.is_trivial()) return p;

  const auto members = s.members_below_conductor();
  const int64_t d = members.back();
  p.dominant = d;
  int64_t c_prime = d;
  while (c_prime > 0 && s.contains(c_prime - 1)) --c_prime;
  p.subconductor = c_prime;
  if (c_prime > 0) {
    // Non-ordinary: 0 is always a member below the subconductor.
    const int64_t idx = s.lambda_inv(c_prime);
    p.subdominant = s.lambda(idx - 1);
  }
  return p;
}

}  // namespace nsg
