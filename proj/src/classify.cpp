#include "nsg/classify.hpp"

namespace nsg {

namespace {

// Candidate minimal interval: (multiplicity, end of the first member run).
// A non-ordinary interval-generated semigroup is forced to this witness,
// because its first run is exactly {i..j}.
std::optional<std::pair<int64_t, int64_t>> interval_witness(
    const NumericalSemigroup& s) {
  if (s.is_trivial()) return {{1, 1}};
  const int64_t i = s.multiplicity();
  int64_t j = i;
  const int64_t width = s.conductor() + s.multiplicity();
  while (j + 1 < width && s.contains(j + 1)) ++j;
  if (j == i && i > 1) return std::nullopt;  // <i> alone is not cofinite
  try {
    if (NumericalSemigroup::interval(i, j) == s) return {{i, j}};
  } catch (const InvalidParam&) {
  }
  return std::nullopt;
}

}  // namespace

ClassificationReport classify(const NumericalSemigroup& s) {
  ClassificationReport r;
  const int64_t c = s.conductor();
  const int64_t g = s.genus();

  r.trivial = s.is_trivial();
  r.ordinary = r.trivial || g == c - 1;
  r.symmetric = c == 2 * g;
  r.pseudo_symmetric = c == 2 * g - 1;
  r.irreducible = r.symmetric || r.pseudo_symmetric;
  r.hyperelliptic = s.contains(2);

  r.sparse = true;
  for (int64_t n = 1; n + 1 < c; ++n) {
    if (s.contains(n) && s.contains(n + 1)) {
      r.sparse = false;
      break;
    }
  }

  // 2*l_i - l_j in S for 1 <= j <= i; pairs with l_i >= c always pass.
  r.arf = true;
  const auto members = s.members_below_conductor();
  for (size_t i = 1; i < members.size() && r.arf; ++i) {
    for (size_t j = 1; j <= i; ++j) {
      if (!s.contains(2 * members[i] - members[j])) {
        r.arf = false;
        break;
      }
    }
  }

  if (r.ordinary) {
    r.acute = true;
    r.near_acute = true;
  } else {
    const auto p = profile(s);
    const int64_t d = *p.dominant;
    const int64_t cp = *p.subconductor;
    const int64_t dp = *p.subdominant;
    r.acute = c - d <= cp - dp;
    r.near_acute = (c - d <= d - dp) || !s.contains(2 * d - c + 1);
  }

  r.interval = interval_witness(s);
  r.interval_generated = r.interval.has_value();
  return r;
}

std::vector<std::string> check_inclusions(const NumericalSemigroup& s) {
  std::vector<std::string> bad;
  const auto r = classify(s);

  if (r.irreducible != (r.symmetric || r.pseudo_symmetric)) {
    bad.push_back("irreducible must equal symmetric-or-pseudo-symmetric");
  }
  if (r.symmetric && r.pseudo_symmetric) {
    bad.push_back("symmetric and pseudo-symmetric simultaneously");
  }
  if (r.arf && !r.sparse) bad.push_back("arf without sparse");
  if (r.symmetric && !r.acute) bad.push_back("symmetric without acute");
  if (r.pseudo_symmetric && !r.acute) bad.push_back("pseudo-symmetric without acute");
  if (r.arf && !r.acute) bad.push_back("arf without acute");
  if (r.interval_generated && !r.acute) bad.push_back("interval without acute");
  if (r.acute && !r.near_acute) bad.push_back("acute without near-acute");

  if (r.arf && r.symmetric && !r.hyperelliptic) {
    bad.push_back("arf symmetric but not hyperelliptic");
  }
  if (r.arf && r.pseudo_symmetric) {
    const bool allowed = s == NumericalSemigroup::ordinary(3) ||
                         s == NumericalSemigroup::klein(3);
    if (!allowed) bad.push_back("arf pseudo-symmetric outside {<3,4,5>, klein}");
  }
  if (r.interval_generated && r.arf && !r.ordinary) {
    bad.push_back("interval arf but not ordinary");
  }
  if (r.interval_generated && r.pseudo_symmetric &&
      s != NumericalSemigroup::ordinary(3)) {
    bad.push_back("interval pseudo-symmetric but not <3,4,5>");
  }
  if (r.interval_generated && !r.trivial) {
    // Interval semigroups are symmetric exactly when i = 2 mod (j - i).
    // The trivial witness (1,1) has modulus zero and is exempt.
    const auto [i, j] = *r.interval;
    if (j > i) {
      const bool predicted = ((i - 2) % (j - i) + (j - i)) % (j - i) == 0;
      if (predicted != r.symmetric) {
        bad.push_back("interval symmetry disagrees with i = 2 mod (j-i)");
      }
    }
  }
  return bad;
}

}  // namespace nsg
