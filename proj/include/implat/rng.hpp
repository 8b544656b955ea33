#ifndef IMPLAT_RNG_HPP
#define IMPLAT_RNG_HPP

#include <cstdint>
#include <vector>

#include "implat/corpus.hpp"
#include "implat/formula.hpp"
#include "implat/polarity.hpp"

namespace implat {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// distributions so that seeded runs are byte-stable across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi].
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(int num, int den) { return range(1, den) <= num; }

 private:
  std::uint64_t state_;
};

/// Random polarity with universes of size 1..max per side and a density
/// drawn from {1/4, 1/2, 3/4}.
inline Polarity random_polarity(Rng& rng, int max_x = 6, int max_y = 6) {
  const int nx = rng.range(1, max_x), ny = rng.range(1, max_y);
  const int num = rng.range(1, 3);
  std::vector<Mask> rows(nx, 0);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (rng.chance(num, 4)) rows[x] = bits::with(rows[x], y);
  return Polarity(std::move(rows), ny);
}

inline Mask random_subset(Rng& rng, int n) {
  Mask m = 0;
  for (int i = 0; i < n; ++i)
    if (rng.chance(1, 2)) m = bits::with(m, i);
  return m;
}

/// Random bounded lattice with at most max_n elements, built as a closure
/// system (a family of sets closed under intersection, containing the base
/// set) ordered by inclusion. Carries either the residual implication when
/// meet residuates, or the order implication otherwise.
inline FiniteLattice random_lattice(Rng& rng, int max_n = 6) {
  for (;;) {
    const int base = rng.range(2, 4);
    std::vector<Mask> fam{bits::full(base)};
    const int extras = rng.range(1, 4);
    for (int i = 0; i < extras; ++i) fam.push_back(random_subset(rng, base));
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        Mask m = fam[i] & fam[j];
        bool fresh = true;
        for (Mask f : fam)
          if (f == m) fresh = false;
        if (fresh) fam.push_back(m);
      }
    if (static_cast<int>(fam.size()) > max_n) continue;
    std::sort(fam.begin(), fam.end());
    const int n = static_cast<int>(fam.size());
    FiniteLattice lat = lattice_from_leq(
        n, [&](int a, int b) { return bits::subset(fam[a], fam[b]); });
    bool heyting_arrow = false;
    if (rng.chance(1, 2)) {
      try {
        lat.arrow_tab = compute_residual_arrow(lat);
        heyting_arrow = true;
      } catch (const Error&) {
      }
    }
    if (!heyting_arrow) lat.arrow_tab = detail::crisp_arrow(lat);
    return lat;
  }
}

/// Random formula over the given atoms, depth-bounded.
inline FormulaPtr random_formula(Rng& rng, int max_depth,
                                 const std::vector<std::string>& atoms) {
  if (max_depth == 0 || rng.chance(1, 4)) {
    const int pick = rng.range(0, static_cast<int>(atoms.size()) + 1);
    if (pick < static_cast<int>(atoms.size())) return f_atom(atoms[pick]);
    return pick == static_cast<int>(atoms.size()) ? f_bot() : f_top();
  }
  FormulaPtr l = random_formula(rng, max_depth - 1, atoms);
  FormulaPtr r = random_formula(rng, max_depth - 1, atoms);
  switch (rng.range(0, 2)) {
    case 0: return f_and(std::move(l), std::move(r));
    case 1: return f_or(std::move(l), std::move(r));
    default: return f_imp(std::move(l), std::move(r));
  }
}

}  // namespace implat

#endif  // IMPLAT_RNG_HPP
