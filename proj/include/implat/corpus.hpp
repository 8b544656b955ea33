#ifndef IMPLAT_CORPUS_HPP
#define IMPLAT_CORPUS_HPP

#include <string>
#include <vector>

#include "implat/lattice.hpp"

namespace implat {

namespace detail {

inline FiniteLattice make_chain(int n, std::vector<std::string> names) {
  FiniteLattice lat = lattice_from_leq(n, [](int a, int b) { return a <= b; });
  lat.arrow_tab = compute_residual_arrow(lat);
  lat.names = std::move(names);
  return lat;
}

/// Powerset of k atoms, indices ordered by (popcount, mask value).
inline FiniteLattice make_boolean(int k, std::vector<std::string> names) {
  const int n = 1 << k;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [](int a, int b) {
    int pa = bits::count(static_cast<Mask>(a)), pb = bits::count(static_cast<Mask>(b));
    return pa != pb ? pa < pb : a < b;
  });
  FiniteLattice lat = lattice_from_leq(n, [&](int a, int b) {
    return bits::subset(static_cast<Mask>(order[a]), static_cast<Mask>(order[b]));
  });
  lat.arrow_tab = compute_residual_arrow(lat);
  lat.names = std::move(names);
  return lat;
}

/// a->b := 1 if a<=b else 0. Implicative on any bounded lattice.
inline std::vector<int> crisp_arrow(const FiniteLattice& lat) {
  std::vector<int> table(static_cast<std::size_t>(lat.n) * lat.n);
  for (int a = 0; a < lat.n; ++a)
    for (int b = 0; b < lat.n; ++b)
      table[a * lat.n + b] = lat.leq(a, b) ? lat.top : lat.bot;
  return table;
}

}  // namespace detail

inline std::vector<std::string> corpus_names() {
  return {"C2", "C3", "C4", "B4", "B8", "M3", "N5", "L3"};
}

/// Built-in lattices: chains C2/C3/C4 and Booleans B4/B8 with their Heyting
/// implication, diamond M3 and pentagon N5 with the order implication
/// (1 if a<=b else 0), and the 3-element Lukasiewicz chain L3.
inline FiniteLattice corpus_lattice(std::string_view name) {
  if (name == "C2") return detail::make_chain(2, {"0", "1"});
  if (name == "C3") return detail::make_chain(3, {"0", "m", "1"});
  if (name == "C4") return detail::make_chain(4, {"0", "a", "b", "1"});
  if (name == "B4") return detail::make_boolean(2, {"0", "a", "b", "1"});
  if (name == "B8")
    return detail::make_boolean(3, {"0", "a", "b", "c", "ab", "ac", "bc", "1"});
  if (name == "M3") {
    // bottom 0, three incomparable atoms a,b,c, top 1
    FiniteLattice lat = lattice_from_leq(
        5, [](int a, int b) { return a == b || a == 0 || b == 4; });
    lat.arrow_tab = detail::crisp_arrow(lat);
    lat.names = {"0", "a", "b", "c", "1"};
    return lat;
  }
  if (name == "N5") {
    // 0 < a < b < 1 and 0 < c < 1, c incomparable to a and b
    FiniteLattice lat = lattice_from_leq(5, [](int a, int b) {
      if (a == b || a == 0 || b == 4) return true;
      return a == 1 && b == 2;  // a < b
    });
    lat.arrow_tab = detail::crisp_arrow(lat);
    lat.names = {"0", "a", "b", "c", "1"};
    return lat;
  }
  if (name == "L3") {
    // degrees {0, 1/2, 1} as indices {0,1,2}; a->b = min(1, 1-a+b)
    FiniteLattice lat = lattice_from_leq(3, [](int a, int b) { return a <= b; });
    lat.arrow_tab.assign(9, 0);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) lat.arrow_tab[a * 3 + b] = std::min(2, 2 - a + b);
    lat.names = {"0", "half", "1"};
    return lat;
  }
  fail(Errc::bad_input, "unknown corpus lattice '" + std::string(name) + "'");
}

}  // namespace implat

#endif  // IMPLAT_CORPUS_HPP
