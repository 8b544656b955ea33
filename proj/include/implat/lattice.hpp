#ifndef IMPLAT_LATTICE_HPP
#define IMPLAT_LATTICE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "implat/core.hpp"

namespace implat {

/// Bounded lattice on indices 0..n-1 with total order/meet/join tables and an
/// optional binary implication table. Immutable after validation.
struct FiniteLattice {
  int n = 0;
  std::vector<Mask> up;    // up[a] = {b | a <= b}
  std::vector<int> meet_tab, join_tab;  // n*n, row-major
  int bot = -1, top = -1;
  std::vector<int> arrow_tab;           // empty when no implication is attached
  std::vector<std::string> names;       // optional display names, size n or 0

  bool leq(int a, int b) const { return bits::has(up[a], b); }
  int meet(int a, int b) const { return meet_tab[a * n + b]; }
  int join(int a, int b) const { return join_tab[a * n + b]; }
  bool has_arrow() const { return !arrow_tab.empty(); }
  int arrow(int a, int b) const { return arrow_tab[a * n + b]; }

  std::string name_of(int a) const {
    return names.empty() ? std::to_string(a) : names[a];
  }

  int index_of_name(std::string_view s) const {
    for (int a = 0; a < n; ++a)
      if (name_of(a) == s) return a;
    return -1;
  }

  Mask down(int a) const {  // {b | b <= a}
    Mask m = 0;
    for (int b = 0; b < n; ++b)
      if (leq(b, a)) m = bits::with(m, b);
    return m;
  }
};

namespace detail {

inline void require_arrow(const FiniteLattice& lat) {
  if (!lat.has_arrow()) fail(Errc::missing_arrow, "lattice has no implication table");
}

}  // namespace detail

/// Validates an order table and computes meet/join/bounds.
/// Throws NotAPoset, NotALattice, Unbounded.
inline FiniteLattice validate_lattice(const std::vector<std::vector<bool>>& order) {
  const int n = static_cast<int>(order.size());
  if (n == 0) fail(Errc::unbounded, "empty order table has no bounds");
  if (n > bits::max_universe) fail(Errc::bad_input, "more than 64 elements");
  for (const auto& row : order)
    if (static_cast<int>(row.size()) != n) fail(Errc::bad_input, "order table not square");

  FiniteLattice lat;
  lat.n = n;
  lat.up.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (order[a][b]) lat.up[a] = bits::with(lat.up[a], b);

  for (int a = 0; a < n; ++a)
    if (!lat.leq(a, a))
      fail(Errc::not_a_poset, "not reflexive at " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && lat.leq(a, b) && lat.leq(b, a))
        fail(Errc::not_a_poset,
             "antisymmetry fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lat.leq(a, b) && !bits::subset(lat.up[b], lat.up[a]))
        fail(Errc::not_a_poset,
             "transitivity fails from (" + std::to_string(a) + "," + std::to_string(b) + ")");

  auto glb = [&](int a, int b) -> int {
    for (int c = 0; c < n; ++c) {
      if (!lat.leq(c, a) || !lat.leq(c, b)) continue;
      bool greatest = true;
      for (int d = 0; d < n && greatest; ++d)
        if (lat.leq(d, a) && lat.leq(d, b) && !lat.leq(d, c)) greatest = false;
      if (greatest) return c;
    }
    return -1;
  };
  auto lub = [&](int a, int b) -> int {
    for (int c = 0; c < n; ++c) {
      if (!lat.leq(a, c) || !lat.leq(b, c)) continue;
      bool least = true;
      for (int d = 0; d < n && least; ++d)
        if (lat.leq(a, d) && lat.leq(b, d) && !lat.leq(c, d)) least = false;
      if (least) return c;
    }
    return -1;
  };

  lat.meet_tab.assign(static_cast<std::size_t>(n) * n, -1);
  lat.join_tab.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = glb(a, b);
      if (m < 0)
        fail(Errc::not_a_lattice,
             "no greatest lower bound for (" + std::to_string(a) + "," + std::to_string(b) + ")");
      int j = lub(a, b);
      if (j < 0)
        fail(Errc::not_a_lattice,
             "no least upper bound for (" + std::to_string(a) + "," + std::to_string(b) + ")");
      lat.meet_tab[a * n + b] = m;
      lat.join_tab[a * n + b] = j;
    }

  int b0 = 0, t0 = 0;
  for (int a = 1; a < n; ++a) {
    b0 = lat.meet(b0, a);
    t0 = lat.join(t0, a);
  }
  for (int a = 0; a < n; ++a)
    if (!lat.leq(b0, a) || !lat.leq(a, t0))
      fail(Errc::unbounded, "no global bounds");
  lat.bot = b0;
  lat.top = t0;
  return lat;
}

/// Convenience builder from a predicate a <= b.
template <class Leq>
inline FiniteLattice lattice_from_leq(int n, Leq&& leq) {
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) order[a][b] = leq(a, b);
  return validate_lattice(order);
}

/// A1: (a|b)->c = (a->c)&(b->c);  A2: a->(b&c) = (a->b)&(a->c);
/// A3: a<=b iff 1 <= a->b.  First counterexample in lexicographic tuple order.
inline Report check_implicative(const FiniteLattice& lat) {
  detail::require_arrow(lat);
  const int n = lat.n;
  Report rep;

  CheckItem a1{.name = "A1"};
  for (int a = 0; a < n && a1.pass; ++a)
    for (int b = 0; b < n && a1.pass; ++b)
      for (int c = 0; c < n && a1.pass; ++c) {
        ++a1.checked;
        if (lat.arrow(lat.join(a, b), c) != lat.meet(lat.arrow(a, c), lat.arrow(b, c))) {
          a1.pass = false;
          a1.witness = {a, b, c};
        }
      }
  rep.add(std::move(a1));

  CheckItem a2{.name = "A2"};
  for (int a = 0; a < n && a2.pass; ++a)
    for (int b = 0; b < n && a2.pass; ++b)
      for (int c = 0; c < n && a2.pass; ++c) {
        ++a2.checked;
        if (lat.arrow(a, lat.meet(b, c)) != lat.meet(lat.arrow(a, b), lat.arrow(a, c))) {
          a2.pass = false;
          a2.witness = {a, b, c};
        }
      }
  rep.add(std::move(a2));

  CheckItem a3{.name = "A3"};
  for (int a = 0; a < n && a3.pass; ++a)
    for (int b = 0; b < n && a3.pass; ++b) {
      ++a3.checked;
      if (lat.leq(a, b) != lat.leq(lat.top, lat.arrow(a, b))) {
        a3.pass = false;
        a3.witness = {a, b};
      }
    }
  rep.add(std::move(a3));
  return rep;
}

/// A4: a&(b|c) = (a&b)|(a&c).
inline CheckItem check_distributive(const FiniteLattice& lat) {
  const int n = lat.n;
  CheckItem item{.name = "A4"};
  for (int a = 0; a < n && item.pass; ++a)
    for (int b = 0; b < n && item.pass; ++b)
      for (int c = 0; c < n && item.pass; ++c) {
        ++item.checked;
        if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c))) {
          item.pass = false;
          item.witness = {a, b, c};
        }
      }
  return item;
}

/// H1: a&(a->b) <= b;  H2: b <= a->(a&b).
inline Report check_heyting(const FiniteLattice& lat) {
  detail::require_arrow(lat);
  const int n = lat.n;
  Report rep;

  CheckItem h1{.name = "H1"};
  for (int a = 0; a < n && h1.pass; ++a)
    for (int b = 0; b < n && h1.pass; ++b) {
      ++h1.checked;
      if (!lat.leq(lat.meet(a, lat.arrow(a, b)), b)) {
        h1.pass = false;
        h1.witness = {a, b};
      }
    }
  rep.add(std::move(h1));

  CheckItem h2{.name = "H2"};
  for (int a = 0; a < n && h2.pass; ++a)
    for (int b = 0; b < n && h2.pass; ++b) {
      ++h2.checked;
      if (!lat.leq(b, lat.arrow(a, lat.meet(a, b)))) {
        h2.pass = false;
        h2.witness = {a, b};
      }
    }
  rep.add(std::move(h2));
  return rep;
}

/// a->b := join{c | a&c <= b}, verified to residuate meet.
/// Throws NotResiduated when the candidate fails (e.g. nondistributive lattices).
inline std::vector<int> compute_residual_arrow(const FiniteLattice& lat) {
  const int n = lat.n;
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int r = lat.bot;
      for (int c = 0; c < n; ++c)
        if (lat.leq(lat.meet(a, c), b)) r = lat.join(r, c);
      table[a * n + b] = r;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (lat.leq(lat.meet(a, c), b) != lat.leq(c, table[a * n + b]))
          fail(Errc::not_residuated,
               "meet is not residuated at (" + std::to_string(a) + "," + std::to_string(b) +
                   "," + std::to_string(c) + ")");
  return table;
}

/// a^0 -> b = b;  a^(k+1) -> b = a -> (a^k -> b).
inline int iter_arrow(const FiniteLattice& lat, int a, int b, int k) {
  detail::require_arrow(lat);
  if (k < 0) fail(Errc::bad_input, "negative iteration count");
  int r = b;
  for (int i = 0; i < k; ++i) r = lat.arrow(a, r);
  return r;
}

/// The axiom a^(n+1)->b <= a^n->b, checked over all pairs; n >= 1.
inline CheckItem check_an(const FiniteLattice& lat, int n) {
  detail::require_arrow(lat);
  if (n < 1) fail(Errc::bad_input, "An requires n >= 1");
  CheckItem item{.name = "An(" + std::to_string(n) + ")"};
  for (int a = 0; a < lat.n && item.pass; ++a)
    for (int b = 0; b < lat.n && item.pass; ++b) {
      ++item.checked;
      if (!lat.leq(iter_arrow(lat, a, b, n + 1), iter_arrow(lat, a, b, n))) {
        item.pass = false;
        item.witness = {a, b};
      }
    }
  return item;
}

struct Filter {
  Mask carrier = 0;
  bool proper = false;
};

struct Ideal {
  Mask carrier = 0;
  bool proper = false;
};

namespace detail {

inline constexpr int max_subset_scan = 20;

template <class Out, class IsClosed>
inline std::vector<Out> scan_closed_subsets(const FiniteLattice& lat, bool proper_only,
                                            IsClosed&& closed) {
  if (lat.n > max_subset_scan)
    fail(Errc::family_too_large, "subset scan over more than 2^20 candidates");
  const Mask all = bits::full(lat.n);
  std::vector<Out> out;
  for (Mask s = 1; s <= all; ++s) {
    if (proper_only && s == all) continue;
    if (closed(s)) out.push_back(Out{s, s != all});
  }
  return out;
}

}  // namespace detail

/// All nonempty up-closed meet-closed subsets, ascending by carrier mask.
inline std::vector<Filter> enumerate_filters(const FiniteLattice& lat, bool proper_only) {
  return detail::scan_closed_subsets<Filter>(lat, proper_only, [&](Mask s) {
    bool ok = true;
    bits::for_each(s, [&](int a) {
      if (!bits::subset(lat.up[a], s)) ok = false;
    });
    if (!ok) return false;
    bits::for_each(s, [&](int a) {
      bits::for_each(s, [&](int b) {
        if (!bits::has(s, lat.meet(a, b))) ok = false;
      });
    });
    return ok;
  });
}

/// All nonempty down-closed join-closed subsets, ascending by carrier mask.
inline std::vector<Ideal> enumerate_ideals(const FiniteLattice& lat, bool proper_only) {
  return detail::scan_closed_subsets<Ideal>(lat, proper_only, [&](Mask s) {
    bool ok = true;
    bits::for_each(s, [&](int a) {
      if (!bits::subset(lat.down(a), s)) ok = false;
    });
    if (!ok) return false;
    bits::for_each(s, [&](int a) {
      bits::for_each(s, [&](int b) {
        if (!bits::has(s, lat.join(a, b))) ok = false;
      });
    });
    return ok;
  });
}

/// Operations (circ, under, over) on a bounded lattice, candidates for
/// a residuated triple: a circ b <= c iff b <= a\c iff a <= c/b.
struct ResiduatedTriple {
  FiniteLattice base;
  std::vector<int> circ, under, over;  // n*n, row-major

  int circ_of(int a, int b) const { return circ[a * base.n + b]; }
  int under_of(int a, int c) const { return under[a * base.n + c]; }  // a \ c
  int over_of(int c, int b) const { return over[c * base.n + b]; }    // c / b
};

/// Verifies the residuation biconditionals, unit laws with the top element
/// (integrality), and, when the base carries a Heyting implication, certifies
/// a residuated Heyting algebra: distributive base plus an implicative
/// \-reduct. Failures are report items, never exceptions.
inline Report check_residuated_triple(const ResiduatedTriple& rt) {
  const FiniteLattice& lat = rt.base;
  const int n = lat.n;
  Report rep;

  CheckItem res{.name = "residuation"};
  for (int a = 0; a < n && res.pass; ++a)
    for (int b = 0; b < n && res.pass; ++b)
      for (int c = 0; c < n && res.pass; ++c) {
        ++res.checked;
        const bool lhs = lat.leq(rt.circ_of(a, b), c);
        const bool mid = lat.leq(b, rt.under_of(a, c));
        const bool rhs = lat.leq(a, rt.over_of(c, b));
        if (lhs != mid || mid != rhs) {
          res.pass = false;
          res.witness = {a, b, c};
        }
      }
  rep.add(std::move(res));

  CheckItem unit{.name = "integral-unit"};
  for (int a = 0; a < n && unit.pass; ++a) {
    ++unit.checked;
    if (rt.circ_of(a, lat.top) != a || rt.circ_of(lat.top, a) != a) {
      unit.pass = false;
      unit.witness = {a};
    }
  }
  rep.add(std::move(unit));

  if (lat.has_arrow() && check_heyting(lat).ok()) {
    CheckItem cert{.name = "residuated-heyting"};
    cert.pass = rep.ok();
    if (!check_distributive(lat).pass) {
      cert.pass = false;
      cert.note = "base not distributive";
    } else {
      FiniteLattice reduct = lat;
      reduct.arrow_tab = rt.under;
      Report impl = check_implicative(reduct);
      if (!impl.ok()) {
        cert.pass = false;
        cert.note = "under-reduct not implicative";
      }
    }
    rep.add(std::move(cert));
  }
  return rep;
}

}  // namespace implat

#endif  // IMPLAT_LATTICE_HPP
