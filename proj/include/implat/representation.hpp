#ifndef IMPLAT_REPRESENTATION_HPP
#define IMPLAT_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "implat/frame.hpp"
#include "implat/lattice.hpp"

namespace implat {

/// The filter-ideal frame of a finite implicative lattice: X is the set of
/// filters, Y the set of ideals (proper only, or all, per flag), x gal y iff
/// the carriers intersect, and y T x v iff every a in x and b in v give
/// (a->b) in y. Points are indexed by carrier set in ascending mask order.
struct CanonicalFrame {
  FiniteLattice source;
  ImplicativeFrame frame;
  std::vector<Mask> filters, ideals;     // carriers
  std::vector<int> filt_index, idl_index;  // element a -> point index of its
                                           // principal filter/ideal, or -1
  bool proper_only = true;

  int x_point(int a) const { return filt_index[a]; }
  int y_point(int a) const { return idl_index[a]; }
};

inline CanonicalFrame canonical_frame(const FiniteLattice& lat, bool proper_only = true) {
  {
    Report impl = check_implicative(lat);  // throws MissingArrow when absent
    if (!impl.ok()) fail(Errc::bad_input, "source lattice is not implicative");
  }
  std::vector<Mask> filters, ideals;
  for (const Filter& f : enumerate_filters(lat, proper_only)) filters.push_back(f.carrier);
  for (const Ideal& i : enumerate_ideals(lat, proper_only)) ideals.push_back(i.carrier);
  if (filters.empty() || ideals.empty())
    fail(Errc::bad_input, "lattice has no proper filters or ideals");

  const int nx = static_cast<int>(filters.size());
  const int ny = static_cast<int>(ideals.size());
  std::vector<Mask> rows(nx, 0);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if ((filters[x] & ideals[y]) != 0) rows[x] = bits::with(rows[x], y);
  Polarity pol(std::move(rows), ny);

  SortedRelation t(pol, ImplicativeFrame::t_sorts());
  for (int y = 0; y < ny; ++y)
    for (int x = 0; x < nx; ++x)
      for (int v = 0; v < ny; ++v) {
        bool all = true;
        bits::for_each(filters[x], [&](int a) {
          bits::for_each(ideals[v], [&](int b) {
            if (!bits::has(ideals[y], lat.arrow(a, b))) all = false;
          });
        });
        if (all) t.add({y, x, v});
      }

  std::vector<int> filt_index(lat.n, -1), idl_index(lat.n, -1);
  for (int a = 0; a < lat.n; ++a) {
    for (int x = 0; x < nx; ++x)
      if (filters[x] == lat.up[a]) filt_index[a] = x;
    for (int y = 0; y < ny; ++y)
      if (ideals[y] == lat.down(a)) idl_index[a] = y;
  }

  CanonicalFrame cf{lat,
                    ImplicativeFrame{std::move(pol), std::move(t)},
                    std::move(filters),
                    std::move(ideals),
                    std::move(filt_index),
                    std::move(idl_index),
                    proper_only};

  Report axioms = check_frame_axioms(cf.frame);
  if (!axioms.ok()) {
    std::string what = "canonical frame fails axioms:";
    for (const auto& it : axioms.items)
      if (!it.pass) what += " " + it.name;
    fail(Errc::verification_failure, what);
  }
  return cf;
}

/// The point operator x ~> v: the ideal generated by {a->b | a in x, b in v},
/// returned as a Y point. Needs the improper ideal available, so it refuses
/// proper-only frames.
inline int leadsto(const CanonicalFrame& cf, int x, int v) {
  if (cf.proper_only)
    fail(Errc::requires_improper, "the point operator may produce the improper ideal");
  const FiniteLattice& lat = cf.source;
  int c = lat.bot;
  bits::for_each(cf.filters[x], [&](int a) {
    bits::for_each(cf.ideals[v], [&](int b) { c = lat.join(c, lat.arrow(a, b)); });
  });
  const Mask carrier = lat.down(c);
  for (int y = 0; y < static_cast<int>(cf.ideals.size()); ++y)
    if (cf.ideals[y] == carrier) return y;
  fail(Errc::verification_failure, "generated ideal missing from point set");
}

/// X_a = {x | a in x}; asserted equal to Gamma x_a and to '{y_a} whenever
/// those points exist in the chosen mode.
inline Mask rep_x(const CanonicalFrame& cf, int a) {
  Mask out = 0;
  for (int x = 0; x < static_cast<int>(cf.filters.size()); ++x)
    if (bits::has(cf.filters[x], a)) out = bits::with(out, x);
  if (cf.filt_index[a] >= 0)
    detail::verify(out == cf.frame.pol.gamma(Side::x, cf.filt_index[a]),
                   "X_a differs from the closure of its principal point");
  if (cf.idl_index[a] >= 0)
    detail::verify(out == cf.frame.pol.col(cf.idl_index[a]),
                   "X_a differs from the polar of its principal ideal");
  return out;
}

/// Y^a = {y | a in y}, dually.
inline Mask rep_y(const CanonicalFrame& cf, int a) {
  Mask out = 0;
  for (int y = 0; y < static_cast<int>(cf.ideals.size()); ++y)
    if (bits::has(cf.ideals[y], a)) out = bits::with(out, y);
  if (cf.idl_index[a] >= 0)
    detail::verify(out == cf.frame.pol.gamma(Side::y, cf.idl_index[a]),
                   "Y^a differs from the closure of its principal point");
  if (cf.filt_index[a] >= 0)
    detail::verify(out == cf.frame.pol.row(cf.filt_index[a]),
                   "Y^a differs from the polar of its principal filter");
  return out;
}

/// a |-> X_a is a lattice isomorphism onto the stable family, and a |-> Y^a
/// a dual isomorphism onto the co-stable family.
inline Report verify_lattice_rep(const CanonicalFrame& cf,
                                 std::size_t max_family = default_family_cap) {
  const FiniteLattice& lat = cf.source;
  const Polarity& pol = cf.frame.pol;
  StableFamily fam = enumerate_stable(pol, Side::x, max_family);
  Report rep;
  const int n = lat.n;

  std::vector<Mask> xa(n), ya(n);
  for (int a = 0; a < n; ++a) {
    xa[a] = rep_x(cf, a);
    ya[a] = rep_y(cf, a);
  }

  CheckItem size{.name = "size"};
  size.checked = fam.size();
  size.pass = fam.size() == n;
  size.note = "family " + std::to_string(fam.size()) + " vs lattice " + std::to_string(n);
  rep.add(std::move(size));

  CheckItem inj{.name = "injective"};
  for (int a = 0; a < n && inj.pass; ++a)
    for (int b = a + 1; b < n && inj.pass; ++b) {
      ++inj.checked;
      if (xa[a] == xa[b]) {
        inj.pass = false;
        inj.witness = {a, b};
      }
    }
  rep.add(std::move(inj));

  CheckItem sur{.name = "surjective"};
  for (int i = 0; i < fam.size() && sur.pass; ++i) {
    ++sur.checked;
    bool hit = false;
    for (int a = 0; a < n; ++a)
      if (xa[a] == fam.member(i)) hit = true;
    if (!hit) {
      sur.pass = false;
      sur.witness = {i};
    }
  }
  rep.add(std::move(sur));

  CheckItem ord{.name = "order-embed"};
  for (int a = 0; a < n && ord.pass; ++a)
    for (int b = 0; b < n && ord.pass; ++b) {
      ++ord.checked;
      if (lat.leq(a, b) != bits::subset(xa[a], xa[b])) {
        ord.pass = false;
        ord.witness = {a, b};
      }
    }
  rep.add(std::move(ord));

  CheckItem meet{.name = "meet"};
  for (int a = 0; a < n && meet.pass; ++a)
    for (int b = 0; b < n && meet.pass; ++b) {
      ++meet.checked;
      if (xa[lat.meet(a, b)] != (xa[a] & xa[b])) {
        meet.pass = false;
        meet.witness = {a, b};
      }
    }
  rep.add(std::move(meet));

  CheckItem join{.name = "join"};
  for (int a = 0; a < n && join.pass; ++a)
    for (int b = 0; b < n && join.pass; ++b) {
      ++join.checked;
      if (xa[lat.join(a, b)] != pol.stabilize(Side::x, xa[a] | xa[b])) {
        join.pass = false;
        join.witness = {a, b};
      }
    }
  rep.add(std::move(join));

  CheckItem bounds{.name = "bounds"};
  bounds.checked = 2;
  bounds.pass = xa[lat.bot] == fam.member(fam.bottom()) && xa[lat.top] == pol.universe(Side::x);
  rep.add(std::move(bounds));

  CheckItem dual{.name = "dual-iso"};
  {
    StableFamily famy = enumerate_stable(pol, Side::y, max_family);
    dual.pass = famy.size() == n;
    for (int a = 0; a < n && dual.pass; ++a)
      for (int b = 0; b < n && dual.pass; ++b) {
        ++dual.checked;
        if (lat.leq(a, b) != bits::subset(ya[b], ya[a])) {
          dual.pass = false;
          dual.witness = {a, b};
        }
        if (dual.pass && ya[lat.join(a, b)] != (ya[a] & ya[b])) {
          dual.pass = false;
          dual.witness = {a, b};
          dual.note = "join to meet";
        }
        if (dual.pass && ya[lat.meet(a, b)] != pol.stabilize(Side::y, ya[a] | ya[b])) {
          dual.pass = false;
          dual.witness = {a, b};
          dual.note = "meet to join";
        }
      }
  }
  rep.add(std::move(dual));
  return rep;
}

/// X_a => X_b = X_{a->b}, and u T' x_a y_b iff (a->b) in u.
inline Report verify_implicative_rep(const CanonicalFrame& cf) {
  const FiniteLattice& lat = cf.source;
  Report rep;
  SortedRelation tdual = cf.frame.T.galois_dual(cf.frame.pol);

  CheckItem arrow{.name = "arrow-rep"};
  for (int a = 0; a < lat.n && arrow.pass; ++a)
    for (int b = 0; b < lat.n && arrow.pass; ++b) {
      ++arrow.checked;
      if (implies(cf.frame, tdual, rep_x(cf, a), rep_x(cf, b)) != rep_x(cf, lat.arrow(a, b))) {
        arrow.pass = false;
        arrow.witness = {a, b};
      }
    }
  rep.add(std::move(arrow));

  CheckItem member{.name = "arrow-membership"};
  for (int a = 0; a < lat.n && member.pass; ++a) {
    if (cf.filt_index[a] < 0) continue;
    for (int b = 0; b < lat.n && member.pass; ++b) {
      if (cf.idl_index[b] < 0) continue;
      for (int u = 0; u < static_cast<int>(cf.filters.size()) && member.pass; ++u) {
        ++member.checked;
        const bool lhs = tdual.holds({u, cf.filt_index[a], cf.idl_index[b]});
        const bool rhs = bits::has(cf.filters[u], lat.arrow(a, b));
        if (lhs != rhs) {
          member.pass = false;
          member.witness = {u, a, b};
        }
      }
    }
  }
  rep.add(std::move(member));
  return rep;
}

/// x R^ u z iff every a in u and b in z have a&b in x.
inline SortedRelation canonical_r_meet(const CanonicalFrame& cf) {
  const FiniteLattice& lat = cf.source;
  const int nx = static_cast<int>(cf.filters.size());
  SortedRelation r(cf.frame.pol, {Side::x, Side::x, Side::x});
  for (int x = 0; x < nx; ++x)
    for (int u = 0; u < nx; ++u)
      for (int z = 0; z < nx; ++z) {
        bool all = true;
        bits::for_each(cf.filters[u], [&](int a) {
          bits::for_each(cf.filters[z], [&](int b) {
            if (!bits::has(cf.filters[x], lat.meet(a, b))) all = false;
          });
        });
        if (all) r.add({x, u, z});
      }
  return r;
}

/// The canonical meet relation coincides with the upper-bound relation; on
/// distributive sources the sections of its Galois dual are Galois sets.
inline Report verify_upper_bound(const CanonicalFrame& cf) {
  Report rep;
  DerivedRelations d = derive_relations(cf.frame);
  SortedRelation rmeet = canonical_r_meet(cf);

  CheckItem eq{.name = "meet-is-upper-bound"};
  eq.checked = static_cast<long long>(cf.filters.size()) * cf.filters.size();
  eq.pass = rmeet == d.rleq;
  rep.add(std::move(eq));

  if (check_distributive(cf.source).pass) {
    Report sections = check_sections_galois(cf.frame.pol, rmeet.galois_dual(cf.frame.pol), {0, 1});
    CheckItem sec{.name = "dual-sections-galois"};
    sec.pass = sections.ok();
    for (const auto& it : sections.items) sec.checked += it.checked;
    rep.add(std::move(sec));
  }
  return rep;
}

/// Filter join: the smallest filter containing both carriers.
inline Mask filter_join(const FiniteLattice& lat, Mask x, Mask u) {
  Mask out = 0;
  for (int c = 0; c < lat.n; ++c) {
    bool in = false;
    bits::for_each(x, [&](int a) {
      bits::for_each(u, [&](int b) {
        if (lat.leq(lat.meet(a, b), c)) in = true;
      });
    });
    if (in) out = bits::with(out, c);
  }
  return out;
}

/// For Heyting sources: the canonical frame satisfies the Heyting frame
/// condition, and u T' x y iff the filter join of x and u meets y.
inline Report verify_heyting_canonical(const CanonicalFrame& cf) {
  if (!check_heyting(cf.source).ok())
    fail(Errc::bad_input, "source lattice is not a Heyting algebra");
  Report rep;

  Report hf = check_heyting_frame(cf.frame);
  CheckItem frame_item{.name = "heyting-frame"};
  frame_item.pass = hf.ok();
  for (const auto& it : hf.items) frame_item.checked += it.checked;
  rep.add(std::move(frame_item));

  SortedRelation tdual = cf.frame.T.galois_dual(cf.frame.pol);
  CheckItem kernel{.name = "join-kernel"};
  const int nx = static_cast<int>(cf.filters.size());
  const int ny = static_cast<int>(cf.ideals.size());
  for (int u = 0; u < nx && kernel.pass; ++u)
    for (int x = 0; x < nx && kernel.pass; ++x)
      for (int y = 0; y < ny && kernel.pass; ++y) {
        ++kernel.checked;
        const bool lhs = tdual.holds({u, x, y});
        const bool rhs = (filter_join(cf.source, cf.filters[x], cf.filters[u]) &
                          cf.ideals[y]) != 0;
        if (lhs != rhs) {
          kernel.pass = false;
          kernel.witness = {u, x, y};
        }
      }
  rep.add(std::move(kernel));

  CheckItem gammas{.name = "join-gamma"};
  for (int u = 0; u < nx && gammas.pass; ++u)
    for (int x = 0; x < nx && gammas.pass; ++x) {
      const Mask joined = filter_join(cf.source, cf.filters[x], cf.filters[u]);
      int j = -1;
      for (int z = 0; z < nx; ++z)
        if (cf.filters[z] == joined) j = z;
      if (j < 0) continue;  // join improper and absent in proper-only mode
      ++gammas.checked;
      const Polarity& pol = cf.frame.pol;
      if ((pol.gamma(Side::x, u) & pol.gamma(Side::x, x)) != pol.gamma(Side::x, j)) {
        gammas.pass = false;
        gammas.witness = {u, x, j};
      }
    }
  rep.add(std::move(gammas));
  return rep;
}

/// Basis identities: X_{a&b} = X_a n X_b, Y^{a|b} = Y^a n Y^b, the polar maps
/// exchange the two bases, and closed/open density of the stable family.
inline Report verify_basis(const CanonicalFrame& cf,
                           std::size_t max_family = default_family_cap) {
  const FiniteLattice& lat = cf.source;
  const Polarity& pol = cf.frame.pol;
  Report rep;

  CheckItem bx{.name = "basis-meet-x"};
  for (int a = 0; a < lat.n && bx.pass; ++a)
    for (int b = 0; b < lat.n && bx.pass; ++b) {
      ++bx.checked;
      if (rep_x(cf, lat.meet(a, b)) != (rep_x(cf, a) & rep_x(cf, b))) {
        bx.pass = false;
        bx.witness = {a, b};
      }
    }
  rep.add(std::move(bx));

  CheckItem by{.name = "basis-meet-y"};
  for (int a = 0; a < lat.n && by.pass; ++a)
    for (int b = 0; b < lat.n && by.pass; ++b) {
      ++by.checked;
      if (rep_y(cf, lat.join(a, b)) != (rep_y(cf, a) & rep_y(cf, b))) {
        by.pass = false;
        by.witness = {a, b};
      }
    }
  rep.add(std::move(by));

  CheckItem dualiso{.name = "polar-dual-iso"};
  for (int a = 0; a < lat.n && dualiso.pass; ++a) {
    ++dualiso.checked;
    if (pol.polar_right(rep_x(cf, a)) != rep_y(cf, a) ||
        pol.polar_left(rep_y(cf, a)) != rep_x(cf, a)) {
      dualiso.pass = false;
      dualiso.witness = {a};
    }
  }
  rep.add(std::move(dualiso));

  StableFamily fam = enumerate_stable(pol, Side::x, max_family);
  CheckItem closed{.name = "closed-density"};
  for (int i = 0; i < fam.size() && closed.pass; ++i) {
    ++closed.checked;
    Mask cover = 0;
    bits::for_each(fam.member(i), [&](int u) { cover |= pol.gamma(Side::x, u); });
    if (cover != fam.member(i) || pol.stabilize(Side::x, cover) != fam.member(i)) {
      closed.pass = false;
      closed.witness = {i};
    }
  }
  rep.add(std::move(closed));

  CheckItem open{.name = "open-density"};
  for (int i = 0; i < fam.size() && open.pass; ++i) {
    ++open.checked;
    Mask inter = pol.universe(Side::x);
    bits::for_each(pol.polar_right(fam.member(i)), [&](int y) { inter &= pol.col(y); });
    if (inter != fam.member(i)) {
      open.pass = false;
      open.witness = {i};
    }
  }
  rep.add(std::move(open));
  return rep;
}

/// Certifies that the source lattice embeds into the full complex algebra of
/// its canonical frame with => restricting to ->, that the complex algebra
/// carries the full residuated signature, and the Heyting upgrades when the
/// source is distributive or Heyting.
inline Report reduct_report(const CanonicalFrame& cf,
                            std::size_t max_family = default_family_cap) {
  if (!verify_implicative_rep(cf).ok())
    fail(Errc::verification_failure, "implicative representation does not hold");
  const FiniteLattice& lat = cf.source;
  Report rep;
  ComplexAlgebra ca = full_complex_algebra(cf.frame, max_family);
  const int n = lat.n;

  std::vector<int> embed(n, -1);
  CheckItem emb{.name = "embedding"};
  for (int a = 0; a < n; ++a) embed[a] = ca.family.index_of(rep_x(cf, a));
  for (int a = 0; a < n && emb.pass; ++a) {
    ++emb.checked;
    if (embed[a] < 0) {
      emb.pass = false;
      emb.witness = {a};
    }
  }
  for (int a = 0; a < n && emb.pass; ++a)
    for (int b = 0; b < n && emb.pass; ++b) {
      ++emb.checked;
      bool ok = lat.leq(a, b) == ca.family.lat.leq(embed[a], embed[b]) &&
                embed[lat.meet(a, b)] == ca.family.meet(embed[a], embed[b]) &&
                embed[lat.join(a, b)] == ca.family.join(embed[a], embed[b]);
      if (!ok) {
        emb.pass = false;
        emb.witness = {a, b};
      }
    }
  if (emb.pass)
    emb.pass = embed[lat.bot] == ca.family.bottom() && embed[lat.top] == ca.family.top_index();
  rep.add(std::move(emb));

  CheckItem restr{.name = "arrow-restricts"};
  for (int a = 0; a < n && restr.pass; ++a)
    for (int b = 0; b < n && restr.pass; ++b) {
      ++restr.checked;
      if (ca.imp_of(embed[a], embed[b]) != embed[lat.arrow(a, b)]) {
        restr.pass = false;
        restr.witness = {a, b};
      }
    }
  rep.add(std::move(restr));

  Report triple = check_residuated_triple(ca.triple());
  CheckItem resid{.name = "residuated"};
  resid.pass = triple.find("residuation")->pass && triple.find("integral-unit")->pass;
  resid.checked = triple.find("residuation")->checked;
  resid.note = "complex algebra size " + std::to_string(ca.family.size());
  rep.add(std::move(resid));

  if (check_distributive(lat).pass) {
    CheckItem heyt{.name = "heyting-complex"};
    heyt.pass = ca.family.lat.has_arrow() && check_heyting(ca.family.lat).ok() &&
                check_distributive(ca.family.lat).pass;
    heyt.checked = 1;
    rep.add(std::move(heyt));
  }
  if (lat.has_arrow() && check_heyting(lat).ok()) {
    CheckItem residmeet{.name = "arrow-residual-of-meet"};
    residmeet.pass = ca.family.lat.has_arrow();
    const int fn = ca.family.size();
    for (int i = 0; i < fn && residmeet.pass; ++i)
      for (int j = 0; j < fn && residmeet.pass; ++j) {
        ++residmeet.checked;
        if (ca.imp_of(i, j) != ca.family.lat.arrow(i, j)) {
          residmeet.pass = false;
          residmeet.witness = {i, j};
        }
      }
    rep.add(std::move(residmeet));
  }
  return rep;
}

}  // namespace implat

#endif  // IMPLAT_REPRESENTATION_HPP
