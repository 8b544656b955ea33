#ifndef IMPLAT_FRAME_HPP
#define IMPLAT_FRAME_HPP

#include <string>
#include <vector>

#include "implat/polarity.hpp"
#include "implat/relation.hpp"

namespace implat {

/// A polarity together with a ternary relation T of sort (d; 1 d), that is,
/// T relates a Y-point to an (X-point, Y-point) pair. The frame axioms are
/// checked by check_frame_axioms, never assumed.
struct ImplicativeFrame {
  Polarity pol;
  SortedRelation T;

  static std::vector<Side> t_sorts() { return {Side::y, Side::x, Side::y}; }

  static ImplicativeFrame empty(Polarity pol) {
    SortedRelation t(pol, t_sorts());
    return ImplicativeFrame{std::move(pol), std::move(t)};
  }
};

/// The five relations derived from T plus the upper-bound relation and its
/// Galois dual. Field names follow the sort patterns of the relations.
struct DerivedRelations {
  SortedRelation tdual;      // (1;1d)  x T' z v   iff  forall y (y T z v -> x gal y)
  SortedRelation rd11;       // (d;11)  v R zx     iff  x T' z v
  SortedRelation r111;       // (1;11)  u R111 zx  iff  forall v (v R zx -> u gal v)
  SortedRelation sdd1;       // (d;d1)  y S vx     iff  y T x v
  SortedRelation s1d1;       // (1;d1)  u S' vx    iff  forall y (y S vx -> u gal y)
  SortedRelation rleq;       // (1;11)  x Rleq uz  iff  u <= x and z <= x
  SortedRelation rleq_dual;  // (d;11)
};

namespace detail {

inline void verify(bool cond, const std::string& what) {
  if (!cond) fail(Errc::verification_failure, what);
}

}  // namespace detail

/// Materializes the derived relation family and re-verifies every
/// definitional biconditional pointwise.
inline DerivedRelations derive_relations(const ImplicativeFrame& f) {
  const Polarity& pol = f.pol;
  const int nx = pol.nx(), ny = pol.ny();

  SortedRelation tdual = f.T.galois_dual(pol);
  SortedRelation rd11 = tdual.permuted(pol, {2, 1, 0});
  SortedRelation r111 = rd11.galois_dual(pol);
  SortedRelation sdd1 = f.T.permuted(pol, {0, 2, 1});
  SortedRelation s1d1 = sdd1.galois_dual(pol);

  SortedRelation rleq(pol, {Side::x, Side::x, Side::x});
  auto up = pol.specialization(Side::x);
  for (int x = 0; x < nx; ++x)
    for (int u = 0; u < nx; ++u)
      for (int z = 0; z < nx; ++z)
        if (bits::has(up[u], x) && bits::has(up[z], x)) rleq.add({x, u, z});
  SortedRelation rleq_dual = rleq.galois_dual(pol);

  for (int x = 0; x < nx; ++x)
    for (int z = 0; z < nx; ++z)
      for (int v = 0; v < ny; ++v) {
        bool all = true;
        for (int y = 0; y < ny; ++y)
          if (f.T.holds({y, z, v}) && !pol.gal(x, y)) all = false;
        detail::verify(tdual.holds({x, z, v}) == all, "dual of T");
        detail::verify(rd11.holds({v, z, x}) == tdual.holds({x, z, v}), "permutation to R(d11)");
      }
  for (int u = 0; u < nx; ++u)
    for (int z = 0; z < nx; ++z)
      for (int x = 0; x < nx; ++x) {
        bool all = true;
        for (int v = 0; v < ny; ++v)
          if (rd11.holds({v, z, x}) && !pol.gal(u, v)) all = false;
        detail::verify(r111.holds({u, z, x}) == all, "dual of R(d11)");
      }
  for (int y = 0; y < ny; ++y)
    for (int v = 0; v < ny; ++v)
      for (int x = 0; x < nx; ++x)
        detail::verify(sdd1.holds({y, v, x}) == f.T.holds({y, x, v}), "permutation to S(dd1)");
  for (int u = 0; u < nx; ++u)
    for (int v = 0; v < ny; ++v)
      for (int x = 0; x < nx; ++x) {
        bool all = true;
        for (int y = 0; y < ny; ++y)
          if (sdd1.holds({y, v, x}) && !pol.gal(u, y)) all = false;
        detail::verify(s1d1.holds({u, v, x}) == all, "dual of S(dd1)");
      }
  return DerivedRelations{std::move(tdual), std::move(rd11), std::move(r111),
                          std::move(sdd1), std::move(s1d1), std::move(rleq),
                          std::move(rleq_dual)};
}

/// F0: x gal y iff every u satisfies u T' x y.
/// F1: the frame is separated.
/// F2: every output section T(x,v) is a closed element of the Y side; the
///     empty section counts as closed only when the empty set is itself
///     Galois there.
/// F3: for each y, the binary relation yT is decreasing in both places.
/// F4: for each z, the input sections of T' at either place are Galois sets.
inline Report check_frame_axioms(const ImplicativeFrame& f) {
  const Polarity& pol = f.pol;
  const int nx = pol.nx(), ny = pol.ny();
  SortedRelation tdual = f.T.galois_dual(pol);
  Report rep;

  CheckItem f0{.name = "F0"};
  for (int x = 0; x < nx && f0.pass; ++x)
    for (int y = 0; y < ny && f0.pass; ++y) {
      ++f0.checked;
      const bool rhs = tdual.section({x, y}) == pol.universe(Side::x);
      if (pol.gal(x, y) != rhs) {
        f0.pass = false;
        f0.witness = {x, y};
      }
    }
  rep.add(std::move(f0));

  CheckItem f1{.name = "F1"};
  f1.checked = nx + ny;
  if (!pol.check_separated()) f1.pass = false;
  rep.add(std::move(f1));

  CheckItem f2{.name = "F2"};
  {
    auto closed_y = pol.closed_elements(Side::y);
    const bool empty_ok = pol.stabilize(Side::y, 0) == 0;
    for (int x = 0; x < nx && f2.pass; ++x)
      for (int v = 0; v < ny && f2.pass; ++v) {
        ++f2.checked;
        const Mask sec = f.T.section({x, v});
        bool ok;
        if (sec == 0) {
          ok = empty_ok;
        } else {
          ok = false;
          for (Mask g : closed_y)
            if (g == sec) ok = true;
        }
        if (!ok) {
          f2.pass = false;
          f2.witness = {x, v};
        }
      }
  }
  rep.add(std::move(f2));

  CheckItem f3{.name = "F3"};
  {
    auto upx = pol.specialization(Side::x);
    auto upy = pol.specialization(Side::y);
    for (int y = 0; y < ny && f3.pass; ++y)
      for (int x = 0; x < nx && f3.pass; ++x)
        for (int v = 0; v < ny && f3.pass; ++v) {
          ++f3.checked;
          if (!f.T.holds({y, x, v})) continue;
          for (int xh = 0; xh < nx && f3.pass; ++xh)
            if (bits::has(upx[xh], x) && !f.T.holds({y, xh, v})) {
              f3.pass = false;
              f3.witness = {y, x, v, xh};
              f3.note = "first argument";
            }
          for (int vh = 0; vh < ny && f3.pass; ++vh)
            if (bits::has(upy[vh], v) && !f.T.holds({y, x, vh})) {
              f3.pass = false;
              f3.witness = {y, x, v, vh};
              f3.note = "second argument";
            }
        }
  }
  rep.add(std::move(f3));

  CheckItem f4{.name = "F4"};
  for (int z = 0; z < nx && f4.pass; ++z) {
    for (int v = 0; v < ny && f4.pass; ++v) {
      ++f4.checked;
      if (!pol.is_stable(Side::x, tdual.section_at({z, 0, v}, 0))) {
        f4.pass = false;
        f4.witness = {z, v};
        f4.note = "section at first place";
      }
    }
    for (int x = 0; x < nx && f4.pass; ++x) {
      ++f4.checked;
      if (!pol.is_stable(Side::y, tdual.section_at({z, x, 0}, 1))) {
        f4.pass = false;
        f4.witness = {z, x};
        f4.note = "section at second place";
      }
    }
  }
  rep.add(std::move(f4));
  return rep;
}

/// Image operator of T: {y | exists x in U, v in V with y T x v}.
inline Mask alpha_t(const ImplicativeFrame& f, Mask u_set, Mask v_set) {
  Mask out = 0;
  bits::for_each(u_set, [&](int x) {
    bits::for_each(v_set, [&](int v) { out |= f.T.section({x, v}); });
  });
  return out;
}

/// Closure of the image operator on Galois sets (A stable, B co-stable).
inline Mask mtright(const ImplicativeFrame& f, Mask a, Mask b) {
  return f.pol.stabilize(Side::y, alpha_t(f, a, b));
}

/// A => C, computed once as the polar of the T-image of (A, C') and once by
/// the first-order membership condition; both routes must agree.
inline Mask implies(const ImplicativeFrame& f, const SortedRelation& tdual, Mask a, Mask c) {
  const Polarity& pol = f.pol;
  const Mask cp = pol.polar_right(c);
  const Mask via_image = pol.polar_left(alpha_t(f, a, cp));

  Mask via_clause = pol.universe(Side::x);
  bits::for_each(a, [&](int x) {
    bits::for_each(cp, [&](int y) { via_clause &= tdual.section({x, y}); });
  });
  detail::verify(via_image == via_clause, "two routes to => disagree");
  return via_image;
}

inline Mask implies(const ImplicativeFrame& f, Mask a, Mask c) {
  return implies(f, f.T.galois_dual(f.pol), a, c);
}

/// A (.) F, the stabilized R111-image of a pair of stable sets.
inline Mask overt(const ImplicativeFrame& f, const DerivedRelations& d, Mask a, Mask fs) {
  Mask img = 0;
  bits::for_each(a, [&](int z) {
    bits::for_each(fs, [&](int x) { img |= d.r111.section({z, x}); });
  });
  return f.pol.stabilize(Side::x, img);
}

inline Mask overt(const ImplicativeFrame& f, Mask a, Mask fs) {
  return overt(f, derive_relations(f), a, fs);
}

/// C <= F (the left residual), by the first-order membership condition.
inline Mask la(const ImplicativeFrame& f, const DerivedRelations& d, Mask c, Mask fs) {
  const Polarity& pol = f.pol;
  const Mask cp = pol.polar_right(c);
  Mask out = 0;
  for (int z = 0; z < pol.nx(); ++z) {
    bool all = true;
    bits::for_each(fs, [&](int x) {
      bits::for_each(cp, [&](int v) {
        if (!d.s1d1.holds({x, v, z})) all = false;
      });
    });
    if (all) out = bits::with(out, z);
  }
  return out;
}

inline Mask la(const ImplicativeFrame& f, Mask c, Mask fs) {
  return la(f, derive_relations(f), c, fs);
}

/// Alternative route to the left residual through the S image operator,
/// used as an independent cross-check.
inline Mask la_via_image(const ImplicativeFrame& f, const DerivedRelations& d, Mask c,
                         Mask fs) {
  const Polarity& pol = f.pol;
  const Mask cp = pol.polar_right(c);
  Mask img = 0;
  bits::for_each(cp, [&](int v) {
    bits::for_each(fs, [&](int x) { img |= d.sdd1.section({v, x}); });
  });
  return pol.polar_left(img);
}

/// A <= C(<=)F iff A(.)F <= C iff F <= A=>C over all stable triples.
inline Report check_residuation(const ImplicativeFrame& f,
                                std::size_t max_family = default_family_cap) {
  StableFamily fam = enumerate_stable(f.pol, Side::x, max_family);
  DerivedRelations d = derive_relations(f);
  Report rep;
  CheckItem item{.name = "residuation-triple"};
  item.note = "family size " + std::to_string(fam.size());
  const int n = fam.size();
  for (int ai = 0; ai < n && item.pass; ++ai)
    for (int fi = 0; fi < n && item.pass; ++fi) {
      const Mask av = fam.member(ai), fv = fam.member(fi);
      const Mask ov = overt(f, d, av, fv);
      for (int ci = 0; ci < n && item.pass; ++ci) {
        ++item.checked;
        const Mask cv = fam.member(ci);
        const bool left = bits::subset(av, la(f, d, cv, fv));
        const bool middle = bits::subset(ov, cv);
        const bool right = bits::subset(fv, implies(f, d.tdual, av, cv));
        if (left != middle || middle != right) {
          item.pass = false;
          item.witness = {ai, fi, ci};
        }
      }
    }
  rep.add(std::move(item));
  return rep;
}

/// (i) all sections of the Galois dual of the upper-bound relation are
/// Galois sets; (ii) brute-force binary distributivity over all stable
/// triples; (iii) on this instance, (i) implies (ii).
inline Report check_distributivity(const ImplicativeFrame& f,
                                   std::size_t max_family = default_family_cap) {
  StableFamily fam = enumerate_stable(f.pol, Side::x, max_family);
  DerivedRelations d = derive_relations(f);
  Report rep;

  Report sections = check_sections_galois(f.pol, d.rleq_dual, {0, 1});
  CheckItem sec{.name = "sections-galois"};
  sec.pass = sections.ok();
  for (const auto& it : sections.items) {
    sec.checked += it.checked;
    if (!it.pass && sec.witness.empty()) sec.witness = it.witness;
  }
  rep.add(std::move(sec));

  CheckItem brute{.name = "distributive"};
  const int n = fam.size();
  auto join_mask = [&](Mask p, Mask q) { return f.pol.stabilize(Side::x, p | q); };
  for (int ai = 0; ai < n && brute.pass; ++ai)
    for (int bi = 0; bi < n && brute.pass; ++bi)
      for (int ci = 0; ci < n && brute.pass; ++ci) {
        ++brute.checked;
        const Mask a = fam.member(ai), b = fam.member(bi), c = fam.member(ci);
        if ((a & join_mask(b, c)) != join_mask(a & b, a & c)) {
          brute.pass = false;
          brute.witness = {ai, bi, ci};
        }
      }
  rep.add(std::move(brute));

  CheckItem link{.name = "sections-imply-distributive"};
  link.checked = 1;
  link.pass = !(rep.items[0].pass && !rep.items[1].pass);
  rep.add(std::move(link));
  return rep;
}

/// Decides whether R111 equals the upper-bound relation, and re-verifies the
/// two meet-inclusion biconditionals pointwise with each side evaluated
/// independently.
inline Report check_heyting_frame(const ImplicativeFrame& f) {
  const Polarity& pol = f.pol;
  DerivedRelations d = derive_relations(f);
  Report rep;
  const int nx = pol.nx();
  auto up = pol.specialization(Side::x);

  CheckItem eq{.name = "relation-eq"};
  for (int u = 0; u < nx && eq.pass; ++u)
    for (int z = 0; z < nx && eq.pass; ++z) {
      ++eq.checked;
      if (d.r111.section({u, z}) != d.rleq.section({u, z})) {
        eq.pass = false;
        eq.witness = {u, z};
      }
    }
  rep.add(std::move(eq));

  CheckItem lower{.name = "meet-lower-iff"};
  CheckItem upper{.name = "meet-upper-iff"};
  for (int x = 0; x < nx; ++x)
    for (int z = 0; z < nx; ++z) {
      const Mask gx = pol.gamma(Side::x, x), gz = pol.gamma(Side::x, z);
      const Mask both = gx & gz;
      const Mask ov = overt(f, d, gx, gz);
      const Mask r111 = d.r111.section({x, z});
      const Mask rleq = d.rleq.section({x, z});
      ++lower.checked;
      if (lower.pass && (bits::subset(both, ov) != bits::subset(rleq, r111))) {
        lower.pass = false;
        lower.witness = {x, z};
      }
      ++upper.checked;
      if (upper.pass && (bits::subset(ov, both) != bits::subset(r111, rleq))) {
        upper.pass = false;
        upper.witness = {x, z};
      }
    }
  rep.add(std::move(lower));
  rep.add(std::move(upper));
  return rep;
}

/// {x | every z above x that lies in A lies in C}.
inline Mask kripke_implies(const ImplicativeFrame& f, Mask a, Mask c) {
  auto up = f.pol.specialization(Side::x);
  Mask out = 0;
  for (int x = 0; x < f.pol.nx(); ++x)
    if (bits::subset(up[x] & a, c)) out = bits::with(out, x);
  return out;
}

/// The lattice of stable sets with the three relation-induced operations,
/// tabulated over family indices.
struct ComplexAlgebra {
  StableFamily family;
  std::vector<int> imp;   // imp[a*n+c]  = index of A => C
  std::vector<int> cir;   // cir[a*n+f]  = index of A (.) F
  std::vector<int> lres;  // lres[c*n+f] = index of C (<=) F

  int imp_of(int a, int c) const { return imp[a * family.size() + c]; }
  int cir_of(int a, int f) const { return cir[a * family.size() + f]; }
  int lres_of(int c, int f) const { return lres[c * family.size() + f]; }

  /// View as (circ, under, over) = ((.), =>, (<=)) over the family lattice.
  ResiduatedTriple triple() const { return ResiduatedTriple{family.lat, cir, imp, lres}; }
};

inline ComplexAlgebra full_complex_algebra(const ImplicativeFrame& f,
                                           std::size_t max_family = default_family_cap) {
  ComplexAlgebra ca;
  ca.family = enumerate_stable(f.pol, Side::x, max_family);
  DerivedRelations d = derive_relations(f);
  const int n = ca.family.size();
  ca.imp.assign(static_cast<std::size_t>(n) * n, -1);
  ca.cir.assign(static_cast<std::size_t>(n) * n, -1);
  ca.lres.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Mask a = ca.family.member(i), b = ca.family.member(j);
      const int imp = ca.family.index_of(implies(f, d.tdual, a, b));
      const int cir = ca.family.index_of(overt(f, d, a, b));
      const int lres = ca.family.index_of(la(f, d, a, b));
      detail::verify(imp >= 0 && cir >= 0 && lres >= 0,
                     "complex algebra operation left the stable family");
      ca.imp[i * n + j] = imp;
      ca.cir[i * n + j] = cir;
      ca.lres[i * n + j] = lres;
    }
  // attach the residual implication when meet is residuated (distributive case)
  try {
    ca.family.lat.arrow_tab = compute_residual_arrow(ca.family.lat);
  } catch (const Error& e) {
    if (e.code() != Errc::not_residuated) throw;
  }
  return ca;
}

}  // namespace implat

#endif  // IMPLAT_FRAME_HPP
