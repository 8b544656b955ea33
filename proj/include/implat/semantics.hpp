#ifndef IMPLAT_SEMANTICS_HPP
#define IMPLAT_SEMANTICS_HPP

#include <map>
#include <string>
#include <vector>

#include "implat/formula.hpp"
#include "implat/frame.hpp"

namespace implat {

/// A frame together with a valuation of atoms by stable sets.
struct Model {
  ImplicativeFrame frame;
  std::map<std::string, Mask> valuation;

  Model(ImplicativeFrame f, std::map<std::string, Mask> val)
      : frame(std::move(f)), valuation(std::move(val)) {
    for (const auto& [name, set] : valuation)
      if (!frame.pol.is_stable(Side::x, set))
        fail(Errc::bad_input, "valuation of '" + name + "' is not stable");
  }
};

/// Interpretation and co-interpretation of a formula; always coval = val'
/// and val = 'coval.
struct Interpretation {
  Mask val, coval;
};

namespace detail {

struct EvalContext {
  const Model* model;
  SortedRelation tdual;
  std::map<const Formula*, Interpretation> memo;
};

inline Interpretation eval(EvalContext& ctx, const FormulaPtr& f) {
  if (auto it = ctx.memo.find(f.get()); it != ctx.memo.end()) return it->second;
  const Polarity& pol = ctx.model->frame.pol;
  Interpretation out;
  switch (f->kind) {
    case Conn::atom: {
      auto it = ctx.model->valuation.find(f->atom);
      if (it == ctx.model->valuation.end())
        fail(Errc::unbound_atom, "atom '" + f->atom + "' has no valuation");
      out.val = it->second;
      out.coval = pol.polar_right(out.val);
      break;
    }
    case Conn::top:
      out.val = pol.universe(Side::x);
      out.coval = pol.polar_right(out.val);
      break;
    case Conn::bot:
      out.val = pol.stabilize(Side::x, 0);
      out.coval = pol.universe(Side::y);
      break;
    case Conn::conj: {
      Interpretation l = eval(ctx, f->lhs), r = eval(ctx, f->rhs);
      out.val = l.val & r.val;
      out.coval = pol.polar_right(out.val);
      break;
    }
    case Conn::disj: {
      Interpretation l = eval(ctx, f->lhs), r = eval(ctx, f->rhs);
      out.coval = l.coval & r.coval;
      out.val = pol.polar_left(out.coval);
      break;
    }
    case Conn::impl: {
      Interpretation l = eval(ctx, f->lhs), r = eval(ctx, f->rhs);
      out.val = implies(ctx.model->frame, ctx.tdual, l.val, r.val);
      out.coval = pol.polar_right(out.val);
      break;
    }
  }
  detail::verify(pol.is_stable(Side::x, out.val), "interpretation not stable");
  detail::verify(out.coval == pol.polar_right(out.val) && out.val == pol.polar_left(out.coval),
                 "interpretation and co-interpretation out of step");
  ctx.memo.emplace(f.get(), out);
  return out;
}

inline EvalContext make_context(const Model& m) {
  return EvalContext{&m, m.frame.T.galois_dual(m.frame.pol), {}};
}

}  // namespace detail

inline Interpretation interpret(const Model& m, const FormulaPtr& f) {
  auto ctx = detail::make_context(m);
  return detail::eval(ctx, f);
}

/// x satisfies f iff x lies in the interpretation. For implications the
/// pointwise clause through T' is evaluated directly and must agree with
/// membership.
inline bool satisfies(const Model& m, int x, const FormulaPtr& f) {
  auto ctx = detail::make_context(m);
  Interpretation ip = detail::eval(ctx, f);
  const bool member = bits::has(ip.val, x);
  if (f->kind == Conn::impl) {
    Interpretation l = detail::eval(ctx, f->lhs), r = detail::eval(ctx, f->rhs);
    bool clause = true;
    bits::for_each(l.val, [&](int u) {
      bits::for_each(r.coval, [&](int z) {
        if (!ctx.tdual.holds({x, u, z})) clause = false;
      });
    });
    detail::verify(clause == member, "pointwise implication clause disagrees with membership");
  }
  return member;
}

inline bool refutes(const Model& m, int y, const FormulaPtr& f) {
  return bits::has(interpret(m, f).coval, y);
}

/// For every implication subformula, the pointwise ternary clause must match
/// the algebraic operation; for every disjunction subformula, the derived
/// clause through the complement of the Galois relation must match; on
/// Heyting frames the specialization-order clause must also match.
inline Report check_clause_equivalences(const Model& m, const FormulaPtr& f) {
  auto ctx = detail::make_context(m);
  const Polarity& pol = m.frame.pol;
  const bool heyting = check_heyting_frame(m.frame).find("relation-eq")->pass;
  auto up = pol.specialization(Side::x);
  Report rep;

  auto walk = [&](auto&& self, const FormulaPtr& g) -> void {
    if (g->kind == Conn::atom || g->kind == Conn::bot || g->kind == Conn::top) return;
    self(self, g->lhs);
    self(self, g->rhs);
    Interpretation ip = detail::eval(ctx, g);
    Interpretation l = detail::eval(ctx, g->lhs), r = detail::eval(ctx, g->rhs);
    if (g->kind == Conn::impl) {
      CheckItem item{.name = "imp-pointwise@" + print_formula(g)};
      for (int x = 0; x < pol.nx() && item.pass; ++x) {
        ++item.checked;
        bool clause = true;
        bits::for_each(l.val, [&](int u) {
          bits::for_each(r.coval, [&](int z) {
            if (!ctx.tdual.holds({x, u, z})) clause = false;
          });
        });
        if (clause != bits::has(ip.val, x)) {
          item.pass = false;
          item.witness = {x};
        }
      }
      rep.add(std::move(item));
      if (heyting) {
        CheckItem kr{.name = "imp-kripke@" + print_formula(g)};
        for (int x = 0; x < pol.nx() && kr.pass; ++x) {
          ++kr.checked;
          const bool clause = bits::subset(up[x] & l.val, r.val);
          if (clause != bits::has(ip.val, x)) {
            kr.pass = false;
            kr.witness = {x};
          }
        }
        rep.add(std::move(kr));
      }
    } else if (g->kind == Conn::disj) {
      CheckItem item{.name = "or-derived@" + print_formula(g)};
      for (int x = 0; x < pol.nx() && item.pass; ++x) {
        ++item.checked;
        bool clause = true;
        for (int y = 0; y < pol.ny(); ++y)
          if (!pol.gal(x, y) && bits::has(l.coval, y) && bits::has(r.coval, y)) clause = false;
        if (clause != bits::has(ip.val, x)) {
          item.pass = false;
          item.witness = {x};
        }
      }
      rep.add(std::move(item));
    }
  };
  walk(walk, f);
  return rep;
}

/// Valid iff the whole X side lies in the interpretation.
inline bool validity(const Model& m, const FormulaPtr& f) {
  return bits::subset(m.frame.pol.universe(Side::x), interpret(m, f).val);
}

/// Entailment by inclusion of interpretations; must agree with validity of
/// the implication.
inline bool entails(const Model& m, const FormulaPtr& f, const FormulaPtr& g) {
  auto ctx = detail::make_context(m);
  const bool incl =
      bits::subset(detail::eval(ctx, f).val, detail::eval(ctx, g).val);
  const bool via_imp = validity(m, f_imp(f, g));
  detail::verify(incl == via_imp, "entailment routes disagree");
  return incl;
}

}  // namespace implat

#endif  // IMPLAT_SEMANTICS_HPP
