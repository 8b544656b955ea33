#ifndef IMPLAT_RELATION_HPP
#define IMPLAT_RELATION_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "implat/polarity.hpp"

namespace implat {

/// An (n+1)-ary sorted relation over a polarity. Slot 0 is the output sort,
/// slots 1..n are inputs; each sort names one of the two universes
/// (Side::x for sort 1, Side::y for the dual sort). Tuples are stored
/// section-wise: one output-universe mask per input tuple.
class SortedRelation {
 public:
  SortedRelation(const Polarity& pol, std::vector<Side> sorts)
      : sorts_(std::move(sorts)) {
    if (sorts_.size() < 2) fail(Errc::bad_input, "relation needs at least one input slot");
    sizes_.reserve(sorts_.size());
    for (Side s : sorts_) sizes_.push_back(pol.size(s));
    std::size_t total = 1;
    for (std::size_t k = 1; k < sizes_.size(); ++k) total *= static_cast<std::size_t>(sizes_[k]);
    sections_.assign(total, 0);
  }

  int arity() const { return static_cast<int>(sorts_.size()) - 1; }  // input count
  Side sort(int slot) const { return sorts_[slot]; }
  const std::vector<Side>& sorts() const { return sorts_; }
  int slot_size(int slot) const { return sizes_[slot]; }

  void add(std::span<const int> tuple) {
    sections_[index_of(tuple.subspan(1))] |= bits::one(tuple[0]);
  }
  void add(std::initializer_list<int> tuple) { add(std::span<const int>(tuple)); }

  void remove(std::span<const int> tuple) {
    sections_[index_of(tuple.subspan(1))] &= ~bits::one(tuple[0]);
  }
  void remove(std::initializer_list<int> tuple) { remove(std::span<const int>(tuple)); }

  bool holds(std::span<const int> tuple) const {
    return bits::has(sections_[index_of(tuple.subspan(1))], tuple[0]);
  }
  bool holds(std::initializer_list<int> tuple) const {
    return holds(std::span<const int>(tuple));
  }

  /// Output section R v = {w | w R v}.
  Mask section(std::span<const int> inputs) const { return sections_[index_of(inputs)]; }
  Mask section(std::initializer_list<int> inputs) const {
    return section(std::span<const int>(inputs));
  }

  /// k-th input section w R u[_]_k: the tuple entry at input position `hole`
  /// (0-based among inputs) is ignored and varied.
  Mask section_at(std::span<const int> tuple, int hole) const {
    std::vector<int> t(tuple.begin(), tuple.end());
    Mask out = 0;
    for (int v = 0; v < sizes_[hole + 1]; ++v) {
      t[hole + 1] = v;
      if (holds(t)) out = bits::with(out, v);
    }
    return out;
  }
  Mask section_at(std::initializer_list<int> tuple, int hole) const {
    return section_at(std::span<const int>(tuple), hole);
  }

  /// Galois dual: same input sorts, flipped output sort;
  /// u R' v iff for all w with w R v, w and u are related in the polarity.
  SortedRelation galois_dual(const Polarity& pol) const {
    std::vector<Side> dsorts = sorts_;
    dsorts[0] = flip(dsorts[0]);
    SortedRelation dual(pol, dsorts);
    const Side out = sorts_[0];
    const int dn = pol.size(dsorts[0]);
    for (std::size_t idx = 0; idx < sections_.size(); ++idx) {
      Mask sec = sections_[idx];
      Mask dsec = 0;
      for (int u = 0; u < dn; ++u) {
        bool all = true;
        bits::for_each(sec, [&](int w) {
          const bool rel = out == Side::x ? pol.gal(w, u) : pol.gal(u, w);
          if (!rel) all = false;
        });
        if (all) dsec = bits::with(dsec, u);
      }
      dual.sections_[idx] = dsec;
    }
    return dual;
  }

  /// Slot permutation including the output slot: new slot i holds what the
  /// old slot perm[i] held, for every stored tuple.
  SortedRelation permuted(const Polarity& pol, std::span<const int> perm) const {
    const int k = static_cast<int>(sorts_.size());
    std::vector<Side> psorts(k);
    for (int i = 0; i < k; ++i) psorts[i] = sorts_[perm[i]];
    SortedRelation out(pol, psorts);
    std::vector<int> t(k), p(k);
    for_each_tuple([&](std::span<const int> tuple) {
      for (int i = 0; i < k; ++i) p[i] = tuple[perm[i]];
      out.add(p);
    });
    return out;
  }
  SortedRelation permuted(const Polarity& pol, std::initializer_list<int> perm) const {
    return permuted(pol, std::span<const int>(perm));
  }

  template <class F>
  void for_each_tuple(F&& f) const {
    std::vector<int> t(sorts_.size());
    for (std::size_t idx = 0; idx < sections_.size(); ++idx) {
      std::size_t rest = idx;
      for (int k = static_cast<int>(sorts_.size()) - 1; k >= 1; --k) {
        t[k] = static_cast<int>(rest % sizes_[k]);
        rest /= sizes_[k];
      }
      bits::for_each(sections_[idx], [&](int w) {
        t[0] = w;
        f(std::span<const int>(t));
      });
    }
  }

  /// Iterates all input tuples (regardless of section emptiness).
  template <class F>
  void for_each_input(F&& f) const {
    std::vector<int> t(sorts_.size() - 1);
    for (std::size_t idx = 0; idx < sections_.size(); ++idx) {
      std::size_t rest = idx;
      for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k) {
        t[k] = static_cast<int>(rest % sizes_[k + 1]);
        rest /= sizes_[k + 1];
      }
      f(std::span<const int>(t), sections_[idx]);
    }
  }

  long long tuple_count() const {
    long long c = 0;
    for (Mask m : sections_) c += bits::count(m);
    return c;
  }

  bool operator==(const SortedRelation& other) const {
    return sorts_ == other.sorts_ && sections_ == other.sections_;
  }

 private:
  std::size_t index_of(std::span<const int> inputs) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < inputs.size(); ++k)
      idx = idx * sizes_[k + 1] + static_cast<std::size_t>(inputs[k]);
    return idx;
  }

  std::vector<Side> sorts_;
  std::vector<int> sizes_;
  std::vector<Mask> sections_;
};

/// Verifies, for each requested input position, that every section of the
/// relation at that position is a Galois set of the matching side.
inline Report check_sections_galois(const Polarity& pol, const SortedRelation& rel,
                                    std::span<const int> positions) {
  Report rep;
  for (int k : positions) {
    CheckItem item{.name = "section:" + std::to_string(k)};
    const Side side = rel.sort(k + 1);
    std::vector<int> t(static_cast<std::size_t>(rel.arity()) + 1);
    // iterate output point and all input fixings except the hole
    std::vector<int> limits;
    limits.push_back(rel.slot_size(0));
    for (int j = 1; j <= rel.arity(); ++j) limits.push_back(j == k + 1 ? 1 : rel.slot_size(j));
    std::vector<int> cur(limits.size(), 0);
    bool more = true;
    while (more && item.pass) {
      t[0] = cur[0];
      for (int j = 1; j <= rel.arity(); ++j) t[j] = cur[j];
      Mask sec = rel.section_at(t, k);
      ++item.checked;
      if (!pol.is_stable(side, sec)) {
        item.pass = false;
        item.witness = std::vector<int>(cur.begin(), cur.end());
        item.witness.push_back(k);
      }
      // odometer
      int j = static_cast<int>(cur.size()) - 1;
      for (; j >= 0; --j) {
        if (++cur[j] < limits[j]) break;
        cur[j] = 0;
      }
      more = j >= 0;
    }
    rep.add(std::move(item));
  }
  return rep;
}

inline Report check_sections_galois(const Polarity& pol, const SortedRelation& rel,
                                    std::initializer_list<int> positions) {
  return check_sections_galois(pol, rel, std::span<const int>(positions));
}

}  // namespace implat

#endif  // IMPLAT_RELATION_HPP
