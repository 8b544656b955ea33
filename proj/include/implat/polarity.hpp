#ifndef IMPLAT_POLARITY_HPP
#define IMPLAT_POLARITY_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "implat/core.hpp"
#include "implat/lattice.hpp"

namespace implat {

/// The two point sorts of a polarity: Side::x is sort 1, Side::y is sort d
/// (the order-dual sort).
enum class Side : unsigned char { x = 0, y = 1 };

constexpr Side flip(Side s) { return s == Side::x ? Side::y : Side::x; }

struct GaloisSet {
  Side side;
  Mask members;
};

/// Two sorted nonempty universes X, Y with a Galois relation between them.
/// Immutable; all queries are const.
class Polarity {
 public:
  Polarity(std::vector<Mask> rows, int ny)
      : nx_(static_cast<int>(rows.size())), ny_(ny), rows_(std::move(rows)) {
    if (nx_ == 0 || ny_ == 0) fail(Errc::bad_input, "polarity universes must be nonempty");
    if (nx_ > bits::max_universe || ny_ > bits::max_universe)
      fail(Errc::bad_input, "polarity universe larger than 64");
    const Mask yfull = bits::full(ny_);
    for (Mask r : rows_)
      if ((r & ~yfull) != 0) fail(Errc::bad_input, "relation bit out of range");
    cols_.assign(ny_, 0);
    for (int x = 0; x < nx_; ++x)
      bits::for_each(rows_[x], [&](int y) { cols_[y] = bits::with(cols_[y], x); });
  }

  static Polarity from_pairs(int nx, int ny, const std::vector<std::pair<int, int>>& pairs) {
    if (nx <= 0 || ny <= 0) fail(Errc::bad_input, "polarity universes must be nonempty");
    std::vector<Mask> rows(nx, 0);
    for (auto [x, y] : pairs) {
      if (x < 0 || x >= nx || y < 0 || y >= ny)
        fail(Errc::bad_input, "relation pair out of range");
      rows[x] = bits::with(rows[x], y);
    }
    return Polarity(std::move(rows), ny);
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int size(Side s) const { return s == Side::x ? nx_ : ny_; }
  Mask universe(Side s) const { return bits::full(size(s)); }

  bool gal(int x, int y) const { return bits::has(rows_[x], y); }
  Mask row(int x) const { return rows_[x]; }   // {y | x gal y}
  Mask col(int y) const { return cols_[y]; }   // {x | x gal y}

  /// U' = {y | forall x in U, x gal y}.
  Mask polar_right(Mask u) const {
    Mask r = bits::full(ny_);
    bits::for_each(u, [&](int x) { r &= rows_[x]; });
    return r;
  }

  /// 'V = {x | forall y in V, x gal y}.
  Mask polar_left(Mask v) const {
    Mask r = bits::full(nx_);
    bits::for_each(v, [&](int y) { r &= cols_[y]; });
    return r;
  }

  /// Polar of a subset of the given side, landing on the opposite side.
  Mask polar(Side of, Mask m) const {
    return of == Side::x ? polar_right(m) : polar_left(m);
  }

  Mask stabilize(Side of, Mask m) const { return polar(flip(of), polar(of, m)); }

  bool is_stable(Side of, Mask m) const { return stabilize(of, m) == m; }

  /// Specialization preorder: up[u] = {z | u is below z}, where u is below z
  /// iff the polar of {u} is contained in the polar of {z}.
  std::vector<Mask> specialization(Side s) const {
    const int n = size(s);
    std::vector<Mask> up(n, 0);
    for (int u = 0; u < n; ++u)
      for (int z = 0; z < n; ++z) {
        Mask pu = s == Side::x ? rows_[u] : cols_[u];
        Mask pz = s == Side::x ? rows_[z] : cols_[z];
        if (bits::subset(pu, pz)) up[u] = bits::with(up[u], z);
      }
    return up;
  }

  /// Separated iff both specialization preorders are antisymmetric.
  bool check_separated() const {
    for (Side s : {Side::x, Side::y}) {
      auto up = specialization(s);
      const int n = size(s);
      for (int u = 0; u < n; ++u)
        for (int z = u + 1; z < n; ++z)
          if (bits::has(up[u], z) && bits::has(up[z], u)) return false;
    }
    return true;
  }

  /// Gamma u = {u}'' , the closure of a point; equals its specialization upset.
  Mask gamma(Side s, int u) const { return stabilize(s, bits::one(u)); }

  /// Per-point list of closed elements Gamma u of the given side.
  std::vector<Mask> closed_elements(Side s) const {
    std::vector<Mask> out;
    out.reserve(size(s));
    for (int u = 0; u < size(s); ++u) out.push_back(gamma(s, u));
    return out;
  }

  /// Per-opposite-point list of open elements '{v} living on the given side.
  std::vector<Mask> open_elements(Side s) const {
    const Side other = flip(s);
    std::vector<Mask> out;
    out.reserve(size(other));
    for (int v = 0; v < size(other); ++v)
      out.push_back(s == Side::x ? cols_[v] : rows_[v]);
    return out;
  }

  /// Gamma u clopen iff it equals the polar of some opposite point w; the
  /// witness is unique on separated frames.
  std::optional<int> clopen_witness(Side s, int u) const {
    const Mask g = gamma(s, u);
    auto opens = open_elements(s);
    for (int w = 0; w < static_cast<int>(opens.size()); ++w)
      if (opens[w] == g) return w;
    return std::nullopt;
  }

  Polarity flipped() const {
    std::vector<Mask> rows = cols_;
    return Polarity(std::move(rows), nx_);
  }

 private:
  int nx_, ny_;
  std::vector<Mask> rows_, cols_;
};

inline GaloisSet stabilize_set(const Polarity& pol, Side of, Mask m) {
  return GaloisSet{of, pol.stabilize(of, m)};
}

inline constexpr std::size_t default_family_cap = std::size_t{1} << 16;

/// The complete lattice of Galois sets on one side of a polarity, indexed in
/// ascending member-mask order. Meet of members is intersection, join is the
/// stabilized union; the inclusion order is revalidated as a FiniteLattice.
struct StableFamily {
  Side side = Side::x;
  std::vector<Mask> members;
  FiniteLattice lat;

  int size() const { return static_cast<int>(members.size()); }
  Mask member(int i) const { return members[i]; }

  int index_of(Mask m) const {
    auto it = std::lower_bound(members.begin(), members.end(), m);
    if (it == members.end() || *it != m) return -1;
    return static_cast<int>(it - members.begin());
  }

  int meet(int i, int j) const { return lat.meet(i, j); }
  int join(int i, int j) const { return lat.join(i, j); }
  int bottom() const { return lat.bot; }
  int top_index() const { return lat.top; }
};

/// Enumerates all Galois sets of one side as the intersection closure of the
/// open elements plus the full universe, never by scanning the powerset.
inline StableFamily enumerate_stable(const Polarity& pol, Side side = Side::x,
                                     std::size_t max_family = default_family_cap) {
  std::vector<Mask> done;  // sorted, intersection-closed so far
  std::vector<Mask> todo{pol.universe(side)};
  for (Mask open : pol.open_elements(side)) todo.push_back(open);

  auto known = [&](Mask m) {
    auto it = std::lower_bound(done.begin(), done.end(), m);
    return it != done.end() && *it == m;
  };
  while (!todo.empty()) {
    Mask m = todo.back();
    todo.pop_back();
    if (known(m)) continue;
    for (Mask f : done) {
      Mask meet = f & m;
      if (!known(meet)) todo.push_back(meet);
    }
    done.insert(std::lower_bound(done.begin(), done.end(), m), m);
    if (done.size() > max_family)
      fail(Errc::family_too_large,
           "stable family exceeds cap of " + std::to_string(max_family));
  }

  StableFamily fam;
  fam.side = side;
  fam.members = std::move(done);
  const int n = fam.size();
  std::vector<std::vector<bool>> order(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) order[i][j] = bits::subset(fam.members[i], fam.members[j]);
  fam.lat = validate_lattice(order);
  return fam;
}

}  // namespace implat

#endif  // IMPLAT_POLARITY_HPP
