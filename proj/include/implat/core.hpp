#ifndef IMPLAT_CORE_HPP
#define IMPLAT_CORE_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace implat {

/// Subsets of an indexed universe (at most 64 points) as bit masks.
using Mask = std::uint64_t;

namespace bits {

inline constexpr int max_universe = 64;

inline Mask full(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline bool has(Mask m, int i) { return (m >> i) & 1; }

inline Mask one(int i) { return Mask{1} << i; }

inline Mask with(Mask m, int i) { return m | one(i); }

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline int count(Mask m) { return std::popcount(m); }

/// Index of the least set bit; m must be nonzero.
inline int first(Mask m) { return std::countr_zero(m); }

template <class F>
inline void for_each(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

inline std::vector<int> to_points(Mask m) {
  std::vector<int> out;
  for_each(m, [&](int i) { out.push_back(i); });
  return out;
}

}  // namespace bits

enum class Errc {
  not_a_poset,
  not_a_lattice,
  unbounded,
  missing_arrow,
  not_residuated,
  family_too_large,
  requires_improper,
  syntax_error,
  parse_error,
  unbound_atom,
  verification_failure,
  bad_input,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::not_a_poset: return "NotAPoset";
    case Errc::not_a_lattice: return "NotALattice";
    case Errc::unbounded: return "Unbounded";
    case Errc::missing_arrow: return "MissingArrow";
    case Errc::not_residuated: return "NotResiduated";
    case Errc::family_too_large: return "FamilyTooLarge";
    case Errc::requires_improper: return "RequiresImproper";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::parse_error: return "ParseError";
    case Errc::unbound_atom: return "UnboundAtom";
    case Errc::verification_failure: return "VerificationFailure";
    case Errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, int position = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        position_(position) {}

  Errc code() const noexcept { return code_; }

  /// Byte offset (formulas) or line number (files); -1 when not applicable.
  int position() const noexcept { return position_; }

 private:
  Errc code_;
  int position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, int position = -1) {
  throw Error(code, msg, position);
}

/// One verified condition inside a Report.
struct CheckItem {
  std::string name;
  bool pass = true;
  std::vector<int> witness;  // first counterexample tuple, empty on pass
  std::string note;
  long long checked = 0;  // tuples examined
};

struct Report {
  std::vector<CheckItem> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  const CheckItem* find(std::string_view name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }

  CheckItem& add(CheckItem item) {
    items.push_back(std::move(item));
    return items.back();
  }

  void append(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
};

}  // namespace implat

#endif  // IMPLAT_CORE_HPP
