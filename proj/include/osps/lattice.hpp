#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "osps/core.hpp"

namespace osps {

// Finite poset over named elements. leq[i] holds the up-set of i as a mask,
// always reflexively and transitively closed.
struct FinitePoset {
  std::vector<std::string> elements;  // sorted, unique
  std::vector<Mask> leq;

  int size() const { return static_cast<int>(elements.size()); }

  bool le(int i, int j) const { return has_bit(leq[static_cast<std::size_t>(i)], j); }

  int index(const std::string& name) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), name);
    if (it == elements.end() || *it != name)
      fail("E-UNKNOWN-ELEMENT", "no element named '" + name + "'");
    return static_cast<int>(it - elements.begin());
  }

  std::optional<int> try_index(const std::string& name) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), name);
    if (it == elements.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - elements.begin());
  }

  Mask down_set(int i) const {
    Mask d = 0;
    for (int k = 0; k < size(); ++k)
      if (le(k, i)) d |= bit(k);
    return d;
  }

  // Builds from an arbitrary pair list: takes the reflexive-transitive
  // closure and rejects cycles (antisymmetry violations) with E-ORDER.
  static FinitePoset build(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
      fail("E-ORDER", "duplicate element identifier");
    if (elements.size() > kMaxCarrier)
      fail("E-SIZE-CAP", "carrier larger than " + std::to_string(kMaxCarrier));
    FinitePoset p;
    p.elements = std::move(elements);
    int n = p.size();
    p.leq.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) p.leq[static_cast<std::size_t>(i)] |= bit(i);
    for (const auto& [lo, hi] : pairs)
      p.leq[static_cast<std::size_t>(p.index(lo))] |= bit(p.index(hi));
    // Warshall closure on up-set masks.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (p.le(i, k)) p.leq[static_cast<std::size_t>(i)] |= p.leq[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p.le(i, j) && p.le(j, i))
          fail("E-ORDER", "antisymmetry violation: cycle through '" +
                              p.elements[static_cast<std::size_t>(i)] + "' and '" +
                              p.elements[static_cast<std::size_t>(j)] + "'");
    return p;
  }
};

namespace detail {

// Greatest element of `candidates` under the poset order, if one exists.
inline std::optional<int> greatest_of(const FinitePoset& p, Mask candidates) {
  std::optional<int> best;
  for_each_bit(candidates, [&](int i) {
    bool all = true;
    for_each_bit(candidates, [&](int k) {
      if (!p.le(k, i)) all = false;
    });
    if (all) best = i;
  });
  return best;
}

inline std::optional<int> least_of(const FinitePoset& p, Mask candidates) {
  std::optional<int> best;
  for_each_bit(candidates, [&](int i) {
    bool all = true;
    for_each_bit(candidates, [&](int k) {
      if (!p.le(i, k)) all = false;
    });
    if (all) best = i;
  });
  return best;
}

}  // namespace detail

// For a finite poset, completeness reduces to: global bottom and top exist
// and every pair has a binary meet and join. The report states the criterion.
inline ValidationReport validate_complete_lattice(const FinitePoset& p) {
  ValidationReport rep;
  rep.add("criterion", true,
          "finite reduction: binary meets/joins + global bottom/top");
  int n = p.size();
  Mask all = full_mask(n);
  if (n == 0) {
    rep.add("nonempty", false, "empty carrier has no bottom/top");
    return rep;
  }
  auto bot = detail::least_of(p, all);
  auto top = detail::greatest_of(p, all);
  rep.add("bottom-exists", bot.has_value(), bot ? "" : "no global least element");
  rep.add("top-exists", top.has_value(), top ? "" : "no global greatest element");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mask lower = 0, upper = 0;
      for (int k = 0; k < n; ++k) {
        if (p.le(k, i) && p.le(k, j)) lower |= bit(k);
        if (p.le(i, k) && p.le(j, k)) upper |= bit(k);
      }
      auto si = p.elements[static_cast<std::size_t>(i)];
      auto sj = p.elements[static_cast<std::size_t>(j)];
      if (!detail::greatest_of(p, lower)) {
        rep.add("binary-meet", false, "no infimum of {" + si + "," + sj + "}");
        return rep;
      }
      if (!detail::least_of(p, upper)) {
        rep.add("binary-join", false, "no supremum of {" + si + "," + sj + "}");
        return rep;
      }
    }
  }
  rep.add("binary-meets-joins", true);
  return rep;
}

// Complete lattice with cached binary meet/join tables.
class CompleteLattice {
 public:
  static CompleteLattice build(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
    return from_poset(FinitePoset::build(std::move(elements), pairs));
  }

  static CompleteLattice from_poset(FinitePoset poset) {
    auto rep = validate_complete_lattice(poset);
    if (!rep.ok()) {
      for (const auto& c : rep.checks)
        if (!c.passed) fail("E-LATTICE", c.name + ": " + c.witness);
    }
    CompleteLattice lat;
    lat.poset_ = std::move(poset);
    int n = lat.size();
    Mask all = full_mask(n);
    lat.bottom_ = *detail::least_of(lat.poset_, all);
    lat.top_ = *detail::greatest_of(lat.poset_, all);
    lat.meet_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    lat.join_ = lat.meet_;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Mask lower = 0, upper = 0;
        for (int k = 0; k < n; ++k) {
          if (lat.poset_.le(k, i) && lat.poset_.le(k, j)) lower |= bit(k);
          if (lat.poset_.le(i, k) && lat.poset_.le(j, k)) upper |= bit(k);
        }
        lat.meet_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            *detail::greatest_of(lat.poset_, lower);
        lat.join_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            *detail::least_of(lat.poset_, upper);
      }
    }
    return lat;
  }

  const FinitePoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::vector<std::string>& names() const { return poset_.elements; }
  const std::string& name(int i) const { return poset_.elements[static_cast<std::size_t>(i)]; }
  int index(const std::string& n) const { return poset_.index(n); }
  std::optional<int> try_index(const std::string& n) const { return poset_.try_index(n); }

  bool le(int i, int j) const { return poset_.le(i, j); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int meet(int i, int j) const {
    return meet_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  int join(int i, int j) const {
    return join_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  // Infimum of a family; the empty family yields top.
  int meet_family(Mask subset) const {
    int acc = top_;
    for_each_bit(subset, [&](int i) { acc = meet(acc, i); });
    return acc;
  }

  // Supremum of a family; the empty family yields bottom.
  int join_family(Mask subset) const {
    int acc = bottom_;
    for_each_bit(subset, [&](int i) { acc = join(acc, i); });
    return acc;
  }

  Mask mask_of(const std::vector<std::string>& members) const {
    Mask m = 0;
    for (const auto& s : members) m |= bit(index(s));
    return m;
  }

 private:
  FinitePoset poset_;
  int bottom_ = 0, top_ = 0;
  std::vector<std::vector<int>> meet_, join_;
};

inline std::string meet_family(const CompleteLattice& lat,
                               const std::vector<std::string>& subset) {
  return lat.name(lat.meet_family(lat.mask_of(subset)));
}

inline std::string join_family(const CompleteLattice& lat,
                               const std::vector<std::string>& subset) {
  return lat.name(lat.join_family(lat.mask_of(subset)));
}

}  // namespace osps
