#pragma once

#include <algorithm>

#include "osps/core.hpp"

namespace osps {

namespace detail {

// Canonical family order: by size, then lexicographically on the sorted
// member name sequence. State names are stored sorted, so comparing member
// index sequences is comparing name sequences.
inline bool family_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  while (a && b) {
    int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

inline void canonicalize_family(std::vector<Mask>& fam) {
  std::sort(fam.begin(), fam.end(), family_less);
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

inline int state_index(const std::vector<std::string>& states, const std::string& name) {
  auto it = std::lower_bound(states.begin(), states.end(), name);
  if (it == states.end() || *it != name)
    fail("E-UNKNOWN-STATE", "no state named '" + name + "'");
  return static_cast<int>(it - states.begin());
}

}  // namespace detail

// (Sigma, C): closed_sets always contains the empty set and Sigma and is
// stable under intersections. Stored in canonical order.
struct ClosureSpace {
  std::vector<std::string> states;  // sorted
  std::vector<Mask> closed_sets;

  int size() const { return static_cast<int>(states.size()); }
  Mask universe() const { return full_mask(size()); }
  int state(const std::string& name) const { return detail::state_index(states, name); }

  bool is_closed(Mask a) const {
    return std::find(closed_sets.begin(), closed_sets.end(), a) != closed_sets.end();
  }
};

// Anti-reflexive symmetric relation on states, stored as per-state masks.
struct StateOrthoRelation {
  std::vector<std::string> states;  // sorted
  std::vector<Mask> perp;           // perp[i] = states orthogonal to i

  int size() const { return static_cast<int>(states.size()); }
  Mask universe() const { return full_mask(size()); }
  int state(const std::string& name) const { return detail::state_index(states, name); }
  bool related(int i, int j) const { return has_bit(perp[static_cast<std::size_t>(i)], j); }

  static StateOrthoRelation build(std::vector<std::string> states,
                                  const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::sort(states.begin(), states.end());
    if (states.size() > kMaxCarrier)
      fail("E-SIZE-CAP", "state set larger than " + std::to_string(kMaxCarrier));
    StateOrthoRelation rel;
    rel.states = std::move(states);
    rel.perp.assign(rel.states.size(), 0);
    for (const auto& [a, b] : pairs) {
      int i = rel.state(a), j = rel.state(b);
      if (i == j)
        fail("E-RELATION", "orthogonality relation must be anti-reflexive, got (" + a + "," + a + ")");
      rel.perp[static_cast<std::size_t>(i)] |= bit(j);
      rel.perp[static_cast<std::size_t>(j)] |= bit(i);
    }
    return rel;
  }

  std::vector<std::pair<std::string, std::string>> unordered_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (related(i, j))
          out.emplace_back(states[static_cast<std::size_t>(i)],
                           states[static_cast<std::size_t>(j)]);
    return out;
  }
};

inline ValidationReport validate_closure_space(const std::vector<std::string>& states,
                                               const std::vector<Mask>& family) {
  ValidationReport rep;
  Mask all = full_mask(static_cast<int>(states.size()));
  for (Mask f : family)
    if (!subset_of(f, all))
      fail("E-UNKNOWN-STATE", "family member not contained in the state set");
  auto contains = [&](Mask m) {
    return std::find(family.begin(), family.end(), m) != family.end();
  };
  rep.add("empty-set-closed", contains(0), contains(0) ? "" : "empty set missing from family");
  rep.add("universe-closed", contains(all), contains(all) ? "" : "full state set missing from family");
  // Pairwise intersections suffice for finite families containing Sigma.
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      Mask m = family[i] & family[j];
      if (!contains(m)) {
        rep.add("intersection-stable", false,
                set_to_string(family[i], states) + " ∩ " + set_to_string(family[j], states) +
                    " = " + set_to_string(m, states) + " not in family");
        return rep;
      }
    }
  }
  rep.add("intersection-stable", true);
  return rep;
}

inline ClosureSpace make_closure_space(std::vector<std::string> states, std::vector<Mask> family) {
  std::sort(states.begin(), states.end());
  auto rep = validate_closure_space(states, family);
  if (!rep.ok()) {
    for (const auto& c : rep.checks)
      if (!c.passed) fail("E-CLOSURE", c.name + ": " + c.witness);
  }
  detail::canonicalize_family(family);
  return ClosureSpace{std::move(states), std::move(family)};
}

// Smallest closed superset of A.
inline Mask closure_of(const ClosureSpace& space, Mask a) {
  if (!subset_of(a, space.universe()))
    fail("E-UNKNOWN-STATE", "subset not contained in the state set");
  Mask acc = space.universe();
  for (Mask f : space.closed_sets)
    if (subset_of(a, f)) acc &= f;
  return acc;
}

// A^perp = states orthogonal to every member of A; empty A yields Sigma.
inline Mask perp_set(const StateOrthoRelation& rel, Mask a) {
  if (!subset_of(a, rel.universe()))
    fail("E-UNKNOWN-STATE", "subset not contained in the state set");
  Mask acc = rel.universe();
  for_each_bit(a, [&](int i) { acc &= rel.perp[static_cast<std::size_t>(i)]; });
  return acc;
}

// Biorthogonal construction: C_orth = {A^perpperp | A subset of Sigma}.
// Every A^perp is an intersection of per-state rows, so C_orth is the
// intersection closure of the rows together with Sigma.
inline ClosureSpace ortho_closure(const StateOrthoRelation& rel) {
  require_enum_cap(rel.states.size(), "ortho_closure");
  std::vector<Mask> fam{rel.universe()};
  auto add = [&](Mask m) {
    if (std::find(fam.begin(), fam.end(), m) == fam.end()) fam.push_back(m);
  };
  for (int i = 0; i < rel.size(); ++i) {
    Mask row = rel.perp[static_cast<std::size_t>(i)];
    for (std::size_t k = 0, end = fam.size(); k < end; ++k) add(fam[k] & row);
    add(row);
  }
  // Sigma^perp is empty for nonempty Sigma (anti-reflexivity), so the empty
  // set is already an intersection of all rows; adding it is a no-op except
  // for the degenerate empty state set.
  add(Mask{0});
  detail::canonicalize_family(fam);
  return ClosureSpace{rel.states, std::move(fam)};
}

struct InducedReport {
  bool induced = false;
  std::vector<Mask> only_in_space;
  std::vector<Mask> only_in_orth;
};

inline InducedReport is_induced_by_ortho(const ClosureSpace& space, const StateOrthoRelation& rel) {
  if (space.states != rel.states)
    fail("E-UNKNOWN-STATE", "closure space and relation have different state sets");
  ClosureSpace orth = ortho_closure(rel);
  InducedReport rep;
  for (Mask f : space.closed_sets)
    if (!orth.is_closed(f)) rep.only_in_space.push_back(f);
  for (Mask f : orth.closed_sets)
    if (!space.is_closed(f)) rep.only_in_orth.push_back(f);
  rep.induced = rep.only_in_space.empty() && rep.only_in_orth.empty();
  return rep;
}

}  // namespace osps
