#pragma once

#include <random>

#include "osps/ortho.hpp"

namespace osps {

// Deterministic instance sampling for the randomized verification suites.
// All draws come from a caller-owned mt19937_64, so identical seeds give
// identical instances.

inline std::vector<std::string> default_state_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  return names;  // n <= 10 keeps lexicographic order equal to index order
}

// Random family of subsets closed under intersection, with empty set and
// Sigma adjoined.
inline ClosureSpace random_closure_space(std::mt19937_64& rng, int max_states,
                                         int num_generators = 3) {
  std::uniform_int_distribution<int> size_dist(1, max_states);
  int n = size_dist(rng);
  Mask all = full_mask(n);
  std::uniform_int_distribution<Mask> set_dist(0, all);
  std::vector<Mask> fam{0, all};
  auto add = [&](Mask m) {
    if (std::find(fam.begin(), fam.end(), m) == fam.end()) fam.push_back(m);
  };
  for (int g = 0; g < num_generators; ++g) {
    Mask s = set_dist(rng);
    for (std::size_t k = 0, end = fam.size(); k < end; ++k) add(fam[k] & s);
    add(s);
  }
  detail::canonicalize_family(fam);
  return ClosureSpace{default_state_names(n), std::move(fam)};
}

// Random SPS via the converse construction; |L| is bounded by rejection.
inline StatePropertySystem random_sps(std::mt19937_64& rng, int max_states, int max_props) {
  for (;;) {
    auto space = random_closure_space(rng, max_states);
    if (static_cast<int>(space.closed_sets.size()) <= max_props) return sps_from_closure(space);
  }
}

inline StateOrthoRelation random_state_ortho(std::mt19937_64& rng,
                                             const std::vector<std::string>& states,
                                             double density = 0.4) {
  std::bernoulli_distribution flip(density);
  int n = static_cast<int>(states.size());
  StateOrthoRelation rel;
  rel.states = states;
  rel.perp.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) {
        rel.perp[static_cast<std::size_t>(i)] |= bit(j);
        rel.perp[static_cast<std::size_t>(j)] |= bit(i);
      }
  return rel;
}

// Closes a symmetric disjointness-respecting relation under the family-meet
// law. Adding (meet A, meet B) preserves disjointness: the meet of the two
// meets lies below every a^b = bottom.
inline void close_family_law(const CompleteLattice& lat, PropertyOrthoRelation& rel) {
  int n = lat.size();
  require_enum_cap(static_cast<std::size_t>(n), "close_family_law");
  bool grew = true;
  while (grew) {
    grew = false;
    for (Mask A = 1; A < (Mask{1} << n); ++A) {
      Mask bmax = full_mask(n);
      for_each_bit(A, [&](int a) { bmax &= rel.rows[static_cast<std::size_t>(a)]; });
      if (!bmax) continue;
      int ma = lat.meet_family(A);
      Mask add = detail::meet_closure(lat, bmax) & ~rel.rows[static_cast<std::size_t>(ma)];
      if (add) {
        grew = true;
        rel.rows[static_cast<std::size_t>(ma)] |= add;
        for_each_bit(add, [&](int b) { rel.rows[static_cast<std::size_t>(b)] |= bit(ma); });
      }
    }
  }
}

// Random valid ortho SPS: a symmetric subset of the trivial relation
// (a^b = bottom), bottom pairs forced, closed under the family law.
inline OrthoSPS random_osps(std::mt19937_64& rng, int max_states, int max_props,
                            double density = 0.5) {
  StatePropertySystem sps = random_sps(rng, max_states, max_props);
  const auto& lat = sps.lattice;
  int n = lat.size();
  std::bernoulli_distribution flip(density);
  PropertyOrthoRelation rel;
  rel.rows.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (lat.meet(a, b) == lat.bottom() && flip(rng)) {
        rel.rows[static_cast<std::size_t>(a)] |= bit(b);
        rel.rows[static_cast<std::size_t>(b)] |= bit(a);
      }
  rel.rows[static_cast<std::size_t>(lat.bottom())] = full_mask(n);
  for (int a = 0; a < n; ++a) rel.rows[static_cast<std::size_t>(a)] |= bit(lat.bottom());
  close_family_law(lat, rel);
  return OrthoSPS{std::move(sps), std::move(rel)};
}

// Random sub-relation of `star` that keeps the bottom pairs and the family
// law; the caller rechecks AO1/AO2 and the induced orthocomplementation.
inline PropertyOrthoRelation random_subrelation(std::mt19937_64& rng, const CompleteLattice& lat,
                                                const PropertyOrthoRelation& star,
                                                double keep = 0.7) {
  std::bernoulli_distribution flip(keep);
  int n = lat.size();
  PropertyOrthoRelation rel;
  rel.rows.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (star.related(a, b) && flip(rng)) {
        rel.rows[static_cast<std::size_t>(a)] |= bit(b);
        rel.rows[static_cast<std::size_t>(b)] |= bit(a);
      }
  rel.rows[static_cast<std::size_t>(lat.bottom())] = full_mask(n);
  for (int a = 0; a < n; ++a) rel.rows[static_cast<std::size_t>(a)] |= bit(lat.bottom());
  close_family_law(lat, rel);
  return rel;
}

}  // namespace osps
