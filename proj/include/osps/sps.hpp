#pragma once

#include <algorithm>
#include <numeric>

#include "osps/closure.hpp"
#include "osps/lattice.hpp"

namespace osps {

// (Sigma, L, xi): xi[p] is the set of properties actual in state p, as a
// mask over the lattice carrier.
struct StatePropertySystem {
  std::vector<std::string> states;  // sorted
  CompleteLattice lattice;
  std::vector<Mask> xi;

  int num_states() const { return static_cast<int>(states.size()); }
  int state(const std::string& name) const { return detail::state_index(states, name); }
  Mask state_universe() const { return full_mask(num_states()); }
};

// kappa(a) = set of states in which a is actual.
inline Mask cartan(const StatePropertySystem& sps, int a) {
  if (a < 0 || a >= sps.lattice.size()) fail("E-UNKNOWN-ELEMENT", "property index out of range");
  Mask m = 0;
  for (int p = 0; p < sps.num_states(); ++p)
    if (has_bit(sps.xi[static_cast<std::size_t>(p)], a)) m |= bit(p);
  return m;
}

inline Mask cartan(const StatePropertySystem& sps, const std::string& a) {
  return cartan(sps, sps.lattice.index(a));
}

inline ValidationReport validate_sps(const StatePropertySystem& sps) {
  ValidationReport rep;
  const auto& lat = sps.lattice;
  Mask carrier = full_mask(lat.size());
  for (int p = 0; p < sps.num_states(); ++p)
    if (!subset_of(sps.xi[static_cast<std::size_t>(p)], carrier))
      fail("E-UNKNOWN-ELEMENT", "xi(" + sps.states[static_cast<std::size_t>(p)] +
                                    ") mentions a property outside the carrier");
  if (sps.states.empty()) rep.add("note", true, "empty state set: all axioms hold vacuously");

  // SPS1: bottom is never actual.
  {
    bool ok = true;
    std::string witness;
    for (int p = 0; p < sps.num_states() && ok; ++p) {
      if (has_bit(sps.xi[static_cast<std::size_t>(p)], lat.bottom())) {
        ok = false;
        witness = "bottom in xi(" + sps.states[static_cast<std::size_t>(p)] + ")";
      }
    }
    rep.add("SPS1", ok, witness);
  }

  // SPS2: each xi(p) is closed under meets of subfamilies, the empty one
  // included (top must be present). Small images are checked by full subset
  // enumeration, larger ones by a pairwise-meet fixed point.
  {
    bool ok = true;
    std::string witness;
    for (int p = 0; p < sps.num_states() && ok; ++p) {
      Mask img = sps.xi[static_cast<std::size_t>(p)];
      const auto& pname = sps.states[static_cast<std::size_t>(p)];
      if (!has_bit(img, lat.top())) {
        ok = false;
        witness = "top (empty meet) not in xi(" + pname + ")";
        break;
      }
      int k = popcount(img);
      if (k <= kEnumCap) {
        std::vector<int> members;
        for_each_bit(img, [&](int i) { members.push_back(i); });
        for (Mask sub = 1; sub < (Mask{1} << k) && ok; ++sub) {
          Mask fam = 0;
          for_each_bit(sub, [&](int b) { fam |= bit(members[static_cast<std::size_t>(b)]); });
          int m = lat.meet_family(fam);
          if (!has_bit(img, m)) {
            ok = false;
            witness = "xi(" + pname + ") lacks meet " + lat.name(m) + " of subfamily " +
                      set_to_string(fam, lat.names());
          }
        }
      } else {
        std::vector<int> members;
        for_each_bit(img, [&](int i) { members.push_back(i); });
        for (int a : members) {
          for (int b : members) {
            if (!has_bit(img, lat.meet(a, b))) {
              ok = false;
              witness = "xi(" + pname + ") lacks meet of " + lat.name(a) + " and " + lat.name(b);
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    rep.add("SPS2", ok, witness);
  }

  // SPS3: a <= b iff every state making a actual makes b actual, i.e.
  // a <= b iff kappa(a) subset of kappa(b).
  {
    bool ok = true;
    std::string witness;
    for (int a = 0; a < lat.size() && ok; ++a) {
      Mask ka = cartan(sps, a);
      for (int b = 0; b < lat.size() && ok; ++b) {
        Mask kb = cartan(sps, b);
        bool order = lat.le(a, b);
        bool actuality = subset_of(ka, kb);
        if (order != actuality) {
          ok = false;
          witness = "(" + lat.name(a) + "," + lat.name(b) + "): " +
                    (order ? "a<=b but kappa(a) not in kappa(b)"
                           : "kappa(a) in kappa(b) but not a<=b");
        }
      }
    }
    rep.add("SPS3", ok, witness);
  }
  return rep;
}

struct EigenClosureResult {
  ClosureSpace space;
  std::vector<Mask> kappa;  // per lattice element
};

inline EigenClosureResult eigenclosure(const StatePropertySystem& sps) {
  EigenClosureResult res;
  res.kappa.resize(static_cast<std::size_t>(sps.lattice.size()));
  std::vector<Mask> fam;
  for (int a = 0; a < sps.lattice.size(); ++a) {
    res.kappa[static_cast<std::size_t>(a)] = cartan(sps, a);
    fam.push_back(res.kappa[static_cast<std::size_t>(a)]);
  }
  detail::canonicalize_family(fam);
  res.space = ClosureSpace{sps.states, std::move(fam)};
  return res;
}

// Converse construction: the lattice of closed sets ordered by inclusion,
// with xi-bar(p) = closed sets containing p. Joins are closures of unions,
// never bare unions.
inline StatePropertySystem sps_from_closure(const ClosureSpace& space) {
  std::vector<std::string> names;
  names.reserve(space.closed_sets.size());
  for (Mask f : space.closed_sets) names.push_back(set_to_string(f, space.states));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < space.closed_sets.size(); ++i)
    for (std::size_t j = 0; j < space.closed_sets.size(); ++j)
      if (i != j && subset_of(space.closed_sets[i], space.closed_sets[j]))
        pairs.emplace_back(names[i], names[j]);
  StatePropertySystem sps{space.states, CompleteLattice::build(names, pairs), {}};
  sps.xi.assign(space.states.size(), 0);
  for (std::size_t k = 0; k < space.closed_sets.size(); ++k) {
    int idx = sps.lattice.index(names[k]);
    for_each_bit(space.closed_sets[k], [&](int p) {
      sps.xi[static_cast<std::size_t>(p)] |= bit(idx);
    });
  }
  return sps;
}

namespace detail {

// Backtracking search for a lattice order-isomorphism g with the extra
// constraint that the image multiset of xi matches. States only matter
// through their xi masks, so a state bijection exists iff the xi multisets
// agree after relabeling by g.
inline bool iso_search(const StatePropertySystem& s1, const StatePropertySystem& s2,
                       std::vector<int>& map, std::vector<bool>& used, int next) {
  const auto& l1 = s1.lattice;
  const auto& l2 = s2.lattice;
  int n = l1.size();
  if (next == n) {
    std::vector<Mask> img1, img2(s2.xi);
    for (Mask x : s1.xi) {
      Mask y = 0;
      for_each_bit(x, [&](int a) { y |= bit(map[static_cast<std::size_t>(a)]); });
      img1.push_back(y);
    }
    std::sort(img1.begin(), img1.end());
    std::sort(img2.begin(), img2.end());
    return img1 == img2;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<std::size_t>(cand)]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      int pc = map[static_cast<std::size_t>(prev)];
      if (l1.le(prev, next) != l2.le(pc, cand)) ok = false;
      if (l1.le(next, prev) != l2.le(cand, pc)) ok = false;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(next)] = cand;
    used[static_cast<std::size_t>(cand)] = true;
    if (iso_search(s1, s2, map, used, next + 1)) return true;
    used[static_cast<std::size_t>(cand)] = false;
  }
  return false;
}

}  // namespace detail

// Structure-preserving bijection on states plus a lattice order-isomorphism
// commuting with xi. Exhaustive with order-compatibility pruning.
inline bool sps_isomorphic(const StatePropertySystem& s1, const StatePropertySystem& s2) {
  if (s1.num_states() != s2.num_states()) return false;
  if (s1.lattice.size() != s2.lattice.size()) return false;
  require_enum_cap(static_cast<std::size_t>(s1.lattice.size()), "sps_isomorphic");
  std::vector<int> map(static_cast<std::size_t>(s1.lattice.size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(s1.lattice.size()), false);
  return detail::iso_search(s1, s2, map, used, 0);
}

}  // namespace osps
