#pragma once

#include <optional>

#include "osps/sps.hpp"

namespace osps {

// Relation on the property lattice, stored as per-element masks. Ordered
// pairs: rows[a] bit b means a is orthogonal to b. A valid relation is
// symmetric, so the storage is symmetrically closed on construction.
struct PropertyOrthoRelation {
  std::vector<Mask> rows;

  int size() const { return static_cast<int>(rows.size()); }
  bool related(int a, int b) const { return has_bit(rows[static_cast<std::size_t>(a)], b); }

  static PropertyOrthoRelation symmetric(int n, const std::vector<std::pair<int, int>>& pairs) {
    PropertyOrthoRelation rel;
    rel.rows.assign(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : pairs) {
      rel.rows[static_cast<std::size_t>(a)] |= bit(b);
      rel.rows[static_cast<std::size_t>(b)] |= bit(a);
    }
    return rel;
  }

  std::vector<std::pair<int, int>> ordered_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
      for_each_bit(rows[static_cast<std::size_t>(a)], [&](int b) { out.emplace_back(a, b); });
    return out;
  }

  bool contains(const PropertyOrthoRelation& other) const {
    for (int a = 0; a < size(); ++a)
      if (!subset_of(other.rows[static_cast<std::size_t>(a)], rows[static_cast<std::size_t>(a)]))
        return false;
    return true;
  }

  bool operator==(const PropertyOrthoRelation&) const = default;
};

struct OrthoSPS {
  StatePropertySystem sps;
  PropertyOrthoRelation rel;
};

struct Orthocomplementation {
  std::vector<int> map;                        // a -> a'
  std::optional<std::vector<int>> per_state;   // p -> a_p when built via AO2
};

struct AxiomReport {
  bool ao1_holds = false;
  Mask generating_set = 0;        // the orthoproperties, when AO1 holds
  bool ao2_holds = false;
  std::vector<int> a_p_map;       // per state, -1 where missing
  std::vector<std::string> witnesses;
};

namespace detail {

// Binary-meet closure of a nonempty-subfamily: all meets of nonempty
// subsets of `seed`, computed as a fixed point of pairwise meets.
inline Mask meet_closure(const CompleteLattice& lat, Mask seed) {
  Mask acc = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members;
    for_each_bit(acc, [&](int i) { members.push_back(i); });
    for (int a : members)
      for (int b : members) {
        int m = lat.meet(a, b);
        if (!has_bit(acc, m)) {
          acc |= bit(m);
          grew = true;
        }
      }
  }
  return acc;
}

}  // namespace detail

// The four laws of a property orthogonality relation: symmetry,
// disjointness (a^b = bottom), bottom-totality, and the family-meet law.
inline ValidationReport validate_property_ortho(const StatePropertySystem& sps,
                                                const PropertyOrthoRelation& rel) {
  ValidationReport rep;
  const auto& lat = sps.lattice;
  int n = lat.size();
  if (rel.size() != n) fail("E-UNKNOWN-ELEMENT", "relation carrier does not match the lattice");

  {
    bool ok = true;
    std::string witness;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (rel.related(a, b) != rel.related(b, a)) {
          ok = false;
          witness = "(" + lat.name(rel.related(a, b) ? a : b) + "," +
                    lat.name(rel.related(a, b) ? b : a) + ") present without its mirror";
        }
    rep.add("symmetry", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (rel.related(a, b) && lat.meet(a, b) != lat.bottom()) {
          ok = false;
          witness = lat.name(a) + " ortho " + lat.name(b) + " but their meet is " +
                    lat.name(lat.meet(a, b));
        }
    rep.add("disjointness", ok, witness);
  }
  {
    Mask row = rel.rows.empty() ? 0 : rel.rows[static_cast<std::size_t>(lat.bottom())];
    bool ok = row == full_mask(n);
    std::string witness;
    if (!ok) {
      for (int a = 0; a < n; ++a)
        if (!has_bit(row, a)) {
          witness = "bottom not orthogonal to " + lat.name(a);
          break;
        }
    }
    rep.add("bottom-totality", ok, witness);
  }
  // Family law over nonempty subsets A, B with A x B in the relation. For a
  // fixed A the admissible B are exactly the subsets of the row
  // intersection, whose meets form its binary-meet closure.
  {
    require_enum_cap(static_cast<std::size_t>(n), "validate_property_ortho family law");
    bool ok = true;
    std::string witness;
    for (Mask A = 1; A < (Mask{1} << n) && ok; ++A) {
      Mask bmax = full_mask(n);
      for_each_bit(A, [&](int a) { bmax &= rel.rows[static_cast<std::size_t>(a)]; });
      if (!bmax) continue;
      int ma = lat.meet_family(A);
      Mask needed = detail::meet_closure(lat, bmax);
      if (!subset_of(needed, rel.rows[static_cast<std::size_t>(ma)])) {
        ok = false;
        Mask missing = needed & ~rel.rows[static_cast<std::size_t>(ma)];
        witness = "A=" + set_to_string(A, lat.names()) + " with meet " + lat.name(ma) +
                  " not orthogonal to meet " + lat.name(std::countr_zero(missing)) +
                  " of a subfamily of " + set_to_string(bmax, lat.names());
      }
    }
    rep.add("family-law", ok, witness);
  }
  return rep;
}

// p ortho q iff some a in xi(p) is property-orthogonal to some b in xi(q).
// Anti-reflexivity is a theorem for valid inputs (a^b = bottom cannot be
// actual); the StateOrthoRelation constructor enforces it.
inline StateOrthoRelation induce_state_ortho(const OrthoSPS& osps) {
  const auto& sps = osps.sps;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int p = 0; p < sps.num_states(); ++p) {
    for (int q = 0; q < sps.num_states(); ++q) {
      bool ortho = false;
      for_each_bit(sps.xi[static_cast<std::size_t>(p)], [&](int a) {
        if (osps.rel.rows[static_cast<std::size_t>(a)] & sps.xi[static_cast<std::size_t>(q)])
          ortho = true;
      });
      if (ortho) pairs.emplace_back(sps.states[static_cast<std::size_t>(p)],
                                    sps.states[static_cast<std::size_t>(q)]);
    }
  }
  return StateOrthoRelation::build(sps.states, pairs);
}

// a ortho-hat b iff kappa(a) x kappa(b) lies inside the state relation,
// i.e. kappa(b) is contained in kappa(a)^perp.
inline PropertyOrthoRelation induce_property_ortho(const StatePropertySystem& sps,
                                                   const StateOrthoRelation& state_rel) {
  int n = sps.lattice.size();
  PropertyOrthoRelation rel;
  rel.rows.assign(static_cast<std::size_t>(n), 0);
  std::vector<Mask> kap(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) kap[static_cast<std::size_t>(a)] = cartan(sps, a);
  for (int a = 0; a < n; ++a) {
    Mask annihilator = perp_set(state_rel, kap[static_cast<std::size_t>(a)]);
    for (int b = 0; b < n; ++b)
      if (subset_of(kap[static_cast<std::size_t>(b)], annihilator))
        rel.rows[static_cast<std::size_t>(a)] |= bit(b);
  }
  return rel;
}

// Orthocouple partner of a, when one exists: kappa(a) must be biorthogonally
// closed and kappa(a)^perp must be the Cartan image of some property.
inline std::optional<int> orthoproperty_partner(const StatePropertySystem& sps,
                                                const StateOrthoRelation& state_rel, int a) {
  if (a < 0 || a >= sps.lattice.size()) fail("E-UNKNOWN-ELEMENT", "property index out of range");
  Mask ka = cartan(sps, a);
  if (perp_set(state_rel, perp_set(state_rel, ka)) != ka) return std::nullopt;
  Mask target = perp_set(state_rel, ka);
  std::optional<int> found;
  for (int b = 0; b < sps.lattice.size(); ++b) {
    if (cartan(sps, b) == target) {
      // SPS3 makes kappa injective, so the partner is unique.
      if (found) fail("E-INTERNAL", "orthocouple partner not unique; kappa is not injective");
      found = b;
    }
  }
  return found;
}

inline std::optional<int> orthoproperty_partner(const OrthoSPS& osps, int a) {
  return orthoproperty_partner(osps.sps, induce_state_ortho(osps), a);
}

// AO1: the orthoproperties generate L under meets.
inline AxiomReport check_AO1(const StatePropertySystem& sps, const StateOrthoRelation& state_rel) {
  require_enum_cap(static_cast<std::size_t>(sps.lattice.size()), "check_AO1");
  AxiomReport rep;
  Mask ortho_props = 0;
  for (int a = 0; a < sps.lattice.size(); ++a)
    if (orthoproperty_partner(sps, state_rel, a)) ortho_props |= bit(a);
  // Meets of subfamilies of T; the empty family contributes top.
  Mask generated = detail::meet_closure(sps.lattice, ortho_props) | bit(sps.lattice.top());
  rep.ao1_holds = generated == full_mask(sps.lattice.size());
  rep.generating_set = ortho_props;
  if (!rep.ao1_holds) {
    Mask missing = full_mask(sps.lattice.size()) & ~generated;
    for_each_bit(missing, [&](int a) {
      rep.witnesses.push_back("not generated by orthoproperties: " + sps.lattice.name(a));
    });
  }
  return rep;
}

inline AxiomReport check_AO1(const OrthoSPS& osps) {
  return check_AO1(osps.sps, induce_state_ortho(osps));
}

// AO2: for every state p some property a_p has kappa(a_p) = {p}^perp.
inline AxiomReport check_AO2(const StatePropertySystem& sps, const StateOrthoRelation& state_rel) {
  AxiomReport rep;
  rep.ao2_holds = true;
  rep.a_p_map.assign(static_cast<std::size_t>(sps.num_states()), -1);
  for (int p = 0; p < sps.num_states(); ++p) {
    Mask target = perp_set(state_rel, bit(p));
    for (int a = 0; a < sps.lattice.size(); ++a) {
      if (cartan(sps, a) == target) {
        if (rep.a_p_map[static_cast<std::size_t>(p)] != -1)
          fail("E-INTERNAL", "a_p not unique; kappa is not injective");
        rep.a_p_map[static_cast<std::size_t>(p)] = a;
      }
    }
    if (rep.a_p_map[static_cast<std::size_t>(p)] == -1) {
      rep.ao2_holds = false;
      rep.witnesses.push_back("no property with kappa = perp of state " +
                              sps.states[static_cast<std::size_t>(p)]);
    }
  }
  return rep;
}

inline AxiomReport check_AO2(const OrthoSPS& osps) {
  return check_AO2(osps.sps, induce_state_ortho(osps));
}

inline ValidationReport validate_orthocomplementation(const StatePropertySystem& sps,
                                                      const Orthocomplementation& oc) {
  ValidationReport rep;
  const auto& lat = sps.lattice;
  int n = lat.size();
  if (static_cast<int>(oc.map.size()) != n)
    fail("E-UNKNOWN-ELEMENT", "orthocomplementation map not total on the carrier");
  auto prime = [&](int a) { return oc.map[static_cast<std::size_t>(a)]; };
  {
    bool ok = true;
    std::string witness;
    for (int a = 0; a < n && ok; ++a)
      if (prime(prime(a)) != a) {
        ok = false;
        witness = "(" + lat.name(a) + "')' = " + lat.name(prime(prime(a)));
      }
    rep.add("involution", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (lat.le(a, b) && !lat.le(prime(b), prime(a))) {
          ok = false;
          witness = lat.name(a) + " <= " + lat.name(b) + " but not " + lat.name(prime(b)) +
                    " <= " + lat.name(prime(a));
        }
    rep.add("antitone", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int a = 0; a < n && ok; ++a)
      if (lat.meet(a, prime(a)) != lat.bottom()) {
        ok = false;
        witness = lat.name(a) + " meet " + lat.name(prime(a)) + " = " +
                  lat.name(lat.meet(a, prime(a)));
      }
    rep.add("meet-bottom", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int a = 0; a < n && ok; ++a)
      if (lat.join(a, prime(a)) != lat.top()) {
        ok = false;
        witness = lat.name(a) + " join " + lat.name(prime(a)) + " = " +
                  lat.name(lat.join(a, prime(a)));
      }
    rep.add("join-top", ok, witness);
  }
  return rep;
}

// a' = meet over all states p with a actual of a_p; the empty family (a with
// empty extension, i.e. bottom) yields top.
inline Orthocomplementation build_orthocomplementation(const OrthoSPS& osps) {
  auto state_rel = induce_state_ortho(osps);
  auto ao1 = check_AO1(osps.sps, state_rel);
  auto ao2 = check_AO2(osps.sps, state_rel);
  if (!ao1.ao1_holds || !ao2.ao2_holds)
    fail("E-PRE-AXIOMS", std::string("cannot build orthocomplementation: ") +
                             (!ao1.ao1_holds ? "AO1 fails" : "AO2 fails"));
  const auto& lat = osps.sps.lattice;
  Orthocomplementation oc;
  oc.per_state = ao2.a_p_map;
  oc.map.assign(static_cast<std::size_t>(lat.size()), -1);
  for (int a = 0; a < lat.size(); ++a) {
    int acc = lat.top();
    for (int p = 0; p < osps.sps.num_states(); ++p)
      if (has_bit(osps.sps.xi[static_cast<std::size_t>(p)], a))
        acc = lat.meet(acc, ao2.a_p_map[static_cast<std::size_t>(p)]);
    oc.map[static_cast<std::size_t>(a)] = acc;
  }
  auto rep = validate_orthocomplementation(osps.sps, oc);
  if (!rep.ok()) fail("E-INTERNAL", "built map fails the orthocomplementation laws");
  return oc;
}

// a ortho-hat b iff b <= a'.
inline PropertyOrthoRelation ortho_from_orthocomplementation(const StatePropertySystem& sps,
                                                             const Orthocomplementation& oc) {
  int n = sps.lattice.size();
  PropertyOrthoRelation rel;
  rel.rows.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    int ap = oc.map[static_cast<std::size_t>(a)];
    for (int b = 0; b < n; ++b)
      if (sps.lattice.le(b, ap)) rel.rows[static_cast<std::size_t>(a)] |= bit(b);
  }
  return rel;
}

// The largest relation inducing the same orthocomplementation.
inline PropertyOrthoRelation compute_perp_star(const OrthoSPS& osps) {
  return ortho_from_orthocomplementation(osps.sps, build_orthocomplementation(osps));
}

struct TheoremReport {
  bool lhs = false;   // meaning depends on the theorem checked
  bool rhs = false;
  bool consistent = false;
  std::vector<std::string> witnesses;
};

// kappa(L) = C_orth iff AO1 and AO2. Both sides are recomputed
// independently; a biconditional violation is an implementation bug and is
// reported as THEOREM-VIOLATION content, never accepted silently.
inline TheoremReport verify_theorem1(const OrthoSPS& osps) {
  TheoremReport rep;
  auto state_rel = induce_state_ortho(osps);
  auto eigen = eigenclosure(osps.sps);
  auto orth = ortho_closure(state_rel);
  rep.lhs = eigen.space.closed_sets == orth.closed_sets;
  auto ao1 = check_AO1(osps.sps, state_rel);
  auto ao2 = check_AO2(osps.sps, state_rel);
  rep.rhs = ao1.ao1_holds && ao2.ao2_holds;
  rep.consistent = rep.lhs == rep.rhs;
  if (!rep.consistent) {
    rep.witnesses.push_back("THEOREM-VIOLATION: kappa(L)=C_orth is " +
                            std::string(rep.lhs ? "true" : "false") + " but AO1&AO2 is " +
                            std::string(rep.rhs ? "true" : "false"));
  } else if (!rep.lhs) {
    for (const auto& w : ao1.witnesses) rep.witnesses.push_back("AO1: " + w);
    for (const auto& w : ao2.witnesses) rep.witnesses.push_back("AO2: " + w);
  }
  return rep;
}

// kappa(a) double-star kappa(b) iff a perp-star b, checked on all pairs.
// The closure-side system is rebuilt from scratch via sps_from_closure.
inline TheoremReport verify_double_star(const OrthoSPS& osps) {
  TheoremReport rep;
  auto state_rel = induce_state_ortho(osps);
  auto star = compute_perp_star(osps);  // throws E-PRE-AXIOMS if axioms fail
  auto eigen = eigenclosure(osps.sps);
  auto closure_sps = sps_from_closure(eigen.space);
  auto double_star = induce_property_ortho(closure_sps, state_rel);
  const auto& lat = osps.sps.lattice;
  rep.lhs = rep.rhs = true;
  bool all_ok = true;
  for (int a = 0; a < lat.size(); ++a) {
    int ka = closure_sps.lattice.index(
        set_to_string(eigen.kappa[static_cast<std::size_t>(a)], osps.sps.states));
    for (int b = 0; b < lat.size(); ++b) {
      int kb = closure_sps.lattice.index(
          set_to_string(eigen.kappa[static_cast<std::size_t>(b)], osps.sps.states));
      if (double_star.related(ka, kb) != star.related(a, b)) {
        all_ok = false;
        rep.witnesses.push_back("THEOREM-VIOLATION: pair (" + lat.name(a) + "," + lat.name(b) +
                                ") disagrees between perp-star and double-star");
      }
    }
  }
  rep.consistent = all_ok;
  return rep;
}

// Any relation that is a valid ortho relation with AO1+AO2 and the same
// orthocomplementation must be contained in perp-star.
inline TheoremReport verify_maximality(const OrthoSPS& osps, const PropertyOrthoRelation& candidate) {
  TheoremReport rep;
  auto star = compute_perp_star(osps);
  auto base_oc = build_orthocomplementation(osps);
  OrthoSPS cand_osps{osps.sps, candidate};
  auto valid = validate_property_ortho(osps.sps, candidate);
  if (!valid.ok()) {
    rep.witnesses.push_back("E-PRE-AXIOMS: candidate is not a valid ortho relation");
    rep.consistent = true;  // precondition failure, nothing asserted
    return rep;
  }
  StateOrthoRelation cand_state = induce_state_ortho(cand_osps);
  auto ao1 = check_AO1(osps.sps, cand_state);
  auto ao2 = check_AO2(osps.sps, cand_state);
  if (!ao1.ao1_holds || !ao2.ao2_holds) {
    rep.witnesses.push_back("E-PRE-AXIOMS: candidate does not satisfy AO1 and AO2");
    rep.consistent = true;
    return rep;
  }
  auto cand_oc = build_orthocomplementation(cand_osps);
  if (cand_oc.map != base_oc.map) {
    rep.witnesses.push_back("E-PRE-AXIOMS: candidate induces a different orthocomplementation");
    rep.consistent = true;
    return rep;
  }
  rep.lhs = rep.rhs = true;
  rep.consistent = star.contains(candidate);
  if (!rep.consistent) {
    const auto& lat = osps.sps.lattice;
    for (auto [a, b] : candidate.ordered_pairs())
      if (!star.related(a, b))
        rep.witnesses.push_back("THEOREM-VIOLATION: candidate pair (" + lat.name(a) + "," +
                                lat.name(b) + ") outside perp-star");
  }
  return rep;
}

}  // namespace osps
