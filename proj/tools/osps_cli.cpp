// Command-line front end: validations, conversions, derivations, and
// theorem checks over ortho state property system bundles.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "osps/osps.hpp"

namespace {

using namespace osps;

nlohmann::json sorted_name_pairs(std::vector<std::pair<std::string, std::string>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [a, b] : pairs) arr.push_back({a, b});
  return arr;
}

nlohmann::json family_json(const ClosureSpace& space) {
  nlohmann::json arr = nlohmann::json::array();
  for (Mask f : space.closed_sets) {
    nlohmann::json members = nlohmann::json::array();
    for_each_bit(f, [&](int i) { members.push_back(space.states[static_cast<std::size_t>(i)]); });
    arr.push_back(members);
  }
  return arr;
}

void add_validation(Report& rep, const std::string& prefix, const ValidationReport& v) {
  for (const auto& c : v.checks) {
    std::vector<std::string> w;
    if (!c.witness.empty()) w.push_back(c.witness);
    rep.add(prefix + "/" + c.name, c.passed, std::move(w));
  }
}

std::vector<std::pair<std::string, std::string>> relation_name_pairs(
    const StatePropertySystem& sps, const PropertyOrthoRelation& rel) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : rel.ordered_pairs())
    out.emplace_back(sps.lattice.name(a), sps.lattice.name(b));
  return out;
}

int run_check(const std::string& path, bool sps_flag, bool ortho_flag, bool ao1_flag,
              bool ao2_flag, bool theorem1_flag, bool double_star_flag, bool all_flag,
              const std::string& format) {
  if (!(sps_flag || ortho_flag || ao1_flag || ao2_flag || theorem1_flag || double_star_flag))
    all_flag = true;
  Report rep;
  rep.command = "check " + path;
  auto osps_val = bundle_to_osps(load_bundle(path));
  const auto& sps = osps_val.sps;

  if (all_flag || sps_flag) {
    add_validation(rep, "lattice", validate_complete_lattice(sps.lattice.poset()));
    add_validation(rep, "sps", validate_sps(sps));
  }
  if (all_flag || ortho_flag)
    add_validation(rep, "ortho", validate_property_ortho(sps, osps_val.rel));

  auto state_rel = induce_state_ortho(osps_val);
  if (all_flag || ao1_flag) {
    auto ao1 = check_AO1(sps, state_rel);
    rep.add("AO1", ao1.ao1_holds, ao1.witnesses);
    if (ao1.ao1_holds) {
      nlohmann::json t = nlohmann::json::array();
      for_each_bit(ao1.generating_set, [&](int a) { t.push_back(sps.lattice.name(a)); });
      rep.derived["ao1_generating_set"] = t;
    }
  }
  if (all_flag || ao2_flag) {
    auto ao2 = check_AO2(sps, state_rel);
    rep.add("AO2", ao2.ao2_holds, ao2.witnesses);
    if (ao2.ao2_holds) {
      nlohmann::json m = nlohmann::json::object();
      for (int p = 0; p < sps.num_states(); ++p)
        m[sps.states[static_cast<std::size_t>(p)]] =
            sps.lattice.name(ao2.a_p_map[static_cast<std::size_t>(p)]);
      rep.derived["a_p"] = m;
    }
  }
  if (all_flag || theorem1_flag) {
    auto t1 = verify_theorem1(osps_val);
    rep.add("theorem1/eigenclosure-equals-orthoclosure", t1.lhs);
    rep.add("theorem1/AO1-and-AO2", t1.rhs);
    rep.add("theorem1/biconditional", t1.consistent, t1.witnesses);
  }
  if (all_flag || double_star_flag) {
    auto ao1 = check_AO1(sps, state_rel);
    auto ao2 = check_AO2(sps, state_rel);
    if (ao1.ao1_holds && ao2.ao2_holds) {
      auto ds = verify_double_star(osps_val);
      rep.add("double-star", ds.consistent, ds.witnesses);
    } else {
      rep.skip("double-star", "requires AO1 and AO2");
    }
  }
  std::cout << emit_report(rep, format);
  return rep.all_passed() ? 0 : 1;
}

int run_convert(const std::string& mode, const std::string& path, const std::string& format) {
  Report rep;
  rep.command = "convert " + mode + " " + path;
  if (mode == "to-closure") {
    auto osps_val = bundle_to_osps(load_bundle(path));
    auto eigen = eigenclosure(osps_val.sps);
    rep.derived["states"] = eigen.space.states;
    rep.derived["closed_sets"] = family_json(eigen.space);
    rep.add("eigenclosure", true);
  } else {  // to-sps
    std::ifstream in(path);
    if (!in) fail("E-PARSE", "cannot open '" + path + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      fail("E-PARSE", path + std::string(": ") + e.what());
    }
    detail::parse_check(doc.is_object() && doc.contains("states") && doc.contains("closed_sets"),
                        "$", "expected {states, closed_sets}");
    std::vector<std::string> states = detail::string_list(doc["states"], "states");
    std::sort(states.begin(), states.end());
    std::vector<Mask> fam;
    for (const auto& s : doc["closed_sets"]) {
      Mask m = 0;
      for (const auto& member : detail::string_list(s, "closed_sets"))
        m |= bit(detail::state_index(states, member));
      fam.push_back(m);
    }
    auto space = make_closure_space(states, fam);
    auto sps = sps_from_closure(space);
    StructureBundle b;
    b.states = sps.states;
    b.properties = sps.lattice.names();
    b.bottom = sps.lattice.name(sps.lattice.bottom());
    b.top = sps.lattice.name(sps.lattice.top());
    for (int i = 0; i < sps.lattice.size(); ++i)
      for (int j = 0; j < sps.lattice.size(); ++j)
        if (i != j && sps.lattice.le(i, j))
          b.order_pairs.emplace_back(sps.lattice.name(i), sps.lattice.name(j));
    for (int p = 0; p < sps.num_states(); ++p) {
      std::vector<std::string> props;
      for_each_bit(sps.xi[static_cast<std::size_t>(p)],
                   [&](int a) { props.push_back(sps.lattice.name(a)); });
      b.xi[sps.states[static_cast<std::size_t>(p)]] = props;
    }
    rep.derived["bundle"] = bundle_to_json(b);
    rep.add("sps-from-closure", validate_sps(sps).ok());
  }
  std::cout << emit_report(rep, format);
  return rep.all_passed() ? 0 : 1;
}

int run_derive(const std::string& what, const std::string& path, const std::string& format) {
  Report rep;
  rep.command = "derive " + what + " " + path;
  auto osps_val = bundle_to_osps(load_bundle(path));
  const auto& sps = osps_val.sps;
  if (what == "state-ortho") {
    auto state_rel = induce_state_ortho(osps_val);
    rep.derived["pairs"] = sorted_name_pairs(state_rel.unordered_pairs());
    rep.add("state-ortho", true);
  } else if (what == "orthocomplementation") {
    auto oc = build_orthocomplementation(osps_val);
    nlohmann::json m = nlohmann::json::object();
    for (int a = 0; a < sps.lattice.size(); ++a)
      m[sps.lattice.name(a)] = sps.lattice.name(oc.map[static_cast<std::size_t>(a)]);
    rep.derived["map"] = m;
    nlohmann::json ap = nlohmann::json::object();
    for (int p = 0; p < sps.num_states(); ++p)
      ap[sps.states[static_cast<std::size_t>(p)]] =
          sps.lattice.name((*oc.per_state)[static_cast<std::size_t>(p)]);
    rep.derived["a_p"] = ap;
    rep.add("orthocomplementation", validate_orthocomplementation(sps, oc).ok());
  } else {  // perp-star
    auto star = compute_perp_star(osps_val);
    rep.derived["pairs"] = sorted_name_pairs(relation_name_pairs(sps, star));
    rep.add("perp-star", true);
  }
  std::cout << emit_report(rep, format);
  return rep.all_passed() ? 0 : 1;
}

int run_verify_random(int count, std::uint64_t seed, int max_states, int max_props,
                      const std::string& format) {
  Report rep;
  rep.command = "verify-random";
  std::mt19937_64 rng(seed);
  int theorem1_fail = 0, roundtrip_fail = 0, antireflexive_fail = 0, double_star_fail = 0,
      maximality_fail = 0, qualifying = 0;
  for (int i = 0; i < count; ++i) {
    auto osps_val = random_osps(rng, max_states, max_props);
    auto state_rel = induce_state_ortho(osps_val);
    for (int p = 0; p < state_rel.size(); ++p)
      if (state_rel.related(p, p)) ++antireflexive_fail;
    if (!verify_theorem1(osps_val).consistent) ++theorem1_fail;
    auto eigen = eigenclosure(osps_val.sps);
    auto back = sps_from_closure(eigen.space);
    if (eigenclosure(back).space.closed_sets != eigen.space.closed_sets) ++roundtrip_fail;
    if (!sps_isomorphic(osps_val.sps, back)) ++roundtrip_fail;
    auto ao1 = check_AO1(osps_val.sps, state_rel);
    auto ao2 = check_AO2(osps_val.sps, state_rel);
    if (ao1.ao1_holds && ao2.ao2_holds) {
      ++qualifying;
      if (!verify_double_star(osps_val).consistent) ++double_star_fail;
      auto star = compute_perp_star(osps_val);
      if (!star.contains(osps_val.rel)) ++maximality_fail;
      if (!verify_maximality({osps_val.sps, star}, star).consistent) ++maximality_fail;
      auto sub = random_subrelation(rng, osps_val.sps.lattice, star);
      if (!verify_maximality(osps_val, sub).consistent) ++maximality_fail;
    }
  }
  rep.derived["instances"] = count;
  rep.derived["qualifying_ao1_ao2"] = qualifying;
  rep.derived["seed"] = seed;
  rep.add("theorem1-biconditional", theorem1_fail == 0,
          theorem1_fail ? std::vector<std::string>{std::to_string(theorem1_fail) + " violations"}
                        : std::vector<std::string>{});
  rep.add("equivalence-roundtrip", roundtrip_fail == 0);
  rep.add("state-ortho-antireflexive", antireflexive_fail == 0);
  rep.add("double-star", double_star_fail == 0);
  rep.add("maximality", maximality_fail == 0);
  std::cout << emit_report(rep, format);
  return rep.all_passed() ? 0 : 1;
}

int run_fixtures(const std::string& dir, const std::string& format) {
  Report rep;
  rep.command = "fixtures " + dir;
  std::filesystem::create_directories(dir);
  nlohmann::json written = nlohmann::json::array();
  for (const auto& [name, bundle] : bundled_fixtures()) {
    std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
    out << canonical_dump(bundle_to_json(bundle));
    written.push_back(name);
  }
  rep.derived["written"] = written;
  rep.add("fixtures", true);
  std::cout << emit_report(rep, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ortho state property system toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string path;
  bool f_sps = false, f_ortho = false, f_ao1 = false, f_ao2 = false, f_t1 = false, f_ds = false,
       f_all = false;
  auto* check = app.add_subcommand("check", "validate a bundle and run theorem checks");
  check->add_option("file", path)->required();
  check->add_flag("--sps", f_sps);
  check->add_flag("--ortho", f_ortho);
  check->add_flag("--ao1", f_ao1);
  check->add_flag("--ao2", f_ao2);
  check->add_flag("--theorem1", f_t1);
  check->add_flag("--double-star", f_ds);
  check->add_flag("--all", f_all);

  std::string conv_mode;
  auto* convert = app.add_subcommand("convert", "convert between bundles and closure spaces");
  convert->add_option("mode", conv_mode)->required()->check(CLI::IsMember({"to-closure", "to-sps"}));
  convert->add_option("file", path)->required();

  std::string derive_what;
  auto* derive = app.add_subcommand("derive", "derive induced structure");
  derive->add_option("what", derive_what)
      ->required()
      ->check(CLI::IsMember({"state-ortho", "orthocomplementation", "perp-star"}));
  derive->add_option("file", path)->required();

  int count = 1000, max_states = 5, max_props = 8;
  std::uint64_t seed = 1;
  auto* vr = app.add_subcommand("verify-random", "randomized theorem suites");
  vr->add_option("--count", count);
  vr->add_option("--seed", seed);
  vr->add_option("--max-states", max_states);
  vr->add_option("--max-props", max_props);

  std::string fix_dir;
  auto* fixtures = app.add_subcommand("fixtures", "write bundled fixtures");
  fixtures->add_option("dir", fix_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed())
      return run_check(path, f_sps, f_ortho, f_ao1, f_ao2, f_t1, f_ds, f_all, format);
    if (convert->parsed()) return run_convert(conv_mode, path, format);
    if (derive->parsed()) return run_derive(derive_what, path, format);
    if (vr->parsed()) return run_verify_random(count, seed, max_states, max_props, format);
    if (fixtures->parsed()) return run_fixtures(fix_dir, format);
  } catch (const osps::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == "E-PARSE" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
