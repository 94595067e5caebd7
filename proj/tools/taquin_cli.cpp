// Command line front end: every computation of the library exposed as a
// subcommand with JSON (default), text, or DOT output.  Exit status is 0
// on success, 1 when a requested verification fails, 2 on usage errors.

#include <array>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "taquin/json_io.hpp"
#include "taquin/osculating.hpp"
#include "taquin/parallel.hpp"
#include "taquin/taquin.hpp"

namespace {

using namespace taquin;

// Signals a failed verification after the report has been printed.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& s) {
  if (s.empty() || s == "-") return Partition{};
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + item + "'");
    }
    if (used != item.size())
      throw std::invalid_argument("bad partition part '" + item + "'");
    parts.push_back(value);
  }
  return Partition(parts);
}

// Semicolon-separated partitions; the empty string is the empty list.
std::vector<Partition> parse_partition_list(const std::string& s) {
  std::vector<Partition> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_partition(item));
  return out;
}

Rectangle parse_rect(const std::string& s) {
  auto pos = s.find('x');
  if (pos == std::string::npos)
    throw std::invalid_argument("rectangle must look like 3x5");
  return Rectangle(std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1)));
}

// An ordering is a string of digits, a permutation of 1..r.
std::vector<int> parse_ordering(const std::string& s) {
  std::vector<int> out;
  for (char c : s) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("ordering must be digits like 1324");
    out.push_back(c - '0');
  }
  return out;
}

WordPreset parse_preset(const std::string& s) {
  if (s == "box-second") return WordPreset::BoxSecond;
  if (s == "box-leading") return WordPreset::BoxLeading;
  if (s == "adjacent-swap") return WordPreset::AdjacentSwapFirstTwo;
  throw std::invalid_argument("unknown preset '" + s + "'");
}

Json json_of_list(const std::vector<Partition>& ps) {
  Json a = Json::array();
  for (const Partition& p : ps) a.push_back(json_of(p));
  return a;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string chain_text(const DEChain& c) {
  std::string s = c.inner().to_string();
  for (const DualClass& d : c.classes())
    s += " -> " + d.representative.outer().to_string();
  return s;
}

std::string cycles_text(const OrbitReport& r) {
  std::string s;
  for (const auto& orb : r.orbits) {
    s += '(';
    for (std::size_t i = 0; i < orb.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(orb[i]);
    }
    s += ')';
  }
  return s;
}

// One named comparison of a verify-example run.
struct Check {
  std::string name;
  Json expected, got;
  bool ok;
};

void add_check(std::vector<Check>& cs, const std::string& name,
               const Json& expected, const Json& got) {
  cs.push_back({name, expected, got, expected == got});
}

int report_checks(const std::string& id, const std::vector<Check>& cs,
                  const std::string& format) {
  bool all = true;
  for (const Check& c : cs) all = all && c.ok;
  if (format == "text") {
    for (const Check& c : cs)
      std::cout << (c.ok ? "ok   " : "FAIL ") << id << " " << c.name
                << ": got " << c.got.dump() << " expected "
                << c.expected.dump() << "\n";
  } else {
    Json checks = Json::array();
    for (const Check& c : cs)
      checks.push_back(Json{{"name", c.name},
                            {"expected", c.expected},
                            {"got", c.got},
                            {"ok", c.ok}});
    emit(Json{{"id", id}, {"checks", std::move(checks)}, {"ok", all}});
  }
  if (!all) throw VerificationFailure("example " + id);
  return 0;
}

void run_enumerate_chains(const std::string& inner_s,
                          const std::string& outer_s,
                          const std::string& types_s,
                          const std::string& format) {
  Partition inner = parse_partition(inner_s);
  Partition outer = parse_partition(outer_s);
  std::vector<Partition> types = parse_partition_list(types_s);
  auto chains = enumerate_chains(inner, outer, types);
  if (format == "text") {
    std::cout << "count = " << chains.size() << "\n";
    for (const DEChain& c : chains) std::cout << chain_text(c) << "\n";
    return;
  }
  Json arr = Json::array();
  for (const DEChain& c : chains) arr.push_back(json_of(c));
  emit(Json{{"inner", json_of(inner)},
            {"outer", json_of(outer)},
            {"types", json_of_list(types)},
            {"count", chains.size()},
            {"chains", std::move(arr)}});
}

void run_orbits(const std::string& rect_s, const std::string& types_s,
                const std::string& ordering_s, const std::string& preset_s,
                const std::string& format, bool eta_only) {
  Rectangle rect = parse_rect(rect_s);
  std::vector<Partition> types = parse_partition_list(types_s);
  if (!ordering_s.empty())
    types = permute_types(types, parse_ordering(ordering_s));
  OrbitReport report = monodromy_orbits(types, rect, parse_preset(preset_s));
  if (eta_only) {
    if (format == "text") {
      std::cout << "eta = " << report.component_count() << "\n";
    } else {
      emit(Json{{"rect", json_of(rect)},
                {"types", json_of_list(types)},
                {"ordering", ordering_s},
                {"preset", preset_s},
                {"eta", report.component_count()}});
    }
    return;
  }
  if (format == "text") {
    std::cout << "set_size = " << report.set_size << "\n"
              << "orbits = " << cycles_text(report) << "\n"
              << "eta = " << report.component_count() << "\n"
              << "sign = " << report.sign << "\n";
    return;
  }
  Json j{{"rect", json_of(rect)},
         {"types", json_of_list(types)},
         {"ordering", ordering_s},
         {"preset", preset_s}};
  j.update(json_of(report));
  j["eta"] = report.component_count();
  emit(j);
}

void run_parity_scan(const std::string& rect_s, int jobs,
                     const std::string& format) {
  Rectangle rect = parse_rect(rect_s);
  auto shapes = enumerate_partitions(rect);
  std::vector<std::array<Partition, 3>> triples;
  for (const Partition& a : shapes)
    for (const Partition& b : shapes)
      for (const Partition& g : shapes)
        if (a.size() + b.size() + g.size() == rect.area() - 1)
          triples.push_back({a, b, g});
  std::vector<ParityReport> reports(triples.size());
  parallel_for(triples.size(), jobs, [&](std::size_t i) {
    reports[i] =
        parity_check(triples[i][0], triples[i][1], triples[i][2], rect);
  });
  std::vector<ParityReport> failing;
  for (const ParityReport& r : reports)
    if (!r.ok) failing.push_back(r);
  if (format == "text") {
    std::cout << "checked = " << reports.size()
              << "; failures = " << failing.size() << "\n";
  } else {
    Json fails = Json::array();
    for (const ParityReport& r : failing) fails.push_back(json_of(r));
    emit(Json{{"rect", json_of(rect)},
              {"checked", reports.size()},
              {"failures", failing.size()},
              {"failing", std::move(fails)}});
  }
  if (!failing.empty())
    throw VerificationFailure("parity scan of " + rect_s);
}

void run_kcoeff(const std::string& rect_s, const std::string& alpha_s,
                const std::string& beta_s, const std::string& gamma_s,
                bool witnesses, const std::string& format) {
  Rectangle rect = parse_rect(rect_s);
  Partition alpha = parse_partition(alpha_s);
  Partition beta = parse_partition(beta_s);
  Partition gamma = parse_partition(gamma_s);
  int k = k_coeff(alpha, beta, gamma, rect);
  if (format == "text") {
    std::cout << "k = " << k << "\n";
    if (witnesses)
      for (const IncreasingTableau& t : k_witnesses(alpha, beta, gamma, rect))
        std::cout << t.to_string() << "\n\n";
    return;
  }
  Json j{{"rect", json_of(rect)},
         {"alpha", json_of(alpha)},
         {"beta", json_of(beta)},
         {"gamma", json_of(gamma)},
         {"k", k}};
  if (witnesses) {
    Json ws = Json::array();
    for (const IncreasingTableau& t : k_witnesses(alpha, beta, gamma, rect))
      ws.push_back(json_of(t));
    j["witnesses"] = std::move(ws);
  }
  emit(j);
}

void run_lrcoeff(const std::string& rect_s, const std::string& inner_s,
                 const std::string& outer_s, bool outer_given,
                 const std::string& types_s, const std::string& format) {
  Rectangle rect = parse_rect(rect_s);
  Partition inner = parse_partition(inner_s);
  Partition outer = outer_given ? parse_partition(outer_s)
                                : rectangle_partition(rect);
  std::vector<Partition> types = parse_partition_list(types_s);
  int count = lr_coeff(inner, types, outer);
  if (format == "text") {
    std::cout << "count = " << count << "\n";
    return;
  }
  emit(Json{{"rect", json_of(rect)},
            {"inner", json_of(inner)},
            {"outer", json_of(outer)},
            {"types", json_of_list(types)},
            {"count", count}});
}

void run_export_covering(const std::string& rect_s, const std::string& types_s,
                         const std::string& format) {
  Rectangle rect = parse_rect(rect_s);
  std::vector<Partition> types = parse_partition_list(types_s);
  int total = 0;
  for (const Partition& t : types) total += t.size();
  detail::require(total == rect.area() - 1,
                  "export-covering: type sizes must sum to area - 1");
  CoveringModel model = build_covering(types, rect);
  if (format == "dot") {
    std::cout << covering_to_dot(model);
    return;
  }
  emit(json_of(model));
}

void run_osculating_check(int n, unsigned seed, int trials, int jobs,
                          const std::string& format) {
  detail::require(n >= 1 && trials >= 1,
                  "osculating-check: n and trials must be >= 1");
  std::mt19937 gen(seed);
  std::vector<Rational> zs;
  for (int t = 0; t < trials; ++t) {
    int num = static_cast<int>(gen() % 81) - 40;
    int den = static_cast<int>(gen() % 12) + 1;
    zs.push_back(Rational(num) / Rational(den));
  }
  std::vector<std::vector<int>> subsets;
  for (int k = 1; k <= n; ++k)
    for (auto& J : all_subsets(n, k)) subsets.push_back(J);
  std::vector<int> fail_per_trial(trials, 0);
  parallel_for(trials, jobs, [&](std::size_t t) {
    for (const auto& J : subsets)
      if (!verify_minor_identity(J, n, zs[t])) ++fail_per_trial[t];
  });
  std::size_t checked = zs.size() * subsets.size();
  std::size_t failures = 0;
  for (int f : fail_per_trial) failures += f;
  for (const auto& J : subsets) {
    ++checked;
    auto [dj, ej] = delta_and_e(J, n);
    auto [dc, ec] = delta_and_e(subset_complement(J, n), n);
    int p = static_cast<int>(J.size());
    if (ej + ec != p * (n - p)) ++failures;
  }
  if (format == "text") {
    std::cout << "n = " << n << "; checked = " << checked
              << "; failures = " << failures << "\n";
  } else {
    emit(Json{{"n", n},
              {"seed", seed},
              {"trials", trials},
              {"checked", checked},
              {"failures", failures}});
  }
  if (failures > 0) throw VerificationFailure("osculating identities");
}

void run_promotion_orbits(const std::string& rect_s,
                          const std::string& format) {
  Rectangle rect = parse_rect(rect_s);
  auto tabs = enumerate_standard(SkewShape(Partition{},
                                           rectangle_partition(rect)));
  std::map<SkewTableau, int> index;
  for (std::size_t i = 0; i < tabs.size(); ++i) index[tabs[i]] = i;
  std::vector<int> perm(tabs.size());
  for (std::size_t i = 0; i < tabs.size(); ++i)
    perm[i] = index.at(promotion(tabs[i]));
  OrbitReport report = orbit_report_of_permutation(perm);
  int count = k_promotion_count(rect);
  bool parity_ok = report.sign == count % 2;
  if (format == "text") {
    std::cout << "set_size = " << report.set_size << "\n"
              << "orbits = " << cycles_text(report) << "\n"
              << "sign = " << report.sign << "\n"
              << "k_promotion_count = " << count << "\n"
              << "parity_ok = " << (parity_ok ? "true" : "false") << "\n";
  } else {
    Json j{{"rect", json_of(rect)}};
    j.update(json_of(report));
    j["k_promotion_count"] = count;
    j["parity_ok"] = parity_ok;
    emit(j);
  }
  if (!parity_ok)
    throw VerificationFailure("promotion parity for " + rect_s);
}

void run_verify_example(const std::string& id, const std::string& format) {
  std::vector<Check> cs;
  if (id == "g38") {
    Rectangle rect(3, 5);
    std::vector<Partition> types{Partition{2}, Partition{2, 1},
                                 Partition{3, 1}, Partition{3, 2}};
    add_check(cs, "eta_1234", 3, component_count(types, rect));
    add_check(cs, "eta_1243", 1,
              component_count(permute_types(types, {1, 2, 4, 3}), rect));
    add_check(cs, "eta_1324", 1,
              component_count(permute_types(types, {1, 3, 2, 4}), rect));
  } else if (id == "g37") {
    Rectangle rect(3, 4);
    std::vector<Partition> types{Partition{2}, Partition{2}, Partition{2, 1},
                                 Partition{3, 1}};
    OrbitReport r = monodromy_orbits(types, rect, WordPreset::BoxSecond);
    add_check(cs, "set_size", 8, r.set_size);
    add_check(cs, "orbit_sizes_1234", Json::array({3, 5}), r.orbit_sizes());
    add_check(cs, "eta_1234", 2, r.component_count());
    OrbitReport r2 = monodromy_orbits(permute_types(types, {1, 3, 2, 4}),
                                      rect, WordPreset::BoxSecond);
    add_check(cs, "orbit_sizes_1324", Json::array({4, 4}), r2.orbit_sizes());
    add_check(cs, "eta_1324", 2, r2.component_count());
  } else if (id == "g48") {
    Rectangle rect(4, 4);
    Partition a{3, 1, 1};
    ParityReport p = parity_check(a, a, a, rect);
    add_check(cs, "c", 2, p.c);
    add_check(cs, "k", 0, p.k);
    add_check(cs, "eta", 2, p.eta);
    add_check(cs, "omega_identity", true,
              monodromy_orbits({a, a, a}, rect, WordPreset::BoxSecond)
                  .is_identity());
    add_check(cs, "parity_ok", true, p.ok);
  } else if (id == "g49") {
    Rectangle rect(4, 5);
    Partition a{3, 2, 1}, b{4, 2, 1};
    ParityReport p = parity_check(a, b, a, rect);
    add_check(cs, "c", 12, p.c);
    add_check(cs, "k", 13, p.k);
    add_check(cs, "eta", 1, p.eta);
    add_check(cs, "chi", -1, p.chi);
    add_check(cs, "parity_ok", true, p.ok);
  } else if (id == "pieri-5-3") {
    Rectangle rect(3, 6);
    Partition alpha{4, 2}, gamma{5, 2};
    int d = 4;
    add_check(cs, "gamma_complement", json_of(Partition{6, 4, 1}),
              json_of(complement(gamma, rect)));
    auto fiber = pieri_fiber_row_ordered(alpha, d, gamma, rect);
    add_check(cs, "fiber_size", 3, fiber.size());
    Json rows = Json::array();
    for (const DEChain& c : fiber)
      rows.push_back(c.classes()[1].representative.box_of_entry(1).row);
    add_check(cs, "box_rows_bottom_up", Json::array({2, 1, 0}), rows);
    MonodromyWord w = word_box_second(3);
    bool cyclic = !fiber.empty();
    for (std::size_t i = 0; i < fiber.size(); ++i)
      cyclic = cyclic &&
               apply_word(fiber[i], w) == fiber[(i + 1) % fiber.size()];
    add_check(cs, "omega_cyclic_shift", true, cyclic);
    add_check(cs, "k_coeff", 2, k_coeff(alpha, Partition{4}, gamma, rect));
    add_check(cs, "k_coeff_pieri", 2, k_coeff_pieri(alpha, d, gamma, rect));
    IncreasingTableau t12(Partition{4, 2}, {{3, 4}, {1, 2}, {1}});
    IncreasingTableau t23(Partition{4, 2}, {{3, 4}, {2, 3}, {1}});
    Json expected = Json::array({json_of(t12), json_of(t23)});
    Json got = Json::array();
    for (const IncreasingTableau& t :
         k_witnesses(alpha, Partition{4}, gamma, rect))
      got.push_back(json_of(t));
    add_check(cs, "witnesses", expected, got);
  } else if (id == "promo-2x2") {
    Rectangle rect(2, 2);
    auto tabs = enumerate_standard(SkewShape(Partition{},
                                             rectangle_partition(rect)));
    std::map<SkewTableau, int> index;
    for (std::size_t i = 0; i < tabs.size(); ++i) index[tabs[i]] = i;
    std::vector<int> perm(tabs.size());
    for (std::size_t i = 0; i < tabs.size(); ++i)
      perm[i] = index.at(promotion(tabs[i]));
    OrbitReport r = orbit_report_of_permutation(perm);
    add_check(cs, "set_size", 2, r.set_size);
    add_check(cs, "orbit_sizes", Json::array({2}), r.orbit_sizes());
    add_check(cs, "sign", 1, r.sign);
    int count = k_promotion_count(rect);
    add_check(cs, "k_promotion_count", 1, count);
    add_check(cs, "sign_matches_count", true, r.sign == count % 2);
  } else {
    throw std::invalid_argument("unknown example id '" + id + "'");
  }
  report_checks(id, cs, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tableau combinatorics of one-dimensional Schubert problems"};
  app.require_subcommand(1);

  std::string rect_s, inner_s, outer_s, types_s, ordering_s, alpha_s, beta_s,
      gamma_s, id_s;
  std::string preset_s = "box-second";
  std::string format = "json";
  bool witnesses = false;
  int jobs = 0, osc_n = 6, osc_trials = 25;
  unsigned osc_seed = 1;
  bool outer_given = false;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  };

  CLI::App* ec = app.add_subcommand(
      "enumerate-chains", "List dual equivalence chains of a given type");
  ec->add_option("--inner", inner_s, "inner shape, e.g. 2,1 (empty for none)");
  ec->add_option("--outer", outer_s, "outer shape")->required();
  ec->add_option("--types", types_s, "semicolon-separated types")->required();
  add_format(ec, {"json", "text"});
  ec->callback(
      [&] { run_enumerate_chains(inner_s, outer_s, types_s, format); });

  CLI::App* orb = app.add_subcommand(
      "orbits", "Orbit structure of the monodromy word on a chain fiber");
  orb->add_option("--rect", rect_s, "ambient rectangle KxM")->required();
  orb->add_option("--types", types_s, "semicolon-separated types")->required();
  orb->add_option("--ordering", ordering_s, "permutation of 1..r, e.g. 1324");
  orb->add_option("--preset", preset_s, "monodromy word preset")
      ->check(CLI::IsMember({"box-second", "box-leading", "adjacent-swap"}))
      ->capture_default_str();
  add_format(orb, {"json", "text"});
  orb->callback([&] {
    run_orbits(rect_s, types_s, ordering_s, preset_s, format, false);
  });

  CLI::App* comp = app.add_subcommand(
      "components", "Number of monodromy orbits (eta) of a chain fiber");
  comp->add_option("--rect", rect_s, "ambient rectangle KxM")->required();
  comp->add_option("--types", types_s, "semicolon-separated types")
      ->required();
  comp->add_option("--ordering", ordering_s, "permutation of 1..r");
  comp->add_option("--preset", preset_s, "monodromy word preset")
      ->check(CLI::IsMember({"box-second", "box-leading", "adjacent-swap"}))
      ->capture_default_str();
  add_format(comp, {"json", "text"});
  comp->callback([&] {
    run_orbits(rect_s, types_s, ordering_s, preset_s, format, true);
  });

  CLI::App* ps = app.add_subcommand(
      "parity-scan",
      "Check the parity identities over all triples in a rectangle");
  ps->add_option("--rect", rect_s, "ambient rectangle KxM")->required();
  ps->add_option("--jobs", jobs, "worker threads (0 = all cores)")
      ->capture_default_str();
  add_format(ps, {"json", "text"});
  ps->callback([&] { run_parity_scan(rect_s, jobs, format); });

  CLI::App* kc = app.add_subcommand(
      "kcoeff", "First-order K-theoretic coefficient of a triple");
  kc->add_option("--rect", rect_s, "ambient rectangle KxM")->required();
  kc->add_option("--alpha", alpha_s, "first condition")->required();
  kc->add_option("--beta", beta_s, "second condition")->required();
  kc->add_option("--gamma", gamma_s, "third condition")->required();
  kc->add_flag("--witnesses", witnesses, "list the counted fillings");
  add_format(kc, {"json", "text"});
  kc->callback([&] {
    run_kcoeff(rect_s, alpha_s, beta_s, gamma_s, witnesses, format);
  });

  CLI::App* lr = app.add_subcommand(
      "lrcoeff", "Chain count (Littlewood-Richardson number) of a type list");
  lr->add_option("--rect", rect_s, "ambient rectangle KxM")->required();
  lr->add_option("--inner", inner_s, "inner shape (default empty)");
  lr->add_option("--outer", outer_s, "outer shape (default the rectangle)");
  lr->add_option("--types", types_s, "semicolon-separated types")->required();
  add_format(lr, {"json", "text"});
  lr->callback([&] {
    outer_given = lr->count("--outer") > 0;
    run_lrcoeff(rect_s, inner_s, outer_s, outer_given, types_s, format);
  });

  CLI::App* ve = app.add_subcommand(
      "verify-example", "Recompute a named instance and check its values");
  ve->add_option("id", id_s, "instance id")
      ->required()
      ->check(CLI::IsMember(
          {"g38", "g37", "g48", "g49", "pieri-5-3", "promo-2x2"}));
  add_format(ve, {"json", "text"});
  ve->callback([&] { run_verify_example(id_s, format); });

  CLI::App* xc = app.add_subcommand(
      "export-covering", "Export the box-moving covering of a chain fiber");
  xc->add_option("--rect", rect_s, "ambient rectangle KxM")->required();
  xc->add_option("--types", types_s, "semicolon-separated types")->required();
  add_format(xc, {"json", "dot"});
  xc->callback([&] { run_export_covering(rect_s, types_s, format); });

  CLI::App* oc = app.add_subcommand(
      "osculating-check", "Verify minor and exponent identities at random z");
  oc->add_option("--n", osc_n, "ambient dimension")->capture_default_str();
  oc->add_option("--seed", osc_seed, "random seed")->capture_default_str();
  oc->add_option("--trials", osc_trials, "number of random z values")
      ->capture_default_str();
  oc->add_option("--jobs", jobs, "worker threads (0 = all cores)")
      ->capture_default_str();
  add_format(oc, {"json", "text"});
  oc->callback(
      [&] { run_osculating_check(osc_n, osc_seed, osc_trials, jobs, format); });

  CLI::App* po = app.add_subcommand(
      "promotion-orbits", "Promotion acting on the standard tableaux of a "
                          "rectangle, with the parity cross-check");
  po->add_option("--rect", rect_s, "ambient rectangle KxM")->required();
  add_format(po, {"json", "text"});
  po->callback([&] { run_promotion_orbits(rect_s, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
