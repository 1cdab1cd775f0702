#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "capgeom/caps.hpp"
#include "capgeom/error.hpp"
#include "capgeom/group_orbits.hpp"
#include "capgeom/known_caps.hpp"
#include "capgeom/point_file.hpp"
#include "capgeom/singer.hpp"
#include "capgeom/verifier.hpp"

using namespace capgeom;

namespace {

std::string vec_str(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string triple_str(const ProjectiveSpace& space, const Triple& t) {
  return "(" + vec_str(space.point(t[0])) + ") (" + vec_str(space.point(t[1])) + ") (" +
         vec_str(space.point(t[2])) + ")";
}

int run_construct(const std::string& name, const ConstructionParams& params) {
  auto c = construct_by_name(name, params);
  std::cout << "# " << c.descriptor.name << ": " << c.descriptor.claim << "\n";
  std::cout << "# " << c.points.size() << " points, expected " << c.descriptor.expected_size.str() << "\n";
  write_point_file(std::cout, *c.space, c.points);
  return 0;
}

int run_check(const std::string& path) {
  auto file = read_point_file(path);
  auto s = file.set();
  auto cap = is_cap(s);
  if (!cap.is_cap) {
    std::cout << "not a cap: " << triple_str(*file.space, *cap.witness) << " are collinear\n";
    return 1;
  }
  std::cout << "cap of size " << s.size() << " in " << file.space->name()
            << (is_complete(s) ? ", complete\n" : ", not complete\n");
  return 0;
}

int run_chord(const std::string& path) {
  auto file = read_point_file(path);
  auto s = file.set();
  auto cap = is_cap(s);
  if (!cap.is_cap) {
    std::cout << "not a cap: " << triple_str(*file.space, *cap.witness) << " are collinear\n";
    return 1;
  }
  auto profile = chord_profile(s);
  auto verdict = cotransitivity_necessary(s);
  std::cout << "external points: " << profile.external.size() << "\n"
            << "chord numbers: " << profile.min << ".." << profile.max
            << (profile.is_constant() ? " (constant)\n" : "\n")
            << "k(k-1)(q-1)/2m = " << verdict.expected.str() << "\n"
            << "sum = " << profile.total().str() << "\n"
            << "co-transitivity necessary condition: " << (verdict.pass ? "holds" : "fails") << "\n";
  return 0;
}

int run_singer(int r, std::uint32_t q, std::uint64_t N) {
  ProjectiveSpace space(Field::of_order(q), r);
  auto cycle = build_singer(space);
  auto part = subgroup_orbits(cycle, N);
  auto verdicts = orbit_cap_filter(space, part);
  std::cout << space.name() << ": n = " << cycle.n << ", polynomial";
  for (Elem c : cycle.polynomial) std::cout << ' ' << c;
  std::cout << "\n" << part.size() << " orbits of size " << cycle.n / N << "\n";
  std::size_t caps = 0;
  for (std::size_t i = 0; i < part.size(); ++i) {
    caps += verdicts[i].is_cap;
    std::cout << "orbit " << i << " (from point " << part.orbits[i][0] << "): "
              << (verdicts[i].is_cap ? "cap" : "not a cap") << "\n";
  }
  std::cout << caps << "/" << part.size() << " orbits are caps\n";
  return 0;
}

int run_search(int r, std::uint32_t q, std::size_t limit) {
  ProjectiveSpace space(Field::of_order(q), r);
  auto res = complete_cap_search(space, limit);
  auto bound = cap_size_bound(r, q);
  std::cout << space.name() << ": largest cap " << res.max_size << " (" << res.nodes << " nodes), table "
            << (bound.exact ? "= " : "<= ") << bound.value.str() << "\n";
  write_point_file(std::cout, space, res.example);
  return 0;
}

int run_verify(bool json, const VerifierLimits& limits, unsigned workers) {
  auto report = verify_paper(limits, workers);
  std::cout << (json ? to_json(report) : to_text(report));
  return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Caps in finite projective spaces"};
  app.require_subcommand(1);

  std::string name;
  ConstructionParams params;
  auto* construct = app.add_subcommand("construct", "Print a named point set");
  construct->add_option("name", name, "Construction name")->required()->check(CLI::IsMember(construction_names()));
  construct->add_option("--q", params.q, "Field order");
  construct->add_option("--r", params.r, "Projective dimension");
  construct->add_option("--b", params.b, "t for direct-sum, b for tensor");
  construct->add_option("--s", params.s, "Subfield order");
  construct->add_option("--a", params.a, "Vector dimension");

  std::string points;
  auto* check = app.add_subcommand("check", "Test a point file for the cap property");
  check->add_option("--points", points, "Point file")->required();
  auto* chord = app.add_subcommand("chord", "Chord profile of a cap");
  chord->add_option("--points", points, "Point file")->required();

  int r = 0;
  std::uint32_t q = 0;
  std::uint64_t N = 1;
  auto* singer = app.add_subcommand("singer", "Orbits of a Singer subgroup");
  singer->add_option("--r", r)->required();
  singer->add_option("--q", q)->required();
  singer->add_option("--N", N)->required();

  VerifierLimits limits;
  try {
    limits = limits_from_env();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto* search = app.add_subcommand("search", "Largest cap by exhaustive search");
  search->add_option("--r", r)->required();
  search->add_option("--q", q)->required();
  search->add_option("--limit", limits.search_points, "Largest space searched");

  bool json = false, text = false;
  unsigned workers = 1;
  auto* verify = app.add_subcommand("verify-paper", "Run every check");
  auto* json_flag = verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--text", text, "Text report (default)")->excludes(json_flag);
  verify->add_option("--limit", limits.brute_force, "Brute-force group size limit");
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 64u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct) return run_construct(name, params);
    if (*check) return run_check(points);
    if (*chord) return run_chord(points);
    if (*singer) return run_singer(r, q, N);
    if (*search) return run_search(r, q, limits.search_points);
    if (*verify) return run_verify(json, limits, workers);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
