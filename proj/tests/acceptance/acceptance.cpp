// Property suites 1-10, exact arithmetic throughout. One line per criterion; exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "symvar/oracles.hpp"
#include "symvar/qfactorialize.hpp"

using namespace symvar;

namespace {

struct Tally {
  std::size_t runs = 0;
  std::size_t failures = 0;
  std::string first_failure;
  void check(bool ok, const std::string& what) {
    ++runs;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

std::string describe(const ColoredFan& fan) {
  std::ostringstream os;
  os << "space rank " << fan.space().rank() << ", cones:";
  for (const auto& c : fan.cones()) {
    os << " [";
    for (const auto& r : c.cone.rays()) os << to_string(r);
    for (const auto& col : c.colors) os << " " << col.name();
    os << "]";
  }
  return os.str();
}

std::string describe(const BDivisor& d) {
  std::ostringstream os;
  for (const auto& [c, x] : d.normalized().colors) os << " " << to_string(x) << "*" << c.name();
  for (const auto& [r, x] : d.normalized().rays) os << " " << to_string(x) << "*" << r;
  return os.str().empty() ? " 0" : os.str();
}

bool proportional(const RationalVec& a, const RationalVec& b) {
  return !is_zero(a) && !is_zero(b) && rank({a, b}, a.size()) == 1;
}

std::vector<RationalVec> prime_classes(const ColoredFan& fan) {
  std::vector<RationalVec> out;
  for (const auto& n : prime_divisor_names(fan)) out.push_back(divisor_class(fan, prime_divisor(fan, n)));
  return out;
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long>(k);
  return f;
}

const std::vector<std::string> kToroidalSpaces{"A1-rank1", "A1xA1", "A2", "BC1-exceptional", "A1xBC1"};
const std::vector<std::string> kQFactorialSpaces{"A1-rank1", "BC1-exceptional", "A1xA1", "A2", "A1xBC1", "B2", "A1xA1xA1"};

std::vector<ColoredFan> qfactorial_instances(gen::Rng& rng, std::size_t count) {
  std::vector<ColoredFan> out;
  while (out.size() < count) out.push_back(gen::qfactorial_fan(rng, kQFactorialSpaces, 3));
  return out;
}

ColoredFan standard(const std::string& name) {
  const auto s = gen::space(name);
  return ColoredFan(s, {make_colored_cone(s, s.roots().negative_chamber().rays(), {})});
}

// ---- criteria ----

Tally rank_one_trichotomy(gen::Rng&) {
  Tally t;
  const ColoredFan fan = standard("A1-rank1");
  for (long b = -2; b <= 5; ++b) {
    BDivisor d;
    d.rays["r0"] = b;
    const bool nef = is_nef(fan, d);
    const bool big_nef = nef && is_big_nef(fan, d);
    const std::string w = "b = " + std::to_string(b);
    t.check(is_ample(fan, d) == (b > 0), w + ": ample");
    t.check(nef == (b >= 0), w + ": nef");
    t.check(big_nef == (b > 0), w + ": big and nef");
  }
  return t;
}

Tally bigness_equivalence(gen::Rng& rng) {
  Tally t;
  for (int k = 0; k < 240; ++k) {
    const auto s = gen::space(kToroidalSpaces[static_cast<std::size_t>(k) % kToroidalSpaces.size()]);
    const ColoredFan fan = gen::toroidal_fan(s, rng, gen::uniform(rng, 0, 3));
    const BDivisor d = Rational(1, gen::uniform(rng, 1, 3)) * gen::nef_gstable_divisor(fan, rng);
    const bool big = is_big_nef(fan, d);
    const Rational vol = toric_volume(fan, d);
    t.check(big == (vol > 0), describe(fan) + " D =" + describe(d) + " volume " + to_string(vol));
  }
  return t;
}

Tally effective_cone_generators(gen::Rng& rng) {
  Tally t;
  for (const auto& fan : qfactorial_instances(rng, 120)) {
    const auto e = effective_cone(fan);
    auto brute = brute_extremal_rays(e.classes).rays;
    auto fast = e.ray_members;
    std::sort(brute.begin(), brute.end());
    std::sort(fast.begin(), fast.end());
    bool ok = brute == fast;
    std::set<std::size_t> predicted(e.predicted.begin(), e.predicted.end());
    std::set<std::size_t> on_rays;
    for (const auto& ray : brute) {
      std::size_t hits = 0;
      for (auto i : ray) {
        on_rays.insert(i);
        hits += predicted.count(i);
      }
      ok = ok && hits == 1;
    }
    for (auto i : predicted) ok = ok && on_rays.count(i) == 1;
    t.check(ok && e.matches_prediction, describe(fan));
    // E extremal with no color class on its ray iff h0(mE) is spanned by the constants, m <= 5
    const std::size_t colors = fan.space().colors().size();
    for (std::size_t i = colors; i < e.generators.size(); ++i) {
      bool lonely = false;
      for (const auto& ray : brute)
        if (std::find(ray.begin(), ray.end(), i) != ray.end())
          lonely = std::none_of(ray.begin(), ray.end(), [&](std::size_t j) { return j < colors; });
      bool constants = true;
      for (long m = 1; m <= 5; ++m) {
        BDivisor d;
        d.rays[e.generators[i]] = m;
        constants = constants && h0_highest_weights(fan, d) == std::vector<RationalVec>{zero_vec(fan.space().rank())};
      }
      t.check(lonely == constants, describe(fan) + " " + e.generators[i] + ": sections of mE");
    }
  }
  return t;
}

Tally proportionality(gen::Rng& rng) {
  Tally t;
  std::size_t proportional_cases = 0;
  for (const auto& fan : qfactorial_instances(rng, 120)) {
    const auto& roots = fan.space().roots();
    const auto coweights = roots.fundamental_coweights();
    for (std::size_t i = 0; i < fan.rays().size(); ++i) {
      const RationalVec cls = divisor_class(fan, prime_divisor(fan, fan.rays()[i].id));
      std::set<std::size_t> claimed;
      const auto factors = proportional_to_color(fan, i);
      for (const auto& f : factors) claimed.insert(f.begin(), f.end());
      for (std::size_t a = 0; a < fan.space().rank(); ++a) {
        const bool direct = proportional(cls, color_pair_class(fan, a));
        t.check(direct == (claimed.count(a) > 0), describe(fan) + " ray " + fan.rays()[i].id + " root " + std::to_string(a));
        proportional_cases += direct;
      }
      if (is_toroidal(fan))
        for (const auto& f : factors) {
          bool coweight = false;
          for (auto a : f) coweight = coweight || positively_proportional(negate(fan.rays()[i].generator), coweights[a]);
          t.check(coweight, describe(fan) + " ray " + fan.rays()[i].id + ": -v_E is not a fundamental coweight direction");
        }
    }
  }
  t.check(proportional_cases > 0, "no proportional case was generated");
  return t;
}

Tally big_cone_grid(gen::Rng& rng) {
  Tally t;
  for (const auto& fan : qfactorial_instances(rng, 8)) {
    const auto gens = prime_classes(fan);
    const std::size_t d = gens.front().size();
    const auto k = static_cast<std::size_t>(std::ceil(std::pow(1000.0, 1.0 / static_cast<double>(d)) - 1e-9));
    const std::size_t total = static_cast<std::size_t>(std::pow(static_cast<double>(k), static_cast<double>(d)) + 0.5);
    for (std::size_t idx = 0; idx < total; ++idx) {
      RationalVec c;
      std::size_t rest = idx;
      for (std::size_t j = 0; j < d; ++j) {
        // k values spread over [-2, 3]
        c.push_back(Rational(-2) + Rational(static_cast<long>(5 * (rest % k)), static_cast<long>(k - 1 == 0 ? 1 : k - 1)));
        rest /= k;
      }
      t.check(big_cone_membership(fan, c) == brute_in_interior(gens, c), describe(fan) + " class " + to_string(c));
    }
  }
  return t;
}

Tally restriction_kernel(gen::Rng& rng) {
  Tally t;
  for (int k = 0; k < 16; ++k) {
    const auto s = gen::space(k % 2 ? "A1xBC1" : "BC1-exceptional");
    const ColoredFan fan = gen::toroidal_fan(s, rng, gen::uniform(rng, 0, 3));
    for (const auto& kd : restriction_kernel_basis(fan)) t.check(slice_restriction_class(fan, kd).is_zero(), describe(fan) + " kernel" + describe(kd));
    for (int trial = 0; trial < 60; ++trial) {
      BDivisor d = gen::random_divisor(fan, rng, -2, 2, true);
      if (d.rays.empty()) continue;
      t.check(!slice_restriction_class(fan, d).is_zero(), describe(fan) + " G-stable" + describe(d) + " restricts to 0");
    }
  }
  const ColoredFan mixed = standard("A1xBC1");
  auto colors = [](std::initializer_list<std::pair<const char*, long>> xs) {
    BDivisor d;
    for (auto [n, x] : xs) d.colors[ColorId::parse(n)] = x;
    return d;
  };
  const BDivisor not_big = colors({{"F0", 1}, {"F1+", 3}, {"F1-", -1}});
  const BDivisor companion = colors({{"F0", 1}, {"F1+", 1}, {"F1-", 1}});
  t.check(!is_big(mixed, not_big), "F0 + 3F1+ - F1- classified big");
  t.check(is_big(mixed, companion), "F0 + F1+ + F1- classified not big");
  BDivisor diff = not_big - companion;
  t.check(proportional(divisor_class(mixed, diff), divisor_class(mixed, colors({{"F1+", 1}, {"F1-", -1}}))),
          "the two divisors do not differ by a kernel element");
  t.check(slice_restriction_class(mixed, not_big) == slice_restriction_class(mixed, companion), "restrictions differ");
  return t;
}

bool subdivision_axioms(const PolytopeQ& p, const Triangulation& tri, std::string& why) {
  const std::size_t d = p.ambient_dim();
  Rational total = 0;
  std::set<RationalVec, LexLess> used;
  for (const auto& s : tri.simplices) {
    std::vector<RationalVec> pts;
    for (auto i : s) pts.push_back(tri.points[i]);
    if (pts.size() != d + 1) return why = "simplex with wrong vertex count", false;
    const Rational vol = simplex_volume(pts);
    if (vol == 0) return why = "degenerate simplex", false;
    for (const auto& x : pts)
      if (!p.contains(x)) return why = "simplex vertex outside P", false;
    total += vol;
    used.insert(pts.begin(), pts.end());
  }
  for (const auto& v : p.vertices())
    if (!used.count(v)) return why = "vertex of P unused", false;
  if (total != polytope_volume(p, Matrix::identity(d))) return why = "volumes do not add up", false;
  for (std::size_t a = 0; a < tri.simplices.size(); ++a)
    for (std::size_t b = a + 1; b < tri.simplices.size(); ++b) {
      std::vector<RationalVec> pa, pb, common;
      for (auto i : tri.simplices[a]) pa.push_back(tri.points[i]);
      for (auto i : tri.simplices[b]) pb.push_back(tri.points[i]);
      for (const auto& x : pa)
        if (std::find(pb.begin(), pb.end(), x) != pb.end()) common.push_back(x);
      const PolytopeQ meet = intersect(PolytopeQ::convex_hull(pa, d), PolytopeQ::convex_hull(pb, d));
      const PolytopeQ face = common.empty() ? PolytopeQ::empty(d) : PolytopeQ::convex_hull(common, d);
      if (meet.vertices() != face.vertices()) return why = "two simplices meet outside a common face", false;
    }
  return true;
}

Tally pushing_triangulation(gen::Rng& rng) {
  Tally t;
  for (int k = 0; k < 120; ++k) {
    const std::size_t d = k % 2 ? 3 : 2;
    const PolytopeQ p = gen::random_polytope(d, rng, 3, d == 2 ? 7 : 8);
    const auto order = gen::random_push_order(p, rng);
    const auto tri = push_triangulate(p, order);
    std::string why;
    const bool ok = subdivision_axioms(p, tri, why);
    t.check(ok, "polytope with " + std::to_string(p.vertices().size()) + " vertices in dimension " + std::to_string(d) + ": " + why);
  }
  std::size_t done = 0;
  for (int k = 0; done < 24 && k < 200; ++k) {
    std::optional<ColoredFan> input;
    if (k % 2 == 0) {
      input = gen::rank2_colored_fan(gen::space("A1xBC1"), rng, gen::uniform(rng, 1, 3), true);
      if (is_qfactorial(*input)) continue;
    } else {
      const char* names[] = {"A1xA1xA1", "A3", "A1xA2"};
      const auto s = gen::space(names[(k / 2) % 3]);
      input = gen::merge_cones(gen::toroidal_fan(s, rng, gen::uniform(rng, 2, 4)), rng, gen::uniform(rng, 1, 3));
      if (!input || is_qfactorial(*input) || !find_ample_divisor(*input)) continue;
    }
    ++done;
    try {
      const auto q = qfactorialize(*input);
      bool ok = is_qfactorial(q.fan) && validate_fan(q.fan).ok();
      std::vector<ConeQ> out_cones, in_cones;
      for (const auto& c : q.fan.cones()) out_cones.push_back(c.cone);
      for (const auto& c : input->cones()) in_cones.push_back(c.cone);
      for (const auto& c : q.fan.cones()) ok = ok && containing_cone(*input, c.cone).has_value();
      for (const auto& c : input->cones()) ok = ok && union_covers(out_cones, c.cone);
      t.check(ok, "qfactorialize output fails a check on " + describe(*input));
    } catch (const PreconditionError& e) {
      t.check(false, std::string(e.what()) + " on " + describe(*input));
    }
  }
  t.check(done >= 20, "fewer than 20 non-Q-factorial inputs generated");
  return t;
}

Tally moment_polytope_identity(gen::Rng& rng) {
  Tally t;
  const std::vector<std::string> spaces{"A1-rank1", "A1xA1", "A2", "BC1-exceptional", "A1xBC1", "B2", "A1xA1xA1"};
  for (int k = 0; k < 70; ++k) {
    const auto s = gen::space(spaces[static_cast<std::size_t>(k) % spaces.size()]);
    const ColoredFan fan = gen::toroidal_fan(s, rng, gen::uniform(rng, 0, 3));
    const BDivisor d = gen::nef_gstable_divisor(fan, rng);
    const auto& lat = s.lattice();
    const auto lhs = lattice_points(moment_polytope(fan, d), lat);
    std::vector<RationalVec> rhs;
    for (const auto& x : lattice_points(weight_polytope(fan, d), lat))
      if (std::all_of(x.begin(), x.end(), [](const Rational& c) { return c >= 0; })) rhs.push_back(x);
    std::sort(rhs.begin(), rhs.end());
    t.check(lhs == rhs, describe(fan) + " D =" + describe(d));
  }
  return t;
}

Tally closure(gen::Rng&) {
  Tally t;
  const std::map<std::string, std::vector<bool>> expected{{"A1-rank1", {true}},
                                                          {"A1xA1", {true, true}},
                                                          {"BC1-exceptional", {false}},
                                                          {"A2", {true}},
                                                          {"A1xBC1", {true, false}}};
  std::vector<SymmetricSpaceData> spaces;
  for (const auto& n : builtin_space_names()) spaces.push_back(builtin_space(n));
  spaces.push_back(SymmetricSpaceData::make({{{Family::A, 1}, false}}, Matrix::identity(1), {{0, 2, false}}));
  for (const auto& s : spaces) {
    const auto once = spherical_closure(s);
    const auto twice = spherical_closure(once.space);
    t.check(once.space == twice.space && once.closed == twice.closed, "closure not idempotent");
    const auto parts = s.factor_partition();
    for (std::size_t f = 0; f < parts.size(); ++f) {
      const bool extra = s.factors()[f].extra_color;
      t.check(once.closed[f] == !extra, "closure flag of factor " + std::to_string(f));
      for (auto a : parts[f]) {
        const auto& before = s.color_spec(a);
        const auto& after = once.space.color_spec(a);
        if (extra || before.exceptional)
          t.check(before == after, "factor with extra colors changed");
        else
          t.check(after.multiplicity == 1, "multiplicity did not collapse");
      }
    }
  }
  for (const auto& [name, flags] : expected) t.check(spherical_closure(builtin_space(name)).closed == flags, name + " flags");
  t.check(spherical_closure(spaces.back()).space.color_spec(0).multiplicity == 1, "doubled A1 did not collapse");
  return t;
}

Tally oracle_agreement(gen::Rng& rng) {
  Tally t;
  const std::vector<std::string> rank2{"A1xA1", "A2", "A1xBC1", "B2"};
  for (int k = 0; k < 100; ++k) {
    const auto s = gen::space(rank2[static_cast<std::size_t>(k) % rank2.size()]);
    const ColoredFan fan = gen::toroidal_fan(s, rng, gen::uniform(rng, 0, 3));
    const BDivisor d = gen::nef_gstable_divisor(fan, rng);
    const PolytopeQ q = weight_polytope(fan, d);
    t.check(polytope_volume(q, s.lattice()) == brute_volume(q, s.lattice()), "volume of Q(D) on " + describe(fan) + describe(d));
    t.check(toric_volume(fan, d) == factorial(2) * brute_volume(q, s.lattice()), "normalized volume on " + describe(fan));
    t.check(lattice_points(q, s.lattice()) == brute_lattice_point_list(q, s.lattice()), "lattice points of Q(D) on " + describe(fan));
  }
  for (int k = 0; k < 100; ++k) {
    const ColoredFan fan = gen::qfactorial_fan(rng, kQFactorialSpaces, 3);
    const BDivisor d = gen::random_divisor(fan, rng, -1, 3, false);
    const PolytopeQ p = moment_polytope(fan, d);
    if (p.is_bounded())
      t.check(lattice_points(p, fan.space().lattice()) == brute_lattice_point_list(p, fan.space().lattice()),
              "lattice points of P(D) on " + describe(fan) + describe(d));
    const auto a = find_ample_divisor(fan);
    if (!a) {
      t.check(false, "no ample divisor on " + describe(fan));
      continue;
    }
    const BigVerdict brute = brute_big_test(fan, d, l1_normalized(*a));
    t.check(brute != BigVerdict::Undecided && is_big(fan, d) == (brute == BigVerdict::Big),
            "bigness of" + describe(d) + " on " + describe(fan) + ": oracle says " + to_string(brute));
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20261014;
  const std::vector<std::pair<std::string, std::function<Tally(gen::Rng&)>>> suites{
      {"rank-1 trichotomy", rank_one_trichotomy},
      {"big and nef iff positive volume", bigness_equivalence},
      {"effective cone generators", effective_cone_generators},
      {"proportionality to colors", proportionality},
      {"big cone is the interior of Eff", big_cone_grid},
      {"kernel of the slice restriction", restriction_kernel},
      {"pushing triangulation and Q-factorialization", pushing_triangulation},
      {"P(D) = C+ ∩ Q(D) on lattice points", moment_polytope_identity},
      {"spherical closure", closure},
      {"oracle agreement", oracle_agreement}};
  bool all = true;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    gen::Rng rng(seed + i);
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = suites[i].second(rng);
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = secs >= 60.0;
    const bool pass = t.failures == 0 && t.runs > 0 && !slow;
    all = all && pass;
    std::printf("criterion %zu %s: %s (%zu/%zu checks, %.1f s)%s%s\n", i + 1, suites[i].first.c_str(),
                pass ? "PASS" : "FAIL", t.runs - t.failures, t.runs, secs, slow ? " over the 60 s budget" : "",
                t.failures ? (" first failure: " + t.first_failure).c_str() : "");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
