#include "generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gen {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

SymmetricSpaceData space(const std::string& name) {
  auto a1 = [](std::size_t n, std::vector<ColorSpec> colors, std::vector<FactorSpec> factors) {
    return SymmetricSpaceData::make(std::move(factors), Matrix::identity(n), std::move(colors));
  };
  if (name == "A1xA1xA1")
    return a1(3, {{0, 1, false}, {1, 1, false}, {2, 1, false}},
              {{{Family::A, 1}, false}, {{Family::A, 1}, false}, {{Family::A, 1}, false}});
  if (name == "A1xA2")
    return a1(3, {{0, 1, false}, {1, 1, false}, {2, 1, false}}, {{{Family::A, 1}, false}, {{Family::A, 2}, false}});
  if (name == "A3") return a1(3, {{0, 1, false}, {1, 1, false}, {2, 1, false}}, {{{Family::A, 3}, false}});
  if (name == "B2") return a1(2, {{0, 1, false}, {1, 1, false}}, {{{Family::B, 2}, false}});
  return builtin_space(name);
}

RationalVec valuation_point(const SymmetricSpaceData& s, Rng& rng, int max_coef, bool interior) {
  const auto cw = s.roots().fundamental_coweights();
  const std::size_t n = s.rank();
  for (;;) {
    RationalVec v = zero_vec(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      const int c = uniform(rng, interior ? 1 : 0, max_coef);
      any = any || c != 0;
      v = axpy(v, Rational(-c), cw[i]);
    }
    if (any) return primitive_in_lattice(v, s.dual_lattice());
  }
}

namespace {

std::vector<ConeQ> star_subdivide(const std::vector<ConeQ>& cones, const RationalVec& v) {
  for (const auto& c : cones)
    for (const auto& r : c.rays())
      if (positively_proportional(r, v)) return cones;
  std::vector<ConeQ> out;
  for (const auto& c : cones) {
    if (!c.contains(v)) {
      out.push_back(c);
      continue;
    }
    for (const auto& f : c.facets()) {
      if (dot(f, v) == 0) continue;
      std::vector<RationalVec> gens{v};
      for (const auto& r : c.rays())
        if (dot(f, r) == 0) gens.push_back(r);
      out.push_back(ConeQ::from_generators(gens, v.size()));
    }
  }
  return out;
}

ColoredFan toric(const SymmetricSpaceData& s, const std::vector<ConeQ>& cones) {
  std::vector<ColoredCone> cc;
  for (const auto& c : cones) cc.push_back({c, {}});
  return ColoredFan(s, std::move(cc));
}

bool good(const ColoredFan& f) { return validate_fan(f).ok() && is_complete(f); }

}  // namespace

ColoredFan toroidal_fan(const SymmetricSpaceData& s, Rng& rng, int steps) {
  std::vector<ConeQ> cones{s.roots().negative_chamber()};
  for (int k = 0; k < steps; ++k) cones = star_subdivide(cones, valuation_point(s, rng, 3));
  ColoredFan f = toric(s, cones);
  if (!good(f)) throw std::logic_error("toroidal_fan produced an invalid fan");
  return f;
}

ColoredFan rank2_colored_fan(const SymmetricSpaceData& s, Rng& rng, int interior_rays, bool both_signs) {
  if (s.rank() != 2) throw std::invalid_argument("rank2_colored_fan needs rank 2");
  const auto cw = s.roots().fundamental_coweights();
  for (int attempt = 0; attempt < 100; ++attempt) {
    // c = (c0, c1) for -c0 ω_0^∨ - c1 ω_1^∨, sorted by c1/c0
    std::set<std::pair<Rational, RationalVec>> interior;
    for (int k = 0; k < interior_rays; ++k) {
      const RationalVec p = valuation_point(s, rng, 4, true);
      const auto& roots = s.roots();
      const Rational a0 = -dot(roots.simple_root(0), p), a1 = -dot(roots.simple_root(1), p);
      interior.insert({a1 / a0, p});
    }
    std::vector<RationalVec> seq{primitive_in_lattice(negate(cw[0]), s.dual_lattice())};
    for (const auto& [key, p] : interior) seq.push_back(p);
    seq.push_back(primitive_in_lattice(negate(cw[1]), s.dual_lattice()));
    // the end at -ω_0^∨ lies on the wall of α_1, so α_1^∨ closes it; symmetric for the other end
    auto end_colors = [&](std::size_t root) {
      std::set<ColorId> out;
      const auto& spec = s.color_spec(root);
      if (spec.multiplicity == 1) {
        out.insert({root, ColorSign::None});
      } else if (both_signs) {
        out.insert({root, ColorSign::Plus});
        out.insert({root, ColorSign::Minus});
      } else {
        out.insert({root, uniform(rng, 0, 1) ? ColorSign::Plus : ColorSign::Minus});
      }
      return out;
    };
    const bool color_start = uniform(rng, 0, 1) == 1, color_end = uniform(rng, 0, 1) == 1;
    std::vector<ColoredCone> cones;
    std::size_t lo = 0, hi = seq.size() - 1;
    if (color_start) {
      ++lo;
      cones.push_back(make_colored_cone(s, {seq[lo]}, end_colors(1)));
    }
    if (color_end) {
      --hi;
      cones.push_back(make_colored_cone(s, {seq[hi]}, end_colors(0)));
    }
    if (lo > hi) continue;
    for (std::size_t i = lo; i < hi; ++i) cones.push_back(make_colored_cone(s, {seq[i], seq[i + 1]}, {}));
    bool pointed = std::all_of(cones.begin(), cones.end(), [](const ColoredCone& c) { return c.cone.is_pointed(); });
    if (!pointed) continue;
    ColoredFan f(s, std::move(cones));
    if (good(f)) return f;
  }
  throw std::logic_error("rank2_colored_fan: no valid fan found");
}

ColoredFan qfactorial_fan(Rng& rng, const std::vector<std::string>& spaces, int max_steps) {
  const auto s = space(spaces[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(spaces.size()) - 1))]);
  if (s.rank() == 2 && uniform(rng, 0, 1)) return rank2_colored_fan(s, rng, uniform(rng, 0, max_steps));
  return toroidal_fan(s, rng, uniform(rng, 0, max_steps));
}

std::optional<ColoredFan> merge_cones(const ColoredFan& fan, Rng& rng, int merges) {
  std::vector<ColoredCone> cones = fan.cones();
  const std::size_t n = fan.space().rank();
  int done = 0;
  for (int round = 0; round < merges; ++round) {
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < cones.size(); ++i)
      for (std::size_t j = i + 1; j < cones.size(); ++j) {
        if (!cones[i].colors.empty() || !cones[j].colors.empty()) continue;
        std::vector<RationalVec> gens = cones[i].cone.rays();
        gens.insert(gens.end(), cones[j].cone.rays().begin(), cones[j].cone.rays().end());
        const ConeQ hull = ConeQ::from_generators(gens, n);
        const ConeQ common = intersect_cones(cones[i].cone, cones[j].cone);
        if (common.dim() + 1 != n || !hull.is_pointed()) continue;
        std::set<RationalVec, LexLess> all(gens.begin(), gens.end());
        if (hull.rays().size() != all.size()) continue;
        if (!union_covers({cones[i].cone, cones[j].cone}, hull)) continue;
        candidates.push_back({i, j});
      }
    if (candidates.empty()) break;
    const auto [i, j] = candidates[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(candidates.size()) - 1))];
    std::vector<RationalVec> gens = cones[i].cone.rays();
    gens.insert(gens.end(), cones[j].cone.rays().begin(), cones[j].cone.rays().end());
    ColoredCone merged{ConeQ::from_generators(gens, n), {}};
    cones.erase(cones.begin() + static_cast<long>(j));
    cones[i] = merged;
    ++done;
  }
  if (done == 0) return std::nullopt;
  ColoredFan f(fan.space(), std::move(cones));
  if (!good(f)) throw std::logic_error("merge_cones produced an invalid fan");
  return f;
}

BDivisor random_divisor(const ColoredFan& fan, Rng& rng, int lo, int hi, bool gstable) {
  BDivisor d;
  for (const auto& r : fan.rays()) d.rays[r.id] = uniform(rng, lo, hi);
  if (!gstable)
    for (const auto& c : fan.space().colors()) d.colors[c] = uniform(rng, lo, hi);
  return d.normalized();
}

BDivisor nef_gstable_divisor(const ColoredFan& fan, Rng& rng) {
  // b_E = <u, v_E> with u antidominant: one linear piece, so nef
  BDivisor linear;
  RationalVec u;
  for (std::size_t i = 0; i < fan.space().rank(); ++i) u.push_back(uniform(rng, 0, 1) ? 0 : -uniform(rng, 1, 3));
  for (const auto& r : fan.rays()) linear.rays[r.id] = dot(u, r.generator);
  BDivisor sampled;
  for (int attempt = 0; attempt < 40; ++attempt) {
    BDivisor d = random_divisor(fan, rng, 0, attempt < 20 ? 2 : 4, true);
    if (is_nef(fan, d)) {
      sampled = d;
      break;
    }
  }
  switch (uniform(rng, 0, 2)) {
    case 0:
      return linear.normalized();
    case 1:
      return sampled;
    default:
      return (linear + sampled).normalized();
  }
}

PolytopeQ random_polytope(std::size_t dim, Rng& rng, int r, int points) {
  for (;;) {
    std::vector<RationalVec> pts;
    for (int k = 0; k < points; ++k) {
      RationalVec p;
      for (std::size_t i = 0; i < dim; ++i) p.push_back(uniform(rng, -r, r));
      pts.push_back(p);
    }
    PolytopeQ p = PolytopeQ::convex_hull(pts, dim);
    if (p.dim() == static_cast<int>(dim)) return p;
  }
}

std::vector<RationalVec> random_push_order(const PolytopeQ& p, Rng& rng) {
  std::vector<RationalVec> order = p.vertices();
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<RationalVec> extra;
  for (const auto& x : lattice_points(p, Matrix::identity(p.ambient_dim())))
    if (std::find(order.begin(), order.end(), x) == order.end() && uniform(rng, 0, 3) == 0) extra.push_back(x);
  for (const auto& x : extra) {
    const auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(order.size())));
    order.insert(order.begin() + static_cast<long>(pos), x);
  }
  return order;
}

}  // namespace gen
