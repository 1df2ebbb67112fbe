#include "symvar/qfactorialize.hpp"

#include <algorithm>

#include "symvar/triangulation.hpp"

namespace symvar {

namespace {

[[noreturn]] void fail(const std::string& step, const std::string& why) {
  throw PreconditionError("qfactorialize, " + step + ": " + why);
}

std::set<std::size_t> color_roots(const std::set<ColorId>& colors) {
  std::set<std::size_t> out;
  for (const auto& c : colors) out.insert(c.root);
  return out;
}

// F_α, or F_α+ + F_α− when the fibre has two colors.
BDivisor color_sum(const SymmetricSpaceData& space, std::size_t root) {
  BDivisor d;
  if (space.color_spec(root).multiplicity == 2) {
    d.colors[{root, ColorSign::Plus}] = 1;
    d.colors[{root, ColorSign::Minus}] = 1;
  } else {
    d.colors[{root, ColorSign::None}] = 1;
  }
  return d;
}

bool zero_interior(const PolytopeQ& p, std::size_t n) {
  return p.dim() == static_cast<int>(n) && p.contains_in_interior(zero_vec(n));
}

}  // namespace

ColoredFan symmetrize_colors(const ColoredFan& fan) {
  const auto all = fan.space().colors();
  std::vector<ColoredCone> cones;
  for (const auto& c : fan.cones()) {
    ColoredCone s{c.cone, {}};
    const auto roots = color_roots(c.colors);
    for (const auto& col : all)
      if (roots.count(col.root)) s.colors.insert(col);
    cones.push_back(std::move(s));
  }
  return ColoredFan(fan.space(), std::move(cones));
}

QFactorialization qfactorialize(const ColoredFan& fan, const std::optional<BDivisor>& ample_hint) {
  const auto& space = fan.space();
  const std::size_t n = space.rank();
  if (!validate_fan(fan).ok()) fail("input", "fan is not valid");
  if (!is_complete(fan)) fail("input", "fan is not complete");
  const ColoredFan tilde = symmetrize_colors(fan);
  QFactorialization out{fan, {}, {}, {}, 1, {}};

  // Ample divisor on X.
  if (ample_hint) {
    check_divisor(fan, *ample_hint);
    if (!is_ample(fan, *ample_hint)) fail("ample divisor", "the hint is not ample");
    out.ample_input = *ample_hint;
    out.log.push_back("ample divisor taken from the hint");
  } else {
    auto a = find_ample_divisor(fan);
    if (!a) fail("ample divisor", "no ample divisor exists, the input is not projective");
    out.ample_input = *a;
    out.log.push_back("ample divisor found by linear programming");
  }

  // D' = D1 + D2 + D3 up to div(m); D'' keeps D1 and symmetrizes the survivors lying in F(X).
  const ReducedDivisor red = reduce_star(fan, out.ample_input);
  const auto fan_roots = color_roots(fan.fan_colors());
  const auto tilde_roots = color_roots(tilde.fan_colors());
  BDivisor d2 = red.d1;
  for (const auto& [c, x] : red.d2.colors)
    if (fan.fan_colors().count(c)) d2 = d2 + x * color_sum(space, c.root);
  if (!is_ample(tilde, d2)) fail("D''", "not ample on the symmetrized fan");
  BDivisor d3 = d2;
  for (std::size_t a = 0; a < n; ++a)
    if (!tilde_roots.count(a)) d3 = d3 + color_sum(space, a);
  if (!is_ample(tilde, d3)) fail("D'''", "not ample on the symmetrized fan");
  RationalVec m3 = zero_vec(n);
  for (const auto& c : space.color_specs()) {
    if (c.multiplicity == 2 &&
        d3.color({c.root, ColorSign::Plus}) != d3.color({c.root, ColorSign::Minus}))
      fail("D'''", "not linearly equivalent to a G-stable divisor");
    m3[c.root] = d3.color({c.root, c.multiplicity == 2 ? ColorSign::Plus : ColorSign::None});
  }
  const BDivisor d4 = d3 - principal_divisor_q(tilde, m3);
  for (const auto& r : fan.rays())
    if (d4.ray(r.id) <= 0) fail("D4", "coefficient of " + r.id + " is not positive");

  BDivisor correction;
  for (std::size_t a = 0; a < n; ++a) {
    correction = correction + color_sum(space, a);
    if (tilde_roots.count(a))
      for (const auto& r : fan.rays()) correction.rays[r.id] -= r.generator[a];
  }
  correction = correction.normalized();
  std::optional<BDivisor> chosen;
  for (std::size_t k = 1; k <= (std::size_t{1} << 20); k *= 2) {
    const BDivisor d = Rational(static_cast<long>(k)) * d4 + correction;
    if (zero_interior(moment_polytope(tilde, d), n) && is_ample(tilde, d)) {
      chosen = d;
      out.scale = k;
      break;
    }
  }
  if (!chosen) fail("n·D4 + correction", "0 never became interior to P(D)");
  out.polytope_divisor = *chosen;

  // Polar polytope, pushed with 0 first and the vertices in lexicographic order.
  const PolytopeQ p = polar_polytope(moment_polytope(tilde, *chosen));
  if (!p.is_bounded()) fail("polar polytope", "unbounded");
  std::vector<RationalVec> order{zero_vec(n)};
  for (const auto& v : p.vertices()) order.push_back(v);
  const Triangulation t = push_triangulate(p, order);
  const ConeQ valuation = space.roots().negative_chamber();

  struct Piece {
    std::vector<RationalVec> gens;
    ConeQ cone;
    std::size_t host;
  };
  std::vector<Piece> pieces;
  std::vector<std::size_t> full;
  for (std::size_t k = 0; k < fan.cones().size(); ++k)
    if (fan.cones()[k].cone.is_full_dimensional()) full.push_back(k);
  for (const auto& s : boundary_simplices(t)) {
    std::vector<RationalVec> gens;
    for (auto i : s) gens.push_back(t.points[i]);
    ConeQ c = ConeQ::from_generators(gens, n);
    if (!relint_meets_valuation_cone(c, valuation)) continue;
    auto host = std::find_if(full.begin(), full.end(), [&](std::size_t k) { return fan.cones()[k].cone.contains(c); });
    if (host == full.end()) fail("colors", "a simplex cone lies in no maximal cone of the input");
    pieces.push_back({std::move(gens), std::move(c), *host});
  }

  // One color per root, the same one for every simplex; F+ preferred.
  std::map<std::size_t, std::set<ColorId>> allowed;
  for (const auto& pc : pieces)
    for (const auto& g : pc.gens)
      for (std::size_t a = 0; a < n; ++a) {
        if (!positively_proportional(g, space.roots().simple_coroot(a))) continue;
        std::set<ColorId> here;
        for (const auto& c : fan.cones()[pc.host].colors)
          if (c.root == a) here.insert(c);
        auto it = allowed.find(a);
        if (it == allowed.end()) {
          allowed[a] = here;
        } else {
          std::set<ColorId> both;
          std::set_intersection(it->second.begin(), it->second.end(), here.begin(), here.end(),
                                std::inserter(both, both.begin()));
          it->second = both;
        }
      }
  std::map<std::size_t, ColorId> choice;
  for (const auto& [a, cs] : allowed) {
    if (cs.empty()) fail("colors", "no consistent color over root " + std::to_string(a));
    choice[a] = cs.count({a, ColorSign::Plus}) ? ColorId{a, ColorSign::Plus} : *cs.begin();
  }

  std::vector<ColoredCone> cones;
  for (const auto& pc : pieces) {
    ColoredCone cc{pc.cone, {}};
    for (const auto& g : pc.gens)
      for (const auto& [a, c] : choice)
        if (positively_proportional(g, space.roots().simple_coroot(a))) cc.colors.insert(c);
    cones.push_back(std::move(cc));
  }
  std::sort(cones.begin(), cones.end(), [](const ColoredCone& a, const ColoredCone& b) {
    return a.cone.rays() < b.cone.rays() || (a.cone.rays() == b.cone.rays() && a.colors < b.colors);
  });
  out.fan = ColoredFan(space, std::move(cones));

  // Checks on the result.
  const auto report = validate_fan(out.fan);
  if (!report.ok()) fail("result", "not a valid colored fan: " + report.summary());
  if (!is_qfactorial(out.fan)) fail("result", "not Q-factorial");
  for (const auto& c : out.fan.cones())
    if (!containing_cone(fan, c.cone)) fail("result", "a cone is not contained in an input cone");
  std::vector<ConeQ> new_cones;
  for (const auto& c : out.fan.cones()) new_cones.push_back(c.cone);
  for (auto k : full)
    if (!union_covers(new_cones, fan.cones()[k].cone)) fail("result", "support differs from the input");
  if (out.fan.rays().size() != fan.rays().size()) fail("result", "the G-stable rays changed");
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    if (out.fan.rays()[i].generator != fan.rays()[i].generator) fail("result", "the G-stable rays changed");
    out.identification[fan.rays()[i].id] = out.fan.rays()[i].id;
  }
  for (const auto& c : space.colors()) out.identification[c.name()] = c.name();
  return out;
}

}  // namespace symvar
