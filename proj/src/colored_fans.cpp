#include "symvar/colored_fans.hpp"

#include <algorithm>

#include "symvar/lp.hpp"

namespace symvar {

ColoredCone make_colored_cone(const SymmetricSpaceData& space, const std::vector<RationalVec>& rays,
                              const std::set<ColorId>& colors) {
  std::vector<RationalVec> gens = rays;
  for (const auto& c : colors) gens.push_back(color_image(space, c));
  return {ConeQ::from_generators(gens, space.rank()), colors};
}

RationalVec primitive_in_lattice(const RationalVec& v, const Matrix& basis) {
  const Matrix inv = inverse(basis);
  const RationalVec c = primitive_direction(inv.apply_left(v));
  return basis.apply_left(c);
}

ColoredFan::ColoredFan(SymmetricSpaceData space, std::vector<ColoredCone> cones)
    : space_(std::move(space)), cones_(std::move(cones)) {
  for (const auto& c : cones_)
    if (c.cone.ambient_dim() != space_.rank()) throw InputError("colored cone has wrong ambient dimension");
  const ConeQ valuation = space_.roots().negative_chamber();
  const Matrix dual = space_.dual_lattice();
  std::set<RationalVec, LexLess> gens;
  for (const auto& c : cones_)
    for (const auto& r : c.cone.rays())
      if (valuation.contains(r)) gens.insert(primitive_in_lattice(r, dual));
  std::size_t k = 0;
  for (const auto& g : gens) rays_.push_back({"r" + std::to_string(k++), g});
}

const FanRay& ColoredFan::ray(const std::string& id) const {
  for (const auto& r : rays_)
    if (r.id == id) return r;
  throw InputError("unknown ray id '" + id + "'");
}

std::optional<std::size_t> ColoredFan::ray_index(const RationalVec& direction) const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (positively_proportional(rays_[i].generator, direction)) return i;
  return std::nullopt;
}

std::vector<std::size_t> ColoredFan::cone_rays(std::size_t k) const {
  std::vector<std::size_t> out;
  for (const auto& r : cones_.at(k).cone.rays())
    if (auto i = ray_index(r)) out.push_back(*i);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<ColorId> ColoredFan::fan_colors() const {
  std::set<ColorId> out;
  for (const auto& c : cones_) out.insert(c.colors.begin(), c.colors.end());
  return out;
}

namespace {

// Adds "x in relint(c)" to the LP, with strict facet inequalities scaled to >= 1.
void add_relint(LinearProgram& lp, const ConeQ& c) {
  for (const auto& f : c.facets()) lp.add_constraint(f, Relation::GreaterEq, 1);
  for (const auto& e : c.equations()) lp.add_constraint(e, Relation::Equal, 0);
}

void add_closed(LinearProgram& lp, const ConeQ& c) {
  for (const auto& f : c.facets()) lp.add_constraint(f, Relation::GreaterEq, 0);
  for (const auto& e : c.equations()) lp.add_constraint(e, Relation::Equal, 0);
}

bool relints_meet_in(const ConeQ& a, const ConeQ& b, const ConeQ& valuation) {
  if (a.dim() == 0 || b.dim() == 0) return a.dim() == 0 && b.dim() == 0;
  LinearProgram lp(a.ambient_dim());
  add_relint(lp, a);
  add_relint(lp, b);
  add_closed(lp, valuation);
  return lp.feasible_point().has_value();
}

ColoredCone colored_face(const SymmetricSpaceData& space, const ColoredCone& c, const ConeQ& face) {
  ColoredCone out{face, {}};
  for (const auto& col : c.colors)
    if (face.contains(color_image(space, col))) out.colors.insert(col);
  return out;
}

}  // namespace

bool relint_meets_valuation_cone(const ConeQ& c, const ConeQ& valuation) {
  if (c.dim() == 0) return true;
  LinearProgram lp(c.ambient_dim());
  add_relint(lp, c);
  add_closed(lp, valuation);
  return lp.feasible_point().has_value();
}

std::vector<ColoredCone> fan_faces(const ColoredFan& fan) {
  const ConeQ valuation = fan.space().roots().negative_chamber();
  std::vector<ColoredCone> out;
  for (const auto& c : fan.cones()) {
    if (!c.cone.is_pointed()) continue;
    for (const auto& f : c.cone.faces()) {
      if (!relint_meets_valuation_cone(f, valuation)) continue;
      ColoredCone cf = colored_face(fan.space(), c, f);
      if (std::find(out.begin(), out.end(), cf) == out.end()) out.push_back(std::move(cf));
    }
  }
  return out;
}

ValidationReport validate_fan(const ColoredFan& fan) {
  ValidationReport r;
  auto add = [&](std::string clause, std::string detail) { r.issues.push_back({std::move(clause), std::move(detail)}); };
  const auto& space = fan.space();
  const ConeQ valuation = space.roots().negative_chamber();
  const auto& cones = fan.cones();
  bool structural_ok = true;
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const auto& c = cones[k];
    const std::string where = "cone " + std::to_string(k);
    for (const auto& col : c.colors)
      if (!space.has_color(col)) {
        add("colors exist in the space", where + " uses unknown color " + col.name());
        structural_ok = false;
      }
    if (!c.cone.is_pointed()) {
      add("cone is strictly convex", where + " contains a line");
      structural_ok = false;
      continue;
    }
    for (const auto& ray : c.cone.rays()) {
      if (valuation.contains(ray)) continue;
      bool is_color = false;
      for (const auto& col : c.colors)
        if (space.has_color(col) && positively_proportional(ray, color_image(space, col))) is_color = true;
      if (!is_color)
        add("generated by colors and valuation-cone points",
            where + " has extremal ray " + to_string(ray) + " outside C⁻ that is not a color image");
    }
    if (!relint_meets_valuation_cone(c.cone, valuation))
      add("relative interior meets the valuation cone", where);
  }
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b)
      if (cones[a] == cones[b]) add("relative interiors overlap inside the valuation cone", "cones " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
  if (!structural_ok || !r.ok()) return r;

  // Pairwise overlap of distinct colored faces, faces of one listed cone excepted.
  struct Face {
    ColoredCone cc;
    std::set<std::size_t> owners;
  };
  std::vector<Face> faces;
  for (std::size_t k = 0; k < cones.size(); ++k)
    for (const auto& f : cones[k].cone.faces()) {
      if (!relint_meets_valuation_cone(f, valuation)) continue;
      ColoredCone cf = colored_face(space, cones[k], f);
      auto it = std::find_if(faces.begin(), faces.end(), [&](const Face& x) { return x.cc == cf; });
      if (it == faces.end())
        faces.push_back({std::move(cf), {k}});
      else
        it->owners.insert(k);
    }
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      const auto& oi = faces[i].owners;
      const auto& oj = faces[j].owners;
      bool common_owner = std::any_of(oi.begin(), oi.end(), [&](std::size_t k) { return oj.count(k) > 0; });
      if (common_owner) continue;
      if (relints_meet_in(faces[i].cc.cone, faces[j].cc.cone, valuation)) {
        add("relative interiors overlap inside the valuation cone",
            "faces spanned by " + std::to_string(faces[i].cc.cone.rays().size()) + " and " +
                std::to_string(faces[j].cc.cone.rays().size()) + " rays of cones " + std::to_string(*oi.begin()) +
                " and " + std::to_string(*oj.begin()));
        return r;
      }
    }
  return r;
}

bool is_complete(const ColoredFan& fan) {
  std::vector<ConeQ> pieces;
  for (const auto& c : fan.cones()) pieces.push_back(c.cone);
  return union_covers(pieces, fan.space().roots().negative_chamber());
}

bool is_toroidal(const ColoredFan& fan) {
  return std::all_of(fan.cones().begin(), fan.cones().end(), [](const ColoredCone& c) { return c.colors.empty(); });
}

bool is_qfactorial(const ColoredFan& fan) {
  for (const auto& c : fan.cones())
    if (!is_simplicial_cone(c.cone)) return false;
  std::set<std::size_t> roots;
  for (const auto& col : fan.fan_colors())
    if (!roots.insert(col.root).second) return false;
  return true;
}

SymVariety::SymVariety(ColoredFan f)
    : fan(std::move(f)), complete(is_complete(fan)), toroidal(is_toroidal(fan)), qfactorial(is_qfactorial(fan)) {}

std::vector<FanRay> gstable_rays(const ColoredFan& fan) { return fan.rays(); }

ColoredFan decolorate(const ColoredFan& fan) {
  const ConeQ valuation = fan.space().roots().negative_chamber();
  std::vector<ConeQ> pieces;
  for (const auto& c : fan.cones()) {
    ConeQ d = intersect_cones(c.cone, valuation);
    if (d.dim() == 0) continue;
    if (std::find(pieces.begin(), pieces.end(), d) == pieces.end()) pieces.push_back(std::move(d));
  }
  std::vector<ColoredCone> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pieces.size() && !dominated; ++j)
      if (i != j && pieces[j].contains(pieces[i])) dominated = true;
    if (!dominated) out.push_back({pieces[i], {}});
  }
  std::sort(out.begin(), out.end(),
            [](const ColoredCone& a, const ColoredCone& b) { return a.cone.rays() < b.cone.rays(); });
  return ColoredFan(fan.space(), std::move(out));
}

std::vector<RationalVec> PlainFan::rays() const {
  std::set<RationalVec, LexLess> all;
  for (const auto& c : cones) all.insert(c.rays().begin(), c.rays().end());
  return {all.begin(), all.end()};
}

PlainFan toric_slice_fan(const ColoredFan& fan) {
  if (!is_toroidal(fan)) throw PreconditionError("toric_slice_fan: the fan has colors");
  const auto& w = fan.space().roots().weyl_group();
  const std::size_t n = fan.space().rank();
  std::vector<ConeQ> all;
  for (const auto& c : fan.cones())
    for (const auto& g : w.covector) {
      std::vector<RationalVec> gens;
      for (const auto& r : c.cone.rays()) gens.push_back(g.apply(r));
      ConeQ t = ConeQ::from_generators(gens, n);
      if (std::find(all.begin(), all.end(), t) == all.end()) all.push_back(std::move(t));
    }
  PlainFan out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j)
      if (i != j && all[j].contains(all[i])) dominated = true;
    if (!dominated) out.cones.push_back(all[i]);
  }
  std::sort(out.cones.begin(), out.cones.end(), [](const ConeQ& a, const ConeQ& b) { return a.rays() < b.rays(); });
  return out;
}

std::optional<std::size_t> containing_cone(const ColoredFan& fan, const ConeQ& c) {
  for (std::size_t k = 0; k < fan.cones().size(); ++k)
    if (fan.cones()[k].cone.contains(c)) return k;
  return std::nullopt;
}

}  // namespace symvar
