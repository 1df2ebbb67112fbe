#include "symvar/divisor_theory.hpp"

#include <algorithm>

#include "symvar/lp.hpp"

namespace symvar {

Rational BDivisor::color(const ColorId& c) const {
  auto it = colors.find(c);
  return it == colors.end() ? Rational(0) : it->second;
}

Rational BDivisor::ray(const std::string& id) const {
  auto it = rays.find(id);
  return it == rays.end() ? Rational(0) : it->second;
}

bool BDivisor::is_integral() const {
  for (const auto& [k, x] : colors)
    if (!symvar::is_integer(x)) return false;
  for (const auto& [k, x] : rays)
    if (!symvar::is_integer(x)) return false;
  return true;
}

bool BDivisor::is_gstable() const {
  return std::all_of(colors.begin(), colors.end(), [](const auto& kv) { return kv.second == 0; });
}

BDivisor BDivisor::normalized() const {
  BDivisor out;
  for (const auto& [k, x] : colors)
    if (x != 0) out.colors[k] = x;
  for (const auto& [k, x] : rays)
    if (x != 0) out.rays[k] = x;
  return out;
}

bool BDivisor::operator==(const BDivisor& o) const {
  const BDivisor a = normalized(), b = o.normalized();
  return a.colors == b.colors && a.rays == b.rays;
}

BDivisor operator+(const BDivisor& a, const BDivisor& b) {
  BDivisor out = a;
  for (const auto& [k, x] : b.colors) out.colors[k] += x;
  for (const auto& [k, x] : b.rays) out.rays[k] += x;
  return out.normalized();
}

BDivisor operator*(const Rational& s, const BDivisor& d) {
  BDivisor out = d;
  for (auto& [k, x] : out.colors) x *= s;
  for (auto& [k, x] : out.rays) x *= s;
  return out.normalized();
}

BDivisor operator-(const BDivisor& a, const BDivisor& b) { return a + Rational(-1) * b; }

void check_divisor(const ColoredFan& fan, const BDivisor& d) {
  for (const auto& [c, x] : d.colors)
    if (!fan.space().has_color(c)) throw InputError("divisor uses unknown color " + c.name());
  for (const auto& [id, x] : d.rays) fan.ray(id);
}

std::vector<std::string> prime_divisor_names(const ColoredFan& fan) {
  std::vector<std::string> out;
  for (const auto& c : fan.space().colors()) out.push_back(c.name());
  for (const auto& r : fan.rays()) out.push_back(r.id);
  return out;
}

RationalVec divisor_vector(const ColoredFan& fan, const BDivisor& d) {
  check_divisor(fan, d);
  RationalVec x;
  for (const auto& c : fan.space().colors()) x.push_back(d.color(c));
  for (const auto& r : fan.rays()) x.push_back(d.ray(r.id));
  return x;
}

BDivisor divisor_from_vector(const ColoredFan& fan, const RationalVec& x) {
  const auto colors = fan.space().colors();
  if (x.size() != colors.size() + fan.rays().size()) throw InputError("divisor vector has wrong length");
  BDivisor d;
  for (std::size_t i = 0; i < colors.size(); ++i) d.colors[colors[i]] = x[i];
  for (std::size_t j = 0; j < fan.rays().size(); ++j) d.rays[fan.rays()[j].id] = x[colors.size() + j];
  return d.normalized();
}

BDivisor prime_divisor(const ColoredFan& fan, const std::string& name) {
  BDivisor d;
  if (!name.empty() && name[0] == 'F')
    d.colors[ColorId::parse(name)] = 1;
  else
    d.rays[fan.ray(name).id] = 1;
  check_divisor(fan, d);
  return d;
}

BDivisor principal_divisor_q(const ColoredFan& fan, const RationalVec& omega) {
  if (omega.size() != fan.space().rank()) throw InputError("principal_divisor: weight has wrong dimension");
  BDivisor d;
  for (const auto& c : fan.space().colors()) d.colors[c] = omega[c.root];
  for (const auto& r : fan.rays()) d.rays[r.id] = dot(omega, r.generator);
  return d.normalized();
}

BDivisor principal_divisor(const ColoredFan& fan, const RationalVec& omega) {
  if (omega.size() != fan.space().rank()) throw InputError("principal_divisor: weight has wrong dimension");
  const RationalVec c = lattice_coordinates(inverse(fan.space().lattice()), omega);
  for (const auto& x : c)
    if (!is_integer(x)) throw InputError("principal_divisor: " + to_string(omega) + " is not in χ(S)");
  return principal_divisor_q(fan, omega);
}

ClassGroupPresentation class_group(const ColoredFan& fan) {
  ClassGroupPresentation p;
  p.generators = prime_divisor_names(fan);
  p.relations = Matrix(0, p.generators.size());
  const Matrix& l = fan.space().lattice();
  for (std::size_t k = 0; k < l.rows(); ++k)
    p.relations.append_row(divisor_vector(fan, principal_divisor_q(fan, l.row(k))));
  for (const auto& r : fan.rays()) p.basis.push_back(r.id);
  for (const auto& c : fan.space().color_specs())
    if (c.multiplicity == 2) p.basis.push_back(ColorId{c.root, ColorSign::Plus}.name());
  return p;
}

RationalVec divisor_class(const ColoredFan& fan, const BDivisor& d) {
  check_divisor(fan, d);
  const auto& space = fan.space();
  RationalVec m = zero_vec(space.rank());
  for (const auto& c : space.color_specs())
    m[c.root] = d.color({c.root, c.multiplicity == 2 ? ColorSign::Minus : ColorSign::None});
  const BDivisor rest = d - principal_divisor_q(fan, m);
  RationalVec out;
  for (const auto& r : fan.rays()) out.push_back(rest.ray(r.id));
  for (const auto& c : space.color_specs())
    if (c.multiplicity == 2) out.push_back(rest.color({c.root, ColorSign::Plus}));
  return out;
}

BDivisor divisor_with_class(const ColoredFan& fan, const RationalVec& cls) {
  const auto names = class_group(fan).basis;
  if (cls.size() != names.size()) throw InputError("class vector has wrong length");
  BDivisor d;
  for (std::size_t i = 0; i < names.size(); ++i) d = d + cls[i] * prime_divisor(fan, names[i]);
  return d;
}

namespace {

struct ConeSystem {
  std::vector<RationalVec> rows;
  RationalVec rhs;
};

ConeSystem cone_system(const ColoredFan& fan, std::size_t k, const BDivisor& d) {
  ConeSystem s;
  for (auto i : fan.cone_rays(k)) {
    s.rows.push_back(fan.rays()[i].generator);
    s.rhs.push_back(d.ray(fan.rays()[i].id));
  }
  for (const auto& c : fan.cones()[k].colors) {
    s.rows.push_back(color_image(fan.space(), c));
    s.rhs.push_back(d.color(c));
  }
  return s;
}

bool integral_on_span(const ColoredFan& fan, const ConeQ& cone, const RationalVec& h) {
  const Matrix dual = fan.space().dual_lattice();
  const Matrix dinv = inverse(dual);
  std::vector<RationalVec> coords;
  for (const auto& g : cone.generators()) coords.push_back(lattice_coordinates(dinv, g));
  for (const auto& b : saturated_lattice_basis(coords, fan.space().rank()))
    if (!is_integer(dot(h, dual.apply_left(b)))) return false;
  return true;
}

std::vector<std::size_t> full_cones(const ColoredFan& fan) {
  std::vector<std::size_t> full;
  for (std::size_t k = 0; k < fan.cones().size(); ++k)
    if (fan.cones()[k].cone.is_full_dimensional()) full.push_back(k);
  for (std::size_t k = 0; k < fan.cones().size(); ++k) {
    if (fan.cones()[k].cone.is_full_dimensional()) continue;
    bool inside = std::any_of(full.begin(), full.end(),
                              [&](std::size_t j) { return fan.cones()[j].cone.contains(fan.cones()[k].cone); });
    if (!inside) throw PreconditionError("cone " + std::to_string(k) + " lies in no full-dimensional cone of the fan");
  }
  if (full.empty()) throw PreconditionError("the fan has no full-dimensional cone");
  return full;
}

bool convexity_test(const ColoredFan& fan, const BDivisor& d, bool strict) {
  auto h = cartier_data(fan, d);
  if (!h) throw PreconditionError("divisor is not Q-Cartier");
  const auto full = full_cones(fan);
  const auto& cones = fan.cones();
  for (auto k : full)
    for (auto l : full) {
      if (k == l) continue;
      for (const auto& v : cones[l].cone.rays()) {
        const Rational hk = dot(h->pieces[k], v), hl = dot(h->pieces[l], v);
        if (hk > hl) return false;
        if (strict && hk == hl && !cones[k].cone.contains(v)) return false;
      }
    }
  for (auto k : full)
    for (const auto& c : fan.space().colors()) {
      if (cones[k].colors.count(c)) continue;
      const Rational hv = h->pieces[k][c.root];
      if (hv > d.color(c) || (strict && hv == d.color(c))) return false;
    }
  return true;
}

}  // namespace

std::optional<PLFunction> cartier_data(const ColoredFan& fan, const BDivisor& d) {
  check_divisor(fan, d);
  const std::size_t n = fan.space().rank();
  PLFunction out;
  out.integral = true;
  for (std::size_t k = 0; k < fan.cones().size(); ++k) {
    const ConeSystem s = cone_system(fan, k, d);
    const SolutionSet sol = solve_exact(Matrix::from_rows(s.rows, n), s.rhs);
    if (!sol.feasible) return std::nullopt;
    out.pieces.push_back(sol.particular);
    out.freedom.push_back(sol.kernel);
    if (!integral_on_span(fan, fan.cones()[k].cone, sol.particular)) out.integral = false;
  }
  return out;
}

bool is_q_cartier(const ColoredFan& fan, const BDivisor& d) { return cartier_data(fan, d).has_value(); }

bool is_cartier(const ColoredFan& fan, const BDivisor& d) {
  auto h = cartier_data(fan, d);
  return h && h->integral;
}

bool is_nef(const ColoredFan& fan, const BDivisor& d) { return convexity_test(fan, d, false); }
bool is_globally_generated(const ColoredFan& fan, const BDivisor& d) { return is_nef(fan, d); }
bool is_ample(const ColoredFan& fan, const BDivisor& d) { return convexity_test(fan, d, true); }

std::optional<BDivisor> find_ample_divisor(const ColoredFan& fan) {
  const auto full = full_cones(fan);
  const std::size_t n = fan.space().rank();
  const auto colors = fan.space().colors();
  const auto& rays = fan.rays();
  const auto& cones = fan.cones();
  // Variables: h_k for each full cone, then a_F, then b_E.
  const std::size_t color_off = full.size() * n, ray_off = color_off + colors.size();
  const std::size_t nv = ray_off + rays.size();
  auto color_var = [&](const ColorId& c) {
    return color_off + static_cast<std::size_t>(std::find(colors.begin(), colors.end(), c) - colors.begin());
  };
  LinearProgram lp(nv);
  auto row = [&] { return zero_vec(nv); };
  for (std::size_t p = 0; p < full.size(); ++p) {
    const std::size_t k = full[p];
    for (auto i : fan.cone_rays(k)) {
      RationalVec r = row();
      for (std::size_t j = 0; j < n; ++j) r[p * n + j] = rays[i].generator[j];
      r[ray_off + i] = -1;
      lp.add_constraint(r, Relation::Equal, 0);
    }
    for (const auto& c : colors) {
      RationalVec r = row();
      r[p * n + c.root] = -1;
      r[color_var(c)] = 1;
      if (cones[k].colors.count(c))
        lp.add_constraint(r, Relation::Equal, 0);
      else
        lp.add_constraint(r, Relation::GreaterEq, 1);
    }
    for (std::size_t q = 0; q < full.size(); ++q) {
      if (q == p) continue;
      for (const auto& v : cones[full[q]].cone.rays()) {
        if (cones[k].cone.contains(v)) continue;
        RationalVec r = row();
        for (std::size_t j = 0; j < n; ++j) {
          r[q * n + j] += v[j];
          r[p * n + j] -= v[j];
        }
        lp.add_constraint(r, Relation::GreaterEq, 1);
      }
    }
  }
  auto x = lp.feasible_point();
  if (!x) return std::nullopt;
  BDivisor d;
  for (const auto& c : colors) d.colors[c] = (*x)[color_var(c)];
  for (std::size_t i = 0; i < rays.size(); ++i) d.rays[rays[i].id] = (*x)[ray_off + i];
  return d.normalized();
}

ReducedDivisor reduce_star(const ColoredFan& fan, const BDivisor& d) {
  check_divisor(fan, d);
  const auto& space = fan.space();
  ReducedDivisor out;
  out.shift = zero_vec(space.rank());
  for (const auto& c : space.color_specs()) {
    if (c.multiplicity == 2) {
      const Rational ap = d.color({c.root, ColorSign::Plus}), am = d.color({c.root, ColorSign::Minus});
      out.shift[c.root] = std::min(ap, am);
      if (am > ap) out.renamed.push_back(c.root);
    } else {
      out.shift[c.root] = d.color({c.root, ColorSign::None});
    }
  }
  const BDivisor rest = d - principal_divisor_q(fan, out.shift);
  out.d1.rays = rest.rays;
  out.d1 = out.d1.normalized();
  out.d2.colors = rest.colors;
  out.d2 = out.d2.normalized();
  for (const auto& [c, x] : out.d2.colors) out.d2_plus.colors[{c.root, ColorSign::Plus}] = x;
  if (auto h = cartier_data(fan, d)) {
    for (auto& p : h->pieces) p = sub(p, out.shift);
    h->integral = h->integral && std::all_of(out.shift.begin(), out.shift.end(), [](const Rational& x) { return is_integer(x); });
    out.h1 = std::move(h);
  }
  return out;
}

PolytopeQ moment_polytope(const ColoredFan& fan, const BDivisor& d) {
  check_divisor(fan, d);
  const std::size_t n = fan.space().rank();
  std::vector<AffineForm> hs;
  for (const auto& r : fan.rays()) hs.push_back({r.generator, d.ray(r.id)});
  for (const auto& c : fan.space().colors()) hs.push_back({unit_vec(n, c.root), d.color(c)});
  return PolytopeQ::from_halfspaces(hs, {}, n);
}

std::vector<RationalVec> h0_highest_weights(const ColoredFan& fan, const BDivisor& d) {
  if (!d.is_integral()) throw InputError("h0_highest_weights: divisor is not integral");
  return lattice_points(moment_polytope(fan, d), fan.space().lattice());
}

PolytopeQ weight_polytope(const ColoredFan& fan, const BDivisor& d) {
  if (!is_toroidal(fan)) throw PreconditionError("weight_polytope: the fan has colors");
  if (!is_complete(fan)) throw PreconditionError("weight_polytope: the fan is not complete");
  if (!d.is_gstable()) throw PreconditionError("weight_polytope: divisor is not G-stable");
  if (!is_nef(fan, d)) throw PreconditionError("weight_polytope: divisor is not nef");
  const auto h = cartier_data(fan, d);
  const auto& roots = fan.space().roots();
  std::vector<RationalVec> pts;
  for (std::size_t k = 0; k < fan.cones().size(); ++k) {
    if (!fan.cones()[k].cone.is_full_dimensional()) continue;
    for (auto& w : roots.weyl_orbit(negate(h->pieces[k]))) pts.push_back(std::move(w));
  }
  return PolytopeQ::convex_hull(pts, fan.space().rank());
}

Rational toric_volume(const ColoredFan& fan, const BDivisor& d) {
  const PolytopeQ q = weight_polytope(fan, d);
  Rational f = 1;
  for (std::size_t i = 2; i <= fan.space().rank(); ++i) f *= static_cast<long>(i);
  return f * polytope_volume(q, fan.space().lattice());
}

bool ToricClass::is_zero() const { return symvar::is_zero(coords); }

ToricClass toric_class(const ColoredFan& fan, const RationalVec& ray_coeffs) {
  const PlainFan z = toric_slice_fan(fan);
  ToricClass out;
  const Matrix dual = fan.space().dual_lattice();
  for (const auto& u : z.rays()) out.rays.push_back(primitive_in_lattice(u, dual));
  if (ray_coeffs.size() != out.rays.size()) throw InputError("toric divisor has wrong length");
  const std::size_t n = fan.space().rank();
  Matrix rel(0, out.rays.size());
  for (std::size_t k = 0; k < n; ++k) {
    RationalVec r;
    for (const auto& u : out.rays) r.push_back(u[k]);
    rel.append_row(r);
  }
  const RowEchelon e = rref(rel);
  out.coords = ray_coeffs;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const Rational x = out.coords[e.pivots[i]];
    if (x != 0) out.coords = axpy(out.coords, -x, e.reduced.row(i));
  }
  return out;
}

ToricClass slice_restriction_class(const ColoredFan& fan, const BDivisor& d) {
  if (!is_toroidal(fan)) throw PreconditionError("slice restriction needs a toroidal fan");
  const RationalVec cls = divisor_class(fan, d);
  const auto& rays = fan.rays();
  // Coefficient of each G-stable E after replacing F+ by half of Σ <ω_α, -v_E> E.
  RationalVec e_coeff(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(rays.size()));
  std::size_t j = rays.size();
  for (const auto& c : fan.space().color_specs()) {
    if (c.multiplicity != 2) continue;
    for (std::size_t i = 0; i < rays.size(); ++i) e_coeff[i] -= cls[j] * rays[i].generator[c.root] / 2;
    ++j;
  }
  const PlainFan z = toric_slice_fan(fan);
  const Matrix dual = fan.space().dual_lattice();
  std::vector<RationalVec> zrays;
  for (const auto& u : z.rays()) zrays.push_back(primitive_in_lattice(u, dual));
  RationalVec x = zero_vec(zrays.size());
  const auto& roots = fan.space().roots();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (e_coeff[i] == 0) continue;
    for (const auto& u : roots.weyl_orbit_covector(rays[i].generator)) {
      auto it = std::find(zrays.begin(), zrays.end(), u);
      if (it == zrays.end()) throw PreconditionError("Weyl translate of a ray is not a ray of the toric slice");
      x[static_cast<std::size_t>(it - zrays.begin())] += e_coeff[i];
    }
  }
  return toric_class(fan, x);
}

std::vector<BDivisor> restriction_kernel_basis(const ColoredFan& fan) {
  std::vector<BDivisor> out;
  for (const auto& c : fan.space().color_specs()) {
    if (c.multiplicity != 2) continue;
    BDivisor d;
    d.colors[{c.root, ColorSign::Plus}] = 1;
    d.colors[{c.root, ColorSign::Minus}] = -1;
    out.push_back(d);
  }
  return out;
}

RationalVec color_pair_class(const ColoredFan& fan, std::size_t root) {
  const auto& spec = fan.space().color_spec(root);
  BDivisor d;
  if (spec.multiplicity == 2) {
    d.colors[{root, ColorSign::Plus}] = 1;
    d.colors[{root, ColorSign::Minus}] = 1;
  } else {
    d.colors[{root, ColorSign::None}] = 1;
  }
  return divisor_class(fan, d);
}

namespace {

void require_qfactorial_complete(const ColoredFan& fan, const char* what) {
  if (!is_complete(fan)) throw PreconditionError(std::string(what) + ": the fan is not complete");
  if (!is_qfactorial(fan)) throw PreconditionError(std::string(what) + ": the fan is not Q-factorial");
}

}  // namespace

EffectiveCone effective_cone(const ColoredFan& fan) {
  require_qfactorial_complete(fan, "effective_cone");
  EffectiveCone out;
  out.generators = prime_divisor_names(fan);
  for (const auto& g : out.generators) out.classes.push_back(divisor_class(fan, prime_divisor(fan, g)));
  const std::size_t dim = class_group(fan).rank();
  out.cone = ConeQ::from_generators(out.classes, dim);
  for (const auto& r : out.cone.rays()) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < out.classes.size(); ++i)
      if (positively_proportional(out.classes[i], r)) members.push_back(i);
    out.ray_members.push_back(std::move(members));
  }
  std::vector<RationalVec> pair_classes;
  for (const auto& c : fan.space().color_specs())
    if (c.multiplicity == 2) pair_classes.push_back(color_pair_class(fan, c.root));
  const std::size_t ncolors = fan.space().colors().size();
  for (std::size_t i = 0; i < out.generators.size(); ++i) {
    if (i < ncolors) {
      if (fan.space().color_spec(fan.space().colors()[i].root).multiplicity == 2) out.predicted.push_back(i);
      continue;
    }
    bool prop = std::any_of(pair_classes.begin(), pair_classes.end(),
                            [&](const RationalVec& p) { return positively_proportional(out.classes[i], p); });
    if (!prop) out.predicted.push_back(i);
  }
  bool ok = out.cone.is_pointed();
  std::vector<int> hits(out.ray_members.size(), 0);
  for (auto i : out.predicted) {
    bool on_ray = false;
    for (std::size_t r = 0; r < out.ray_members.size(); ++r)
      if (std::count(out.ray_members[r].begin(), out.ray_members[r].end(), i)) {
        on_ray = true;
        ++hits[r];
      }
    ok = ok && on_ray;
  }
  for (int h : hits) ok = ok && h == 1;
  out.matches_prediction = ok;
  return out;
}

std::vector<std::vector<std::size_t>> proportional_to_color(const ColoredFan& fan, std::size_t ray_index) {
  const auto& rays = fan.rays();
  if (ray_index >= rays.size()) throw InputError("proportional_to_color: no ray with index " + std::to_string(ray_index));
  std::vector<std::vector<std::size_t>> out;
  for (const auto& factor : fan.space().roots().irreducible_factors()) {
    bool orth = true;
    for (std::size_t j = 0; j < rays.size() && orth; ++j) {
      if (j == ray_index) continue;
      for (auto a : factor)
        if (rays[j].generator[a] != 0) orth = false;
    }
    if (orth) out.push_back(factor);
  }
  return out;
}

bool big_cone_membership(const ColoredFan& fan, const RationalVec& cls) {
  require_qfactorial_complete(fan, "big_cone_membership");
  const std::size_t r = fan.rays().size();
  std::vector<std::size_t> doubles;
  for (const auto& c : fan.space().color_specs())
    if (c.multiplicity == 2) doubles.push_back(c.root);
  const std::size_t dim = r + doubles.size();
  if (cls.size() != dim) throw InputError("class vector has wrong length");
  std::vector<RationalVec> minus;
  for (auto a : doubles) {
    BDivisor d;
    d.colors[{a, ColorSign::Minus}] = 1;
    minus.push_back(divisor_class(fan, d));
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << doubles.size()); ++mask) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < r; ++i) m(i, i) = 1;
    for (std::size_t j = 0; j < doubles.size(); ++j) {
      const RationalVec col = (mask >> j & 1) ? minus[j] : unit_vec(dim, r + j);
      for (std::size_t i = 0; i < dim; ++i) m(i, r + j) = col[i];
    }
    const SolutionSet s = solve_exact(m, cls);
    if (!s.feasible) continue;
    bool ok = true;
    for (std::size_t i = 0; i < dim; ++i) ok = ok && (i < r ? s.particular[i] > 0 : s.particular[i] >= 0);
    if (ok) return true;
  }
  return false;
}

bool is_big_nef(const ColoredFan& fan, const BDivisor& d) {
  if (!is_nef(fan, d)) throw PreconditionError("is_big_nef: divisor is not nef");
  const ReducedDivisor red = reduce_star(fan, d);
  const auto& pieces = red.h1->pieces;
  const std::size_t n = fan.space().rank();
  RationalVec sum = zero_vec(n);
  const auto full = full_cones(fan);
  if (is_toroidal(fan)) {
    for (auto k : full) sum = add(sum, pieces[k]);
  } else {
    for (const auto& c : decolorate(fan).cones()) {
      if (!c.cone.is_full_dimensional()) continue;
      auto k = std::find_if(full.begin(), full.end(), [&](std::size_t j) { return fan.cones()[j].cone.contains(c.cone); });
      sum = add(sum, pieces[*k]);
    }
  }
  for (const auto& factor : fan.space().roots().irreducible_factors())
    if (std::all_of(factor.begin(), factor.end(), [&](std::size_t a) { return sum[a] == 0; })) return false;
  return true;
}

bool is_big(const ColoredFan& fan, const BDivisor& d) { return big_cone_membership(fan, divisor_class(fan, d)); }

PicardGroup picard_group(const ColoredFan& fan) {
  const std::size_t n = fan.space().rank();
  const auto colors = fan.space().colors();
  const std::size_t g = colors.size() + fan.rays().size();
  const std::size_t nv = g + fan.cones().size() * n;
  Matrix eq(0, nv);
  for (std::size_t k = 0; k < fan.cones().size(); ++k) {
    for (auto i : fan.cone_rays(k)) {
      RationalVec r = zero_vec(nv);
      for (std::size_t j = 0; j < n; ++j) r[g + k * n + j] = fan.rays()[i].generator[j];
      r[colors.size() + i] = -1;
      eq.append_row(r);
    }
    for (const auto& c : fan.cones()[k].colors) {
      RationalVec r = zero_vec(nv);
      r[g + k * n + c.root] = 1;
      r[static_cast<std::size_t>(std::find(colors.begin(), colors.end(), c) - colors.begin())] = -1;
      eq.append_row(r);
    }
  }
  std::vector<RationalVec> classes;
  for (const auto& x : kernel_basis(eq))
    classes.push_back(divisor_class(fan, divisor_from_vector(fan, RationalVec(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(g)))));
  PicardGroup p;
  p.basis = row_space_basis(classes, class_group(fan).rank());
  return p;
}

}  // namespace symvar
