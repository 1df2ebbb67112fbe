#include "symvar/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <set>

#include "symvar/linalg.hpp"

namespace symvar {

namespace {

using Bits = boost::dynamic_bitset<>;

void canonicalize(std::vector<RationalVec>& vs) {
  for (auto& v : vs) v = primitive_direction(v);
  std::sort(vs.begin(), vs.end(), LexLess{});
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

void check_dims(const std::vector<RationalVec>& vs, std::size_t n, const char* what) {
  for (const auto& v : vs)
    if (v.size() != n)
      throw InputError(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                       std::to_string(n));
}

// Pointed DD in coordinates: rays of {z : M z >= 0}, M of full column rank k.
std::vector<RationalVec> pointed_dd(const std::vector<RationalVec>& m, std::size_t k) {
  if (k == 0) return {};
  // Greedy independent rows for the initial simplicial cone.
  std::vector<std::size_t> init;
  std::vector<RationalVec> chosen;
  for (std::size_t i = 0; i < m.size() && init.size() < k; ++i) {
    chosen.push_back(m[i]);
    if (rank(chosen, k) == chosen.size())
      init.push_back(i);
    else
      chosen.pop_back();
  }
  const Matrix inv = inverse(Matrix::from_rows(chosen, k));
  const std::size_t nrows = m.size();

  struct Ray {
    RationalVec z;
    Bits zeros;
  };
  std::vector<Ray> rays;
  std::vector<bool> processed(nrows, false);
  for (auto i : init) processed[i] = true;
  for (std::size_t j = 0; j < k; ++j) {
    Ray r{inv.column(j), Bits(nrows)};
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) r.zeros.set(init[t]);
    rays.push_back(std::move(r));
  }

  for (std::size_t row = 0; row < nrows; ++row) {
    if (processed[row]) continue;
    processed[row] = true;
    const auto& a = m[row];
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].z);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
      if (val[i] == 0) rays[i].zeros.set(row);
    }
    if (neg.empty()) continue;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    for (auto p : pos)
      for (auto q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        RationalVec z = add(scale(rays[p].z, -val[q]), scale(rays[q].z, val[p]));
        z = primitive_direction(z);
        common.set(row);
        next.push_back({std::move(z), std::move(common)});
      }
    rays = std::move(next);
  }
  std::vector<RationalVec> out;
  for (auto& r : rays) out.push_back(std::move(r.z));
  return out;
}

}  // namespace

RayDescription double_description(const std::vector<RationalVec>& inequalities,
                                  const std::vector<RationalVec>& equations, std::size_t n) {
  check_dims(inequalities, n, "inequality");
  check_dims(equations, n, "equation");
  std::vector<RationalVec> all = inequalities;
  all.insert(all.end(), equations.begin(), equations.end());
  RayDescription out;
  out.lineality = all.empty() ? kernel_basis(Matrix(0, n)) : kernel_basis(Matrix::from_rows(all, n));
  std::vector<RationalVec> perp = equations;
  perp.insert(perp.end(), out.lineality.begin(), out.lineality.end());
  const auto basis = perp.empty() ? kernel_basis(Matrix(0, n)) : kernel_basis(Matrix::from_rows(perp, n));
  const std::size_t k = basis.size();
  std::vector<RationalVec> m;
  for (const auto& a : inequalities) {
    RationalVec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(a, basis[j]);
    if (!is_zero(row)) m.push_back(std::move(row));
  }
  if (k > 0 && m.empty()) throw PreconditionError("double_description: inconsistent lineality computation");
  for (const auto& z : pointed_dd(m, k)) {
    RationalVec x = zero_vec(n);
    for (std::size_t j = 0; j < k; ++j)
      if (z[j] != 0) x = axpy(x, z[j], basis[j]);
    out.rays.push_back(std::move(x));
  }
  canonicalize(out.rays);
  return out;
}

std::vector<RationalVec> ConeQ::generators() const {
  std::vector<RationalVec> g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(negate(l));
  }
  return g;
}

ConeQ ConeQ::from_inequalities(const std::vector<RationalVec>& inequalities,
                               const std::vector<RationalVec>& equations, std::size_t n) {
  ConeQ c;
  c.ambient_dim_ = n;
  auto v = double_description(inequalities, equations, n);
  c.rays_ = std::move(v.rays);
  c.lineality_ = std::move(v.lineality);
  auto h = double_description(c.generators(), {}, n);
  c.facets_ = std::move(h.rays);
  c.equations_ = std::move(h.lineality);
  return c;
}

ConeQ ConeQ::from_generators(const std::vector<RationalVec>& generators, std::size_t n) {
  check_dims(generators, n, "generator");
  auto h = double_description(generators, {}, n);
  return from_inequalities(h.rays, h.lineality, n);
}

ConeQ ConeQ::zero(std::size_t n) { return from_generators({}, n); }
ConeQ ConeQ::full(std::size_t n) { return from_inequalities({}, {}, n); }

bool ConeQ::contains(const RationalVec& v, ContainMode mode) const {
  if (v.size() != ambient_dim_) throw InputError("cone membership: vector has wrong dimension");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_) {
    const Rational s = dot(f, v);
    if (s < 0 || (mode == ContainMode::RelativeInterior && s == 0)) return false;
  }
  return true;
}

bool ConeQ::contains(const ConeQ& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

RationalVec ConeQ::relative_interior_point() const {
  RationalVec p = zero_vec(ambient_dim_);
  for (const auto& r : rays_) p = add(p, r);
  return p;
}

std::vector<ConeQ> ConeQ::faces() const {
  if (!is_pointed()) throw PreconditionError("faces() requires a pointed cone");
  // Each face is cut out by the facets tight on it; enumerate by the set of tight rays.
  std::set<std::vector<std::size_t>> seen;
  std::vector<ConeQ> out;
  const std::size_t nf = facets_.size();
  std::function<void(const std::vector<std::size_t>&)> walk = [&](const std::vector<std::size_t>& ray_ids) {
    if (!seen.insert(ray_ids).second) return;
    std::vector<RationalVec> gens;
    for (auto i : ray_ids) gens.push_back(rays_[i]);
    out.push_back(from_generators(gens, ambient_dim_));
    for (std::size_t f = 0; f < nf; ++f) {
      std::vector<std::size_t> sub;
      for (auto i : ray_ids)
        if (dot(facets_[f], rays_[i]) == 0) sub.push_back(i);
      if (sub.size() < ray_ids.size()) walk(sub);
    }
  };
  std::vector<std::size_t> all(rays_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  walk(all);
  return out;
}

ConeQ dual_cone(const ConeQ& c) {
  return ConeQ::from_inequalities(c.rays(), c.lineality(), c.ambient_dim());
}

bool cone_contains(const ConeQ& c, const RationalVec& v, ContainMode mode) { return c.contains(v, mode); }

ConeQ intersect_cones(const ConeQ& a, const ConeQ& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("intersect_cones: dimension mismatch");
  auto ineq = a.facets();
  ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
  auto eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return ConeQ::from_inequalities(ineq, eq, a.ambient_dim());
}

bool is_simplicial_cone(const ConeQ& c) { return c.is_pointed() && c.rays().size() == c.dim(); }

bool union_covers(const std::vector<ConeQ>& pieces, const ConeQ& target) {
  const std::size_t n = target.ambient_dim();
  if (!target.is_full_dimensional()) throw PreconditionError("union_covers: target must be full dimensional");
  std::vector<const ConeQ*> full;
  std::vector<RationalVec> hyperplanes;
  for (const auto& p : pieces) {
    if (p.ambient_dim() != n) throw InputError("union_covers: dimension mismatch");
    if (!p.is_full_dimensional()) continue;
    full.push_back(&p);
    hyperplanes.insert(hyperplanes.end(), p.facets().begin(), p.facets().end());
  }
  canonicalize(hyperplanes);
  std::function<bool(const ConeQ&)> covered = [&](const ConeQ& cell) {
    const auto gens = cell.generators();
    for (const auto* p : full)
      if (p->contains(cell)) return true;
    for (const auto& h : hyperplanes) {
      bool pos = false, neg = false;
      for (const auto& g : gens) {
        const Rational s = dot(h, g);
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (!(pos && neg)) continue;
      auto ineq = cell.facets();
      ineq.push_back(h);
      if (!covered(ConeQ::from_inequalities(ineq, {}, n))) return false;
      ineq.back() = negate(h);
      return covered(ConeQ::from_inequalities(ineq, {}, n));
    }
    return false;
  };
  return covered(target);
}

}  // namespace symvar
