#include "symvar/polytope.hpp"

#include <algorithm>
#include <functional>

#include "symvar/triangulation.hpp"

namespace symvar {

namespace {

RationalVec lift(const RationalVec& x, const Rational& t) {
  RationalVec h;
  h.reserve(x.size() + 1);
  h.push_back(t);
  h.insert(h.end(), x.begin(), x.end());
  return h;
}

RationalVec lift(const AffineForm& f) { return lift(f.normal, f.offset); }

AffineForm drop(const RationalVec& h) { return {RationalVec(h.begin() + 1, h.end()), h[0]}; }

void check_point(const RationalVec& x, std::size_t n) {
  if (x.size() != n)
    throw InputError("point has length " + std::to_string(x.size()) + ", expected " + std::to_string(n));
}

}  // namespace

PolytopeQ PolytopeQ::from_homogeneous(const ConeQ& c, std::size_t n) {
  PolytopeQ p;
  p.ambient_dim_ = n;
  for (const auto& r : c.rays()) {
    if (r[0] > 0)
      p.vertices_.push_back(scale(RationalVec(r.begin() + 1, r.end()), 1 / r[0]));
    else
      p.recession_.push_back(RationalVec(r.begin() + 1, r.end()));
  }
  if (p.vertices_.empty()) return empty(n);
  for (const auto& l : c.lineality()) {
    RationalVec d(l.begin() + 1, l.end());
    p.recession_.push_back(d);
    p.recession_.push_back(negate(d));
  }
  std::sort(p.vertices_.begin(), p.vertices_.end(), LexLess{});
  std::sort(p.recession_.begin(), p.recession_.end(), LexLess{});
  const RationalVec at_infinity = unit_vec(n + 1, 0);
  for (const auto& f : c.facets())
    if (f != at_infinity) p.facets_.push_back(drop(f));
  for (const auto& e : c.equations()) p.equations_.push_back(drop(e));
  return p;
}

PolytopeQ PolytopeQ::convex_hull(const std::vector<RationalVec>& points, std::size_t n) {
  std::vector<RationalVec> gens;
  for (const auto& x : points) {
    check_point(x, n);
    gens.push_back(lift(x, 1));
  }
  if (gens.empty()) return empty(n);
  return from_homogeneous(ConeQ::from_generators(gens, n + 1), n);
}

PolytopeQ PolytopeQ::convex_hull(const std::vector<RationalVec>& points) {
  if (points.empty()) throw InputError("convex_hull of an empty point list");
  return convex_hull(points, points.front().size());
}

PolytopeQ PolytopeQ::from_halfspaces(const std::vector<AffineForm>& halfspaces,
                                     const std::vector<AffineForm>& equations, std::size_t n) {
  std::vector<RationalVec> ineq{unit_vec(n + 1, 0)};
  std::vector<RationalVec> eq;
  for (const auto& h : halfspaces) {
    check_point(h.normal, n);
    ineq.push_back(lift(h));
  }
  for (const auto& e : equations) {
    check_point(e.normal, n);
    eq.push_back(lift(e));
  }
  return from_homogeneous(ConeQ::from_inequalities(ineq, eq, n + 1), n);
}

PolytopeQ PolytopeQ::empty(std::size_t n) {
  PolytopeQ p;
  p.ambient_dim_ = n;
  // 0 >= 1 style representation: a single contradictory equation.
  p.equations_.push_back({zero_vec(n), 1});
  return p;
}

int PolytopeQ::dim() const {
  if (is_empty()) return -1;
  return static_cast<int>(ambient_dim_ - equations_.size());
}

bool PolytopeQ::contains(const RationalVec& x) const {
  check_point(x, ambient_dim_);
  if (is_empty()) return false;
  for (const auto& e : equations_)
    if (e(x) != 0) return false;
  for (const auto& f : facets_)
    if (f(x) < 0) return false;
  return true;
}

bool PolytopeQ::contains_in_interior(const RationalVec& x) const {
  if (!contains(x)) return false;
  for (const auto& f : facets_)
    if (f(x) == 0) return false;
  return true;
}

RationalVec PolytopeQ::barycenter() const {
  if (is_empty()) throw PreconditionError("barycenter of an empty polytope");
  RationalVec b = zero_vec(ambient_dim_);
  for (const auto& v : vertices_) b = add(b, v);
  return scale(b, Rational(1, static_cast<unsigned long>(vertices_.size())));
}

PolytopeQ convex_hull(const std::vector<RationalVec>& points) { return PolytopeQ::convex_hull(points); }

PolytopeQ intersect(const PolytopeQ& a, const PolytopeQ& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("intersect: dimension mismatch");
  if (a.is_empty() || b.is_empty()) return PolytopeQ::empty(a.ambient_dim());
  auto h = a.facets();
  h.insert(h.end(), b.facets().begin(), b.facets().end());
  auto e = a.equations();
  e.insert(e.end(), b.equations().begin(), b.equations().end());
  return PolytopeQ::from_halfspaces(h, e, a.ambient_dim());
}

RationalVec lattice_coordinates(const Matrix& basis_inverse, const RationalVec& x) {
  return basis_inverse.apply_left(x);
}

namespace {

Matrix checked_inverse(const Matrix& basis, std::size_t n) {
  if (basis.rows() != n || basis.cols() != n)
    throw InputError("lattice basis must be " + std::to_string(n) + "x" + std::to_string(n));
  if (determinant(basis) == 0) throw InputError("singular lattice basis");
  return inverse(basis);
}

std::vector<RationalVec> to_lattice(const std::vector<RationalVec>& pts, const Matrix& binv) {
  std::vector<RationalVec> out;
  for (const auto& x : pts) out.push_back(lattice_coordinates(binv, x));
  return out;
}

void require_bounded(const PolytopeQ& p, const char* what) {
  if (!p.is_bounded()) throw PreconditionError(std::string(what) + ": unbounded input");
}

}  // namespace

Rational polytope_volume(const PolytopeQ& p, const Matrix& lattice_basis) {
  const std::size_t n = p.ambient_dim();
  const Matrix binv = checked_inverse(lattice_basis, n);
  require_bounded(p, "polytope_volume");
  if (p.is_empty() || p.dim() < static_cast<int>(n)) return 0;
  const auto ys = to_lattice(p.vertices(), binv);
  const auto q = PolytopeQ::convex_hull(ys, n);
  const auto t = push_triangulate(q, q.vertices());
  Rational vol = 0;
  for (const auto& s : t.simplices) {
    std::vector<RationalVec> vs;
    for (auto i : s) vs.push_back(t.points[i]);
    vol += simplex_volume(vs);
  }
  return vol;
}

Rational relative_volume(const PolytopeQ& p, const Matrix& lattice_basis) {
  const std::size_t n = p.ambient_dim();
  const Matrix binv = checked_inverse(lattice_basis, n);
  require_bounded(p, "relative_volume");
  if (p.is_empty()) return 0;
  if (p.dim() == 0) return 1;
  const auto ys = to_lattice(p.vertices(), binv);
  std::vector<RationalVec> dirs;
  for (const auto& y : ys) dirs.push_back(sub(y, ys.front()));
  const auto sub_basis = saturated_lattice_basis(dirs, n);
  std::vector<RationalVec> local;
  for (const auto& d : dirs) {
    auto c = coordinates_in(sub_basis, d);
    if (!c) throw PreconditionError("relative_volume: internal lattice error");
    local.push_back(*c);
  }
  const std::size_t k = sub_basis.size();
  return polytope_volume(PolytopeQ::convex_hull(local, k), Matrix::identity(k));
}

std::vector<RationalVec> lattice_points(const PolytopeQ& p, const Matrix& lattice_basis) {
  const std::size_t n = p.ambient_dim();
  const Matrix binv = checked_inverse(lattice_basis, n);
  require_bounded(p, "lattice_points");
  std::vector<RationalVec> out;
  if (p.is_empty()) return out;
  const auto q = PolytopeQ::convex_hull(to_lattice(p.vertices(), binv), n);
  std::function<void(const PolytopeQ&, std::size_t)> slice = [&](const PolytopeQ& cur, std::size_t level) {
    if (cur.is_empty()) return;
    if (cur.dim() == 0) {
      const auto& y = cur.vertices().front();
      for (std::size_t i = level; i < n; ++i)
        if (!is_integer(y[i])) return;
      out.push_back(lattice_basis.apply_left(y));
      return;
    }
    Rational lo = cur.vertices().front()[level], hi = lo;
    for (const auto& v : cur.vertices()) {
      lo = std::min(lo, v[level]);
      hi = std::max(hi, v[level]);
    }
    auto eqs = cur.equations();
    eqs.push_back({unit_vec(n, level), 0});
    for (Integer c = ceil_of(lo); c <= floor_of(hi); ++c) {
      eqs.back().offset = Rational(-c);
      slice(PolytopeQ::from_halfspaces(cur.facets(), eqs, n), level + 1);
    }
  };
  slice(q, 0);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

PolytopeQ polar_polytope(const PolytopeQ& p) {
  require_bounded(p, "polar_polytope");
  if (p.is_empty() || p.dim() != static_cast<int>(p.ambient_dim()) || !p.contains_in_interior(zero_vec(p.ambient_dim())))
    throw PreconditionError("polar_polytope: 0 is not in the interior");
  std::vector<AffineForm> h;
  for (const auto& v : p.vertices()) h.push_back({v, 1});
  return PolytopeQ::from_halfspaces(h, {}, p.ambient_dim());
}

}  // namespace symvar
