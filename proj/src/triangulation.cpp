#include "symvar/triangulation.hpp"

#include <algorithm>
#include <set>

#include "symvar/linalg.hpp"

namespace symvar {

AffineChart::AffineChart(const std::vector<RationalVec>& points) {
  if (points.empty()) throw InputError("AffineChart needs at least one point");
  origin_ = points.front();
  std::vector<RationalVec> dirs;
  for (const auto& p : points) dirs.push_back(sub(p, origin_));
  pivots_ = rref(Matrix::from_rows(dirs, origin_.size())).pivots;
}

RationalVec AffineChart::coords(const RationalVec& x) const {
  const RationalVec d = sub(x, origin_);
  RationalVec c;
  c.reserve(pivots_.size());
  for (auto p : pivots_) c.push_back(d[p]);
  return c;
}

Rational simplex_volume(const std::vector<RationalVec>& vertices) {
  const std::size_t d = vertices.size() - 1;
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = vertices[i + 1][j] - vertices[0][j];
  Rational det = abs(determinant(m));
  for (std::size_t i = 2; i <= d; ++i) det /= static_cast<unsigned long>(i);
  return det;
}

namespace {

std::size_t affine_rank(const std::vector<RationalVec>& pts, const std::vector<std::size_t>& ids) {
  if (ids.empty()) return 0;
  std::vector<RationalVec> dirs;
  for (auto i : ids) dirs.push_back(sub(pts[i], pts[ids.front()]));
  return rank(dirs, pts.front().size());
}

}  // namespace

Triangulation push_triangulate(const PolytopeQ& p, const std::vector<RationalVec>& vertex_order) {
  if (p.is_empty()) throw PreconditionError("push_triangulate: empty polytope");
  if (!p.is_bounded()) throw PreconditionError("push_triangulate: unbounded polytope");
  std::set<RationalVec, LexLess> seen;
  for (const auto& x : vertex_order) {
    if (x.size() != p.ambient_dim()) throw InputError("push_triangulate: point of wrong dimension");
    if (!seen.insert(x).second) throw InputError("push_triangulate: repeated point " + to_string(x));
    if (!p.contains(x)) throw InputError("push_triangulate: point outside the polytope " + to_string(x));
  }
  for (const auto& v : p.vertices())
    if (!seen.count(v)) throw InputError("push_triangulate: vertex missing from the order " + to_string(v));

  const AffineChart chart(p.vertices());
  const std::size_t k = chart.dim();
  std::vector<RationalVec> pts;
  for (const auto& x : vertex_order) pts.push_back(chart.coords(x));

  std::vector<Simplex> cells;
  {
    Simplex all(pts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    cells.push_back(all);
  }
  for (std::size_t v = 0; v < pts.size(); ++v) {
    std::vector<Simplex> next;
    for (auto& cell : cells) {
      auto it = std::find(cell.begin(), cell.end(), v);
      if (it == cell.end()) {
        next.push_back(std::move(cell));
        continue;
      }
      Simplex rest = cell;
      rest.erase(rest.begin() + (it - cell.begin()));
      if (rest.empty() || affine_rank(pts, rest) < k) {
        next.push_back(std::move(cell));
        continue;
      }
      std::vector<RationalVec> rest_pts;
      for (auto i : rest) rest_pts.push_back(pts[i]);
      const auto hull = PolytopeQ::convex_hull(rest_pts, k);
      for (const auto& f : hull.facets()) {
        if (f(pts[v]) >= 0) continue;
        Simplex pyramid;
        for (auto i : rest)
          if (f(pts[i]) == 0) pyramid.push_back(i);
        pyramid.push_back(v);
        std::sort(pyramid.begin(), pyramid.end());
        next.push_back(std::move(pyramid));
      }
      next.push_back(std::move(rest));
    }
    cells = std::move(next);
  }
  for (const auto& c : cells)
    if (c.size() != k + 1) throw PreconditionError("push_triangulate: pushing left a non-simplex cell");
  std::sort(cells.begin(), cells.end());
  return {vertex_order, std::move(cells), p};
}

std::vector<Simplex> boundary_simplices(const Triangulation& t) {
  const AffineChart chart(t.parent.vertices());
  const std::size_t k = chart.dim();
  if (k == 0) return {};
  std::vector<RationalVec> pts;
  for (const auto& x : t.points) pts.push_back(chart.coords(x));
  const auto hull = PolytopeQ::convex_hull(pts, k);
  std::set<Simplex> out;
  for (const auto& s : t.simplices)
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) face.push_back(s[j]);
      for (const auto& f : hull.facets()) {
        bool on = true;
        for (auto i : face) on = on && f(pts[i]) == 0;
        if (on) {
          out.insert(face);
          break;
        }
      }
    }
  return {out.begin(), out.end()};
}

}  // namespace symvar
