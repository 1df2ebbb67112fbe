#include "symvar/oracles.hpp"

#include <algorithm>
#include <functional>

#include "symvar/fingerprint.hpp"
#include "symvar/lp.hpp"

namespace symvar {

OracleReport make_report(std::string quantity, std::string fast, std::string oracle, std::string instance) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.agree = fast == oracle;
  r.fast = std::move(fast);
  r.oracle = std::move(oracle);
  r.fingerprint = sha256_hex(instance);
  return r;
}

namespace {

RationalVec barycenter_of(const std::vector<RationalVec>& pts) {
  RationalVec c = zero_vec(pts.front().size());
  for (const auto& p : pts) c = add(c, p);
  return scale(c, Rational(1, static_cast<long>(pts.size())));
}

}  // namespace

Rational brute_volume(const PolytopeQ& p, const Matrix& lattice_basis) {
  if (!p.is_bounded()) throw PreconditionError("brute_volume: unbounded polytope");
  const std::size_t d = p.ambient_dim();
  if (p.is_empty() || p.dim() < static_cast<int>(d)) return 0;
  const Matrix binv = inverse(lattice_basis);
  std::vector<RationalVec> pts;
  for (const auto& v : p.vertices()) pts.push_back(lattice_coordinates(binv, v));
  Rational total = 0;
  std::vector<RationalVec> chain;
  std::function<void(const std::vector<RationalVec>&, int)> walk = [&](const std::vector<RationalVec>& verts, int k) {
    if (k == 0) {
      chain.push_back(verts.front());
      Matrix m(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = chain[i + 1][j] - chain[0][j];
      total += abs(determinant(m));
      chain.pop_back();
      return;
    }
    chain.push_back(barycenter_of(verts));
    const PolytopeQ face = PolytopeQ::convex_hull(verts, d);
    for (const auto& f : face.facets()) {
      std::vector<RationalVec> sub;
      for (const auto& v : verts)
        if (f(v) == 0) sub.push_back(v);
      walk(sub, k - 1);
    }
    chain.pop_back();
  };
  walk(pts, static_cast<int>(d));
  Rational fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<long>(i);
  return total / fact;
}

std::vector<RationalVec> brute_lattice_point_list(const PolytopeQ& p, const Matrix& lattice_basis) {
  if (!p.is_bounded()) throw PreconditionError("brute_lattice_points: unbounded polytope");
  if (p.is_empty()) return {};
  const std::size_t d = p.ambient_dim();
  const Matrix binv = inverse(lattice_basis);
  std::vector<Integer> lo(d), hi(d);
  bool first = true;
  for (const auto& v : p.vertices()) {
    const RationalVec y = lattice_coordinates(binv, v);
    for (std::size_t i = 0; i < d; ++i) {
      const Integer f = floor_of(y[i]), c = ceil_of(y[i]);
      if (first || f < lo[i]) lo[i] = f;
      if (first || c > hi[i]) hi[i] = c;
    }
    first = false;
  }
  std::vector<RationalVec> out;
  RationalVec y(d);
  std::function<void(std::size_t)> scan = [&](std::size_t i) {
    if (i == d) {
      const RationalVec x = lattice_basis.apply_left(y);
      bool in = true;
      for (const auto& f : p.facets()) in = in && f(x) >= 0;
      for (const auto& e : p.equations()) in = in && e(x) == 0;
      if (in) out.push_back(x);
      return;
    }
    for (Integer t = lo[i]; t <= hi[i]; ++t) {
      y[i] = Rational(t);
      scan(i + 1);
    }
  };
  scan(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t brute_lattice_points(const PolytopeQ& p, const Matrix& lattice_basis) {
  return brute_lattice_point_list(p, lattice_basis).size();
}

bool brute_in_cone(const std::vector<RationalVec>& generators, const RationalVec& c) {
  if (generators.empty()) return is_zero(c);
  const std::size_t dim = c.size();
  LinearProgram lp(generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) lp.set_nonnegative(j);
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVec row;
    for (const auto& g : generators) row.push_back(g[i]);
    lp.add_constraint(row, Relation::Equal, c[i]);
  }
  return lp.feasible_point().has_value();
}

bool brute_in_interior(const std::vector<RationalVec>& generators, const RationalVec& c) {
  // Σ λ_g g = t c with λ_g >= 1, t >= 0; c is interior iff t can be positive.
  const std::size_t k = generators.size(), dim = c.size();
  if (k == 0) return false;
  if (rank(generators, dim) < dim) return false;
  LinearProgram lp(k + 1);
  for (std::size_t j = 0; j <= k; ++j) lp.set_nonnegative(j);
  for (std::size_t j = 0; j < k; ++j) {
    RationalVec row = zero_vec(k + 1);
    row[j] = 1;
    lp.add_constraint(row, Relation::GreaterEq, 1);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVec row;
    for (const auto& g : generators) row.push_back(g[i]);
    row.push_back(-c[i]);
    lp.add_constraint(row, Relation::Equal, 0);
  }
  RationalVec obj = zero_vec(k + 1);
  obj[k] = 1;
  lp.set_objective(obj);
  const auto r = lp.solve();
  if (r.status == LinearProgram::Status::Unbounded) return true;
  return r.status == LinearProgram::Status::Optimal && r.value > 0;
}

ExtremalRays brute_extremal_rays(const std::vector<RationalVec>& generators) {
  ExtremalRays out;
  std::vector<bool> done(generators.size(), false);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (done[i] || is_zero(generators[i])) continue;
    std::vector<std::size_t> same;
    std::vector<RationalVec> others;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (positively_proportional(generators[i], generators[j]))
        same.push_back(j);
      else
        others.push_back(generators[j]);
    }
    for (auto j : same) done[j] = true;
    if (brute_in_cone(others, generators[i])) continue;
    out.extremal.insert(out.extremal.end(), same.begin(), same.end());
    out.rays.push_back(same);
  }
  std::sort(out.extremal.begin(), out.extremal.end());
  return out;
}

std::string to_string(BigVerdict v) {
  switch (v) {
    case BigVerdict::Big:
      return "big";
    case BigVerdict::NotBigUpToM:
      return "not-big-up-to-M";
    case BigVerdict::Undecided:
      return "undecided";
  }
  return "undecided";
}

BDivisor l1_normalized(const BDivisor& a) {
  Rational norm = 0;
  for (const auto& [k, x] : a.colors) norm += abs(x);
  for (const auto& [k, x] : a.rays) norm += abs(x);
  if (norm == 0) return a;
  return (1 / norm) * a;
}

BigVerdict brute_big_test(const ColoredFan& fan, const BDivisor& d, const BDivisor& ample, int max_m) {
  bool ok = false;
  try {
    ok = is_ample(fan, ample);
  } catch (const PreconditionError&) {
    ok = false;
  }
  if (!ok) return BigVerdict::Undecided;
  std::vector<RationalVec> gens;
  for (const auto& name : prime_divisor_names(fan)) gens.push_back(divisor_class(fan, prime_divisor(fan, name)));
  const RationalVec cd = divisor_class(fan, d), ca = divisor_class(fan, ample);
  for (int m = 1; m <= max_m; ++m)
    if (brute_in_cone(gens, sub(scale(cd, m), ca))) return BigVerdict::Big;
  return BigVerdict::NotBigUpToM;
}

}  // namespace symvar
