#include "symvar/root_data.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>

namespace symvar {

namespace {

constexpr std::size_t kMaxWeylOrder = 200000;

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer pow2(int n) {
  Integer p = 1;
  for (int i = 0; i < n; ++i) p *= 2;
  return p;
}

// Gram matrix (twice-normalized lengths) of one irreducible factor.
Matrix factor_gram(const CartanLabel& l) {
  const int n = l.rank;
  Matrix g(n, n);
  auto bond = [&](int i, int j, long value) {
    g(i, j) = value;
    g(j, i) = value;
  };
  switch (l.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1);
      break;
    case Family::B:
    case Family::BC:
      for (int i = 0; i < n; ++i) g(i, i) = 4;
      g(n - 1, n - 1) = 2;
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      g(n - 1, n - 1) = 4;
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1);
      if (n >= 2) bond(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1);
      bond(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      bond(0, 2, -1);
      bond(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, -1);
      break;
    case Family::F:
      g(0, 0) = 4;
      g(1, 1) = 4;
      g(2, 2) = 2;
      g(3, 3) = 2;
      bond(0, 1, -2);
      bond(1, 2, -2);
      bond(2, 3, -1);
      break;
    case Family::G:
      g(0, 0) = 2;
      g(1, 1) = 6;
      bond(0, 1, -3);
      break;
  }
  return g;
}

std::vector<RationalVec> bfs_orbit(const RationalVec& start, std::size_t rank,
                                   const std::function<RationalVec(std::size_t, const RationalVec&)>& reflect) {
  std::set<RationalVec, LexLess> seen{start};
  std::deque<RationalVec> todo{start};
  while (!todo.empty()) {
    RationalVec x = std::move(todo.front());
    todo.pop_front();
    for (std::size_t i = 0; i < rank; ++i) {
      RationalVec y = reflect(i, x);
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  static const std::map<std::string, Family> table{{"A", Family::A}, {"B", Family::B}, {"C", Family::C},
                                                   {"D", Family::D}, {"E", Family::E}, {"F", Family::F},
                                                   {"G", Family::G}, {"BC", Family::BC}};
  auto it = table.find(s);
  if (it == table.end()) throw InputError("unknown root system family '" + s + "'");
  return it->second;
}

std::string to_string(const CartanLabel& l) { return to_string(l.family) + std::to_string(l.rank); }

void check_label(const CartanLabel& l) {
  bool ok = false;
  switch (l.family) {
    case Family::A: ok = l.rank >= 1; break;
    case Family::B: ok = l.rank >= 2; break;
    case Family::C: ok = l.rank >= 2; break;
    case Family::D: ok = l.rank >= 4; break;
    case Family::E: ok = l.rank >= 6 && l.rank <= 8; break;
    case Family::F: ok = l.rank == 4; break;
    case Family::G: ok = l.rank == 2; break;
    case Family::BC: ok = l.rank >= 1; break;
  }
  if (!ok) throw InputError("invalid root system " + to_string(l));
}

Integer weyl_group_order(const CartanLabel& l) {
  check_label(l);
  const int n = l.rank;
  switch (l.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return pow2(n) * factorial(n);
    case Family::D: return pow2(n - 1) * factorial(n);
    case Family::E: return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

RationalVec IntMatrix::apply(const RationalVec& x) const {
  RationalVec y = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i * n + j] != 0) y[i] += x[j] * a[i * n + j];
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix p{n, std::vector<long>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const long x = a[i * n + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) p.a[i * n + j] += x * o.a[k * n + j];
    }
  return p;
}

struct RestrictedRootSystem::Cache {
  std::once_flag weyl_once;
  WeylGroup weyl;
  std::once_flag roots_once;
  std::vector<RationalVec> roots;
};

RestrictedRootSystem RestrictedRootSystem::build(const std::vector<CartanLabel>& labels) {
  RestrictedRootSystem r;
  r.labels_ = labels;
  std::size_t n = 0;
  for (const auto& l : labels) {
    check_label(l);
    r.offsets_.push_back(n);
    n += static_cast<std::size_t>(l.rank);
  }
  r.gram_ = Matrix(n, n);
  for (std::size_t f = 0; f < labels.size(); ++f) {
    const Matrix g = factor_gram(labels[f]);
    const std::size_t o = r.offsets_[f];
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) r.gram_(o + i, o + j) = g(i, j);
    if (labels[f].family == Family::BC) r.multipliable_.insert(o + static_cast<std::size_t>(labels[f].rank) - 1);
  }
  r.cartan_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.cartan_(i, j) = 2 * r.gram_(i, j) / r.gram_(j, j);
  r.cache_ = std::make_shared<Cache>();
  return r;
}

RationalVec RestrictedRootSystem::simple_root(std::size_t i) const { return cartan_.row(i); }
RationalVec RestrictedRootSystem::simple_coroot(std::size_t i) const { return unit_vec(rank(), i); }
RationalVec RestrictedRootSystem::fundamental_weight(std::size_t i) const { return unit_vec(rank(), i); }

std::vector<RationalVec> RestrictedRootSystem::fundamental_coweights() const {
  if (rank() == 0) return {};
  const Matrix inv = inverse(cartan_);
  std::vector<RationalVec> out;
  for (std::size_t j = 0; j < rank(); ++j) out.push_back(inv.column(j));
  return out;
}

Rational RestrictedRootSystem::pairing(const RationalVec& m, const RationalVec& v) const {
  if (m.size() != rank() || v.size() != rank()) throw InputError("pairing: dimension mismatch");
  return dot(m, v);
}

bool RestrictedRootSystem::is_dominant(const RationalVec& m, bool strict) const {
  if (m.size() != rank()) throw InputError("is_dominant: dimension mismatch");
  for (const auto& x : m)
    if (x < 0 || (strict && x == 0)) return false;
  return true;
}

bool RestrictedRootSystem::is_antidominant(const RationalVec& m, bool strict) const {
  return is_dominant(negate(m), strict);
}

RationalVec RestrictedRootSystem::reflect_weight(std::size_t i, const RationalVec& m) const {
  return axpy(m, -m.at(i), cartan_.row(i));
}

RationalVec RestrictedRootSystem::reflect_covector(std::size_t i, const RationalVec& v) const {
  RationalVec w = v;
  w.at(i) -= dot(cartan_.row(i), v);
  return w;
}

std::vector<RationalVec> RestrictedRootSystem::weyl_orbit(const RationalVec& m) const {
  if (m.size() != rank()) throw InputError("weyl_orbit: dimension mismatch");
  return bfs_orbit(m, rank(), [this](std::size_t i, const RationalVec& x) { return reflect_weight(i, x); });
}

std::vector<RationalVec> RestrictedRootSystem::weyl_orbit_covector(const RationalVec& v) const {
  if (v.size() != rank()) throw InputError("weyl_orbit_covector: dimension mismatch");
  return bfs_orbit(v, rank(), [this](std::size_t i, const RationalVec& x) { return reflect_covector(i, x); });
}

Integer RestrictedRootSystem::expected_weyl_order() const {
  Integer o = 1;
  for (const auto& l : labels_) o *= weyl_group_order(l);
  return o;
}

const WeylGroup& RestrictedRootSystem::weyl_group() const {
  if (expected_weyl_order() > kMaxWeylOrder)
    throw PreconditionError("Weyl group of order " + expected_weyl_order().get_str() + " is too large to enumerate");
  std::call_once(cache_->weyl_once, [this] {
    const std::size_t n = rank();
    std::vector<IntMatrix> gens_w, gens_c;
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix w{n, std::vector<long>(n * n, 0)}, c{n, std::vector<long>(n * n, 0)};
      for (std::size_t k = 0; k < n; ++k) {
        w.a[k * n + k] = 1;
        c.a[k * n + k] = 1;
      }
      // s_i(m)_k = m_k - m_i * cartan(i, k)
      for (std::size_t k = 0; k < n; ++k) w.a[k * n + i] -= cartan_(i, k).get_num().get_si();
      // s_i(v)_i = v_i - sum_k cartan(i, k) v_k
      for (std::size_t k = 0; k < n; ++k) c.a[i * n + k] -= cartan_(i, k).get_num().get_si();
      gens_w.push_back(std::move(w));
      gens_c.push_back(std::move(c));
    }
    IntMatrix id{n, std::vector<long>(n * n, 0)};
    for (std::size_t k = 0; k < n; ++k) id.a[k * n + k] = 1;
    WeylGroup g;
    std::map<IntMatrix, std::size_t> index{{id, 0}};
    g.weight.push_back(id);
    g.covector.push_back(id);
    for (std::size_t head = 0; head < g.weight.size(); ++head)
      for (std::size_t i = 0; i < n; ++i) {
        IntMatrix w = gens_w[i] * g.weight[head];
        if (index.count(w)) continue;
        index.emplace(w, g.weight.size());
        g.covector.push_back(gens_c[i] * g.covector[head]);
        g.weight.push_back(std::move(w));
      }
    cache_->weyl = std::move(g);
  });
  return cache_->weyl;
}

const std::vector<RationalVec>& RestrictedRootSystem::roots() const {
  std::call_once(cache_->roots_once, [this] {
    std::set<RationalVec, LexLess> all;
    for (std::size_t i = 0; i < rank(); ++i) {
      for (auto& r : weyl_orbit(simple_root(i))) all.insert(r);
      if (multipliable_.count(i))
        for (auto& r : weyl_orbit(scale(simple_root(i), 2))) all.insert(r);
    }
    cache_->roots.assign(all.begin(), all.end());
  });
  return cache_->roots;
}

bool RestrictedRootSystem::is_root(const RationalVec& m) const {
  const auto& rs = roots();
  return std::binary_search(rs.begin(), rs.end(), m, LexLess{});
}

std::vector<std::vector<std::size_t>> RestrictedRootSystem::irreducible_factors() const {
  const std::size_t n = rank();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members;
    std::deque<std::size_t> todo{s};
    comp[s] = static_cast<int>(out.size());
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop_front();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && cartan_(i, j) != 0) {
          comp[j] = comp[s];
          todo.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

ConeQ RestrictedRootSystem::negative_chamber() const {
  std::vector<RationalVec> ineq;
  for (std::size_t i = 0; i < rank(); ++i) ineq.push_back(negate(cartan_.row(i)));
  return ConeQ::from_inequalities(ineq, {}, rank());
}

ConeQ RestrictedRootSystem::dominant_chamber() const {
  std::vector<RationalVec> ineq;
  for (std::size_t i = 0; i < rank(); ++i) ineq.push_back(unit_vec(rank(), i));
  return ConeQ::from_inequalities(ineq, {}, rank());
}

}  // namespace symvar
