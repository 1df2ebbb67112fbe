#include "symvar/symmetric_space.hpp"

#include <algorithm>
#include <sstream>

namespace symvar {

struct ClosureAccess {
  static void set_unresolved(SymmetricSpaceData& d) { d.lattice_unresolved_ = true; }
  static std::vector<ColorSpec>& colors(SymmetricSpaceData& d) { return d.colors_; }
};

std::string ColorId::name() const {
  std::string s = "F" + std::to_string(root);
  if (sign == ColorSign::Plus) s += "+";
  if (sign == ColorSign::Minus) s += "-";
  return s;
}

ColorId ColorId::parse(const std::string& name) {
  if (name.size() < 2 || name[0] != 'F') throw InputError("malformed color name '" + name + "'");
  ColorId c;
  std::string digits = name.substr(1);
  if (digits.back() == '+' || digits.back() == '-') {
    c.sign = digits.back() == '+' ? ColorSign::Plus : ColorSign::Minus;
    digits.pop_back();
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw InputError("malformed color name '" + name + "'");
  c.root = std::stoul(digits);
  return c;
}

bool ValidationReport::mentions(const std::string& clause) const {
  return std::any_of(issues.begin(), issues.end(), [&](const ValidationIssue& i) { return i.clause == clause; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issues[i].clause << ": " << issues[i].detail;
  }
  return os.str();
}

SymmetricSpaceData SymmetricSpaceData::make(std::vector<FactorSpec> factors, Matrix lattice,
                                            std::vector<ColorSpec> colors) {
  SymmetricSpaceData d;
  std::vector<CartanLabel> labels;
  for (const auto& f : factors) labels.push_back(f.label);
  d.roots_ = RestrictedRootSystem::build(labels);
  const std::size_t n = d.roots_.rank();
  if (lattice.rows() != n || lattice.cols() != n)
    throw InputError("lattice basis must be " + std::to_string(n) + "x" + std::to_string(n));
  d.factors_ = std::move(factors);
  d.lattice_ = std::move(lattice);
  std::sort(colors.begin(), colors.end(), [](const ColorSpec& a, const ColorSpec& b) { return a.root < b.root; });
  d.colors_ = std::move(colors);
  return d;
}

Matrix SymmetricSpaceData::dual_lattice() const {
  if (determinant(lattice_) == 0) throw InputError("singular lattice basis");
  return inverse(lattice_).transpose();
}

const ColorSpec& SymmetricSpaceData::color_spec(std::size_t root) const {
  for (const auto& c : colors_)
    if (c.root == root) return c;
  throw InputError("no color declared over simple root " + std::to_string(root));
}

std::vector<std::vector<std::size_t>> SymmetricSpaceData::factor_partition() const {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    std::vector<std::size_t> block;
    for (int i = 0; i < factors_[f].label.rank; ++i) block.push_back(roots_.offsets()[f] + static_cast<std::size_t>(i));
    out.push_back(std::move(block));
  }
  return out;
}

std::size_t SymmetricSpaceData::factor_of(std::size_t root) const {
  for (std::size_t f = factors_.size(); f-- > 0;)
    if (root >= roots_.offsets()[f]) return f;
  throw InputError("simple root index out of range");
}

std::vector<ColorId> SymmetricSpaceData::colors() const {
  std::vector<ColorId> out;
  for (const auto& c : colors_) {
    if (c.multiplicity == 2) {
      out.push_back({c.root, ColorSign::Plus});
      out.push_back({c.root, ColorSign::Minus});
    } else {
      out.push_back({c.root, ColorSign::None});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SymmetricSpaceData::has_color(const ColorId& c) const {
  const auto all = colors();
  return std::binary_search(all.begin(), all.end(), c);
}

ValidationReport validate_space(const SymmetricSpaceData& d) {
  ValidationReport r;
  auto add = [&](std::string clause, std::string detail) { r.issues.push_back({std::move(clause), std::move(detail)}); };
  const std::size_t n = d.rank();
  const auto& rs = d.roots();

  std::vector<int> seen(n, 0);
  for (const auto& c : d.color_specs()) {
    if (c.root >= n) {
      add("color root index in range", "color over root " + std::to_string(c.root) + " but rank is " + std::to_string(n));
      continue;
    }
    ++seen[c.root];
    if (c.multiplicity != 1 && c.multiplicity != 2)
      add("multiplicity is 1 or 2", "root " + std::to_string(c.root) + " has multiplicity " + std::to_string(c.multiplicity));
    if (c.exceptional && c.multiplicity != 2)
      add("exceptional root carries two colors", "root " + std::to_string(c.root));
    if (c.exceptional && !rs.is_root(scale(rs.simple_root(c.root), 2)))
      add("2α is a restricted root", "root " + std::to_string(c.root) + " is not multipliable");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i] != 1)
      add("one color spec per simple root", "root " + std::to_string(i) + " has " + std::to_string(seen[i]) + " specs");

  const Matrix& l = d.lattice();
  bool integral = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) integral = integral && is_integer(l(i, j));
  if (!integral) add("χ(S) inside the spherical weight lattice", "lattice basis has non-integral ω-coordinates");
  if (determinant(l) == 0) {
    add("lattice basis invertible", "lattice basis is singular");
  } else {
    const Matrix inv = inverse(l);
    for (std::size_t i = 0; i < n; ++i) {
      const RationalVec c = inv.apply_left(rs.simple_root(i));
      if (!std::all_of(c.begin(), c.end(), [](const Rational& x) { return is_integer(x); }))
        add("restricted root lattice inside χ(S)", "simple root " + std::to_string(i) + " is not in χ(S)");
    }
  }

  const auto parts = d.factor_partition();
  for (std::size_t f = 0; f < parts.size(); ++f) {
    bool any_double = false, any_exceptional = false;
    for (auto i : parts[f])
      for (const auto& c : d.color_specs())
        if (c.root == i) {
          any_double = any_double || c.multiplicity == 2;
          any_exceptional = any_exceptional || c.exceptional;
        }
    if (d.factors()[f].extra_color && !any_double)
      add("extra_color consistent with multiplicities",
          "factor " + std::to_string(f) + " declares extra colors but every fibre has one color");
    if (any_exceptional && !d.factors()[f].extra_color)
      add("extra_color consistent with multiplicities",
          "factor " + std::to_string(f) + " has an exceptional root but extra_color is false");
  }
  return r;
}

RationalVec color_image(const SymmetricSpaceData& d, const ColorId& c) {
  if (!d.has_color(c)) throw InputError("unknown color " + c.name());
  return d.roots().simple_coroot(c.root);
}

ValuationCone valuation_cone(const SymmetricSpaceData& d) { return {d.roots().negative_chamber(), d.dual_lattice()}; }

ClosureResult spherical_closure(const SymmetricSpaceData& d) {
  ClosureResult out{d, {}};
  const auto parts = d.factor_partition();
  auto& colors = ClosureAccess::colors(out.space);
  for (std::size_t f = 0; f < parts.size(); ++f) {
    const bool closed = !d.factors()[f].extra_color;
    out.closed.push_back(closed);
    if (!closed) continue;
    for (auto& c : colors)
      if (std::find(parts[f].begin(), parts[f].end(), c.root) != parts[f].end() && c.multiplicity == 2 &&
          !c.exceptional)
        c.multiplicity = 1;
  }
  ClosureAccess::set_unresolved(out.space);
  return out;
}

bool is_exceptional_space(const SymmetricSpaceData& d) {
  return std::any_of(d.color_specs().begin(), d.color_specs().end(), [](const ColorSpec& c) { return c.exceptional; });
}

SymmetricSpaceData builtin_space(const std::string& name) {
  if (name == "A1-rank1")
    return SymmetricSpaceData::make({{{Family::A, 1}, false}}, Matrix::identity(1), {{0, 1, false}});
  if (name == "A1xA1")
    return SymmetricSpaceData::make({{{Family::A, 1}, false}, {{Family::A, 1}, false}}, Matrix::identity(2),
                                    {{0, 1, false}, {1, 1, false}});
  if (name == "BC1-exceptional")
    return SymmetricSpaceData::make({{{Family::BC, 1}, true}}, Matrix::identity(1), {{0, 2, true}});
  if (name == "A2")
    return SymmetricSpaceData::make({{{Family::A, 2}, false}}, Matrix::identity(2), {{0, 1, false}, {1, 1, false}});
  if (name == "A1xBC1")
    return SymmetricSpaceData::make({{{Family::A, 1}, false}, {{Family::BC, 1}, true}}, Matrix::identity(2),
                                    {{0, 1, false}, {1, 2, true}});
  throw InputError("unknown built-in space '" + name + "'");
}

std::vector<std::string> builtin_space_names() { return {"A1-rank1", "A1xA1", "BC1-exceptional", "A2", "A1xBC1"}; }

}  // namespace symvar
