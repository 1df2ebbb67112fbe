#include "symvar/cli.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "symvar/fingerprint.hpp"
#include "symvar/oracles.hpp"
#include "symvar/qfactorialize.hpp"

namespace symvar {

using json = nlohmann::json;

bool Workspace::operator==(const Workspace& o) const {
  if (!(space == o.space) || fans != o.fans || divisors.size() != o.divisors.size()) return false;
  for (const auto& [k, d] : divisors) {
    auto it = o.divisors.find(k);
    if (it == o.divisors.end() || !(it->second == d)) return false;
  }
  return true;
}

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : "; ") + x;
  return out;
}

}  // namespace

WorkspaceError::WorkspaceError(std::vector<std::string> issues)
    : InputError("invalid workspace: " + join(issues)), issues_(std::move(issues)) {}

namespace {

// ---- reading ----

Rational read_q(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError(where + ": malformed rational '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError(where + ": expected a rational as a \"p/q\" string");
}

RationalVec read_vec(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  RationalVec out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_q(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing key \"" + key + "\"");
  return j.at(key);
}

template <class T>
T read_as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw InputError(where + ": wrong type");
  }
}

SymmetricSpaceData read_space(const json& j) {
  std::vector<FactorSpec> factors;
  const json& fs = member(j, "factors", "space");
  if (!fs.is_array()) throw InputError("space.factors: expected an array");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string w = "space.factors[" + std::to_string(i) + "]";
    FactorSpec f{{parse_family(read_as<std::string>(member(fs[i], "type", w), w + ".type")),
                  read_as<int>(member(fs[i], "rank", w), w + ".rank")},
                 fs[i].contains("extra_color") ? read_as<bool>(fs[i]["extra_color"], w + ".extra_color") : false};
    factors.push_back(f);
  }
  const json& lb = member(j, "lattice_basis", "space");
  if (!lb.is_array()) throw InputError("space.lattice_basis: expected an array of rows");
  std::vector<RationalVec> rows;
  for (std::size_t i = 0; i < lb.size(); ++i) rows.push_back(read_vec(lb[i], "space.lattice_basis[" + std::to_string(i) + "]"));
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix lattice(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("space.lattice_basis: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) lattice(i, k) = rows[i][k];
  }
  std::vector<ColorSpec> colors;
  const json& cs = member(j, "colors", "space");
  if (!cs.is_array()) throw InputError("space.colors: expected an array");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string w = "space.colors[" + std::to_string(i) + "]";
    ColorSpec c;
    c.root = read_as<std::size_t>(member(cs[i], "root", w), w + ".root");
    c.multiplicity = read_as<int>(member(cs[i], "multiplicity", w), w + ".multiplicity");
    c.exceptional = cs[i].contains("exceptional") ? read_as<bool>(cs[i]["exceptional"], w + ".exceptional") : false;
    colors.push_back(c);
  }
  return SymmetricSpaceData::make(std::move(factors), std::move(lattice), std::move(colors));
}

ColoredFan read_fan(const SymmetricSpaceData& space, const json& j, const std::string& where) {
  const json& cs = member(j, "cones", where);
  if (!cs.is_array()) throw InputError(where + ".cones: expected an array");
  std::vector<ColoredCone> cones;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string w = where + ".cones[" + std::to_string(i) + "]";
    std::vector<RationalVec> rays;
    const json& rs = member(cs[i], "rays", w);
    if (!rs.is_array()) throw InputError(w + ".rays: expected an array");
    for (std::size_t k = 0; k < rs.size(); ++k) {
      rays.push_back(read_vec(rs[k], w + ".rays[" + std::to_string(k) + "]"));
      if (rays.back().size() != space.rank())
        throw InputError(w + ".rays[" + std::to_string(k) + "]: expected " + std::to_string(space.rank()) + " coordinates");
    }
    std::set<ColorId> colors;
    if (cs[i].contains("colors"))
      for (const auto& c : cs[i]["colors"]) {
        const ColorId id = ColorId::parse(read_as<std::string>(c, w + ".colors"));
        if (!space.has_color(id)) throw InputError(w + ": unknown color " + id.name());
        colors.insert(id);
      }
    cones.push_back(make_colored_cone(space, rays, colors));
  }
  return ColoredFan(space, std::move(cones));
}

BDivisor read_divisor(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  BDivisor d;
  if (j.contains("colors"))
    for (const auto& [k, x] : j["colors"].items()) d.colors[ColorId::parse(k)] = read_q(x, where + ".colors." + k);
  if (j.contains("rays"))
    for (const auto& [k, x] : j["rays"].items()) d.rays[k] = read_q(x, where + ".rays." + k);
  for (const auto& [k, x] : j.items())
    if (k != "colors" && k != "rays") throw InputError(where + ": unknown key \"" + k + "\"");
  return d;
}

// ---- writing ----

json q_json(const Rational& q) { return to_string(q); }

json vec_json(const RationalVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(q_json(x));
  return out;
}

json vecs_json(const std::vector<RationalVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vec_json(v));
  return out;
}

json space_json(const SymmetricSpaceData& s) {
  json f = json::array();
  for (const auto& x : s.factors())
    f.push_back({{"type", to_string(x.label.family)}, {"rank", x.label.rank}, {"extra_color", x.extra_color}});
  json rows = json::array();
  for (std::size_t i = 0; i < s.lattice().rows(); ++i) {
    RationalVec r;
    for (std::size_t k = 0; k < s.lattice().cols(); ++k) r.push_back(s.lattice()(i, k));
    rows.push_back(vec_json(r));
  }
  json c = json::array();
  for (const auto& x : s.color_specs())
    c.push_back({{"root", x.root}, {"multiplicity", x.multiplicity}, {"exceptional", x.exceptional}});
  return {{"factors", f}, {"lattice_basis", rows}, {"colors", c}};
}

json cone_json(const SymmetricSpaceData& space, const ColoredCone& c) {
  std::vector<RationalVec> rays;
  for (const auto& r : c.cone.rays()) {
    bool color = false;
    for (const auto& col : c.colors) color = color || positively_proportional(r, color_image(space, col));
    if (!color) rays.push_back(r);
  }
  json cols = json::array();
  for (const auto& col : c.colors) cols.push_back(col.name());
  return {{"rays", vecs_json(rays)}, {"colors", cols}};
}

json fan_json(const ColoredFan& fan) {
  json cones = json::array();
  for (const auto& c : fan.cones()) cones.push_back(cone_json(fan.space(), c));
  return {{"cones", cones}};
}

json fan_report(const ColoredFan& fan) {
  json j = fan_json(fan);
  json rays = json::object();
  for (const auto& r : fan.rays()) rays[r.id] = vec_json(r.generator);
  j["ray_ids"] = rays;
  return j;
}

json divisor_json(const BDivisor& d) {
  json cols = json::object(), rays = json::object();
  for (const auto& [c, x] : d.normalized().colors) cols[c.name()] = q_json(x);
  for (const auto& [r, x] : d.normalized().rays) rays[r] = q_json(x);
  return {{"colors", cols}, {"rays", rays}};
}

std::string formal_sum(const BDivisor& d, const ColoredFan& fan) {
  std::string out;
  const auto names = prime_divisor_names(fan);
  const RationalVec x = divisor_vector(fan, d);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (x[i] == 0) continue;
    std::string term = x[i] == 1 ? names[i] : x[i] == -1 ? "-" + names[i] : to_string(x[i]) + "*" + names[i];
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

json class_json(const ColoredFan& fan, const RationalVec& cls) {
  return {{"coordinates", vec_json(cls)},
          {"basis", class_group(fan).basis},
          {"representative", formal_sum(divisor_with_class(fan, cls), fan)}};
}

}  // namespace

Workspace parse_workspace_text(const std::string& text, const ParseOptions& opts) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw WorkspaceError({std::string("parse error: ") + e.what()});
  }
  std::vector<std::string> issues;
  if (!j.is_object() || !j.contains("space")) throw WorkspaceError({"top level: missing key \"space\""});
  for (const auto& [k, x] : j.items())
    if (k != "space" && k != "fans" && k != "divisors") issues.push_back("top level: unknown key \"" + k + "\"");
  std::optional<SymmetricSpaceData> space;
  try {
    space = read_space(j["space"]);
  } catch (const InputError& e) {
    issues.push_back(e.what());
    throw WorkspaceError(issues);
  }
  if (space->rank() > opts.max_rank)
    throw WorkspaceError({"space: rank " + std::to_string(space->rank()) + " exceeds the limit " + std::to_string(opts.max_rank)});
  const auto sr = validate_space(*space);
  for (const auto& i : sr.issues) issues.push_back("space: " + i.clause + ": " + i.detail);
  if (!issues.empty()) throw WorkspaceError(issues);

  Workspace ws{*space, {}, {}};
  if (j.contains("fans")) {
    if (!j["fans"].is_object()) throw WorkspaceError({"fans: expected an object"});
    for (const auto& [name, fj] : j["fans"].items()) {
      try {
        ColoredFan fan = read_fan(*space, fj, "fans." + name);
        const auto r = validate_fan(fan);
        for (const auto& i : r.issues) issues.push_back("fans." + name + ": " + i.clause + ": " + i.detail);
        ws.fans.emplace(name, std::move(fan));
      } catch (const InputError& e) {
        issues.push_back(e.what());
      }
    }
  }
  if (j.contains("divisors")) {
    if (!j["divisors"].is_object()) throw WorkspaceError({"divisors: expected an object"});
    std::set<std::string> ray_ids;
    for (const auto& [n, f] : ws.fans)
      for (const auto& r : f.rays()) ray_ids.insert(r.id);
    for (const auto& [name, dj] : j["divisors"].items()) {
      const std::string w = "divisors." + name;
      try {
        BDivisor d = read_divisor(dj, w);
        for (const auto& [c, x] : d.colors)
          if (!space->has_color(c)) issues.push_back(w + ": unknown color " + c.name());
        for (const auto& [r, x] : d.rays)
          if (!ray_ids.count(r)) issues.push_back(w + ": ray " + r + " is not a ray of any fan");
        ws.divisors.emplace(name, std::move(d));
      } catch (const InputError& e) {
        issues.push_back(e.what());
      }
    }
  }
  if (!issues.empty()) throw WorkspaceError(issues);
  return ws;
}

Workspace parse_workspace(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WorkspaceError({"cannot read " + path});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_workspace_text(ss.str(), opts);
}

std::string serialize_workspace(const Workspace& ws) {
  json fans = json::object(), divs = json::object();
  for (const auto& [n, f] : ws.fans) fans[n] = fan_json(f);
  for (const auto& [n, d] : ws.divisors) divs[n] = divisor_json(d);
  return json{{"space", space_json(ws.space)}, {"fans", fans}, {"divisors", divs}}.dump(2) + "\n";
}

std::vector<std::string> command_names() {
  return {"validate", "classify", "eff-cone", "big-cone", "polytope", "volume", "h0", "decolorate",
          "slice", "qfactorialize", "spherical-closure", "oracle"};
}

std::vector<std::string> oracle_suite_names() { return {"volume", "lattice-points", "big", "extremal", "all"}; }

namespace {

struct Context {
  const Workspace& ws;
  const std::vector<std::string>& args;
  const CommandOptions& opts;
  std::vector<std::string>& diagnostics;

  const std::string& arg(std::size_t i, const char* what) const {
    if (i >= args.size()) throw InputError(std::string("missing argument <") + what + ">");
    return args[i];
  }
  const ColoredFan& fan(std::size_t i) const {
    const auto& n = arg(i, "fan");
    auto it = ws.fans.find(n);
    if (it == ws.fans.end()) throw InputError("unknown fan '" + n + "'");
    return it->second;
  }
  const BDivisor& divisor(std::size_t i, const ColoredFan& f) const {
    const auto& n = arg(i, "divisor");
    auto it = ws.divisors.find(n);
    if (it == ws.divisors.end()) throw InputError("unknown divisor '" + n + "'");
    check_divisor(f, it->second);
    return it->second;
  }
  void expect_args(std::size_t n) const {
    if (args.size() > n) throw InputError("unexpected argument '" + args[n] + "'");
  }
};

json nullable(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json cmd_validate(Context& c) {
  c.expect_args(0);
  json fans = json::object();
  for (const auto& [n, f] : c.ws.fans) {
    const SymVariety x(f);
    fans[n] = {{"valid", true}, {"complete", x.complete}, {"toroidal", x.toroidal}, {"qfactorial", x.qfactorial},
               {"ray_ids", fan_report(f)["ray_ids"]}};
  }
  return {{"valid", true}, {"issues", json::array()}, {"exceptional", is_exceptional_space(c.ws.space)}, {"fans", fans}};
}

json cmd_classify(Context& c) {
  c.expect_args(2);
  const auto& fan = c.fan(0);
  const auto& d = c.divisor(1, fan);
  const SymVariety x(fan);
  const bool qc = is_q_cartier(fan, d);
  const bool cartier = qc && is_cartier(fan, d);
  if (c.opts.integral && !cartier) throw PreconditionError("classify: the divisor is not Cartier");
  std::optional<bool> nef, ample, gg, big;
  if (qc) {
    nef = is_nef(fan, d);
    ample = is_ample(fan, d);
    if (cartier) gg = is_globally_generated(fan, d);
  } else {
    c.diagnostics.push_back("not Q-Cartier: nef and ample are undefined");
  }
  if (x.complete && x.qfactorial) {
    big = is_big(fan, d);
  } else if (x.complete) {
    std::vector<RationalVec> gens;
    for (const auto& n : prime_divisor_names(fan)) gens.push_back(divisor_class(fan, prime_divisor(fan, n)));
    big = brute_in_interior(gens, divisor_class(fan, d));
    c.diagnostics.push_back("big decided as interior membership of the effective cone");
  } else {
    c.diagnostics.push_back("incomplete variety: big is undefined");
  }
  bool effective = true;
  for (const auto& [k, v] : d.colors) effective = effective && v >= 0;
  for (const auto& [k, v] : d.rays) effective = effective && v >= 0;
  return {{"q_cartier", qc},
          {"cartier", cartier},
          {"nef", nullable(nef)},
          {"ample", nullable(ample)},
          {"globally_generated", nullable(gg)},
          {"big", nullable(big)},
          {"effective", effective},
          {"class", class_json(fan, divisor_class(fan, d))}};
}

json cmd_eff_cone(Context& c) {
  c.expect_args(1);
  const auto& fan = c.fan(0);
  const auto e = effective_cone(fan);
  json gens = json::array();
  for (std::size_t i = 0; i < e.generators.size(); ++i)
    gens.push_back({{"divisor", e.generators[i]}, {"class", vec_json(e.classes[i])}});
  json rays = json::array();
  for (const auto& members : e.ray_members) {
    json m = json::array();
    for (auto i : members) m.push_back(e.generators[i]);
    rays.push_back(m);
  }
  json predicted = json::array();
  for (auto i : e.predicted) predicted.push_back(e.generators[i]);
  return {{"basis", class_group(fan).basis},
          {"generators", gens},
          {"extremal_rays", rays},
          {"predicted_generators", predicted},
          {"matches_prediction", e.matches_prediction},
          {"facets", vecs_json(e.cone.facets())}};
}

json cmd_big_cone(Context& c) {
  c.expect_args(2);
  const auto& fan = c.fan(0);
  const auto& d = c.divisor(1, fan);
  const RationalVec cls = divisor_class(fan, d);
  return {{"class", class_json(fan, cls)}, {"in_big_cone", big_cone_membership(fan, cls)}};
}

json polytope_json(const PolytopeQ& p, const Matrix& lattice) {
  if (!p.is_bounded()) return {{"bounded", false}, {"vertices", vecs_json(p.vertices())}};
  return {{"bounded", true}, {"vertices", vecs_json(p.vertices())}, {"lattice_points", vecs_json(lattice_points(p, lattice))}};
}

json cmd_polytope(Context& c) {
  c.expect_args(2);
  const auto& fan = c.fan(0);
  const auto& d = c.divisor(1, fan);
  const Matrix& lat = fan.space().lattice();
  json out{{"P", polytope_json(moment_polytope(fan, d), lat)}};
  try {
    out["Q"] = polytope_json(weight_polytope(fan, d), lat);
  } catch (const PreconditionError& e) {
    out["Q"] = nullptr;
    c.diagnostics.push_back(std::string("Q(D) not computed: ") + e.what());
  }
  return out;
}

json cmd_volume(Context& c) {
  c.expect_args(2);
  const auto& fan = c.fan(0);
  const auto& d = c.divisor(1, fan);
  const Rational vol = toric_volume(fan, d);
  return {{"volume", q_json(vol)}, {"positive", vol > 0}};
}

json cmd_h0(Context& c) {
  c.expect_args(2);
  const auto& fan = c.fan(0);
  const auto& d = c.divisor(1, fan);
  const auto w = h0_highest_weights(fan, d);
  return {{"highest_weights", vecs_json(w)}, {"count", w.size()}};
}

json cmd_decolorate(Context& c) {
  c.expect_args(1);
  return fan_report(decolorate(c.fan(0)));
}

json cmd_slice(Context& c) {
  c.expect_args(1);
  const auto& fan = c.fan(0);
  const PlainFan t = toric_slice_fan(fan);
  json cones = json::array();
  for (const auto& k : t.cones) cones.push_back(vecs_json(k.rays()));
  json restr = json::object();
  for (const auto& r : fan.rays()) {
    BDivisor e;
    e.rays[r.id] = 1;
    restr[r.id] = vec_json(slice_restriction_class(fan, e).coords);
  }
  json kernel = json::array();
  for (const auto& k : restriction_kernel_basis(fan)) kernel.push_back(formal_sum(k, fan));
  return {{"rays", vecs_json(t.rays())}, {"cones", cones}, {"ray_restrictions", restr}, {"kernel", kernel}};
}

json cmd_qfactorialize(Context& c) {
  c.expect_args(2);
  const auto& fan = c.fan(0);
  std::optional<BDivisor> hint;
  if (c.args.size() > 1) hint = c.divisor(1, fan);
  const auto q = qfactorialize(fan, hint);
  for (const auto& l : q.log) c.diagnostics.push_back(l);
  return {{"fan", fan_report(q.fan)},
          {"identification", q.identification},
          {"ample_divisor", divisor_json(q.ample_input)},
          {"polytope_divisor", divisor_json(q.polytope_divisor)},
          {"scale", q.scale}};
}

json cmd_closure(Context& c) {
  c.expect_args(0);
  const auto r = spherical_closure(c.ws.space);
  json flags = json::array();
  for (bool b : r.closed) flags.push_back(b);
  if (r.space.lattice_unresolved()) c.diagnostics.push_back("the lattice of the closure is not determined; the input lattice is kept");
  return {{"space", space_json(r.space)}, {"closed", flags}, {"lattice_unresolved", r.space.lattice_unresolved()}};
}

// ---- oracle suites ----

struct Instance {
  std::string fan_name;
  std::string label;
  BDivisor d;
};

std::vector<Instance> oracle_instances(const Context& c, bool gstable_only) {
  std::vector<Instance> out;
  std::mt19937_64 rng(c.opts.seed);
  std::uniform_int_distribution<int> coef(gstable_only ? 0 : -2, 4);
  for (const auto& [fn, fan] : c.ws.fans) {
    for (const auto& [dn, d] : c.ws.divisors) {
      try {
        check_divisor(fan, d);
      } catch (const InputError&) {
        continue;
      }
      if (gstable_only && !d.is_gstable()) continue;
      out.push_back({fn, dn, d});
    }
    for (int k = 0; k < 5; ++k) {
      BDivisor d;
      for (const auto& r : fan.rays()) d.rays[r.id] = coef(rng);
      if (!gstable_only)
        for (const auto& col : fan.space().colors()) d.colors[col] = coef(rng);
      out.push_back({fn, "random" + std::to_string(k), d});
    }
  }
  return out;
}

std::string instance_text(const ColoredFan& fan, const BDivisor& d) {
  return json{{"fan", fan_json(fan)}, {"divisor", divisor_json(d)}}.dump();
}

json report_json(const OracleReport& r, const Instance& i) {
  return {{"quantity", r.quantity}, {"fan", i.fan_name}, {"divisor", i.label}, {"fast", r.fast},
          {"oracle", r.oracle}, {"agree", r.agree}, {"fingerprint", r.fingerprint}};
}

void suite_volume(const Context& c, json& reports) {
  for (const auto& i : oracle_instances(c, true)) {
    const auto& fan = c.ws.fans.at(i.fan_name);
    if (!is_toroidal(fan) || !is_complete(fan) || !is_q_cartier(fan, i.d) || !is_nef(fan, i.d)) continue;
    Rational fact = 1;
    for (std::size_t k = 2; k <= fan.space().rank(); ++k) fact *= static_cast<long>(k);
    const Rational brute = fact * brute_volume(weight_polytope(fan, i.d), fan.space().lattice());
    reports.push_back(report_json(make_report("volume", to_string(toric_volume(fan, i.d)), to_string(brute), instance_text(fan, i.d)), i));
  }
}

void suite_lattice_points(const Context& c, json& reports) {
  for (const auto& i : oracle_instances(c, false)) {
    const auto& fan = c.ws.fans.at(i.fan_name);
    const PolytopeQ p = moment_polytope(fan, i.d);
    if (!p.is_bounded()) continue;
    const Matrix& lat = fan.space().lattice();
    reports.push_back(report_json(make_report("lattice-points", vecs_json(lattice_points(p, lat)).dump(),
                                              vecs_json(brute_lattice_point_list(p, lat)).dump(), instance_text(fan, i.d)),
                                  i));
  }
}

void suite_big(const Context& c, json& reports) {
  for (const auto& i : oracle_instances(c, false)) {
    const auto& fan = c.ws.fans.at(i.fan_name);
    if (!is_complete(fan) || !is_qfactorial(fan)) continue;
    const auto a = find_ample_divisor(fan);
    if (!a) continue;
    const std::string fast = is_big(fan, i.d) ? "big" : "not-big-up-to-M";
    reports.push_back(report_json(make_report("big", fast, to_string(brute_big_test(fan, i.d, l1_normalized(*a))), instance_text(fan, i.d)), i));
  }
}

void suite_extremal(const Context& c, json& reports) {
  for (const auto& [fn, fan] : c.ws.fans) {
    if (!is_complete(fan) || !is_qfactorial(fan)) continue;
    const auto e = effective_cone(fan);
    auto fast = e.ray_members, brute = brute_extremal_rays(e.classes).rays;
    std::sort(fast.begin(), fast.end());
    std::sort(brute.begin(), brute.end());
    const Instance i{fn, "", {}};
    reports.push_back(report_json(make_report("extremal-rays", json(fast).dump(), json(brute).dump(), fan_json(fan).dump()), i));
  }
}

json cmd_oracle(Context& c) {
  c.expect_args(1);
  const std::string& suite = c.arg(0, "suite");
  const std::map<std::string, std::function<void(const Context&, json&)>> suites{
      {"volume", suite_volume}, {"lattice-points", suite_lattice_points}, {"big", suite_big}, {"extremal", suite_extremal}};
  json reports = json::array();
  if (suite == "all") {
    for (const auto& [n, f] : suites) f(c, reports);
  } else {
    auto it = suites.find(suite);
    if (it == suites.end()) throw InputError("unknown oracle suite '" + suite + "'");
    it->second(c, reports);
  }
  bool all = true;
  for (const auto& r : reports) all = all && r["agree"].get<bool>();
  if (!all) c.diagnostics.push_back("fast path and oracle disagree");
  return {{"suite", suite}, {"seed", c.opts.seed}, {"reports", reports}, {"all_agree", all}};
}

}  // namespace

CommandOutcome run_command(const std::string& workspace_text, const std::string& command,
                           const std::vector<std::string>& args, const CommandOptions& opts) {
  std::vector<std::string> diagnostics;
  json result = nullptr;
  int code = 0;
  static const std::map<std::string, std::function<json(Context&)>> table{
      {"validate", cmd_validate},     {"classify", cmd_classify},     {"eff-cone", cmd_eff_cone},
      {"big-cone", cmd_big_cone},     {"polytope", cmd_polytope},     {"volume", cmd_volume},
      {"h0", cmd_h0},                 {"decolorate", cmd_decolorate}, {"slice", cmd_slice},
      {"qfactorialize", cmd_qfactorialize}, {"spherical-closure", cmd_closure}, {"oracle", cmd_oracle}};
  try {
    auto it = table.find(command);
    if (it == table.end()) throw InputError("unknown command '" + command + "'");
    const Workspace ws = parse_workspace_text(workspace_text, {opts.max_rank});
    Context ctx{ws, args, opts, diagnostics};
    result = it->second(ctx);
  } catch (const WorkspaceError& e) {
    code = 1;
    diagnostics.insert(diagnostics.end(), e.issues().begin(), e.issues().end());
    if (command == "validate") result = {{"valid", false}, {"issues", e.issues()}};
  } catch (const InputError& e) {
    code = 1;
    diagnostics.push_back(std::string("input error: ") + e.what());
  } catch (const PreconditionError& e) {
    code = 2;
    diagnostics.push_back(std::string("precondition failed: ") + e.what());
  } catch (const std::exception& e) {
    code = 3;
    diagnostics.push_back(std::string("internal error: ") + e.what());
  }
  const json envelope{{"command", command},
                      {"input_fingerprint", sha256_hex(workspace_text)},
                      {"result", result},
                      {"diagnostics", diagnostics}};
  return {code, envelope.dump(2) + "\n"};
}

}  // namespace symvar
