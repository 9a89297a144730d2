#include "isg/json_io.hpp"

#include "isg/error.hpp"

namespace isg {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(errc::invalid_input, what); }

std::string require_string(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    bad(std::string("missing or non-string field '") + field + "'");
  return j[field].get<std::string>();
}

long require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    bad(std::string("missing or non-integer field '") + field + "'");
  return j[field].get<long>();
}

const char* domain_kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::mod_int: return "mod_int";
    case DomainKind::nonneg_int: return "nonneg_int";
    case DomainKind::nonneg_rational: return "nonneg_rational";
    case DomainKind::nonneg_complex: return "nonneg_complex";
    case DomainKind::pure_neutrosophic_mod: return "pure_neutrosophic_mod";
    case DomainKind::neutrosophic_mod: return "neutrosophic_mod";
    case DomainKind::pure_neutrosophic_nonneg: return "pure_neutrosophic_nonneg";
    case DomainKind::neutrosophic_nonneg: return "neutrosophic_nonneg";
    case DomainKind::fuzzy_unit: return "fuzzy_unit";
  }
  return "?";
}

const char* carrier_kind_name(CarrierKind k) {
  switch (k) {
    case CarrierKind::interval: return "interval";
    case CarrierKind::row_matrix: return "row_matrix";
    case CarrierKind::matrix: return "matrix";
    case CarrierKind::polynomial_cyclic: return "polynomial_cyclic";
    case CarrierKind::monomial: return "monomial";
    case CarrierKind::full_transformation: return "full_transformation";
    case CarrierKind::permutations: return "permutations";
    case CarrierKind::fuzzy_family: return "fuzzy_family";
  }
  return "?";
}

std::vector<std::string> labels_of(const FiniteSemigroup& s, const std::vector<int>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(s.label(i));
  return out;
}

}  // namespace

json domain_to_json(const CoefficientDomain& d) {
  json j;
  j["kind"] = domain_kind_name(d.kind);
  if (d.is_mod()) j["m"] = d.modulus;
  return j;
}

CoefficientDomain domain_from_json(const json& j) {
  if (!j.is_object()) bad("domain must be an object");
  std::string kind = require_string(j, "kind");
  if (kind == "mod_int") return CoefficientDomain::mod(static_cast<unsigned>(require_int(j, "m")));
  if (kind == "nonneg_int") return CoefficientDomain::nonneg_int();
  if (kind == "nonneg_rational") return CoefficientDomain::nonneg_rational();
  if (kind == "nonneg_complex") return CoefficientDomain::nonneg_complex();
  if (kind == "pure_neutrosophic_mod")
    return CoefficientDomain::pure_neutro_mod(static_cast<unsigned>(require_int(j, "m")));
  if (kind == "neutrosophic_mod")
    return CoefficientDomain::neutro_mod(static_cast<unsigned>(require_int(j, "m")));
  if (kind == "pure_neutrosophic_nonneg") return CoefficientDomain::pure_neutro_nonneg();
  if (kind == "neutrosophic_nonneg") return CoefficientDomain::neutro_nonneg();
  if (kind == "fuzzy_unit") return CoefficientDomain::fuzzy_unit();
  bad("unknown domain kind '" + kind + "'");
}

json carrier_to_json(const Carrier& c) {
  json j;
  j["kind"] = carrier_kind_name(c.kind);
  switch (c.kind) {
    case CarrierKind::interval: break;
    case CarrierKind::row_matrix:
      j["len"] = c.len;
      j["constant"] = c.constant;
      break;
    case CarrierKind::matrix:
      j["rows"] = c.rows;
      j["cols"] = c.cols;
      break;
    case CarrierKind::polynomial_cyclic:
    case CarrierKind::monomial:
      j["k"] = c.k;
      j["unit"] = c.unit == UnitKind::I ? "I" : "one";
      break;
    case CarrierKind::full_transformation:
    case CarrierKind::permutations: j["n"] = c.n; break;
    case CarrierKind::fuzzy_family:
      j["ratio"] = render_rational(c.ratio);
      j["n_max"] = c.n_max;
      break;
  }
  return j;
}

Carrier carrier_from_json(const json& j) {
  if (!j.is_object()) bad("carrier must be an object");
  std::string kind = require_string(j, "kind");
  Carrier c;
  if (kind == "interval") {
    c.kind = CarrierKind::interval;
  } else if (kind == "row_matrix") {
    c.kind = CarrierKind::row_matrix;
    c.len = static_cast<int>(require_int(j, "len"));
    c.constant = j.value("constant", false);
  } else if (kind == "matrix") {
    c.kind = CarrierKind::matrix;
    c.rows = static_cast<int>(require_int(j, "rows"));
    c.cols = static_cast<int>(require_int(j, "cols"));
  } else if (kind == "polynomial_cyclic" || kind == "monomial") {
    c.kind = kind == "monomial" ? CarrierKind::monomial : CarrierKind::polynomial_cyclic;
    c.k = require_int(j, "k");
    std::string unit = j.value("unit", "one");
    if (unit != "one" && unit != "I") bad("carrier field 'unit' must be \"one\" or \"I\"");
    c.unit = unit == "I" ? UnitKind::I : UnitKind::one;
  } else if (kind == "full_transformation" || kind == "permutations") {
    c.kind = kind == "permutations" ? CarrierKind::permutations : CarrierKind::full_transformation;
    c.n = static_cast<int>(require_int(j, "n"));
  } else if (kind == "fuzzy_family") {
    c.kind = CarrierKind::fuzzy_family;
    c.ratio = parse_rational(require_string(j, "ratio"));
    c.n_max = static_cast<int>(require_int(j, "n_max"));
  } else {
    bad("unknown carrier kind '" + kind + "'");
  }
  return c;
}

std::string op_name(OpKind op) {
  switch (op) {
    case OpKind::add: return "add";
    case OpKind::mul: return "mul";
    case OpKind::min: return "min";
    case OpKind::max: return "max";
  }
  return "?";
}

OpKind op_from_name(const std::string& name) {
  if (name == "add") return OpKind::add;
  if (name == "mul") return OpKind::mul;
  if (name == "min") return OpKind::min;
  if (name == "max") return OpKind::max;
  bad("unknown op '" + name + "' (expected add, mul, min or max)");
}

json spec_to_json(const SemigroupSpec& spec) {
  json j;
  j["domain"] = domain_to_json(spec.domain);
  j["carrier"] = carrier_to_json(spec.carrier);
  j["op"] = op_name(spec.op);
  j["exclude_zero"] = spec.exclude_zero;
  json lim;
  lim["element_cap"] = spec.limits.element_cap;
  lim["table_cap"] = spec.limits.table_cap;
  lim["subgroup_exact_cap"] = spec.limits.subgroup_exact_cap;
  lim["subset_exhaustive_cap"] = spec.limits.subset_exhaustive_cap;
  lim["zero_divisor_list_cap"] = spec.limits.zero_divisor_list_cap;
  lim["ideal_union_bound"] = spec.limits.ideal_union_bound;
  lim["ideal_enum_cap"] = spec.limits.ideal_enum_cap;
  lim["count_trivial_subgroups"] = spec.limits.count_trivial_subgroups;
  j["limits"] = lim;
  return j;
}

SemigroupSpec spec_from_json(const json& j) {
  if (!j.is_object()) bad("spec must be a JSON object");
  if (!j.contains("domain")) bad("spec is missing field 'domain'");
  if (!j.contains("carrier")) bad("spec is missing field 'carrier'");
  SemigroupSpec spec;
  spec.domain = domain_from_json(j["domain"]);
  spec.carrier = carrier_from_json(j["carrier"]);
  spec.op = j.contains("op") ? op_from_name(require_string(j, "op")) : OpKind::mul;
  spec.exclude_zero = j.value("exclude_zero", false);
  if (j.contains("element_cap")) spec.limits.element_cap = j["element_cap"].get<size_t>();
  if (j.contains("limits")) {
    const json& lim = j["limits"];
    if (!lim.is_object()) bad("spec field 'limits' must be an object");
    spec.limits.element_cap = lim.value("element_cap", spec.limits.element_cap);
    spec.limits.table_cap = lim.value("table_cap", spec.limits.table_cap);
    spec.limits.subgroup_exact_cap =
        lim.value("subgroup_exact_cap", spec.limits.subgroup_exact_cap);
    spec.limits.subset_exhaustive_cap =
        lim.value("subset_exhaustive_cap", spec.limits.subset_exhaustive_cap);
    spec.limits.zero_divisor_list_cap =
        lim.value("zero_divisor_list_cap", spec.limits.zero_divisor_list_cap);
    spec.limits.ideal_union_bound = lim.value("ideal_union_bound", spec.limits.ideal_union_bound);
    spec.limits.ideal_enum_cap = lim.value("ideal_enum_cap", spec.limits.ideal_enum_cap);
    spec.limits.count_trivial_subgroups =
        lim.value("count_trivial_subgroups", spec.limits.count_trivial_subgroups);
  }
  return spec;
}

json element_to_json(const SemigroupElement& e) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        json j;
        if constexpr (std::is_same_v<T, Interval>) {
          j["upper"] = render_element(v.domain, v.upper);
        } else if constexpr (std::is_same_v<T, IntervalMatrix>) {
          j["rows"] = v.rows;
          j["cols"] = v.cols;
          json entries = json::array();
          for (const auto& x : v.entries) entries.push_back(render_element(v.domain, x));
          j["entries"] = entries;
        } else if constexpr (std::is_same_v<T, IntervalPolynomial>) {
          json coeffs = json::object();
          for (const auto& [exp, c] : v.coeffs)
            coeffs[std::to_string(exp)] = render_element(v.domain, c);
          j["coeffs"] = coeffs;
        } else if constexpr (std::is_same_v<T, TransformationMap>) {
          j["n"] = v.n;
          j["images"] = v.images;
        }
        return j;
      },
      e);
}

SemigroupElement element_from_json(const SemigroupSpec& spec, const json& j) {
  if (!j.is_object()) bad("element literal must be a JSON object");
  const CoefficientDomain& d = spec.domain;
  switch (spec.carrier.kind) {
    case CarrierKind::interval:
    case CarrierKind::fuzzy_family:
      return make_interval(d, require_string(j, "upper"));
    case CarrierKind::row_matrix:
    case CarrierKind::matrix: {
      int rows = j.contains("rows") ? static_cast<int>(require_int(j, "rows"))
                                    : (spec.carrier.kind == CarrierKind::row_matrix ? 1 : 0);
      int cols = j.contains("cols") ? static_cast<int>(require_int(j, "cols"))
                                    : (spec.carrier.kind == CarrierKind::row_matrix
                                           ? spec.carrier.len
                                           : 0);
      if (rows == 0 || cols == 0) bad("matrix literal needs 'rows' and 'cols'");
      if (!j.contains("entries") || !j["entries"].is_array())
        bad("matrix literal needs an 'entries' array");
      std::vector<std::string> texts;
      for (const auto& t : j["entries"]) texts.push_back(t.get<std::string>());
      return make_matrix(d, rows, cols, texts);
    }
    case CarrierKind::polynomial_cyclic:
    case CarrierKind::monomial: {
      if (!j.contains("coeffs") || !j["coeffs"].is_object())
        bad("polynomial literal needs a 'coeffs' object");
      std::map<long, std::string> coeffs;
      for (const auto& [key, val] : j["coeffs"].items())
        coeffs[std::stol(key)] = val.get<std::string>();
      return make_polynomial(d, coeffs);
    }
    case CarrierKind::full_transformation:
    case CarrierKind::permutations: {
      int mapn = j.contains("n") ? static_cast<int>(require_int(j, "n")) : spec.carrier.n;
      if (!j.contains("images") || !j["images"].is_array())
        bad("transformation literal needs an 'images' array");
      std::vector<int> images;
      for (const auto& t : j["images"]) images.push_back(t.get<int>());
      return make_tmap(mapn, images);
    }
  }
  bad("unsupported carrier for element literal");
}

json report_to_json(const FiniteSemigroup& s, const StructureReport& r) {
  json j;
  j["schema"] = 1;
  j["spec"] = spec_to_json(s.spec());
  j["order"] = r.order;
  j["is_commutative"] = r.is_commutative;
  j["identity"] = r.identity ? json(s.label(*r.identity)) : json(nullptr);
  j["zero"] = r.zero ? json(s.label(*r.zero)) : json(nullptr);
  j["idempotents"] = labels_of(s, r.special.idempotents);
  j["nilpotents"] = labels_of(s, r.special.nilpotents);
  j["units"] = labels_of(s, r.special.units);
  json zd;
  zd["total"] = r.special.zero_divisor_total;
  json pairs = json::array();
  for (const auto& [x, y] : r.special.zero_divisor_pairs)
    pairs.push_back(json::array({s.label(x), s.label(y)}));
  zd["pairs"] = pairs;
  j["zero_divisor_pairs"] = zd;

  json sub;
  json maximal = json::array();
  for (const auto& mg : r.subgroups.maximal) {
    json m;
    m["idempotent"] = s.label(mg.idempotent);
    m["order"] = mg.elements.size();
    m["elements"] = labels_of(s, mg.elements);
    maximal.push_back(m);
  }
  sub["maximal"] = maximal;
  sub["order_set"] = r.subgroups.orders;
  sub["exact"] = r.subgroups.exact;
  j["subgroups"] = sub;

  json ideals;
  bool computed = !r.ideals.principal.empty();
  ideals["computed"] = computed;
  if (computed) {
    json principal = json::array();
    for (size_t i = 0; i < r.ideals.principal.size(); ++i) {
      json p;
      p["generator"] = s.label(r.ideals.principal_generator[i]);
      p["size"] = r.ideals.principal[i].size();
      p["elements"] = labels_of(s, r.ideals.principal[i]);
      principal.push_back(p);
    }
    ideals["principal"] = principal;
    json minimal = json::array();
    for (size_t idx : r.ideals.minimal)
      minimal.push_back(s.label(r.ideals.principal_generator[idx]));
    ideals["minimal_generators"] = minimal;
    ideals["has_proper_ideal"] = r.ideals.has_proper_ideal;
    ideals["all_ideal_count"] =
        r.ideals.all_ideal_count ? json(*r.ideals.all_ideal_count) : json(nullptr);
  }
  j["ideals"] = ideals;

  json sm;
  sm["is_s_semigroup"] = r.smarandache.is_s_semigroup;
  sm["is_s_lagrange"] = r.smarandache.is_s_lagrange;
  sm["is_s_weakly_lagrange"] = r.smarandache.is_s_weakly_lagrange;
  json sylow = json::array();
  for (const auto& sc : r.smarandache.s_p_sylow) {
    json one;
    one["order"] = sc.order;
    one["prime"] = sc.prime;
    one["class"] = sc.cls;
    sylow.push_back(one);
  }
  sm["s_p_sylow"] = sylow;
  sm["s_cauchy_elements"] = labels_of(s, r.smarandache.s_cauchy_elements);
  sm["has_s_hyper_subsemigroup"] = r.smarandache.has_s_hyper_subsemigroup;
  sm["hyper_witness"] = r.smarandache.hyper_witness
                            ? json(labels_of(s, *r.smarandache.hyper_witness))
                            : json(nullptr);
  sm["is_simple"] = r.smarandache.is_simple;
  sm["is_doubly_simple"] = r.smarandache.is_doubly_simple;
  j["smarandache"] = sm;

  j["method_notes"] = r.method_notes;
  return j;
}

json label_to_json(const IntervalLabel& l) {
  json j;
  j["lower"] = render_rational(l.lower);
  j["upper"] = render_rational(l.upper);
  return j;
}

IntervalLabel label_from_json(const json& j) {
  if (!j.is_object()) bad("interval label must be an object");
  IntervalLabel out;
  out.lower = parse_rational(require_string(j, "lower"));
  out.upper = parse_rational(require_string(j, "upper"));
  return out;
}

SpecialFuzzyMapTable fuzzy_map_table_from_json(const json& j) {
  if (!j.is_object()) bad("fuzzy map table must be a JSON object");
  SpecialFuzzyMapTable table;
  for (const auto& [label, value] : j.items()) {
    if (!value.is_string()) bad("fuzzy map value for '" + label + "' must be a rational string");
    table[label] = parse_rational(value.get<std::string>());
  }
  return table;
}

SemigroupElement eval_expression(const SemigroupSpec& spec, const json& node,
                                 const std::string& path) {
  if (!node.is_object()) raise(errc::invalid_input, "expression node at " + path + " not an object");
  if (!node.contains("op")) {
    try {
      return element_from_json(spec, node);
    } catch (const error& e) {
      raise(e.kind(), std::string(e.what()) + " at " + path);
    }
  }
  std::string op = require_string(node, "op");
  if (!node.contains("args") || !node["args"].is_array() || node["args"].empty())
    raise(errc::invalid_input, "expression node at " + path + " needs a nonempty 'args' array");
  std::vector<SemigroupElement> args;
  for (size_t i = 0; i < node["args"].size(); ++i)
    args.push_back(eval_expression(spec, node["args"][i], path + "/args/" + std::to_string(i)));

  auto fold_with = [&](OpKind kind) {
    SemigroupSpec folded = spec;
    folded.op = kind;
    SemigroupElement acc = args[0];
    for (size_t i = 1; i < args.size(); ++i) acc = apply_op(folded, acc, args[i]);
    return acc;
  };

  try {
    if (op == "add") return fold_with(OpKind::add);
    if (op == "mul" || op == "compose") return fold_with(OpKind::mul);
    if (op == "min") return fold_with(OpKind::min);
    if (op == "max") return fold_with(OpKind::max);
    if (op == "pow") {
      long k = node.contains("k") ? require_int(node, "k") : 0;
      if (args.size() != 1 || k < 1)
        raise(errc::invalid_input, "pow node needs one argument and k >= 1");
      if (const auto* iv = std::get_if<Interval>(&args[0]))
        return interval_pow(*iv, static_cast<unsigned long>(k));
      SemigroupSpec folded = spec;
      folded.op = OpKind::mul;
      SemigroupElement acc = args[0];
      for (long i = 1; i < k; ++i) acc = apply_op(folded, acc, args[0]);
      return acc;
    }
    if (op == "det") {
      if (args.size() != 1) raise(errc::invalid_input, "det node needs exactly one argument");
      const auto* m = std::get_if<IntervalMatrix>(&args[0]);
      if (!m) raise(errc::invalid_input, "det argument must be a matrix");
      return mat_determinant(*m).det;
    }
  } catch (const error& e) {
    raise(e.kind(), std::string(e.what()) + " at " + path);
  }
  raise(errc::invalid_input, "unknown expression op '" + op + "' at " + path);
}

}  // namespace isg
