#include "nabext/io.hpp"

#include <fstream>
#include <sstream>

namespace nabext::io {

namespace {

const json &member(const json &j, const char *key, const char *what) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t index_value(const json &j, std::size_t bound, const std::string &what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw InputError(what + ": expected a non-negative integer index");
  auto v = j.get<std::uint64_t>();
  if (v >= bound)
    throw InputError(what + ": index " + std::to_string(v) + " out of range (< " +
                     std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

std::size_t dim_value(const json &j, const std::string &what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > 64)
    throw InputError(what + ": expected a dimension between 0 and 64");
  return j.get<std::size_t>();
}

json bilinear_entries(const BilinearMap &m) {
  json out = json::array();
  for (std::size_t k = 0; k < m.out_dim(); ++k)
    for (std::size_t i = 0; i < m.left_dim(); ++i)
      for (std::size_t j = 0; j < m.right_dim(); ++j)
        if (!m.at(k, i, j).is_zero())
          out.push_back({k, i, j, m.at(k, i, j).to_string()});
  return out;
}

void read_bilinear(const json &j, BilinearMap &m, const char *what) {
  if (!j.is_array())
    throw InputError(std::string(what) + ": expected an array of [k, i, j, c]");
  for (const json &e : j) {
    if (!e.is_array() || e.size() != 4)
      throw InputError(std::string(what) + ": entries are [k, i, j, c]");
    std::size_t k = index_value(e[0], m.out_dim(), what);
    std::size_t i = index_value(e[1], m.left_dim(), what);
    std::size_t l = index_value(e[2], m.right_dim(), what);
    m.at(k, i, l) = scalar_from_json(e[3], m.field());
  }
}

} // namespace

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

json field_to_json(Field f) {
  if (f.is_rational())
    return "Q";
  return json{{"p", f.characteristic()}};
}

Field field_from_json(const json &j) {
  try {
    if (j.is_string())
      return Field::parse(j.get<std::string>());
    if (j.is_object() && j.contains("p") && j.at("p").is_number_integer() &&
        j.at("p").get<std::int64_t>() > 0)
      return Field::prime(j.at("p").get<std::uint32_t>());
  } catch (const std::invalid_argument &e) {
    throw InputError(std::string("field: ") + e.what());
  }
  throw InputError("field: expected \"Q\", \"F<p>\" or {\"p\": <prime>}");
}

Scalar scalar_from_json(const json &j, Field f) {
  try {
    if (j.is_string())
      return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer())
      return Scalar::parse(f, std::to_string(j.get<std::int64_t>()));
  } catch (const std::invalid_argument &e) {
    throw InputError(std::string("coefficient: ") + e.what());
  }
  throw InputError("coefficient: expected a string such as \"3/2\" or an integer");
}

json algebra_to_json(const Algebra &a) {
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      json row = {i, j};
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!a.constant(i, j, k).is_zero())
          row.push_back({k, a.constant(i, j, k).to_string()});
      if (row.size() > 2)
        products.push_back(std::move(row));
    }
  return {{"field", field_to_json(a.field())},
          {"dim", a.dim()},
          {"basis", a.basis()},
          {"products", std::move(products)}};
}

Algebra algebra_from_json(const json &j) {
  const char *what = "algebra";
  const Field f = field_from_json(member(j, "field", what));
  const std::size_t dim = dim_value(member(j, "dim", what), "algebra dim");
  std::vector<std::string> basis;
  if (j.contains("basis")) {
    if (!j.at("basis").is_array() || j.at("basis").size() != dim)
      throw InputError("algebra: \"basis\" must list dim names");
    for (const json &n : j.at("basis")) {
      if (!n.is_string())
        throw InputError("algebra: basis names must be strings");
      basis.push_back(n.get<std::string>());
    }
  }
  Algebra a(f, dim, basis);
  const json &products = member(j, "products", what);
  if (!products.is_array())
    throw InputError("algebra: \"products\" must be an array");
  for (const json &row : products) {
    if (!row.is_array() || row.size() < 2)
      throw InputError("algebra: product rows are [i, j, [k, c], ...]");
    std::size_t i = index_value(row[0], dim, "algebra product");
    std::size_t l = index_value(row[1], dim, "algebra product");
    for (std::size_t t = 2; t < row.size(); ++t) {
      const json &term = row[t];
      if (!term.is_array() || term.size() != 2)
        throw InputError("algebra: product terms are [k, c]");
      std::size_t k = index_value(term[0], dim, "algebra product");
      a.set_constant(i, l, k, a.constant(i, l, k) + scalar_from_json(term[1], f));
    }
  }
  return a;
}

json map_to_json(const MultilinearMap &m, bool with_field) {
  json entries = json::array();
  std::vector<std::size_t> idx(m.arity());
  for (std::size_t k = 0; k < m.target_dim(); ++k)
    for (std::size_t flat = 0; flat < m.input_count(); ++flat) {
      const Scalar &c = m.entry(k, flat);
      if (c.is_zero())
        continue;
      m.unflatten(flat, idx);
      json e = {k};
      for (std::size_t i : idx)
        e.push_back(i);
      e.push_back(c.to_string());
      entries.push_back(std::move(e));
    }
  json out = {{"arity", m.arity()},
              {"source_dim", m.source_dim()},
              {"target_dim", m.target_dim()},
              {"entries", std::move(entries)}};
  if (with_field)
    out["field"] = field_to_json(m.field());
  if (m.split())
    out["split"] = {{"a_dim", m.split()->a_dim}, {"b_dim", m.split()->b_dim}};
  return out;
}

MultilinearMap map_from_json(const json &j, std::optional<Field> fallback) {
  const char *what = "map";
  Field f = Field::rationals();
  if (j.is_object() && j.contains("field"))
    f = field_from_json(j.at("field"));
  else if (fallback)
    f = *fallback;
  const json &ar = member(j, "arity", what);
  if (!ar.is_number_integer() || ar.get<std::int64_t>() < 0 || ar.get<std::int64_t>() > 6)
    throw InputError("map: arity must be between 0 and 6");
  const std::size_t arity = ar.get<std::size_t>();
  const std::size_t sd = dim_value(member(j, "source_dim", what), "map source_dim");
  const std::size_t td = dim_value(member(j, "target_dim", what), "map target_dim");
  MultilinearMap m(f, arity, sd, td);
  if (j.contains("split")) {
    const json &s = j.at("split");
    SplitSpace split{dim_value(member(s, "a_dim", "split"), "split a_dim"),
                     dim_value(member(s, "b_dim", "split"), "split b_dim")};
    if (split.total() != sd || sd != td)
      throw InputError("map: split must cover an endomorphism space");
    m.set_split(split);
  }
  const json &entries = member(j, "entries", what);
  if (!entries.is_array())
    throw InputError("map: \"entries\" must be an array");
  std::vector<std::size_t> idx(arity);
  for (const json &e : entries) {
    if (!e.is_array() || e.size() != arity + 2)
      throw InputError("map: entries are [k, i1, ..., in, c]");
    std::size_t k = index_value(e[0], td, "map entry");
    for (std::size_t s = 0; s < arity; ++s)
      idx[s] = index_value(e[s + 1], sd, "map entry");
    m.at(k, idx) = scalar_from_json(e[arity + 1], f);
  }
  return m;
}

json matrix_entries(const Matrix &m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero())
        out.push_back({r, c, m.at(r, c).to_string()});
  return out;
}

Matrix matrix_from_entries(const json &j, Field f, std::size_t rows, std::size_t cols) {
  if (!j.is_array())
    throw InputError("matrix: expected an array of [row, col, c]");
  Matrix m(f, rows, cols);
  for (const json &e : j) {
    if (!e.is_array() || e.size() != 3)
      throw InputError("matrix: entries are [row, col, c]");
    std::size_t r = index_value(e[0], rows, "matrix row");
    std::size_t c = index_value(e[1], cols, "matrix column");
    m.at(r, c) = scalar_from_json(e[2], f);
  }
  return m;
}

json cocycle_to_json(const NabCocycle &c) {
  return {{"A", algebra_to_json(c.A)},
          {"B", algebra_to_json(c.B)},
          {"phi", bilinear_entries(c.phi)},
          {"psi", bilinear_entries(c.psi)},
          {"chi", bilinear_entries(c.chi)}};
}

NabCocycle cocycle_from_json(const json &j) {
  const char *what = "cocycle";
  Algebra A = algebra_from_json(member(j, "A", what));
  Algebra B = algebra_from_json(member(j, "B", what));
  if (A.field() != B.field())
    throw InputError("cocycle: A and B are over different fields");
  NabCocycle c = NabCocycle::zero(std::move(A), std::move(B));
  read_bilinear(member(j, "phi", what), c.phi, "cocycle phi");
  read_bilinear(member(j, "psi", what), c.psi, "cocycle psi");
  read_bilinear(member(j, "chi", what), c.chi, "cocycle chi");
  return c;
}

json beta_to_json(const GaugeParam &b) { return {{"beta", matrix_entries(b.beta)}}; }

GaugeParam beta_from_json(const json &j, Field f, std::size_t a_dim, std::size_t b_dim) {
  return {matrix_from_entries(member(j, "beta", "gauge parameter"), f, a_dim, b_dim)};
}

json extension_to_json(const ExtensionPresentation &e) {
  return {{"E", algebra_to_json(e.E)},
          {"A", algebra_to_json(e.A)},
          {"B", algebra_to_json(e.B)},
          {"iota", matrix_entries(e.iota)},
          {"p", matrix_entries(e.p)}};
}

ExtensionPresentation extension_from_json(const json &j) {
  const char *what = "extension";
  Algebra E = algebra_from_json(member(j, "E", what));
  const Field f = E.field();
  std::optional<Algebra> A, B;
  std::size_t da = 0, db = 0;
  if (j.contains("A") && j.contains("B")) {
    A = algebra_from_json(j.at("A"));
    B = algebra_from_json(j.at("B"));
    if (A->field() != f || B->field() != f)
      throw InputError("extension: A, B and E must share a field");
    da = A->dim();
    db = B->dim();
  } else if (j.contains("a_dim") && j.contains("b_dim")) {
    da = dim_value(j.at("a_dim"), "extension a_dim");
    db = dim_value(j.at("b_dim"), "extension b_dim");
  } else {
    throw InputError("extension: give \"A\" and \"B\" algebras or \"a_dim\" and \"b_dim\"");
  }
  Matrix iota = matrix_from_entries(member(j, "iota", what), f, E.dim(), da);
  Matrix p = matrix_from_entries(member(j, "p", what), f, db, E.dim());
  if (A)
    return {std::move(E), std::move(*A), std::move(*B), std::move(iota), std::move(p)};
  try {
    return ExtensionPresentation::induced(std::move(E), std::move(iota), std::move(p));
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }
}

json section_to_json(const Section &s) { return {{"s", matrix_entries(s.s)}}; }

Section section_from_json(const json &j, const ExtensionPresentation &e) {
  return {matrix_from_entries(member(j, "s", "section"), e.E.field(), e.E.dim(), e.B.dim())};
}

json violation_to_json(const CocycleViolation &v) {
  json disc = json::array();
  for (const Scalar &s : v.discrepancy)
    disc.push_back(s.to_string());
  json witness = json::array();
  for (std::size_t i = 0; i < v.pattern.size(); ++i)
    witness.push_back(v.witness[i]);
  return {{"equation", to_string(v.which)},
          {"clause", v.clause},
          {"pattern", to_string(v.pattern)},
          {"witness", std::move(witness)},
          {"discrepancy", std::move(disc)}};
}

json report_to_json(const ClassificationReport &r) {
  json classes = json::array();
  for (const Orbit &o : r.classes) {
    json members = json::array();
    for (const OrbitMember &m : o.members) {
      json chain = json::array();
      for (const GaugeParam &b : m.chain)
        chain.push_back(matrix_entries(b.beta));
      members.push_back({{"index", m.index}, {"chain", std::move(chain)}});
    }
    classes.push_back({{"representative", o.representative},
                       {"cocycle", cocycle_to_json(o.cocycle)},
                       {"members", std::move(members)}});
  }
  json checks = {{"cocycle_mc_agree", r.cocycle_mc_agree},
                 {"cocycle_assoc_agree", r.cocycle_assoc_agree},
                 {"residual_matches_associator", r.residual_matches_associator},
                 {"extensions_biject", r.extensions_biject},
                 {"round_trip", r.round_trip},
                 {"section_independence", r.section_independence},
                 {"partitions_agree", r.partitions_agree},
                 {"reflexive", r.reflexive},
                 {"symmetric", r.symmetric},
                 {"transitive", r.transitive}};
  if (r.abelian_consistent)
    checks["abelian_consistent"] = *r.abelian_consistent;
  return {{"field", r.field},
          {"A", algebra_to_json(r.A)},
          {"B", algebra_to_json(r.B)},
          {"exhaustive", r.exhaustive},
          {"total_candidates", r.total_candidates},
          {"num_candidates", r.num_candidates},
          {"num_cocycles", r.num_cocycles},
          {"num_mc", r.num_mc},
          {"num_extensions",
           {{"enumerated", r.num_enumerated_extensions},
            {"from_cocycles", r.num_associative_extensions}}},
          {"beta_count", r.beta_count},
          {"witness_edges", r.witness_edges},
          {"num_classes", r.classes.size()},
          {"classes", std::move(classes)},
          {"cross_checks", std::move(checks)},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

} // namespace nabext::io
