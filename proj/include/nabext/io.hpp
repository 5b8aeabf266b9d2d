#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nabext/algebra.hpp"
#include "nabext/classifier.hpp"
#include "nabext/cocycle.hpp"
#include "nabext/extension.hpp"
#include "nabext/gauge.hpp"

namespace nabext::io {

using json = nlohmann::json;

/// Malformed or schema-violating input.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string &path);

json field_to_json(Field f);
/// "Q", "F<p>" or {"p": p}.
Field field_from_json(const json &j);

/// Scalars travel as strings ("3/2", "1"); bare JSON integers are accepted
/// on input.
Scalar scalar_from_json(const json &j, Field f);

json algebra_to_json(const Algebra &a);
Algebra algebra_from_json(const json &j);

/// {"arity", "source_dim", "target_dim", "entries": [[k, i1..in, c], ...]}
/// with optional "field" and "split": {"a_dim", "b_dim"}.
json map_to_json(const MultilinearMap &m, bool with_field = true);
/// `fallback` is used when the document has no "field"; without either the
/// map is over Q.
MultilinearMap map_from_json(const json &j, std::optional<Field> fallback);

/// Nonzero entries as [[row, col, c], ...].
json matrix_entries(const Matrix &m);
Matrix matrix_from_entries(const json &j, Field f, std::size_t rows, std::size_t cols);

/// {"A", "B", "phi": [[k, b, a, c]], "psi": [[k, a, b, c]], "chi": [[k, b1, b2, c]]}
/// with block-local indices; k indexes A.
json cocycle_to_json(const NabCocycle &c);
NabCocycle cocycle_from_json(const json &j);

/// {"beta": [[i, j, c]]}: coefficient of a_i in β(b_j).
json beta_to_json(const GaugeParam &b);
GaugeParam beta_from_json(const json &j, Field f, std::size_t a_dim, std::size_t b_dim);

/// {"E", "iota", "p"} plus optional "A" and "B" algebras, or "a_dim" and
/// "b_dim" when A and B are to be induced from E.
json extension_to_json(const ExtensionPresentation &e);
ExtensionPresentation extension_from_json(const json &j);

json section_to_json(const Section &s);
Section section_from_json(const json &j, const ExtensionPresentation &e);

json violation_to_json(const CocycleViolation &v);
json report_to_json(const ClassificationReport &r);

} // namespace nabext::io
