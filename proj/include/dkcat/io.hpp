#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "dkcat/enriched.hpp"
#include "dkcat/intervals.hpp"
#include "dkcat/path_objects.hpp"
#include "dkcat/suites.hpp"

namespace dkcat {

// Canonical text format. Scalars are decimal strings ("n/d" over Q, 0..p-1
// over F_p), matrices are arrays of rows, objects have sorted keys. Readers
// also accept plain integers for scalars.
//
// Wherever a complex is expected, a string names an entry of the document's
// top-level "complexes" table; writers always inline.

using Json = nlohmann::json;

/// Malformed input: missing keys, wrong types, unresolved references.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// The field named by `j["field"]`, reconciled with a requested one. Throws
/// FieldMismatch when both are present and differ, FormatError when neither is.
Field resolve_field(const Json& j, const std::optional<Field>& requested);

Json to_json(const Field& f, Scalar s);
Json to_json(const Matrix& m);
Json to_json(const Field& f, const Vector& v);
/// Shapes are checked against `rows` x `cols`.
Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols);
Vector vector_from_json(const Json& j, const Field& f, std::size_t size);

/// {field, ranks, boundaries}
Json to_json(const ChainComplex& c);
/// `doc` resolves string references; d^2 = 0 is not checked here.
ChainComplex complex_from_json(const Json& j, const Field& f, const Json& doc = Json::object());

/// {source, target, components}
Json to_json(const ChainMap& m);
ChainMap chain_map_from_json(const Json& j, const Field& f, const Json& doc = Json::object());
/// Components only, for maps whose endpoints are known.
ChainMap chain_map_from_json(const Json& components, const ChainComplex& source, const ChainComplex& target);

/// {field, truncation, ranks, faces, degeneracies}
Json to_json(const SimplicialModule& m);
SimplicialModule simplicial_module_from_json(const Json& j, const Field& f);

/// {ambient: "chain", field, objects, homs, comp, units}: `homs` has n^2
/// entries in the order x * n + y, `comp` has n^3 component lists in the
/// order (x * n + y) * n + z (null for the zero map).
Json to_json(const ChainCategory& c);
ChainCategory category_from_json(const Json& j, const std::optional<Field>& field = std::nullopt);

/// {source, target, objects, components}, categories inline.
Json to_json(const ChainFunctor& f);
ChainFunctor functor_from_json(const Json& j, const std::optional<Field>& field = std::nullopt);

/// {ambient: "chain", field, objects: {I, I1, I2}, maps: {d0, d1, p, i0, i1, c}},
/// each map a component list.
Json to_json(const ChainInterval& iv);
ChainInterval interval_from_json(const Json& j, const std::optional<Field>& field = std::nullopt);

/// {field, dim, multiplication, unit, comultiplication, counit, antipode}.
/// The reader also accepts {"cyclic": n} and {"group": {order, table}} and
/// builds the group algebra.
Json to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const Json& j, const std::optional<Field>& field = std::nullopt);

/// {mode, passed, axioms: [{id, verdict, witness}]}
Json to_json(const AxiomReport& r);
AxiomReport report_from_json(const Json& j);
Verdict parse_verdict(std::string_view name);

Json to_json(const DkVerdict& v);
Json to_json(const DoldKanSummary& s);
Json to_json(const CharacterizationSummary& s);
Json to_json(const HomAssemblyTrace& t);
/// Ledger, object counts and the verification report.
Json path_object_summary(const PathObjectBundle& b, const AxiomReport& report);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace dkcat
