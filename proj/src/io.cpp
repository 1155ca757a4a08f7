#include "dkcat/io.hpp"

#include <stdexcept>

namespace dkcat {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw FormatError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw FormatError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const char* what, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  if (size && j.size() != *size)
    throw FormatError(std::string(what) + " must have " + std::to_string(*size) + " entries, got " +
                      std::to_string(j.size()));
  return j;
}

Scalar scalar_from_json(const Json& j, const Field& f) {
  try {
    if (j.is_string()) return f.parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("bad scalar: ") + e.what());
  } catch (const std::domain_error& e) {
    throw FormatError(std::string("bad scalar: ") + e.what());
  }
  throw FormatError("a scalar must be a decimal string or an integer");
}

void require_chain_ambient(const Json& j) {
  if (j.contains("ambient") && as_string(j["ambient"], "ambient") != ChainAmbient::tag)
    throw FormatError("unsupported ambient '" + j["ambient"].get<std::string>() + "'");
}

Json components_json(const ChainMap& m) {
  Json out = Json::array();
  for (int n = 0; n <= m.source().top(); ++n) out.push_back(to_json(m.component(n)));
  return out;
}

}  // namespace

Field resolve_field(const Json& j, const std::optional<Field>& requested) {
  std::optional<Field> own;
  if (j.is_object() && j.contains("field")) {
    try {
      own = Field::parse(as_string(j["field"], "field"));
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("bad field: ") + e.what());
    }
  }
  if (own && requested && !(*own == *requested))
    throw FieldMismatch("input is over " + own->name() + " but " + requested->name() + " was requested");
  if (own) return *own;
  if (requested) return *requested;
  throw FormatError("no field given");
}

Json to_json(const Field& f, Scalar s) { return f.format(s); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field().format(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Field& f, const Vector& v) {
  Json out = Json::array();
  for (Scalar s : v) out.push_back(f.format(s));
  return out;
}

Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols) {
  as_array(j, "matrix", rows);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = as_array(j[r], "matrix row", cols);
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_from_json(row[c], f));
  }
  return m;
}

Vector vector_from_json(const Json& j, const Field& f, std::size_t size) {
  as_array(j, "vector", size);
  Vector v;
  for (const Json& s : j) v.push_back(scalar_from_json(s, f));
  return v;
}

Json to_json(const ChainComplex& c) {
  Json boundaries = Json::array();
  for (int n = 1; n <= c.top(); ++n) boundaries.push_back(to_json(c.boundary(n)));
  return {{"field", c.field().name()}, {"ranks", c.ranks()}, {"boundaries", boundaries}};
}

ChainComplex complex_from_json(const Json& j, const Field& f, const Json& doc) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (!doc.is_object() || !doc.contains("complexes") || !doc["complexes"].contains(name))
      throw FormatError("unresolved complex reference '" + name + "'");
    return complex_from_json(doc["complexes"][name], f, doc);
  }
  Field own = resolve_field(j, f);
  std::vector<std::size_t> ranks;
  for (const Json& r : as_array(member(j, "ranks"), "ranks")) ranks.push_back(as_size(r, "rank"));
  std::size_t nb = ranks.empty() ? 0 : ranks.size() - 1;
  const Json& bj = j.contains("boundaries") ? j["boundaries"] : Json::array();
  as_array(bj, "boundaries", nb);
  std::vector<Matrix> boundaries;
  for (std::size_t n = 1; n < ranks.size(); ++n) boundaries.push_back(matrix_from_json(bj[n - 1], own, ranks[n - 1], ranks[n]));
  return ChainComplex(own, ranks, boundaries);
}

Json to_json(const ChainMap& m) {
  return {{"source", to_json(m.source())}, {"target", to_json(m.target())}, {"components", components_json(m)}};
}

ChainMap chain_map_from_json(const Json& j, const Field& f, const Json& doc) {
  ChainComplex s = complex_from_json(member(j, "source"), f, doc);
  ChainComplex t = complex_from_json(member(j, "target"), f, doc);
  return chain_map_from_json(member(j, "components"), s, t);
}

ChainMap chain_map_from_json(const Json& components, const ChainComplex& source, const ChainComplex& target) {
  if (components.is_null()) return ChainMap::zero(source, target);
  auto needed = static_cast<std::size_t>(source.top() + 1);
  as_array(components, "components");
  if (components.size() > needed)
    throw FormatError("map has " + std::to_string(components.size()) + " components, the source only " +
                      std::to_string(needed) + " degrees");
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n < needed; ++n) {
    int deg = static_cast<int>(n);
    if (n < components.size())
      comps.push_back(matrix_from_json(components[n], source.field(), target.rank(deg), source.rank(deg)));
    else
      comps.emplace_back(source.field(), target.rank(deg), source.rank(deg));
  }
  return ChainMap(source, target, comps);
}

Json to_json(const SimplicialModule& m) {
  Json faces = Json::array(), degs = Json::array();
  for (int n = 0; n <= m.truncation(); ++n) {
    Json fl = Json::array(), dl = Json::array();
    for (const Matrix& d : m.faces()[n]) fl.push_back(to_json(d));
    for (const Matrix& s : m.degeneracies()[n]) dl.push_back(to_json(s));
    faces.push_back(fl);
    degs.push_back(dl);
  }
  return {{"field", m.field().name()},
          {"truncation", m.truncation()},
          {"ranks", m.ranks()},
          {"faces", faces},
          {"degeneracies", degs}};
}

SimplicialModule simplicial_module_from_json(const Json& j, const Field& f) {
  Field own = resolve_field(j, f);
  std::size_t levels = as_size(member(j, "truncation"), "truncation") + 1;
  std::vector<std::size_t> ranks;
  for (const Json& r : as_array(member(j, "ranks"), "ranks", levels)) ranks.push_back(as_size(r, "rank"));
  const Json& fj = as_array(member(j, "faces"), "faces", levels);
  const Json& dj = as_array(member(j, "degeneracies"), "degeneracies", levels);
  std::vector<std::vector<Matrix>> faces(levels), degs(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    as_array(fj[n], "faces", n == 0 ? 0 : n + 1);
    as_array(dj[n], "degeneracies", n + 1 == levels ? 0 : n + 1);
    for (const Json& d : fj[n]) faces[n].push_back(matrix_from_json(d, own, ranks[n - 1], ranks[n]));
    for (const Json& s : dj[n]) degs[n].push_back(matrix_from_json(s, own, ranks[n + 1], ranks[n]));
  }
  return SimplicialModule(own, static_cast<int>(levels - 1), ranks, faces, degs);
}

Json to_json(const ChainCategory& c) {
  std::size_t n = c.size();
  Json homs = Json::array(), comp = Json::array(), units = Json::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) homs.push_back(to_json(c.hom(x, y)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const ChainMap& m = c.composition(x, y, z);
        comp.push_back(m == ChainMap::zero(m.source(), m.target()) ? Json() : components_json(m));
      }
  for (std::size_t x = 0; x < n; ++x) units.push_back(to_json(c.field(), c.unit(x)));
  return {{"ambient", ChainAmbient::tag}, {"field", c.field().name()}, {"objects", c.names()},
          {"homs", homs},                 {"comp", comp},                {"units", units}};
}

ChainCategory category_from_json(const Json& j, const std::optional<Field>& field) {
  require_chain_ambient(j);
  Field f = resolve_field(j, field);
  std::vector<std::string> names;
  for (const Json& o : as_array(member(j, "objects"), "objects")) names.push_back(as_string(o, "object name"));
  std::size_t n = names.size();
  const Json& hj = as_array(member(j, "homs"), "homs", n * n);
  const Json& cj = as_array(member(j, "comp"), "comp", n * n * n);
  const Json& uj = as_array(member(j, "units"), "units", n);
  std::vector<ChainComplex> homs;
  for (const Json& h : hj) homs.push_back(complex_from_json(h, f, j));
  std::vector<ChainMap> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        comps.push_back(chain_map_from_json(cj[(x * n + y) * n + z], tensor(homs[x * n + y], homs[y * n + z]),
                                            homs[x * n + z]));
  std::vector<Vector> units;
  for (std::size_t x = 0; x < n; ++x) units.push_back(vector_from_json(uj[x], f, homs[x * n + x].rank(0)));
  return ChainCategory(ChainAmbient{f}, names, homs, comps, units);
}

Json to_json(const ChainFunctor& f) {
  std::size_t n = f.source().size();
  Json comps = Json::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) comps.push_back(components_json(f.component(x, y)));
  return {{"source", to_json(f.source())},
          {"target", to_json(f.target())},
          {"objects", f.objects()},
          {"components", comps}};
}

ChainFunctor functor_from_json(const Json& j, const std::optional<Field>& field) {
  std::optional<Field> f = field;
  if (j.is_object() && j.contains("field")) f = resolve_field(j, field);
  auto source = std::make_shared<const ChainCategory>(category_from_json(member(j, "source"), f));
  auto target = std::make_shared<const ChainCategory>(category_from_json(member(j, "target"), f));
  if (!(source->field() == target->field()))
    throw FieldMismatch("source is over " + source->field().name() + ", target over " + target->field().name());
  std::size_t n = source->size();
  std::vector<std::size_t> objects;
  for (const Json& o : as_array(member(j, "objects"), "objects", n)) {
    objects.push_back(as_size(o, "object"));
    if (objects.back() >= target->size()) throw FormatError("object image out of range");
  }
  const Json& cj = as_array(member(j, "components"), "components", n * n);
  std::vector<ChainMap> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      comps.push_back(
          chain_map_from_json(cj[x * n + y], source->hom(x, y), target->hom(objects[x], objects[y])));
  return ChainFunctor(source, target, objects, comps);
}

Json to_json(const ChainInterval& iv) {
  Json maps = Json::object();
  for (const std::string& name : interval_map_names()) maps[name] = components_json(interval_map(iv, name));
  return {{"ambient", ChainAmbient::tag},
          {"field", iv.I.field().name()},
          {"objects", {{"I", to_json(iv.I)}, {"I1", to_json(iv.I1)}, {"I2", to_json(iv.I2)}}},
          {"maps", maps}};
}

ChainInterval interval_from_json(const Json& j, const std::optional<Field>& field) {
  require_chain_ambient(j);
  Field f = resolve_field(j, field);
  const Json& oj = member(j, "objects");
  ChainInterval iv;
  iv.I = complex_from_json(member(oj, "I"), f, j);
  iv.I1 = complex_from_json(member(oj, "I1"), f, j);
  iv.I2 = complex_from_json(member(oj, "I2"), f, j);
  const Json& mj = member(j, "maps");
  iv.d0 = chain_map_from_json(member(mj, "d0"), iv.I, iv.I1);
  iv.d1 = chain_map_from_json(member(mj, "d1"), iv.I, iv.I1);
  iv.p = chain_map_from_json(member(mj, "p"), iv.I1, iv.I);
  iv.i0 = chain_map_from_json(member(mj, "i0"), iv.I1, iv.I2);
  iv.i1 = chain_map_from_json(member(mj, "i1"), iv.I1, iv.I2);
  iv.c = chain_map_from_json(member(mj, "c"), iv.I1, iv.I2);
  return iv;
}

Json to_json(const HopfAlgebra& h) {
  return {{"field", h.field.name()},
          {"dim", h.dim},
          {"multiplication", to_json(h.multiplication)},
          {"unit", to_json(h.unit)},
          {"comultiplication", to_json(h.comultiplication)},
          {"counit", to_json(h.counit)},
          {"antipode", to_json(h.antipode)}};
}

HopfAlgebra hopf_from_json(const Json& j, const std::optional<Field>& field) {
  Field f = resolve_field(j, field);
  if (j.contains("cyclic")) {
    std::size_t n = as_size(j["cyclic"], "cyclic");
    if (n == 0) throw FormatError("cyclic group order must be positive");
    return cyclic_group_algebra(f, n);
  }
  if (j.contains("group")) {
    const Json& g = j["group"];
    std::size_t order = as_size(member(g, "order"), "order");
    std::vector<std::size_t> table;
    for (const Json& e : as_array(member(g, "table"), "table", order * order)) {
      table.push_back(as_size(e, "table entry"));
      if (table.back() >= order) throw FormatError("group table entry out of range");
    }
    return group_algebra(f, order, table);
  }
  HopfAlgebra h;
  h.field = f;
  h.dim = as_size(member(j, "dim"), "dim");
  std::size_t d = h.dim;
  h.multiplication = matrix_from_json(member(j, "multiplication"), f, d, d * d);
  h.unit = matrix_from_json(member(j, "unit"), f, d, 1);
  h.comultiplication = matrix_from_json(member(j, "comultiplication"), f, d * d, d);
  h.counit = matrix_from_json(member(j, "counit"), f, 1, d);
  h.antipode = matrix_from_json(member(j, "antipode"), f, d, d);
  return h;
}

Json to_json(const AxiomReport& r) {
  Json axioms = Json::array();
  for (const AxiomResult& a : r.axioms)
    axioms.push_back({{"id", a.id}, {"verdict", std::string(to_string(a.verdict))}, {"witness", a.witness}});
  return {{"mode", std::string(to_string(r.mode))}, {"passed", r.passed()}, {"axioms", axioms}};
}

Verdict parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::not_applicable, Verdict::undetermined})
    if (to_string(v) == name) return v;
  throw FormatError("unknown verdict '" + std::string(name) + "'");
}

AxiomReport report_from_json(const Json& j) {
  AxiomReport r;
  try {
    r.mode = parse_mode(as_string(member(j, "mode"), "mode"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  for (const Json& a : as_array(member(j, "axioms"), "axioms"))
    r.axioms.push_back({as_string(member(a, "id"), "id"), parse_verdict(as_string(member(a, "verdict"), "verdict")),
                        as_string(member(a, "witness"), "witness")});
  return r;
}

Json to_json(const DkVerdict& v) {
  return {{"locally-weq", v.locally_weak_equivalence},
          {"locally-fib", v.locally_fibration},
          {"locally-triv-fib", v.locally_trivial_fibration},
          {"surjective-on-objects", v.surjective_on_objects},
          {"ess-surj", v.essentially_surjective},
          {"isofib", v.isofibration},
          {"dk-equiv", v.dk_equivalence},
          {"dk-fib", v.dk_fibration},
          {"triv-fib-characterization-pair", {v.characterization.first, v.characterization.second}},
          {"characterization-equal", v.characterization.first == v.characterization.second}};
}

Json to_json(const DoldKanSummary& s) {
  const DoldKanOptions& o = s.options;
  std::vector<std::size_t> top_degrees(static_cast<std::size_t>(std::max(o.max_degree, 0)) + 2, 0);
  std::size_t complex_rank = 0, module_rank = 0, h0 = 0;
  Json failures = Json::array();
  for (const DoldKanTrial& t : s.trials) {
    ++top_degrees[t.complex_ranks.size()];
    for (std::size_t r : t.complex_ranks) complex_rank += r;
    for (std::size_t r : t.module_ranks) module_rank += r;
    h0 += t.h0_classes;
    if (!t.passed()) failures.push_back({{"trial", t.index}, {"check", t.failure}});
  }
  return {{"field", o.field.name()},
          {"trials", o.trials},
          {"seed", o.seed},
          {"max_degree", o.max_degree},
          {"max_rank", o.max_rank},
          {"shuffle_signs", o.signs == ShuffleSigns::standard ? "standard" : "unsigned"},
          {"passed", s.trials.size() - s.failures},
          {"failed", s.failures},
          {"first_failure", s.first_failure ? Json(*s.first_failure) : Json()},
          {"failures", failures},
          {"statistics",
           {{"complex_rank_total", complex_rank},
            {"module_rank_total", module_rank},
            {"h0_classes_total", h0},
            {"complexes_by_length", top_degrees}}}};
}

Json to_json(const CharacterizationSummary& s) {
  return {{"trials", s.trials},
          {"agreeing", s.agreeing},
          {"both_true", s.both_true},
          {"first_disagreement", s.first_disagreement ? Json(*s.first_disagreement) : Json()}};
}

Json to_json(const HomAssemblyTrace& t) {
  return {{"h0", to_json(t.h0)}, {"h1", to_json(t.h1)},         {"g1", to_json(t.g1)},
          {"g2", to_json(t.g2)}, {"paired", to_json(t.paired)}, {"m", to_json(t.m)},
          {"g", to_json(t.g)},   {"composition", to_json(t.composition)}};
}

Json path_object_summary(const PathObjectBundle& b, const AxiomReport& report) {
  Json ledger = Json::array();
  for (const PathObjectEntry& e : b.ledger)
    ledger.push_back({{"source", e.source},
                      {"target", e.target},
                      {"cycle", to_json(b.base->field(), e.cycle)},
                      {"isomorphism", e.isomorphism}});
  return {{"field", b.base->field().name()},
          {"base_objects", b.base->size()},
          {"ledger", ledger},
          {"p0_objects", b.ledger.size()},
          {"p_objects", b.p_objects.size()},
          {"report", to_json(report)}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dkcat
