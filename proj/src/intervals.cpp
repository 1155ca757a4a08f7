#include "dkcat/intervals.hpp"

#include <algorithm>
#include <set>

#include "dkcat/ambient.hpp"

namespace dkcat {

namespace {

/// Raised by an ambient when it cannot decide a question.
class Undecided : public Error {
 public:
  using Error::Error;
};

std::string rank_list(const std::vector<std::size_t>& ranks) {
  std::string s = "(";
  for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? "," : "") + std::to_string(ranks[i]);
  return s + ")";
}

// Kernel or cokernel of the first non-bijective component.
std::string non_iso_components(const std::vector<Matrix>& comps, const char* grading) {
  for (std::size_t n = 0; n < comps.size(); ++n) {
    std::size_t r = rank(comps[n]);
    if (comps[n].cols() > r) {
      return "kernel dimension " + std::to_string(comps[n].cols() - r) + " in " + grading + " " + std::to_string(n);
    }
    if (comps[n].rows() > r) {
      return "cokernel dimension " + std::to_string(comps[n].rows() - r) + " in " + grading + " " + std::to_string(n);
    }
  }
  return "not invertible";
}

// ---- chain complexes ----------------------------------------------------------

struct ChainOps {
  using Object = ChainComplex;
  using Map = ChainMap;
  using Colimit = Pushout;

  Field field;

  Object initial() const { return ChainComplex::zero(field); }
  Map from_initial(const Object& x) const { return ChainMap::zero(initial(), x); }
  const Object& source(const Map& f) const { return f.source(); }
  const Object& target(const Map& f) const { return f.target(); }
  Map compose(const Map& g, const Map& f) const { return dkcat::compose(g, f); }
  Map identity(const Object& x) const { return ChainMap::identity(x); }
  std::optional<std::string> difference(const Map& a, const Map& b) const {
    if (!(a.source() == b.source()) || !(a.target() == b.target())) return "different source or target";
    return ChainAmbient{field}.difference(a, b);
  }
  std::optional<std::string> defect(const Map& f) const {
    auto bad = f.noncommuting_degrees();
    if (bad.empty()) return std::nullopt;
    return "does not commute with the boundary in degree " + std::to_string(bad.front());
  }
  Colimit pushout(const Map& f, const Map& g) const { return dkcat::pushout(f, g); }
  const Map& in1(const Colimit& po) const { return po.in1; }
  const Map& in2(const Colimit& po) const { return po.in2; }
  Map induced(const Colimit& po, const Map& x, const Map& y) const { return induced_from_pushout(po, x, y); }
  std::optional<Map> inverse(const Map& f) const { return dkcat::inverse(f); }
  std::string non_iso_witness(const Map& f) const {
    std::vector<Matrix> comps;
    int top = std::max(f.source().top(), f.target().top());
    for (int n = 0; n <= top; ++n) comps.push_back(f.component(n));
    return non_iso_components(comps, "degree");
  }
  std::pair<Verdict, std::string> weak_equivalence(const Map& f) const {
    if (is_quasi_iso(f)) return {Verdict::pass, ""};
    return {Verdict::fail, "homology " + rank_list(homology(f.source())) + " -> " + rank_list(homology(f.target()))};
  }
  bool cofibration(const Map& f) const { return is_cofibration(f); }
};

// Vector spaces as complexes in degree 0; weak equivalences are the stable
// equivalences of H-modules, decided only in the semisimple case.
struct HopfOps : ChainOps {
  bool semisimple = false;

  std::pair<Verdict, std::string> weak_equivalence(const Map& f) const {
    if (is_isomorphism(f)) return {Verdict::pass, ""};
    if (semisimple) return {Verdict::pass, ""};
    return {Verdict::undetermined, "stable equivalence of a non-isomorphism over a non-semisimple Hopf algebra"};
  }
};

// ---- simplicial modules ------------------------------------------------------

struct SimplicialOps {
  using Object = SimplicialModule;
  using Map = SimplicialMap;
  using Colimit = SimplicialPushout;

  Field field;
  int truncation = 0;

  Object initial() const { return SimplicialModule::constant(field, truncation, 0); }
  Map from_initial(const Object& x) const { return SimplicialMap::zero(initial(), x); }
  const Object& source(const Map& f) const { return f.source(); }
  const Object& target(const Map& f) const { return f.target(); }
  Map compose(const Map& g, const Map& f) const { return dkcat::compose(g, f); }
  Map identity(const Object& x) const { return SimplicialMap::identity(x); }
  std::optional<std::string> difference(const Map& a, const Map& b) const {
    if (!(a.source() == b.source()) || !(a.target() == b.target())) return "different source or target";
    return SimplicialAmbient{field, truncation}.difference(a, b);
  }
  std::optional<std::string> defect(const Map& f) const {
    auto bad = f.failures();
    if (bad.empty()) return std::nullopt;
    return "does not commute: " + bad.front();
  }
  Colimit pushout(const Map& f, const Map& g) const { return dkcat::pushout(f, g); }
  const Map& in1(const Colimit& po) const { return po.in1; }
  const Map& in2(const Colimit& po) const { return po.in2; }
  Map induced(const Colimit& po, const Map& x, const Map& y) const { return induced_from_pushout(po, x, y); }
  std::optional<Map> inverse(const Map& f) const { return dkcat::inverse(f); }
  std::string non_iso_witness(const Map& f) const { return non_iso_components(f.components(), "level"); }
  std::pair<Verdict, std::string> weak_equivalence(const Map& f) const {
    if (is_weak_equivalence(f)) return {Verdict::pass, ""};
    return {Verdict::fail, "normalized homology " + rank_list(homology(normalize(f.source()))) + " -> " +
                               rank_list(homology(normalize(f.target())))};
  }
  bool cofibration(const Map& f) const { return is_cofibration(f); }
};

// ---- finite categories ------------------------------------------------------------

struct CatPushout {
  FiniteCategory apex;
  CatFunctor in1, in2;
  CatFunctor f, g;
  bool disjoint = false;
};

CatFunctor chaotic_functor(const FiniteCategory& source, const FiniteCategory& target,
                           std::vector<std::size_t> objects) {
  std::size_t n = source.objects();
  return CatFunctor{source, target, FiniteFunctor{std::move(objects), std::vector<std::vector<std::size_t>>(n * n, {0})}};
}

bool injective_on_objects(const CatFunctor& f) {
  const auto& o = f.functor.objects;
  return std::set<std::size_t>(o.begin(), o.end()).size() == o.size();
}

struct CatOps {
  using Object = FiniteCategory;
  using Map = CatFunctor;
  using Colimit = CatPushout;

  Object initial() const { return FiniteCategory(0, {}, {}, {}); }
  Map from_initial(const Object& x) const { return CatFunctor{initial(), x, FiniteFunctor{}}; }
  const Object& source(const Map& f) const { return f.source; }
  const Object& target(const Map& f) const { return f.target; }
  Map compose(const Map& g, const Map& f) const {
    if (!(g.source == f.target)) throw ShapeError("functors are not composable");
    return CatFunctor{f.source, g.target, dkcat::compose(g.functor, f.functor, f.source)};
  }
  Map identity(const Object& x) const {
    FiniteFunctor id;
    std::size_t n = x.objects();
    for (std::size_t a = 0; a < n; ++a) id.objects.push_back(a);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<std::size_t> t(x.hom_size(a, b));
        for (std::size_t m = 0; m < t.size(); ++m) t[m] = m;
        id.morphisms.push_back(t);
      }
    return CatFunctor{x, x, id};
  }
  std::optional<std::string> difference(const Map& a, const Map& b) const {
    if (!(a.source == b.source) || !(a.target == b.target)) return "different source or target";
    std::size_t n = a.source.objects();
    for (std::size_t x = 0; x < n; ++x)
      if (a.functor.objects[x] != b.functor.objects[x]) return "object " + std::to_string(x);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (a.functor.morphisms[x * n + y] != b.functor.morphisms[x * n + y]) {
          return "morphisms (" + std::to_string(x) + "," + std::to_string(y) + ")";
        }
    return std::nullopt;
  }
  std::optional<std::string> defect(const Map& f) const {
    auto r = validate(f.functor, f.source, f.target);
    if (r.ok) return std::nullopt;
    return r.witness;
  }

  Colimit pushout(const Map& f, const Map& g) const {
    if (!(f.source == g.source)) throw ShapeError("pushout legs have different sources");
    const FiniteCategory& a = f.target;
    const FiniteCategory& b = g.target;
    std::size_t na = a.objects(), nb = b.objects();
    CatPushout po;
    po.f = f;
    po.g = g;
    if (f.source.objects() == 0) {
      po.disjoint = true;
      po.apex = coproduct(a, b);
      FiniteFunctor i1, i2;
      for (std::size_t x = 0; x < na; ++x) i1.objects.push_back(x);
      for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < na; ++y) i1.morphisms.push_back(identity(a).functor.morphisms[x * na + y]);
      for (std::size_t x = 0; x < nb; ++x) i2.objects.push_back(na + x);
      for (std::size_t x = 0; x < nb; ++x)
        for (std::size_t y = 0; y < nb; ++y) i2.morphisms.push_back(identity(b).functor.morphisms[x * nb + y]);
      po.in1 = CatFunctor{a, po.apex, i1};
      po.in2 = CatFunctor{b, po.apex, i2};
      return po;
    }
    if (!is_chaotic(a) || !is_chaotic(b) || !is_chaotic(f.source) || !injective_on_objects(f) ||
        !injective_on_objects(g)) {
      throw Undecided("pushout of categories outside contractible groupoids glued along injections");
    }
    std::vector<std::size_t> from_b(nb, nb + na);
    for (std::size_t c = 0; c < f.source.objects(); ++c) from_b[g.functor.objects[c]] = f.functor.objects[c];
    std::size_t next = na;
    for (std::size_t y = 0; y < nb; ++y)
      if (from_b[y] == nb + na) from_b[y] = next++;
    po.apex = chaotic_category(next);
    std::vector<std::size_t> from_a(na);
    for (std::size_t x = 0; x < na; ++x) from_a[x] = x;
    po.in1 = chaotic_functor(a, po.apex, from_a);
    po.in2 = chaotic_functor(b, po.apex, from_b);
    return po;
  }
  const Map& in1(const Colimit& po) const { return po.in1; }
  const Map& in2(const Colimit& po) const { return po.in2; }

  Map induced(const Colimit& po, const Map& x, const Map& y) const {
    if (!(x.source == po.in1.source) || !(y.source == po.in2.source) || !(x.target == y.target)) {
      throw ShapeError("cocone does not match the pushout");
    }
    const FiniteCategory& t = x.target;
    std::size_t na = x.source.objects(), nb = y.source.objects(), n = po.apex.objects();
    if (!(compose(x, po.f) == compose(y, po.g))) throw StructuralError("cocone legs disagree on the glued category");
    FiniteFunctor out;
    if (po.disjoint) {
      out.objects = x.functor.objects;
      out.objects.insert(out.objects.end(), y.functor.objects.begin(), y.functor.objects.end());
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          if (p < na && q < na) {
            out.morphisms.push_back(x.functor.morphisms[p * na + q]);
          } else if (p >= na && q >= na) {
            out.morphisms.push_back(y.functor.morphisms[(p - na) * nb + (q - na)]);
          } else {
            out.morphisms.emplace_back();
          }
        }
      return CatFunctor{po.apex, t, out};
    }
    // chaotic apex: objects below na come from A, the rest only from B
    std::vector<std::size_t> b_of(n, nb);
    for (std::size_t j = 0; j < nb; ++j) b_of[po.in2.functor.objects[j]] = j;
    std::size_t glue_a = po.f.functor.objects[0], glue_b = po.g.functor.objects[0];
    auto obj = [&](std::size_t o) { return o < na ? x.functor.objects[o] : y.functor.objects[b_of[o]]; };
    for (std::size_t o = 0; o < n; ++o) out.objects.push_back(obj(o));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        std::size_t m;
        if (p < na && q < na) {
          m = x.functor.map(na, p, q, 0);
        } else if (b_of[p] < nb && b_of[q] < nb) {
          m = y.functor.map(nb, b_of[p], b_of[q], 0);
        } else if (p < na) {
          std::size_t m1 = x.functor.map(na, p, glue_a, 0);
          std::size_t m2 = y.functor.map(nb, glue_b, b_of[q], 0);
          m = t.compose(obj(p), x.functor.objects[glue_a], obj(q), m1, m2);
        } else {
          std::size_t m1 = y.functor.map(nb, b_of[p], glue_b, 0);
          std::size_t m2 = x.functor.map(na, glue_a, q, 0);
          m = t.compose(obj(p), x.functor.objects[glue_a], obj(q), m1, m2);
        }
        out.morphisms.push_back({m});
      }
    return CatFunctor{po.apex, t, out};
  }

  std::optional<Map> inverse(const Map& f) const {
    if (!is_isomorphism(f.functor, f.source, f.target)) return std::nullopt;
    std::size_t n = f.source.objects();
    FiniteFunctor inv;
    inv.objects.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) inv.objects[f.functor.objects[x]] = x;
    inv.morphisms.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t fx = f.functor.objects[x], fy = f.functor.objects[y];
        auto& table = inv.morphisms[fx * n + fy];
        table.assign(f.target.hom_size(fx, fy), 0);
        for (std::size_t m = 0; m < f.source.hom_size(x, y); ++m) table[f.functor.map(n, x, y, m)] = m;
      }
    return CatFunctor{f.target, f.source, inv};
  }
  std::string non_iso_witness(const Map& f) const {
    if (f.source.objects() != f.target.objects() || !injective_on_objects(f)) return "not bijective on objects";
    std::size_t n = f.source.objects();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto& m = f.functor.morphisms[x * n + y];
        if (m.size() != f.target.hom_size(f.functor.objects[x], f.functor.objects[y]) ||
            std::set<std::size_t>(m.begin(), m.end()).size() != m.size()) {
          return "not bijective on morphisms (" + std::to_string(x) + "," + std::to_string(y) + ")";
        }
      }
    return "not invertible";
  }
  std::pair<Verdict, std::string> weak_equivalence(const Map& f) const {
    if (is_equivalence(f.functor, f.source, f.target)) return {Verdict::pass, ""};
    return {Verdict::fail, "not an equivalence of categories"};
  }
  bool cofibration(const Map& f) const { return injective_on_objects(f); }
};

// ---- the generic verifier ------------------------------------------------------

template <class Ops>
class Verifier {
 public:
  using Map = typename Ops::Map;
  using Interval = CocategoryInterval<typename Ops::Object, Map>;

  Verifier(const Ops& ops, AxiomReport& report) : ops_(ops), report_(report) {}

  // Runs `body` returning (verdict, witness); construction errors make the
  // axiom not applicable, undecidable ambient questions leave it undetermined.
  template <class Body>
  Verdict axiom(const std::string& id, Body&& body) {
    std::pair<Verdict, std::string> r;
    try {
      r = body();
    } catch (const Undecided& e) {
      r = {Verdict::undetermined, e.what()};
    } catch (const Error& e) {
      r = {Verdict::not_applicable, std::string("cannot be evaluated: ") + e.what()};
    }
    report_.axioms.push_back({id, r.first, r.second});
    return r.first;
  }

  // Checks the equations in order and reports the first that fails.
  std::pair<Verdict, std::string> equations(std::initializer_list<std::tuple<Map, Map, const char*>> eqs) {
    for (const auto& [a, b, label] : eqs) {
      if (auto d = ops_.difference(a, b)) return {Verdict::fail, std::string(label) + ": " + *d};
    }
    return {Verdict::pass, ""};
  }

 private:
  const Ops& ops_;
  AxiomReport& report_;
};

std::pair<Verdict, std::string> not_applicable(std::string why) { return {Verdict::not_applicable, std::move(why)}; }

template <class Ops>
AxiomReport verify_interval(const Ops& ops, const CocategoryInterval<typename Ops::Object, typename Ops::Map>& iv,
                            Mode mode) {
  using Map = typename Ops::Map;
  AxiomReport report;
  report.mode = mode;
  Verifier<Ops> v(ops, report);

  v.axiom("C0", [&]() -> std::pair<Verdict, std::string> {
    struct Expected {
      const char* name;
      const Map& map;
      const typename Ops::Object& source;
      const typename Ops::Object& target;
    };
    std::vector<Expected> all{{"d0", iv.d0, iv.I, iv.I1},   {"d1", iv.d1, iv.I, iv.I1},   {"p", iv.p, iv.I1, iv.I},
                              {"i0", iv.i0, iv.I1, iv.I2}, {"i1", iv.i1, iv.I1, iv.I2}, {"c", iv.c, iv.I1, iv.I2}};
    for (const auto& e : all) {
      if (!(ops.source(e.map) == e.source) || !(ops.target(e.map) == e.target)) {
        return {Verdict::fail, std::string(e.name) + " has the wrong source or target"};
      }
      if (auto d = ops.defect(e.map)) return {Verdict::fail, std::string(e.name) + " " + *d};
    }
    return {Verdict::pass, ""};
  });

  Map id_i = ops.identity(iv.I);
  Map id_1 = ops.identity(iv.I1);
  Verdict c1 = v.axiom("C1", [&] {
    return v.equations({{ops.compose(iv.p, iv.d0), id_i, "p d0 != id"}, {ops.compose(iv.p, iv.d1), id_i, "p d1 != id"}});
  });
  Verdict c2 = v.axiom("C2", [&] {
    return v.equations({{ops.compose(iv.i0, iv.d1), ops.compose(iv.i1, iv.d0), "i0 d1 != i1 d0"}});
  });

  std::optional<typename Ops::Colimit> glued;
  std::optional<Map> inverse;
  v.axiom("C3", [&]() -> std::pair<Verdict, std::string> {
    if (c2 != Verdict::pass) return not_applicable("needs C2");
    glued = ops.pushout(iv.d1, iv.d0);
    Map cmp = ops.induced(*glued, iv.i0, iv.i1);
    inverse = ops.inverse(cmp);
    if (inverse) return {Verdict::pass, ""};
    if (mode == Mode::strict) return {Verdict::fail, "[i0, i1] is not an isomorphism: " + ops.non_iso_witness(cmp)};
    if (auto d = ops.defect(cmp)) return {Verdict::fail, "[i0, i1] " + *d};
    auto [verdict, why] = ops.weak_equivalence(cmp);
    if (verdict == Verdict::pass) return {verdict, ""};
    return {verdict, "[i0, i1] is not known to be a weak equivalence: " + why};
  });

  v.axiom("C4", [&]() -> std::pair<Verdict, std::string> {
    if (!inverse) return not_applicable("needs an invertible C3 comparison");
    if (c1 != Verdict::pass) return not_applicable("needs C1");
    Map q0 = ops.induced(*glued, id_1, ops.compose(iv.d1, iv.p));
    Map q1 = ops.induced(*glued, ops.compose(iv.d0, iv.p), id_1);
    Map back = ops.compose(*inverse, iv.c);
    return v.equations({{ops.compose(q0, back), id_1, "q0 c != id"}, {ops.compose(q1, back), id_1, "q1 c != id"}});
  });

  Verdict c5 = v.axiom("C5", [&] {
    return v.equations({{ops.compose(iv.c, iv.d0), ops.compose(iv.i0, iv.d0), "c d0 != i0 d0"},
                        {ops.compose(iv.c, iv.d1), ops.compose(iv.i1, iv.d1), "c d1 != i1 d1"}});
  });

  v.axiom("C6", [&]() -> std::pair<Verdict, std::string> {
    if (mode != Mode::strict) return not_applicable("strict mode only");
    if (!inverse) return not_applicable("needs an invertible C3 comparison");
    if (c5 != Verdict::pass) return not_applicable("needs C5");
    auto three = ops.pushout(iv.i1, iv.i0);
    const Map& j1 = ops.in1(three);
    const Map& j2 = ops.in2(three);
    Map left = ops.induced(*glued, ops.compose(j1, iv.c), ops.compose(j2, iv.i1));
    Map right = ops.induced(*glued, ops.compose(j1, iv.i0), ops.compose(j2, iv.c));
    Map back = ops.compose(*inverse, iv.c);
    return v.equations({{ops.compose(left, back), ops.compose(right, back), "(c + id) c != (id + c) c"}});
  });
  return report;
}

template <class Ops>
AxiomReport verify_cylinder_with(const Ops& ops, const CocategoryInterval<typename Ops::Object, typename Ops::Map>& iv) {
  using Map = typename Ops::Map;
  AxiomReport report;
  Verifier<Ops> v(ops, report);
  std::optional<Map> legs;
  v.axiom("fold", [&] {
    auto sum = ops.pushout(ops.from_initial(iv.I), ops.from_initial(iv.I));
    Map id = ops.identity(iv.I);
    legs = ops.induced(sum, iv.d0, iv.d1);
    return v.equations({{ops.compose(iv.p, *legs), ops.induced(sum, id, id), "p [d0, d1] != fold"}});
  });
  v.axiom("cofibration", [&]() -> std::pair<Verdict, std::string> {
    if (!legs) return not_applicable("I + I could not be formed");
    if (ops.cofibration(*legs)) return {Verdict::pass, ""};
    return {Verdict::fail, "[d0, d1] is not a cofibration"};
  });
  v.axiom("weak_equivalence", [&]() -> std::pair<Verdict, std::string> {
    if (auto d = ops.defect(iv.p)) return {Verdict::fail, "p " + *d};
    auto [verdict, why] = ops.weak_equivalence(iv.p);
    if (verdict == Verdict::pass) return {verdict, ""};
    return {verdict, "p is not known to be a weak equivalence: " + why};
  });
  return report;
}

Matrix ints(const Field& f, std::size_t r, std::size_t c, std::vector<std::int64_t> e) {
  return Matrix::from_ints(f, r, c, e);
}

Matrix swap_matrix(const Field& f, std::size_t n) {
  Matrix t(f, n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.set(b * n + a, a * n + b, f.one());
  return t;
}

HModule trivial_module(const HopfAlgebra& h, std::size_t dim) {
  return HModule{dim, kron(h.counit, Matrix::identity(h.field, dim))};
}

HModule sum_module(const HopfAlgebra& h, const HModule& a, const HModule& b) {
  std::size_t d = a.dim + b.dim;
  Matrix act(h.field, d, h.dim * d);
  for (std::size_t g = 0; g < h.dim; ++g) {
    act.set_block(0, g * d, a.action.block(0, g * a.dim, a.dim, a.dim));
    act.set_block(a.dim, g * d + a.dim, b.action.block(0, g * b.dim, b.dim, b.dim));
  }
  return HModule{d, act};
}

}  // namespace

// ---- reports -------------------------------------------------------------------

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::undetermined: return "undetermined";
  }
  return "";
}

std::string_view to_string(Mode m) { return m == Mode::strict ? "strict" : "lax"; }

Mode parse_mode(std::string_view name) {
  if (name == "strict") return Mode::strict;
  if (name == "lax") return Mode::lax;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

const AxiomResult& AxiomReport::at(std::string_view id) const {
  for (const auto& a : axioms)
    if (a.id == id) return a;
  throw std::out_of_range("no axiom '" + std::string(id) + "' in report");
}

std::vector<Verdict> AxiomReport::verdicts() const {
  std::vector<Verdict> out;
  for (const auto& a : axioms) out.push_back(a.verdict);
  return out;
}

bool AxiomReport::passed() const {
  return std::none_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) {
    return a.verdict == Verdict::fail || a.verdict == Verdict::undetermined;
  });
}

// ---- intervals ----------------------------------------------------------------------

const std::vector<std::string>& interval_map_names() {
  static const std::vector<std::string> names{"d0", "d1", "p", "i0", "i1", "c"};
  return names;
}

ChainInterval chain_interval(const Field& f) {
  ChainComplex i = ChainComplex::unit(f);
  ChainComplex i1(f, {2, 1}, {ints(f, 2, 1, {-1, 1})});
  ChainComplex i2(f, {3, 2}, {ints(f, 3, 2, {-1, 0, 1, -1, 0, 1})});
  ChainInterval iv;
  iv.I = i;
  iv.I1 = i1;
  iv.I2 = i2;
  iv.d0 = ChainMap(i, i1, {ints(f, 2, 1, {1, 0})});
  iv.d1 = ChainMap(i, i1, {ints(f, 2, 1, {0, 1})});
  iv.p = ChainMap(i1, i, {ints(f, 1, 2, {1, 1}), Matrix(f, 0, 1)});
  iv.c = ChainMap(i1, i2, {ints(f, 3, 2, {1, 0, 0, 0, 0, 1}), ints(f, 2, 1, {1, 1})});
  iv.i0 = ChainMap(i1, i2, {ints(f, 3, 2, {1, 0, 0, 1, 0, 0}), ints(f, 2, 1, {1, 0})});
  iv.i1 = ChainMap(i1, i2, {ints(f, 3, 2, {0, 0, 1, 0, 0, 1}), ints(f, 2, 1, {0, 1})});
  return iv;
}

SimplicialInterval gamma(const ChainInterval& iv, int truncation) {
  if (truncation < 1) throw ShapeError("the simplicial interval needs truncation at least 1");
  return SimplicialInterval{gamma(iv.I, truncation),     gamma(iv.I1, truncation),    gamma(iv.I2, truncation),
                            gamma(iv.d0, truncation),    gamma(iv.d1, truncation),    gamma(iv.p, truncation),
                            gamma(iv.i0, truncation),    gamma(iv.i1, truncation),    gamma(iv.c, truncation)};
}

SimplicialInterval smod_interval(const Field& f, int truncation) { return gamma(chain_interval(f), truncation); }

CatInterval cat_interval() {
  FiniteCategory i = chaotic_category(1), i1 = chaotic_category(2), i2 = chaotic_category(3);
  return CatInterval{i,
                     i1,
                     i2,
                     chaotic_functor(i, i1, {0}),
                     chaotic_functor(i, i1, {1}),
                     chaotic_functor(i1, i, {0, 0}),
                     chaotic_functor(i1, i2, {0, 1}),
                     chaotic_functor(i1, i2, {1, 2}),
                     chaotic_functor(i1, i2, {0, 2})};
}

// ---- Hopf algebras -------------------------------------------------------------

HopfReport validate(const HopfAlgebra& h) {
  const Field& f = h.field;
  std::size_t n = h.dim;
  HopfReport r;
  auto shape = [](const Matrix& m, std::size_t rows, std::size_t cols) { return m.rows() == rows && m.cols() == cols; };
  if (!shape(h.multiplication, n, n * n) || !shape(h.unit, n, 1) || !shape(h.comultiplication, n * n, n) ||
      !shape(h.counit, 1, n) || !shape(h.antipode, n, n)) {
    return {false, {"structure matrix shapes"}};
  }
  Matrix id = Matrix::identity(f, n);
  const Matrix& m = h.multiplication;
  const Matrix& u = h.unit;
  const Matrix& d = h.comultiplication;
  const Matrix& e = h.counit;
  Matrix tau = swap_matrix(f, n);
  auto check = [&](bool ok, const char* name) {
    if (!ok) {
      r.ok = false;
      r.failures.push_back(name);
    }
  };
  check(m * kron(m, id) == m * kron(id, m), "associativity");
  check(m * kron(u, id) == id && m * kron(id, u) == id, "unit");
  check(kron(d, id) * d == kron(id, d) * d, "coassociativity");
  check(kron(e, id) * d == id && kron(id, e) * d == id, "counit");
  check(d * m == kron(m, m) * kron(id, kron(tau, id)) * kron(d, d), "comultiplication is multiplicative");
  check(e * m == kron(e, e), "counit is multiplicative");
  check(d * u == kron(u, u) && e * u == Matrix::identity(f, 1), "unit is grouplike");
  check(m * kron(h.antipode, id) * d == u * e && m * kron(id, h.antipode) * d == u * e, "antipode");
  check(tau * d == d, "cocommutativity");
  return r;
}

HopfAlgebra group_algebra(const Field& f, std::size_t order, const std::vector<std::size_t>& table) {
  if (order == 0 || table.size() != order * order) throw ShapeError("group table must be order x order");
  HopfAlgebra h{f, order, Matrix(f, order, order * order), Matrix(f, order, 1), Matrix(f, order * order, order),
                Matrix(f, 1, order), Matrix(f, order, order)};
  h.unit.set(0, 0, f.one());
  for (std::size_t g = 0; g < order; ++g) {
    h.counit.set(0, g, f.one());
    h.comultiplication.set(g * order + g, g, f.one());
    bool has_inverse = false;
    for (std::size_t k = 0; k < order; ++k) {
      if (table[g * order + k] >= order) throw ShapeError("group table entry out of range");
      h.multiplication.set(table[g * order + k], g * order + k, f.one());
      if (table[g * order + k] == 0 && !has_inverse) {
        h.antipode.set(k, g, f.one());
        has_inverse = true;
      }
    }
    if (!has_inverse) throw StructuralError("element " + std::to_string(g) + " has no inverse");
  }
  return h;
}

HopfAlgebra cyclic_group_algebra(const Field& f, std::size_t n) {
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return group_algebra(f, n, table);
}

Vector left_integral(const HopfAlgebra& h) {
  const Field& f = h.field;
  std::size_t n = h.dim;
  Matrix id = Matrix::identity(f, n);
  Matrix stacked(f, 0, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ei(f, n, 1);
    ei.set(i, 0, f.one());
    Matrix left = h.multiplication * kron(ei, id);
    stacked = Matrix::vstack(stacked, left - id.scaled(h.counit(0, i)));
  }
  Matrix k = kernel_basis(stacked);
  if (k.cols() == 0) throw StructuralError("no non-zero left integral");
  return k.col(0);
}

bool is_semisimple(const HopfAlgebra& h) {
  Vector l = left_integral(h);
  return !h.field.is_zero(h.counit.apply(l)[0]);
}

ActionKind parse_action_kind(std::string_view name) {
  if (name == "trivial") return ActionKind::trivial;
  if (name == "regular") return ActionKind::regular;
  throw std::invalid_argument("unknown action kind '" + std::string(name) + "'");
}

HopfActions hopf_actions(const HopfAlgebra& h, ActionKind kind) {
  HModule k = trivial_module(h, 1);
  HModule hpart = kind == ActionKind::trivial ? trivial_module(h, h.dim) : HModule{h.dim, h.multiplication};
  return HopfActions{k, sum_module(h, k, hpart), sum_module(h, trivial_module(h, 2), hpart)};
}

bool is_module(const HopfAlgebra& h, const HModule& m) {
  const Field& f = h.field;
  if (m.action.rows() != m.dim || m.action.cols() != h.dim * m.dim) return false;
  Matrix id = Matrix::identity(f, m.dim);
  return m.action * kron(h.multiplication, id) == m.action * kron(Matrix::identity(f, h.dim), m.action) &&
         m.action * kron(h.unit, id) == id;
}

bool is_h_linear(const HopfAlgebra& h, const HModule& x, const HModule& y, const Matrix& f) {
  if (f.rows() != y.dim || f.cols() != x.dim) throw ShapeError("map does not fit the modules");
  return f * x.action == y.action * kron(Matrix::identity(h.field, h.dim), f);
}

HopfInterval hopf_interval(const HopfAlgebra& h, ActionKind kind) { return hopf_interval(h, hopf_actions(h, kind)); }

HopfInterval hopf_interval(const HopfAlgebra& h, HopfActions actions) {
  HopfReport r = validate(h);
  if (!r.ok) throw StructuralError("invalid Hopf algebra: " + r.failures.front());
  const Field& f = h.field;
  std::size_t n = h.dim;
  ChainComplex i = ChainComplex::unit(f);
  ChainComplex i1(f, {1 + n}, {});
  ChainComplex i2(f, {2 + n}, {});
  Matrix d0(f, 1 + n, 1), d1(f, 1 + n, 1), p(f, 1, 1 + n), c(f, 2 + n, 1 + n), j0(f, 2 + n, 1 + n),
      j1(f, 2 + n, 1 + n);
  d0.set(0, 0, f.one());
  d1.set_block(1, 0, h.unit);
  p.set(0, 0, f.one());
  p.set_block(0, 1, h.counit);
  c.set(0, 0, f.one());
  c.set_block(2, 1, Matrix::identity(f, n));
  j0.set(0, 0, f.one());
  j0.set_block(1, 1, h.counit);
  j1.set(1, 0, f.one());
  j1.set_block(2, 1, Matrix::identity(f, n));
  ChainInterval lin{i,
                    i1,
                    i2,
                    ChainMap(i, i1, {d0}),
                    ChainMap(i, i1, {d1}),
                    ChainMap(i1, i, {p}),
                    ChainMap(i1, i2, {j0}),
                    ChainMap(i1, i2, {j1}),
                    ChainMap(i1, i2, {c})};
  return HopfInterval{h, lin, std::move(actions)};
}

std::vector<std::pair<std::string, bool>> h_linearity(const HopfInterval& iv) {
  const HopfAlgebra& h = iv.algebra;
  const HopfActions& a = iv.actions;
  const ChainInterval& l = iv.linear;
  return {{"I", is_module(h, a.I)},
          {"I1", is_module(h, a.I1)},
          {"I2", is_module(h, a.I2)},
          {"d0", is_h_linear(h, a.I, a.I1, l.d0.component(0))},
          {"d1", is_h_linear(h, a.I, a.I1, l.d1.component(0))},
          {"p", is_h_linear(h, a.I1, a.I, l.p.component(0))},
          {"i0", is_h_linear(h, a.I1, a.I2, l.i0.component(0))},
          {"i1", is_h_linear(h, a.I1, a.I2, l.i1.component(0))},
          {"c", is_h_linear(h, a.I1, a.I2, l.c.component(0))}};
}

// ---- verifiers ---------------------------------------------------------------------

AxiomReport verify_cocategory(const ChainInterval& iv, Mode mode) {
  return verify_interval(ChainOps{iv.I.field()}, iv, mode);
}

AxiomReport verify_cocategory(const SimplicialInterval& iv, Mode mode) {
  return verify_interval(SimplicialOps{iv.I.field(), iv.I.truncation()}, iv, mode);
}

AxiomReport verify_cocategory(const CatInterval& iv, Mode mode) { return verify_interval(CatOps{}, iv, mode); }

AxiomReport verify_cocategory(const HopfInterval& iv, Mode mode) {
  HopfOps ops;
  ops.field = iv.algebra.field;
  ops.semisimple = is_semisimple(iv.algebra);
  return verify_interval(ops, iv.linear, mode);
}

AxiomReport verify_cylinder(const ChainInterval& iv) { return verify_cylinder_with(ChainOps{iv.I.field()}, iv); }

AxiomReport verify_cylinder(const SimplicialInterval& iv) {
  return verify_cylinder_with(SimplicialOps{iv.I.field(), iv.I.truncation()}, iv);
}

AxiomReport verify_cylinder(const CatInterval& iv) { return verify_cylinder_with(CatOps{}, iv); }

AxiomReport verify_cylinder(const HopfInterval& iv) {
  HopfOps ops;
  ops.field = iv.algebra.field;
  ops.semisimple = is_semisimple(iv.algebra);
  return verify_cylinder_with(ops, iv.linear);
}

AxiomReport check_interval_comultiplication(const ChainInterval& iv, const ChainMap& v) {
  const ChainComplex& x = iv.I1;
  ChainComplex xx = tensor(x, x);
  if (!(v.source() == x) || !(v.target() == xx)) throw ShapeError("comultiplication must map I1 to I1 (x) I1");
  ChainOps ops{x.field()};
  AxiomReport report;
  Verifier<ChainOps> ver(ops, report);
  ChainMap id = ChainMap::identity(x);
  ver.axiom("map", [&]() -> std::pair<Verdict, std::string> {
    if (auto d = ops.defect(v)) return {Verdict::fail, "v " + *d};
    return {Verdict::pass, ""};
  });
  ver.axiom("coassociative", [&] {
    return ver.equations({{compose(associator(x, x, x), compose(tensor(v, id), v)), compose(tensor(id, v), v),
                           "(v (x) id) v != (id (x) v) v"}});
  });
  ver.axiom("cocommutative", [&] { return ver.equations({{compose(symmetry(x, x), v), v, "tau v != v"}}); });
  ver.axiom("counit", [&] {
    return ver.equations({{compose(tensor(iv.p, id), v), id, "(p (x) id) v != id"},
                          {compose(tensor(id, iv.p), v), id, "(id (x) p) v != id"}});
  });
  return report;
}

ChainMap diagonal_comultiplication(const ChainInterval& iv) {
  const ChainComplex& x = iv.I1;
  if (x.ranks() != std::vector<std::size_t>{2, 1}) throw ShapeError("diagonal needs the standard I1");
  const Field& f = x.field();
  ChainComplex xx = tensor(x, x);
  Matrix v0(f, xx.rank(0), 2), v1(f, xx.rank(1), 1);
  v0.set(0 * 2 + 0, 0, f.one());
  v0.set(1 * 2 + 1, 1, f.one());
  // e -> a (x) e + e (x) b
  v1.set(tensor_offset(x, x, 1, 0) + 0, 0, f.one());
  v1.set(tensor_offset(x, x, 1, 1) + 1, 0, f.one());
  return ChainMap(x, xx, {v0, v1});
}

ChainMap hopf_comultiplication(const HopfInterval& iv) {
  const HopfAlgebra& h = iv.algebra;
  const Field& f = h.field;
  std::size_t n = h.dim, d = n + 1;
  const ChainComplex& x = iv.linear.I1;
  Matrix v(f, d * d, d);
  v.set(0, 0, f.one());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) v.set((1 + a) * d + (1 + b), 1 + j, h.comultiplication(a * n + b, j));
  return ChainMap(x, tensor(x, x), {v});
}

// ---- mutations -------------------------------------------------------------------

std::vector<Mutation> single_entry_mutations(const ChainInterval& iv, const std::vector<std::string>& maps) {
  std::vector<Mutation> out;
  const Field& f = iv.I.field();
  for (const auto& name : maps) {
    const ChainMap& m = interval_map(iv, name);
    for (int n = 0; n < static_cast<int>(m.components().size()); ++n) {
      const Matrix& comp = m.components()[n];
      for (std::size_t r = 0; r < comp.rows(); ++r)
        for (std::size_t c = 0; c < comp.cols(); ++c) out.push_back({name, n, r, c, f.add(comp(r, c), f.one())});
    }
  }
  return out;
}

ChainInterval apply(const ChainInterval& iv, const Mutation& m) {
  ChainInterval out = iv;
  ChainMap& target = interval_map(out, m.map);
  Matrix comp = target.component(m.degree);
  if (m.row >= comp.rows() || m.col >= comp.cols()) throw ShapeError("mutation entry out of range");
  comp.set(m.row, m.col, m.value);
  target.set_component(m.degree, comp);
  return out;
}

}  // namespace dkcat
