#include "dkcat/path_objects.hpp"

#include <functional>

namespace dkcat {

namespace {

ChainMap with_source(const ChainComplex& source, const ChainMap& f) {
  return ChainMap(source, f.target(), f.components());
}

ChainMap with_target(const ChainMap& f, const ChainComplex& target) {
  return ChainMap(f.source(), target, f.components());
}

std::string entry_name(const ChainCategory& a, const PathObjectEntry& e, std::size_t index) {
  return a.names()[e.source] + "->" + a.names()[e.target] + "#" + std::to_string(index);
}

ChainMap require_inverse(const ChainMap& f, const std::string& what) {
  auto inv = inverse(f);
  if (!inv) throw StructuralError(what + " is not invertible");
  return *inv;
}

}  // namespace

std::vector<PathObjectEntry> p0_objects(const ChainCategory& a, std::size_t max_objects) {
  if (!a.field().is_prime_field()) throw UnsupportedField("enumerating P0 objects needs a prime field");
  HomotopyCategory ho = homotopy_category(a);
  std::size_t n = a.size();
  std::vector<PathObjectEntry> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const HomClasses& hc = ho.homs[x * n + y];
      if (out.size() + hc.count > max_objects) {
        throw Error("P0 ledger exceeds " + std::to_string(max_objects) + " objects");
      }
      for (std::uint64_t code = 0; code < hc.count; ++code) {
        PathObjectEntry e{x, y, hc.representative(code), false};
        if (x == y && hc.class_of(a.unit(x)) == code) e.cycle = a.unit(x);
        e.isomorphism = inverse_of(ho.category, x, y, code).has_value();
        out.push_back(std::move(e));
      }
    }
  return out;
}

// ---- builder -------------------------------------------------------------------

PathObjectBuilder::PathObjectBuilder(std::shared_ptr<const ChainCategory> a, ChainInterval interval,
                                     std::vector<PathObjectEntry> ledger)
    : base_(std::move(a)), interval_(std::move(interval)), ledger_(std::move(ledger)) {
  const ChainCategory& c = *base_;
  const Field& f = c.field();
  if (!(interval_.I == ChainComplex::unit(f))) throw ShapeError("the interval must be over the category's field");
  CategoryReport valid = validate(c);
  if (!valid.ok) throw StructuralError("base category is invalid: " + valid.witness);
  AxiomReport report = verify_cocategory(interval_, Mode::strict);
  for (const auto& ax : report.axioms) {
    if (ax.verdict != Verdict::pass) {
      throw StructuralError("interval fails strict axiom " + ax.id + (ax.witness.empty() ? "" : ": " + ax.witness));
    }
  }
  std::size_t n = c.size();
  identities_.assign(n, ledger_.size());
  for (std::size_t k = 0; k < ledger_.size(); ++k) {
    const auto& e = ledger_[k];
    if (e.source >= n || e.target >= n) throw ShapeError("ledger entry " + std::to_string(k) + " has no endpoints");
    if (e.cycle.size() != c.hom(e.source, e.target).rank(0)) {
      throw ShapeError("ledger entry " + std::to_string(k) + " is not a degree-0 vector of its hom");
    }
    if (e.source == e.target && e.cycle == c.unit(e.source) && identities_[e.source] == ledger_.size()) {
      identities_[e.source] = k;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (identities_[x] == ledger_.size()) {
      throw StructuralError("ledger has no identity entry for object " + c.names()[x]);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) cotensors_.push_back(make_cotensor(c.hom(x, y)));

  std::size_t m = ledger_.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto& f0 = ledger_[i];
      const auto& f1 = ledger_[j];
      const Cotensor& cot = cotensor(f0.source, f1.target);
      PathHom h;
      h.push = post_composition(f0.source, f1.source, f1.target, f1.cycle);
      h.pull = pre_composition(f0.source, f0.target, f1.target, f0.cycle);
      h.ev0 = cot.ev0;
      h.ev1 = cot.ev1;
      h.limit = wide_pullback({h.push, h.ev1, h.ev0, h.pull});
      homs_.push_back(std::move(h));
    }
}

PathObjectBuilder::Cotensor PathObjectBuilder::make_cotensor(const ChainComplex& x) const {
  const ChainInterval& iv = interval_;
  ChainMap id = ChainMap::identity(x);
  InternalHom at_point(iv.I, x);
  std::vector<Matrix> to_x;
  for (int n = 0; n <= at_point.complex().top(); ++n) to_x.push_back(at_point.embed(n));
  ChainMap evaluate(at_point.complex(), x, to_x);
  ChainMap from_x = require_inverse(evaluate, "X^I -> X");

  Cotensor out;
  out.ev0 = compose(evaluate, internal_hom(iv.d0, id));
  out.ev1 = compose(evaluate, internal_hom(iv.d1, id));
  out.constant = compose(internal_hom(iv.p, id), from_x);
  out.glued = pullback(out.ev1, out.ev0);
  ChainMap compare = cone_to_limit(out.glued, {internal_hom(iv.i0, id), internal_hom(iv.i1, id)});
  out.m = compose(internal_hom(iv.c, id), require_inverse(compare, "X^{[i0, i1]}"));
  return out;
}

ChainMap PathObjectBuilder::post_composition(std::size_t x, std::size_t y, std::size_t z, const Vector& f) const {
  const ChainCategory& c = *base_;
  const ChainComplex& hyz = c.hom(y, z);
  ChainMap g = compose(c.composition(x, y, z),
                       tensor(ChainMap::identity(c.hom(x, y)), point(hyz, f)));
  return with_source(c.hom(x, y), g);
}

ChainMap PathObjectBuilder::pre_composition(std::size_t x, std::size_t y, std::size_t z, const Vector& f) const {
  const ChainCategory& c = *base_;
  ChainMap g = compose(c.composition(x, y, z), tensor(point(c.hom(x, y), f), ChainMap::identity(c.hom(y, z))));
  return with_source(c.hom(y, z), g);
}

Vector PathObjectBuilder::unit(std::size_t f) const {
  const ChainCategory& c = *base_;
  const auto& e = ledger_.at(f);
  const PathHom& h = hom(f, f);
  ChainMap path = compose(cotensor(e.source, e.target).constant, point(c.hom(e.source, e.target), e.cycle));
  ChainMap u = cone_to_limit(h.limit, {c.unit_map(e.source), path, c.unit_map(e.target)});
  return u.component(0).col(0);
}

ChainMap PathObjectBuilder::i0_component(std::size_t x, std::size_t y) const {
  const ChainCategory& c = *base_;
  const ChainComplex& hxy = c.hom(x, y);
  ChainMap id = ChainMap::identity(hxy);
  return cone_to_limit(hom(identities_.at(x), identities_.at(y)).limit, {id, cotensor(x, y).constant, id});
}

HomAssemblyTrace PathObjectBuilder::composition(std::size_t i0, std::size_t i1, std::size_t i2) const {
  const ChainCategory& c = *base_;
  const ChainComplex& seg = interval_.I1;
  const auto& f0 = ledger_.at(i0);
  const auto& f1 = ledger_.at(i1);
  const auto& f2 = ledger_.at(i2);
  const PathHom& h01 = hom(i0, i1);
  const PathHom& h12 = hom(i1, i2);
  const ChainComplex& a0 = h01.complex();
  const ChainComplex& a1 = h12.complex();
  ChainComplex a01 = tensor(a0, a1);

  HomAssemblyTrace t;
  t.h0 = adjoint_untranspose(h01.mid(), seg, c.hom(f0.source, f1.target));
  t.h1 = adjoint_untranspose(h12.mid(), seg, c.hom(f1.source, f2.target));
  ChainMap assoc = associator(a0, a1, seg);
  // (A0 (x) A1) (x) I1 -> A0 (x) (I1 (x) A1) -> (A0 (x) I1) (x) A1
  ChainMap shuffle = compose(require_inverse(associator(a0, seg, a1), "associator"),
                             compose(tensor(ChainMap::identity(a0), symmetry(a1, seg)), assoc));
  t.g1 = compose(c.composition(f0.source, f1.target, f2.target),
                 compose(tensor(t.h0, h12.q()), shuffle));
  t.g2 = compose(c.composition(f0.source, f1.source, f2.target), compose(tensor(h01.p(), t.h1), assoc));

  ChainMap g1 = adjoint_transpose(t.g1, a01, seg);
  ChainMap g2 = adjoint_transpose(t.g2, a01, seg);
  const Cotensor& cot = cotensor(f0.source, f2.target);
  auto gap = first_difference(compose(cot.ev1, g1), compose(cot.ev0, g2));
  if (gap) {
    throw StructuralError("gluing condition fails on (" + std::to_string(i0) + "," + std::to_string(i1) + "," +
                          std::to_string(i2) + ") degree " + std::to_string(gap->degree));
  }
  t.paired = cone_to_limit(cot.glued, {g1, g2});
  t.m = cot.m;
  t.g = compose(t.m, t.paired);

  ChainMap sources = compose(c.composition(f0.source, f1.source, f2.source), tensor(h01.p(), h12.p()));
  ChainMap targets = compose(c.composition(f0.target, f1.target, f2.target), tensor(h01.q(), h12.q()));
  try {
    t.composition = cone_to_limit(hom(i0, i2).limit, {sources, t.g, targets});
  } catch (const StructuralError& e) {
    throw StructuralError("composite does not land in P0(" + std::to_string(i0) + "," + std::to_string(i2) +
                          "): " + e.what());
  }
  return t;
}

// ---- bundle --------------------------------------------------------------------

PathObjectBundle build_path_object(std::shared_ptr<const ChainCategory> a, const ChainInterval& interval,
                                   std::vector<PathObjectEntry> ledger) {
  PathObjectBuilder b(a, interval, std::move(ledger));
  const ChainCategory& c = *a;
  std::size_t n = c.size(), m = b.ledger().size();

  PathObjectBundle out;
  out.base = a;
  out.ledger = b.ledger();
  out.square = std::make_shared<const ChainCategory>(product(c, c));

  std::vector<std::string> names;
  std::vector<ChainComplex> homs;
  std::vector<ChainMap> comps;
  std::vector<Vector> units;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(entry_name(c, out.ledger[i], i));
    units.push_back(b.unit(i));
    for (std::size_t j = 0; j < m; ++j) {
      out.homs.push_back(b.hom(i, j));
      homs.push_back(b.hom(i, j).complex());
      for (std::size_t k = 0; k < m; ++k) comps.push_back(b.composition(i, j, k).composition);
    }
  }
  out.p0 = std::make_shared<const ChainCategory>(ChainAmbient{c.field()}, names, homs, comps, units);

  std::vector<std::size_t> src_objs, tgt_objs;
  std::vector<ChainMap> src_comps, tgt_comps;
  for (std::size_t i = 0; i < m; ++i) {
    src_objs.push_back(out.ledger[i].source);
    tgt_objs.push_back(out.ledger[i].target);
    for (std::size_t j = 0; j < m; ++j) {
      src_comps.push_back(b.hom(i, j).p());
      tgt_comps.push_back(b.hom(i, j).q());
    }
  }
  out.s = ChainFunctor(out.p0, a, src_objs, src_comps);
  out.t = ChainFunctor(out.p0, a, tgt_objs, tgt_comps);
  out.st = pairing(out.s, out.t, out.square);

  std::vector<std::size_t> ids;
  std::vector<ChainMap> i0_comps;
  for (std::size_t x = 0; x < n; ++x) {
    ids.push_back(b.identity_entry(x));
    for (std::size_t y = 0; y < n; ++y) i0_comps.push_back(b.i0_component(x, y));
  }
  out.i0 = ChainFunctor(a, out.p0, ids, i0_comps);
  auto id_a = identity_functor(a);
  out.diagonal = pairing(id_a, id_a, out.square);

  std::vector<std::size_t> position(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (out.ledger[i].isomorphism || b.identity_entry(out.ledger[i].source) == i) {
      position[i] = out.p_objects.size();
      out.p_objects.push_back(i);
    }
  }
  out.p = std::make_shared<const ChainCategory>(full_subcategory(*out.p0, out.p_objects));
  ChainFunctor incl = full_inclusion(out.p, out.p0, out.p_objects);
  std::vector<std::size_t> i_objs;
  for (std::size_t x = 0; x < n; ++x) i_objs.push_back(position[ids[x]]);
  out.i = ChainFunctor(a, out.p, i_objs, i0_comps);
  out.s_p = compose(out.s, incl);
  out.t_p = compose(out.t, incl);
  out.st_p = pairing(out.s_p, out.t_p, out.square);
  return out;
}

PathObjectBundle build_path_object(std::shared_ptr<const ChainCategory> a, const ChainInterval& interval,
                                   std::size_t max_objects) {
  auto ledger = p0_objects(*a, max_objects);
  return build_path_object(std::move(a), interval, std::move(ledger));
}

// ---- verification ---------------------------------------------------------------

namespace {

std::optional<std::string> functor_difference(const ChainFunctor& f, const ChainFunctor& g) {
  std::size_t n = f.source().size();
  if (g.source().size() != n || !(f.target() == g.target())) return "different source or target";
  for (std::size_t x = 0; x < n; ++x)
    if (f.object(x) != g.object(x)) return "object " + f.source().names()[x];
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto d = ChainAmbient{f.source().field()}.difference(f.component(x, y), g.component(x, y));
      if (!(f.component(x, y).source() == g.component(x, y).source())) d = "different component source";
      if (d) return "component (" + f.source().names()[x] + "," + f.source().names()[y] + ") " + *d;
    }
  return std::nullopt;
}

}  // namespace

AxiomReport verify_path_object(const PathObjectBundle& b) {
  AxiomReport report;
  auto record = [&](const std::string& id, const std::function<std::pair<Verdict, std::string>()>& body) {
    std::pair<Verdict, std::string> r;
    try {
      r = body();
    } catch (const UnsupportedField& e) {
      r = {Verdict::undetermined, e.what()};
    } catch (const Error& e) {
      r = {Verdict::fail, e.what()};
    }
    report.axioms.push_back({id, r.first, r.second});
  };
  auto from_report = [](const CategoryReport& r, const std::string& what) -> std::pair<Verdict, std::string> {
    if (r.ok) return {Verdict::pass, ""};
    return {Verdict::fail, what + ": " + r.witness};
  };
  auto predicate = [](bool ok, const std::string& what) -> std::pair<Verdict, std::string> {
    if (ok) return {Verdict::pass, ""};
    return {Verdict::fail, what};
  };

  record("P0_category", [&] { return from_report(validate(*b.p0), "P0"); });
  record("P_category", [&] { return from_report(validate(*b.p), "P"); });
  record("functors", [&]() -> std::pair<Verdict, std::string> {
    std::vector<std::pair<const char*, const ChainFunctor*>> all{
        {"i0", &b.i0}, {"s", &b.s}, {"t", &b.t}, {"(s,t)", &b.st}, {"i", &b.i}, {"(s,t) on P", &b.st_p}};
    for (const auto& [name, f] : all) {
      CategoryReport r = validate(*f);
      if (!r.ok) return {Verdict::fail, std::string(name) + ": " + r.witness};
    }
    return {Verdict::pass, ""};
  });
  record("diagonal", [&]() -> std::pair<Verdict, std::string> {
    auto d = functor_difference(compose(b.st_p, b.i), b.diagonal);
    if (d) return {Verdict::fail, "(s,t) i != Delta: " + *d};
    return {Verdict::pass, ""};
  });
  record("i_locally_weak_equivalence",
         [&] { return predicate(is_locally(b.i, LocalPredicate::weak_equivalence), "i is not locally a quasi-iso"); });
  record("st_locally_fibration",
         [&] { return predicate(is_locally(b.st_p, LocalPredicate::fibration), "(s,t) is not locally a fibration"); });
  record("i_essentially_surjective", [&] {
    return predicate(is_homotopy_essentially_surjective(b.i), "i is not homotopy essentially surjective");
  });
  record("st_isofibration",
         [&] { return predicate(is_homotopy_isofibration(b.st_p), "[(s,t)] is not an isofibration"); });
  record("i_dk_equivalence", [&] { return predicate(is_dk_equivalence(b.i), "i is not a DK-equivalence"); });
  record("st_dk_fibration", [&] { return predicate(is_dk_fibration(b.st_p), "(s,t) is not a DK-fibration"); });
  record("pullback_square", [&]() -> std::pair<Verdict, std::string> {
    std::size_t m = b.ledger.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const PathHom& h = b.homs[i * m + j];
        std::string tag = "(" + b.p0->names()[i] + "," + b.p0->names()[j] + ")";
        // (ev1, ev0) : X^{I1} -> X (+) X pulled back along f1_* (+) f0^*
        ChainMap base = direct_sum(h.push, h.pull);
        ChainMap ends = pairing(h.ev1, h.ev0);
        Pullback pb = pullback(base, ends);
        ChainMap st = with_target(b.st.component(i, j), base.source());
        ChainMap compare = cone_to_limit(pb, {st, h.mid()});
        if (!is_isomorphism(compare)) return {Verdict::fail, tag + " comparison with the base change is not invertible"};
        if (first_difference(compose(pb.projections[0], compare), st)) {
          return {Verdict::fail, tag + " (s,t) is not the base-change projection"};
        }
      }
    return {Verdict::pass, ""};
  });
  return report;
}

}  // namespace dkcat
