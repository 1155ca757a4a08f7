#include "doctest.h"

#include <set>

#include "dkcat/enriched.hpp"

using namespace dkcat;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

template <class T>
std::shared_ptr<const T> share(T x) {
  return std::make_shared<const T>(std::move(x));
}

// Endo-homs I; composites through an endo-hom are unitors, all others zero.
template <class A>
EnrichedCategory<A> unitor_category(const A& amb, std::size_t n, const std::vector<typename A::Object>& homs) {
  std::vector<typename A::Map> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto src = amb.tensor(homs[x * n + y], homs[y * n + z]);
        if (x == y || y == z) {
          comps.push_back(amb.identity(src));
        } else {
          comps.push_back(amb.zero_map(src, homs[x * n + z]));
        }
      }
  std::vector<std::string> names;
  std::vector<Vector> units;
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back(std::to_string(x));
    units.push_back({amb.field.one()});
  }
  return EnrichedCategory<A>(amb, names, homs, comps, units);
}

// One object with hom D^1 (+) I: the unit acts by unitors and D^1 squares to zero.
ChainCategory disk_monoid(const Field& f) {
  ChainAmbient amb{f};
  auto d = ChainComplex::disk(f, 1);
  auto s = amb.direct_sum(d, amb.unit());
  auto comp = add(add(compose(s.in1, tensor(s.pr2, s.pr1)), compose(s.in1, tensor(s.pr1, s.pr2))),
                  compose(s.in2, tensor(s.pr2, s.pr2)));
  return ChainCategory(amb, {"*"}, {s.sum}, {comp}, {Vector{f.zero(), f.one()}});
}

// 2_I -> I sending both objects to *.
ChainFunctor collapse(const Field& f) {
  ChainAmbient amb{f};
  auto src = share(two_object(amb, amb.unit()));
  auto tgt = share(unit_category(amb));
  auto id = amb.identity(amb.unit());
  return ChainFunctor(src, tgt, {0, 0}, {id, id, amb.zero_map(amb.zero(), amb.unit()), id});
}

// Brute-force |H_0| over F_p: degree-0 vectors modulo the image of d_1.
std::size_t brute_force_h0(const ChainComplex& c) {
  const Field& f = c.field();
  auto p = static_cast<std::uint64_t>(f.characteristic());
  std::uint64_t total0 = 1, total1 = 1;
  for (std::size_t i = 0; i < c.rank(0); ++i) total0 *= p;
  for (std::size_t i = 0; i < c.rank(1); ++i) total1 *= p;
  std::set<std::vector<std::int64_t>> boundaries;
  Matrix d = c.boundary(1);
  for (std::uint64_t code = 0; code < total1; ++code) {
    std::vector<std::int64_t> key;
    for (auto s : d.apply(decode(f, code, c.rank(1)))) key.push_back(s.num);
    boundaries.insert(key);
  }
  return static_cast<std::size_t>(total0 / boundaries.size());
}

}  // namespace

TEST_CASE("finite categories validate and compose") {
  CHECK(validate(terminal_category()).ok);
  CHECK(validate(free_isomorphism()).ok);
  CHECK(validate(arrow_category()).ok);
  // Z/3 under addition
  FiniteCategory z3 = monoid_category(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  CHECK(validate(z3).ok);
  auto bad = validate(monoid_category(3, {0, 1, 2, 1, 2, 1, 2, 2, 1}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness.find("associativity") != std::string::npos);
  CHECK_FALSE(validate(monoid_category(2, {1, 1, 1, 1})).ok);
  FiniteCategory sq = product(arrow_category(), free_isomorphism());
  CHECK(validate(sq).ok);
  CHECK(sq.objects() == 4);
  CHECK_THROWS_AS(FiniteCategory(1, {2}, {0}, {{0, 1, 1}}), ShapeError);
}

TEST_CASE("iso_witness finds inverses and is symmetric") {
  FiniteCategory iso = free_isomorphism();
  CHECK(iso_witness(iso, 0, 1) == std::make_pair(std::size_t{0}, std::size_t{0}));
  CHECK_FALSE(iso_witness(arrow_category(), 0, 1).has_value());
  CHECK(iso_witness(arrow_category(), 1, 1) == std::make_pair(std::size_t{0}, std::size_t{0}));
  FiniteCategory z3 = monoid_category(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  for (std::size_t f = 0; f < 3; ++f) {
    auto v = inverse_of(z3, 0, 0, f);
    REQUIRE(v.has_value());
    CHECK(z3.compose(0, 0, 0, f, *v) == 0);
    CHECK(inverse_of(z3, 0, 0, *v) == f);
  }
  FiniteCategory c = product(free_isomorphism(), z3);
  for (std::size_t x = 0; x < c.objects(); ++x)
    for (std::size_t y = 0; y < c.objects(); ++y) {
      auto w = iso_witness(c, x, y);
      REQUIRE(w.has_value());
      auto back = iso_witness(c, y, x);
      REQUIRE(back.has_value());
      CHECK(inverse_of(c, y, x, w->second) == w->first);
    }
}

TEST_CASE("chain categories: builders validate") {
  for (const Field& f : {Q, F2, F3}) {
    ChainAmbient amb{f};
    CHECK(validate(unit_category(amb)).ok);
    CHECK(validate(terminal_category(amb)).ok);
    CHECK(validate(empty_category(amb)).ok);
    CHECK(validate(two_object(amb, ChainComplex::disk(f, 1))).ok);
    CHECK(validate(two_object(amb, amb.unit())).ok);
    CHECK(validate(disk_monoid(f)).ok);
    auto groupoid = linearize(amb, free_isomorphism());
    CHECK(validate(groupoid).ok);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) CHECK(groupoid.hom(x, y).ranks() == std::vector<std::size_t>{1});
    CHECK(validate(linearize(amb, arrow_category())).ok);
    auto prod = product(unit_category(amb), unit_category(amb));
    CHECK(validate(prod).ok);
    CHECK(prod.size() == 1);
    CHECK(prod.hom(0, 0).ranks() == std::vector<std::size_t>{2});
    CHECK(validate(product(groupoid, two_object(amb, ChainComplex::disk(f, 1)))).ok);
  }
}

TEST_CASE("chain categories: two_object(I) is the linearized arrow category") {
  ChainAmbient amb{F3};
  CHECK(two_object(amb, amb.unit()).hom(0, 1) == linearize(amb, arrow_category()).hom(0, 1));
  auto a = two_object(amb, amb.unit());
  auto b = linearize(amb, arrow_category());
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) {
      CHECK(a.hom(x, y) == b.hom(x, y));
      for (std::size_t z = 0; z < 2; ++z) CHECK(a.composition(x, y, z) == b.composition(x, y, z));
    }
}

TEST_CASE("chain categories: corrupted composition is reported") {
  ChainAmbient amb{F2};
  auto good = linearize(amb, free_isomorphism());
  std::vector<ChainComplex> homs;
  std::vector<ChainMap> comps;
  std::vector<Vector> units;
  for (std::size_t x = 0; x < 2; ++x) {
    units.push_back(good.unit(x));
    for (std::size_t y = 0; y < 2; ++y) homs.push_back(good.hom(x, y));
  }
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t z = 0; z < 2; ++z) comps.push_back(good.composition(x, y, z));
  const std::vector<ChainMap> original = comps;
  // (0,1,0) composite set to zero: the unit law on (0,0) still holds, but
  // associativity on (0,1,0,1) fails.
  comps[(0 * 2 + 1) * 2 + 0] = amb.zero_map(comps[2].source(), comps[2].target());
  ChainCategory bad(amb, good.names(), homs, comps, units);
  auto r = validate(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("degree 0 entry (0,0)") != std::string::npos);
  CHECK(r.witness.find("(0,1,0") != std::string::npos);

  // wrong unit
  units[1] = Vector{F2.zero()};
  auto r2 = validate(ChainCategory(amb, good.names(), homs, original, units));
  CHECK_FALSE(r2.ok);
  CHECK(r2.witness.find("unit law") != std::string::npos);
}

TEST_CASE("homotopy categories of small examples") {
  ChainAmbient a3{F3};
  HomotopyCategory unit3 = homotopy_category(unit_category(a3));
  CHECK(unit3.category.objects() == 1);
  CHECK(unit3.category.hom_size(0, 0) == 3);
  CHECK(validate(unit3.category).ok);
  // composition is multiplication of scalars, codes are the scalars themselves
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(unit3.category.compose(0, 0, 0, a, b) == (a * b) % 3);
  CHECK(unit3.category.identity(0) == 1);

  for (const Field& f : {F2, F3}) {
    ChainAmbient amb{f};
    HomotopyCategory disk = homotopy_category(two_object(amb, ChainComplex::disk(f, 1)));
    CHECK(validate(disk.category).ok);
    CHECK(disk.category.hom_size(0, 1) == 1);
    CHECK(disk.category.hom_size(1, 0) == 1);
    CHECK(disk.category.hom_size(0, 0) == static_cast<std::size_t>(f.characteristic()));
    CHECK_FALSE(iso_witness(disk.category, 0, 1).has_value());

    auto monoid = disk_monoid(f);
    HomotopyCategory hm = homotopy_category(monoid);
    CHECK(validate(hm.category).ok);
    CHECK(hm.category.hom_size(0, 0) == static_cast<std::size_t>(f.characteristic()));
    CHECK(hm.category.hom_size(0, 0) == brute_force_h0(monoid.hom(0, 0)));
  }
  CHECK_THROWS_AS(homotopy_category(unit_category(ChainAmbient{Q})), UnsupportedField);
}

TEST_CASE("hom classes agree with a brute-force H_0 count") {
  for (const Field& f : {F2, F3, F5}) {
    ChainAmbient amb{f};
    std::vector<ChainComplex> samples{ChainComplex::unit(f), ChainComplex::disk(f, 1), ChainComplex::disk(f, 2),
                                      ChainComplex::sphere(f, 1),
                                      ChainComplex(f, {2, 1}, {Matrix::from_ints(f, 2, 1, {-1, 1})}),
                                      ChainComplex(f, {3, 1}, {Matrix::from_ints(f, 3, 1, {1, 1, 0})})};
    for (const auto& c : samples) {
      HomClasses h = hom_classes(amb, c, 1 << 16);
      CHECK(h.count == brute_force_h0(c));
      // every representative lies in its own class
      for (std::uint64_t code = 0; code < h.count; ++code) CHECK(h.class_of(h.representative(code)) == code);
    }
  }
}

TEST_CASE("corrupted composition is caught by well-definedness") {
  // One object with hom D^1 (+) I, but D^1_0 composes with the unit class
  // into the unit class: boundaries no longer compose to boundaries.
  ChainAmbient amb{F3};
  auto d = ChainComplex::disk(F3, 1);
  auto s = amb.direct_sum(d, amb.unit());
  auto good = disk_monoid(F3).composition(0, 0, 0);
  std::vector<Matrix> comps{good.component(0), good.component(1), good.component(2)};
  // source degree 0 is 2x2 = 4 dimensional: (d0,d0),(d0,u),(u,d0),(u,u)
  comps[0].set(1, 1, F3.one());
  ChainMap bent(good.source(), good.target(), comps);
  CHECK_FALSE(bent.commutes());
  ChainCategory c(amb, {"*"}, {s.sum}, {bent}, {Vector{F3.zero(), F3.one()}});
  CHECK_FALSE(validate(c).ok);
  CHECK_THROWS_AS(homotopy_category(c), StructuralError);
}

TEST_CASE("homotopy category of a product is the product of homotopy categories") {
  for (const Field& f : {F2, F3}) {
    ChainAmbient amb{f};
    std::vector<std::pair<ChainCategory, ChainCategory>> pairs{
        {unit_category(amb), unit_category(amb)},
        {linearize(amb, free_isomorphism()), two_object(amb, ChainComplex::disk(f, 1))},
        {disk_monoid(f), linearize(amb, arrow_category())},
    };
    for (const auto& [a, b] : pairs) {
      auto pa = share(a);
      auto pb = share(b);
      auto prod = share(product(a, b));
      HomotopyCategory ha = homotopy_category(a), hb = homotopy_category(b), hp = homotopy_category(*prod);
      FiniteCategory expected = product(ha.category, hb.category);
      FiniteFunctor f1 = induced_functor(product_projection(prod, pa, pb, 0), hp, ha);
      FiniteFunctor f2 = induced_functor(product_projection(prod, pa, pb, 1), hp, hb);
      std::size_t n = prod->size(), nb = b.size();
      FiniteFunctor cmp;
      for (std::size_t p = 0; p < n; ++p) cmp.objects.push_back(p);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          std::vector<std::size_t> table;
          std::size_t bsize = hb.category.hom_size(p % nb, q % nb);
          for (std::size_t m = 0; m < hp.category.hom_size(p, q); ++m)
            table.push_back(f1.map(n, p, q, m) * bsize + f2.map(n, p, q, m));
          cmp.morphisms.push_back(table);
        }
      CHECK(validate(cmp, hp.category, expected).ok);
      CHECK(is_isomorphism(cmp, hp.category, expected));
    }
  }
}

TEST_CASE("induced functors are functorial") {
  ChainAmbient amb{F3};
  auto iso = share(linearize(amb, free_isomorphism()));
  auto unit = share(unit_category(amb));
  // * -> 0 in the groupoid, then the groupoid collapses to *
  FiniteFunctor pick{{0}, {{0}}};
  FiniteFunctor squash{{0, 0}, {{0}, {0}, {0}, {0}}};
  auto lin_unit = share(linearize(amb, terminal_category()));
  ChainFunctor f = linearize(pick, lin_unit, iso);
  ChainFunctor g = linearize(squash, iso, lin_unit);
  CHECK(validate(f).ok);
  CHECK(validate(g).ok);
  auto gf = compose(g, f);
  CHECK(validate(gf).ok);
  HomotopyCategory hu = homotopy_category(*lin_unit), hi = homotopy_category(*iso);
  CHECK(induced_functor(gf, hu, hu) == compose(induced_functor(g, hi, hu), induced_functor(f, hu, hi), hu.category));
  CHECK(induced_functor(identity_functor(iso), hi, hi) ==
        compose(induced_functor(identity_functor(iso), hi, hi), induced_functor(identity_functor(iso), hi, hi),
                hi.category));
  CHECK(validate(compose(f, g)).ok);
  (void)unit;
}

TEST_CASE("functor validation catches broken components") {
  ChainAmbient amb{F2};
  auto iso = share(linearize(amb, free_isomorphism()));
  auto id = identity_functor(iso);
  CHECK(validate(id).ok);
  std::vector<ChainMap> comps;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) comps.push_back(id.component(x, y));
  comps[1] = amb.zero_map(comps[1].source(), comps[1].target());
  auto r = validate(ChainFunctor(iso, iso, {0, 1}, comps));
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("composition") != std::string::npos);
  comps[1] = id.component(0, 1);
  comps[0] = amb.zero_map(comps[0].source(), comps[0].target());
  CHECK(validate(ChainFunctor(iso, iso, {0, 1}, comps)).witness.find("unit") != std::string::npos);
  CHECK_THROWS_AS(ChainFunctor(iso, iso, {0, 2}, comps), ShapeError);
}

TEST_CASE("DK predicates on named examples") {
  for (const Field& f : {F2, F3}) {
    ChainAmbient amb{f};
    auto iso = share(linearize(amb, free_isomorphism()));
    auto disk = share(two_object(amb, ChainComplex::disk(f, 1)));
    for (const auto& c : {iso, disk}) {
      auto id = identity_functor(c);
      for (auto p : {LocalPredicate::weak_equivalence, LocalPredicate::fibration, LocalPredicate::trivial_fibration})
        CHECK(is_locally(id, p));
      CHECK(is_dk_equivalence(id));
      CHECK(is_dk_fibration(id));
      CHECK(trivial_fibration_characterization(id) == std::make_pair(true, true));
    }

    ChainFunctor col = collapse(f);
    CHECK(validate(col).ok);
    CHECK_FALSE(is_locally(col, LocalPredicate::weak_equivalence));
    CHECK(is_surjective_on_objects(col));
    CHECK_FALSE(is_dk_equivalence(col));
    CHECK(trivial_fibration_characterization(col) == std::make_pair(false, false));

    // * -> 0 of 2_0: object 1 is not reached up to isomorphism
    auto unit = share(unit_category(amb));
    auto two_zero = share(two_object(amb, amb.zero()));
    ChainFunctor to_zero(unit, two_zero, {0}, {amb.identity(amb.unit())});
    CHECK(validate(to_zero).ok);
    CHECK_FALSE(is_homotopy_essentially_surjective(to_zero));
    CHECK(is_locally(to_zero, LocalPredicate::weak_equivalence));

    // * -> 0 of the groupoid: essentially surjective, but the iso 0 -> 1 does not lift
    ChainFunctor pick(unit, iso, {0}, {amb.identity(amb.unit())});
    CHECK(validate(pick).ok);
    CHECK(is_dk_equivalence(pick));
    CHECK(is_locally(pick, LocalPredicate::fibration));
    CHECK_FALSE(is_homotopy_isofibration(pick));
    CHECK(trivial_fibration_characterization(pick) == std::make_pair(false, false));

    // D^1 homs upstairs: locally fibrant, but the zero class is no isomorphism
    ChainComplex d = ChainComplex::disk(f, 1);
    auto disks = share(unitor_category(amb, 2, {amb.unit(), d, d, amb.unit()}));
    CHECK(validate(*disks).ok);
    auto to_zero_map = ChainMap::zero(d, iso->hom(0, 1));
    ChainFunctor flat(disks, iso, {0, 1}, {amb.identity(amb.unit()), to_zero_map, to_zero_map,
                                           amb.identity(amb.unit())});
    CHECK(validate(flat).ok);
    CHECK(is_locally(flat, LocalPredicate::fibration));
    CHECK_FALSE(is_dk_fibration(flat));
    auto v = dk_verdict(flat);
    CHECK(v.characterization.first == v.characterization.second);

    // anything into the terminal category is a DK-fibration
    auto term = share(terminal_category(amb));
    for (const auto& c : {iso, disk, disks}) {
      auto t = to_terminal(c, term);
      CHECK(validate(t).ok);
      CHECK(is_dk_fibration(t));
      CHECK(is_locally(t, LocalPredicate::fibration));
    }
  }
  CHECK(parse_local_predicate("triv-fib") == LocalPredicate::trivial_fibration);
  CHECK_THROWS_AS(parse_local_predicate("cofib"), std::invalid_argument);
}

TEST_CASE("witness-based checks work over Q") {
  ChainAmbient amb{Q};
  auto iso = linearize(amb, free_isomorphism());
  CHECK(is_homotopy_inverse(iso, 0, 1, {Q.one()}, {Q.one()}));
  CHECK_FALSE(is_homotopy_inverse(iso, 0, 1, {Q.from_int(2)}, {Q.one()}));
  Scalar half = Q.parse_scalar("1/2");
  CHECK(is_homotopy_inverse(iso, 0, 1, {Q.from_int(2)}, {half}));
  auto piso = share(iso);
  auto unit = share(unit_category(amb));
  ChainFunctor pick(unit, piso, {0}, {amb.identity(amb.unit())});
  CHECK(is_homotopy_essentially_surjective(pick, {{0, {Q.one()}, {Q.one()}}, {0, {Q.from_int(3)}, {Q.parse_scalar("1/3")}}}));
  CHECK_FALSE(is_homotopy_essentially_surjective(pick, {{0, {Q.one()}, {Q.one()}}, {0, {Q.zero()}, {Q.one()}}}));
}

TEST_CASE("change of base along Gamma") {
  for (const Field& f : {F2, F3}) {
    ChainAmbient amb{f};
    std::vector<ChainCategory> cats{unit_category(amb), two_object(amb, ChainComplex::disk(f, 1)),
                                    linearize(amb, free_isomorphism()), disk_monoid(f),
                                    two_object(amb, ChainComplex::sphere(f, 1))};
    for (const auto& c : cats) {
      int L = std::max(required_truncation(c), 1) + 1;
      SimplicialCategory g = gamma_change_base(c, L);
      auto r = validate(g);
      CHECK_MESSAGE(r.ok, r.witness);
      HomotopyCategory hc = homotopy_category(c), hg = homotopy_category(g);
      CHECK(hc.category == hg.category);
    }
    SimplicialCategory gu = gamma_change_base(unit_category(amb), 2);
    CHECK(gu.hom(0, 0) == SimplicialModule::constant(f, 2));

    // verdicts agree on functors
    auto iso = share(linearize(amb, free_isomorphism()));
    auto unit = share(unit_category(amb));
    std::vector<ChainFunctor> functors{identity_functor(iso), collapse(f),
                                       ChainFunctor(unit, iso, {0}, {amb.identity(amb.unit())})};
    for (const auto& fn : functors) {
      int L = 2;
      auto s = share(gamma_change_base(fn.source(), L));
      auto t = share(gamma_change_base(fn.target(), L));
      SimplicialFunctor gf = gamma_change_base(fn, s, t);
      CHECK(validate(gf).ok);
      auto a = dk_verdict(fn), b = dk_verdict(gf);
      CHECK(a.dk_equivalence == b.dk_equivalence);
      CHECK(a.dk_fibration == b.dk_fibration);
      CHECK(a.characterization == b.characterization);
      CHECK(a.locally_trivial_fibration == b.locally_trivial_fibration);
    }
  }
}
