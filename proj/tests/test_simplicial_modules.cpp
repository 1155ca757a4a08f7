#include "doctest.h"

#include "dkcat/random.hpp"
#include "dkcat/simplicial.hpp"

using namespace dkcat;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

Matrix ints(const Field& f, std::size_t r, std::size_t c, std::vector<std::int64_t> e) {
  return Matrix::from_ints(f, r, c, e);
}

ChainComplex interval1(const Field& f) { return ChainComplex(f, {2, 1}, {ints(f, 2, 1, {-1, 1})}); }

ChainComplex interval2(const Field& f) {
  return ChainComplex(f, {3, 2}, {ints(f, 3, 2, {-1, 0, 1, -1, 0, 1})});
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

// f' o Gamma(g) o f^{-1} : M -> M' for presentations f, f' of M and M'.
SimplicialMap transported(const SimplicialMap& f, const SimplicialMap& fp, const ChainMap& g) {
  return compose(fp, compose(gamma(g, f.source().truncation()), *inverse(f)));
}

}  // namespace

TEST_CASE("constant module") {
  SimplicialModule ck = SimplicialModule::constant(F3, 4);
  CHECK(validate(ck).ok);
  CHECK(normalize(ck) == ChainComplex::unit(F3));
  CHECK(gamma(ChainComplex::unit(F3), 4) == ck);
}

TEST_CASE("validate names broken identities") {
  SimplicialModule g = gamma(interval1(Q), 2);
  auto faces = g.faces();
  faces[2][0] = faces[2][1];
  SimplicialModule broken(Q, 2, g.ranks(), faces, g.degeneracies());
  auto r = validate(broken);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("Gamma level ranks follow the surjection count") {
  SimplicialModule g = gamma(interval1(F3), 6);
  for (int n = 0; n <= 6; ++n) CHECK(g.rank(n) == static_cast<std::size_t>(2 + n));
  CHECK(validate(g).ok);
  CHECK(normalize(g) == interval1(F3));
  CHECK_THROWS_AS(gamma(interval1(F3), 0), ShapeError);

  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    ChainComplex c = random_complex(rng, F3, 3, 2);
    SimplicialModule gc = gamma(c, 5);
    for (int n = 0; n <= 5; ++n) {
      std::size_t expect = 0;
      for (int m = 0; m <= c.top(); ++m) expect += binomial(n, m) * c.rank(m);
      CHECK(gc.rank(n) == expect);
    }
    CHECK(validate(gc).ok);
  }
}

TEST_CASE("normalize after gamma is the identity") {
  Rng rng(1);
  for (const Field& f : {Q, F2, F3, Field::prime(7)}) {
    for (int trial = 0; trial < 25; ++trial) {
      ChainComplex c = random_complex(rng, f, 3, 3);
      CHECK(normalize(gamma(c, 3 + static_cast<int>(rng.below(2)))) == c);
    }
  }
}

TEST_CASE("Dold-Kan isomorphism Gamma N M -> M") {
  Rng rng(2);
  for (const Field& f : {F2, Field::prime(5), Q}) {
    for (int trial = 0; trial < 10; ++trial) {
      SimplicialMap pres = random_simplicial_module(rng, f, 2, 2, 3);
      const SimplicialModule& m = pres.target();
      CHECK(validate(m).ok);
      CHECK(homology(normalize(m)) == homology(normalize(pres.source())));
      SimplicialMap psi = dold_kan_iso(m);
      CHECK(psi.commutes());
      CHECK(is_isomorphism(psi));

      // naturality against a transported random map
      SimplicialMap pres2 = random_simplicial_module(rng, f, 2, 2, 3);
      ChainMap g = random_chain_map(rng, normalize(pres.source()), normalize(pres2.source()));
      SimplicialMap h = transported(pres, pres2, g);
      CHECK(h.commutes());
      SimplicialMap psi2 = dold_kan_iso(pres2.target());
      SimplicialMap gn = gamma(normalize(h), 3);
      CHECK(compose(psi2, gn) == compose(h, psi));
    }
  }
}

TEST_CASE("free modules on simplicial sets") {
  FiniteSimplicialSet pt = standard_simplex(0, 3);
  CHECK(validate(pt).ok);
  CHECK(free_module(F3, pt) == SimplicialModule::constant(F3, 3));

  FiniteSimplicialSet d1 = standard_simplex(1, 2);
  CHECK(d1.sizes == std::vector<std::size_t>{2, 3, 4});
  CHECK(validate(d1).ok);
  SimplicialModule kd1 = free_module(Q, d1);
  CHECK(normalize(kd1).ranks() == std::vector<std::size_t>{2, 1});
  CHECK(homology(normalize(kd1)) == std::vector<std::size_t>{1, 0});

  FiniteSimplicialSet d0 = standard_simplex(0, 2);
  CHECK(free_module(Q, product(d1, d0)) == tensor(kd1, free_module(Q, d0)));
  FiniteSimplicialSet sq = product(standard_simplex(1, 3), standard_simplex(1, 3));
  CHECK(validate(sq).ok);
  // the square has 4 vertices, 5 edges and 2 triangles
  CHECK(normalize(free_module(F2, sq)).ranks() == std::vector<std::size_t>{4, 5, 2});

  FiniteSimplicialSet bad = d1;
  bad.faces[1][0][0] = 7;
  CHECK_FALSE(validate(bad).ok);
}

TEST_CASE("pi0 of the underlying simplicial set") {
  CHECK(pi0_underlying(SimplicialModule::constant(F3, 2)).size() == 3);
  CHECK(pi0_underlying(gamma(ChainComplex::disk(F3, 1), 2)).size() == 1);
  CHECK_THROWS_AS(pi0_underlying(SimplicialModule::constant(Q, 1)), UnsupportedField);

  Rng rng(4);
  for (const Field& f : {F2, F3}) {
    for (int trial = 0; trial < 30; ++trial) {
      SimplicialModule m = random_simplicial_module(rng, f, 2, 2, 2).target();
      std::size_t h0 = homology(normalize(m)).empty() ? 0 : homology(normalize(m))[0];
      std::size_t expect = 1;
      for (std::size_t i = 0; i < h0; ++i) expect *= static_cast<std::size_t>(f.characteristic());
      CHECK(pi0_underlying(m).size() == expect);
      EtaReport eta = check_eta(m);
      CHECK(eta.bijective);
      CHECK(eta.h0_classes == expect);
    }
  }
}

TEST_CASE("shuffle and Alexander-Whitney") {
  SimplicialModule ck = SimplicialModule::constant(F3, 3);
  SimplicialModule b = gamma(interval1(F3), 3);
  for (const ChainMap& m : {shuffle(ck, b), alexander_whitney(ck, b)}) {
    CHECK(m.source() == m.target());
    CHECK(m == ChainMap::identity(m.source()));
  }

  Rng rng(8);
  for (const Field& f : {F2, F3, Q}) {
    for (int trial = 0; trial < 6; ++trial) {
      // conjugated presentations make rational entries grow past 64 bits
      auto make = [&](int degree) {
        SimplicialMap pres = random_simplicial_module(rng, f, degree, 2, 3);
        return f.is_prime_field() ? pres.target() : pres.source();
      };
      SimplicialModule a = make(1);
      SimplicialModule c = make(2);
      ChainMap sh = shuffle(a, c);
      ChainMap aw = alexander_whitney(a, c);
      CHECK(sh.commutes());
      CHECK(aw.commutes());
      CHECK(compose(aw, sh) == ChainMap::identity(sh.source()));
      CHECK(is_quasi_iso(sh));
      Normalization na = normalization(a), nc = normalization(c);
      CHECK(aw_after_shuffle(a, c, na, nc) == compose(aw, sh));
      CHECK(shuffle_chain_failure(a, c, na, nc) == -1);
    }
  }

  // prism Delta[1] x Delta[1]: the unsigned shuffle is not a chain map
  SimplicialModule kd1 = free_module(F3, standard_simplex(1, 2));
  Normalization n1 = normalization(kd1);
  CHECK(shuffle_chain_failure(kd1, kd1, n1, n1) == -1);
  CHECK(shuffle_chain_failure(kd1, kd1, n1, n1, ShuffleSigns::unsigned_terms) == 2);
  CHECK_FALSE(shuffle(kd1, kd1, ShuffleSigns::unsigned_terms).commutes());
}

TEST_CASE("shuffle is natural") {
  Rng rng(10);
  for (int trial = 0; trial < 8; ++trial) {
    SimplicialMap pa = random_simplicial_module(rng, F3, 1, 2, 2), pa2 = random_simplicial_module(rng, F3, 1, 2, 2);
    SimplicialMap pb = random_simplicial_module(rng, F3, 1, 2, 2), pb2 = random_simplicial_module(rng, F3, 1, 2, 2);
    SimplicialMap f = transported(pa, pa2, random_chain_map(rng, normalize(pa.source()), normalize(pa2.source())));
    SimplicialMap g = transported(pb, pb2, random_chain_map(rng, normalize(pb.source()), normalize(pb2.source())));
    ChainMap nf = normalize(f), ng = normalize(g);
    ChainMap lhs = compose(shuffle(f.target(), g.target()), [&] {
      ChainMap t = tensor(nf, ng);
      ChainComplex s = truncate(t.source(), 2), u = truncate(t.target(), 2);
      std::vector<Matrix> comps;
      for (int n = 0; n <= s.top(); ++n) comps.push_back(t.component(n));
      return ChainMap(s, u, comps);
    }());
    ChainMap rhs = compose(normalize(tensor(f, g)), shuffle(f.source(), g.source()));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("transferred model structure") {
  SimplicialModule g1 = gamma(interval1(Q), 3);
  CHECK(is_weak_equivalence(SimplicialMap::identity(g1)));
  CHECK(is_fibration(SimplicialMap::identity(g1)));
  ChainMap p(interval1(Q), ChainComplex::unit(Q), {ints(Q, 1, 2, {1, 1}), Matrix(Q, 0, 1)});
  CHECK(is_weak_equivalence(gamma(p, 3)));
  SimplicialModule zero = gamma(ChainComplex::zero(Q), 3);
  CHECK_FALSE(is_fibration(SimplicialMap::zero(zero, gamma(ChainComplex::disk(Q, 1), 3))));
  CHECK(is_cofibration(SimplicialMap::zero(zero, g1)));
  CHECK_FALSE(is_cofibration(gamma(p, 3)));
}

TEST_CASE("levelwise pushout") {
  ChainMap d0(ChainComplex::unit(F3), interval1(F3), {ints(F3, 2, 1, {1, 0})});
  ChainMap d1(ChainComplex::unit(F3), interval1(F3), {ints(F3, 2, 1, {0, 1})});
  SimplicialPushout po = pushout(gamma(d1, 3), gamma(d0, 3));
  CHECK(validate(po.module).ok);
  CHECK(po.in1.commutes());
  CHECK(po.in2.commutes());

  ChainComplex i2 = interval2(F3);
  ChainMap i0(interval1(F3), i2, {ints(F3, 3, 2, {1, 0, 0, 1, 0, 0}), ints(F3, 2, 1, {1, 0})});
  ChainMap i1(interval1(F3), i2, {ints(F3, 3, 2, {0, 0, 1, 0, 0, 1}), ints(F3, 2, 1, {0, 1})});
  SimplicialMap cmp = induced_from_pushout(po, gamma(i0, 3), gamma(i1, 3));
  CHECK(cmp.commutes());
  CHECK(is_isomorphism(cmp));
  CHECK_THROWS_AS(induced_from_pushout(po, gamma(i0, 3), gamma(i0, 3)), StructuralError);
}
