#include "doctest.h"

#include <cmath>
#include <functional>
#include <set>

#include "dkcat/chain.hpp"
#include "dkcat/random.hpp"

using namespace dkcat;

namespace {

const Field Q = Field::rationals();

Matrix ints(const Field& f, std::size_t r, std::size_t c, std::vector<std::int64_t> e) {
  return Matrix::from_ints(f, r, c, e);
}

// ke -> ka (+) kb with d(e) = b - a.
ChainComplex interval1(const Field& f) { return ChainComplex(f, {2, 1}, {ints(f, 2, 1, {-1, 1})}); }

// ke1 (+) ke2 -> ka0 (+) ka1 (+) ka2, d(e1) = a1 - a0, d(e2) = a2 - a1.
ChainComplex interval2(const Field& f) {
  return ChainComplex(f, {3, 2}, {ints(f, 3, 2, {-1, 0, 1, -1, 0, 1})});
}

ChainMap endpoint(const Field& f, int which) {
  return ChainMap(ChainComplex::unit(f), interval1(f), {ints(f, 2, 1, {which == 0 ? 1 : 0, which == 0 ? 0 : 1})});
}

// Brute-force dimension of H_n over F_p: enumerate all vectors of C_n.
std::size_t brute_force_betti(const ChainComplex& c, int n) {
  const Field& f = c.field();
  auto p = static_cast<std::size_t>(f.characteristic());
  auto count = [&](std::size_t dim, const std::function<void(const Vector&)>& visit) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
      Vector v(dim);
      std::size_t x = code;
      for (std::size_t i = 0; i < dim; ++i) {
        v[i] = f.from_int(static_cast<std::int64_t>(x % p));
        x /= p;
      }
      visit(v);
    }
  };
  std::size_t cycles = 0;
  Matrix d = c.boundary(n);
  count(c.rank(n), [&](const Vector& v) {
    bool zero = true;
    for (auto s : d.apply(v)) zero = zero && s.num == 0;
    cycles += zero;
  });
  std::set<std::vector<std::int64_t>> boundaries;
  Matrix up = c.boundary(n + 1);
  count(c.rank(n + 1), [&](const Vector& v) {
    std::vector<std::int64_t> key;
    for (auto s : up.apply(v)) key.push_back(s.num);
    boundaries.insert(key);
  });
  double ratio = static_cast<double>(cycles) / static_cast<double>(boundaries.size());
  return static_cast<std::size_t>(std::llround(std::log(ratio) / std::log(static_cast<double>(p))));
}

}  // namespace

TEST_CASE("validate reports d^2 per degree") {
  CHECK(validate(ChainComplex::unit(Q)).ok);
  CHECK(validate(interval1(Q)).ok);
  // d(e) = b + a glued under a fake second stage still squares to zero.
  ChainComplex fake(Q, {2, 1, 1}, {ints(Q, 2, 1, {1, 1}), ints(Q, 1, 1, {0})});
  CHECK(validate(fake).ok);
  ChainComplex bad(Q, {1, 1, 1}, {ints(Q, 1, 1, {1}), ints(Q, 1, 1, {1})});
  auto r = validate(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_degrees == std::vector<int>{1});
  CHECK_THROWS_AS(ChainComplex(Q, {2, 1}, {ints(Q, 1, 1, {1})}), ShapeError);
}

TEST_CASE("tensor product") {
  ChainComplex i1 = interval1(Q);
  CHECK(tensor(ChainComplex::unit(Q), i1) == i1);
  CHECK(tensor(i1, ChainComplex::unit(Q)) == i1);
  ChainComplex sq = tensor(i1, i1);
  // rank convolution oracle
  std::vector<std::size_t> conv(3, 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) conv[i + j] += i1.rank(i) * i1.rank(j);
  CHECK(sq.ranks() == conv);
  CHECK(sq.ranks() == std::vector<std::size_t>{4, 4, 1});
  CHECK(validate(sq).ok);
  CHECK_THROWS_AS(tensor(i1, interval1(Field::prime(3))), FieldMismatch);
}

TEST_CASE("internal hom") {
  ChainComplex i1 = interval1(Q);
  ChainComplex unit = ChainComplex::unit(Q);
  CHECK(internal_hom(unit, i1) == i1);
  CHECK(internal_hom(i1, unit) == unit);
  CHECK(internal_hom(i1, i1).ranks() == std::vector<std::size_t>{3, 2});

  // Oracle over F2: count chain maps I[1] -> I[1] by enumerating all 2^5
  // degree-0 graded maps.
  Field f2 = Field::prime(2);
  ChainComplex j = interval1(f2);
  int chain_maps = 0;
  for (int code = 0; code < 32; ++code) {
    Matrix m0 = ints(f2, 2, 2, {code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1});
    Matrix m1 = ints(f2, 1, 1, {(code >> 4) & 1});
    chain_maps += ChainMap(j, j, {m0, m1}).commutes();
  }
  CHECK(chain_maps == 8);
  CHECK(internal_hom(j, j).rank(0) == 3);
  CHECK(validate(internal_hom(j, j)).ok);
}

TEST_CASE("adjoint transpose") {
  ChainComplex i1 = interval1(Q);
  ChainComplex ih = internal_hom(i1, i1);
  ChainMap ev = evaluation(i1, i1);
  CHECK(ev.commutes());
  CHECK(adjoint_transpose(ev, ih, i1) == ChainMap::identity(ih));

  // f o p : I[1] -> I -> X transposes to a degree-0 element of X^{I[1]}.
  ChainComplex x = ChainComplex::disk(Q, 1);
  ChainMap p(i1, ChainComplex::unit(Q), {ints(Q, 1, 2, {1, 1}), Matrix(Q, 0, 1)});
  ChainMap f = point(x, Vector{Q.from_int(3)});
  ChainMap fp = compose(f, p);
  ChainMap t = adjoint_transpose(fp, ChainComplex::unit(Q), i1);
  CHECK(t.target() == internal_hom(i1, x));
  CHECK(adjoint_untranspose(t, i1, x) == fp);

  Field f3 = Field::prime(3);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    ChainComplex a = random_complex(rng, f3, 2, 2);
    ChainComplex b = random_complex(rng, f3, 2, 2);
    ChainComplex xx = random_complex(rng, f3, 2, 2);
    ChainMap g = random_chain_map(rng, tensor(a, b), xx);
    ChainMap h = adjoint_transpose(g, a, b);
    CHECK(h.commutes());
    CHECK(adjoint_untranspose(h, b, xx) == g);
  }
}

TEST_CASE("homology") {
  CHECK(homology(ChainComplex::unit(Q)) == std::vector<std::size_t>{1});
  CHECK(homology(interval1(Q)) == std::vector<std::size_t>{1, 0});
  for (int n = 1; n <= 4; ++n) {
    for (auto d : homology(ChainComplex::disk(Q, n))) CHECK(d == 0);
  }
  Rng rng(7);
  for (const Field& f : {Field::prime(2), Field::prime(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      ChainComplex c = random_complex(rng, f, 3, 3);
      auto h = homology(c);
      for (int n = 0; n <= c.top(); ++n) CHECK(h[n] == brute_force_betti(c, n));
    }
  }
}

TEST_CASE("Kunneth over a field") {
  Rng rng(9);
  Field f = Field::prime(5);
  for (int trial = 0; trial < 40; ++trial) {
    ChainComplex c = random_complex(rng, f, 2, 3);
    ChainComplex d = random_complex(rng, f, 2, 3);
    ChainComplex cd = tensor(c, d);
    CHECK(validate(cd).ok);
    auto hc = homology(c), hd = homology(d), hcd = homology(cd);
    for (int n = 0; n <= cd.top(); ++n) {
      std::size_t expect = 0;
      for (int i = 0; i <= n; ++i) {
        if (i < static_cast<int>(hc.size()) && n - i < static_cast<int>(hd.size())) expect += hc[i] * hd[n - i];
      }
      CHECK(hcd[n] == expect);
    }
  }
}

TEST_CASE("model structure predicates") {
  ChainComplex i1 = interval1(Q);
  ChainComplex unit = ChainComplex::unit(Q);
  ChainMap p(i1, unit, {ints(Q, 1, 2, {1, 1}), Matrix(Q, 0, 1)});
  CHECK(is_quasi_iso(ChainMap::identity(i1)));
  CHECK(is_quasi_iso(p));
  CHECK_FALSE(is_quasi_iso(ChainMap::zero(ChainComplex::zero(Q), unit)));

  CHECK(is_fibration(ChainMap::zero(i1, ChainComplex::zero(Q))));
  CHECK(is_fibration(ChainMap::identity(i1)));
  CHECK_FALSE(is_fibration(ChainMap::zero(ChainComplex::zero(Q), ChainComplex::disk(Q, 1))));

  ChainMap ends = copairing(endpoint(Q, 0), endpoint(Q, 1));
  CHECK(is_cofibration(ends));
  CHECK_FALSE(is_cofibration(ChainMap::zero(unit, unit)));
  CHECK(is_cofibration(generating_cofibration(Q, 1)));

  // Cylinder conditions: p o (d0 + d1) is the fold map.
  ChainMap fold = copairing(ChainMap::identity(unit), ChainMap::identity(unit));
  CHECK(compose(p, ends) == fold);
}

TEST_CASE("generating cofibrations") {
  ChainMap g0 = generating_cofibration(Q, 0);
  CHECK(g0.source() == ChainComplex::zero(Q));
  CHECK(g0.target() == ChainComplex::unit(Q));
  ChainMap g1 = generating_cofibration(Q, 1);
  CHECK(g1.source() == ChainComplex::unit(Q));
  CHECK(g1.target() == ChainComplex::disk(Q, 1));
  CHECK(cokernel_complex(g1).complex == ChainComplex::sphere(Q, 1));
  for (int n = 0; n <= 4; ++n) {
    ChainMap g = generating_cofibration(Q, n);
    CHECK(g.commutes());
    CHECK(is_cofibration(g));
  }
}

TEST_CASE("pullbacks") {
  ChainComplex i1 = interval1(Q);
  ChainMap id = ChainMap::identity(i1);
  Pullback pb = pullback(id, id);
  CHECK(pb.complex() == i1);

  ChainComplex unit = ChainComplex::unit(Q);
  Pullback z = pullback(ChainMap::identity(unit), ChainMap::zero(ChainComplex::zero(Q), unit));
  CHECK(z.complex() == ChainComplex::zero(Q));

  // Universal property against random cones.
  Field f = Field::prime(3);
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    ChainComplex a = random_complex(rng, f, 2, 2), b = random_complex(rng, f, 2, 2);
    ChainComplex c = random_complex(rng, f, 2, 2), t = random_complex(rng, f, 2, 2);
    ChainMap fa = random_chain_map(rng, a, c), gb = random_chain_map(rng, b, c);
    Pullback p = pullback(fa, gb);
    CHECK(validate(p.complex()).ok);
    CHECK(compose(fa, p.projections[0]) == compose(gb, p.projections[1]));
    // cone: (x, y) with fa x = gb y built from a map into the pullback itself
    ChainMap u = random_chain_map(rng, t, p.complex());
    ChainMap x = compose(p.projections[0], u), y = compose(p.projections[1], u);
    ChainMap induced = cone_to_limit(p, {x, y});
    CHECK(induced == u);
  }
}

TEST_CASE("pushouts") {
  ChainComplex i1 = interval1(Q);
  ChainMap id = ChainMap::identity(i1);
  CHECK(pushout(id, id).complex() == i1);

  ChainMap d0 = endpoint(Q, 0), d1 = endpoint(Q, 1);
  Pushout po = pushout(d1, d0);
  CHECK(po.complex().ranks() == std::vector<std::size_t>{3, 2});
  CHECK(validate(po.complex()).ok);

  // [i0, i1] : I[1] +_I I[1] -> I[2] is an isomorphism.
  ChainComplex i2 = interval2(Q);
  ChainMap i0(i1, i2, {ints(Q, 3, 2, {1, 0, 0, 1, 0, 0}), ints(Q, 2, 1, {1, 0})});
  ChainMap i1m(i1, i2, {ints(Q, 3, 2, {0, 0, 1, 0, 0, 1}), ints(Q, 2, 1, {0, 1})});
  ChainMap cmp = induced_from_pushout(po, i0, i1m);
  CHECK(cmp.commutes());
  CHECK(is_isomorphism(cmp));
  CHECK(compose(cmp, po.in1) == i0);
  CHECK(compose(cmp, po.in2) == i1m);

  // degenerate case: g = 0 leaves A (+) coker part
  ChainComplex unit = ChainComplex::unit(Q);
  Pushout deg = pushout(ChainMap::zero(unit, i1), ChainMap::zero(unit, unit));
  CHECK(deg.complex().ranks() == std::vector<std::size_t>{3, 1});

  CHECK_THROWS_AS(induced_from_pushout(po, i0, i0), StructuralError);
}

TEST_CASE("associator and symmetry") {
  Rng rng(13);
  Field f = Field::prime(3);
  for (int trial = 0; trial < 20; ++trial) {
    ChainComplex a = random_complex(rng, f, 2, 2), b = random_complex(rng, f, 2, 2),
                 c = random_complex(rng, f, 1, 2);
    ChainMap as = associator(a, b, c);
    CHECK(as.commutes());
    CHECK(is_isomorphism(as));
    ChainMap s = symmetry(a, b);
    CHECK(s.commutes());
    CHECK(compose(symmetry(b, a), s) == ChainMap::identity(tensor(a, b)));
  }
}
