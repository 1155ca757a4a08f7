#include "doctest.h"

#include "dkcat/io.hpp"

using namespace dkcat;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

template <class T, class Read>
void check_round_trip(const T& x, Read read) {
  Json j = to_json(x);
  T back = read(j);
  CHECK(back == x);
  CHECK(canonical_dump(to_json(back)) == canonical_dump(j));
}

}  // namespace

TEST_CASE("scalars and matrices") {
  CHECK(to_json(Q, Q.parse_scalar("6/-8")) == "-3/4");
  CHECK(to_json(F5, F5.from_int(-2)) == "3");
  Matrix m = Matrix::from_ints(Q, 2, 2, {1, -2, 0, 3});
  CHECK(to_json(m).dump() == R"([["1","-2"],["0","3"]])");
  CHECK(matrix_from_json(to_json(m), Q, 2, 2) == m);
  // integers are accepted and reduced
  CHECK(matrix_from_json(Json::parse("[[4, -1]]"), F3, 1, 2) == Matrix::from_ints(F3, 1, 2, {1, 2}));
  CHECK(matrix_from_json(Json::parse(R"([["1/2"]])"), F5, 1, 1) == Matrix::from_ints(F5, 1, 1, {3}));
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2]]"), Q, 2, 1), FormatError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["x"]])"), Q, 1, 1), FormatError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1.5]]"), Q, 1, 1), FormatError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1/0"]])"), Q, 1, 1), FormatError);
}

TEST_CASE("canonical form of a complex") {
  const char* expected = R"({
  "boundaries": [
    [
      [
        "1"
      ]
    ]
  ],
  "field": "F3",
  "ranks": [
    1,
    1
  ]
}
)";
  CHECK(canonical_dump(to_json(ChainComplex::disk(F3, 1))) == expected);
  // trailing zero ranks are dropped on reading
  Json padded = Json::parse(R"({"field": "F3", "ranks": [1, 1, 0], "boundaries": [[["1"]], [[], []]]})");
  CHECK_THROWS_AS(complex_from_json(padded, F3), FormatError);
  padded["boundaries"][1] = Json::parse("[[]]");
  CHECK(complex_from_json(padded, F3) == ChainComplex::disk(F3, 1));
}

TEST_CASE("round trips") {
  auto read_complex = [](const Field& f) { return [f](const Json& j) { return complex_from_json(j, f); }; };
  for (const Field& f : {Q, F2, F3, F5}) {
    ChainInterval iv = chain_interval(f);
    check_round_trip(iv.I1, read_complex(f));
    check_round_trip(iv.I2, read_complex(f));
    check_round_trip(ChainComplex::zero(f), read_complex(f));
    check_round_trip(iv.c, [f](const Json& j) { return chain_map_from_json(j, f); });
    check_round_trip(iv, [](const Json& j) { return interval_from_json(j); });
    check_round_trip(gamma(iv.I1, 3), [f](const Json& j) { return simplicial_module_from_json(j, f); });
  }
  for (const Field& f : {F2, F3}) {
    for (const auto& [name, c] : path_object_suite(f)) {
      INFO(name);
      check_round_trip(c, [](const Json& j) { return category_from_json(j); });
    }
    HopfAlgebra h = cyclic_group_algebra(f, 3);
    Json j = to_json(h);
    HopfAlgebra back = hopf_from_json(j);
    CHECK(back.multiplication == h.multiplication);
    CHECK(back.comultiplication == h.comultiplication);
    CHECK(back.antipode == h.antipode);
    CHECK(canonical_dump(to_json(back)) == canonical_dump(j));
  }
  AxiomReport r = verify_cocategory(hopf_interval(cyclic_group_algebra(F3, 2)));
  check_round_trip(r, [](const Json& j) { return report_from_json(j); });
}

TEST_CASE("functors round trip") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    ChainFunctor f = random_chain_functor(rng, F2, 3, 2);
    Json j = to_json(f);
    ChainFunctor back = functor_from_json(j);
    CHECK(back.source() == f.source());
    CHECK(back.target() == f.target());
    CHECK(back.objects() == f.objects());
    for (std::size_t x = 0; x < f.source().size(); ++x)
      for (std::size_t y = 0; y < f.source().size(); ++y) CHECK(back.component(x, y) == f.component(x, y));
    CHECK(canonical_dump(to_json(back)) == canonical_dump(j));
  }
}

TEST_CASE("references and shorthands") {
  Json doc = Json::parse(R"({
    "ambient": "chain",
    "objects": ["a", "b"],
    "complexes": {"k": {"ranks": [1]}, "zero": {"ranks": []}},
    "homs": ["k", "k", "zero", "k"],
    "comp": [[[["1"]]], [[["1"]]], null, [[["1"]]], null, null, null, [[["1"]]]],
    "units": [["1"], ["1"]]
  })");
  ChainCategory c = category_from_json(doc, F3);
  ChainCategory arrow = linearize(ChainAmbient{F3}, arrow_category());
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) {
      CHECK(c.hom(x, y) == arrow.hom(x, y));
      for (std::size_t z = 0; z < 2; ++z) CHECK(c.composition(x, y, z) == arrow.composition(x, y, z));
    }
  CHECK(validate(c).ok);
  CHECK(c.hom(1, 0).top() == -1);
  CHECK(c.field() == F3);

  doc["homs"][1] = "missing";
  CHECK_THROWS_AS(category_from_json(doc, F3), FormatError);

  HopfAlgebra h = hopf_from_json(Json::parse(R"({"cyclic": 2})"), F3);
  CHECK(h.multiplication == cyclic_group_algebra(F3, 2).multiplication);
  HopfAlgebra g = hopf_from_json(Json::parse(R"({"field": "F2", "group": {"order": 2, "table": [0, 1, 1, 0]}})"));
  CHECK(g.field == F2);
  CHECK(validate(g).ok);
}

TEST_CASE("field reconciliation") {
  Json j = to_json(ChainComplex::unit(F3));
  CHECK(resolve_field(j, std::nullopt) == F3);
  CHECK(resolve_field(j, F3) == F3);
  CHECK_THROWS_AS(resolve_field(j, F5), FieldMismatch);
  CHECK_THROWS_AS(resolve_field(Json::object(), std::nullopt), FormatError);
  CHECK(resolve_field(Json::object(), Q) == Q);
  CHECK_THROWS_AS(resolve_field(Json::parse(R"({"field": "F4"})"), std::nullopt), FormatError);

  ChainFunctor f = identity_functor(std::make_shared<const ChainCategory>(unit_category(ChainAmbient{F2})));
  Json fj = to_json(f);
  fj["target"] = to_json(unit_category(ChainAmbient{F3}));
  CHECK_THROWS_AS(functor_from_json(fj), FieldMismatch);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(category_from_json(Json::parse(R"({"field": "F2"})")), FormatError);
  CHECK_THROWS_AS(category_from_json(Json::parse(R"({"ambient": "simplicial", "field": "F2"})")), FormatError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"ranks": [1, -1]})"), F2), FormatError);
  CHECK_THROWS_AS(complex_from_json(Json::parse("[]"), F2), FormatError);
  Json iv = to_json(chain_interval(F2));
  iv["maps"].erase("c");
  CHECK_THROWS_AS(interval_from_json(iv), FormatError);
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"mode": "loose", "axioms": []})")), FormatError);
}
