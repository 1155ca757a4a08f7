#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dkcat/chain.hpp"
#include "dkcat/finite_category.hpp"
#include "dkcat/simplicial.hpp"

namespace dkcat {

// ---- reports ----------------------------------------------------------------

enum class Verdict { pass, fail, not_applicable, undetermined };
std::string_view to_string(Verdict v);

/// Strict: C3 asks for an isomorphism. Lax: C3 asks for a weak equivalence.
enum class Mode { strict, lax };
std::string_view to_string(Mode m);
/// "strict" or "lax"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view name);

struct AxiomResult {
  std::string id;
  Verdict verdict = Verdict::pass;
  /// Empty on pass; otherwise the first failing equation and entry, or the
  /// reason the axiom could not be evaluated.
  std::string witness;

  bool operator==(const AxiomResult&) const = default;
};

struct AxiomReport {
  Mode mode = Mode::strict;
  std::vector<AxiomResult> axioms;

  /// Throws std::out_of_range for an unknown id.
  const AxiomResult& at(std::string_view id) const;
  Verdict verdict(std::string_view id) const { return at(id).verdict; }
  /// Verdicts in axiom order, without witnesses.
  std::vector<Verdict> verdicts() const;
  /// No axiom failed or was left undetermined.
  bool passed() const;

  bool operator==(const AxiomReport&) const = default;
};

// ---- intervals ----------------------------------------------------------------

/// I, I[1], I[2] with d0, d1 : I -> I1, p : I1 -> I and i0, i1, c : I1 -> I2.
template <class Object, class Map>
struct CocategoryInterval {
  Object I, I1, I2;
  Map d0, d1, p, i0, i1, c;

  bool operator==(const CocategoryInterval&) const = default;
};

/// A functor together with its source and target.
struct CatFunctor {
  FiniteCategory source, target;
  FiniteFunctor functor;

  bool operator==(const CatFunctor&) const = default;
};

using ChainInterval = CocategoryInterval<ChainComplex, ChainMap>;
using SimplicialInterval = CocategoryInterval<SimplicialModule, SimplicialMap>;
using CatInterval = CocategoryInterval<FiniteCategory, CatFunctor>;

/// Names of the six structure maps in a fixed order: d0, d1, p, i0, i1, c.
const std::vector<std::string>& interval_map_names();

/// Throws std::invalid_argument for an unknown name.
template <class Object, class Map>
Map& interval_map(CocategoryInterval<Object, Map>& iv, std::string_view name) {
  if (name == "d0") return iv.d0;
  if (name == "d1") return iv.d1;
  if (name == "p") return iv.p;
  if (name == "i0") return iv.i0;
  if (name == "i1") return iv.i1;
  if (name == "c") return iv.c;
  throw std::invalid_argument("unknown interval map '" + std::string(name) + "'");
}
template <class Object, class Map>
const Map& interval_map(const CocategoryInterval<Object, Map>& iv, std::string_view name) {
  return interval_map(const_cast<CocategoryInterval<Object, Map>&>(iv), name);
}

/// I[1] = (ke -> ka (+) kb, d e = b - a), I[2] = (ke1 (+) ke2 -> ka0 (+) ka1 (+) ka2)
/// with d e1 = a1 - a0, d e2 = a2 - a1. d0 : 1 -> a, d1 : 1 -> b, p : a, b -> 1,
/// c : e -> e1 + e2, a -> a0, b -> a2, i0 : e -> e1, a -> a0, b -> a1,
/// i1 : e -> e2, a -> a1, b -> a2.
ChainInterval chain_interval(const Field& f);
/// Gamma applied to every object and map.
SimplicialInterval gamma(const ChainInterval& iv, int truncation);
/// gamma(chain_interval(f), truncation); truncation must be at least 1.
SimplicialInterval smod_interval(const Field& f, int truncation);
/// I = terminal category, I1 and I2 the contractible groupoids on 2 and 3
/// objects; d0, d1 pick 0 and 1, i0 and i1 are the inclusions onto {0,1} and
/// {1,2}, c sends 0 -> 0 and 1 -> 2.
CatInterval cat_interval();

// ---- Hopf algebras ------------------------------------------------------------

/// A finite-dimensional Hopf algebra with basis 0..dim-1. Tensor powers use
/// kron order: basis (a, b) of H (x) H has index a * dim + b.
struct HopfAlgebra {
  Field field;
  std::size_t dim = 0;
  Matrix multiplication;    ///< dim x dim^2
  Matrix unit;              ///< dim x 1
  Matrix comultiplication;  ///< dim^2 x dim
  Matrix counit;            ///< 1 x dim
  Matrix antipode;          ///< dim x dim
};

struct HopfReport {
  bool ok = true;
  /// Names of the failing identities.
  std::vector<std::string> failures;
};

/// Associativity, unit, coassociativity, counit, bialgebra compatibility,
/// antipode and cocommutativity.
HopfReport validate(const HopfAlgebra& h);

/// Group algebra of a finite group given by its multiplication table
/// (`table[g * n + h]` = gh, element 0 the identity).
HopfAlgebra group_algebra(const Field& f, std::size_t order, const std::vector<std::size_t>& table);
HopfAlgebra cyclic_group_algebra(const Field& f, std::size_t n);

/// A non-zero left integral: h L = eps(h) L for every h.
Vector left_integral(const HopfAlgebra& h);
/// Semisimple exactly when eps of a left integral is non-zero.
bool is_semisimple(const HopfAlgebra& h);

/// A left H-module: `action` is dim x (h * dim), column g * dim + x holding g . x.
struct HModule {
  std::size_t dim = 0;
  Matrix action;
};

enum class ActionKind { trivial, regular };
/// "trivial" or "regular"; throws std::invalid_argument otherwise.
ActionKind parse_action_kind(std::string_view name);

/// Module structures on I = k, I[1] = k (+) H and I[2] = k (+) k (+) H.
struct HopfActions {
  HModule I, I1, I2;
};

/// k with the action through eps; the H summands trivial or left-regular.
HopfActions hopf_actions(const HopfAlgebra& h, ActionKind kind);
bool is_module(const HopfAlgebra& h, const HModule& m);
/// Whether f : X -> Y (a dim Y x dim X matrix) commutes with the actions.
bool is_h_linear(const HopfAlgebra& h, const HModule& x, const HModule& y, const Matrix& f);

/// The k-linear data lives in `linear` as complexes concentrated in degree 0:
/// d0(1) = (1, 0), d1(1) = (0, 1_H), p = (id, eps), c(a, h) = (a, 0, h),
/// i0(a, h) = (a, eps(h), 0), i1(a, h) = (0, a, h).
struct HopfInterval {
  HopfAlgebra algebra;
  ChainInterval linear;
  HopfActions actions;
};

/// Throws StructuralError when `h` fails validation.
HopfInterval hopf_interval(const HopfAlgebra& h, ActionKind kind = ActionKind::trivial);
HopfInterval hopf_interval(const HopfAlgebra& h, HopfActions actions);

/// Per module ("I", "I1", "I2") and structure map, whether it is a module or
/// H-linear for the configured actions.
std::vector<std::pair<std::string, bool>> h_linearity(const HopfInterval& iv);

// ---- verifiers ------------------------------------------------------------------

/// C0: all six maps are maps of the ambient with the declared endpoints.
/// C1: p d0 = p d1 = id. C2: i0 d1 = i1 d0.
/// C3: [i0, i1] : I1 +_I I1 -> I2 (first copy glued along d1, second along d0)
///     is an isomorphism (strict) or a weak equivalence (lax).
/// C4: q0 = [id, d1 p] and q1 = [d0 p, id], moved to I2 through C3's inverse,
///     satisfy q0 c = id = q1 c; evaluated only when C3's comparison is invertible.
/// C5: c d0 = i0 d0 and c d1 = i1 d1.
/// C6: in I3 = I2 +_{I1} I2 (along i1 and i0), (c + id) c = (id + c) c;
///     strict mode only.
/// An axiom whose prerequisites fail is reported not_applicable.
AxiomReport verify_cocategory(const ChainInterval& iv, Mode mode = Mode::strict);
AxiomReport verify_cocategory(const SimplicialInterval& iv, Mode mode = Mode::strict);
/// Pushouts of categories are computed for coproducts and for contractible
/// groupoids glued along injective-on-objects functors; other inputs make C3
/// and C6 undetermined.
AxiomReport verify_cocategory(const CatInterval& iv, Mode mode = Mode::strict);
/// Pushouts are cokernels of k-linear maps. Lax C3 is decided when the
/// comparison is invertible or H is semisimple (every map is then a stable
/// equivalence), and undetermined otherwise.
AxiomReport verify_cocategory(const HopfInterval& iv, Mode mode = Mode::strict);

/// fold: p [d0, d1] = [id, id] on I + I; cofibration: [d0, d1] is one;
/// weak_equivalence: p is one.
AxiomReport verify_cylinder(const ChainInterval& iv);
AxiomReport verify_cylinder(const SimplicialInterval& iv);
AxiomReport verify_cylinder(const CatInterval& iv);
AxiomReport verify_cylinder(const HopfInterval& iv);

/// map: v : I1 -> I1 (x) I1 is a chain map. coassociative: assoc (v (x) id) v =
/// (id (x) v) v. cocommutative: tau v = v with the Koszul-signed swap.
/// counit: (p (x) id) v = id = (id (x) p) v.
AxiomReport check_interval_comultiplication(const ChainInterval& iv, const ChainMap& v);
/// a -> a (x) a, b -> b (x) b, e -> a (x) e + e (x) b.
ChainMap diagonal_comultiplication(const ChainInterval& iv);
/// (a, h) -> a (1 (x) 1) + Delta(h) on k (+) H.
ChainMap hopf_comultiplication(const HopfInterval& iv);

// ---- mutations ----------------------------------------------------------------

/// One changed entry of one structure map of a chain interval.
struct Mutation {
  std::string map;
  int degree = 0;
  std::size_t row = 0, col = 0;
  Scalar value;
};

/// Every entry of the named maps, replaced by entry + 1.
std::vector<Mutation> single_entry_mutations(const ChainInterval& iv, const std::vector<std::string>& maps);
ChainInterval apply(const ChainInterval& iv, const Mutation& m);

}  // namespace dkcat
