#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dkcat/ambient.hpp"
#include "dkcat/finite_category.hpp"

namespace dkcat {

/// A small category enriched in the ambient A. Composition follows the
/// diagrammatic convention X(x,y) (x) X(y,z) -> X(x,z); the unit of x is a
/// point of X(x,x).
template <class A>
class EnrichedCategory {
 public:
  using Object = typename A::Object;
  using Map = typename A::Map;

  EnrichedCategory() = default;
  /// `homs[x * n + y]`, `compositions[(x * n + y) * n + z]`. Shapes of the
  /// composition targets and of the units are checked here; the laws are
  /// checked by `validate`.
  EnrichedCategory(A ambient, std::vector<std::string> names, std::vector<Object> homs, std::vector<Map> compositions,
                   std::vector<Vector> units);

  const A& ambient() const { return ambient_; }
  const Field& field() const { return ambient_.field; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Object& hom(std::size_t x, std::size_t y) const { return homs_.at(x * size() + y); }
  const Map& composition(std::size_t x, std::size_t y, std::size_t z) const {
    return compositions_.at((x * size() + y) * size() + z);
  }
  const Vector& unit(std::size_t x) const { return units_.at(x); }
  Map unit_map(std::size_t x) const { return ambient_.point(hom(x, x), unit(x)); }

  bool operator==(const EnrichedCategory&) const = default;

 private:
  A ambient_;
  std::vector<std::string> names_;
  std::vector<Object> homs_;
  std::vector<Map> compositions_;
  std::vector<Vector> units_;
};

/// Checks that compositions are maps of the ambient with the right source,
/// the unit laws and associativity (after inserting the associator). The
/// witness names the first failing objects, degree and matrix entry.
template <class A>
CategoryReport validate(const EnrichedCategory<A>& c);

template <class A>
class EnrichedFunctor {
 public:
  using Category = EnrichedCategory<A>;
  using Map = typename A::Map;

  EnrichedFunctor() = default;
  /// `components[x * n + y] : source(x, y) -> target(F x, F y)`.
  EnrichedFunctor(std::shared_ptr<const Category> source, std::shared_ptr<const Category> target,
                  std::vector<std::size_t> objects, std::vector<Map> components);

  const Category& source() const { return *source_; }
  const Category& target() const { return *target_; }
  const std::shared_ptr<const Category>& source_ptr() const { return source_; }
  const std::shared_ptr<const Category>& target_ptr() const { return target_; }
  std::size_t object(std::size_t x) const { return objects_.at(x); }
  const std::vector<std::size_t>& objects() const { return objects_; }
  const Map& component(std::size_t x, std::size_t y) const { return components_.at(x * source_->size() + y); }

 private:
  std::shared_ptr<const Category> source_;
  std::shared_ptr<const Category> target_;
  std::vector<std::size_t> objects_;
  std::vector<Map> components_;
};

/// Component shapes, strict preservation of composition and units.
template <class A>
CategoryReport validate(const EnrichedFunctor<A>& f);

template <class A>
EnrichedFunctor<A> identity_functor(std::shared_ptr<const EnrichedCategory<A>> c);
template <class A>
EnrichedFunctor<A> compose(const EnrichedFunctor<A>& g, const EnrichedFunctor<A>& f);

// ---- builders --------------------------------------------------------------

template <class A>
EnrichedCategory<A> empty_category(const A& ambient);
/// One object with hom I and composition I (x) I = I.
template <class A>
EnrichedCategory<A> unit_category(const A& ambient);
/// One object with the zero hom-object; the terminal enriched category.
template <class A>
EnrichedCategory<A> terminal_category(const A& ambient);
/// Objects 0, 1 with endo-homs I, hom(0,1) = hom01 and hom(1,0) = 0.
template <class A>
EnrichedCategory<A> two_object(const A& ambient, const typename A::Object& hom01);
/// 2_i : 2_X -> 2_Y for i : X -> Y, identity on objects and endo-homs.
template <class A>
EnrichedFunctor<A> two_map(const A& ambient, const typename A::Map& i);
/// Objects are pairs (a, b) at index a * |B| + b; homs are direct sums.
template <class A>
EnrichedCategory<A> product(const EnrichedCategory<A>& a, const EnrichedCategory<A>& b);
/// The projection of `prod` = product(*a, *b) onto factor a (which = 0) or b.
template <class A>
EnrichedFunctor<A> product_projection(std::shared_ptr<const EnrichedCategory<A>> prod,
                                      std::shared_ptr<const EnrichedCategory<A>> a,
                                      std::shared_ptr<const EnrichedCategory<A>> b, int which);
/// (F, G) : C -> A x B for functors with a common source; `prod` must be product(A, B).
template <class A>
EnrichedFunctor<A> pairing(const EnrichedFunctor<A>& f, const EnrichedFunctor<A>& g,
                           std::shared_ptr<const EnrichedCategory<A>> prod);
/// Free hom-objects on the hom-sets of a finite category, in degree/level 0.
template <class A>
EnrichedCategory<A> linearize(const A& ambient, const FiniteCategory& c);
template <class A>
EnrichedFunctor<A> linearize(const FiniteFunctor& f, std::shared_ptr<const EnrichedCategory<A>> source,
                             std::shared_ptr<const EnrichedCategory<A>> target);
/// The full subcategory on `objects`, in the given order.
template <class A>
EnrichedCategory<A> full_subcategory(const EnrichedCategory<A>& c, const std::vector<std::size_t>& objects);
/// The inclusion of `sub` = full_subcategory(*c, objects).
template <class A>
EnrichedFunctor<A> full_inclusion(std::shared_ptr<const EnrichedCategory<A>> sub,
                                  std::shared_ptr<const EnrichedCategory<A>> c, const std::vector<std::size_t>& objects);
/// The functor to the terminal category.
template <class A>
EnrichedFunctor<A> to_terminal(std::shared_ptr<const EnrichedCategory<A>> c,
                               std::shared_ptr<const EnrichedCategory<A>> terminal);

// ---- homotopy categories ----------------------------------------------------

/// The set Hom_{Ho}(I, X) = H_0(X) of a hom-object, enumerated over F_p. An
/// element is numbered by the base-p code of its class coordinates.
struct HomClasses {
  Field field;
  /// Canonical point representatives, one column per class basis vector.
  Matrix representatives;
  HomologyDegree degree0;
  std::size_t count = 1;

  std::size_t dim() const { return representatives.cols(); }
  Vector representative(std::uint64_t code) const;
  /// Code of the class of a point.
  std::uint64_t class_of(const Vector& point) const;
  Vector class_coordinates(const Vector& point) const { return degree0.class_of(point); }
};

template <class A>
HomClasses hom_classes(const A& ambient, const typename A::Object& x, std::uint64_t max_elements);

struct HomotopyCategory {
  FiniteCategory category;
  std::vector<HomClasses> homs;
};

/// [C] with hom-sets H_0 of the hom-objects; composition on representatives,
/// with well-definedness checked on boundaries. Throws UnsupportedField over Q
/// and StructuralError when composition is not well defined.
template <class A>
HomotopyCategory homotopy_category(const EnrichedCategory<A>& c, std::uint64_t max_hom_size = std::uint64_t{1} << 16);

template <class A>
FiniteFunctor induced_functor(const EnrichedFunctor<A>& f, const HomotopyCategory& source,
                              const HomotopyCategory& target);

/// Whether [v o u] = [id_x] in H_0, for points u of C(x,y) and v of C(y,x).
/// Works over any field, for checking user-supplied witnesses.
template <class A>
bool is_homotopy_inverse(const EnrichedCategory<A>& c, std::size_t x, std::size_t y, const Vector& u,
                         const Vector& v);

// ---- predicates -------------------------------------------------------------

enum class LocalPredicate { weak_equivalence, fibration, trivial_fibration };

/// "weq", "fib" or "triv-fib"; throws std::invalid_argument otherwise.
LocalPredicate parse_local_predicate(std::string_view name);

/// Pairs (x, y) whose component fails the predicate, in order.
template <class A>
std::vector<std::pair<std::size_t, std::size_t>> local_failures(const EnrichedFunctor<A>& f, LocalPredicate p);
template <class A>
bool is_locally(const EnrichedFunctor<A>& f, LocalPredicate p);
template <class A>
bool is_surjective_on_objects(const EnrichedFunctor<A>& f);
template <class A>
bool is_homotopy_essentially_surjective(const EnrichedFunctor<A>& f);
/// Over any field: `witnesses[y] = (x, u, v)` claims an isomorphism
/// u : F x -> y with inverse v in the homotopy category.
struct EssentialWitness {
  std::size_t source_object;
  Vector u, v;
};
template <class A>
bool is_homotopy_essentially_surjective(const EnrichedFunctor<A>& f, const std::vector<EssentialWitness>& witnesses);
template <class A>
bool is_homotopy_isofibration(const EnrichedFunctor<A>& f);
template <class A>
bool is_dk_equivalence(const EnrichedFunctor<A>& f);
template <class A>
bool is_dk_fibration(const EnrichedFunctor<A>& f);
/// (DK-equivalence and DK-fibration, surjective on objects and locally a
/// trivial fibration), each side computed on its own.
template <class A>
std::pair<bool, bool> trivial_fibration_characterization(const EnrichedFunctor<A>& f);

struct DkVerdict {
  bool locally_weak_equivalence = false;
  bool locally_fibration = false;
  bool locally_trivial_fibration = false;
  bool surjective_on_objects = false;
  bool essentially_surjective = false;
  bool isofibration = false;
  bool dk_equivalence = false;
  bool dk_fibration = false;
  std::pair<bool, bool> characterization;
};

/// Every predicate at once, materializing each homotopy category only once.
template <class A>
DkVerdict dk_verdict(const EnrichedFunctor<A>& f);

// ---- change of base ---------------------------------------------------------

/// Homs Gamma(C(x,y)) truncated at `truncation`; composition
/// Gamma(comp) o Gamma(AW) o psi^{-1}, where psi : Gamma N (X) -> X is the
/// Dold-Kan isomorphism for X = Gamma C(x,y) (x) Gamma C(y,z).
/// Throws ShapeError when a hom has degree above the truncation.
EnrichedCategory<SimplicialAmbient> gamma_change_base(const EnrichedCategory<ChainAmbient>& c, int truncation);
EnrichedFunctor<SimplicialAmbient> gamma_change_base(const EnrichedFunctor<ChainAmbient>& f,
                                                     std::shared_ptr<const EnrichedCategory<SimplicialAmbient>> source,
                                                     std::shared_ptr<const EnrichedCategory<SimplicialAmbient>> target);
/// Smallest truncation level that holds every hom of the category.
int required_truncation(const EnrichedCategory<ChainAmbient>& c);

using ChainCategory = EnrichedCategory<ChainAmbient>;
using ChainFunctor = EnrichedFunctor<ChainAmbient>;
using SimplicialCategory = EnrichedCategory<SimplicialAmbient>;
using SimplicialFunctor = EnrichedFunctor<SimplicialAmbient>;

}  // namespace dkcat
