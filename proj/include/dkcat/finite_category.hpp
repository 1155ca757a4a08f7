#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dkcat {

/// A category with finitely many objects and finite hom-sets. Morphisms of
/// hom(x, y) are numbered 0..|hom(x, y)|-1. Composition is written in
/// diagrammatic order: compose(x, y, z, f, g) is "f, then g".
class FiniteCategory {
 public:
  FiniteCategory() = default;
  /// `hom_sizes[x * n + y]`; `composition[(x * n + y) * n + z][f * |hom(y,z)| + g]`.
  FiniteCategory(std::size_t objects, std::vector<std::size_t> hom_sizes, std::vector<std::size_t> identities,
                 std::vector<std::vector<std::size_t>> composition);

  std::size_t objects() const { return objects_; }
  std::size_t hom_size(std::size_t x, std::size_t y) const { return hom_sizes_.at(x * objects_ + y); }
  std::size_t identity(std::size_t x) const { return identities_.at(x); }
  std::size_t compose(std::size_t x, std::size_t y, std::size_t z, std::size_t f, std::size_t g) const;
  const std::vector<std::size_t>& composition_table(std::size_t x, std::size_t y, std::size_t z) const {
    return composition_.at((x * objects_ + y) * objects_ + z);
  }

  bool operator==(const FiniteCategory&) const = default;

 private:
  std::size_t objects_ = 0;
  std::vector<std::size_t> hom_sizes_;
  std::vector<std::size_t> identities_;
  std::vector<std::vector<std::size_t>> composition_;
};

struct CategoryReport {
  bool ok = true;
  /// Description of the first violated law, empty when ok.
  std::string witness;
};

CategoryReport validate(const FiniteCategory& c);

/// Object map plus, for every pair (x, y), the image of each morphism.
struct FiniteFunctor {
  std::vector<std::size_t> objects;
  /// `morphisms[x * n + y][f]` lies in hom(F x, F y).
  std::vector<std::vector<std::size_t>> morphisms;

  std::size_t map(std::size_t source_objects, std::size_t x, std::size_t y, std::size_t f) const {
    return morphisms.at(x * source_objects + y).at(f);
  }
  bool operator==(const FiniteFunctor&) const = default;
};

CategoryReport validate(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target);
FiniteFunctor compose(const FiniteFunctor& g, const FiniteFunctor& f, const FiniteCategory& source);

/// Inverse of f : x -> y, if any (first in numbering order).
std::optional<std::size_t> inverse_of(const FiniteCategory& c, std::size_t x, std::size_t y, std::size_t f);
/// First (u, v) in numbering order with u : x -> y, v : y -> x, u then v = id_x
/// and v then u = id_y.
std::optional<std::pair<std::size_t, std::size_t>> iso_witness(const FiniteCategory& c, std::size_t x, std::size_t y);

bool is_essentially_surjective(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target);
/// Every isomorphism F x -> y' downstairs lifts to an isomorphism x -> y with
/// F y = y' upstairs.
bool is_isofibration(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target);

/// Bijective on every hom-set.
bool is_fully_faithful(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target);
/// Fully faithful and essentially surjective.
bool is_equivalence(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target);
/// Whether every hom-set has exactly one element.
bool is_chaotic(const FiniteCategory& c);

/// Whether the functor is bijective on objects and on every hom-set.
bool is_isomorphism(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target);

// ---- small examples -------------------------------------------------------

FiniteCategory terminal_category();
/// Objects 0 and 1 with a single morphism in every hom-set.
FiniteCategory free_isomorphism();
/// Objects 0 and 1 with one arrow 0 -> 1.
FiniteCategory arrow_category();
/// One object whose endomorphisms form the given monoid: table[a * n + b] is
/// "a, then b"; element 0 must be the identity.
FiniteCategory monoid_category(std::size_t elements, std::vector<std::size_t> table);
FiniteCategory product(const FiniteCategory& a, const FiniteCategory& b);
/// n objects with exactly one morphism between any two; the contractible groupoid.
FiniteCategory chaotic_category(std::size_t n);
/// Disjoint union, objects of `a` first.
FiniteCategory coproduct(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace dkcat
