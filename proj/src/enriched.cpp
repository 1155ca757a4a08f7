#include "dkcat/enriched.hpp"

#include <stdexcept>

namespace dkcat {

namespace {

std::string objects_tag(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (std::size_t x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

std::uint64_t power_count(const Field& f, std::size_t dim, std::uint64_t limit) {
  auto p = static_cast<std::uint64_t>(f.characteristic());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= p;
    if (total > limit) throw Error("hom-set with more than " + std::to_string(limit) + " elements");
  }
  return total;
}

void require_prime(const Field& f, const char* what) {
  if (!f.is_prime_field()) throw UnsupportedField(std::string(what) + " needs a finite field");
}

}  // namespace

// ---- ambient helpers ---------------------------------------------------------

SimplicialMap SimplicialAmbient::point(const SimplicialModule& x, const Vector& v) const {
  SimplicialModule u = unit();
  std::vector<Matrix> comps;
  Matrix col = Matrix::column(field, v);
  for (int n = 0; n <= truncation; ++n) comps.push_back(degeneracy_operator(x, n, 0) * col);
  return SimplicialMap(u, x, comps);
}

std::optional<std::string> SimplicialAmbient::difference(const SimplicialMap& a, const SimplicialMap& b) const {
  for (int n = 0; n <= truncation; ++n) {
    const Matrix& x = a.component(n);
    const Matrix& y = b.component(n);
    if (x.rows() != y.rows() || x.cols() != y.cols()) return "level " + std::to_string(n) + " shape";
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c)
        if (!(x(r, c) == y(r, c))) {
          return "level " + std::to_string(n) + " entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
        }
  }
  return std::nullopt;
}

// ---- EnrichedCategory ---------------------------------------------------------

template <class A>
EnrichedCategory<A>::EnrichedCategory(A ambient, std::vector<std::string> names, std::vector<Object> homs,
                                      std::vector<Map> compositions, std::vector<Vector> units)
    : ambient_(std::move(ambient)),
      names_(std::move(names)),
      homs_(std::move(homs)),
      compositions_(std::move(compositions)),
      units_(std::move(units)) {
  std::size_t n = names_.size();
  if (homs_.size() != n * n || compositions_.size() != n * n * n || units_.size() != n) {
    throw ShapeError("enriched category tables do not match its object count");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (units_[x].size() != ambient_.points(hom(x, x))) {
      throw ShapeError("unit of object " + std::to_string(x) + " has the wrong length");
    }
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (!(ambient_.target(composition(x, y, z)) == hom(x, z))) {
          throw ShapeError("composition " + objects_tag({x, y, z}) + " does not land in hom" + objects_tag({x, z}));
        }
      }
  }
}

template <class A>
CategoryReport validate(const EnrichedCategory<A>& c) {
  const A& amb = c.ambient();
  std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto& comp = c.composition(x, y, z);
        if (!(amb.source(comp) == amb.tensor(c.hom(x, y), c.hom(y, z)))) {
          return {false, "composition " + objects_tag({x, y, z}) + " has the wrong source"};
        }
        if (!amb.commutes(comp)) return {false, "composition " + objects_tag({x, y, z}) + " is not a map"};
      }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& h = c.hom(x, y);
      auto id = amb.identity(h);
      auto left = amb.compose(c.composition(x, x, y), amb.tensor(c.unit_map(x), id));
      if (auto d = amb.difference(left, id)) {
        return {false, "left unit law on " + objects_tag({x, y}) + " " + *d};
      }
      auto right = amb.compose(c.composition(x, y, y), amb.tensor(id, c.unit_map(y)));
      if (auto d = amb.difference(right, id)) {
        return {false, "right unit law on " + objects_tag({x, y}) + " " + *d};
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (amb.is_zero(c.hom(x, y))) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (amb.is_zero(c.hom(y, z))) continue;
        for (std::size_t w = 0; w < n; ++w) {
          const auto& hzw = c.hom(z, w);
          if (amb.is_zero(hzw)) continue;
          auto lhs = amb.compose(c.composition(x, z, w), amb.tensor(c.composition(x, y, z), amb.identity(hzw)));
          auto rhs = amb.compose(
              amb.compose(c.composition(x, y, w), amb.tensor(amb.identity(c.hom(x, y)), c.composition(y, z, w))),
              amb.associator(c.hom(x, y), c.hom(y, z), hzw));
          if (auto d = amb.difference(lhs, rhs)) {
            return {false, "associativity on " + objects_tag({x, y, z, w}) + " " + *d};
          }
        }
      }
    }
  return {};
}

// ---- EnrichedFunctor ------------------------------------------------------------

template <class A>
EnrichedFunctor<A>::EnrichedFunctor(std::shared_ptr<const Category> source, std::shared_ptr<const Category> target,
                                    std::vector<std::size_t> objects, std::vector<Map> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      objects_(std::move(objects)),
      components_(std::move(components)) {
  std::size_t n = source_->size();
  if (objects_.size() != n || components_.size() != n * n) {
    throw ShapeError("functor tables do not match the source category");
  }
  if (!(source_->ambient() == target_->ambient())) throw ShapeError("functor between different ambients");
  for (std::size_t o : objects_) {
    if (o >= target_->size()) throw ShapeError("object image out of range");
  }
  const A& amb = source_->ambient();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Map& m = component(x, y);
      if (!(amb.source(m) == source_->hom(x, y)) || !(amb.target(m) == target_->hom(objects_[x], objects_[y]))) {
        throw ShapeError("component " + objects_tag({x, y}) + " has the wrong source or target");
      }
    }
}

template <class A>
CategoryReport validate(const EnrichedFunctor<A>& f) {
  const A& amb = f.source().ambient();
  std::size_t n = f.source().size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!amb.commutes(f.component(x, y))) return {false, "component " + objects_tag({x, y}) + " is not a map"};
  for (std::size_t x = 0; x < n; ++x) {
    Vector image = amb.on_points(f.component(x, x)).apply(f.source().unit(x));
    if (image != f.target().unit(f.object(x))) return {false, "unit of object " + std::to_string(x) + " not preserved"};
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto up = amb.compose(f.component(x, z), f.source().composition(x, y, z));
        auto down = amb.compose(f.target().composition(f.object(x), f.object(y), f.object(z)),
                                amb.tensor(f.component(x, y), f.component(y, z)));
        if (auto d = amb.difference(up, down)) {
          return {false, "composition not preserved on " + objects_tag({x, y, z}) + " " + *d};
        }
      }
  return {};
}

template <class A>
EnrichedFunctor<A> identity_functor(std::shared_ptr<const EnrichedCategory<A>> c) {
  std::size_t n = c->size();
  std::vector<std::size_t> objs(n);
  std::vector<typename A::Map> comps;
  for (std::size_t x = 0; x < n; ++x) {
    objs[x] = x;
    for (std::size_t y = 0; y < n; ++y) comps.push_back(c->ambient().identity(c->hom(x, y)));
  }
  return EnrichedFunctor<A>(c, c, objs, comps);
}

template <class A>
EnrichedFunctor<A> compose(const EnrichedFunctor<A>& g, const EnrichedFunctor<A>& f) {
  if (f.target_ptr() != g.source_ptr() && !(f.target() == g.source())) {
    throw ShapeError("functors are not composable");
  }
  const A& amb = f.source().ambient();
  std::size_t n = f.source().size();
  std::vector<std::size_t> objs;
  std::vector<typename A::Map> comps;
  for (std::size_t x = 0; x < n; ++x) {
    objs.push_back(g.object(f.object(x)));
    for (std::size_t y = 0; y < n; ++y) {
      comps.push_back(amb.compose(g.component(f.object(x), f.object(y)), f.component(x, y)));
    }
  }
  return EnrichedFunctor<A>(f.source_ptr(), g.target_ptr(), objs, comps);
}

// ---- builders ----------------------------------------------------------------

template <class A>
EnrichedCategory<A> empty_category(const A& ambient) {
  return EnrichedCategory<A>(ambient, {}, {}, {}, {});
}

template <class A>
EnrichedCategory<A> unit_category(const A& ambient) {
  auto i = ambient.unit();
  return EnrichedCategory<A>(ambient, {"*"}, {i}, {ambient.identity(i)}, {Vector{ambient.field.one()}});
}

template <class A>
EnrichedCategory<A> terminal_category(const A& ambient) {
  auto z = ambient.zero();
  return EnrichedCategory<A>(ambient, {"*"}, {z}, {ambient.zero_map(z, z)}, {Vector{}});
}

namespace {

// Composition maps of a category whose only non-zero composites are the
// unit isomorphisms I (x) X = X = X (x) I.
template <class A>
std::vector<typename A::Map> unitor_compositions(const A& amb, const std::vector<typename A::Object>& homs,
                                                 std::size_t n) {
  std::vector<typename A::Map> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto src = amb.tensor(homs[x * n + y], homs[y * n + z]);
        const auto& tgt = homs[x * n + z];
        if (amb.is_zero(src)) {
          comps.push_back(amb.zero_map(src, tgt));
        } else {
          if (!(src == tgt)) throw StructuralError("unexpected non-zero composite");
          comps.push_back(amb.identity(src));
        }
      }
  return comps;
}

}  // namespace

template <class A>
EnrichedCategory<A> two_object(const A& ambient, const typename A::Object& hom01) {
  auto i = ambient.unit();
  std::vector<typename A::Object> homs{i, hom01, ambient.zero(), i};
  Vector one{ambient.field.one()};
  return EnrichedCategory<A>(ambient, {"0", "1"}, homs, unitor_compositions(ambient, homs, 2), {one, one});
}

template <class A>
EnrichedFunctor<A> two_map(const A& ambient, const typename A::Map& i) {
  auto src = std::make_shared<const EnrichedCategory<A>>(two_object(ambient, ambient.source(i)));
  auto tgt = std::make_shared<const EnrichedCategory<A>>(two_object(ambient, ambient.target(i)));
  auto u = ambient.unit();
  std::vector<typename A::Map> comps{ambient.identity(u), i, ambient.zero_map(ambient.zero(), ambient.zero()),
                                     ambient.identity(u)};
  return EnrichedFunctor<A>(src, tgt, {0, 1}, comps);
}

template <class A>
EnrichedCategory<A> product(const EnrichedCategory<A>& a, const EnrichedCategory<A>& b) {
  const A& amb = a.ambient();
  if (!(amb == b.ambient())) throw ShapeError("product of categories over different ambients");
  std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) names.push_back("(" + a.names()[x] + "," + b.names()[y] + ")");
  std::vector<typename A::Sum> sums;
  std::vector<typename A::Object> homs;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      sums.push_back(amb.direct_sum(a.hom(p / nb, q / nb), b.hom(p % nb, q % nb)));
      homs.push_back(sums.back().sum);
    }
  std::vector<typename A::Map> comps;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) {
        const auto& s1 = sums[p * n + q];
        const auto& s2 = sums[q * n + r];
        auto first = amb.compose(a.composition(p / nb, q / nb, r / nb), amb.tensor(s1.pr1, s2.pr1));
        auto second = amb.compose(b.composition(p % nb, q % nb, r % nb), amb.tensor(s1.pr2, s2.pr2));
        comps.push_back(amb.pairing(first, second));
      }
  std::vector<Vector> units;
  for (std::size_t p = 0; p < n; ++p) {
    Vector u = a.unit(p / nb);
    const Vector& ub = b.unit(p % nb);
    u.insert(u.end(), ub.begin(), ub.end());
    units.push_back(u);
  }
  return EnrichedCategory<A>(amb, names, homs, comps, units);
}

template <class A>
EnrichedFunctor<A> product_projection(std::shared_ptr<const EnrichedCategory<A>> prod,
                                      std::shared_ptr<const EnrichedCategory<A>> a,
                                      std::shared_ptr<const EnrichedCategory<A>> b, int which) {
  const A& amb = prod->ambient();
  std::size_t nb = b->size(), n = prod->size();
  if (n != a->size() * nb) throw ShapeError("not the product of the given factors");
  std::vector<std::size_t> objs;
  for (std::size_t p = 0; p < n; ++p) objs.push_back(which == 0 ? p / nb : p % nb);
  std::vector<typename A::Map> comps;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto s = amb.direct_sum(a->hom(p / nb, q / nb), b->hom(p % nb, q % nb));
      if (!(s.sum == prod->hom(p, q))) throw ShapeError("not the product of the given factors");
      comps.push_back(which == 0 ? s.pr1 : s.pr2);
    }
  return EnrichedFunctor<A>(prod, which == 0 ? a : b, objs, comps);
}

template <class A>
EnrichedFunctor<A> pairing(const EnrichedFunctor<A>& f, const EnrichedFunctor<A>& g,
                           std::shared_ptr<const EnrichedCategory<A>> prod) {
  if (f.source_ptr() != g.source_ptr() && !(f.source() == g.source())) {
    throw ShapeError("pairing needs functors with a common source");
  }
  const A& amb = f.source().ambient();
  std::size_t n = f.source().size(), nb = g.target().size();
  std::vector<std::size_t> objs;
  std::vector<typename A::Map> comps;
  for (std::size_t x = 0; x < n; ++x) {
    objs.push_back(f.object(x) * nb + g.object(x));
    for (std::size_t y = 0; y < n; ++y) comps.push_back(amb.pairing(f.component(x, y), g.component(x, y)));
  }
  return EnrichedFunctor<A>(f.source_ptr(), prod, objs, comps);
}

template <class A>
EnrichedCategory<A> linearize(const A& ambient, const FiniteCategory& c) {
  const Field& f = ambient.field;
  std::size_t n = c.objects();
  std::vector<std::string> names;
  std::vector<typename A::Object> homs;
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back(std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) homs.push_back(ambient.discrete(c.hom_size(x, y)));
  }
  std::vector<typename A::Map> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t a = c.hom_size(x, y), b = c.hom_size(y, z);
        Matrix m(f, c.hom_size(x, z), a * b);
        for (std::size_t g = 0; g < a; ++g)
          for (std::size_t h = 0; h < b; ++h) m.set(c.compose(x, y, z, g, h), g * b + h, f.one());
        comps.push_back(ambient.discrete_map(ambient.tensor(homs[x * n + y], homs[y * n + z]), homs[x * n + z], m));
      }
  std::vector<Vector> units;
  for (std::size_t x = 0; x < n; ++x) {
    Vector u(c.hom_size(x, x), f.zero());
    u[c.identity(x)] = f.one();
    units.push_back(u);
  }
  return EnrichedCategory<A>(ambient, names, homs, comps, units);
}

template <class A>
EnrichedFunctor<A> linearize(const FiniteFunctor& f, std::shared_ptr<const EnrichedCategory<A>> source,
                             std::shared_ptr<const EnrichedCategory<A>> target) {
  const A& amb = source->ambient();
  std::size_t n = source->size();
  std::vector<typename A::Map> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& table = f.morphisms.at(x * n + y);
      const auto& src = source->hom(x, y);
      const auto& tgt = target->hom(f.objects[x], f.objects[y]);
      Matrix m(amb.field, amb.points(tgt), table.size());
      for (std::size_t g = 0; g < table.size(); ++g) m.set(table[g], g, amb.field.one());
      comps.push_back(amb.discrete_map(src, tgt, m));
    }
  return EnrichedFunctor<A>(source, target, f.objects, comps);
}

template <class A>
EnrichedCategory<A> full_subcategory(const EnrichedCategory<A>& c, const std::vector<std::size_t>& objects) {
  std::size_t n = objects.size();
  for (std::size_t x : objects)
    if (x >= c.size()) throw ShapeError("full subcategory object out of range");
  std::vector<std::string> names;
  std::vector<typename A::Object> homs;
  std::vector<typename A::Map> comps;
  std::vector<Vector> units;
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back(c.names()[objects[x]]);
    units.push_back(c.unit(objects[x]));
    for (std::size_t y = 0; y < n; ++y) {
      homs.push_back(c.hom(objects[x], objects[y]));
      for (std::size_t z = 0; z < n; ++z) comps.push_back(c.composition(objects[x], objects[y], objects[z]));
    }
  }
  return EnrichedCategory<A>(c.ambient(), names, homs, comps, units);
}

template <class A>
EnrichedFunctor<A> full_inclusion(std::shared_ptr<const EnrichedCategory<A>> sub,
                                  std::shared_ptr<const EnrichedCategory<A>> c, const std::vector<std::size_t>& objects) {
  std::size_t n = objects.size();
  if (sub->size() != n) throw ShapeError("full inclusion: object list does not match the subcategory");
  std::vector<typename A::Map> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!(sub->hom(x, y) == c->hom(objects[x], objects[y]))) throw ShapeError("not a full subcategory");
      comps.push_back(c->ambient().identity(sub->hom(x, y)));
    }
  return EnrichedFunctor<A>(sub, c, objects, comps);
}

template <class A>
EnrichedFunctor<A> to_terminal(std::shared_ptr<const EnrichedCategory<A>> c,
                               std::shared_ptr<const EnrichedCategory<A>> terminal) {
  const A& amb = c->ambient();
  std::size_t n = c->size();
  std::vector<typename A::Map> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) comps.push_back(amb.zero_map(c->hom(x, y), terminal->hom(0, 0)));
  return EnrichedFunctor<A>(c, terminal, std::vector<std::size_t>(n, 0), comps);
}

// ---- homotopy categories ------------------------------------------------------

Vector HomClasses::representative(std::uint64_t code) const { return representatives.apply(decode(field, code, dim())); }

std::uint64_t HomClasses::class_of(const Vector& point) const { return encode(field, degree0.class_of(point)); }

template <class A>
HomClasses hom_classes(const A& ambient, const typename A::Object& x, std::uint64_t max_elements) {
  ChainComplex model = ambient.homotopy_model(x);
  Homology h(model);
  HomClasses out{ambient.field, Matrix(ambient.field, ambient.points(x), 0), h.degree(0), 1};
  if (h.top() >= 0) out.representatives = out.degree0.representatives;
  if (ambient.field.is_prime_field()) {
    out.count = power_count(ambient.field, out.dim(), max_elements);
  } else {
    out.count = 0;
  }
  return out;
}

namespace {

// Class coordinates of comp(a (x) b) for point vectors a, b.
template <class A>
Vector composite_class(const EnrichedCategory<A>& c, const HomClasses& target, std::size_t x, std::size_t y,
                       std::size_t z, const Vector& a, const Vector& b) {
  Matrix comp = c.ambient().on_points(c.composition(x, y, z));
  Matrix ab = kron(Matrix::column(c.field(), a), Matrix::column(c.field(), b));
  return target.class_coordinates(comp.apply(ab.col(0)));
}

bool is_zero_vector(const Vector& v) {
  for (const Scalar& s : v)
    if (s.num != 0) return false;
  return true;
}

}  // namespace

template <class A>
HomotopyCategory homotopy_category(const EnrichedCategory<A>& c, std::uint64_t max_hom_size) {
  const Field& f = c.field();
  require_prime(f, "the homotopy category");
  std::size_t n = c.size();
  HomotopyCategory out;
  std::vector<std::size_t> sizes;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      out.homs.push_back(hom_classes(c.ambient(), c.hom(x, y), max_hom_size));
      sizes.push_back(out.homs.back().count);
    }
  auto classes = [&](std::size_t x, std::size_t y) -> const HomClasses& { return out.homs[x * n + y]; };

  std::vector<std::size_t> ids;
  for (std::size_t x = 0; x < n; ++x) ids.push_back(classes(x, x).class_of(c.unit(x)));

  std::vector<std::vector<std::size_t>> tables;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const HomClasses& hxy = classes(x, y);
        const HomClasses& hyz = classes(y, z);
        const HomClasses& hxz = classes(x, z);
        ChainComplex mxy = c.ambient().homotopy_model(c.hom(x, y));
        ChainComplex myz = c.ambient().homotopy_model(c.hom(y, z));
        Matrix bxy = mxy.boundary(1), byz = myz.boundary(1);
        // composition must kill boundaries on either side
        for (std::size_t i = 0; i < bxy.cols(); ++i) {
          for (std::size_t j = 0; j < hyz.dim(); ++j) {
            if (!is_zero_vector(composite_class(c, hxz, x, y, z, bxy.col(i), hyz.representatives.col(j)))) {
              throw StructuralError("composition " + objects_tag({x, y, z}) + " is not well defined on H_0");
            }
          }
          for (std::size_t j = 0; j < byz.cols(); ++j) {
            if (!is_zero_vector(composite_class(c, hxz, x, y, z, bxy.col(i), byz.col(j)))) {
              throw StructuralError("composition " + objects_tag({x, y, z}) + " is not well defined on H_0");
            }
          }
        }
        for (std::size_t i = 0; i < hxy.dim(); ++i) {
          for (std::size_t j = 0; j < byz.cols(); ++j) {
            if (!is_zero_vector(composite_class(c, hxz, x, y, z, hxy.representatives.col(i), byz.col(j)))) {
              throw StructuralError("composition " + objects_tag({x, y, z}) + " is not well defined on H_0");
            }
          }
        }
        // bilinear structure constants on class bases
        std::vector<std::vector<Vector>> constants(hxy.dim(), std::vector<Vector>(hyz.dim()));
        for (std::size_t i = 0; i < hxy.dim(); ++i)
          for (std::size_t j = 0; j < hyz.dim(); ++j)
            constants[i][j] =
                composite_class(c, hxz, x, y, z, hxy.representatives.col(i), hyz.representatives.col(j));
        std::vector<std::size_t> table;
        table.reserve(hxy.count * hyz.count);
        for (std::uint64_t a = 0; a < hxy.count; ++a) {
          Vector ca = decode(f, a, hxy.dim());
          for (std::uint64_t b = 0; b < hyz.count; ++b) {
            Vector cb = decode(f, b, hyz.dim());
            Vector r(hxz.dim(), f.zero());
            for (std::size_t i = 0; i < ca.size(); ++i) {
              if (f.is_zero(ca[i])) continue;
              for (std::size_t j = 0; j < cb.size(); ++j) {
                if (f.is_zero(cb[j])) continue;
                Scalar w = f.mul(ca[i], cb[j]);
                for (std::size_t k = 0; k < r.size(); ++k) r[k] = f.add(r[k], f.mul(w, constants[i][j][k]));
              }
            }
            table.push_back(encode(f, r));
          }
        }
        tables.push_back(std::move(table));
      }
  out.category = FiniteCategory(n, sizes, ids, tables);
  return out;
}

template <class A>
FiniteFunctor induced_functor(const EnrichedFunctor<A>& f, const HomotopyCategory& source,
                              const HomotopyCategory& target) {
  const Field& fld = f.source().field();
  std::size_t n = f.source().size(), nt = f.target().size();
  FiniteFunctor out;
  out.objects = f.objects();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const HomClasses& s = source.homs[x * n + y];
      const HomClasses& t = target.homs[f.object(x) * nt + f.object(y)];
      Matrix images = f.source().ambient().on_points(f.component(x, y)) * s.representatives;
      Matrix m(fld, t.dim(), s.dim());
      for (std::size_t j = 0; j < s.dim(); ++j) {
        Vector cls = t.class_coordinates(images.col(j));
        for (std::size_t i = 0; i < cls.size(); ++i) m.set(i, j, cls[i]);
      }
      std::vector<std::size_t> table;
      for (std::uint64_t a = 0; a < s.count; ++a) table.push_back(encode(fld, m.apply(decode(fld, a, s.dim()))));
      out.morphisms.push_back(std::move(table));
    }
  return out;
}

template <class A>
bool is_homotopy_inverse(const EnrichedCategory<A>& c, std::size_t x, std::size_t y, const Vector& u,
                         const Vector& v) {
  const A& amb = c.ambient();
  if (u.size() != amb.points(c.hom(x, y)) || v.size() != amb.points(c.hom(y, x))) {
    throw ShapeError("witness has the wrong length");
  }
  const Field& f = c.field();
  auto check = [&](std::size_t a, std::size_t b, const Vector& p, const Vector& q) {
    HomClasses h = hom_classes(amb, c.hom(a, a), 0);
    Vector composite = composite_class(c, h, a, b, a, p, q);
    Vector unit = h.class_coordinates(c.unit(a));
    for (std::size_t i = 0; i < unit.size(); ++i)
      if (!(f.sub(composite[i], unit[i]) == f.zero())) return false;
    return true;
  };
  return check(x, y, u, v) && check(y, x, v, u);
}

// ---- predicates ------------------------------------------------------------------

LocalPredicate parse_local_predicate(std::string_view name) {
  if (name == "weq") return LocalPredicate::weak_equivalence;
  if (name == "fib") return LocalPredicate::fibration;
  if (name == "triv-fib") return LocalPredicate::trivial_fibration;
  throw std::invalid_argument("unknown local predicate '" + std::string(name) + "'");
}

template <class A>
std::vector<std::pair<std::size_t, std::size_t>> local_failures(const EnrichedFunctor<A>& f, LocalPredicate p) {
  const A& amb = f.source().ambient();
  std::size_t n = f.source().size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& m = f.component(x, y);
      bool ok = false;
      switch (p) {
        case LocalPredicate::weak_equivalence: ok = amb.weak_equivalence(m); break;
        case LocalPredicate::fibration: ok = amb.fibration(m); break;
        case LocalPredicate::trivial_fibration: ok = amb.trivial_fibration(m); break;
      }
      if (!ok) out.emplace_back(x, y);
    }
  return out;
}

template <class A>
bool is_locally(const EnrichedFunctor<A>& f, LocalPredicate p) {
  return local_failures(f, p).empty();
}

template <class A>
bool is_surjective_on_objects(const EnrichedFunctor<A>& f) {
  std::vector<bool> hit(f.target().size(), false);
  for (std::size_t o : f.objects()) hit[o] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

template <class A>
bool is_homotopy_essentially_surjective(const EnrichedFunctor<A>& f) {
  HomotopyCategory hs = homotopy_category(f.source());
  HomotopyCategory ht = homotopy_category(f.target());
  return is_essentially_surjective(induced_functor(f, hs, ht), hs.category, ht.category);
}

template <class A>
bool is_homotopy_essentially_surjective(const EnrichedFunctor<A>& f, const std::vector<EssentialWitness>& witnesses) {
  if (witnesses.size() != f.target().size()) throw ShapeError("need one witness per target object");
  for (std::size_t y = 0; y < witnesses.size(); ++y) {
    const auto& w = witnesses[y];
    if (w.source_object >= f.source().size()) throw ShapeError("witness names a missing object");
    if (!is_homotopy_inverse(f.target(), f.object(w.source_object), y, w.u, w.v)) return false;
  }
  return true;
}

template <class A>
bool is_homotopy_isofibration(const EnrichedFunctor<A>& f) {
  HomotopyCategory hs = homotopy_category(f.source());
  HomotopyCategory ht = homotopy_category(f.target());
  return is_isofibration(induced_functor(f, hs, ht), hs.category, ht.category);
}

template <class A>
bool is_dk_equivalence(const EnrichedFunctor<A>& f) {
  return is_locally(f, LocalPredicate::weak_equivalence) && is_homotopy_essentially_surjective(f);
}

template <class A>
bool is_dk_fibration(const EnrichedFunctor<A>& f) {
  return is_locally(f, LocalPredicate::fibration) && is_homotopy_isofibration(f);
}

template <class A>
std::pair<bool, bool> trivial_fibration_characterization(const EnrichedFunctor<A>& f) {
  bool left = is_dk_equivalence(f) && is_dk_fibration(f);
  bool right = is_surjective_on_objects(f) && is_locally(f, LocalPredicate::trivial_fibration);
  return {left, right};
}

template <class A>
DkVerdict dk_verdict(const EnrichedFunctor<A>& f) {
  DkVerdict v;
  v.locally_weak_equivalence = is_locally(f, LocalPredicate::weak_equivalence);
  v.locally_fibration = is_locally(f, LocalPredicate::fibration);
  v.locally_trivial_fibration = is_locally(f, LocalPredicate::trivial_fibration);
  v.surjective_on_objects = is_surjective_on_objects(f);
  HomotopyCategory hs = homotopy_category(f.source());
  HomotopyCategory ht = homotopy_category(f.target());
  FiniteFunctor hf = induced_functor(f, hs, ht);
  v.essentially_surjective = is_essentially_surjective(hf, hs.category, ht.category);
  v.isofibration = is_isofibration(hf, hs.category, ht.category);
  v.dk_equivalence = v.locally_weak_equivalence && v.essentially_surjective;
  v.dk_fibration = v.locally_fibration && v.isofibration;
  v.characterization = {v.dk_equivalence && v.dk_fibration, v.surjective_on_objects && v.locally_trivial_fibration};
  return v;
}

// ---- change of base ----------------------------------------------------------------

int required_truncation(const EnrichedCategory<ChainAmbient>& c) {
  int top = 0;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) top = std::max(top, c.hom(x, y).top());
  return top;
}

EnrichedCategory<SimplicialAmbient> gamma_change_base(const EnrichedCategory<ChainAmbient>& c, int truncation) {
  SimplicialAmbient amb{c.field(), truncation};
  std::size_t n = c.size();
  std::vector<SimplicialModule> homs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) homs.push_back(gamma(c.hom(x, y), truncation));
  std::vector<SimplicialMap> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const SimplicialModule& gc = homs[x * n + y];
        const SimplicialModule& gd = homs[y * n + z];
        const SimplicialModule& ge = homs[x * n + z];
        SimplicialModule m = tensor(gc, gd);
        if (amb.is_zero(m)) {
          comps.push_back(SimplicialMap::zero(m, ge));
          continue;
        }
        SimplicialMap psi_inv = *inverse(dold_kan_iso(m));
        SimplicialMap aw = gamma(alexander_whitney(gc, gd), truncation);
        const ChainMap& comp = c.composition(x, y, z);
        ChainComplex src = truncate(comp.source(), truncation);
        std::vector<Matrix> restricted;
        for (int k = 0; k <= src.top(); ++k) restricted.push_back(comp.component(k));
        SimplicialMap gcomp = gamma(ChainMap(src, comp.target(), restricted), truncation);
        comps.push_back(compose(gcomp, compose(aw, psi_inv)));
      }
  std::vector<Vector> units;
  for (std::size_t x = 0; x < n; ++x) units.push_back(c.unit(x));
  return EnrichedCategory<SimplicialAmbient>(amb, c.names(), homs, comps, units);
}

EnrichedFunctor<SimplicialAmbient> gamma_change_base(const EnrichedFunctor<ChainAmbient>& f,
                                                     std::shared_ptr<const EnrichedCategory<SimplicialAmbient>> source,
                                                     std::shared_ptr<const EnrichedCategory<SimplicialAmbient>> target) {
  int truncation = source->ambient().truncation;
  std::size_t n = f.source().size();
  std::vector<SimplicialMap> comps;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) comps.push_back(gamma(f.component(x, y), truncation));
  return EnrichedFunctor<SimplicialAmbient>(source, target, f.objects(), comps);
}

// ---- instantiations ----------------------------------------------------------------

#define DKCAT_INSTANTIATE(A)                                                                                        \
  template class EnrichedCategory<A>;                                                                              \
  template class EnrichedFunctor<A>;                                                                               \
  template CategoryReport validate(const EnrichedCategory<A>&);                                                    \
  template CategoryReport validate(const EnrichedFunctor<A>&);                                                     \
  template EnrichedFunctor<A> identity_functor(std::shared_ptr<const EnrichedCategory<A>>);                        \
  template EnrichedFunctor<A> compose(const EnrichedFunctor<A>&, const EnrichedFunctor<A>&);                       \
  template EnrichedCategory<A> empty_category(const A&);                                                           \
  template EnrichedCategory<A> unit_category(const A&);                                                            \
  template EnrichedCategory<A> terminal_category(const A&);                                                        \
  template EnrichedCategory<A> two_object(const A&, const A::Object&);                                             \
  template EnrichedFunctor<A> two_map(const A&, const A::Map&);                                                    \
  template EnrichedCategory<A> product(const EnrichedCategory<A>&, const EnrichedCategory<A>&);                    \
  template EnrichedFunctor<A> product_projection(std::shared_ptr<const EnrichedCategory<A>>,                       \
                                                 std::shared_ptr<const EnrichedCategory<A>>,                       \
                                                 std::shared_ptr<const EnrichedCategory<A>>, int);                 \
  template EnrichedFunctor<A> pairing(const EnrichedFunctor<A>&, const EnrichedFunctor<A>&,                        \
                                      std::shared_ptr<const EnrichedCategory<A>>);                                 \
  template EnrichedCategory<A> linearize(const A&, const FiniteCategory&);                                         \
  template EnrichedFunctor<A> linearize(const FiniteFunctor&, std::shared_ptr<const EnrichedCategory<A>>,          \
                                        std::shared_ptr<const EnrichedCategory<A>>);                               \
  template EnrichedCategory<A> full_subcategory(const EnrichedCategory<A>&, const std::vector<std::size_t>&);      \
  template EnrichedFunctor<A> full_inclusion(std::shared_ptr<const EnrichedCategory<A>>,                          \
                                             std::shared_ptr<const EnrichedCategory<A>>,                          \
                                             const std::vector<std::size_t>&);                                    \
  template EnrichedFunctor<A> to_terminal(std::shared_ptr<const EnrichedCategory<A>>,                              \
                                          std::shared_ptr<const EnrichedCategory<A>>);                             \
  template HomClasses hom_classes(const A&, const A::Object&, std::uint64_t);                                      \
  template HomotopyCategory homotopy_category(const EnrichedCategory<A>&, std::uint64_t);                          \
  template FiniteFunctor induced_functor(const EnrichedFunctor<A>&, const HomotopyCategory&,                       \
                                         const HomotopyCategory&);                                                 \
  template bool is_homotopy_inverse(const EnrichedCategory<A>&, std::size_t, std::size_t, const Vector&,           \
                                    const Vector&);                                                                \
  template std::vector<std::pair<std::size_t, std::size_t>> local_failures(const EnrichedFunctor<A>&, LocalPredicate); \
  template bool is_locally(const EnrichedFunctor<A>&, LocalPredicate);                                             \
  template bool is_surjective_on_objects(const EnrichedFunctor<A>&);                                               \
  template bool is_homotopy_essentially_surjective(const EnrichedFunctor<A>&);                                     \
  template bool is_homotopy_essentially_surjective(const EnrichedFunctor<A>&, const std::vector<EssentialWitness>&); \
  template bool is_homotopy_isofibration(const EnrichedFunctor<A>&);                                               \
  template bool is_dk_equivalence(const EnrichedFunctor<A>&);                                                      \
  template bool is_dk_fibration(const EnrichedFunctor<A>&);                                                        \
  template std::pair<bool, bool> trivial_fibration_characterization(const EnrichedFunctor<A>&);                    \
  template DkVerdict dk_verdict(const EnrichedFunctor<A>&);

DKCAT_INSTANTIATE(ChainAmbient)
DKCAT_INSTANTIATE(SimplicialAmbient)

}  // namespace dkcat
