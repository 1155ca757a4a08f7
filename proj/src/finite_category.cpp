#include "dkcat/finite_category.hpp"

#include <set>

#include "dkcat/field.hpp"

namespace dkcat {

namespace {

std::string pair_name(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

FiniteCategory::FiniteCategory(std::size_t objects, std::vector<std::size_t> hom_sizes,
                               std::vector<std::size_t> identities, std::vector<std::vector<std::size_t>> composition)
    : objects_(objects),
      hom_sizes_(std::move(hom_sizes)),
      identities_(std::move(identities)),
      composition_(std::move(composition)) {
  std::size_t n = objects_;
  if (hom_sizes_.size() != n * n || identities_.size() != n || composition_.size() != n * n * n) {
    throw ShapeError("finite category tables do not match its object count");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (identities_[x] >= hom_size(x, x)) throw ShapeError("identity of object " + std::to_string(x) + " out of range");
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto& t = composition_[(x * n + y) * n + z];
        if (t.size() != hom_size(x, y) * hom_size(y, z)) {
          throw ShapeError("composition table " + pair_name(x, y) + "->" + std::to_string(z) + " has wrong size");
        }
        for (std::size_t v : t) {
          if (v >= hom_size(x, z)) throw ShapeError("composite out of range");
        }
      }
    }
  }
}

std::size_t FiniteCategory::compose(std::size_t x, std::size_t y, std::size_t z, std::size_t f, std::size_t g) const {
  return composition_table(x, y, z).at(f * hom_size(y, z) + g);
}

CategoryReport validate(const FiniteCategory& c) {
  std::size_t n = c.objects();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t f = 0; f < c.hom_size(x, y); ++f) {
        if (c.compose(x, x, y, c.identity(x), f) != f || c.compose(x, y, y, f, c.identity(y)) != f) {
          return {false, "unit law fails for morphism " + std::to_string(f) + " in hom" + pair_name(x, y)};
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t f = 0; f < c.hom_size(x, y); ++f)
            for (std::size_t g = 0; g < c.hom_size(y, z); ++g)
              for (std::size_t h = 0; h < c.hom_size(z, w); ++h) {
                std::size_t left = c.compose(x, z, w, c.compose(x, y, z, f, g), h);
                std::size_t right = c.compose(x, y, w, f, c.compose(y, z, w, g, h));
                if (left != right) {
                  return {false, "associativity fails on objects (" + std::to_string(x) + "," + std::to_string(y) +
                                     "," + std::to_string(z) + "," + std::to_string(w) + ") morphisms (" +
                                     std::to_string(f) + "," + std::to_string(g) + "," + std::to_string(h) + ")"};
                }
              }
  return {};
}

CategoryReport validate(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target) {
  std::size_t n = source.objects();
  if (f.objects.size() != n || f.morphisms.size() != n * n) return {false, "functor tables do not match the source"};
  for (std::size_t x = 0; x < n; ++x) {
    if (f.objects[x] >= target.objects()) return {false, "object image out of range"};
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& m = f.morphisms[x * n + y];
      if (m.size() != source.hom_size(x, y)) return {false, "morphism table " + pair_name(x, y) + " has wrong size"};
      for (std::size_t v : m) {
        if (v >= target.hom_size(f.objects[x], f.objects[y])) return {false, "morphism image out of range"};
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (f.map(n, x, x, source.identity(x)) != target.identity(f.objects[x])) {
      return {false, "identity of object " + std::to_string(x) + " is not preserved"};
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t a = 0; a < source.hom_size(x, y); ++a)
          for (std::size_t b = 0; b < source.hom_size(y, z); ++b) {
            std::size_t up = f.map(n, x, z, source.compose(x, y, z, a, b));
            std::size_t down =
                target.compose(f.objects[x], f.objects[y], f.objects[z], f.map(n, x, y, a), f.map(n, y, z, b));
            if (up != down) return {false, "composition is not preserved on " + pair_name(x, y) + "," + std::to_string(z)};
          }
  return {};
}

FiniteFunctor compose(const FiniteFunctor& g, const FiniteFunctor& f, const FiniteCategory& source) {
  std::size_t n = source.objects();
  FiniteFunctor out;
  for (std::size_t x = 0; x < n; ++x) out.objects.push_back(g.objects.at(f.objects[x]));
  out.morphisms.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t m : f.morphisms[x * n + y]) {
        out.morphisms[x * n + y].push_back(g.map(g.objects.size(), f.objects[x], f.objects[y], m));
      }
    }
  }
  return out;
}

std::optional<std::size_t> inverse_of(const FiniteCategory& c, std::size_t x, std::size_t y, std::size_t f) {
  for (std::size_t v = 0; v < c.hom_size(y, x); ++v) {
    if (c.compose(x, y, x, f, v) == c.identity(x) && c.compose(y, x, y, v, f) == c.identity(y)) return v;
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> iso_witness(const FiniteCategory& c, std::size_t x, std::size_t y) {
  for (std::size_t u = 0; u < c.hom_size(x, y); ++u) {
    if (auto v = inverse_of(c, x, y, u)) return std::make_pair(u, *v);
  }
  return std::nullopt;
}

bool is_essentially_surjective(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target) {
  for (std::size_t y = 0; y < target.objects(); ++y) {
    bool hit = false;
    for (std::size_t x = 0; x < source.objects() && !hit; ++x) hit = iso_witness(target, f.objects[x], y).has_value();
    if (!hit) return false;
  }
  return true;
}

bool is_isofibration(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target) {
  std::size_t n = source.objects();
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t fx = f.objects[x];
    for (std::size_t yp = 0; yp < target.objects(); ++yp) {
      for (std::size_t v = 0; v < target.hom_size(fx, yp); ++v) {
        if (!inverse_of(target, fx, yp, v)) continue;
        bool lifted = false;
        for (std::size_t y = 0; y < n && !lifted; ++y) {
          if (f.objects[y] != yp) continue;
          for (std::size_t u = 0; u < source.hom_size(x, y) && !lifted; ++u) {
            lifted = f.map(n, x, y, u) == v && inverse_of(source, x, y, u).has_value();
          }
        }
        if (!lifted) return false;
      }
    }
  }
  return true;
}

bool is_fully_faithful(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target) {
  std::size_t n = source.objects();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& m = f.morphisms.at(x * n + y);
      if (m.size() != target.hom_size(f.objects[x], f.objects[y])) return false;
      if (std::set<std::size_t>(m.begin(), m.end()).size() != m.size()) return false;
    }
  return true;
}

bool is_equivalence(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target) {
  return is_fully_faithful(f, source, target) && is_essentially_surjective(f, source, target);
}

bool is_chaotic(const FiniteCategory& c) {
  for (std::size_t x = 0; x < c.objects(); ++x)
    for (std::size_t y = 0; y < c.objects(); ++y)
      if (c.hom_size(x, y) != 1) return false;
  return true;
}

bool is_isomorphism(const FiniteFunctor& f, const FiniteCategory& source, const FiniteCategory& target) {
  std::size_t n = source.objects();
  if (n != target.objects()) return false;
  if (std::set<std::size_t>(f.objects.begin(), f.objects.end()).size() != n) return false;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& m = f.morphisms[x * n + y];
      if (m.size() != target.hom_size(f.objects[x], f.objects[y])) return false;
      if (std::set<std::size_t>(m.begin(), m.end()).size() != m.size()) return false;
    }
  }
  return true;
}

FiniteCategory terminal_category() { return FiniteCategory(1, {1}, {0}, {{0}}); }

FiniteCategory free_isomorphism() { return chaotic_category(2); }

FiniteCategory chaotic_category(std::size_t n) {
  return FiniteCategory(n, std::vector<std::size_t>(n * n, 1), std::vector<std::size_t>(n, 0),
                        std::vector<std::vector<std::size_t>>(n * n * n, {0}));
}

FiniteCategory coproduct(const FiniteCategory& a, const FiniteCategory& b) {
  std::size_t na = a.objects(), n = na + b.objects();
  auto part = [&](std::size_t x) { return x < na ? 0 : 1; };
  auto local = [&](std::size_t x) { return x < na ? x : x - na; };
  std::vector<std::size_t> sizes(n * n, 0), ids(n);
  std::vector<std::vector<std::size_t>> comp(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const FiniteCategory& cx = part(x) == 0 ? a : b;
    ids[x] = cx.identity(local(x));
    for (std::size_t y = 0; y < n; ++y)
      if (part(x) == part(y)) sizes[x * n + y] = cx.hom_size(local(x), local(y));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (part(x) == part(y) && part(y) == part(z)) {
          const FiniteCategory& cx = part(x) == 0 ? a : b;
          comp[(x * n + y) * n + z] = cx.composition_table(local(x), local(y), local(z));
        }
  return FiniteCategory(n, sizes, ids, comp);
}

FiniteCategory arrow_category() {
  std::vector<std::vector<std::size_t>> comp(8);
  // hom sizes: (0,0)=1 (0,1)=1 (1,0)=0 (1,1)=1
  std::vector<std::size_t> sizes{1, 1, 0, 1};
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t z = 0; z < 2; ++z) comp[(x * 2 + y) * 2 + z].assign(sizes[x * 2 + y] * sizes[y * 2 + z], 0);
  return FiniteCategory(2, sizes, {0, 0}, comp);
}

FiniteCategory monoid_category(std::size_t elements, std::vector<std::size_t> table) {
  return FiniteCategory(1, {elements}, {0}, {std::move(table)});
}

FiniteCategory product(const FiniteCategory& a, const FiniteCategory& b) {
  std::size_t na = a.objects(), nb = b.objects(), n = na * nb;
  std::vector<std::size_t> sizes(n * n), ids(n);
  std::vector<std::vector<std::size_t>> comp(n * n * n);
  auto obj = [&](std::size_t x, std::size_t y) { return x * nb + y; };
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) ids[obj(x, y)] = a.identity(x) * b.hom_size(y, y) + b.identity(y);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      sizes[p * n + q] = a.hom_size(p / nb, q / nb) * b.hom_size(p % nb, q % nb);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t r = 0; r < n; ++r) {
        auto& t = comp[(p * n + q) * n + r];
        std::size_t bpq = b.hom_size(p % nb, q % nb), bqr = b.hom_size(q % nb, r % nb), bpr = b.hom_size(p % nb, r % nb);
        for (std::size_t f = 0; f < sizes[p * n + q]; ++f) {
          for (std::size_t g = 0; g < sizes[q * n + r]; ++g) {
            std::size_t fa = f / bpq, fb = f % bpq, ga = g / bqr, gb = g % bqr;
            std::size_t ca = a.compose(p / nb, q / nb, r / nb, fa, ga);
            std::size_t cb = b.compose(p % nb, q % nb, r % nb, fb, gb);
            t.push_back(ca * bpr + cb);
          }
        }
      }
    }
  }
  return FiniteCategory(n, sizes, ids, comp);
}

}  // namespace dkcat
