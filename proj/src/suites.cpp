#include "dkcat/suites.hpp"

#include <algorithm>

namespace dkcat {

namespace {

template <class T>
std::shared_ptr<const T> share(T x) {
  return std::make_shared<const T>(std::move(x));
}

DoldKanTrial run_trial(Rng& rng, const DoldKanOptions& o, std::size_t index) {
  const Field& f = o.field;
  int level = std::max(o.max_degree, 1);
  DoldKanTrial t;
  t.index = index;

  ChainComplex c = random_complex(rng, f, o.max_degree, o.max_rank);
  t.complex_ranks = c.ranks();
  t.normalize_gamma = normalize(gamma(c, level)) == c;

  SimplicialModule m = random_simplicial_module(rng, f, o.max_degree, o.max_rank, level).target();
  t.module_ranks = m.ranks();
  SimplicialMap psi = dold_kan_iso(m);
  if (psi.source() == gamma(normalize(m), level) && psi.target() == m && psi.commutes()) {
    if (auto inv = inverse(psi)) {
      t.gamma_normalize = inv->commutes() && compose(*inv, psi) == SimplicialMap::identity(psi.source()) &&
                          compose(psi, *inv) == SimplicialMap::identity(m);
    }
  }

  SimplicialModule b = random_simplicial_module(rng, f, o.max_degree, o.max_rank, level).target();
  Normalization nm = normalization(m), nb = normalization(b);
  ChainMap round = aw_after_shuffle(m, b, nm, nb, o.signs);
  t.aw_shuffle = round == ChainMap::identity(round.source());
  t.shuffle_chain = shuffle_chain_failure(m, b, nm, nb, o.signs) == -1;

  EtaReport eta = check_eta(m);
  t.eta = eta.bijective;
  t.h0_classes = eta.h0_classes;

  if (!t.normalize_gamma)
    t.failure = "normalize_gamma";
  else if (!t.gamma_normalize)
    t.failure = "gamma_normalize";
  else if (!t.aw_shuffle)
    t.failure = "aw_shuffle";
  else if (!t.shuffle_chain)
    t.failure = "shuffle_chain";
  else if (!t.eta)
    t.failure = "eta";
  return t;
}

ChainComplex random_small_complex(Rng& rng, const Field& f, std::size_t max_rank) {
  for (;;) {
    ChainComplex c = random_complex(rng, f, 2, max_rank);
    if (c.total_rank() <= max_rank) return c;
  }
}

// k (+) k[1] with s s = 0: H_1 of rank 1.
ChainCategory dual_numbers(const Field& f) {
  ChainComplex x(f, {1, 1}, {Matrix(f, 1, 1)});
  ChainMap comp(tensor(x, x), x, {Matrix::from_ints(f, 1, 1, {1}), Matrix::from_ints(f, 1, 2, {1, 1}), Matrix(f, 0, 1)});
  return ChainCategory(ChainAmbient{f}, {"*"}, {x}, {comp}, {Vector{f.one()}});
}

FiniteCategory cyclic_monoid2() { return monoid_category(2, {0, 1, 1, 0}); }

FiniteCategory random_finite_category(Rng& rng, std::size_t max_objects) {
  std::vector<FiniteCategory> pool{chaotic_category(1), cyclic_monoid2()};
  if (max_objects >= 2) {
    pool.push_back(chaotic_category(2));
    pool.push_back(arrow_category());
    pool.push_back(coproduct(chaotic_category(1), chaotic_category(1)));
  }
  if (max_objects >= 3) {
    pool.push_back(chaotic_category(3));
    pool.push_back(coproduct(arrow_category(), chaotic_category(1)));
  }
  return pool[rng.below(pool.size())];
}

std::vector<std::size_t> random_objects(Rng& rng, std::size_t count, std::size_t range) {
  std::vector<std::size_t> out(count);
  for (auto& o : out) o = rng.below(range);
  return out;
}

ChainFunctor two_map_functor(const Field& f, const ChainMap& i) { return two_map(ChainAmbient{f}, i); }

}  // namespace

DoldKanSummary run_dold_kan_suite(const DoldKanOptions& options) {
  if (!options.field.is_prime_field()) throw UnsupportedField("the Dold-Kan suite enumerates pi_0 and needs F_p");
  if (options.max_degree < 0) throw ShapeError("max degree must be non-negative");
  DoldKanSummary s;
  s.options = options;
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.trials; ++i) {
    s.trials.push_back(run_trial(rng, options, i));
    if (!s.trials.back().passed()) {
      ++s.failures;
      if (!s.first_failure) s.first_failure = i;
    }
  }
  return s;
}

std::size_t max_hom_rank(const ChainCategory& c) {
  std::size_t r = 0;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) r = std::max(r, c.hom(x, y).total_rank());
  return r;
}

ChainCategory random_chain_category(Rng& rng, const Field& f, std::size_t max_objects, std::size_t max_rank) {
  ChainAmbient amb{f};
  for (;;) {
    ChainCategory c;
    switch (rng.below(5)) {
      case 0: c = unit_category(amb); break;
      case 1: c = terminal_category(amb); break;
      case 2: c = two_object(amb, random_small_complex(rng, f, max_rank)); break;
      case 3: c = linearize(amb, random_finite_category(rng, max_objects)); break;
      default: c = dual_numbers(f); break;
    }
    if (c.size() <= max_objects && max_hom_rank(c) <= max_rank) return c;
  }
}

ChainFunctor random_chain_functor(Rng& rng, const Field& f, std::size_t max_objects, std::size_t max_rank) {
  ChainAmbient amb{f};
  for (;;) {
    switch (rng.below(7)) {
      case 0:
        return identity_functor(share(random_chain_category(rng, f, max_objects, max_rank)));
      case 1: {
        auto c = share(random_chain_category(rng, f, max_objects, max_rank));
        auto objects = random_objects(rng, 1 + rng.below(max_objects), c->size());
        return full_inclusion(share(full_subcategory(*c, objects)), c, objects);
      }
      case 2:
        return to_terminal(share(random_chain_category(rng, f, max_objects, max_rank)), share(terminal_category(amb)));
      case 3: {
        if (max_objects < 2) continue;
        ChainComplex x = random_small_complex(rng, f, max_rank), y = random_small_complex(rng, f, max_rank);
        return two_map_functor(f, random_chain_map(rng, x, y));
      }
      case 4: {
        FiniteCategory s = random_finite_category(rng, max_objects);
        std::size_t m = 1 + rng.below(max_objects);
        FiniteFunctor ff;
        ff.objects = random_objects(rng, s.objects(), m);
        for (std::size_t x = 0; x < s.objects(); ++x)
          for (std::size_t y = 0; y < s.objects(); ++y) ff.morphisms.emplace_back(s.hom_size(x, y), 0);
        return linearize(ff, share(linearize(amb, s)), share(linearize(amb, chaotic_category(m))));
      }
      case 5: {
        auto a = share(random_chain_category(rng, f, max_objects, max_rank));
        auto b = share(random_chain_category(rng, f, max_objects, max_rank));
        auto prod = share(product(*a, *b));
        if (prod->size() > max_objects || max_hom_rank(*prod) > max_rank) continue;
        return product_projection(prod, a, b, static_cast<int>(rng.below(2)));
      }
      default: {
        if (rng.coin()) {
          if (max_objects < 2) continue;
          ChainComplex x = random_small_complex(rng, f, max_rank), y = random_small_complex(rng, f, max_rank),
                       z = random_small_complex(rng, f, max_rank);
          ChainFunctor i = two_map_functor(f, random_chain_map(rng, x, y));
          ChainFunctor j = two_map_functor(f, random_chain_map(rng, y, z));
          return compose(ChainFunctor(i.target_ptr(), j.target_ptr(), j.objects(),
                                      {j.component(0, 0), j.component(0, 1), j.component(1, 0), j.component(1, 1)}),
                         i);
        }
        auto c = share(random_chain_category(rng, f, max_objects, max_rank));
        auto objects = random_objects(rng, 1 + rng.below(max_objects), c->size());
        ChainFunctor inc = full_inclusion(share(full_subcategory(*c, objects)), c, objects);
        return compose(to_terminal(c, share(terminal_category(amb))), inc);
      }
    }
  }
}

CharacterizationSummary run_characterization_suite(const Field& f, std::size_t trials, std::uint64_t seed,
                                                   std::size_t max_objects, std::size_t max_rank) {
  if (!f.is_prime_field()) throw UnsupportedField("the characterization suite needs F_p");
  CharacterizationSummary s;
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    auto [left, right] = trivial_fibration_characterization(random_chain_functor(rng, f, max_objects, max_rank));
    ++s.trials;
    if (left == right) {
      ++s.agreeing;
      s.both_true += left;
    } else if (!s.first_disagreement) {
      s.first_disagreement = i;
    }
  }
  return s;
}

std::vector<NamedCategory> path_object_suite(const Field& f) {
  ChainAmbient amb{f};
  return {{"unit", unit_category(amb)},
          {"disk", two_object(amb, ChainComplex::disk(f, 1))},
          {"groupoid", linearize(amb, free_isomorphism())},
          {"dual_numbers", dual_numbers(f)}};
}

}  // namespace dkcat
