#include "dkcat/random.hpp"

namespace dkcat {

Scalar Rng::scalar(const Field& f) {
  if (f.is_prime_field()) return f.from_int(static_cast<std::int64_t>(below(static_cast<std::uint64_t>(f.characteristic()))));
  return f.from_int(static_cast<std::int64_t>(below(5)) - 2);
}

Matrix Rng::matrix(const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, scalar(f));
  return m;
}

ChainComplex random_complex(Rng& rng, const Field& f, int max_degree, std::size_t max_rank) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(max_degree) + 1);
  for (auto& r : ranks) r = rng.below(max_rank + 1);
  std::vector<Matrix> bds(ranks.size() > 0 ? ranks.size() - 1 : 0);
  for (int n = max_degree; n >= 1; --n) {
    Matrix above = (n == max_degree) ? Matrix(f, ranks[n], 0) : bds[n];
    Quotient q(f, ranks[n], above);
    bds[n - 1] = rng.matrix(f, ranks[n - 1], q.dim()) * q.projection();
  }
  return ChainComplex(f, ranks, bds);
}

ChainMap random_chain_map(Rng& rng, const ChainComplex& source, const ChainComplex& target) {
  InternalHom hom(source, target);
  const Field& f = source.field();
  Matrix basis = hom.embed(0);
  Vector graded(basis.rows(), f.zero());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    Scalar c = rng.scalar(f);
    for (std::size_t i = 0; i < basis.rows(); ++i) graded[i] = f.add(graded[i], f.mul(c, basis(i, j)));
  }
  std::vector<Matrix> comps;
  for (int m = 0; m <= source.top(); ++m) {
    Matrix block(f, target.rank(m), source.rank(m));
    std::size_t off = hom.block_offset(0, m);
    for (std::size_t x = 0; x < block.rows(); ++x)
      for (std::size_t b = 0; b < block.cols(); ++b) block.set(x, b, graded[off + x * block.cols() + b]);
    comps.push_back(block);
  }
  return ChainMap(source, target, comps);
}

Matrix random_invertible(Rng& rng, const Field& f, std::size_t n) {
  Matrix lower = Matrix::identity(f, n), upper = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower.set(i, j, rng.scalar(f));
      upper.set(j, i, rng.scalar(f));
    }
  }
  return lower * upper;
}

SimplicialMap random_simplicial_module(Rng& rng, const Field& f, int max_degree, std::size_t max_rank,
                                       int truncation) {
  SimplicialModule g = gamma(random_complex(rng, f, max_degree, max_rank), truncation);
  std::vector<Matrix> isos;
  for (int n = 0; n <= truncation; ++n) isos.push_back(random_invertible(rng, f, g.rank(n)));
  return conjugate(g, isos);
}

}  // namespace dkcat
