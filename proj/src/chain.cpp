#include "dkcat/chain.hpp"

#include <algorithm>
#include <string>

namespace dkcat {

namespace {

Scalar sign(const Field& f, long long exponent) { return (exponent % 2 == 0) ? f.one() : f.neg(f.one()); }

void require_same(const ChainComplex& a, const ChainComplex& b, const char* what) {
  if (!(a == b)) throw ShapeError(std::string(what) + ": complexes do not match");
}

void require_field(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("complexes over " + a.field().name() + " and " + b.field().name());
  }
}

/// Iterated direct sum with per-degree offsets of each summand.
struct MultiSum {
  ChainComplex sum;
  std::vector<std::vector<std::size_t>> offsets;  // offsets[j][n]
};

MultiSum multi_sum(Field field, const std::vector<ChainComplex>& parts) {
  int top = -1;
  for (const auto& p : parts) top = std::max(top, p.top());
  MultiSum out;
  out.offsets.assign(parts.size(), std::vector<std::size_t>(static_cast<std::size_t>(top + 1), 0));
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
  for (int n = 0; n <= top; ++n) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      out.offsets[j][n] = ranks[n];
      ranks[n] += parts[j].rank(n);
    }
  }
  std::vector<Matrix> bds;
  for (int n = 1; n <= top; ++n) {
    Matrix d(field, ranks[n - 1], ranks[n]);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      d.set_block(out.offsets[j][n - 1], out.offsets[j][n], parts[j].boundary(n));
    }
    bds.push_back(std::move(d));
  }
  out.sum = ChainComplex(field, ranks, std::move(bds));
  return out;
}

}  // namespace

// ---- ChainComplex ----------------------------------------------------------

ChainComplex::ChainComplex(Field field, std::vector<std::size_t> ranks, std::vector<Matrix> boundaries)
    : field_(field), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (boundaries_.size() != expected) {
    throw ShapeError("complex with " + std::to_string(ranks_.size()) + " degrees needs " +
                     std::to_string(expected) + " boundary matrices, got " +
                     std::to_string(boundaries_.size()));
  }
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    const Matrix& d = boundaries_[n - 1];
    if (!(d.field() == field_)) throw FieldMismatch("boundary over the wrong field");
    if (d.rows() != ranks_[n - 1] || d.cols() != ranks_[n]) {
      throw ShapeError("boundary d_" + std::to_string(n) + " has shape " + std::to_string(d.rows()) +
                       "x" + std::to_string(d.cols()) + ", expected " + std::to_string(ranks_[n - 1]) +
                       "x" + std::to_string(ranks_[n]));
    }
  }
  while (!ranks_.empty() && ranks_.back() == 0) {
    ranks_.pop_back();
    if (!boundaries_.empty()) boundaries_.pop_back();
  }
}

ChainComplex ChainComplex::zero(Field field) { return ChainComplex(field, {}, {}); }

ChainComplex ChainComplex::unit(Field field) { return ChainComplex(field, {1}, {}); }

ChainComplex ChainComplex::sphere(Field field, int n) {
  if (n < 0) throw ShapeError("sphere degree must be non-negative");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
  ranks.back() = 1;
  std::vector<Matrix> bds;
  for (int k = 1; k <= n; ++k) bds.emplace_back(field, ranks[k - 1], ranks[k]);
  return ChainComplex(field, ranks, bds);
}

ChainComplex ChainComplex::disk(Field field, int n) {
  if (n < 0) throw ShapeError("disk degree must be non-negative");
  if (n == 0) return unit(field);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
  ranks[n] = ranks[n - 1] = 1;
  std::vector<Matrix> bds;
  for (int k = 1; k <= n; ++k) bds.emplace_back(field, ranks[k - 1], ranks[k]);
  bds[n - 1] = Matrix::identity(field, 1);
  return ChainComplex(field, ranks, bds);
}

std::size_t ChainComplex::rank(int n) const {
  if (n < 0 || n > top()) return 0;
  return ranks_[static_cast<std::size_t>(n)];
}

std::size_t ChainComplex::total_rank() const {
  std::size_t s = 0;
  for (auto r : ranks_) s += r;
  return s;
}

Matrix ChainComplex::boundary(int n) const {
  if (n >= 1 && n <= top()) return boundaries_[static_cast<std::size_t>(n - 1)];
  return Matrix(field_, rank(n - 1), rank(n));
}

ValidationReport validate(const ChainComplex& c) {
  ValidationReport r;
  for (int n = 1; n < c.top(); ++n) {
    if (!(c.boundary(n) * c.boundary(n + 1)).is_zero()) {
      r.ok = false;
      r.failing_degrees.push_back(n);
    }
  }
  return r;
}

// ---- ChainMap --------------------------------------------------------------

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_field(source_, target_);
  auto needed = static_cast<std::size_t>(source_.top() + 1);
  if (components_.size() < needed) {
    throw ShapeError("chain map needs " + std::to_string(needed) + " components, got " +
                     std::to_string(components_.size()));
  }
  for (std::size_t n = needed; n < components_.size(); ++n) {
    if (components_[n].cols() != 0) throw ShapeError("component beyond the source's top degree");
  }
  components_.resize(needed);
  for (std::size_t n = 0; n < needed; ++n) {
    const Matrix& m = components_[n];
    int deg = static_cast<int>(n);
    if (!(m.field() == source_.field())) throw FieldMismatch("component over the wrong field");
    if (m.rows() != target_.rank(deg) || m.cols() != source_.rank(deg)) {
      throw ShapeError("component f_" + std::to_string(n) + " has shape " + std::to_string(m.rows()) +
                       "x" + std::to_string(m.cols()) + ", expected " +
                       std::to_string(target_.rank(deg)) + "x" + std::to_string(source_.rank(deg)));
    }
  }
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= c.top(); ++n) comps.push_back(Matrix::identity(c.field(), c.rank(n)));
  return ChainMap(c, c, comps);
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= source.top(); ++n) comps.emplace_back(source.field(), target.rank(n), source.rank(n));
  return ChainMap(source, target, comps);
}

Matrix ChainMap::component(int n) const {
  if (n >= 0 && n <= source_.top()) return components_[static_cast<std::size_t>(n)];
  return Matrix(source_.field(), target_.rank(n), source_.rank(n));
}

void ChainMap::set_component(int n, Matrix m) {
  if (n < 0 || n > source_.top()) throw ShapeError("component degree out of range");
  if (m.rows() != target_.rank(n) || m.cols() != source_.rank(n)) throw ShapeError("component shape");
  components_[static_cast<std::size_t>(n)] = std::move(m);
}

std::vector<int> ChainMap::noncommuting_degrees() const {
  std::vector<int> out;
  int top = std::max(source_.top(), target_.top());
  for (int n = 1; n <= top; ++n) {
    if (!(component(n - 1) * source_.boundary(n) == target_.boundary(n) * component(n))) out.push_back(n);
  }
  return out;
}

void require_chain_map(const ChainMap& f, const char* what) {
  auto bad = f.noncommuting_degrees();
  if (!bad.empty()) {
    throw StructuralError(std::string(what) + " does not commute with boundaries in degree " +
                          std::to_string(bad.front()));
  }
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  require_same(f.target(), g.source(), "compose");
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source().top(); ++n) comps.push_back(g.component(n) * f.component(n));
  return ChainMap(f.source(), g.target(), comps);
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  require_same(f.source(), g.source(), "add");
  require_same(f.target(), g.target(), "add");
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source().top(); ++n) comps.push_back(f.component(n) + g.component(n));
  return ChainMap(f.source(), f.target(), comps);
}

ChainMap negate(const ChainMap& f) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source().top(); ++n) comps.push_back(-f.component(n));
  return ChainMap(f.source(), f.target(), comps);
}

ChainMap point(const ChainComplex& x, const Vector& v) {
  if (v.size() != x.rank(0)) throw ShapeError("point: vector length does not match degree-0 rank");
  return ChainMap(ChainComplex::unit(x.field()), x, {Matrix::column(x.field(), v)});
}

// ---- direct sums -----------------------------------------------------------

DirectSum direct_sum(const ChainComplex& a, const ChainComplex& b) {
  require_field(a, b);
  MultiSum ms = multi_sum(a.field(), {a, b});
  const Field& f = a.field();
  const ChainComplex& s = ms.sum;
  std::vector<Matrix> in1, in2, pr1, pr2;
  for (int n = 0; n <= s.top(); ++n) {
    Matrix i1(f, s.rank(n), a.rank(n)), i2(f, s.rank(n), b.rank(n));
    i1.set_block(0, 0, Matrix::identity(f, a.rank(n)));
    i2.set_block(a.rank(n), 0, Matrix::identity(f, b.rank(n)));
    pr1.push_back(i1.transpose());
    pr2.push_back(i2.transpose());
    if (n <= a.top()) in1.push_back(i1);
    if (n <= b.top()) in2.push_back(i2);
  }
  return {s, ChainMap(a, s, in1), ChainMap(b, s, in2), ChainMap(s, a, pr1), ChainMap(s, b, pr2)};
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  DirectSum src = direct_sum(f.source(), g.source());
  DirectSum tgt = direct_sum(f.target(), g.target());
  std::vector<Matrix> comps;
  for (int n = 0; n <= src.sum.top(); ++n) comps.push_back(Matrix::direct_sum(f.component(n), g.component(n)));
  return ChainMap(src.sum, tgt.sum, comps);
}

ChainMap pairing(const ChainMap& f, const ChainMap& g) {
  require_same(f.source(), g.source(), "pairing");
  DirectSum tgt = direct_sum(f.target(), g.target());
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source().top(); ++n) comps.push_back(Matrix::vstack(f.component(n), g.component(n)));
  return ChainMap(f.source(), tgt.sum, comps);
}

ChainMap copairing(const ChainMap& f, const ChainMap& g) {
  require_same(f.target(), g.target(), "copairing");
  DirectSum src = direct_sum(f.source(), g.source());
  std::vector<Matrix> comps;
  for (int n = 0; n <= src.sum.top(); ++n) comps.push_back(Matrix::hstack(f.component(n), g.component(n)));
  return ChainMap(src.sum, f.target(), comps);
}

// ---- tensor ----------------------------------------------------------------

std::size_t tensor_offset(const ChainComplex& c, const ChainComplex& d, int n, int i) {
  std::size_t off = 0;
  for (int k = 0; k < i; ++k) off += c.rank(k) * d.rank(n - k);
  return off;
}

ChainComplex tensor(const ChainComplex& c, const ChainComplex& d) {
  require_field(c, d);
  const Field& f = c.field();
  if (c.top() < 0 || d.top() < 0) return ChainComplex::zero(f);
  int top = c.top() + d.top();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
  for (int n = 0; n <= top; ++n) ranks[n] = tensor_offset(c, d, n, n + 1);
  std::vector<Matrix> bds;
  for (int n = 1; n <= top; ++n) {
    Matrix m(f, ranks[n - 1], ranks[n]);
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      if (c.rank(i) == 0 || d.rank(j) == 0) continue;
      std::size_t col = tensor_offset(c, d, n, i);
      if (i >= 1 && c.rank(i - 1) > 0) {
        m.set_block(tensor_offset(c, d, n - 1, i - 1), col,
                    kron(c.boundary(i), Matrix::identity(f, d.rank(j))));
      }
      if (j >= 1 && d.rank(j - 1) > 0) {
        m.set_block(tensor_offset(c, d, n - 1, i), col,
                    kron(Matrix::identity(f, c.rank(i)), d.boundary(j)).scaled(sign(f, i)));
      }
    }
    bds.push_back(std::move(m));
  }
  return ChainComplex(f, ranks, bds);
}

ChainMap tensor(const ChainMap& f, const ChainMap& g) {
  ChainComplex src = tensor(f.source(), g.source());
  ChainComplex tgt = tensor(f.target(), g.target());
  std::vector<Matrix> comps;
  for (int n = 0; n <= src.top(); ++n) {
    Matrix m(f.field(), tgt.rank(n), src.rank(n));
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      if (f.source().rank(i) * g.source().rank(j) == 0 || f.target().rank(i) * g.target().rank(j) == 0) continue;
      m.set_block(tensor_offset(f.target(), g.target(), n, i), tensor_offset(f.source(), g.source(), n, i),
                  kron(f.component(i), g.component(j)));
    }
    comps.push_back(std::move(m));
  }
  return ChainMap(src, tgt, comps);
}

ChainMap associator(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c) {
  ChainComplex ab = tensor(a, b);
  ChainComplex bc = tensor(b, c);
  ChainComplex left = tensor(ab, c);
  ChainComplex right = tensor(a, bc);
  const Field& f = a.field();
  std::vector<Matrix> comps;
  for (int n = 0; n <= left.top(); ++n) {
    Matrix m(f, right.rank(n), left.rank(n));
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        int k = n - i - j;
        std::size_t ra = a.rank(i), rb = b.rank(j), rc = c.rank(k);
        if (ra * rb * rc == 0) continue;
        int s = i + j, t = j + k;
        std::size_t lbase = tensor_offset(ab, c, n, s);
        std::size_t labase = tensor_offset(a, b, s, i);
        std::size_t rbase = tensor_offset(a, bc, n, i);
        std::size_t rbbase = tensor_offset(b, c, t, j);
        std::size_t bc_dim = bc.rank(t);
        for (std::size_t x = 0; x < ra; ++x)
          for (std::size_t y = 0; y < rb; ++y)
            for (std::size_t z = 0; z < rc; ++z) {
              std::size_t li = lbase + (labase + x * rb + y) * rc + z;
              std::size_t ri = rbase + x * bc_dim + rbbase + y * rc + z;
              m.set(ri, li, f.one());
            }
      }
    }
    comps.push_back(std::move(m));
  }
  return ChainMap(left, right, comps);
}

ChainMap symmetry(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex ab = tensor(a, b);
  ChainComplex ba = tensor(b, a);
  const Field& f = a.field();
  std::vector<Matrix> comps;
  for (int n = 0; n <= ab.top(); ++n) {
    Matrix m(f, ba.rank(n), ab.rank(n));
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      std::size_t ra = a.rank(i), rb = b.rank(j);
      if (ra * rb == 0) continue;
      std::size_t src = tensor_offset(a, b, n, i), dst = tensor_offset(b, a, n, j);
      Scalar s = sign(f, static_cast<long long>(i) * j);
      for (std::size_t x = 0; x < ra; ++x)
        for (std::size_t y = 0; y < rb; ++y) m.set(dst + y * ra + x, src + x * rb + y, s);
    }
    comps.push_back(std::move(m));
  }
  return ChainMap(ab, ba, comps);
}

// ---- internal hom ----------------------------------------------------------

InternalHom::InternalHom(ChainComplex source, ChainComplex target)
    : source_(std::move(source)), target_(std::move(target)) {
  require_field(source_, target_);
  const Field& f = source_.field();
  cycles0_ = KernelSubspace(graded_differential(0));
  int top = (source_.top() < 0) ? -1 : target_.top();
  std::vector<std::size_t> ranks;
  std::vector<Matrix> bds;
  for (int n = 0; n <= top; ++n) ranks.push_back(n == 0 ? cycles0_.dim() : graded_dim(n));
  for (int n = 1; n <= top; ++n) {
    Matrix d = graded_differential(n);
    bds.push_back(n == 1 ? cycles0_.coordinates(d) : d);
  }
  complex_ = ChainComplex(f, ranks, bds);
}

std::size_t InternalHom::block_offset(int n, int m) const {
  std::size_t off = 0;
  for (int k = 0; k < m; ++k) off += source_.rank(k) * target_.rank(k + n);
  return off;
}

std::size_t InternalHom::graded_dim(int n) const { return block_offset(n, source_.top() + 1); }

Matrix InternalHom::graded_differential(int n) const {
  const Field& f = source_.field();
  Matrix out(f, graded_dim(n - 1), graded_dim(n));
  Scalar s = f.neg(sign(f, n));
  for (int m = 0; m <= source_.top(); ++m) {
    std::size_t rb = source_.rank(m), rx = target_.rank(m + n);
    if (rb * rx == 0) continue;
    std::size_t col = block_offset(n, m);
    if (target_.rank(m + n - 1) > 0) {
      out.set_block(block_offset(n - 1, m), col, kron(target_.boundary(m + n), Matrix::identity(f, rb)));
    }
    if (source_.rank(m + 1) > 0) {
      out.set_block(block_offset(n - 1, m + 1), col,
                    kron(Matrix::identity(f, rx), source_.boundary(m + 1).transpose()).scaled(s));
    }
  }
  return out;
}

Matrix InternalHom::embed(int n) const {
  if (n == 0) return cycles0_.basis();
  return Matrix::identity(source_.field(), graded_dim(n));
}

Matrix InternalHom::extract(int n, const Matrix& graded) const {
  if (n == 0) {
    try {
      return cycles0_.coordinates(graded);
    } catch (const StructuralError&) {
      throw StructuralError("degree-0 component is not a chain map");
    }
  }
  return graded;
}

ChainComplex internal_hom(const ChainComplex& source, const ChainComplex& target) {
  return InternalHom(source, target).complex();
}

ChainMap internal_hom(const ChainMap& u, const ChainMap& v) {
  InternalHom src(u.target(), v.source());
  InternalHom tgt(u.source(), v.target());
  const Field& f = u.field();
  const ChainComplex& xs = u.target();   // X
  const ChainComplex& xt = u.source();   // X'
  std::vector<Matrix> comps;
  for (int n = 0; n <= src.complex().top(); ++n) {
    Matrix g(f, tgt.graded_dim(n), src.graded_dim(n));
    for (int m = 0; m <= std::max(xs.top(), xt.top()); ++m) {
      if (xs.rank(m) * v.source().rank(m + n) == 0) continue;
      if (xt.rank(m) * v.target().rank(m + n) == 0) continue;
      g.set_block(tgt.block_offset(n, m), src.block_offset(n, m),
                  kron(v.component(m + n), u.component(m).transpose()));
    }
    comps.push_back(tgt.extract(n, g * src.embed(n)));
  }
  return ChainMap(src.complex(), tgt.complex(), comps);
}

ChainMap adjoint_transpose(const ChainMap& g, const ChainComplex& a, const ChainComplex& b) {
  require_same(g.source(), tensor(a, b), "adjoint_transpose");
  const ChainComplex& x = g.target();
  InternalHom hom(b, x);
  const Field& f = a.field();
  std::vector<Matrix> comps;
  for (int p = 0; p <= a.top(); ++p) {
    Matrix graded(f, hom.graded_dim(p), a.rank(p));
    for (int m = 0; m <= b.top(); ++m) {
      std::size_t rb = b.rank(m), rx = x.rank(p + m);
      if (rb * rx == 0) continue;
      Matrix gn = g.component(p + m);
      std::size_t off = tensor_offset(a, b, p + m, p);
      std::size_t hoff = hom.block_offset(p, m);
      for (std::size_t alpha = 0; alpha < a.rank(p); ++alpha)
        for (std::size_t xi = 0; xi < rx; ++xi)
          for (std::size_t beta = 0; beta < rb; ++beta)
            graded.set(hoff + xi * rb + beta, alpha, gn(xi, off + alpha * rb + beta));
    }
    comps.push_back(hom.extract(p, graded));
  }
  return ChainMap(a, hom.complex(), comps);
}

ChainMap adjoint_untranspose(const ChainMap& h, const ChainComplex& b, const ChainComplex& x) {
  InternalHom hom(b, x);
  require_same(h.target(), hom.complex(), "adjoint_untranspose");
  const ChainComplex& a = h.source();
  ChainComplex ab = tensor(a, b);
  const Field& f = a.field();
  std::vector<Matrix> comps;
  for (int n = 0; n <= ab.top(); ++n) {
    Matrix g(f, x.rank(n), ab.rank(n));
    for (int p = 0; p <= std::min(n, a.top()); ++p) {
      int m = n - p;
      std::size_t rb = b.rank(m), rx = x.rank(n);
      if (rb * rx * a.rank(p) == 0) continue;
      Matrix graded = hom.embed(p) * h.component(p);
      std::size_t off = tensor_offset(a, b, n, p);
      std::size_t hoff = hom.block_offset(p, m);
      for (std::size_t alpha = 0; alpha < a.rank(p); ++alpha)
        for (std::size_t xi = 0; xi < rx; ++xi)
          for (std::size_t beta = 0; beta < rb; ++beta)
            g.set(xi, off + alpha * rb + beta, graded(hoff + xi * rb + beta, alpha));
    }
    comps.push_back(std::move(g));
  }
  return ChainMap(ab, x, comps);
}

ChainMap evaluation(const ChainComplex& b, const ChainComplex& x) {
  return adjoint_untranspose(ChainMap::identity(internal_hom(b, x)), b, x);
}

// ---- homology --------------------------------------------------------------

Homology::Homology(const ChainComplex& c) {
  const Field& f = c.field();
  empty_ = HomologyDegree{KernelSubspace(Matrix(f, 0, 0)), Quotient(f, 0, Matrix(f, 0, 0)), Matrix(f, 0, 0)};
  for (int n = 0; n <= c.top(); ++n) {
    KernelSubspace z(c.boundary(n));
    Matrix b = z.coordinates(c.boundary(n + 1));
    Quotient q(f, z.dim(), b);
    Matrix reps = z.basis() * q.section();
    degrees_.push_back(HomologyDegree{std::move(z), std::move(q), std::move(reps)});
  }
}

std::vector<std::size_t> Homology::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees_) out.push_back(d.dim());
  return out;
}

const HomologyDegree& Homology::degree(int n) const {
  if (n < 0 || n > top()) return empty_;
  return degrees_[static_cast<std::size_t>(n)];
}

std::vector<std::size_t> homology(const ChainComplex& c) { return Homology(c).dims(); }

Matrix induced_on_homology(const ChainMap& f, int n, const Homology& hs, const Homology& ht) {
  const HomologyDegree& s = hs.degree(n);
  const HomologyDegree& t = ht.degree(n);
  Matrix out(f.field(), t.dim(), s.dim());
  Matrix images = f.component(n) * s.representatives;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Vector cls = t.class_of(images.col(j));
    for (std::size_t i = 0; i < cls.size(); ++i) out.set(i, j, cls[i]);
  }
  return out;
}

bool is_isomorphism(const ChainMap& f) {
  int top = std::max(f.source().top(), f.target().top());
  for (int n = 0; n <= top; ++n) {
    Matrix m = f.component(n);
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  }
  return true;
}

std::optional<ChainMap> inverse(const ChainMap& f) {
  if (!is_isomorphism(f)) return std::nullopt;
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.target().top(); ++n) comps.push_back(*inverse(f.component(n)));
  return ChainMap(f.target(), f.source(), comps);
}

bool is_quasi_iso(const ChainMap& f) {
  Homology hs(f.source()), ht(f.target());
  int top = std::max(hs.top(), ht.top());
  for (int n = 0; n <= top; ++n) {
    Matrix m = induced_on_homology(f, n, hs, ht);
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  }
  return true;
}

bool is_fibration(const ChainMap& f) {
  for (int n = 1; n <= f.target().top(); ++n) {
    if (rank(f.component(n)) != f.target().rank(n)) return false;
  }
  return true;
}

bool is_cofibration(const ChainMap& f) {
  for (int n = 0; n <= f.source().top(); ++n) {
    if (rank(f.component(n)) != f.source().rank(n)) return false;
  }
  return true;
}

bool is_trivial_fibration(const ChainMap& f) {
  for (int n = 0; n <= f.target().top(); ++n) {
    if (rank(f.component(n)) != f.target().rank(n)) return false;
  }
  for (std::size_t h : homology(kernel_complex(f).complex)) {
    if (h != 0) return false;
  }
  return true;
}

std::optional<Difference> first_difference(const ChainMap& a, const ChainMap& b) {
  int top = std::max({a.source().top(), b.source().top(), a.target().top(), b.target().top()});
  for (int n = 0; n <= top; ++n) {
    Matrix x = a.component(n), y = b.component(n);
    if (x.rows() != y.rows() || x.cols() != y.cols()) return Difference{n, 0, 0};
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c)
        if (!(x(r, c) == y(r, c))) return Difference{n, r, c};
  }
  return std::nullopt;
}

// ---- limits and colimits ---------------------------------------------------

Subcomplex kernel_complex(const ChainMap& f) {
  const ChainComplex& e = f.source();
  const Field& fld = e.field();
  Subcomplex out;
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= e.top(); ++n) {
    out.spaces.emplace_back(f.component(n));
    ranks.push_back(out.spaces.back().dim());
  }
  std::vector<Matrix> bds;
  for (int n = 1; n <= e.top(); ++n) {
    bds.push_back(out.spaces[n - 1].coordinates(e.boundary(n) * out.spaces[n].basis()));
  }
  out.complex = ChainComplex(fld, ranks, bds);
  std::vector<Matrix> incl;
  for (int n = 0; n <= out.complex.top(); ++n) incl.push_back(out.spaces[n].basis());
  out.inclusion = ChainMap(out.complex, e, incl);
  return out;
}

ChainMap factor_through(const Subcomplex& k, const ChainMap& g) {
  require_same(g.target(), k.inclusion.target(), "factor_through");
  std::vector<Matrix> comps;
  for (int n = 0; n <= g.source().top(); ++n) {
    if (n < static_cast<int>(k.spaces.size())) {
      comps.push_back(k.spaces[n].coordinates(g.component(n)));
    } else {
      comps.emplace_back(g.field(), 0, g.source().rank(n));
    }
  }
  return ChainMap(g.source(), k.complex, comps);
}

QuotientComplex cokernel_complex(const ChainMap& f) {
  const ChainComplex& e = f.target();
  const Field& fld = e.field();
  QuotientComplex out;
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= e.top(); ++n) {
    out.spaces.emplace_back(fld, e.rank(n), f.component(n));
    ranks.push_back(out.spaces.back().dim());
  }
  std::vector<Matrix> bds;
  for (int n = 1; n <= e.top(); ++n) {
    bds.push_back(out.spaces[n - 1].projection() * e.boundary(n) * out.spaces[n].section());
  }
  out.complex = ChainComplex(fld, ranks, bds);
  std::vector<Matrix> proj;
  for (int n = 0; n <= e.top(); ++n) proj.push_back(out.spaces[n].projection());
  out.projection = ChainMap(e, out.complex, proj);
  return out;
}

ChainMap factor_through(const QuotientComplex& q, const ChainMap& g) {
  require_same(g.source(), q.projection.source(), "factor_through");
  std::vector<Matrix> comps;
  for (int n = 0; n <= q.complex.top(); ++n) {
    Matrix gn = g.component(n);
    Matrix induced = gn * q.spaces[n].section();
    if (!(induced * q.spaces[n].projection() == gn)) {
      throw StructuralError("map does not vanish on the image in degree " + std::to_string(n));
    }
    comps.push_back(std::move(induced));
  }
  for (int n = q.complex.top() + 1; n <= g.source().top(); ++n) {
    if (!g.component(n).is_zero()) {
      throw StructuralError("map does not vanish on the image in degree " + std::to_string(n));
    }
  }
  return ChainMap(q.complex, g.target(), comps);
}

Pullback pullback(const ChainMap& f, const ChainMap& g) { return wide_pullback({f, g}); }

Pullback wide_pullback(const std::vector<ChainMap>& legs) {
  if (legs.empty() || legs.size() % 2 != 0) throw ShapeError("zigzag needs an even, positive number of legs");
  std::size_t k = legs.size() / 2;
  std::vector<ChainComplex> objects{legs[0].source()};
  std::vector<ChainComplex> bases;
  for (std::size_t j = 0; j < k; ++j) {
    const ChainMap& l = legs[2 * j];
    const ChainMap& r = legs[2 * j + 1];
    require_same(l.target(), r.target(), "wide_pullback");
    if (j > 0) require_same(legs[2 * j - 1].source(), l.source(), "wide_pullback");
    bases.push_back(l.target());
    objects.push_back(r.source());
  }
  const Field& f = legs[0].field();
  MultiSum e = multi_sum(f, objects);
  MultiSum d = multi_sum(f, bases);
  std::vector<Matrix> comps;
  for (int n = 0; n <= e.sum.top(); ++n) {
    Matrix m(f, d.sum.rank(n), e.sum.rank(n));
    for (std::size_t j = 0; j < k; ++j) {
      if (n > d.sum.top()) break;
      if (n <= objects[j].top()) m.set_block(d.offsets[j][n], e.offsets[j][n], legs[2 * j].component(n));
      if (n <= objects[j + 1].top()) {
        m.set_block(d.offsets[j][n], e.offsets[j + 1][n], -legs[2 * j + 1].component(n));
      }
    }
    comps.push_back(std::move(m));
  }
  Pullback out;
  out.kernel = kernel_complex(ChainMap(e.sum, d.sum, comps));
  for (std::size_t j = 0; j < objects.size(); ++j) {
    std::vector<Matrix> pr;
    for (int n = 0; n <= out.kernel.complex.top(); ++n) {
      Matrix incl = out.kernel.inclusion.component(n);
      pr.push_back(incl.block(e.offsets[j][n], 0, objects[j].rank(n), incl.cols()));
    }
    out.projections.emplace_back(out.kernel.complex, objects[j], pr);
  }
  return out;
}

ChainMap cone_to_limit(const Pullback& limit, const std::vector<ChainMap>& cone) {
  if (cone.size() != limit.projections.size()) throw ShapeError("cone has the wrong number of legs");
  ChainMap stacked = cone[0];
  for (std::size_t j = 1; j < cone.size(); ++j) stacked = pairing(stacked, cone[j]);
  return factor_through(limit.kernel, stacked);
}

Pushout pushout(const ChainMap& f, const ChainMap& g) {
  require_same(f.source(), g.source(), "pushout");
  Pushout out;
  out.quotient = cokernel_complex(pairing(f, negate(g)));
  DirectSum ds = direct_sum(f.target(), g.target());
  out.in1 = compose(out.quotient.projection, ds.in1);
  out.in2 = compose(out.quotient.projection, ds.in2);
  return out;
}

ChainMap induced_from_pushout(const Pushout& po, const ChainMap& x, const ChainMap& y) {
  return factor_through(po.quotient, copairing(x, y));
}

ChainComplex truncate(const ChainComplex& c, int top) {
  if (top >= c.top()) return c;
  if (top < 0) return ChainComplex::zero(c.field());
  std::vector<std::size_t> ranks(c.ranks().begin(), c.ranks().begin() + top + 1);
  std::vector<Matrix> bs;
  for (int n = 1; n <= top; ++n) bs.push_back(c.boundary(n));
  return ChainComplex(c.field(), ranks, bs);
}

ChainMap generating_cofibration(Field field, int n) {
  if (n < 0) throw ShapeError("generating cofibration index must be non-negative");
  if (n == 0) return ChainMap::zero(ChainComplex::zero(field), ChainComplex::unit(field));
  ChainComplex s = ChainComplex::sphere(field, n - 1);
  ChainComplex d = ChainComplex::disk(field, n);
  std::vector<Matrix> comps;
  for (int k = 0; k <= s.top(); ++k) comps.emplace_back(field, d.rank(k), s.rank(k));
  comps.back() = Matrix::identity(field, 1);
  return ChainMap(s, d, comps);
}

}  // namespace dkcat
