#include "dkcat/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <utility>

namespace dkcat {

namespace {

std::string level_tag(int n) { return " at level " + std::to_string(n); }

void require_compatible(const SimplicialModule& a, const SimplicialModule& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("simplicial modules over different fields");
  if (a.truncation() != b.truncation()) {
    throw ShapeError("simplicial modules truncated at different levels (" + std::to_string(a.truncation()) +
                     " and " + std::to_string(b.truncation()) + ")");
  }
}

// Monotone maps [k] -> [m] as value lists.
using Monotone = std::vector<int>;

Monotone surjection(int n, std::uint32_t mask) {
  Monotone s(n + 1, 0);
  for (int j = 1; j <= n; ++j) s[j] = s[j - 1] + static_cast<int>((mask >> (j - 1)) & 1u);
  return s;
}

std::uint32_t mask_of(const Monotone& s) {
  std::uint32_t mask = 0;
  for (std::size_t j = 1; j < s.size(); ++j) {
    if (s[j] == s[j - 1] + 1) mask |= 1u << (j - 1);
  }
  return mask;
}

// sigma o delta^i : [n-1] -> [m]
Monotone after_coface(const Monotone& sigma, int i) {
  Monotone g;
  for (int j = 0; j + 1 < static_cast<int>(sigma.size()); ++j) g.push_back(sigma[j < i ? j : j + 1]);
  return g;
}

// sigma o sigma^i : [n+1] -> [m]
Monotone after_codegeneracy(const Monotone& sigma, int i) {
  Monotone g;
  for (int j = 0; j <= static_cast<int>(sigma.size()); ++j) g.push_back(sigma[j <= i ? j : j - 1]);
  return g;
}

std::uint32_t remove_bit(std::uint32_t mask, int j) {
  std::uint32_t low = mask & ((1u << j) - 1u);
  std::uint32_t high = (mask >> (j + 1)) << j;
  return low | high;
}

Matrix outer(const Field& f, const Vector& u, const Vector& v) {
  Matrix m(f, u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (f.is_zero(u[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) m.set(i, j, f.mul(u[i], v[j]));
  }
  return m;
}

Vector flatten(const Matrix& m) { return m.data(); }

Matrix reshape(const Field& f, const Vector& v, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, v[i * cols + j]);
  return m;
}

Matrix column_basis(const Matrix& spanning) {
  RrefResult r = rref(spanning);
  return spanning.select_cols(r.pivots);
}

}  // namespace

// ---- SimplicialModule -------------------------------------------------------

SimplicialModule::SimplicialModule(Field field, int truncation, std::vector<std::size_t> ranks,
                                   std::vector<std::vector<Matrix>> faces,
                                   std::vector<std::vector<Matrix>> degeneracies)
    : field_(field),
      truncation_(truncation),
      ranks_(std::move(ranks)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  if (truncation_ < 0) throw ShapeError("truncation level must be non-negative");
  auto levels = static_cast<std::size_t>(truncation_ + 1);
  if (ranks_.size() != levels || faces_.size() != levels || degeneracies_.size() != levels) {
    throw ShapeError("simplicial module truncated at " + std::to_string(truncation_) + " needs " +
                     std::to_string(levels) + " levels of ranks, faces and degeneracies");
  }
  for (int n = 0; n <= truncation_; ++n) {
    std::size_t nfaces = n == 0 ? 0 : static_cast<std::size_t>(n + 1);
    std::size_t ndegs = n == truncation_ ? 0 : static_cast<std::size_t>(n + 1);
    if (faces_[n].size() != nfaces) throw ShapeError("wrong number of faces" + level_tag(n));
    if (degeneracies_[n].size() != ndegs) throw ShapeError("wrong number of degeneracies" + level_tag(n));
    for (const Matrix& d : faces_[n]) {
      if (!(d.field() == field_)) throw FieldMismatch("face over the wrong field");
      if (d.rows() != ranks_[n - 1] || d.cols() != ranks_[n]) throw ShapeError("face has wrong shape" + level_tag(n));
    }
    for (const Matrix& s : degeneracies_[n]) {
      if (!(s.field() == field_)) throw FieldMismatch("degeneracy over the wrong field");
      if (s.rows() != ranks_[n + 1] || s.cols() != ranks_[n]) {
        throw ShapeError("degeneracy has wrong shape" + level_tag(n));
      }
    }
  }
}

SimplicialModule SimplicialModule::constant(Field field, int truncation, std::size_t rank) {
  std::vector<std::vector<Matrix>> faces(truncation + 1), degs(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    if (n > 0) faces[n].assign(n + 1, Matrix::identity(field, rank));
    if (n < truncation) degs[n].assign(n + 1, Matrix::identity(field, rank));
  }
  return SimplicialModule(field, truncation, std::vector<std::size_t>(truncation + 1, rank), faces, degs);
}

SimplicialReport validate(const SimplicialModule& m) {
  SimplicialReport report;
  auto fail = [&](std::string what) {
    report.ok = false;
    report.failures.push_back(std::move(what));
  };
  auto name = [](char op, int i) { return std::string(1, op) + std::to_string(i); };
  int top = m.truncation();
  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= top; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (m.face(n - 1, i) * m.face(n, j) != m.face(n - 1, j - 1) * m.face(n, i)) {
          fail(name('d', i) + " " + name('d', j) + " = " + name('d', j - 1) + " " + name('d', i) + level_tag(n));
        }
      }
    }
  }
  // d_i s_j out of level n (into level n+1, back to n)
  for (int n = 0; n < top; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= n + 1; ++i) {
        Matrix lhs = m.face(n + 1, i) * m.degeneracy(n, j);
        Matrix rhs;
        std::string expect;
        if (i < j) {
          rhs = m.degeneracy(n - 1, j - 1) * m.face(n, i);
          expect = name('s', j - 1) + " " + name('d', i);
        } else if (i == j || i == j + 1) {
          rhs = Matrix::identity(m.field(), m.rank(n));
          expect = "id";
        } else {
          rhs = m.degeneracy(n - 1, j) * m.face(n, i - 1);
          expect = name('s', j) + " " + name('d', i - 1);
        }
        if (lhs != rhs) fail(name('d', i) + " " + name('s', j) + " = " + expect + level_tag(n));
      }
    }
  }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int n = 0; n + 2 <= top; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= j; ++i) {
        if (m.degeneracy(n + 1, i) * m.degeneracy(n, j) != m.degeneracy(n + 1, j + 1) * m.degeneracy(n, i)) {
          fail(name('s', i) + " " + name('s', j) + " = " + name('s', j + 1) + " " + name('s', i) + level_tag(n));
        }
      }
    }
  }
  return report;
}

// ---- SimplicialMap ----------------------------------------------------------

SimplicialMap::SimplicialMap(SimplicialModule source, SimplicialModule target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_compatible(source_, target_);
  if (components_.size() != static_cast<std::size_t>(source_.truncation() + 1)) {
    throw ShapeError("simplicial map needs one component per level");
  }
  for (int n = 0; n <= source_.truncation(); ++n) {
    const Matrix& c = components_[n];
    if (!(c.field() == source_.field())) throw FieldMismatch("component over the wrong field");
    if (c.rows() != target_.rank(n) || c.cols() != source_.rank(n)) {
      throw ShapeError("component has wrong shape" + level_tag(n));
    }
  }
}

SimplicialMap SimplicialMap::identity(const SimplicialModule& m) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= m.truncation(); ++n) comps.push_back(Matrix::identity(m.field(), m.rank(n)));
  return SimplicialMap(m, m, comps);
}

SimplicialMap SimplicialMap::zero(const SimplicialModule& source, const SimplicialModule& target) {
  require_compatible(source, target);
  std::vector<Matrix> comps;
  for (int n = 0; n <= source.truncation(); ++n) comps.emplace_back(source.field(), target.rank(n), source.rank(n));
  return SimplicialMap(source, target, comps);
}

std::vector<std::string> SimplicialMap::failures() const {
  std::vector<std::string> out;
  int top = source_.truncation();
  for (int n = 1; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) {
      if (components_[n - 1] * source_.face(n, i) != target_.face(n, i) * components_[n]) {
        out.push_back("face d" + std::to_string(i) + level_tag(n));
      }
    }
  }
  for (int n = 0; n < top; ++n) {
    for (int i = 0; i <= n; ++i) {
      if (components_[n + 1] * source_.degeneracy(n, i) != target_.degeneracy(n, i) * components_[n]) {
        out.push_back("degeneracy s" + std::to_string(i) + level_tag(n));
      }
    }
  }
  return out;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) throw ShapeError("simplicial maps are not composable");
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source().truncation(); ++n) comps.push_back(g.component(n) * f.component(n));
  return SimplicialMap(f.source(), g.target(), comps);
}

bool is_isomorphism(const SimplicialMap& f) { return inverse(f).has_value(); }

std::optional<SimplicialMap> inverse(const SimplicialMap& f) {
  std::vector<Matrix> comps;
  for (const Matrix& c : f.components()) {
    auto inv = dkcat::inverse(c);
    if (!inv) return std::nullopt;
    comps.push_back(*inv);
  }
  return SimplicialMap(f.target(), f.source(), comps);
}

SimplicialModule tensor(const SimplicialModule& a, const SimplicialModule& b) {
  require_compatible(a, b);
  int top = a.truncation();
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Matrix>> faces(top + 1), degs(top + 1);
  for (int n = 0; n <= top; ++n) {
    ranks.push_back(a.rank(n) * b.rank(n));
    if (n > 0) {
      for (int i = 0; i <= n; ++i) faces[n].push_back(kron(a.face(n, i), b.face(n, i)));
    }
    if (n < top) {
      for (int i = 0; i <= n; ++i) degs[n].push_back(kron(a.degeneracy(n, i), b.degeneracy(n, i)));
    }
  }
  return SimplicialModule(a.field(), top, ranks, faces, degs);
}

SimplicialMap tensor(const SimplicialMap& f, const SimplicialMap& g) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source().truncation(); ++n) comps.push_back(kron(f.component(n), g.component(n)));
  return SimplicialMap(tensor(f.source(), g.source()), tensor(f.target(), g.target()), comps);
}

SimplicialSum direct_sum(const SimplicialModule& a, const SimplicialModule& b) {
  require_compatible(a, b);
  const Field& f = a.field();
  int top = a.truncation();
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Matrix>> faces(top + 1), degs(top + 1);
  for (int n = 0; n <= top; ++n) {
    ranks.push_back(a.rank(n) + b.rank(n));
    if (n > 0) {
      for (int i = 0; i <= n; ++i) faces[n].push_back(Matrix::direct_sum(a.face(n, i), b.face(n, i)));
    }
    if (n < top) {
      for (int i = 0; i <= n; ++i) degs[n].push_back(Matrix::direct_sum(a.degeneracy(n, i), b.degeneracy(n, i)));
    }
  }
  SimplicialModule sum(f, top, ranks, faces, degs);
  std::vector<Matrix> in1, in2, pr1, pr2;
  for (int n = 0; n <= top; ++n) {
    Matrix i1(f, ranks[n], a.rank(n)), i2(f, ranks[n], b.rank(n));
    i1.set_block(0, 0, Matrix::identity(f, a.rank(n)));
    i2.set_block(a.rank(n), 0, Matrix::identity(f, b.rank(n)));
    in1.push_back(i1);
    in2.push_back(i2);
    pr1.push_back(i1.transpose());
    pr2.push_back(i2.transpose());
  }
  return {sum, SimplicialMap(a, sum, in1), SimplicialMap(b, sum, in2), SimplicialMap(sum, a, pr1),
          SimplicialMap(sum, b, pr2)};
}

SimplicialMap pairing(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.source() == g.source())) throw ShapeError("pairing needs a common source");
  SimplicialSum t = direct_sum(f.target(), g.target());
  std::vector<Matrix> comps;
  for (int n = 0; n <= f.source().truncation(); ++n) comps.push_back(Matrix::vstack(f.component(n), g.component(n)));
  return SimplicialMap(f.source(), t.sum, comps);
}

SimplicialMap conjugate(const SimplicialModule& m, const std::vector<Matrix>& isos) {
  int top = m.truncation();
  if (isos.size() != static_cast<std::size_t>(top + 1)) throw ShapeError("need one isomorphism per level");
  std::vector<Matrix> inv;
  for (int n = 0; n <= top; ++n) {
    if (isos[n].rows() != m.rank(n) || isos[n].cols() != m.rank(n)) throw ShapeError("isomorphism has wrong shape");
    auto i = inverse(isos[n]);
    if (!i) throw StructuralError("level " + std::to_string(n) + " matrix is not invertible");
    inv.push_back(*i);
  }
  std::vector<std::vector<Matrix>> faces(top + 1), degs(top + 1);
  for (int n = 0; n <= top; ++n) {
    if (n > 0) {
      for (int i = 0; i <= n; ++i) faces[n].push_back(isos[n - 1] * m.face(n, i) * inv[n]);
    }
    if (n < top) {
      for (int i = 0; i <= n; ++i) degs[n].push_back(isos[n + 1] * m.degeneracy(n, i) * inv[n]);
    }
  }
  SimplicialModule out(m.field(), top, m.ranks(), faces, degs);
  return SimplicialMap(m, out, isos);
}

// ---- normalization ----------------------------------------------------------

Normalization normalization(const SimplicialModule& m) {
  const Field& f = m.field();
  int top = m.truncation();
  Normalization out;
  for (int n = 0; n <= top; ++n) {
    Matrix constraints(f, 0, m.rank(n));
    for (int i = 1; i <= n; ++i) constraints = Matrix::vstack(constraints, m.face(n, i));
    out.cycles.emplace_back(constraints);

    const Matrix& nb = out.cycles.back().basis();
    Matrix degenerate(f, m.rank(n), 0);
    for (int j = 0; j < n; ++j) degenerate = Matrix::hstack(degenerate, m.degeneracy(n - 1, j));
    Matrix both = Matrix::hstack(nb, column_basis(degenerate));
    auto inv = inverse(both);
    if (!inv) {
      throw StructuralError("level " + std::to_string(n) +
                            " is not the direct sum of normalized and degenerate parts");
    }
    out.projections.push_back(inv->block(0, 0, nb.cols(), m.rank(n)));
  }
  std::vector<std::size_t> ranks;
  std::vector<Matrix> bs;
  for (int n = 0; n <= top; ++n) {
    ranks.push_back(out.cycles[n].dim());
    if (n > 0) bs.push_back(out.cycles[n - 1].coordinates(m.face(n, 0) * out.cycles[n].basis()));
  }
  out.complex = ChainComplex(f, ranks, bs);
  return out;
}

ChainComplex normalize(const SimplicialModule& m) { return normalization(m).complex; }

ChainMap normalize(const SimplicialMap& f) {
  return normalize(f, normalization(f.source()), normalization(f.target()));
}

ChainMap normalize(const SimplicialMap& f, const Normalization& source, const Normalization& target) {
  std::vector<Matrix> comps;
  for (int n = 0; n <= source.complex.top(); ++n) {
    comps.push_back(target.cycles[n].coordinates(f.component(n) * source.cycles[n].basis()));
  }
  return ChainMap(source.complex, target.complex, comps);
}

// ---- Gamma ------------------------------------------------------------------

std::vector<GammaSummand> gamma_summands(const ChainComplex& c, int n) {
  if (n > 30) throw ShapeError("level too large for the surjection encoding");
  std::vector<GammaSummand> out;
  std::size_t offset = 0;
  for (int m = 0; m <= std::min(n, c.top()); ++m) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != m) continue;
      out.push_back({m, mask, offset});
      offset += c.rank(m);
    }
  }
  return out;
}

namespace {

struct SummandIndex {
  std::vector<GammaSummand> list;
  std::map<std::pair<int, std::uint32_t>, std::size_t> offsets;
  std::size_t total = 0;

  SummandIndex(const ChainComplex& c, int n) : list(gamma_summands(c, n)) {
    for (const auto& s : list) offsets[{s.m, s.mask}] = s.offset;
    total = list.empty() ? 0 : list.back().offset + c.rank(list.back().m);
  }
};

// Sends the sigma-summand along theta^*, where sigma o theta = g.
void place_operator(const ChainComplex& c, const Monotone& g, int m, const SummandIndex& target,
                    std::size_t source_offset, Matrix& out) {
  std::vector<bool> hit(m + 1, false);
  for (int v : g) hit[v] = true;
  bool full = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  if (full) {
    out.set_block(target.offsets.at({m, mask_of(g)}), source_offset, Matrix::identity(c.field(), c.rank(m)));
    return;
  }
  bool misses_only_zero = m >= 1 && !hit[0] && std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; });
  if (misses_only_zero) {
    Monotone eps = g;
    for (int& v : eps) --v;
    out.set_block(target.offsets.at({m - 1, mask_of(eps)}), source_offset, c.boundary(m));
  }
}

}  // namespace

SimplicialModule gamma(const ChainComplex& c, int truncation) {
  if (truncation < c.top()) {
    throw ShapeError("truncation " + std::to_string(truncation) + " is below the top degree " +
                     std::to_string(c.top()) + " of the complex");
  }
  std::vector<SummandIndex> levels;
  for (int n = 0; n <= truncation; ++n) levels.emplace_back(c, n);
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Matrix>> faces(truncation + 1), degs(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    ranks.push_back(levels[n].total);
    if (n > 0) {
      for (int i = 0; i <= n; ++i) {
        Matrix d(c.field(), levels[n - 1].total, levels[n].total);
        for (const auto& s : levels[n].list) {
          place_operator(c, after_coface(surjection(n, s.mask), i), s.m, levels[n - 1], s.offset, d);
        }
        faces[n].push_back(d);
      }
    }
    if (n < truncation) {
      for (int i = 0; i <= n; ++i) {
        Matrix sm(c.field(), levels[n + 1].total, levels[n].total);
        for (const auto& s : levels[n].list) {
          place_operator(c, after_codegeneracy(surjection(n, s.mask), i), s.m, levels[n + 1], s.offset, sm);
        }
        degs[n].push_back(sm);
      }
    }
  }
  return SimplicialModule(c.field(), truncation, ranks, faces, degs);
}

SimplicialMap gamma(const ChainMap& f, int truncation) {
  SimplicialModule src = gamma(f.source(), truncation);
  SimplicialModule tgt = gamma(f.target(), truncation);
  std::vector<Matrix> comps;
  for (int n = 0; n <= truncation; ++n) {
    SummandIndex si(f.source(), n), ti(f.target(), n);
    Matrix m(f.field(), ti.total, si.total);
    for (const auto& s : si.list) {
      auto it = ti.offsets.find({s.m, s.mask});
      if (it != ti.offsets.end()) m.set_block(it->second, s.offset, f.component(s.m));
    }
    comps.push_back(m);
  }
  return SimplicialMap(src, tgt, comps);
}

Matrix degeneracy_operator(const SimplicialModule& m, int n, std::uint32_t mask) {
  int target = std::popcount(mask);
  if (n == target) return Matrix::identity(m.field(), m.rank(n));
  int j = 0;
  while ((mask >> j) & 1u) ++j;
  return m.degeneracy(n - 1, j) * degeneracy_operator(m, n - 1, remove_bit(mask, j));
}

SimplicialMap dold_kan_iso(const SimplicialModule& m) {
  Normalization nm = normalization(m);
  SimplicialModule gn = gamma(nm.complex, m.truncation());
  std::vector<Matrix> comps;
  for (int n = 0; n <= m.truncation(); ++n) {
    Matrix psi(m.field(), m.rank(n), gn.rank(n));
    for (const auto& s : gamma_summands(nm.complex, n)) {
      psi.set_block(0, s.offset, degeneracy_operator(m, n, s.mask) * nm.cycles[s.m].basis());
    }
    comps.push_back(psi);
  }
  return SimplicialMap(gn, m, comps);
}

// ---- shuffle and Alexander-Whitney -------------------------------------------

namespace {

// sum over (p,q)-shuffles of sign * s_nu(a) (x) s_mu(b), as an A_n x B_n matrix.
Matrix shuffle_terms(const SimplicialModule& a, const SimplicialModule& b, const Vector& av, int p,
                     const Vector& bv, int q, ShuffleSigns signs) {
  const Field& f = a.field();
  int n = p + q;
  Matrix out(f, a.rank(n), b.rank(n));
  for (std::uint32_t mu = 0; mu < (1u << n); ++mu) {
    if (std::popcount(mu) != p) continue;
    Vector x = av, y = bv;
    int xl = p, yl = q;
    int inversions = 0, nu_seen = 0;
    for (int k = 0; k < n; ++k) {
      if ((mu >> k) & 1u) {
        y = b.degeneracy(yl, k).apply(y);
        ++yl;
        inversions += nu_seen;
      } else {
        x = a.degeneracy(xl, k).apply(x);
        ++xl;
        ++nu_seen;
      }
    }
    Matrix term = outer(f, x, y);
    bool negative = signs == ShuffleSigns::standard && inversions % 2 == 1;
    out = negative ? out - term : out + term;
  }
  return out;
}

// front p-face d_{p+1} ... d_n : M_n -> M_p
Matrix front_face(const SimplicialModule& m, int n, int p) {
  Matrix out = Matrix::identity(m.field(), m.rank(n));
  for (int k = n; k > p; --k) out = m.face(k, k) * out;
  return out;
}

// back face d_0^{n-q} : M_n -> M_q
Matrix back_face(const SimplicialModule& m, int n, int q) {
  Matrix out = Matrix::identity(m.field(), m.rank(n));
  for (int k = n; k > q; --k) out = m.face(k, 0) * out;
  return out;
}

// AW of an A_n x B_n element into N(A) (x) N(B) coordinates of degree n.
Vector aw_coordinates(const SimplicialModule& a, const SimplicialModule& b, const Normalization& na,
                      const Normalization& nb, const ChainComplex& tensor_complex, int n, const Matrix& x) {
  Vector out(tensor_complex.rank(n), a.field().zero());
  for (int p = 0; p <= n; ++p) {
    int q = n - p;
    Matrix y = na.projections[p] * front_face(a, n, p) * x * (nb.projections[q] * back_face(b, n, q)).transpose();
    std::size_t off = tensor_offset(na.complex, nb.complex, n, p);
    const Vector& flat = y.data();
    for (std::size_t k = 0; k < flat.size(); ++k) out[off + k] = flat[k];
  }
  return out;
}

template <typename Visit>
void for_each_tensor_basis(const Normalization& na, const Normalization& nb, int n, Visit visit) {
  for (int p = 0; p <= n; ++p) {
    int q = n - p;
    if (p > na.complex.top() || q > nb.complex.top()) continue;
    const Matrix& ba = na.cycles[p].basis();
    const Matrix& bb = nb.cycles[q].basis();
    std::size_t off = tensor_offset(na.complex, nb.complex, n, p);
    for (std::size_t i = 0; i < ba.cols(); ++i) {
      for (std::size_t j = 0; j < bb.cols(); ++j) visit(p, ba.col(i), bb.col(j), off + i * bb.cols() + j);
    }
  }
}

}  // namespace

ChainMap shuffle(const SimplicialModule& a, const SimplicialModule& b, ShuffleSigns signs) {
  require_compatible(a, b);
  int top = a.truncation();
  Normalization na = normalization(a), nb = normalization(b);
  SimplicialModule ab = tensor(a, b);
  Normalization nab = normalization(ab);
  ChainComplex src = truncate(tensor(na.complex, nb.complex), top);
  std::vector<Matrix> comps;
  for (int n = 0; n <= src.top(); ++n) {
    Matrix m(a.field(), nab.complex.rank(n), src.rank(n));
    for_each_tensor_basis(na, nb, n, [&](int p, const Vector& av, const Vector& bv, std::size_t col) {
      Vector v = nab.projections[n].apply(flatten(shuffle_terms(a, b, av, p, bv, n - p, signs)));
      for (std::size_t r = 0; r < v.size(); ++r) m.set(r, col, v[r]);
    });
    comps.push_back(m);
  }
  return ChainMap(src, nab.complex, comps);
}

ChainMap alexander_whitney(const SimplicialModule& a, const SimplicialModule& b) {
  require_compatible(a, b);
  int top = a.truncation();
  Normalization na = normalization(a), nb = normalization(b);
  SimplicialModule ab = tensor(a, b);
  Normalization nab = normalization(ab);
  ChainComplex tgt = truncate(tensor(na.complex, nb.complex), top);
  std::vector<Matrix> comps;
  for (int n = 0; n <= nab.complex.top(); ++n) {
    Matrix m(a.field(), tgt.rank(n), nab.complex.rank(n));
    const Matrix& basis = nab.cycles[n].basis();
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      Matrix x = reshape(a.field(), basis.col(c), a.rank(n), b.rank(n));
      Vector v = aw_coordinates(a, b, na, nb, tgt, n, x);
      for (std::size_t r = 0; r < v.size(); ++r) m.set(r, c, v[r]);
    }
    comps.push_back(m);
  }
  return ChainMap(nab.complex, tgt, comps);
}

ChainMap aw_after_shuffle(const SimplicialModule& a, const SimplicialModule& b, const Normalization& na,
                          const Normalization& nb, ShuffleSigns signs) {
  require_compatible(a, b);
  ChainComplex c = truncate(tensor(na.complex, nb.complex), a.truncation());
  std::vector<Matrix> comps;
  for (int n = 0; n <= c.top(); ++n) {
    Matrix m(a.field(), c.rank(n), c.rank(n));
    for_each_tensor_basis(na, nb, n, [&](int p, const Vector& av, const Vector& bv, std::size_t col) {
      Vector v = aw_coordinates(a, b, na, nb, c, n, shuffle_terms(a, b, av, p, bv, n - p, signs));
      for (std::size_t r = 0; r < v.size(); ++r) m.set(r, col, v[r]);
    });
    comps.push_back(m);
  }
  return ChainMap(c, c, comps);
}

int shuffle_chain_failure(const SimplicialModule& a, const SimplicialModule& b, const Normalization& na,
                          const Normalization& nb, ShuffleSigns signs) {
  require_compatible(a, b);
  const Field& f = a.field();
  int top = a.truncation();
  for (int n = 1; n <= top; ++n) {
    bool ok = true;
    for_each_tensor_basis(na, nb, n, [&](int p, const Vector& av, const Vector& bv, std::size_t) {
      if (!ok) return;
      int q = n - p;
      Matrix x = shuffle_terms(a, b, av, p, bv, q, signs);
      Matrix lhs(f, a.rank(n - 1), b.rank(n - 1));
      for (int i = 0; i <= n; ++i) {
        Matrix t = a.face(n, i) * x * b.face(n, i).transpose();
        lhs = i % 2 == 0 ? lhs + t : lhs - t;
      }
      Matrix rhs(f, a.rank(n - 1), b.rank(n - 1));
      if (p > 0) rhs = rhs + shuffle_terms(a, b, a.face(p, 0).apply(av), p - 1, bv, q, signs);
      if (q > 0) {
        Matrix t = shuffle_terms(a, b, av, p, b.face(q, 0).apply(bv), q - 1, signs);
        rhs = p % 2 == 0 ? rhs + t : rhs - t;
      }
      ok = lhs == rhs;
    });
    if (!ok) return n;
  }
  return -1;
}

// ---- model structure ---------------------------------------------------------

bool is_weak_equivalence(const SimplicialMap& f) { return is_quasi_iso(normalize(f)); }

bool is_fibration(const SimplicialMap& f) { return is_fibration(normalize(f)); }

bool is_cofibration(const SimplicialMap& f) {
  for (const Matrix& c : f.components()) {
    if (rank(c) != c.cols()) return false;
  }
  return true;
}

bool is_trivial_fibration(const SimplicialMap& f) { return is_trivial_fibration(normalize(f)); }

SimplicialPushout pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.source() == g.source())) throw ShapeError("pushout legs need a common source");
  const SimplicialModule& a = f.target();
  const SimplicialModule& b = g.target();
  require_compatible(a, b);
  int top = a.truncation();
  const Field& fd = a.field();
  SimplicialPushout out;
  for (int n = 0; n <= top; ++n) {
    out.spaces.emplace_back(fd, a.rank(n) + b.rank(n), Matrix::vstack(f.component(n), -g.component(n)));
  }
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Matrix>> faces(top + 1), degs(top + 1);
  for (int n = 0; n <= top; ++n) {
    ranks.push_back(out.spaces[n].dim());
    if (n > 0) {
      for (int i = 0; i <= n; ++i) {
        faces[n].push_back(out.spaces[n - 1].projection() * Matrix::direct_sum(a.face(n, i), b.face(n, i)) *
                           out.spaces[n].section());
      }
    }
    if (n < top) {
      for (int i = 0; i <= n; ++i) {
        degs[n].push_back(out.spaces[n + 1].projection() *
                          Matrix::direct_sum(a.degeneracy(n, i), b.degeneracy(n, i)) * out.spaces[n].section());
      }
    }
  }
  out.module = SimplicialModule(fd, top, ranks, faces, degs);
  std::vector<Matrix> c1, c2;
  for (int n = 0; n <= top; ++n) {
    const Matrix& pr = out.spaces[n].projection();
    c1.push_back(pr.block(0, 0, pr.rows(), a.rank(n)));
    c2.push_back(pr.block(0, a.rank(n), pr.rows(), b.rank(n)));
  }
  out.in1 = SimplicialMap(a, out.module, c1);
  out.in2 = SimplicialMap(b, out.module, c2);
  return out;
}

SimplicialMap induced_from_pushout(const SimplicialPushout& po, const SimplicialMap& x, const SimplicialMap& y) {
  if (!(x.source() == po.in1.source()) || !(y.source() == po.in2.source()) || !(x.target() == y.target())) {
    throw ShapeError("cocone does not match the pushout");
  }
  std::vector<Matrix> comps;
  for (int n = 0; n <= po.module.truncation(); ++n) {
    Matrix both = Matrix::hstack(x.component(n), y.component(n));
    Matrix c = both * po.spaces[n].section();
    if (c * po.spaces[n].projection() != both) {
      throw StructuralError("cocone legs disagree on the common source" + level_tag(n));
    }
    comps.push_back(c);
  }
  return SimplicialMap(po.module, x.target(), comps);
}

// ---- simplicial sets ---------------------------------------------------------

SimplicialModule free_module(Field field, const FiniteSimplicialSet& x) {
  int top = x.truncation;
  if (x.sizes.size() != static_cast<std::size_t>(top + 1) || x.faces.size() != x.sizes.size() ||
      x.degeneracies.size() != x.sizes.size()) {
    throw ShapeError("simplicial set tables do not match its truncation");
  }
  auto table_matrix = [&](const std::vector<std::size_t>& table, std::size_t rows, std::size_t cols) {
    if (table.size() != cols) throw ShapeError("simplicial set table has the wrong length");
    Matrix m(field, rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      if (table[c] >= rows) throw ShapeError("simplicial set table entry out of range");
      m.set(table[c], c, field.one());
    }
    return m;
  };
  std::vector<std::vector<Matrix>> faces(top + 1), degs(top + 1);
  for (int n = 0; n <= top; ++n) {
    if (n > 0) {
      if (x.faces[n].size() != static_cast<std::size_t>(n + 1)) throw ShapeError("wrong number of face tables");
      for (const auto& t : x.faces[n]) faces[n].push_back(table_matrix(t, x.sizes[n - 1], x.sizes[n]));
    }
    if (n < top) {
      if (x.degeneracies[n].size() != static_cast<std::size_t>(n + 1)) {
        throw ShapeError("wrong number of degeneracy tables");
      }
      for (const auto& t : x.degeneracies[n]) degs[n].push_back(table_matrix(t, x.sizes[n + 1], x.sizes[n]));
    }
  }
  return SimplicialModule(field, top, x.sizes, faces, degs);
}

// Distinct simplices give distinct basis vectors, so an identity between
// functions holds exactly when it holds between their 0/1 matrices.
SimplicialReport validate(const FiniteSimplicialSet& x) {
  try {
    return validate(free_module(Field::prime(2), x));
  } catch (const ShapeError& e) {
    return {false, {e.what()}};
  }
}

FiniteSimplicialSet standard_simplex(int k, int truncation) {
  if (k < 0 || truncation < 0) throw ShapeError("standard simplex needs k >= 0 and truncation >= 0");
  std::vector<std::vector<Monotone>> levels(truncation + 1);
  std::vector<std::map<Monotone, std::size_t>> index(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    Monotone seq(n + 1, 0);
    while (true) {
      index[n][seq] = levels[n].size();
      levels[n].push_back(seq);
      int pos = n;
      while (pos >= 0 && seq[pos] == k) --pos;
      if (pos < 0) break;
      int v = seq[pos] + 1;
      for (int t = pos; t <= n; ++t) seq[t] = v;
    }
  }
  FiniteSimplicialSet x;
  x.truncation = truncation;
  x.faces.resize(truncation + 1);
  x.degeneracies.resize(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    x.sizes.push_back(levels[n].size());
    if (n > 0) {
      for (int i = 0; i <= n; ++i) {
        std::vector<std::size_t> t;
        for (const auto& s : levels[n]) {
          Monotone d = s;
          d.erase(d.begin() + i);
          t.push_back(index[n - 1].at(d));
        }
        x.faces[n].push_back(t);
      }
    }
    if (n < truncation) {
      for (int i = 0; i <= n; ++i) {
        std::vector<std::size_t> t;
        for (const auto& s : levels[n]) {
          Monotone d = s;
          d.insert(d.begin() + i, s[i]);
          t.push_back(index[n + 1].at(d));
        }
        x.degeneracies[n].push_back(t);
      }
    }
  }
  return x;
}

FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y) {
  if (x.truncation != y.truncation) throw ShapeError("simplicial sets truncated at different levels");
  FiniteSimplicialSet out;
  out.truncation = x.truncation;
  out.faces.resize(x.truncation + 1);
  out.degeneracies.resize(x.truncation + 1);
  auto combine = [&](const std::vector<std::size_t>& tx, const std::vector<std::size_t>& ty, std::size_t ysize) {
    std::vector<std::size_t> t;
    for (std::size_t a : tx)
      for (std::size_t b : ty) t.push_back(a * ysize + b);
    return t;
  };
  for (int n = 0; n <= x.truncation; ++n) {
    out.sizes.push_back(x.sizes[n] * y.sizes[n]);
    if (n > 0) {
      for (int i = 0; i <= n; ++i) out.faces[n].push_back(combine(x.faces[n][i], y.faces[n][i], y.sizes[n - 1]));
    }
    if (n < x.truncation) {
      for (int i = 0; i <= n; ++i) {
        out.degeneracies[n].push_back(combine(x.degeneracies[n][i], y.degeneracies[n][i], y.sizes[n + 1]));
      }
    }
  }
  return out;
}

// ---- pi_0 ----------------------------------------------------------------------

std::uint64_t encode(const Field& f, const Vector& v) {
  auto p = static_cast<std::uint64_t>(f.characteristic());
  std::uint64_t code = 0, weight = 1;
  for (const Scalar& s : v) {
    code += static_cast<std::uint64_t>(s.num) * weight;
    weight *= p;
  }
  return code;
}

Vector decode(const Field& f, std::uint64_t code, std::size_t dim) {
  auto p = static_cast<std::uint64_t>(f.characteristic());
  Vector v;
  for (std::size_t i = 0; i < dim; ++i) {
    v.push_back(f.from_int(static_cast<std::int64_t>(code % p)));
    code /= p;
  }
  return v;
}

namespace {

std::uint64_t element_count(const Field& f, std::size_t dim, std::uint64_t limit) {
  auto p = static_cast<std::uint64_t>(f.characteristic());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= p;
    if (total > limit) {
      throw Error("enumeration needs more than " + std::to_string(limit) + " elements");
    }
  }
  return total;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Pi0 pi0_underlying(const SimplicialModule& m, std::uint64_t max_elements) {
  const Field& f = m.field();
  if (!f.is_prime_field()) throw UnsupportedField("pi_0 of the underlying simplicial set needs a finite field");
  std::uint64_t n0 = element_count(f, m.rank(0), max_elements);
  std::vector<std::size_t> parent(n0);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  if (m.truncation() >= 1) {
    std::uint64_t n1 = element_count(f, m.rank(1), max_elements);
    const Matrix& d0 = m.face(1, 0);
    const Matrix& d1 = m.face(1, 1);
    for (std::uint64_t z = 0; z < n1; ++z) {
      Vector v = decode(f, z, m.rank(1));
      std::size_t a = find_root(parent, encode(f, d1.apply(v)));
      std::size_t b = find_root(parent, encode(f, d0.apply(v)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Roots are always the smallest code of their class.
  Pi0 out;
  out.class_of_code.resize(n0);
  std::map<std::size_t, std::size_t> class_index;
  for (std::uint64_t x = 0; x < n0; ++x) {
    std::size_t r = find_root(parent, x);
    auto [it, inserted] = class_index.emplace(r, out.representatives.size());
    if (inserted) out.representatives.push_back(r);
    out.class_of_code[x] = it->second;
  }
  return out;
}

EtaReport check_eta(const SimplicialModule& m) {
  const Field& f = m.field();
  if (!f.is_prime_field()) throw UnsupportedField("the comparison with pi_0 needs a finite field");
  Pi0 pi = pi0_underlying(m);
  Normalization nm = normalization(m);
  Homology h(nm.complex);
  EtaReport report;
  report.pi0_classes = pi.size();
  Matrix reps = h.top() >= 0 ? nm.cycles[0].basis() * h.degree(0).representatives : Matrix(f, m.rank(0), 0);
  std::uint64_t classes = element_count(f, reps.cols(), std::uint64_t{1} << 22);
  report.h0_classes = classes;
  std::vector<bool> seen(pi.size(), false);
  bool injective = true;
  for (std::uint64_t code = 0; code < classes; ++code) {
    Vector x = reps.apply(decode(f, code, reps.cols()));
    std::size_t image = pi.class_of_code[encode(f, x)];
    if (seen[image]) injective = false;
    seen[image] = true;
    report.images.push_back(image);
  }
  report.bijective = injective && classes == pi.size();
  return report;
}

}  // namespace dkcat
