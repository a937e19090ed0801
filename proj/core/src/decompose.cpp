#include <cstdint>
#include <functional>

#include "g2/proofkit.hpp"

namespace g2 {

namespace {

constexpr std::size_t kUnknowns = kDim * kDim;
constexpr std::int64_t kMaxCandidates = 4096;

/// Index arithmetic of a small finite field.
struct FieldTables {
  std::int64_t n = 0;
  int zero = 0, one = 0;
  std::vector<int> add, mul, neg, inv;

  explicit FieldTables(const Ring& r) : n(*r->size()) {
    const auto els = r->elements();
    zero = static_cast<int>(r->index_of(r->zero()));
    one = static_cast<int>(r->index_of(r->one()));
    add.resize(static_cast<std::size_t>(n * n));
    mul.resize(static_cast<std::size_t>(n * n));
    neg.resize(static_cast<std::size_t>(n));
    inv.assign(static_cast<std::size_t>(n), -1);
    for (std::int64_t a = 0; a < n; ++a) {
      const auto& x = els[static_cast<std::size_t>(a)];
      neg[static_cast<std::size_t>(a)] = static_cast<int>(r->index_of(r->neg(x)));
      if (auto i = r->inverse(x)) inv[static_cast<std::size_t>(a)] = static_cast<int>(r->index_of(*i));
      for (std::int64_t b = 0; b < n; ++b) {
        const auto& y = els[static_cast<std::size_t>(b)];
        add[static_cast<std::size_t>(a * n + b)] = static_cast<int>(r->index_of(r->add(x, y)));
        mul[static_cast<std::size_t>(a * n + b)] = static_cast<int>(r->index_of(r->mul(x, y)));
      }
    }
  }
  int plus(int a, int b) const { return add[static_cast<std::size_t>(a * n + b)]; }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a * n + b)]; }
  int minus(int a) const { return neg[static_cast<std::size_t>(a)]; }
  int reciprocal(int a) const { return inv[static_cast<std::size_t>(a)]; }

  /// row -= c * pivot
  void axpy(std::vector<int>& row, int c, const std::vector<int>& pivot) const {
    const int mc = minus(c);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (pivot[k] != zero) row[k] = plus(row[k], times(mc, pivot[k]));
    }
  }
  void scale(std::vector<int>& row, int c) const {
    for (auto& v : row) v = times(c, v);
  }
};

using IndexMatrix = std::vector<int>;  // kDim * kDim

IndexMatrix to_indices(const Matrix& m) {
  IndexMatrix out(kUnknowns);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) out[i * kDim + j] = static_cast<int>(m.ring()->index_of(m(i, j)));
  }
  return out;
}

Matrix from_indices(const Ring& r, const IndexMatrix& m) {
  Matrix out(r);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) out.set(i, j, r->element(m[i * kDim + j]));
  }
  return out;
}

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<IndexMatrix> invert(const FieldTables& f, const IndexMatrix& m) {
  std::vector<std::vector<int>> rows(kDim, std::vector<int>(2 * kDim, f.zero));
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) rows[i][j] = m[i * kDim + j];
    rows[i][kDim + i] = f.one;
  }
  for (std::size_t c = 0; c < kDim; ++c) {
    std::size_t p = c;
    while (p < kDim && rows[p][c] == f.zero) ++p;
    if (p == kDim) return std::nullopt;
    std::swap(rows[p], rows[c]);
    f.scale(rows[c], f.reciprocal(rows[c][c]));
    for (std::size_t i = 0; i < kDim; ++i) {
      if (i != c && rows[i][c] != f.zero) f.axpy(rows[i], rows[i][c], rows[c]);
    }
  }
  IndexMatrix out(kUnknowns);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) out[i * kDim + j] = rows[i][kDim + j];
  }
  return out;
}

/// Solutions g of g * X_a = Phi_a * g for all generators, as a kernel basis.
std::vector<std::vector<int>> conjugacy_kernel(const FieldTables& f, const std::vector<IndexMatrix>& x,
                                               const std::vector<IndexMatrix>& phi) {
  std::vector<std::vector<int>> pivots;
  std::vector<std::size_t> pivot_col;
  for (std::size_t a = 0; a < x.size() && pivots.size() < kUnknowns; ++a) {
    for (std::size_t i = 0; i < kDim; ++i) {
      for (std::size_t j = 0; j < kDim; ++j) {
        std::vector<int> row(kUnknowns, f.zero);
        for (std::size_t k = 0; k < kDim; ++k) {
          auto& u = row[i * kDim + k];
          u = f.plus(u, x[a][k * kDim + j]);
          auto& v = row[k * kDim + j];
          v = f.plus(v, f.minus(phi[a][i * kDim + k]));
        }
        for (std::size_t p = 0; p < pivots.size(); ++p) {
          if (row[pivot_col[p]] != f.zero) f.axpy(row, row[pivot_col[p]], pivots[p]);
        }
        std::size_t c = 0;
        while (c < kUnknowns && row[c] == f.zero) ++c;
        if (c == kUnknowns) continue;
        f.scale(row, f.reciprocal(row[c]));
        for (auto& p : pivots) {
          if (p[c] != f.zero) f.axpy(p, p[c], row);
        }
        pivots.push_back(std::move(row));
        pivot_col.push_back(c);
      }
    }
  }
  std::vector<bool> is_pivot(kUnknowns, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (std::size_t free = 0; free < kUnknowns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(kUnknowns, f.zero);
    v[free] = f.one;
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivot_col[p]] = f.minus(pivots[p][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<GroupMatrix> linear_solve(const AutomorphismSpec& spec, const Chevalley& g) {
  const Ring& r = spec.ring;
  const FieldTables f(r);
  std::vector<IndexMatrix> x, phi;
  for (std::size_t k = 0; k < kRootCount; ++k) {
    x.push_back(to_indices(g.unipotent_matrix(all_roots()[k], r->one())));
    phi.push_back(to_indices(spec.images[k]));
  }
  const auto basis = conjugacy_kernel(f, x, phi);
  if (basis.empty()) return std::nullopt;
  std::int64_t total = 1;
  for (std::size_t i = 0; i < basis.size() && total <= kMaxCandidates; ++i) total *= f.n;
  if (total > kMaxCandidates) return std::nullopt;
  std::vector<int> coeff(basis.size(), 0);
  for (std::int64_t c = 1; c < total; ++c) {
    std::int64_t rest = c;
    for (auto& k : coeff) {
      k = static_cast<int>(rest % f.n);
      rest /= f.n;
    }
    IndexMatrix m(kUnknowns, f.zero);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeff[b] == f.zero) continue;
      for (std::size_t u = 0; u < kUnknowns; ++u) m[u] = f.plus(m[u], f.times(coeff[b], basis[b][u]));
    }
    if (auto inv = invert(f, m)) return GroupMatrix(from_indices(r, m), from_indices(r, *inv));
  }
  return std::nullopt;
}

bool conjugates_generators(const AutomorphismSpec& spec, const Chevalley& g, const GroupMatrix& h) {
  for (std::size_t k = 0; k < kRootCount; ++k) {
    if (!(h.conjugate(g.x(all_roots()[k], std::int64_t{1})).matrix() == spec.images[k])) return false;
  }
  return true;
}

std::optional<GroupMatrix> word_search(const AutomorphismSpec& spec, const Chevalley& g, const DecomposeOptions& opt) {
  const Ring& r = spec.ring;
  std::vector<GroupMatrix> letters;
  for (const auto& root : all_roots()) {
    for (const auto& t : r->elements()) {
      if (!r->is_zero(t)) letters.push_back(g.x(root, t));
    }
  }
  std::size_t visited = 0;
  std::function<std::optional<GroupMatrix>(const GroupMatrix&, int)> dfs = [&](const GroupMatrix& h, int depth) -> std::optional<GroupMatrix> {
    if (++visited > opt.word_budget) return std::nullopt;
    if (conjugates_generators(spec, g, h)) return h;
    if (depth == 0) return std::nullopt;
    for (const auto& l : letters) {
      if (auto found = dfs(h * l, depth - 1)) return found;
      if (visited > opt.word_budget) return std::nullopt;
    }
    return std::nullopt;
  };
  for (int d = 0; d <= opt.word_depth; ++d) {
    visited = 0;
    if (auto found = dfs(GroupMatrix::identity(r), d)) return found;
    if (visited > opt.word_budget) break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Root> first_failure(const AutomorphismSpec& spec, const Chevalley& g, const GroupMatrix& inner,
                                  const RingMap& rho) {
  const Ring& r = spec.ring;
  const auto elems = r->elements();
  for (std::size_t k = 0; k < kRootCount; ++k) {
    const Root& root = all_roots()[k];
    if (!(inner.conjugate(g.x(root, rho(r->one()))).matrix() == spec.images[k])) return root;
    if (!spec.table) continue;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!(inner.conjugate(g.x(root, rho(elems[i]))).matrix() == (*spec.table)[k][i])) return root;
    }
  }
  return std::nullopt;
}

DecompositionResult decompose_standard(const AutomorphismSpec& spec, const GeneratorRelations& rel,
                                       const DecomposeOptions& options) {
  const Ring& r = spec.ring;
  if (!r->is_finite()) throw Error(ErrorCode::NotFinite, "standardness is decided over finite rings only");
  if (spec.images.size() != kRootCount) throw Error(ErrorCode::InvalidArgument, "spec needs 12 generator images");
  const Chevalley g(rel.table(), r);

  std::optional<GroupMatrix> h;
  std::string method;
  const auto* fin = r.as<FiniteRing>();
  if (fin && fin->is_field()) {
    h = linear_solve(spec, g);
    method = "linear";
  }
  if (!h) {
    h = word_search(spec, g, options);
    method = "word";
  }
  if (!h) {
    throw Error(ErrorCode::SearchExhausted, "no conjugating element found up to word depth " +
                                                std::to_string(options.word_depth));
  }

  RingMap rho = RingMap::identity(r);
  if (spec.table) {
    const GroupMatrix hi = h->inverse();
    AutomorphismSpec psi{r, {}, std::vector<std::vector<Matrix>>{}, std::nullopt, std::nullopt};
    for (std::size_t k = 0; k < kRootCount; ++k) {
      psi.images.push_back((hi.matrix() * spec.images[k]) * h->matrix());
      std::vector<Matrix> row;
      for (const auto& m : (*spec.table)[k]) row.push_back((hi.matrix() * m) * h->matrix());
      psi.table->push_back(std::move(row));
    }
    rho = extract_rho(psi, rel);
  }
  auto failed = first_failure(spec, g, *h, rho);
  return {*h, rho, failed, method};
}

}  // namespace g2
