#include "g2/proofkit.hpp"

#include <algorithm>
#include <set>

#include "g2/localize.hpp"

namespace g2 {

namespace {

Matrix times_int(const Matrix& m, std::int64_t k) { return m.scaled(m.ring()->from_int(k)); }

std::string describe(const std::optional<std::pair<std::size_t, std::size_t>>& d, const Matrix& a, const Matrix& b) {
  if (!d) return {};
  const auto& r = a.ring();
  return "entry (" + std::to_string(d->first) + "," + std::to_string(d->second) + "): " +
         r->format(a(d->first, d->second)) + " vs " + r->format(b(d->first, d->second));
}

Value inverse_of_3(const Ring& r) {
  auto inv = r->inverse(r->from_int(3));
  if (!inv) throw Error(ErrorCode::ThreeNotInvertible, "3 not invertible in " + r.descriptor());
  return *inv;
}

Matrix matrix_pow(const Matrix& m, std::int64_t e) {
  Matrix result = Matrix::identity(m.ring());
  Matrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntMatrix int_unipotent(const DividedPowers& d, std::int64_t t) {
  return identity_int() + scaled(d.x, t) + scaled(d.x2, t * t) + scaled(d.x3, t * t * t);
}

Matrix divide_entries(const Matrix& m, std::int64_t d) {
  const auto& r = m.ring();
  const Value dv = r->from_int(d);
  return m.map(r, [&](const Value& v) { return r->divide_exact(v, dv); });
}

Value random_nonzero(const Ring& r, std::mt19937_64& rng) {
  const auto n = *r->size();
  std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
  for (;;) {
    Value v = r->element(pick(rng));
    if (!r->is_zero(v)) return v;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Matrix root_pair_unit(const Ring& r, const Root& alpha) {
  Matrix m(r);
  m.set(basis_index(alpha), basis_index(-alpha), r->one());
  return m;
}

LongRecovery recover_X_long(const Chevalley& g, const Root& alpha) {
  if (!alpha.is_long()) throw Error(ErrorCode::InvalidArgument, to_string(alpha) + " is not long");
  const Ring& r = g.ring();
  const Matrix e = Matrix::identity(r);
  const Matrix unit = root_pair_unit(r, alpha);
  LongRecovery out{alpha, {}, Matrix(r)};
  std::optional<Matrix> first_square;
  for (const auto& gamma : all_roots()) {
    const Root beta{alpha.a - gamma.a, alpha.b - gamma.b};
    if (!gamma.is_long() || !is_root(beta) || !beta.is_long()) continue;
    const Matrix xg = g.unipotent_matrix(gamma, r->one()), xb = g.unipotent_matrix(beta, r->one());
    const Matrix m = xg * xb - xg - xb + e;
    const Matrix sq = m * m;
    int sign = 0;
    if (sq == unit) sign = 1;
    else if (sq == -unit) sign = -1;
    out.squares.push_back({gamma, beta, sign});
    if (!first_square) first_square = sq;
  }
  if (out.squares.empty()) throw Error(ErrorCode::NoLongDecomposition, "no long pair sums to " + to_string(alpha));
  const auto& first = out.squares.front();
  if (first.sign == 0) throw Error(ErrorCode::NotExact, "square for " + root_key(alpha) + " is not +-E_(a,-a)");
  // X^2/2 = -E_(a,-a) and the square is sign * E_(a,-a)
  out.X = g.unipotent_matrix(alpha, r->one()) - e + first_square->scaled(r->from_int(first.sign));
  return out;
}

ShortData recover_short_data(const Chevalley& g, const Root& beta) {
  const Ring& r = g.ring();
  const Value third = inverse_of_3(r);
  const Matrix e = Matrix::identity(r);
  const Matrix xp = g.unipotent_matrix(beta, r->from_int(1));
  const Matrix xm = g.unipotent_matrix(beta, r->from_int(-1));
  const Matrix x2 = g.unipotent_matrix(beta, r->from_int(2));
  ShortData d{beta, xm + xp - times_int(e, 2), (-x2 - times_int(xm, 2)).scaled(third) - e + times_int(xp, 2),
              -xp - xm.scaled(third) + x2.scaled(third) + e, false};
  d.eq2_consistent = d.Xcube3 == xp - xm - d.twoX;
  return d;
}

std::vector<IdentityCheck> check_short_identities(const Chevalley& g, const Root& beta) {
  const Ring& r = g.ring();
  const ShortData d = recover_short_data(g, beta);
  const Value third = inverse_of_3(r);
  const Matrix& x = g.X(beta);
  const Matrix sq = x * x;
  const Matrix two = x + x;
  const Matrix cube3 = (sq * x).scaled(third);
  const Matrix eq2 = g.unipotent_matrix(beta, r->one()) - g.unipotent_matrix(beta, r->from_int(-1)) - two;
  auto check = [&](std::string name, const Matrix& got, const Matrix& want) {
    auto diff = got.first_difference(want);
    return IdentityCheck{std::move(name), beta, !diff, describe(diff, got, want)};
  };
  return {check("X^2 = x(1) + x(-1) - 2E", d.Xsq, sq), check("X^3/3 = x(1) - x(-1) - 2X", eq2, cube3),
          check("2X = (-x(2) - 2x(-1))/3 - E + 2x(1)", d.twoX, two),
          check("X^3/3 = -x(1) - x(-1)/3 + x(2)/3 + E", d.Xcube3, cube3)};
}

Matrix recover_X(const Chevalley& g, const Root& alpha) {
  if (alpha.is_long()) return recover_X_long(g, alpha).X;
  const Ring& r = g.ring();
  const Matrix e = Matrix::identity(r);
  const Matrix xp = g.unipotent_matrix(alpha, r->from_int(1));
  const Matrix xm = g.unipotent_matrix(alpha, r->from_int(-1));
  const Matrix x2 = g.unipotent_matrix(alpha, r->from_int(2));
  const Matrix two_x = divide_entries(-x2 - times_int(xm, 2), 3) - e + times_int(xp, 2);
  return divide_entries(two_x, 2);
}

GroupWord h_word(const Ring& r, const Root& alpha, const Value& t) {
  auto inv = r->inverse(t);
  if (!inv) throw Error(ErrorCode::NotAUnit, r->format(t) + " is not a unit of " + r.descriptor());
  using K = Letter::Kind;
  const Value one = r->one(), m1 = r->neg(one);
  return GroupWord{{{K::X, alpha, t},
                    {K::X, -alpha, r->neg(*inv)},
                    {K::X, alpha, t},
                    {K::X, alpha, m1},
                    {K::X, -alpha, one},
                    {K::X, alpha, m1}}};
}

Root adjacent_long_root(const Root& beta) {
  for (const auto& a : all_roots()) {
    if (a.is_long() && cartan_integer(beta, a) == 1) return a;
  }
  throw Error(ErrorCode::NoAdjacentLongRoot, "no long root a with <" + root_key(beta) + ", a> = 1");
}

GroupWord short_unit_word(const Ring& r, const Root& beta, const Value& t) {
  const Root alpha = adjacent_long_root(beta);
  const GroupWord h = h_word(r, alpha, t);
  return h * GroupWord{{{Letter::Kind::X, beta, r->one()}}} * h.inverse(r);
}

std::vector<IntegrityEntry> conjugation_integrality_check(const Chevalley& over_target, const GroupMatrix& g,
                                                          const RingMap& embedding,
                                                          const std::vector<std::pair<Root, Value>>& targets) {
  const Ring& s = embedding.target();
  if (!(over_target.ring() == s) || !(g.ring() == s)) {
    throw Error(ErrorCode::DescriptorMismatch, "conjugation must take place over " + s.descriptor());
  }
  std::set<std::int64_t> image;
  for (const auto& v : embedding.table()) image.insert(s->index_of(v));
  std::vector<IntegrityEntry> out;
  for (const auto& [root, t] : targets) {
    const Matrix m = g.conjugate(over_target.x(root, embedding(t))).matrix();
    IntegrityEntry e{root, embedding.source()->format(t), true, std::nullopt};
    for (std::size_t i = 0; i < kDim && e.in_image; ++i) {
      for (std::size_t j = 0; j < kDim; ++j) {
        if (!image.count(s->index_of(m(i, j)))) {
          e.in_image = false;
          e.offending = {i, j};
          break;
        }
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------

GeneratorRelations::GeneratorRelations(const StructureTable& table) : table_(table) {
  const auto& roots = all_roots();
  std::vector<DividedPowers> dp;
  for (const auto& r : roots) dp.push_back(divided_powers(table, r));
  for (std::size_t k = 0; k < kRootCount; ++k) {
    bool found = false;
    for (std::size_t i = 0; i < kDim && !found; ++i) {
      for (std::size_t j = 0; j < kDim && !found; ++j) {
        const auto v = dp[k].x[i][j];
        if ((v == 1 || v == -1) && dp[k].x2[i][j] == 0 && dp[k].x3[i][j] == 0) {
          reading_[k] = {i, j, static_cast<int>(v)};
          found = true;
        }
      }
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "no reading entry for " + root_key(roots[k]));
  }
  for (std::size_t a = 0; a < kRootCount; ++a) {
    for (std::size_t b = 0; b < kRootCount; ++b) {
      const Root ra = roots[a], rb = roots[b];
      if (rb == -ra) continue;
      const IntMatrix c = int_unipotent(dp[a], 1) * int_unipotent(dp[b], 1) * int_unipotent(dp[a], -1) *
                          int_unipotent(dp[b], -1);
      std::vector<std::pair<int, int>> cand;
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          if (is_root(i * ra.a + j * rb.a, i * ra.b + j * rb.b)) cand.emplace_back(i, j);
        }
      }
      std::stable_sort(cand.begin(), cand.end(), [](auto x, auto y) { return x.first + x.second < y.first + y.second; });
      CommutatorExpansion e{ra, rb, {}};
      IntMatrix rest = c;
      for (auto [i, j] : cand) {
        const Root g{i * ra.a + j * rb.a, i * ra.b + j * rb.b};
        const auto& rd = reading_[root_index(g)];
        const std::int64_t coeff = rest[rd.row][rd.col] * rd.sign;
        if (coeff == 0) continue;
        rest = int_unipotent(dp[root_index(g)], -coeff) * rest;
        e.factors.emplace_back(g, coeff);
      }
      if (rest != identity_int()) {
        throw Error(ErrorCode::InvalidArgument, "commutator of " + root_key(ra) + " and " + root_key(rb) +
                                                    " is not a product of root elements");
      }
      expansions_.push_back(std::move(e));
    }
  }
}

const CommutatorExpansion& GeneratorRelations::expansion(const Root& a, const Root& b) const {
  for (const auto& e : expansions_) {
    if (e.alpha == a && e.beta == b) return e;
  }
  throw Error(ErrorCode::InvalidArgument, "no expansion for " + root_key(a) + ", " + root_key(b));
}

std::int64_t characteristic(const Ring& r) {
  if (!r->is_finite()) throw Error(ErrorCode::NotFinite, r.descriptor() + " is infinite");
  Value acc = r->one();
  std::int64_t n = 1;
  while (!r->is_zero(acc)) {
    acc = r->add(acc, r->one());
    ++n;
  }
  return n;
}

SpecCheck check_spec_relations(const AutomorphismSpec& spec, const GeneratorRelations& rel) {
  SpecCheck out;
  const Ring& r = spec.ring;
  auto fail = [&](std::string what) {
    out.pass = false;
    out.failures.push_back(std::move(what));
  };
  if (spec.images.size() != kRootCount) {
    fail("expected 12 images");
    return out;
  }
  for (const auto& m : spec.images) {
    if (!(m.ring() == r)) throw Error(ErrorCode::DescriptorMismatch, "image over " + m.ring().descriptor());
  }
  const auto n = characteristic(r);
  const auto& roots = all_roots();
  std::vector<Matrix> inv;
  for (std::size_t k = 0; k < kRootCount; ++k) {
    inv.push_back(matrix_pow(spec.images[k], n - 1));
    if (!(spec.images[k] * inv[k]).is_identity()) fail("order of image of x_" + root_key(roots[k]) + "(1)");
  }
  for (const auto& e : rel.expansions()) {
    const auto a = root_index(e.alpha), b = root_index(e.beta);
    const Matrix lhs = spec.images[a] * spec.images[b] * inv[a] * inv[b];
    Matrix rhs = Matrix::identity(r);
    for (const auto& [g, c] : e.factors) rhs = rhs * matrix_pow(spec.images[root_index(g)], ((c % n) + n) % n);
    if (!(lhs == rhs)) fail("commutator " + root_key(e.alpha) + " / " + root_key(e.beta));
  }
  if (spec.table) {
    const auto size = *r->size();
    const auto& t = *spec.table;
    if (t.size() != kRootCount) {
      fail("table needs 12 rows");
      return out;
    }
    for (std::size_t k = 0; k < kRootCount; ++k) {
      if (static_cast<std::int64_t>(t[k].size()) != size) {
        fail("table row " + root_key(roots[k]) + " has the wrong length");
        continue;
      }
      if (!(t[k][static_cast<std::size_t>(r->index_of(r->one()))] == spec.images[k])) {
        fail("table disagrees with image of x_" + root_key(roots[k]) + "(1)");
      }
      for (std::int64_t s = 0; s < size; ++s) {
        for (std::int64_t u = s; u < size; ++u) {
          const auto sum = r->index_of(r->add(r->element(s), r->element(u)));
          if (!(t[k][static_cast<std::size_t>(s)] * t[k][static_cast<std::size_t>(u)] == t[k][static_cast<std::size_t>(sum)])) {
            fail("additivity of x_" + root_key(roots[k]) + " at " + r->format(r->element(s)) + ", " + r->format(r->element(u)));
          }
        }
      }
    }
  }
  return out;
}

AutomorphismSpec make_standard_spec(const Chevalley& g, const GroupMatrix& inner, const RingMap& rho) {
  const Ring& r = g.ring();
  AutomorphismSpec spec{r, {}, std::vector<std::vector<Matrix>>{}, inner, rho};
  const auto elems = r->elements();
  for (const auto& root : all_roots()) {
    std::vector<Matrix> row;
    for (const auto& t : elems) row.push_back(inner.conjugate(g.x(root, rho(t))).matrix());
    spec.images.push_back(row[static_cast<std::size_t>(r->index_of(r->one()))]);
    spec.table->push_back(std::move(row));
  }
  return spec;
}

RandomSpec random_standard_spec(const Chevalley& g, std::mt19937_64& rng, bool frobenius, int max_depth) {
  const Ring& r = g.ring();
  std::uniform_int_distribution<int> depth(0, max_depth);
  std::uniform_int_distribution<std::size_t> root(0, kRootCount - 1);
  GroupWord word;
  const int d = depth(rng);
  for (int i = 0; i < d; ++i) {
    const Root rt = all_roots()[root(rng)];
    word.letters.push_back({Letter::Kind::X, rt, random_nonzero(r, rng)});
  }
  RingMap rho = RingMap::identity(r);
  if (const auto* f = r.as<FiniteFieldRing>(); frobenius && f && f->degree() > 1) {
    std::uniform_int_distribution<int> power(0, f->degree() - 1);
    if (int p = power(rng); p > 0) rho = RingMap::frobenius(r, p);
  }
  return {make_standard_spec(g, g.eval(word), rho), word, rho};
}

// ---------------------------------------------------------------------------

RingMap extract_rho(const AutomorphismSpec& spec, const GeneratorRelations& rel) {
  const Ring& r = spec.ring;
  if (!r->is_finite()) throw Error(ErrorCode::NotFinite, r.descriptor() + " is infinite");
  if (!spec.table) throw Error(ErrorCode::InvalidArgument, "extract_rho needs the images of every x_a(t)");
  const Chevalley g(rel.table(), r);
  const auto& roots = all_roots();
  for (std::size_t k = 0; k < kRootCount; ++k) {
    if (!(spec.images[k] == g.unipotent_matrix(roots[k], r->one()))) {
      throw Error(ErrorCode::InvalidArgument, "spec does not fix x_" + root_key(roots[k]) + "(1)");
    }
  }
  const auto size = static_cast<std::size_t>(*r->size());
  std::array<std::vector<Value>, kRootCount> s;
  for (std::size_t k = 0; k < kRootCount; ++k) {
    const auto& rd = rel.reading(roots[k]);
    for (std::size_t i = 0; i < size; ++i) {
      const Matrix& m = (*spec.table)[k][i];
      Value v = m(rd.row, rd.col);
      if (rd.sign < 0) v = r->neg(v);
      if (!(g.unipotent_matrix(roots[k], v) == m)) {
        throw Error(ErrorCode::NotOfRootForm, "image of x_" + root_key(roots[k]) + "(" +
                                                  r->format(r->element(static_cast<std::int64_t>(i))) +
                                                  ") is not x_" + root_key(roots[k]) + "(s) for any s");
      }
      s[k].push_back(std::move(v));
    }
  }
  std::optional<std::size_t> first_long, first_short;
  for (std::size_t k = 0; k < kRootCount; ++k) {
    auto& first = roots[k].is_long() ? first_long : first_short;
    if (!first) {
      first = k;
    } else if (s[k] != s[*first]) {
      throw Error(ErrorCode::NotOfRootForm, "extracted map depends on the root: " + root_key(roots[*first]) + " vs " +
                                                root_key(roots[k]));
    }
  }
  const auto& rl = s[*first_long];
  const auto& rs = s[*first_short];
  if (rl != rs) throw Error(ErrorCode::LengthMismatch, "long-root and short-root extractions disagree");
  // [x_{a+2b}(rho_s t), x_b(1)] = x_{a+3b}(c rho_l t)
  const Root a2b{2, 1}, b{1, 0};
  const auto& e = rel.expansion(a2b, b);
  for (std::size_t i = 0; i < size; ++i) {
    const Matrix lhs = commutator(g.x(a2b, rs[i]), g.x(b, r->one())).matrix();
    Matrix rhs = Matrix::identity(r);
    for (const auto& [root, c] : e.factors) rhs = rhs * g.unipotent_matrix(root, r->mul(r->from_int(c), rl[i]));
    if (!(lhs == rhs)) throw Error(ErrorCode::LengthMismatch, "cross-length commutator identity fails");
  }
  return RingMap::from_table(r, r, rl);
}

RhoCheck check_rho(const Chevalley& g, const RingMap& rho, const GeneratorRelations& rel) {
  const Ring& r = g.ring();
  RhoCheck out;
  const auto elems = r->elements();
  const Root alpha{0, 1}, a3b{3, 1};
  const auto& e = rel.expansion(alpha, a3b);
  for (const auto& s : elems) {
    for (const auto& t : elems) {
      const Value rs = rho(s), rt = rho(t);
      const auto tag = r->format(s) + ", " + r->format(t);
      if (!(rho(r->add(s, t)) == r->add(rs, rt)) ||
          !(g.unipotent_matrix(alpha, r->add(rs, rt)) == g.unipotent_matrix(alpha, rs) * g.unipotent_matrix(alpha, rt))) {
        out.additive = false;
        out.failures.push_back("additivity at " + tag);
      }
      if (!(rho(r->mul(s, t)) == r->mul(rs, rt))) {
        out.multiplicative = false;
        out.failures.push_back("multiplicativity at " + tag);
      }
      const Matrix lhs = commutator(g.x(alpha, rs), g.x(a3b, rt)).matrix();
      Matrix rhs = Matrix::identity(r);
      for (const auto& [root, c] : e.factors) rhs = rhs * g.unipotent_matrix(root, r->mul(r->from_int(c), r->mul(rs, rt)));
      if (!(lhs == rhs)) {
        out.commutator_witness = false;
        out.failures.push_back("commutator witness at " + tag);
      }
    }
  }
  return out;
}

bool congruence_check(const Chevalley& g, const GroupMatrix& x, const Root& alpha) {
  const Ring& r = g.ring();
  if (!(x.ring() == r)) throw Error(ErrorCode::DescriptorMismatch, "matrix over " + x.ring().descriptor());
  std::set<std::int64_t> rad;
  for (const auto& v : radical_of_local(r)) rad.insert(r->index_of(v));
  const Matrix d = x.matrix() - g.unipotent_matrix(alpha, r->one());
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (!rad.count(r->index_of(d(i, j)))) return false;
    }
  }
  return true;
}

CentralizerReport centralizer_gamma_check(const Chevalley& g, const Root& alpha) {
  const Ring& r = g.ring();
  if (!r->is_finite() || *r->size() > 9) {
    throw Error(ErrorCode::InvalidArgument, "centralizer check needs a finite ring of size <= 9");
  }
  CentralizerReport rep{alpha, {}, 0, true, {}};
  const GroupMatrix xa = g.x(alpha, r->one());
  std::vector<GroupMatrix> gamma;
  for (const auto& b : all_roots()) {
    GroupMatrix xb = g.x(b, r->one());
    if (commutator(xa, xb).matrix().is_identity()) {
      rep.gamma.push_back(b);
      gamma.push_back(std::move(xb));
    }
  }
  for (const auto& t : r->elements()) {
    const GroupMatrix xt = g.x(alpha, t);
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      ++rep.checks;
      if (!commutator(xt, gamma[k]).matrix().is_identity()) {
        rep.pass = false;
        rep.failures.push_back("x_" + root_key(alpha) + "(" + r->format(t) + ") vs x_" + root_key(rep.gamma[k]) + "(1)");
      }
    }
  }
  return rep;
}

}  // namespace g2
