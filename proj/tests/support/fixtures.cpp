#include "fixtures.hpp"

#include <cstdlib>
#include <set>

namespace fx {

std::uint64_t seed() {
  if (const char* s = std::getenv("HLSB_SEED"); s && *s) return std::strtoull(s, nullptr, 10);
  return 20240611ULL;
}

std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() * 1000003ULL + salt); }

SpacePtr no_params() {
  static const SpacePtr s = make_space({});
  return s;
}

Rational small_rational(std::mt19937_64& g, bool nonzero) {
  static const long pool[][2] = {{1, 1}, {-1, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-3, 2}, {3, 1}, {0, 1}};
  const std::size_t size = nonzero ? 9 : 10;
  const auto& p = pool[std::uniform_int_distribution<std::size_t>(0, size - 1)(g)];
  return Rational(p[0], p[1]);
}

std::vector<Rational> random_point(const ParamSpace& s, std::mt19937_64& g) {
  std::vector<Rational> p;
  for (const auto& prm : s.params()) p.push_back(small_rational(g, prm.invertible));
  return p;
}

Scalar specialize(const Scalar& x, const std::vector<Rational>& point) {
  if (x.is_zero() || !x.space()) return x;
  std::vector<Scalar> images;
  for (const auto& r : point) images.emplace_back(r);
  return x.substitute(images, no_params());
}

Matrix specialize(const Matrix& m, const std::vector<Rational>& point) {
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = specialize(m(i, j), point);
  return out;
}

HomSuperBialgebra specialize(const HomSuperBialgebra& B, const std::vector<Rational>& point) {
  HomSuperAlgebra A(B.basis(), specialize(B.algebra.bracket, point), specialize(B.alpha(), point));
  return HomSuperBialgebra(std::move(A), specialize(B.cobracket, point));
}

std::vector<Instance> catalog_instances() {
  std::vector<Instance> out;
  for (const auto& row : catalog_list())
    for (const auto& d : row.instances) out.push_back({d.name(), row.multiplicative, &d});
  return out;
}

std::vector<Concrete> concrete_instances(int points_per_instance, std::uint64_t salt) {
  auto g = rng(salt);
  std::vector<Concrete> out;
  for (const auto& inst : catalog_instances()) {
    if (!inst.multiplicative) continue;
    for (int k = 0; k < points_per_instance; ++k) {
      auto p = random_point(*inst.def->space, g);
      out.push_back({inst.name + "@" + std::to_string(k), specialize(inst.def->structure, p)});
    }
  }
  return out;
}

std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows_in, int cols) {
  auto rows = rows_in;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!rows[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (int k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> out;
  std::set<int> pivots(pivot_col.begin(), pivot_col.end());
  for (int free = 0; free < cols; ++free) {
    if (pivots.count(free)) continue;
    std::vector<Rational> v(cols);
    v[free] = Rational(1);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -rows[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

Rational value(const Scalar& s) {
  if (s.is_zero()) return Rational(0);
  return s.constant_value();
}

}  // namespace

std::vector<Tensor2> fixed_even_tensors(const HomSuperAlgebra& A, bool skew) {
  const int n = A.dim();
  const auto& b = *A.basis;
  // unknowns: r(a, b) on even index pairs
  std::vector<std::pair<int, int>> vars;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (b.parity(a) == b.parity(c)) vars.emplace_back(a, c);
  const int m = static_cast<int>(vars.size());
  std::vector<std::vector<Rational>> eqs;
  // (alpha(x)alpha r - r)(p, q) = sum alpha(p,a) alpha(q,c) r(a,c) - r(p,q)
  for (const auto& [p, q] : vars) {
    std::vector<Rational> row(m);
    for (int v = 0; v < m; ++v) {
      row[v] = value(A.alpha(p, vars[v].first)) * value(A.alpha(q, vars[v].second));
      if (vars[v] == std::make_pair(p, q)) row[v] -= Rational(1);
    }
    eqs.push_back(std::move(row));
  }
  if (skew)
    // r(p,q) + (-1)^{|p||q|} r(q,p) = 0
    for (const auto& [p, q] : vars) {
      std::vector<Rational> row(m);
      for (int v = 0; v < m; ++v) {
        if (vars[v] == std::make_pair(p, q)) row[v] += Rational(1);
        if (vars[v] == std::make_pair(q, p)) row[v] += Rational(koszul(b.parity(p), b.parity(q)));
      }
      eqs.push_back(std::move(row));
    }
  std::vector<Tensor2> out;
  for (const auto& v : nullspace(eqs, m)) {
    Tensor2 t(A.basis, Parity::even);
    for (int k = 0; k < m; ++k) t(vars[k].first, vars[k].second) = Scalar(v[k]);
    out.push_back(std::move(t));
  }
  return out;
}

Tensor2 random_combination(const std::vector<Tensor2>& basis, const BasisPtr& b, std::mt19937_64& g) {
  Tensor2 t(b, Parity::even);
  for (const auto& v : basis) t += v * Scalar(small_rational(g, false));
  return t;
}

std::vector<Tensor2> small_combinations(const std::vector<Tensor2>& basis, const BasisPtr& b, std::size_t limit) {
  std::vector<Tensor2> out;
  const std::size_t k = basis.size();
  std::vector<int> coef(k, -1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  for (std::size_t code = 0; code < total && out.size() < limit; ++code) {
    std::size_t c = code;
    Tensor2 t(b, Parity::even);
    for (std::size_t i = 0; i < k; ++i) {
      const int s = static_cast<int>(c % 3) - 1;
      c /= 3;
      if (s) t += basis[i] * Scalar(s);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<RCase> coboundary_cases() {
  std::vector<RCase> out;
  for (auto& c : concrete_instances(2, 17)) {
    const auto basis = fixed_even_tensors(c.B.algebra, true);
    int kept = 0;
    for (const auto& r : small_combinations(basis, c.B.basis(), 81)) {
      if (r.is_zero() || kept >= 3) continue;
      try {
        coboundary_from_r(c.B.algebra, RMatrix(c.B.algebra, r));
      } catch (const HypothesisError&) {
        continue;
      }
      out.push_back({c.name + "#" + std::to_string(kept), c.B.algebra, r});
      ++kept;
    }
  }
  return out;
}

std::vector<TCase> perturbation_cases() {
  std::vector<TCase> out;
  for (auto& c : concrete_instances(2, 29)) {
    const auto basis = fixed_even_tensors(c.B.algebra, true);
    int kept = 0;
    for (const auto& t : small_combinations(basis, c.B.basis(), 81)) {
      if (t.is_zero() || kept >= 3) continue;
      if (!perturbation_hypotheses_hold(check_perturbation_hypotheses(c.B, RMatrix(c.B.algebra, t)))) continue;
      out.push_back({c.name + "#" + std::to_string(kept), c.B, t});
      ++kept;
    }
  }
  return out;
}

HomSuperBialgebra random_structure(const std::vector<Parity>& parities, std::mt19937_64& g, int density_percent) {
  std::vector<SuperBasis::Element> el;
  for (std::size_t i = 0; i < parities.size(); ++i) el.push_back({"e" + std::to_string(i + 1), parities[i]});
  BasisPtr b = make_basis(el);
  const int n = b->size();
  std::uniform_int_distribution<int> pct(0, 99);
  auto pick = [&] { return pct(g) < density_percent ? Scalar(small_rational(g, true)) : Scalar(0); };
  Matrix alpha(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b->parity(i) == b->parity(j)) alpha(i, j) = pick();
  Tensor3 c(b, Parity::even), d(b, Parity::even);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (b->parity(i) + b->parity(j) == b->parity(k)) c(i, j, k) = pick();
        if (b->parity(j) + b->parity(k) == b->parity(i)) d(i, j, k) = pick();
      }
  return HomSuperBialgebra(HomSuperAlgebra(b, std::move(c), std::move(alpha)), std::move(d));
}

}  // namespace fx
