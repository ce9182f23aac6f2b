#include "hlsb/constructions.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace hlsb {

namespace {

Tensor2 as_tensor(const Matrix& m, const BasisPtr& basis, Parity p) {
  Tensor2 t(basis, p);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
  return t;
}

// f(v) where f may map between different bases; shift is the parity of f
Vector map_vector(const Matrix& f, const Vector& v, const BasisPtr& target, Parity shift = Parity::even) {
  Vector out(target, v.parity() + shift);
  for (int j = 0; j < f.cols(); ++j) {
    if (v(j).is_zero()) continue;
    for (int i = 0; i < f.rows(); ++i)
      if (!f(i, j).is_zero()) out(i) += f(i, j) * v(j);
  }
  return out;
}

Tensor2 map_tensor2(const Matrix& f, const Tensor2& t, const BasisPtr& target) {
  const int n = f.cols(), m = f.rows();
  Tensor2 half(target, t.parity());
  // first slot, written into a temporary indexed (target, source)
  std::vector<Scalar> tmp(static_cast<std::size_t>(m) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t(a, b).is_zero()) continue;
      for (int p = 0; p < m; ++p)
        if (!f(p, a).is_zero()) tmp[static_cast<std::size_t>(p) * n + b] += f(p, a) * t(a, b);
    }
  for (int p = 0; p < m; ++p)
    for (int b = 0; b < n; ++b) {
      const Scalar& s = tmp[static_cast<std::size_t>(p) * n + b];
      if (s.is_zero()) continue;
      for (int q = 0; q < m; ++q)
        if (!f(q, b).is_zero()) half(p, q) += f(q, b) * s;
    }
  return half;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

bool same_parities(const SuperBasis& a, const SuperBasis& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.parity(i) != b.parity(i)) return false;
  return true;
}

int pairing_sign_of(PairingConvention conv, Parity a, Parity b) {
  return conv == PairingConvention::koszul ? koszul(a, b) : 1;
}

std::string axiom_list(const CheckReport& r) {
  std::string s;
  for (const auto& a : r.failed_axioms()) s += (s.empty() ? "" : ", ") + a;
  return s;
}

}  // namespace

// ---------------------------------------------------------------- morphisms

CheckReport check_algebra_morphism(const HomSuperAlgebra& src, const HomSuperAlgebra& tgt, const Morphism& f) {
  const int n = src.dim();
  if (f.map.cols() != n || f.map.rows() != tgt.dim()) throw DimensionError("morphism has wrong size");
  CheckReport rep;
  for (int j = 0; j < n; ++j) {
    Vector off(tgt.basis, src.basis->parity(j));
    for (int i = 0; i < tgt.dim(); ++i)
      if (tgt.basis->parity(i) != src.basis->parity(j)) off(i) = f.map(i, j);
    rep.record("morphism-even", {j}, off, src.basis);
  }
  Matrix comm = tgt.alpha * f.map - f.map * src.alpha;
  for (int j = 0; j < n; ++j) {
    Vector v(tgt.basis, src.basis->parity(j));
    for (int i = 0; i < tgt.dim(); ++i) v(i) = comm(i, j);
    rep.record("morphism-alpha", {j}, v, src.basis);
  }
  std::vector<Vector> fe;
  for (int i = 0; i < n; ++i) fe.push_back(map_vector(f.map, basis_vector(src.basis, i), tgt.basis));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rep.record("morphism-bracket", {i, j},
                 map_vector(f.map, src.bracket_basis(i, j), tgt.basis) - tgt.bracket_of(fe[i], fe[j]), src.basis);
  return rep;
}

CheckReport check_morphism(const HomSuperBialgebra& source, const HomSuperBialgebra& target, const Morphism& f) {
  CheckReport rep = check_algebra_morphism(source.algebra, target.algebra, f);
  const HomSuperCoalgebra cs = source.coalgebra(), ct = target.coalgebra();
  for (int i = 0; i < source.dim(); ++i) {
    Vector fi = map_vector(f.map, basis_vector(source.basis(), i), target.basis());
    rep.record("morphism-cobracket", {i}, map_tensor2(f.map, cs.delta(i), target.basis()) - ct.delta(fi),
               source.basis());
  }
  return rep;
}

HomSuperBialgebra twist(const HomSuperBialgebra& B, const Morphism& beta) {
  CheckReport m = check_morphism(B, B, beta);
  if (!m.passed()) throw PreconditionError("twist: beta is not a self-morphism (" + axiom_list(m) + ")");
  const int n = B.dim();
  const Matrix& b = beta.map;
  Tensor3 c(B.basis(), Parity::even), d(B.basis(), Parity::even);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m2 = 0; m2 < n; ++m2) {
        const Scalar& cm = B.algebra.bracket(i, j, m2);
        if (cm.is_zero()) continue;
        for (int k = 0; k < n; ++k)
          if (!b(k, m2).is_zero()) c(i, j, k) += b(k, m2) * cm;
      }
  for (int i = 0; i < n; ++i)
    for (int m2 = 0; m2 < n; ++m2) {
      if (b(m2, i).is_zero()) continue;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!B.cobracket(m2, j, k).is_zero()) d(i, j, k) += b(m2, i) * B.cobracket(m2, j, k);
    }
  return HomSuperBialgebra(HomSuperAlgebra(B.basis(), std::move(c), b * B.alpha()), std::move(d));
}

HomSuperBialgebra twist_power(const HomSuperBialgebra& B, int n) {
  if (n < 0) throw std::invalid_argument("twist_power: n must be non-negative");
  CheckReport m = check_multiplicativity(B.algebra);
  m.append(check_comultiplicativity(B.coalgebra()));
  if (!m.passed()) throw PreconditionError("twist_power: structure is not multiplicative (" + axiom_list(m) + ")");
  return twist(B, Morphism{B.alpha().pow(n)});
}

HomSuperBialgebra transport(const HomSuperBialgebra& B, const EvenMap& g, const EvenMap& ginv) {
  const int n = B.dim();
  if (!(g * ginv == Matrix::identity(n)) || !(ginv * g == Matrix::identity(n)))
    throw PreconditionError("transport: supplied inverse is not an inverse");
  std::vector<Vector> pre;
  for (int i = 0; i < n; ++i) pre.push_back(apply(ginv, basis_vector(B.basis(), i)));
  Tensor3 c(B.basis(), Parity::even);
  std::vector<Tensor2> d;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vector v = apply(g, B.algebra.bracket_of(pre[i], pre[j]));
      for (int k = 0; k < n; ++k) c(i, j, k) = v(k);
    }
    d.push_back(apply_even_map_tensor<2>(g, B.delta(pre[i])));
  }
  return HomSuperBialgebra(HomSuperAlgebra(B.basis(), std::move(c), g * B.alpha() * ginv),
                           cobracket_from_images(B.basis(), d));
}

// -------------------------------------------------------------------- duals

BasisPtr dual_basis(const SuperBasis& b) {
  std::vector<SuperBasis::Element> e;
  for (const auto& x : b.elements()) {
    std::string l = x.label;
    if (l.size() > 1 && l.back() == '*')
      l.pop_back();
    else
      l += '*';
    e.push_back({l, x.parity});
  }
  return make_basis(std::move(e));
}

Tensor3 dual_cobracket_of(const HomSuperAlgebra& A, const BasisPtr& dual, PairingConvention conv) {
  const int n = A.dim();
  if (!same_parities(*A.basis, *dual)) throw DimensionError("dual basis does not match");
  const auto& b = *A.basis;
  Tensor3 d(dual, Parity::even);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& s = A.bracket(j, k, i);
        if (!s.is_zero()) d(i, j, k) = s * pairing_sign_of(conv, b.parity(j), b.parity(k));
      }
  return d;
}

HomSuperBialgebra dualize(const HomSuperBialgebra& B, PairingConvention conv) {
  const int n = B.dim();
  const auto& b = *B.basis();
  BasisPtr D = dual_basis(b);
  Tensor3 c(D, Parity::even);
  for (int a = 0; a < n; ++a)
    for (int e = 0; e < n; ++e)
      for (int i = 0; i < n; ++i) {
        const Scalar& s = B.cobracket(i, a, e);
        if (!s.is_zero()) c(a, e, i) = s * pairing_sign_of(conv, b.parity(a), b.parity(e));
      }
  HomSuperAlgebra alg(D, std::move(c), B.alpha().transpose());
  Tensor3 d = dual_cobracket_of(B.algebra, D, conv);
  return HomSuperBialgebra(std::move(alg), std::move(d));
}

// ---------------------------------------------------------- representations

Matrix Representation::rho_of(const Vector& x) const {
  const int m = module->size();
  Matrix out(m, m);
  for (int i = 0; i < x.dim(); ++i)
    if (!x(i).is_zero()) out = out + x(i) * rho[i];
  return out;
}

Representation adjoint_representation(const HomSuperAlgebra& A) {
  Representation R{A, A.basis, {}, A.alpha};
  for (int i = 0; i < A.dim(); ++i) R.rho.push_back(A.ad_matrix(basis_vector(A.basis, i)));
  return R;
}

Representation zero_representation(const HomSuperAlgebra& A, BasisPtr module, EvenMap a) {
  const int m = module->size();
  return Representation{A, std::move(module), std::vector<Matrix>(A.dim(), Matrix(m, m)), std::move(a)};
}

CheckReport check_representation(const Representation& R) {
  const int n = R.algebra.dim(), m = R.module->size();
  if (static_cast<int>(R.rho.size()) != n) throw DimensionError("representation needs one matrix per basis element");
  for (const auto& r : R.rho)
    if (r.rows() != m || r.cols() != m) throw DimensionError("representation matrix has wrong size");
  if (R.A.rows() != m || R.A.cols() != m) throw DimensionError("module map has wrong size");
  const auto& g = *R.algebra.basis;
  const auto& M = *R.module;
  CheckReport rep;
  rep.append(check_alpha_even(R.module, R.A));
  for (int i = 0; i < n; ++i) {
    Tensor2 off(R.module, g.parity(i));
    for (int a = 0; a < m; ++a)
      for (int l = 0; l < m; ++l)
        if (M.parity(a) != g.parity(i) + M.parity(l)) off(a, l) = R.rho[i](a, l);
    rep.record("rep-grading", {i}, off, R.algebra.basis);
  }
  std::vector<Vector> ax;
  for (int i = 0; i < n; ++i) ax.push_back(R.algebra.alpha_of(basis_vector(R.algebra.basis, i)));
  std::vector<Matrix> rax;
  for (int i = 0; i < n; ++i) rax.push_back(R.rho_of(ax[i]));
  for (int i = 0; i < n; ++i)
    rep.record("rep-alpha", {i}, as_tensor(rax[i] * R.A - R.A * R.rho[i], R.module, g.parity(i)), R.algebra.basis);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix lhs = R.rho_of(R.algebra.bracket_basis(i, j)) * R.A;
      Matrix rhs = rax[i] * R.rho[j] - Scalar(koszul(g.parity(i), g.parity(j))) * (rax[j] * R.rho[i]);
      rep.record("rep-bracket", {i, j}, as_tensor(lhs - rhs, R.module, g.parity(i) + g.parity(j)), R.algebra.basis);
    }
  return rep;
}

Representation dual_representation(const Representation& R, DualSide side) {
  const int m = R.module->size();
  const auto& g = *R.algebra.basis;
  const auto& M = *R.module;
  Representation D{R.algebra, dual_basis(M), {}, R.A.transpose()};
  for (int i = 0; i < R.algebra.dim(); ++i) {
    Matrix r(m, m);
    for (int l = 0; l < m; ++l)
      for (int a = 0; a < m; ++a) {
        const Scalar& s = R.rho[i](a, l);
        if (s.is_zero()) continue;
        // the sign follows the parity of whichever module element the
        // functional in the defining identity is evaluated against
        Parity p = side == DualSide::dual_space ? M.parity(l) : M.parity(a);
        r(l, a) = s * -koszul(g.parity(i), p);
      }
    D.rho.push_back(std::move(r));
  }
  return D;
}

CheckReport check_admissible(const HomSuperAlgebra& A) {
  CheckReport rep;
  const int n = A.dim();
  Matrix defect = Matrix::identity(n) - A.alpha * A.alpha;
  for (int i = 0; i < n; ++i) {
    Vector u = apply(defect, basis_vector(A.basis, i));
    for (int j = 0; j < n; ++j) rep.record("admissible", {i, j}, A.bracket_of(u, A.alpha_of(basis_vector(A.basis, j))));
  }
  return rep;
}

HomSuperAlgebra semidirect_product(const HomSuperAlgebra& A, const Representation& R) {
  CheckReport ok = check_representation(R);
  if (!ok.passed()) throw PreconditionError("semidirect_product: invalid representation (" + axiom_list(ok) + ")");
  const int n = A.dim(), m = R.module->size();
  BasisPtr B = direct_sum(*A.basis, *R.module);
  Tensor3 c(B, Parity::even);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c(i, j, k) = A.bracket(i, j, k);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < m; ++l)
      for (int a = 0; a < m; ++a) {
        const Scalar& s = R.rho[i](a, l);
        if (s.is_zero()) continue;
        c(i, n + l, n + a) = s;
        c(n + l, i, n + a) = s * -koszul(A.basis->parity(i), R.module->parity(l));
      }
  return HomSuperAlgebra(B, std::move(c), block_diag(A.alpha, R.A));
}

// ------------------------------------------------------------- matched pairs

HomSuperAlgebra matched_pair_double(const MatchedPairData& M) {
  const auto& g = M.g;
  const auto& h = M.gprime;
  const int n = g.dim(), m = h.dim();
  if (!same_parities(*M.rho.module, *h.basis) || !same_parities(*M.rhoprime.module, *g.basis))
    throw StructureError("matched pair: representation modules do not match the algebras");
  if (static_cast<int>(M.rho.rho.size()) != n || static_cast<int>(M.rhoprime.rho.size()) != m)
    throw DimensionError("matched pair: representation sizes do not match the algebras");
  BasisPtr B = direct_sum(*g.basis, *h.basis);
  Tensor3 c(B, Parity::even);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c(i, j, k) = g.bracket(i, j, k);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int k = 0; k < m; ++k) c(n + a, n + b, n + k) = h.bracket(a, b, k);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a) {
      const int s = koszul(g.basis->parity(i), h.basis->parity(a));
      // [e_i, f_a] = rho(e_i) f_a - (-1)^{|i||a|} rho'(f_a) e_i
      for (int b = 0; b < m; ++b) c(n + a, i, n + b) = c(i, n + a, n + b) = M.rho.rho[i](b, a);
      for (int k = 0; k < n; ++k) c(n + a, i, k) = c(i, n + a, k) = M.rhoprime.rho[a](k, i) * -s;
      for (int k = 0; k < n + m; ++k) c(n + a, i, k) *= -s;
    }
  return HomSuperAlgebra(B, std::move(c), block_diag(g.alpha, h.alpha));
}

namespace {

// rho(a z)[x', y'] = [rho(z) x', a' y'] + (-1)^{|x||z|} [a' x', rho(z) y']
//   + (-1)^{|x||y| + |y||z|} rho(rho'(y') z)(a' x') - (-1)^{|x||z|} rho(rho'(x') z)(a' y')
// with z in g and x', y' in g', |x| read as |x'|.
void matched_pair_identity(const HomSuperAlgebra& g, const HomSuperAlgebra& h, const Representation& rho,
                           const Representation& rhop, const std::string& axiom, CheckReport& rep) {
  const int n = g.dim(), m = h.dim();
  const auto& gb = *g.basis;
  const auto& hb = *h.basis;
  auto act = [&](const Representation& R, const Vector& x, const Vector& v, const BasisPtr& target) {
    return map_vector(R.rho_of(x), v, target, x.parity());
  };
  for (int z = 0; z < n; ++z) {
    Vector ez = basis_vector(g.basis, z);
    Vector az = g.alpha_of(ez);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        Vector ex = basis_vector(h.basis, x), ey = basis_vector(h.basis, y);
        Vector ax = h.alpha_of(ex), ay = h.alpha_of(ey);
        const Parity px = hb.parity(x), py = hb.parity(y), pz = gb.parity(z);
        Vector lhs = act(rho, az, h.bracket_basis(x, y), h.basis);
        Vector t1 = h.bracket_of(act(rho, ez, ex, h.basis), ay);
        Vector t2 = h.bracket_of(ax, act(rho, ez, ey, h.basis));
        t2 *= koszul(px, pz);
        Vector t3 = act(rho, act(rhop, ey, ez, g.basis), ax, h.basis);
        t3 *= koszul(px, py) * koszul(py, pz);
        Vector t4 = act(rho, act(rhop, ex, ez, g.basis), ay, h.basis);
        t4 *= koszul(px, pz);
        Vector res = lhs;
        res -= t1;
        res -= t2;
        res -= t3;
        res += t4;
        rep.record(axiom, {z, x, y}, res, nullptr);
      }
  }
}

}  // namespace

CheckReport check_matched_pair(const MatchedPairData& M) {
  CheckReport rep;
  rep.append(check_representation(M.rho), "rho/");
  rep.append(check_representation(M.rhoprime), "rho'/");
  matched_pair_identity(M.g, M.gprime, M.rho, M.rhoprime, "matched-pair-g", rep);
  matched_pair_identity(M.gprime, M.g, M.rhoprime, M.rho, "matched-pair-g'", rep);
  return rep;
}

MatchedPairData coadjoint_matched_pair(const HomSuperAlgebra& g, const HomSuperAlgebra& gstar) {
  if (!same_parities(*g.basis, *gstar.basis)) throw StructureError("g and g* bases do not pair");
  Representation rho = dual_representation(adjoint_representation(g), DualSide::dual_space);
  Representation rhop = dual_representation(adjoint_representation(gstar), DualSide::predual);
  rho.module = gstar.basis;
  rhop.module = g.basis;
  return MatchedPairData{g, gstar, std::move(rho), std::move(rhop)};
}

namespace {

void require_pair(const HomSuperAlgebra& g, const HomSuperAlgebra& gstar, const char* who) {
  if (!same_parities(*g.basis, *gstar.basis)) throw PreconditionError(std::string(who) + ": g and g* bases do not pair");
  if (!(gstar.alpha == g.alpha.transpose()))
    throw PreconditionError(std::string(who) + ": the twist map of g* must be the transpose of that of g");
  CheckReport a = check_admissible(g);
  if (!a.passed()) throw PreconditionError(std::string(who) + ": g is not admissible");
  CheckReport b = check_admissible(gstar);
  if (!b.passed()) throw PreconditionError(std::string(who) + ": g* is not admissible");
}

// < phi (x) psi, T > with <e^a, e_p> = delta
Scalar pair2(const Vector& phi, const Vector& psi, const Tensor2& T, PairingConvention conv) {
  Scalar s;
  for (int p = 0; p < T.dim(); ++p) {
    if (phi(p).is_zero()) continue;
    for (int q = 0; q < T.dim(); ++q) {
      if (psi(q).is_zero() || T(p, q).is_zero()) continue;
      s += phi(p) * psi(q) * T(p, q) * pairing_sign_of(conv, psi.parity(), T.basis()->parity(p));
    }
  }
  return s;
}

// pairs the compatibility residual of (A, cobracket) with a^T(xi) ^ eta
void paired_compatibility(const HomSuperAlgebra& A, const Tensor3& cobracket, const BasisPtr& other,
                          PairingConvention conv, const std::string& axiom, CheckReport& rep) {
  const int n = A.dim();
  const auto& b = *A.basis;
  HomSuperBialgebra B(A, cobracket);
  const HomSuperCoalgebra C = B.coalgebra();
  std::vector<Tensor2> d = cobracket_images(C);
  const Matrix at = A.alpha.transpose();
  std::vector<Vector> axi, eta;
  for (int a = 0; a < n; ++a) {
    axi.push_back(apply(at, basis_vector(A.basis, a)));
    eta.push_back(basis_vector(A.basis, a));
  }
  for (int x = 0; x < n; ++x) {
    Vector ax = A.alpha_of(basis_vector(A.basis, x));
    for (int y = 0; y < n; ++y) {
      Vector ay = A.alpha_of(basis_vector(A.basis, y));
      Tensor2 R = C.delta(A.bracket_basis(x, y));
      R -= ad_action<2>(A, ax, d[y]);
      Tensor2 u = ad_action<2>(A, ay, d[x]);
      u *= koszul(b.parity(x), b.parity(y));
      R += u;
      Tensor2 vals(other, b.parity(x) + b.parity(y));
      for (int a = 0; a < n; ++a)
        for (int e = 0; e < n; ++e) {
          // a^T(xi) ^ eta = a^T(xi) (x) eta - (-1)^{|xi||eta|} eta (x) a^T(xi)
          Scalar v = pair2(axi[a], eta[e], R, conv);
          v -= pair2(eta[e], axi[a], R, conv) * koszul(b.parity(a), b.parity(e));
          vals(a, e) = v;
        }
      rep.record(axiom, {x, y}, vals, A.basis);
    }
  }
}

}  // namespace

CheckReport check_prop_ahmedd(const HomSuperAlgebra& g, const HomSuperAlgebra& gstar, PairingConvention conv) {
  require_pair(g, gstar, "check_prop_ahmedd");
  CheckReport rep;
  rep.append(check_algebra(g, true), "g/");
  rep.append(check_algebra(gstar, true), "g*/");
  paired_compatibility(g, dual_cobracket_of(gstar, g.basis, conv), gstar.basis, conv, "paired-compatibility-g", rep);
  paired_compatibility(gstar, dual_cobracket_of(g, gstar.basis, conv), g.basis, conv, "paired-compatibility-g*", rep);
  return rep;
}

// ----------------------------------------------------------- Manin triples

Scalar BilinearForm::value(const Vector& u, const Vector& v) const {
  Scalar s;
  for (int i = 0; i < gram.rows(); ++i) {
    if (u(i).is_zero()) continue;
    for (int j = 0; j < gram.cols(); ++j)
      if (!v(j).is_zero() && !gram(i, j).is_zero()) s += u(i) * gram(i, j) * v(j);
  }
  return s;
}

bool BilinearForm::is_supersymmetric() const {
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = 0; j < gram.cols(); ++j)
      if (!(gram(i, j) == gram(j, i) * koszul(space->parity(i), space->parity(j)))) return false;
  return true;
}

Scalar BilinearForm::determinant() const { return hlsb::determinant(gram); }

Scalar determinant(const Matrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw DimensionError("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  if (n > 20) throw DimensionError("determinant: matrix too large for subset expansion");
  // value of the minor on rows r.. and the columns not in mask
  std::map<unsigned, Scalar> memo;
  std::function<Scalar(int, unsigned)> rec = [&](int r, unsigned mask) -> Scalar {
    if (r == n) return Scalar(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Scalar s;
    int pos = 0;
    for (int c = 0; c < n; ++c) {
      if (mask & (1u << c)) continue;
      if (!m(r, c).is_zero()) {
        Scalar t = m(r, c) * rec(r + 1, mask | (1u << c));
        if (pos % 2) t = -t;
        s += t;
      }
      ++pos;
    }
    memo.emplace(mask, s);
    return s;
  };
  return rec(0, 0);
}

ManinSupertriple manin_supertriple(const HomSuperAlgebra& g, const HomSuperAlgebra& gstar) {
  require_pair(g, gstar, "manin_supertriple");
  HomSuperAlgebra M = matched_pair_double(coadjoint_matched_pair(g, gstar));
  const int n = g.dim(), N = M.dim();
  const auto& P = *M.basis;
  // S(x + xi, y + eta) = <x, eta> + <xi, y>, with <xi, y> = (-1)^{|xi||y|} <y, xi>
  Matrix gram(N, N);
  for (int i = 0; i < n; ++i) {
    gram(i, n + i) = Scalar(1);
    gram(n + i, i) = Scalar(koszul(P.parity(i), P.parity(i)));
  }
  BilinearForm S{M.basis, gram};
  CheckReport rep;
  rep.append(check_algebra(M, true), "double/");

  std::vector<Vector> e;
  for (int i = 0; i < N; ++i) e.push_back(basis_vector(M.basis, i));
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      Vector res(M.basis, P.parity(u) + P.parity(v));
      Vector uv = M.bracket_basis(u, v);
      for (int w = 0; w < N; ++w) res(w) = S.value(uv, e[w]) - S.value(e[u], M.bracket_basis(v, w));
      rep.record("invariance", {u, v}, res);
    }
  for (int u = 0; u < N; ++u) {
    Vector res(M.basis, P.parity(u));
    Vector au = M.alpha_of(e[u]);
    for (int w = 0; w < N; ++w) res(w) = S.value(au, e[w]) - S.value(e[u], M.alpha_of(e[w]));
    rep.record("alpha-self-adjoint", {u}, res);
  }
  for (int u = 0; u < N; ++u) {
    Vector res(M.basis, P.parity(u));
    for (int w = 0; w < N; ++w) res(w) = gram(u, w) - gram(w, u) * koszul(P.parity(u), P.parity(w));
    rep.record("supersymmetry", {u}, res);
  }
  if (S.determinant().is_zero()) rep.record_scalar("nondegeneracy", {}, Scalar(1));
  for (int u = 0; u < N; ++u) {
    Vector res(M.basis, P.parity(u));
    for (int w = 0; w < N; ++w)
      if ((u < n) == (w < n)) res(w) = gram(u, w);
    rep.record(u < n ? "isotropy-g" : "isotropy-g*", {u}, res);
  }
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      if ((u < n) != (v < n)) continue;
      Vector uv = M.bracket_basis(u, v);
      Vector off(M.basis, uv.parity());
      for (int k = 0; k < N; ++k)
        if ((k < n) != (u < n)) off(k) = uv(k);
      rep.record("subalgebra", {u, v}, off);
    }
  return ManinSupertriple{std::move(M), std::move(S), std::move(rep)};
}

}  // namespace hlsb
