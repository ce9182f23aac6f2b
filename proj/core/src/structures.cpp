#include "hlsb/structures.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hlsb {

namespace {

void require_square(const EvenMap& a, int n, const char* what) {
  if (a.rows() != n || a.cols() != n) throw StructureError(std::string(what) + " has wrong size");
}

void require_tensor(const Tensor3& t, const BasisPtr& b, const char* what) {
  if (!same_basis(t.basis(), b)) throw StructureError(std::string(what) + " uses a different basis");
}

}  // namespace

HomSuperAlgebra::HomSuperAlgebra(BasisPtr b, Tensor3 c, EvenMap a)
    : basis(std::move(b)), bracket(std::move(c)), alpha(std::move(a)) {
  require_tensor(bracket, basis, "bracket");
  require_square(alpha, basis->size(), "alpha");
}

HomSuperAlgebra HomSuperAlgebra::abelian(BasisPtr b, EvenMap a) {
  Tensor3 c(b, Parity::even);
  return HomSuperAlgebra(b, std::move(c), std::move(a));
}

Vector HomSuperAlgebra::bracket_of(const Vector& x, const Vector& y) const {
  const int n = dim();
  Vector out(basis, x.parity() + y.parity());
  for (int i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y(j).is_zero()) continue;
      Scalar xy = x(i) * y(j);
      for (int k = 0; k < n; ++k)
        if (!bracket(i, j, k).is_zero()) out(k) += xy * bracket(i, j, k);
    }
  }
  return out;
}

Vector HomSuperAlgebra::bracket_basis(int i, int j) const {
  Vector out(basis, basis->parity(i) + basis->parity(j));
  for (int k = 0; k < dim(); ++k) out(k) = bracket(i, j, k);
  return out;
}

Matrix HomSuperAlgebra::ad_matrix(const Vector& x) const {
  const int n = dim();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!bracket(i, j, k).is_zero()) m(k, j) += x(i) * bracket(i, j, k);
  }
  return m;
}

HomSuperCoalgebra::HomSuperCoalgebra(BasisPtr b, Tensor3 d, EvenMap a)
    : basis(std::move(b)), cobracket(std::move(d)), alpha(std::move(a)) {
  require_tensor(cobracket, basis, "cobracket");
  require_square(alpha, basis->size(), "alpha");
}

Tensor2 HomSuperCoalgebra::delta(int i) const {
  Tensor2 out(basis, basis->parity(i));
  for (int j = 0; j < dim(); ++j)
    for (int k = 0; k < dim(); ++k) out(j, k) = cobracket(i, j, k);
  return out;
}

Tensor2 HomSuperCoalgebra::delta(const Vector& x) const {
  Tensor2 out(basis, x.parity());
  for (int i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k)
        if (!cobracket(i, j, k).is_zero()) out(j, k) += x(i) * cobracket(i, j, k);
  }
  return out;
}

HomSuperBialgebra::HomSuperBialgebra(HomSuperAlgebra a, Tensor3 d) : algebra(std::move(a)), cobracket(std::move(d)) {
  require_tensor(cobracket, algebra.basis, "cobracket");
}

bool operator==(const HomSuperAlgebra& a, const HomSuperAlgebra& b) {
  return same_basis(a.basis, b.basis) && a.bracket == b.bracket && a.alpha == b.alpha;
}

bool operator==(const HomSuperBialgebra& a, const HomSuperBialgebra& b) {
  return a.algebra == b.algebra && a.cobracket == b.cobracket;
}

std::vector<Tensor2> cobracket_images(const HomSuperCoalgebra& c) {
  std::vector<Tensor2> out;
  for (int i = 0; i < c.dim(); ++i) out.push_back(c.delta(i));
  return out;
}

Tensor3 cobracket_from_images(const BasisPtr& basis, const std::vector<Tensor2>& images) {
  const int n = basis->size();
  if (static_cast<int>(images.size()) != n) throw StructureError("need one image per basis element");
  Tensor3 d(basis, Parity::even);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) d(i, j, k) = images[i](j, k);
  return d;
}

// ---------------------------------------------------------------------------

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back({prefix + v.axiom, v.indices, v.residual, v.index_basis});
}

bool CheckReport::failed(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

std::vector<std::string> CheckReport::failed_axioms() const {
  std::vector<std::string> out;
  for (const auto& v : violations)
    if (std::find(out.begin(), out.end(), v.axiom) == out.end()) out.push_back(v.axiom);
  return out;
}

void CheckReport::normalize() {
  std::map<std::string, int> rank;
  for (const auto& v : violations) rank.emplace(v.axiom, static_cast<int>(rank.size()));
  std::stable_sort(violations.begin(), violations.end(), [&](const Violation& a, const Violation& b) {
    int ra = rank[a.axiom], rb = rank[b.axiom];
    if (ra != rb) return ra < rb;
    return a.indices < b.indices;
  });
}

std::string CheckReport::to_text() const {
  if (passed()) return "all checks passed\n";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.axiom << " (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) {
      if (i) os << ", ";
      os << (v.index_basis ? v.index_basis->label(v.indices[i]) : std::to_string(v.indices[i]));
    }
    os << "): " << v.residual.to_string() << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

CheckReport check_alpha_even(const BasisPtr& basis, const EvenMap& alpha) {
  CheckReport rep;
  const int n = basis->size();
  for (int j = 0; j < n; ++j) {
    Vector col(basis, basis->parity(j));
    bool bad = false;
    for (int i = 0; i < n; ++i)
      if (basis->parity(i) != basis->parity(j) && !alpha(i, j).is_zero()) {
        col(i) = alpha(i, j);
        bad = true;
      }
    if (bad) rep.record("alpha-even", {j}, col);
  }
  return rep;
}

CheckReport check_bracket_grading(const HomSuperAlgebra& A) {
  CheckReport rep;
  const auto& b = *A.basis;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      Vector off(A.basis, b.parity(i) + b.parity(j));
      for (int k = 0; k < A.dim(); ++k)
        if (b.parity(k) != b.parity(i) + b.parity(j)) off(k) = A.bracket(i, j, k);
      rep.record("bracket-grading", {i, j}, off);
    }
  return rep;
}

CheckReport check_bracket_skew(const HomSuperAlgebra& A) {
  CheckReport rep;
  const auto& b = *A.basis;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = i; j < A.dim(); ++j) {
      Vector r = A.bracket_basis(i, j);
      Vector s = A.bracket_basis(j, i);
      s *= koszul(b.parity(i), b.parity(j));
      rep.record("bracket-skew", {i, j}, r + s);
    }
  return rep;
}

CheckReport check_hom_super_jacobi(const HomSuperAlgebra& A) {
  CheckReport rep;
  const int n = A.dim();
  const auto& b = *A.basis;
  std::vector<Vector> ax;
  for (int i = 0; i < n; ++i) ax.push_back(A.alpha_of(basis_vector(A.basis, i)));
  std::vector<Vector> br;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) br.push_back(A.bracket_basis(i, j));
  auto B = [&](int i, int j) -> const Vector& { return br[static_cast<std::size_t>(i) * n + j]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vector t1 = A.bracket_of(ax[x], B(y, z));
        t1 *= koszul(b.parity(x), b.parity(z));
        Vector t2 = A.bracket_of(ax[y], B(z, x));
        t2 *= koszul(b.parity(y), b.parity(x));
        Vector t3 = A.bracket_of(ax[z], B(x, y));
        t3 *= koszul(b.parity(z), b.parity(y));
        rep.record("hom-super-jacobi", {x, y, z}, t1 + t2 + t3);
      }
  return rep;
}

CheckReport check_multiplicativity(const HomSuperAlgebra& A) {
  CheckReport rep;
  const int n = A.dim();
  std::vector<Vector> ax;
  for (int i = 0; i < n; ++i) ax.push_back(A.alpha_of(basis_vector(A.basis, i)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rep.record("multiplicativity", {i, j}, A.alpha_of(A.bracket_basis(i, j)) - A.bracket_of(ax[i], ax[j]));
  return rep;
}

CheckReport check_algebra(const HomSuperAlgebra& A, bool multiplicative) {
  CheckReport rep;
  rep.append(check_alpha_even(A.basis, A.alpha));
  rep.append(check_bracket_grading(A));
  rep.append(check_bracket_skew(A));
  rep.append(check_hom_super_jacobi(A));
  if (multiplicative) rep.append(check_multiplicativity(A));
  return rep;
}

CheckReport check_cobracket_grading(const HomSuperCoalgebra& C) {
  CheckReport rep;
  const auto& b = *C.basis;
  for (int i = 0; i < C.dim(); ++i) {
    Tensor2 off(C.basis, b.parity(i) + Parity::odd);
    for (int j = 0; j < C.dim(); ++j)
      for (int k = 0; k < C.dim(); ++k)
        if (b.parity(j) + b.parity(k) != b.parity(i)) off(j, k) = C.cobracket(i, j, k);
    rep.record("cobracket-grading", {i}, off);
  }
  return rep;
}

namespace {

Tensor2 tau_checked(const Tensor2& x, const CheckOptions& opt) {
  if (!opt.drop_tau_sign) return tau(x);
  Tensor2 out(x.basis(), x.parity());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) out(j, i) = x(i, j);
  return out;
}

// (alpha (x) Delta)(t) for t in L(x)L
Tensor3 alpha_tensor_delta(const HomSuperCoalgebra& C, const Tensor2& t) {
  const int n = C.dim();
  Tensor3 out(C.basis, t.parity());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& tab = t(a, b);
      if (tab.is_zero()) continue;
      for (int p = 0; p < n; ++p) {
        const Scalar& al = C.alpha(p, a);
        if (al.is_zero()) continue;
        Scalar f = tab * al;
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            if (!C.cobracket(b, q, r).is_zero()) out(p, q, r) += f * C.cobracket(b, q, r);
      }
    }
  return out;
}

}  // namespace

CheckReport check_cobracket_skew(const HomSuperCoalgebra& C, const CheckOptions& opt) {
  CheckReport rep;
  for (int i = 0; i < C.dim(); ++i) {
    Tensor2 d = C.delta(i);
    rep.record("cobracket-skew", {i}, d + tau_checked(d, opt));
  }
  return rep;
}

CheckReport check_cojacobi(const HomSuperCoalgebra& C) {
  CheckReport rep;
  for (int i = 0; i < C.dim(); ++i) {
    Tensor3 t = alpha_tensor_delta(C, C.delta(i));
    Tensor3 x1 = xi(t);
    Tensor3 x2 = xi(x1);
    rep.record("co-hom-super-jacobi", {i}, t + x1 + x2);
  }
  return rep;
}

CheckReport check_comultiplicativity(const HomSuperCoalgebra& C) {
  CheckReport rep;
  for (int i = 0; i < C.dim(); ++i) {
    Vector ai = apply(C.alpha, basis_vector(C.basis, i));
    rep.record("comultiplicativity", {i}, C.delta(ai) - apply_even_map_tensor<2>(C.alpha, C.delta(i)));
  }
  return rep;
}

CheckReport check_coalgebra(const HomSuperCoalgebra& C, bool multiplicative, const CheckOptions& opt) {
  CheckReport rep;
  rep.append(check_alpha_even(C.basis, C.alpha));
  rep.append(check_cobracket_grading(C));
  rep.append(check_cobracket_skew(C, opt));
  rep.append(check_cojacobi(C));
  if (multiplicative) rep.append(check_comultiplicativity(C));
  return rep;
}

CheckReport check_compatibility(const HomSuperBialgebra& B) {
  CheckReport rep;
  const int n = B.dim();
  const auto& b = *B.basis();
  const HomSuperCoalgebra C = B.coalgebra();
  std::vector<Tensor2> d = cobracket_images(C);
  std::vector<Vector> ax;
  for (int i = 0; i < n; ++i) ax.push_back(B.algebra.alpha_of(basis_vector(B.basis(), i)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Tensor2 lhs = C.delta(B.algebra.bracket_basis(i, j));
      Tensor2 r1 = ad_action<2>(B.algebra, ax[i], d[j]);
      Tensor2 r2 = ad_action<2>(B.algebra, ax[j], d[i]);
      r2 *= koszul(b.parity(i), b.parity(j));
      rep.record("compatibility", {i, j}, lhs - r1 + r2);
    }
  return rep;
}

CheckReport check_bialgebra(const HomSuperBialgebra& B, bool multiplicative, const CheckOptions& opt) {
  CheckReport rep;
  rep.append(check_algebra(B.algebra, multiplicative));
  CheckReport co = check_coalgebra(B.coalgebra(), multiplicative, opt);
  // alpha-even already covered by the algebra pass
  for (auto& v : co.violations)
    if (v.axiom != "alpha-even") rep.violations.push_back(std::move(v));
  // compatibility needs homogeneous alpha(x); an odd part is already reported
  if (!rep.failed("alpha-even")) rep.append(check_compatibility(B));
  return rep;
}

std::vector<std::string> algebra_axioms(bool multiplicative) {
  std::vector<std::string> v{"alpha-even", "bracket-grading", "bracket-skew", "hom-super-jacobi"};
  if (multiplicative) v.push_back("multiplicativity");
  return v;
}

std::vector<std::string> coalgebra_axioms(bool multiplicative) {
  std::vector<std::string> v{"alpha-even", "cobracket-grading", "cobracket-skew", "co-hom-super-jacobi"};
  if (multiplicative) v.push_back("comultiplicativity");
  return v;
}

std::vector<std::string> bialgebra_axioms(bool multiplicative) {
  std::vector<std::string> v = algebra_axioms(multiplicative);
  auto co = coalgebra_axioms(multiplicative);
  v.insert(v.end(), co.begin() + 1, co.end());
  v.push_back("compatibility");
  return v;
}

// ---------------------------------------------------------------------------

template <int K>
Tensor<K> ad_action(const HomSuperAlgebra& A, const Vector& x, const Tensor<K>& gamma) {
  static_assert(K >= 1 && K <= 3, "ad_action supports arity 1..3");
  if (!x.is_homogeneous()) throw ParityError("ad_x needs homogeneous x");
  const Matrix L = A.ad_matrix(x);
  const Parity out = gamma.parity() + x.parity();
  Tensor<K> total(A.basis, out);
  const auto& b = *A.basis;
  for (int s = 0; s < K; ++s) {
    Tensor<K> signed_gamma = gamma;
    for (std::size_t f = 0; f < gamma.flat_size(); ++f) {
      if (gamma.flat_at(f).is_zero()) continue;
      auto ix = gamma.unflat(f);
      Parity before = Parity::even;
      for (int t = 0; t < s; ++t) before = before + b.parity(ix[t]);
      if (koszul(x.parity(), before) < 0) signed_gamma.flat_at(f) *= -1;
    }
    std::array<const Matrix*, K> maps;
    maps.fill(&A.alpha);
    maps[s] = &L;
    total += apply_slot_maps<K>(maps, signed_gamma, out);
  }
  return total;
}

template Tensor<1> ad_action<1>(const HomSuperAlgebra&, const Vector&, const Tensor<1>&);
template Tensor<2> ad_action<2>(const HomSuperAlgebra&, const Vector&, const Tensor<2>&);
template Tensor<3> ad_action<3>(const HomSuperAlgebra&, const Vector&, const Tensor<3>&);

std::vector<Tensor2> delta0(const HomSuperAlgebra& A, const Tensor2& r) {
  if (!(apply_even_map_tensor<2>(A.alpha, r) == r)) throw PreconditionError("delta0: r is not fixed by alpha(x)alpha");
  std::vector<Tensor2> out;
  for (int i = 0; i < A.dim(); ++i) out.push_back(ad_action<2>(A, i, r));
  return out;
}

namespace {

Tensor2 eval_cochain(const std::vector<Tensor2>& f, const Vector& v, Parity p) {
  Tensor2 out(v.basis(), p);
  for (int m = 0; m < v.dim(); ++m)
    if (!v(m).is_zero()) out += f[m] * v(m);
  return out;
}

}  // namespace

std::vector<Tensor2> delta1(const HomSuperAlgebra& A, const std::vector<Tensor2>& f) {
  const int n = A.dim();
  const auto& b = *A.basis;
  if (static_cast<int>(f.size()) != n) throw DimensionError("delta1: cochain needs one value per basis element");
  std::vector<Vector> ax;
  for (int i = 0; i < n; ++i) ax.push_back(A.alpha_of(basis_vector(A.basis, i)));
  for (int j = 0; j < n; ++j) {
    Tensor2 lhs = eval_cochain(f, ax[j], f[j].parity());
    if (!(lhs == apply_even_map_tensor<2>(A.alpha, f[j])))
      throw PreconditionError("delta1: cochain does not commute with alpha at " + b.label(j));
  }
  std::vector<Tensor2> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Tensor2 t = eval_cochain(f, A.bracket_basis(i, j), b.parity(i) + b.parity(j));
      t -= ad_action<2>(A, ax[i], f[j]);
      Tensor2 u = ad_action<2>(A, ax[j], f[i]);
      u *= koszul(b.parity(i), b.parity(j));
      t += u;
      out.push_back(std::move(t));
    }
  return out;
}

std::vector<Tensor2> delta1(const HomSuperAlgebra& A, const Tensor3& cobracket) {
  return delta1(A, cobracket_images(HomSuperCoalgebra(A.basis, cobracket, A.alpha)));
}

}  // namespace hlsb
