#include "hlsb/yang_baxter.hpp"

namespace hlsb {

RMatrix::RMatrix(const HomSuperAlgebra& A, Tensor2 t) : t_(std::move(t)) {
  if (!same_basis(t_.basis(), A.basis)) throw DimensionError("r-matrix over a different basis");
  if (!t_.is_homogeneous()) throw ParityError("r-matrix is not homogeneous");
  if (t_.parity() != Parity::even && !t_.is_zero()) throw ParityError("r-matrix must be even (|r| = 0)");
  skew_ = tau(t_) == -t_;
  alpha_fixed_ = apply_even_map_tensor<2>(A.alpha, t_) == t_;
}

RMatrix RMatrix::zero(const HomSuperAlgebra& A) { return RMatrix(A, Tensor2(A.basis, Parity::even)); }

HypothesisError::HypothesisError(std::string hyp, std::string wit)
    : PreconditionError("hypothesis failed: " + hyp + (wit.empty() ? "" : " (at " + wit + ")")),
      hypothesis(std::move(hyp)),
      witness(std::move(wit)) {}

std::array<Tensor3, 3> partial_brackets(const HomSuperAlgebra& A, const RMatrix& r, const RMatrix& rp) {
  const int n = A.dim();
  const auto& pb = *A.basis;
  const Tensor2& R = r.tensor();
  const Tensor2& Q = rp.tensor();
  std::vector<Vector> ae;
  for (int i = 0; i < n; ++i) ae.push_back(A.alpha_of(basis_vector(A.basis, i)));
  std::array<Tensor3, 3> out{Tensor3(A.basis, Parity::even), Tensor3(A.basis, Parity::even),
                             Tensor3(A.basis, Parity::even)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (R(a, b).is_zero()) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (Q(c, d).is_zero()) continue;
          const Scalar w = R(a, b) * Q(c, d);
          const int s = koszul(pb.parity(c), pb.parity(b));
          // [r12, r'13] = (-1)^{|r'1||r2|} [r1, r'1] (x) a(r2) (x) a(r'2)
          Vector ac = A.bracket_basis(a, c);
          // [r12, r'23] = a(r1) (x) [r2, r'1] (x) a(r'2)
          Vector bc = A.bracket_basis(b, c);
          // [r13, r'23] = (-1)^{|r'1||r2|} a(r1) (x) a(r'1) (x) [r2, r'2]
          Vector bd = A.bracket_basis(b, d);
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              for (int u = 0; u < n; ++u) {
                if (!ac(p).is_zero() && !ae[b](q).is_zero() && !ae[d](u).is_zero())
                  out[0](p, q, u) += w * s * ac(p) * ae[b](q) * ae[d](u);
                if (!ae[a](p).is_zero() && !bc(q).is_zero() && !ae[d](u).is_zero())
                  out[1](p, q, u) += w * ae[a](p) * bc(q) * ae[d](u);
                if (!ae[a](p).is_zero() && !ae[c](q).is_zero() && !bd(u).is_zero())
                  out[2](p, q, u) += w * s * ae[a](p) * ae[c](q) * bd(u);
              }
        }
    }
  return out;
}

Tensor3 chybe_residual(const HomSuperAlgebra& A, const RMatrix& r) {
  auto pb = partial_brackets(A, r, r);
  return pb[0] + pb[1] + pb[2];
}

Tensor3 coboundary_cobracket(const HomSuperAlgebra& A, const Tensor2& r) {
  std::vector<Tensor2> img;
  for (int i = 0; i < A.dim(); ++i) img.push_back(ad_action<2>(A, i, r));
  return cobracket_from_images(A.basis, img);
}

Tensor3 cyclic_sum(const Tensor3& T) {
  Tensor3 x1 = xi(T);
  Tensor3 x2 = xi(x1);
  return T + x1 + x2;
}

std::vector<Tensor3> alpha3_ad(const HomSuperAlgebra& A, const Tensor3& T) {
  std::vector<Tensor3> out;
  for (int i = 0; i < A.dim(); ++i) out.push_back(apply_even_map_tensor<3>(A.alpha, ad_action<3>(A, i, T)));
  return out;
}

Tensor3 alpha_tensor_delta(const HomSuperBialgebra& B, const Tensor2& t) {
  const int n = B.dim();
  Tensor3 out(B.basis(), t.parity());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t(a, b).is_zero()) continue;
      for (int p = 0; p < n; ++p) {
        if (B.alpha()(p, a).is_zero()) continue;
        const Scalar w = t(a, b) * B.alpha()(p, a);
        for (int q = 0; q < n; ++q)
          for (int u = 0; u < n; ++u)
            if (!B.cobracket(b, q, u).is_zero()) out(p, q, u) += w * B.cobracket(b, q, u);
      }
    }
  return out;
}

Tensor3 delta_tensor_alpha(const HomSuperBialgebra& B, const Tensor2& t) {
  const int n = B.dim();
  Tensor3 out(B.basis(), t.parity());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t(a, b).is_zero()) continue;
      for (int u = 0; u < n; ++u) {
        if (B.alpha()(u, b).is_zero()) continue;
        const Scalar w = t(a, b) * B.alpha()(u, b);
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q)
            if (!B.cobracket(a, p, q).is_zero()) out(p, q, u) += w * B.cobracket(a, p, q);
      }
    }
  return out;
}

namespace {

void require_multiplicative(const HomSuperAlgebra& A) {
  if (!check_multiplicativity(A).passed()) throw HypothesisError("multiplicative", "");
}

void require_r_shape(const HomSuperAlgebra& A, const RMatrix& r, const char* fixed, const char* skew) {
  if (!r.alpha_fixed()) {
    Tensor2 d = apply_even_map_tensor<2>(A.alpha, r.tensor()) - r.tensor();
    for (std::size_t f = 0; f < d.flat_size(); ++f)
      if (!d.flat_at(f).is_zero()) {
        auto ix = d.unflat(f);
        throw HypothesisError(fixed, A.basis->label(ix[0]) + "(x)" + A.basis->label(ix[1]));
      }
  }
  if (!r.skew()) {
    Tensor2 d = tau(r.tensor()) + r.tensor();
    for (std::size_t f = 0; f < d.flat_size(); ++f)
      if (!d.flat_at(f).is_zero()) {
        auto ix = d.unflat(f);
        throw HypothesisError(skew, A.basis->label(ix[0]) + "(x)" + A.basis->label(ix[1]));
      }
  }
}

}  // namespace

HomSuperBialgebra coboundary_from_r(const HomSuperAlgebra& A, const RMatrix& r) {
  require_multiplicative(A);
  require_r_shape(A, r, "alpha(x)alpha(r) = r", "r21 = -r");
  auto ad = alpha3_ad(A, chybe_residual(A, r));
  for (int i = 0; i < A.dim(); ++i)
    if (!ad[i].is_zero()) throw HypothesisError("alpha^(x)3(ad_x [[r,r]]) = 0", A.basis->label(i));
  return HomSuperBialgebra(A, coboundary_cobracket(A, r.tensor()));
}

CheckReport check_coboundary(const HomSuperBialgebra& B, const RMatrix& r) {
  CheckReport rep;
  rep.record("alpha(x)alpha(r) = r", {}, apply_even_map_tensor<2>(B.alpha(), r.tensor()) - r.tensor());
  for (int i = 0; i < B.dim(); ++i) rep.record("coboundary", {i}, B.delta(i) - ad_action<2>(B.algebra, i, r.tensor()));
  return rep;
}

CheckReport check_quasi_triangular(const HomSuperBialgebra& B, const RMatrix& r) {
  if (!check_coboundary(B, r).passed()) throw PreconditionError("check_quasi_triangular: not a coboundary structure for r");
  CheckReport rep;
  rep.record("chybe", {}, chybe_residual(B.algebra, r));
  return rep;
}

QuasiTriangularStatements quasi_triangular_equivalences(const HomSuperBialgebra& B, const RMatrix& r) {
  if (!check_coboundary(B, r).passed())
    throw PreconditionError("quasi_triangular_equivalences: not a coboundary structure for r");
  auto pb = partial_brackets(B.algebra, r, r);
  QuasiTriangularStatements s{};
  s.chybe = (pb[0] + pb[1] + pb[2]).is_zero();
  s.left = (alpha_tensor_delta(B, r.tensor()) + pb[0]).is_zero();
  s.right = (delta_tensor_alpha(B, r.tensor()) - pb[2]).is_zero();
  return s;
}

CheckReport check_perturbation_hypotheses(const HomSuperBialgebra& B, const RMatrix& t) {
  CheckReport rep;
  rep.append(check_bialgebra(B, true), "B/");
  rep.record("alpha(x)alpha(t) = t", {}, apply_even_map_tensor<2>(B.alpha(), t.tensor()) - t.tensor());
  rep.record("t21 = -t", {}, tau(t.tensor()) + t.tensor());
  Tensor3 inner = chybe_residual(B.algebra, t) + cyclic_sum(alpha_tensor_delta(B, t.tensor()));
  auto ad = alpha3_ad(B.algebra, inner);
  for (int i = 0; i < B.dim(); ++i) rep.record("alpha^(x)3(ad_x([[t,t]] + cyc(alpha(x)Delta)(t))) = 0", {i}, ad[i]);
  rep.record("corollary", {}, inner);
  return rep;
}

bool perturbation_hypotheses_hold(const CheckReport& report) {
  for (const auto& v : report.violations)
    if (v.axiom != "corollary") return false;
  return true;
}

HomSuperBialgebra perturb_cobracket(const HomSuperBialgebra& B, const RMatrix& t) {
  require_multiplicative(B.algebra);
  if (!check_bialgebra(B, true).passed()) throw HypothesisError("multiplicative Hom-Lie superbialgebra", "");
  require_r_shape(B.algebra, t, "alpha(x)alpha(t) = t", "t21 = -t");
  Tensor3 inner = chybe_residual(B.algebra, t) + cyclic_sum(alpha_tensor_delta(B, t.tensor()));
  auto ad = alpha3_ad(B.algebra, inner);
  for (int i = 0; i < B.dim(); ++i)
    if (!ad[i].is_zero())
      throw HypothesisError("alpha^(x)3(ad_x([[t,t]] + cyc(alpha(x)Delta)(t))) = 0", B.basis()->label(i));
  return HomSuperBialgebra(B.algebra, B.cobracket + coboundary_cobracket(B.algebra, t.tensor()));
}

}  // namespace hlsb
