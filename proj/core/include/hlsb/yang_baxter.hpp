#pragma once
// r-matrices, the classical Hom-Yang-Baxter equation, coboundary and
// quasi-triangular structures, and perturbation of cobrackets.

#include "hlsb/structures.hpp"

#include <array>

namespace hlsb {

// An even element of L (x) L; odd tensors are rejected on construction.
class RMatrix {
 public:
  RMatrix(const HomSuperAlgebra& A, Tensor2 t);
  static RMatrix zero(const HomSuperAlgebra& A);

  const Tensor2& tensor() const { return t_; }
  bool skew() const { return skew_; }                // r21 = tau(r) = -r
  bool alpha_fixed() const { return alpha_fixed_; }  // a(x)a (r) = r

 private:
  Tensor2 t_;
  bool skew_ = false, alpha_fixed_ = false;
};

// A named hypothesis failed; witness is a basis label or empty.
struct HypothesisError : PreconditionError {
  HypothesisError(std::string hyp, std::string wit);
  std::string hypothesis, witness;
};

// ([r12, r'13], [r12, r'23], [r13, r'23])
std::array<Tensor3, 3> partial_brackets(const HomSuperAlgebra& A, const RMatrix& r, const RMatrix& rp);
// [[r, r]]^a
Tensor3 chybe_residual(const HomSuperAlgebra& A, const RMatrix& r);

// Delta(x) = ad_x(r), no hypotheses checked
Tensor3 coboundary_cobracket(const HomSuperAlgebra& A, const Tensor2& r);

// Throws HypothesisError naming the first failing hypothesis among
// "multiplicative", "alpha(x)alpha(r) = r", "r21 = -r",
// "alpha^(x)3(ad_x [[r,r]]) = 0".
HomSuperBialgebra coboundary_from_r(const HomSuperAlgebra& A, const RMatrix& r);

// a(x)a(r) = r and Delta(e_i) = ad_{e_i}(r)
CheckReport check_coboundary(const HomSuperBialgebra& B, const RMatrix& r);
// requires check_coboundary to pass
CheckReport check_quasi_triangular(const HomSuperBialgebra& B, const RMatrix& r);

struct QuasiTriangularStatements {
  bool chybe;  // [[r,r]] = 0
  bool left;   // (a (x) Delta)(r) = -[r12, r13]
  bool right;  // (Delta (x) a)(r) = [r13, r23]
};
QuasiTriangularStatements quasi_triangular_equivalences(const HomSuperBialgebra& B, const RMatrix& r);

// (a (x) Delta)(t) and (Delta (x) a)(t)
Tensor3 alpha_tensor_delta(const HomSuperBialgebra& B, const Tensor2& t);
Tensor3 delta_tensor_alpha(const HomSuperBialgebra& B, const Tensor2& t);
// x -> a^(x)3(ad_x(T)), one tensor per basis element
std::vector<Tensor3> alpha3_ad(const HomSuperAlgebra& A, const Tensor3& T);
// (1 + xi + xi^2)(T)
Tensor3 cyclic_sum(const Tensor3& T);

// Hypotheses of the perturbation theorem, each under its own axiom name,
// plus the stronger condition "corollary" which is reported but not needed.
CheckReport check_perturbation_hypotheses(const HomSuperBialgebra& B, const RMatrix& t);
// true when every violation in the report is the corollary condition
bool perturbation_hypotheses_hold(const CheckReport& report);
// Delta_t = Delta + ad(t); throws HypothesisError when a hypothesis fails
HomSuperBialgebra perturb_cobracket(const HomSuperBialgebra& B, const RMatrix& t);

}  // namespace hlsb
