#pragma once
// Hom-Lie superalgebras, supercoalgebras and superbialgebras given by
// structure constants, with their axiom checkers.

#include "hlsb/super.hpp"

#include <string>
#include <vector>

namespace hlsb {

struct StructureError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// [e_i, e_j] = sum_k bracket(i, j, k) e_k. The structure tensor is stored as
// an even Tensor3 (nonzero entries satisfy |i| + |j| = |k|).
struct HomSuperAlgebra {
  BasisPtr basis;
  Tensor3 bracket;
  EvenMap alpha;

  HomSuperAlgebra() = default;
  HomSuperAlgebra(BasisPtr b, Tensor3 c, EvenMap a);
  // zero bracket, given alpha
  static HomSuperAlgebra abelian(BasisPtr b, EvenMap a);

  int dim() const { return basis->size(); }
  Vector bracket_of(const Vector& x, const Vector& y) const;
  Vector bracket_basis(int i, int j) const;
  // y -> [x, y]
  Matrix ad_matrix(const Vector& x) const;
  Vector alpha_of(const Vector& x) const { return apply(alpha, x); }
};

// Delta(e_i) = sum_{j,k} cobracket(i, j, k) e_j (x) e_k.
struct HomSuperCoalgebra {
  BasisPtr basis;
  Tensor3 cobracket;
  EvenMap alpha;

  HomSuperCoalgebra() = default;
  HomSuperCoalgebra(BasisPtr b, Tensor3 d, EvenMap a);

  int dim() const { return basis->size(); }
  Tensor2 delta(int i) const;
  Tensor2 delta(const Vector& x) const;
};

struct HomSuperBialgebra {
  HomSuperAlgebra algebra;
  Tensor3 cobracket;

  HomSuperBialgebra() = default;
  HomSuperBialgebra(HomSuperAlgebra a, Tensor3 d);

  const BasisPtr& basis() const { return algebra.basis; }
  const EvenMap& alpha() const { return algebra.alpha; }
  int dim() const { return algebra.dim(); }
  HomSuperCoalgebra coalgebra() const { return {algebra.basis, cobracket, algebra.alpha}; }
  Tensor2 delta(int i) const { return coalgebra().delta(i); }
  Tensor2 delta(const Vector& x) const { return coalgebra().delta(x); }
};

bool operator==(const HomSuperAlgebra& a, const HomSuperAlgebra& b);
bool operator==(const HomSuperBialgebra& a, const HomSuperBialgebra& b);

// Cobracket as a list of images of basis elements.
std::vector<Tensor2> cobracket_images(const HomSuperCoalgebra& c);
Tensor3 cobracket_from_images(const BasisPtr& basis, const std::vector<Tensor2>& images);

struct Violation {
  std::string axiom;
  std::vector<int> indices;
  AnyTensor residual;
  BasisPtr index_basis;  // names the indices; defaults to the residual's basis
};

struct CheckReport {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  // records the residual only when it is nonzero
  template <int K>
  void record(const std::string& axiom, std::vector<int> indices, const Tensor<K>& residual,
              const BasisPtr& index_basis = nullptr) {
    if (!residual.is_zero())
      violations.push_back({axiom, std::move(indices), AnyTensor(residual), index_basis ? index_basis : residual.basis()});
  }
  // rank-0 residual
  void record_scalar(const std::string& axiom, std::vector<int> indices, const Scalar& value,
                     const BasisPtr& index_basis = nullptr) {
    if (value.is_zero()) return;
    AnyTensor t;
    t.coeffs.push_back(value);
    violations.push_back({axiom, std::move(indices), std::move(t), index_basis});
  }
  void append(const CheckReport& other, const std::string& prefix = "");
  bool failed(const std::string& axiom) const;
  std::vector<std::string> failed_axioms() const;
  // stable sort by axiom (first-appearance order), then index tuple
  void normalize();
  std::string to_text() const;
};

// Knobs used only for fault-injection tests of the checkers themselves.
struct CheckOptions {
  // drop the Koszul sign inside the super-twist used by the co-skew check
  bool drop_tau_sign = false;
};

CheckReport check_alpha_even(const BasisPtr& basis, const EvenMap& alpha);
CheckReport check_bracket_grading(const HomSuperAlgebra& A);
CheckReport check_bracket_skew(const HomSuperAlgebra& A);
CheckReport check_hom_super_jacobi(const HomSuperAlgebra& A);
CheckReport check_multiplicativity(const HomSuperAlgebra& A);
// grading, skew, Jacobi (+ multiplicativity when flagged)
CheckReport check_algebra(const HomSuperAlgebra& A, bool multiplicative);

CheckReport check_cobracket_grading(const HomSuperCoalgebra& C);
CheckReport check_cobracket_skew(const HomSuperCoalgebra& C, const CheckOptions& opt = {});
CheckReport check_cojacobi(const HomSuperCoalgebra& C);
CheckReport check_comultiplicativity(const HomSuperCoalgebra& C);
CheckReport check_coalgebra(const HomSuperCoalgebra& C, bool multiplicative, const CheckOptions& opt = {});

CheckReport check_compatibility(const HomSuperBialgebra& B);
CheckReport check_bialgebra(const HomSuperBialgebra& B, bool multiplicative, const CheckOptions& opt = {});
// axiom names the three aggregate checkers can report, in report order
std::vector<std::string> algebra_axioms(bool multiplicative);
std::vector<std::string> coalgebra_axioms(bool multiplicative);
std::vector<std::string> bialgebra_axioms(bool multiplicative);

// ad_x(y1 (x) ... (x) yK) = sum_i (-1)^{|x|(|y1|+...+|y_{i-1}|)}
//                           a(y1) (x) ... (x) [x, yi] (x) ... (x) a(yK)
// K in {1, 2, 3}; x must be homogeneous.
template <int K>
Tensor<K> ad_action(const HomSuperAlgebra& A, const Vector& x, const Tensor<K>& gamma);
template <int K>
Tensor<K> ad_action(const HomSuperAlgebra& A, int x_index, const Tensor<K>& gamma) {
  return ad_action<K>(A, basis_vector(A.basis, x_index), gamma);
}

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// x -> ad_x(r); requires alpha^{(x)2}(r) = r.
std::vector<Tensor2> delta0(const HomSuperAlgebra& A, const Tensor2& r);
// (d1 f)(x, y) = f([x,y]) - ad_{a(x)} f(y) + (-1)^{|x||y|} ad_{a(y)} f(x),
// returned row-major over basis pairs. f must commute with alpha.
std::vector<Tensor2> delta1(const HomSuperAlgebra& A, const std::vector<Tensor2>& f);
std::vector<Tensor2> delta1(const HomSuperAlgebra& A, const Tensor3& cobracket);

}  // namespace hlsb
