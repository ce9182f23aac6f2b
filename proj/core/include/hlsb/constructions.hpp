#pragma once
// Derived objects: twists, linear duals, representations, semidirect
// products, matched-pair doubles and Manin supertriples.

#include "hlsb/structures.hpp"

#include <optional>
#include <tuple>

namespace hlsb {

// ---------------------------------------------------------------- morphisms

struct Morphism {
  EvenMap map;  // column j = image of source basis element j
};

// alpha' f = f alpha, f[.,.] = [.,.]' f(x)f, (f (x) f) Delta = Delta' f
CheckReport check_morphism(const HomSuperBialgebra& source, const HomSuperBialgebra& target, const Morphism& f);
CheckReport check_algebra_morphism(const HomSuperAlgebra& source, const HomSuperAlgebra& target, const Morphism& f);

// (L, beta o [.,.], Delta o beta, beta alpha). Throws PreconditionError if
// beta is not a self-morphism of B.
HomSuperBialgebra twist(const HomSuperBialgebra& B, const Morphism& beta);
// twist by alpha^n, giving twist map alpha^{n+1}; B must be multiplicative
HomSuperBialgebra twist_power(const HomSuperBialgebra& B, int n);

// Carries a structure along an isomorphism gamma: [x,y]' = gamma[gamma^-1 x,
// gamma^-1 y] etc. The inverse is supplied; it is checked, not computed.
HomSuperBialgebra transport(const HomSuperBialgebra& B, const EvenMap& gamma, const EvenMap& gamma_inverse);

// -------------------------------------------------------------------- duals

// How <phi (x) psi, x (x) y> expands: koszul carries (-1)^{|psi||x|}.
enum class PairingConvention { koszul, unsigned_ };

// Dual basis: same parities, labels toggled with a trailing '*'.
BasisPtr dual_basis(const SuperBasis& b);

// Dual bracket constants from the cobracket and vice versa; alpha* = alpha^T.
HomSuperBialgebra dualize(const HomSuperBialgebra& B, PairingConvention conv = PairingConvention::koszul);

// Cobracket on the space paired with A, dual to A's bracket.
Tensor3 dual_cobracket_of(const HomSuperAlgebra& A, const BasisPtr& dual, PairingConvention conv = PairingConvention::koszul);

// ---------------------------------------------------------- representations

struct Representation {
  HomSuperAlgebra algebra;
  BasisPtr module;
  std::vector<Matrix> rho;  // rho[i] acts on the module for basis element i
  EvenMap A;

  Matrix rho_of(const Vector& x) const;
};

Representation adjoint_representation(const HomSuperAlgebra& A);
Representation zero_representation(const HomSuperAlgebra& A, BasisPtr module, EvenMap a);

// evenness of rho plus rho(a x) A = A rho(x) and
// rho([x,y]) A = rho(a x) rho(y) - (-1)^{|x||y|} rho(a y) rho(x)
CheckReport check_representation(const Representation& R);

// Which side of the evaluation pairing the new module sits on.
//   dual_space: module V, result V*, <v, phi> = phi(v)
//   predual:    module V*, result V, same evaluation read the other way
enum class DualSide { dual_space, predual };

// <rho*(x) xi, v> = -(-1)^{|x||xi|} <xi, rho(x) v>, with A* = A^T.
Representation dual_representation(const Representation& R, DualSide side = DualSide::dual_space);

// [(Id - a^2) x, a y] = 0 on basis pairs
CheckReport check_admissible(const HomSuperAlgebra& A);

HomSuperAlgebra semidirect_product(const HomSuperAlgebra& A, const Representation& R);

// ------------------------------------------------------------- matched pairs

struct MatchedPairData {
  HomSuperAlgebra g, gprime;
  Representation rho;       // g on g'
  Representation rhoprime;  // g' on g
};

// g (+) g' with the mixed bracket built from rho and rho'; alpha on each half.
HomSuperAlgebra matched_pair_double(const MatchedPairData& M);
// both representation checks and the two displayed compatibility identities
CheckReport check_matched_pair(const MatchedPairData& M);
// the data used for (g, g*) with rho = ad*, rho' = the coadjoint of g*
MatchedPairData coadjoint_matched_pair(const HomSuperAlgebra& g, const HomSuperAlgebra& gstar);

// Hom-Lie axioms of both algebras and the two pairing identities, with
// Delta dual to the bracket of g* and Delta* dual to the bracket of g.
// Throws PreconditionError if either algebra fails check_admissible.
CheckReport check_prop_ahmedd(const HomSuperAlgebra& g, const HomSuperAlgebra& gstar,
                              PairingConvention conv = PairingConvention::koszul);

// ----------------------------------------------------------- Manin triples

struct BilinearForm {
  BasisPtr space;
  Matrix gram;

  Scalar value(const Vector& u, const Vector& v) const;
  bool is_supersymmetric() const;
  Scalar determinant() const;
};

// exact cofactor expansion over column subsets
Scalar determinant(const Matrix& m);

struct ManinSupertriple {
  HomSuperAlgebra algebra;  // g (+) g*
  BilinearForm form;
  CheckReport report;
};

ManinSupertriple manin_supertriple(const HomSuperAlgebra& g, const HomSuperAlgebra& gstar);

}  // namespace hlsb
