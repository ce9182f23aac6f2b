#pragma once
// Shared test plumbing: seeded randomness, specialization of parameterized
// instances to rational points, and the linear-constraint search for
// r-matrices and perturbation tensors.

#include "hlsb/catalog.hpp"
#include "hlsb/yang_baxter.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fx {

using namespace hlsb;

// HLSB_SEED if set, else a fixed default
std::uint64_t seed();
std::mt19937_64 rng(std::uint64_t salt = 0);

SpacePtr no_params();

// a rational from a small pool biased towards +-1 (richer fixed spaces)
Rational small_rational(std::mt19937_64& g, bool nonzero);
std::vector<Rational> random_point(const ParamSpace& s, std::mt19937_64& g);

Scalar specialize(const Scalar& x, const std::vector<Rational>& point);
Matrix specialize(const Matrix& m, const std::vector<Rational>& point);
template <int K>
Tensor<K> specialize(const Tensor<K>& t, const std::vector<Rational>& point) {
  Tensor<K> out(t.basis(), t.parity());
  for (std::size_t f = 0; f < t.flat_size(); ++f) out.flat_at(f) = specialize(t.flat_at(f), point);
  return out;
}
HomSuperBialgebra specialize(const HomSuperBialgebra& B, const std::vector<Rational>& point);

// every (row, instance) of the catalog, in order
struct Instance {
  std::string name;
  bool multiplicative;
  const Definition* def;
};
std::vector<Instance> catalog_instances();

// concrete copies of multiplicative catalog instances at seeded points
struct Concrete {
  std::string name;
  HomSuperBialgebra B;
};
std::vector<Concrete> concrete_instances(int points_per_instance, std::uint64_t salt);

// exact rational nullspace of a dense system (rows x cols)
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows, int cols);

// Basis of the even tensors fixed by alpha(x)alpha (and skew when asked).
// Requires constant structure constants.
std::vector<Tensor2> fixed_even_tensors(const HomSuperAlgebra& A, bool skew);
Tensor2 random_combination(const std::vector<Tensor2>& basis, const BasisPtr& b, std::mt19937_64& g);
// all combinations with coefficients in {-1, 0, 1}, at most `limit`
std::vector<Tensor2> small_combinations(const std::vector<Tensor2>& basis, const BasisPtr& b, std::size_t limit);

// r satisfying every coboundary hypothesis, found by the search above
struct RCase {
  std::string name;
  HomSuperAlgebra A;
  Tensor2 r;
};
std::vector<RCase> coboundary_cases();

struct TCase {
  std::string name;
  HomSuperBialgebra B;
  Tensor2 t;
};
std::vector<TCase> perturbation_cases();

// dense random structure with graded constants, not necessarily valid
HomSuperBialgebra random_structure(const std::vector<Parity>& parities, std::mt19937_64& g, int density_percent);

}  // namespace fx
