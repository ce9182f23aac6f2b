#pragma once
// Z2-graded linear algebra on a fixed ordered basis.

#include "hlsb/scalar.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hlsb {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline bool is_odd(Parity p) { return p == Parity::odd; }
// (-1)^{|a||b|}
inline int koszul(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }
const char* to_string(Parity p);
Parity parse_parity(std::string_view s);

// Sign in <x, phi> = (-1)^{|x||phi|} <phi, x>.
Scalar pairing_sign(Parity phi_parity, Parity x_parity);

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class SuperBasis {
 public:
  struct Element {
    std::string label;
    Parity parity;
  };

  SuperBasis() = default;
  explicit SuperBasis(std::vector<Element> elems);

  int size() const { return static_cast<int>(elems_.size()); }
  Parity parity(int i) const { return elems_[i].parity; }
  const std::string& label(int i) const { return elems_[i].label; }
  const std::vector<Element>& elements() const { return elems_; }
  int index_of(std::string_view label) const;

  friend bool operator==(const SuperBasis& a, const SuperBasis& b);

 private:
  std::vector<Element> elems_;
};

using BasisPtr = std::shared_ptr<const SuperBasis>;
BasisPtr make_basis(std::vector<SuperBasis::Element> elems);
// First basis followed by the second, labels of the second suffixed when
// they collide.
BasisPtr direct_sum(const SuperBasis& a, const SuperBasis& b, const std::string& suffix = "*");

bool same_basis(const BasisPtr& a, const BasisPtr& b);

// Column j holds the coordinates of f(e_j). Also used for operators that
// are not even (e.g. ad of an odd element); evenness is checked on demand.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  Matrix pow(int n) const;
  bool is_zero() const;

  // entry (i, j) must vanish when parities of target i and source j differ
  bool is_even(const SuperBasis& target, const SuperBasis& source) const;

  friend Matrix operator*(const Matrix& f, const Matrix& g);
  friend Matrix operator+(const Matrix& f, const Matrix& g);
  friend Matrix operator-(const Matrix& f, const Matrix& g);
  friend Matrix operator*(const Scalar& s, const Matrix& f);
  friend bool operator==(const Matrix& f, const Matrix& g);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

using EvenMap = Matrix;

// Homogeneous element of the K-th tensor power of the space spanned by a
// basis. Coefficients stored densely, first index slowest.
template <int K>
class Tensor {
  static_assert(K >= 1 && K <= 4);

 public:
  using Index = std::array<int, K>;

  Tensor() = default;
  Tensor(BasisPtr basis, Parity parity) : basis_(std::move(basis)), parity_(parity) {
    std::size_t n = 1;
    for (int k = 0; k < K; ++k) n *= static_cast<std::size_t>(basis_->size());
    c_.assign(n, Scalar());
  }

  const BasisPtr& basis() const { return basis_; }
  int dim() const { return basis_ ? basis_->size() : 0; }
  Parity parity() const { return parity_; }
  std::size_t flat_size() const { return c_.size(); }

  std::size_t flat(const Index& ix) const {
    std::size_t f = 0;
    for (int k = 0; k < K; ++k) f = f * dim() + ix[k];
    return f;
  }
  Index unflat(std::size_t f) const {
    Index ix{};
    for (int k = K - 1; k >= 0; --k) {
      ix[k] = static_cast<int>(f % dim());
      f /= dim();
    }
    return ix;
  }
  Parity index_parity(const Index& ix) const {
    Parity p = Parity::even;
    for (int k = 0; k < K; ++k) p = p + basis_->parity(ix[k]);
    return p;
  }

  Scalar& at(const Index& ix) { return c_[flat(ix)]; }
  const Scalar& at(const Index& ix) const { return c_[flat(ix)]; }
  template <class... I>
  Scalar& operator()(I... i) { return at(Index{static_cast<int>(i)...}); }
  template <class... I>
  const Scalar& operator()(I... i) const { return at(Index{static_cast<int>(i)...}); }
  Scalar& flat_at(std::size_t f) { return c_[f]; }
  const Scalar& flat_at(std::size_t f) const { return c_[f]; }

  bool is_zero() const {
    for (const auto& s : c_)
      if (!s.is_zero()) return false;
    return true;
  }
  bool is_homogeneous() const {
    for (std::size_t f = 0; f < c_.size(); ++f)
      if (!c_[f].is_zero() && index_parity(unflat(f)) != parity_) return false;
    return true;
  }

  Tensor& operator+=(const Tensor& o) {
    check_compatible(o);
    if (is_zero()) parity_ = o.parity_;
    for (std::size_t f = 0; f < c_.size(); ++f)
      if (!o.c_[f].is_zero()) c_[f] += o.c_[f];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_compatible(o);
    if (is_zero()) parity_ = o.parity_;
    for (std::size_t f = 0; f < c_.size(); ++f)
      if (!o.c_[f].is_zero()) c_[f] -= o.c_[f];
    return *this;
  }
  Tensor& operator*=(const Scalar& s) {
    for (auto& c : c_)
      if (!c.is_zero()) c *= s;
    return *this;
  }
  Tensor& operator*=(int s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  Tensor operator-() const {
    Tensor r = *this;
    return r *= -1;
  }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t f = 0; f < a.c_.size(); ++f)
      if (!(a.c_[f] == b.c_[f])) return false;
    return true;
  }

 private:
  void check_compatible(const Tensor& o) const {
    if (!same_basis(basis_, o.basis_)) throw DimensionError("tensors over different bases");
    // a zero summand carries no parity information
    if (parity_ != o.parity_ && !o.is_zero() && !is_zero())
      throw ParityError("adding tensors of different parity");
  }

  BasisPtr basis_;
  Parity parity_ = Parity::even;
  std::vector<Scalar> c_;
};

using Vector = Tensor<1>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

Vector basis_vector(const BasisPtr& basis, int i);
// f(x) for a vector x
Vector apply(const EvenMap& f, const Vector& x);

// tau(x (x) y) = (-1)^{|x||y|} y (x) x
Tensor2 tau(const Tensor2& x);
// xi(x (x) y (x) z) = (-1)^{|x|(|y|+|z|)} y (x) z (x) x
Tensor3 xi(const Tensor3& x);

// f applied slot-wise; no signs since f is even.
template <int K>
Tensor<K> apply_even_map_tensor(const EvenMap& f, const Tensor<K>& x);

// maps[s] applied to slot s; maps may be odd, so the caller names the
// parity of the result.
template <int K>
Tensor<K> apply_slot_maps(const std::array<const Matrix*, K>& maps, const Tensor<K>& x, Parity out_parity);

// x (x) y
template <int K, int L>
Tensor<K + L> tensor_product(const Tensor<K>& x, const Tensor<L>& y);

// A residual of any rank, kept for reports.
struct AnyTensor {
  int rank = 0;
  BasisPtr basis;
  Parity parity = Parity::even;
  std::vector<Scalar> coeffs;

  AnyTensor() = default;
  template <int K>
  AnyTensor(const Tensor<K>& t)  // NOLINT(google-explicit-constructor)
      : rank(K), basis(t.basis()), parity(t.parity()) {
    coeffs.reserve(t.flat_size());
    for (std::size_t f = 0; f < t.flat_size(); ++f) coeffs.push_back(t.flat_at(f));
  }
  bool is_zero() const;
  // "c*e1(x)e2 + ..." in basis labels
  std::string to_string() const;
};

}  // namespace hlsb
