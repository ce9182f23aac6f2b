#include "hlsb/super.hpp"

#include <sstream>

namespace hlsb {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(std::string_view s) {
  if (s == "even" || s == "0") return Parity::even;
  if (s == "odd" || s == "1") return Parity::odd;
  throw ParityError("parity must be 'even' or 'odd', got '" + std::string(s) + "'");
}

Scalar pairing_sign(Parity phi_parity, Parity x_parity) { return Scalar(koszul(phi_parity, x_parity)); }

SuperBasis::SuperBasis(std::vector<Element> elems) : elems_(std::move(elems)) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].label.empty()) throw std::invalid_argument("empty basis label");
    for (std::size_t j = 0; j < i; ++j)
      if (elems_[j].label == elems_[i].label)
        throw std::invalid_argument("duplicate basis label '" + elems_[i].label + "'");
  }
}

int SuperBasis::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].label == label) return static_cast<int>(i);
  return -1;
}

bool operator==(const SuperBasis& a, const SuperBasis& b) {
  if (a.elems_.size() != b.elems_.size()) return false;
  for (std::size_t i = 0; i < a.elems_.size(); ++i)
    if (a.elems_[i].label != b.elems_[i].label || a.elems_[i].parity != b.elems_[i].parity) return false;
  return true;
}

BasisPtr make_basis(std::vector<SuperBasis::Element> elems) {
  return std::make_shared<const SuperBasis>(std::move(elems));
}

BasisPtr direct_sum(const SuperBasis& a, const SuperBasis& b, const std::string& suffix) {
  std::vector<SuperBasis::Element> e = a.elements();
  for (const auto& x : b.elements()) {
    std::string lab = x.label;
    while (a.index_of(lab) >= 0) lab += suffix;
    e.push_back({lab, x.parity});
  }
  return make_basis(std::move(e));
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::pow(int n) const {
  if (rows_ != cols_) throw DimensionError("power of a non-square map");
  if (n < 0) throw std::invalid_argument("negative power of a linear map");
  Matrix r = identity(rows_);
  for (int k = 0; k < n; ++k) r = r * (*this);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_even(const SuperBasis& target, const SuperBasis& source) const {
  if (target.size() != rows_ || source.size() != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (target.parity(i) != source.parity(j) && !(*this)(i, j).is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& f, const Matrix& g) {
  if (f.cols_ != g.rows_) throw DimensionError("composing maps of incompatible sizes");
  Matrix r(f.rows_, g.cols_);
  for (int i = 0; i < f.rows_; ++i)
    for (int k = 0; k < f.cols_; ++k) {
      const Scalar& a = f(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < g.cols_; ++j)
        if (!g(k, j).is_zero()) r(i, j) += a * g(k, j);
    }
  return r;
}

Matrix operator+(const Matrix& f, const Matrix& g) {
  if (f.rows_ != g.rows_ || f.cols_ != g.cols_) throw DimensionError("adding maps of different sizes");
  Matrix r = f;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += g.a_[i];
  return r;
}

Matrix operator-(const Matrix& f, const Matrix& g) {
  if (f.rows_ != g.rows_ || f.cols_ != g.cols_) throw DimensionError("subtracting maps of different sizes");
  Matrix r = f;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= g.a_[i];
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& f) {
  Matrix r = f;
  for (auto& x : r.a_)
    if (!x.is_zero()) x *= s;
  return r;
}

bool operator==(const Matrix& f, const Matrix& g) {
  if (f.rows_ != g.rows_ || f.cols_ != g.cols_) return false;
  for (std::size_t i = 0; i < f.a_.size(); ++i)
    if (!(f.a_[i] == g.a_[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------

Vector basis_vector(const BasisPtr& basis, int i) {
  Vector v(basis, basis->parity(i));
  v(i) = Scalar(1);
  return v;
}

Vector apply(const EvenMap& f, const Vector& x) {
  return apply_even_map_tensor<1>(f, x);
}

Tensor2 tau(const Tensor2& x) {
  Tensor2 out(x.basis(), x.parity());
  const auto& b = *x.basis();
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) {
      const Scalar& c = x(i, j);
      if (c.is_zero()) continue;
      out(j, i) = c * koszul(b.parity(i), b.parity(j));
    }
  return out;
}

Tensor3 xi(const Tensor3& x) {
  Tensor3 out(x.basis(), x.parity());
  const auto& b = *x.basis();
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j)
      for (int k = 0; k < x.dim(); ++k) {
        const Scalar& c = x(i, j, k);
        if (c.is_zero()) continue;
        out(j, k, i) = c * koszul(b.parity(i), b.parity(j) + b.parity(k));
      }
  return out;
}

template <int K>
Tensor<K> apply_slot_maps(const std::array<const Matrix*, K>& maps, const Tensor<K>& x, Parity out_parity) {
  const int n = x.dim();
  for (const Matrix* m : maps)
    if (m->rows() != n || m->cols() != n) throw DimensionError("map and tensor dimensions differ");
  Tensor<K> cur = x;
  // one slot at a time: O(K n^{K+1})
  for (int slot = 0; slot < K; ++slot) {
    const Matrix& f = *maps[slot];
    Tensor<K> next(x.basis(), slot + 1 == K ? out_parity : x.parity());
    for (std::size_t fl = 0; fl < cur.flat_size(); ++fl) {
      const Scalar& c = cur.flat_at(fl);
      if (c.is_zero()) continue;
      auto ix = cur.unflat(fl);
      const int j = ix[slot];
      for (int i = 0; i < n; ++i) {
        const Scalar& a = f(i, j);
        if (a.is_zero()) continue;
        ix[slot] = i;
        next.at(ix) += a * c;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

template Tensor<1> apply_slot_maps<1>(const std::array<const Matrix*, 1>&, const Tensor<1>&, Parity);
template Tensor<2> apply_slot_maps<2>(const std::array<const Matrix*, 2>&, const Tensor<2>&, Parity);
template Tensor<3> apply_slot_maps<3>(const std::array<const Matrix*, 3>&, const Tensor<3>&, Parity);

template <int K>
Tensor<K> apply_even_map_tensor(const EvenMap& f, const Tensor<K>& x) {
  std::array<const Matrix*, K> maps;
  maps.fill(&f);
  return apply_slot_maps<K>(maps, x, x.parity());
}

template Tensor<1> apply_even_map_tensor<1>(const EvenMap&, const Tensor<1>&);
template Tensor<2> apply_even_map_tensor<2>(const EvenMap&, const Tensor<2>&);
template Tensor<3> apply_even_map_tensor<3>(const EvenMap&, const Tensor<3>&);

template <int K, int L>
Tensor<K + L> tensor_product(const Tensor<K>& x, const Tensor<L>& y) {
  if (!same_basis(x.basis(), y.basis())) throw DimensionError("tensor product over different bases");
  Tensor<K + L> out(x.basis(), x.parity() + y.parity());
  for (std::size_t a = 0; a < x.flat_size(); ++a) {
    if (x.flat_at(a).is_zero()) continue;
    for (std::size_t b = 0; b < y.flat_size(); ++b) {
      if (y.flat_at(b).is_zero()) continue;
      out.flat_at(a * y.flat_size() + b) = x.flat_at(a) * y.flat_at(b);
    }
  }
  return out;
}

template Tensor<2> tensor_product<1, 1>(const Tensor<1>&, const Tensor<1>&);
template Tensor<3> tensor_product<1, 2>(const Tensor<1>&, const Tensor<2>&);
template Tensor<3> tensor_product<2, 1>(const Tensor<2>&, const Tensor<1>&);

// ---------------------------------------------------------------------------

bool AnyTensor::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

std::string AnyTensor::to_string() const {
  if (rank == 0) return coeffs.empty() ? "0" : coeffs[0].to_string();
  std::ostringstream os;
  const int n = basis ? basis->size() : 0;
  bool first = true;
  for (std::size_t f = 0; f < coeffs.size(); ++f) {
    if (coeffs[f].is_zero()) continue;
    std::vector<int> ix(rank);
    std::size_t g = f;
    for (int k = rank - 1; k >= 0; --k) {
      ix[k] = static_cast<int>(g % n);
      g /= n;
    }
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[f].to_string() << ")*";
    for (int k = 0; k < rank; ++k) os << (k ? "(x)" : "") << basis->label(ix[k]);
  }
  return first ? "0" : os.str();
}

}  // namespace hlsb
