#pragma once
// Small builders shared by the unit suites.

#include "support/fixtures.hpp"

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

namespace ut {

using namespace hlsb;

inline BasisPtr basis_of(std::initializer_list<std::pair<const char*, Parity>> elems) {
  std::vector<SuperBasis::Element> v;
  for (const auto& [l, p] : elems) v.push_back({l, p});
  return make_basis(std::move(v));
}

inline BasisPtr even_odd() { return basis_of({{"e1", Parity::even}, {"e2", Parity::odd}}); }
inline BasisPtr eeo() { return basis_of({{"e1", Parity::even}, {"e2", Parity::even}, {"e3", Parity::odd}}); }

inline Matrix diag(std::initializer_list<Scalar> d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  int i = 0;
  for (const auto& s : d) m(i, i) = s, ++i;
  return m;
}

inline Tensor2 t2(const BasisPtr& b, std::initializer_list<std::tuple<int, int, Scalar>> entries,
                  Parity p = Parity::even) {
  Tensor2 t(b, p);
  for (const auto& [i, j, s] : entries) t(i, j) += s;
  return t;
}

inline Tensor3 t3(const BasisPtr& b, std::initializer_list<std::tuple<int, int, int, Scalar>> entries,
                  Parity p = Parity::even) {
  Tensor3 t(b, p);
  for (const auto& [i, j, k, s] : entries) t(i, j, k) += s;
  return t;
}

// The 2-dim family over free parameters a1, a2, b, c, d.
struct TwoDim {
  SpacePtr space = make_space({{"a1", false}, {"a2", false}, {"b", false}, {"c", false}, {"d", false}});
  BasisPtr basis = even_odd();
  Scalar p(const char* name) const { return Scalar::param(space, name); }

  // values replace parameters by name; anything else stays free
  HomSuperBialgebra make(std::initializer_list<std::pair<const char*, Scalar>> values = {}) const {
    auto get = [&](const char* n) {
      for (const auto& [k, v] : values)
        if (std::string(k) == n) return v;
      return p(n);
    };
    Scalar a1 = get("a1"), a2 = get("a2"), b = get("b"), c = get("c"), d = get("d");
    Tensor3 br = t3(basis, {{0, 1, 1, b}, {1, 0, 1, -b}, {1, 1, 0, c}});
    Tensor3 co = t3(basis, {{1, 0, 1, d}, {1, 1, 0, -d}});
    return {HomSuperAlgebra(basis, br, diag({a1, a2})), co};
  }
};

template <int K>
Tensor<K> random_tensor(const BasisPtr& b, Parity p, std::mt19937_64& g) {
  Tensor<K> t(b, p);
  std::uniform_int_distribution<int> c(-3, 3);
  for (std::size_t f = 0; f < t.flat_size(); ++f)
    if (t.index_parity(t.unflat(f)) == p) t.flat_at(f) = Scalar(c(g));
  return t;
}

inline Matrix random_even_map(const BasisPtr& b, std::mt19937_64& g) {
  Matrix m(b->size(), b->size());
  std::uniform_int_distribution<int> c(-2, 2);
  for (int i = 0; i < b->size(); ++i)
    for (int j = 0; j < b->size(); ++j)
      if (b->parity(i) == b->parity(j)) m(i, j) = Scalar(c(g));
  return m;
}

inline const Definition& instance(const std::string& row, std::size_t variant = 0) {
  return catalog_row(row).instances.at(variant);
}

}  // namespace ut
