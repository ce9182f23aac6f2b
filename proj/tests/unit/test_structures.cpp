#include "helpers.hpp"

#include <doctest.h>

using namespace ut;

namespace {

// basis residuals of one axiom, keyed by index tuple; absent means zero
std::map<std::vector<int>, std::vector<Scalar>> residuals_of(const CheckReport& rep, const std::string& axiom) {
  std::map<std::vector<int>, std::vector<Scalar>> out;
  for (const auto& v : rep.violations)
    if (v.axiom == axiom) out[v.indices] = v.residual.coeffs;
  return out;
}

template <int K>
Tensor<K> residual_tensor(const std::map<std::vector<int>, std::vector<Scalar>>& m, const std::vector<int>& ix,
                          const BasisPtr& b, Parity p) {
  Tensor<K> t(b, p);
  auto it = m.find(ix);
  if (it == m.end()) return t;
  for (std::size_t f = 0; f < t.flat_size(); ++f) t.flat_at(f) = it->second[f];
  return t;
}

// random homogeneous vector of parity p
Vector random_vector(const BasisPtr& b, Parity p, std::mt19937_64& g) {
  Vector v(b, p);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < b->size(); ++i)
    if (b->parity(i) == p) v(i) = Scalar(c(g));
  return v;
}

}  // namespace

TEST_SUITE("hom-structures") {
  TEST_CASE("bracket skew-supersymmetry") {
    TwoDim two;
    CHECK(check_bracket_skew(two.make().algebra).passed());
    BasisPtr b = eeo();
    CHECK(check_bracket_skew(HomSuperAlgebra::abelian(b, Matrix::identity(3))).passed());
    BasisPtr ee = basis_of({{"e1", Parity::even}, {"e2", Parity::even}});
    HomSuperAlgebra bad(ee, t3(ee, {{0, 1, 1, 1}, {1, 0, 1, 1}}), Matrix::identity(2));
    CheckReport rep = check_bracket_skew(bad);
    REQUIRE_FALSE(rep.passed());
    CHECK(rep.violations.front().indices == std::vector<int>{0, 1});
  }

  TEST_CASE("hom-super-Jacobi") {
    TwoDim two;
    CHECK(check_hom_super_jacobi(two.make({{"c", 0}}).algebra).passed());
    CHECK(check_hom_super_jacobi(HomSuperAlgebra::abelian(eeo(), diag({2, 3, 5}))).passed());
    CheckReport rep = check_hom_super_jacobi(two.make({{"a2", 1}, {"b", 1}, {"c", 1}}).algebra);
    CHECK_FALSE(rep.passed());
    CHECK(rep.failed("hom-super-jacobi"));
  }

  TEST_CASE("multiplicativity") {
    SpacePtr s = make_space({{"a4", false}, {"b4", false}});
    Scalar a4 = Scalar::param(s, "a4"), b4 = Scalar::param(s, "b4");
    BasisPtr b = eeo();
    HomSuperAlgebra row(b, t3(b, {{0, 1, 1, b4}, {1, 0, 1, -b4}}), diag({1, a4, -1}));
    CHECK(check_multiplicativity(row).passed());

    TwoDim two;
    CHECK(check_multiplicativity(HomSuperAlgebra(two.basis, two.make().algebra.bracket, Matrix::identity(2))).passed());

    BasisPtr eo = even_odd();
    HomSuperAlgebra bad(eo, t3(eo, {{1, 1, 0, 1}}), diag({1, a4}));
    CheckReport rep = check_multiplicativity(bad);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].indices == std::vector<int>{1, 1});
    // alpha[e2,e2] - [a4 e2, a4 e2] = (1 - a4^2) e1
    CHECK(rep.violations[0].residual.coeffs[0] == Scalar(1) - a4 * a4);
  }

  TEST_CASE("co-hom-super-Jacobi") {
    TwoDim two;
    CHECK(check_cojacobi(two.make().coalgebra()).passed());
    HomSuperCoalgebra zero(eeo(), Tensor3(eeo(), Parity::even), Matrix::identity(3));
    CHECK(check_cojacobi(zero).passed());
  }

  TEST_CASE("comultiplicativity") {
    TwoDim two;
    auto B = two.make();
    CHECK(check_comultiplicativity(HomSuperCoalgebra(B.basis(), B.cobracket, Matrix::identity(2))).passed());
    CHECK(check_comultiplicativity(two.make({{"a1", 1}}).coalgebra()).passed());
    CheckReport rep = check_comultiplicativity(B.coalgebra());
    REQUIRE(rep.violations.size() == 1);
    // Delta(a2 e2) - (a1 a2) Delta(e2): coefficient on e1(x)e2 is a2 d (1 - a1)
    Scalar a1 = two.p("a1"), a2 = two.p("a2"), d = two.p("d");
    CHECK(rep.violations[0].residual.coeffs[1] == a2 * d * (Scalar(1) - a1));
  }

  TEST_CASE("compatibility") {
    TwoDim two;
    CHECK(check_compatibility(two.make({{"a1", 1}, {"a2", 0}})).passed());
    CHECK(check_compatibility(two.make({{"a1", -1}, {"b", 0}})).passed());
    auto A = two.make().algebra;
    CHECK(check_compatibility(HomSuperBialgebra(A, Tensor3(A.basis, Parity::even))).passed());
    CheckReport rep = check_compatibility(two.make({{"a2", 1}, {"b", 1}, {"d", 1}, {"a1", 1}}));
    CHECK(rep.failed("compatibility"));
  }

  TEST_CASE("full 2-dim constraint set passes and the zero structure passes") {
    TwoDim two;
    for (Scalar a1 : {Scalar(1), Scalar(-1)}) {
      CHECK(check_bialgebra(two.make({{"a1", a1}, {"a2", 0}}), false).passed());
      CHECK(check_bialgebra(two.make({{"a1", a1}, {"b", 0}}), false).passed());
      CHECK(check_bialgebra(two.make({{"a1", a1}, {"c", 0}, {"d", 0}}), false).passed());
    }
    HomSuperAlgebra z = HomSuperAlgebra::abelian(eeo(), Matrix(3, 3));
    CHECK(check_bialgebra(HomSuperBialgebra(z, Tensor3(eeo(), Parity::even)), true).passed());
  }

  TEST_CASE("a single violated axiom is named") {
    TwoDim two;
    auto good = two.make({{"a1", 1}, {"a2", 0}});
    REQUIRE(check_bialgebra(good, false).passed());

    auto bad_skew = good;
    bad_skew.algebra.bracket(1, 0, 1) = Scalar(0);
    CHECK(check_bialgebra(bad_skew, false).failed("bracket-skew"));

    auto bad_alpha = good;
    bad_alpha.algebra.alpha(0, 1) = Scalar(1);
    CHECK(check_bialgebra(bad_alpha, false).failed("alpha-even"));

    auto bad_co = good;
    bad_co.cobracket(1, 1, 0) = Scalar(0);
    CHECK(check_bialgebra(bad_co, false).failed("cobracket-skew"));

    auto bad_grading = good;
    bad_grading.cobracket(0, 0, 1) = Scalar(1);
    CHECK(check_bialgebra(bad_grading, false).failed("cobracket-grading"));
  }

  TEST_CASE("violations come in lexicographic index order") {
    auto g = fx::rng(301);
    for (int k = 0; k < 10; ++k) {
      auto B = fx::random_structure({Parity::even, Parity::odd, Parity::odd}, g, 60);
      CheckReport rep = check_hom_super_jacobi(B.algebra);
      for (std::size_t i = 1; i < rep.violations.size(); ++i)
        CHECK(rep.violations[i - 1].indices < rep.violations[i].indices);
    }
  }

  TEST_CASE("ad_action") {
    TwoDim two;
    auto A = two.make().algebra;
    HomSuperAlgebra flat = HomSuperAlgebra::abelian(eeo(), Matrix::identity(3));
    auto g = fx::rng(302);
    Tensor2 gamma = random_tensor<2>(eeo(), Parity::odd, g);
    CHECK(ad_action<2>(flat, 2, gamma).is_zero());
    CHECK(ad_action<3>(flat, 0, random_tensor<3>(eeo(), Parity::even, g)).is_zero());

    // ad_{e2}(e1 (x) e2) = [e2,e1] (x) a(e2) + a(e1) (x) [e2,e2]
    Scalar a1 = two.p("a1"), a2 = two.p("a2"), b = two.p("b"), c = two.p("c");
    Tensor2 y = t2(A.basis, {{0, 1, 1}}, Parity::odd);
    Tensor2 expect = t2(A.basis, {{1, 1, -a2 * b}, {0, 0, a1 * c}});
    CHECK(ad_action<2>(A, 1, y) == expect);

    // n = 2 formula with tensor products of homogeneous vectors
    auto B = fx::random_structure({Parity::even, Parity::odd, Parity::odd}, g, 70);
    for (int i = 0; i < 20; ++i) {
      Parity px = i % 2 ? Parity::odd : Parity::even;
      Parity p1 = (i / 2) % 2 ? Parity::odd : Parity::even;
      Parity p2 = (i / 4) % 2 ? Parity::odd : Parity::even;
      Vector x = random_vector(B.basis(), px, g), y1 = random_vector(B.basis(), p1, g), y2 = random_vector(B.basis(), p2, g);
      const auto& Al = B.algebra;
      Tensor2 lhs = ad_action<2>(Al, x, tensor_product<1, 1>(y1, y2));
      Tensor2 rhs = tensor_product<1, 1>(Al.bracket_of(x, y1), Al.alpha_of(y2));
      Tensor2 second = tensor_product<1, 1>(Al.alpha_of(y1), Al.bracket_of(x, y2));
      second *= koszul(px, p1);
      CHECK(lhs == rhs + second);
    }
  }

  TEST_CASE("basis residuals determine residuals on homogeneous vectors") {
    auto g = fx::rng(303);
    const std::vector<std::vector<Parity>> shapes = {
        {Parity::even, Parity::odd},
        {Parity::even, Parity::even, Parity::odd},
        {Parity::even, Parity::odd, Parity::odd},
        {Parity::even, Parity::even, Parity::odd, Parity::odd}};
    for (int inst = 0; inst < 20; ++inst) {
      auto B = fx::random_structure(shapes[inst % shapes.size()], g, 50);
      const auto& A = B.algebra;
      const BasisPtr& b = B.basis();
      auto jac = residuals_of(check_hom_super_jacobi(A), "hom-super-jacobi");
      auto comp = residuals_of(check_compatibility(B), "compatibility");
      auto coj = residuals_of(check_cojacobi(B.coalgebra()), "co-hom-super-jacobi");
      for (int trial = 0; trial < 4; ++trial) {
        Parity px = trial & 1 ? Parity::odd : Parity::even;
        Parity py = trial & 2 ? Parity::odd : Parity::even;
        Parity pz = Parity::odd;
        Vector x = random_vector(b, px, g), y = random_vector(b, py, g), z = random_vector(b, pz, g);

        // direct evaluation on vectors
        Vector j1 = A.bracket_of(A.alpha_of(x), A.bracket_of(y, z));
        j1 *= koszul(px, pz);
        Vector j2 = A.bracket_of(A.alpha_of(y), A.bracket_of(z, x));
        j2 *= koszul(py, px);
        Vector j3 = A.bracket_of(A.alpha_of(z), A.bracket_of(x, y));
        j3 *= koszul(pz, py);
        Vector direct_j = j1 + j2 + j3;
        Vector combo_j(b, px + py + pz);
        for (int i = 0; i < b->size(); ++i)
          for (int j = 0; j < b->size(); ++j)
            for (int k = 0; k < b->size(); ++k) {
              Scalar w = x(i) * y(j) * z(k);
              if (!w.is_zero()) combo_j += residual_tensor<1>(jac, {i, j, k}, b, px + py + pz) * w;
            }
        CHECK(direct_j == combo_j);

        Tensor2 dc = B.delta(A.bracket_of(x, y));
        dc -= ad_action<2>(A, A.alpha_of(x), B.delta(y));
        Tensor2 u = ad_action<2>(A, A.alpha_of(y), B.delta(x));
        u *= koszul(px, py);
        dc += u;
        Tensor2 combo_c(b, px + py);
        for (int i = 0; i < b->size(); ++i)
          for (int j = 0; j < b->size(); ++j) {
            Scalar w = x(i) * y(j);
            if (!w.is_zero()) combo_c += residual_tensor<2>(comp, {i, j}, b, px + py) * w;
          }
        CHECK(dc == combo_c);

        Tensor3 cj = cyclic_sum(alpha_tensor_delta(B, B.delta(x)));
        Tensor3 combo_cj(b, px);
        for (int i = 0; i < b->size(); ++i)
          if (!x(i).is_zero()) combo_cj += residual_tensor<3>(coj, {i}, b, px) * x(i);
        CHECK(cj == combo_cj);
      }
    }
  }

  TEST_CASE("delta0") {
    TwoDim two;
    auto A = two.make().algebra;
    for (const auto& t : delta0(A, Tensor2(A.basis, Parity::even))) CHECK(t.is_zero());

    HomSuperAlgebra flat = HomSuperAlgebra::abelian(eeo(), Matrix::identity(3));
    auto g = fx::rng(304);
    for (const auto& t : delta0(flat, random_tensor<2>(eeo(), Parity::even, g))) CHECK(t.is_zero());

    for (const auto& rc : fx::coboundary_cases()) {
      auto d0 = delta0(rc.A, rc.r);
      for (int i = 0; i < rc.A.dim(); ++i) CHECK(d0[i] == ad_action<2>(rc.A, i, rc.r));
    }

    Tensor2 unfixed = t2(eeo(), {{0, 1, 1}});
    HomSuperAlgebra scaled = HomSuperAlgebra::abelian(eeo(), diag({2, 1, 1}));
    CHECK_THROWS_AS(delta0(scaled, unfixed), PreconditionError);
  }

  TEST_CASE("delta1 vanishes on bialgebras and on coboundaries") {
    for (const auto& inst : fx::catalog_instances()) {
      if (!inst.multiplicative) continue;
      const auto& B = inst.def->structure;
      if (!check_bialgebra(B, true).passed()) continue;
      for (const auto& t : delta1(B.algebra, B.cobracket)) CHECK_MESSAGE(t.is_zero(), inst.name);
    }

    int tested = 0;
    auto g = fx::rng(305);
    for (const auto& c : fx::concrete_instances(1, 305)) {
      auto fixed = fx::fixed_even_tensors(c.B.algebra, false);
      if (fixed.empty()) continue;
      for (int k = 0; k < 5 && tested < 100; ++k, ++tested) {
        Tensor2 r = fx::random_combination(fixed, c.B.basis(), g);
        for (const auto& t : delta1(c.B.algebra, delta0(c.B.algebra, r))) CHECK_MESSAGE(t.is_zero(), c.name);
      }
    }
    CHECK(tested == 100);
  }

  TEST_CASE("delta1 detects a broken cobracket") {
    TwoDim two;
    auto B = two.make({{"a1", 1}, {"a2", 1}, {"b", 0}, {"d", 0}});
    B.cobracket(0, 1, 1) = Scalar(1);  // Delta(e1) = e2 (x) e2
    auto d1 = delta1(B.algebra, B.cobracket);
    Scalar c = two.p("c");
    CHECK(d1[0 * 2 + 1] == t2(B.basis(), {{0, 1, c}, {1, 0, -c}}, Parity::odd));
  }

  TEST_CASE("delta1 requires a cochain commuting with alpha") {
    TwoDim two;
    auto B = two.make();
    CHECK_THROWS_AS(delta1(B.algebra, B.cobracket), PreconditionError);
  }
}
