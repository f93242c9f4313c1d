#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootobs/abelian.hpp"

#include <random>

using namespace rootobs;

namespace {

IntMat mat(int r, int c, std::vector<long long> v) {
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = v[size_t(i) * c + j];
  return m;
}

std::vector<Int> vec(std::vector<long long> v) {
  std::vector<Int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

Int gcd_of_entries(const IntMat& a) {
  Int g = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) g = gcd_int(g, a(i, j));
  return g;
}

IntMat random_matrix(std::mt19937_64& rng, int max_dim, int max_abs) {
  std::uniform_int_distribution<int> dim(1, max_dim), entry(-max_abs, max_abs);
  IntMat a(dim(rng), dim(rng));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
  return a;
}

void check_snf_contract(const IntMat& a, const SmithDecomposition& s) {
  REQUIRE(s.u * a * s.v == s.d);
  Int du = s.u.determinant(), dv = s.v.determinant();
  REQUIRE((du == 1 || du == -1));
  REQUIRE((dv == 1 || dv == -1));
  auto diag = s.diagonal();
  bool seen_zero = false;
  for (size_t i = 0; i < diag.size(); ++i) {
    REQUIRE(diag[i] >= 0);
    if (diag[i] == 0) seen_zero = true;
    else REQUIRE(!seen_zero);  // zeros trail
    if (i > 0 && diag[i - 1] != 0) REQUIRE(diag[i] % diag[i - 1] == 0);
  }
  for (int i = 0; i < s.d.rows(); ++i)
    for (int j = 0; j < s.d.cols(); ++j)
      if (i != j) REQUIRE(s.d(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form: pinned examples") {
  SUBCASE("identity") {
    IntMat a = IntMat::identity(2);
    auto s = smith_normal_form(a);
    CHECK(s.u == IntMat::identity(2));
    CHECK(s.v == IntMat::identity(2));
    CHECK(s.d == IntMat::identity(2));
  }
  SUBCASE("[[2,4],[6,8]]") {
    IntMat a = mat(2, 2, {2, 4, 6, 8});
    auto s = smith_normal_form(a);
    check_snf_contract(a, s);
    // gcd-of-minors: d1 = gcd of entries, d1*d2 = |det|
    Int d1 = gcd_of_entries(a);
    Int det = a.determinant();
    CHECK(s.d(0, 0) == d1);
    CHECK(s.d(0, 0) * s.d(1, 1) == abs(det));
    CHECK(s.d(0, 0) == 2);
    CHECK(s.d(1, 1) == 4);
  }
  SUBCASE("A2 Cartan") {
    IntMat a = mat(2, 2, {2, -1, -1, 2});
    auto s = smith_normal_form(a);
    check_snf_contract(a, s);
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 3);
  }
  SUBCASE("deterministic for fixed input") {
    IntMat a = mat(3, 2, {4, -6, 2, 8, 0, 5});
    auto s1 = smith_normal_form(a);
    auto s2 = smith_normal_form(a);
    CHECK(s1.u == s2.u);
    CHECK(s1.v == s2.v);
    CHECK(s1.d == s2.d);
  }
}

TEST_CASE("smith normal form: random contract suite") {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 500; ++t) {
    IntMat a = random_matrix(rng, 6, 9);
    check_snf_contract(a, smith_normal_form(a));
  }
}

TEST_CASE("cokernel: pinned examples") {
  SUBCASE("standard basis of Z^2") {
    FinAbGroup g = cokernel(IntMat::identity(2));
    CHECK(g.is_trivial());
  }
  SUBCASE("single column (2,0) in Z^2") {
    FinAbGroup g = cokernel(mat(2, 1, {2, 0}));
    CHECK(g.free_rank == 1);
    REQUIRE(g.invariant_factors.size() == 1);
    CHECK(g.invariant_factors[0] == 2);
  }
  SUBCASE("A2 coroots inside the coweight lattice") {
    // In fundamental-coweight coordinates the coroot columns are the Cartan matrix.
    FinAbGroup g = cokernel(mat(2, 2, {2, -1, -1, 2}));
    CHECK(g.free_rank == 0);
    REQUIRE(g.invariant_factors.size() == 1);
    CHECK(g.invariant_factors[0] == 3);
  }
}

TEST_CASE("cokernel: generator lifts and coordinates agree") {
  std::mt19937_64 rng(7711);
  for (int t = 0; t < 80; ++t) {
    IntMat a = random_matrix(rng, 5, 6);
    FinAbGroup g = cokernel(a);
    // class_of(lift of generator i) = e_i
    for (int i = 0; i < g.ngens(); ++i) {
      std::vector<Rat> lift = g.generator_lifts.column(i);
      std::vector<Int> lift_int(lift.size());
      for (size_t k = 0; k < lift.size(); ++k) {
        REQUIRE(is_integral(lift[k]));
        lift_int[k] = numerator(lift[k]);
      }
      std::vector<Int> cls = g.class_of(lift_int);
      for (int j = 0; j < g.ngens(); ++j) CHECK(cls[j] == (i == j ? 1 : 0));
    }
    // columns of a map to zero
    for (int j = 0; j < a.cols(); ++j) CHECK(g.is_zero_class(g.coord_map * a.column(j)));
  }
}

TEST_CASE("cokernel order equals |det| for nonsingular square matrices") {
  std::mt19937_64 rng(99102);
  int done = 0;
  while (done < 120) {
    IntMat a = random_matrix(rng, 5, 7);
    if (a.rows() != a.cols()) continue;
    Int det = a.determinant();
    if (det == 0) continue;
    FinAbGroup g = cokernel(a);
    CHECK(g.free_rank == 0);
    CHECK(g.order() == abs(det));
    ++done;
  }
}

TEST_CASE("kernel_basis: pinned examples") {
  SUBCASE("zero 1x2 matrix") {
    CHECK(kernel_basis(IntMat(1, 2)) == IntMat::identity(2));
  }
  SUBCASE("[[1,1]]") {
    CHECK(kernel_basis(mat(1, 2, {1, 1})) == mat(2, 1, {1, -1}));
  }
  SUBCASE("[[2,4]]") {
    IntMat a = mat(1, 2, {2, 4});
    IntMat k = kernel_basis(a);
    CHECK(k == mat(2, 1, {2, -1}));
    // enumeration oracle: every small solution is an integer multiple of the basis
    for (long long x = -9; x <= 9; ++x)
      for (long long y = -9; y <= 9; ++y)
        if (2 * x + 4 * y == 0) CHECK(in_column_span(k, vec({x, y})));
    // primitivity
    CHECK(gcd_int(k(0, 0), k(1, 0)) == 1);
  }
}

TEST_CASE("kernel_basis: a*k = 0 and saturation on random input") {
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 120; ++t) {
    IntMat a = random_matrix(rng, 5, 6);
    IntMat k = kernel_basis(a);
    CHECK((a * k).is_zero());
    if (k.cols() > 0) {
      // saturated basis: saturation of the kernel is the kernel itself
      CHECK(saturation(k, a.cols()) == k);
    }
  }
}

TEST_CASE("saturation: pinned examples") {
  CHECK(saturation(mat(2, 1, {2, 0}), 2) == mat(2, 1, {1, 0}));
  CHECK(saturation(IntMat::identity(2), 2) == IntMat::identity(2));
  CHECK(saturation(mat(2, 2, {2, 0, 4, 3}), 2) == IntMat::identity(2));
}

TEST_CASE("saturation: idempotence and containment on random input") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 120; ++t) {
    IntMat s = random_matrix(rng, 5, 5);
    IntMat sat = saturation(s, s.rows());
    CHECK(saturation(sat, s.rows()) == sat);
    for (int j = 0; j < s.cols(); ++j) CHECK(in_column_span(sat, s.column(j)));
  }
}

TEST_CASE("subquotient: pinned examples") {
  SUBCASE("Z/4 by <2>") {
    FinAbGroup amb = FinAbGroup::abstract(0, {4});
    FinAbGroup q = subquotient(amb, mat(1, 1, {2}));
    CHECK(q.free_rank == 0);
    CHECK(q.invariant_factors == std::vector<Int>{2});
  }
  SUBCASE("(Z/2)^2 by zero") {
    FinAbGroup amb = FinAbGroup::abstract(0, {2, 2});
    FinAbGroup q = subquotient(amb, IntMat(2, 0));
    CHECK(q.invariant_factors == (std::vector<Int>{2, 2}));
  }
  SUBCASE("Z/6 by <4>") {
    FinAbGroup amb = FinAbGroup::abstract(0, {6});
    FinAbGroup q = subquotient(amb, mat(1, 1, {4}));
    CHECK(q.invariant_factors == std::vector<Int>{2});
  }
}

TEST_CASE("dual group") {
  for (long long n : {2, 3, 8, 12}) {
    FinAbGroup g = FinAbGroup::abstract(0, {Int(n)});
    CHECK(dual_group(g).same_type(g));
  }
  FinAbGroup klein = FinAbGroup::abstract(0, {2, 2});
  CHECK(dual_group(klein).same_type(klein));
  CHECK(dual_group(FinAbGroup::trivial()).is_trivial());
  CHECK_THROWS_AS(dual_group(FinAbGroup::abstract(1, {})), input_error);
  // involution
  for (auto factors : std::vector<std::vector<Int>>{{2, 4}, {3, 3, 9}, {5}}) {
    FinAbGroup g = FinAbGroup::abstract(0, factors);
    CHECK(dual_group(dual_group(g)).same_type(g));
  }
}

TEST_CASE("hom image and cokernel: pinned examples") {
  SUBCASE("zero map on Z/n") {
    FinAbGroup zn = FinAbGroup::abstract(0, {6});
    auto r = hom_image_cokernel(AbelianHom{zn, zn, mat(1, 1, {0})});
    CHECK(r.image.is_trivial());
    CHECK(r.cokernel.invariant_factors == std::vector<Int>{6});
  }
  SUBCASE("identity on Z/4") {
    FinAbGroup z4 = FinAbGroup::abstract(0, {4});
    auto r = hom_image_cokernel(AbelianHom{z4, z4, mat(1, 1, {1})});
    CHECK(r.image.invariant_factors == std::vector<Int>{4});
    CHECK(r.cokernel.is_trivial());
  }
  SUBCASE("multiplication by 4 on Z/6") {
    FinAbGroup z6 = FinAbGroup::abstract(0, {6});
    auto r = hom_image_cokernel(AbelianHom{z6, z6, mat(1, 1, {4})});
    // direct enumeration: <4> = {0, 4, 2} in Z/6
    CHECK(r.image.invariant_factors == std::vector<Int>{3});
    CHECK(r.cokernel.invariant_factors == std::vector<Int>{2});
  }
}

TEST_CASE("hom image/cokernel: |image| * |cokernel| = |target| on random homs") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> nfac(1, 3), fac(2, 6), coeff(-4, 4);
  for (int t = 0; t < 150; ++t) {
    // random finite groups: make a chain by multiplying factors up
    auto make_group = [&]() {
      int k = nfac(rng);
      std::vector<Int> fs(k);
      Int cur = fac(rng);
      for (int i = 0; i < k; ++i) {
        fs[i] = cur;
        cur *= fac(rng);
      }
      return FinAbGroup::abstract(0, fs);
    };
    FinAbGroup s = make_group(), tg = make_group();
    // a well-defined hom: column i built from elements annihilated by the source order
    IntMat m(tg.ngens(), s.ngens());
    for (int i = 0; i < s.ngens(); ++i) {
      Int ni = s.generator_order(i);
      for (int j = 0; j < tg.ngens(); ++j) {
        Int nj = tg.generator_order(j);
        Int step = nj / gcd_int(ni, nj);
        m(j, i) = Int(coeff(rng)) * step;
      }
    }
    auto r = hom_image_cokernel(AbelianHom{s, tg, m});
    CHECK(r.image.order() * r.cokernel.order() == tg.order());
  }
}

TEST_CASE("exponent") {
  CHECK(FinAbGroup::trivial().exponent() == 1);
  CHECK(FinAbGroup::abstract(0, {2, 4}).exponent() == 4);
  CHECK(FinAbGroup::abstract(0, {2, 2}).exponent() == 2);
  CHECK_THROWS_AS(FinAbGroup::abstract(2, {}).exponent(), input_error);
}

TEST_CASE("subgroup machinery") {
  FinAbGroup z4 = FinAbGroup::abstract(0, {4});
  Subgroup sg = Subgroup::of(z4, mat(1, 1, {2}));
  CHECK(sg.group.invariant_factors == std::vector<Int>{2});
  auto c = sg.coords_of(vec({2}));
  REQUIRE(c.has_value());
  CHECK(!sg.group.is_zero_class(*c));
  CHECK(!sg.coords_of(vec({1})).has_value());

  // subgroup of (Z/2)^2 generated by (1,1)
  FinAbGroup klein = FinAbGroup::abstract(0, {2, 2});
  Subgroup diag = Subgroup::of(klein, mat(2, 1, {1, 1}));
  CHECK(diag.group.invariant_factors == std::vector<Int>{2});
  CHECK(diag.coords_of(vec({1, 1})).has_value());
  CHECK(!diag.coords_of(vec({1, 0})).has_value());
  diag.embedding_hom().validate();
}

TEST_CASE("fault injection hook breaks the smith contract") {
  IntMat a = mat(2, 2, {2, 4, 6, 8});
  set_snf_fault_injection(true);
  auto s = smith_normal_form(a);
  set_snf_fault_injection(false);
  CHECK(!(s.u * a * s.v == s.d));
}
