#include <gtest/gtest.h>

#include <random>

#include "modata/catalog.hpp"
#include "modata/io.hpp"
#include "modata/tables.hpp"
#include "oracle.hpp"

using namespace modata;

namespace {

QuadNum q(long a, long ad, long b, long bd, long d) { return QuadNum(rat(a, ad), rat(b, bd), d); }

ExactMatrix z4() {
  QuadNum i = QuadNum::surd(-1);
  return ExactMatrix({{1, 1, 1, 1}, {1, i, -1, -i}, {1, -1, 1, -1}, {1, -i, -1, i}}, Role::Allen, -1);
}

std::vector<CatalogEntry> positives() {
  std::vector<CatalogEntry> out;
  for (auto& e : catalog())
    if (!e.negative) out.push_back(e);
  return out;
}

bool has_failure(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name && c.status == Status::Fail) return true;
  return false;
}

}  // namespace

TEST(Conversions, RankTwoFourierForm) {
  ExactMatrix P = ExactMatrix::integers({{1, 1}, {1, -1}});
  ExactMatrix S = fourier_from_allen(allen_from_eigen(P));
  QuadNum h = q(0, 1, 1, 2, 2);  // 1/sqrt2
  EXPECT_EQ(S, ExactMatrix({{h, h}, {h, -h}}, Role::Fourier, 2));
  EXPECT_TRUE(verify_fourier(S).passed());
}

TEST(Conversions, RankThreeAllenAndFourier) {
  ExactMatrix P = ExactMatrix::integers({{1, 1, 2}, {1, 1, -2}, {1, -1, 0}});
  QuadNum r2 = QuadNum::surd(2);
  ExactMatrix s = allen_from_eigen(P);
  EXPECT_EQ(s, ExactMatrix({{1, 1, r2}, {1, 1, -r2}, {1, -1, 0}}, Role::Allen, 2));
  QuadNum h = rat(1, 2), w = q(0, 1, 1, 2, 2);
  EXPECT_EQ(fourier_from_allen(s), ExactMatrix({{h, h, w}, {h, h, -w}, {w, -w, 0}}, Role::Fourier, 2));
  EXPECT_EQ(norms(s), (std::vector<QuadNum>{4, 4, 2}));
}

TEST(Conversions, AllenFromFourierNeedsNonzeroColumn) {
  ExactMatrix S = ExactMatrix::integers({{1, 0}, {0, 1}}, Role::Fourier);
  EXPECT_THROW(allen_from_fourier(S), ZeroFirstColumnEntry);
}

TEST(Conversions, ZThreeFourierNeedsSecondSurd) {
  ExactMatrix s = find_catalog("rank3-Z3")->table.with_role(Role::Allen);
  EXPECT_THROW(fourier_from_allen(s), SqrtNotInField);
}

TEST(Conversions, EigenFromAllenRejectsBadColumn) {
  EXPECT_THROW(eigen_from_allen(ExactMatrix::integers({{1, 1}, {2, -1}}, Role::Allen)), ShapeError);
}

TEST(VerifyFourier, IdentityFailsPositivity) {
  VerificationReport r = verify_fourier(ExactMatrix::integers({{1, 0}, {0, 1}}, Role::Fourier));
  EXPECT_EQ(r.find("symmetric")->status, Status::Pass);
  EXPECT_EQ(r.find("unitary")->status, Status::Pass);
  EXPECT_EQ(r.first_failure()->name, "column0_positive");
  EXPECT_EQ(r.first_failure()->indices, (std::vector<std::size_t>{1, 0}));
}

TEST(VerifyAllen, CyclicFourIsAllenButNotIntegral) {
  EXPECT_TRUE(verify_allen(z4()).passed());
  VerificationReport r = verify_integral_fourier(z4());
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure()->name, "integer_entries");
}

TEST(VerifyIntegralFourier, RankTwo) {
  EXPECT_TRUE(verify_integral_fourier(ExactMatrix::integers({{1, 1}, {1, -1}}, Role::Allen)).passed());
}

TEST(AllenIntegrality, RankTwoDegreeFour) {
  VerificationReport r = allen_integrality(ExactMatrix::integers({{1, 4}, {1, -1}}));
  const CheckEntry* e = r.find("allen_integrality");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->status, Status::Fail);
  EXPECT_EQ(e->value, "N_111 = 3/2");
  EXPECT_EQ(r.find("allen_entries_integral")->value, "s_11^2 = 1/4");
}

TEST(AllenIntegrality, OrderTwelveHasHalfIntegralLambda) {
  ExactMatrix P = find_catalog("rank5-[1,1,4,3,3]")->table;
  StructureTensor L = structure_constants_lambda(P);
  EXPECT_EQ(L(3, 4, 2), QuadNum(rat(3, 2)));
  EXPECT_TRUE(allen_integrality(P).passed());
}

TEST(AllenIntegrality, EntryCondition) {
  VerificationReport r = allen_integrality(find_catalog("rank5-P1")->table);
  const CheckEntry* e = r.find("allen_entries_integral");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->status, Status::Fail);
  EXPECT_EQ(e->value, "s_32^2 = 1/4");
}

TEST(Degrees, UVBranchWitness) {
  VerificationReport r = degrees_multiplicities(find_catalog("rank3-(u,v)=(1,1/2)")->table);
  const CheckEntry* e = r.first_failure();
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->name, "multiplicity_equals_degree");
  EXPECT_NE(e->value.find("d_0 = 4"), std::string::npos);
  EXPECT_NE(e->value.find("51/16-5/16*sqrt(17)"), std::string::npos);
}

TEST(Degrees, CatalogPositivesHaveMatchingMultiplicities) {
  for (auto& e : positives()) {
    SCOPED_TRACE(e.name);
    EXPECT_TRUE(degrees_multiplicities(e.table).passed());
    EXPECT_TRUE(verify_c_algebra(e.table).passed());
    EXPECT_TRUE(verify_orthogonality(e.table).passed());
  }
}

TEST(Orthogonality, TransposedFormIsInformational) {
  VerificationReport r = verify_orthogonality(find_catalog("rank4-[1,1,4,6]")->table);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find("P_conjPT_nI")->status, Status::Info);
}

// Exact allen_integrality against a floating Verlinde sum over S.
TEST(CatalogOracle, IntegralityAgreesWithVerlinde) {
  for (auto& e : catalog()) {
    if (!verify_orthogonality(e.table).passed() || !verify_c_algebra(e.table).passed()) continue;
    SCOPED_TRACE(e.name);
    EXPECT_EQ(allen_integrality(e.table).passed(), oracle::integral_verlinde(e.table));
  }
}

TEST(CatalogOracle, LambdaMatchesFloatSolve) {
  for (auto& e : positives()) {
    SCOPED_TRACE(e.name);
    StructureTensor L = structure_constants_lambda(e.table);
    auto F = oracle::lambdas(oracle::values(e.table));
    for (std::size_t t = 0; t < F.size(); ++t) EXPECT_TRUE(oracle::close(oracle::value(L.values[t]), F[t], 1e-8));
  }
}

TEST(CatalogOracle, FourierFormIsUnitary) {
  for (auto& e : positives()) {
    SCOPED_TRACE(e.name);
    EXPECT_TRUE(oracle::unitary(oracle::fourier_of_eigen(oracle::values(e.table))));
  }
}

TEST(CatalogProperties, RowSumsVanish) {
  for (auto& e : positives())
    for (std::size_t i = 1; i < e.table.rank(); ++i) {
      QuadNum t;
      for (std::size_t j = 0; j < e.table.rank(); ++j) t += e.table(i, j);
      EXPECT_TRUE(t.is_zero()) << e.name << " row " << i;
    }
}

TEST(CatalogProperties, WeightedSymmetry) {
  for (auto& e : positives()) {
    ExactMatrix s = allen_from_eigen(e.table);
    auto d = norms(s);
    for (std::size_t i = 0; i < s.rank(); ++i)
      for (std::size_t j = 0; j < s.rank(); ++j)
        EXPECT_EQ(d[i] * abs_squared(s(j, i)), d[j] * abs_squared(s(i, j))) << e.name;
  }
}

TEST(CatalogProperties, RealTablesHaveSymmetricN) {
  for (auto& e : positives()) {
    if (!e.table.is_real()) continue;
    StructureTensor N = structure_constants_N(allen_from_eigen(e.table));
    std::size_t r = e.table.rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
          EXPECT_EQ(N(i, j, k), N(j, i, k)) << e.name;
          EXPECT_EQ(N(i, j, k), N(i, k, j)) << e.name;
          EXPECT_EQ(N(i, j, k), N(k, j, i)) << e.name;
        }
  }
}

TEST(CatalogProperties, RoundTrips) {
  int fourier_trips = 0;
  for (auto& e : positives()) {
    SCOPED_TRACE(e.name);
    ExactMatrix s = allen_from_eigen(e.table);
    EXPECT_EQ(eigen_from_allen(s), e.table);
    try {
      ExactMatrix S = fourier_from_allen(s);
      EXPECT_EQ(allen_from_fourier(S), s);
      EXPECT_TRUE(oracle::unitary(oracle::values(S)));
      ++fourier_trips;
    } catch (const SqrtNotInField&) {
    }
  }
  EXPECT_GE(fourier_trips, 5);
}

TEST(CanonicalForm, InvariantUnderRandomPermutations) {
  std::mt19937 gen(7);
  for (auto& e : catalog()) {
    ExactMatrix c = canonical_form(e.table);
    std::vector<std::size_t> perm(e.table.rank());
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 100; ++t) {
      std::shuffle(perm.begin() + 1, perm.end(), gen);
      ASSERT_EQ(canonical_form(e.table.permuted(perm)), c) << e.name;
    }
  }
}

TEST(CanonicalForm, ReportsPermutation) {
  ExactMatrix P = find_catalog("rank4-[1,1,2,4]")->table;
  std::vector<std::size_t> perm;
  ExactMatrix c = canonical_form(P, &perm);
  EXPECT_EQ(P.permuted(perm), c);
}

TEST(CanonicalForm, SubcaseFiveMatchesFirstRankFiveTable) {
  EXPECT_EQ(canonical_form(rank5_subcase5_table()), canonical_form(find_catalog("rank5-[1,1,2,2,2]")->table));
  EXPECT_EQ(rank5_subcase5_table().permuted({0, 1, 4, 2, 3}), find_catalog("rank5-[1,1,2,2,2]")->table);
}

TEST(CanonicalForm, SubcaseThreeTablesArePermutations) {
  EXPECT_EQ(canonical_form(find_catalog("rank4-[1,1,4,2]")->table),
            canonical_form(find_catalog("rank4-[1,1,2,4]")->table));
  EXPECT_EQ(canonical_form(find_catalog("rank4-[1,1,6,4]")->table),
            canonical_form(find_catalog("rank4-[1,1,4,6]")->table));
}

TEST(CanonicalForm, GaloisClassIsConjugationInvariant) {
  for (auto& e : catalog())
    EXPECT_EQ(galois_canonical_form(e.table), galois_canonical_form(galois_conjugate(e.table))) << e.name;
  ExactMatrix P = find_catalog("rank5-[1,1,4,3,3]")->table;
  EXPECT_NE(canonical_form(P), canonical_form(galois_conjugate(P)));
}

TEST(Catalog, Tags) {
  EXPECT_EQ(find_catalog("rank4-[1,1,2,2]")->scheme_tag, "as6(5)");
  EXPECT_EQ(find_catalog("rank5-[1,1,4,3,3]")->scheme_tag, "order-12 non-scheme");
  EXPECT_FALSE(find_catalog("nothing").has_value());
}

TEST(Catalog, NegativesFailTheirStatedCheck) {
  for (auto& e : catalog()) {
    if (!e.negative) continue;
    EXPECT_TRUE(has_failure(verify_eigen_suite(e.table), e.expected_failure)) << e.name;
  }
}
