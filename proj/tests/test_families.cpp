#include "qmds/catalog.hpp"
#include "qmds/families.hpp"
#include "qmds/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace qmds;

namespace {

const Family kFamilies[] = {Family::F1, Family::F2, Family::F3, Family::F4};

std::vector<int> variants(Family f)
{
    return f == Family::F3 || f == Family::F4 ? std::vector{1, 2} : std::vector{1};
}

std::vector<int> oracle_values(const oracle::Witnesses& w)
{
    std::vector<int> out;
    for (const auto& [s, pairs] : w) out.push_back(s);
    return out;
}

bool matches_oracle(const SIndexSet& s, const oracle::Witnesses& w)
{
    if (s.values != oracle_values(w)) return false;
    for (const auto& [v, ij] : s.witnesses)
        if (w.at(v) != std::vector{ij}) return false;
    return true;
}

std::string instance_name(Family f, int variant, std::int64_t q, std::int64_t h, std::int64_t t, std::int64_t k)
{
    return family_name(f) + " v" + std::to_string(variant) + " q=" + std::to_string(q) + " h=" + std::to_string(h) +
           " t=" + std::to_string(t) + " k=" + std::to_string(k);
}

} // namespace

TEST(Hypotheses, OddQuotient)
{
    EXPECT_EQ(odd_quotient(Family::F1, 7, 2), 3);
    EXPECT_EQ(odd_quotient(Family::F2, 13, 4), 3);
    EXPECT_EQ(odd_quotient(Family::F3, 11, 4), 3);
    EXPECT_EQ(odd_quotient(Family::F4, 11, 4), 3);
    EXPECT_FALSE(odd_quotient(Family::F1, 7, 6));  // w = 1, tau = 0
    EXPECT_FALSE(odd_quotient(Family::F1, 13, 6)); // w = 2 even
    EXPECT_FALSE(odd_quotient(Family::F1, 7, 3));  // h odd
    EXPECT_EQ(admissible_h(Family::F1, 3).size(), 0u);
    EXPECT_EQ(admissible_h(Family::F3, 3).size(), 0u);
}

TEST(Validate, Examples)
{
    const Field f7 = Field::for_q(7);
    const auto c = validate(f7, {Family::F1, 1, 7, 2, 2, 5, {}});
    EXPECT_EQ(c.k_max, 5);
    EXPECT_EQ(c.m, 12);
    EXPECT_EQ(c.w, 3);
    EXPECT_EQ(c.tau, 1);
    EXPECT_EQ(c.params.coset_exponents, (std::vector<std::int64_t>{0, 1}));
    EXPECT_EQ(c.length(), 25);
    EXPECT_EQ(c.gamma(), f7.theta_pow(4));
    EXPECT_EQ(c.beta(), f7.neg(f7.one()));

    try {
        validate(f7, {Family::F1, 1, 7, 2, 1, 1, {}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::HypothesisViolated);
        EXPECT_NE(std::string(e.what()).find("h/2+1≤r≤h"), std::string::npos);
    }

    const Field f11 = Field::for_q(11);
    const auto c4 = validate(f11, {Family::F4, 3, 11, 4, 7, 10, {}});
    EXPECT_EQ(c4.k_max, 10);
    EXPECT_EQ(c4.lemma.variant, 2);
    EXPECT_EQ(c4.lemma.t, 2);
}

TEST(Validate, Rejections)
{
    const Field f7 = Field::for_q(7);
    auto code_of = [&](ConstructionParams p) {
        try {
            validate(f7, p);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::NotFound;
    };
    EXPECT_EQ(code_of({Family::F1, 1, 7, 2, 2, 0, {}}), Errc::HypothesisViolated);
    EXPECT_EQ(code_of({Family::F1, 1, 7, 2, 2, 6, {}}), Errc::HypothesisViolated);
    EXPECT_EQ(code_of({Family::F1, 1, 7, 4, 2, 1, {}}), Errc::HypothesisViolated);
    EXPECT_EQ(code_of({Family::F1, 3, 7, 2, 2, 1, {}}), Errc::HypothesisViolated);
    EXPECT_EQ(code_of({Family::F1, 1, 9, 2, 2, 1, {}}), Errc::HypothesisViolated);
    EXPECT_EQ(code_of({Family::F1, 1, 7, 2, 2, 1, {0, 2}}), Errc::HypothesisViolated); // equal mod h
    EXPECT_EQ(code_of({Family::F1, 1, 7, 2, 2, 1, {0, 4}}), Errc::HypothesisViolated); // equal mod 2h
    EXPECT_EQ(code_of({Family::F1, 1, 7, 2, 2, 1, {0}}), Errc::HypothesisViolated);
    EXPECT_EQ(code_of({Family::F1, 1, 7, 2, 2, 1, {1, 6}}), Errc::NotFound); // valid

    try {
        validate(f7, {Family::F1, 1, 7, 2, 2, 6, {}});
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("k≤5"), std::string::npos);
    }
}

TEST(Kmax, Examples)
{
    EXPECT_EQ(kmax(Family::F1, 1, 7, 2, 2), 5);
    EXPECT_EQ(kmax(Family::F2, 1, 13, 4, 4), 9);
    EXPECT_EQ(kmax(Family::F3, 1, 11, 4, 5), 8);
    EXPECT_EQ(kmax(Family::F4, 1, 11, 4, 4), 6);
    EXPECT_EQ(kmax(Family::F4, 3, 11, 4, 7), 10);
}

TEST(Kmax, IntegralForEveryAdmissibleInstance)
{
    for (std::int64_t q : odd_prime_powers(127))
        for (Family f : kFamilies)
            for (std::int64_t h : admissible_h(f, q))
                for (const auto& p : admissible_params(f, q, h)) {
                    std::vector<std::string> warnings;
                    kmax(f, p.case_no, q, h, p.r, &warnings);
                    EXPECT_TRUE(warnings.empty()) << provenance_tag(p) << " q=" << q;
                    EXPECT_LE(p.k, q - 1);
                }
}

TEST(Kmax, CorollaryDistanceReachesQ)
{
    // r = 2h-1 in the last F4 case gives k = q-1 for every admissible h
    for (std::int64_t q : odd_prime_powers(61))
        for (std::int64_t h : admissible_h(Family::F4, q)) EXPECT_EQ(kmax(Family::F4, 3, q, h, 2 * h - 1), q - 1);
}

TEST(SSet, Examples)
{
    const auto a = s_set(Family::F1, 1, 7, 2, 0, 5);
    EXPECT_EQ(a.values, (std::vector<int>{0, 2}));
    EXPECT_EQ(a.witnesses.at(2), (std::pair<std::int64_t, std::int64_t>{3, 3}));
    EXPECT_EQ(a.shift, 0);

    const auto b = s_set(Family::F2, 1, 13, 4, 1, 9);
    EXPECT_EQ(b.values, (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(b.shift, 7);

    for (std::int64_t q : {7, 13, 19, 25})
        for (std::int64_t h : admissible_h(Family::F2, q)) EXPECT_TRUE(s_set(Family::F2, 1, q, h, 1, 1).values.empty());

    EXPECT_THROW(s_set(Family::F1, 1, 7, 2, 0, 6), Error);
    EXPECT_THROW(s_set(Family::F1, 1, 7, 2, 1, 1), Error);
    EXPECT_THROW(s_set(Family::F3, 3, 11, 4, 1, 1), Error);
}

TEST(SSet, MatchesBruteForceUpTo49)
{
    std::size_t instances = 0;
    for (std::int64_t q : odd_prime_powers(49))
        for (Family f : kFamilies)
            for (std::int64_t h : admissible_h(f, q))
                for (int variant : variants(f)) {
                    const auto [lo, hi] = lemma_t_range(f, variant, h);
                    for (std::int64_t t = lo; t <= hi; ++t) {
                        const std::int64_t top = std::min(lemma_k_bound(f, variant, q, h, t), q - 1);
                        for (std::int64_t k = 1; k <= top; ++k) {
                            const auto closed = s_set(f, variant, q, h, t, k);
                            const auto brute = oracle::brute_force_s_set(q, h, k, shift_for(f, q));
                            EXPECT_TRUE(matches_oracle(closed, brute)) << instance_name(f, variant, q, h, t, k);
                            ++instances;
                        }
                    }
                }
    EXPECT_GT(instances, 1000u);
}

TEST(SSet, StepFourReadingOfCentralBlockDisagrees)
{
    // the alternative spacing of the F3 even block misses residues the
    // brute force finds, while spacing 2 matches
    bool differs = false;
    for (std::int64_t q : odd_prime_powers(49))
        for (std::int64_t h : admissible_h(Family::F3, q))
            for (std::int64_t t = 0; t <= h / 2 - 1; ++t) {
                const std::int64_t k = std::min(lemma_k_bound(Family::F3, 1, q, h, t), q - 1);
                const auto brute = oracle::brute_force_s_set(q, h, k, 0);
                EXPECT_TRUE(matches_oracle(s_set(Family::F3, 1, q, h, t, k, 2), brute));
                if (!matches_oracle(s_set(Family::F3, 1, q, h, t, k, 4), brute)) differs = true;
            }
    EXPECT_TRUE(differs);
}

TEST(SSet, BoundIsSharpAtKmaxPlusOne)
{
    // one step past the largest k the brute-force set gains residues outside
    // what the construction's matrix covers
    std::size_t checked = 0;
    for (std::int64_t q : odd_prime_powers(31))
        for (Family f : kFamilies)
            for (std::int64_t h : admissible_h(f, q))
                for (const auto& p : admissible_params(f, q, h)) {
                    if (p.k + 1 > q - 1) continue;
                    const Field field = Field::for_q(q);
                    const auto c = validate(field, p);
                    const auto at = oracle::brute_force_s_set(q, h, p.k, shift_for(f, q));
                    const auto past = oracle::brute_force_s_set(q, h, p.k + 1, shift_for(f, q));
                    const auto covered = s_set(c).values;
                    bool grows = false;
                    for (const auto& [s, pairs] : past)
                        if (std::find(covered.begin(), covered.end(), s) == covered.end()) grows = true;
                    EXPECT_TRUE(grows) << provenance_tag(p) << " q=" << q;
                    EXPECT_EQ(oracle_values(at), covered);
                    ++checked;
                }
    EXPECT_GT(checked, 20u);
}

TEST(Locators, ExamplesAndDistinctness)
{
    const Field f7 = Field::for_q(7);
    const auto c = validate(f7, {Family::F1, 1, 7, 2, 2, 5, {}});
    const Vector a = build_locators(c);
    ASSERT_EQ(a.size(), 25u);
    EXPECT_TRUE(a[0].is_zero());
    EXPECT_EQ(std::set<Elem>(a.begin(), a.end()).size(), 25u);
    for (std::size_t nu = 0; nu < 12; ++nu) {
        EXPECT_EQ(a[1 + nu], f7.theta_pow(static_cast<std::int64_t>(4 * nu)));
        EXPECT_EQ(a[13 + nu], f7.theta_pow(static_cast<std::int64_t>(1 + 4 * nu)));
    }

    for (std::int64_t q : odd_prime_powers(25))
        for (Family fam : kFamilies)
            for (std::int64_t h : admissible_h(fam, q))
                for (const auto& p : admissible_params(fam, q, h)) {
                    const auto cc = validate(Field::for_q(q), p);
                    const Vector loc = build_locators(cc);
                    EXPECT_EQ(static_cast<std::int64_t>(loc.size()), cc.length());
                    EXPECT_EQ(std::set<Elem>(loc.begin(), loc.end()).size(), loc.size());
                    EXPECT_EQ(std::count_if(loc.begin(), loc.end(), [](Elem e) { return e.is_zero(); }),
                              has_zero_locator(fam) ? 1 : 0);
                }
}

TEST(CoefficientMatrix, FirstFamilySmallInstance)
{
    const Field f7 = Field::for_q(7);
    const auto c = validate(f7, {Family::F1, 1, 7, 2, 2, 5, {}});
    EXPECT_EQ(build_coefficient_matrix(c), Matrix::from_ints(f7, {{1, 1, 1}, {0, 1, -1}}));
}

TEST(CoefficientMatrix, FrobeniusFixedForFamiliesWithoutZeroLocator)
{
    std::size_t checked = 0;
    for (std::int64_t q : odd_prime_powers(27))
        for (Family fam : {Family::F2, Family::F4})
            for (std::int64_t h : admissible_h(fam, q))
                for (const auto& p : admissible_params(fam, q, h)) {
                    const auto c = validate(Field::for_q(q), p);
                    const Matrix a = build_coefficient_matrix(c);
                    if (fam == Family::F2) { EXPECT_TRUE(is_base_field_matrix(a)) << provenance_tag(p) << " q=" << q; }
                    // F4 entries need not be fixed, but the matrix is always
                    // row equivalent to its conjugate
                    if (a.rows() > 0) { EXPECT_TRUE(row_equivalent(a, conjugate(a))) << provenance_tag(p) << " q=" << q; }
                    ++checked;
                }
    EXPECT_GT(checked, 10u);
}

TEST(CoefficientMatrix, FourthFamilyFirstCaseShape)
{
    const Field f = Field::for_q(11);
    const auto c = validate(f, {Family::F4, 1, 11, 4, 4, 6, {}});
    const auto s = s_set(c);
    const Matrix a = build_coefficient_matrix(c);
    ASSERT_EQ(a.rows(), s.values.size());
    ASSERT_EQ(a.cols(), 4u);
    for (std::size_t row = 0; row < a.rows(); ++row)
        for (std::int64_t l = 0; l < 4; ++l)
            EXPECT_EQ(a(row, static_cast<std::size_t>(l)),
                      f.mul(f.pow(c.alpha(), s.values[row] * l), f.pow(f.xi(), l)));
}

TEST(CoefficientMatrix, ConjugateInvariantWhereDescentIsUsed)
{
    for (std::int64_t q : odd_prime_powers(27))
        for (Family fam : kFamilies)
            for (std::int64_t h : admissible_h(fam, q))
                for (const auto& p : admissible_params(fam, q, h)) {
                    const auto c = validate(Field::for_q(q), p);
                    const Matrix a = build_coefficient_matrix(c);
                    if (a.rows() > 0 && !is_base_field_matrix(a)) {
                        EXPECT_TRUE(row_equivalent(a, conjugate(a))) << provenance_tag(p) << " q=" << q;
                    }
                }
}

TEST(Construct, AcceptanceInstances)
{
    struct Case {
        ConstructionParams p;
        QuantumParams expect;
    };
    const Case cases[] = {
        {{Family::F1, 1, 7, 2, 2, 5, {}}, {25, 15, 6, 7}},
        {{Family::F4, 1, 11, 4, 4, 6, {}}, {60, 48, 7, 11}},
        {{Family::F2, 1, 13, 4, 4, 9, {}}, {84, 66, 10, 13}},
        {{Family::F3, 1, 11, 4, 5, 8, {}}, {76, 60, 9, 11}},
        {{Family::F4, 3, 11, 4, 7, 10, {}}, {105, 85, 11, 11}},
    };
    for (const auto& [p, expect] : cases) {
        const auto built = construct(validate(Field::for_q(p.q), p));
        EXPECT_EQ(built.quantum, expect) << provenance_tag(p);
        EXPECT_TRUE(is_hermitian_self_orthogonal(built.code).pass);
        EXPECT_TRUE(gram_check(built.code).pass);
        for (auto u : built.u.coords) {
            EXPECT_FALSE(u.is_zero());
            EXPECT_TRUE(built.code.field().in_base_field(u));
        }
    }
}

TEST(Construct, SmallInstanceKernelVector)
{
    const Field f7 = Field::for_q(7);
    const auto built = construct(validate(f7, {Family::F1, 1, 7, 2, 2, 5, {}}));
    EXPECT_EQ(built.u.coords, (Vector{f7.from_int(5), f7.one(), f7.one()}));
    EXPECT_EQ(built.solvability.route, SolutionRoute::RankCondition);
    EXPECT_EQ(built.solvability.rank_condition, true);
    EXPECT_EQ(built.solvability.kernel_dimension, 1u);
    EXPECT_TRUE(built.code.multipliers()[0] == f7.solve_norm(f7.mul(f7.from_int(5), f7.from_int(12))));
}

TEST(Construct, EveryCatalogInstanceIsSelfOrthogonal)
{
    std::set<SolutionRoute> routes;
    for (std::int64_t q : odd_prime_powers(13))
        for (Family fam : kFamilies)
            for (std::int64_t h : admissible_h(fam, q))
                for (const auto& p : admissible_params(fam, q, h))
                    for (std::int64_t k = 1; k <= p.k; ++k) {
                        ConstructionParams pk = p;
                        pk.k = k;
                        const auto built = construct(validate(Field::for_q(q), pk));
                        routes.insert(built.solvability.route);
                        EXPECT_TRUE(is_hermitian_self_orthogonal(built.code).pass) << provenance_tag(pk) << " k=" << k;
                        EXPECT_TRUE(gram_check(built.code).pass) << provenance_tag(pk) << " k=" << k;
                        EXPECT_TRUE(built.quantum.meets_singleton());
                        EXPECT_TRUE(built.solvability.within_lemma_bounds || built.solvability.route == SolutionRoute::Unconstrained);
                    }
    EXPECT_TRUE(routes.count(SolutionRoute::RankCondition));
    EXPECT_TRUE(routes.count(SolutionRoute::ConjugateDescent));
    EXPECT_TRUE(routes.count(SolutionRoute::PerLocator));
}

TEST(Construct, Deterministic)
{
    const Field f = Field::for_q(11);
    const auto c = validate(f, {Family::F3, 1, 11, 4, 5, 8, {}});
    const auto a = construct(c, 5);
    const auto b = construct(c, 5);
    EXPECT_EQ(a.code.multipliers(), b.code.multipliers());
    EXPECT_EQ(a.code.locators(), b.code.locators());
}

TEST(Construct, CosetConstantSystemFailsWhenRIsTwoHMinusOne)
{
    // With r = 2h-1 the coset-constant kernel has a zero coordinate for every
    // choice of residues, so only the per-locator system succeeds.
    for (auto [q, h] : {std::pair{5, 2}, {9, 2}, {11, 4}, {13, 2}}) {
        const Field f = Field::for_q(q);
        const std::int64_t r = 2 * h - 1;
        for (std::int64_t missing = 0; missing < 2 * h; ++missing) {
            std::vector<std::int64_t> exps;
            for (std::int64_t i = 0; i < 2 * h; ++i)
                if (i != missing) exps.push_back(i);
            const auto c = validate(f, {Family::F4, 3, q, h, r, q - 1, exps});
            try {
                construct(c, 0, false);
                ADD_FAILURE() << "q=" << q << " missing residue " << missing;
            } catch (const Error& e) {
                EXPECT_EQ(e.code(), Errc::NotFound);
            }
            const auto built = construct(c, 0, true);
            EXPECT_EQ(built.solvability.route, SolutionRoute::PerLocator);
            EXPECT_EQ(built.solvability.structured_route, SolutionRoute::ConjugateDescent);
            EXPECT_EQ(built.quantum, (QuantumParams{r * (q * q - 1) / (2 * h), r * (q * q - 1) / (2 * h) - 2 * (q - 1), q, q}));
            EXPECT_TRUE(gram_check(built.code).pass);
        }
    }
}

TEST(Construct, OtherRangesOfLastCaseUseCosetConstantMultipliers)
{
    // q = 17, h = 6 has r = 9 in the last case besides r = 11
    const Field f = Field::for_q(17);
    const auto built = construct(validate(f, {Family::F4, 3, 17, 6, 9, kmax(Family::F4, 3, 17, 6, 9), {}}));
    EXPECT_NE(built.solvability.route, SolutionRoute::PerLocator);
    EXPECT_TRUE(is_hermitian_self_orthogonal(built.code).pass);
}

TEST(Construct, CosetChoiceMattersInSecondCaseOfLastFamily)
{
    // at k = kmax the index set also holds s = 2h-2t, so the 4x5 system has a
    // one-dimensional kernel whose support depends on the residues chosen
    const Field f = Field::for_q(11);
    const auto bad = validate(f, {Family::F4, 2, 11, 4, 5, 9, {21, 12, 1, 19, 14}});
    EXPECT_EQ(s_set(bad).values, (std::vector<int>{2, 3, 5, 6}));
    const auto basis = base_field_solutions(build_coefficient_matrix(bad));
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(std::count_if(basis[0].begin(), basis[0].end(), [](Elem e) { return e.is_zero(); }), 1);
    try {
        construct(bad);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotFound);
    }

    const auto good = construct(validate(f, {Family::F4, 2, 11, 4, 5, 9, {}}));
    EXPECT_EQ(good.quantum, (QuantumParams{75, 57, 10, 11}));
    EXPECT_TRUE(is_hermitian_self_orthogonal(good.code).pass);
}

TEST(Congruence, Examples)
{
    EXPECT_EQ(congruence_class(25, 7).label, "(q+1)|(n-1)");
    EXPECT_EQ(congruence_class(76, 11).label, "(q-1)∤(n-1), (q-1)/2|(n-1)");
    EXPECT_EQ(congruence_class(12, 11).label, "(q+1)|n");
    EXPECT_EQ(congruence_class(8, 11).label, "none");
    EXPECT_EQ(congruence_class(7, 11).label, "(q+1)∤(n-1), (q+1)/2|(n-1)");
    const auto rel = congruence_class(25, 7).relations;
    EXPECT_NE(std::find(rel.begin(), rel.end(), "(q+1)|(n-1)"), rel.end());
    EXPECT_FALSE(is_new_length(25, 7));
    EXPECT_TRUE(is_new_length(76, 11));
    EXPECT_FALSE(is_new_length(12, 11));
}
