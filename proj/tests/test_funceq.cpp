#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qlab/funceq.hpp"

using namespace qlab;

namespace {

Residual run(const std::string& id, const std::string& params, int N) { return residual(catalog(id, parse_params(params)), N); }

}  // namespace

TEST(Params, ParseAndFormat)
{
    Params p = parse_params("k=1, n=2,weights=0:0:1");
    EXPECT_EQ(param_int(p, "k"), 1);
    EXPECT_EQ(param_list(p, "weights"), (std::vector<int>{0, 0, 1}));
    EXPECT_EQ(format_params(p), "k=1,n=2,weights=0:0:1");
    EXPECT_EQ(param_int(p, "missing", 7), 7);
    EXPECT_THROW(parse_params("k"), std::invalid_argument);
    EXPECT_THROW(parse_params("k=1,k=2"), std::invalid_argument);
    EXPECT_THROW(param_int(parse_params("k=x"), "k"), std::invalid_argument);
    EXPECT_THROW(param_int(p, "a"), std::invalid_argument);
}

TEST(SeriesRefs, ParsePositionalNamedAndTuple)
{
    SeriesRef r = parse_series_ref("gen_fun(A,1,boundary=0:1)");
    EXPECT_EQ(r.name, "gen_fun");
    EXPECT_EQ(r.params.at("family"), "A");
    EXPECT_EQ(r.params.at("boundary"), "0:1");
    EXPECT_EQ(format_series_ref(r), "gen_fun(family=A,n=1,boundary=0:1)");
    EXPECT_EQ(parse_series_ref("gen_fun(A,1,(0,1))").params.at("boundary"), "0:1");
    EXPECT_THROW(parse_series_ref("nope(1)"), std::invalid_argument);
    EXPECT_THROW(parse_series_ref("gen_fun(A,1"), std::invalid_argument);
    EXPECT_THROW(parse_series_ref("gordon(1,1,1)"), std::invalid_argument);
    EXPECT_THROW(parse_series_ref("gordon(k=1,b=1)"), std::invalid_argument);
}

TEST(SeriesRefs, EveryNameEvaluates)
{
    std::map<std::string, std::string> sample = {
        {"gen_fun", "A,1,boundary=1:0"},
        {"gen_fun_reference", "D,2,boundary=1:0:0"},
        {"gordon_frequency", "2,1"},
        {"char_product", "family=A,kind=nonstandard,n=1,weights=1:0"},
        {"theta", "1,5"},
        {"gordon", "1,0"},
        {"jms", "1,0"},
        {"c_level1", "1,0"},
        {"dk1", "1,0"},
        {"c_rank0", "2"},
        {"d_rank1", "2"},
        {"c_rank1", "1,1"},
        {"ag_type", "shun,2"},
        {"ag_general", "2,1"},
        {"c_rank0_z", "1"},
        {"d_rank1_z", "1"},
        {"f_sum", "2,1,1"},
        {"ag_sum", "2,1"},
        {"shun_sum", "1"},
        {"shun2_sum", "2,mixed"},
        {"wz_sum", "A,2"},
        {"alt_form", "lambda0_lambda1"},
        {"s_series", "0,0,0,0"},
        {"atomic_residual", "R1,0,0,0,0"},
        {"hl_principal_finite", "parts=2:1,kvars=3,m=2"},
        {"hl_ls_2r1s", "1,1,3,2"},
        {"hl_symmetrization", "parts=2,L=3,m=2"},
        {"hl_inf_spec", "parts=2:2,m=3"},
        {"hl_even_sum", "1,3,1"},
        {"prop_gow_sum", "1,1,1"},
        {"hl_chain_sum", "1,2"},
        {"hl_weighted_chain", "v1,2"},
        {"pi_product", "type=B,exps=2,base=3,sigma=1,tau=1"},
        {"macdonald_sum", "type=B,exps=2,base=3"},
        {"specialized_character_sum", "A,1,2,2"},
    };
    for (const auto& [name, params] : series_names()) {
        ASSERT_TRUE(sample.count(name)) << name;
        QSeries s = evaluate_series(parse_series_ref(name + "(" + sample.at(name) + ")"), 8);
        EXPECT_GE(s.order(), 8) << name;
    }
}

TEST(SeriesRefs, ClosedFormsByCounting)
{
    // c_rank0_z: odd parts with multiplicity <= k graded by length
    const int N = 14;
    for (int k = 1; k <= 2; ++k) {
        std::map<std::tuple<int, int, int>, mpz_class> expect;
        oracle::partitions(N, N, [&](const std::vector<int>& p) {
            for (auto [part, f] : oracle::freqs(p))
                if (part % 2 == 0 || f > k) return;
            int w = 0;
            for (int x : p) w += x;
            expect[{static_cast<int>(p.size()), 0, w}] += 1;
        });
        EXPECT_EQ(oracle::terms(evaluate_series(parse_series_ref("c_rank0_z(" + std::to_string(k) + ")"), N)), expect);
    }
}

TEST(Catalog, Examples)
{
    auto rs = catalog("rogers-selberg", parse_params("k=1,a=1"));
    EXPECT_EQ(rs.lhs.size() + rs.rhs.size(), 3u);
    EXPECT_EQ(rs.status, Status::proved);
    auto nis2 = catalog("eq-nis2", parse_params("k=2,a=0,b=0"));
    EXPECT_EQ(nis2.lhs.size(), 2u);
    EXPECT_THROW(catalog("eq-nis2", parse_params("k=1,a=1,b=1")), std::invalid_argument);
    EXPECT_THROW(catalog("no-such-check", {}), std::out_of_range);
    EXPECT_THROW(catalog("gordon", parse_params("k=1,a=1,x=2")), std::invalid_argument);
    EXPECT_THROW(catalog("automorphism", parse_params("family=A,n=2,weights=1:0:1")), std::invalid_argument);
}

TEST(Residuals, SpecExamplesVanish)
{
    EXPECT_TRUE(run("rogers-selberg", "k=2,a=1", 20).zero());
    EXPECT_TRUE(run("mr-system", "n=2,a=0,branch=1", 20).zero());
    EXPECT_TRUE(run("automorphism", "family=D,n=2,weights=1:0:1", 20).zero());
}

TEST(Residuals, FirstEquationAtRankOne)
{
    for (int k = 0; k <= 3; ++k)
        for (int a = 0; a <= k; ++a) EXPECT_TRUE(run("fun", "n=1,k=" + std::to_string(k) + ",a=" + std::to_string(a), 20).zero());
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(run("fun2", "n=1,k=" + std::to_string(k), 20).zero());
}

TEST(Residuals, PerturbedEquationIsDetected)
{
    auto spec = catalog("rogers-selberg", parse_params("k=2,a=1"));
    spec.rhs[0].prefactor.q += 1;
    Residual r = residual(spec, 12);
    ASSERT_FALSE(r.zero());
    EXPECT_FALSE(r.difference.is_zero());
    EXPECT_LE(r.first_mismatch->dq, 12);
}

TEST(Residuals, RequiredOrder)
{
    Term t;
    t.prefactor = {1, 0, 4};
    t.subst = Subst::q_power(2);
    EXPECT_EQ(required_order(t, {}, 20), 8);
    EXPECT_EQ(required_order(t, {0, 0, 1}, 20), 7);
    EXPECT_LT(required_order(t, {}, 3), 0);
}

TEST(Residuals, WzFunctionalWithClearing)
{
    for (int eq = 1; eq <= 4; ++eq) EXPECT_TRUE(run("wz-functional", "eq=" + std::to_string(eq), 14).zero()) << eq;
    auto spec = catalog("wz-functional", parse_params("eq=3"));
    spec.clearing = {};
    EXPECT_THROW(residual(spec, 10), std::logic_error);
}

TEST(Residuals, KIsTwoFixedPoint)
{
    EXPECT_FALSE(kis2_uniqueness_check(18));
    auto fp = kis2_fixed_point(6);
    for (const auto& s : fp) EXPECT_EQ(s.coeff(0, 0, 0).str(), "1");
}

TEST(Catalog, StatusesFollowProofCoverage)
{
    EXPECT_EQ(catalog("con-a2n2", parse_params("n=1,weights=2:1")).status, Status::proved);
    EXPECT_EQ(catalog("con-a2n2", parse_params("n=2,weights=1:1:0")).status, Status::conjectural);
    EXPECT_EQ(catalog("con-cn1", parse_params("n=2,weights=2:0:0")).status, Status::proved);
    EXPECT_EQ(catalog("shun", parse_params("k=1")).status, Status::proved);
    EXPECT_EQ(catalog("shun", parse_params("k=2")).status, Status::conjectural);
    EXPECT_EQ(catalog("hl-variant1", parse_params("n=2")).status, Status::proved);
    EXPECT_EQ(catalog("hl-variant1", parse_params("n=3")).status, Status::conjectural);
}

TEST(Catalog, EveryIdHasADescription)
{
    for (const auto& e : catalog_ids()) {
        EXPECT_FALSE(e.description.empty()) << e.id;
        EXPECT_FALSE(e.id.empty());
    }
    EXPECT_GE(catalog_ids().size(), 40u);
}
