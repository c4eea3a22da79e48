#include <gtest/gtest.h>

#include "thetadim/theorems.hpp"

using namespace thetadim;

namespace {

std::vector<std::vector<int>> all_length_vectors(int m, int max_s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m, 1);
    while (true) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == max_s) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < m; ++j) cur[j] = cur[i];
    }
    return out;
}

bool matched(const std::vector<TheoremApplicability>& list, const std::string& id) {
    for (const auto& t : list)
        if (t.theorem_id == id) return t.matched;
    ADD_FAILURE() << "theorem id not registered: " << id;
    return false;
}

}  // namespace

TEST(UpperBoundSet, FormulaInstances) {
    EXPECT_EQ(upper_bound_set(GraphSpec({1, 1, 1})),
              (LandmarkSet{VertexId::c1(), VertexId::internal(2, 1),
                           VertexId::internal(3, 1)}));
    EXPECT_EQ(upper_bound_set(GraphSpec({2, 3, 4})),
              (LandmarkSet{VertexId::c1(), VertexId::internal(2, 2),
                           VertexId::internal(3, 2)}));
    EXPECT_THROW(upper_bound_set(GraphSpec({2, 2})), std::invalid_argument);
}

TEST(UpperBoundSet, ResolvesAcrossSweep) {
    for (int m = 3; m <= 5; ++m)
        for (const auto& lengths : all_length_vectors(m, 4)) {
            GraphSpec g(lengths);
            EXPECT_TRUE(verify_resolving(g, upper_bound_set(g)).resolved) << g.literal();
        }
}

TEST(SmallestRepeatedM2Set, FormulaInstances) {
    EXPECT_EQ(smallest_repeated_m2_set(GraphSpec({2, 2, 3, 5})),
              (LandmarkSet{VertexId::internal(1, 1), VertexId::internal(3, 3),
                           VertexId::internal(4, 4)}));
    GraphSpec five({1, 1, 1, 2, 4});
    LandmarkSet w = smallest_repeated_m2_set(five);
    EXPECT_EQ(w.size(), 4u);
    EXPECT_TRUE(verify_resolving(five, w).resolved);
    EXPECT_EQ(metric_dimension(five).beta, 4);
    EXPECT_THROW(smallest_repeated_m2_set(GraphSpec({1, 2, 3, 4})), std::invalid_argument);
}

TEST(SmallestRepeatedM2Set, MatchesBruteForce) {
    GraphSpec g({2, 2, 3, 5});
    EXPECT_EQ(metric_dimension(g).beta, 3);
    EXPECT_TRUE(verify_resolving(g, smallest_repeated_m2_set(g)).resolved);
}

TEST(SmallestRepeatedM1Set, CasesAndExceptions) {
    // Exceptional family: falls back to the size-m set.
    GraphSpec ex({1, 1, 1, 3});
    EXPECT_EQ(smallest_repeated_m1_set(ex).size(), 4u);
    EXPECT_EQ(metric_dimension(ex).beta, 4);

    EXPECT_EQ(smallest_repeated_m1_set(GraphSpec({2, 2, 2, 2, 5})),
              (LandmarkSet{VertexId::internal(1, 1), VertexId::internal(2, 1),
                           VertexId::internal(3, 2), VertexId::internal(4, 2)}));
    EXPECT_EQ(smallest_repeated_m1_set(GraphSpec({3, 3, 3, 7})),
              (LandmarkSet{VertexId::internal(1, 1), VertexId::internal(2, 1),
                           VertexId::internal(3, 2)}));
    GraphSpec c2({1, 1, 1, 1, 4});
    EXPECT_EQ(smallest_repeated_m1_set(c2),
              (LandmarkSet{VertexId::internal(1, 1), VertexId::internal(2, 1),
                           VertexId::internal(3, 1), VertexId::internal(5, 1)}));
    for (const auto& lengths :
         {std::vector<int>{1, 1, 1, 3}, std::vector<int>{2, 2, 2, 2, 5},
          std::vector<int>{3, 3, 3, 7}, std::vector<int>{1, 1, 1, 1, 4},
          std::vector<int>{2, 2, 2, 3}, std::vector<int>{2, 2, 2, 5}}) {
        GraphSpec g(lengths);
        LandmarkSet w = smallest_repeated_m1_set(g);
        EXPECT_TRUE(verify_resolving(g, w).resolved) << g.literal();
        EXPECT_EQ(static_cast<int>(w.size()), metric_dimension(g).beta) << g.literal();
    }
}

TEST(LargestRepeatedSet, FormulaAndInterval) {
    GraphSpec g({1, 3, 3, 3});
    EXPECT_EQ(largest_repeated_set(g),
              (LandmarkSet{VertexId::c1(), VertexId::internal(2, 3),
                           VertexId::internal(3, 3)}));
    EXPECT_TRUE(verify_resolving(g, largest_repeated_set(g)).resolved);
    const int beta = metric_dimension(g).beta;
    EXPECT_GE(beta, 2);
    EXPECT_LE(beta, 3);
    EXPECT_EQ(beta, 3);  // pinned by the multiplicity-4 case table

    GraphSpec m5({1, 3, 3, 3, 3});
    BetaPrediction p = predict_beta(m5);
    EXPECT_EQ(p.lo, 3);
    EXPECT_EQ(p.hi, 4);
    const int b5 = metric_dimension(m5).beta;
    EXPECT_GE(b5, p.lo);
    EXPECT_LE(b5, p.hi);
}

TEST(DistinctLengthsSet, FormulaInstance) {
    GraphSpec g({1, 2, 3, 4, 5, 6});
    EXPECT_EQ(distinct_lengths_set(g),
              (LandmarkSet{VertexId::internal(3, 1), VertexId::internal(4, 3),
                           VertexId::internal(5, 2), VertexId::internal(6, 4)}));
    EXPECT_TRUE(verify_resolving(g, distinct_lengths_set(g)).resolved);
    EXPECT_THROW(distinct_lengths_set(GraphSpec({1, 2, 3})), std::invalid_argument);
}

TEST(ConsecutiveLengthsSet, MinimumScaleInstance) {
    GraphSpec g({1, 2, 3, 4, 5, 6, 7});
    LandmarkSet w = consecutive_lengths_set(g);
    EXPECT_EQ(w, (LandmarkSet{VertexId::internal(4, 4), VertexId::internal(5, 2),
                              VertexId::internal(6, 5), VertexId::internal(7, 3)}));
    EXPECT_TRUE(verify_resolving(g, w).resolved);
    EXPECT_THROW(consecutive_lengths_set(GraphSpec({1, 2, 3, 4, 5, 6})),
                 std::invalid_argument);
}

TEST(UniformSet, SizesMatchBeta) {
    struct Case {
        std::vector<int> lengths;
        int beta;
    };
    for (const Case& c : {Case{{1, 1, 1, 1}, 4}, Case{{2, 2, 2, 2}, 4},
                          Case{{3, 3, 3, 3}, 3}, Case{{2, 2, 2, 2, 2}, 4},
                          Case{{1, 1, 1}, 3}, Case{{4, 4, 4}, 3}}) {
        GraphSpec g(c.lengths);
        LandmarkSet w = uniform_set(g);
        EXPECT_EQ(static_cast<int>(w.size()), c.beta) << g.literal();
        EXPECT_TRUE(verify_resolving(g, w).resolved) << g.literal();
        EXPECT_EQ(metric_dimension(g).beta, c.beta) << g.literal();
    }
    EXPECT_EQ(uniform_set(GraphSpec({3, 3, 3, 3})),
              (LandmarkSet{VertexId::internal(1, 1), VertexId::internal(2, 1),
                           VertexId::internal(3, 2)}));
}

TEST(Theta3, PredictionAndWitnesses) {
    struct Case {
        std::vector<int> lengths;
        int beta;
    };
    for (const Case& c : {Case{{1, 2, 2}, 2}, Case{{2, 4, 6}, 2}, Case{{2, 2, 6}, 2},
                          Case{{1, 1, 3}, 3}, Case{{2, 2, 2}, 3}, Case{{1, 2, 3}, 2}}) {
        GraphSpec g(c.lengths);
        BetaPrediction p = theta3_prediction(g);
        EXPECT_TRUE(p.exact());
        EXPECT_EQ(p.lo, c.beta) << g.literal();
        ASSERT_TRUE(p.witness.has_value());
        EXPECT_EQ(static_cast<int>(p.witness->size()), c.beta);
        EXPECT_TRUE(verify_resolving(g, *p.witness).resolved) << g.literal();
    }
    EXPECT_EQ(*theta3_prediction(GraphSpec({2, 4, 6})).witness,
              (LandmarkSet{VertexId::internal(2, 4), VertexId::internal(3, 5)}));
    EXPECT_EQ(*theta3_prediction(GraphSpec({2, 2, 6})).witness,
              (LandmarkSet{VertexId::internal(2, 1), VertexId::internal(3, 1)}));
}

TEST(Theta4, PredictionAndWitnesses) {
    GraphSpec a({1, 2, 2, 5});
    BetaPrediction pa = theta4_prediction(a);
    EXPECT_EQ(pa.lo, 2);
    EXPECT_EQ(pa.theorem_id, "thm:distinct4consecutive");
    EXPECT_EQ(*pa.witness,
              (LandmarkSet{VertexId::internal(3, 1), VertexId::internal(4, 5)}));

    GraphSpec b({1, 2, 3, 4});
    BetaPrediction pb = theta4_prediction(b);
    EXPECT_EQ(pb.lo, 2);
    EXPECT_EQ(pb.theorem_id, "thm:4consec_s3larger");
    EXPECT_EQ(*pb.witness,
              (LandmarkSet{VertexId::internal(3, 1), VertexId::internal(3, 3)}));

    GraphSpec c({2, 2, 4, 4});
    BetaPrediction pc = theta4_prediction(c);
    EXPECT_EQ(pc.lo, 3);
    EXPECT_EQ(metric_dimension(c).beta, 3);

    EXPECT_EQ(theta4_prediction(GraphSpec({2, 2, 2, 4})).theorem_id,
              "thm:onedifferents1>s2");
    EXPECT_EQ(theta4_prediction(GraphSpec({2, 2, 2, 4})).lo, 4);
}

TEST(PredictBeta, DispatchExamples) {
    BetaPrediction p = predict_beta(GraphSpec({2, 2, 2}));
    EXPECT_EQ(p.lo, 3);
    EXPECT_EQ(p.theorem_id, "thm:GTGEndResult");

    EXPECT_EQ(predict_beta(GraphSpec({1, 1, 3})).lo, 3);

    BetaPrediction gap = predict_beta(GraphSpec({1, 3, 5, 7, 9, 11}));
    EXPECT_TRUE(gap.exact());
    EXPECT_EQ(gap.lo, 4);
    EXPECT_EQ(gap.theorem_id, "cor:PairwiseGapTwo");

    BetaPrediction consec = predict_beta(GraphSpec({1, 2, 3, 4, 5, 6, 7}));
    EXPECT_TRUE(consec.exact());
    EXPECT_EQ(consec.lo, 4);
    EXPECT_EQ(consec.theorem_id, "thm:Consecutive");

    BetaPrediction dis = predict_beta(GraphSpec({1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(dis.lo, 3);
    EXPECT_EQ(dis.hi, 4);
    EXPECT_EQ(dis.theorem_id, "thm:Distinct_si");

    BetaPrediction cyc = predict_beta(GraphSpec({1, 1}));
    EXPECT_TRUE(cyc.exact());
    EXPECT_EQ(cyc.lo, 2);
    EXPECT_EQ(cyc.theorem_id, "cycle");

    // Fallback interval with the strongest applicable lower bound.
    BetaPrediction fb = predict_beta(GraphSpec({2, 2, 4, 4, 4}));
    EXPECT_EQ(fb.lo, 3);
    EXPECT_EQ(fb.hi, 5);
}

TEST(PredictBeta, WitnessRealizesUpperEnd) {
    for (int m = 2; m <= 6; ++m)
        for (const auto& lengths : all_length_vectors(m, 4)) {
            GraphSpec g(lengths);
            BetaPrediction p = predict_beta(g);
            EXPECT_LE(p.lo, p.hi);
            ASSERT_TRUE(p.witness.has_value()) << g.literal();
            EXPECT_EQ(static_cast<int>(p.witness->size()), p.hi) << g.literal();
            EXPECT_TRUE(verify_resolving(g, *p.witness).resolved) << g.literal();
        }
}

// Pairwise gaps >= 2 pin beta to exactly m-2; check the smallest instance by
// brute force (n = 38, so the search is capped at the known value).
TEST(PairwiseGapFamily, BetaIsExactlyMMinusTwo) {
    GraphSpec g({1, 3, 5, 7, 9, 11});
    auto r = metric_dimension_bounded(g, 4);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->beta, 4);
    EXPECT_TRUE(verify_resolving(g, distinct_lengths_set(g)).resolved);
}

TEST(ApplicableTheorems, PredicateEvaluation) {
    auto t1 = applicable_theorems(GraphSpec({2, 2, 2, 4}));
    EXPECT_TRUE(matched(t1, "thm:onedifferents1>s2"));
    EXPECT_TRUE(matched(t1, "cor:sallbuts2"));
    EXPECT_TRUE(matched(t1, "thm:TotalBound"));
    EXPECT_TRUE(matched(t1, "thm:IdenticalPathsTheorem"));
    EXPECT_FALSE(matched(t1, "thm:GTGEndResult"));

    auto t2 = applicable_theorems(GraphSpec({1, 2, 3}));
    EXPECT_TRUE(matched(t2, "thm:GTGEndResult"));
    EXPECT_FALSE(matched(t2, "thm:onedifferents1>s2"));
    EXPECT_FALSE(matched(t2, "thm:IdenticalPathsTheorem"));

    auto t3 = applicable_theorems(GraphSpec({5, 5, 5, 5, 5}));
    EXPECT_TRUE(matched(t3, "thm:UniformThetaProof"));
    EXPECT_TRUE(matched(t3, "cor:LowerBoundUniform"));
}

// No two applicable results may disagree: exact claims coincide and sit
// inside every applicable bound.
TEST(Consistency, AcrossSmallSweep) {
    for (int m = 2; m <= 5; ++m) {
        for (const auto& lengths : all_length_vectors(m, 4)) {
            GraphSpec g(lengths);
            auto exact = exact_claims(g);
            for (std::size_t i = 1; i < exact.size(); ++i)
                ASSERT_EQ(exact[i].second, exact[0].second)
                    << g.literal() << ": " << exact[i].first << " vs " << exact[0].first;
            for (const BoundClaim& b : bound_claims(g)) {
                for (const auto& [id, value] : exact) {
                    ASSERT_GE(value, b.lo) << g.literal() << " " << id << " vs " << b.theorem_id;
                    if (b.hi >= 0)
                        ASSERT_LE(value, b.hi)
                            << g.literal() << " " << id << " vs " << b.theorem_id;
                }
            }
        }
    }
}
