#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "grouphide/generators.hpp"
#include "grouphide/groups.hpp"
#include "grouphide/hiding.hpp"
#include "support.hpp"

using namespace grouphide;
using namespace testing_support;

namespace {

// H = {0, 1}; node 2 touches 0 only, node 3 touches both.
HidingInstance two_neighbor_instance(std::size_t budget) {
    HidingInstance inst;
    inst.graph = make_graph(4, {{0, 2}, {0, 3}, {1, 3}});
    inst.evaders = {0, 1};
    inst.measure = CentralityMeasure::degree();
    inst.removable = inst.graph.edges();
    inst.budget = budget;
    return inst;
}

HidingInstance random_instance(Rng &rng, std::size_t max_nodes = 14) {
    std::uniform_int_distribution<std::size_t> size(6, max_nodes);
    std::size_t n = size(rng);
    HidingInstance inst;
    inst.graph = random_gnp(n, 0.3, rng);
    inst.evaders = random_subset(n, 1 + rng() % 3, rng);
    auto all = default_removable(inst.graph, inst.evaders);
    for (const Edge &e : all)
        if (rng() % 4 != 0) inst.removable.push_back(e);
    inst.budget = rng() % 5;
    return inst;
}

bool is_subset_of(const std::vector<Edge> &part, std::vector<Edge> whole) {
    normalize_edges(whole);
    for (const Edge &e : part)
        if (!std::binary_search(whole.begin(), whole.end(), e)) return false;
    return true;
}

}  // namespace

TEST(OptimalDegreeRemoval, ZeroBudgetRemovesNothing) {
    auto inst = two_neighbor_instance(0);
    EXPECT_TRUE(optimal_degree_removal(inst.graph, inst.evaders, inst.removable, 0).empty());
}

TEST(OptimalDegreeRemoval, TakesCheapNeighborFirst) {
    auto inst = two_neighbor_instance(2);
    EXPECT_EQ(optimal_degree_removal(inst.graph, inst.evaders, inst.removable, 2), (std::vector<Edge>{{0, 2}}));
}

TEST(OptimalDegreeRemoval, FullBudgetDisconnectsGroup) {
    auto inst = two_neighbor_instance(3);
    auto r = optimal_degree_removal(inst.graph, inst.evaders, inst.removable, 3);
    normalize_edges(r);
    EXPECT_EQ(r, (std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}}));
    EXPECT_EQ(group_degree(remove_edges(inst.graph, r), inst.evaders), 0.0);
}

TEST(OptimalDegreeRemoval, StopsAtFirstBlockThatDoesNotFit) {
    // Neighbor costs: 3 -> 1, 4 -> 3, 5 -> 1. Budget 4 takes 3 and 5, then 4 no longer fits.
    Graph g = make_graph(7, {{0, 3}, {0, 4}, {1, 4}, {2, 4}, {2, 5}});
    NodeSet h{0, 1, 2};
    auto r = optimal_degree_removal(g, h, g.edges(), 4);
    normalize_edges(r);
    EXPECT_EQ(r, (std::vector<Edge>{{0, 3}, {2, 5}}));
}

TEST(OptimalDegreeRemoval, UnaffordableNeighborsAreSkipped) {
    auto inst = two_neighbor_instance(3);
    std::vector<Edge> removable{{0, 2}, {0, 3}};  // X_3 needs (1,3) too
    auto r = optimal_degree_removal(inst.graph, inst.evaders, removable, 3);
    EXPECT_EQ(r, (std::vector<Edge>{{0, 2}}));
}

TEST(OptimalDegreeRemoval, MatchesSubsetSearchOnRandomInstances) {
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        HidingInstance inst = random_instance(rng);
        auto r = optimal_degree_removal(inst.graph, inst.evaders, inst.removable, inst.budget);
        double greedy = group_degree(remove_edges(inst.graph, r), inst.evaders);
        double best = std::numeric_limits<double>::infinity();
        for_each_subset(inst.removable, inst.budget, [&](const std::vector<Edge> &s) {
            best = std::min(best, degree_reference(remove_edges(inst.graph, s), inst.evaders));
        });
        EXPECT_EQ(greedy, best) << "trial " << trial;
    }
}

TEST(DisconnectCosts, OnePerNeighborWithAffordability) {
    auto inst = two_neighbor_instance(3);
    std::vector<Edge> removable{{0, 2}, {0, 3}};
    auto costs = disconnect_costs(inst.graph, inst.evaders, removable);
    ASSERT_EQ(costs.size(), 2u);
    EXPECT_EQ(costs[0].neighbor, 2u);
    EXPECT_TRUE(costs[0].affordable);
    EXPECT_EQ(costs[1].neighbor, 3u);
    EXPECT_EQ(costs[1].edges.size(), 2u);
    EXPECT_FALSE(costs[1].affordable);
}

TEST(InternalStep, UniformOverIntraGroupEdges) {
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    NodeSet h{0, 1, 2};
    auto removable = default_removable(g, h);
    std::map<Edge, int> seen;
    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        Rng rng(seed);
        auto e = internal_step(g, h, removable, rng);
        ASSERT_TRUE(e);
        EXPECT_TRUE(h.end() != std::find(h.begin(), h.end(), e->u) && h.end() != std::find(h.begin(), h.end(), e->v));
        ++seen[*e];
    }
    ASSERT_EQ(seen.size(), 3u);
    const double sigma = std::sqrt(3000 * (1.0 / 3) * (2.0 / 3));
    for (auto &[e, count] : seen) EXPECT_NEAR(count, 1000, 3 * sigma);
}

TEST(InternalStep, NoneForIndependentSetOrBoundaryOnlyRemovable) {
    Rng rng(1);
    Graph g = star(4);
    NodeSet leaves{1, 2};
    EXPECT_FALSE(internal_step(g, leaves, default_removable(g, leaves), rng));
    Graph k3 = make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    NodeSet h{0, 1, 2};
    std::vector<Edge> boundary{{2, 3}};
    EXPECT_FALSE(internal_step(k3, h, boundary, rng));
}

TEST(RandomStep, SingletonAndEmpty) {
    Rng rng(1);
    Graph g = star(4);
    NodeSet h{0};
    std::vector<Edge> one{{0, 3}};
    EXPECT_EQ(random_step(g, h, one, rng), Edge(0, 3));
    EXPECT_FALSE(random_step(g, h, std::vector<Edge>{}, rng));
}

TEST(RandomStep, UniformOverFourCandidates) {
    Graph g = star(4);
    NodeSet h{0};
    auto removable = default_removable(g, h);
    Rng rng(2024);
    std::map<Edge, int> seen;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) ++seen[*random_step(g, h, removable, rng)];
    ASSERT_EQ(seen.size(), 4u);
    const double sigma = std::sqrt(draws * 0.25 * 0.75);
    for (auto &[e, count] : seen) EXPECT_NEAR(count, draws * 0.25, 3 * sigma);
}

TEST(RandomStep, SkipsEdgesAlreadyRemoved) {
    Graph g = star(4);
    NodeSet h{0};
    auto removable = default_removable(g, h);
    std::vector<Edge> gone{{0, 1}, {0, 2}, {0, 3}};
    Graph after = remove_edges(g, gone);
    Rng rng(3);
    EXPECT_EQ(random_step(after, h, removable, rng), Edge(0, 4));
}

TEST(ShortcutStep, PrefersHubNeighbor) {
    // h = 0, hub 1 with leaves 2..6; h touches the hub and leaf 2.
    Graph g = make_graph(7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {0, 1}, {0, 2}});
    NodeSet h{0};
    EXPECT_EQ(shortcut_step(g, h, default_removable(g, h)), Edge(0, 1));
}

TEST(ShortcutStep, SingleBoundaryEdgeAndIntraOnly) {
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    NodeSet h{0, 1};
    std::vector<Edge> boundary{{1, 2}};
    EXPECT_EQ(shortcut_step(g, h, boundary), Edge(1, 2));
    std::vector<Edge> intra{{0, 1}};
    EXPECT_FALSE(shortcut_step(g, h, intra));
}

TEST(ShortcutStep, TieBreaksBySmallerIds) {
    // C6 with H = {0}: neighbors 1 and 5 are symmetric, so 1 wins.
    NodeSet h{0};
    EXPECT_EQ(shortcut_step(cycle(6), h, default_removable(cycle(6), h)), Edge(0, 1));
    // Two evaders share neighbor 2; the smaller evader id wins.
    Graph g = make_graph(4, {{0, 2}, {1, 2}, {2, 3}});
    NodeSet h2{0, 1};
    EXPECT_EQ(shortcut_step(g, h2, default_removable(g, h2)), Edge(0, 2));
}

TEST(ShortcutStep, UnreachableNodesCostGraphSize) {
    // H = {0} touches 1 and 4. G minus H: 1-2 and 3-4-5-6, so 1 reaches one node and
    // 4 reaches three. Sums: node 1 -> 1 + 4*7 = 29, node 4 -> 1+1+2 + 2*7 = 18.
    Graph g = make_graph(7, {{0, 1}, {0, 4}, {1, 2}, {3, 4}, {4, 5}, {5, 6}});
    NodeSet h{0};
    EXPECT_EQ(shortcut_step(g, h, default_removable(g, h)), Edge(0, 4));
}

TEST(RunStrategy, ZeroBudgetKeepsScores) {
    Rng rng(4);
    Graph g = random_gnp(12, 0.3, rng);
    HidingInstance inst;
    inst.graph = g;
    inst.evaders = {0, 1, 2};
    inst.removable = default_removable(g, inst.evaders);
    inst.budget = 0;
    for (Strategy s : kAllStrategies) {
        StrategyOutcome out = execute_strategy(inst, s, 9);
        EXPECT_TRUE(out.removed.empty());
        ASSERT_EQ(out.scores.size(), 4u);
        for (const MeasureScore &m : out.scores) EXPECT_EQ(m.before, m.after);
    }
}

TEST(RunStrategy, InternalRemovesTriangleWithoutChangingDegree) {
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    HidingInstance inst;
    inst.graph = g;
    inst.evaders = {0, 1, 2};
    inst.removable = {{0, 1}, {1, 2}, {0, 2}};
    inst.budget = 3;
    StrategyOutcome out = execute_strategy(inst, Strategy::Internal, 5, {CentralityMeasure::degree()});
    EXPECT_EQ(out.removed.size(), 3u);
    EXPECT_EQ(out.scores[0].before, out.scores[0].after);
}

TEST(RunStrategy, OptimalDegreeReachesZero) {
    StrategyOutcome out = execute_strategy(two_neighbor_instance(3), Strategy::OptimalDegree, 0);
    EXPECT_EQ(out.scores[0].measure.kind, MeasureKind::Degree);
    EXPECT_EQ(out.scores[0].after, 0.0);
}

TEST(RunStrategy, BudgetSafetyAndDeterminism) {
    Rng rng(202);
    for (int trial = 0; trial < 30; ++trial) {
        HidingInstance inst = random_instance(rng, 20);
        for (Strategy s : kAllStrategies) {
            StrategyOutcome a = run_strategy(inst, s, 1000 + trial);
            StrategyOutcome b = run_strategy(inst, s, 1000 + trial);
            EXPECT_LE(a.removed.size(), inst.budget);
            EXPECT_TRUE(is_subset_of(a.removed, inst.removable));
            auto sorted = a.removed;
            normalize_edges(sorted);
            EXPECT_EQ(sorted.size(), a.removed.size());
            EXPECT_EQ(a.removed, b.removed);
            EXPECT_EQ(a.graph_after.edge_count(), inst.graph.edge_count() - a.removed.size());
        }
    }
}

TEST(RunStrategy, StepExhaustionLeavesNoCandidate) {
    Rng rng(303);
    for (int trial = 0; trial < 30; ++trial) {
        HidingInstance inst = random_instance(rng, 16);
        inst.budget = inst.removable.size() + 1;
        std::vector<char> in = node_mask(inst.graph, inst.evaders);
        for (Strategy s : {Strategy::Internal, Strategy::Random, Strategy::Shortcut}) {
            StrategyOutcome out = run_strategy(inst, s, trial);
            for (const Edge &e : inst.removable) {
                if (!out.graph_after.has_edge(e)) continue;
                if (s == Strategy::Random) ADD_FAILURE() << "random left a removable edge";
                if (s == Strategy::Internal) EXPECT_FALSE(in[e.u] && in[e.v]);
                if (s == Strategy::Shortcut) EXPECT_FALSE(in[e.u] != in[e.v]);
            }
        }
    }
}

TEST(StrategyNames, RoundTrip) {
    for (Strategy s : kAllStrategies) EXPECT_EQ(parse_strategy(to_string(s)), s);
    EXPECT_THROW(parse_strategy("greedy"), std::invalid_argument);
}

TEST(Validate, RejectsBadInstances) {
    auto inst = two_neighbor_instance(1);
    inst.removable.push_back({2, 3});  // not in graph
    EXPECT_THROW(validate(inst), std::invalid_argument);
    inst = two_neighbor_instance(1);
    inst.graph = add_edges(inst.graph, std::vector<Edge>{{2, 3}});
    inst.removable.push_back({2, 3});  // misses the evaders
    EXPECT_THROW(validate(inst), std::invalid_argument);
    inst = two_neighbor_instance(1);
    inst.evaders.clear();
    EXPECT_THROW(validate(inst), std::invalid_argument);
}

TEST(CountSubsets, SmallValuesAndSaturation) {
    EXPECT_EQ(count_subsets(5, 0), 1u);
    EXPECT_EQ(count_subsets(5, 2), 1u + 5 + 10);
    EXPECT_EQ(count_subsets(4, 10), 16u);
    EXPECT_EQ(count_subsets(200, 100), std::numeric_limits<std::uint64_t>::max());
}

TEST(BruteForce, DegreeMatchesGreedy) {
    Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        HidingInstance inst = random_instance(rng);
        auto greedy = optimal_degree_removal(inst.graph, inst.evaders, inst.removable, inst.budget);
        BruteForceResult bf = brute_force_optimal(inst);
        EXPECT_EQ(bf.value, group_degree(remove_edges(inst.graph, greedy), inst.evaders));
        EXPECT_EQ(bf.value, group_degree(remove_edges(inst.graph, bf.removed), inst.evaders));
        EXPECT_LE(bf.removed.size(), inst.budget);
    }
}

TEST(BruteForce, CliqueGadgetOptimumRemovesCliqueEdges) {
    CliqueGadget gadget = clique_gadget(complete(3));
    HidingInstance inst;
    inst.graph = gadget.graph;
    inst.evaders = {gadget.h};
    inst.measure = CentralityMeasure::closeness();
    inst.removable = gadget.removable;
    inst.budget = 3;
    BruteForceResult bf = brute_force_optimal(inst);
    const double n = static_cast<double>(gadget.graph.node_count());
    EXPECT_NEAR(bf.value, (n - 1) / (3 + 2 * 3 + 1 + 3 + 3), 1e-12);
    EXPECT_EQ(bf.removed, gadget.removable);
}

TEST(BruteForce, FullBudgetDegreeIsZero) {
    Rng rng(5);
    Graph g = random_gnp(12, 0.4, rng);
    HidingInstance inst;
    inst.graph = g;
    inst.evaders = {0, 1};
    inst.removable = default_removable(g, inst.evaders);
    inst.budget = inst.removable.size();
    EXPECT_EQ(brute_force_optimal(inst).value, 0.0);
}

TEST(BruteForce, TiesPreferFewerThenLexicographicallyFirst) {
    // Star with center evader: any single leaf edge gives the same degree.
    HidingInstance inst;
    inst.graph = star(4);
    inst.evaders = {0};
    inst.measure = CentralityMeasure::betweenness();
    inst.removable = default_removable(inst.graph, inst.evaders);
    inst.budget = 1;
    BruteForceResult bf = brute_force_optimal(inst);
    // Cutting any leaf lowers betweenness equally; the first edge wins.
    EXPECT_EQ(bf.removed, (std::vector<Edge>{{0, 1}}));
    // Removing nothing on a leaf evader is already optimal (value 0).
    inst.evaders = {1};
    inst.removable = default_removable(inst.graph, inst.evaders);
    bf = brute_force_optimal(inst);
    EXPECT_TRUE(bf.removed.empty());
    EXPECT_EQ(bf.evaluated, 1u);
}

TEST(BruteForce, WorkersAgreeWithSingleThread) {
    Rng rng(606);
    for (int trial = 0; trial < 10; ++trial) {
        HidingInstance inst = random_instance(rng);
        inst.measure = CentralityMeasure::closeness();
        BruteForceResult one = brute_force_optimal(inst);
        BruteForceResult three = brute_force_optimal(inst, {10'000'000, 3});
        EXPECT_EQ(one.value, three.value);
        EXPECT_EQ(one.removed, three.removed);
    }
}

TEST(BruteForce, CapExceededThrows) {
    Rng rng(7);
    Graph g = random_gnp(30, 0.5, rng);
    HidingInstance inst;
    inst.graph = g;
    inst.evaders = {0, 1, 2, 3};
    inst.measure = CentralityMeasure::closeness();
    inst.removable = default_removable(g, inst.evaders);
    inst.budget = 10;
    EXPECT_THROW(brute_force_optimal(inst, {1000, 1}), EnumerationCapExceeded);
}

TEST(SolveGroupHiding, ThresholdAlreadyMet) {
    auto inst = two_neighbor_instance(0);
    inst.theta = 1.0;
    EXPECT_EQ(solve_group_hiding(inst), std::vector<Edge>{});
    inst.measure = CentralityMeasure::closeness();
    EXPECT_EQ(solve_group_hiding(inst), std::vector<Edge>{});
}

TEST(SolveGroupHiding, DegreeNeedsThreeRemovals) {
    auto inst = two_neighbor_instance(2);
    inst.theta = 0.0;
    EXPECT_FALSE(solve_group_hiding(inst));
    inst.budget = 3;
    auto r = solve_group_hiding(inst);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->size(), 3u);
}

TEST(SolveGroupHiding, MultiwayCutGadgetFindsCut) {
    // Terminals 0,1,2 meet at center 3; cutting two spokes separates them all.
    Graph host = make_graph(4, {{0, 3}, {1, 3}, {2, 3}});
    NodeSet terminals{0, 1, 2};
    MultiwayCutGadget gadget = multiway_cut_gadget(host, terminals);
    HidingInstance inst;
    inst.graph = gadget.graph;
    inst.evaders = gadget.evaders;
    inst.measure = CentralityMeasure::betweenness();
    inst.theta = 0.0;
    inst.removable = gadget.removable;
    inst.budget = 2;
    auto r = solve_group_hiding(inst);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->size(), 2u);
    EXPECT_EQ(group_betweenness_naive(remove_edges(inst.graph, *r), inst.evaders), 0.0);
    inst.budget = 1;
    EXPECT_FALSE(solve_group_hiding(inst));
}

TEST(SolveMinimumGroupHiding, Examples) {
    auto inst = two_neighbor_instance(0);
    inst.theta = 1.0;
    EXPECT_EQ(solve_minimum_group_hiding(inst), std::vector<Edge>{});

    inst.theta = 0.0;
    auto r = solve_minimum_group_hiding(inst);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->size(), 3u);

    inst.removable = {{0, 2}};
    EXPECT_FALSE(solve_minimum_group_hiding(inst));
}

TEST(SolveMinimumGroupHiding, NoLargerThanAnyBudgetedSolution) {
    Rng rng(505);
    for (int trial = 0; trial < 25; ++trial) {
        HidingInstance inst = random_instance(rng, 10);
        inst.measure = trial % 2 ? CentralityMeasure::closeness() : CentralityMeasure::degree();
        double start = evaluate(inst.measure, inst.graph, inst.evaders);
        inst.theta = start * 0.6;
        auto minimum = solve_minimum_group_hiding(inst);
        for (std::size_t b = 0; b <= inst.removable.size() && b <= 6; ++b) {
            inst.budget = b;
            auto r = solve_group_hiding(inst);
            if (r) {
                ASSERT_TRUE(minimum);
                EXPECT_LE(minimum->size(), r->size());
                EXPECT_LE(evaluate(inst.measure, remove_edges(inst.graph, *r), inst.evaders), inst.theta);
            }
        }
    }
}
