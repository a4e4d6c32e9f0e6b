#include <gtest/gtest.h>

#include <fstream>

#include "oracles.hpp"
#include "torusact/io.hpp"
#include "torusact/obstruction.hpp"

using namespace torusact;

namespace {

  SeifertPiece seifert(long long d, bool solid = false) {
    return SeifertPiece{Integer(d), solid, Integer(1)};
  }

  io::json fixture(char const* name) {
    std::ifstream in(std::string(TORUSACT_FIXTURES) + "/" + name);
    if (!in) {
      ADD_FAILURE() << "missing fixture " << name;
      return {};
    }
    return io::json::parse(in);
  }

  errc code_of(auto&& f) {
    try {
      f();
    } catch (error const& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return errc::bad_input;
  }

}  // namespace

TEST(Bounds, Examples) {
  auto b = compute_bounds({{seifert(3)}, 0, {}});
  EXPECT_EQ(b, (BoundSet{1, 1, 7, 1}));
  EXPECT_EQ(b.threshold(), 7);

  b = compute_bounds({{seifert(2), seifert(2)}, 0, {Integer(3)}});
  EXPECT_EQ(b, (BoundSet{2, 1, 17, 4}));
  EXPECT_EQ(b.threshold(), 136);

  b = compute_bounds({{HyperbolicPiece{Integer(60)}, seifert(2)}, 0, {}});
  EXPECT_EQ(b, (BoundSet{2, 60, 5, 1}));
  EXPECT_EQ(b.threshold(), 600);
}

TEST(Bounds, FixtureGraphs) {
  auto const all = fixture("graphs.json");
  ASSERT_EQ(all.size(), 20u);
  for (auto const& c : all) {
    auto g = io::graph_from_json(c.at("graph"));
    auto b = compute_bounds(g);
    auto const& e = c.at("expected");
    EXPECT_EQ(b.j, e.at("j").get<long long>()) << c.dump();
    EXPECT_EQ(b.k, e.at("k").get<long long>()) << c.dump();
    EXPECT_EQ(b.l, e.at("l").get<long long>()) << c.dump();
    EXPECT_EQ(b.t, e.at("t").get<long long>()) << c.dump();
    EXPECT_EQ(b.threshold(), e.at("threshold").get<long long>()) << c.dump();
  }
}

TEST(Bounds, SolPieceUsesEightTimesRootAgainstEnumeration) {
  auto const table = oracle::largest_roots_by_enumeration(5);
  for (auto const& [m, r] : table) {
    IntMatrix2x2 const A{m[0], m[1], m[2], m[3]};
    auto b = compute_bounds({{SolPiece{A}}, 0, {}});
    EXPECT_EQ(b.k, Integer(8 * static_cast<long long>(r))) << A;
  }
}

TEST(Bounds, ThresholdStrictlyMonotone) {
  for (long long j = 1; j <= 6; ++j) {
    for (long long k = 1; k <= 6; ++k) {
      for (long long l = 1; l <= 6; ++l) {
        for (long long t = 1; t <= 6; ++t) {
          BoundSet b{j, k, l, t};
          auto const th = b.threshold();
          EXPECT_LT(th, (BoundSet{j + 1, k, l, t}).threshold());
          EXPECT_LT(th, (BoundSet{j, k + 1, l, t}).threshold());
          EXPECT_LT(th, (BoundSet{j, k, l + 1, t}).threshold());
          EXPECT_LT(th, (BoundSet{j, k, l, t + 1}).threshold());
        }
      }
    }
  }
}

TEST(Bounds, MalformedGraphs) {
  EXPECT_EQ(code_of([] { compute_bounds({{}, 0, {}}); }), errc::malformed_graph);
  EXPECT_EQ(code_of([] { compute_bounds({{seifert(2)}, 1, {}}); }), errc::malformed_graph);
  EXPECT_EQ(code_of([] { compute_bounds({{seifert(0)}, 0, {}}); }), errc::malformed_graph);
  EXPECT_EQ(code_of([] { compute_bounds({{HyperbolicPiece{Integer(0)}}, 0, {}}); }),
            errc::malformed_graph);
  EXPECT_EQ(code_of([] { compute_bounds({{SolPiece{{1, 1, 0, 1}}}, 0, {}}); }),
            errc::malformed_graph);
  EXPECT_EQ(code_of([] { compute_bounds({{seifert(2), seifert(2)}, 0, {Integer(0)}}); }),
            errc::malformed_graph);
  EXPECT_EQ(code_of([] { io::graph_from_json(io::json::parse(R"({"pieces":[{"kind":"torus"}]})")); }),
            errc::parse_error);
}

TEST(Bounds, NegativeTraceMonodromyIsNegated) {
  auto trace = bound_trace({{SolPiece{{-5, -3, -3, -2}}}, 0, {}});
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(trace[1].rule, "sol_bound");
  EXPECT_EQ(trace[1].value, 16);
  EXPECT_FALSE(trace[1].note.empty());
}

TEST(Bounds, SeveralFiberingsFlaggedConservative) {
  JSJGraph g{{SeifertPiece{Integer(2), false, std::nullopt}}, 0, {}};
  auto trace = bound_trace(g);
  EXPECT_NE(trace[1].note.find("conservative"), std::string::npos);
  EXPECT_EQ(compute_bounds(g).l, 5);
}

TEST(TorsionVerdict, Examples) {
  JSJGraph const two{{seifert(2), seifert(2)}, 0, {Integer(3)}};
  auto v = torsion_extension_verdict(two, std::nullopt, std::nullopt);
  EXPECT_TRUE(v.ruled_out);
  EXPECT_FALSE(v.required_conclusion);

  JSJGraph const solid{{seifert(2, true)}, 0, {}};
  v = torsion_extension_verdict(solid, std::nullopt, std::nullopt);
  EXPECT_FALSE(v.ruled_out);
  EXPECT_EQ(v.required_conclusion, "solid torus");

  v = torsion_extension_verdict(two, Integer(100), Integer(100));
  EXPECT_FALSE(v.ruled_out);
  v = torsion_extension_verdict(two, Integer(137), Integer(100));
  EXPECT_FALSE(v.ruled_out);
  v = torsion_extension_verdict(two, Integer(137), std::nullopt);
  EXPECT_TRUE(v.ruled_out);
  // equal to the threshold is not above it
  v = torsion_extension_verdict(two, Integer(136), Integer(1000));
  EXPECT_FALSE(v.ruled_out);

  EXPECT_EQ(code_of([&] { torsion_extension_verdict(two, Integer(0), std::nullopt); }),
            errc::bad_input);
  EXPECT_EQ(code_of([] { torsion_extension_verdict({{}, 0, {}}, std::nullopt, std::nullopt); }),
            errc::malformed_graph);
}

TEST(TorsionVerdict, TraceReplaysExactly) {
  auto const all = fixture("graphs.json");
  std::vector<std::pair<TorsionOrder, TorsionOrder>> orders{
      {std::nullopt, std::nullopt}, {Integer(5), std::nullopt},
      {Integer(1000000), Integer(999999)}, {Integer(7), Integer(8)}};
  for (auto const& c : all) {
    auto g = io::graph_from_json(c.at("graph"));
    for (auto const& [o1, o2] : orders) {
      auto v = torsion_extension_verdict(g, o1, o2);
      auto r = replay_torsion_verdict(v);
      EXPECT_EQ(r.ruled_out, v.ruled_out);
      EXPECT_EQ(r.reason, v.reason);
      EXPECT_EQ(r.required_conclusion, v.required_conclusion);
      EXPECT_EQ(r.trace, v.trace);
      EXPECT_EQ(bounds_from_trace(v.trace), compute_bounds(g));
      // and through JSON
      auto back = io::verdict_from_json(io::verdict_to_json(v));
      EXPECT_EQ(replay_torsion_verdict(back).trace, v.trace);
    }
  }
}

TEST(EulerPowerOrder, Examples) {
  EXPECT_EQ(euler_power_order(5, 3), 5);
  EXPECT_EQ(euler_power_order(2, 1), 2);
  EXPECT_EQ(code_of([] { euler_power_order(1, 1); }), errc::bad_input);
  EXPECT_EQ(code_of([] { euler_power_order(3, 0); }), errc::bad_input);
  for (long long k = 2; k <= 30; ++k) {
    for (long long n = 1; n <= 5; ++n) {
      EXPECT_EQ(euler_power_order(k, n), euler_power_order(k, 1));
    }
  }
}

TEST(Nontorsion, Examples) {
  EXPECT_TRUE(nontorsion_from_unbounded_torsion({}, true));
  EXPECT_TRUE(nontorsion_from_unbounded_torsion({Integer(2), Integer(4), Integer(8), Integer(16)},
                                                false));
  EXPECT_FALSE(nontorsion_from_unbounded_torsion({Integer(6)}, false));
  EXPECT_FALSE(nontorsion_from_unbounded_torsion({Integer(2), Integer(3)}, false));
  EXPECT_TRUE(nontorsion_from_unbounded_torsion({Integer(3), Integer(2), Integer(6), Integer(12)},
                                                false));
}

TEST(CohomologyRank, Examples) {
  EXPECT_EQ(thompson_cohomology_rank(0), 1u);
  EXPECT_EQ(thompson_cohomology_rank(4), 2u);
  EXPECT_EQ(thompson_cohomology_rank(7), 0u);
}

TEST(CohomologyRank, CountsSurvivingMonomials) {
  // monomials alpha^i chi^j of degree 2(i + j) with i j = 0
  for (std::uint64_t deg = 0; deg <= 40; ++deg) {
    std::uint64_t count = 0;
    if (deg % 2 == 0) {
      for (std::uint64_t i = 0; i <= deg / 2; ++i) {
        std::uint64_t const j = deg / 2 - i;
        count += (i == 0 || j == 0) ? 1 : 0;
      }
    }
    EXPECT_EQ(thompson_cohomology_rank(deg), count) << deg;
  }
  for (std::uint64_t N = 0; N <= 20; ++N) {
    std::uint64_t sum = 0;
    for (std::uint64_t d = 0; d <= 2 * N; ++d) {
      sum += thompson_cohomology_rank(d);
    }
    EXPECT_EQ(sum, 2 * N + 1);
  }
}

TEST(EulerVerdict, Examples) {
  auto v = euler_injectivity_verdict(true, true, false);
  EXPECT_TRUE(v.ruled_out);
  v = euler_injectivity_verdict(true, true, true);
  EXPECT_FALSE(v.ruled_out);
  EXPECT_EQ(v.required_conclusion, "solid torus");
  v = euler_injectivity_verdict(false, true, false);
  EXPECT_FALSE(v.ruled_out);
  EXPECT_FALSE(v.required_conclusion);
  EXPECT_EQ(v.trace.size(), 3u);
}
