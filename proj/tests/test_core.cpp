#include <doctest.h>

#include <cmath>

#include "phycache/rng.hpp"
#include "phycache/topology.hpp"
#include "phycache/units.hpp"

using namespace phycache;

TEST_CASE("rate conversion") {
    UnitContext ctx;
    ctx.object_bits = 8.0e6;
    ctx.chunks_per_object = 20;
    ctx.slot_s = 0.002;

    SUBCASE("30 Mbps at 2 ms slots and 1 MB objects") {
        CHECK(convert_rate(30.0e6, ctx) == doctest::Approx(0.0075).epsilon(1e-12));
    }
    SUBCASE("zero rate") { CHECK(convert_rate(0.0, ctx) == 0.0); }
    SUBCASE("chunk size is 50 KB") { CHECK(ctx.chunk_bits() == doctest::Approx(4.0e5)); }
    SUBCASE("negative rejected") { CHECK_THROWS(convert_rate(-1.0, ctx)); }
    SUBCASE("linearity") {
        RngStream rng(9, "conv");
        for (int i = 0; i < 200; ++i) {
            const double a = rng.uniform(0.0, 1e8);
            const double b = rng.uniform(0.0, 1e8);
            CHECK(convert_rate(a, ctx) + convert_rate(b, ctx) ==
                  doctest::Approx(convert_rate(a + b, ctx)).epsilon(1e-12));
        }
    }
    SUBCASE("round trip") {
        CHECK(objects_per_slot_to_bps(convert_rate(42.5e6, ctx), ctx) ==
              doctest::Approx(42.5e6).epsilon(1e-12));
    }
}

TEST_CASE("frame clock") {
    FrameClock clock;
    clock.slots_per_frame = 50;
    CHECK(clock.frame_of(1) == 1);
    CHECK(clock.frame_of(50) == 1);
    CHECK(clock.frame_of(51) == 2);
    CHECK(clock.is_frame_start(1));
    CHECK(clock.is_frame_start(51));
    CHECK(!clock.is_frame_start(50));
    CHECK(clock.frame_start_slot(3) == 101);
    for (long t = 1; t <= 500; ++t)
        CHECK(clock.frame_of(t) == static_cast<int>(std::ceil(static_cast<double>(t) / 50.0)));
}

TEST_CASE("named rng streams are independent and deterministic") {
    RngStream a1(42, "channels"), a2(42, "channels"), b(42, "arrivals");
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 100; ++i) {
        const uint64_t x = a1.next_u64();
        all_equal = all_equal && x == a2.next_u64();
        any_diff = any_diff || x != b.next_u64();
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("topology layouts") {
    SUBCASE("hex7 builds seven cells") {
        TopologyConfig cfg;
        cfg.n_pairs = 7;
        cfg.layout = Layout::Hex7;
        cfg.cell_radius_m = 250.0;
        RngStream rng(1, "topology");
        const Topology topo = build_topology(cfg, 2, 1, rng);
        CHECK(topo.n_pairs() == 7);
        CHECK(topo.bs_position(0).x == doctest::Approx(0.0));
        CHECK(topo.bs_position(0).y == doctest::Approx(0.0));
        const double spacing = std::sqrt(3.0) * 250.0;
        for (int n = 1; n < 7; ++n) {
            const double d = std::hypot(topo.bs_position(n).x, topo.bs_position(n).y);
            CHECK(d == doctest::Approx(spacing).epsilon(1e-9));
        }
        for (int j = 0; j < 7; ++j)
            for (int n = 0; n < 7; ++n) CHECK(topo.distance_m(j, n) > 0.0);
    }
    SUBCASE("hex7 wrap-around never lengthens a link") {
        TopologyConfig cfg;
        cfg.n_pairs = 7;
        cfg.layout = Layout::Hex7;
        cfg.user_placement = UserPlacement::FixedOffset;
        cfg.user_offset_m = 100.0;
        RngStream rng(1, "topology");
        const Topology topo = build_topology(cfg, 2, 1, rng);
        for (int j = 0; j < 7; ++j) {
            for (int n = 0; n < 7; ++n) {
                const double direct = std::hypot(topo.user_position(j).x - topo.bs_position(n).x,
                                                 topo.user_position(j).y - topo.bs_position(n).y);
                CHECK(topo.distance_m(j, n) <= direct + 1e-9);
            }
        }
    }
    SUBCASE("single pair at origin") {
        TopologyConfig cfg;
        cfg.n_pairs = 1;
        cfg.layout = Layout::Single;
        cfg.user_placement = UserPlacement::FixedOffset;
        cfg.user_offset_m = 125.0;
        RngStream rng(1, "topology");
        const Topology topo = build_topology(cfg, 2, 1, rng);
        CHECK(topo.n_pairs() == 1);
        CHECK(topo.distance_m(0, 0) == doctest::Approx(125.0));
    }
    SUBCASE("deterministic under fixed seed") {
        TopologyConfig cfg;
        cfg.n_pairs = 3;
        RngStream r1(42, "topology"), r2(42, "topology");
        const Topology t1 = build_topology(cfg, 2, 1, r1);
        const Topology t2 = build_topology(cfg, 2, 1, r2);
        for (int j = 0; j < 3; ++j) {
            CHECK(t1.user_position(j).x == t2.user_position(j).x);
            CHECK(t1.user_position(j).y == t2.user_position(j).y);
        }
    }
    SUBCASE("invalid configs rejected") {
        TopologyConfig cfg;
        cfg.n_pairs = 0;
        RngStream rng(1, "topology");
        CHECK_THROWS(build_topology(cfg, 2, 1, rng));
        cfg.n_pairs = 3;
        cfg.cell_radius_m = -1.0;
        CHECK_THROWS(build_topology(cfg, 2, 1, rng));
        cfg.cell_radius_m = 250.0;
        cfg.layout = Layout::Hex7;  // needs exactly 7 pairs
        CHECK_THROWS(build_topology(cfg, 2, 1, rng));
    }
}
