#include <doctest.h>

#include <random>

#include "astf/segmentation.hpp"

using namespace astf;
using namespace astf::seg;

namespace {

StateSequence make_seq(std::vector<std::uint8_t> bits) {
    StateSequence s;
    s.signal_id = "S000";
    s.bits = std::move(bits);
    return s;
}

StateSequence random_seq(std::int64_t t, std::mt19937_64& rng, int flip_denom = 20) {
    std::vector<std::uint8_t> bits(t);
    std::uint8_t cur = rng() & 1;
    for (auto& b : bits) {
        if (rng() % flip_denom == 0) cur ^= 1;
        b = cur;
    }
    return make_seq(std::move(bits));
}

// The sequence used for the fixed descent checks: 90 s, starting on, with
// edges at 13, 27, 38, 55, 61, 78.
StateSequence descent_seq() {
    std::vector<std::uint8_t> bits(90, 0);
    auto set = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) bits[i] = 1;
    };
    set(0, 13);
    set(27, 38);
    set(55, 61);
    set(78, 90);
    return make_seq(std::move(bits));
}

}  // namespace

TEST_CASE("segment_equal rounds dividing points half away from zero") {
    auto s = segment_equal(10, 4);
    CHECK(s.dividing_points == std::vector<std::int64_t>{3, 5, 8});
    CHECK(s.span == 10);
    CHECK(s.valid());

    auto t = segment_equal(7, 7);
    CHECK(t.dividing_points == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6});

    CHECK_THROWS(segment_equal(5, 6));  // more slices than seconds
}

TEST_CASE("LossEvaluator matches the direct metrics within 1e-12") {
    std::mt19937_64 rng(101);
    metrics::LossWeights w;
    for (int trial = 0; trial < 400; ++trial) {
        std::int64_t t = 20 + rng() % 200;
        auto seq = random_seq(t, rng, 8);
        LossEvaluator ev(seq);
        int n = 1 + static_cast<int>(rng() % 8);
        Segmentation seg = segment_equal(t, n);
        double fast = ev.evaluate(seg, w);
        double slow = metrics::loss(seq, seg, {static_cast<double>(t)}, w);
        CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
    }
}

TEST_CASE("bssva_stage1 scans the clamped n range and keeps the minimum") {
    std::mt19937_64 rng(202);
    SegmentationConfig cfg;
    cfg.n_min = 3;
    cfg.n_max = 9;
    for (int trial = 0; trial < 50; ++trial) {
        auto seq = random_seq(300 + rng() % 200, rng);
        LossEvaluator ev(seq);
        auto got = bssva_stage1(ev, cfg);
        double best = 1e300;
        int best_n = 0;
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            double l = ev.evaluate(segment_equal(seq.span(), n), cfg.weights);
            if (l < best) {
                best = l;
                best_n = n;
            }
        }
        CHECK(got.n == best_n);
        CHECK(got.loss == doctest::Approx(best).epsilon(1e-12));
        CHECK(got.segmentation.dividing_points ==
              segment_equal(seq.span(), best_n).dividing_points);
    }
}

TEST_CASE("bssva_stage1 clamps the range to short sequences") {
    SegmentationConfig cfg;  // default 30..50
    auto seq = make_seq({1, 0, 1, 0, 1, 0, 1, 0});  // T = 8 < n_min
    LossEvaluator ev(seq);
    auto got = bssva_stage1(ev, cfg);
    CHECK(got.n <= 8);
    CHECK(got.n >= 1);
    CHECK(got.segmentation.valid());
}

TEST_CASE("candidate_moves on the fixed descent sequence") {
    auto seq = descent_seq();
    LossEvaluator ev(seq);
    auto seg = segment_equal(90, 9);  // points 10,20,...,80
    std::vector<bool> active(8, true);
    auto moves = candidate_moves(ev, seg, active);

    auto for_point = [&](std::size_t p) {
        std::vector<std::int64_t> locs;
        for (const auto& m : moves)
            if (m.point_index == p) locs.push_back(m.new_location);
        return locs;
    };
    // D1 = 10: slice [0,10) has no rising edge; slice (10,20] offers the
    // falling edge at 13.
    CHECK(for_point(0) == std::vector<std::int64_t>{13});
    // D2 = 20: no CSCP in [10,20) or (20,30].
    CHECK(for_point(1).empty());
    // D6 = 60: rising 55 before, falling 61 after.
    CHECK(for_point(5) == std::vector<std::int64_t>{55, 61});
}

TEST_CASE("candidate_moves respects activity and the 1 s span floor") {
    auto seq = descent_seq();
    LossEvaluator ev(seq);
    auto seg = segment_equal(90, 9);
    std::vector<bool> active(8, false);
    active[5] = true;
    auto moves = candidate_moves(ev, seg, active);
    for (const auto& m : moves) CHECK(m.point_index == 5);

    // A candidate may never collide with a neighbouring dividing point.
    for (const auto& m : moves) {
        auto pts = seg.dividing_points;
        pts[m.point_index] = m.new_location;
        Segmentation moved{seg.span, pts};
        CHECK(moved.valid());
    }
}

TEST_CASE("bssva stage II never increases the loss and retires moved points") {
    std::mt19937_64 rng(303);
    SegmentationConfig cfg;
    cfg.n_min = 5;
    cfg.n_max = 15;
    for (int trial = 0; trial < 40; ++trial) {
        auto seq = random_seq(400 + rng() % 400, rng);
        LossEvaluator ev(seq);
        auto s1 = bssva_stage1(ev, cfg);
        auto s2 = bssva_stage2(ev, s1, cfg);
        CHECK(s2.loss <= s1.loss + 1e-15);
        CHECK(s2.segmentation.valid());
        CHECK(s2.slice_count == static_cast<int>(s2.segmentation.slice_count()));
        // Each accepted move retires one point, so the count is bounded.
        CHECK(s2.iterations <= static_cast<int>(s1.segmentation.dividing_points.size()));
        // The stored loss is the true loss of the returned segmentation.
        CHECK(s2.loss == doctest::Approx(ev.evaluate(s2.segmentation, cfg.weights))
                             .epsilon(1e-12));
    }
}

TEST_CASE("bssva is deterministic and never worse than equal-length division") {
    std::mt19937_64 rng(404);
    SegmentationConfig cfg;
    cfg.n_min = 8;
    cfg.n_max = 20;
    for (int trial = 0; trial < 30; ++trial) {
        auto seq = random_seq(500 + rng() % 300, rng);
        auto a = bssva(seq, cfg);
        auto b = bssva(seq, cfg);
        CHECK(a.segmentation.dividing_points == b.segmentation.dividing_points);
        CHECK(a.loss == b.loss);

        auto el = segment_el(seq, cfg);
        CHECK(a.loss <= el.loss + 1e-15);
    }
}

TEST_CASE("reference strategies produce valid segmentations in range") {
    std::mt19937_64 rng(505);
    SegmentationConfig cfg;
    cfg.n_min = 6;
    cfg.n_max = 14;
    for (int trial = 0; trial < 20; ++trial) {
        auto seq = random_seq(600 + rng() % 600, rng);
        LossEvaluator ev(seq);
        for (const auto& name : algorithm_names()) {
            auto fn = algorithm_by_name(name);
            auto r = fn(seq, cfg);
            INFO("algorithm ", name);
            CHECK(r.segmentation.valid());
            CHECK(r.segmentation.span == seq.span());
            int n = static_cast<int>(r.segmentation.slice_count());
            CHECK(n >= cfg.n_min);
            CHECK(n <= cfg.n_max);
            CHECK(r.loss ==
                  doctest::Approx(ev.evaluate(r.segmentation, cfg.weights))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("algorithm_by_name rejects unknown names") {
    CHECK(algorithm_by_name("bssva") != nullptr);
    CHECK(algorithm_by_name("fp") != nullptr);
    CHECK_THROWS_AS(algorithm_by_name("nope"), std::invalid_argument);
}
