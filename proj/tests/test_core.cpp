#include <doctest.h>

#include <random>

#include "astf/core.hpp"

using namespace astf;

namespace {

StateSequence make_seq(std::vector<std::uint8_t> bits) {
    StateSequence s;
    s.signal_id = "S000";
    s.bits = std::move(bits);
    return s;
}

}  // namespace

TEST_CASE("extract_cscps basic transitions") {
    auto cs = extract_cscps(make_seq({0, 1, 1, 0}));
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == Cscp{1, CscpKind::Rising});
    CHECK(cs[1] == Cscp{3, CscpKind::Falling});
}

TEST_CASE("extract_cscps constant sequences have no transitions") {
    CHECK(extract_cscps(make_seq({0, 0, 0, 0})).empty());
    CHECK(extract_cscps(make_seq({1, 1, 1})).empty());
    CHECK(extract_cscps(make_seq({1})).empty());
}

TEST_CASE("extract_cscps kinds alternate and reconstruct the sequence") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::int64_t t = 1 + rng() % 40;
        std::vector<std::uint8_t> bits(t);
        for (auto& b : bits) b = rng() & 1;
        auto seq = make_seq(bits);
        auto cs = extract_cscps(seq);

        for (std::size_t i = 0; i < cs.size(); ++i) {
            CHECK(cs[i].location >= 1);
            CHECK(cs[i].location <= t - 1);
            if (i > 0) {
                CHECK(cs[i].location > cs[i - 1].location);
                CHECK(cs[i].kind != cs[i - 1].kind);
            }
        }

        // Replaying the transitions from the first bit recovers the sequence.
        std::vector<std::uint8_t> rebuilt(t, bits[0]);
        for (const auto& c : cs) {
            std::uint8_t v = c.kind == CscpKind::Rising ? 1 : 0;
            for (std::int64_t j = c.location; j < t; ++j) rebuilt[j] = v;
        }
        CHECK(rebuilt == bits);
    }
}

TEST_CASE("cscp_in_slice belonging rule") {
    // Interior boundary: belongs regardless of kind.
    CHECK(cscp_in_slice({5, CscpKind::Rising}, 0, 10));
    CHECK(cscp_in_slice({5, CscpKind::Falling}, 0, 10));
    // Rising exactly at the lower edge belongs to the later slice.
    CHECK_FALSE(cscp_in_slice({10, CscpKind::Rising}, 0, 10));
    CHECK(cscp_in_slice({10, CscpKind::Rising}, 10, 20));
    // Falling exactly at the boundary belongs to the earlier slice.
    CHECK(cscp_in_slice({10, CscpKind::Falling}, 0, 10));
    CHECK_FALSE(cscp_in_slice({10, CscpKind::Falling}, 10, 20));
}

TEST_CASE("every CSCP belongs to exactly one slice") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::int64_t t = 4 + rng() % 60;
        std::vector<std::uint8_t> bits(t);
        for (auto& b : bits) b = rng() & 1;
        auto cs = extract_cscps(make_seq(bits));

        Segmentation seg;
        seg.span = t;
        for (std::int64_t d = 1; d < t; ++d)
            if (rng() % 4 == 0) seg.dividing_points.push_back(d);
        REQUIRE(seg.valid());

        for (const auto& c : cs) {
            int owners = 0;
            for (std::size_t i = 0; i < seg.slice_count(); ++i)
                owners += cscp_in_slice(c, seg.slice_lo(i), seg.slice_hi(i));
            CHECK(owners == 1);
        }
    }
}

TEST_CASE("cscps_in_slice preserves order and filters by the belonging rule") {
    auto seq = make_seq({1, 1, 0, 0, 1, 1, 0, 1, 1, 1});
    auto cs = extract_cscps(seq);
    REQUIRE(cs.size() == 4);  // falling@2, rising@4, falling@6, rising@7

    auto first = cscps_in_slice(cs, 0, 4);
    REQUIRE(first.size() == 1);
    CHECK(first[0] == Cscp{2, CscpKind::Falling});

    auto second = cscps_in_slice(cs, 4, 10);
    REQUIRE(second.size() == 3);
    CHECK(second[0] == Cscp{4, CscpKind::Rising});
    CHECK(second[2] == Cscp{7, CscpKind::Rising});
}

TEST_CASE("Segmentation validity") {
    Segmentation s;
    s.span = 10;
    CHECK(s.valid());  // single slice

    s.dividing_points = {3, 7};
    CHECK(s.valid());
    CHECK(s.slice_count() == 3);
    CHECK(s.slice_lo(0) == 0);
    CHECK(s.slice_hi(0) == 3);
    CHECK(s.slice_lo(2) == 7);
    CHECK(s.slice_hi(2) == 10);

    s.dividing_points = {7, 3};
    CHECK_FALSE(s.valid());  // not increasing
    s.dividing_points = {0, 5};
    CHECK_FALSE(s.valid());  // touches the lower edge
    s.dividing_points = {5, 10};
    CHECK_FALSE(s.valid());  // touches the upper edge
    s.dividing_points = {5, 5};
    CHECK_FALSE(s.valid());  // duplicate
}
