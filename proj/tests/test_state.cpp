#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "xychain/errors.hpp"
#include "xychain/state.hpp"

using namespace xychain;

namespace {

double max_dev(const Rho3& a, const Rho3& b) {
    double dev = 0;
    for (int i = 0; i < 64; ++i) dev = std::max(dev, std::abs(a.m[i] - b.m[i]));
    return dev;
}

double max_dev(const Rho2& a, const Rho2& b) {
    double dev = 0;
    for (int i = 0; i < 16; ++i) dev = std::max(dev, std::abs(a.m[i] - b.m[i]));
    return dev;
}

}  // namespace

TEST_CASE("vanishing correlators give the maximally mixed state") {
    Rho3 rho = assemble_rho3(CorrelatorSet{});
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            CHECK(rho.at(r, c) == doctest::Approx(r == c ? 0.125 : 0.0).epsilon(1e-15));
}

TEST_CASE("hot chain is maximally mixed within 1e-9") {
    Rho3 rho = assemble_rho3(correlator_set({4, 4}, ModelParams{0.0, 0.7, 100.0}));
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            CHECK(std::abs(rho.at(r, c) - (r == c ? 0.125 : 0.0)) < 1e-9);
}

TEST_CASE("strong field polarizes the triple") {
    // residual coherences scale as gamma/(4h), depletion as (gamma/2h)^2
    Rho3 rho = assemble_rho3(correlator_set({1, 1}, ModelParams{10.0, 1.0, 0.0}));
    CHECK(rho.at(0, 0) > 1.0 - 5e-3);  // |up up up> occupies r = 0
    for (int i = 1; i < 64; ++i) CHECK(std::abs(rho.m[i]) < 0.03);

    Rho3 deep = assemble_rho3(correlator_set({1, 1}, ModelParams{100.0, 1.0, 0.0}));
    CHECK(deep.at(0, 0) > 1.0 - 1e-4);
    for (int i = 1; i < 64; ++i) CHECK(std::abs(deep.m[i]) < 3e-3);
}

TEST_CASE("fully polarized correlators give the exact projector") {
    CorrelatorSet s;
    s.z = 1;
    s.zz_alpha = s.zz_beta = s.zz_gamma = 1;
    s.zzz = 1;
    Rho3 rho = assemble_rho3(s);
    CHECK(rho.at(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-15));
    for (int i = 1; i < 64; ++i) CHECK(std::abs(rho.m[i]) < 1e-15);
}

TEST_CASE("assembly and read-out are mutually inverse") {
    CorrelatorSet s = correlator_set({2, 1}, ModelParams{0.9, 0.6, 0.2});
    TripleCorrelators back = correlators_of(assemble_rho3(s));
    CHECK(std::abs(back.z1 - s.z) < 1e-13);
    CHECK(std::abs(back.z2 - s.z) < 1e-13);
    CHECK(std::abs(back.z3 - s.z) < 1e-13);
    CHECK(std::abs(back.zz12 - s.zz_alpha) < 1e-13);
    CHECK(std::abs(back.zz23 - s.zz_beta) < 1e-13);
    CHECK(std::abs(back.zz13 - s.zz_gamma) < 1e-13);
    CHECK(std::abs(back.xx12 - s.xx_alpha) < 1e-13);
    CHECK(std::abs(back.xx23 - s.xx_beta) < 1e-13);
    CHECK(std::abs(back.xx13 - s.xx_gamma) < 1e-13);
    CHECK(std::abs(back.yy12 - s.yy_alpha) < 1e-13);
    CHECK(std::abs(back.yy13 - s.yy_gamma) < 1e-13);
    CHECK(std::abs(back.zzz - s.zzz) < 1e-13);
    CHECK(std::abs(back.xxz - s.xxz) < 1e-13);
    CHECK(std::abs(back.zxx - s.zxx) < 1e-13);
    CHECK(std::abs(back.xzx - s.xzx) < 1e-13);
    CHECK(std::abs(back.yyz - s.yyz) < 1e-13);
    CHECK(std::abs(back.zyy - s.zyy) < 1e-13);
    CHECK(std::abs(back.yzy - s.yzy) < 1e-13);
}

TEST_CASE("partial traces reproduce the pair states at every distance") {
    ModelParams p{0.7, 0.8, 0.1};
    TripleGeometry geom{2, 3};
    Rho3 rho = assemble_rho3(correlator_set(geom, p));
    // tracing Last leaves the (i, j) pair at distance alpha, etc.
    CHECK(max_dev(partial_trace(rho, Site::Last), reduced_pair(2, p)) < 1e-12);
    CHECK(max_dev(partial_trace(rho, Site::First), reduced_pair(3, p)) < 1e-12);
    CHECK(max_dev(partial_trace(rho, Site::Middle), reduced_pair(5, p)) < 1e-12);
}

TEST_CASE("pair partial trace leaves the single-site state") {
    ModelParams p{1.2, 0.5, 0.0};
    Rho2 pair = reduced_pair(3, p);
    double z = magnetization(p);
    for (Site s : {Site::First, Site::Last}) {
        auto site = partial_trace_pair(pair, s);
        CHECK(site[0] == doctest::Approx((1 + z) / 2).epsilon(1e-12));
        CHECK(site[3] == doctest::Approx((1 - z) / 2).epsilon(1e-12));
        CHECK(std::abs(site[1]) < 1e-14);
        CHECK(std::abs(site[2]) < 1e-14);
    }
}

TEST_CASE("pair states carry the X pattern") {
    Rho2 rho = reduced_pair(2, ModelParams{0.8, 0.9, 0.05});
    CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rho.at(0, 1) == 0.0);
    CHECK(rho.at(0, 2) == 0.0);
    CHECK(rho.at(1, 3) == 0.0);
    CHECK(rho.at(2, 3) == 0.0);
    CHECK(rho.at(0, 3) == rho.at(3, 0));
    CHECK(rho.at(1, 2) == rho.at(2, 1));
}

TEST_CASE("make_pair_state matches its defining correlators") {
    Rho2 rho = make_pair_state(0.3, -0.2, 0.1, 0.4, -0.5);
    CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-15));
    // diagonal: (1 + za sa + zb sb + zz sa sb)/4 with s = +1 for up
    CHECK(rho.at(0, 0) == doctest::Approx((1 + 0.3 - 0.2 + 0.1) / 4));
    CHECK(rho.at(1, 1) == doctest::Approx((1 + 0.3 + 0.2 - 0.1) / 4));
    CHECK(rho.at(2, 2) == doctest::Approx((1 - 0.3 - 0.2 - 0.1) / 4));
    CHECK(rho.at(3, 3) == doctest::Approx((1 - 0.3 + 0.2 + 0.1) / 4));
    CHECK(rho.at(0, 3) == doctest::Approx((0.4 - (-0.5)) / 4));
    CHECK(rho.at(1, 2) == doctest::Approx((0.4 + (-0.5)) / 4));
}

TEST_CASE("mirror-symmetric geometry gives a swap-invariant state") {
    Rho3 rho = assemble_rho3(correlator_set({2, 2}, ModelParams{0.6, 0.9, 0.1}));
    auto rev = [](int r) { return ((r & 1) << 2) | (r & 2) | ((r >> 2) & 1); };
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            CHECK(rho.at(r, c) == doctest::Approx(rho.at(rev(r), rev(c))).epsilon(1e-13));
}

TEST_CASE("parity forbids odd-string matrix elements") {
    // every entry connecting sectors of different total-z parity must vanish
    Rho3 rho = assemble_rho3(correlator_set({1, 2}, ModelParams{0.9, 0.4, 0.3}));
    auto parity = [](int r) { return (__builtin_popcount(r) & 1); };
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            if (parity(r) != parity(c)) CHECK(rho.at(r, c) == 0.0);
}

TEST_CASE("inconsistent correlators are rejected as non-positive") {
    CorrelatorSet junk;
    junk.xx_alpha = 1.0;
    junk.yy_alpha = 1.0;
    junk.zz_alpha = -1.0;
    junk.xx_beta = 1.0;
    junk.zzz = 2.0;
    CHECK_THROWS_AS(assemble_rho3(junk), NotPositive);
}

TEST_CASE("min_eigenvalue flags and passes the right states") {
    Rho3 mixed = assemble_rho3(CorrelatorSet{});
    CHECK(min_eigenvalue(mixed) == doctest::Approx(0.125).epsilon(1e-12));
    Rho2 bell = make_pair_state(0, 0, 1, 1, -1);
    CHECK(std::abs(min_eigenvalue(bell)) < 1e-12);
}
