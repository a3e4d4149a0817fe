// Copyright 2026 The qtransduce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "qtd/core/random_stream.h"
#include "qtd/hardware/fock_beam_splitter.h"
#include "qtd/hardware/fock_detector.h"
#include "qtd/hardware/optical_channel.h"
#include "qtd/hardware/photon.h"
#include "qtd/hardware/transducer.h"
#include "qtd/hardware/transmon.h"

namespace qtd {
namespace {

constexpr ComponentId kOpticalPort{1};
constexpr ComponentId kMicrowavePort{2};

Photon microwave(PhotonIdAllocator &ids, std::int64_t trial = 0) {
    return Transmon(ComponentId{0}, PhotonOrigin::kInformationQubit)
        .emit(SimTime::from_ps(0), trial, ids);
}

Photon optical(PhotonIdAllocator &ids, RandomStream &rng, std::int64_t trial = 0) {
    Transducer always(1.0, kOpticalPort, kMicrowavePort);
    return always.convert(microwave(ids, trial), rng).out_photon;
}

TEST(Transmon, EmitsMicrowavePhoton) {
    PhotonIdAllocator ids;
    Transmon t(ComponentId{1}, PhotonOrigin::kSourceAncilla);
    Photon p = t.emit(SimTime::from_ps(0), 0, ids);
    EXPECT_EQ(p.domain(), Domain::kMicrowave);
    EXPECT_EQ(p.trial(), 0);
    EXPECT_EQ(p.origin(), PhotonOrigin::kSourceAncilla);
}

TEST(Transmon, PeriodicEmissionsHaveDistinctIds) {
    PhotonIdAllocator ids;
    Transmon t(ComponentId{1}, PhotonOrigin::kInformationQubit);
    std::set<std::uint64_t> seen;
    for (int k = 0; k < 100; ++k) {
        Photon p = t.emit(SimTime::from_ps(k * kPicosecondsPerMicrosecond), k, ids);
        EXPECT_EQ(p.emit_time().ps(), k * kPicosecondsPerMicrosecond);
        seen.insert(p.id());
    }
    EXPECT_EQ(seen.size(), 100u);
}

TEST(Transmon, SimultaneousEmittersGetDistinctIds) {
    PhotonIdAllocator ids;
    Transmon a(ComponentId{1}, PhotonOrigin::kSourceAncilla);
    Transmon b(ComponentId{2}, PhotonOrigin::kDestinationAncilla);
    EXPECT_NE(a.emit(SimTime{}, 0, ids).id(), b.emit(SimTime{}, 0, ids).id());
}

TEST(Transmon, ReceiveLogsMicrowaveRejectsOptical) {
    PhotonIdAllocator ids;
    RandomStream rng(0, "t");
    Transmon t(std::nullopt, PhotonOrigin::kInformationQubit);
    t.receive(SimTime::from_ps(4), microwave(ids));
    ASSERT_EQ(t.received_log().size(), 1u);
    EXPECT_EQ(t.received_log()[0].time.ps(), 4);
    EXPECT_THROW(t.receive(SimTime{}, optical(ids, rng)), std::invalid_argument);
}

TEST(Transducer, UnitEfficiencyAlwaysConverts) {
    PhotonIdAllocator ids;
    RandomStream rng(0, "conv");
    Transducer t(1.0, kOpticalPort, kMicrowavePort);
    for (int i = 0; i < 1000; ++i) {
        Photon in = microwave(ids);
        ConversionOutcome out = t.convert(in, rng);
        ASSERT_TRUE(out.converted);
        ASSERT_EQ(out.out_photon.domain(), Domain::kOptical);
        ASSERT_EQ(out.out_photon.wavelength_nm(), kOpticalWavelengthNm);
        ASSERT_EQ(out.out_photon.id(), in.id());
        ASSERT_EQ(out.destination, kOpticalPort);
    }
    EXPECT_EQ(rng.draws(), 1000u);
}

TEST(Transducer, ZeroEfficiencyUsesFailurePort) {
    PhotonIdAllocator ids;
    RandomStream rng(0, "conv");
    Transducer t(0.0, kOpticalPort, kMicrowavePort);
    for (int i = 0; i < 1000; ++i) {
        ConversionOutcome out = t.convert(microwave(ids), rng);
        ASSERT_FALSE(out.converted);
        ASSERT_EQ(out.out_photon.domain(), Domain::kMicrowave);
        ASSERT_EQ(out.destination, kMicrowavePort);
    }
    EXPECT_EQ(rng.draws(), 1000u);
}

TEST(Transducer, DownConversionRoutesByDomain) {
    PhotonIdAllocator ids;
    RandomStream rng(0, "conv");
    Transducer down(1.0, kOpticalPort, kMicrowavePort);
    ConversionOutcome ok = down.convert(optical(ids, rng), rng);
    EXPECT_EQ(ok.out_photon.domain(), Domain::kMicrowave);
    EXPECT_EQ(ok.destination, kMicrowavePort);
    Transducer broken(0.0, kOpticalPort, kMicrowavePort);
    ConversionOutcome fail = broken.convert(optical(ids, rng), rng);
    EXPECT_EQ(fail.out_photon.domain(), Domain::kOptical);
    EXPECT_EQ(fail.destination, kOpticalPort);
}

TEST(Transducer, HalfEfficiencyRate) {
    PhotonIdAllocator ids;
    RandomStream rng(2024, "conv");
    Transducer t(0.5, kOpticalPort, kMicrowavePort);
    int converted = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        converted += t.convert(microwave(ids), rng).converted;
    }
    EXPECT_NEAR(static_cast<double>(converted) / n, 0.5, 0.015);
}

TEST(TransducerProperty, RateConvergesWithinThreeSigma) {
    PhotonIdAllocator ids;
    for (double eta : {0.05, 0.2, 0.37, 0.64, 0.9}) {
        RandomStream rng(17, "conv");
        Transducer t(eta, kOpticalPort, kMicrowavePort);
        const int n = 20000;
        int k = 0;
        for (int i = 0; i < n; ++i) {
            k += t.convert(microwave(ids), rng).converted;
        }
        EXPECT_NEAR(static_cast<double>(k) / n, eta, 3.0 * std::sqrt(eta * (1 - eta) / n))
            << "eta " << eta;
    }
}

TEST(Transducer, RejectsBadEfficiency) {
    EXPECT_THROW(Transducer(1.5, kOpticalPort, kMicrowavePort), std::invalid_argument);
    EXPECT_THROW(Transducer(-0.1, kOpticalPort, kMicrowavePort), std::invalid_argument);
}

TEST(OpticalChannel, ZeroLengthIsLossless) {
    PhotonIdAllocator ids;
    RandomStream rng(0, "ch");
    OpticalChannel ch(0.0, ComponentId{3});
    EXPECT_EQ(ch.survival_probability(), 1.0);
    for (int i = 0; i < 1000; ++i) {
        ChannelOutcome out = ch.transmit(optical(ids, rng), SimTime::from_ps(10), rng);
        ASSERT_TRUE(out.survived);
        ASSERT_EQ(out.arrival_time.ps(), 10);
    }
}

TEST(OpticalChannel, OneAttenuationLength) {
    PhotonIdAllocator ids;
    RandomStream conv(0, "conv");
    RandomStream rng(8, "ch");
    OpticalChannel ch(22.0, ComponentId{3}, 22.0);
    EXPECT_NEAR(ch.survival_probability(), 0.36787944117144233, 1e-12);
    EXPECT_EQ(ch.propagation_delay_ps(), 110000);
    int survived = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        ChannelOutcome out = ch.transmit(optical(ids, conv), SimTime{}, rng);
        survived += out.survived;
        ASSERT_EQ(out.arrival_time.ps(), 110000);
    }
    EXPECT_EQ(rng.draws(), static_cast<std::uint64_t>(n));
    EXPECT_NEAR(static_cast<double>(survived) / n, 0.36787944117144233, 0.015);
}

TEST(OpticalChannel, RejectsMicrowaveAndBadGeometry) {
    PhotonIdAllocator ids;
    RandomStream rng(0, "ch");
    OpticalChannel ch(1.0, ComponentId{3});
    EXPECT_THROW(ch.transmit(microwave(ids), SimTime{}, rng), std::invalid_argument);
    EXPECT_THROW(OpticalChannel(-1.0, ComponentId{3}), std::invalid_argument);
    EXPECT_THROW(OpticalChannel(1.0, ComponentId{3}, 0.0), std::invalid_argument);
}

TEST(FockBeamSplitter, SinglePhotonPortsAreBalanced) {
    PhotonIdAllocator ids;
    RandomStream conv(0, "conv");
    RandomStream rng(31, "bs");
    FockBeamSplitter bs({ComponentId{4}, ComponentId{5}});
    int port0 = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        Photon p = optical(ids, conv);
        std::vector<int> ports = bs.route(std::span<const Photon>(&p, 1), rng);
        ASSERT_EQ(ports.size(), 1u);
        port0 += ports[0] == 0;
    }
    EXPECT_NEAR(static_cast<double>(port0) / n, 0.5, 0.015);
}

TEST(FockBeamSplitter, PairsBunchIntoOnePort) {
    PhotonIdAllocator ids;
    RandomStream conv(0, "conv");
    RandomStream rng(32, "bs");
    FockBeamSplitter bs({ComponentId{4}, ComponentId{5}});
    int both0 = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        std::vector<Photon> pair = {optical(ids, conv), optical(ids, conv)};
        std::vector<int> ports = bs.route(pair, rng);
        ASSERT_EQ(ports.size(), 2u);
        ASSERT_EQ(ports[0], ports[1]);
        both0 += ports[0] == 0;
    }
    EXPECT_EQ(rng.draws(), static_cast<std::uint64_t>(n));
    EXPECT_NEAR(static_cast<double>(both0) / n, 0.5, 0.015);
}

TEST(FockBeamSplitter, RejectsImpossibleWindows) {
    PhotonIdAllocator ids;
    RandomStream conv(0, "conv");
    RandomStream rng(0, "bs");
    FockBeamSplitter bs({ComponentId{4}, ComponentId{5}});
    std::vector<Photon> none;
    EXPECT_THROW(bs.route(none, rng), std::invalid_argument);
    std::vector<Photon> three = {optical(ids, conv), optical(ids, conv), optical(ids, conv)};
    EXPECT_THROW(bs.route(three, rng), std::logic_error);
    Photon mw = microwave(ids);
    EXPECT_THROW(bs.route(std::span<const Photon>(&mw, 1), rng), std::invalid_argument);
}

TEST(FockBeamSplitter, WindowBuffering) {
    PhotonIdAllocator ids;
    RandomStream conv(0, "conv");
    FockBeamSplitter bs({ComponentId{4}, ComponentId{5}}, 1000);
    EXPECT_FALSE(bs.window_open());
    auto closes = bs.admit(optical(ids, conv), SimTime::from_ps(500));
    ASSERT_TRUE(closes.has_value());
    EXPECT_EQ(closes->ps(), 1500);
    EXPECT_FALSE(bs.admit(optical(ids, conv), SimTime::from_ps(900)).has_value());
    EXPECT_EQ(bs.close_window().size(), 2u);
    EXPECT_FALSE(bs.window_open());
}

TEST(FockDetector, IdealSinglePhotonClicks) {
    PhotonIdAllocator ids;
    RandomStream conv(0, "conv");
    RandomStream rng(0, "det");
    for (DetectorKind kind : {DetectorKind::kSpd, DetectorKind::kPnrd}) {
        FockDetector d(kind, 1.0);
        Photon p = optical(ids, conv);
        DetectionEvent e = d.detect(std::span<const Photon>(&p, 1), rng);
        EXPECT_TRUE(e.clicked);
        EXPECT_EQ(e.detected_count, 1);
        EXPECT_EQ(d.total_clicks(), 1u);
    }
}

TEST(FockDetector, PnrdCountsPairs) {
    PhotonIdAllocator ids;
    RandomStream conv(0, "conv");
    RandomStream rng(0, "det");
    FockDetector pnrd(DetectorKind::kPnrd, 1.0);
    std::vector<Photon> pair = {optical(ids, conv), optical(ids, conv)};
    EXPECT_EQ(pnrd.detect(pair, rng).detected_count, 2);
    FockDetector spd(DetectorKind::kSpd, 1.0);
    DetectionEvent e = spd.detect(pair, rng);
    EXPECT_TRUE(e.clicked);
    EXPECT_EQ(e.detected_count, 1);
}

TEST(FockDetector, QuarterEfficiencyPairHistogram) {
    PhotonIdAllocator ids;
    RandomStream conv(0, "conv");
    RandomStream rng(77, "det");
    FockDetector d(DetectorKind::kPnrd, 0.25);
    std::vector<Photon> pair = {optical(ids, conv), optical(ids, conv)};
    const int n = 10000;
    int ones = 0;
    for (int i = 0; i < n; ++i) {
        ones += d.detect(pair, rng).detected_count == 1;
    }
    EXPECT_EQ(rng.draws(), 2u * n);
    EXPECT_NEAR(static_cast<double>(ones) / n, 0.375, 0.015);
    ASSERT_EQ(d.histogram().size(), 3u);
    EXPECT_EQ(d.histogram()[1], static_cast<std::uint64_t>(ones));
    EXPECT_EQ(d.histogram()[0] + d.histogram()[1] + d.histogram()[2],
              static_cast<std::uint64_t>(n));
}

TEST(FockDetector, DomainGuardAndParse) {
    PhotonIdAllocator ids;
    RandomStream rng(0, "det");
    FockDetector optical_only(DetectorKind::kSpd, 1.0);
    Photon mw = microwave(ids);
    EXPECT_THROW(optical_only.detect(std::span<const Photon>(&mw, 1), rng), std::invalid_argument);
    FockDetector mw_detector(DetectorKind::kPnrd, 1.0, Domain::kMicrowave);
    EXPECT_TRUE(mw_detector.detect(std::span<const Photon>(&mw, 1), rng).clicked);
    EXPECT_EQ(parse_detector_kind("SPD"), DetectorKind::kSpd);
    EXPECT_EQ(parse_detector_kind("PNRD"), DetectorKind::kPnrd);
    EXPECT_FALSE(parse_detector_kind("APD").has_value());
    EXPECT_THROW(FockDetector(DetectorKind::kSpd, 2.0), std::invalid_argument);
}

}  // namespace
}  // namespace qtd
