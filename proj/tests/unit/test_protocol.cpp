#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "databus/ghz.hpp"
#include "databus/noise_stats.hpp"
#include "databus/protocol.hpp"
#include "databus/reference_tables.hpp"
#include "databus/stabilizer_group.hpp"
#include "databus/stabilizer_tableau.hpp"
#include "databus/verification.hpp"
#include "dense_state.hpp"

namespace databus {
namespace {

BusSpec line_bus(std::size_t n, std::vector<Segment> segments) {
  BusSpec bus;
  for (std::size_t i = 0; i < n; ++i) bus.data_qubits.push_back(i);
  for (std::size_t i = 0; i + 1 < n; ++i) bus.syndrome_qubits.push_back(n + i);
  bus.segments = std::move(segments);
  return bus;
}

// ----------------------------------------------------------------------- GHZ

TEST(Ghz, CircuitShape) {
  const std::vector<Segment> segs{{0, 2, SegmentBasis::Z}, {2, 5, SegmentBasis::X}};
  const auto c = build_ghz_circuit(5, segs);
  EXPECT_EQ(c.width(), 9u);
  const auto measurements = std::count_if(c.round.begin(), c.round.end(), [](const Gate& g) {
    return g.kind == Gate::Kind::MeasureReset;
  });
  EXPECT_EQ(measurements, 4);
  EXPECT_THROW(build_ghz_circuit(1, std::vector<Segment>{{0, 1, SegmentBasis::Z}}),
               std::invalid_argument);
  EXPECT_THROW(build_ghz_circuit(4, std::vector<Segment>{{0, 3, SegmentBasis::Z}}),
               std::invalid_argument);
}

TEST(Ghz, IdealStabilizersForMixedChain) {
  const std::vector<Segment> segs{{0, 2, SegmentBasis::Z}, {2, 4, SegmentBasis::X}};
  const auto s = ghz_stabilizers(4, segs);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0], PauliString::parse("+XXZZ"));
  const std::vector<PauliString> expected{
      PauliString::parse("+XXZZ"), PauliString::parse("+ZZII"), PauliString::parse("+IZXI"),
      PauliString::parse("+IIXX")};
  EXPECT_TRUE(group_equals(s, expected));
}

TEST(Ghz, FrameCorrectionAnticommutesWithFiredChecksOnly) {
  const std::vector<Segment> segs{{0, 3, SegmentBasis::Z}, {3, 6, SegmentBasis::X}};
  const auto c = build_ghz_circuit(6, segs);
  const auto stabs = ghz_stabilizers(6, segs);
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<std::uint8_t> syn(5);
    for (std::size_t k = 0; k < 5; ++k) syn[k] = (mask >> k) & 1u;
    const auto fix = c.frame_correction(syn);
    std::vector<std::size_t> data;
    for (std::size_t i = 0; i < 6; ++i) data.push_back(2 * i);
    const auto on_data = fix.select(data);
    EXPECT_TRUE(on_data.commutes(stabs[0]));
    // The neighbour parities are stabs[1..5] in some order; check by support.
    for (std::size_t k = 0; k < 5; ++k) {
      PauliString check(6);
      check.set(k, segs[0].end > k ? Pauli::Z : Pauli::X);
      check.set(k + 1, segs[0].end > k + 1 ? Pauli::Z : Pauli::X);
      EXPECT_EQ(!on_data.commutes(check), syn[k] == 1) << mask << " check " << k;
    }
  }
}

TEST(Ghz, PrepareYieldsIdealChainForManySeeds) {
  const std::vector<std::vector<Segment>> layouts{
      {{0, 5, SegmentBasis::Z}},
      {{0, 5, SegmentBasis::X}},
      {{0, 2, SegmentBasis::Z}, {2, 5, SegmentBasis::X}},
      {{0, 1, SegmentBasis::X}, {1, 3, SegmentBasis::Z}, {3, 5, SegmentBasis::X}}};
  for (const auto& segs : layouts) {
    const auto bus = line_bus(5, segs);
    const auto expected = ghz_stabilizers(5, segs);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      StabilizerTableau t(9, seed);
      prepare_ghz(t, bus);
      const auto got = restrict_to(t.stabilizers(), bus.data_qubits);
      EXPECT_TRUE(group_equals(got, expected)) << "seed " << seed;
      EXPECT_TRUE(chain_parities_even(t, bus));
      for (auto q : bus.syndrome_qubits) {
        EXPECT_EQ(t.expectation_sign(PauliString::single(9, q, Pauli::Z)), 1);
      }
    }
  }
}

TEST(Ghz, BusBasesAndReadouts) {
  const auto bus = line_bus(4, {{0, 2, SegmentBasis::Z}, {2, 4, SegmentBasis::X}});
  EXPECT_EQ(bus.basis_at(1), SegmentBasis::Z);
  EXPECT_EQ(bus.basis_at(2), SegmentBasis::X);
  EXPECT_EQ(bus.bit_flip_at(0), Pauli::X);
  EXPECT_EQ(bus.bit_flip_at(3), Pauli::Z);
  EXPECT_EQ(bus.readout_at(0), Pauli::X);
  EXPECT_EQ(bus.readout_at(3), Pauli::Z);
  EXPECT_THROW(bus.basis_at(4), std::out_of_range);
}

TEST(Ghz, ValidateBusRejectsMalformedChains) {
  EXPECT_NO_THROW(validate_bus(line_bus(3, {{0, 3, SegmentBasis::Z}})));
  EXPECT_THROW(validate_bus(line_bus(1, {{0, 1, SegmentBasis::Z}})), std::invalid_argument);
  EXPECT_THROW(validate_bus(line_bus(3, {{0, 2, SegmentBasis::Z}})), std::invalid_argument);

  auto missing_syndrome = line_bus(3, {{0, 3, SegmentBasis::Z}});
  missing_syndrome.syndrome_qubits.pop_back();
  EXPECT_THROW(validate_bus(missing_syndrome), std::invalid_argument);

  auto bus = line_bus(4, {{0, 4, SegmentBasis::Z}});
  Attachment a{0, Chain::X, {{10, 0}, {11, 1}}, CnotDirection::BusIsControl, Side::South};
  bus.attachments = {a};
  EXPECT_NO_THROW(validate_bus(bus));

  auto wrong_direction = bus;
  wrong_direction.attachments[0].direction = CnotDirection::BusIsTarget;
  EXPECT_THROW(validate_bus(wrong_direction), std::invalid_argument);

  auto gap = bus;
  gap.attachments[0].pairs = {{10, 0}, {11, 2}};
  EXPECT_THROW(validate_bus(gap), std::invalid_argument);

  auto not_bijective = bus;
  not_bijective.attachments[0].pairs = {{10, 0}, {10, 1}};
  EXPECT_THROW(validate_bus(not_bijective), std::invalid_argument);

  auto twice = bus;
  twice.attachments.push_back({1, Chain::X, {{12, 1}, {13, 2}}, CnotDirection::BusIsControl,
                               Side::South});
  EXPECT_THROW(validate_bus(twice), std::invalid_argument);

  auto outside = bus;
  outside.attachments[0].pairs = {{10, 3}, {11, 4}};
  EXPECT_THROW(validate_bus(outside), std::exception);
}

TEST(Ghz, DecoderReproducesSyndromeWithMinimumWeight) {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<std::uint8_t> syn(n - 1);
      for (std::size_t k = 0; k + 1 < n; ++k) syn[k] = (mask >> k) & 1u;
      const auto e = decode_repetition_chain(syn);
      ASSERT_EQ(e.size(), n);
      for (std::size_t k = 0; k + 1 < n; ++k) EXPECT_EQ(e[k] ^ e[k + 1], syn[k]);
      const auto w = static_cast<std::size_t>(std::count(e.begin(), e.end(), 1));
      EXPECT_LE(2 * w, n);
    }
  }
  const std::vector<std::uint8_t> syn{0, 1, 0};
  EXPECT_EQ(decode_repetition_chain(syn), (std::vector<std::uint8_t>{0, 0, 1, 1}));
}

TEST(Ghz, NoiselessVerificationFiresNothing) {
  const auto bus = line_bus(6, {{0, 6, SegmentBasis::Z}});
  StabilizerTableau t(11, 4);
  prepare_ghz(t, bus);
  std::mt19937_64 rng(1);
  const auto rec = verify_ghz(t, bus, 3, 0.0, rng);
  EXPECT_EQ(rec.rounds.size(), 3u);
  EXPECT_TRUE(std::all_of(rec.voted.begin(), rec.voted.end(), [](auto b) { return b == 0; }));
  EXPECT_TRUE(std::all_of(rec.injected.begin(), rec.injected.end(), [](auto b) { return b == 0; }));
  EXPECT_TRUE(chain_parities_even(t, bus));
  EXPECT_THROW(verify_ghz(t, bus, 0, 0.0, rng), std::invalid_argument);
}

TEST(Ghz, VerificationCorrectsSingleInjectedFlip) {
  // With p large enough to inject and many rounds to outvote readout noise,
  // every trial with one injected flip must end with even parities.
  const auto bus = line_bus(5, {{0, 5, SegmentBasis::Z}});
  std::size_t single = 0;
  for (std::uint64_t seed = 0; seed < 400 && single < 30; ++seed) {
    StabilizerTableau t(9, seed);
    prepare_ghz(t, bus);
    std::mt19937_64 rng(seed);
    const auto rec = verify_ghz(t, bus, 9, 0.05, rng);
    if (std::count(rec.injected.begin(), rec.injected.end(), 1) != 1) continue;
    const bool voted_right = [&] {
      for (std::size_t k = 0; k + 1 < 5; ++k) {
        if (rec.voted[k] != (rec.injected[k] ^ rec.injected[k + 1])) return false;
      }
      return true;
    }();
    if (!voted_right) continue;
    ++single;
    EXPECT_TRUE(chain_parities_even(t, bus)) << "seed " << seed;
    EXPECT_EQ(rec.correction, rec.injected);
  }
  EXPECT_GT(single, 5u);
}

TEST(Ghz, NoiseModelValidation) {
  EXPECT_NO_THROW(validate_noise({0.0, 1}));
  EXPECT_NO_THROW(validate_noise({0.49, 1}));
  EXPECT_THROW(validate_noise({0.5, 1}), std::invalid_argument);
  EXPECT_THROW(validate_noise({-0.1, 1}), std::invalid_argument);
}

// ------------------------------------------------------------------ Protocol

TEST(Protocol, SetupLayoutForMixedBases) {
  const std::vector<PatchRequest> req{{2, false, LogicalBasis::X}, {2, true, LogicalBasis::Z}};
  const auto s = make_setup(req);
  EXPECT_EQ(s.num_qubits, 10u + 4u + 3u);
  EXPECT_EQ(s.data_register_size(), 14u);
  ASSERT_EQ(s.bus.segments.size(), 2u);
  EXPECT_EQ(s.bus.segments[0].basis, SegmentBasis::Z);
  EXPECT_EQ(s.bus.segments[1].basis, SegmentBasis::X);
  EXPECT_EQ(s.bus.attachments[0].direction, CnotDirection::BusIsControl);
  EXPECT_EQ(s.bus.attachments[1].direction, CnotDirection::BusIsTarget);
  EXPECT_EQ(s.bus.data_qubits.front(), 10u);
  EXPECT_EQ(s.bus.syndrome_qubits.front(), 14u);
  EXPECT_TRUE(s.y_readout_positions.empty());
  EXPECT_EQ(logical_product(s), PauliString::parse("+IIIXXIIIZZIIIIIII"));
  EXPECT_THROW(make_setup(std::vector<PatchRequest>{}), std::invalid_argument);
}

TEST(Protocol, YSetupUsesBothChains) {
  const std::vector<PatchRequest> req{{2, true, LogicalBasis::Y}};
  const auto s = make_setup(req);
  EXPECT_EQ(s.bus.length(), 4u);
  ASSERT_EQ(s.bus.attachments.size(), 2u);
  EXPECT_EQ(s.bus.attachments[0].chain, Chain::X);
  EXPECT_EQ(s.bus.attachments[1].chain, Chain::Z);
  ASSERT_EQ(s.y_readout_positions.size(), 1u);
  // Rotated patch: X chain on the west side, Z chain on the south side, so
  // the X-chain layer runs last and qubit 4 (shared) pairs with bus position 1.
  EXPECT_EQ(s.bus.attachments[0].side, Side::West);
  EXPECT_EQ(s.bus.attachments[1].side, Side::South);
  EXPECT_EQ(s.y_readout_positions[0], 1u);
}

TEST(Protocol, ScheduleRunsNorthSouthEastWest) {
  BusSpec bus;
  for (Side side : {Side::West, Side::South, Side::East, Side::North, Side::South}) {
    Attachment a;
    a.side = side;
    bus.attachments.push_back(a);
  }
  EXPECT_EQ(attachment_schedule(bus, AttachOrder::Standard),
            (std::vector<std::size_t>{3, 1, 4, 2, 0}));
  EXPECT_EQ(attachment_schedule(bus, AttachOrder::Reversed),
            (std::vector<std::size_t>{0, 2, 4, 1, 3}));
}

TEST(Protocol, AttachmentRejectsForeignQubits) {
  const std::vector<PatchRequest> req{{2, false, LogicalBasis::X}, {2, false, LogicalBasis::X}};
  auto s = make_setup(req);
  StabilizerTableau t(s.num_qubits);
  EXPECT_THROW(apply_attachment(t, s, 5), std::out_of_range);
  s.bus.attachments[0].pairs[0].first = 7;  // belongs to patch 1
  EXPECT_THROW(apply_attachment(t, s, 0), std::invalid_argument);
}

TEST(Protocol, PreparedPatchesCarryRequestedEigenvalues) {
  for (auto basis : {LogicalBasis::X, LogicalBasis::Z, LogicalBasis::Y}) {
    for (int e : {1, -1}) {
      for (std::size_t d : {2u, 3u}) {
        const std::vector<PatchRequest> req{{d, false, basis}};
        const auto s = make_setup(req);
        StabilizerTableau t(s.num_qubits, 17);
        const std::vector<int> eig{e};
        prepare_patches(t, s, eig);
        EXPECT_EQ(t.expectation_sign(s.patches[0].logical(basis)), e);
        for (const auto& st : s.patches[0].stabilizers) EXPECT_EQ(t.expectation_sign(st), 1);
      }
    }
  }
  const auto s = make_setup(std::vector<PatchRequest>{{2, false, LogicalBasis::X}});
  StabilizerTableau t(s.num_qubits);
  EXPECT_THROW(prepare_patches(t, s, std::vector<int>{0}), std::invalid_argument);
  EXPECT_THROW(prepare_patches(t, s, std::vector<int>{1, 1}), std::invalid_argument);
}

TEST(Protocol, NoiselessParityMatchesEigenvalueProductAndOracle) {
  const LogicalBasis bases[] = {LogicalBasis::X, LogicalBasis::Z};
  for (std::size_t d : {2u, 3u}) {
    for (int combo = 0; combo < 16; ++combo) {
      const std::vector<PatchRequest> req{{d, false, bases[combo & 1]},
                                          {d, true, bases[(combo >> 1) & 1]}};
      const auto s = make_setup(req);
      const std::vector<int> eig{combo & 4 ? -1 : 1, combo & 8 ? -1 : 1};
      for (std::uint64_t seed : {3u, 99u}) {
        ParityOptions opt;
        opt.noise.seed = seed;
        const auto r = joint_parity(s, eig, opt);
        EXPECT_EQ(r.parity, eig[0] * eig[1]) << "d=" << d << " combo=" << combo;
        EXPECT_EQ(r.parity, oracle_parity(s, eig, seed));
        EXPECT_EQ(r.repetitions.size(), d);
        EXPECT_FALSE(r.tie);
      }
    }
  }
}

TEST(Protocol, ThreePatchParity) {
  const std::vector<PatchRequest> req{
      {2, false, LogicalBasis::X}, {2, false, LogicalBasis::Z}, {2, true, LogicalBasis::X}};
  const auto s = make_setup(req);
  for (int mask = 0; mask < 8; ++mask) {
    const std::vector<int> eig{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
    ParityOptions opt;
    opt.noise.seed = static_cast<std::uint64_t>(mask);
    EXPECT_EQ(joint_parity(s, eig, opt).parity, eig[0] * eig[1] * eig[2]);
  }
}

TEST(Protocol, RepetitionsDoNotDisturbPatchesOrEachOther) {
  const std::vector<PatchRequest> req{{3, false, LogicalBasis::X}, {3, false, LogicalBasis::X}};
  const auto s = make_setup(req);
  const std::vector<int> eig{-1, 1};
  StabilizerTableau t(s.num_qubits, 8);
  prepare_patches(t, s, eig);
  std::mt19937_64 rng(2);
  ParityOptions opt;
  opt.repetitions = 5;
  const auto r = run_joint_parity(t, s, opt, rng);
  ASSERT_EQ(r.repetitions.size(), 5u);
  for (const auto& rep : r.repetitions) EXPECT_EQ(rep.parity, -1);
  EXPECT_EQ(t.expectation_sign(s.patches[0].logical_x()), -1);
  EXPECT_EQ(t.expectation_sign(s.patches[1].logical_x()), 1);
  // A second call sees freshly prepared bus qubits and the same answer.
  EXPECT_EQ(run_joint_parity(t, s, opt, rng).parity, -1);
}

TEST(Protocol, NoisyRunIsReproducible) {
  const std::vector<PatchRequest> req{{2, false, LogicalBasis::X}, {2, false, LogicalBasis::Z}};
  const auto s = make_setup(req);
  const std::vector<int> eig{1, 1};
  ParityOptions opt;
  opt.noise = {0.2, 42};
  opt.repetitions = 4;
  const auto a = joint_parity(s, eig, opt);
  const auto b = joint_parity(s, eig, opt);
  ASSERT_EQ(a.repetitions.size(), b.repetitions.size());
  for (std::size_t i = 0; i < a.repetitions.size(); ++i) {
    EXPECT_EQ(a.repetitions[i].bus_outcomes, b.repetitions[i].bus_outcomes);
    EXPECT_EQ(a.repetitions[i].readout_flips, b.repetitions[i].readout_flips);
  }
  EXPECT_EQ(a.parity, b.parity);
  opt.noise.p_phys = 0.5;
  EXPECT_THROW(joint_parity(s, eig, opt), std::invalid_argument);
}

// Readout flips alone decide the repetition parity when verification is clean.
TEST(Protocol, ReadoutFlipsToggleRepetitionParity) {
  const std::vector<PatchRequest> req{{2, false, LogicalBasis::X}, {2, false, LogicalBasis::X}};
  const auto s = make_setup(req);
  const std::vector<int> eig{1, 1};
  ParityOptions opt;
  opt.noise = {0.15, 5};
  opt.repetitions = 41;
  opt.verify_rounds = 1;
  const auto r = joint_parity(s, eig, opt);
  for (const auto& rep : r.repetitions) {
    if (std::any_of(rep.verify.injected.begin(), rep.verify.injected.end(),
                    [](auto b) { return b != 0; })) {
      continue;
    }
    const auto flips = std::count(rep.readout_flips.begin(), rep.readout_flips.end(), 1);
    EXPECT_EQ(rep.parity, flips % 2 ? -1 : 1);
  }
}

TEST(Protocol, MajorityVoteAndSeeds) {
  bool tie = false;
  EXPECT_EQ(majority_vote(std::vector<int>{1, -1, -1}, &tie), -1);
  EXPECT_FALSE(tie);
  EXPECT_EQ(majority_vote(std::vector<int>{-1, 1}, &tie), -1);
  EXPECT_TRUE(tie);
  EXPECT_THROW(majority_vote(std::vector<int>{}), std::invalid_argument);
  EXPECT_EQ(split_seed(1, 0), split_seed(1, 0));
  EXPECT_NE(split_seed(1, 0), split_seed(1, 1));
  EXPECT_NE(split_seed(1, 0), split_seed(2, 0));
}

// --------------------------------------------------- Y measurement, dense check

// The one-patch Y setup on the 9 data qubits (patch 0-4, bus 5-8), prepared
// in the +1 eigenstate of Y_L and the ideal bus state, then run through the
// scheduled CNOT layers on a statevector.
class DenseY : public ::testing::Test {
 protected:
  void SetUp() override {
    const std::vector<PatchRequest> req{{2, true, LogicalBasis::Y}};
    setup = make_setup(req);
    keep.resize(9);
    for (std::size_t i = 0; i < 9; ++i) keep[i] = i;
  }

  testing::DenseState prepared(AttachOrder order) const {
    std::mt19937_64 rng(3);
    auto psi = testing::DenseState::random(9, rng);
    for (const auto& s : setup.patches[0].stabilizers) psi.project(s.select(keep), 1);
    psi.project(setup.patches[0].logical_y().select(keep), 1);
    for (const char* g : {"+IIIIIXXZZ", "+IIIIIZZII", "+IIIIIIZXI", "+IIIIIIIXX"}) {
      psi.project(PauliString::parse(g), 1);
    }
    for (auto i : attachment_schedule(setup.bus, order)) {
      for (auto [pq, pos] : setup.bus.attachments[i].pairs) {
        const auto bq = setup.bus.data_qubits[pos];
        if (setup.bus.attachments[i].direction == CnotDirection::BusIsControl) {
          psi.cnot(bq, pq);
        } else {
          psi.cnot(pq, bq);
        }
      }
    }
    return psi;
  }

  PauliString readout(bool use_y) const {
    PauliString r(9);
    for (std::size_t j = 0; j < 4; ++j) r.set(5 + j, setup.bus.readout_at(j));
    if (use_y) r.set(5 + setup.y_readout_positions[0], Pauli::Y);
    return r;
  }

  ParitySetup setup;
  std::vector<std::size_t> keep;
};

TEST_F(DenseY, SegmentReadoutIsUncorrelatedWithLogicalY) {
  const auto psi = prepared(AttachOrder::Standard);
  EXPECT_NEAR(std::abs(psi.expectation(readout(false))), 0.0, 1e-9);
}

TEST_F(DenseY, YReadoutGivesMinusLogicalY) {
  const auto psi = prepared(AttachOrder::Standard);
  EXPECT_NEAR(psi.expectation(readout(true)).real(), -1.0, 1e-9);
}

TEST_F(DenseY, SwappedLayersInvertTheReadout) {
  const auto psi = prepared(AttachOrder::Reversed);
  EXPECT_NEAR(psi.expectation(readout(true)).real(), 1.0, 1e-9);
}

TEST_F(DenseY, PrintedFinalRowFiveIsNotAStabilizer) {
  const auto psi = prepared(AttachOrder::Standard);
  EXPECT_NEAR(std::abs(psi.expectation(PauliString::parse("+XIIYZXXZZ"))), 0.0, 1e-9);
  const auto corrected = PauliString::parse("-XIIYZXYZZ");
  EXPECT_NEAR(psi.expectation(corrected).real(), 1.0, 1e-9);

  TableScenario final_table;
  for (const auto& sc : table_scenarios()) {
    if (sc.name == "y_measure_after") final_table = sc;
  }
  const auto simulated = simulate_scenario(final_table);
  EXPECT_TRUE(in_group(simulated, corrected));
  EXPECT_FALSE(in_group(simulated, PauliString::parse("+XIIYZXXZZ")));
}

TEST(Protocol, YMeasurementMatchesEigenvalueWithSignFlip) {
  for (bool rotated : {false, true}) {
    for (int e : {1, -1}) {
      const std::vector<PatchRequest> req{{2, rotated, LogicalBasis::Y}};
      const auto s = make_setup(req);
      const std::vector<int> eig{e};
      ParityOptions opt;
      opt.noise.seed = 11;
      EXPECT_EQ(joint_parity(s, eig, opt).parity, e);
      opt.y_sign_flip = false;
      EXPECT_EQ(joint_parity(s, eig, opt).parity, -e);
      opt.y_sign_flip = true;
      opt.order = AttachOrder::Reversed;
      EXPECT_EQ(joint_parity(s, eig, opt).parity, -e);
    }
  }
}

// -------------------------------------------------------------------- Tables

TEST(Tables, BundledFixturesParse) {
  const auto names = reference_table_names();
  EXPECT_EQ(names.size(), 8u);
  for (auto name : names) EXPECT_FALSE(reference_table(name).empty()) << name;
  EXPECT_THROW(reference_table("nope"), std::out_of_range);
}

TEST(Tables, PrintedTypoFixturesDoNotCommute) {
  EXPECT_FALSE(is_commuting_set(reference_table("xz_check_after_as_printed")));
  EXPECT_FALSE(is_commuting_set(reference_table("y_measure_after_as_printed")));
  EXPECT_TRUE(is_commuting_set(reference_table("xz_check_after")));
}

TEST(Tables, SimulationMatchesEveryTableButTheFinalYTable) {
  for (const auto& c : check_reference_tables()) {
    if (c.name == "y_measure_after") {
      EXPECT_FALSE(c.equal);
      EXPECT_NE(c.mismatch.find("+XIIYZXXZZ"), std::string::npos) << c.mismatch;
    } else {
      EXPECT_TRUE(c.equal) << c.name << ": " << c.mismatch;
    }
  }
}

TEST(Tables, SimulatedGroupIsIndependentOfPrepSeed) {
  for (const auto& sc : table_scenarios()) {
    const auto setup = make_setup(sc.patches);
    const auto a = canonical_form(bus_and_patch_group(setup, 1).generators());
    const auto b = canonical_form(bus_and_patch_group(setup, 77).generators());
    EXPECT_EQ(a, b) << sc.name;
  }
}

TEST(Tables, InGroupRespectsSigns) {
  const std::vector<PauliString> g{PauliString::parse("+ZZI"), PauliString::parse("+IZZ")};
  EXPECT_TRUE(in_group(g, PauliString::parse("+ZIZ")));
  EXPECT_FALSE(in_group(g, PauliString::parse("-ZIZ")));
  EXPECT_FALSE(in_group(g, PauliString::parse("+XII")));
  EXPECT_FALSE(in_group(g, PauliString::parse("+iZIZ")));
}

// --------------------------------------------------------------------- Noise

TEST(Noise, ClosedForms) {
  EXPECT_NEAR(odd_parity_probability(4, 0.1), 0.2952, 1e-12);
  EXPECT_NEAR(majority_failure_probability(0.1, 3), 0.028, 1e-12);
  EXPECT_NEAR(majority_failure_probability(0.1, 1), 0.1, 1e-15);
  // Even counts: a split vote fails. r = 2 fails unless both are even.
  EXPECT_NEAR(majority_failure_probability(0.1, 2), 1.0 - 0.81, 1e-12);
  EXPECT_EQ(odd_parity_probability(3, 0.0), 0.0);
}

TEST(Noise, EmpiricalParityAgreesWithClosedForm) {
  const auto s = parity_error_stats(4, 0.1, 4000, 3, 9);
  EXPECT_EQ(s.trials, 4000u);
  EXPECT_NEAR(s.empirical_p_odd, s.analytic_p_odd, 4 * s.sigma_p_odd);
  EXPECT_NEAR(s.empirical_vote_failure, s.analytic_vote_failure, 4 * s.sigma_vote_failure);
  EXPECT_THROW(parity_error_stats(1, 0.1, 10, 1, 0), std::invalid_argument);
  EXPECT_THROW(parity_error_stats(4, 0.5, 10, 1, 0), std::invalid_argument);
  EXPECT_THROW(parity_error_stats(4, 0.1, 0, 1, 0), std::invalid_argument);
}

TEST(Noise, PairFlipProbabilityInvertsOddRate) {
  const double p = flip_probability_for_pair_odd_rate(0.1);
  EXPECT_NEAR(odd_parity_probability(2, p), 0.1, 1e-12);
}

TEST(Noise, MoreVerificationRoundsLeaveFewerChainErrors) {
  const double one = residual_chain_error_rate(8, 1, 0.01, 10000, 3);
  const double five = residual_chain_error_rate(8, 5, 0.01, 10000, 3);
  EXPECT_GT(one, 0.0);
  EXPECT_LT(five, one);
}

}  // namespace
}  // namespace databus
