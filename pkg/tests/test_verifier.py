import math
import random

import numpy as np
import pytest

from inbl import (ArgumentError, GateSchedule, GeneratorMask, NotGate,
                  ScheduleError, Superposition, Waveform, XnorGate, XorGate,
                  check_engine_vs_signal, engine_waveform, eval_mask_series,
                  new_system, orthogonality_suite, presence_suite,
                  realized_mask, sample_generators, signal_simulate,
                  statistical_presence, string_from_number,
                  truth_table_check)
from inbl.constants import GateKind, XnorMode, XorVariant
from inbl.verifier import (canonical_superposition, compare_waveforms,
                           random_schedule, random_superposition)

from .helpers import passes_with_retry


XOR = GateSchedule([XorGate(1, 2, 3)])


def canonical(labels=(0, 1, 1, 0)):
    return Superposition(canonical_superposition(3, labels))


def test_signal_of_single_fresh_string():
    term = string_from_number(6, 4)
    waveform = signal_simulate(4, 31, Superposition([term]), GateSchedule(),
                               2000)
    mask = realized_mask(term, new_system(4, 31))
    assert np.array_equal(waveform.samples, eval_mask_series(31, mask, 2000))


def test_canonical_xor_matches_engine():
    signal = signal_simulate(3, 4, canonical(), XOR, 10 ** 4)
    engine = engine_waveform(3, 4, canonical(), XOR, 10 ** 4)
    assert signal == engine
    assert signal.within_bounds()
    assert len(signal) == 10 ** 4


def test_waveform_bounds():
    assert Waveform([3, -1, 1, -3], 3).within_bounds()
    assert not Waveform([3, 2], 3).within_bounds()
    assert not Waveform([5], 3).within_bounds()


def test_signal_simulate_validates():
    with pytest.raises(ScheduleError):
        signal_simulate(3, 0, canonical(), GateSchedule([NotGate(4)]), 10)

    with pytest.raises(ScheduleError):
        signal_simulate(4, 0, canonical(), XOR, 10)

    with pytest.raises(ArgumentError):
        signal_simulate(3, 0, canonical(), XOR, 0)


def test_engine_matches_signal_on_random_circuits():
    rng = random.Random(2024)
    for _ in range(100):
        n_bits = rng.randint(1, 6)
        seed = rng.randrange(2 ** 64)
        sup = random_superposition(rng, n_bits, 32)
        schedule = random_schedule(rng, n_bits, rng.randint(0, 8))

        result = check_engine_vs_signal(n_bits, seed, sup, schedule, 10 ** 4)
        assert result, (n_bits, seed, schedule.directives(), result)


def test_empty_schedule_agrees():
    sup = Superposition.from_numbers([0, 2, 2, 3], 2)
    assert check_engine_vs_signal(2, 0, sup, GateSchedule(), 10 ** 4)


def test_tampered_engine_is_caught():
    sup = Superposition([string_from_number(0, 3)])
    corruption = GeneratorMask.from_indices([4], 6)

    def tamper(system):
        system.multiply_wire((1, 0), corruption)

    result = check_engine_vs_signal(3, 9, sup, GateSchedule(), 10 ** 4,
                                    tamper=tamper)
    assert not result
    assert not result.passed

    flips = sample_generators(9, 4, np.arange(10 ** 4, dtype=np.uint64))
    assert result.first_divergence == int(np.flatnonzero(flips == -1)[0])


def test_compare_waveforms():
    a = Waveform([1, 1, -1], 1)
    assert compare_waveforms(a, Waveform([1, 1, -1], 1))

    result = compare_waveforms(a, Waveform([1, -1, -1], 1))
    assert result.first_divergence == 1

    result = compare_waveforms(Waveform([1, 1], 1, start=10),
                               Waveform([1, -1], 1, start=10))
    assert result.first_divergence == 11

    with pytest.raises(ArgumentError):
        compare_waveforms(a, Waveform([1, 1], 1))


def test_waveform_csv(tmp_path):
    path = tmp_path / 'wave.csv'
    Waveform([3, -1, 1], 3, start=5).to_csv(path)
    assert path.read_text().splitlines() == ['t,sum', '5,3', '6,-1', '7,1']


def test_canonical_superposition():
    terms = canonical_superposition(5, [1, 0, 1, 1],
                                    [(0, 1), (1, 1), (0, 0), (1, 0)])
    assert [t.assignment for t in terms] == [
        (0, 0, 1, 0, 1),
        (1, 0, 0, 1, 1),
        (0, 1, 1, 0, 0),
        (1, 1, 1, 1, 0),
    ]

    with pytest.raises(ArgumentError):
        canonical_superposition(2, [0, 0, 0, 0])


@pytest.mark.parametrize('gate, mode, variant, pattern', [
    (GateKind.XOR, XnorMode.DIRECT, None, '0110'),
    (GateKind.XOR, XnorMode.DIRECT, XorVariant.ZEROS, '0110'),
    (GateKind.XNOR, XnorMode.DIRECT, None, '1001'),
    (GateKind.XNOR, XnorMode.VIA_NOT, None, '1001'),
])
def test_truth_table_check(gate, mode, variant, pattern):
    report = truth_table_check(gate, 3, 0, mode, variant)
    assert len(report.checks) == 16
    assert report.passed
    assert all(check.observed == pattern for check in report.checks)
    assert report.checks[5].name == '{} labels=1010'.format(gate)


def test_truth_table_keeps_payloads():
    for seed in range(5):
        assert truth_table_check(GateKind.XOR, 5, seed).passed
        assert truth_table_check(GateKind.XNOR, 6, seed).passed


def test_truth_table_needs_a_two_input_gate():
    with pytest.raises(ArgumentError):
        truth_table_check(GateKind.NOT, 3, 0)


def test_presence_of_single_string_is_exact():
    sup = Superposition([string_from_number(5, 3)])
    system = XOR.apply(new_system(3, 1))
    waveform = engine_waveform(3, 1, sup, XOR, 5000)
    probe = realized_mask(string_from_number(5, 3), system)
    assert statistical_presence(waveform, probe, 1, 5000) == 1.0


def test_presence_with_four_strings():
    sup = Superposition.from_numbers([0, 3, 5, 6], 3)
    cycles = 10 ** 5
    bound = 5 * math.sqrt(4 / cycles)
    assert round(bound, 3) == 0.032

    system = new_system(3, 0)
    present = realized_mask(string_from_number(3, 3), system)
    absent = realized_mask(string_from_number(1, 3), system)

    def check(seed):
        waveform = engine_waveform(3, seed, sup, GateSchedule(), cycles)
        return (abs(statistical_presence(waveform, present, seed, cycles) - 1)
                <= bound and
                abs(statistical_presence(waveform, absent, seed, cycles))
                <= bound)

    assert passes_with_retry(check, 42)


def test_presence_is_linear():
    sup = Superposition.from_numbers([1, 2, 2, 7], 3)
    probe = GeneratorMask.from_indices([1, 2, 5], 6)
    total = statistical_presence(
        engine_waveform(3, 3, sup, XOR, 4000), probe, 3, 4000)
    parts = sum(statistical_presence(
        engine_waveform(3, 3, Superposition([term]), XOR, 4000),
        probe, 3, 4000) for term in sup)
    assert total == pytest.approx(parts, abs=1e-12)


def test_presence_needs_enough_samples():
    waveform = Waveform([1] * 10, 1)
    with pytest.raises(ArgumentError):
        statistical_presence(waveform, GeneratorMask.identity(2), 0, 11)


def test_presence_suite():
    sup = Superposition.from_numbers([0, 3, 5, 5], 3)
    schedule = GateSchedule([XnorGate(1, 2, 3)])
    report = presence_suite(3, 7, sup, schedule, 10 ** 5)
    assert report.passed, str(report)
    # three distinct strings plus one absent probe
    assert len(report.checks) == 4
    assert report.checks[-1].name.endswith('(expect 0)')
    assert report.as_dict()['checks'][0]['pass'] is True


def test_presence_suite_on_full_superposition():
    sup = Superposition.from_numbers(range(4), 2)
    report = presence_suite(2, 7, sup, GateSchedule(), 10 ** 4)
    assert len(report.checks) == 4
    assert report.passed


def test_orthogonality_suite():
    report = orthogonality_suite(42, 4, 10 ** 6)
    assert report.passed, str(report)
    assert report.checks[0].name == 'identity'
    assert report.checks[0].observed == 1.0
    # identity, 8 generators, 28 pairs, 50 random products
    assert len(report.checks) == 1 + 8 + 28 + 50
    assert all(check.bound == 0.005 for check in report.checks[1:])


def test_orthogonality_needs_cycles():
    with pytest.raises(ArgumentError):
        orthogonality_suite(0, 2, 9999)


def test_random_helpers_are_valid():
    rng = random.Random(0)
    for _ in range(50):
        n_bits = rng.randint(1, 6)
        schedule = random_schedule(rng, n_bits, 8)
        schedule.check(n_bits)
        assert len(schedule) == 8

        sup = random_superposition(rng, n_bits, 32)
        assert 1 <= sup.total_multiplicity <= min(32, 2 ** n_bits)
