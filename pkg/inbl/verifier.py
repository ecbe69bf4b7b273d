"""
Independent oracles for the gate engine.

The signal simulator never touches generator masks: it samples the base
generators, multiplies reference wire signals cycle by cycle following each
gate's wiring, and sums the strings with plain integer arithmetic. The
statistical checks hold time averages to a fixed 5-sigma bound and retry
once with a split seed.
"""

import math
import random
from collections import Counter

import numpy as np

from .constants import (SIGMA_BOUND, STATISTICAL_RETRIES, GateKind,
                        XnorMode, XnorVariant, XorVariant)
from .errors import ArgumentError, ScheduleError
from .generator import (GeneratorBank, GeneratorId, GeneratorMask,
                        generator_index, sample_generators, split_seed)
from .logic import decode_term, eval_superposition_series, realized_mask
from .reference_system import generator_ids, new_system
from .report import Report
from .schedule import ClearGate, GateSchedule, NotGate, XnorGate, XorGate
from .superposition import StringTerm, Superposition, string_from_number
from .utils import check_cycles


# Canonical bit positions of the four-term XOR/XNOR setup.
CANONICAL_BITS = (1, 2, 3)
CANONICAL_INPUTS = ((0, 0), (1, 0), (0, 1), (1, 1))


class Waveform:
    """Per-cycle integer samples of a superposition signal."""

    def __init__(self, samples, multiplicity, start=0):
        """
        Initialize the object.

        samples -- integer samples, one per cycle
        multiplicity -- total multiplicity K of the superposition
        start -- clock cycle of the first sample
        """
        self.samples = np.asarray(samples, dtype=np.int64)
        self.multiplicity = multiplicity
        self.start = start

    def __len__(self):
        """Get the number of samples."""
        return self.samples.size

    def __eq__(self, other):
        """Compare two waveforms sample by sample."""
        if not isinstance(other, Waveform):
            return NotImplemented

        return (self.start == other.start and
                np.array_equal(self.samples, other.samples))

    def within_bounds(self):
        """
        Check every sample lies in [-K, K] with the parity of K.

        Returns True if so.
        """
        k = self.multiplicity
        return bool(np.all(np.abs(self.samples) <= k) and
                    np.all((self.samples - k) % 2 == 0))

    def to_csv(self, path):
        """
        Write the waveform as CSV with header t,sum.

        path -- output file path
        """
        t = np.arange(self.start, self.start + len(self), dtype=np.int64)
        np.savetxt(path, np.column_stack([t, self.samples]), fmt='%d',
                   delimiter=',', header='t,sum', comments='')


class OracleResult:
    """Outcome of a waveform comparison; truthy when they agree."""

    def __init__(self, cycles, first_divergence=None):
        """
        Initialize the object.

        cycles -- number of cycles compared
        first_divergence -- first clock cycle where they differ, or None
        """
        self.cycles = cycles
        self.first_divergence = first_divergence

    @property
    def passed(self):
        """True when the waveforms agree at every cycle."""
        return self.first_divergence is None

    def __bool__(self):
        """Truth value of the comparison."""
        return self.passed

    def __repr__(self):
        """Format this object for debugging."""
        if self.passed:
            return 'OracleResult(agree over {} cycles)'.format(self.cycles)

        return 'OracleResult(diverge at t={})'.format(self.first_divergence)


def signal_simulate(n_bits, seed, sup, schedule, cycles, start=0):
    """
    Simulate the block diagram of a schedule with explicit +1/-1 signals.

    n_bits -- number of noise-bits
    seed -- 64-bit seed
    sup -- the Superposition the processor produces
    schedule -- the GateSchedule
    cycles -- number of cycles M
    start -- first clock cycle

    Returns a Waveform.
    """
    check_cycles(cycles)
    schedule.check(n_bits)
    if sup.n_bits != n_bits:
        raise ScheduleError('Superposition has {} bits, circuit has {}'
                            .format(sup.n_bits, n_bits))

    ts = np.arange(start, start + cycles, dtype=np.uint64)
    base = {
        gen_id: sample_generators(seed, generator_index(gen_id, n_bits),
                                  ts).astype(np.int64)
        for gen_id in generator_ids(n_bits)
    }
    wires = {gen_id: signal.copy() for gen_id, signal in base.items()}

    for gate in schedule:
        for h, targets in gate.wiring():
            multiplier = base[GeneratorId(h, 0)] * base[GeneratorId(h, 1)]
            for significance, value in targets:
                gen_id = GeneratorId(significance, value)
                wires[gen_id] = wires[gen_id] * multiplier

    total = np.zeros(cycles, dtype=np.int64)
    for term in sup:
        string = np.ones(cycles, dtype=np.int64)
        for significance, value in enumerate(term.assignment, 1):
            string = string * wires[GeneratorId(significance, value)]

        total += term.multiplicity * string

    return Waveform(total, sup.total_multiplicity, start)


def engine_waveform(n_bits, seed, sup, schedule, cycles, start=0,
                    tamper=None):
    """
    Compute a schedule's output waveform with the mask engine.

    n_bits -- number of noise-bits
    seed -- 64-bit seed
    sup -- the Superposition
    schedule -- the GateSchedule
    cycles -- number of cycles M
    start -- first clock cycle
    tamper -- optional callable applied to the system after the schedule

    Returns a Waveform.
    """
    system = schedule.apply(new_system(n_bits, seed))
    if tamper is not None:
        tamper(system)

    samples = eval_superposition_series(sup, system, cycles, start)
    return Waveform(samples, sup.total_multiplicity, start)


def compare_waveforms(a, b):
    """
    Compare two waveforms sample by sample.

    Returns an OracleResult carrying the first divergent clock cycle.
    """
    if len(a) != len(b) or a.start != b.start:
        raise ArgumentError('Waveforms cover different cycle windows')

    diverging = np.flatnonzero(a.samples != b.samples)
    if diverging.size:
        return OracleResult(len(a), a.start + int(diverging[0]))

    return OracleResult(len(a))


def check_engine_vs_signal(n_bits, seed, sup, schedule, cycles, tamper=None):
    """
    Check the mask engine against the signal simulator.

    n_bits -- number of noise-bits
    seed -- 64-bit seed
    sup -- the Superposition
    schedule -- the GateSchedule
    cycles -- number of cycles M
    tamper -- optional callable corrupting the engine system

    Returns an OracleResult, truthy when the waveforms are equal.
    """
    return compare_waveforms(
        engine_waveform(n_bits, seed, sup, schedule, cycles, tamper=tamper),
        signal_simulate(n_bits, seed, sup, schedule, cycles),
    )


def canonical_superposition(n_bits, labels, payloads=None):
    """
    Build the four-term XOR/XNOR input superposition.

    Bits 1 and 2 run through (0,0), (1,0), (0,1), (1,1); bit 3 holds the
    arbitrary labels; higher bits hold each term's payload.

    n_bits -- number of noise-bits, at least 3
    labels -- four initial values of bit 3
    payloads -- optional four tuples of N - 3 payload bit values

    Returns a list of four StringTerms in input order.
    """
    if n_bits < 3:
        raise ArgumentError('The canonical setup needs at least 3 bits')

    if payloads is None:
        payloads = [(0,) * (n_bits - 3)] * 4

    return [StringTerm((a, b, x) + tuple(payload))
            for (a, b), x, payload in zip(CANONICAL_INPUTS, labels, payloads)]


def truth_table_check(gate, n_bits, seed, mode=XnorMode.DIRECT,
                      variant=None):
    """
    Check the XOR or XNOR truth table on the canonical superposition.

    Every one of the 16 choices of initial labels on bit 3 is run through a
    fresh system; the decoded output bit must follow the gate's truth table
    and the payload bits must be unchanged.

    gate -- GateKind.XOR or GateKind.XNOR
    n_bits -- number of noise-bits, at least 3
    seed -- 64-bit seed, also choosing the payloads
    mode -- XNOR construction
    variant -- optional XOR/XNOR variant

    Returns a Report.
    """
    i, f, h = CANONICAL_BITS
    if gate == GateKind.XOR:
        record = XorGate(i, f, h, variant or XorVariant.ONES)
        expected = [a ^ b for a, b in CANONICAL_INPUTS]
    elif gate == GateKind.XNOR:
        record = XnorGate(i, f, h, mode, variant or XnorVariant.STANDARD)
        expected = [1 - (a ^ b) for a, b in CANONICAL_INPUTS]
    else:
        raise ArgumentError('Truth tables exist for xor and xnor only: {!r}'
                            .format(gate))

    rng = random.Random(seed)
    payloads = [tuple(rng.randrange(2) for _ in range(n_bits - 3))
                for _ in CANONICAL_INPUTS]
    bound = ''.join(str(v) for v in expected)

    report = Report()
    for choice in range(16):
        labels = [(choice >> k) & 1 for k in range(4)]
        terms = canonical_superposition(n_bits, labels, payloads)
        system = record.apply(new_system(n_bits, seed))

        decoded = [string_from_number(decode_term(term, system), n_bits)
                   for term in terms]
        observed = ''.join(str(d.bit(h)) for d in decoded)
        payloads_kept = all(d.assignment[:2] == t.assignment[:2] and
                            d.assignment[3:] == t.assignment[3:]
                            for d, t in zip(decoded, terms))

        report.add('{} labels={}'.format(gate, ''.join(map(str, labels))),
                   observed == bound and payloads_kept,
                   observed if payloads_kept else observed + ' (payload)',
                   bound)

    return report


def statistical_presence(waveform, probe_mask, seed, cycles):
    """
    Correlate a waveform against a generator product.

    The expectation is the multiplicity of the strings whose realized mask
    equals the probe: they contribute the constant +1 to the product, while
    every other string has zero mean.

    waveform -- the Waveform
    probe_mask -- the GeneratorMask to probe for
    seed -- 64-bit seed the waveform was generated with
    cycles -- number of cycles M to average over

    Returns the time average.
    """
    check_cycles(cycles)
    if cycles > len(waveform):
        raise ArgumentError('Waveform has {} samples, {} requested'
                            .format(len(waveform), cycles))

    probe = GeneratorBank(seed, cycles, waveform.start).series(probe_mask)
    total = int(np.dot(waveform.samples[:cycles], probe.astype(np.int64)))
    return total / cycles


def _retry(measure, seed, retries):
    """
    Run a statistical measurement, retrying with split seeds on failure.

    measure -- callable(seed) returning (passed, observed)
    seed -- the first seed
    retries -- number of extra attempts allowed

    Returns the last (passed, observed).
    """
    passed, observed = measure(seed)
    for stream in range(retries):
        if passed:
            break

        passed, observed = measure(split_seed(seed, stream))

    return passed, observed


def presence_suite(n_bits, seed, sup, schedule, cycles,
                   retries=STATISTICAL_RETRIES):
    """
    Probe a scheduled superposition for its own strings.

    Each distinct realized string must correlate to its multiplicity and
    one absent string, if any exists, to zero, within 5*sqrt(K/M).

    n_bits -- number of noise-bits
    seed -- 64-bit seed
    sup -- the Superposition
    schedule -- the GateSchedule
    cycles -- number of cycles M
    retries -- split-seed retries per check

    Returns a Report.
    """
    check_cycles(cycles)
    bound = SIGMA_BOUND * math.sqrt(sup.total_multiplicity / cycles)

    # Realized masks depend on the schedule only, not on the seed.
    wiring = schedule.apply(new_system(n_bits, seed)).snapshot()
    expected = Counter()
    for term in sup:
        expected[realized_mask(term, wiring)] += term.multiplicity

    probes = list(expected.items())
    for number in range(2 ** n_bits):
        mask = realized_mask(string_from_number(number, n_bits), wiring)
        if mask not in expected:
            probes.append((mask, 0))
            break

    waveforms = {}

    def waveform(run_seed):
        if run_seed not in waveforms:
            system = schedule.apply(new_system(n_bits, run_seed))
            waveforms[run_seed] = Waveform(
                eval_superposition_series(sup, system, cycles),
                sup.total_multiplicity)

        return waveforms[run_seed]

    def measurement(mask, target):
        def measure(run_seed):
            value = statistical_presence(waveform(run_seed), mask, run_seed,
                                         cycles)
            return abs(value - target) <= bound, value

        return measure

    report = Report()
    for mask, target in probes:
        passed, observed = _retry(measurement(mask, target), seed, retries)
        report.add('presence {} (expect {})'.format(mask, target),
                   passed, float(observed), float(bound))

    return report


def orthogonality_suite(seed, n_bits, cycles, random_masks=50,
                        retries=STATISTICAL_RETRIES):
    """
    Check the mean of generators and their products.

    The empty product must average to exactly 1; every single generator,
    every pair product and `random_masks` random non-empty products must
    average within 5/sqrt(M) of zero.

    seed -- 64-bit seed
    n_bits -- number of noise-bits
    cycles -- number of cycles M, at least 10^4
    random_masks -- number of random product masks
    retries -- split-seed retries per check

    Returns a Report.
    """
    if cycles < 10 ** 4:
        raise ArgumentError('Orthogonality needs at least 10^4 cycles: {}'
                            .format(cycles))

    width = 2 * n_bits
    bound = SIGMA_BOUND / math.sqrt(cycles)
    banks = {}

    def bank(run_seed):
        if run_seed not in banks:
            banks[run_seed] = GeneratorBank(run_seed, cycles)

        return banks[run_seed]

    def measurement(mask):
        def measure(run_seed):
            value = bank(run_seed).mean(mask)
            return abs(value) <= bound, value

        return measure

    report = Report()
    identity = bank(seed).mean(GeneratorMask.identity(width))
    report.add('identity', identity == 1.0, identity, 1.0)

    masks = [GeneratorMask.from_indices([a], width) for a in range(width)]
    masks += [GeneratorMask.from_indices([a, b], width)
              for a in range(width) for b in range(a + 1, width)]

    rng = random.Random(seed)
    for _ in range(random_masks):
        masks.append(GeneratorMask(rng.randrange(1, 2 ** width), width))

    for mask in masks:
        passed, observed = _retry(measurement(mask), seed, retries)
        report.add('mean {}'.format(mask), passed, float(observed),
                   float(bound))

    return report


def random_schedule(rng, n_bits, length):
    """
    Draw a random valid gate schedule.

    rng -- a random.Random
    n_bits -- number of noise-bits, at least 3 for XOR/XNOR gates
    length -- number of gates

    Returns a GateSchedule.
    """
    gates = []
    for _ in range(length):
        kinds = [GateKind.NOT, GateKind.CLEAR]
        if n_bits >= 3:
            kinds += [GateKind.XOR, GateKind.XNOR]

        kind = rng.choice(kinds)
        if kind == GateKind.NOT:
            gates.append(NotGate(rng.randint(1, n_bits)))
        elif kind == GateKind.CLEAR:
            gates.append(ClearGate(rng.randint(1, n_bits)))
        else:
            i, f, h = rng.sample(range(1, n_bits + 1), 3)
            if kind == GateKind.XOR:
                gates.append(XorGate(
                    i, f, h, rng.choice([XorVariant.ONES, XorVariant.ZEROS])))
            else:
                gates.append(XnorGate(
                    i, f, h, rng.choice([XnorMode.DIRECT, XnorMode.VIA_NOT]),
                    rng.choice([XnorVariant.STANDARD, XnorVariant.ALTERNATE])))

    return GateSchedule(gates)


def random_superposition(rng, n_bits, max_terms):
    """
    Draw a random superposition with total multiplicity in [1, max_terms].

    rng -- a random.Random
    n_bits -- number of noise-bits
    max_terms -- upper bound on K, capped at 2^N
    """
    k = rng.randint(1, min(max_terms, 2 ** n_bits))
    return Superposition(string_from_number(rng.randrange(2 ** n_bits),
                                            n_bits)
                         for _ in range(k))
