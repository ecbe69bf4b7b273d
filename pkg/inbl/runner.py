"""Run parsed circuits and collect their reports."""

import functools
import json
import sys

from .constants import STATISTICAL_RETRIES, ExitCode, GateKind, XnorMode
from .errors import ArgumentError, UndecodableError
from .gates import clear_bit, xnor_gate, xor_gate
from .logic import decode_superposition, decode_term, format_term
from .reference_system import new_system
from .report import Report
from .schemas import SchemaRegistry
from .superposition import Superposition, string_from_number
from .utils import timestamp
from .verifier import (canonical_superposition, check_engine_vs_signal,
                       engine_waveform, presence_suite)


print = functools.partial(print, file=sys.stderr, flush=True)


class RunOptions:
    """Switches for a circuit run."""

    def __init__(self, **kwargs):
        """
        Initialize the object.

        seed -- overrides the circuit's seed when not None
        verify_signal -- cycles for the signal-level oracle, or None
        stats -- cycles for the statistical presence checks, or None
        dump_waveform -- CSV path for the output waveform, or None
        cycles -- number of cycles to dump
        retries -- split-seed retries for statistical checks
        verbose -- whether or not to enable verbose logging
        """
        self.seed = kwargs.get('seed', None)
        self.verify_signal = kwargs.get('verify_signal', None)
        self.stats = kwargs.get('stats', None)
        self.dump_waveform = kwargs.get('dump_waveform', None)
        self.cycles = kwargs.get('cycles', 1000)
        self.retries = kwargs.get('retries', STATISTICAL_RETRIES)
        self.verbose = kwargs.get('verbose', False)


class RunReport:
    """The outcome of a circuit run."""

    def __init__(self, circuit, seed, system, before, after=None, error=None):
        """
        Initialize the object.

        circuit -- the CircuitFile that ran
        seed -- the seed used
        system -- the ReferenceSystem after the schedule
        before -- decoded numbers before the schedule, a Counter
        after -- decoded numbers after the schedule, or None if undecodable
        error -- decoding error message, or None
        """
        self.circuit = circuit
        self.seed = seed
        self.system = system
        self.before = before
        self.after = after
        self.error = error
        self.signal = None
        self.stats = None
        self.waveform = None
        self.generated = timestamp()

    @property
    def passed(self):
        """True when decoding and every requested verification passed."""
        if self.error is not None:
            return False

        return all(report.passed for report in (self.signal, self.stats)
                   if report is not None)

    @property
    def exit_code(self):
        """The process exit code for this run."""
        return ExitCode.OK if self.passed else ExitCode.VERIFICATION_FAILED

    def _decoded(self, numbers):
        if numbers is None:
            return None

        return Superposition.from_numbers(numbers, self.circuit.n_bits)

    def as_dict(self):
        """
        Get the run report as a dictionary.

        Returns the JSON form, validated against the run report schema.
        """
        after = self._decoded(self.after)
        data = {
            'bits': self.circuit.n_bits,
            'seed': self.seed,
            'generated': self.generated,
            'before': self._decoded(self.before).as_dict(),
            'after': after.as_dict() if after is not None else None,
            'wires': self.system.wire_table(),
            'mulCounter': self.system.mul_counter,
            'error': self.error,
            'signal': (self.signal.as_dict()
                       if self.signal is not None else None),
            'stats': (self.stats.as_dict()
                      if self.stats is not None else None),
            'waveform': self.waveform,
            'pass': self.passed,
        }
        return SchemaRegistry().validate('run-report', data)

    def to_json(self):
        """Serialize the run report."""
        return json.dumps(self.as_dict(), indent=2)

    def __str__(self):
        """Format the run report as text."""
        def numbers(counter):
            return ', '.join(
                '{:0{}b}'.format(r, self.circuit.n_bits) +
                ('' if k == 1 else ' x{}'.format(k))
                for r, k in sorted(counter.items()))

        lines = [
            'bits {}, seed {}'.format(self.circuit.n_bits, self.seed),
            'before: {}'.format(numbers(self.before)),
        ]
        if self.after is not None:
            lines.append('after:  {}'.format(numbers(self.after)))
        else:
            lines.append('after:  undecodable ({})'.format(self.error))

        lines.append('wires:')
        for gen_id, description in self.system.describe():
            lines.append('  {} = {}'.format(gen_id, description))

        lines.append('multiplications: {}'.format(self.system.mul_counter))

        if self.signal is not None:
            lines.append('signal oracle:')
            lines.append(str(self.signal))

        if self.stats is not None:
            lines.append('statistical presence:')
            lines.append(str(self.stats))

        if self.waveform is not None:
            lines.append('waveform written to {}'.format(self.waveform))

        lines.append('PASS' if self.passed else 'FAIL')
        return '\n'.join(lines)


def run_circuit(circuit, options=None):
    """
    Run a circuit on a fresh reference system.

    circuit -- the CircuitFile
    options -- RunOptions, or None for defaults

    Returns a RunReport.
    """
    options = options or RunOptions()
    seed = options.seed
    if seed is None:
        seed = circuit.seed if circuit.seed is not None else 0

    sup = circuit.superposition()
    system = new_system(circuit.n_bits, seed, verbose=options.verbose)
    before = decode_superposition(sup, system)

    if options.verbose:
        print('run_circuit: applying', len(circuit.schedule), 'gates')

    circuit.schedule.apply(system)

    try:
        report = RunReport(circuit, seed, system, before,
                           after=decode_superposition(sup, system))
    except UndecodableError as e:
        report = RunReport(circuit, seed, system, before, error=str(e))

    if options.verify_signal:
        if options.verbose:
            print('run_circuit: signal oracle over', options.verify_signal,
                  'cycles')

        result = check_engine_vs_signal(circuit.n_bits, seed, sup,
                                        circuit.schedule,
                                        options.verify_signal)
        report.signal = Report()
        report.signal.add('engine vs signal', result.passed,
                          result.first_divergence, options.verify_signal)

    if options.stats:
        if options.verbose:
            print('run_circuit: presence checks over', options.stats,
                  'cycles')

        report.stats = presence_suite(circuit.n_bits, seed, sup,
                                      circuit.schedule, options.stats,
                                      retries=options.retries)

    if options.dump_waveform:
        engine_waveform(circuit.n_bits, seed, sup, circuit.schedule,
                        options.cycles).to_csv(options.dump_waveform)
        report.waveform = str(options.dump_waveform)

    return report


class DemoTrace:
    """Stages of the canonical XOR/XNOR walk-through."""

    def __init__(self, gate, labels):
        """
        Initialize the object.

        gate -- GateKind.XOR or GateKind.XNOR
        labels -- initial values of the output bit in the four strings
        """
        self.gate = gate
        self.labels = tuple(labels)
        self.stages = []

    def add_stage(self, title, terms, system):
        """
        Record the strings and wires at one stage.

        title -- stage title
        terms -- the four canonical StringTerms
        system -- the ReferenceSystem at this stage
        """
        self.stages.append({
            'title': title,
            'terms': [format_term(term, system, 'Y{}'.format(k))
                      for k, term in enumerate(terms)],
            'h': [string_from_number(decode_term(term, system), 3).bit(3)
                  for term in terms],
            'wires': [[gen_id.significance, gen_id.value, description]
                      for gen_id, description in system.describe()],
            'mulCounter': system.mul_counter,
        })

    def as_dict(self):
        """
        Get the trace as a dictionary.

        Returns the JSON form, validated against the demo schema.
        """
        data = {
            'gate': self.gate,
            'labels': list(self.labels),
            'stages': self.stages,
        }
        return SchemaRegistry().validate('demo', data)

    def to_json(self):
        """Serialize the trace."""
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False)

    def __str__(self):
        """Format the trace as text."""
        lines = ['{} gate, i=1 f=2 h=3, initial h labels {}'
                 .format(self.gate.upper(), self.labels)]
        for stage in self.stages:
            lines.append('')
            lines.append('{} ({} multiplications)'
                         .format(stage['title'], stage['mulCounter']))
            lines.append('  Y = ' + '\n    + '.join(stage['terms']))
            lines.append('  h = {}'.format(stage['h']))
            for significance, value, description in stage['wires']:
                lines.append('  wire R{},{} carries {}'
                             .format(significance, value, description))

        return '\n'.join(lines)


def demo(gate, labels=(1, 0, 1, 1), seed=0):
    """
    Walk through the canonical three-bit XOR or XNOR construction.

    gate -- GateKind.XOR or GateKind.XNOR
    labels -- arbitrary initial values of bit h in the four strings
    seed -- 64-bit seed

    Returns a DemoTrace.
    """
    if gate not in (GateKind.XOR, GateKind.XNOR):
        raise ArgumentError('Demo exists for xor and xnor only: {!r}'
                            .format(gate))

    terms = canonical_superposition(3, labels)
    trace = DemoTrace(gate, labels)

    trace.add_stage('initial superposition', terms, new_system(3, seed))
    trace.add_stage('after clearing step', terms,
                    clear_bit(new_system(3, seed), 3))

    if gate == GateKind.XOR:
        trace.add_stage('after XOR gate', terms,
                        xor_gate(new_system(3, seed), 1, 2, 3))
    else:
        trace.add_stage('after direct XNOR gate', terms,
                        xnor_gate(new_system(3, seed), 1, 2, 3))
        trace.add_stage('after XOR gate then NOT gate', terms,
                        xnor_gate(new_system(3, seed), 1, 2, 3,
                                  XnorMode.VIA_NOT))

    return trace
