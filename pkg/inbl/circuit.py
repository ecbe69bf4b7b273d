"""
Parse and print line-oriented circuit files.

One directive per line; '#' starts a comment and blank lines are ignored:

    bits <N>                          required, first directive
    seed <u64>                        optional, default 0
    init <binary-literal> [x<K>]      MSB first
    not <h>
    clear <h>
    xor <i> <f> -> <h> [alt]
    xnor <i> <f> -> <h> [alt|vianot]
"""

import re
from dataclasses import dataclass, field

from .constants import MAX_SEED, XnorMode, XnorVariant, XorVariant
from .errors import CircuitParseError
from .schedule import ClearGate, GateSchedule, NotGate, XnorGate, XorGate
from .superposition import Superposition, term_from_literal


_TOKEN = re.compile(r'\S+')
_MULTIPLICITY = re.compile(r'^x([1-9][0-9]*)$')
_INTEGER = re.compile(r'^[0-9]+$')


@dataclass
class CircuitFile:
    """A parsed circuit: system size, seed, initial strings and gates."""

    n_bits: int
    seed: int = None
    inits: list = field(default_factory=list)
    schedule: GateSchedule = field(default_factory=GateSchedule)

    def superposition(self):
        """Build the initial Superposition."""
        return Superposition(term_from_literal(literal, mult)
                             for literal, mult in self.inits)


class _Line:
    """Tokens of one directive line, with their columns."""

    def __init__(self, number, text):
        self.number = number
        self.tokens = [(m.group(), m.start() + 1)
                       for m in _TOKEN.finditer(text)]

    def error(self, message, position=0):
        if position < len(self.tokens):
            column = self.tokens[position][1]
        elif self.tokens:
            word, start = self.tokens[-1]
            column = start + len(word)
        else:
            column = 1

        return CircuitParseError(message, self.number, column)

    def word(self, position):
        return self.tokens[position][0]

    def integer(self, position, what):
        if position >= len(self.tokens):
            raise self.error('missing {}'.format(what), position)

        text = self.word(position)
        if not _INTEGER.match(text):
            raise self.error('{} must be a non-negative integer: {!r}'
                             .format(what, text), position)

        return int(text)

    def bit(self, position, n_bits):
        value = self.integer(position, 'bit index')
        if not 1 <= value <= n_bits:
            raise self.error('bit index {} out of range [1, {}]'
                             .format(value, n_bits), position)

        return value

    def expect_length(self, low, high=None):
        high = low if high is None else high
        if len(self.tokens) > high:
            raise self.error('unexpected token {!r}'.format(self.word(high)),
                             high)

        if len(self.tokens) < low:
            raise self.error('too few arguments for {!r}'.format(self.word(0)),
                             len(self.tokens))


def _strip_comment(text):
    return text.split('#', 1)[0]


def _parse_triple(line, n_bits):
    """Parse '<op> <i> <f> -> <h> [option]'; returns (i, f, h, option)."""
    line.expect_length(5, 6)
    i = line.bit(1, n_bits)
    f = line.bit(2, n_bits)
    if line.word(3) != '->':
        raise line.error("expected '->', found {!r}".format(line.word(3)), 3)

    h = line.bit(4, n_bits)
    if len({i, f, h}) != 3:
        raise line.error('{} bits must be pairwise distinct: {} {} -> {}'
                         .format(line.word(0), i, f, h), 1)

    option = line.word(5) if len(line.tokens) == 6 else None
    return i, f, h, option


def _parse_gate(line, n_bits):
    op = line.word(0)

    if op in ('not', 'clear'):
        line.expect_length(2)
        h = line.bit(1, n_bits)
        return NotGate(h) if op == 'not' else ClearGate(h)

    if op == 'xor':
        i, f, h, option = _parse_triple(line, n_bits)
        if option not in (None, 'alt'):
            raise line.error('unknown xor option {!r}'.format(option), 5)

        variant = XorVariant.ZEROS if option else XorVariant.ONES
        return XorGate(i, f, h, variant)

    if op == 'xnor':
        i, f, h, option = _parse_triple(line, n_bits)
        if option not in (None, 'alt', 'vianot'):
            raise line.error('unknown xnor option {!r}'.format(option), 5)

        if option == 'vianot':
            return XnorGate(i, f, h, XnorMode.VIA_NOT)

        variant = XnorVariant.ALTERNATE if option else XnorVariant.STANDARD
        return XnorGate(i, f, h, XnorMode.DIRECT, variant)

    raise line.error('unknown directive {!r}'.format(op))


def parse_circuit(text):
    """
    Parse a circuit file.

    text -- the file contents

    Returns a CircuitFile. Raises CircuitParseError with line and column.
    """
    circuit = None
    gates = []
    last_line = 1

    for number, raw in enumerate(text.splitlines(), 1):
        line = _Line(number, _strip_comment(raw))
        if not line.tokens:
            continue

        last_line = number
        op = line.word(0)

        if circuit is None:
            if op != 'bits':
                raise line.error("missing 'bits' directive before {!r}"
                                 .format(op))

            line.expect_length(2)
            n_bits = line.integer(1, 'bit count')
            if n_bits < 1:
                raise line.error('bit count must be >= 1', 1)

            circuit = CircuitFile(n_bits)
            continue

        if op == 'bits':
            raise line.error("duplicate 'bits' directive")

        if op == 'seed':
            line.expect_length(2)
            seed = line.integer(1, 'seed')
            if seed > MAX_SEED:
                raise line.error('seed exceeds 64 bits', 1)

            circuit.seed = seed
            continue

        if op == 'init':
            line.expect_length(2, 3)
            literal = line.word(1)
            if any(c not in '01' for c in literal):
                raise line.error('not a binary literal: {!r}'.format(literal),
                                 1)

            if len(literal) != circuit.n_bits:
                raise line.error('literal length {} != {}'
                                 .format(len(literal), circuit.n_bits), 1)

            mult = 1
            if len(line.tokens) == 3:
                match = _MULTIPLICITY.match(line.word(2))
                if not match:
                    raise line.error('malformed multiplicity {!r}, expected '
                                     'x<K>'.format(line.word(2)), 2)

                mult = int(match.group(1))

            circuit.inits.append((literal, mult))
            total = sum(k for _, k in circuit.inits)
            if total > 2 ** circuit.n_bits:
                raise line.error('total multiplicity {} exceeds 2^{}'
                                 .format(total, circuit.n_bits), 1)

            continue

        gates.append(_parse_gate(line, circuit.n_bits))

    if circuit is None:
        raise CircuitParseError("missing 'bits' directive", last_line)

    if not circuit.inits:
        raise CircuitParseError("no 'init' directive", last_line)

    circuit.schedule = GateSchedule(gates)
    return circuit


def format_circuit(circuit):
    """
    Print a circuit in canonical form.

    circuit -- the CircuitFile

    Returns the text, which parses back to an equal CircuitFile.
    """
    lines = ['bits {}'.format(circuit.n_bits)]
    if circuit.seed is not None:
        lines.append('seed {}'.format(circuit.seed))

    for literal, mult in circuit.inits:
        lines.append('init {}'.format(literal) +
                     (' x{}'.format(mult) if mult != 1 else ''))

    lines.extend(circuit.schedule.directives())
    return '\n'.join(lines) + '\n'


def load_circuit(path):
    """
    Read and parse a circuit file.

    path -- path of the UTF-8 circuit file
    """
    with open(path, 'rb') as f:
        data = f.read()

    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        # Everything before e.start decoded cleanly.
        head = data[:e.start]
        line_start = head.rfind(b'\n') + 1
        column = len(head[line_start:].decode('utf-8')) + 1
        raise CircuitParseError(
            'invalid UTF-8 byte 0x{:02x}'.format(data[e.start]),
            head.count(b'\n') + 1, column) from None

    return parse_circuit(text)
