"""Gate records and ordered gate schedules."""

from dataclasses import dataclass

from .constants import GateKind, XnorMode, XnorVariant, XorVariant
from .errors import ScheduleError
from .gates import clear_bit, not_gate, xnor_gate, xor_gate


def _check_bits(n_bits, *bits):
    for bit in bits:
        if isinstance(bit, bool) or not isinstance(bit, int) or \
                not 1 <= bit <= n_bits:
            raise ScheduleError('Bit {!r} out of range [1, {}]'
                                .format(bit, n_bits))

    if len(set(bits)) != len(bits):
        raise ScheduleError('Gate bits must be pairwise distinct: {}'
                            .format(bits))


@dataclass(frozen=True)
class NotGate:
    """NOT on bit h."""

    h: int
    kind = GateKind.NOT

    def check(self, n_bits):
        """Raise ScheduleError unless valid for N noise-bits."""
        _check_bits(n_bits, self.h)

    def apply(self, system):
        """Apply this gate to a ReferenceSystem."""
        return not_gate(system, self.h)

    def wiring(self):
        """
        Get the wire surgery of this gate.

        Returns a list of (h, wires) pairs: the product of bit h's two base
        signals multiplies each listed wire.
        """
        return [(self.h, [(self.h, 0), (self.h, 1)])]

    def directive(self):
        """Format this gate as a circuit file directive."""
        return 'not {}'.format(self.h)


@dataclass(frozen=True)
class ClearGate:
    """Clearing step on bit h."""

    h: int
    kind = GateKind.CLEAR

    def check(self, n_bits):
        """Raise ScheduleError unless valid for N noise-bits."""
        _check_bits(n_bits, self.h)

    def apply(self, system):
        """Apply this gate to a ReferenceSystem."""
        return clear_bit(system, self.h)

    def wiring(self):
        """Get the wire surgery of this gate."""
        return [(self.h, [(self.h, 1)])]

    def directive(self):
        """Format this gate as a circuit file directive."""
        return 'clear {}'.format(self.h)


@dataclass(frozen=True)
class XorGate:
    """XOR of bits i and f into bit h."""

    i: int
    f: int
    h: int
    variant: str = XorVariant.ONES
    kind = GateKind.XOR

    def check(self, n_bits):
        """Raise ScheduleError unless valid for N noise-bits."""
        _check_bits(n_bits, self.i, self.f, self.h)
        if self.variant not in (XorVariant.ONES, XorVariant.ZEROS):
            raise ScheduleError('Unknown XOR variant: {!r}'
                                .format(self.variant))

    def apply(self, system):
        """Apply this gate to a ReferenceSystem."""
        return xor_gate(system, self.i, self.f, self.h, self.variant)

    def wiring(self):
        """Get the wire surgery of this gate."""
        value = 1 if self.variant == XorVariant.ONES else 0
        return [(self.h, [(self.h, 1), (self.i, value), (self.f, value)])]

    def directive(self):
        """Format this gate as a circuit file directive."""
        text = 'xor {} {} -> {}'.format(self.i, self.f, self.h)
        if self.variant == XorVariant.ZEROS:
            text += ' alt'

        return text


@dataclass(frozen=True)
class XnorGate:
    """XNOR of bits i and f into bit h."""

    i: int
    f: int
    h: int
    mode: str = XnorMode.DIRECT
    variant: str = XnorVariant.STANDARD
    kind = GateKind.XNOR

    def __post_init__(self):
        # via_not always builds the standard XOR, so the variant is moot.
        if self.mode == XnorMode.VIA_NOT:
            object.__setattr__(self, 'variant', XnorVariant.STANDARD)

    def check(self, n_bits):
        """Raise ScheduleError unless valid for N noise-bits."""
        _check_bits(n_bits, self.i, self.f, self.h)
        if self.mode not in (XnorMode.DIRECT, XnorMode.VIA_NOT):
            raise ScheduleError('Unknown XNOR mode: {!r}'.format(self.mode))

        if self.variant not in (XnorVariant.STANDARD, XnorVariant.ALTERNATE):
            raise ScheduleError('Unknown XNOR variant: {!r}'
                                .format(self.variant))

    def apply(self, system):
        """Apply this gate to a ReferenceSystem."""
        return xnor_gate(system, self.i, self.f, self.h, self.mode,
                         self.variant)

    def wiring(self):
        """Get the wire surgery of this gate."""
        if self.mode == XnorMode.VIA_NOT:
            return (XorGate(self.i, self.f, self.h).wiring() +
                    NotGate(self.h).wiring())

        if self.variant == XnorVariant.STANDARD:
            targets = [(self.h, 1), (self.i, 1), (self.f, 0)]
        else:
            targets = [(self.h, 1), (self.i, 0), (self.f, 1)]

        return [(self.h, targets)]

    def directive(self):
        """Format this gate as a circuit file directive."""
        text = 'xnor {} {} -> {}'.format(self.i, self.f, self.h)
        if self.mode == XnorMode.VIA_NOT:
            text += ' vianot'
        elif self.variant == XnorVariant.ALTERNATE:
            text += ' alt'

        return text


@dataclass(frozen=True)
class GateSchedule:
    """An ordered list of gates."""

    gates: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'gates', tuple(self.gates))

    def __iter__(self):
        """Iterate over the gates in order."""
        return iter(self.gates)

    def __len__(self):
        """Get the number of gates."""
        return len(self.gates)

    def check(self, n_bits):
        """
        Validate every gate for a system size.

        n_bits -- number of noise-bits

        Raises ScheduleError, naming the offending gate's position.
        """
        for position, gate in enumerate(self.gates, 1):
            try:
                gate.check(n_bits)
            except ScheduleError as e:
                raise ScheduleError('gate {} ({}): {}'
                                    .format(position, gate.directive(), e))

    def apply(self, system):
        """
        Apply every gate in order.

        system -- the ReferenceSystem
        """
        self.check(system.n_bits)
        for gate in self.gates:
            gate.apply(system)

        return system

    def directives(self):
        """Format the schedule as circuit file directives."""
        return [gate.directive() for gate in self.gates]
