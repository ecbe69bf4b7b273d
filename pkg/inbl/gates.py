"""
NOT, bit-clearing, XOR and XNOR gates as reference-wire surgery.

Every gate forms the product of bit h's two base generators once and
multiplies a few reference wires by it. The superposition itself is never
touched, so the cost of a gate does not depend on how many strings it acts
on.
"""

from .constants import XnorMode, XnorVariant, XorVariant
from .errors import ArgumentError, DistinctnessError, GeneratorIndexError


def _check_bit(system, h):
    if isinstance(h, bool) or not isinstance(h, int) or \
            not 1 <= h <= system.n_bits:
        raise GeneratorIndexError('Significance {!r} out of range [1, {}]'
                                  .format(h, system.n_bits))


def _check_triple(system, i, f, h):
    for bit in (i, f, h):
        _check_bit(system, bit)

    if len({i, f, h}) != 3:
        raise DistinctnessError('Gate bits must be pairwise distinct: '
                                'i={}, f={}, h={}'.format(i, f, h))


def not_gate(system, h):
    """
    Swap the two values of bit h in every string.

    Multiplies both of bit h's wires by R(h,0)R(h,1): 3 multiplications.

    system -- the ReferenceSystem
    h -- bit significance
    """
    _check_bit(system, h)

    p = system.pair_product(h)
    system.multiply_wire((h, 0), p)
    system.multiply_wire((h, 1), p)
    return system


def clear_bit(system, h):
    """
    Make bit h read 0 in every string.

    Multiplies wire R(h,1) by R(h,0)R(h,1): 2 multiplications. Assumes bit
    h's wires are in their fresh configuration.

    system -- the ReferenceSystem
    h -- bit significance
    """
    _check_bit(system, h)

    p = system.pair_product(h)
    system.multiply_wire((h, 1), p)
    return system


def xor_gate(system, i, f, h, variant=XorVariant.ONES):
    """
    Write (bit i) XOR (bit f) into bit h of every string.

    After the clearing step, the value-1 wires (variant ones) or the value-0
    wires (variant zeros) of bits i and f are multiplied by R(h,0)R(h,1):
    4 multiplications.

    system -- the ReferenceSystem
    i -- first input significance
    f -- second input significance
    h -- output significance
    variant -- XorVariant.ONES or XorVariant.ZEROS
    """
    _check_triple(system, i, f, h)

    if variant == XorVariant.ONES:
        value = 1
    elif variant == XorVariant.ZEROS:
        value = 0
    else:
        raise ArgumentError('Unknown XOR variant: {!r}'.format(variant))

    p = system.pair_product(h)
    system.multiply_wire((h, 1), p)
    system.multiply_wire((i, value), p)
    system.multiply_wire((f, value), p)
    return system


def xnor_gate(system, i, f, h, mode=XnorMode.DIRECT,
              variant=XnorVariant.STANDARD):
    """
    Write NOT((bit i) XOR (bit f)) into bit h of every string.

    The direct construction multiplies R(h,1), R(i,1) and R(f,0) (standard)
    or R(h,1), R(i,0) and R(f,1) (alternate) by R(h,0)R(h,1): 4
    multiplications. The via_not construction is an XOR gate followed by a
    NOT gate on h: 7 multiplications.

    system -- the ReferenceSystem
    i -- first input significance
    f -- second input significance
    h -- output significance
    mode -- XnorMode.DIRECT or XnorMode.VIA_NOT
    variant -- XnorVariant.STANDARD or XnorVariant.ALTERNATE
    """
    _check_triple(system, i, f, h)

    if variant == XnorVariant.STANDARD:
        i_value, f_value = 1, 0
    elif variant == XnorVariant.ALTERNATE:
        i_value, f_value = 0, 1
    else:
        raise ArgumentError('Unknown XNOR variant: {!r}'.format(variant))

    if mode == XnorMode.VIA_NOT:
        xor_gate(system, i, f, h)
        return not_gate(system, h)

    if mode != XnorMode.DIRECT:
        raise ArgumentError('Unknown XNOR mode: {!r}'.format(mode))

    p = system.pair_product(h)
    system.multiply_wire((h, 1), p)
    system.multiply_wire((i, i_value), p)
    system.multiply_wire((f, f_value), p)
    return system
