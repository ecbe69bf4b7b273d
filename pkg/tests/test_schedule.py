import pytest
from hypothesis import given, settings

from inbl import (ClearGate, GateSchedule, NotGate, ScheduleError, XnorGate,
                  XorGate, clear_bit, new_system, not_gate, parse_circuit,
                  xnor_gate, xor_gate)
from inbl.constants import GateKind, XnorMode, XnorVariant, XorVariant

from .strategies import schedules, seeds


def test_gate_kinds():
    assert NotGate(1).kind == GateKind.NOT
    assert ClearGate(1).kind == GateKind.CLEAR
    assert XorGate(1, 2, 3).kind == GateKind.XOR
    assert XnorGate(1, 2, 3).kind == GateKind.XNOR


@pytest.mark.parametrize('gate, wiring', [
    (NotGate(2), [(2, [(2, 0), (2, 1)])]),
    (ClearGate(3), [(3, [(3, 1)])]),
    (XorGate(1, 2, 3), [(3, [(3, 1), (1, 1), (2, 1)])]),
    (XorGate(1, 2, 3, XorVariant.ZEROS), [(3, [(3, 1), (1, 0), (2, 0)])]),
    (XnorGate(1, 2, 3), [(3, [(3, 1), (1, 1), (2, 0)])]),
    (XnorGate(1, 2, 3, XnorMode.DIRECT, XnorVariant.ALTERNATE),
     [(3, [(3, 1), (1, 0), (2, 1)])]),
    (XnorGate(1, 2, 3, XnorMode.VIA_NOT),
     [(3, [(3, 1), (1, 1), (2, 1)]), (3, [(3, 0), (3, 1)])]),
])
def test_wiring(gate, wiring):
    assert gate.wiring() == wiring


@pytest.mark.parametrize('gate, directive', [
    (NotGate(2), 'not 2'),
    (ClearGate(3), 'clear 3'),
    (XorGate(1, 2, 3), 'xor 1 2 -> 3'),
    (XorGate(1, 2, 3, XorVariant.ZEROS), 'xor 1 2 -> 3 alt'),
    (XnorGate(3, 1, 2), 'xnor 3 1 -> 2'),
    (XnorGate(1, 2, 3, XnorMode.DIRECT, XnorVariant.ALTERNATE),
     'xnor 1 2 -> 3 alt'),
    (XnorGate(1, 2, 3, XnorMode.VIA_NOT), 'xnor 1 2 -> 3 vianot'),
])
def test_directive(gate, directive):
    assert gate.directive() == directive


def test_records_apply_like_gate_calls():
    pairs = [
        (NotGate(2), lambda s: not_gate(s, 2)),
        (ClearGate(1), lambda s: clear_bit(s, 1)),
        (XorGate(3, 1, 2, XorVariant.ZEROS),
         lambda s: xor_gate(s, 3, 1, 2, XorVariant.ZEROS)),
        (XnorGate(1, 3, 2, XnorMode.VIA_NOT),
         lambda s: xnor_gate(s, 1, 3, 2, XnorMode.VIA_NOT)),
    ]
    for record, call in pairs:
        a = record.apply(new_system(3, 6))
        b = call(new_system(3, 6))
        assert a.wire_table() == b.wire_table()
        assert a.mul_counter == b.mul_counter


def test_schedule_check_names_the_gate():
    schedule = GateSchedule([NotGate(1), XorGate(1, 2, 4)])
    with pytest.raises(ScheduleError) as e:
        schedule.check(3)

    assert 'gate 2 (xor 1 2 -> 4)' in str(e.value)

    with pytest.raises(ScheduleError):
        GateSchedule([XorGate(1, 1, 2)]).check(3)

    with pytest.raises(ScheduleError):
        GateSchedule([XorGate(1, 2, 3, 'both')]).check(3)

    with pytest.raises(ScheduleError):
        GateSchedule([XnorGate(1, 2, 3, 'sideways')]).check(3)


def test_schedule_apply_checks_first():
    system = new_system(3, 0)
    with pytest.raises(ScheduleError):
        GateSchedule([NotGate(1), NotGate(9)]).apply(system)

    assert system.mul_counter == 0


def test_empty_schedule():
    schedule = GateSchedule()
    assert len(schedule) == 0
    assert schedule.directives() == []
    assert schedule.apply(new_system(2, 0)).mul_counter == 0


@settings(max_examples=50)
@given(seeds, schedules(6))
def test_schedule_applies_gates_in_order(seed, schedule):
    expected = new_system(6, seed)
    for gate in schedule:
        gate.apply(expected)

    system = schedule.apply(new_system(6, seed))
    assert system.wire_table() == expected.wire_table()
    assert system.mul_counter == expected.mul_counter
    assert len(schedule.directives()) == len(schedule)


def test_schedules_compare_by_gates():
    assert GateSchedule([NotGate(1)]) == GateSchedule((NotGate(1),))
    assert GateSchedule([NotGate(1)]) != GateSchedule([ClearGate(1)])


def test_via_not_ignores_the_variant():
    gate = XnorGate(1, 2, 3, XnorMode.VIA_NOT, XnorVariant.ALTERNATE)
    assert gate == XnorGate(1, 2, 3, XnorMode.VIA_NOT)
    assert gate.variant == XnorVariant.STANDARD
    assert gate.directive() == 'xnor 1 2 -> 3 vianot'

    circuit = parse_circuit('bits 3\ninit 011\n' + gate.directive())
    assert list(circuit.schedule) == [gate]

    direct = XnorGate(1, 2, 3, XnorMode.DIRECT, XnorVariant.ALTERNATE)
    assert direct.variant == XnorVariant.ALTERNATE
