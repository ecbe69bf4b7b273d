from collections import Counter

import jsonschema
import pytest
from hypothesis import given

from inbl import (ArgumentError, DimensionError, StringTerm, Superposition,
                  string_from_number, superpose, term_from_literal)

from .strategies import superpositions


def test_string_from_number():
    two = string_from_number(2, 2)
    assert two.assignment == (0, 1)
    assert two.bit(1) == 0
    assert two.bit(2) == 1
    assert two.literal == '10'
    assert two.number == 2

    assert string_from_number(0, 3).assignment == (0, 0, 0)


@pytest.mark.parametrize('number, n_bits', [(4, 2), (-1, 2)])
def test_string_from_number_out_of_range(number, n_bits):
    with pytest.raises(ArgumentError):
        string_from_number(number, n_bits)


def test_term_from_literal():
    term = term_from_literal('110', 3)
    assert term.assignment == (0, 1, 1)
    assert term.number == 6
    assert term.multiplicity == 3

    with pytest.raises(ArgumentError):
        term_from_literal('10a')

    with pytest.raises(ArgumentError):
        term_from_literal('')


def test_string_term_validation():
    with pytest.raises(ArgumentError):
        StringTerm((0, 2))

    with pytest.raises(ArgumentError):
        StringTerm((0, 1), 0)

    assert StringTerm((1,)).with_multiplicity(2) == StringTerm((1,), 2)


def test_superpose_distinct_terms():
    sup = superpose([string_from_number(2, 2), string_from_number(3, 2)])
    assert len(sup) == 2
    assert [t.multiplicity for t in sup] == [1, 1]
    assert sup.total_multiplicity == 2


def test_superpose_merges_duplicates():
    sup = superpose([string_from_number(2, 2), string_from_number(2, 2)])
    assert len(sup) == 1
    assert sup.terms[0].multiplicity == 2
    assert sup.numbers() == Counter({2: 2})


def test_full_superposition():
    sup = superpose([string_from_number(r, 3) for r in range(8)])
    assert len(sup) == 8
    assert [t.number for t in sup] == list(range(8))


def test_superpose_errors():
    with pytest.raises(ArgumentError):
        superpose([])

    with pytest.raises(DimensionError):
        superpose([string_from_number(1, 2), string_from_number(1, 3)])

    with pytest.raises(ArgumentError):
        superpose([string_from_number(1, 2, multiplicity=5)])


def test_terms_sort_ascending():
    sup = Superposition([term_from_literal('11'), term_from_literal('01'),
                         term_from_literal('10')])
    assert [t.literal for t in sup] == ['01', '10', '11']


def test_as_dict():
    sup = Superposition([term_from_literal('110', 2),
                         term_from_literal('001')])
    assert sup.as_dict() == {
        'bits': 3,
        'terms': [{'value': '001', 'mult': 1}, {'value': '110', 'mult': 2}],
    }


@given(superpositions(4))
def test_dict_round_trip(sup):
    assert Superposition.from_dict(sup.as_dict()) == sup


def test_from_dict_validation():
    with pytest.raises(jsonschema.ValidationError):
        Superposition.from_dict({'bits': 2, 'terms': []})

    with pytest.raises(jsonschema.ValidationError):
        Superposition.from_dict({'bits': 2,
                                 'terms': [{'value': '12', 'mult': 1}]})

    with pytest.raises(DimensionError):
        Superposition.from_dict({'bits': 2,
                                 'terms': [{'value': '101', 'mult': 1}]})


def test_from_numbers():
    sup = Superposition.from_numbers([1, 3, 3], 2)
    assert sup.numbers() == Counter({1: 1, 3: 2})
    assert Superposition.from_numbers(Counter({1: 1, 3: 2}), 2) == sup
