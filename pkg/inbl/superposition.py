"""Strings and superpositions of strings."""

from collections import Counter
from dataclasses import dataclass

from .errors import ArgumentError, DimensionError
from .schemas import SchemaRegistry
from .utils import check_n_bits


@dataclass(frozen=True)
class StringTerm:
    """
    One string: a choice of reference wire for every bit significance.

    assignment[i - 1] holds the bit value selected at significance i.
    """

    assignment: tuple
    multiplicity: int = 1

    def __post_init__(self):
        if not self.assignment:
            raise ArgumentError('A string needs at least one bit')

        if any(v not in (0, 1) for v in self.assignment):
            raise ArgumentError('String bit values must be 0 or 1: {}'
                                .format(self.assignment))

        if self.multiplicity < 1:
            raise ArgumentError('Multiplicity must be >= 1: {}'
                                .format(self.multiplicity))

    @property
    def n_bits(self):
        """Number of bit significances."""
        return len(self.assignment)

    @property
    def number(self):
        """The number R whose binary digits the assignment holds."""
        return sum(v << k for k, v in enumerate(self.assignment))

    @property
    def literal(self):
        """The assignment as a binary literal, most significant bit first."""
        return ''.join(str(v) for v in reversed(self.assignment))

    def bit(self, significance):
        """
        Get the value selected at one significance.

        significance -- bit significance, 1-based
        """
        return self.assignment[significance - 1]

    def with_multiplicity(self, multiplicity):
        """
        Copy this term with another multiplicity.

        multiplicity -- the new multiplicity
        """
        return StringTerm(self.assignment, multiplicity)


def string_from_number(number, n_bits, multiplicity=1):
    """
    Build the string representing a number.

    number -- R in [0, 2^N)
    n_bits -- number of noise-bits N
    multiplicity -- how many times the string occurs
    """
    check_n_bits(n_bits)
    if not 0 <= number < 2 ** n_bits:
        raise ArgumentError('Number {} out of range [0, 2^{})'
                            .format(number, n_bits))

    return StringTerm(tuple((number >> k) & 1 for k in range(n_bits)),
                      multiplicity)


def term_from_literal(literal, multiplicity=1):
    """
    Build a string from a binary literal.

    literal -- digits of 0/1, most significant bit first
    multiplicity -- how many times the string occurs
    """
    if not literal or any(c not in '01' for c in literal):
        raise ArgumentError('Not a binary literal: {!r}'.format(literal))

    return StringTerm(tuple(int(c) for c in reversed(literal)), multiplicity)


class Superposition:
    """A sum of strings over one system size, duplicates merged."""

    def __init__(self, terms):
        """
        Initialize the object.

        terms -- iterable of StringTerm, at least one
        """
        terms = list(terms)
        if not terms:
            raise ArgumentError('A superposition needs at least one string')

        n_bits = terms[0].n_bits
        counts = Counter()
        for term in terms:
            if term.n_bits != n_bits:
                raise DimensionError('Strings of {} and {} bits mixed'
                                     .format(n_bits, term.n_bits))

            counts[term.assignment] += term.multiplicity

        if sum(counts.values()) > 2 ** n_bits:
            raise ArgumentError('Total multiplicity {} exceeds 2^{}'
                                .format(sum(counts.values()), n_bits))

        self.n_bits = n_bits
        self.terms = tuple(sorted(
            (StringTerm(a, k) for a, k in counts.items()),
            key=lambda term: term.number,
        ))

    @property
    def total_multiplicity(self):
        """The number of strings counted with multiplicity, K."""
        return sum(term.multiplicity for term in self.terms)

    def __iter__(self):
        """Iterate over the distinct terms in ascending order."""
        return iter(self.terms)

    def __len__(self):
        """Get the number of distinct terms."""
        return len(self.terms)

    def __eq__(self, other):
        """Compare two superpositions term by term."""
        if not isinstance(other, Superposition):
            return NotImplemented

        return self.terms == other.terms

    def __repr__(self):
        """Format this object for debugging."""
        return 'Superposition({})'.format(
            ', '.join('{}x{}'.format(t.literal, t.multiplicity)
                      for t in self.terms))

    def numbers(self):
        """
        Get the represented numbers as a multiset.

        Returns a Counter of number -> multiplicity.
        """
        return Counter({term.number: term.multiplicity for term in self.terms})

    def as_dict(self):
        """
        Get the superposition as a dictionary.

        Returns the JSON form, terms in ascending order.
        """
        return {
            'bits': self.n_bits,
            'terms': [{'value': t.literal, 'mult': t.multiplicity}
                      for t in self.terms],
        }

    @classmethod
    def from_dict(cls, data):
        """
        Load a superposition from its JSON form.

        data -- dictionary with 'bits' and 'terms'
        """
        SchemaRegistry().validate('superposition', data)

        terms = []
        for entry in data['terms']:
            if len(entry['value']) != data['bits']:
                raise DimensionError('Literal {} is not {} bits long'
                                     .format(entry['value'], data['bits']))

            terms.append(term_from_literal(entry['value'], entry['mult']))

        return cls(terms)

    @classmethod
    def from_numbers(cls, numbers, n_bits):
        """
        Build a superposition from a multiset of numbers.

        numbers -- iterable of numbers, or a Counter of number -> count
        n_bits -- number of noise-bits
        """
        if not isinstance(numbers, Counter):
            numbers = Counter(numbers)

        return cls(string_from_number(r, n_bits, k)
                   for r, k in numbers.items())


def superpose(terms):
    """
    Sum a list of strings.

    terms -- non-empty list of StringTerm of one size
    """
    return Superposition(terms)
