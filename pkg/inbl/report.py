"""Verification reports."""

import json

from .schemas import SchemaRegistry


class Check:
    """The outcome of one verification check."""

    def __init__(self, name, passed, observed=None, bound=None):
        """
        Initialize the object.

        name -- name of the check
        passed -- whether or not the check passed
        observed -- observed value, a number or a string
        bound -- the bound or expected value it was held against
        """
        self.name = name
        self.passed = bool(passed)
        self.observed = observed
        self.bound = bound

    def as_dict(self):
        """
        Get the check as a dictionary.

        Returns the JSON form.
        """
        return {
            'name': self.name,
            'pass': self.passed,
            'observed': self.observed,
            'bound': self.bound,
        }

    def __str__(self):
        """Format this check as one line of text."""
        return '{} {}: observed {}, bound {}'.format(
            'PASS' if self.passed else 'FAIL', self.name, self.observed,
            self.bound)


class Report:
    """An ordered collection of checks."""

    def __init__(self, checks=None):
        """
        Initialize the object.

        checks -- optional list of Check objects
        """
        self.checks = list(checks or [])

    def add(self, name, passed, observed=None, bound=None):
        """
        Record a check.

        Returns the new Check.
        """
        check = Check(name, passed, observed, bound)
        self.checks.append(check)
        return check

    @property
    def passed(self):
        """True when every check passed."""
        return all(check.passed for check in self.checks)

    def failures(self):
        """Get the checks which failed."""
        return [check for check in self.checks if not check.passed]

    def as_dict(self):
        """
        Get the report as a dictionary.

        Returns the JSON form, validated against the report schema.
        """
        data = {'checks': [check.as_dict() for check in self.checks]}
        return SchemaRegistry().validate('report', data)

    def to_json(self):
        """Serialize the report."""
        return json.dumps(self.as_dict(), indent=2)

    def __str__(self):
        """Format the report as text, one check per line."""
        lines = [str(check) for check in self.checks]
        lines.append('{} of {} checks passed'.format(
            len(self.checks) - len(self.failures()), len(self.checks)))
        return '\n'.join(lines)
