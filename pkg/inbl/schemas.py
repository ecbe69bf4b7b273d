"""JSON schemas for every document the package reads or writes."""

import json
import jsonschema
import os

from singleton_decorator import singleton


_SCHEMA_DIR = os.path.realpath(
    os.path.join(os.path.dirname(__file__), 'schema')
)


def _load(name):
    with open(os.path.join(_SCHEMA_DIR, name), 'rt', encoding='utf-8') as f:
        return json.load(f)


class Resolver(jsonschema.RefResolver):
    """Resolves $ref members against the packaged schema directory."""

    def __init__(self):
        """Initialize the resolver."""
        super().__init__(base_uri='', referrer=None)

    def resolve_remote(self, uri):
        """
        Load a referenced schema by its file name.

        uri -- the referenced URI; only its last path segment is used
        """
        name = uri.rsplit('/', 1)[-1]
        try:
            return _load(name)
        except OSError:
            raise jsonschema.RefResolutionError(
                'No packaged schema named {}'.format(name)) from None


@singleton
class SchemaRegistry:
    """Holds one validator per schema file, loaded on first use."""

    def __init__(self):
        """Initialize the object."""
        self.resolver = Resolver()
        self.validators = {}

    def validator(self, name):
        """
        Get the validator for a schema.

        name -- schema file name without the .json suffix
        """
        if name not in self.validators:
            self.validators[name] = jsonschema.Draft7Validator(
                schema=_load(name + '.json'),
                resolver=self.resolver,
            )

        return self.validators[name]

    def validate(self, name, instance):
        """
        Validate a document, raising jsonschema.ValidationError if invalid.

        name -- schema file name without the .json suffix
        instance -- the decoded JSON document
        """
        self.validator(name).validate(instance)
        return instance

    def is_valid(self, name, instance):
        """
        Check a document against a schema.

        name -- schema file name without the .json suffix
        instance -- the decoded JSON document
        """
        return self.validator(name).is_valid(instance)
