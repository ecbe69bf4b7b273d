"""User settings stored in a JSON file."""

import json
import os

from .schemas import SchemaRegistry


_CONFIG_PATHS = [
    os.path.join(os.path.expanduser('~'), '.inbl', 'config.json'),
]

if 'INBL_HOME' in os.environ:
    _CONFIG_PATHS.insert(
        0,
        os.path.join(os.environ['INBL_HOME'], 'config.json')
    )

if 'INBL_CONFIG' in os.environ:
    _CONFIG_PATHS.insert(0, os.environ['INBL_CONFIG'])


DEFAULTS = {
    'verbose': False,
    'cycles': 1000,
    'retries': 1,
}


class Settings:
    """Wrapper around the settings file."""

    def __init__(self, path=None):
        """
        Initialize the object.

        path -- optional path to the settings file
        """
        self.path = path

        if self.path is None:
            for p in _CONFIG_PATHS:
                if os.path.isfile(p):
                    self.path = p
                    break

    def load(self):
        """
        Load the settings, falling back to defaults for missing keys.

        Returns the settings as a dictionary.
        """
        config = dict(DEFAULTS)
        if self.path is None or not os.path.isfile(self.path):
            return config

        with open(self.path, 'rt', encoding='utf-8') as f:
            data = json.load(f)

        config.update(SchemaRegistry().validate('settings', data))
        return config

    def save(self, config):
        """
        Save settings to the file.

        config -- the settings dictionary

        Returns True on success, False if no path is known.
        """
        if self.path is None:
            return False

        SchemaRegistry().validate('settings', config)

        directory = os.path.dirname(self.path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        with open(self.path, 'wt', encoding='utf-8') as f:
            json.dump(config, f, indent=2)

        return True
