"""A setuptools based setup module."""

from setuptools import setup, find_packages
from codecs import open
from os import path


here = path.abspath(path.dirname(__file__))

# Get the long description from the README file.
with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()

requirements = [
    'jsonschema>=3.2.0,<5',
    'numpy>=1.20',
    'singleton-decorator==1.0.0',
]

setup(
    name='inbl',
    version='0.1.0',
    description='Instantaneous noise-based logic gates over random telegraph '
                'waves',
    long_description=long_description,
    keywords='noise-based logic random telegraph wave xor xnor simulator',
    packages=find_packages(exclude=['contrib', 'docs', 'tests']),
    package_data={'inbl': ['schema/*.json']},
    python_requires='>=3.8',
    install_requires=requirements,
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['inbl = inbl.cli:main'],
    },
)
