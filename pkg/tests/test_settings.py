import json

import jsonschema
import pytest

from inbl.schemas import Resolver, SchemaRegistry
from inbl.settings import DEFAULTS, Settings


def test_missing_file_gives_defaults(tmp_path):
    settings = Settings(str(tmp_path / 'config.json'))
    assert settings.load() == DEFAULTS


def test_load_overrides_defaults(tmp_path):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({'retries': 3}), encoding='utf-8')
    config = Settings(str(path)).load()
    assert config['retries'] == 3
    assert config['cycles'] == DEFAULTS['cycles']


def test_load_rejects_unknown_keys(tmp_path):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({'colour': 'blue'}), encoding='utf-8')
    with pytest.raises(jsonschema.ValidationError):
        Settings(str(path)).load()


def test_save_round_trip(tmp_path):
    path = tmp_path / 'nested' / 'config.json'
    settings = Settings(str(path))
    assert settings.save({'verbose': True, 'cycles': 50, 'retries': 0})
    assert settings.load() == {'verbose': True, 'cycles': 50, 'retries': 0}


def test_save_validates(tmp_path):
    with pytest.raises(jsonschema.ValidationError):
        Settings(str(tmp_path / 'config.json')).save({'cycles': 'many'})


def test_discovery(tmp_path, monkeypatch):
    found = tmp_path / 'found.json'
    found.write_text('{}', encoding='utf-8')
    monkeypatch.setattr('inbl.settings._CONFIG_PATHS',
                        [str(tmp_path / 'absent.json'), str(found)])
    assert Settings().path == str(found)

    monkeypatch.setattr('inbl.settings._CONFIG_PATHS', [])
    settings = Settings()
    assert settings.path is None
    assert settings.load() == DEFAULTS
    assert not settings.save(DEFAULTS)


def test_registry_is_shared():
    assert SchemaRegistry() is SchemaRegistry()
    assert SchemaRegistry().validator('report') is \
        SchemaRegistry().validator('report')


def test_run_report_schema_resolves_references():
    registry = SchemaRegistry()
    report = {
        'bits': 1,
        'seed': 0,
        'before': {'bits': 1, 'terms': [{'value': '0', 'mult': 1}]},
        'after': None,
        'wires': [[1, 0, '1'], [1, 1, '2']],
        'mulCounter': 0,
        'pass': False,
    }
    assert registry.is_valid('run-report', report)

    report['before'] = {'bits': 1, 'terms': []}
    assert not registry.is_valid('run-report', report)


def test_resolver_reads_packaged_schemas():
    resolver = Resolver()
    schema = resolver.resolve_remote('https://inbl.invalid/schema/report.json')
    assert 'checks' in schema['properties']

    with pytest.raises(jsonschema.RefResolutionError):
        resolver.resolve_remote('missing.json')
