import os

import pytest

from temporal_graph_tools.pipeline.cli import build_parser, main, resolve_config
from tests.conftest import TESTS_DIR, TOY_CORPUS_CONFIG, TOY_CORPUS_RECORDS


@pytest.fixture
def in_tests_dir(monkeypatch):
    monkeypatch.chdir(TESTS_DIR)


def test_ingest(tmp_path, capsys):
    assert main(['ingest', '--records', TOY_CORPUS_RECORDS, '--output-dir', str(tmp_path), '-q']) == 0
    with open(tmp_path / 'ingest_report.txt', encoding='utf-8') as report:
        text = report.read()
    assert 'citations=7\n' in text
    assert capsys.readouterr().out == text


def test_ingest_exports_records(tmp_path):
    records = str(tmp_path / 'copy.tsv')
    assert main(['ingest', '--records', TOY_CORPUS_RECORDS, '--output-dir', str(tmp_path), '--export-records', records]) == 0
    assert main(['ingest', '--records', records, '--output-dir', str(tmp_path / 'again')]) == 0
    with open(tmp_path / 'ingest_report.txt', 'rb') as a, open(tmp_path / 'again' / 'ingest_report.txt', 'rb') as b:
        assert a.read() == b.read()


@pytest.mark.parametrize('argv', [
    ['ingest', '--records', 'missing.tsv'],
    ['ingest'],
    ['ingest', '--input-format', 'hep-th', '--edges', 'missing.txt', '--dates', 'missing.txt'],
    ['metrics', '--records', TOY_CORPUS_RECORDS, '--window', '0y'],
    ['trend', '--records', TOY_CORPUS_RECORDS, '--paper', 'x99'],
])
def test_input_errors(tmp_path, argv):
    assert main(argv + ['--output-dir', str(tmp_path)]) == 1


def test_strict_mode(tmp_path):
    records = tmp_path / 'bad.tsv'
    records.write_text('a\t1999-01-01\tX\nb\tnot-a-date\tY\n', encoding='utf-8')
    assert main(['ingest', '--records', str(records), '--output-dir', str(tmp_path)]) == 0
    assert main(['ingest', '--records', str(records), '--output-dir', str(tmp_path), '--strict']) == 1


def test_metrics_from_config(in_tests_dir, tmp_path):
    assert main(['metrics', '--config', TOY_CORPUS_CONFIG, '--output-dir', str(tmp_path)]) == 0
    assert sorted(os.listdir(tmp_path)) == ['metrics_ga.csv', 'metrics_gc.csv', 'metrics_gi.csv']


def test_metrics_all_undefined(tmp_path):
    records = tmp_path / 'solo.tsv'
    records.write_text('a\t1999-01-01\tX\nb\t1999-02-01\tY\ta\n', encoding='utf-8')
    assert main(['metrics', '--records', str(records), '--graph', 'ga', '--output-dir', str(tmp_path)]) == 2


@pytest.mark.parametrize('argv, output', [
    (['build', '--kind', 'coauthorship', '--measures'], 'measures_coauthorship.csv'),
    (['footprints', '--graph', 'gc'], 'footprints_gc.csv'),
    (['trend'], 'trend_p1.csv'),
    (['snapshot-table'], 'community_table.csv'),
    (['export', '--graph', 'gi', '--format', 'graphml'], 'gi.graphml'),
    (['export', '--graph', 'citation', '--format', 'edgelist'], 'citation.edgelist'),
])
def test_commands_write_output(in_tests_dir, tmp_path, argv, output):
    assert main(argv + ['--config', TOY_CORPUS_CONFIG, '--output-dir', str(tmp_path)]) == 0
    assert os.path.isfile(tmp_path / output)


def test_flags_override_config_file(in_tests_dir):
    args = build_parser().parse_args(['metrics', '--config', TOY_CORPUS_CONFIG, '--threshold', '3', '--seed', '5'])
    config = resolve_config(args)
    assert (config.threshold, config.seed, config.window) == (3, 5, '1y')


def test_invalid_arguments():
    with pytest.raises(SystemExit) as error:
        main(['export', '--graph', 'gi', '--format', 'gexf'])
    assert error.value.code == 2
