import math
import os.path
import random

import networkx as nx
import numpy as np
import pandas as pd
from pandas.testing import assert_frame_equal
import pytest

from temporal_graph_tools import (
    AnalysisConfig,
    ConfigurationError,
    Corpus,
    MetricSeries,
    PaperRecord,
    ReportUtils,
    SnapshotTable,
    TableUtils,
    TimeUtils,
    TimeVaryingGraph,
    UndefinedMetricError,
    UnknownPaperError,
    load_corpus,
)
from tests.conftest import (
    CORPUS_ORACLE_SEEDS,
    TESTS_DIR,
    TOY_CORPUS_COMMUNITY_TABLE,
    TOY_CORPUS_CONFIG,
    TOY_CORPUS_METRICS,
    TOY_CORPUS_RECORDS,
    random_corpus_records,
)

TOY_SNAPSHOTS = ['September 92', 'March 93', 'September 93', 'March 94', 'September 94']


@pytest.fixture(scope='module')
def toy_corpus():
    return load_corpus('canonical', records=TOY_CORPUS_RECORDS)


@pytest.fixture
def toy_config(monkeypatch, tmp_path):
    monkeypatch.chdir(TESTS_DIR)
    return AnalysisConfig.from_file(TOY_CORPUS_CONFIG, output_dir=str(tmp_path / 'out'))


def test_config_from_file(toy_config):
    assert toy_config.records == 'resources/toy_corpus/records.tsv'
    assert toy_config.threshold == 2
    assert toy_config.window == '1y'
    assert toy_config.save_as == 'csv'
    assert toy_config.strict is False
    assert len(toy_config.load_corpus()) == 5


def test_config_defaults():
    config = AnalysisConfig()
    assert config.threshold == 150
    assert config.window == '1y'
    assert config.node_scope == 'active'
    assert config.updated(threshold=None, seed=3).seed == 3


@pytest.mark.parametrize('overrides', [
    {'window': '0y'},
    {'threshold': -1},
    {'node_scope': 'some'},
    {'save_as': 'json'},
    {'input_format': 'bibtex'},
    {'snapshot_start': 'not a date'},
    {'trend_bin': 'x'},
])
def test_config_validation(overrides):
    with pytest.raises(ConfigurationError):
        AnalysisConfig().updated(**overrides)


@pytest.mark.parametrize('raw, expected', [
    ({'threshold': '10'}, {'threshold': 10}),
    ({'strict': 'yes'}, {'strict': True}),
    ({'node-scope': 'all'}, {'node_scope': 'all'}),
    ({'abstracts': ''}, {'abstracts': None}),
])
def test_config_parse_values(raw, expected):
    assert AnalysisConfig.parse_values(raw) == expected


@pytest.mark.parametrize('raw', [{'threshold': 'abc'}, {'strict': 'maybe'}, {'colour': 'red'}])
def test_config_parse_values_errors(raw):
    with pytest.raises(ConfigurationError):
        AnalysisConfig.parse_values(raw)


def test_config_file_errors(tmp_path):
    path = tmp_path / 'bad.cfg'
    path.write_text('# comment\nwindow 1y\n', encoding='utf-8')
    with pytest.raises(ConfigurationError, match='expected key=value'):
        AnalysisConfig.read_file(str(path))
    with pytest.raises(ConfigurationError):
        AnalysisConfig.read_file(str(tmp_path / 'missing.cfg'))


def test_window_sequence(toy_corpus):
    cuts, labels = ReportUtils.window_sequence(toy_corpus.lifetime, '1y')
    assert labels == ['1992', '1993', '1994', '1995']
    assert len(cuts) == len(labels) + 1


def test_graph_series_toy(toy_corpus):
    tvg = ReportUtils.temporal_graph(toy_corpus, 'gi', 2)
    clustering, density = ReportUtils.graph_series(tvg, ['clustering', 'density'], '1y')
    assert clustering.labels == ['1992', '1993', '1994', '1995']
    assert clustering.values.tolist() == pytest.approx([0, 0, 7 / 12, 7 / 12])
    assert density.values.tolist() == pytest.approx([1, 1, 2 / 3, 2 / 3])
    assert len(clustering.windows) == 4

    transition = ReportUtils.locate_phase_transition(clustering)
    assert (transition.before, transition.after) == ('1993', '1994')
    assert transition.delta == pytest.approx(7 / 12)


def test_temporal_graph_unknown_name(toy_corpus):
    with pytest.raises(ConfigurationError):
        ReportUtils.temporal_graph(toy_corpus, 'gx', 2)


def test_run_metrics_report(toy_config):
    report = ReportUtils.run_metrics_report(toy_config)
    assert sorted(report.paths) == ['ga', 'gc', 'gi']
    for name, path in report.paths.items():
        assert os.path.basename(path) == f'metrics_{name}.csv'
        with open(path, encoding='utf-8') as table:
            assert table.readline() == 'window,metric,value,defined\n'
    assert len(report.series['gc']) == 3
    assert len(report.series['gi']) == 7
    frame = TableUtils.read_table(report.paths['gi'])
    assert len(frame) == 7 * 4
    assert set(frame['metric']) == {
        'clustering', 'density', 'modularity', 'average_degree', 'average_path_length', 'power_law', 'node_edge_ratio',
    }


def test_run_metrics_report_is_byte_identical(toy_config, tmp_path):
    first = ReportUtils.run_metrics_report(toy_config, graphs=['gi'])
    second = ReportUtils.run_metrics_report(toy_config.updated(output_dir=str(tmp_path / 'again')), graphs=['gi'])
    with open(first.paths['gi'], 'rb') as a, open(second.paths['gi'], 'rb') as b:
        assert a.read() == b.read()


def test_undefined_values_are_written_as_empty_cells(tmp_path):
    series = MetricSeries('density', pd.Series([1.0, np.nan], index=['1992', '1993']))
    path = TableUtils.write_table(ReportUtils.series_frame([series]), str(tmp_path / 'series.csv'))
    with open(path, encoding='utf-8') as table:
        assert table.read().splitlines() == ['window,metric,value,defined', '1992,density,1.0,True', '1993,density,,False']


@pytest.mark.parametrize('values, before, after, delta', [
    ([1, 1, 1, 0.2, 0.2], 'c', 'd', 0.8),
    ([0.5, 0.5, 0.5, 0.5, 0.5], 'a', 'b', 0.0),
    ([np.nan, 0.1, np.nan, 0.6, 0.5], 'b', 'd', 0.5),
])
def test_locate_phase_transition(values, before, after, delta):
    series = MetricSeries('clustering', pd.Series(values, index=list('abcde')))
    transition = ReportUtils.locate_phase_transition(series)
    assert (transition.before, transition.after) == (before, after)
    assert transition.delta == pytest.approx(delta)


def test_locate_phase_transition_needs_two_values():
    with pytest.raises(UndefinedMetricError):
        ReportUtils.locate_phase_transition(MetricSeries('x', pd.Series([np.nan, 1.0, np.nan])))


def test_citation_counts_and_most_cited(toy_corpus):
    counts = ReportUtils.citation_counts(toy_corpus)
    assert counts.to_dict() == {'p1': 3, 'p2': 1, 'p3': 2, 'p4': 1, 'p5': 0}
    assert ReportUtils.most_cited_paper(toy_corpus) == 'p1'


@pytest.mark.parametrize('seed', CORPUS_ORACLE_SEEDS)
def test_most_cited_paper_matches_citing_counts(seed):
    records = random_corpus_records(seed)
    ids = {paper_id for paper_id, _, _, _ in records}
    counts = {paper_id: 0 for paper_id in ids}
    for paper_id, _, _, references in records:
        for reference in set(references):
            if reference in ids and reference != paper_id:
                counts[reference] += 1
    top = max(counts.values())
    expected = min(paper_id for paper_id, count in counts.items() if count == top)

    corpus = Corpus.from_records(
        PaperRecord(paper_id, date, tuple(authors), tuple(references))
        for paper_id, date, authors, references in records
    )
    assert ReportUtils.citation_counts(corpus).to_dict() == counts
    assert ReportUtils.most_cited_paper(corpus) == expected


def test_most_cited_paper_tie_goes_to_smallest_id():
    corpus = Corpus.from_records([
        PaperRecord('b', 0, ('X',)),
        PaperRecord('a', 0, ('Y',)),
        PaperRecord('c', 1, ('Z',), ('b', 'a')),
    ])
    assert ReportUtils.most_cited_paper(corpus) == 'a'


def test_citation_trend(toy_corpus):
    trend = ReportUtils.citation_trend(toy_corpus, 'p1', '6m')
    assert trend.labels == ['1992-03', '1992-07', '1993-01', '1993-07', '1994-01', '1994-07', '1995-01']
    assert trend.values.tolist() == [0, 0, 1, 0, 1, 1, 0]
    assert trend.values.sum() == ReportUtils.citation_counts(toy_corpus)['p1']
    with pytest.raises(UnknownPaperError):
        ReportUtils.citation_trend(toy_corpus, 'x99')


def test_snapshot_graphs(toy_corpus):
    tvg = ReportUtils.temporal_graph(toy_corpus, 'gi', 2)
    snapshots = ReportUtils.snapshot_graphs(tvg, '6m')
    assert [label for label, _ in snapshots] == TOY_SNAPSHOTS
    assert [g.number_of_edges for _, g in snapshots] == [1, 1, 1, 4, 4]


def test_community_snapshot_table(toy_corpus, tmp_path):
    tvg = ReportUtils.temporal_graph(toy_corpus, 'gi', 2)
    table = ReportUtils.community_snapshot_table(ReportUtils.snapshot_graphs(tvg, '6m'))
    assert len(table) == 5
    assert table.is_consistent()

    early = table.row('September 92')
    assert (early['vertices'], early['edges'], early['diameter'], early['beta']) == (2, 1, 1, 0.5)
    assert all(math.isnan(early[c]) for c in ('cyclomatic', 'alpha', 'gamma'))

    late = table.row('March 94')
    assert (late['vertices'], late['edges'], late['components'], late['diameter']) == (4, 4, 1, 2)
    assert late['cyclomatic'] == 1
    assert late['alpha'] == pytest.approx(1 / 3)
    assert late['gamma'] == pytest.approx(200 / 3)

    printed = table.printed().set_index('window')
    assert printed.loc['March 94', 'alpha'] == 0.333
    assert printed.loc['March 94', 'gamma'] == 66.66

    path = table.write(str(tmp_path / 'community_table.csv'))
    assert TableUtils.read_table(path, ['window', 'vertices'])['window'].tolist() == TOY_SNAPSHOTS
    with pytest.raises(KeyError):
        table.row('April 00')


def random_growing_tvg(seed):
    rng = random.Random(seed)
    nodes = rng.randint(3, 15)
    tvg = TimeVaryingGraph((0, 365))
    for node in range(nodes):
        tvg.add_entity(node)
    tvg.add_presence(0, 1, 0)
    for _ in range(rng.randint(1, 3 * nodes)):
        a, b = rng.sample(range(nodes), 2)
        tvg.add_presence(a, b, rng.randrange(365))
    return tvg.freeze()


@pytest.mark.parametrize('seed', CORPUS_ORACLE_SEEDS)
def test_community_snapshot_table_matches_largest_component(seed):
    snapshots = ReportUtils.snapshot_graphs(random_growing_tvg(seed), '30d')
    table = ReportUtils.community_snapshot_table(snapshots)
    assert len(table) == 12

    for (label, graph), (_, row) in zip(snapshots, table.frame.iterrows()):
        assert row['window'] == label
        component = graph.largest_component().graph
        v, e = component.number_of_nodes(), component.number_of_edges()
        assert v == max(len(c) for c in nx.connected_components(graph.graph))
        assert (row['vertices'], row['edges'], row['components']) == (v, e, 1)
        assert row['diameter'] == nx.diameter(component)
        assert row['beta'] == pytest.approx(e / v)
        if v < 3:
            assert all(math.isnan(row[c]) for c in ('cyclomatic', 'alpha', 'gamma'))
            continue
        mu = e - v + 1
        assert row['cyclomatic'] == mu
        assert row['alpha'] == pytest.approx(mu / ((v - 1) * (v - 2) / 2))
        assert row['gamma'] == pytest.approx(100 * e / (3 * (v - 2)))
    assert table.is_consistent()


@pytest.mark.parametrize('name', ['gc', 'ga', 'gi'])
def test_metrics_report_matches_expected_tables(toy_config, name):
    report = ReportUtils.run_metrics_report(toy_config, graphs=[name])
    assert_frame_equal(
        TableUtils.read_table(report.paths[name]),
        TableUtils.read_table(TOY_CORPUS_METRICS[name]),
        check_dtype=False,
        check_exact=False,
    )


def test_community_table_matches_expected_table(toy_config, tmp_path):
    corpus = toy_config.load_corpus()
    tvg = ReportUtils.temporal_graph(corpus, 'gi', toy_config.threshold)
    snapshots = ReportUtils.snapshot_graphs(tvg, toy_config.snapshot_step, toy_config.snapshot_start)
    assert all(g.edge_set() == {('a. author', 'b. other')} for _, g in snapshots[:3])

    path = ReportUtils.community_snapshot_table(snapshots).write(str(tmp_path / 'community_table.csv'))
    assert_frame_equal(
        TableUtils.read_table(path),
        TableUtils.read_table(TOY_CORPUS_COMMUNITY_TABLE),
        check_dtype=False,
        check_exact=False,
    )


def test_snapshot_table_consistency_check():
    table = SnapshotTable([{
        'window': 'x', 'vertices': 4, 'edges': 4, 'components': 1, 'diameter': 2,
        'cyclomatic': 3, 'alpha': 1.0, 'beta': 1.0, 'gamma': 1.0,
    }])
    assert not table.is_consistent()


def test_community_snapshot_table_needs_snapshots():
    with pytest.raises(ValueError):
        ReportUtils.community_snapshot_table([])


def test_footprint_summary(toy_corpus):
    tvg = ReportUtils.temporal_graph(toy_corpus, 'gc', 2)
    cuts, labels = ReportUtils.window_sequence(tvg.lifetime, '1y')
    summary = ReportUtils.footprint_summary(tvg.footprint_sequence(cuts, 'active'), labels)
    assert summary['edges'].tolist() == [0, 1, 5, 7]


@pytest.mark.parametrize('fields, save_as', [
    (['window', 'metric', 'value'], 'csv'),
    (['value'], 'csv'),
    (['window', 'metric', 'value'], 'xlsx'),
    (['value'], 'xlsx'),
    (['value'], 'not_allowed'),
])
def test_table_utils(tmp_path, fields, save_as):
    d = tmp_path / "sub"
    file_path = os.path.join(str(d), f'test_table.{save_as}')
    rng = random.Random(0)
    df = pd.DataFrame({
        'window': [f'{1992 + i}-01' for i in range(100)],
        'metric': 'density',
        'value': [rng.uniform(0, 1) for _ in range(100)],
    })
    if save_as not in TableUtils.allowed_file_type:
        with pytest.raises(ValueError, match=f'{save_as} is not an allowed file type'):
            TableUtils.write_table(df, file_path, save_as)
    else:
        TableUtils.write_table(df, file_path, save_as)
        assert_frame_equal(df[fields], TableUtils.read_table(file_path, fields))
