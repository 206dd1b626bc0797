import argparse
import logging
import os
import pprint
import sys
from typing import Callable, Dict, List, Optional

import pandas as pd

from .config import AnalysisConfig
from .export import ExportUtils
from .reports import GRAPHS, ReportUtils
from ..corpus import INPUT_FORMATS, CanonicalCorpusReader, Corpus
from ..exceptions import TemporalGraphError
from ..metrics import GraphMetrics
from ..network import STATIC_BUILDERS
from ..tvg.tvg import NODE_SCOPES
from ..utils.table import TableUtils

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_UNDEFINED = 2


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--config', help='flat key=value configuration file')
    parent.add_argument('--input-format', dest='input_format', choices=INPUT_FORMATS)
    parent.add_argument('--records', help='canonical records file')
    parent.add_argument('--edges', help='hep-th citation edges file')
    parent.add_argument('--dates', help='hep-th dates file')
    parent.add_argument('--abstracts', help='folder with hep-th .abs metadata files')
    parent.add_argument('--strict', action='store_const', const=True, default=None,
                        help='stop at the first malformed input line')
    parent.add_argument('--output-dir', dest='output_dir', help='folder for the generated files')
    parent.add_argument('--save-as', dest='save_as', choices=TableUtils.allowed_file_type)
    parent.add_argument('--threshold', type=int, help='strength threshold of the most cited subgraph')
    parent.add_argument('--seed', type=int, help='community detection seed')
    parent.add_argument('--window', help='footprint window length, e.g. 1y, 6m or 30d')
    parent.add_argument('--node-scope', dest='node_scope', choices=NODE_SCOPES)
    verbosity = parent.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true')
    verbosity.add_argument('-q', '--quiet', action='store_true')
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _common_options()
    parser = argparse.ArgumentParser(prog='tgt', description='Temporal graph analysis of publication corpora')
    commands = parser.add_subparsers(dest='command', required=True)

    commands.add_parser('ingest', parents=[parent], help='load a corpus and write its ingest report') \
        .add_argument('--export-records', dest='export_records', help='also write the corpus as canonical records')

    build = commands.add_parser('build', parents=[parent], help='build a static graph of the corpus')
    build.add_argument('--kind', required=True, choices=sorted(STATIC_BUILDERS))
    build.add_argument('--measures', action='store_true', help='compute the static measures of the graph')

    footprints = commands.add_parser('footprints', parents=[parent], help='node and edge counts per window')
    footprints.add_argument('--graph', required=True, choices=GRAPHS)

    metrics = commands.add_parser('metrics', parents=[parent], help='metric series per window')
    metrics.add_argument('--graph', default='all', choices=GRAPHS + ['all'])

    trend = commands.add_parser('trend', parents=[parent], help='citations received per bin')
    trend.add_argument('--paper', default='most-cited', help='paper id, or most-cited')
    trend.add_argument('--bin', dest='trend_bin', help='bin length, e.g. 6m')

    snapshot = commands.add_parser('snapshot-table', parents=[parent], help='largest community evolution table')
    snapshot.add_argument('--start', dest='snapshot_start', help='date of the first snapshot')
    snapshot.add_argument('--step', dest='snapshot_step', help='interval between snapshots, e.g. 6m')

    export = commands.add_parser('export', parents=[parent], help='export a graph for visualization')
    export.add_argument('--graph', required=True, choices=GRAPHS + sorted(STATIC_BUILDERS))
    export.add_argument('--format', dest='fmt', required=True, choices=ExportUtils.allowed_formats)
    export.add_argument('--output', help='output file, defaults to <output-dir>/<graph>.<format>')
    return parser


def resolve_config(args: argparse.Namespace) -> AnalysisConfig:
    """Padrões < arquivo de configuração < opções de linha de comando."""
    overrides = {key: getattr(args, key) for key in AnalysisConfig.keys() if getattr(args, key, None) is not None}
    if args.config:
        return AnalysisConfig.from_file(args.config, **overrides)
    return AnalysisConfig().updated(**overrides)


def _output(config: AnalysisConfig, name: str) -> str:
    return os.path.join(config.output_dir, f'{name}.{config.save_as}')


def run_ingest(args: argparse.Namespace, config: AnalysisConfig, corpus: Corpus) -> int:
    path = corpus.report.write(os.path.join(config.output_dir, 'ingest_report.txt'))
    print(corpus.report.to_text(), end='')
    logger.info(f'ingest report written to {path}')
    if args.export_records:
        CanonicalCorpusReader.write_corpus(corpus, args.export_records)
    return EXIT_OK


def run_build(args: argparse.Namespace, config: AnalysisConfig, corpus: Corpus) -> int:
    graph = STATIC_BUILDERS[args.kind](corpus)
    if not args.measures:
        graph.view.print_summary()
        return EXIT_OK
    measures = GraphMetrics.measures(graph, config.seed)
    pprint.pprint(measures, sort_dicts=False)
    TableUtils.write_table(pd.DataFrame([measures]), _output(config, f'measures_{args.kind}'), config.save_as)
    return EXIT_OK


def run_footprints(args: argparse.Namespace, config: AnalysisConfig, corpus: Corpus) -> int:
    tvg = ReportUtils.temporal_graph(corpus, args.graph, config.threshold)
    cuts, labels = ReportUtils.window_sequence(tvg.lifetime, config.window)
    summary = ReportUtils.footprint_summary(tvg.footprint_sequence(cuts, config.node_scope), labels)
    TableUtils.write_table(summary, _output(config, f'footprints_{args.graph}'), config.save_as)
    print(summary.to_string(index=False))
    return EXIT_OK


def run_metrics(args: argparse.Namespace, config: AnalysisConfig, corpus: Corpus) -> int:
    graphs = GRAPHS if args.graph == 'all' else [args.graph]
    report = ReportUtils.run_metrics_report(config, corpus, graphs)
    defined = False
    for name, series in report.series.items():
        defined = defined or any(s.defined.any() for s in series)
        clustering = next(s for s in series if s.name == 'clustering')
        if clustering.defined.sum() >= 2:
            transition = ReportUtils.locate_phase_transition(clustering)
            logger.info(f'{name}: largest clustering change between {transition.before} and {transition.after} '
                        f'({transition.change:+.4f})')
    if not defined:
        logger.warning('every metric value is undefined')
        return EXIT_UNDEFINED
    return EXIT_OK


def run_trend(args: argparse.Namespace, config: AnalysisConfig, corpus: Corpus) -> int:
    paper_id = ReportUtils.most_cited_paper(corpus) if args.paper == 'most-cited' else args.paper
    series = ReportUtils.citation_trend(corpus, paper_id, config.trend_bin)
    TableUtils.write_table(series.to_frame(), _output(config, f'trend_{paper_id}'), config.save_as)
    print(f'paper {paper_id}: {int(series.values.sum())} citations')
    print(series.values.to_string())
    return EXIT_OK


def run_snapshot_table(args: argparse.Namespace, config: AnalysisConfig, corpus: Corpus) -> int:
    tvg = ReportUtils.temporal_graph(corpus, 'gi', config.threshold)
    snapshots = ReportUtils.snapshot_graphs(tvg, config.snapshot_step, config.snapshot_start)
    if not snapshots:
        logger.warning('no snapshot date falls inside the corpus lifetime')
        return EXIT_UNDEFINED
    table = ReportUtils.community_snapshot_table(snapshots)
    table.write(_output(config, 'community_table'), config.save_as)
    print(table.printed().to_string(index=False))
    if table.frame[['cyclomatic', 'alpha', 'beta', 'gamma']].isna().all().all():
        logger.warning('every community indicator is undefined')
        return EXIT_UNDEFINED
    return EXIT_OK


def run_export(args: argparse.Namespace, config: AnalysisConfig, corpus: Corpus) -> int:
    if args.graph in GRAPHS:
        graph = ReportUtils.temporal_graph(corpus, args.graph, config.threshold)
    else:
        graph = STATIC_BUILDERS[args.graph](corpus)
    path = args.output or os.path.join(config.output_dir, f'{args.graph}.{args.fmt}')
    ExportUtils.export_graph(graph, args.fmt, path)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, AnalysisConfig, Corpus], int]] = {
    'ingest': run_ingest,
    'build': run_build,
    'footprints': run_footprints,
    'metrics': run_metrics,
    'trend': run_trend,
    'snapshot-table': run_snapshot_table,
    'export': run_export,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Ponto de entrada do comando ``tgt``.

    Returns
    -------
    int
        ``0`` em caso de sucesso, ``1`` em erro de entrada ou configuração e ``2`` quando toda a saída é indefinida.
    """
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format='%(asctime)s - %(levelname)s - %(message)s')

    try:
        config = resolve_config(args)
        corpus = config.load_corpus()
        return COMMANDS[args.command](args, config, corpus)
    except (TemporalGraphError, OSError) as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
