import logging
import os
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from .config import AnalysisConfig
from ..corpus import Corpus
from ..exceptions import ConfigurationError, UndefinedMetricError
from ..metrics import GraphMetrics, MetricSeries, metric_series
from ..network import InteractionTransform, TemporalCitationTransform, TemporalCoauthorshipTransform
from ..tvg import StaticGraph, TimeVaryingGraph
from ..utils.data import DataUtils
from ..utils.table import TableUtils
from ..utils.timeline import DateLike, TimeInstant, TimeUtils, Window

logger = logging.getLogger(__name__)

GRAPHS = ['gc', 'ga', 'gi']
BASE_METRICS = ['clustering', 'density', 'modularity']
INTERACTION_METRICS = BASE_METRICS + ['average_degree', 'average_path_length', 'power_law', 'node_edge_ratio']


class PhaseTransition(NamedTuple):
    """Fronteira entre as janelas ``before`` e ``after`` com a maior variação absoluta ``delta``."""
    before: str
    after: str
    delta: float
    change: float


class MetricsReport(NamedTuple):
    series: Dict[str, List[MetricSeries]]
    paths: Dict[str, str]


class SnapshotTable:
    """
    Tabela de evolução da maior comunidade, uma linha por fotografia.

    Colunas: ``window, vertices, edges, components, diameter, cyclomatic, alpha, beta, gamma``. Valores indefinidos
    são ``nan``.

    Attributes
    ----------
    frame : pandas.DataFrame
        A tabela.
    """
    columns = ['window', 'vertices', 'edges', 'components', 'diameter', 'cyclomatic', 'alpha', 'beta', 'gamma']
    printed_decimals = {'alpha': 3, 'beta': 2, 'gamma': 2}

    def __init__(self, rows: Sequence[Dict[str, object]]):
        self.frame = pd.DataFrame(list(rows), columns=self.columns)

    def __len__(self) -> int:
        return len(self.frame)

    def row(self, window: str) -> pd.Series:
        matches = self.frame[self.frame['window'] == window]
        if matches.empty:
            raise KeyError(f'{window} is not a window of the table')
        return matches.iloc[0]

    def printed(self) -> pd.DataFrame:
        """Cópia com os índices truncados na precisão de impressão (:meth:`DataUtils.truncate`)."""
        frame = self.frame.copy()
        for column, decimals in self.printed_decimals.items():
            frame[column] = [np.nan if pd.isna(v) else DataUtils.truncate(v, decimals) for v in frame[column]]
        return frame

    def is_consistent(self) -> bool:
        """Confere :math:`\\mu = e - v + p` e :math:`\\beta = e / v` em todas as linhas definidas."""
        for _, row in self.frame.iterrows():
            if not pd.isna(row['cyclomatic']) and row['cyclomatic'] != row['edges'] - row['vertices'] + row['components']:
                return False
            if not pd.isna(row['beta']) and not np.isclose(row['beta'], row['edges'] / row['vertices']):
                return False
        return True

    def write(self, path: str, save_as: Optional[str] = None) -> str:
        return TableUtils.write_table(self.frame, path, save_as)


class ReportUtils:
    """
    Relatórios da análise de uma comunidade científica.

    Reúne a construção das redes temporais, as séries de métricas por janela, a localização da transição de fase,
    a tendência de citações e a tabela de evolução da maior comunidade.
    """

    @staticmethod
    def temporal_graph(corpus: Corpus, name: str, threshold: int) -> TimeVaryingGraph:
        """
        Rede temporal ``'gc'`` (citações), ``'ga'`` (co-autoria) ou ``'gi'`` (mais citados).

        Raises
        ------
        ConfigurationError
            Nome de grafo desconhecido.
        """
        if name == 'gc':
            return TemporalCitationTransform.get_graph(corpus)
        if name == 'ga':
            return TemporalCoauthorshipTransform.get_graph(corpus)
        if name == 'gi':
            return InteractionTransform.get_graph(corpus).filter_most_cited(threshold)
        raise ConfigurationError(f'{name} is not a known graph, use one of {GRAPHS}')

    @staticmethod
    def window_sequence(
            lifetime: Tuple[TimeInstant, TimeInstant],
            window: Union[str, int, Window],
    ) -> Tuple[List[TimeInstant], List[str]]:
        """Cortes da partição do tempo de vida e rótulos das janelas."""
        cuts = TimeUtils.partition(lifetime, window)
        return cuts, [TimeUtils.window_label(t, window) for t in cuts[:-1]]

    @classmethod
    def graph_series(
            cls,
            tvg: TimeVaryingGraph,
            metrics: Sequence[str],
            window: Union[str, int, Window] = '1y',
            node_scope: str = 'active',
            seed: int = 0,
    ) -> List[MetricSeries]:
        """Séries das métricas informadas sobre a sequência de footprints de :paramref:`tvg`."""
        cuts, labels = cls.window_sequence(tvg.lifetime, window)
        footprints = tvg.footprint_sequence(cuts, node_scope=node_scope)
        windows = TimeUtils.windows(cuts)
        return [metric_series(footprints, metric, labels, windows, seed) for metric in metrics]

    @staticmethod
    def series_frame(series: Sequence[MetricSeries]) -> pd.DataFrame:
        """Tabela longa ``window, metric, value, defined`` de várias séries."""
        return pd.concat([s.to_frame() for s in series], ignore_index=True)

    @classmethod
    def run_metrics_report(
            cls,
            config: AnalysisConfig,
            corpus: Optional[Corpus] = None,
            graphs: Sequence[str] = tuple(GRAPHS),
    ) -> MetricsReport:
        """
        Séries de métricas por janela de cada rede temporal, uma tabela ``metrics_<grafo>`` por rede.

        Todas as redes recebem agrupamento, densidade e modularidade; ``'gi'`` recebe também grau médio,
        comprimento médio de caminho, expoente da lei de potência e razão arestas/nós.
        """
        corpus = corpus if corpus is not None else config.load_corpus()
        series: Dict[str, List[MetricSeries]] = {}
        paths: Dict[str, str] = {}
        for name in graphs:
            tvg = cls.temporal_graph(corpus, name, config.threshold)
            metrics = INTERACTION_METRICS if name == 'gi' else BASE_METRICS
            series[name] = cls.graph_series(tvg, metrics, config.window, config.node_scope, config.seed)
            path = os.path.join(config.output_dir, f'metrics_{name}.{config.save_as}')
            paths[name] = TableUtils.write_table(cls.series_frame(series[name]), path, config.save_as)
        return MetricsReport(series, paths)

    @staticmethod
    def locate_phase_transition(series: MetricSeries) -> PhaseTransition:
        """
        Fronteira entre janelas com a maior variação absoluta entre valores definidos consecutivos.

        Empates são resolvidos pela primeira fronteira.

        Raises
        ------
        UndefinedMetricError
            Se a série tem menos de dois valores definidos.

        Examples
        --------
        >>> s = tgt.MetricSeries('x', pd.Series([1, 1, 1, 0.2, 0.2], index=list('abcde')))
        >>> tgt.ReportUtils.locate_phase_transition(s)[:2]
        ('c', 'd')
        """
        if int(series.defined.sum()) < 2:
            raise UndefinedMetricError(f'{series.name} has fewer than 2 defined values')
        before, after, change = DataUtils.max_abs_step(series.values)
        labels = series.labels
        return PhaseTransition(labels[before], labels[after], abs(change), change)

    @staticmethod
    def citation_counts(corpus: Corpus) -> pd.Series:
        """Quantidade de artigos citantes de cada artigo do :term:`Corpus` (zero para artigos não citados)."""
        cited_by = corpus.citing_papers()
        return pd.Series(
            [len(cited_by.get(p, [])) for p in corpus.papers],
            index=pd.Index(list(corpus.papers), name='paper_id'),
            name='citations',
            dtype=np.int64,
        )

    @classmethod
    def most_cited_paper(cls, corpus: Corpus) -> str:
        """Artigo mais citado; empates são resolvidos pelo menor identificador."""
        counts = cls.citation_counts(corpus)
        if counts.empty:
            raise UndefinedMetricError('an empty corpus has no most cited paper')
        return str(counts.idxmax())

    @classmethod
    def citation_trend(cls, corpus: Corpus, paper_id: str, bin: Union[str, int, Window] = '6m') -> MetricSeries:
        """
        Citações recebidas por um artigo em cada intervalo do tempo de vida, pela data do artigo citante.

        Raises
        ------
        UnknownPaperError
            Se o artigo não pertence ao :term:`Corpus`.
        """
        corpus.get(paper_id)
        cuts, labels = cls.window_sequence(corpus.lifetime, bin)
        dates = np.sort([corpus.papers[c].submission_date for c in corpus.citing_papers().get(paper_id, [])])
        counts = np.diff(np.searchsorted(dates, cuts, side='left'))
        values = pd.Series(counts, index=pd.Index(labels, name='window'), dtype=float)
        return MetricSeries('citations', values, TimeUtils.windows(cuts))

    @staticmethod
    def snapshot_graphs(
            tvg: TimeVaryingGraph,
            step: Union[str, int, Window] = '6m',
            start: Optional[Union[DateLike, int]] = None,
    ) -> List[Tuple[str, StaticGraph]]:
        """
        Fotografias do grafo cumulativo: para cada data de corte :math:`t`, o footprint
        :math:`[t_{min}, t)` com apenas os nós ativos.
        """
        lo = tvg.lifetime[0]
        return [
            (TimeUtils.snapshot_label(cut), tvg.footprint(lo, cut, node_scope='active'))
            for cut in TimeUtils.snapshot_cuts(tvg.lifetime, step, start)
        ]

    @staticmethod
    def community_row(label: str, graph: StaticGraph) -> Dict[str, object]:
        """Linha da tabela de comunidade para a maior componente conexa de :paramref:`graph`."""
        component = graph.largest_component()
        row: Dict[str, object] = {
            'window': label,
            'vertices': component.number_of_nodes,
            'edges': component.number_of_edges,
            'components': len(component.components()),
        }
        for column, metric in [('diameter', 'diameter'), ('beta', 'beta')]:
            row[column] = GraphMetrics.evaluate(metric, component)
        for column in ('cyclomatic', 'alpha', 'gamma'):
            row[column] = np.nan if component.number_of_nodes < 3 else GraphMetrics.evaluate(column, component)
        return row

    @classmethod
    def community_snapshot_table(cls, snapshots: Sequence[Tuple[str, StaticGraph]]) -> SnapshotTable:
        """
        Tabela de evolução da maior comunidade (maior componente conexa de cada fotografia).

        Linhas com menos de três vértices têm :math:`\\mu`, :math:`\\alpha` e :math:`\\gamma` indefinidos.

        Raises
        ------
        ValueError
            Se não houver fotografias.
        """
        if not snapshots:
            raise ValueError('the community table needs at least one snapshot')
        return SnapshotTable([cls.community_row(label, graph) for label, graph in snapshots])

    @staticmethod
    def footprint_summary(footprints: Sequence[StaticGraph], labels: Sequence[str]) -> pd.DataFrame:
        """Nós e arestas de cada footprint."""
        return pd.DataFrame({
            'window': list(labels),
            'nodes': [g.number_of_nodes for g in footprints],
            'edges': [g.number_of_edges for g in footprints],
        })
