import logging
from typing import Any, Callable, Dict, NamedTuple, Sequence

import networkx as nx
import numpy as np

from .community import CommunityUtils
from ..exceptions import ConfigurationError, UndefinedMetricError
from ..tvg import StaticGraph
from ..utils.data import DataUtils

logger = logging.getLogger(__name__)


class PathStatistics(NamedTuple):
    """Caminhos mínimos sem peso sobre os pares alcançáveis."""
    diameter: int
    average_path_length: float
    reachable_pairs: int
    unreachable_pairs: int


class GraphMetrics:
    """
    Indicadores estáticos de um :class:`StaticGraph`.

    Métricas não definidas para o grafo recebido (ex: grafo vazio, :math:`v < 3` nos índices de ciclos) levantam
    :class:`UndefinedMetricError`; nunca retornam zero em seu lugar. O mapa :attr:`registry` associa o nome de cada
    métrica a uma função ``(grafo, semente) -> valor``, usado por :func:`metric_series`.
    """

    @staticmethod
    def _check_nodes(g: StaticGraph, minimum: int, metric: str):
        if g.number_of_nodes < minimum:
            raise UndefinedMetricError(f'{metric} needs at least {minimum} nodes, got {g.number_of_nodes}')

    @classmethod
    def average_clustering(cls, g: StaticGraph) -> float:
        """
        Coeficiente de agrupamento médio.

        Grafos direcionados são simetrizados; nós com grau menor que 2 contribuem com 0.

        Examples
        --------
        >>> tgt.GraphMetrics.average_clustering(tgt.StaticGraph(edges=[(0, 1), (1, 2), (2, 0)]))
        1.0
        """
        cls._check_nodes(g, 1, 'clustering')
        return float(nx.average_clustering(g.to_undirected().graph))

    @classmethod
    def density(cls, g: StaticGraph) -> float:
        """:math:`2e / v(v-1)` (não direcionado) ou :math:`e / v(v-1)` (direcionado)."""
        cls._check_nodes(g, 2, 'density')
        return float(nx.density(g.graph))

    @classmethod
    def path_statistics(cls, g: StaticGraph) -> PathStatistics:
        """
        Diâmetro e comprimento médio de caminho sobre os pares alcançáveis.

        Em grafos direcionados os caminhos seguem a direção das arestas e os pares são ordenados; em grafos não
        direcionados os pares são não ordenados. Pares sem caminho são contados em ``unreachable_pairs``.

        Raises
        ------
        UndefinedMetricError
            Se nenhum par de nós distintos é alcançável.
        """
        v = g.number_of_nodes
        longest, total, reachable = 0, 0, 0
        for _, lengths in nx.all_pairs_shortest_path_length(g.graph):
            for length in lengths.values():
                if length > 0:
                    longest = max(longest, length)
                    total += length
                    reachable += 1
        if reachable == 0:
            raise UndefinedMetricError('no pair of distinct nodes is reachable')

        pairs = v * (v - 1)
        if not g.directed:
            pairs //= 2
            reachable //= 2
            total //= 2
        return PathStatistics(longest, total / reachable, reachable, pairs - reachable)

    @classmethod
    def diameter(cls, g: StaticGraph) -> int:
        return cls.path_statistics(g).diameter

    @classmethod
    def average_path_length(cls, g: StaticGraph) -> float:
        return cls.path_statistics(g).average_path_length

    @classmethod
    def unreachable_pairs(cls, g: StaticGraph) -> int:
        return cls.path_statistics(g).unreachable_pairs

    @classmethod
    def average_degree(cls, g: StaticGraph) -> float:
        """:math:`2e / v`."""
        cls._check_nodes(g, 1, 'average degree')
        return 2 * g.number_of_edges / g.number_of_nodes

    @classmethod
    def node_edge_ratio(cls, g: StaticGraph) -> float:
        """Média de arestas por nó, :math:`e / v`."""
        cls._check_nodes(g, 1, 'node/edge ratio')
        return g.number_of_edges / g.number_of_nodes

    @staticmethod
    def degree_exponent(degrees: Sequence[int]) -> float:
        """
        Inclinação da reta de mínimos quadrados de :math:`\\log f(k)` contra :math:`\\log k`.

        :math:`f(k)` é a quantidade de nós com grau :math:`k`, para :math:`k \\geq 1`.

        Raises
        ------
        UndefinedMetricError
            Se houver menos de dois graus positivos distintos.
        """
        values = np.asarray(degrees, dtype=np.int64)
        k, frequency = np.unique(values[values >= 1], return_counts=True)
        if k.size < 2:
            raise UndefinedMetricError(f'power law fit needs 2 distinct positive degrees, got {k.size}')
        return DataUtils.loglog_slope(k, frequency)

    @classmethod
    def power_law_exponent(cls, g: StaticGraph) -> float:
        """Expoente da lei de potência da distribuição de graus, ver :meth:`degree_exponent`."""
        return cls.degree_exponent(g.degrees())

    @classmethod
    def cyclomatic_number(cls, g: StaticGraph) -> int:
        """
        Número ciclomático :math:`\\mu = e - v + p`, :math:`p` o número de componentes conexas.

        Examples
        --------
        >>> path = tgt.StaticGraph(edges=[(0, 1), (1, 2)])
        >>> tgt.GraphMetrics.cyclomatic_number(path)
        0
        """
        return g.number_of_edges - g.number_of_nodes + len(g.components())

    @classmethod
    def alpha_index(cls, g: StaticGraph) -> float:
        """Índice alfa :math:`\\mu / ((v-1)(v-2)/2)`."""
        cls._check_nodes(g, 3, 'alpha index')
        v = g.number_of_nodes
        return cls.cyclomatic_number(g) / ((v - 1) * (v - 2) / 2)

    @classmethod
    def beta_index(cls, g: StaticGraph) -> float:
        """Índice beta :math:`e / v`."""
        cls._check_nodes(g, 1, 'beta index')
        return g.number_of_edges / g.number_of_nodes

    @classmethod
    def gamma_index(cls, g: StaticGraph) -> float:
        """Índice gama :math:`100 \\cdot e / (3(v-2))`, em porcentagem do máximo planar de arestas."""
        cls._check_nodes(g, 3, 'gamma index')
        return 100 * g.number_of_edges / (3 * (g.number_of_nodes - 2))

    @classmethod
    def modularity(cls, g: StaticGraph, seed: int = 0) -> float:
        """:term:`Modularidade` da partição encontrada por :meth:`CommunityUtils.detect_communities`."""
        return CommunityUtils.modularity(g, CommunityUtils.detect_communities(g, seed))

    @classmethod
    def measures(cls, g: StaticGraph, seed: int = 0) -> Dict[str, Any]:
        """
        Medidas de um grafo estático do :term:`Corpus`: nós, arestas, componentes, diâmetro, modularidade e
        agrupamento médio. Medidas indefinidas valem ``nan``.
        """
        results: Dict[str, Any] = {
            'nodes': g.number_of_nodes,
            'edges': g.number_of_edges,
            'components': len(g.components()),
        }
        for name in ('diameter', 'modularity', 'clustering'):
            results[name] = cls.evaluate(name, g, seed)
        return results

    @classmethod
    def evaluate(cls, name: str, g: StaticGraph, seed: int = 0) -> float:
        """
        Avalia a métrica :paramref:`name`, retornando ``nan`` se ela não for definida para o grafo.

        Raises
        ------
        ConfigurationError
            Se o nome não estiver em :attr:`registry`.
        """
        if name not in cls.registry:
            raise ConfigurationError(f'{name} is not a known metric, use one of {sorted(cls.registry)}')
        try:
            return cls.registry[name](g, seed)
        except UndefinedMetricError as e:
            logger.debug(f'{name} undefined: {e}')
            return float('nan')

    registry: Dict[str, Callable[[StaticGraph, int], Any]] = {}


GraphMetrics.registry = {
    'nodes': lambda g, seed: g.number_of_nodes,
    'edges': lambda g, seed: g.number_of_edges,
    'clustering': lambda g, seed: GraphMetrics.average_clustering(g),
    'density': lambda g, seed: GraphMetrics.density(g),
    'modularity': lambda g, seed: GraphMetrics.modularity(g, seed),
    'diameter': lambda g, seed: GraphMetrics.diameter(g),
    'average_path_length': lambda g, seed: GraphMetrics.average_path_length(g),
    'unreachable_pairs': lambda g, seed: GraphMetrics.unreachable_pairs(g),
    'average_degree': lambda g, seed: GraphMetrics.average_degree(g),
    'node_edge_ratio': lambda g, seed: GraphMetrics.node_edge_ratio(g),
    'power_law': lambda g, seed: GraphMetrics.power_law_exponent(g),
    'cyclomatic': lambda g, seed: GraphMetrics.cyclomatic_number(g),
    'alpha': lambda g, seed: GraphMetrics.alpha_index(g),
    'beta': lambda g, seed: GraphMetrics.beta_index(g),
    'gamma': lambda g, seed: GraphMetrics.gamma_index(g),
}
