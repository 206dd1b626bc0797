import logging
from typing import Dict, Hashable, List, Set

import networkx as nx

from ..exceptions import InvalidPartitionError, UndefinedMetricError
from ..tvg import StaticGraph
from ..tvg.relation import sort_key

logger = logging.getLogger(__name__)

Partition = Dict[Hashable, int]
"""Nó → identificador de comunidade (inteiros densos a partir de 0)."""


class CommunityUtils:
    """
    Classe utilitária para detecção de comunidades e :term:`Modularidade`.

    Grafos direcionados são simetrizados e as arestas são consideradas sem peso.
    """

    @staticmethod
    def _undirected(g: StaticGraph) -> nx.Graph:
        graph = g.to_undirected().graph
        if graph.number_of_edges() == 0:
            raise UndefinedMetricError('modularity is undefined for a graph without edges')
        return graph

    @staticmethod
    def to_communities(partition: Partition) -> List[Set[Hashable]]:
        """Lista de comunidades (conjuntos de nós), na ordem dos identificadores."""
        communities: Dict[int, Set[Hashable]] = {}
        for node, community in partition.items():
            communities.setdefault(community, set()).add(node)
        return [communities[c] for c in sorted(communities)]

    @staticmethod
    def from_communities(communities: List[Set[Hashable]]) -> Partition:
        """
        :class:`Partition` de uma lista de comunidades.

        Os identificadores são atribuídos em ordem do menor nó de cada comunidade, de forma determinística.
        """
        ordered = sorted(communities, key=lambda c: min(sort_key(n) for n in c))
        return {node: i for i, community in enumerate(ordered) for node in sorted(community, key=sort_key)}

    @classmethod
    def modularity(cls, g: StaticGraph, partition: Partition) -> float:
        """
        :term:`Modularidade` :math:`Q = \\sum_c (e_c / m - (d_c / 2m)^2)` de uma partição.

        Parameters
        ----------
        g : StaticGraph
            Grafo avaliado.
        partition : Partition
            Comunidade de cada nó; todo nó de :paramref:`g` deve aparecer exatamente uma vez.

        Raises
        ------
        InvalidPartitionError
            Se a partição não cobre exatamente os nós do grafo.
        UndefinedMetricError
            Se o grafo não tem arestas (:math:`m = 0`).

        Examples
        --------
        >>> g = tgt.StaticGraph(edges=[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        >>> tgt.CommunityUtils.modularity(g, {0: 0, 1: 0, 2: 0, 3: 1, 4: 1, 5: 1})
        0.5
        """
        graph = cls._undirected(g)
        if set(partition) != set(graph.nodes):
            raise InvalidPartitionError('the partition must assign every node of the graph exactly once')
        return float(nx.community.modularity(graph, cls.to_communities(partition), weight=None, resolution=1))

    @classmethod
    def detect_communities(cls, g: StaticGraph, seed: int = 0) -> Partition:
        """
        Detecção de comunidades pelo método de Louvain (movimentação local e agregação), resolução 1.

        A ordem de visita dos nós é derivada de :paramref:`seed`, então a mesma semente produz a mesma partição.
        Uma partição com modularidade negativa é trocada pela comunidade única (:math:`Q = 0`).

        Raises
        ------
        UndefinedMetricError
            Se o grafo não tem arestas.
        """
        graph = cls._undirected(g)
        communities = nx.community.louvain_communities(graph, weight=None, resolution=1, seed=seed)
        partition = cls.from_communities(communities)
        if len(communities) > 1 and cls.modularity(g, partition) < 0:
            logger.debug('detected partition scores below the single community, keeping one community')
            partition = {node: 0 for node in graph.nodes}
        return partition
