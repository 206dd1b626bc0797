import logging
import os
from typing import Any, Dict, Union

import networkx as nx

from ..exceptions import ConfigurationError
from ..network import InteractionGraph
from ..tvg import StaticGraph, TimeVaryingGraph
from ..tvg.relation import sort_key
from ..utils.timeline import TimeUtils

logger = logging.getLogger(__name__)

GraphLike = Union[StaticGraph, TimeVaryingGraph]


class ExportUtils:
    """
    Exportação de grafos para visualização externa.

    Formatos aceitos: ``graphml``, ``dot`` e ``edgelist`` (separado por tabulação, em ordem canônica). Os pesos são
    exportados no atributo ``weight``; grafos variantes no tempo são exportados pelo footprint de todo o tempo de
    vida, com a data da primeira presença de cada aresta no atributo ``first_seen`` (``YYYY-MM-DD``).

    Attributes
    ----------
    allowed_formats : List[str]
        ``['graphml', 'dot', 'edgelist']``.
    """
    allowed_formats = ['graphml', 'dot', 'edgelist']

    @classmethod
    def to_networkx(cls, g: GraphLike) -> nx.Graph:
        """Grafo :mod:`networkx` com atributos prontos para exportação."""
        if isinstance(g, StaticGraph):
            return g.graph.copy()

        graph = g.lifetime_footprint(node_scope='all').graph.copy()
        for relation in g.relations:
            # self-loops are dropped by the footprint
            if not graph.has_edge(relation.endpoint_a, relation.endpoint_b):
                continue
            data = graph[relation.endpoint_a][relation.endpoint_b]
            first_seen = TimeUtils.to_iso(g.first_seen(relation))
            data['first_seen'] = min(data.get('first_seen', first_seen), first_seen)
            if isinstance(g, InteractionGraph):
                data['weight'] = g.final_strength(relation)
        return graph

    @staticmethod
    def canonical(graph: nx.Graph) -> nx.Graph:
        """Cópia com nós e arestas inseridos em ordem canônica e atributos convertidos para tipos primitivos."""
        ordered = graph.__class__()
        for node in sorted(graph.nodes, key=sort_key):
            ordered.add_node(node, **ExportUtils._primitive(graph.nodes[node]))
        edges = []
        for u, v, data in graph.edges(data=True):
            if not graph.is_directed() and sort_key(v) < sort_key(u):
                u, v = v, u
            edges.append((u, v, data))
        for u, v, data in sorted(edges, key=lambda e: (sort_key(e[0]), sort_key(e[1]))):
            ordered.add_edge(u, v, **ExportUtils._primitive(data))
        return ordered

    @staticmethod
    def _primitive(data: Dict[str, Any]) -> Dict[str, Any]:
        return {
            k: v if isinstance(v, (str, int, float, bool)) else str(v)
            for k, v in data.items() if v is not None
        }

    @classmethod
    def export_graph(cls, g: GraphLike, fmt: str, path: str) -> str:
        """
        Grava um grafo no formato informado.

        Parameters
        ----------
        g : StaticGraph | TimeVaryingGraph
            Grafo a ser exportado.
        fmt : str
            ``'graphml'``, ``'dot'`` ou ``'edgelist'``.
        path : str
            Caminho do arquivo. Diretórios intermediários são criados.

        Raises
        ------
        ConfigurationError
            Se o formato não é aceito.
        OSError
            Se o arquivo não pode ser gravado.
        """
        if fmt not in cls.allowed_formats:
            raise ConfigurationError(f'{fmt} is not an allowed export format, use one of {cls.allowed_formats}')
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        graph = cls.canonical(cls.to_networkx(g))
        if fmt == 'graphml':
            nx.write_graphml(graph, path)
        elif fmt == 'dot':
            nx.nx_pydot.write_dot(cls._quoted(graph), path)
        else:
            nx.write_edgelist(graph, path, delimiter='\t', data=['weight'], encoding='utf-8')
        logger.info(f'{graph.number_of_nodes()} nodes and {graph.number_of_edges()} edges exported to {path}')
        return path

    @staticmethod
    def _quoted(graph: nx.Graph) -> nx.Graph:
        # pydot rejects unquoted names containing ':'
        mapping = {n: f'"{n}"' for n in graph.nodes if ':' in str(n)}
        return nx.relabel_nodes(graph, mapping) if mapping else graph
