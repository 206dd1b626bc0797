import logging
import pprint
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .relation import sort_key

logger = logging.getLogger(__name__)

EdgeLike = Union[Tuple[Hashable, Hashable], Tuple[Hashable, Hashable, Optional[int]]]


class StaticGraph:
    """
    Grafo estático, direcionado ou não, com pesos inteiros opcionais nas arestas.

    Representa tanto um :term:`Footprint` de um :term:`TVG` quanto um grafo construído diretamente de um
    :term:`Corpus` (:math:`G_a`, :math:`G_c`). Funciona guardando um objeto de grafo da biblioteca :mod:`networkx`
    (:attr:`graph`), que é o objeto consumido pelas métricas.

    Laços (arestas de um nó para ele mesmo) são descartados na construção e contados em
    :attr:`dropped_self_loops`. Arestas repetidas não são duplicadas: seus pesos são somados.

    Parameters
    ----------
    directed : bool, optional
        Se o grafo é direcionado.
    nodes : Iterable[Hashable], optional
        Nós iniciais, na ordem de inserção.
    edges : Iterable[tuple], optional
        Arestas ``(u, v)`` ou ``(u, v, peso)``.
    node_labels : dict, optional
        Nome de exibição por nó, guardado no atributo ``label``.

    Attributes
    ----------
    graph : networkx.Graph | networkx.DiGraph
        Grafo da biblioteca :mod:`networkx`.
    dropped_self_loops : int
        Quantidade de laços descartados.
    view : StaticGraphView
        Utilizado para visualização de um resumo do grafo.

    Examples
    --------
    >>> g = tgt.StaticGraph(edges=[('a', 'b'), ('b', 'c'), ('c', 'a'), ('a', 'a')])
    >>> g.number_of_edges, g.dropped_self_loops
    (3, 1)
    """
    def __init__(
            self,
            directed: bool = False,
            nodes: Iterable[Hashable] = (),
            edges: Iterable[EdgeLike] = (),
            node_labels: Optional[Dict[Hashable, str]] = None,
    ):
        self.graph: Union[nx.Graph, nx.DiGraph] = nx.DiGraph() if directed else nx.Graph()
        self.dropped_self_loops = 0
        self.graph.add_nodes_from(nodes)
        for edge in edges:
            self.add_edge(*edge)
        if node_labels:
            nx.set_node_attributes(self.graph, {n: label for n, label in node_labels.items() if n in self.graph}, 'label')

        self.view: StaticGraphView = StaticGraphView(self)

    @classmethod
    def from_networkx(cls, graph: Union[nx.Graph, nx.DiGraph]) -> 'StaticGraph':
        """Cria um :class:`StaticGraph` a partir de um grafo :mod:`networkx`, mantendo pesos e rótulos."""
        static = cls(directed=graph.is_directed(), nodes=graph.nodes)
        for u, v, data in graph.edges(data=True):
            static.add_edge(u, v, data.get('weight'))
        for node, data in graph.nodes(data=True):
            static.graph.nodes[node].update(data)
        return static

    def add_edge(self, u: Hashable, v: Hashable, weight: Optional[int] = None):
        """
        Adiciona uma aresta, somando o peso se ela já existir.

        Raises
        ------
        ValueError
            Se o peso for negativo.
        """
        if weight is not None and weight < 0:
            raise ValueError(f'edge weight must be non-negative, got {weight}')
        if u == v:
            self.dropped_self_loops += 1
            self.graph.add_node(u)
            return

        if self.graph.has_edge(u, v):
            if weight is not None:
                data = self.graph[u][v]
                data['weight'] = data.get('weight', 0) + weight
        elif weight is None:
            self.graph.add_edge(u, v)
        else:
            self.graph.add_edge(u, v, weight=weight)

    @property
    def directed(self) -> bool:
        return self.graph.is_directed()

    @property
    def nodes(self) -> List[Hashable]:
        return list(self.graph.nodes)

    @property
    def number_of_nodes(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def number_of_edges(self) -> int:
        return self.graph.number_of_edges()

    def edge_set(self) -> FrozenSet[Tuple[Hashable, Hashable]]:
        """Conjunto de arestas; em grafos não direcionados cada par aparece em ordem canônica."""
        if self.directed:
            return frozenset(self.graph.edges)
        return frozenset(tuple(sorted((u, v), key=sort_key)) for u, v in self.graph.edges)  # type: ignore[misc]

    def weight(self, u: Hashable, v: Hashable) -> Optional[int]:
        """Peso da aresta :math:`(u, v)`, ou ``None`` se não houver peso."""
        return self.graph[u][v].get('weight')

    def to_undirected(self) -> 'StaticGraph':
        """Versão simetrizada do grafo (o próprio grafo se já for não direcionado)."""
        if not self.directed:
            return self
        return StaticGraph.from_networkx(self.graph.to_undirected(as_view=False))

    def components(self) -> List[FrozenSet[Hashable]]:
        """
        Componentes conexas (fracamente conexas se direcionado), da maior para a menor.

        Empates de tamanho são resolvidos pelo menor nó, de forma determinística.
        """
        finder = nx.weakly_connected_components if self.directed else nx.connected_components
        found = [frozenset(c) for c in finder(self.graph)]
        return sorted(found, key=lambda c: (-len(c), min(sort_key(n) for n in c)))

    def subgraph(self, nodes: Iterable[Hashable]) -> 'StaticGraph':
        """Subgrafo induzido pelos nós informados, como um novo :class:`StaticGraph`."""
        return StaticGraph.from_networkx(self.graph.subgraph(nodes).copy())

    def largest_component(self) -> 'StaticGraph':
        """Subgrafo induzido pela maior componente conexa (grafo vazio se não houver nós)."""
        components = self.components()
        if not components:
            return StaticGraph(directed=self.directed)
        return self.subgraph(components[0])

    def degrees(self) -> Sequence[int]:
        """Graus totais dos nós, na ordem de inserção."""
        return [d for _, d in self.graph.degree()]

    def __repr__(self) -> str:
        kind = 'directed' if self.directed else 'undirected'
        return f'StaticGraph({kind}, nodes={self.number_of_nodes}, edges={self.number_of_edges})'


class StaticGraphView:
    """
    Classe utilizada pra visualização de dados de um objeto da classe :class:`StaticGraph`.

    Parameters
    ----------
    static_graph : StaticGraph
        Um objeto da classe :class:`StaticGraph` para o qual deseja-se visualizar os dados.

    Examples
    --------
    >>> g = tgt.StaticGraph(edges=[('a', 'b'), ('b', 'c')])
    >>> g.view.get_summary_data()
    {'directed': False, 'nodes': 3, 'edges': 2, 'components': 1, 'dropped_self_loops': 0}
    """
    def __init__(self, static_graph: StaticGraph):
        self.static_graph = static_graph

    def get_summary_data(self) -> Dict[str, Any]:
        """Retorna contagens básicas do grafo em um dicionário (:class:`dict`)."""
        g = self.static_graph
        return {
            'directed': g.directed,
            'nodes': g.number_of_nodes,
            'edges': g.number_of_edges,
            'components': len(g.components()),
            'dropped_self_loops': g.dropped_self_loops,
        }

    def print_summary(self):
        """*Pretty Print* de :meth:`get_summary_data`."""
        pprint.pprint(self.get_summary_data(), sort_dicts=False)
