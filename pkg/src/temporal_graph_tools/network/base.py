import logging
from abc import abstractmethod
from itertools import combinations
from typing import Iterator, Tuple, Union

from ..corpus import Corpus, PaperRecord
from ..tvg import StaticGraph, TimeVaryingGraph

logger = logging.getLogger(__name__)


class BaseNetworkTransform:
    """
        Classe base para transformações de um :term:`Corpus` em rede.

        Cada grafo derivado (co-autoria, citação, suas versões temporais e o grafo de interação) é uma subclasse
        desta classe que implementa :meth:`get_graph`. As transformações são funções puras de um :class:`Corpus`
        imutável.

        Nos grafos de autores os nós são as identidades dos autores (ver :meth:`AuthorUtils.identity`) e o nome de
        exibição é guardado como rótulo do nó.
    """
    name: str = ''

    @classmethod
    @abstractmethod
    def get_graph(cls, corpus: Corpus) -> Union[StaticGraph, TimeVaryingGraph]:
        """
        Método abstrato :func:`abc.abstractmethod` para obtenção do grafo derivado.
        """
        raise NotImplementedError('get_graph must be implemented in a subclass')

    @staticmethod
    def author_pairs(paper: PaperRecord) -> Iterator[Tuple[str, str]]:
        """Pares não ordenados (em ordem canônica) de identidades de autores de um artigo."""
        return combinations(sorted(set(paper.author_keys)), 2)

    @classmethod
    def log_graph(cls, graph: Union[StaticGraph, TimeVaryingGraph]):
        if isinstance(graph, StaticGraph):
            logger.info(f'{cls.name} built: {graph.number_of_nodes} nodes, {graph.number_of_edges} edges')
        else:
            logger.info(f'{cls.name} built: {len(graph.entities)} entities, {len(graph.relations)} relations')
