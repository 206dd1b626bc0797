import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .base import BaseNetworkTransform
from .temporal import TemporalCoauthorshipTransform
from ..corpus import Corpus
from ..exceptions import ConfigurationError
from ..tvg import Relation, StaticGraph, TimeVaryingGraph
from ..utils.timeline import FOREVER, TimeInstant

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 150


class StrengthSeries:
    """
    Função degrau não decrescente :math:`w(t)`: número de passos ocorridos até o instante :math:`t` (inclusive).

    Parameters
    ----------
    steps : Sequence[int]
        Instantes dos incrementos unitários, em qualquer ordem e com repetições.

    Examples
    --------
    >>> w = tgt.StrengthSeries([10, 3, 10])
    >>> w(2), w(3), w(10), w.final
    (0, 1, 3, 3)
    """
    def __init__(self, steps: Sequence[TimeInstant] = ()):
        self.steps = np.sort(np.asarray(steps, dtype=np.int64))

    def __call__(self, t: TimeInstant) -> int:
        return int(np.searchsorted(self.steps, t, side='right'))

    @property
    def final(self) -> int:
        return int(self.steps.size)

    def __repr__(self) -> str:
        return f'StrengthSeries(final={self.final})'


class InteractionGraph(TimeVaryingGraph):
    """
    Grafo de interação :math:`G_{cc}` (colaborações citadas).

    :term:`TVG` não direcionado sobre autores. Cada par de co-autores é uma relação presente a partir do primeiro
    artigo em comum e carrega uma :class:`StrengthSeries` :math:`w_i(t)`, incrementada na data de cada artigo que
    cita um artigo do par.

    Nos footprints o peso de uma aresta é a força no último instante da janela.

    Attributes
    ----------
    excluded_solo_citations : int
        Citações a artigos com menos de dois autores, que não geram incremento em nenhum par.
    """
    def __init__(self, lifetime: Tuple[TimeInstant, TimeInstant]):
        super().__init__(lifetime, directed=False)
        self._strengths: Dict[Relation, StrengthSeries] = {}
        self.excluded_solo_citations = 0

    def set_strength(self, relation: Relation, steps: Sequence[TimeInstant]):
        """Define os instantes de incremento da força de uma relação existente."""
        self._check_mutable()
        self.presence_intervals(relation)
        self._strengths[relation] = StrengthSeries(steps)

    def _series(self, relation: Relation) -> StrengthSeries:
        self.presence_intervals(relation)
        return self._strengths.get(relation) or StrengthSeries()

    def strength(self, relation: Relation, t: TimeInstant) -> int:
        """
        Força :math:`w_i(t)` de uma relação.

        Raises
        ------
        UnknownRelationError
            Se a relação não pertence ao grafo.
        """
        return self._series(relation)(t)

    def final_strength(self, relation: Relation) -> int:
        """Força ao final do tempo de vida."""
        return self._series(relation).final

    def _footprint_weight(self, relation: Relation, t1: TimeInstant, t2: TimeInstant) -> Optional[int]:
        return self.strength(relation, t2 - 1)

    def support_graph(self) -> StaticGraph:
        """Grafo estático com todas as relações e suas extremidades, pesadas pela força final."""
        graph = self.lifetime_footprint(node_scope='active')
        for relation in self.relations:
            graph.graph[relation.endpoint_a][relation.endpoint_b]['weight'] = self.final_strength(relation)
        return graph

    def filter_most_cited(self, threshold: int = DEFAULT_THRESHOLD) -> 'MostCitedSubgraph':
        """
        Subgrafo dos mais citados :math:`G_i`: relações com força final :math:`w_i \\geq` :paramref:`threshold`
        e suas extremidades.

        Raises
        ------
        ConfigurationError
            Se o limiar for negativo.
        """
        if threshold < 0:
            raise ConfigurationError(f'threshold must be non-negative, got {threshold}')
        keep = [r for r in self.relations if self.final_strength(r) >= threshold]
        subgraph = MostCitedSubgraph(self.lifetime, threshold)
        self._restrict_into(subgraph, keep)
        subgraph.excluded_solo_citations = self.excluded_solo_citations
        logger.info(f'most cited subgraph (w >= {threshold}): {len(subgraph.entities)} nodes, {len(keep)} edges')
        return subgraph

    def _copy_relation(self, target: TimeVaryingGraph, relation: Relation):
        super()._copy_relation(target, relation)
        if isinstance(target, InteractionGraph) and relation in self._strengths:
            target._strengths[relation] = self._strengths[relation]

    def _empty_like(self) -> 'InteractionGraph':
        copy = InteractionGraph(self.lifetime)
        copy.excluded_solo_citations = self.excluded_solo_citations
        return copy


class MostCitedSubgraph(InteractionGraph):
    """
    Subgrafo :math:`G_i` de um :class:`InteractionGraph`, obtido com :meth:`InteractionGraph.filter_most_cited`.

    Attributes
    ----------
    threshold : int
        Limiar de força usado no filtro.
    """
    def __init__(self, lifetime: Tuple[TimeInstant, TimeInstant], threshold: int = DEFAULT_THRESHOLD):
        super().__init__(lifetime)
        self.threshold = threshold

    def _empty_like(self) -> 'MostCitedSubgraph':
        copy = MostCitedSubgraph(self.lifetime, self.threshold)
        copy.excluded_solo_citations = self.excluded_solo_citations
        return copy


class InteractionTransform(BaseNetworkTransform):
    """
    Constrói o :class:`InteractionGraph` de um :term:`Corpus`.

    Para cada artigo citante :math:`c` que referencia :math:`q` e cada par de autores :math:`(u, v)` de :math:`q`,
    :math:`w_{(u,v)}` é incrementada na data de submissão de :math:`c`. Citações anteriores ao primeiro artigo do
    par contam a partir do início de sua presença, logo :math:`w_i(t) > 0` implica presença em :math:`t`.

    Examples
    --------
    >>> corpus = tgt.Corpus.from_records([
    ...     tgt.PaperRecord('q', 0, ('A', 'B')),
    ...     tgt.PaperRecord('c1', 5, ('C',), ('q',)),
    ...     tgt.PaperRecord('c2', 7, ('D',), ('q',)),
    ... ])
    >>> g = tgt.InteractionTransform.get_graph(corpus)
    >>> [g.final_strength(r) for r in g.relations]
    [2]
    """
    name = 'interaction graph'

    @classmethod
    def get_graph(cls, corpus: Corpus) -> InteractionGraph:
        graph = InteractionGraph(corpus.lifetime)
        for key, name in corpus.authors.items():
            graph.add_entity(key, name)

        relations: Dict[Tuple[str, str], Relation] = {}
        starts: Dict[Tuple[str, str], TimeInstant] = {}
        for pair, (first, _) in TemporalCoauthorshipTransform.joint_papers(corpus).items():
            relations[pair] = graph.add_presence(pair[0], pair[1], first, FOREVER)
            starts[pair] = first

        steps: Dict[Relation, List[TimeInstant]] = {r: [] for r in relations.values()}
        for citing_id, citing in corpus.papers.items():
            for cited_id in corpus.resolved_references(citing_id):
                pairs = list(cls.author_pairs(corpus.papers[cited_id]))
                if not pairs:
                    graph.excluded_solo_citations += 1
                for pair in pairs:
                    steps[relations[pair]].append(max(citing.submission_date, starts[pair]))

        for relation, times in steps.items():
            graph.set_strength(relation, times)
        graph.freeze()
        if graph.excluded_solo_citations:
            logger.info(f'{graph.excluded_solo_citations} citations to single-author papers add no strength')
        cls.log_graph(graph)
        return graph


def filter_most_cited(graph: InteractionGraph, threshold: int = DEFAULT_THRESHOLD) -> MostCitedSubgraph:
    """Atalho para :meth:`InteractionGraph.filter_most_cited`."""
    return graph.filter_most_cited(threshold)


def total_strength(graph: InteractionGraph, relations: Optional[Iterable[Relation]] = None) -> int:
    """Soma das forças finais das relações (todas, por padrão)."""
    return sum(graph.final_strength(r) for r in (graph.relations if relations is None else relations))

