import heapq
import itertools
import logging
from typing import Dict, Hashable, List, NamedTuple, Optional, Sequence, Tuple

from .relation import Relation, sort_key
from .tvg import TimeVaryingGraph
from ..exceptions import InvalidJourneyError, UnknownEntityError
from ..utils.timeline import TimeInstant

logger = logging.getLogger(__name__)


class JourneyStep(NamedTuple):
    """Passo :math:`(e_i, t_i)` de uma :term:`Jornada`, com o sentido de travessia."""
    relation: Relation
    time: TimeInstant
    tail: Hashable
    head: Hashable


class Journey:
    """
    :term:`Jornada` :math:`\\mathcal{J} = \\{(e_1, t_1), \\dots, (e_k, t_k)\\}` em um :term:`TVG`.

    Uma jornada é um percurso no tempo: :math:`\\{e_1, \\dots, e_k\\}` forma um caminho (*walk*) no grafo,
    :math:`\\rho(e_i, t_i) = 1` para todo passo e :math:`t_{i+1} \\geq t_i`. A espera nos nós é permitida e a
    travessia de uma relação é instantânea.

    A validade é verificada na construção.

    Parameters
    ----------
    tvg : TimeVaryingGraph
        Grafo no qual a jornada ocorre.
    steps : Sequence[tuple[Relation, int]]
        Passos :math:`(e_i, t_i)`.
    origin : Hashable, optional
        Nó de partida. Obrigatório apenas para desambiguar o sentido do primeiro passo em grafos não direcionados.

    Raises
    ------
    InvalidJourneyError
        Se a lista de passos for vazia, não formar um caminho, tiver um passo ausente ou tempos decrescentes.

    Examples
    --------
    >>> j = tgt.Journey(tvg, [(ab, 2), (bc, 5), (cd, 9)])
    >>> j.topological_length, j.temporal_length
    (3, 7)
    """
    def __init__(self, tvg: TimeVaryingGraph, steps: Sequence[Tuple[Relation, TimeInstant]], origin: Hashable = None):
        if not steps:
            raise InvalidJourneyError('a journey needs at least one step, use Journey.empty for the trivial journey')

        for (_, t_prev), (_, t_next) in zip(steps[:-1], steps[1:]):
            if t_next < t_prev:
                raise InvalidJourneyError(f'step times must be non-decreasing, got {t_prev} then {t_next}')
        for relation, t in steps:
            if not tvg.presence(relation, t):
                raise InvalidJourneyError(f'{relation} is not present at {t}')

        oriented = self._orient(tvg, steps, origin)
        if oriented is None:
            raise InvalidJourneyError('the relations of the journey do not form a walk')

        self.tvg = tvg
        self.steps: List[JourneyStep] = oriented
        self.origin: Hashable = oriented[0].tail
        self._at: Optional[TimeInstant] = None

    @classmethod
    def empty(cls, origin: Hashable, at: TimeInstant) -> 'Journey':
        """
        Jornada trivial de um nó para ele mesmo.

        Por convenção sua chegada é o instante :paramref:`at` e seu comprimento topológico é 0.
        """
        journey = cls.__new__(cls)
        journey.tvg = None  # type: ignore[assignment]
        journey.steps = []
        journey.origin = origin
        journey._at = at
        return journey

    @staticmethod
    def _orient(
            tvg: TimeVaryingGraph,
            steps: Sequence[Tuple[Relation, TimeInstant]],
            origin: Hashable,
    ) -> Optional[List[JourneyStep]]:
        first = steps[0][0]
        if origin is not None:
            candidates = [origin] if origin in first.endpoints else []
        elif tvg.directed:
            candidates = [first.endpoint_a]
        else:
            candidates = sorted(set(first.endpoints), key=sort_key)

        for start in candidates:
            if tvg.directed and start != first.endpoint_a:
                continue
            oriented: List[JourneyStep] = []
            current = start
            for relation, t in steps:
                if tvg.directed:
                    if relation.endpoint_a != current:
                        break
                    head = relation.endpoint_b
                elif current in relation.endpoints:
                    head = relation.other(current)
                else:
                    break
                oriented.append(JourneyStep(relation, t, current, head))
                current = head
            else:
                return oriented
        return None

    @property
    def destination(self) -> Hashable:
        return self.steps[-1].head if self.steps else self.origin

    @property
    def nodes(self) -> List[Hashable]:
        """Nós visitados, da origem ao destino."""
        return [self.origin] + [s.head for s in self.steps]

    @property
    def departure(self) -> TimeInstant:
        """:math:`departure(\\mathcal{J}) = t_1`."""
        return self.steps[0].time if self.steps else self._at  # type: ignore[return-value]

    @property
    def arrival(self) -> TimeInstant:
        """:math:`arrival(\\mathcal{J}) = t_k`."""
        return self.steps[-1].time if self.steps else self._at  # type: ignore[return-value]

    @property
    def topological_length(self) -> int:
        """:math:`|\\mathcal{J}|`, quantidade de passos."""
        return len(self.steps)

    @property
    def temporal_length(self) -> int:
        """:math:`\\|\\mathcal{J}\\| = arrival - departure`."""
        return self.arrival - self.departure

    def __len__(self) -> int:
        return len(self.steps)

    def __repr__(self) -> str:
        path = ' -> '.join(str(n) for n in self.nodes)
        return f'Journey({path}, departure={self.departure}, arrival={self.arrival})'


class JourneyUtils:
    """
    Classe utilitária para cálculos sobre :term:`Jornada`.
    """

    @staticmethod
    def journey_lengths(journey: Journey) -> Tuple[int, int]:
        """
        Comprimentos topológico e temporal de uma jornada.

        Returns
        -------
        tuple[int, int]
            :math:`(k, t_k - t_1)`.

        Raises
        ------
        InvalidJourneyError
            Se a jornada for vazia.
        """
        if not journey.steps:
            raise InvalidJourneyError('an empty journey has no lengths')
        return journey.topological_length, journey.temporal_length

    @staticmethod
    def earliest_arrival_journey(
            tvg: TimeVaryingGraph,
            source: Hashable,
            target: Hashable,
            depart_after: TimeInstant,
    ) -> Optional[Journey]:
        """
        Jornada de chegada mais cedo de :paramref:`source` a :paramref:`target`.

        Busca do tipo Dijkstra sobre o instante de chegada: a partir de um nó alcançado em :math:`t`, cada relação
        é percorrida no primeiro instante :math:`t' \\geq t` em que está presente. Como a espera é permitida e a
        travessia é instantânea, a chegada mais cedo a cada nó é suficiente.

        Parameters
        ----------
        tvg : TimeVaryingGraph
            Grafo a ser percorrido.
        source, target : Hashable
            Entidades de origem e destino.
        depart_after : int
            Nenhum passo ocorre antes deste instante.

        Returns
        -------
        Journey | None
            A jornada, :meth:`Journey.empty` se origem e destino coincidem, ou ``None`` se o destino não é alcançável.

        Raises
        ------
        UnknownEntityError
            Se origem ou destino não pertencem ao grafo.
        """
        for entity in (source, target):
            if entity not in tvg:
                raise UnknownEntityError(f'{entity!r} is not an entity of the graph')
        if source == target:
            return Journey.empty(source, depart_after)

        best: Dict[Hashable, TimeInstant] = {source: depart_after}
        parent: Dict[Hashable, Tuple[Hashable, Relation, TimeInstant]] = {}
        counter = itertools.count()
        heap = [(depart_after, next(counter), source)]

        while heap:
            t, _, node = heapq.heappop(heap)
            if t > best[node]:
                continue
            if node == target:
                break
            for relation in tvg.outgoing(node):
                neighbour = relation.endpoint_b if tvg.directed else relation.other(node)
                t_next = tvg.next_presence(relation, t)
                if t_next is None:
                    continue
                if neighbour not in best or t_next < best[neighbour]:
                    best[neighbour] = t_next
                    parent[neighbour] = (node, relation, t_next)
                    heapq.heappush(heap, (t_next, next(counter), neighbour))

        if target not in best:
            logger.debug(f'{target!r} is not reachable from {source!r} after {depart_after}')
            return None

        steps: List[Tuple[Relation, TimeInstant]] = []
        node = target
        while node != source:
            previous, relation, t = parent[node]
            steps.append((relation, t))
            node = previous
        return Journey(tvg, steps[::-1], origin=source)
