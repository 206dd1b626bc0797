import logging
import pprint
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .presence import Bound, PresenceIntervalSet
from .relation import Relation
from .static_graph import StaticGraph
from ..exceptions import (
    ConfigurationError,
    FrozenGraphError,
    InvalidPartitionError,
    InvalidPresenceError,
    InvalidWindowError,
    UnknownEntityError,
    UnknownRelationError,
)
from ..utils.timeline import FOREVER, TimeInstant, TimeUtils

logger = logging.getLogger(__name__)

NODE_SCOPES = ('all', 'active')


class TimeVaryingGraph:
    """
    Grafo variante no tempo (:term:`TVG`) :math:`\\mathcal{G} = (V, E, \\mathbb{T}, \\rho)`, sem função de latência.

    As entidades (:math:`V`) e as relações rotuladas (:math:`E`) são adicionadas em uma fase de construção. Cada
    relação carrega um :class:`PresenceIntervalSet`, suporte da :term:`Função de Presença` :math:`\\rho`, contido
    no tempo de vida :math:`\\mathbb{T} = [t_{min}, t_{max})`. Após :meth:`freeze` o grafo é imutável e todas as
    consultas podem ser feitas concorrentemente.

    Parameters
    ----------
    lifetime : tuple[int, int]
        Tempo de vida :math:`[t_{min}, t_{max})` em :term:`Instante` (dias).
    directed : bool, optional
        Se as relações são direcionadas.

    Attributes
    ----------
    lifetime : tuple[int, int]
        Tempo de vida do grafo.
    directed : bool
        Se as relações são direcionadas.
    view : TimeVaryingGraphView
        Utilizado para visualização de um resumo do grafo.

    Examples
    --------
    >>> tvg = tgt.TimeVaryingGraph((0, 10))
    >>> tvg.add_entity('a'); tvg.add_entity('b')
    >>> rel = tvg.add_presence('a', 'b', 5)
    >>> tvg.presence(rel, 5), tvg.presence(rel, 4)
    (True, False)
    >>> tvg.footprint(0, 5).number_of_edges
    0
    """
    def __init__(self, lifetime: Tuple[TimeInstant, TimeInstant], directed: bool = False):
        start, end = int(lifetime[0]), int(lifetime[1])
        if start >= end:
            raise InvalidWindowError(f'empty lifetime [{start}, {end})')
        self.lifetime = (start, end)
        self.directed = directed

        self._entities: Dict[Hashable, Optional[str]] = {}
        self._presence: Dict[Relation, PresenceIntervalSet] = {}
        self._adjacency: Dict[Hashable, List[Relation]] = {}
        self._frozen = False

        self.view: TimeVaryingGraphView = TimeVaryingGraphView(self)

    # construction

    def _check_mutable(self):
        if self._frozen:
            raise FrozenGraphError('the time-varying graph is frozen')

    def add_entity(self, entity: Hashable, name: Optional[str] = None):
        """Adiciona uma entidade (nó), com nome de exibição opcional. Repetições são ignoradas."""
        self._check_mutable()
        if entity not in self._entities:
            self._entities[entity] = name
            self._adjacency[entity] = []
        elif name is not None and self._entities[entity] is None:
            self._entities[entity] = name

    def add_presence(
            self,
            a: Hashable,
            b: Hashable,
            start: TimeInstant,
            end: Bound = FOREVER,
            label: Hashable = None,
    ) -> Relation:
        """
        Torna a relação :math:`(a, b, \\lambda)` presente em :math:`[start, end)`.

        A relação é criada se ainda não existir; caso contrário o intervalo é unido aos já existentes.

        Returns
        -------
        Relation
            A relação (em ordem canônica se o grafo não for direcionado).

        Raises
        ------
        UnknownEntityError
            Se alguma extremidade não foi adicionada com :meth:`add_entity`.
        InvalidPresenceError
            Se o intervalo for vazio ou sair do tempo de vida.
        """
        self._check_mutable()
        for entity in (a, b):
            if entity not in self._entities:
                raise UnknownEntityError(f'{entity!r} is not an entity of the graph')
        lo, hi = self.lifetime
        if start < lo or start >= hi or (end != FOREVER and end > hi):
            raise InvalidPresenceError(f'interval [{start}, {end}) is outside the lifetime [{lo}, {hi})')

        relation = Relation.of(a, b, label, directed=self.directed)
        interval = PresenceIntervalSet([(start, end)])
        if relation in self._presence:
            self._presence[relation] = self._presence[relation].union(interval)
        else:
            self._presence[relation] = interval
            self._adjacency[relation.endpoint_a].append(relation)
            if not self.directed and relation.endpoint_a != relation.endpoint_b:
                self._adjacency[relation.endpoint_b].append(relation)
        return relation

    def freeze(self) -> 'TimeVaryingGraph':
        """Encerra a fase de construção; alterações posteriores levantam :class:`FrozenGraphError`."""
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    # queries

    @property
    def entities(self) -> List[Hashable]:
        return list(self._entities)

    @property
    def relations(self) -> List[Relation]:
        return list(self._presence)

    def __contains__(self, entity: Hashable) -> bool:
        return entity in self._entities

    def entity_name(self, entity: Hashable) -> Optional[str]:
        """Nome de exibição de uma entidade."""
        if entity not in self._entities:
            raise UnknownEntityError(f'{entity!r} is not an entity of the graph')
        return self._entities[entity]

    def presence_intervals(self, relation: Relation) -> PresenceIntervalSet:
        """Intervalos de presença de uma relação."""
        try:
            return self._presence[relation]
        except KeyError:
            raise UnknownRelationError(f'{relation} is not a relation of the graph') from None

    def relations_between(self, a: Hashable, b: Hashable) -> List[Relation]:
        """Relações (de qualquer rótulo) entre :math:`a` e :math:`b`."""
        if a not in self._entities:
            raise UnknownEntityError(f'{a!r} is not an entity of the graph')
        return [
            r for r in self._adjacency[a]
            if (r.endpoint_a, r.endpoint_b) == (a, b) or (not self.directed and r.endpoints == (b, a))
        ]

    def outgoing(self, entity: Hashable) -> List[Relation]:
        """Relações que podem ser percorridas a partir de :paramref:`entity`."""
        if entity not in self._entities:
            raise UnknownEntityError(f'{entity!r} is not an entity of the graph')
        return list(self._adjacency[entity])

    def presence(self, relation: Relation, t: TimeInstant) -> bool:
        """
        :term:`Função de Presença` :math:`\\rho(e, t)`.

        Instantes fora do tempo de vida nunca são de presença.

        Raises
        ------
        UnknownRelationError
            Se a relação não pertence ao grafo.
        """
        intervals = self.presence_intervals(relation)
        lo, hi = self.lifetime
        return lo <= t < hi and intervals.contains(t)

    def next_presence(self, relation: Relation, t: TimeInstant) -> Optional[TimeInstant]:
        """Primeiro instante :math:`t' \\geq t` em que a relação está presente, dentro do tempo de vida."""
        return self.presence_intervals(relation).next_presence(max(t, self.lifetime[0]), horizon=self.lifetime[1])

    def first_seen(self, relation: Relation) -> TimeInstant:
        """Primeiro instante de presença de uma relação."""
        return self.presence_intervals(relation).start

    # footprints

    def _footprint_weight(self, relation: Relation, t1: TimeInstant, t2: TimeInstant) -> Optional[int]:
        """Peso da relação no footprint; ``None`` em um :term:`TVG` sem pesos."""
        return None

    def footprint(self, t1: TimeInstant, t2: TimeInstant, node_scope: str = 'all') -> StaticGraph:
        """
        :term:`Footprint` :math:`G^{[t_1, t_2)}`.

        Uma relação pertence ao footprint se e somente se existe :math:`t \\in [t_1, t_2)` com
        :math:`\\rho(e, t) = 1`. Intervalos abertos (:data:`FOREVER`) são limitados ao fim do tempo de vida.

        Parameters
        ----------
        t1, t2 : int
            Janela semiaberta :math:`[t_1, t_2)`.
        node_scope : str, optional
            ``'all'`` mantém todas as entidades (:math:`V` fixo); ``'active'`` mantém apenas as extremidades das
            relações da janela, necessário para densidade e grau por janela.

        Raises
        ------
        InvalidWindowError
            Se :math:`t_1 \\geq t_2`.
        """
        if t1 >= t2:
            raise InvalidWindowError(f'invalid window [{t1}, {t2})')
        if node_scope not in NODE_SCOPES:
            raise ConfigurationError(f'{node_scope} is not a node scope, must be one of {list(NODE_SCOPES)}')

        horizon = self.lifetime[1]
        present = [r for r, p in self._presence.items() if p.overlaps(t1, t2, horizon)]

        if node_scope == 'all':
            nodes: Iterable[Hashable] = self._entities
        else:
            active = {n for r in present for n in r.endpoints}
            nodes = [n for n in self._entities if n in active]

        static = StaticGraph(
            directed=self.directed,
            nodes=nodes,
            node_labels={n: name for n, name in self._entities.items() if name is not None},
        )
        for relation in present:
            static.add_edge(relation.endpoint_a, relation.endpoint_b, self._footprint_weight(relation, t1, t2))
        return static

    def footprint_sequence(self, cuts: Sequence[TimeInstant], node_scope: str = 'all') -> List[StaticGraph]:
        """
        Sequência de footprints :math:`SF(\\tau)` sobre cortes consecutivos.

        Parameters
        ----------
        cuts : Sequence[int]
            Cortes estritamente crescentes, ver :meth:`TimeUtils.partition`.

        Raises
        ------
        InvalidPartitionError
            Se houver menos de dois cortes ou eles não forem estritamente crescentes.
        """
        if len(cuts) < 2:
            raise InvalidPartitionError(f'a partition needs at least 2 cuts, got {len(cuts)}')
        if any(b <= a for a, b in zip(cuts[:-1], cuts[1:])):
            raise InvalidPartitionError(f'partition cuts must be strictly increasing: {list(cuts)}')
        return [self.footprint(t1, t2, node_scope=node_scope) for t1, t2 in TimeUtils.windows(list(cuts))]

    def lifetime_footprint(self, node_scope: str = 'all') -> StaticGraph:
        """Footprint sobre todo o tempo de vida."""
        return self.footprint(*self.lifetime, node_scope=node_scope)

    def restrict(self, relations: Iterable[Relation]) -> 'TimeVaryingGraph':
        """
        Novo :term:`TVG` com apenas as relações informadas e suas extremidades.

        Raises
        ------
        UnknownRelationError
            Se alguma relação não pertence ao grafo.
        """
        return self._restrict_into(self._empty_like(), relations)

    def _restrict_into(self, target: 'TimeVaryingGraph', relations: Iterable[Relation]) -> 'TimeVaryingGraph':
        keep = list(relations)
        endpoints = {n for r in keep for n in r.endpoints}
        for entity, name in self._entities.items():
            if entity in endpoints:
                target.add_entity(entity, name)
        for relation in keep:
            self._copy_relation(target, relation)
        return target.freeze()

    def _copy_relation(self, target: 'TimeVaryingGraph', relation: Relation):
        for start, end in self.presence_intervals(relation):
            target.add_presence(relation.endpoint_a, relation.endpoint_b, start, end, relation.label)

    def _empty_like(self) -> 'TimeVaryingGraph':
        return TimeVaryingGraph(self.lifetime, directed=self.directed)

    def __repr__(self) -> str:
        return f'{type(self).__name__}(entities={len(self._entities)}, relations={len(self._presence)})'


class TimeVaryingGraphView:
    """
    Classe utilizada pra visualização de dados de um objeto da classe :class:`TimeVaryingGraph`.

    Parameters
    ----------
    tvg : TimeVaryingGraph
        Um objeto da classe :class:`TimeVaryingGraph` para o qual deseja-se visualizar os dados.
    """
    def __init__(self, tvg: TimeVaryingGraph):
        self.tvg = tvg

    def get_summary_data(self) -> Dict[str, Any]:
        """Retorna contagens e tempo de vida do :term:`TVG` em um dicionário (:class:`dict`)."""
        lo, hi = self.tvg.lifetime
        return {
            'directed': self.tvg.directed,
            'entities': len(self.tvg.entities),
            'relations': len(self.tvg.relations),
            'lifetime': (TimeUtils.to_iso(lo), TimeUtils.to_iso(hi)),
        }

    def print_summary(self):
        """*Pretty Print* de :meth:`get_summary_data`."""
        pprint.pprint(self.get_summary_data(), sort_dicts=False)
