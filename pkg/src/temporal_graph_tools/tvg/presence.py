from typing import Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np

from ..exceptions import InvalidPresenceError
from ..utils.timeline import FOREVER, TimeInstant

Bound = Union[int, float]


class PresenceIntervalSet:
    """
    Suporte da :term:`Função de Presença` de uma relação.

    Guarda uma lista ordenada de intervalos semiabertos :math:`[s, e)` disjuntos, onde :math:`e` pode ser
    :data:`FOREVER` (:math:`t_b = \\infty`). Intervalos sobrepostos ou adjacentes são unidos na construção.

    Parameters
    ----------
    intervals : Iterable[tuple[int, int | float]]
        Intervalos :math:`[s, e)` com :math:`s < e`.

    Raises
    ------
    InvalidPresenceError
        Se nenhum intervalo for informado ou algum intervalo for vazio.

    Examples
    --------
    >>> p = tgt.PresenceIntervalSet([(2, 4), (7, 9)])
    >>> p.contains(4)
    False
    >>> p.next_presence(5)
    7
    """
    def __init__(self, intervals: Iterable[Tuple[int, Bound]]):
        merged: List[Tuple[int, Bound]] = []
        for start, end in sorted((int(s), e if e == FOREVER else int(e)) for s, e in intervals):
            if not start < end:
                raise InvalidPresenceError(f'empty presence interval [{start}, {end})')
            if merged and start <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], end))
            else:
                merged.append((start, end))
        if not merged:
            raise InvalidPresenceError('a presence set needs at least one interval')

        self.intervals: Tuple[Tuple[int, Bound], ...] = tuple(merged)
        self._starts = np.array([s for s, _ in merged], dtype=float)
        self._ends = np.array([e for _, e in merged], dtype=float)

    @property
    def start(self) -> TimeInstant:
        """Primeiro instante de presença."""
        return self.intervals[0][0]

    @property
    def end(self) -> Bound:
        """Fim (exclusivo) do último intervalo, possivelmente :data:`FOREVER`."""
        return self.intervals[-1][1]

    def contains(self, t: TimeInstant) -> bool:
        """Verdadeiro se :math:`t` pertence a algum intervalo."""
        idx = int(np.searchsorted(self._starts, t, side='right')) - 1
        return idx >= 0 and t < self._ends[idx]

    def overlaps(self, t1: TimeInstant, t2: TimeInstant, horizon: Bound = FOREVER) -> bool:
        """
        Verdadeiro se existe :math:`t \\in [t_1, t_2)` de presença.

        :paramref:`horizon` limita intervalos abertos (fim :data:`FOREVER`) ao fim do tempo de vida.
        """
        if horizon <= t1:
            return False
        idx = int(np.searchsorted(self._ends, t1, side='right'))
        return idx < len(self.intervals) and self._starts[idx] < min(t2, horizon)

    def next_presence(self, t: TimeInstant, horizon: Bound = FOREVER) -> Optional[TimeInstant]:
        """
        Primeiro instante :math:`t' \\geq t` de presença, anterior a :paramref:`horizon`, ou ``None``.
        """
        idx = int(np.searchsorted(self._ends, t, side='right'))
        if idx >= len(self.intervals):
            return None
        candidate = max(self.intervals[idx][0], t)
        return candidate if candidate < horizon else None

    def union(self, other: 'PresenceIntervalSet') -> 'PresenceIntervalSet':
        """Nova :class:`PresenceIntervalSet` com os intervalos de ambas."""
        return PresenceIntervalSet(self.intervals + other.intervals)

    def __iter__(self) -> Iterator[Tuple[int, Bound]]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PresenceIntervalSet) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        return f'PresenceIntervalSet({list(self.intervals)})'
