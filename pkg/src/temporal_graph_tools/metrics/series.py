from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .indicators import GraphMetrics
from ..tvg import StaticGraph
from ..utils.timeline import TimeInstant


class MetricSeries:
    """
    Série de uma métrica, um valor por janela de uma sequência de footprints.

    Valores indefinidos são ``nan`` e aparecem como ``defined=False`` em :meth:`to_frame`.

    Parameters
    ----------
    name : str
        Nome da métrica.
    values : pandas.Series
        Valores indexados pelo rótulo da janela.
    windows : list[tuple[int, int]], optional
        Janelas :math:`[t_k, t_{k+1})` correspondentes, na mesma ordem.

    Attributes
    ----------
    values : pandas.Series
        Valores (``float``) indexados pelo rótulo da janela.
    """
    columns = ['window', 'metric', 'value', 'defined']

    def __init__(self, name: str, values: pd.Series, windows: Optional[List[Tuple[TimeInstant, TimeInstant]]] = None):
        if windows is not None and len(windows) != len(values):
            raise ValueError(f'{len(values)} values for {len(windows)} windows')
        self.name = name
        self.values = values.astype(float).rename(name)
        self.windows = windows

    @property
    def labels(self) -> List[str]:
        return [str(label) for label in self.values.index]

    @property
    def defined(self) -> np.ndarray:
        return ~np.isnan(self.values.to_numpy())

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, position: int) -> float:
        return float(self.values.iloc[position])

    def to_frame(self) -> pd.DataFrame:
        """Tabela longa com as colunas ``window, metric, value, defined``."""
        return pd.DataFrame({
            'window': self.labels,
            'metric': self.name,
            'value': self.values.to_numpy(),
            'defined': self.defined,
        }, columns=self.columns)

    def __repr__(self) -> str:
        return f'MetricSeries({self.name!r}, windows={len(self)})'


def metric_series(
        footprints: Sequence[StaticGraph],
        metric: str,
        labels: Optional[Sequence[str]] = None,
        windows: Optional[List[Tuple[TimeInstant, TimeInstant]]] = None,
        seed: int = 0,
) -> MetricSeries:
    """
    Aplica uma métrica a cada footprint de uma sequência.

    Parameters
    ----------
    footprints : Sequence[StaticGraph]
        Sequência de footprints, não vazia.
    metric : str
        Nome de uma métrica de :attr:`GraphMetrics.registry`.
    labels : Sequence[str], optional
        Rótulos das janelas; por padrão as posições ``0, 1, ...``.
    windows : list[tuple[int, int]], optional
        Janelas de origem dos footprints.
    seed : int, optional
        Semente da detecção de comunidades.

    Raises
    ------
    ConfigurationError
        Se a métrica não é conhecida.
    ValueError
        Se a sequência é vazia ou os rótulos não correspondem aos footprints.

    Examples
    --------
    >>> k3 = tgt.StaticGraph(edges=[(0, 1), (1, 2), (2, 0)])
    >>> tgt.metric_series([k3, tgt.StaticGraph()], 'density').defined.tolist()
    [True, False]
    """
    if not footprints:
        raise ValueError('metric series need at least one footprint')
    labels = list(labels) if labels is not None else [str(i) for i in range(len(footprints))]
    if len(labels) != len(footprints):
        raise ValueError(f'{len(labels)} labels for {len(footprints)} footprints')
    values = [GraphMetrics.evaluate(metric, g, seed) for g in footprints]
    return MetricSeries(metric, pd.Series(values, index=pd.Index(labels, name='window'), dtype=float), windows)
