import math
from datetime import date
from typing import List, NamedTuple, Tuple, Union, Optional

import numpy as np
import pandas as pd

from ..exceptions import ConfigurationError, InvalidWindowError

FOREVER = math.inf
"""Sentinela de fim de presença :math:`t_b = \\infty`."""

TimeInstant = int
DateLike = Union[str, date, np.datetime64, pd.Timestamp]


class Window(NamedTuple):
    """Comprimento de janela, em meses de calendário (``'month'``) ou em dias (``'day'``)."""
    unit: str
    size: int


class TimeUtils:
    """
    Classe utilitária para manipulação do tempo discreto.

    O tempo é discreto com granularidade de um dia: um :term:`Instante` é o número de dias desde 1970-01-01. As
    janelas são sempre semiabertas, :math:`[t_1, t_2)`.
    """

    @staticmethod
    def to_instant(value: Union[DateLike, int]) -> TimeInstant:
        """
        Converte uma data para :term:`Instante` (dias desde 1970-01-01).

        Parameters
        ----------
        value : str | datetime.date | numpy.datetime64 | pandas.Timestamp | int
            Data a ser convertida. Inteiros são considerados já convertidos.

        Returns
        -------
        int
            Índice do dia.

        Raises
        ------
        ValueError
            Se o valor não puder ser interpretado como data.

        Examples
        --------
        >>> tgt.TimeUtils.to_instant('1992-03-01')
        8095
        """
        if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
            return int(value)
        try:
            day = np.datetime64(pd.Timestamp(value).date(), 'D')
        except (ValueError, TypeError) as e:
            raise ValueError(f'{value!r} is not a valid date') from e
        return int(day.astype(np.int64))

    @staticmethod
    def to_date(instant: TimeInstant) -> date:
        """Converte um :term:`Instante` de volta para :class:`datetime.date`."""
        return np.datetime64(int(instant), 'D').astype(date)

    @staticmethod
    def to_iso(instant: TimeInstant) -> str:
        """Data ISO (``YYYY-MM-DD``) de um :term:`Instante`."""
        return str(np.datetime64(int(instant), 'D'))

    @staticmethod
    def parse_window(spec: Union[str, int, Window]) -> Window:
        """
        Interpreta uma especificação de janela.

        Aceita ``'Ny'`` (anos), ``'Nm'`` (meses), ``'Nd'`` ou apenas ``'N'`` (dias).

        Raises
        ------
        ConfigurationError
            Se a especificação for inválida ou o comprimento não for positivo.

        Examples
        --------
        >>> tgt.TimeUtils.parse_window('1y')
        Window(unit='month', size=12)
        >>> tgt.TimeUtils.parse_window('6m')
        Window(unit='month', size=6)
        """
        if isinstance(spec, Window):
            window = spec
        elif isinstance(spec, int):
            window = Window('day', spec)
        else:
            text = str(spec).strip().lower()
            units = {'y': ('month', 12), 'm': ('month', 1), 'd': ('day', 1)}
            unit, factor = units.get(text[-1:], ('day', 1)) if text else ('day', 1)
            digits = text[:-1] if text[-1:] in units else text
            if not digits.isdigit():
                raise ConfigurationError(f'{spec!r} is not a valid window, use e.g. 1y, 6m or 30d')
            window = Window(unit, int(digits) * factor)

        if window.size <= 0:
            raise ConfigurationError(f'window length must be positive, got {spec!r}')
        return window

    @classmethod
    def partition(cls, lifetime: Tuple[TimeInstant, TimeInstant], window: Union[str, int, Window]) -> List[TimeInstant]:
        """
        Gera os cortes de uma partição do tempo de vida.

        Janelas em meses são alinhadas ao calendário: janelas anuais começam em 1º de janeiro, semestrais em 1º de
        janeiro e 1º de julho, e assim por diante. A primeira e a última janela podem ser parciais.

        Parameters
        ----------
        lifetime : tuple[int, int]
            Tempo de vida :math:`[t_{min}, t_{max})`.
        window : str | int | Window
            Comprimento da janela, ver :meth:`parse_window`.

        Returns
        -------
        list[int]
            Cortes estritamente crescentes, o primeiro igual a :math:`t_{min}` e o último a :math:`t_{max}`.

        Examples
        --------
        >>> lifetime = (tgt.TimeUtils.to_instant('1992-01-01'), tgt.TimeUtils.to_instant('2003-06-01'))
        >>> len(tgt.TimeUtils.partition(lifetime, '1y')) - 1
        12
        """
        start, end = lifetime
        if start >= end:
            raise InvalidWindowError(f'empty lifetime [{start}, {end})')
        w = cls.parse_window(window)

        if w.unit == 'day':
            return list(range(start, end, w.size)) + [end]

        month_starts = pd.date_range(cls.to_date(start), cls.to_date(end), freq='MS')
        inner = [
            cls.to_instant(d) for d in month_starts
            if (d.year * 12 + d.month - 1) % w.size == 0
        ]
        return [start] + [t for t in inner if start < t < end] + [end]

    @classmethod
    def windows(cls, cuts: List[TimeInstant]) -> List[Tuple[TimeInstant, TimeInstant]]:
        """Pares consecutivos :math:`[t_k, t_{k+1})` de uma lista de cortes."""
        return list(zip(cuts[:-1], cuts[1:]))

    @classmethod
    def window_label(cls, start: TimeInstant, window: Union[str, int, Window]) -> str:
        """
        Rótulo de uma janela, derivado de seu início.

        Janelas anuais usam o ano (``'1999'``), janelas em meses usam ano e mês (``'1999-07'``) e janelas em dias a
        data completa.
        """
        w = cls.parse_window(window)
        day = cls.to_date(start)
        if w.unit == 'month' and w.size % 12 == 0:
            return day.strftime('%Y')
        if w.unit == 'month':
            return day.strftime('%Y-%m')
        return day.isoformat()

    @classmethod
    def snapshot_cuts(
            cls,
            lifetime: Tuple[TimeInstant, TimeInstant],
            step: Union[str, int, Window],
            start: Optional[Union[DateLike, int]] = None,
    ) -> List[TimeInstant]:
        """
        Datas de fotografia de um grafo cumulativo.

        A primeira fotografia ocorre em :paramref:`start` (por padrão, um passo após o início do tempo de vida) e as
        seguintes a cada :paramref:`step`, sem ultrapassar o fim do tempo de vida.
        """
        lo, hi = lifetime
        w = cls.parse_window(step)
        if w.unit == 'day':
            first = lo + w.size if start is None else cls.to_instant(start)
            return [t for t in range(first, hi + 1, w.size) if t > lo]

        offset = pd.DateOffset(months=w.size)
        first_date = pd.Timestamp(cls.to_date(lo)) + offset if start is None else pd.Timestamp(cls.to_date(cls.to_instant(start)))
        cuts = pd.date_range(first_date, pd.Timestamp(cls.to_date(hi)), freq=offset)
        return [cls.to_instant(d) for d in cuts if cls.to_instant(d) > lo]

    @classmethod
    def snapshot_label(cls, instant: TimeInstant) -> str:
        """Rótulo de fotografia no formato ``'April 00'``."""
        return cls.to_date(instant).strftime('%B %y')
