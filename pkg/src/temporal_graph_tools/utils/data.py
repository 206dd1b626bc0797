from typing import Sequence, Tuple

import numpy as np
import pandas as pd


class DataUtils:
    """
    Classe utilitária para manipulação de dados numéricos.

    Aqui são implementados métodos auxiliares sobre :class:`numpy.ndarray` e :class:`pandas.Series` utilizados pelas
    métricas e relatórios.
    """

    @staticmethod
    def truncate(value: float, decimals: int) -> float:
        """
        Trunca (não arredonda) um valor na precisão informada.

        Os indicadores da tabela de comunidade são impressos truncados, ex: :math:`\\alpha = 0.016826` aparece como
        ``0,016`` e :math:`\\gamma = 54.2857` como ``54,28``.

        Parameters
        ----------
        value : float
            Valor a ser truncado.
        decimals : int
            Quantidade de casas decimais mantidas.

        Returns
        -------
        float
            Valor truncado.

        Examples
        --------
        >>> tgt.DataUtils.truncate(100 / 66, 2)
        1.51
        """
        scale = 10 ** decimals
        # round first so that 0.29 * 100 = 28.999999999999996 still truncates to 29
        return float(np.trunc(np.round(value * scale, 9)) / scale)

    @staticmethod
    def loglog_slope(x: Sequence[float], y: Sequence[float]) -> float:
        """
        Inclinação da reta de mínimos quadrados de :math:`\\log y` contra :math:`\\log x`.

        Parameters
        ----------
        x, y : Sequence[float]
            Valores estritamente positivos, de mesmo tamanho.

        Returns
        -------
        float
            Coeficiente angular obtido com :func:`numpy.polyfit`.
        """
        slope, _ = np.polyfit(np.log(np.asarray(x, dtype=float)), np.log(np.asarray(y, dtype=float)), 1)
        return float(slope)

    @staticmethod
    def max_abs_step(series: pd.Series) -> Tuple[int, int, float]:
        """
        Maior variação absoluta entre pontos definidos consecutivos.

        Valores indefinidos (``NaN``) são ignorados; em caso de empate a primeira variação é retornada.

        Returns
        -------
        tuple[int, int, float]
            Posições (no índice original) dos pontos antes e depois da variação, e a diferença assinada.
        """
        values = series.to_numpy(dtype=float)
        positions = np.flatnonzero(~np.isnan(values))
        steps = np.diff(values[positions])
        best = int(np.argmax(np.abs(steps)))
        return int(positions[best]), int(positions[best + 1]), float(steps[best])
