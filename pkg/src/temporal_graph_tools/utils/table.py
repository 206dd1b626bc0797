import logging
import os
from typing import List, Union

import pandas as pd

logger = logging.getLogger(__name__)


class TableUtils:
    """
    Classe utilitária para a saída de tabelas.

    Aqui são implementados métodos para gravação e leitura das tabelas produzidas pelos relatórios (séries de
    métricas, tabela de comunidade, tendência de citações).

    Attributes
    ----------
    allowed_file_type : List[str]
        Tipos de arquivos de tabela permitidos e suportados: ``['csv', 'xlsx']``.
    """

    allowed_file_type = ['csv', 'xlsx']

    @classmethod
    def file_type(cls, path: str, save_as: Union[str, None] = None) -> str:
        """Tipo de arquivo informado ou inferido pela extensão de :paramref:`path`."""
        kind = save_as if save_as is not None else os.path.splitext(path)[-1].lstrip('.').lower()
        if kind not in cls.allowed_file_type:
            raise ValueError(f'{kind} is not an allowed file type')
        return kind

    @classmethod
    def write_table(cls, df: pd.DataFrame, path: str, save_as: Union[str, None] = None) -> str:
        """
        Grava um :class:`pandas.DataFrame` em CSV ou Excel.

        CSV é gravado em UTF-8, com cabeçalho, separador decimal ``.`` e aspas apenas quando necessário. Valores
        ``NaN`` são gravados como células vazias.

        Parameters
        ----------
        df : pandas.DataFrame
            Tabela a ser gravada, sem o índice.
        path : str
            Caminho do arquivo. Diretórios intermediários são criados.
        save_as : str, optional
            ``'csv'`` ou ``'xlsx'``; inferido pela extensão se omitido.

        Returns
        -------
        str
            Caminho do arquivo gravado.

        Raises
        ------
        ValueError
            Se o formato de arquivo não estiver entre os permitidos.
        """
        kind = cls.file_type(path, save_as)
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)

        if kind == 'csv':
            df.to_csv(path, index=False, encoding='utf-8', lineterminator='\n')
        else:
            df.to_excel(path, index=False)

        logger.info(f'Wrote {len(df)} rows to {path}')
        return path

    @classmethod
    def read_table(cls, path: str, fields: Union[List[str], None] = None) -> pd.DataFrame:
        """
        Lê uma tabela gravada por :meth:`write_table`, opcionalmente com **apenas** os campos especificados.
        """
        kind = cls.file_type(path)
        df = pd.read_csv(path, keep_default_na=True) if kind == 'csv' else pd.read_excel(path)
        if fields is not None:
            df = df[[f for f in fields if f in df.columns]]
        return df
