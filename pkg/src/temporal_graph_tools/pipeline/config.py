import logging
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

from ..corpus import INPUT_FORMATS, Corpus, load_corpus
from ..exceptions import ConfigurationError
from ..network import DEFAULT_THRESHOLD
from ..tvg.tvg import NODE_SCOPES
from ..utils.table import TableUtils
from ..utils.timeline import TimeUtils

logger = logging.getLogger(__name__)

_TRUE = {'1', 'true', 'yes', 'on'}
_FALSE = {'0', 'false', 'no', 'off'}


@dataclass
class AnalysisConfig:
    """
    Parâmetros de uma análise.

    Os valores padrão reproduzem o estudo da comunidade hep-th: janelas de um ano, limiar de força 150 e fotografias
    semestrais da maior comunidade.

    Parameters
    ----------
    input_format : str
        ``'canonical'`` ou ``'hep-th'``.
    records : str, optional
        Arquivo de registros canônicos.
    edges, dates : str, optional
        Arquivos de citações e de datas do leiaute hep-th.
    abstracts : str, optional
        Pasta de metadados ``*.abs`` do leiaute hep-th.
    window : str
        Comprimento das janelas de footprint (``1y``, ``6m``, ``30d``).
    threshold : int
        Limiar de força do subgrafo dos mais citados.
    seed : int
        Semente da detecção de comunidades.
    node_scope : str
        Escopo de nós dos footprints por janela (``'active'`` ou ``'all'``).
    output_dir : str
        Pasta de saída dos relatórios.
    snapshot_start : str, optional
        Data da primeira fotografia da tabela de comunidade.
    snapshot_step : str
        Intervalo entre fotografias.
    trend_bin : str
        Intervalo da tendência de citações.
    save_as : str
        Formato das tabelas (``'csv'`` ou ``'xlsx'``).
    strict : bool
        Interrompe a ingestão na primeira linha mal formada.
    """
    input_format: str = 'canonical'
    records: Optional[str] = None
    edges: Optional[str] = None
    dates: Optional[str] = None
    abstracts: Optional[str] = None
    window: str = '1y'
    threshold: int = DEFAULT_THRESHOLD
    seed: int = 0
    node_scope: str = 'active'
    output_dir: str = 'output'
    snapshot_start: Optional[str] = None
    snapshot_step: str = '6m'
    trend_bin: str = '6m'
    save_as: str = 'csv'
    strict: bool = False

    @classmethod
    def keys(cls):
        return [f.name for f in fields(cls)]

    @classmethod
    def parse_values(cls, raw: Dict[str, str]) -> Dict[str, Any]:
        """
        Converte valores texto para os tipos dos campos.

        Raises
        ------
        ConfigurationError
            Chave desconhecida ou valor que não pode ser convertido.
        """
        types = {f.name: f.type for f in fields(cls)}
        values: Dict[str, Any] = {}
        for key, text in raw.items():
            name = key.strip().replace('-', '_')
            if name not in types:
                raise ConfigurationError(f'{key} is not a configuration key, use one of {cls.keys()}')
            kind = types[name]
            if kind is int:
                try:
                    values[name] = int(text)
                except ValueError:
                    raise ConfigurationError(f'{key} must be an integer, got {text!r}') from None
            elif kind is bool:
                lowered = text.strip().lower()
                if lowered not in _TRUE | _FALSE:
                    raise ConfigurationError(f'{key} must be a boolean, got {text!r}')
                values[name] = lowered in _TRUE
            else:
                values[name] = text.strip() or None
        return values

    @classmethod
    def read_file(cls, path: str) -> Dict[str, Any]:
        """
        Lê um arquivo ``chave=valor``. Linhas vazias e iniciadas por ``#`` são ignoradas.

        Raises
        ------
        ConfigurationError
            Arquivo inexistente, linha sem ``=`` ou chave desconhecida.
        """
        raw: Dict[str, str] = {}
        try:
            with open(path, encoding='utf-8') as config_file:
                for line_number, line in enumerate(config_file, start=1):
                    text = line.strip()
                    if not text or text.startswith('#'):
                        continue
                    if '=' not in text:
                        raise ConfigurationError(f'{path}:{line_number}: expected key=value, got {text!r}')
                    key, value = text.split('=', 1)
                    raw[key.strip()] = value.strip()
        except OSError as e:
            raise ConfigurationError(f'cannot read configuration file {path}: {e}') from e
        return cls.parse_values(raw)

    @classmethod
    def from_file(cls, path: str, **overrides: Any) -> 'AnalysisConfig':
        """
        Configuração lida de um arquivo ``chave=valor``, com valores de :paramref:`overrides` prevalecendo.

        Examples
        --------
        >>> config = tgt.AnalysisConfig.from_file('analysis.cfg', threshold=10)
        """
        values = cls.read_file(path)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values).validate()

    def updated(self, **overrides: Any) -> 'AnalysisConfig':
        """Cópia validada com os valores não nulos de :paramref:`overrides`."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None}).validate()

    def validate(self) -> 'AnalysisConfig':
        """
        Confere os valores da configuração.

        Raises
        ------
        ConfigurationError
            Janela não positiva, limiar negativo, formato ou escopo desconhecido.
        """
        if self.input_format not in INPUT_FORMATS:
            raise ConfigurationError(f'{self.input_format} is not an allowed input format, use one of {INPUT_FORMATS}')
        for key in ('window', 'snapshot_step', 'trend_bin'):
            TimeUtils.parse_window(getattr(self, key))
        if self.threshold < 0:
            raise ConfigurationError(f'threshold must be non-negative, got {self.threshold}')
        if self.node_scope not in NODE_SCOPES:
            raise ConfigurationError(f'{self.node_scope} is not a node scope, use one of {list(NODE_SCOPES)}')
        if self.save_as not in TableUtils.allowed_file_type:
            raise ConfigurationError(f'{self.save_as} is not an allowed file type, use one of {TableUtils.allowed_file_type}')
        if self.snapshot_start is not None:
            try:
                TimeUtils.to_instant(self.snapshot_start)
            except ValueError as e:
                raise ConfigurationError(f'snapshot_start: {e}') from e
        return self

    def load_corpus(self) -> Corpus:
        """Carrega o :term:`Corpus` descrito pela configuração."""
        return load_corpus(self.input_format, self.records, self.edges, self.dates, self.abstracts, self.strict)
