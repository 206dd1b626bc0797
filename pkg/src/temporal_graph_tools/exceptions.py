from typing import Optional


class TemporalGraphError(Exception):
    """Classe base das exceções levantadas pela biblioteca."""


class InvalidWindowError(TemporalGraphError, ValueError):
    """Janela temporal :math:`[t_1, t_2)` vazia ou invertida."""


class InvalidPartitionError(TemporalGraphError, ValueError):
    """Partição do tempo de vida com menos de dois cortes ou cortes fora de ordem."""


class InvalidJourneyError(TemporalGraphError, ValueError):
    """Sequência de passos que não respeita as condições de :term:`Jornada`."""


class InvalidPresenceError(TemporalGraphError, ValueError):
    """Intervalo de presença vazio ou fora do tempo de vida do :term:`TVG`."""


class FrozenGraphError(TemporalGraphError, ValueError):
    """Tentativa de alterar um :term:`TVG` já congelado."""


class UnknownRelationError(TemporalGraphError, KeyError):
    """Relação inexistente no :term:`TVG`."""


class UnknownEntityError(TemporalGraphError, KeyError):
    """Entidade inexistente no :term:`TVG`."""


class UnknownPaperError(TemporalGraphError, KeyError):
    """Identificador de artigo ausente do :term:`Corpus`."""


class ConfigurationError(TemporalGraphError, ValueError):
    """Configuração inválida ou incompleta."""


class UndefinedMetricError(TemporalGraphError, ValueError):
    """A métrica não é definida para o grafo recebido (ex: grafo vazio, :math:`v < 3`)."""


class CorpusFormatError(TemporalGraphError, ValueError):
    """
    Linha mal formada em um arquivo de entrada do :term:`Corpus`.

    Parameters
    ----------
    message : str
        Descrição do problema.
    source : str, optional
        Nome do arquivo ou fluxo de origem.
    line_number : int, optional
        Número da linha (a partir de 1) onde o problema ocorreu.
    """
    def __init__(self, message: str, source: Optional[str] = None, line_number: Optional[int] = None):
        self.source = source
        self.line_number = line_number
        location = ''
        if source is not None:
            location += f'{source}:'
        if line_number is not None:
            location += f'{line_number}:'
        super().__init__(f'{location} {message}' if location else message)


__all__ = [
    "TemporalGraphError",
    "InvalidWindowError",
    "InvalidPartitionError",
    "InvalidJourneyError",
    "InvalidPresenceError",
    "FrozenGraphError",
    "UnknownRelationError",
    "UnknownEntityError",
    "UnknownPaperError",
    "ConfigurationError",
    "UndefinedMetricError",
    "CorpusFormatError",
]
