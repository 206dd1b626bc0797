import logging
import os
from abc import abstractmethod
from typing import List, Optional

from ..corpus import Corpus, IngestReport
from ...exceptions import ConfigurationError, CorpusFormatError

logger = logging.getLogger(__name__)


class BaseCorpusReader:
    """
        Classe base para leitores de :term:`Corpus`.

        Leitores de formatos de entrada devem ser subclasses desta classe e implementar o método :meth:`get_corpus`,
        que retorna um :class:`Corpus` acompanhado de seu :class:`IngestReport`.

        Os leitores operam em dois modos. No modo tolerante (padrão) linhas mal formadas são contadas em
        ``malformed_lines`` e descartadas; no modo estrito a primeira linha mal formada levanta
        :class:`CorpusFormatError` com o número da linha.
    """
    report_keys: List[str] = [
        'malformed_lines', 'papers_quarantined', 'dangling_references', 'self_references',
    ]

    @classmethod
    @abstractmethod
    def get_corpus(cls, *args, **kwargs) -> Corpus:
        """
        Método abstrato :func:`abc.abstractmethod` para obtenção de um :class:`Corpus`.
        """
        raise NotImplementedError('get_corpus must be implemented in a subclass')

    @classmethod
    def check_path(cls, path: Optional[str], what: str) -> str:
        """
        Confere se um arquivo (ou pasta) obrigatório existe.

        Raises
        ------
        ConfigurationError
            Se o caminho não foi informado ou não existe.
        """
        if not path:
            raise ConfigurationError(f'the {what} path is mandatory')
        if not os.path.exists(path):
            raise ConfigurationError(f'{what} {path} does not exist')
        return path

    @classmethod
    def line_error(
            cls,
            report: IngestReport,
            strict: bool,
            message: str,
            source: Optional[str] = None,
            line_number: Optional[int] = None,
    ):
        """Registra uma linha mal formada, ou levanta :class:`CorpusFormatError` no modo estrito."""
        error = CorpusFormatError(message, source, line_number)
        if strict:
            raise error
        report.increment('malformed_lines')
        report.record_error(str(error))
        logger.debug(str(error))

    @classmethod
    def finish(cls, corpus: Corpus) -> Corpus:
        """Registra o resumo da ingestão."""
        corpus.report.log_warnings(cls.report_keys)
        logger.info(
            f'corpus loaded: {corpus.report["papers"]} papers, {corpus.report["citations"]} citations, '
            f'{corpus.report["distinct_authors"]} authors'
        )
        return corpus
