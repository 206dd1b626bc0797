import logging
import os
from typing import Dict, Iterable, List, Optional

from .base import BaseCorpusReader
from ..authors import AuthorUtils
from ..corpus import Corpus, IngestReport, PaperRecord
from ...utils.timeline import TimeUtils

logger = logging.getLogger(__name__)


class CanonicalCorpusReader(BaseCorpusReader):
    """
    Leitor do formato canônico de registros.

    Um artigo por linha, campos separados por tabulação::

        paper_id<TAB>YYYY-MM-DD<TAB>autor;autor;...<TAB>ref,ref,...

    A lista de referências pode ser vazia ou ausente. Linhas vazias e linhas iniciadas por ``#`` são ignoradas.
    """

    @classmethod
    def get_corpus(cls, path: str, strict: bool = False) -> Corpus:
        """
        Lê um arquivo de registros canônicos.

        Parameters
        ----------
        path : str
            Caminho do arquivo UTF-8.
        strict : bool, optional
            Levanta :class:`CorpusFormatError` na primeira linha mal formada.

        Returns
        -------
        Corpus
            :term:`Corpus` com relatório de ingestão.

        Raises
        ------
        ConfigurationError
            Se o arquivo não existe.
        """
        cls.check_path(path, 'records file')
        with open(path, encoding='utf-8') as stream:
            return cls.parse_records(stream, strict=strict, source=path)

    @classmethod
    def parse_records(cls, stream: Iterable[str], strict: bool = False, source: Optional[str] = None) -> Corpus:
        """Lê registros canônicos de um fluxo de texto, ver :meth:`get_corpus`."""
        report = IngestReport()
        records: Dict[str, PaperRecord] = {}
        quarantined: Dict[str, str] = {}

        for line_number, line in enumerate(stream, start=1):
            line = line.rstrip('\r\n')
            if not line.strip() or line.startswith('#'):
                continue
            fields = line.split('\t')
            if len(fields) not in (3, 4) or not fields[0].strip():
                cls.line_error(report, strict, f'expected 3 or 4 tab separated fields, got {len(fields)}', source, line_number)
                continue

            paper_id = fields[0].strip()
            try:
                date = TimeUtils.to_instant(fields[1].strip())
            except ValueError:
                cls.line_error(report, strict, f'{fields[1]!r} is not a valid date', source, line_number)
                continue
            if paper_id in records or paper_id in quarantined:
                report.increment('duplicate_papers')
                logger.debug(f'{source}:{line_number}: paper {paper_id} repeated, keeping the first record')
                continue

            authors = AuthorUtils.split_canonical(fields[2])
            if not authors:
                quarantined[paper_id] = 'missing_authors'
                report.increment('missing_authors')
                continue
            references = cls.clean_references(paper_id, fields[3].split(',') if len(fields) == 4 else [], report)
            records[paper_id] = PaperRecord(paper_id, date, tuple(authors), tuple(references))

        return cls.finish(Corpus.from_records(records.values(), report, quarantined))

    @staticmethod
    def clean_references(paper_id: str, references: Iterable[str], report: IngestReport) -> List[str]:
        """Remove referências vazias, repetidas e autocitações, mantendo a ordem."""
        cleaned: List[str] = []
        for reference in (r.strip() for r in references):
            if not reference:
                continue
            if reference == paper_id:
                report.increment('self_references')
            elif reference in cleaned:
                report.increment('duplicate_references')
            else:
                cleaned.append(reference)
        return cleaned

    @staticmethod
    def format_record(record: PaperRecord) -> str:
        """Linha canônica (sem quebra de linha) de um registro."""
        return '\t'.join([
            record.paper_id,
            TimeUtils.to_iso(record.submission_date),
            ';'.join(record.authors),
            ','.join(record.references),
        ])

    @classmethod
    def write_corpus(cls, corpus: Corpus, path: str) -> str:
        """
        Grava um :class:`Corpus` no formato canônico.

        Reler o arquivo com :meth:`get_corpus` produz um :class:`Corpus` igual ao original.
        """
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as out:
            for record in corpus.papers.values():
                out.write(cls.format_record(record) + '\n')
        logger.info(f'{len(corpus)} records written to {path}')
        return path
