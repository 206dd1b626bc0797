import glob
import logging
import os
import re
from collections import defaultdict
from typing import Dict, Iterable, List, NamedTuple, Optional, Set, Tuple

import pandas as pd

from .base import BaseCorpusReader
from .canonical import CanonicalCorpusReader
from ..authors import AuthorUtils
from ..corpus import Corpus, IngestReport, PaperRecord
from ...utils.timeline import TimeInstant, TimeUtils

logger = logging.getLogger(__name__)

_FIELD = re.compile(r'^([A-Za-z][A-Za-z-]*):\s*(.*)$')
_TRAILING_NOTE = re.compile(r'\s*\([^()]*\)\s*$')


class AbstractMetadata(NamedTuple):
    """Campos de um arquivo de metadados de artigo (``.abs``)."""
    paper_id: str
    authors_raw: Optional[str]
    submission_date: Optional[TimeInstant]


class HepThCorpusReader(BaseCorpusReader):
    """
    Leitor do leiaute público do conjunto hep-th.

    O conjunto é composto por três entradas:

    * arquivo de citações, ``# comentários`` e duas colunas ``citante citado``;
    * arquivo de datas, duas colunas ``paper_id YYYY-MM-DD``;
    * pasta (opcional) de metadados ``*.abs`` com os campos ``Paper:``, ``Date:`` e ``Authors:``.

    Identificadores são normalizados por :meth:`normalize_paper_id`. Artigos sem data no arquivo de datas recebem o
    primeiro dia do mês codificado no identificador (contados em ``dates_inferred``); artigos sem arquivo de
    metadados são mantidos sem autores (``papers_without_metadata``) e artigos cujo arquivo de metadados não tem
    autores válidos vão para quarentena.
    """
    report_keys = BaseCorpusReader.report_keys + [
        'duplicate_edges', 'duplicate_dates', 'missing_authors', 'unparsable_authors', 'missing_dates',
    ]

    @staticmethod
    def normalize_paper_id(raw: str) -> str:
        """
        Normaliza um identificador hep-th.

        Remove o prefixo de arquivo (``hep-th/``), o prefixo ``11`` de identificadores de listagem cruzada com nove
        dígitos e completa identificadores numéricos com zeros à esquerda até sete dígitos.

        Examples
        --------
        >>> tgt.HepThCorpusReader.normalize_paper_id('hep-th/9201001')
        '9201001'
        >>> tgt.HepThCorpusReader.normalize_paper_id('119203201')
        '9203201'
        >>> tgt.HepThCorpusReader.normalize_paper_id('1001')
        '0001001'
        """
        paper_id = raw.strip().rsplit('/', 1)[-1]
        if paper_id.isdigit():
            if len(paper_id) == 9 and paper_id.startswith('11'):
                paper_id = paper_id[2:]
            paper_id = paper_id.zfill(7)
        return paper_id

    @staticmethod
    def infer_date(paper_id: str) -> Optional[TimeInstant]:
        """
        Primeiro dia do mês codificado no identificador (``YYMMNNN``), ou ``None`` se não houver.

        Examples
        --------
        >>> tgt.TimeUtils.to_iso(tgt.HepThCorpusReader.infer_date('9203201'))
        '1992-03-01'
        """
        if len(paper_id) != 7 or not paper_id.isdigit():
            return None
        year, month = int(paper_id[:2]), int(paper_id[2:4])
        if not 1 <= month <= 12:
            return None
        year += 1900 if year >= 91 else 2000
        return TimeUtils.to_instant(f'{year:04d}-{month:02d}-01')

    @classmethod
    def parse_citation_edges(
            cls,
            stream: Iterable[str],
            report: Optional[IngestReport] = None,
            strict: bool = False,
            source: Optional[str] = '<edges>',
    ) -> List[Tuple[str, str]]:
        """
        Lê o arquivo de citações.

        Parameters
        ----------
        stream : Iterable[str]
            Linhas do arquivo.
        report : IngestReport, optional
            Relatório onde são contadas linhas repetidas (``duplicate_edges``) e mal formadas.
        strict : bool, optional
            Levanta :class:`CorpusFormatError` na primeira linha mal formada.
        source : str, optional
            Nome da origem usado nas mensagens de erro.

        Returns
        -------
        List[Tuple[str, str]]
            Pares ``(citante, citado)`` normalizados, em ordem de arquivo e sem repetição.

        Examples
        --------
        >>> tgt.HepThCorpusReader.parse_citation_edges(['# comment', '9907233 9301253'])
        [('9907233', '9301253')]
        """
        report = report if report is not None else IngestReport()
        edges: Dict[Tuple[str, str], None] = {}
        for line_number, line in enumerate(stream, start=1):
            text = line.strip()
            if not text or text.startswith('#'):
                continue
            fields = text.split()
            if len(fields) != 2:
                cls.line_error(report, strict, f'expected two ids, got {len(fields)} fields', source, line_number)
                continue
            edge = (cls.normalize_paper_id(fields[0]), cls.normalize_paper_id(fields[1]))
            if edge in edges:
                report.increment('duplicate_edges')
                logger.debug(f'{source}:{line_number}: repeated edge {edge[0]} {edge[1]}')
                continue
            edges[edge] = None
        report.counts['edges_in_file'] = len(edges)
        return list(edges)

    @classmethod
    def parse_dates(
            cls,
            stream: Iterable[str],
            report: Optional[IngestReport] = None,
            strict: bool = False,
            source: Optional[str] = '<dates>',
    ) -> Dict[str, TimeInstant]:
        """
        Lê o arquivo de datas.

        Uma data por identificador; se um identificador se repete, a última data prevalece e ``duplicate_dates``
        é incrementado.

        Examples
        --------
        >>> tgt.HepThCorpusReader.parse_dates(['9203201 1992-03-01'])
        {'9203201': 8095}
        """
        report = report if report is not None else IngestReport()
        dates: Dict[str, TimeInstant] = {}
        for line_number, line in enumerate(stream, start=1):
            text = line.strip()
            if not text or text.startswith('#'):
                continue
            fields = text.split()
            if len(fields) != 2:
                cls.line_error(report, strict, f'expected id and date, got {len(fields)} fields', source, line_number)
                continue
            try:
                date = TimeUtils.to_instant(fields[1])
            except ValueError:
                cls.line_error(report, strict, f'{fields[1]!r} is not a valid date', source, line_number)
                continue
            paper_id = cls.normalize_paper_id(fields[0])
            if paper_id in dates:
                report.increment('duplicate_dates')
                logger.debug(f'{source}:{line_number}: paper {paper_id} dated twice, keeping the last date')
            dates[paper_id] = date
        return dates

    @classmethod
    def parse_abstract_metadata(
            cls,
            stream: Iterable[str],
            report: Optional[IngestReport] = None,
            strict: bool = False,
            source: Optional[str] = '<abstract>',
            fallback_id: Optional[str] = None,
    ) -> Optional[AbstractMetadata]:
        """
        Lê o bloco de cabeçalho de um arquivo de metadados.

        O cabeçalho é formado por campos ``Chave: valor``; linhas iniciadas por espaço continuam o campo anterior e
        são unidas por um espaço. O bloco termina na segunda linha ``\\\\`` (o resumo que segue é ignorado).

        Parameters
        ----------
        fallback_id : str, optional
            Identificador usado quando o cabeçalho não tem o campo ``Paper:`` (em geral o nome do arquivo).

        Returns
        -------
        AbstractMetadata | None
            Identificador, campo de autores bruto (``None`` se ausente) e data de submissão (``None`` se ausente ou
            ilegível). ``None`` quando não há identificador.

        Examples
        --------
        >>> meta = tgt.HepThCorpusReader.parse_abstract_metadata([
        ...     'Paper: hep-th/9201001', 'Authors: A. Author, B. Other and C. Third'])
        >>> meta.authors_raw
        'A. Author, B. Other and C. Third'
        """
        report = report if report is not None else IngestReport()
        fields: Dict[str, str] = {}
        last_key: Optional[str] = None
        separators = 0

        for line_number, line in enumerate(stream, start=1):
            text = line.rstrip('\r\n')
            if text.strip() == '\\\\':
                separators += 1
                if separators == 2:
                    break
                last_key = None
                continue
            if not text.strip():
                last_key = None
                continue
            if text[0].isspace() and last_key is not None:
                fields[last_key] = f'{fields[last_key]} {text.strip()}'
                continue
            match = _FIELD.match(text)
            if match is None:
                if text.startswith('-'):
                    continue
                cls.line_error(report, strict, f'{text[:40]!r} is not a header field', source, line_number)
                continue
            last_key = match.group(1).lower()
            fields[last_key] = match.group(2).strip()

        raw_id = fields.get('paper', fallback_id)
        if not raw_id:
            cls.line_error(report, strict, 'metadata without a paper id', source)
            return None

        authors = fields.get('authors', fields.get('author'))
        return AbstractMetadata(cls.normalize_paper_id(raw_id), authors or None, cls._metadata_date(fields.get('date'), report))

    @staticmethod
    def _metadata_date(value: Optional[str], report: IngestReport) -> Optional[TimeInstant]:
        if not value:
            return None
        # "Thu, 2 Jan 1992 12:00:00 GMT   (8kb)"
        while _TRAILING_NOTE.search(value):
            value = _TRAILING_NOTE.sub('', value)
        timestamp = pd.to_datetime(value, errors='coerce', utc=True)
        if pd.isna(timestamp):
            report.increment('unparsable_metadata_dates')
            return None
        return TimeUtils.to_instant(timestamp.tz_localize(None))

    @classmethod
    def read_abstracts(cls, path: str, report: IngestReport, strict: bool = False) -> Dict[str, AbstractMetadata]:
        """Lê todos os arquivos ``*.abs`` de uma pasta, recursivamente e em ordem de nome."""
        metadata: Dict[str, AbstractMetadata] = {}
        for file_path in sorted(glob.glob(os.path.join(path, '**', '*.abs'), recursive=True)):
            stem = os.path.splitext(os.path.basename(file_path))[0]
            with open(file_path, encoding='utf-8', errors='replace') as stream:
                meta = cls.parse_abstract_metadata(stream, report, strict, file_path, fallback_id=stem)
            if meta is not None:
                metadata[meta.paper_id] = meta
        report.counts['metadata_files'] = len(metadata)
        return metadata

    @classmethod
    def get_corpus(
            cls,
            edges: str,
            dates: str,
            abstracts: Optional[str] = None,
            strict: bool = False,
    ) -> Corpus:
        """
        Monta o :term:`Corpus` a partir do leiaute hep-th.

        Parameters
        ----------
        edges : str
            Arquivo de citações.
        dates : str
            Arquivo de datas.
        abstracts : str, optional
            Pasta com os arquivos ``*.abs``. Sem ela os artigos não têm autores.
        strict : bool, optional
            Levanta :class:`CorpusFormatError` na primeira linha mal formada.

        Raises
        ------
        ConfigurationError
            Se um arquivo obrigatório não existe.
        """
        cls.check_path(edges, 'edges file')
        cls.check_path(dates, 'dates file')
        report = IngestReport()
        with open(edges, encoding='utf-8') as stream:
            citation_edges = cls.parse_citation_edges(stream, report, strict, edges)
        with open(dates, encoding='utf-8') as stream:
            paper_dates = cls.parse_dates(stream, report, strict, dates)
        metadata = cls.read_abstracts(cls.check_path(abstracts, 'abstracts folder'), report, strict) if abstracts else None

        references: Dict[str, List[str]] = defaultdict(list)
        paper_ids: Set[str] = set(paper_dates)
        for citing, cited in citation_edges:
            references[citing].append(cited)
            paper_ids.update((citing, cited))
        if metadata is not None:
            paper_ids.update(metadata)

        records: List[PaperRecord] = []
        quarantined: Dict[str, str] = {}
        for paper_id in sorted(paper_ids):
            meta = metadata.get(paper_id) if metadata is not None else None
            date = cls._paper_date(paper_id, paper_dates, meta, report)
            if date is None:
                quarantined[paper_id] = 'missing_dates'
                report.increment('missing_dates')
                continue

            authors: List[str] = []
            if metadata is not None:
                if meta is None:
                    report.increment('papers_without_metadata')
                elif meta.authors_raw is None:
                    quarantined[paper_id] = 'missing_authors'
                    report.increment('missing_authors')
                    continue
                else:
                    authors = AuthorUtils.normalize_authors(meta.authors_raw)
                    if not authors:
                        quarantined[paper_id] = 'unparsable_authors'
                        report.increment('unparsable_authors')
                        continue

            refs = CanonicalCorpusReader.clean_references(paper_id, references.get(paper_id, []), report)
            records.append(PaperRecord(paper_id, date, tuple(authors), tuple(refs)))

        return cls.finish(Corpus.from_records(records, report, quarantined))

    @classmethod
    def _paper_date(
            cls,
            paper_id: str,
            paper_dates: Dict[str, TimeInstant],
            meta: Optional[AbstractMetadata],
            report: IngestReport,
    ) -> Optional[TimeInstant]:
        if paper_id in paper_dates:
            return paper_dates[paper_id]
        if meta is not None and meta.submission_date is not None:
            report.increment('dates_from_metadata')
            return meta.submission_date
        inferred = cls.infer_date(paper_id)
        if inferred is not None:
            report.increment('dates_inferred')
        return inferred
