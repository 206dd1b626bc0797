import logging
import os
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .authors import AuthorUtils
from ..exceptions import InvalidWindowError, UnknownPaperError
from ..utils.timeline import TimeInstant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PaperRecord:
    """
    Registro de um artigo do :term:`Corpus`.

    Parameters
    ----------
    paper_id : str
        Identificador único do artigo.
    submission_date : int
        Data de submissão, em :term:`Instante`.
    authors : tuple[str, ...]
        Nomes de exibição normalizados, na ordem original. Pode ser vazio: o leitor hep-th mantém artigos citados
        sem arquivo de resumo (contados em ``papers_without_metadata``) para preservar as citações, e sem pasta de
        resumos nenhum artigo tem autores. Esses artigos não geram arestas nos grafos de autores.
    references : tuple[str, ...]
        Identificadores citados, sem repetições. Podem incluir artigos fora do :term:`Corpus`.
    """
    paper_id: str
    submission_date: TimeInstant
    authors: Tuple[str, ...] = ()
    references: Tuple[str, ...] = ()

    @property
    def author_keys(self) -> Tuple[str, ...]:
        """Identidades dos autores, ver :meth:`AuthorUtils.identity`."""
        return tuple(AuthorUtils.identity(a) for a in self.authors)


class IngestReport:
    """
    Relatório de ingestão: contagens por chave e mensagens de erro de linha.

    As chaves são gravadas em ordem alfabética por :meth:`to_text`, de forma que corpora iguais produzem relatórios
    idênticos byte a byte.
    """
    def __init__(self):
        self.counts: Counter = Counter()
        self.errors: List[str] = []

    def increment(self, key: str, n: int = 1):
        self.counts[key] += n

    def record_error(self, message: str):
        self.errors.append(message)

    def __getitem__(self, key: str) -> int:
        return self.counts.get(key, 0)

    def to_dict(self) -> Dict[str, int]:
        return {k: int(self.counts[k]) for k in sorted(self.counts)}

    def to_text(self) -> str:
        """Relatório no formato plano ``chave=valor``, uma chave por linha."""
        return ''.join(f'{k}={v}\n' for k, v in self.to_dict().items())

    def write(self, path: str) -> str:
        """Grava :meth:`to_text` em :paramref:`path`."""
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as report_file:
            report_file.write(self.to_text())
        return path

    def log_warnings(self, keys: Iterable[str]):
        """Registra em ``WARNING`` uma linha por tipo de problema com contagem não nula."""
        for key in keys:
            if self[key]:
                logger.warning(f'{key}: {self[key]}')


@dataclass
class Corpus:
    """
    :term:`Corpus` de artigos ingeridos.

    Parameters
    ----------
    papers : dict[str, PaperRecord]
        Artigos mantidos, por identificador.
    report : IngestReport, optional
        Relatório de ingestão. Não participa da comparação entre corpora.
    quarantined : dict[str, str], optional
        Artigos em quarentena e o motivo. Não participa da comparação entre corpora.

    Examples
    --------
    >>> corpus = tgt.Corpus.from_records([
    ...     tgt.PaperRecord('p1', 8095, ('A',), ('p2',)),
    ...     tgt.PaperRecord('p2', 8000, ('B',)),
    ... ])
    >>> corpus.citations
    1
    """
    papers: Dict[str, PaperRecord]
    report: IngestReport = field(default_factory=IngestReport, compare=False, repr=False)
    quarantined: Dict[str, str] = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_records(
            cls,
            records: Iterable[PaperRecord],
            report: Optional[IngestReport] = None,
            quarantined: Optional[Dict[str, str]] = None,
    ) -> 'Corpus':
        """
        Monta o :term:`Corpus` e completa as contagens do relatório.

        Os artigos são mantidos em ordem de identificador. As chaves ``papers``, ``papers_in``,
        ``papers_quarantined``, ``citations``, ``distinct_authors`` e ``dangling_references`` do relatório são
        recalculadas.

        Raises
        ------
        ValueError
            Se houver identificadores repetidos.
        """
        report = report if report is not None else IngestReport()
        quarantined = dict(quarantined or {})
        papers: Dict[str, PaperRecord] = {}
        for record in sorted(records, key=lambda r: r.paper_id):
            if record.paper_id in papers:
                raise ValueError(f'paper id {record.paper_id} is repeated')
            papers[record.paper_id] = record

        corpus = cls(papers, report, quarantined)
        dangling = sum(len(corpus.dangling_references(p)) for p in papers)
        for key, value in {
            'papers': len(papers),
            'papers_in': len(papers) + len(quarantined),
            'papers_quarantined': len(quarantined),
            'citations': corpus.citations,
            'distinct_authors': len(corpus.authors),
            'dangling_references': dangling,
        }.items():
            report.counts[key] = value
        return corpus

    def __len__(self) -> int:
        return len(self.papers)

    def __contains__(self, paper_id: str) -> bool:
        return paper_id in self.papers

    def get(self, paper_id: str) -> PaperRecord:
        """
        Registro de um artigo.

        Raises
        ------
        UnknownPaperError
            Se o identificador não pertence ao :term:`Corpus`.
        """
        try:
            return self.papers[paper_id]
        except KeyError:
            raise UnknownPaperError(f'{paper_id} is not a paper of the corpus') from None

    @property
    def lifetime(self) -> Tuple[TimeInstant, TimeInstant]:
        """Tempo de vida :math:`[min(data), max(data) + 1)`."""
        if not self.papers:
            raise InvalidWindowError('an empty corpus has no lifetime')
        dates = [p.submission_date for p in self.papers.values()]
        return min(dates), max(dates) + 1

    def resolved_references(self, paper_id: str) -> List[str]:
        """Referências de um artigo que pertencem ao :term:`Corpus`."""
        return [r for r in self.get(paper_id).references if r in self.papers and r != paper_id]

    def dangling_references(self, paper_id: str) -> List[str]:
        """Referências de um artigo que não pertencem ao :term:`Corpus`."""
        return [r for r in self.get(paper_id).references if r not in self.papers]

    @property
    def citations(self) -> int:
        """Total de referências que apontam para artigos do :term:`Corpus`."""
        return sum(len(self.resolved_references(p)) for p in self.papers)

    @property
    def authors(self) -> Dict[str, str]:
        """Identidade → nome de exibição (primeira grafia encontrada, em ordem de identificador de artigo)."""
        names: Dict[str, str] = {}
        for paper in self.papers.values():
            for name, key in zip(paper.authors, paper.author_keys):
                names.setdefault(key, name)
        return names

    def citing_papers(self) -> Dict[str, List[str]]:
        """Artigo citado → artigos que o citam (em ordem de identificador)."""
        cited_by: Dict[str, List[str]] = defaultdict(list)
        for paper_id in self.papers:
            for reference in self.resolved_references(paper_id):
                cited_by[reference].append(paper_id)
        return dict(cited_by)
