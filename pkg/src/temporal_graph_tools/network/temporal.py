from typing import Dict, List, Tuple

from .base import BaseNetworkTransform
from ..corpus import Corpus
from ..tvg import TimeVaryingGraph
from ..utils.timeline import FOREVER, TimeInstant


class TemporalCoauthorshipTransform(BaseNetworkTransform):
    """
    Rede temporal de co-autoria :math:`G_a^t`.

    Cada par de co-autores é uma relação presente em :math:`[t_0, \\infty)`, onde :math:`t_0` é a data de submissão
    do primeiro artigo em comum. O rótulo da relação é a tupla ordenada dos identificadores dos artigos em comum.

    Examples
    --------
    >>> corpus = tgt.Corpus.from_records([tgt.PaperRecord('p1', 9282, ('A', 'B'))])
    >>> g = tgt.TemporalCoauthorshipTransform.get_graph(corpus)
    >>> [(r.endpoints, r.label) for r in g.relations]
    [(('a', 'b'), ('p1',))]
    """
    name = 'temporal coauthorship graph'

    @classmethod
    def joint_papers(cls, corpus: Corpus) -> Dict[Tuple[str, str], Tuple[TimeInstant, List[str]]]:
        """Par de autores → (data do primeiro artigo em comum, artigos em comum em ordem de identificador)."""
        pairs: Dict[Tuple[str, str], Tuple[TimeInstant, List[str]]] = {}
        for paper in corpus.papers.values():
            for pair in cls.author_pairs(paper):
                first, papers = pairs.get(pair, (paper.submission_date, []))
                papers.append(paper.paper_id)
                pairs[pair] = (min(first, paper.submission_date), papers)
        return pairs

    @classmethod
    def get_graph(cls, corpus: Corpus) -> TimeVaryingGraph:
        tvg = TimeVaryingGraph(corpus.lifetime, directed=False)
        for key, name in corpus.authors.items():
            tvg.add_entity(key, name)
        for (u, v), (first, papers) in cls.joint_papers(corpus).items():
            tvg.add_presence(u, v, first, FOREVER, label=tuple(papers))
        tvg.freeze()
        cls.log_graph(tvg)
        return tvg


class TemporalCitationTransform(BaseNetworkTransform):
    """
    Rede temporal de citações :math:`G_c^t`.

    Cada citação :math:`p \\to q` dentro do :term:`Corpus` é uma relação direcionada presente a partir da data de
    submissão do artigo citante :math:`p`.
    """
    name = 'temporal citation graph'

    @classmethod
    def get_graph(cls, corpus: Corpus) -> TimeVaryingGraph:
        tvg = TimeVaryingGraph(corpus.lifetime, directed=True)
        for paper_id in corpus.papers:
            tvg.add_entity(paper_id)
        for paper_id, paper in corpus.papers.items():
            for reference in corpus.resolved_references(paper_id):
                tvg.add_presence(paper_id, reference, paper.submission_date)
        tvg.freeze()
        cls.log_graph(tvg)
        return tvg
