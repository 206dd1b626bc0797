from .base import BaseNetworkTransform
from ..corpus import Corpus
from ..tvg import StaticGraph


class CoauthorshipTransform(BaseNetworkTransform):
    """
    Rede de co-autoria :math:`G_a`.

    Grafo não direcionado com um nó por autor e uma aresta entre autores que assinam ao menos um artigo juntos
    (clique por artigo). O peso da aresta é o número de artigos em comum. Autores de artigos individuais aparecem
    como nós isolados.

    Examples
    --------
    >>> corpus = tgt.Corpus.from_records([tgt.PaperRecord('p1', 0, ('A', 'B', 'C'))])
    >>> sorted(tgt.CoauthorshipTransform.get_graph(corpus).edge_set())
    [('a', 'b'), ('a', 'c'), ('b', 'c')]
    """
    name = 'coauthorship graph'

    @classmethod
    def get_graph(cls, corpus: Corpus) -> StaticGraph:
        graph = StaticGraph(directed=False, nodes=corpus.authors, node_labels=corpus.authors)
        for paper in corpus.papers.values():
            for u, v in cls.author_pairs(paper):
                graph.add_edge(u, v, 1)
        cls.log_graph(graph)
        return graph


class CitationTransform(BaseNetworkTransform):
    """
    Rede de citações :math:`G_c`.

    Grafo direcionado com um nó por artigo e uma aresta :math:`p \\to q` para cada referência de :math:`p` a um
    artigo :math:`q` do :term:`Corpus`. Referências pendentes não geram arestas.
    """
    name = 'citation graph'

    @classmethod
    def get_graph(cls, corpus: Corpus) -> StaticGraph:
        graph = StaticGraph(directed=True, nodes=corpus.papers)
        for paper_id in corpus.papers:
            for reference in corpus.resolved_references(paper_id):
                graph.add_edge(paper_id, reference)
        cls.log_graph(graph)
        return graph
