from typing import Callable, Dict, Union

from .interaction import InteractionGraph, InteractionTransform
from .static import CitationTransform, CoauthorshipTransform
from .temporal import TemporalCitationTransform, TemporalCoauthorshipTransform
from ..corpus import Corpus
from ..tvg import StaticGraph, TimeVaryingGraph


def build_coauthorship(corpus: Corpus) -> StaticGraph:
    return CoauthorshipTransform.get_graph(corpus)


def build_citation(corpus: Corpus) -> StaticGraph:
    return CitationTransform.get_graph(corpus)


def build_temporal_coauthorship(corpus: Corpus) -> TimeVaryingGraph:
    return TemporalCoauthorshipTransform.get_graph(corpus)


def build_temporal_citation(corpus: Corpus) -> TimeVaryingGraph:
    return TemporalCitationTransform.get_graph(corpus)


def build_interaction(corpus: Corpus) -> InteractionGraph:
    return InteractionTransform.get_graph(corpus)


STATIC_BUILDERS: Dict[str, Callable[[Corpus], Union[StaticGraph, TimeVaryingGraph]]] = {
    'coauthorship': build_coauthorship,
    'citation': build_citation,
    'interaction': lambda corpus: build_interaction(corpus).support_graph(),
}
"""Construtores do comando ``build --kind``."""
