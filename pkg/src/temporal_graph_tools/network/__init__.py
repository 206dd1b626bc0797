from .base import BaseNetworkTransform  # noqa
from .static import CitationTransform, CoauthorshipTransform  # noqa
from .temporal import TemporalCitationTransform, TemporalCoauthorshipTransform  # noqa
from .interaction import (  # noqa
    DEFAULT_THRESHOLD,
    InteractionGraph,
    InteractionTransform,
    MostCitedSubgraph,
    StrengthSeries,
    filter_most_cited,
    total_strength,
)
from .builders import (  # noqa
    STATIC_BUILDERS,
    build_citation,
    build_coauthorship,
    build_interaction,
    build_temporal_citation,
    build_temporal_coauthorship,
)

__all__ = [
    "BaseNetworkTransform",
    "CitationTransform",
    "CoauthorshipTransform",
    "TemporalCitationTransform",
    "TemporalCoauthorshipTransform",
    "DEFAULT_THRESHOLD",
    "InteractionGraph",
    "InteractionTransform",
    "MostCitedSubgraph",
    "StrengthSeries",
    "filter_most_cited",
    "total_strength",
    "STATIC_BUILDERS",
    "build_citation",
    "build_coauthorship",
    "build_interaction",
    "build_temporal_citation",
    "build_temporal_coauthorship",
]
