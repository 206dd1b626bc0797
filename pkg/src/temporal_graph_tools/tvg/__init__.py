from .presence import PresenceIntervalSet  # noqa
from .relation import Relation  # noqa
from .static_graph import StaticGraph, StaticGraphView  # noqa
from .tvg import TimeVaryingGraph, TimeVaryingGraphView  # noqa
from .journey import Journey, JourneyStep, JourneyUtils  # noqa

__all__ = [
    "PresenceIntervalSet",
    "Relation",
    "StaticGraph",
    "StaticGraphView",
    "TimeVaryingGraph",
    "TimeVaryingGraphView",
    "Journey",
    "JourneyStep",
    "JourneyUtils",
]
