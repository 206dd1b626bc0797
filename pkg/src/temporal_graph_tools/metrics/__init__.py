from .community import CommunityUtils, Partition  # noqa
from .indicators import GraphMetrics, PathStatistics  # noqa
from .series import MetricSeries, metric_series  # noqa

__all__ = [
    "CommunityUtils",
    "Partition",
    "GraphMetrics",
    "PathStatistics",
    "MetricSeries",
    "metric_series",
]
