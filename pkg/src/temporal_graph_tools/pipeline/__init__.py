from .config import AnalysisConfig  # noqa
from .reports import GRAPHS, MetricsReport, PhaseTransition, ReportUtils, SnapshotTable  # noqa
from .export import ExportUtils  # noqa

__all__ = [
    "AnalysisConfig",
    "GRAPHS",
    "MetricsReport",
    "PhaseTransition",
    "ReportUtils",
    "SnapshotTable",
    "ExportUtils",
]
