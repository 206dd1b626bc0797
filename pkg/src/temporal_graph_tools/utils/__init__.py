from .timeline import TimeUtils, Window, FOREVER
from .data import DataUtils
from .table import TableUtils

__all__ = ['TimeUtils', 'Window', 'FOREVER', 'DataUtils', 'TableUtils']
