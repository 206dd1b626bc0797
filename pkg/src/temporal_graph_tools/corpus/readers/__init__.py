from .base import BaseCorpusReader  # noqa
from .canonical import CanonicalCorpusReader  # noqa
from .hep_th import AbstractMetadata, HepThCorpusReader  # noqa

__all__ = [
    "BaseCorpusReader",
    "CanonicalCorpusReader",
    "AbstractMetadata",
    "HepThCorpusReader",
]
