from .authors import AuthorUtils  # noqa
from .corpus import Corpus, IngestReport, PaperRecord  # noqa
from .readers import *  # noqa
from .loader import INPUT_FORMATS, load_corpus  # noqa

__all__ = [
    "AuthorUtils",
    "Corpus",
    "IngestReport",
    "PaperRecord",
    "BaseCorpusReader",
    "CanonicalCorpusReader",
    "AbstractMetadata",
    "HepThCorpusReader",
    "INPUT_FORMATS",
    "load_corpus",
]
