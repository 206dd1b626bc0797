from typing import Optional

from .corpus import Corpus
from .readers import CanonicalCorpusReader, HepThCorpusReader
from ..exceptions import ConfigurationError

INPUT_FORMATS = ['canonical', 'hep-th']


def load_corpus(
        input_format: str = 'canonical',
        records: Optional[str] = None,
        edges: Optional[str] = None,
        dates: Optional[str] = None,
        abstracts: Optional[str] = None,
        strict: bool = False,
) -> Corpus:
    """
    Carrega um :term:`Corpus` no formato indicado.

    Parameters
    ----------
    input_format : str, optional
        ``'canonical'`` (arquivo de registros em :paramref:`records`) ou ``'hep-th'`` (:paramref:`edges`,
        :paramref:`dates` e, opcionalmente, :paramref:`abstracts`).
    strict : bool, optional
        Levanta :class:`CorpusFormatError` na primeira linha mal formada.

    Raises
    ------
    ConfigurationError
        Formato desconhecido ou arquivo obrigatório ausente.

    Examples
    --------
    >>> corpus = tgt.load_corpus('canonical', records='tests/resources/toy_corpus/records.tsv')
    >>> corpus.report['papers']
    5
    """
    if input_format == 'canonical':
        if records is None:
            raise ConfigurationError('the canonical format needs a records file')
        return CanonicalCorpusReader.get_corpus(records, strict=strict)
    if input_format == 'hep-th':
        if edges is None or dates is None:
            raise ConfigurationError('the hep-th format needs both the edges and the dates files')
        return HepThCorpusReader.get_corpus(edges, dates, abstracts, strict=strict)
    raise ConfigurationError(f'{input_format} is not an allowed input format, use one of {INPUT_FORMATS}')
