import re
from typing import Dict, List

_AFFILIATION = re.compile(r'\([^()]*\)')
_SEPARATOR = re.compile(r',|\band\b')
_SPACES = re.compile(r'\s+')


class AuthorUtils:
    """
    Classe utilitária para normalização de nomes de autores.

    A identidade de um autor é a igualdade de strings após normalização e *case folding*; nenhuma fusão entre
    iniciais e nomes completos é feita.
    """

    @staticmethod
    def normalize_name(name: str) -> str:
        """
        Remove afiliações entre parênteses e espaços redundantes, mantendo a caixa original.

        Examples
        --------
        >>> tgt.AuthorUtils.normalize_name('  A.   Author (CERN) ')
        'A. Author'
        """
        previous = None
        while previous != name:
            previous, name = name, _AFFILIATION.sub(' ', name)
        return _SPACES.sub(' ', name).strip()

    @staticmethod
    def identity(name: str) -> str:
        """Chave de identidade de um autor (nome normalizado em *case folding*)."""
        return AuthorUtils.normalize_name(name).casefold()

    @classmethod
    def normalize_authors(cls, raw: str) -> List[str]:
        """
        Separa e normaliza uma linha de autores.

        A linha é separada em vírgulas e na palavra ``and``; afiliações entre parênteses são removidas antes da
        separação. Nomes repetidos (mesma identidade) aparecem uma vez, com a grafia da primeira ocorrência.

        Parameters
        ----------
        raw : str
            Campo ``Authors:`` bruto.

        Returns
        -------
        List[str]
            Nomes de exibição, na ordem original. Uma lista vazia indica que o registro deve ir para quarentena.

        Examples
        --------
        >>> tgt.AuthorUtils.normalize_authors('A. Author, B. Other and C. Third')
        ['A. Author', 'B. Other', 'C. Third']
        """
        cleaned = cls.normalize_name(raw)
        return cls._unique([cls.normalize_name(part) for part in _SEPARATOR.split(cleaned)])

    @classmethod
    def split_canonical(cls, field: str) -> List[str]:
        """Separa o campo de autores do formato canônico (nomes separados por ``;``)."""
        return cls._unique([cls.normalize_name(part) for part in field.split(';')])

    @classmethod
    def _unique(cls, names: List[str]) -> List[str]:
        seen: Dict[str, str] = {}
        for name in names:
            if name and name.casefold() not in seen:
                seen[name.casefold()] = name
        return list(seen.values())
