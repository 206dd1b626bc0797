from dataclasses import dataclass
from typing import Any, Hashable, Tuple


def sort_key(entity: Hashable) -> Tuple[str, str]:
    """Chave de ordenação total entre identificadores de tipos diferentes."""
    return type(entity).__name__, str(entity)


@dataclass(frozen=True)
class Relation:
    """
    Relação rotulada :math:`(a, b, \\lambda) \\in E \\subseteq V \\times V \\times L`.

    Em grafos não direcionados, utilize :meth:`of` para que :math:`(a, b)` seja guardado em ordem canônica, de forma
    que :math:`(a, b, \\lambda) = (b, a, \\lambda)`.

    Parameters
    ----------
    endpoint_a : Hashable
        Entidade de origem.
    endpoint_b : Hashable
        Entidade de destino.
    label : Hashable, optional
        Rótulo opaco (elemento de :math:`L`).
    """
    endpoint_a: Any
    endpoint_b: Any
    label: Any = None

    @classmethod
    def of(cls, a: Hashable, b: Hashable, label: Hashable = None, directed: bool = False) -> 'Relation':
        """Cria uma relação, ordenando as extremidades quando não direcionada."""
        if not directed and sort_key(b) < sort_key(a):
            a, b = b, a
        return cls(a, b, label)

    @property
    def endpoints(self) -> Tuple[Any, Any]:
        return self.endpoint_a, self.endpoint_b

    def other(self, entity: Hashable) -> Any:
        """Extremidade oposta a :paramref:`entity`."""
        if entity == self.endpoint_a:
            return self.endpoint_b
        if entity == self.endpoint_b:
            return self.endpoint_a
        raise ValueError(f'{entity!r} is not an endpoint of {self}')
