"""
Finite formal contexts (objects x attributes incidence tables).

Incidence is kept both as a read-only boolean matrix and as integer bitmasks
(one per object over attributes, one per attribute over objects); the
derivation operators work on the bitmasks.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np
import pandas as pd

from ..errors import InputError


@dataclass(frozen=True, eq=False)
class FormalContext:
    """The triple (G, M, I): object ids, attribute ids and a boolean incidence matrix."""

    objects: Tuple[str, ...]
    attributes: Tuple[str, ...]
    incidence: np.ndarray
    _object_index: Dict[str, int] = field(init=False, repr=False)
    _attribute_index: Dict[str, int] = field(init=False, repr=False)
    _rows: Tuple[int, ...] = field(init=False, repr=False)
    _cols: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        objects = tuple(str(g) for g in self.objects)
        attributes = tuple(str(m) for m in self.attributes)
        if len(set(objects)) != len(objects):
            raise InputError("Object ids must be unique", {"objects": list(objects)})
        if len(set(attributes)) != len(attributes):
            raise InputError("Attribute ids must be unique", {"attributes": list(attributes)})

        matrix = np.array(self.incidence, dtype=bool)
        if matrix.size == 0:
            matrix = matrix.reshape(len(objects), len(attributes))
        if matrix.shape != (len(objects), len(attributes)):
            raise InputError(
                f"Incidence has shape {matrix.shape}, expected {(len(objects), len(attributes))}"
            )
        matrix.setflags(write=False)

        rows = tuple(
            sum(1 << int(j) for j in np.flatnonzero(matrix[i])) for i in range(len(objects))
        )
        cols = tuple(
            sum(1 << int(i) for i in np.flatnonzero(matrix[:, j])) for j in range(len(attributes))
        )

        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "attributes", attributes)
        object.__setattr__(self, "incidence", matrix)
        object.__setattr__(self, "_object_index", {g: i for i, g in enumerate(objects)})
        object.__setattr__(self, "_attribute_index", {m: j for j, m in enumerate(attributes)})
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_cols", cols)

    @classmethod
    def from_rows(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        rows: Iterable[Iterable[int]],
    ) -> "FormalContext":
        """Build a context from 0/1 rows given in object order."""
        return cls(tuple(objects), tuple(attributes), np.array([list(r) for r in rows], dtype=bool))

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "FormalContext":
        """Build a context from a boolean-like DataFrame indexed by object id."""
        return cls(
            tuple(str(g) for g in frame.index),
            tuple(str(m) for m in frame.columns),
            frame.to_numpy(dtype=bool),
        )

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def all_objects_mask(self) -> int:
        return (1 << len(self.objects)) - 1

    @property
    def all_attributes_mask(self) -> int:
        return (1 << len(self.attributes)) - 1

    @property
    def rows(self) -> Tuple[int, ...]:
        """Attribute bitmask of every object."""
        return self._rows

    @property
    def columns(self) -> Tuple[int, ...]:
        """Object bitmask of every attribute."""
        return self._cols

    def object_position(self, g: str) -> int:
        try:
            return self._object_index[g]
        except KeyError:
            raise InputError(f"Unknown object id: {g}", {"object": g}) from None

    def attribute_position(self, m: str) -> int:
        try:
            return self._attribute_index[m]
        except KeyError:
            raise InputError(f"Unknown attribute id: {m}", {"attribute": m}) from None

    def object_mask(self, ids: Iterable[str]) -> int:
        mask = 0
        for g in ids:
            mask |= 1 << self.object_position(g)
        return mask

    def attribute_mask(self, ids: Iterable[str]) -> int:
        mask = 0
        for m in ids:
            mask |= 1 << self.attribute_position(m)
        return mask

    def objects_of(self, mask: int) -> FrozenSet[str]:
        return frozenset(g for i, g in enumerate(self.objects) if mask >> i & 1)

    def attributes_of(self, mask: int) -> FrozenSet[str]:
        return frozenset(m for j, m in enumerate(self.attributes) if mask >> j & 1)

    def sorted_objects(self, ids: Iterable[str]) -> List[str]:
        """Object ids in context order (the canonical output order)."""
        return sorted(ids, key=self.object_position)
