"""
Weighted samples of ground-space elements.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

from .errors import InputError
from .geometry import as_fraction


@dataclass(frozen=True)
class Observation:
    """One observed element with its nonnegative weight."""

    obs_id: str
    element: Any
    weight: Fraction = Fraction(1)


@dataclass(frozen=True)
class SampleObject:
    """A distinct object of a sample with the summed weight of its observations."""

    key: Hashable
    element: Any
    weight: Fraction


@dataclass(frozen=True)
class Sample:
    """Nonempty list of observations with unique ids."""

    observations: Tuple[Observation, ...]

    def __post_init__(self):
        observations = tuple(self.observations)
        if not observations:
            raise InputError("empty sample")
        seen = set()
        for obs in observations:
            if obs.obs_id in seen:
                raise InputError(f"Repeated observation id: {obs.obs_id}", {"id": obs.obs_id})
            seen.add(obs.obs_id)
            if as_fraction(obs.weight) < 0:
                raise InputError(f"Negative weight for observation {obs.obs_id}", {"id": obs.obs_id})
        object.__setattr__(self, "observations", observations)

    @classmethod
    def from_elements(
        cls,
        elements: Sequence[Any],
        weights: Optional[Sequence[Any]] = None,
        ids: Optional[Sequence[str]] = None,
    ) -> "Sample":
        """Build a sample; ids default to 1-based positions and weights to 1."""
        ids = list(ids) if ids is not None else [str(i + 1) for i in range(len(elements))]
        weights = list(weights) if weights is not None else [1] * len(elements)
        if not (len(ids) == len(weights) == len(elements)):
            raise InputError("Elements, weights and ids must have equal length")
        return cls(tuple(
            Observation(str(i), e, as_fraction(w)) for i, e, w in zip(ids, elements, weights)
        ))

    def __len__(self) -> int:
        return len(self.observations)

    def __iter__(self) -> Iterator[Observation]:
        return iter(self.observations)

    @property
    def elements(self) -> List[Any]:
        return [obs.element for obs in self.observations]

    @property
    def ids(self) -> List[str]:
        return [obs.obs_id for obs in self.observations]

    @property
    def total_weight(self) -> Fraction:
        return sum((as_fraction(obs.weight) for obs in self.observations), Fraction(0))

    def validated(self, desc) -> "Sample":
        """Copy with every element validated (and canonicalized) by the descriptor."""
        return Sample(tuple(
            Observation(obs.obs_id, desc.validate(obs.element), as_fraction(obs.weight))
            for obs in self.observations
        ))


def aggregate_objects(sample: Sample, desc, drop_zero: bool = True) -> List[SampleObject]:
    """
    Group observations into distinct objects, in order of first appearance.

    The descriptor decides identity: two observations are the same object
    when their object keys agree. Weights of an object add up.
    """
    order: List[Hashable] = []
    elements: Dict[Hashable, Any] = {}
    weights: Dict[Hashable, Fraction] = {}
    for obs in sample:
        key = desc.object_key(obs.obs_id, obs.element)
        if key not in weights:
            order.append(key)
            elements[key] = obs.element
            weights[key] = Fraction(0)
        weights[key] += as_fraction(obs.weight)
    objects = [SampleObject(k, elements[k], weights[k]) for k in order]
    if drop_zero:
        objects = [o for o in objects if o.weight > 0]
    return objects
