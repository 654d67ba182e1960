"""Graded dimension vectors."""
from __future__ import annotations

from typing import Iterable, Mapping


class GradedDims:
    """Finite vector of non-negative integers indexed by degree, trailing zeros dropped."""

    __slots__ = ("dims",)

    def __init__(self, dims: Iterable[int] | Mapping[int, int] = ()):
        if isinstance(dims, Mapping):
            top = max((k for k, v in dims.items() if v), default=-1)
            vals = [int(dims.get(k, 0)) for k in range(top + 1)]
        else:
            vals = [int(v) for v in dims]
        if any(v < 0 for v in vals):
            raise ValueError("graded dimensions must be non-negative")
        while vals and vals[-1] == 0:
            vals.pop()
        self.dims = tuple(vals)

    def __getitem__(self, d: int) -> int:
        return self.dims[d] if 0 <= d < len(self.dims) else 0

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __eq__(self, other):
        if isinstance(other, GradedDims):
            return self.dims == other.dims
        if isinstance(other, (list, tuple)):
            return self == GradedDims(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.dims)

    def __repr__(self):
        return f"GradedDims({list(self.dims)})"

    def __add__(self, other: "GradedDims") -> "GradedDims":
        n = max(len(self), len(other))
        return GradedDims([self[d] + other[d] for d in range(n)])

    def __mul__(self, other: "GradedDims") -> "GradedDims":
        """Hilbert series of a graded tensor product."""
        out = [0] * max(len(self) + len(other) - 1, 0)
        for i, a in enumerate(self.dims):
            for j, b in enumerate(other.dims):
                out[i + j] += a * b
        return GradedDims(out)

    def total(self) -> int:
        return sum(self.dims)

    def truncate(self, max_degree: int) -> "GradedDims":
        return GradedDims(self.dims[: max_degree + 1])

    def even_part(self) -> dict[int, int]:
        return {d: v for d, v in enumerate(self.dims) if d % 2 == 0 and v}

    def regrade(self, factor: int) -> "GradedDims":
        """Multiply every degree by ``factor`` (e.g. y-degree -> cohomological degree)."""
        out = [0] * (factor * (len(self) - 1) + 1) if self.dims else []
        for d, v in enumerate(self.dims):
            out[factor * d] = v
        return GradedDims(out)

    def as_list(self, length: int | None = None) -> list[int]:
        if length is None:
            return list(self.dims)
        return [self[d] for d in range(length)]

    def to_json(self, convention: str = "cohomological degree") -> dict:
        return {"degree_convention": convention, "dims": list(self.dims)}
