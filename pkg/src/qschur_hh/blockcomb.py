"""Abacus combinatorics: beta-numbers, e-cores, e-weights, Rouquier cores and block labels."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .symwreath import Partition, partitions


@dataclass(frozen=True)
class AbacusConfig:
    e: int
    beta_numbers: tuple  # strictly decreasing

    def __post_init__(self):
        b = tuple(self.beta_numbers)
        if len(set(b)) != len(b) or any(x < 0 for x in b):
            raise ValueError("beta numbers must be distinct and non-negative")
        object.__setattr__(self, "beta_numbers", tuple(sorted(b, reverse=True)))

    @property
    def beads(self) -> int:
        return len(self.beta_numbers)

    @property
    def runner_counts(self) -> tuple:
        counts = [0] * self.e
        for b in self.beta_numbers:
            counts[b % self.e] += 1
        return tuple(counts)

    def partition(self) -> Partition:
        n = self.beads
        return Partition.of(b - (n - 1 - i) for i, b in enumerate(self.beta_numbers))

    def push_up(self) -> "AbacusConfig":
        """Slide every bead as far up its runner as possible."""
        out = []
        for r, c in enumerate(self.runner_counts):
            out += [r + self.e * k for k in range(c)]
        return AbacusConfig(self.e, tuple(out))

    def display(self) -> str:
        rows = (max(self.beta_numbers) // self.e + 1) if self.beta_numbers else 0
        beads = set(self.beta_numbers)
        return "\n".join("".join("o" if r * self.e + c in beads else "-" for c in range(self.e))
                         for r in range(rows))


def _as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition.of(p)


def abacus_from_partition(p, e: int, beads: int | None = None) -> AbacusConfig:
    """Beta-numbers ``lambda_i + beads - i`` for ``i = 1..beads``."""
    p = _as_partition(p)
    if e < 1:
        raise ValueError("e >= 1 required")
    if beads is None:
        beads = len(p)
    if beads < len(p):
        raise ValueError(f"need at least {len(p)} beads for {p}")
    parts = list(p.parts) + [0] * (beads - len(p))
    return AbacusConfig(e, tuple(parts[i] + beads - 1 - i for i in range(beads)))


def e_core_and_weight(p, e: int) -> tuple[Partition, int]:
    """Push beads up the runners: the result is the e-core, the number of moves the weight."""
    if e < 2:
        raise ValueError("e >= 2 required")
    p = _as_partition(p)
    ab = abacus_from_partition(p, e)
    core = ab.push_up()
    moves = (sum(ab.beta_numbers) - sum(core.beta_numbers)) // e
    return core.partition(), moves


def e_core(p, e: int) -> Partition:
    return e_core_and_weight(p, e)[0]


def e_weight(p, e: int) -> int:
    return e_core_and_weight(p, e)[1]


def is_e_core(p, e: int) -> bool:
    return e_weight(p, e) == 0


# -- independent oracle ----------------------------------------------------------------

def _hook_length(parts: Sequence[int], conj: Sequence[int], r: int, c: int) -> int:
    return parts[r] - c + conj[c] - r - 1


def rim_hooks(p, e: int) -> list[Partition]:
    """All removals of a rim ``e``-hook, one per cell of hook length ``e``."""
    p = _as_partition(p)
    parts = list(p.parts)
    conj = list(p.conjugate().parts)
    out = []
    for r, row in enumerate(parts):
        for c in range(row):
            if _hook_length(parts, conj, r, c) != e:
                continue
            bottom = conj[c] - 1
            new = parts[:]
            for i in range(r, bottom):
                new[i] = parts[i + 1] - 1
            new[bottom] = c
            out.append(Partition.of(new))
    return out


@lru_cache(maxsize=None)
def _oracle(parts: tuple, e: int) -> frozenset:
    """Every (core, weight) reachable by any sequence of rim e-hook removals."""
    hooks = rim_hooks(Partition(parts), e)
    if not hooks:
        return frozenset({(parts, 0)})
    out = set()
    for q in hooks:
        for core, w in _oracle(q.parts, e):
            out.add((core, w + 1))
    return frozenset(out)


def core_weight_oracle(p, e: int) -> set[tuple[Partition, int]]:
    """All (core, weight) pairs over all removal orders; a single pair if order-independent."""
    p = _as_partition(p)
    return {(Partition(c), w) for c, w in _oracle(p.parts, e)}


# -- Rouquier cores ------------------------------------------------------------------

def rouquier_bead_bound(p, e: int, w: int) -> int:
    p = _as_partition(p)
    return p.size + e * w + e


def is_rouquier_core(p, e: int, w: int) -> bool:
    """Some abacus display has at least ``w-1`` more beads on runner ``i`` than on ``i-1`` for every ``i``.

    Bead counts from ``len(p)`` to :func:`rouquier_bead_bound` are searched.
    """
    p = _as_partition(p)
    if not is_e_core(p, e):
        raise ValueError(f"{p} is not a {e}-core")
    return rouquier_witness(p, e, w) is not None


def rouquier_witness(p, e: int, w: int, bound: int | None = None) -> AbacusConfig | None:
    p = _as_partition(p)
    top = rouquier_bead_bound(p, e, w) if bound is None else bound
    for beads in range(len(p), top + 1):
        ab = abacus_from_partition(p, e, beads)
        rc = ab.runner_counts
        if all(rc[i] - rc[i - 1] >= w - 1 for i in range(1, e)):
            return ab
    return None


def core_from_runner_counts(counts: Sequence[int], e: int | None = None) -> Partition:
    """The e-core whose pushed-up abacus has the given runner counts."""
    e = len(counts) if e is None else e
    beta = [r + e * k for r, c in enumerate(counts) for k in range(c)]
    return AbacusConfig(e, tuple(beta)).partition()


def rouquier_core_example(e: int, w: int) -> Partition:
    """Core with runner counts ``(0, w-1, 2(w-1), ...)``."""
    return core_from_runner_counts([i * (w - 1) for i in range(e)], e)


# -- block labels ---------------------------------------------------------------------

@dataclass(frozen=True)
class BlockLabel:
    weight: int
    core: Partition

    def to_json(self) -> dict:
        return {"weight": self.weight, "core": self.core.to_json()}

    def __str__(self):
        return f"(w={self.weight}, core={self.core})"


def block_label(p, e: int) -> BlockLabel:
    core, w = e_core_and_weight(p, e)
    return BlockLabel(w, core)


def group_blocks(parts: Iterable, e: int) -> dict[BlockLabel, list[Partition]]:
    """Group partitions by block label, preserving input order within each block."""
    out: dict[BlockLabel, list[Partition]] = {}
    for p in parts:
        p = _as_partition(p)
        out.setdefault(block_label(p, e), []).append(p)
    return out


def blocks_of(n: int, e: int) -> dict[BlockLabel, list[Partition]]:
    """Blocks of ``Lambda(n, n)``: all partitions of ``n`` grouped by (weight, core)."""
    return group_blocks(partitions(n), e)


def blocks_to_json(blocks: dict[BlockLabel, list[Partition]]) -> list[dict]:
    return [{**lab.to_json(), "partitions": [p.to_json() for p in ps]} for lab, ps in blocks.items()]


def blocks_to_csv(blocks: dict[BlockLabel, list[Partition]]) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["weight", "core", "partition"])
    for lab, ps in blocks.items():
        for p in ps:
            wr.writerow([lab.weight, " ".join(map(str, lab.core.parts)), " ".join(map(str, p.parts))])
    return buf.getvalue()
