"""Exact linear algebra over the rationals and prime fields.

Vectors are sparse ``dict[int, scalar]`` maps with no stored zeros.  Scalars
are :class:`fractions.Fraction` over the rationals and plain ``int`` residues
over ``GF(l)``.  Elimination is pivoted Gauss-Jordan with a fixed pivot rule
(first nonzero column), so every result is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

SparseVec = dict


class Field:
    """Base class for the two exact fields used throughout the package."""

    characteristic: int = 0

    def __call__(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def descriptor(self) -> str:
        raise NotImplementedError

    @staticmethod
    def from_descriptor(desc: str) -> "Field":
        """Parse ``"rational"``, ``"QQ"``, ``"prime(5)"`` or ``"GF(5)"``."""
        d = desc.strip()
        if d.lower() in ("rational", "rationals", "qq", "q"):
            return QQ
        for prefix in ("prime(", "gf(", "f("):
            if d.lower().startswith(prefix) and d.endswith(")"):
                return GF(int(d[len(prefix):-1]))
        if d.isdigit():
            return GF(int(d))
        raise ValueError(f"unknown field descriptor {desc!r}")


class RationalField(Field):
    characteristic = 0

    def __call__(self, x):
        return Fraction(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def descriptor(self) -> str:
        return "rational"

    def encode(self, x) -> list[int]:
        x = Fraction(x)
        return [x.numerator, x.denominator]

    def decode(self, data):
        return Fraction(data[0], data[1])

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p

    def __call__(self, x):
        p = self.characteristic
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def inv(self, x):
        x = int(x) % self.characteristic
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.characteristic)

    def descriptor(self) -> str:
        return f"prime({self.characteristic})"

    def encode(self, x) -> list[int]:
        return [int(x)]

    def decode(self, data):
        return self(data[0])

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()
_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


# -- sparse vector helpers -------------------------------------------------

def vec_axpy(y: SparseVec, a, x: Mapping, F: Field) -> None:
    """In place ``y += a*x``; drops entries that cancel."""
    if a == 0:
        return
    p = F.characteristic
    for k, v in x.items():
        nv = y.get(k, 0) + a * v
        if p:
            nv %= p
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)


def vec_scale(x: Mapping, a, F: Field) -> SparseVec:
    if a == 0:
        return {}
    p = F.characteristic
    if p:
        return {k: v * a % p for k, v in x.items() if v * a % p}
    return {k: v * a for k, v in x.items()}


def vec_clean(x: Mapping, F: Field) -> SparseVec:
    out = {}
    for k, v in x.items():
        v = F(v)
        if v:
            out[k] = v
    return out


@dataclass(frozen=True)
class Matrix:
    """Sparse matrix over an exact field; ``entries`` never stores a zero."""

    rows: int
    cols: int
    field: Field
    entries: Mapping = dc_field(default_factory=dict)

    def __post_init__(self):
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry {(r, c)} outside {self.rows}x{self.cols}")
            if v == 0:
                raise ValueError("sparse matrix must not store zeros")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], F: Field = QQ, cols: int | None = None) -> "Matrix":
        nrows = len(rows)
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        ent = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                v = F(v)
                if v:
                    ent[(i, j)] = v
        return cls(nrows, ncols, F, ent)

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[Mapping], cols: int, F: Field) -> "Matrix":
        ent = {}
        for i, row in enumerate(rows):
            for j, v in row.items():
                v = F(v)
                if v:
                    ent[(i, j)] = v
        return cls(len(rows), cols, F, ent)

    def row_dicts(self) -> list[SparseVec]:
        out: list[SparseVec] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def to_dense(self) -> list[list]:
        out = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def apply(self, x: Sequence | Mapping) -> list:
        """Return ``self @ x`` as a dense list."""
        F = self.field
        xs = x if isinstance(x, Mapping) else dict(enumerate(x))
        out = [F.zero] * self.rows
        for (r, c), v in self.entries.items():
            xv = xs.get(c, 0)
            if xv:
                out[r] = F(out[r] + v * xv)
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, self.field, {(c, r): v for (r, c), v in self.entries.items()})

    def permute_rows(self, perm: Sequence[int]) -> "Matrix":
        """Row ``i`` of the result is row ``perm[i]`` of ``self``."""
        where = {old: new for new, old in enumerate(perm)}
        return Matrix(self.rows, self.cols, self.field,
                      {(where[r], c): v for (r, c), v in self.entries.items()})


class EchelonBasis:
    """Incrementally maintained reduced row echelon form of a span.

    Every stored row has a leading 1 at its pivot column and zeros in all
    other pivot columns, so reducing a vector needs one pass.
    """

    def __init__(self, F: Field, vectors: Iterable[Mapping] = ()):
        self.field = F
        self.pivots: dict[int, SparseVec] = {}
        for v in vectors:
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Mapping) -> SparseVec:
        F = self.field
        r = dict(v)
        for c in [c for c in v if c in self.pivots]:
            a = r.get(c, 0)
            if a:
                vec_axpy(r, -a, self.pivots[c], F)
        return r

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)

    def add(self, v: Mapping) -> bool:
        """Add ``v`` to the span; returns ``True`` if it was independent."""
        F = self.field
        r = self.reduce(v)
        if not r:
            return False
        c = min(r)
        r = vec_scale(r, F.inv(r[c]), F)
        for row in self.pivots.values():
            a = row.get(c, 0)
            if a:
                vec_axpy(row, -a, r, F)
        self.pivots[c] = r
        return True

    def basis(self) -> list[SparseVec]:
        return [dict(self.pivots[c]) for c in sorted(self.pivots)]

    def coordinates(self, v: Mapping) -> SparseVec | None:
        """Coordinates of ``v`` against :meth:`basis`, or ``None`` if outside the span."""
        order = sorted(self.pivots)
        coords = {i: v[c] for i, c in enumerate(order) if v.get(c, 0)}
        if self.reduce(v):
            return None
        return coords


def _rref(m: Matrix, extra_cols: int = 0, col_order: Sequence[int] | None = None) -> EchelonBasis:
    ech = EchelonBasis(m.field)
    rows = m.row_dicts()
    if col_order is not None:
        rank_of = {c: i for i, c in enumerate(col_order)}
        rows = [{rank_of[c]: v for c, v in r.items()} for r in rows]
    for r in rows:
        ech.add(r)
    return ech


def rank(m: Matrix) -> int:
    return _rref(m).rank


def kernel_basis(m: Matrix) -> list[list]:
    """Dense basis of the right null space ``{v : m v = 0}``.

    One vector per free column; the free coordinate is 1 and the pivot
    coordinates are read off the RREF.
    """
    F = m.field
    ech = _rref(m)
    out = []
    for f in range(m.cols):
        if f in ech.pivots:
            continue
        v = [F.zero] * m.cols
        v[f] = F.one
        for c, row in ech.pivots.items():
            a = row.get(f, 0)
            if a:
                v[c] = F(-a)
        out.append(v)
    return out


def solve(m: Matrix, b: Sequence, col_order: Sequence[int] | None = None) -> list | None:
    """Return some ``x`` with ``m x = b``, or ``None`` when the system is inconsistent.

    ``col_order`` changes which unknowns are preferred as pivots, which gives a
    different (equally valid) particular solution.
    """
    F = m.field
    n = m.cols
    order = list(col_order) if col_order is not None else list(range(n))
    if sorted(order) != list(range(n)):
        raise ValueError("col_order must be a permutation of the columns")
    rank_of = {c: i for i, c in enumerate(order)}
    ech = EchelonBasis(F)
    rows = m.row_dicts()
    for i, r in enumerate(rows):
        row = {rank_of[c]: v for c, v in r.items()}
        bi = F(b[i])
        if bi:
            row[n] = bi
        if row:
            ech.add(row)
    if n in ech.pivots:
        return None
    x = [F.zero] * n
    for c, row in ech.pivots.items():
        x[order[c]] = row.get(n, F.zero)
    return x


def span_basis(vectors: Iterable[Mapping], F: Field) -> list[SparseVec]:
    return EchelonBasis(F, vectors).basis()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ValueError("shape mismatch")
    F = a.field
    brows = b.row_dicts()
    out: dict = {}
    arows = a.row_dicts()
    for i, row in enumerate(arows):
        acc: SparseVec = {}
        for k, v in row.items():
            vec_axpy(acc, v, brows[k], F)
        for j, v in acc.items():
            out[(i, j)] = v
    return Matrix(a.rows, b.cols, F, out)
