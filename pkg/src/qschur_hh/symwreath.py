"""Symmetric functions, graded invariants of tensor powers and the wreath-product formula.

Also the map ``pi: Lambda_w -> (k[y_1..y_w]/<y_i^e>)^{S_w}`` sending ``x_i`` to ``y_i``,
analysed by brute-force linear algebra.  Degrees here are polynomial degrees
(``deg y_i = 1``); cohomological degree is twice that.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .graded import GradedDims
from .linalg import QQ, EchelonBasis, Field, vec_axpy


# -- partitions ---------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build from any iterable, sorting and dropping zeros."""
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        """Number of parts equal to ``i``."""
        return self.parts.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.parts).items()))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> list[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, optionally bounded."""
    if n < 0:
        raise ValueError("n >= 0 required")
    top = n if max_part is None else min(n, max_part)
    out: list[Partition] = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(Partition(tuple(acc)))
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for p in range(min(rest, cap), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, top, [])
    return out


# -- invariants of tensor powers ----------------------------------------------------

CONVENTIONS = ("unsigned", "signed")


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")


def _series_mul(a: list[int], b: list[int], top: int) -> list[int]:
    out = [0] * (top + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b[: top + 1 - i]):
                out[i + j] += x * y
    return out


def invariant_tensor_dims(v: GradedDims | Sequence[int], p: int, convention: str = "unsigned") -> GradedDims:
    """Graded dims of ``(V^{(x)p})^{S_p}``.

    Uses the generating function ``prod_d (1 - u t^d)^{-v_d}`` (symmetric
    powers) with odd degrees replaced by ``(1 + u t^d)^{v_d}`` (exterior powers)
    under the signed convention, and reads off the coefficient of ``u^p``.
    """
    _check_convention(convention)
    if p < 0:
        raise ValueError("p >= 0 required")
    v = GradedDims(v)
    top = p * max(len(v) - 1, 0)
    # coeffs[k][d]: coefficient of u^k t^d
    coeffs = [[0] * (top + 1) for _ in range(p + 1)]
    coeffs[0][0] = 1
    for d, n in enumerate(v):
        for _ in range(n):
            odd = convention == "signed" and d % 2 == 1
            new = [row[:] for row in coeffs]
            for k in range(p + 1):
                for deg in range(top + 1):
                    c = coeffs[k][deg]
                    if not c:
                        continue
                    j = 1
                    while k + j <= p and deg + j * d <= top and (not odd or j <= 1):
                        new[k + j][deg + j * d] += c
                        j += 1
            coeffs = new
    return GradedDims(coeffs[p])


def wreath_hh_dims(v: GradedDims | Sequence[int], w: int, convention: str = "unsigned") -> GradedDims:
    """``sum_{lambda |- w} prod_i invariant_tensor_dims(v, p_i(lambda))``."""
    _check_convention(convention)
    if w < 1:
        raise ValueError("w >= 1 required")
    v = GradedDims(v)
    total = GradedDims()
    for lam in partitions(w):
        term = GradedDims([1])
        for _, m in lam.multiplicities().items():
            term = term * invariant_tensor_dims(v, m, convention)
        total = total + term
    return total


def brute_force_invariant_dims(v: GradedDims | Sequence[int], p: int, convention: str = "unsigned",
                               field: Field = QQ) -> GradedDims:
    """Oracle: invariants of ``V^{(x)p}`` by explicit basis tensors and the (signed) permutation action."""
    _check_convention(convention)
    v = GradedDims(v)
    basis = [d for d, n in enumerate(v) for _ in range(n)]
    tensors = list(itertools.product(range(len(basis)), repeat=p))
    dims: Counter = Counter()
    by_degree: dict[int, list] = {}
    for t in tensors:
        by_degree.setdefault(sum(basis[i] for i in t), []).append(t)
    gens = _transpositions(p)
    for deg, ts in by_degree.items():
        # invariants = common kernel of (s - 1) for adjacent transpositions s
        local = {t: k for k, t in enumerate(ts)}
        rows = []
        for s in gens:
            for t in ts:
                img, sign = _act(s, t, basis, convention)
                row = {}
                vec_axpy(row, field(sign), {local[img]: 1}, field)
                vec_axpy(row, field(-1), {local[t]: 1}, field)
                rows.append(row)
        # each (s - 1) is symmetric, so its columns span its row space
        r = _rank_columns(rows, len(ts), field)
        dims[deg] = len(ts) - r
    return GradedDims(dict(dims))


def _transpositions(p: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(p - 1)]


def _act(s, t, basis, convention):
    i, j = s
    lst = list(t)
    lst[i], lst[j] = lst[j], lst[i]
    sign = 1
    if convention == "signed" and basis[t[i]] % 2 and basis[t[j]] % 2:
        sign = -1
    return tuple(lst), sign


def _rank_columns(cols: list[dict], n: int, field: Field) -> int:
    """Rank of the ``n x len(cols)`` matrix whose columns are ``cols``."""
    rows: list[dict] = [{} for _ in range(n)]
    for c, col in enumerate(cols):
        for r, v in col.items():
            rows[r][c] = v
    return EchelonBasis(field, rows).rank


# -- symmetric polynomials in the elementary basis ----------------------------------

Monomial = tuple  # exponent vector (a_1, ..., a_w) of e_1^a_1 ... e_w^a_w


@dataclass(frozen=True)
class SymPoly:
    """Polynomial in ``e_1..e_w``; ``terms`` is a sorted tuple of (exponents, coefficient)."""

    w: int
    terms: tuple = ()

    @classmethod
    def from_dict(cls, w: int, d: dict) -> "SymPoly":
        return cls(w, tuple(sorted((tuple(m), Fraction(c)) for m, c in d.items() if c)))

    @classmethod
    def elementary(cls, k: int, w: int) -> "SymPoly":
        if k == 0:
            return cls.from_dict(w, {(0,) * w: 1})
        if k > w:
            return cls(w)
        m = [0] * w
        m[k - 1] = 1
        return cls.from_dict(w, {tuple(m): 1})

    def as_dict(self) -> dict:
        return dict(self.terms)

    @staticmethod
    def weight(m: Monomial) -> int:
        return sum((i + 1) * a for i, a in enumerate(m))

    @property
    def degree(self) -> int:
        return max((self.weight(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({self.weight(m) for m, _ in self.terms}) <= 1

    def __add__(self, other: "SymPoly") -> "SymPoly":
        d = self.as_dict()
        for m, c in other.terms:
            d[m] = d.get(m, 0) + c
        return SymPoly.from_dict(self.w, d)

    def __neg__(self):
        return SymPoly.from_dict(self.w, {m: -c for m, c in self.terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            return SymPoly.from_dict(self.w, {m: c * other for m, c in self.terms})
        d: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                d[m] = d.get(m, 0) + c1 * c2
        return SymPoly.from_dict(self.w, d)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def expand(self, nvars: int | None = None) -> dict:
        """Expand in ``x_1..x_n`` (default ``n = w``); returns ``{exponent tuple: coeff}``."""
        n = self.w if nvars is None else nvars
        cache: dict[int, dict] = {}

        def elem(k):
            if k not in cache:
                d = {}
                for sub in itertools.combinations(range(n), k):
                    d[tuple(1 if i in sub else 0 for i in range(n))] = 1
                cache[k] = d
            return cache[k]

        out: dict = {}
        for m, c in self.terms:
            acc = {(0,) * n: Fraction(c)}
            for k, a in enumerate(m, start=1):
                for _ in range(a):
                    acc = _poly_mul(acc, elem(k))
            for mono, v in acc.items():
                out[mono] = out.get(mono, 0) + v
        return {k: v for k, v in out.items() if v}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms, key=lambda t: (-self.weight(t[0]), t[0]), reverse=False):
            mono = "*".join(f"e{i+1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(m) if a) or "1"
            parts.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"w": self.w, "terms": [[list(m), str(c)] for m, c in self.terms]}


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def power_sum_in_e(k: int, w: int) -> SymPoly:
    """``p_k`` in terms of ``e_1..e_w`` by Newton's identity.

    ``p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k`` with ``e_i = 0`` for ``i > w``.
    """
    if k < 1 or w < 1:
        raise ValueError("k >= 1 and w >= 1 required")
    out = SymPoly.elementary(k, w) * ((-1) ** (k - 1) * k)
    for i in range(1, min(k - 1, w) + 1):
        out = out + SymPoly.elementary(i, w) * power_sum_in_e(k - i, w) * ((-1) ** (i - 1))
    return out


def power_sum_expanded(k: int, n: int) -> dict:
    """``sum_i x_i^k`` as an exponent dict in ``n`` variables."""
    out = {}
    for i in range(n):
        m = [0] * n
        m[i] = k
        out[tuple(m)] = Fraction(1)
    return out


def e_monomials(w: int, d: int) -> list[Monomial]:
    """Exponent vectors of ``e``-monomials of weighted degree ``d``; a basis of ``Lambda_{w,d}``."""
    out = []
    for lam in partitions(d, max_part=w):
        m = [0] * w
        for part in lam.parts:
            m[part - 1] += 1
        out.append(tuple(m))
    return out


def lambda_dims(w: int, max_degree: int) -> GradedDims:
    """Hilbert function of ``Lambda_w``: partitions of d with parts at most ``w``."""
    return GradedDims([len(partitions(d, max_part=w)) for d in range(max_degree + 1)])


# -- the truncated invariant ring and pi ---------------------------------------------

def truncated_invariant_dims(e: int, w: int, max_degree: int | None = None) -> GradedDims:
    """Graded dims of ``(k[y_1..y_w]/<y_i^e>)^{S_w}``: partitions of d, at most w parts, each < e."""
    if e < 1 or w < 1:
        raise ValueError("e >= 1 and w >= 1 required")
    top = w * (e - 1) if max_degree is None else max_degree
    return GradedDims([len(partitions(d, max_part=e - 1, max_len=w)) for d in range(top + 1)])


def orbit_sum_dims(e: int, w: int, field: Field = QQ) -> GradedDims:
    """Oracle: rank of the symmetrizations of all truncated monomials, per degree."""
    out: Counter = Counter()
    perms = list(itertools.permutations(range(w)))
    by_deg: dict[int, list] = {}
    for m in itertools.product(range(e), repeat=w):
        by_deg.setdefault(sum(m), []).append(m)
    for d, monos in by_deg.items():
        idx = {m: k for k, m in enumerate(monos)}
        ech = EchelonBasis(field)
        for m in monos:
            v: dict = {}
            for s in perms:
                vec_axpy(v, field(1), {idx[tuple(m[s[i]] for i in range(w))]: 1}, field)
            ech.add(v)
        out[d] = ech.rank
    return GradedDims(dict(out))


class PiMap:
    """``pi: Lambda_w -> (k[y]/<y^e>)^{S_w}`` expressed in the orbit-sum (monomial symmetric) basis."""

    def __init__(self, e: int, w: int, field: Field = QQ):
        self.e, self.w, self.field = e, w, field

    def target_basis(self, d: int) -> list[Partition]:
        return partitions(d, max_part=self.e - 1, max_len=self.w)

    def image(self, f: SymPoly) -> dict:
        """Coordinates of ``pi(f)`` against monomial symmetric functions ``m_mu`` (mu indexes)."""
        F = self.field
        poly = f.expand(self.w)
        out: dict = {}
        for mono, c in poly.items():
            if max(mono, default=0) >= self.e:
                continue
            # coefficient of m_mu is the coefficient of the sorted monomial
            if list(mono) != sorted(mono, reverse=True):
                continue
            vec_axpy(out, F(c), {Partition.of(mono): 1}, F)
        return out

    def matrix_columns(self, d: int) -> tuple[list[Monomial], list[dict]]:
        src = e_monomials(self.w, d)
        cols = []
        for m in src:
            img = self.image(SymPoly.from_dict(self.w, {m: 1}))
            cols.append(img)
        return src, cols

    def kernel(self, d: int) -> list[SymPoly]:
        """Basis of ``Ker pi`` in degree ``d`` (RREF, deterministic)."""
        from .linalg import Matrix, kernel_basis
        src, cols = self.matrix_columns(d)
        tgt = self.target_basis(d)
        pos = {mu: r for r, mu in enumerate(tgt)}
        ent = {}
        for c, col in enumerate(cols):
            for mu, v in col.items():
                ent[(pos[mu], c)] = v
        m = Matrix(len(tgt), len(src), self.field, ent)
        out = []
        for vec in kernel_basis(m):
            out.append(SymPoly.from_dict(self.w, {src[i]: _lift(c) for i, c in enumerate(vec) if c}))
        return out

    def image_rank(self, d: int) -> int:
        src, cols = self.matrix_columns(d)
        return _rank_columns_by_keys(cols, self.field)


def _lift(c):
    """Scalar from the field as a Fraction (prime residues lift to their representative)."""
    return Fraction(c)


def _rank_columns_by_keys(cols: list[dict], field: Field) -> int:
    keys = sorted({k for c in cols for k in c})
    pos = {k: i for i, k in enumerate(keys)}
    return _rank_columns([{pos[k]: v for k, v in c.items()} for c in cols], len(keys), field)


def _coords(f: SymPoly, d: int, field: Field) -> dict:
    """Coordinates of the degree-``d`` part of ``f`` against :func:`e_monomials`."""
    idx = {m: i for i, m in enumerate(e_monomials(f.w, d))}
    out: dict = {}
    for m, c in f.terms:
        if SymPoly.weight(m) == d:
            vec_axpy(out, field(c), {idx[m]: 1}, field)
    return out


def ideal_degree_piece(gens: Sequence[SymPoly], w: int, d: int, field: Field = QQ) -> EchelonBasis:
    """Span of ``g * (e-monomial)`` in ``Lambda_{w,d}`` over homogeneous generators ``g``."""
    ech = EchelonBasis(field)
    for g in gens:
        if not g:
            continue
        if not g.is_homogeneous():
            raise ValueError("ideal generators must be homogeneous")
        k = g.degree
        if k > d:
            continue
        for m in e_monomials(w, d - k):
            ech.add(_coords(g * SymPoly.from_dict(w, {m: 1}), d, field))
    return ech


def quotient_hilbert(w: int, generators: Sequence[SymPoly], max_degree: int, field: Field = QQ,
                     e: int | None = None) -> GradedDims:
    """Graded dims of ``Lambda_w / <generators>`` through ``max_degree`` (``e`` is accepted for symmetry)."""
    dims = []
    for d in range(max_degree + 1):
        dims.append(len(e_monomials(w, d)) - ideal_degree_piece(generators, w, d, field).rank)
    return GradedDims(dims)


def kernel_pi_basis(e: int, w: int, max_degree: int, field: Field = QQ) -> list[SymPoly]:
    pi = PiMap(e, w, field)
    return [f for d in range(max_degree + 1) for f in pi.kernel(d)]


def kernel_pi_report(e: int, w: int, max_degree: int, field: Field = QQ,
                     generator_range: tuple[int, int] | None = None) -> dict:
    """Degreewise comparison of ``Ker pi`` with the ideal ``<p_a, ..., p_b>``.

    ``generator_range`` defaults to ``(e + 1, e + w + 1)``.  For each degree the
    report gives both dimensions and witnesses in each direction: kernel
    elements outside the ideal and ideal elements outside the kernel.
    """
    if max_degree < e + w + 1:
        raise ValueError("max_degree must be at least e + w + 1")
    lo, hi = generator_range or (e + 1, e + w + 1)
    gens = [power_sum_in_e(k, w) for k in range(lo, hi + 1)]
    pi = PiMap(e, w, field)
    degrees = []
    power_sums_in_kernel = []
    for k in range(1, max_degree + 1):
        if not pi.image(power_sum_in_e(k, w)):
            power_sums_in_kernel.append(k)
    for d in range(max_degree + 1):
        ker = pi.kernel(d)
        ker_ech = EchelonBasis(field, [_coords(f, d, field) for f in ker])
        ideal = ideal_degree_piece(gens, w, d, field)
        # witnesses: kernel basis vectors not in the ideal, ideal basis vectors not in the kernel
        monos = e_monomials(w, d)

        def as_poly(vec):
            return SymPoly.from_dict(w, {monos[i]: _lift(c) for i, c in vec.items()})

        ker_not_ideal = [str(f) for f in ker if not ideal.contains(_coords(f, d, field))]
        ideal_not_ker = [str(as_poly(v)) for v in ideal.basis() if not ker_ech.contains(v)]
        both = EchelonBasis(field, ker_ech.basis() + ideal.basis()).rank
        # a power sum of this degree in Ker pi but outside the ideal is the clearest witness
        pk = power_sum_in_e(d, w) if d >= 1 else None
        pk_witness = None
        if pk is not None and not pi.image(pk) and not ideal.contains(_coords(pk, d, field)):
            pk_witness = f"p_{d}"
        degrees.append({
            "degree": d,
            "cohomological_degree": 2 * d,
            "lambda_dim": len(monos),
            "kernel_dim": len(ker),
            "image_dim": len(monos) - len(ker),
            "ideal_dim": ideal.rank,
            "kernel_mod_ideal_dim": both - ideal.rank,
            "kernel_in_ideal": not ker_not_ideal,
            "ideal_in_kernel": not ideal_not_ker,
            "power_sum_witness": pk_witness,
            "kernel_not_in_ideal": ker_not_ideal,
            "ideal_not_in_kernel": ideal_not_ker,
        })
    agree = all(r["kernel_in_ideal"] and r["ideal_in_kernel"] for r in degrees)
    return {
        "e": e, "w": w, "max_degree": max_degree, "degree_convention": "y-degree",
        "field": field.descriptor(),
        "generators": [f"p_{k}" for k in range(lo, hi + 1)],
        "power_sums_in_kernel": power_sums_in_kernel,
        "agree": agree,
        "degrees": degrees,
    }


def quotient_by_kernel_dims(e: int, w: int, max_degree: int, field: Field = QQ) -> GradedDims:
    """``Lambda_w / Ker pi`` through ``max_degree`` using the brute-force kernel basis as generators."""
    return quotient_hilbert(w, kernel_pi_basis(e, w, max_degree, field), max_degree, field)


def complete_intersection_hilbert(w: int, gen_degrees: Sequence[int], max_degree: int) -> GradedDims:
    """Series ``prod (1 - t^{d_j}) / prod_{k<=w} (1 - t^k)`` truncated; valid for regular sequences."""
    series = [1] + [0] * max_degree
    for k in range(1, w + 1):
        inv = [1 if i % k == 0 else 0 for i in range(max_degree + 1)]
        series = _series_mul(series, inv, max_degree)
    for d in gen_degrees:
        factor = [0] * (max_degree + 1)
        factor[0] = 1
        if d <= max_degree:
            factor[d] = -1
        series = _series_mul(series, factor, max_degree)
    return GradedDims(series)


def symmetric_square_total(n: int) -> int:
    return comb(n + 1, 2)
