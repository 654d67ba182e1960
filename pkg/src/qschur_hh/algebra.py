"""Finite-dimensional algebras given by structure constants, and bound quiver algebras.

Composition is read right to left: in a product ``p*q`` the path ``q`` is
traversed first, so ``p*q`` is nonzero only when ``source(p) == target(q)``.
A path is stored in written order, i.e. ``(a_k, ..., a_1)`` with ``a_1``
traversed first.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .linalg import QQ, EchelonBasis, Field, Matrix, kernel_basis, vec_axpy, vec_scale


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("arrow names must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise AlgebraError(f"arrow {a.name} has an endpoint outside the vertex set")

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)


@dataclass(frozen=True)
class Path:
    """A path of the quiver: arrow indices in written order."""

    source: int
    target: int
    arrows: tuple[int, ...]

    def __len__(self):
        return len(self.arrows)


@dataclass(frozen=True)
class Relation:
    """Linear combination of parallel paths, each path a tuple of arrow names in written order."""

    terms: tuple[tuple[object, tuple[str, ...]], ...]

    def __post_init__(self):
        if not self.terms:
            raise AlgebraError("a relation needs at least one term")


class Algebra:
    """Finite-dimensional associative unital algebra given by structure constants.

    ``table[(i, j)]`` is the sparse vector of ``b_i * b_j``.  ``idempotents``
    is a complete set of primitive orthogonal idempotents (sparse vectors), and
    ``radical`` a basis of the Jacobson radical.
    """

    def __init__(self, field: Field, labels: Sequence[str], table: Mapping,
                 idempotents: Sequence[Mapping], radical: Sequence[Mapping],
                 idempotent_labels: Sequence | None = None):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.table = {k: v for k, v in table.items() if v}
        self.idempotents = [dict(x) for x in idempotents]
        self.idempotent_labels = list(idempotent_labels) if idempotent_labels is not None \
            else list(range(1, len(self.idempotents) + 1))
        self.radical_basis = [dict(x) for x in radical]
        unit: dict = {}
        for eps in self.idempotents:
            vec_axpy(unit, 1, eps, field)
        self.unit_vector = unit

    # -- arithmetic on sparse vectors
    def mul_vec(self, x: Mapping, y: Mapping) -> dict:
        F = self.field
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.table.get((i, j))
                if prod:
                    vec_axpy(out, a * b, prod, F)
        return out

    def element(self, coeffs: Mapping) -> "AlgebraElement":
        return AlgebraElement(self, coeffs)

    def basis_element(self, i: int) -> "AlgebraElement":
        return AlgebraElement(self, {i: 1})

    def basis(self) -> list["AlgebraElement"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit_vector)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    # -- structural checks
    def check_associative(self) -> list[tuple[int, int, int]]:
        """Basis triples where ``(xy)z != x(yz)``; empty when associative."""
        bad = []
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            left = self.mul_vec(self.mul_vec({i: 1}, {j: 1}), {k: 1})
            right = self.mul_vec({i: 1}, self.mul_vec({j: 1}, {k: 1}))
            if left != right:
                bad.append((i, j, k))
        return bad

    def check_unit(self) -> bool:
        u = self.unit_vector
        return all(self.mul_vec(u, {i: 1}) == {i: self.field.one}
                   and self.mul_vec({i: 1}, u) == {i: self.field.one}
                   for i in range(self.dim))

    def left_matrix(self, x: Mapping) -> Matrix:
        """Matrix of ``y -> x*y`` in the standard basis."""
        ent = {}
        for j in range(self.dim):
            for i, v in self.mul_vec(x, {j: 1}).items():
                ent[(i, j)] = v
        return Matrix(self.dim, self.dim, self.field, ent)

    def quotient(self, ideal: "TwoSidedIdeal") -> "QuotientAlgebra":
        return QuotientAlgebra(self, ideal)

    def __repr__(self):
        return f"<{type(self).__name__} dim={self.dim} over {self.field!r}>"


class AlgebraElement:
    """An element of an :class:`Algebra`; immutable, no explicit zero coefficients."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs: Mapping):
        F = algebra.field
        self.algebra = algebra
        self.coeffs = {k: F(v) for k, v in coeffs.items() if F(v)}

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise AlgebraError("elements of different algebras")
            return other.coeffs
        return vec_scale(self.algebra.unit_vector, self.algebra.field(other), self.algebra.field)

    def __add__(self, other):
        out = dict(self.coeffs)
        vec_axpy(out, 1, self._coerce(other), self.algebra.field)
        return AlgebraElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, vec_scale(self.coeffs, -1, self.algebra.field))

    def __sub__(self, other):
        out = dict(self.coeffs)
        vec_axpy(out, -1, self._coerce(other), self.algebra.field)
        return AlgebraElement(self.algebra, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return AlgebraElement(self.algebra, self.algebra.mul_vec(self.coeffs, self._coerce(other)))
        return AlgebraElement(self.algebra, vec_scale(self.coeffs, self.algebra.field(other), self.algebra.field))

    def __rmul__(self, other):
        return AlgebraElement(self.algebra, vec_scale(self.coeffs, self.algebra.field(other), self.algebra.field))

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra is other.algebra and self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            lab = self.algebra.labels[k]
            parts.append(lab if c == 1 else f"-{lab}" if c == -1 else f"{c}*{lab}")
        return " + ".join(parts).replace("+ -", "- ")


class BoundQuiverAlgebra(Algebra):
    """Path algebra of a quiver modulo monomial and binomial relations.

    Each binomial relation ``c1*p1 + c2*p2`` becomes the rewriting rule
    ``lead -> -(c_other/c_lead) * other`` where ``lead`` is the larger path in
    degree-lexicographic order on arrow indices, read in traversal order.  Monomial relations rewrite to
    zero.  The normal forms of the rewriting system are the basis; the
    constructor refuses a system that is not confluent up to ``max_length``.
    """

    def __init__(self, quiver: Quiver, relations: Sequence[Relation], field: Field = QQ,
                 max_length: int = 6):
        self.quiver = quiver
        self.relations = list(relations)
        self.max_length = max_length
        self.field = F = field
        self.rules: dict[tuple[int, ...], tuple[object, tuple[int, ...]] | None] = {}
        for rel in self.relations:
            terms = []
            for c, names in rel.terms:
                idx = tuple(quiver.arrow_index(n) for n in names)
                self._check_composable(idx)
                terms.append((F(c), idx))
            ends = {self._endpoints(t[1]) for t in terms}
            if len(ends) != 1:
                raise AlgebraError(f"relation {rel} is not a combination of parallel paths")
            if len(terms) == 1:
                self.rules[terms[0][1]] = None
            elif len(terms) == 2:
                (c1, p1), (c2, p2) = sorted(terms, key=lambda t: self.path_order_key(t[1]), reverse=True)
                self.rules[p1] = (F(-c2 * F.inv(c1)), p2)
            else:
                raise AlgebraError("only monomial and binomial relations are supported")

        self.paths = self._enumerate_normal_forms()
        self._path_index = {p.arrows if p.arrows else ("e", p.source): k for k, p in enumerate(self.paths)}
        labels = [self.path_label(p) for p in self.paths]
        table = {}
        for i, p in enumerate(self.paths):
            for j, q in enumerate(self.paths):
                if p.source != q.target:
                    continue
                red = self.reduce_path(p.arrows + q.arrows if (p.arrows or q.arrows) else ("e", p.source))
                if red is None:
                    continue
                c, word = red
                table[(i, j)] = {self._index_of(word, q.source): c}
        idem = [{self._path_index[("e", v)]: F.one} for v in quiver.vertices]
        rad = [{k: F.one} for k, p in enumerate(self.paths) if len(p) > 0]
        super().__init__(F, labels, table, idem, rad, idempotent_labels=list(quiver.vertices))

    # -- paths
    @staticmethod
    def path_order_key(word: tuple[int, ...]) -> tuple:
        """Degree-lexicographic key on the traversal order of the arrows."""
        return (len(word), tuple(reversed(word)))

    def _endpoints(self, word: tuple[int, ...]) -> tuple[int, int]:
        arrows = self.quiver.arrows
        return arrows[word[-1]].source, arrows[word[0]].target

    def _check_composable(self, word: tuple[int, ...]) -> None:
        arrows = self.quiver.arrows
        for a, b in zip(word, word[1:]):
            if arrows[a].source != arrows[b].target:
                raise AlgebraError(f"arrows {arrows[a].name}, {arrows[b].name} are not composable")

    def _index_of(self, word, vertex) -> int:
        return self._path_index[word if word and word[0] != "e" else ("e", vertex)]

    def path_label(self, p: Path) -> str:
        if not p.arrows:
            return f"e{p.source}"
        return "*".join(self.quiver.arrows[a].name for a in p.arrows)

    def _one_step(self, word: tuple[int, ...]):
        """All single rewrites of ``word``: list of (coef, word) or ``None`` for zero."""
        out = []
        for lhs, rhs in self.rules.items():
            n = len(lhs)
            for s in range(len(word) - n + 1):
                if word[s:s + n] == lhs:
                    if rhs is None:
                        out.append(None)
                    else:
                        c, r = rhs
                        out.append((c, word[:s] + r + word[s + n:]))
        return out

    def reduce_path(self, word):
        """Normal form of a path as ``(coef, word)``, or ``None`` if it reduces to 0."""
        if word and word[0] == "e":
            return (self.field.one, ())
        coef = self.field.one
        while True:
            steps = self._one_step(word)
            if not steps:
                return (coef, word)
            step = steps[0]
            if step is None:
                return None
            c, word = step
            coef = self.field(coef * c)

    def all_normal_forms(self, word) -> set:
        """Every normal form reachable from ``word`` by any rewriting order."""
        F = self.field
        seen = set()
        results = set()
        stack = [(F.one, word)]
        while stack:
            c, w = stack.pop()
            if (c, w) in seen:
                continue
            seen.add((c, w))
            steps = self._one_step(w)
            if not steps:
                results.add((c, w))
                continue
            for st in steps:
                if st is None:
                    results.add(None)
                else:
                    stack.append((F(c * st[0]), st[1]))
        return results

    def words(self, length: int):
        """All composable arrow words of the given length (written order)."""
        arrows = self.quiver.arrows
        if length == 0:
            return
        words = [(i,) for i in range(len(arrows))]
        for _ in range(length - 1):
            words = [(a,) + w for w in words for a in range(len(arrows))
                     if arrows[a].source == arrows[w[0]].target]
        yield from words

    def confluence_violations(self, max_length: int | None = None) -> list:
        """Paths with more than one reachable normal form (empty list = confluent)."""
        bad = []
        for n in range(1, (max_length or self.max_length) + 1):
            for w in self.words(n):
                nf = self.all_normal_forms(w)
                if len(nf) > 1:
                    bad.append((w, nf))
        return bad

    def _enumerate_normal_forms(self) -> list[Path]:
        bad = self.confluence_violations()
        if bad:
            raise AlgebraError(f"rewriting system is not confluent, e.g. at {bad[0]}")
        paths = [Path(v, v, ()) for v in self.quiver.vertices]
        level = [p.arrows for p in ()]
        n = 1
        while True:
            level = [w for w in self.words(n) if not any(
                w[s:s + len(lhs)] == lhs for lhs in self.rules for s in range(len(w) - len(lhs) + 1))]
            if not level:
                break
            if n > self.max_length:
                raise AlgebraError("algebra is not finite-dimensional within max_length")
            for w in level:
                s, t = self._endpoints(w)
                paths.append(Path(s, t, w))
            n += 1
        return paths

    def path_element(self, *names: str) -> AlgebraElement:
        """The element given by a product of named arrows (written order)."""
        if not names:
            return self.one()
        word = tuple(self.quiver.arrow_index(n) for n in names)
        self._check_composable(word)
        red = self.reduce_path(word)
        if red is None:
            return self.zero()
        c, w = red
        return AlgebraElement(self, {self._index_of(w, None): c})

    def arrow(self, name: str) -> AlgebraElement:
        return self.path_element(name)

    def idempotent(self, vertex: int) -> AlgebraElement:
        return AlgebraElement(self, {self._path_index[("e", vertex)]: 1})

    def path_length(self, k: int) -> int:
        return len(self.paths[k])

    def to_json(self) -> dict:
        """Versioned JSON presentation: quiver, relations, basis and structure constants."""
        F = self.field
        return {
            "format": "bound-quiver-algebra",
            "version": 1,
            "field": F.descriptor(),
            "vertices": list(self.quiver.vertices),
            "arrows": [[a.name, a.source, a.target] for a in self.quiver.arrows],
            "relations": [[[F.encode(F(c)), list(p)] for c, p in r.terms] for r in self.relations],
            "basis": self.labels,
            "structure_constants": [
                [i, j, k, F.encode(v)] for (i, j), vec in sorted(self.table.items()) for k, v in sorted(vec.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "BoundQuiverAlgebra":
        if data.get("format") != "bound-quiver-algebra" or data.get("version") != 1:
            raise AlgebraError("unsupported algebra document")
        F = Field.from_descriptor(data["field"])
        quiver = Quiver(tuple(data["vertices"]), tuple(Arrow(n, s, t) for n, s, t in data["arrows"]))
        rels = [Relation(tuple((F.decode(c), tuple(p)) for c, p in r)) for r in data["relations"]]
        alg = cls(quiver, rels, F)
        if alg.labels != data["basis"]:
            raise AlgebraError("basis in document does not match the recomputed basis")
        return alg


# -- the family A_e -----------------------------------------------------------

def arrow_names(i: int) -> tuple[str, str]:
    """Names of the arrows ``i -> i+1`` and ``i+1 -> i``."""
    return f"a{i}", f"b{i}"


def build_A_e(e: int, field: Field = QQ) -> BoundQuiverAlgebra:
    """The algebra on the linear quiver ``1 <-> 2 <-> ... <-> e``.

    Arrows ``a_i: i -> i+1`` and ``b_i: i+1 -> i``; relations
    ``a_i a_{i-1} = 0``, ``b_{i-1} b_i = 0``, ``a_{i-1} b_{i-1} = b_i a_i``
    for ``2 <= i <= e-1``, and ``a_{e-1} b_{e-1} = 0``.
    """
    if e < 2:
        raise AlgebraError("A_e needs e >= 2")
    # all a's before all b's: orients the commutation rule as a_{i-1} b_{i-1} -> b_i a_i
    arrows = [Arrow(arrow_names(i)[0], i, i + 1) for i in range(1, e)]
    arrows += [Arrow(arrow_names(i)[1], i + 1, i) for i in range(1, e)]
    quiver = Quiver(tuple(range(1, e + 1)), tuple(arrows))
    rels = []
    for i in range(2, e):
        rels.append(Relation(((1, (f"a{i}", f"a{i-1}")),)))
        rels.append(Relation(((1, (f"b{i-1}", f"b{i}")),)))
        rels.append(Relation(((1, (f"a{i-1}", f"b{i-1}")), (-1, (f"b{i}", f"a{i}")))))
    rels.append(Relation(((1, (f"a{e-1}", f"b{e-1}")),)))
    alg = BoundQuiverAlgebra(quiver, rels, field, max_length=4)
    alg.e = e
    return alg


def loop(alg: BoundQuiverAlgebra, i: int) -> AlgebraElement:
    """``c_i = b_i a_i``, the nonzero loop at vertex ``i`` of A_e (1 <= i <= e-1)."""
    return alg.path_element(f"b{i}", f"a{i}")


# -- subspaces, ideals, center, radical ----------------------------------------

class TwoSidedIdeal:
    """Two-sided ideal generated by ``generators``; ``basis`` spans ``A g A``."""

    def __init__(self, algebra: Algebra, generators: Iterable):
        self.algebra = algebra
        self.generators = [g.coeffs if isinstance(g, AlgebraElement) else dict(g) for g in generators]
        ech = EchelonBasis(algebra.field)
        for g in self.generators:
            for i in range(algebra.dim):
                left = algebra.mul_vec({i: 1}, g)
                if not left:
                    continue
                for j in range(algebra.dim):
                    ech.add(algebra.mul_vec(left, {j: 1}))
        self.echelon = ech
        self.basis = ech.basis()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, x) -> bool:
        return self.echelon.contains(x.coeffs if isinstance(x, AlgebraElement) else x)

    def elements(self) -> list[AlgebraElement]:
        return [AlgebraElement(self.algebra, b) for b in self.basis]

    def __repr__(self):
        return f"<TwoSidedIdeal dim={self.dim} of {self.algebra!r}>"


def idempotent_ideal(alg: Algebra, vertices: Iterable[int]) -> TwoSidedIdeal:
    """``A eps A`` for ``eps`` the sum of the idempotents at ``vertices``."""
    eps: dict = {}
    for v in vertices:
        vec_axpy(eps, 1, alg.idempotents[alg.idempotent_labels.index(v)], alg.field)
    return TwoSidedIdeal(alg, [eps])


def product_span(alg: Algebra, xs: Sequence[Mapping], ys: Sequence[Mapping]) -> EchelonBasis:
    ech = EchelonBasis(alg.field)
    for x in xs:
        for y in ys:
            ech.add(alg.mul_vec(x, y))
    return ech


def center(alg: Algebra) -> list[AlgebraElement]:
    """Basis of ``Z(A)``: kernel of ``x -> (x b - b x)_b`` over all basis elements ``b``."""
    n = alg.dim
    ent: dict = {}
    F = alg.field
    for b in range(n):
        for j in range(n):
            comm = dict(alg.mul_vec({j: 1}, {b: 1}))
            vec_axpy(comm, -1, alg.mul_vec({b: 1}, {j: 1}), F)
            for k, v in comm.items():
                ent[(b * n + k, j)] = v
    m = Matrix(n * n, n, F, ent)
    return [AlgebraElement(alg, dict(enumerate(v))) for v in kernel_basis(m)]


def radical(alg: Algebra, power: int = 1) -> list[AlgebraElement]:
    """Basis of ``J(A)^power``."""
    if power < 1:
        raise AlgebraError("power must be >= 1")
    cur = EchelonBasis(alg.field, alg.radical_basis).basis()
    for _ in range(power - 1):
        cur = product_span(alg, alg.radical_basis, cur).basis()
    return [AlgebraElement(alg, v) for v in cur]


class QuotientAlgebra(Algebra):
    """``A/H`` on the complement basis given by the non-pivot columns of ``H``.

    The images of ``A``'s idempotents that survive are kept, and the radical of
    the quotient is the image of ``J(A)`` (valid since ``J(A/H) = (J+H)/H``).
    """

    def __init__(self, parent: Algebra, ideal: TwoSidedIdeal):
        F = parent.field
        self.parent = parent
        self.ideal = ideal
        ech = ideal.echelon
        self.complement = [k for k in range(parent.dim) if k not in ech.pivots]
        self._coord = {k: i for i, k in enumerate(self.complement)}
        table = {}
        for a, ka in enumerate(self.complement):
            for b, kb in enumerate(self.complement):
                v = self.project(parent.mul_vec({ka: 1}, {kb: 1}))
                if v:
                    table[(a, b)] = v
        idem, idem_labels = [], []
        for lab, eps in zip(parent.idempotent_labels, parent.idempotents):
            v = self.project(eps)
            if v:
                idem.append(v)
                idem_labels.append(lab)
        rad = EchelonBasis(F, [self.project(r) for r in parent.radical_basis]).basis()
        super().__init__(F, [parent.labels[k] for k in self.complement], table, idem, rad, idem_labels)

    def project(self, v: Mapping) -> dict:
        r = self.ideal.echelon.reduce(v)
        return {self._coord[k]: c for k, c in r.items()}

    def lift(self, v: Mapping) -> dict:
        return {self.complement[i]: c for i, c in v.items()}


# -- heredity ideals -------------------------------------------------------------

@dataclass
class HeredityCheck:
    ok: bool
    reason: str
    witness: object = None
    zero_ideal: bool = False

    def __bool__(self):
        return self.ok


def left_hom_dim(alg: Algebra, sub: Sequence[Mapping], quotient: QuotientAlgebra | None,
                 target_basis_size: int | None = None) -> int:
    """Dimension of ``Hom_A(H, A/H)`` for a left ideal ``H`` (basis ``sub``) as left modules.

    Unknown ``F[m][l]`` is the ``m``-th coordinate of ``f(h_l)`` in ``A/H``; the
    equations are ``f(b h_k) = b f(h_k)`` for every basis element ``b`` of ``A``.
    """
    F = alg.field
    H = EchelonBasis(F, sub)
    hb = H.basis()
    nh = len(hb)
    if quotient is None:
        return 0
    nq = quotient.dim
    if nh == 0 or nq == 0:
        return 0
    var = lambda m, l: m * nh + l  # noqa: E731
    rows: list[dict] = []
    for b in range(alg.dim):
        qb = quotient.project({b: 1})
        # left action of b on A/H
        act = [quotient.mul_vec(qb, {m: 1}) for m in range(nq)]
        for k in range(nh):
            bh = alg.mul_vec({b: 1}, hb[k])
            coords = H.coordinates(bh)
            if coords is None:
                raise AlgebraError("sub is not a left ideal")
            eqs: dict[int, dict] = {}
            for l, c in coords.items():
                for m in range(nq):
                    eqs.setdefault(m, {})
                    vec_axpy(eqs[m], c, {var(m, l): 1}, F)
            for m in range(nq):
                for m2, c in act[m].items():
                    eqs.setdefault(m2, {})
                    vec_axpy(eqs[m2], -c, {var(m, k): 1}, F)
            rows.extend(r for r in eqs.values() if r)
    rk = EchelonBasis(F, rows).rank
    return nq * nh - rk


def is_heredity_ideal(alg: Algebra, h: TwoSidedIdeal) -> HeredityCheck:
    """Check ``HH = H``, ``Hom_A(H, A/H) = 0`` and ``H J H = 0``.

    The zero ideal passes vacuously; the result carries ``zero_ideal=True`` so
    reports can flag it.
    """
    F = alg.field
    if h.dim == 0:
        return HeredityCheck(True, "zero ideal: all conditions hold vacuously", zero_ideal=True)
    hh = product_span(alg, h.basis, h.basis)
    if hh.rank != h.dim:
        missing = next(b for b in h.basis if not hh.contains(b))
        return HeredityCheck(False, "HH != H", AlgebraElement(alg, missing))
    for x in h.basis:
        for j in alg.radical_basis:
            xj = alg.mul_vec(x, j)
            if not xj:
                continue
            for y in h.basis:
                v = alg.mul_vec(xj, y)
                if v:
                    w = AlgebraElement(alg, v)
                    return HeredityCheck(False, f"HJH != 0: contains {w!r}", w)
    quot = QuotientAlgebra(alg, h) if h.dim < alg.dim else None
    d = left_hom_dim(alg, h.basis, quot)
    if d:
        return HeredityCheck(False, f"Hom_A(H, A/H) has dimension {d}", d)
    return HeredityCheck(True, "heredity ideal")


def heredity_chain_search(alg: Algebra) -> list[TwoSidedIdeal] | None:
    """Find ``A = H_0 > H_1 > ... > H_n = 0`` with each ``H_i/H_{i+1}`` heredity in ``A/H_{i+1}``.

    Depth-first search over ideals generated by sums of vertex idempotents,
    building the chain from the bottom.  Returns the chain top-down.
    """
    F = alg.field
    verts = list(alg.idempotent_labels)

    def extend(current: TwoSidedIdeal, used: frozenset) -> list[TwoSidedIdeal] | None:
        if current.dim == alg.dim:
            return [current]
        rest = [v for v in verts if v not in used]
        quot = QuotientAlgebra(alg, current) if current.dim else None
        for size in range(1, len(rest) + 1):
            for subset in itertools.combinations(rest, size):
                gens = list(current.basis)
                eps: dict = {}
                for v in subset:
                    vec_axpy(eps, 1, alg.idempotents[verts.index(v)], F)
                bigger = TwoSidedIdeal(alg, gens + [eps])
                if bigger.dim == current.dim:
                    continue
                if quot is None:
                    ok = is_heredity_ideal(alg, bigger)
                else:
                    image = TwoSidedIdeal(quot, [quot.project(b) for b in bigger.basis])
                    ok = is_heredity_ideal(quot, image)
                if not ok:
                    continue
                tail = extend(bigger, used | set(subset))
                if tail is not None:
                    return tail + [current]
        return None

    zero = TwoSidedIdeal(alg, [])
    return extend(zero, frozenset())


def semisimple_algebra(n: int, field: Field = QQ) -> BoundQuiverAlgebra:
    """Product of ``n`` copies of the field: a quiver with no arrows."""
    return BoundQuiverAlgebra(Quiver(tuple(range(1, n + 1)), ()), [], field)
