"""Brute-force finite-group oracle.

Everything symbolic in this package ultimately claims to predict honest
finite-group quantities.  This module checks a handful of them the hard way:
enumerate GL_n(q0) or GU_n(q0) as explicit matrices, split it into conjugacy
classes, read off Jordan types, and compute Gelfand-Graev inner products in
exact cyclotomic arithmetic.  Nothing here touches the symbolic pipeline
except the final comparisons.

GU_n(q0) is realized inside GL_n(q0^2) as the fixed points of the twisted
Frobenius g -> transpose(g^(q0))^{-1}, i.e. matrices unitary for the identity
Hermitian form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import CapExceededError
from .grouporders import check_eps
from .partitions import Partition

#: Ambient enumeration budget: the oracle iterates over every matrix of the
#: ambient space, so q0^(n^2) (GL) or (q0^2)^(n^2) (GU) must stay below this.
ENUMERATION_CAP = 10**7

#: Field sizes the oracle accepts as defining fields.
SUPPORTED_Q = (2, 3, 4, 5, 8, 9)


def is_prime_power(q: int) -> Optional[tuple[int, int]]:
    """(p, e) with q = p^e, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q and q > p:
            break
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            return (p, e) if m == 1 else None
    return (q, 1)


# ---------------------------------------------------------------------------
# Finite fields
# ---------------------------------------------------------------------------


class FiniteField:
    """F_q for a prime power q, elements encoded as integers 0..q-1: the
    element sum_i c_i x^i (c_i digits base p) is encoded as sum_i c_i p^i.
    Addition and multiplication are table-driven; construction verifies the
    field axioms outright."""

    def __init__(self, q: int):
        pe = is_prime_power(q)
        if pe is None:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p, self.e = pe
        self.modulus = self._find_irreducible() if self.e > 1 else (0, 1)
        self._build_tables()
        self._verify_axioms()

    # Polynomials over F_p as tuples, lowest degree first.

    def _poly_divmod(self, a: tuple[int, ...], b: tuple[int, ...]):
        p = self.p
        a = list(a)
        db, lead = len(b) - 1, b[-1]
        inv_lead = pow(lead, p - 2, p)
        while len(a) - 1 >= db and any(a):
            if a[-1] == 0:
                a.pop()
                continue
            shift = len(a) - 1 - db
            c = a[-1] * inv_lead % p
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bc) % p
            while a and a[-1] == 0:
                a.pop()
        return tuple(a)

    def _is_irreducible(self, f: tuple[int, ...]) -> bool:
        deg = len(f) - 1
        for d in range(1, deg // 2 + 1):
            for tail in itertools.product(range(self.p), repeat=d):
                g = tuple(tail) + (1,)
                if not self._poly_divmod(f, g):
                    return False
        return True

    def _find_irreducible(self) -> tuple[int, ...]:
        for tail in itertools.product(range(self.p), repeat=self.e):
            f = tuple(tail) + (1,)
            if self._is_irreducible(f):
                return f
        raise AssertionError("no irreducible polynomial found")

    def _decode(self, code: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.e):
            digits.append(code % self.p)
            code //= self.p
        return tuple(digits)

    def _encode(self, digits) -> int:
        code = 0
        for d in reversed(list(digits)):
            code = code * self.p + d
        return code

    def _build_tables(self) -> None:
        q, p, e = self.q, self.p, self.e
        self.add = [[0] * q for _ in range(q)]
        self.mul = [[0] * q for _ in range(q)]
        decoded = [self._decode(c) for c in range(q)]
        for a in range(q):
            for b in range(q):
                self.add[a][b] = self._encode(
                    ((x + y) % p for x, y in zip(decoded[a], decoded[b]))
                )
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(decoded[a]):
                    if x:
                        for j, y in enumerate(decoded[b]):
                            prod[i + j] = (prod[i + j] + x * y) % p
                if e > 1:
                    rem = list(self._poly_divmod(tuple(prod), self.modulus))
                else:
                    rem = prod
                rem += [0] * (e - len(rem))
                self.mul[a][b] = self._encode(rem[:e])
        self.neg = [self.mul[a][self._encode_const(p - 1)] for a in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = next(b for b in range(1, q) if self.mul[a][b] == 1)

    def _encode_const(self, c: int) -> int:
        return c % self.p

    def _verify_axioms(self) -> None:
        q = self.q
        rng = range(q)
        add, mul = self.add, self.mul
        for a in rng:
            if add[a][0] != a or mul[a][1] != a or mul[a][0] != 0:
                raise AssertionError("identity axiom failed")
            if add[a][self.neg[a]] != 0:
                raise AssertionError("negation axiom failed")
            if a and mul[a][self.inv[a]] != 1:
                raise AssertionError("inverse axiom failed")
        for a in rng:
            for b in rng:
                if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                    raise AssertionError("commutativity failed")
                for c in rng:
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        raise AssertionError("additive associativity failed")
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise AssertionError("multiplicative associativity failed")
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                        raise AssertionError("distributivity failed")

    def power(self, a: int, k: int) -> int:
        out = 1
        base = a
        while k:
            if k & 1:
                out = self.mul[out][base]
            base = self.mul[base][base]
            k >>= 1
        return out

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p)

    def abs_trace(self, a: int) -> int:
        """Trace down to the prime field, returned as an integer 0..p-1."""
        acc, cur = 0, a
        for _ in range(self.e):
            acc = self.add[acc][cur]
            cur = self.frobenius(cur)
        assert acc < self.p, "trace left the prime field"
        return acc


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteField:
    return FiniteField(q)


# ---------------------------------------------------------------------------
# Matrices over a finite field (tuples of row tuples of element codes)
# ---------------------------------------------------------------------------

Mat = tuple[tuple[int, ...], ...]


def mat_identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(F: FiniteField, A: Mat, B: Mat) -> Mat:
    n = len(A)
    mul, add = F.mul, F.add
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = add[acc][mul[Ai[k]][B[k][j]]]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_inv(F: FiniteField, A: Mat) -> Optional[Mat]:
    """Gauss-Jordan inverse, or None if singular."""
    n = len(A)
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    aug = [list(A[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = inv[aug[col][col]]
        aug[col] = [mul[scale][x] for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                c = neg[aug[r][col]]
                aug[r] = [add[x][mul[c][y]] for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_rank(F: FiniteField, A: Mat) -> int:
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    rows = [list(r) for r in A]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    rank = 0
    for col in range(m):
        pivot = next((r for r in range(rank, n) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        scale = inv[rows[rank][col]]
        rows[rank] = [mul[scale][x] for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col] != 0:
                c = neg[rows[r][col]]
                rows[r] = [add[x][mul[c][y]] for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def conj_transpose(F: FiniteField, A: Mat, q0: int) -> Mat:
    """Transpose composed with the entrywise q0-power (the bar involution of
    F_{q0^2} over F_{q0})."""
    n = len(A)
    return tuple(
        tuple(F.power(A[j][i], q0) for j in range(n)) for i in range(n)
    )


# ---------------------------------------------------------------------------
# Group enumeration and conjugacy classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjClass:
    rep: Mat
    size: int
    jordan: Optional[Partition]  # set for unipotent classes


@dataclass
class OracleGroup:
    n: int
    eps: int
    q0: int
    field: FiniteField  # entries live here: F_q0 for GL, F_{q0^2} for GU
    elements: list[Mat]

    _class_of: Optional[dict[Mat, int]] = None
    _classes: Optional[list[ConjClass]] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def name(self) -> str:
        return f"{'GL' if self.eps == 1 else 'GU'}{self.n}(F{self.q0})"

    # -- conjugacy ------------------------------------------------------

    def classes(self) -> list[ConjClass]:
        if self._classes is None:
            self._split_classes()
        return self._classes

    def class_index(self) -> dict[Mat, int]:
        if self._class_of is None:
            self._split_classes()
        return self._class_of

    def _split_classes(self) -> None:
        F = self.field
        inverses = {g: mat_inv(F, g) for g in self.elements}
        class_of: dict[Mat, int] = {}
        classes: list[ConjClass] = []
        for g in self.elements:
            if g in class_of:
                continue
            orbit = {mat_mul(F, mat_mul(F, x, g), inverses[x]) for x in self.elements}
            idx = len(classes)
            for m in orbit:
                class_of[m] = idx
            classes.append(ConjClass(g, len(orbit), self.jordan_type(g)))
        self._class_of = class_of
        self._classes = classes

    def jordan_type(self, g: Mat) -> Optional[Partition]:
        """Jordan type of a unipotent element (None if g is not unipotent),
        read off the rank sequence of powers of g - 1."""
        F, n = self.field, self.n
        u = tuple(
            tuple(F.add[x][F.neg[1] if i == j else 0] for j, x in enumerate(row))
            for i, row in enumerate(g)
        )
        ranks = [n]
        power = mat_identity(n)
        for _ in range(n):
            power = mat_mul(F, power, u)
            ranks.append(mat_rank(F, power))
        if ranks[-1] != 0:
            return None
        col_counts = [ranks[k - 1] - ranks[k] for k in range(1, n + 1)]
        cols = Partition(tuple(c for c in col_counts if c > 0))
        from .partitions import conjugate

        return conjugate(cols)

    def unipotent_classes(self) -> dict[Partition, ConjClass]:
        out = {}
        for cls in self.classes():
            if cls.jordan is not None:
                assert cls.jordan not in out, "duplicate unipotent type"
                out[cls.jordan] = cls
        return out


def enumerate_group(n: int, eps: int, q0: int) -> OracleGroup:
    """All elements of GL_n(q0) or GU_n(q0), subject to the enumeration cap."""
    check_eps(eps)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if q0 not in SUPPORTED_Q:
        raise ValueError(f"q0 must be one of {SUPPORTED_Q}, got {q0}")
    ambient_q = q0 if eps == 1 else q0 * q0
    if ambient_q ** (n * n) > ENUMERATION_CAP:
        raise CapExceededError(
            f"enumerating {ambient_q}^{n * n} ambient matrices exceeds cap {ENUMERATION_CAP}"
        )
    F = finite_field(ambient_q)
    identity = mat_identity(n)
    elements = []
    if eps == 1:
        for flat in itertools.product(range(q0), repeat=n * n):
            g = tuple(flat[i * n : (i + 1) * n] for i in range(n))
            if mat_rank(F, g) == n:
                elements.append(g)
    else:
        for flat in itertools.product(range(ambient_q), repeat=n * n):
            g = tuple(flat[i * n : (i + 1) * n] for i in range(n))
            if mat_mul(F, conj_transpose(F, g, q0), g) == identity:
                elements.append(g)
    return OracleGroup(n, eps, q0, F, elements)


# ---------------------------------------------------------------------------
# Exact cyclotomic scalars
# ---------------------------------------------------------------------------


class CycloScalar:
    """An element of Q(zeta_p), stored as rational coordinates on
    1, zeta, ..., zeta^{p-1} normalized so the last coordinate is 0 (the
    all-ones vector is the kernel of the evaluation)."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords):
        coords = [Fraction(c) for c in coords]
        assert len(coords) == p
        last = coords[-1]
        if last:
            coords = [c - last for c in coords]
        self.p = p
        self.coords = tuple(coords)

    @classmethod
    def zero(cls, p: int) -> "CycloScalar":
        return cls(p, [0] * p)

    @classmethod
    def root_power(cls, p: int, k: int) -> "CycloScalar":
        coords = [0] * p
        coords[k % p] = 1
        return cls(p, coords)

    @classmethod
    def rational(cls, p: int, value) -> "CycloScalar":
        coords = [Fraction(0)] * p
        coords[0] = Fraction(value)
        return cls(p, coords)

    def __add__(self, other: "CycloScalar") -> "CycloScalar":
        return CycloScalar(self.p, [a + b for a, b in zip(self.coords, other.coords)])

    def __mul__(self, other) -> "CycloScalar":
        if isinstance(other, (int, Fraction)):
            return CycloScalar(self.p, [c * other for c in self.coords])
        out = [Fraction(0)] * self.p
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    out[(i + j) % self.p] += a * b
        return CycloScalar(self.p, out)

    __rmul__ = __mul__

    def conj(self) -> "CycloScalar":
        out = [Fraction(0)] * self.p
        for i, a in enumerate(self.coords):
            out[(-i) % self.p] += a
        return CycloScalar(self.p, out)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self.coords}")
        return self.coords[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CycloScalar)
            and self.p == other.p
            and self.coords == other.coords
        )

    def __repr__(self) -> str:
        return f"CycloScalar(p={self.p}, {self.coords})"


# ---------------------------------------------------------------------------
# Gelfand-Graev inner products
# ---------------------------------------------------------------------------


def _gl_whittaker_subgroup(G: OracleGroup, selector: int) -> dict[Mat, CycloScalar]:
    """The unitriangular subgroup of GL_n(q0) with the nondegenerate character
    psi(u) = zeta_p^(abs_trace(selector * sum of superdiagonal entries))."""
    F, n, q0 = G.field, G.n, G.q0
    p = F.p
    positions = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out: dict[Mat, CycloScalar] = {}
    for vals in itertools.product(range(q0), repeat=len(positions)):
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(positions, vals):
            rows[i][j] = v
        u = tuple(tuple(r) for r in rows)
        s = 0
        for i in range(n - 1):
            s = F.add[s][u[i][i + 1]]
        expo = F.abs_trace(F.mul[selector % p][s])
        out[u] = CycloScalar.root_power(p, expo)
    return out


def _gu2_whittaker_subgroup(G: OracleGroup, selector: int) -> dict[Mat, CycloScalar]:
    """A maximal unipotent subgroup of GU_2(q0) with a nontrivial character.

    The identity Hermitian form has no isotropic standard basis vector, so the
    unitriangular matrices inside GU_2 are trivial; instead we find a
    hyperbolic pair (e, f), conjugate the root subgroup
    {[[1, x], [0, 1]] : x + bar(x) = 0} of the antidiagonal-form group back
    into GU_2, and put the character on the trace-zero line.  Requires q0
    prime so that line is one-dimensional over the prime field.
    """
    F, q0 = G.field, G.q0
    if G.n != 2:
        raise CapExceededError("unitary Gelfand-Graev oracle only supports n = 2")
    if F.p != q0:
        raise CapExceededError(
            "unitary Gelfand-Graev oracle needs a prime defining field"
        )
    p = q0
    add, mul, neg = F.add, F.mul, F.neg

    def bar(x: int) -> int:
        return F.power(x, q0)

    def herm(u, v):  # conjugate-linear in the first argument
        return add[mul[bar(u[0])][v[0]]][mul[bar(u[1])][v[1]]]

    # isotropic e, then f with h(e, f) = 1 and h(f, f) = 0
    e = next(
        v
        for v in itertools.product(range(F.q), repeat=2)
        if v != (0, 0) and herm(v, v) == 0
    )
    f0 = next(v for v in itertools.product(range(F.q), repeat=2) if herm(e, v) != 0)
    s = F.inv[herm(e, f0)]
    f1 = (mul[s][f0[0]], mul[s][f0[1]])
    beta = herm(f1, f1)
    mu_shift = next(
        m for m in range(F.q) if add[m][bar(m)] == neg[beta]
    )
    f = (add[f1[0]][mul[mu_shift][e[0]]], add[f1[1]][mul[mu_shift][e[1]]])
    assert herm(e, e) == 0 and herm(f, f) == 0 and herm(e, f) == 1
    P: Mat = ((e[0], f[0]), (e[1], f[1]))
    P_inv = mat_inv(F, P)
    assert P_inv is not None

    # the trace-zero line delta0 * F_p
    delta0 = next(x for x in range(1, F.q) if add[x][bar(x)] == 0)
    membership = set(G.elements)
    out: dict[Mat, CycloScalar] = {}
    for a in range(p):  # prime-subfield elements are encoded as 0..p-1
        x = mul[delta0][a]
        u_j: Mat = ((1, x), (0, 1))
        u = mat_mul(F, mat_mul(F, P, u_j), P_inv)
        assert u in membership, "constructed root element escaped GU_2"
        expo = selector * a % p
        out[u] = CycloScalar.root_power(p, expo)
    return out


def whittaker_data(G: OracleGroup, selector: int = 1) -> dict[Mat, CycloScalar]:
    """A maximal unipotent subgroup U of G together with a nondegenerate
    character, as a map u -> psi(u).  ``selector`` picks among the p-1
    nontrivial additive characters (the inner product must not depend on it).
    """
    if selector % G.field.p == 0:
        raise ValueError("selector must be nonzero mod p")
    if G.eps == 1:
        return _gl_whittaker_subgroup(G, selector)
    return _gu2_whittaker_subgroup(G, selector)


def gelfand_graev_inner(G: OracleGroup, selector: int = 1) -> int:
    """<Ind_U^G psi, Ind_U^G psi> computed from the induced character:

        chi(g) = |C_G(g)| / |U| * sum over U intersect class(g) of psi(u)

    then <chi, chi> = (1/|G|) sum_classes size * chi * conj(chi), all in
    exact cyclotomic arithmetic.  The result must be a rational integer."""
    U = whittaker_data(G, selector)
    p = G.field.p
    order = G.order
    u_order = len(U)
    class_of = G.class_index()
    per_class: dict[int, CycloScalar] = {}
    for u, val in U.items():
        idx = class_of[u]
        per_class[idx] = per_class.get(idx, CycloScalar.zero(p)) + val
    total = Fraction(0)
    classes = G.classes()
    for idx, acc in per_class.items():
        size = classes[idx].size
        centralizer = Fraction(order, size)
        chi = acc * (centralizer / u_order)
        norm = (chi * chi.conj()).to_rational()
        total += Fraction(size) * norm
    inner = total / order
    assert inner.denominator == 1, f"inner product not integral: {inner}"
    return int(inner)


def regular_rep_inner(G: OracleGroup) -> int:
    """<chi_reg, chi_reg> = |G|, computed literally from the regular
    character (|G| at the identity, 0 elsewhere)."""
    order = G.order
    inner = Fraction(order * order, order)
    assert inner.denominator == 1
    return int(inner)


# ---------------------------------------------------------------------------
# Comparison against the symbolic pipeline
# ---------------------------------------------------------------------------


def oracle_report(n: int, eps: int, q0: int) -> dict:
    """Enumerate the group and compare every oracle quantity against the
    symbolic predictions: group order, unipotent class sizes, and the two
    Gelfand-Graev inner products against endo_dim specializations."""
    from .grouporders import class_size, group_order
    from .kawanaka import endo_dim
    from .partitions import partitions_of

    G = enumerate_group(n, eps, q0)
    checks = []

    def check(name: str, expected: int, actual: int) -> None:
        expected = int(expected)
        checks.append(
            {"check": name, "expected": expected, "actual": actual, "ok": expected == actual}
        )

    check("group_order", group_order(n, eps)(q0), G.order)
    uni = G.unipotent_classes()
    parts = partitions_of(n)
    check("unipotent_class_count", len(parts), len(uni))
    for la in parts:
        cls = uni.get(la)
        check(
            f"class_size_{'_'.join(map(str, la))}",
            int(class_size(la, eps)(q0)),
            0 if cls is None else cls.size,
        )
    check("unipotent_count", q0 ** (n * (n - 1)), sum(c.size for c in uni.values()))
    check(
        "gelfand_graev_inner",
        int(endo_dim(Partition((n,)), eps)(q0)),
        gelfand_graev_inner(G),
    )
    check(
        "regular_rep_inner",
        int(endo_dim(Partition((1,) * n), eps)(q0)),
        regular_rep_inner(G),
    )
    return {
        "group": G.name,
        "n": n,
        "eps": eps,
        "q0": q0,
        "order": G.order,
        "checks": checks,
        "pass": all(c["ok"] for c in checks),
    }
