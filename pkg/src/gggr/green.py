"""Green polynomials of GL_n / GU_n and their orthogonality relation.

The Green polynomial attached to a torus label rho and a unipotent Jordan
type la is obtained from the power-sum / Hall-Littlewood transition
coefficient by reversing the coefficient order:

    Q_rho^la(t) = t^{n_stat(la)} * X_rho^la(1/t)

Evaluated at t = q (split, eps = +1) or t = -q (unitary, eps = -1) these are
the values of Deligne-Lusztig characters at unipotent elements, which is all
the downstream character formula needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .grouporders import class_size, group_order, torus_order
from .partitions import Partition, n_stat, partitions_of, weyl_centralizer_order
from .polyring import LaurentPoly, RationalPoly, reciprocal_shift, substitute_signed
from .symfunc import x_poly


def green_poly(rho: Partition, la: Partition) -> LaurentPoly:
    """Q_rho^la(t); constant term 1, degree at most n_stat(la)."""
    return _green(tuple(rho), tuple(la))


@lru_cache(maxsize=None)
def _green(rho: tuple[int, ...], la: tuple[int, ...]) -> LaurentPoly:
    la_p = Partition(la)
    q = reciprocal_shift(x_poly(Partition(rho), la_p), n_stat(la_p))
    assert q.is_polynomial(), "Green polynomial acquired negative powers"
    return q


@dataclass(frozen=True)
class GreenTable:
    """All Green polynomials for a given n, rows = torus labels rho and
    columns = unipotent types la, both in canonical order."""

    n: int
    order: tuple[Partition, ...]
    entries: dict[tuple[Partition, Partition], LaurentPoly]

    def poly(self, rho: Partition, la: Partition) -> LaurentPoly:
        return self.entries[(rho, la)]

    def to_json(self, eps: Optional[int] = None) -> dict:
        """Wire format; when eps is given the table is specialized t -> eps*q."""
        rows = []
        for rho in self.order:
            cols = []
            for la in self.order:
                poly = self.entries[(rho, la)]
                if eps is not None:
                    poly = substitute_signed(poly, eps)
                cols.append({"lambda": la.to_json(), "poly": _poly_json(poly)})
            rows.append({"rho": rho.to_json(), "cols": cols})
        out = {"n": self.n}
        if eps is not None:
            out["eps"] = eps
        out["rows"] = rows
        return out


def _poly_json(poly) -> dict:
    from .polyring import poly_to_json

    return poly_to_json(poly)


@lru_cache(maxsize=None)
def green_table(n: int) -> GreenTable:
    parts = tuple(partitions_of(n))
    entries = {
        (rho, la): green_poly(rho, la) for rho in parts for la in parts
    }
    return GreenTable(n, parts, entries)


@dataclass(frozen=True)
class OrthogonalityResult:
    ok: bool
    #: On failure: (rho, pi, lhs, rhs) of the first offending pair, where the
    #: sides are the cross-multiplied polynomial forms compared exactly.
    witness: Optional[tuple[Partition, Partition, RationalPoly, RationalPoly]] = None


def verify_orthogonality(n: int, eps: int) -> OrthogonalityResult:
    """Exact symbolic check of the Green polynomial orthogonality relation:
    for every pair of torus labels (rho, pi),

        sum_la |class la| Q_rho^la(eps q) Q_pi^la(eps q)
            = delta_{rho,pi} * |W_rho| * |G| / |T_rho|

    verified as a polynomial identity in q (cross-multiplied by |T_rho|)."""
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    parts = partitions_of(n)
    table = green_table(n)
    grp = group_order(n, eps)
    sizes = {la: class_size(la, eps) for la in parts}
    specialized = {
        (rho, la): substitute_signed(table.poly(rho, la), eps)
        for rho in parts
        for la in parts
    }
    for rho in parts:
        t_rho = torus_order(rho, eps)
        for pi in parts:
            acc = LaurentPoly.const(0, "q")
            for la in parts:
                acc = acc + sizes[la] * specialized[(rho, la)] * specialized[(pi, la)]
            lhs = (acc * t_rho).as_poly()
            rhs = (
                weyl_centralizer_order(rho) * grp
                if pi == rho
                else RationalPoly((), "q")
            )
            if lhs != rhs:
                return OrthogonalityResult(False, (rho, pi, lhs, rhs))
    return OrthogonalityResult(True)
