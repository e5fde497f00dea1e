"""Order polynomials for GL_n(q), GU_n(q) and the subgroups the character
formula needs: maximal tori, unipotent centralizers, class sizes.

The two families are treated uniformly through eps = +1 (split, GL) and
eps = -1 (unitary, GU): every unitary order polynomial is the eps-twist of
the GL one, e.g. |GU_n| = q^{n(n-1)/2} prod_i (q^i - (-1)^i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition, conjugate, multiplicities, n_stat
from .polyring import LaurentPoly, RationalPoly, exact_div


def check_eps(eps: int) -> int:
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    return eps


@dataclass(frozen=True)
class GroupKind:
    """A finite group of Lie type in our two families: GL_n (eps = +1) or
    GU_n (eps = -1)."""

    n: int
    eps: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        check_eps(self.eps)

    @property
    def name(self) -> str:
        return f"{'GL' if self.eps == 1 else 'GU'}{self.n}"


def group_order(n: int, eps: int) -> RationalPoly:
    """|GL_n(q)| or |GU_n(q)| as a monic degree-n^2 polynomial in q."""
    check_eps(eps)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = RationalPoly.monomial(n * (n - 1) // 2, 1, "q")
    for i in range(1, n + 1):
        out = out * (RationalPoly.monomial(i, 1, "q") - eps**i)
    return out


def torus_order(rho: Partition, eps: int) -> RationalPoly:
    """|T_rho(q)| = prod_i (q^{rho_i} - eps^{rho_i}): the order of the maximal
    torus labelled by rho, monic of degree n."""
    check_eps(eps)
    out = RationalPoly.const(1, "q")
    for part in rho:
        out = out * (RationalPoly.monomial(part, 1, "q") - eps**part)
    return out


def e_poly(la: Partition) -> RationalPoly:
    """e_la(t) = prod_i (1 - t^{la_i}); |T_rho| = q^n * e_rho(1/(eps*q)) up to
    the eps-substitution, which is how the torus order enters the character
    formula."""
    out = RationalPoly.const(1, "t")
    for part in la:
        out = out * (1 - RationalPoly.monomial(part, 1, "t"))
    return out


def sgn_eps(la: Partition, eps: int) -> int:
    """The sign eps^{floor(n/2)} * (-1)^{n + r} attached to a torus label with
    r parts; for eps = +1 this is just the sign of a permutation of cycle
    type la."""
    check_eps(eps)
    n, r = la.n, la.length
    return eps ** (n // 2) * (-1) ** (n + r)


@lru_cache(maxsize=None)
def _centralizer(la: tuple[int, ...], eps: int) -> RationalPoly:
    la_p = Partition(la)
    top = sum(c * c for c in conjugate(la_p))
    acc = LaurentPoly.monomial(top, 1, "q")
    for mult in multiplicities(la_p).values():
        for k in range(1, mult + 1):
            acc = acc * (1 - LaurentPoly.monomial(-k, eps**k, "q"))
    out = acc.as_poly()
    assert out.is_monic(), "centralizer order polynomial must come out monic"
    return out


def unipotent_centralizer_order(la: Partition, eps: int) -> RationalPoly:
    """Order of the centralizer of a unipotent element of Jordan type la:

        q^{sum (la'_j)^2} * prod_i prod_{k=1}^{m_i} (1 - (eps q)^{-k})

    cleared of negative powers; monic of degree n + 2*n_stat(la)."""
    check_eps(eps)
    return _centralizer(tuple(la), eps)


def class_size(la: Partition, eps: int) -> RationalPoly:
    """|G| / |centralizer|, an exact polynomial division."""
    return exact_div(group_order(la.n, eps), unipotent_centralizer_order(la, eps))


def centralizer_dim(la: Partition) -> int:
    """dim C_G(u) = n + 2 * n_stat(la) for u unipotent of Jordan type la;
    the degree target for the endomorphism-algebra dimension polynomial."""
    return la.n + 2 * n_stat(la)
