"""Generalised Gelfand-Graev characters and their endomorphism-algebra
dimension polynomials, via Kawanaka's character formula.

For a unipotent class of Jordan type mu in G = GL_n(q) (eps = +1) or
GU_n(q) (eps = -1), the generalised Gelfand-Graev character gamma_mu takes
the value, on the unipotent class of type la,

    gamma_mu(la) = eps^{n_stat(mu)} * sum_{rho |- n}  1/|W_rho|
                    * sgn_eps(rho) * q^n e_rho(1/(eps q))
                    * X_rho^mu(eps q) * Q_rho^la(eps q)

and vanishes off unipotent classes.  The self-intersection number

    <gamma_mu, gamma_mu> = (1/|G|) * sum_la |class la| * gamma_mu(la)^2

is integer-valued at every prime power, so dividing the numerator polynomial
by |G| must leave remainder zero; the quotient is the dimension of the
endomorphism algebra of the underlying representation as a polynomial in q.
The main verification target: that quotient is monic of degree
n + 2*n_stat(mu), the centralizer dimension of the class.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import CapExceededError, NonExactDivisionError
from .green import green_table
from .grouporders import (
    centralizer_dim,
    check_eps,
    class_size,
    e_poly,
    group_order,
    sgn_eps,
)
from .partitions import Partition, n_stat, partitions_of, weyl_centralizer_order
from .polyring import (
    LaurentPoly,
    RationalPoly,
    exact_div,
    poly_to_json,
    reciprocal_shift,
    substitute_signed,
)
from .symfunc import x_poly

#: Symbolic verification caps used by the command-line driver: the unitary
#: family costs roughly a factor of one more n, so its default is one lower.
VERIFY_CAP = {1: 5, -1: 4}
VERIFY_CAP_BIG = 6

#: Prime powers at which integer-valuedness is spot-checked.
DEFAULT_SAMPLES = (2, 3, 4, 5)


def gggr_value(mu: Partition, la: Partition, eps: int) -> LaurentPoly:
    """gamma_mu evaluated on the unipotent class of type la, as an exact
    polynomial in q (the assertion that no negative powers survive is part
    of the contract)."""
    check_eps(eps)
    if mu.n != la.n:
        raise ValueError(f"|mu| = {mu.n} but |la| = {la.n}")
    return _gggr_value(tuple(mu), tuple(la), eps)


@lru_cache(maxsize=None)
def _gggr_value(mu_t: tuple[int, ...], la_t: tuple[int, ...], eps: int) -> LaurentPoly:
    mu, la = Partition(mu_t), Partition(la_t)
    n = mu.n
    table = green_table(n)
    acc = LaurentPoly.const(0, "q")
    q_n = LaurentPoly.monomial(n, 1, "q")
    for rho in partitions_of(n):
        weight = Fraction(sgn_eps(rho, eps), weyl_centralizer_order(rho))
        torus = q_n * reciprocal_shift(substitute_signed(e_poly(rho), eps), 0)
        x_at = substitute_signed(x_poly(rho, mu), eps)
        q_at = substitute_signed(table.poly(rho, la), eps)
        acc = acc + weight * torus * x_at * q_at
    value = eps ** (n_stat(mu) % 2) * acc
    assert value.is_polynomial(), (
        f"gamma_{mu_t}({la_t}) came out with negative powers of q"
    )
    for q0 in DEFAULT_SAMPLES:
        v = value(q0)
        assert v.denominator == 1, (
            f"gamma_{mu_t}({la_t}) is not integral at q = {q0}: {v}"
        )
    return value


@dataclass(frozen=True)
class GGGRCharacter:
    """A generalised Gelfand-Graev character, stored by its unipotent
    columns only (it vanishes elsewhere)."""

    mu: Partition
    eps: int
    values: dict[Partition, LaurentPoly]

    def to_json(self) -> dict:
        return {
            "n": self.mu.n,
            "eps": self.eps,
            "mu": self.mu.to_json(),
            "values": [
                {"lambda": la.to_json(), "poly": poly_to_json(poly)}
                for la, poly in self.values.items()
            ],
        }


def gggr_character(mu: Partition, eps: int) -> GGGRCharacter:
    values = {
        la: gggr_value(mu, la, eps) for la in partitions_of(mu.n)
    }
    return GGGRCharacter(mu, eps, values)


def endo_dim(mu: Partition, eps: int) -> RationalPoly:
    """dim End of the generalised Gelfand-Graev representation attached to
    mu: the exact quotient of sum_la |class la| gamma_mu(la)^2 by |G|."""
    check_eps(eps)
    return _endo_dim(tuple(mu), eps)


@lru_cache(maxsize=None)
def _endo_dim(mu_t: tuple[int, ...], eps: int) -> RationalPoly:
    mu = Partition(mu_t)
    n = mu.n
    acc = LaurentPoly.const(0, "q")
    for la in partitions_of(n):
        gamma = gggr_value(mu, la, eps)
        acc = acc + class_size(la, eps) * gamma * gamma
    return exact_div(acc.as_poly(), group_order(n, eps))


@dataclass(frozen=True)
class MuResult:
    """Verification record for one unipotent type."""

    mu: Partition
    poly: Optional[RationalPoly]
    degree: Optional[int]
    target_degree: int
    monic: bool
    polynomial: bool
    samples_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.polynomial
            and self.monic
            and self.samples_ok
            and self.degree == self.target_degree
        )

    def to_json(self) -> dict:
        return {
            "mu": self.mu.to_json(),
            "poly": None if self.poly is None else poly_to_json(self.poly),
            "degree": self.degree,
            "target_degree": self.target_degree,
            "monic": self.monic,
            "polynomial": self.polynomial,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    n: int
    eps: int
    results: tuple[MuResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "eps": self.eps,
            "results": [r.to_json() for r in self.results],
            "pass": self.passed,
        }


def _mu_result(args: tuple[int, ...]) -> MuResult:
    mu_t, eps, samples = args
    mu = Partition(mu_t)
    target = centralizer_dim(mu)
    try:
        poly = endo_dim(mu, eps)
    except NonExactDivisionError:
        return MuResult(mu, None, None, target, False, False, False)
    samples_ok = all(
        (v := poly(q0)).denominator == 1 and v > 0 for q0 in samples
    )
    return MuResult(
        mu, poly, poly.degree, target, poly.is_monic(), True, samples_ok
    )


def default_jobs() -> int:
    """Worker count for the verification sweep; overridable only through the
    GGGR_JOBS environment variable."""
    raw = os.environ.get("GGGR_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError as exc:
        raise ValueError(f"GGGR_JOBS must be an integer, got {raw!r}") from exc
    if jobs < 1:
        raise ValueError(f"GGGR_JOBS must be >= 1, got {jobs}")
    return jobs


def verify_theorem(
    n: int,
    eps: int,
    q_samples: tuple[int, ...] = DEFAULT_SAMPLES,
    cap: Optional[int] = None,
    jobs: Optional[int] = None,
) -> VerificationReport:
    """Check, for every unipotent type mu of size n, that the endomorphism
    dimension polynomial exists (exact division), is monic, has degree
    n + 2*n_stat(mu), and takes positive integer values at the sample prime
    powers.  Work is independent per mu and can fan out over processes; the
    report order is the canonical partition order regardless."""
    check_eps(eps)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    limit = cap if cap is not None else VERIFY_CAP[eps]
    if n > limit:
        raise CapExceededError(
            f"verify_theorem at n = {n}, eps = {eps:+d} exceeds cap {limit}"
        )
    mus = partitions_of(n)
    tasks = [(tuple(mu), eps, tuple(q_samples)) for mu in mus]
    jobs = default_jobs() if jobs is None else jobs
    if jobs > 1 and len(tasks) > 1:
        # Warm the shared table before forking so children inherit it.
        green_table(n)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = tuple(pool.map(_mu_result, tasks))
    else:
        results = tuple(_mu_result(t) for t in tasks)
    return VerificationReport(n, eps, results)
