"""Symmetric-function layer: Murnaghan-Nakayama characters, charge/
Kostka-Foulkes, the X transition polynomials, and agreement between the two
independent routes (character sum vs raw Hall-Littlewood expansion)."""

import math

import pytest

from gggr.errors import CapExceededError
from gggr.partitions import Partition, conjugate, n_stat, partitions_of
from gggr.polyring import RationalPoly
from gggr.symfunc import (
    character_table,
    charge,
    hall_littlewood_expand,
    kostka_foulkes,
    mn_character,
    reading_word,
    ssyt_fillings,
    x_poly,
)

P = Partition


# -- characters of S_n -------------------------------------------------------

# Fully standard small tables, rows mu / columns rho in descending lex order.
S3_TABLE = {
    ((3,), (3,)): 1, ((3,), (2, 1)): 1, ((3,), (1, 1, 1)): 1,
    ((2, 1), (3,)): -1, ((2, 1), (2, 1)): 0, ((2, 1), (1, 1, 1)): 2,
    ((1, 1, 1), (3,)): 1, ((1, 1, 1), (2, 1)): -1, ((1, 1, 1), (1, 1, 1)): 1,
}


def test_s3_character_table():
    for (mu, rho), val in S3_TABLE.items():
        assert mn_character(P(mu), P(rho)) == val


def test_s4_spot_values():
    assert mn_character(P((2, 2)), P((2, 2))) == 2
    assert mn_character(P((2, 2)), P((4,))) == 0
    assert mn_character(P((3, 1)), P((2, 1, 1))) == 1
    assert mn_character(P((3, 1)), P((4,))) == -1
    assert mn_character(P((2, 1, 1)), P((2, 2))) == -1


def hook_length_dimension(mu):
    cols = conjugate(mu)
    dim = math.factorial(sum(mu))
    for i, row in enumerate(mu):
        for j in range(row):
            dim //= row - j + cols[j] - i - 1
    return dim


def test_dimension_is_hook_length_formula():
    """chi^mu at the identity equals n! / product of hooks."""
    for n in range(1, 8):
        e = P((1,) * n)
        for mu in partitions_of(n):
            assert mn_character(mu, e) == hook_length_dimension(mu)


def test_trivial_and_sign_characters():
    for n in range(1, 8):
        for rho in partitions_of(n):
            assert mn_character(P((n,)), rho) == 1
            sign = (-1) ** (n - len(rho))
            assert mn_character(P((1,) * n), rho) == sign


def test_row_orthogonality():
    for n in range(1, 8):
        assert character_table(n).check_orthogonality()


def test_column_sums_of_squares():
    # sum_mu chi^mu(rho)^2 = |W_rho| (column orthogonality at rho = pi)
    from gggr.partitions import weyl_centralizer_order

    for n in range(1, 8):
        for rho in partitions_of(n):
            total = sum(mn_character(mu, rho) ** 2 for mu in partitions_of(n))
            assert total == weyl_centralizer_order(rho)


# -- tableaux, charge, Kostka-Foulkes ----------------------------------------


def test_ssyt_counts_are_kostka_numbers():
    # classical Kostka numbers for n = 4
    assert len(list(ssyt_fillings(P((2, 2)), P((2, 1, 1))))) == 1
    assert len(list(ssyt_fillings(P((2, 2)), P((1, 1, 1, 1))))) == 2
    assert len(list(ssyt_fillings(P((3, 1)), P((1, 1, 1, 1))))) == 3
    # shape does not dominate content -> no fillings
    assert len(list(ssyt_fillings(P((2, 1, 1)), P((2, 2))))) == 0
    assert len(list(ssyt_fillings(P((2, 2)), P((3, 1))))) == 0


def test_ssyt_rows_weak_columns_strict():
    for tab in ssyt_fillings(P((3, 2)), P((2, 2, 1))):
        for row in tab:
            assert all(a <= b for a, b in zip(row, row[1:]))
        for i in range(1, len(tab)):
            assert all(a > b for a, b in zip(tab[i], tab[i - 1]))


def test_reading_word_and_charge():
    # single-row tableau of weight (n): word 1..1, charge 0
    assert charge((1, 1, 1)) == 0
    # standard words on {1,2,3}
    assert charge((3, 2, 1)) == 0
    assert charge((1, 2, 3)) == 3
    assert charge((2, 1, 3)) == 1
    tab = ((1, 1), (2,))
    assert reading_word(tab) == (2, 1, 1)


def test_charge_distribution_is_t_factorial():
    # sum of t^charge over all words of content (1,..,1) is [n]_t!
    import itertools

    for n in range(1, 6):
        counts = {}
        for w in itertools.permutations(range(1, n + 1)):
            c = charge(w)
            counts[c] = counts.get(c, 0) + 1
        factorial = RationalPoly.const(1, "t")
        t = RationalPoly.gen("t")
        for k in range(1, n + 1):
            factorial = factorial * sum(
                (t**i for i in range(1, k)), RationalPoly.const(1, "t")
            )
        expected = {
            k: int(factorial.coeff(k)) for k in range(factorial.degree + 1)
        }
        assert counts == expected


def test_kostka_foulkes_basics():
    t = RationalPoly.gen("t")
    one = RationalPoly.const(1, "t")
    for n in range(1, 7):
        for la in partitions_of(n):
            # K_{la,la} = 1 and K_{(n),la} = t^{n(la)}
            assert kostka_foulkes(la, la) == one
            assert kostka_foulkes(P((n,)), la) == t ** n_stat(la)


def test_kostka_foulkes_frozen():
    t = RationalPoly.gen("t")
    assert kostka_foulkes(P((2, 1)), P((1, 1, 1))) == t + t**2
    assert kostka_foulkes(P((2, 2)), P((2, 1, 1))) == t
    assert kostka_foulkes(P((3, 1)), P((2, 1, 1))) == t + t**2
    assert kostka_foulkes(P((2, 2)), P((1, 1, 1, 1))) == t**2 + t**4
    # the two entries that distinguish charge conventions at n = 5
    assert kostka_foulkes(P((4, 1)), P((2, 2, 1))) == t**2 + t**3
    assert kostka_foulkes(P((3, 1, 1)), P((2, 2, 1))) == t


def test_kostka_foulkes_at_one_counts_tableaux():
    for n in range(1, 7):
        for mu in partitions_of(n):
            for la in partitions_of(n):
                count = len(list(ssyt_fillings(mu, la)))
                assert kostka_foulkes(mu, la)(1) == count


# -- X polynomials and the Hall-Littlewood cross-check ------------------------


def test_x_poly_monic_of_degree_nstat():
    for n in range(1, 6):
        for rho in partitions_of(n):
            for la in partitions_of(n):
                f = x_poly(rho, la)
                assert f.degree == n_stat(la)
                assert f.is_monic()


def test_x_poly_at_one_multinomial():
    # p_{(1^n)} = (x_1 + x_2 + ...)^n, whose monomial coefficient at la is the
    # multinomial n! / prod(la_i!); at t = 1 that is X_{(1^n)}^la(1).
    for n in range(1, 6):
        e = P((1,) * n)
        for la in partitions_of(n):
            val = x_poly(e, la)(1)
            multinomial = math.factorial(n)
            for part in la:
                multinomial //= math.factorial(part)
            assert val == multinomial


def test_hall_littlewood_against_x_poly():
    """The dual route: expand p_rho in Hall-Littlewood P's by symmetric
    polynomial division and compare every coefficient with x_poly."""
    for n in range(1, 5):
        for rho in partitions_of(n):
            coords = hall_littlewood_expand(rho)
            assert set(coords) == set(partitions_of(n))
            for la, coeff in coords.items():
                assert coeff == x_poly(rho, la), (rho, la)


def test_hall_littlewood_cap():
    with pytest.raises(CapExceededError):
        hall_littlewood_expand(P((7,)))
