"""The character values gamma_mu(la) and the endomorphism-dimension
polynomials built from them."""

import json

import pytest

from gggr.errors import CapExceededError
from gggr.grouporders import centralizer_dim, group_order
from gggr.kawanaka import (
    DEFAULT_SAMPLES,
    default_jobs,
    endo_dim,
    gggr_character,
    gggr_value,
    verify_theorem,
)
from gggr.partitions import Partition, n_stat, partitions_of
from gggr.polyring import RationalPoly

P = Partition
q = RationalPoly.gen("q")


def test_n1():
    for eps in (1, -1):
        v = gggr_value(P((1,)), P((1,)), eps)
        assert v.as_poly() == q - eps * 1
        assert endo_dim(P((1,)), eps) == q - eps * 1


def test_n2_values():
    # regular class column
    assert gggr_value(P((2,)), P((2,)), 1).as_poly() == 1 - q
    assert gggr_value(P((2,)), P((2,)), -1).as_poly() == -1 - q
    # identity column carries the full character degree |G|_{p'}
    assert gggr_value(P((2,)), P((1, 1)), 1).as_poly() == (q - 1) * (q**2 - 1)
    assert gggr_value(P((2,)), P((1, 1)), -1).as_poly() == (q + 1) * (q**2 - 1)
    # trivial mu is the regular representation on unipotents
    assert gggr_value(P((1, 1)), P((2,)), 1).is_zero()
    assert gggr_value(P((1, 1)), P((1, 1)), 1).as_poly() == group_order(2, 1)


def test_character_degree_is_prime_to_p_part():
    # gamma_mu at the identity class: the regular-mu character has degree
    # |G| / q^(n(n-1)/2), and that holds for every eps
    for n in range(1, 5):
        for eps in (1, -1):
            v = gggr_value(P((n,)), P((1,) * n), eps).as_poly()
            top = q ** (n * (n - 1) // 2)
            assert v * top == group_order(n, eps)


def test_trivial_mu_is_regular_representation():
    for n in range(1, 5):
        for eps in (1, -1):
            mu = P((1,) * n)
            for la in partitions_of(n):
                v = gggr_value(mu, la, eps)
                if la == mu:
                    assert v.as_poly() == group_order(n, eps)
                else:
                    assert v.is_zero()


def test_values_are_integral_polynomials():
    for n in range(1, 5):
        for eps in (1, -1):
            for mu in partitions_of(n):
                for la in partitions_of(n):
                    v = gggr_value(mu, la, eps)
                    assert v.is_polynomial()
                    assert all(
                        c.denominator == 1 for c in v.as_poly().coeffs
                    ), (mu, la, eps)


def test_gggr_character_json():
    doc = gggr_character(P((2, 1)), 1).to_json()
    assert doc["n"] == 3 and doc["mu"] == [2, 1] and doc["eps"] == 1
    assert [tuple(v["lambda"]) for v in doc["values"]] == [
        (3,), (2, 1), (1, 1, 1),
    ]


def test_endo_dim_regular():
    for n in range(1, 5):
        assert endo_dim(P((n,)), 1) == (q - 1) * q ** (n - 1)
        assert endo_dim(P((n,)), -1) == (q + 1) * q ** (n - 1)


def test_endo_dim_trivial():
    for n in range(1, 4):
        for eps in (1, -1):
            assert endo_dim(P((1,) * n), eps) == group_order(n, eps)


def test_endo_dim_monic_of_centralizer_degree():
    for n in range(1, 5):
        for eps in (1, -1):
            for mu in partitions_of(n):
                f = endo_dim(mu, eps)
                assert f.is_monic()
                assert f.degree == centralizer_dim(mu)
                assert f.degree == n + 2 * n_stat(mu)


def test_endo_dim_integral_positive_at_prime_powers():
    for n in range(1, 5):
        for eps in (1, -1):
            for mu in partitions_of(n):
                f = endo_dim(mu, eps)
                for q0 in (2, 3, 4, 5, 7):
                    v = f(q0)
                    assert v.denominator == 1 and v > 0


def test_verify_report():
    for eps in (1, -1):
        report = verify_theorem(3, eps)
        assert report.passed
        doc = report.to_json()
        assert doc["pass"] is True
        assert len(doc["results"]) == 3
        for rec in doc["results"]:
            assert rec["pass"] and rec["monic"] and rec["polynomial"]
            assert rec["degree"] == rec["target_degree"]
    blob = json.dumps(report.to_json())
    assert json.loads(blob)["n"] == 3


def test_verify_cap():
    with pytest.raises(CapExceededError):
        verify_theorem(6, 1)
    with pytest.raises(CapExceededError):
        verify_theorem(5, -1)
    with pytest.raises(CapExceededError):
        verify_theorem(7, 1, cap=6)


def test_verify_custom_samples():
    report = verify_theorem(2, 1, q_samples=(2, 3, 4, 5, 7, 8, 9))
    assert report.passed


def test_default_jobs_env(monkeypatch):
    monkeypatch.setenv("GGGR_JOBS", "3")
    assert default_jobs() == 3
    monkeypatch.setenv("GGGR_JOBS", "0")
    with pytest.raises(ValueError):
        default_jobs()
    monkeypatch.setenv("GGGR_JOBS", "two")
    with pytest.raises(ValueError):
        default_jobs()
    monkeypatch.delenv("GGGR_JOBS")
    assert default_jobs() == 1
    assert len(DEFAULT_SAMPLES) >= 4


def test_verify_parallel_path_matches_serial():
    serial = verify_theorem(3, 1, jobs=1)
    parallel = verify_theorem(3, 1, jobs=2)
    assert serial == parallel
    assert parallel.passed
