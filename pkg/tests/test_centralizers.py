"""Centralizer dimensions solved exactly versus the closed-form tables."""

from __future__ import annotations

import pytest

from nilorb.catalog import AlgebraSpec, enumerate_orbits
from nilorb.centralizers import (centralizer_dim_nilpotent,
                                 centralizer_dim_triple, centralizer_report,
                                 expected_compact_dim, expected_reductive_dim,
                                 orbit_dim)
from nilorb.partitions import Partition
from nilorb.triples import build_triple

SWEEP = (
    [AlgebraSpec(f, n=n) for f in ("sl_r", "sl_c", "sl_h") for n in range(2, 7)]
    + [AlgebraSpec("so_c", n=n) for n in range(3, 7)]
    + [AlgebraSpec("sp_c", n=n) for n in range(1, 4)]
    + [AlgebraSpec("so_star", n=n) for n in range(1, 7)]
    + [AlgebraSpec(f, p=p, q=t - p)
       for f in ("so_pq", "sp_pq")
       for t in range(2, 7) for p in range(1, t)]
)


@pytest.mark.parametrize("a", SWEEP, ids=str)
def test_triple_centralizer_matches_reductive_dimension(a):
    """The solved kernel dimension equals the closed-form count for every
    nonzero orbit: the centralizer of a standard triple is reductive with a
    dimension determined by the multiplicities alone."""
    for rec in enumerate_orbits(a):
        if rec.is_zero_orbit:
            continue
        t = build_triple(a, rec.datum)
        got = centralizer_dim_triple(t, a)
        want = expected_reductive_dim(a, rec.datum)
        assert got == want, (str(rec.datum), got, want)


@pytest.mark.parametrize("a", SWEEP[:14], ids=str)
def test_nilpotent_centralizer_at_least_triple_centralizer(a):
    for rec in enumerate_orbits(a):
        if rec.is_zero_orbit:
            continue
        t = build_triple(a, rec.datum)
        z_triple = centralizer_dim_triple(t, a)
        z_x = centralizer_dim_nilpotent(t.X, a, rec.datum)
        assert z_x >= z_triple
        assert orbit_dim(a, rec.datum) == dim_of(a) - z_x


def dim_of(a: AlgebraSpec) -> int:
    """Real dimension of the ambient algebra, rebuilt from first principles."""
    n = a.size
    return {
        "sl_r": n * n - 1,
        "sl_c": 2 * (n * n - 1),
        "sl_h": 4 * n * n - 1,
        "so_c": n * (n - 1),
        "so_pq": n * (n - 1) // 2,
        "sp_c": n * (n + 1),  # n = 2 * a.n boxes
        "sp_pq": n * (2 * n + 1),
        "so_star": n * (2 * n - 1),
    }[a.family]


def test_hand_worked_examples():
    """Dimensions computed by hand from small matrices."""
    # sl(2, R), regular orbit: centralizer of the triple is trivial.
    a = AlgebraSpec("sl_r", n=2)
    t = build_triple(a, Partition([2]))
    assert centralizer_dim_triple(t, a) == 0
    assert centralizer_dim_nilpotent(t.X, a, Partition([2])) == 1
    assert orbit_dim(a, Partition([2])) == 2

    # sl(2, C) as a real algebra: z(X) is spanned by X and iX.
    a = AlgebraSpec("sl_c", n=2)
    assert centralizer_dim_nilpotent(
        build_triple(a, Partition([2])).X, a, Partition([2])) == 2
    assert orbit_dim(a, Partition([2])) == 4

    # sp(1,1), datum [2] with one +row: worked out entry by entry.
    a = AlgebraSpec("sp_pq", p=1, q=1)
    rec = [r for r in enumerate_orbits(a) if not r.is_zero_orbit][0]
    t = build_triple(a, rec.datum)
    assert centralizer_dim_triple(t, a) == 1

    # so(2,1), regular orbit [3].
    a = AlgebraSpec("so_pq", p=2, q=1)
    from nilorb.diagrams import SignedDiagram
    d = SignedDiagram(Partition([3]), {3: 0})
    assert orbit_dim(a, d) == 2


def test_zero_orbit_dimensions():
    a = AlgebraSpec("sp_pq", p=2, q=1)
    zero = Partition([1, 1, 1])
    recs = [r for r in enumerate_orbits(a) if r.is_zero_orbit]
    assert len(recs) == 1
    rep = centralizer_report(a, recs[0].datum)
    assert rep.dim_orbit == 0
    assert rep.dim_z_X == rep.dim_g
    assert rep.dim_z_triple == rep.dim_g
    assert rep.match


def test_compact_at_most_reductive():
    for a in SWEEP:
        if a.family == "so_star":
            continue
        for rec in enumerate_orbits(a):
            assert (expected_compact_dim(a, rec.datum)
                    <= expected_reductive_dim(a, rec.datum))


def test_complex_orbits_have_even_dimension():
    for a in (AlgebraSpec("sl_c", n=5), AlgebraSpec("so_c", n=6),
              AlgebraSpec("sp_c", n=3)):
        for rec in enumerate_orbits(a):
            assert orbit_dim(a, rec.datum) % 2 == 0


def test_low_rank_isomorphism_dimension_match():
    """so(3) = sl(2,R) up to cover: orbit dimensions agree pairwise."""
    left = sorted(orbit_dim(AlgebraSpec("so_pq", p=2, q=1), r.datum)
                  for r in enumerate_orbits(AlgebraSpec("so_pq", p=2, q=1)))
    right = sorted({orbit_dim(AlgebraSpec("sl_r", n=2), r.datum)
                    for r in enumerate_orbits(AlgebraSpec("sl_r", n=2))})
    assert left == right == [0, 2]


def test_report_fields():
    a = AlgebraSpec("sl_h", n=2)
    rec = [r for r in enumerate_orbits(a) if not r.is_zero_orbit][0]
    rep = centralizer_report(a, rec.datum)
    doc = rep.to_json()
    assert set(doc) == {"dim_z_triple", "dim_z_X", "dim_g", "dim_orbit",
                        "expected_reductive", "expected_compact", "match"}
    assert doc["dim_g"] == 4 * 4 - 1
    assert doc["dim_orbit"] == doc["dim_g"] - doc["dim_z_X"]
    assert doc["match"] is True


def test_expected_compact_unsupported_family():
    a = AlgebraSpec("so_star", n=2)
    rec = enumerate_orbits(a)[0]
    with pytest.raises(ValueError):
        expected_compact_dim(a, rec.datum)
