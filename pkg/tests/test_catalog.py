"""Orbit catalogs: enumeration sets, fiber counts, and membership messages."""

from __future__ import annotations

import pytest

from nilorb.catalog import (AlgebraSpec, datum_membership_error,
                            enumerate_orbits, fiber_count, total_orbit_count)
from nilorb.diagrams import SignedDiagram, sign_row
from nilorb.partitions import Partition, enumerate_partitions

# Catalog totals frozen from independent hand enumeration:
#   sl_r n=2: [2] splits in two, [1,1] stays      -> 3
#   sl_c n=4: partitions of 4                      -> 5
#   sl_h n=4: partitions of 4                      -> 5
#   sp_c n=2: partitions of 4 with odd parts in pairs
#             {[1^4],[2,1,1],[2,2],[4]}            -> 4
#   so_c n=5: {[1^5],[2,2,1],[3,1,1],[5]}          -> 4
#   sp_c n=1: {[1,1],[2]}                          -> 2
FROZEN_TOTALS = [
    ("sl_r", {"n": 2}, 3),
    ("sl_c", {"n": 4}, 5),
    ("sl_h", {"n": 4}, 5),
    ("sp_c", {"n": 2}, 4),
    ("so_c", {"n": 5}, 4),
    ("sp_c", {"n": 1}, 2),
]


@pytest.mark.parametrize("family,params,total", FROZEN_TOTALS)
def test_frozen_totals(family, params, total):
    assert total_orbit_count(AlgebraSpec(family, **params)) == total


def test_cross_isomorphism_counts():
    """Low-rank coincidences force equal orbit totals."""
    assert total_orbit_count(AlgebraSpec("so_pq", p=2, q=1)) == \
        total_orbit_count(AlgebraSpec("sl_r", n=2)) == 3
    assert total_orbit_count(AlgebraSpec("sp_c", n=2)) == \
        total_orbit_count(AlgebraSpec("so_c", n=5)) == 4
    assert total_orbit_count(AlgebraSpec("sp_c", n=1)) == \
        total_orbit_count(AlgebraSpec("sl_c", n=2)) == 2


def test_indefinite_orthogonal_2_1_example():
    recs = enumerate_orbits(AlgebraSpec("so_pq", p=2, q=1))
    assert len(recs) == 2
    assert sorted(r.fiber_count for r in recs) == [1, 2]
    by_str = {str(r.datum): r for r in recs}
    assert by_str["[3](3:0)"].fiber_count == 2


def test_special_linear_catalog_is_all_partitions():
    for family in ("sl_r", "sl_c", "sl_h"):
        for n in range(1, 7):
            recs = enumerate_orbits(AlgebraSpec(family, n=n))
            assert [r.partition() for r in recs] == enumerate_partitions(n)


def test_complex_orthogonal_catalog_filter():
    for n in range(3, 9):
        recs = enumerate_orbits(AlgebraSpec("so_c", n=n))
        want = [p for p in enumerate_partitions(n)
                if all(t % 2 == 0 for d, t in p.pairs if d % 2 == 0)]
        assert [r.partition() for r in recs] == want


def test_complex_symplectic_catalog_filter():
    for n in range(1, 5):
        recs = enumerate_orbits(AlgebraSpec("sp_c", n=n))
        want = [p for p in enumerate_partitions(2 * n)
                if all(t % 2 == 0 for d, t in p.pairs if d % 2 == 1)]
        assert [r.partition() for r in recs] == want


def test_signed_catalogs_respect_signature():
    for p in range(1, 5):
        for q in range(1, 5):
            a = AlgebraSpec("so_pq", p=p, q=q)
            for rec in enumerate_orbits(a):
                assert rec.datum.sgn_counts() == (p, q)
                assert all(t % 2 == 0 for d, t in rec.partition().pairs
                           if d % 2 == 0)
            b = AlgebraSpec("sp_pq", p=p, q=q)
            for rec in enumerate_orbits(b):
                assert rec.datum.sgn_counts() == (p, q)


def test_quaternionic_orthogonal_catalog():
    for n in range(1, 5):
        a = AlgebraSpec("so_star", n=n)
        for rec in enumerate_orbits(a):
            # Odd rows all start +; no signature constraint applies.
            for d, t in rec.partition().pairs:
                if d % 2 == 1:
                    assert rec.datum.p_of(d) == t


# --- fiber rules re-derived from the classification tables -----------------

def rederived_fiber(family: str, datum) -> int:
    """Independent restatement of the orbit-fiber tables."""
    part = datum.partition if isinstance(datum, SignedDiagram) else datum
    all_even = all(d % 2 == 0 for d, _ in part.pairs)
    very_even = all_even and all(t % 2 == 0 for _, t in part.pairs)
    if family == "sl_r":
        return 2 if all_even else 1
    if family == "so_c":
        return 2 if very_even else 1
    if family == "so_pq":
        if very_even:
            return 4
        evens_paired = all(t % 2 == 0 for d, t in part.pairs if d % 2 == 0)
        plus_side = minus_side = True
        for d, t in part.pairs:
            if d % 2 == 0:
                continue
            for start, count in ((1, datum.p_of(d)), (-1, t - datum.p_of(d))):
                if count == 0:
                    continue
                row = sign_row(d, start)
                if sum(1 for s in row if s == 1) % 2:
                    plus_side = False
                if sum(1 for s in row if s == -1) % 2:
                    minus_side = False
        if evens_paired and (plus_side or minus_side):
            return 2
        return 1
    return 1


def test_fiber_rules_exhaustive():
    """Every datum with at most 8 boxes, against the re-derived tables."""
    for n in range(1, 9):
        for part in enumerate_partitions(n):
            a = AlgebraSpec("sl_r", n=n)
            if datum_membership_error(a, part) is None:
                assert fiber_count(a, part) == rederived_fiber("sl_r", part)
        for family, lo in (("sl_c", 1), ("sl_h", 1), ("so_c", 3)):
            if n < lo:
                continue
            a = AlgebraSpec(family, n=n)
            for rec in enumerate_orbits(a):
                assert rec.fiber_count == rederived_fiber(family, rec.datum)
        if n % 2 == 0:
            a = AlgebraSpec("sp_c", n=n // 2)
            for rec in enumerate_orbits(a):
                assert rec.fiber_count == 1
        for p in range(1, n):
            q = n - p
            for family in ("so_pq", "sp_pq"):
                a = AlgebraSpec(family, p=p, q=q)
                for rec in enumerate_orbits(a):
                    assert rec.fiber_count == rederived_fiber(family, rec.datum), \
                        (family, p, q, str(rec.datum))
            a = AlgebraSpec("so_star", n=n)
            for rec in enumerate_orbits(a):
                assert rec.fiber_count == 1


def test_total_count_sums_fibers():
    for a in (AlgebraSpec("so_pq", p=3, q=2), AlgebraSpec("sl_r", n=4),
              AlgebraSpec("so_c", n=8)):
        recs = enumerate_orbits(a)
        assert total_orbit_count(a) == sum(r.fiber_count for r in recs)


# --- membership messages ----------------------------------------------------

def test_membership_accepts_catalog_members():
    specs = [AlgebraSpec("sl_r", n=3), AlgebraSpec("so_c", n=6),
             AlgebraSpec("sp_c", n=2), AlgebraSpec("so_pq", p=2, q=2),
             AlgebraSpec("sp_pq", p=2, q=1), AlgebraSpec("so_star", n=3)]
    for a in specs:
        for rec in enumerate_orbits(a):
            assert datum_membership_error(a, rec.datum) is None


def test_membership_rejections_name_the_rule():
    a = AlgebraSpec("so_c", n=6)
    msg = datum_membership_error(a, Partition([4, 2]))
    assert "even multiplicity" in msg
    msg = datum_membership_error(a, Partition([3, 2, 2]))
    assert "boxes" in msg  # wrong size
    a = AlgebraSpec("sp_c", n=2)
    msg = datum_membership_error(a, Partition([3, 1]))
    assert "odd part" in msg
    a = AlgebraSpec("so_pq", p=2, q=1)
    msg = datum_membership_error(
        a, SignedDiagram(Partition([3]), {3: 1}))
    assert "sign counts" in msg
    msg = datum_membership_error(a, Partition([3]))
    assert "signed" in msg
    a = AlgebraSpec("sl_r", n=3)
    msg = datum_membership_error(
        a, SignedDiagram(Partition([3]), {3: 1}))
    assert "plain partitions" in msg


def test_algebra_spec_validation():
    with pytest.raises(ValueError):
        AlgebraSpec("so_pq", n=3)
    with pytest.raises(ValueError):
        AlgebraSpec("sl_r", p=1, q=1)
    with pytest.raises(ValueError):
        AlgebraSpec("so_c", n=2)
    with pytest.raises(ValueError):
        AlgebraSpec("nope", n=2)
    with pytest.raises(ValueError):
        AlgebraSpec("sp_pq", p=0, q=2)


def test_low_rank_warning():
    assert AlgebraSpec("so_c", n=4).low_rank_warning
    assert not AlgebraSpec("so_c", n=5).low_rank_warning
    assert AlgebraSpec("so_pq", p=2, q=2).low_rank_warning
    assert not AlgebraSpec("so_pq", p=3, q=2).low_rank_warning
    assert not AlgebraSpec("sp_pq", p=1, q=1).low_rank_warning
