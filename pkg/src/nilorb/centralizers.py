"""Exact centralizer dimensions and their closed-form cross-checks.

The solver realifies the linear conditions cutting out the centralizer of
a triple (or of its nilpotent element alone) inside the ambient algebra
and computes the kernel dimension over the rationals.  Unknowns are the
real components of the matrix entries; the assembled system stays sparse
but is bounded by O((dim g)^2) rational entries per orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .catalog import AlgebraSpec, Datum
from .diagrams import SignedDiagram
from .matrices import ExactMatrix
from .partitions import Partition
from .scalars import Scalar
from .triples import (FORM_KIND, RING_DIM, SCALAR_RING, Triple, build_triple,
                      gram_matrix, layout_for)

_UNITS = (
    Scalar.unit("1"),
    Scalar.unit("i"),
    Scalar.unit("j"),
    Scalar.unit("k"),
)


def dim_g(a: AlgebraSpec) -> int:
    """Real dimension of the ambient simple algebra."""
    n = a.n if a.n is not None else a.p + a.q
    return {
        "sl_r": n * n - 1,
        "sl_c": 2 * (n * n - 1),
        "sl_h": 4 * n * n - 1,
        "so_c": n * (n - 1),
        "so_pq": n * (n - 1) // 2,
        "sp_c": 2 * n * (2 * n + 1),
        "sp_pq": n * (2 * n + 1),
        "so_star": n * (2 * n - 1),
    }[a.family]


def _partition_of(datum: Datum) -> Partition:
    return datum.partition if isinstance(datum, SignedDiagram) else datum


def expected_reductive_dim(a: AlgebraSpec, datum: Datum) -> int:
    """Real dimension of the reductive centralizer, in closed form."""
    part = _partition_of(datum)
    odd = [(d, t) for d, t in part.pairs if d % 2 == 1]
    even = [(d, t) for d, t in part.pairs if d % 2 == 0]
    fam = a.family
    if fam == "sl_c":
        return 2 * sum(t * t for _, t in part.pairs) - 2
    if fam == "sl_r":
        return sum(t * t for _, t in part.pairs) - 1
    if fam == "sl_h":
        return 4 * sum(t * t for _, t in part.pairs) - 1
    if fam == "so_c":
        return sum(t * (t - 1) for _, t in odd) + sum(t * (t + 1) for _, t in even)
    if fam == "so_pq":
        return (sum(t * (t - 1) // 2 for _, t in odd)
                + sum(t * (t + 1) // 2 for _, t in even))
    if fam == "sp_c":
        return sum(t * (t - 1) for _, t in even) + sum(t * (t + 1) for _, t in odd)
    if fam == "sp_pq":
        return (sum(t * (2 * t - 1) for _, t in even)
                + sum(t * (2 * t + 1) for _, t in odd))
    if fam == "so_star":
        return (sum(t * (2 * t - 1) for _, t in odd)
                + sum(t * (2 * t + 1) for _, t in even))
    raise ValueError(fam)


def expected_compact_dim(a: AlgebraSpec, datum: Datum) -> int:
    """Real dimension of the maximal compact subgroup K, in closed form."""
    part = _partition_of(datum)
    fam = a.family
    if fam == "sl_c":
        return sum(t * t for _, t in part.pairs) - 1
    if fam == "sl_r":
        return sum(t * (t - 1) // 2 for _, t in part.pairs)
    if fam == "sl_h":
        return sum(t * (2 * t + 1) for _, t in part.pairs)
    odd = [(d, t) for d, t in part.pairs if d % 2 == 1]
    even = [(d, t) for d, t in part.pairs if d % 2 == 0]
    if fam == "so_c":
        return (sum((t // 2) * (t + 1) for _, t in even)
                + sum(t * (t - 1) // 2 for _, t in odd))
    if fam == "so_pq":
        total = sum((t // 2) ** 2 for _, t in even)
        for d, _ in odd:
            p, q = datum.p_of(d), datum.q_of(d)
            total += (p * (p - 1) + q * (q - 1)) // 2
        return total
    if fam == "sp_c":
        return (sum(t * (t - 1) // 2 for _, t in even)
                + sum((t // 2) * (t + 1) for _, t in odd))
    if fam == "sp_pq":
        total = sum(t * t for _, t in even)
        for d, _ in odd:
            p, q = datum.p_of(d), datum.q_of(d)
            total += p * (2 * p + 1) + q * (2 * q + 1)
        return total
    raise ValueError(f"no compact closed form for {fam}")


# ---------------------------------------------------------------------------
# Kernel solver
# ---------------------------------------------------------------------------

def _nullity(rows: List[Dict[int, Fraction]], num_unknowns: int) -> int:
    """Kernel dimension of a sparse rational system via incremental echelon."""
    pivots: Dict[int, Dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            if c in pivots:
                factor = r.pop(c)
                for cc, vv in pivots[c].items():
                    if cc == c:
                        continue
                    nv = r.get(cc, Fraction(0)) - factor * vv
                    if nv:
                        r[cc] = nv
                    else:
                        r.pop(cc, None)
            else:
                piv = r[c]
                pivots[c] = {cc: vv / piv for cc, vv in r.items()}
                rank += 1
                break
    return num_unknowns - rank


def _scatter(scalar: Scalar, comps: int) -> List[Tuple[int, Fraction]]:
    out = []
    for c, v in enumerate(scalar.components):
        if v:
            if c >= comps:
                raise AssertionError("constraint coefficient outside the scalar ring")
            out.append((c, v))
    return out


def _centralizer_nullity(a: AlgebraSpec,
                         commute_with: List[ExactMatrix],
                         gram: Optional[ExactMatrix],
                         n: int,
                         positions: List[Tuple[int, int]]) -> int:
    """Real dimension of {Z : [Z, M] = 0 for listed M, Z in the algebra}.

    For the complex families every condition is complex-linear, so the
    solve runs on one real component and the nullity doubles.
    """
    ring = SCALAR_RING[a.family]
    comps = RING_DIM[ring]
    doubling = 1
    if ring == "complex":
        comps, doubling = 1, 2
    index: Dict[Tuple[int, int, int], int] = {}
    for (r, s) in positions:
        for c in range(comps):
            index[(r, s, c)] = len(index)

    rows: Dict[Tuple, Dict[int, Fraction]] = {}

    def add(key: Tuple, unknown: Tuple[int, int, int], coeff: Fraction) -> None:
        if coeff:
            row = rows.setdefault(key, {})
            idx = index[unknown]
            val = row.get(idx, Fraction(0)) + coeff
            if val:
                row[idx] = val
            else:
                row.pop(idx, None)

    # Commutation rows stay inside one real component because the fixed
    # matrices are rational.
    for mi, m in enumerate(commute_with):
        for (ra, rb) in positions:
            for s in range(n):
                coeff = m.entry(rb, s)
                if not coeff.is_zero():
                    q = coeff.rational_value()
                    for c in range(comps):
                        add(("c", mi, ra, s, c), (ra, rb, c), q)
            for r in range(n):
                coeff = m.entry(r, ra)
                if not coeff.is_zero():
                    q = coeff.rational_value()
                    for c in range(comps):
                        add(("c", mi, r, rb, c), (ra, rb, c), -q)

    if gram is not None:
        _, sigma = FORM_KIND[a.family]
        for (ra, rb) in positions:
            for c in range(comps):
                unit = _UNITS[c]
                left = unit.conjugate() if sigma == "conj" else unit
                for s in range(n):
                    sv = gram.entry(ra, s)
                    if not sv.is_zero():
                        for cc, coeff in _scatter(left * sv, RING_DIM[ring]):
                            add(("m", rb, s, cc), (ra, rb, c), coeff)
                for r in range(n):
                    sv = gram.entry(r, ra)
                    if not sv.is_zero():
                        for cc, coeff in _scatter(sv * unit, RING_DIM[ring]):
                            add(("m", r, rb, cc), (ra, rb, c), coeff)
    elif a.family in ("sl_r", "sl_c"):
        for c in range(comps):
            row_key = ("t", c)
            for (ra, rb) in positions:
                if ra == rb:
                    add(row_key, (ra, rb, c), Fraction(1))
    elif a.family == "sl_h":
        for (ra, rb) in positions:
            if ra == rb:
                add(("t", 0), (ra, rb, 0), Fraction(2))

    return doubling * _nullity(list(rows.values()), len(index))


def centralizer_dim_triple(t: Triple, a: AlgebraSpec,
                           datum: Optional[Datum] = None) -> int:
    """Real dimension of the simultaneous centralizer of X, H, Y in the algebra."""
    n = t.X.nrows
    weights = layout_for(t.partition).weights()
    positions = [(r, s) for r in range(n) for s in range(n)
                 if weights[r] == weights[s]]
    return _centralizer_nullity(a, [t.X, t.Y], t.gram, n, positions)


def centralizer_dim_nilpotent(x: ExactMatrix, a: AlgebraSpec,
                              datum: Optional[Datum] = None) -> int:
    """Real dimension of the centralizer of the nilpotent element alone.

    ``x`` must be given in the triple basis of ``datum`` for the form
    families, where the invariant form's Gram matrix is needed.
    """
    n = x.nrows
    gram = None
    if a.family in FORM_KIND:
        if datum is None:
            raise ValueError("form families need the datum to pin the Gram matrix")
        gram = gram_matrix(a, datum)
    positions = [(r, s) for r in range(n) for s in range(n)]
    return _centralizer_nullity(a, [x], gram, n, positions)


def orbit_dim(a: AlgebraSpec, datum: Datum) -> int:
    """Real dimension of the adjoint orbit through the datum's representative."""
    part = _partition_of(datum)
    if part.is_zero_type():
        return 0
    triple = build_triple(a, datum)
    return dim_g(a) - centralizer_dim_nilpotent(triple.X, a, datum)


@dataclass(frozen=True)
class CentralizerReport:
    """Solved and closed-form centralizer dimensions for one orbit."""

    dim_z_triple: int
    dim_z_X: int
    dim_g: int
    dim_orbit: int
    expected_reductive: int
    expected_compact: Optional[int]
    match: bool

    def to_json(self) -> dict:
        return {
            "dim_z_triple": self.dim_z_triple,
            "dim_z_X": self.dim_z_X,
            "dim_g": self.dim_g,
            "dim_orbit": self.dim_orbit,
            "expected_reductive": self.expected_reductive,
            "expected_compact": self.expected_compact,
            "match": self.match,
        }


def centralizer_report(a: AlgebraSpec, datum: Datum) -> CentralizerReport:
    part = _partition_of(datum)
    ambient = dim_g(a)
    expected = expected_reductive_dim(a, datum)
    try:
        compact = expected_compact_dim(a, datum)
    except ValueError:
        compact = None
    if part.is_zero_type():
        return CentralizerReport(
            dim_z_triple=ambient, dim_z_X=ambient, dim_g=ambient, dim_orbit=0,
            expected_reductive=expected, expected_compact=compact,
            match=ambient == expected)
    triple = build_triple(a, datum)
    dz_triple = centralizer_dim_triple(triple, a, datum)
    dz_x = centralizer_dim_nilpotent(triple.X, a, datum)
    return CentralizerReport(
        dim_z_triple=dz_triple, dim_z_X=dz_x, dim_g=ambient,
        dim_orbit=ambient - dz_x, expected_reductive=expected,
        expected_compact=compact, match=dz_triple == expected)
