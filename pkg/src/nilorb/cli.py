"""Command-line front end: list, describe, and verify orbit catalogs."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Tuple

from .catalog import (FAMILIES, SIGNED_FAMILIES, AlgebraSpec, Datum,
                      OrbitRecord, datum_membership_error, enumerate_orbits)
from .centralizers import centralizer_report
from .diagrams import SignedDiagram
from .homotopy import (KElement, compact_pair, embed_K, sample_k_element,
                       signed_block_relation, signed_block_totals,
                       verify_K_membership)
from .matrices import ExactMatrix, congruence_signature
from .partitions import Partition
from .scalars import BASIS_NAMES, Scalar
from .triples import (Triple, adapted_basis, build_triple, jordan_type,
                      sigma_transpose, standard_adapted_gram)

SCHEMA_VERSION = 1

_HOMOTOPY_FAMILIES = ("sl_r", "sl_c", "sl_h", "so_c", "so_pq", "sp_c", "sp_pq")

_CHECK_ORDER = (
    "[H,X]=2X",
    "[H,Y]=-2Y",
    "[X,Y]=H",
    "jordan-type",
    "gram-symmetry",
    "gram-invariance",
    "gram-signature",
    "adapted-basis",
    "block-accounting",
    "centralizer-dim",
    "zero-orbit-quotient",
    "embedding-homomorphism",
    "K-membership",
)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Argument handling
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilorb",
        description="Enumerate, construct, and verify nilpotent adjoint "
                    "orbits of the classical real and complex simple Lie "
                    "algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", required=True, choices=FAMILIES,
                        help="algebra family")
    common.add_argument("--n", type=int,
                        help="rank parameter (sp_c matrices are 2n x 2n)")
    common.add_argument("--p", type=int, help="positive part of the signature")
    common.add_argument("--q", type=int, help="negative part of the signature")
    common.add_argument("--format", choices=("json", "table"), default="table",
                        help="output format (default: table)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for the randomized checks (default: 0)")
    common.add_argument("--max-verify-n", type=int, default=6,
                        help="size cap for the verify sweep (default: 6)")

    p_list = sub.add_parser("list", parents=[common],
                            help="enumerate the orbit catalog")
    p_desc = sub.add_parser("describe", parents=[common],
                            help="construct one orbit in full detail")
    p_desc.add_argument("--datum", required=True,
                        help='partition, e.g. "3,2,2,1"')
    p_desc.add_argument("--signs", default=None,
                        help='sign counts "d:p_d" per part, e.g. "3:0,1:2"')
    p_ver = sub.add_parser("verify", parents=[common],
                           help="run the exact verification suite")
    p_ver.add_argument("--inject-fault", action="store_true",
                       help="corrupt one triple to exercise failure paths")
    for p in (p_list, p_desc, p_ver):
        p.set_defaults(parser=p)
    return parser


def _algebra_from_args(args) -> AlgebraSpec:
    try:
        if args.algebra in SIGNED_FAMILIES:
            if args.p is None or args.q is None:
                raise UsageError(f"{args.algebra} needs --p and --q")
            if args.n is not None:
                raise UsageError(f"{args.algebra} takes --p/--q, not --n")
            return AlgebraSpec(args.algebra, p=args.p, q=args.q)
        if args.n is None:
            raise UsageError(f"{args.algebra} needs --n")
        if args.p is not None or args.q is not None:
            raise UsageError(f"{args.algebra} takes --n, not --p/--q")
        return AlgebraSpec(args.algebra, n=args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _verify_specs(args) -> List[AlgebraSpec]:
    """The algebras a verify run sweeps: one explicit, or all small sizes."""
    if args.n is not None or args.p is not None or args.q is not None:
        return [_algebra_from_args(args)]
    cap = args.max_verify_n
    fam = args.algebra
    out = []
    if fam in SIGNED_FAMILIES:
        for total in range(2, cap + 1):
            for p in range(1, total):
                out.append(AlgebraSpec(fam, p=p, q=total - p))
        return out
    lo = 3 if fam == "so_c" else 1
    hi = cap // 2 if fam == "sp_c" else cap
    return [AlgebraSpec(fam, n=n) for n in range(lo, hi + 1)]


def _parse_datum(a: AlgebraSpec, datum_str: str, signs_str: Optional[str]) -> Datum:
    try:
        parts = [int(x) for x in datum_str.replace(" ", "").split(",") if x]
        if not parts:
            raise ValueError("empty partition")
        partition = Partition(parts)
    except ValueError as exc:
        raise UsageError(f"cannot parse --datum {datum_str!r}: {exc}") from exc
    if a.family not in ("so_pq", "sp_pq", "so_star"):
        if signs_str:
            raise UsageError(f"{a.family} takes plain partitions; drop --signs")
        return partition
    p_by_part: Dict[int, int] = {}
    if signs_str:
        for chunk in signs_str.replace(" ", "").split(","):
            if not chunk:
                continue
            try:
                d, p = chunk.split(":")
                p_by_part[int(d)] = int(p)
            except ValueError as exc:
                raise UsageError(
                    f"cannot parse --signs entry {chunk!r}; use d:p_d") from exc
    forced_parity = 1 if a.family == "so_star" else 0
    for d, t in partition.pairs:
        if d % 2 == forced_parity:
            p_by_part.setdefault(d, t)
    try:
        return SignedDiagram(partition, p_by_part)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _thread_count() -> int:
    raw = os.environ.get("NILORB_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        raise UsageError(f"NILORB_THREADS must be a positive integer, got {raw!r}")
    return value


def _run_indexed(tasks: Sequence, fn):
    """Apply ``fn`` over tasks, optionally on a worker pool, keeping order."""
    threads = _thread_count()
    if threads == 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, tasks))


# ---------------------------------------------------------------------------
# Rendering helpers
# ---------------------------------------------------------------------------

def _scalar_str(s: Scalar) -> str:
    if s.is_zero():
        return "0"
    terms = []
    for idx, c in enumerate(s.components):
        if not c:
            continue
        name = BASIS_NAMES[idx]
        if name == "1":
            terms.append(str(c))
        elif c == 1:
            terms.append(name)
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{c}*{name}")
    return "+".join(terms).replace("+-", "-")


def _matrix_lines(title: str, m: ExactMatrix) -> List[str]:
    cells = [[_scalar_str(m.entry(r, c)) for c in range(m.ncols)]
             for r in range(m.nrows)]
    widths = [max((len(cells[r][c]) for r in range(m.nrows)), default=1)
              for c in range(m.ncols)]
    lines = [f"{title}:"]
    for r in range(m.nrows):
        row = "  ".join(cells[r][c].rjust(widths[c]) for c in range(m.ncols))
        lines.append(f"  [ {row} ]")
    return lines


def _datum_str(datum: Datum) -> str:
    return str(datum)


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt(cells):
        return "  ".join(c.ljust(widths[i]) for i, c in enumerate(cells)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines.extend(fmt(row) for row in rows)
    return lines


# ---------------------------------------------------------------------------
# list
# ---------------------------------------------------------------------------

def _record_document(a: AlgebraSpec, rec: OrbitRecord) -> dict:
    report = centralizer_report(a, rec.datum)
    doc = rec.to_json()
    doc["datum_rendered"] = _datum_str(rec.datum)
    doc["orbit_dim"] = report.dim_orbit
    doc["centralizer"] = report.to_json()
    if a.family in _HOMOTOPY_FAMILIES:
        h = compact_pair(a, rec.datum)
        doc["homotopy"] = h.to_json()
        doc["homotopy_rendered"] = h.rendered()
    else:
        doc["homotopy"] = None
        doc["homotopy_rendered"] = None
    return doc


def _cmd_list(args) -> int:
    a = _algebra_from_args(args)
    records = enumerate_orbits(a)
    docs = _run_indexed(records, lambda rec: _record_document(a, rec))
    document = {
        "schema": SCHEMA_VERSION,
        "algebra": a.family,
        "params": a.params_json(),
        "low_rank_warning": a.low_rank_warning,
        "total_orbit_count": sum(r.fiber_count for r in records),
        "orbit_records": docs,
    }
    if args.format == "json":
        print(json.dumps(document, indent=2))
        return 0
    rows = []
    for doc in docs:
        fibers = doc["fiber_count"]
        for k in range(1, fibers + 1):
            rows.append([
                doc["datum_rendered"],
                f"{k}/{fibers}",
                str(doc["orbit_dim"]),
                doc["homotopy_rendered"] or "-",
            ])
    print(f"orbit catalog for {a}")
    if a.low_rank_warning:
        print("warning: size is below the family's simple range; "
              "small-rank coincidences apply")
    for line in _table(("datum", "orbit", "orbit-dim", "homotopy type"), rows):
        print(line)
    print(f"total orbits: {document['total_orbit_count']}")
    return 0


# ---------------------------------------------------------------------------
# describe
# ---------------------------------------------------------------------------

def _cmd_describe(args) -> int:
    a = _algebra_from_args(args)
    datum = _parse_datum(a, args.datum, args.signs)
    problem = datum_membership_error(a, datum)
    if problem is not None:
        print(f"datum rejected: {problem}", file=sys.stderr)
        return 2
    record = next(r for r in enumerate_orbits(a) if r.datum == datum)
    report = centralizer_report(a, datum)
    doc = {
        "schema": SCHEMA_VERSION,
        "algebra": a.family,
        "params": a.params_json(),
        "low_rank_warning": a.low_rank_warning,
        "datum": record.to_json()["datum"],
        "datum_rendered": _datum_str(datum),
        "fiber_count": record.fiber_count,
        "is_zero_orbit": record.is_zero_orbit,
        "orbit_dim": report.dim_orbit,
        "centralizer": report.to_json(),
    }
    triple = None
    if not record.is_zero_orbit:
        triple = build_triple(a, datum)
        doc["triple"] = triple.to_json()
    else:
        doc["triple"] = None
    if a.family in ("so_c", "so_pq", "sp_c", "sp_pq"):
        doc["change_of_basis"] = adapted_basis(a, datum).matrix.to_json()
    else:
        doc["change_of_basis"] = None
    if a.family in _HOMOTOPY_FAMILIES:
        h = compact_pair(a, datum)
        doc["homotopy"] = h.to_json()
        doc["homotopy_rendered"] = h.rendered()
    else:
        doc["homotopy"] = None
        doc["homotopy_rendered"] = None

    if args.format == "json":
        print(json.dumps(doc, indent=2))
        return 0
    print(f"{a} orbit datum {doc['datum_rendered']}")
    if a.low_rank_warning:
        print("warning: size is below the family's simple range; "
              "small-rank coincidences apply")
    print(f"fiber count: {doc['fiber_count']}")
    print(f"orbit dimension: {doc['orbit_dim']}")
    rep = doc["centralizer"]
    print(f"centralizer dims: triple={rep['dim_z_triple']} "
          f"nilpotent={rep['dim_z_X']} ambient={rep['dim_g']} "
          f"expected-reductive={rep['expected_reductive']} "
          f"match={'yes' if rep['match'] else 'NO'}")
    if doc["homotopy_rendered"]:
        print(f"homotopy type: {doc['homotopy_rendered']}")
        h = doc["homotopy"]
        print(f"dims: M={h['dim_M']} K={h['dim_K']} quotient={h['dim_quotient']}")
        if doc["is_zero_orbit"]:
            print("zero orbit: K = M, the quotient is a point")
    if triple is not None:
        for title, m in (("X", triple.X), ("H", triple.H), ("Y", triple.Y)):
            for line in _matrix_lines(title, m):
                print(line)
        if triple.gram is not None:
            for line in _matrix_lines("gram", triple.gram):
                print(line)
    if doc["change_of_basis"] is not None:
        t_matrix = adapted_basis(a, datum).matrix
        for line in _matrix_lines("adapted basis (columns)", t_matrix):
            print(line)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _verify_orbit(a: AlgebraSpec, rec: OrbitRecord, seed: int, index: int,
                  inject_fault: bool) -> List[Tuple[str, bool, str]]:
    """All checks for one orbit: (check name, passed, detail)."""
    rng = random.Random(f"{seed}:{a}:{index}")
    datum = rec.datum
    results: List[Tuple[str, bool, str]] = []
    report = centralizer_report(a, datum)
    results.append(("centralizer-dim", report.match,
                    f"solved {report.dim_z_triple}, "
                    f"expected {report.expected_reductive}"))

    if a.family in SIGNED_FAMILIES:
        totals = signed_block_totals(a, datum)
        relation = signed_block_relation(datum)
        ok = totals == relation == (a.p, a.q)
        results.append(("block-accounting", ok,
                        f"halves {totals}, closed form {relation}"))

    if rec.is_zero_orbit:
        if a.family in _HOMOTOPY_FAMILIES:
            h = compact_pair(a, datum)
            results.append(("zero-orbit-quotient", h.dim_quotient == 0,
                            f"dim_quotient={h.dim_quotient}"))
        return results

    triple = build_triple(a, datum)
    if inject_fault:
        triple = replace(triple, Y=triple.Y.scale_left(Scalar.rational(2)))
    two_x = triple.X.scale_left(Scalar.rational(2))
    minus_two_y = triple.Y.scale_left(Scalar.rational(-2))
    comm = lambda m1, m2: m1 @ m2 - m2 @ m1
    results.append(("[H,X]=2X", comm(triple.H, triple.X) == two_x, ""))
    results.append(("[H,Y]=-2Y", comm(triple.H, triple.Y) == minus_two_y, ""))
    results.append(("[X,Y]=H", comm(triple.X, triple.Y) == triple.H, ""))
    results.append(("jordan-type",
                    jordan_type(triple.X) == rec.partition(), ""))

    if triple.gram is not None:
        s = triple.gram
        eps_s = s if triple.epsilon == 1 else -s
        results.append(("gram-symmetry",
                        sigma_transpose(s, triple.sigma) == eps_s, ""))
        invariant = all(
            (sigma_transpose(m, triple.sigma) @ s + s @ m).is_zero()
            for m in (triple.X, triple.H, triple.Y))
        results.append(("gram-invariance", invariant, ""))
        if a.family in SIGNED_FAMILIES:
            sig = congruence_signature(s)
            results.append(("gram-signature", sig == (a.p, a.q),
                            f"signature {sig}"))
    t_matrix = None
    if a.family in ("so_c", "so_pq", "sp_c", "sp_pq"):
        t_matrix = adapted_basis(a, datum).matrix
        target = standard_adapted_gram(a, datum)
        got = sigma_transpose(t_matrix, triple.sigma) @ triple.gram @ t_matrix
        results.append(("adapted-basis", got == target, ""))

    if a.family in _HOMOTOPY_FAMILIES:
        e1 = sample_k_element(a, datum, rng)
        e2 = sample_k_element(a, datum, rng)
        prod = KElement(tuple(g1 @ g2 for g1, g2 in zip(e1.factors, e2.factors)))
        homo = embed_K(a, datum, e1) @ embed_K(a, datum, e2) == embed_K(a, datum, prod)
        ident = KElement(tuple(ExactMatrix.identity(g.nrows) for g in e1.factors))
        homo = homo and embed_K(a, datum, ident) == ExactMatrix.identity(
            embed_K(a, datum, e1).nrows)
        results.append(("embedding-homomorphism", homo, ""))
        member = verify_K_membership(a, datum, e1, triple, t_matrix)
        detail = "" if member.ok else ", ".join(member.failures)
        results.append(("K-membership", member.ok, detail))
    return results


def _cmd_verify(args) -> int:
    specs = _verify_specs(args)
    fault_armed = args.inject_fault
    algebra_reports = []
    all_ok = True
    for a in specs:
        records = enumerate_orbits(a)
        tasks = []
        for idx, rec in enumerate(records):
            inject = fault_armed and not rec.is_zero_orbit
            if inject:
                fault_armed = False
            tasks.append((rec, idx, inject))
        per_orbit = _run_indexed(
            tasks, lambda t: _verify_orbit(a, t[0], args.seed, t[1], t[2]))
        by_check: Dict[str, List[Tuple[bool, str]]] = {}
        for results in per_orbit:
            for name, ok, detail in results:
                by_check.setdefault(name, []).append((ok, detail))
        checks = []
        for name in _CHECK_ORDER:
            if name not in by_check:
                continue
            outcomes = by_check[name]
            failed = [d for ok, d in outcomes if not ok]
            ok_all = not failed
            all_ok = all_ok and ok_all
            checks.append({
                "name": name,
                "status": "PASSED" if ok_all else "FAILED",
                "orbits": len(outcomes),
                "failures": len(failed),
                "detail": failed[0] if failed else "",
            })
        algebra_reports.append({
            "algebra": a.family,
            "params": a.params_json(),
            "orbit_records": len(records),
            "checks": checks,
        })
    document = {
        "schema": SCHEMA_VERSION,
        "seed": args.seed,
        "result": "PASS" if all_ok else "FAIL",
        "algebras": algebra_reports,
    }
    if args.format == "json":
        print(json.dumps(document, indent=2))
    else:
        for rep in algebra_reports:
            params = ",".join(f"{k}={v}" for k, v in rep["params"].items())
            print(f"verify {rep['algebra']}({params}): "
                  f"{rep['orbit_records']} datum(s)")
            for chk in rep["checks"]:
                line = (f"  {chk['name']} {chk['status']} "
                        f"({chk['orbits']} orbit(s))")
                if chk["failures"]:
                    line += f" [{chk['failures']} failed"
                    if chk["detail"]:
                        line += f": {chk['detail']}"
                    line += "]"
                print(line)
        print(f"verify: {document['result']}")
    return 0 if all_ok else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "describe":
            return _cmd_describe(args)
        return _cmd_verify(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
