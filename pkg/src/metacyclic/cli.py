"""Batch command line interface.

Subcommands: enumerate (classification table), mcinv (classify a
presentation), construct (presentation from a classifying tuple),
wedderburn (rational group algebra decomposition), isoq (isomorphism
query for groups and algebras side by side), verify (the property-check
suite).  Data goes to stdout, progress to stderr; output bytes are
independent of --jobs.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .analysis import (
    count_B,
    count_C,
    filter_a1a2,
    filter_components,
    formula_NE,
    formula_NG,
    max_degree_branch,
    recover_R,
    regime_U,
    section7_witness,
)
from .group import MetacyclicGroup
from .invariants import (
    MCInv,
    construct_group,
    mcinv,
    pi_sets,
    sylow_mcinv_consistency,
    t_subgroup,
    tuple_from_parts,
    valid_tuples,
    validate_tuple,
)
from .numth import part, units
from .wedderburn import (
    commutative_conductors,
    compare_algebras,
    decomposition,
    perlis_walker_conductors,
)

MAX_ORDER_LIMIT = 4096
ISO_ORACLE_CAP = 64
FORMATS = ("table", "json", "csv")
CHECK_NAMES = ("roundtrip", "dimension", "perlis-walker", "recoverR",
               "degpag", "countB", "countC", "section7", "iso-oracle")


@dataclass(frozen=True)
class RunConfig:
    max_order: int = 64
    format: str = "table"
    deterministic: bool = True
    jobs: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.max_order <= MAX_ORDER_LIMIT:
            raise ValueError(f"max_order must lie in 1..{MAX_ORDER_LIMIT}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")


# ---------------------------------------------------------------------------
# output


def _flat(value):
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value)
    return str(value)


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
        return
    if not rows:
        return
    header = list(rows[0].keys())
    if fmt == "csv":
        import csv as _csv

        writer = _csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_flat(row[k]) for k in header])
        return
    cells = [[_flat(row[k]) for k in header] for row in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) if cells else len(h)
              for i, h in enumerate(header)]
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for c in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(c, widths)).rstrip() + "\n")


# ---------------------------------------------------------------------------
# plain commands


def _tuple_row(inv: MCInv, G: MetacyclicGroup) -> dict:
    row = {"order": inv.order}
    row.update(inv.to_json())
    row["s_res"] = G.s
    row["t"] = G.t
    return row


def cmd_enumerate(cfg: RunConfig) -> list[dict]:
    """One row per isomorphism class, sorted by the classifying tuple."""
    return [_tuple_row(inv, construct_group(inv))
            for inv in valid_tuples(cfg.max_order)]


def cmd_mcinv(m: int, n: int, s: int, t: int) -> list[dict]:
    G = MetacyclicGroup(m, n, s, t)
    return [mcinv(G)[0].to_json()]


def cmd_construct(m: int, n: int, s: int, m_prime: int, delta_gen: int) -> list[dict]:
    inv = tuple_from_parts(m, n, s if s else m, m_prime, delta_gen)
    ok, reasons = validate_tuple(inv.m, inv.n, inv.s, inv.delta)
    if not ok:
        raise ValueError("tuple is not realizable: " + "; ".join(reasons))
    return [_tuple_row(inv, construct_group(inv))]


def cmd_wedderburn(m: int, n: int, s: int, t: int, fmt: str) -> list[dict]:
    G = MetacyclicGroup(m, n, s, t)
    rows = []
    for c in decomposition(G):
        data = c.to_json()
        if fmt != "json":
            data["center"] = repr(c.center)
        rows.append(data)
    return rows


def cmd_isoq(a: tuple[int, int, int, int], b: tuple[int, int, int, int]) -> list[dict]:
    G, H = MetacyclicGroup(*a), MetacyclicGroup(*b)
    groups = "isomorphic" if mcinv(G)[0] == mcinv(H)[0] else "non-isomorphic"
    return [
        {"comparison": "groups", "verdict": groups},
        {"comparison": "algebras", "verdict": compare_algebras(G, H)},
    ]


# ---------------------------------------------------------------------------
# verification checks

# Every check walks the classifying tuples up to the order bound and
# reports only abnormal findings; per-check totals go into summary rows.
# The brute-force isomorphism oracle is quadratic in the number of
# presentations and is capped separately.


def _finding(check: str, status: str, lhs, rhs, group: str) -> dict:
    return {"check": check, "status": status, "lhs": lhs, "rhs": rhs,
            "group": group}


def _group_label(inv: MCInv) -> str:
    return (f"({inv.m},{inv.n},{inv.s},<{inv.delta_gen}>_{inv.m_prime})")


def _check_roundtrip(inv: MCInv, G: MetacyclicGroup) -> tuple[int, list[dict]]:
    got = mcinv(G)[0]
    if got == inv:
        return 1, []
    return 1, [_finding("roundtrip", "fail", inv.to_json(), got.to_json(),
                        _group_label(inv))]


def _check_dimension(inv: MCInv, G: MetacyclicGroup) -> tuple[int, list[dict]]:
    total = sum(c.q_dimension for c in decomposition(G))
    if total == G.order:
        return 1, []
    return 1, [_finding("dimension", "fail", total, G.order, _group_label(inv))]


def _check_perlis_walker(inv: MCInv, G: MetacyclicGroup) -> tuple[int, list[dict]]:
    got = commutative_conductors(decomposition(G))
    want = perlis_walker_conductors(G.abelianization_invariants())
    if got == want:
        return 1, []
    return 1, [_finding("perlis-walker", "fail", list(got), list(want),
                        _group_label(inv))]


def _check_recover_r(inv: MCInv, G: MetacyclicGroup) -> tuple[int, list[dict]]:
    der = mcinv(G)[1]
    m_pp = part(inv.m, der.pi_prime)
    comps = decomposition(G)
    out = []
    got = recover_R(comps, m_pp)
    a_pp = G.generated([G.element_part(G.gen_a, der.pi_prime)])
    want = t_subgroup(G, a_pp)
    if got != want:
        out.append(_finding("recoverR", "fail", repr(got), repr(want),
                            _group_label(inv)))
    deg = max(c.total_degree
              for c in filter_components(comps, filter_a1a2(m_pp)))
    branch = max_degree_branch(G)
    if deg != branch:
        out.append(_finding("recoverR", "fail", deg, branch, _group_label(inv)))
    return 2, out


def _check_degpag(inv: MCInv, G: MetacyclicGroup) -> tuple[int, list[dict]]:
    checked = 0
    out = []
    for p in pi_sets(G)[0]:
        for entry in sylow_mcinv_consistency(G, p):
            checked += 1
            if entry["status"] == "fail":
                out.append(_finding(f"degpag[p={p}] {entry['check']}", "fail",
                                    entry["lhs"], entry["rhs"],
                                    _group_label(inv)))
    return checked, out


def _check_count_b(inv: MCInv, G: MetacyclicGroup) -> tuple[int, list[dict]]:
    want = formula_NE(G)
    if want is None:
        return 0, []
    got = count_B(G)
    if got == want:
        return 1, []
    return 1, [_finding("countB", "fail", got, want, _group_label(inv))]


def _check_count_c(inv: MCInv, G: MetacyclicGroup) -> tuple[int, list[dict]]:
    checked = 0
    out = []
    for p in mcinv(G)[1].pi:
        if not regime_U(G, p):
            continue
        checked += 1
        got = count_C(G, p)
        want = formula_NG(G, p)
        if got != want:
            out.append(_finding(f"countC[p={p}]", "fail", got, want,
                                _group_label(inv)))
        try:
            displayed = formula_NG(G, p, table="displayed")
        except ValueError:
            displayed = None
        if displayed != got:
            out.append(_finding(f"countC[p={p}] displayed-table branch", "n/a",
                                got, displayed, _group_label(inv)))
    return checked, out


def _check_section7(inv: MCInv, G: MetacyclicGroup) -> tuple[int, list[dict]]:
    checked = 0
    out = []
    for p in mcinv(G)[1].pi:
        report = section7_witness(G, p)
        if report and report[0]["status"] == "n/a":
            continue
        for entry in report:
            checked += 1
            if entry["status"] == "fail":
                out.append(_finding(f"section7[p={p}] {entry['check']}", "fail",
                                    entry["lhs"], entry["rhs"],
                                    _group_label(inv)))
    return checked, out


_GROUP_CHECKS = {
    "roundtrip": _check_roundtrip,
    "dimension": _check_dimension,
    "perlis-walker": _check_perlis_walker,
    "recoverR": _check_recover_r,
    "degpag": _check_degpag,
    "countB": _check_count_b,
    "countC": _check_count_c,
    "section7": _check_section7,
}


def _group_work(item: tuple[tuple[int, int, int, int, int], tuple[str, ...]]):
    parts, names = item
    inv = tuple_from_parts(*parts)
    G = construct_group(inv)
    counts = {}
    findings = []
    for name in names:
        n, out = _GROUP_CHECKS[name](inv, G)
        counts[name] = n
        findings.extend(out)
    return counts, findings


def consistent_presentations(max_order: int) -> list[MetacyclicGroup]:
    """Every (m, n, s, t) with m n <= max_order accepted by the group
    constructor, in lexicographic order."""
    out = []
    for m in range(1, max_order + 1):
        for n in range(1, max_order // m + 1):
            for t in units(m):
                if pow(t, n, m) != 1 % m:
                    continue
                for s in range(m):
                    if (s * (t - 1)) % m == 0:
                        out.append(MetacyclicGroup(m, n, s, t))
    return out


def check_iso_oracle(max_order: int) -> tuple[int, list[dict]]:
    """Brute-force isomorphism against tuple equality, pairwise over
    presentations of equal order."""
    by_order: dict[int, list[MetacyclicGroup]] = {}
    for G in consistent_presentations(min(max_order, ISO_ORACLE_CAP)):
        by_order.setdefault(G.order, []).append(G)
    checked = 0
    out = []
    for order in sorted(by_order):
        batch = by_order[order]
        for i, G in enumerate(batch):
            for H in batch[i + 1:]:
                checked += 1
                want = mcinv(G)[0] == mcinv(H)[0]
                got = G.brute_force_isomorphic(H)
                if got != want:
                    label = f"{G.key} vs {H.key}"
                    out.append(_finding("iso-oracle", "fail", got, want, label))
    return checked, out


def run_checks(names: tuple[str, ...], max_order: int,
               jobs: int = 1) -> tuple[list[dict], list[dict]]:
    """(abnormal findings, per-check summary rows), deterministic order."""
    group_names = tuple(n for n in names if n != "iso-oracle")
    counts = {name: 0 for name in names}
    fails = {name: 0 for name in names}
    findings: list[dict] = []
    if group_names:
        items = [((inv.m, inv.n, inv.s, inv.m_prime, inv.delta_gen), group_names)
                 for inv in valid_tuples(max_order)]
        if jobs > 1 and len(items) > 1:
            chunk = max(1, len(items) // (jobs * 8))
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_group_work, items, chunksize=chunk))
        else:
            results = [_group_work(item) for item in items]
        for cnts, finds in results:
            for name, c in cnts.items():
                counts[name] += c
            findings.extend(finds)
    if "iso-oracle" in names:
        checked, finds = check_iso_oracle(max_order)
        counts["iso-oracle"] = checked
        findings.extend(finds)
    for entry in findings:
        if entry["status"] == "fail":
            base = entry["check"].split("[")[0]
            fails[base] = fails.get(base, 0) + 1
    summaries = [
        _finding(name, "fail" if fails.get(name) else "pass",
                 counts[name], fails.get(name, 0), "summary")
        for name in names
    ]
    return findings, summaries


def cmd_verify(cfg: RunConfig, names: tuple[str, ...], out, err) -> int:
    findings, summaries = run_checks(names, cfg.max_order, cfg.jobs)
    _emit(findings + summaries, cfg.format, out)
    failed = [s for s in summaries if s["status"] == "fail"]
    for s in summaries:
        print(f"[verify] {s['check']}: {s['lhs']} checked, "
              f"{s['rhs']} failures", file=err)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metacyclic",
        description="Classify finite metacyclic groups and decompose their "
                    "rational group algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_bound=False):
        p.add_argument("--format", choices=FORMATS, default="table")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallel workers; output bytes do not depend on it")
        if with_bound:
            p.add_argument("--max-order", type=int, default=64,
                           help=f"largest group order, at most {MAX_ORDER_LIMIT}")

    p = sub.add_parser("enumerate",
                       help="one representative per isomorphism class")
    common(p, with_bound=True)

    p = sub.add_parser("mcinv", help="classifying tuple of a presentation")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    common(p)

    p = sub.add_parser("construct",
                       help="presentation realizing a classifying tuple")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("s", type=int, help="divisor of m; 0 means b^n = 1")
    p.add_argument("m_prime", type=int)
    p.add_argument("delta_gen", type=int)
    common(p)

    p = sub.add_parser("wedderburn",
                       help="simple components of the rational group algebra")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    common(p)

    p = sub.add_parser("isoq",
                       help="group and algebra comparison of two presentations")
    for name in ("m1", "n1", "s1", "t1", "m2", "n2", "s2", "t2"):
        p.add_argument(name, type=int)
    common(p)

    p = sub.add_parser("verify", help="run the property-check suite")
    p.add_argument("--checks", default=",".join(CHECK_NAMES),
                   help="comma list from " + ",".join(CHECK_NAMES))
    common(p, with_bound=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    out, err = sys.stdout, sys.stderr
    try:
        cfg = RunConfig(max_order=getattr(args, "max_order", 64),
                        format=args.format, jobs=args.jobs)
        if args.command == "enumerate":
            _emit(cmd_enumerate(cfg), cfg.format, out)
        elif args.command == "mcinv":
            _emit(cmd_mcinv(args.m, args.n, args.s, args.t), cfg.format, out)
        elif args.command == "construct":
            _emit(cmd_construct(args.m, args.n, args.s, args.m_prime,
                                args.delta_gen), cfg.format, out)
        elif args.command == "wedderburn":
            _emit(cmd_wedderburn(args.m, args.n, args.s, args.t, cfg.format),
                  cfg.format, out)
        elif args.command == "isoq":
            _emit(cmd_isoq((args.m1, args.n1, args.s1, args.t1),
                           (args.m2, args.n2, args.s2, args.t2)),
                  cfg.format, out)
        elif args.command == "verify":
            names = tuple(x.strip() for x in args.checks.split(",") if x.strip())
            unknown = [x for x in names if x not in CHECK_NAMES]
            if unknown:
                raise ValueError(f"unknown checks: {', '.join(unknown)}")
            return cmd_verify(cfg, names, out, err)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
