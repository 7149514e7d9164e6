"""Command-line entry point: ``hookcells <command> <input> [options]``.

Exit codes: 0 success or agreement, 1 usage or input error, 2 oracle and
formulas disagree, 3 oracle budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .components import decompose, elementary_partition_factors
from .counting import kappa_distribution, mu
from .errors import BudgetExhausted, HookCellsError, InvalidShape
from .hilbert import HilbertFunction, format_hilbert, kappa_T, parse_hilbert
from .hookcode import covers, hook_code
from .kappa import (
    _runs,
    beta_profile,
    is_special,
    kappa,
    kappa_by_components,
    kappa_by_factors,
    report,
    taus,
)
from .algebra_oracle import first_prime, is_prime, oracle_kappa
from .partitions import Partition, difference_one_hooks, enumerate_partitions, parse_partition

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_BUDGET = 0, 1, 2, 3


def fmt_partition(P: Partition) -> str:
    return "(" + ",".join(map(str, P.parts)) + ")"


def fmt_parts(parts) -> str:
    return "(" + ",".join(map(str, parts)) + ")"


def render(header, rows, fmt: str) -> str:
    """Render rows as tsv, markdown or json (a list of objects)."""
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2)
    cells = [[("" if v is None else str(v)) for v in r] for r in rows]
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(r) + " |" for r in cells]
        return "\n".join(lines)
    return "\n".join(["\t".join(header)] + ["\t".join(r) for r in cells])


def _sorted_by_rank(Ps):
    """Descending code size, then descending code."""
    coded = [(hook_code(P), P) for P in Ps]
    coded.sort(key=lambda qp: (qp[0].size, [b.parts for b in qp[0].blocks]), reverse=True)
    return coded


# --- table ------------------------------------------------------------------


def table_rows(T: HilbertFunction):
    coded = _sorted_by_rank(enumerate_partitions(T))
    degrees = [i for i in T.block_degrees() if T.delta(i + 1)]
    width = {i: max((len(_runs(Q.block(i).parts)) for Q, _ in coded), default=0) for i in degrees}
    header = ["P"]
    for i in degrees:
        header.append(f"h_{i}")
        header += [f"tau_{i}_{k}" for k in range(1, width[i] + 1)]
    header += ["kappa", "cell_dim", "special"]
    rows = []
    for Q, P in coded:
        row = [fmt_partition(P)]
        for i in degrees:
            parts = Q.block(i).parts
            tv = list(taus(_runs(parts)))
            row.append(fmt_parts(parts))
            row += tv + [None] * (width[i] - len(tv))
        row += [kappa(P), len(difference_one_hooks(P)), is_special(P)]
        rows.append(row)
    return header, rows


def run_table(T: HilbertFunction, fmt: str = "tsv") -> str:
    header, rows = table_rows(T)
    return render(header, rows, fmt)


# --- lattice ----------------------------------------------------------------


def lattice_graph(T: HilbertFunction):
    """Nodes ``(code, partition, kappa, special)`` and cover edges."""
    coded = _sorted_by_rank(enumerate_partitions(T))
    nodes = [(Q, P, kappa(P), is_special(P)) for Q, P in coded]
    present = {Q for Q, _ in coded}
    edges = [(Q, R) for Q, _ in coded for R in covers(Q) if R in present]
    return nodes, edges


def run_lattice(T: HilbertFunction, fmt: str = "dot") -> str:
    nodes, edges = lattice_graph(T)
    ids = {Q: f"n{k}" for k, (Q, *_rest) in enumerate(nodes)}
    if fmt == "json":
        return json.dumps(
            {
                "T": list(T.values),
                "nodes": [
                    {"id": ids[Q], "partition": list(P.parts), "code": Q.to_json(),
                     "kappa": k, "special": s}
                    for Q, P, k, s in nodes
                ],
                "edges": [[ids[a], ids[b]] for a, b in edges],
            },
            indent=2,
        )
    if fmt in ("tsv", "markdown"):
        label = {Q: fmt_partition(P) for Q, P, _, _ in nodes}
        return render(["from", "to"], [(label[a], label[b]) for a, b in edges], fmt)
    lines = [f'digraph "P({format_hilbert(T)})" {{', "  rankdir=TB;",
             '  node [shape=box, fontname="monospace"];']
    for Q, P, k, s in nodes:
        style = ', style=filled, fillcolor="lightpink"' if s else ""
        lines.append(f'  {ids[Q]} [label="{fmt_partition(P)} | {Q} | {k}"{style}];')
    for a, b in edges:
        lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines)


# --- other commands ---------------------------------------------------------


def run_enumerate(T: HilbertFunction, fmt: str = "tsv") -> str:
    rows = [
        (fmt_partition(P), str(Q), len(difference_one_hooks(P)), kappa(P))
        for Q, P in _sorted_by_rank(enumerate_partitions(T))
    ]
    return render(["P", "code", "cell_dim", "kappa"], rows, fmt)


def run_kappa(P: Partition, fmt: str = "tsv") -> str:
    rep = report(P)
    rep["kappa_T"] = kappa_T(P.T)
    rep["kappa_components"] = kappa_by_components(P)
    rep["kappa_factors"] = kappa_by_factors(P)
    if fmt == "json":
        return json.dumps(rep, indent=2)
    prof = beta_profile(P).as_dict()
    rows = [
        ("partition", fmt_partition(P)),
        ("T", format_hilbert(P.T)),
        ("code", str(hook_code(P))),
        ("kappa", rep["kappa"]),
        ("kappa_T", rep["kappa_T"]),
        ("kappa_components", rep["kappa_components"]),
        ("kappa_factors", rep["kappa_factors"]),
        ("profile", " ".join(f"{v}@{k}" for k, v in prof.items() if v)),
        ("special", rep["special"]),
    ]
    return render(["field", "value"], rows, fmt)


def run_decompose(P: Partition, fmt: str = "tsv") -> str:
    comps = decompose(P)
    factors = elementary_partition_factors(P)
    if fmt == "json":
        return json.dumps(
            {
                "partition": list(P.parts),
                "components": comps.to_json(),
                "elementary_factors": [list(F.parts) for F in factors],
            },
            indent=2,
        )
    rows = [
        (c.degree, format_hilbert(c.T), fmt_partition(c.P),
         " ".join(map(str, c.V1)), " ".join(map(str, c.V2)), kappa(c.P))
        for c in comps
    ]
    return render(["degree", "T_i", "P_i", "V_i1", "V_i2", "kappa_i"], rows, fmt)


def run_count(T: HilbertFunction, k: int | None = None, fmt: str = "tsv") -> str:
    if k is not None:
        return render(["k", "mu"], [(k, mu(T, k))], fmt)
    dist = kappa_distribution(T)
    if fmt == "json":
        return dist.to_json()
    if fmt == "markdown":
        return render(["k", "mu", "cumulative", "special"], list(dist.rows()), fmt)
    return dist.to_tsv()


def run_verify(P: Partition, prime: int | None = None, budget: int = 10**6):
    """Oracle report and exit code."""
    j = P.T.socle
    if prime is not None and (prime < 5 or prime <= j or not is_prime(prime)):
        raise InvalidShape(
            f"field prime must be a prime, at least 5, exceeding the socle degree {j}; got {prime}"
        )
    if budget < 1:
        raise InvalidShape("budget must be at least 1")
    try:
        res = oracle_kappa(P, prime or first_prime(P), budget)
    except BudgetExhausted as exc:
        return {"partition": list(P.parts), "reason": "BudgetExhausted", "detail": str(exc),
                "agree": False}, EXIT_BUDGET
    prof = {k: v for k, v in beta_profile(P).as_dict().items() if v}
    agree = res.min_total == kappa(P) and res.min_profile == prof
    out = {
        "partition": list(P.parts),
        "prime": res.prime,
        "primes": list(res.primes),
        "exhaustive": res.exhaustive,
        "tuples_tested": res.tuples_tested,
        "accepted": res.accepted,
        "min_mu_total": res.min_total,
        "min_mu_profile": {str(k): v for k, v in sorted(res.min_profile.items())},
        "formula_kappa": kappa(P),
        "formula_profile": {str(k): v for k, v in prof.items()},
        "agree": agree,
    }
    if not agree:
        out["reason"] = "Disagreement"
    return out, EXIT_OK if agree else EXIT_DISAGREE


# --- argument handling ------------------------------------------------------

_T_COMMANDS = {"enumerate", "count", "table", "lattice"}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hookcells",
        description="Hook codes, generator counts and cell checks for partitions.",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    fmts = ["tsv", "json", "markdown"]
    for name, what, helptext in [
        ("enumerate", "T", "list P(T) with hook codes"),
        ("kappa", "P", "generic generator count of a partition"),
        ("decompose", "P", "single-block components and elementary factors"),
        ("count", "T", "distribution of kappa over P(T)"),
        ("table", "T", "one row per partition: code, tau values, kappa"),
        ("lattice", "T", "Hasse diagram of the hook-code order"),
        ("verify", "P", "check the formulas against ideals over GF(p)"),
    ]:
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("input", help=f"{what} as comma-separated integers, e.g. "
                        + ("1,2,3,4,2,0" if what == "T" else "5,3^2,1"))
        if name == "lattice":
            sp.add_argument("--format", choices=["dot"] + fmts, default="dot")
        elif name != "verify":
            sp.add_argument("--format", choices=fmts, default="tsv")
        if name == "count":
            sp.add_argument("--k", type=int, default=None, help="single value of kappa")
        if name == "verify":
            sp.add_argument("--field", type=int, default=None, help="starting prime")
            sp.add_argument("--budget", type=int, default=10**6, help="tuple budget")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command in _T_COMMANDS:
            obj = parse_hilbert(args.input)
        else:
            obj = parse_partition(args.input)
        if args.command == "verify":
            out, code = run_verify(obj, args.field, args.budget)
            print(json.dumps(out, indent=2))
            return code
        text = {
            "enumerate": lambda: run_enumerate(obj, args.format),
            "kappa": lambda: run_kappa(obj, args.format),
            "decompose": lambda: run_decompose(obj, args.format),
            "count": lambda: run_count(obj, args.k, args.format),
            "table": lambda: run_table(obj, args.format),
            "lattice": lambda: run_lattice(obj, args.format),
        }[args.command]()
    except HookCellsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
