"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails (the diff or
counterexample goes to stdout), 2 on usage errors and size caps.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra, eicat, quiver
from .errors import SizeLimitError
from .partialmaps import Family
from .symgroup import Partition, character_table

FAMILIES = [f.value for f in Family]
TRACE_ORACLE_MAX_N = 4


def _label_to_json(v):
    if isinstance(v.label, frozenset):
        return sorted(v.label)
    if isinstance(v.label, Partition):
        return list(v.label)
    return v.label


def to_document(q):
    return {
        "family": q.family,
        "n": q.n,
        "vertices": [{"id": v.id, "rank": v.rank, "label": _label_to_json(v)} for v in q.vertices],
        "arrows": [{"from": a.source, "to": a.target, "multiplicity": a.multiplicity} for a in q.arrows],
        "blocks": quiver.blocks(q),
    }


def export_json(q):
    return json.dumps(to_document(q), indent=2)


def _label_from_json(vid, label):
    kind = vid.split(":", 1)[0]
    if kind == "p":
        return Partition(label)
    if kind == "s":
        return frozenset(label)
    return int(label)


def from_document(doc):
    vertices = [quiver.Vertex(v["id"], v["rank"], _label_from_json(v["id"], v["label"])) for v in doc["vertices"]]
    arrows = [quiver.Arrow(a["from"], a["to"], a["multiplicity"]) for a in doc["arrows"]]
    return quiver.Quiver(doc["family"], doc["n"], vertices, arrows)


def parse_json(text):
    return from_document(json.loads(text))


def _dot_quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _display(v):
    if isinstance(v.label, frozenset):
        return eicat.subset_label(v.label)
    if isinstance(v.label, Partition):
        return str(v.label) if v.label else "∅"
    return str(v.label)


def export_dot(q):
    """Graphviz digraph, one same-rank group per rank, higher ranks drawn on top."""
    lines = [f"digraph {_dot_quote(f'{q.family}_{q.n}')} {{", "  rankdir=TB;", "  node [shape=plaintext];"]
    ranks = []
    for v in q.vertices:
        if v.rank not in ranks:
            ranks.append(v.rank)
    for r in sorted(ranks, reverse=True):
        members = [v for v in q.vertices if v.rank == r]
        lines.append(f"  subgraph {_dot_quote(f'rank_{r}')} {{")
        lines.append("    rank=same;")
        for v in members:
            lines.append(f"    {_dot_quote(v.id)} [label={_dot_quote(_display(v))}];")
        lines.append("  }")
    for a in q.arrows:
        for _ in range(a.multiplicity):
            lines.append(f"  {_dot_quote(a.source)} -> {_dot_quote(a.target)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_quiver(args, out):
    q = quiver.quiver_oracle(args.family, args.n) if args.oracle else quiver.quiver_rule(args.family, args.n)
    out.write(export_dot(q) if args.format == "dot" else export_json(q) + "\n")
    return 0


def _cmd_verify(args, out):
    if args.what == "iso":
        mode = "exhaustive" if args.exhaustive or args.n <= 3 else "sampled"
        report = algebra.verify_isomorphism(args.family, args.n, mode=mode, samples=args.samples, seed=args.seed)
        out.write(report.format() + "\n")
        return 0 if report.passed else 1
    lines = quiver.diff(quiver.quiver_rule(args.family, args.n), quiver.quiver_oracle(args.family, args.n))
    for line in lines:
        out.write(line + "\n")
    return 1 if lines else 0


def _cmd_radical(args, out):
    n, k = args.n, args.power
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= power <= n, got power={k}, n={n}")
    enumerated = algebra.rad_power_dim(n, k)
    formula = algebra.stirling_dim_formula(n, k)
    out.write(f"n={n} k={k}\n")
    out.write(f"dim Rad^{k} (corank enumeration): {enumerated}\n")
    out.write(f"dim Rad^{k} (Stirling formula):   {formula}\n")
    ok = enumerated == formula
    if args.oracle:
        if n > TRACE_ORACLE_MAX_N:
            raise SizeLimitError(f"trace-form oracle is capped at n={TRACE_ORACLE_MAX_N}")
        A = algebra.from_category(eicat.build_category(Family.PT, n))
        rad = algebra.radical_trace_oracle(A)
        powers = algebra.radical_powers(A, rad, max_power=k)
        dim = len(powers[k - 1]) if k - 1 < len(powers) else 0
        out.write(f"dim Rad^{k} (trace-form oracle):  {dim}\n")
        ok = ok and dim == enumerated
    out.write("PASS\n" if ok else "FAIL\n")
    return 0 if ok else 1


def _cmd_loewy(args, out):
    out.write(f"{algebra.loewy_length(args.n)}\n")
    return 0


def _cmd_blocks(args, out):
    comps = quiver.blocks(quiver.quiver_rule(args.family, args.n))
    out.write(f"{len(comps)} components\n")
    for comp in comps:
        out.write(" ".join(comp) + "\n")
    return 0


def _cmd_chartable(args, out):
    out.write(character_table(args.k).format() + "\n")
    return 0


def _cmd_irreducibles(args, out):
    fam = Family(args.family)
    C = eicat.build_category(fam, args.n)
    if fam in (Family.PT, Family.PO, Family.IS) and args.skeletal:
        C = eicat.skeletonize(C)
    ids = eicat.irreducibles_bruteforce(C) if args.oracle else eicat.irreducibles_closed_form(fam, C)
    for m in sorted(ids):
        mor = C.morphisms[m]
        out.write(f"{eicat.object_label(mor.dom)} -> {eicat.object_label(mor.cod)}: {mor.map}\n")
    out.write(f"{len(ids)} irreducible morphisms\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="monoidquiver", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quiver", help="print the quiver of a monoid algebra")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--oracle", action="store_true", help="use the character / brute-force route")
    p.set_defaults(func=_cmd_quiver)

    p = sub.add_parser("verify", help="cross-check closed forms against oracles")
    p.add_argument("what", choices=["iso", "quiver"])
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--seed", type=int, default=algebra.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=10_000)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("radical", help="dimension of a radical power of CPT_n")
    p.add_argument("n", type=int)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--oracle", action="store_true", help="also compute the trace-form radical (n <= 4)")
    p.set_defaults(func=_cmd_radical)

    p = sub.add_parser("loewy", help="Loewy length of CPT_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_loewy)

    p = sub.add_parser("blocks", help="connected components of the quiver")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("chartable", help="character table of S_k")
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_chartable)

    p = sub.add_parser("irreducibles", help="irreducible morphisms of the family's category")
    p.add_argument("family", choices=[f for f in FAMILIES if f != "f"])
    p.add_argument("n", type=int)
    p.add_argument("--oracle", action="store_true", help="exhaustive factorization search")
    p.add_argument("--skeletal", action="store_true", help="restrict to the skeleton (pt, is, po)")
    p.set_defaults(func=_cmd_irreducibles)
    return parser


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out)
    except (SizeLimitError, ValueError) as exc:
        sys.stderr.write(f"monoidquiver: error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
