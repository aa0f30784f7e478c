"""Command-line interface.

Subcommands: classify, orbits, reduce, render, search, catalog, verify-paper.
Exit codes follow a fixed contract: 0 success (or all-Match), 1 verification
mismatch, 2 input error.  Output is deterministic for fixed inputs and
flags; ANSI color is used only for verdict highlighting and only when
stdout is a terminal and VOGANKM_COLOR is not set to 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog, files, hypersearch, render, vogan
from .exceptions import NotSymmetrizable, VoganKMError
from .gcm import GeneralizedCartanMatrix, classify, subdiagram, symmetrizer


def _color_enabled() -> bool:
    flag = os.environ.get("VOGANKM_COLOR")
    if flag == "0":
        return False
    if flag == "1":
        return True
    return sys.stdout.isatty()


def _verdict_text(verdict: str) -> str:
    if not _color_enabled():
        return verdict
    code = "32" if verdict == "Match" else "31"
    return f"\x1b[{code}m{verdict}\x1b[0m"


class _Input:
    """A resolved diagram input: matrix, labels, optional involution/painting."""

    def __init__(self, gcm, labels, involution=None, painted=(), entry=None):
        self.gcm = gcm
        self.labels = labels
        self.involution = involution
        self.painted = painted
        self.entry = entry

    def index_of(self, token):
        want = str(token)
        if want in self.labels:
            return self.labels.index(want)
        raise VoganKMError(
            f"no vertex labeled {token!r}; labels are {list(self.labels)}"
        )


def _resolve(path_or_name: str) -> _Input:
    if Path(path_or_name).exists():
        text = Path(path_or_name).read_text(encoding="utf-8")
        head = json.loads(text) if text.strip().startswith("{") else None
        if isinstance(head, dict) and "diagram" in head:
            doc = files.parse_vogan_file(text)
            if doc.is_named:
                base = _resolve_catalog(doc.diagram_ref)
            else:
                base = _Input(doc.diagram_ref.gcm, doc.diagram_ref.labels)
            base.involution = doc.involution
            base.painted = doc.painted
            return base
        dd = files.parse_diagram(text)
        return _Input(dd.gcm, dd.labels)
    return _resolve_catalog(path_or_name)


def _resolve_catalog(name: str) -> _Input:
    entry = catalog.lookup(name)
    return _Input(entry.gcm, entry.labels, entry=entry)


def _sigma_from_args(inp: _Input, arg: str | None) -> vogan.DiagramInvolution:
    perm = None
    if arg:
        perm = tuple(int(x) for x in arg.replace(",", " ").split())
    elif inp.involution:
        perm = inp.involution
    if perm is None:
        return vogan.identity_involution(inp.gcm)
    return vogan.involution(inp.gcm, perm)


def _painting_from_args(inp: _Input, arg: str | None) -> frozenset[int]:
    tokens: list = []
    if arg:
        tokens = [t for t in arg.replace(",", " ").split() if t]
    elif inp.painted:
        tokens = list(inp.painted)
    return frozenset(inp.index_of(t) for t in tokens)


def _fmt_painting(labels, painting) -> str:
    return "(" + ",".join(labels[v] for v in sorted(painting)) + ")"


# ---------------------------------------------------------------------------
# subcommands

def cmd_classify(args) -> int:
    inp = _resolve(args.path)
    g = inp.gcm
    print(f"name: {g.name or '(unnamed)'}")
    print(f"rank: {g.n}")
    try:
        t = classify(g)
    except NotSymmetrizable as exc:
        print("symmetrizable: no" + (f" (cycle edge {exc.edge})" if exc.edge else ""))
        print("type: not classified (no symmetric bilinear form)")
        return 0
    if t.tag is None:
        comps = ", ".join(f"{tag} on {verts}" for verts, tag in t.components)
        print("type: decomposable; components: " + comps)
    else:
        extra = ", hyperbolic" if t.hyperbolic else ""
        print(f"type: {t.tag}{extra}")
        if not t.hyperbolic and t.hyperbolic_reason:
            print(f"not hyperbolic: {t.hyperbolic_reason}")
    d = symmetrizer(g).d
    print("symmetrizable: yes")
    print("symmetrizer: " + " ".join(str(x) for x in d))
    print(f"indecomposable: {'yes' if t.indecomposable else 'no'}")
    if g.n > 1:
        print("vertex deletion summary:")
        for v in range(g.n):
            keep = [x for x in range(g.n) if x != v]
            sub = subdiagram(g, keep)
            st = classify(sub.gcm)
            parts = " + ".join(f"{tag} (rank {len(verts)})" for verts, tag in st.components)
            print(f"  delete {inp.labels[v]} -> {parts}")
    return 0


def _expectations_for(inp: _Input):
    if inp.entry is None or not inp.entry.claimed_partitions:
        return []
    return catalog.expectations(inp.entry.name)


def cmd_orbits(args) -> int:
    inp = _resolve(args.path)
    sigma = _sigma_from_args(inp, args.involution)
    claims = _expectations_for(inp) if args.compare_paper else []
    report = vogan.all_classes(
        inp.gcm, sigma,
        name=inp.gcm.name, expectations=claims, labels=inp.labels,
    )
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(f"diagram: {report.diagram_name} (rank {inp.gcm.n})")
        sig_text = "identity" if sigma.is_identity else " ".join(map(str, sigma.perm))
        print(f"sigma: {sig_text}")
        print("fixed vertices: " + ",".join(inp.labels[v] for v in report.fixed_vertices))
        print(f"painting space: {2 ** len(report.fixed_vertices)}")
        print(f"classes: {len(report.classes)}")
        for idx, c in enumerate(report.classes):
            reps = " ".join(report.format_painting(p) for p in c.minimal_reps)
            witness = (report.format_painting(c.bds_witness)
                       if c.bds_witness is not None else "none")
            print(f"class {idx}: size {c.size}, minimal {reps}, bds witness {witness}")
        print("borel-de-siebenthal: " + ("holds" if report.bds_holds else "fails"))
        for idx in report.bds_counterexamples:
            c = report.classes[idx]
            print(f"  counterexample class {idx}: minimal "
                  + " ".join(report.format_painting(p) for p in c.minimal_reps))
        if args.compare_paper:
            print("claim verdicts:")
            for v in report.verdicts:
                print(f"  [{_verdict_text(v.verdict)}] {v.claim.quote}")
                if v.verdict != "Match":
                    print(f"      {v.detail}")
    if args.compare_paper and any(v.verdict != "Match" for v in report.verdicts):
        return 1
    return 0


def cmd_reduce(args) -> int:
    inp = _resolve(args.path)
    sigma = _sigma_from_args(inp, args.involution)
    painting = _painting_from_args(inp, args.paint)
    vd = vogan.vogan_diagram(inp.gcm, sigma, painting)
    result = vogan.reduce_to_minimal(vd)
    print(f"diagram: {inp.gcm.name or '(unnamed)'}")
    print(f"painting: {_fmt_painting(inp.labels, painting)}")
    print(f"representative: {_fmt_painting(inp.labels, result.representative)}")
    steps = []
    for step in result.trace:
        if step[0] == "F":
            steps.append(f"F[{inp.labels[step[1]]}]")
        else:
            moved = " ".join(
                f"{inp.labels[i]}->{inp.labels[p]}"
                for i, p in enumerate(step[1]) if p != i
            )
            steps.append(f"aut({moved})")
    print(f"trace ({len(steps)} moves): " + (" ".join(steps) if steps else "(empty)"))
    print("replay check: ok")
    return 0


def cmd_render(args) -> int:
    inp = _resolve(args.path)
    sigma = _sigma_from_args(inp, args.involution)
    painting = _painting_from_args(inp, args.paint)
    if args.format == "ascii":
        sys.stdout.write(render.render_ascii(inp.gcm, sigma, painting, inp.labels))
    elif args.format == "dot":
        sys.stdout.write(render.render_dot(
            inp.gcm, sigma, painting, inp.labels,
            name=inp.gcm.name or "diagram"))
    else:
        print(f"unknown format {args.format!r} (expected ascii or dot)", file=sys.stderr)
        return 2
    return 0


def cmd_search(args) -> int:
    if (args.base is None) == (args.rank is None):
        print("search needs exactly one of --base or --rank", file=sys.stderr)
        return 2
    if args.base:
        base = _resolve(args.base)
        results = hypersearch.extend(base.gcm, args.max_label)
        mode = f"extend({base.gcm.name or 'base'}, max_label={args.max_label})"
    else:
        results = hypersearch.census(args.rank, args.max_label)
        mode = f"census(rank={args.rank}, max_label={args.max_label})"
    print(f"{mode}: {len(results)} hyperbolic diagrams")
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for idx, g in enumerate(results):
        edges = sum(1 for i in range(g.n) for j in range(i + 1, g.n) if g.a[i][j])
        widest = max(abs(g.a[i][j]) for i in range(g.n) for j in range(g.n) if i != j)
        row = f"  result-{idx:03d}  rank {g.n}  edges {edges}  max|entry| {widest}"
        if out_dir:
            path = out_dir / f"result-{idx:03d}.json"
            path.write_text(files.diagram_to_json(
                GeneralizedCartanMatrix(g.a, f"result-{idx:03d}")), encoding="utf-8")
            row += f"  -> {path}"
        print(row)
    return 0


def cmd_catalog(args) -> int:
    if args.action and args.action[0] == "export":
        if len(args.action) != 2:
            print("usage: vogankm catalog export <name>", file=sys.stderr)
            return 2
        entry = catalog.lookup(args.action[1])
        sys.stdout.write(files.diagram_to_json(entry.gcm, entry.labels))
        return 0
    if args.action:
        print(f"unknown catalog action {args.action[0]!r}", file=sys.stderr)
        return 2
    print(f"{'name':<22} {'rank':<5} {'provenance':<16} claims")
    for name in catalog.names():
        e = catalog.lookup(name)
        print(f"{name:<22} {e.gcm.n:<5} {e.provenance:<16} {len(e.claimed_partitions)}")
    return 0


def cmd_verify_paper(args) -> int:
    rows = []
    worst_certain = False
    for name in catalog.names():
        if args.only and name != args.only:
            continue
        entry = catalog.lookup(name)
        if not entry.claimed_partitions:
            continue
        report = vogan.all_classes(
            entry.gcm, name=name,
            expectations=catalog.expectations(name), labels=entry.labels,
        )
        for v in report.verdicts:
            rows.append((name, entry.provenance, v))
            if v.verdict != "Match" and entry.provenance == catalog.FIGURE_CERTAIN:
                worst_certain = True
    print(f"{'entry':<22} {'provenance':<16} {'verdict':<9} claim")
    for name, provenance, v in rows:
        print(f"{name:<22} {provenance:<16} {_verdict_text(v.verdict):<9} {v.claim.quote}")
        if v.verdict != "Match":
            level = "mismatch" if provenance == catalog.FIGURE_CERTAIN else "warning"
            print(f"{'':<22} {'':<16} {level}: {v.detail}")
    matches = sum(1 for _, _, v in rows if v.verdict == "Match")
    print(f"summary: {len(rows)} claims, {matches} match, {len(rows) - matches} mismatch")
    return 1 if worst_certain else 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vogankm",
        description="Generalized Cartan matrices, hyperbolicity, and Vogan diagram orbits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a diagram and summarize vertex deletions")
    p.add_argument("path", help="diagram file, Vogan file, or catalog name")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbits", help="compute all painting equivalence classes")
    p.add_argument("path")
    p.add_argument("--involution", help="permutation, e.g. '0,3,2,1'")
    p.add_argument("--compare-paper", action="store_true",
                   help="audit recorded claims; exit 1 on any mismatch")
    p.add_argument("--json", action="store_true", help="emit the full report as JSON")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("reduce", help="reduce a painting to a minimal representative")
    p.add_argument("path")
    p.add_argument("--paint", default="", help="painted vertex labels, e.g. '9,8,6'")
    p.add_argument("--involution")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("render", help="render a diagram as ascii art or DOT")
    p.add_argument("path")
    p.add_argument("--format", default="ascii")
    p.add_argument("--paint", default="")
    p.add_argument("--involution")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("search", help="hyperbolic extension search / bounded census")
    p.add_argument("--base", help="diagram to extend by one vertex")
    p.add_argument("--rank", type=int, help="census over all diagrams of this rank")
    p.add_argument("--max-label", type=int, default=4)
    p.add_argument("--out", help="directory for result diagram files")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="list catalog entries / export one")
    p.add_argument("action", nargs="*", help="'export <name>' to emit a diagram file")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-paper", help="audit all recorded claims against computation")
    p.add_argument("--only", help="restrict to one catalog entry")
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VoganKMError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
