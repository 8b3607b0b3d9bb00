"""Command-line front end: validate, carve, oracle, compare, bench, export.

Machine output is line-delimited key=value records (values never contain
spaces); ``parse_machine_records`` is the round-trip parser the test
suite uses.  A carve that ends in Failure is still a completed run and
exits 0: refutation evidence is a result, not an error.  Nonzero exits
are reserved for bad invocations and unreadable input.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import corpus
from .carve import (
    CarveResult,
    CarveStatus,
    EdgeRole,
    carve,
    carve_double,
    chamber_count,
    select_entrance,
)
from .embedding import (
    Edge,
    EmbeddingError,
    PlanarEmbedding,
    RotationFormatError,
    enumerate_3_edge_cuts,
    parse_embedding,
    serialize_embedding,
    trace_faces,
    validate,
)
from .oracle import find_hamiltonian_cycle, longest_cycle, verify_cycle

# Cut enumeration is quadratic in edges; past this size the CLI asks for
# an explicit entrance instead of guessing admissibility.
_CUT_ENUMERATION_EDGE_LIMIT = 400


@dataclass
class RunReport:
    """One graph through the full pipeline, for `compare`."""

    name: str
    n: int
    barnette: bool
    carve_outcomes: list[tuple[Edge, str, int]]  # entrance, status, cycle length
    oracle_verdict: str
    chamber: int | None
    agreement: bool
    seconds: dict[str, float]


def _fmt_edge(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def _fmt_seq(seq) -> str:
    return ",".join(str(v) for v in seq) or "none"


def emit_record(out, **fields) -> None:
    parts = []
    for k, v in fields.items():
        if isinstance(v, bool):
            v = str(v).lower()
        parts.append(f"{k}={v}")
    print(" ".join(parts), file=out)


def parse_machine_records(text: str) -> list[dict[str, str]]:
    """Inverse of emit_record: one dict per non-empty line."""
    records = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        rec: dict[str, str] = {}
        for tok in line.split(" "):
            if "=" not in tok:
                raise ValueError(f"malformed machine token {tok!r}")
            k, _, v = tok.partition("=")
            rec[k] = v
        records.append(rec)
    return records


def _load(path: str) -> PlanarEmbedding:
    text = Path(path).read_text(encoding="utf-8")
    return parse_embedding(text)


def _parse_edge(text: str) -> Edge:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(f"error: expected an edge as 'u,v', got {text!r}")
    return (u, v) if u < v else (v, u)


def _pick_entrance(emb: PlanarEmbedding, machine: bool, out) -> Edge:
    if emb.edge_count > _CUT_ENUMERATION_EDGE_LIMIT:
        choice = sorted(emb.outer_face.edges)[0]
        if not machine:
            print(f"# large graph: skipping cut analysis, entrance {choice}", file=out)
        return choice
    cuts = enumerate_3_edge_cuts(emb)
    choice = select_entrance(emb, cuts)
    if not machine and (choice.forced or choice.cut_member):
        flags = []
        if choice.cut_member:
            flags.append("entrance is itself a 3-cut edge")
        if choice.forced:
            flags.append(f"every outer edge excluded; least-excluded ({choice.excluded_by})")
        print("# " + "; ".join(flags), file=out)
    return choice.edge


# -- subcommands ------------------------------------------------------------

def _cmd_validate(args, out) -> int:
    emb = _load(args.file)
    rep = validate(emb)
    if args.machine:
        emit_record(
            out,
            record="validate",
            file=args.file,
            n=emb.vertex_count,
            m=emb.edge_count,
            cubic=rep.is_cubic,
            bipartite=rep.is_bipartite,
            planar=rep.is_planar_embedding,
            three_connected=rep.vertex_connectivity_at_least_3,
            barnette=rep.is_barnette,
        )
    else:
        print(f"{args.file}: n={emb.vertex_count} m={emb.edge_count}")
        print(f"  cubic                {rep.is_cubic}")
        print(f"  bipartite            {rep.is_bipartite}")
        print(f"  planar embedding     {rep.is_planar_embedding}")
        print(f"  3-connected          {rep.vertex_connectivity_at_least_3}")
        print(f"  barnette             {rep.is_barnette}")
    return 0


def _cmd_faces(args, out) -> int:
    emb = _load(args.file)
    faces = trace_faces(emb)
    for f in faces:
        marker = " outer" if f.id == emb.outer_face_id else ""
        if args.machine:
            emit_record(
                out,
                record="face",
                id=f.id,
                length=f.length,
                outer=f.id == emb.outer_face_id,
                vertices=_fmt_seq(f.vertices),
            )
        else:
            print(f"face {f.id}: length {f.length} vertices {list(f.vertices)}{marker}")
    return 0


def _emit_carve(args, out, emb: PlanarEmbedding, res: CarveResult) -> None:
    verified = False
    if res.status in (CarveStatus.HAMILTONIAN_CYCLE, CarveStatus.NEAR_CYCLE):
        cert = verify_cycle(emb, res.cycle)
        verified = cert.is_cycle and (
            res.status is CarveStatus.NEAR_CYCLE or cert.is_hamiltonian
        )
    status = res.status
    if status is CarveStatus.HAMILTONIAN_CYCLE and not verified:
        status = CarveStatus.FAILURE  # verifier gate: never report an unchecked cycle
    if args.machine:
        emit_record(
            out,
            record="carve",
            file=args.file,
            entrances=";".join(_fmt_edge(e) for e in res.entrances),
            status=status.value,
            cycle=_fmt_seq(res.cycle),
            cycle_length=len(res.cycle),
            h_o=len(res.role_class(EdgeRole.OUTER_HAMILTONIAN)),
            h_i=len(res.role_class(EdgeRole.INNER_HAMILTONIAN)),
            d_i=len(res.role_class(EdgeRole.INNER_DOOR)),
            verified=verified,
            reason=(res.failure_reason or "none").replace(" ", "_"),
        )
        if args.trace:
            for ev in res.trace:
                print("record=trace " + ev.record(), file=out)
    else:
        print(f"{args.file}: entrances {[e for e in res.entrances]}")
        print(f"  status    {status.value}")
        if res.cycle:
            print(f"  cycle     ({len(res.cycle)} vertices) {list(res.cycle)}")
            print(f"  verified  {verified}")
        if res.failure_reason:
            print(f"  reason    {res.failure_reason}")
        if args.trace:
            for ev in res.trace:
                print("  " + ev.record())


def _cmd_carve(args, out) -> int:
    emb = _load(args.file)
    if args.double:
        try:
            a, b = args.double.split(":")
        except ValueError:
            raise SystemExit("error: --double takes 'u,v:w,x'")
        res = carve_double(emb, (_parse_edge(a), _parse_edge(b)), left_walk=args.left_walk)
    else:
        entrance = _parse_edge(args.entrance) if args.entrance else _pick_entrance(
            emb, args.machine, out
        )
        res = carve(emb, entrance, left_walk=args.left_walk)
    _emit_carve(args, out, emb, res)
    return 0


def _cmd_oracle(args, out) -> int:
    emb = _load(args.file)
    if args.longest:
        r = longest_cycle(emb, budget=args.budget)
        length = r.certificate.length if r.certificate else 0
        if args.machine:
            emit_record(
                out,
                record="longest",
                file=args.file,
                length=length,
                cycle=_fmt_seq(r.certificate.vertices if r.certificate else ()),
                exhausted=r.exhausted,
                expansions=r.expansions,
            )
        else:
            print(f"{args.file}: longest cycle length {length}"
                  f"{' (budget exhausted, lower bound)' if r.exhausted else ''}")
            if r.certificate:
                print(f"  cycle {list(r.certificate.vertices)}")
        return 0
    r = find_hamiltonian_cycle(emb, budget=args.budget)
    if args.machine:
        emit_record(
            out,
            record="oracle",
            file=args.file,
            hamiltonian=r.certificate is not None,
            proved_absent=r.proved_absent,
            exhausted=r.exhausted,
            expansions=r.expansions,
            cycle=_fmt_seq(r.certificate.vertices if r.certificate else ()),
        )
    else:
        if r.certificate:
            print(f"{args.file}: Hamiltonian, cycle {list(r.certificate.vertices)}")
        elif r.proved_absent:
            print(f"{args.file}: no Hamiltonian cycle exists "
                  f"(search exhausted, {r.expansions} expansions)")
        else:
            print(f"{args.file}: undecided, budget exhausted after {r.expansions} expansions")
    return 0


def _compare_one(path: str, all_entrances: bool, budget: int) -> RunReport:
    emb = _load(path)
    rep = validate(emb)
    t0 = time.perf_counter()
    if emb.edge_count <= _CUT_ENUMERATION_EDGE_LIMIT:
        cuts = enumerate_3_edge_cuts(emb)
    else:
        cuts = []
    if all_entrances:
        entrances = sorted(emb.outer_face.edges)
    else:
        entrances = [select_entrance(emb, cuts).edge]
    t_carve0 = time.perf_counter()
    outcomes: list[tuple[Edge, str, int]] = []
    any_hc_cycle = None
    sound = True
    for e in entrances:
        res = carve(emb, e)
        status = res.status
        if status is CarveStatus.HAMILTONIAN_CYCLE:
            if verify_cycle(emb, res.cycle).is_hamiltonian:
                any_hc_cycle = res.cycle
            else:
                status = CarveStatus.FAILURE
                sound = False
        outcomes.append((e, status.value, len(res.cycle)))
    t_carve1 = time.perf_counter()
    oracle_res = find_hamiltonian_cycle(emb, budget=budget)
    t_oracle = time.perf_counter()
    if oracle_res.certificate is not None:
        verdict = "hamiltonian"
    elif oracle_res.proved_absent:
        verdict = "non-hamiltonian"
    else:
        verdict = "undecided"
    agreement = sound and not (
        verdict == "non-hamiltonian"
        and any(s == CarveStatus.HAMILTONIAN_CYCLE.value for _, s, _ in outcomes)
    )
    chamber = chamber_count(emb, any_hc_cycle) if any_hc_cycle is not None else None
    return RunReport(
        name=path,
        n=emb.vertex_count,
        barnette=rep.is_barnette,
        carve_outcomes=outcomes,
        oracle_verdict=verdict,
        chamber=chamber,
        agreement=agreement,
        seconds={
            "validate": t_carve0 - t0,
            "carve": t_carve1 - t_carve0,
            "oracle": t_oracle - t_carve1,
        },
    )


def _cmd_compare(args, out) -> int:
    paths = []
    if args.dir:
        paths = sorted(str(p) for p in Path(args.dir).glob("*.rot"))
    if args.file:
        paths.append(args.file)
    if not paths:
        raise SystemExit("error: compare needs a file or --dir with .rot files")
    for path in paths:
        r = _compare_one(path, args.all_entrances, args.budget)
        if args.machine:
            for e, status, clen in r.carve_outcomes:
                emit_record(
                    out,
                    record="compare",
                    file=r.name,
                    n=r.n,
                    barnette=r.barnette,
                    entrance=_fmt_edge(e),
                    carve=status,
                    cycle_length=clen,
                    oracle=r.oracle_verdict,
                    chambers=r.chamber if r.chamber is not None else "none",
                    agreement=r.agreement,
                )
        else:
            print(f"{r.name}: n={r.n} barnette={r.barnette} oracle={r.oracle_verdict} "
                  f"agreement={r.agreement} "
                  f"times v/c/o={r.seconds['validate']:.3f}/{r.seconds['carve']:.3f}/"
                  f"{r.seconds['oracle']:.3f}s")
            for e, status, clen in r.carve_outcomes:
                extra = f" len={clen}" if clen else ""
                print(f"    entrance {e}: {status}{extra}")
            if r.chamber is not None:
                print(f"    chambers of carve cycle: {r.chamber}")
    return 0


def _cmd_chambers(args, out) -> int:
    emb = _load(args.file)
    cycle = [int(x) for x in args.cycle.split(",")]
    try:
        count = chamber_count(emb, cycle)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    if args.machine:
        emit_record(out, record="chambers", file=args.file, count=count)
    else:
        print(f"{args.file}: chamber count {count}")
    return 0


def _cmd_corpus(args, out) -> int:
    if args.action == "list":
        for line in corpus.manifest_lines():
            print(line, file=out)
        return 0
    if args.action == "emit":
        if not args.name:
            raise SystemExit("error: corpus emit needs a graph name")
        try:
            g = corpus.build_named(args.name)
        except KeyError as exc:
            raise SystemExit(f"error: {exc}")
        sys.stdout.write(serialize_embedding(g.embedding))
        return 0
    raise SystemExit(f"error: unknown corpus action {args.action!r}")


def bench_scaling(sizes: list[int], repeats: int = 3) -> list[dict[str, float]]:
    """Carve wall time per prism size; the construction is not timed."""
    rows = []
    for k in sizes:
        emb = corpus.generate_prism(k).embedding
        trace_faces(emb)  # cache the face structure outside the first rep
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            res = carve(emb, (0, 1))
            t1 = time.perf_counter()
            best = min(best, t1 - t0)
        n = emb.vertex_count
        rows.append(
            {
                "k": k,
                "n": n,
                "status": res.status.value,
                "seconds": best,
                "per_vertex_us": best / n * 1e6,
            }
        )
    return rows


def _cmd_bench(args, out) -> int:
    if args.family != "prism":
        raise SystemExit(f"error: unknown bench family {args.family!r}")
    sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else []
    rows = bench_scaling(sizes)
    for row in rows:
        if args.machine:
            emit_record(
                out,
                record="bench",
                family="prism",
                k=row["k"],
                n=row["n"],
                status=row["status"],
                seconds=f"{row['seconds']:.6f}",
                per_vertex_us=f"{row['per_vertex_us']:.3f}",
            )
        else:
            print(f"k={row['k']:<7d} n={row['n']:<8d} {row['status']:<17s} "
                  f"{row['seconds']:.4f}s  {row['per_vertex_us']:.2f}us/vertex")
    if not args.machine and len(rows) >= 2:
        ratio = rows[-1]["per_vertex_us"] / rows[0]["per_vertex_us"]
        print(f"per-vertex ratio largest/smallest: {ratio:.2f}")
    return 0


_DOT_STYLE = {
    EdgeRole.OUTER_HAMILTONIAN: ' [style=bold penwidth=2.5]',
    EdgeRole.INNER_HAMILTONIAN: ' [style=bold penwidth=2.5]',
    EdgeRole.INNER_DOOR: ' [style=dashed]',
    EdgeRole.OUTER_DOOR: ' [style=dashed]',
    EdgeRole.ENTRANCE_DOOR: ' [color="black:invis:black"]',
    EdgeRole.UNASSIGNED: "",
}


def to_dot(emb: PlanarEmbedding, res: CarveResult | None = None) -> str:
    """DOT text; with a carve result, edges are styled by role and the
    face-opening order is recorded as comments."""
    lines = ["graph G {"]
    if res is not None:
        lines.append(f"  // carve status: {res.status.value}")
        for ev in res.trace:
            if ev.kind in ("open", "promote"):
                lines.append(f"  // step {ev.step}: {ev.kind} face {ev.face_id} "
                             f"through door {_fmt_edge(ev.door)}")
        for u, v in emb.edges:
            style = _DOT_STYLE[res.roles[(u, v)]]
            lines.append(f"  {u} -- {v}{style};")
    else:
        for u, v in emb.edges:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_dot(args, out) -> int:
    emb = _load(args.file)
    res = None
    if args.carve:
        entrance = _parse_edge(args.entrance) if args.entrance else _pick_entrance(
            emb, True, out
        )
        res = carve(emb, entrance)
    sys.stdout.write(to_dot(emb, res))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="barnette",
        description="Chamber-expansion Hamiltonian search on cubic planar graphs",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        sp.add_argument("--machine", action="store_true", help="key=value output")
        return sp

    sp = add("validate", _cmd_validate, help="class membership flags")
    sp.add_argument("file")

    sp = add("faces", _cmd_faces, help="trace and list facial cycles")
    sp.add_argument("file")

    sp = add("carve", _cmd_carve, help="run the chamber expansion")
    sp.add_argument("file")
    sp.add_argument("--entrance", help="outer edge 'u,v'")
    sp.add_argument("--double", help="two entrances 'u,v:w,x'")
    sp.add_argument("--left-walk", action="store_true", help="reverse door order")
    sp.add_argument("--trace", action="store_true", help="emit door-opening trace")

    sp = add("oracle", _cmd_oracle, help="exact backtracking search")
    sp.add_argument("file")
    sp.add_argument("--budget", type=int, default=10**9, help="node expansion limit")
    sp.add_argument("--longest", action="store_true", help="maximum cycle length")

    sp = add("compare", _cmd_compare, help="carve vs oracle agreement")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--dir", help="directory of .rot files")
    sp.add_argument("--all-entrances", action="store_true")
    sp.add_argument("--budget", type=int, default=10**8)

    sp = add("chambers", _cmd_chambers, help="chamber count of a given cycle")
    sp.add_argument("file")
    sp.add_argument("--cycle", required=True, help="v0,v1,...")

    sp = add("corpus", _cmd_corpus, help="list or emit built-in graphs")
    sp.add_argument("action", choices=["list", "emit"])
    sp.add_argument("name", nargs="?")

    sp = add("bench", _cmd_bench, help="linear-scaling measurement")
    sp.add_argument("--family", default="prism")
    sp.add_argument("--sizes", help="comma-separated k values")

    sp = add("dot", _cmd_dot, help="DOT export, optionally carve-annotated")
    sp.add_argument("file")
    sp.add_argument("--carve", action="store_true")
    sp.add_argument("--entrance", help="outer edge 'u,v'")

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except FileNotFoundError as exc:
        print(f"error: cannot read {exc.filename}", file=sys.stderr)
        return 2
    except (RotationFormatError, EmbeddingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
