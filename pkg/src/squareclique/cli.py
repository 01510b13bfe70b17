"""``squareclique`` command-line entry point.

Every subcommand can write a JSON report (``--report``). Reports are
deterministic apart from the ``timing`` block. Exit codes: 0 ok,
1 a checked property failed, 2 bad input, 3 clique budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from math import floor
from pathlib import Path

from .clique import max_clique
from .constructions import build_tight, random_2degenerate
from .degeneracy import degeneracy, degeneracy_order, mad
from .errors import BudgetExhausted, GraphError
from .graph import Graph, parse_graph, parse_vertex_list, serialize_graph, serialize_vertex_list
from .hstar import (D0, build_hstar, build_jstar, claim_diagnostics, d0_formula,
                    enumerate_integer_solutions, pair_statistics, partition)
from .nice import extract, verify_nice
from .square import square

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_NODE_BUDGET = 10**8


@dataclass
class RunReport:
    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    timing: dict[str, float] = field(default_factory=dict)
    ok: bool = True

    @contextmanager
    def stage(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timing[name] = round(time.perf_counter() - t0, 6)

    def add_input(self, name: str, data: bytes) -> None:
        self.inputs[name] = hashlib.sha256(data).hexdigest()

    def to_json(self, with_timing: bool = True) -> dict:
        out = {"schema_version": SCHEMA_VERSION, "command": self.command, "ok": self.ok,
               "inputs": self.inputs, "outputs": self.outputs}
        if with_timing:
            out["timing"] = self.timing
        return out

    def dumps(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_json(with_timing), sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------- library-level commands

def cmd_verify_tight(d_list, node_budget: int | None = DEFAULT_NODE_BUDGET) -> RunReport:
    """Check max degree, degeneracy and square clique number of each G_D.

    Raises ParameterError for d < 8 and BudgetExhausted if a search does not close.
    """
    rep = RunReport("verify-tight")
    rows = []
    for d in d_list:
        with rep.stage(f"d={d}"):
            inst = build_tight(d)
            g = inst.graph
            res = max_clique(square(g), node_budget)
            want = floor(5 * d / 2)
            row = {"d": d, "n": len(g), "m": g.num_edges,
                   "max_degree": g.max_degree(), "degeneracy": degeneracy(g),
                   "omega_square": res.size, "expected_omega": want,
                   "nodes_explored": res.nodes_explored,
                   "witness_matches_construction": res.members == inst.clique_witness}
            row["pass"] = row["max_degree"] == d and row["degeneracy"] == 2 and res.size == want
        rows.append(row)
        rep.ok &= row["pass"]
    rep.outputs = {"results": rows}
    return rep


def cmd_bound_sweep(n: int, trials: int, seed: int,
                    node_budget: int | None = DEFAULT_NODE_BUDGET) -> RunReport:
    """Random 2-degenerate graphs against both upper bounds on the square.

    Graphs with max degree below 2 are skipped (the bounds concern D >= 2;
    C5 shows 3D-3 fails at D = 2 in general, though the generator only
    reaches D = 2 with paths and triangles).
    """
    if trials < 1:
        raise GraphError("trials must be at least 1")
    rep = RunReport("bound-sweep")
    rows, skipped, budget_skips = [], [], []
    max_ratio = None
    for t in range(trials):
        g = random_2degenerate(n, 2, seed + t)
        dmax = g.max_degree()
        if dmax < 2:
            skipped.append({"trial": t, "reason": f"max degree {dmax} < 2"})
            continue
        sq = square(g)
        try:
            omega = max_clique(sq, node_budget).size
        except BudgetExhausted:
            budget_skips.append(t)
            print(f"warning: trial {t} exhausted the clique budget, skipped", file=sys.stderr)
            continue
        bound = min(3 * dmax - 3, floor(5 * dmax / 2) + 72)
        sq_degen = degeneracy(sq)
        row = {"trial": t, "seed": seed + t, "max_degree": dmax, "omega_square": omega,
               "omega_bound": bound, "square_degeneracy": sq_degen,
               "degeneracy_bound": 3 * dmax - 4,
               "pass": omega <= bound and sq_degen <= 3 * dmax - 4}
        rows.append(row)
        rep.ok &= row["pass"]
        ratio = omega / dmax
        max_ratio = ratio if max_ratio is None else max(max_ratio, ratio)
    rep.outputs = {"n": n, "trials": trials, "seed": seed, "results": rows, "skipped": skipped,
                   "budget_exhausted": budget_skips,
                   "violations": sum(1 for r in rows if not r["pass"]),
                   "max_ratio": max_ratio}
    return rep


def run_pipeline(g: Graph, s, d: int, secondary_threshold: int = 1) -> dict:
    """extract -> verify_nice -> partition -> H* -> diagnostics -> pair table -> J*."""
    s = g.check_subset(s)
    r = extract(g, s, d, secondary_threshold)
    nice = verify_nice(r.g_star, r.s_star, r.sigma_star)
    p = partition(r.g_star, r.s_star, r.sigma_star)
    h = build_hstar(r.g_star, p)
    pairs = pair_statistics(r.graph, r.g_star, r.s, p, d)
    diag = claim_diagnostics(h, len(r.s_star), d, g_star=r.g_star, p=p, pairs=pairs)
    out = {
        "d": d,
        "s": sorted(s),
        "classification": r.classification.to_json(),
        "tokens": r.ledger.to_json(),
        "token_total": r.ledger.total(),
        "token_cap": 6 * len(s),
        "sigma": list(r.sigma),
        "sigma_star": list(r.sigma_star),
        "s_star": sorted(r.s_star),
        "outside_s_star_size": len(s - r.s_star),
        "g_star_edges": r.g_star.num_edges,
        "niceness": nice.to_json(),
        "partition": p.to_json(),
        "partition_sizes": {"s_star": len(p.s_star), "t_star": len(p.t_star), "r_star": len(p.r_star)},
        "hstar": h.to_json(),
        "diagnostics": diag.to_json(),
        "pair_statistics": pairs.to_json(),
        "jstar": build_jstar(r.graph, r.s, p).to_json() if p.t_star else None,
    }
    return out


def cmd_pipeline(g: Graph, s, d: int, secondary_threshold: int = 1) -> RunReport:
    rep = RunReport("pipeline")
    with rep.stage("pipeline"):
        rep.outputs = run_pipeline(g, s, d, secondary_threshold)
    rep.ok = rep.outputs["niceness"]["nice"]
    return rep


# ---------------------------------------------------------------- argument handling

def _read(path: str, rep: RunReport, name: str) -> str:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    rep.add_input(name, data)
    return data.decode()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _graph(args, rep: RunReport) -> Graph:
    return parse_graph(_read(args.input, rep, "graph"))


def _clique(args, rep: RunReport) -> list[int]:
    if not args.clique:
        raise GraphError("--clique FILE is required")
    return parse_vertex_list(_read(args.clique, rep, "clique"))


def _finish(args, rep: RunReport) -> int:
    if getattr(args, "report", None):
        Path(args.report).write_text(rep.dumps())
    return EXIT_OK if rep.ok else EXIT_FAIL


def _gen_tight(args) -> int:
    rep = RunReport("gen-tight")
    inst = build_tight(args.d)
    _write(args.output, serialize_graph(inst.graph))
    if args.output and args.output != "-":
        Path(args.output + ".json").write_text(json.dumps(inst.to_json(), sort_keys=True, indent=2) + "\n")
    if args.clique:
        Path(args.clique).write_text(serialize_vertex_list(inst.clique_witness))
    rep.outputs = {**inst.to_json(), "n": len(inst.graph), "m": inst.graph.num_edges}
    return _finish(args, rep)


def _gen_random(args) -> int:
    rep = RunReport("gen-random")
    g = random_2degenerate(args.n, args.attach, args.seed)
    _write(args.output, serialize_graph(g))
    rep.outputs = {"n": len(g), "m": g.num_edges, "seed": args.seed}
    return _finish(args, rep)


def _square(args) -> int:
    rep = RunReport("square")
    g = _graph(args, rep)
    sq = square(g)
    _write(args.output, serialize_graph(sq))
    rep.outputs = {"n": len(sq), "m": sq.num_edges}
    return _finish(args, rep)


def _clique_cmd(args) -> int:
    rep = RunReport("clique")
    g = _graph(args, rep)
    with rep.stage("search"):
        res = max_clique(g, args.node_budget)
    rep.outputs = res.to_json()
    _write(args.output, serialize_vertex_list(res.members))
    return _finish(args, rep)


def _degeneracy(args) -> int:
    rep = RunReport("degeneracy")
    g = _graph(args, rep)
    k = degeneracy(g)
    cert = degeneracy_order(g, k)
    rep.outputs = {"degeneracy": k, "order": list(cert.order)}
    _write(args.output, cert.order.to_text())
    return _finish(args, rep)


def _mad(args) -> int:
    rep = RunReport("mad")
    g = _graph(args, rep)
    with rep.stage("mad"):
        res = mad(g)
    rep.outputs = res.to_json()
    _write(args.output, str(res) + "\n")
    return _finish(args, rep)


def _extract_nice(args) -> int:
    rep = RunReport("extract-nice")
    g = _graph(args, rep)
    s = _clique(args, rep)
    r = extract(g, s, args.d, args.secondary_threshold)
    nice = verify_nice(r.g_star, r.s_star, r.sigma_star)
    rep.outputs = {"s_star": sorted(r.s_star), "outside_s_star_size": len(r.s - r.s_star),
                   "sigma_star": list(r.sigma_star),
                   "classification": r.classification.to_json(), "tokens": r.ledger.to_json(),
                   "token_total": r.ledger.total(), "niceness": nice.to_json()}
    rep.ok = nice.nice
    _write(args.output, serialize_graph(r.g_star))
    return _finish(args, rep)


def _hstar(args) -> int:
    rep = RunReport("hstar")
    g = _graph(args, rep)
    s = _clique(args, rep)
    full = run_pipeline(g, s, args.d, args.secondary_threshold)
    rep.outputs = {k: full[k] for k in ("partition_sizes", "hstar", "diagnostics", "pair_statistics", "jstar")}
    if args.output:
        _write(args.output, json.dumps(rep.outputs, sort_keys=True, indent=2) + "\n")
    return _finish(args, rep)


def _verify_tight(args) -> int:
    rep = cmd_verify_tight(args.d, args.node_budget)
    for row in rep.outputs["results"]:
        print(f"d={row['d']}: max_degree={row['max_degree']} degeneracy={row['degeneracy']} "
              f"omega={row['omega_square']} (expected {row['expected_omega']}) "
              f"{'PASS' if row['pass'] else 'FAIL'}")
    return _finish(args, rep)


def _bound_sweep(args) -> int:
    rep = cmd_bound_sweep(args.n, args.trials, args.seed, args.node_budget)
    o = rep.outputs
    print(f"checked {len(o['results'])} graphs, skipped {len(o['skipped'])}, "
          f"budget-exhausted {len(o['budget_exhausted'])}, violations {o['violations']}, "
          f"max omega/D {o['max_ratio']}")
    return _finish(args, rep)


def _pipeline(args) -> int:
    rep = RunReport("pipeline")
    g = _graph(args, rep)
    s = _clique(args, rep)
    with rep.stage("pipeline"):
        rep.outputs = run_pipeline(g, s, args.d, args.secondary_threshold)
    rep.ok = rep.outputs["niceness"]["nice"]
    if args.output:
        _write(args.output, json.dumps(rep.outputs, sort_keys=True, indent=2) + "\n")
    print(f"nice={rep.ok} |S*|={len(rep.outputs['s_star'])} |T*|={rep.outputs['partition_sizes']['t_star']}")
    return _finish(args, rep)


def _lp_solutions(args) -> int:
    rep = RunReport("lp-solutions")
    sols = sorted(enumerate_integer_solutions())
    rep.outputs = {"solutions": [list(t) for t in sols], "d0": D0, "d0_recomputed": d0_formula()}
    rep.ok = D0 == d0_formula()
    for t in sols:
        print(*t)
    return _finish(args, rep)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="squareclique", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, fn, *, inp=False, out=True, clique=False, d=False, budget=False, help=None):
        sp = sub.add_parser(name, help=help)
        if inp:
            sp.add_argument("-i", "--input", required=True, help="graph file ('-' for stdin)")
        if out:
            sp.add_argument("-o", "--output", help="output file (default stdout)")
        if clique:
            sp.add_argument("--clique", help="clique file, one vertex label per line")
        if d:
            sp.add_argument("--d", type=int, required=True, help="maximum degree parameter")
        if budget:
            sp.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
        sp.add_argument("--report", help="write a JSON run report here")
        sp.set_defaults(func=fn)
        return sp

    sp = cmd("gen-tight", _gen_tight, clique=True, d=True, help="write the tight instance for D")
    sp = cmd("gen-random", _gen_random, help="write a random 2-degenerate graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--attach", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    cmd("square", _square, inp=True, help="write the square of a graph")
    cmd("clique", _clique_cmd, inp=True, budget=True, help="exact maximum clique")
    cmd("degeneracy", _degeneracy, inp=True, help="degeneracy and a witnessing order")
    cmd("mad", _mad, inp=True, help="exact maximum average degree")
    for name, fn in (("extract-nice", _extract_nice), ("hstar", _hstar), ("pipeline", _pipeline)):
        sp = cmd(name, fn, inp=True, clique=True, d=True)
        sp.add_argument("--secondary-threshold", type=int, default=1,
                        help="minimum primary count that triggers relaying (default 1)")
    sp = sub.add_parser("verify-tight", help="check tight instances for a list of D")
    sp.add_argument("--d", type=int, nargs="+", required=True)
    sp.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.add_argument("--report")
    sp.set_defaults(func=_verify_tight)
    sp = sub.add_parser("bound-sweep", help="random graphs against the square clique bounds")
    sp.add_argument("--n", type=int, default=30)
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.add_argument("--report")
    sp.set_defaults(func=_bound_sweep)
    sp = sub.add_parser("lp-solutions", help="list the integer solutions of the final system")
    sp.add_argument("--report")
    sp.set_defaults(func=_lp_solutions)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhausted as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
