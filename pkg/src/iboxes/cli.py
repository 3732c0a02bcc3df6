"""Command line front door.

Subcommands: validate, seed, mutate, boxmove, tsystem, verify, export-dot,
serve.  Output is deterministic; verification failures exit 1, usage errors
exit 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from iboxes.chains import IBox, box_move, parse_chain
from iboxes.cluster import mutate_seed
from iboxes.qdata import QDatum, default_q_datum, validate_q_datum
from iboxes.quivers import export_dot, gls_quiver, hl_quiver, psi_quiver
from iboxes.roots import UnsupportedTypeError, folded_datum
from iboxes.sequences import (
    AdmissibleSequence,
    canonical_sequence,
    staircase_sequence,
    to_q_datum,
    validate as validate_sequence,
)
from iboxes.tsystems import kr_label, seed_from_chain, t_relation
from iboxes.verify import SUITES, run_all, run_suite


def resolve_sequence(tag: str, spec: str) -> AdmissibleSequence:
    if spec == "default":
        return staircase_sequence(tag)
    if spec == "bipartite":
        return canonical_sequence(tag)
    payload = json.loads(spec)
    payload.setdefault("type", tag)
    return AdmissibleSequence.from_json(payload)


def _parse_pair(text: str) -> tuple[int, int]:
    lo, hi = (int(v) for v in text.split(","))
    return lo, hi


def _add_seq_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--type", default="A3", help="affine type tag, e.g. A3, B2, D4(3)")
    parser.add_argument(
        "--seq",
        default="default",
        help="'default' (staircase heights), 'bipartite', or inline JSON "
        '{"period_i": [...], "period_p": [...]}',
    )


def cmd_validate(args) -> int:
    datum = folded_datum(args.type)
    if args.xi:
        xi = {i: v for i, v in zip(datum.nodes, (int(t) for t in args.xi.split(",")))}
        q = QDatum(datum, xi)
    else:
        q = default_q_datum(datum)
    result = validate_q_datum(q)
    print(f"heights {tuple(q.xi[i] for i in datum.nodes)}: {'valid' if result else 'INVALID'}")
    for line in result.violations:
        print("  " + line)
    ok = bool(result)
    if args.seq is not None:
        seq = resolve_sequence(args.type, args.seq)
        check = validate_sequence(seq)
        print(f"sequence {seq.to_json()['period_i']}: {'valid' if check else 'INVALID'}")
        for line in check.violations:
            print("  " + line)
        ok = ok and bool(check)
    return 0 if ok else 1


def _chain_for(args, seq):
    if args.chain:
        return parse_chain(seq, args.chain)
    from iboxes.chains import canonical_chain

    lo, hi = _parse_pair(args.range)
    return canonical_chain(seq, lo, hi)


def cmd_seed(args) -> int:
    seq = resolve_sequence(args.type, args.seq)
    bs = seed_from_chain(seq, _chain_for(args, seq))
    print(json.dumps(bs.to_json(), indent=2, sort_keys=True))
    return 0


def cmd_mutate(args) -> int:
    seq = resolve_sequence(args.type, args.seq)
    bs = seed_from_chain(seq, _chain_for(args, seq))
    k = args.at
    if not 1 <= k <= len(bs.chain):
        print(f"position {k} out of range", file=sys.stderr)
        return 2
    box = bs.chain.box(k)
    if box not in set(bs.seed.exchangeable):
        print(f"frozen vertex {box}", file=sys.stderr)
        return 1
    mutated = mutate_seed(bs.seed, box)
    names = bs.variable_names()
    print(f"x'{box} = {mutated.variables[box].format(names)}")
    return 0


def cmd_boxmove(args) -> int:
    seq = resolve_sequence(args.type, args.seq)
    chain = parse_chain(seq, args.chain)
    moved = box_move(chain, args.at)
    print(moved.code_string())
    return 0


def cmd_tsystem(args) -> int:
    seq = resolve_sequence(args.type, args.seq)
    a, b = _parse_pair(args.box)
    relation = t_relation(seq, IBox(a, b))
    print(relation)
    if args.labels:
        for box in relation.lhs + relation.rhs_main + relation.rhs_adjacent:
            print(f"  M{box} = {kr_label(seq, box)}")
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    if args.budget is not None:
        kwargs["budget"] = args.budget
    if args.window:
        kwargs["window"] = _parse_pair(args.window)
    if args.type:
        kwargs["types"] = tuple(args.type.split(","))
    if args.rng_seed is not None:
        kwargs["rng_seed"] = args.rng_seed
    try:
        results = run_all(**kwargs) if args.suite == "all" else [run_suite(args.suite, **kwargs)]
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    ok = True
    for result in results:
        print(result if args.verbose else f"[{'PASS' if result.ok else 'FAIL'}] {result.name} ({result.elapsed:.2f}s)")
        if not result.ok and not args.verbose:
            for line in result.lines:
                if line.startswith("FAIL"):
                    print("  " + line)
        ok = ok and result.ok
    return 0 if ok else 1


def cmd_export_dot(args) -> int:
    seq = resolve_sequence(args.type, args.seq)
    lo, hi = _parse_pair(args.window)
    if args.quiver == "gls":
        quiver = gls_quiver(seq, lo, hi)
        print(export_dot(quiver, label=lambda s: f"{s}:{seq.i(s)}"))
    elif args.quiver == "hl":
        verts = [(seq.i(k), seq.p(k)) for k in range(lo, hi + 1)]
        print(export_dot(hl_quiver(seq.datum, verts)))
    else:
        q, _ = to_q_datum(seq)
        print(export_dot(psi_quiver(q, lo, hi)))
    return 0


def cmd_serve(args) -> int:
    from iboxes.service import serve

    webroot = args.webroot
    if webroot is None:
        bundled = os.path.join(os.path.dirname(__file__), "..", "..", "frontend", "dist")
        webroot = bundled if os.path.isdir(bundled) else None
    server = serve(args.port, args.bind, args.state_file, webroot)
    print(f"listening on http://{args.bind}:{server.server_address[1]}/")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iboxes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a height function / sequence")
    p.add_argument("--type", default="A3", help="affine type tag, e.g. A3, B2, D4(3)")
    p.add_argument("--seq", help="also validate this sequence (see `seed --help`)")
    p.add_argument("--xi", help="comma separated heights in node order")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("seed", help="print the seed of a chain as JSON")
    _add_seq_options(p)
    p.add_argument("--range", help="window a,b (canonical chain)")
    p.add_argument("--chain", help='chain code "a:LRL..."')
    p.set_defaults(func=cmd_seed)

    p = sub.add_parser("mutate", help="mutate a chain seed at a position")
    _add_seq_options(p)
    p.add_argument("--range")
    p.add_argument("--chain")
    p.add_argument("--at", type=int, required=True)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("boxmove", help="apply a box move to a chain code")
    _add_seq_options(p)
    p.add_argument("--chain", required=True)
    p.add_argument("--at", type=int, required=True)
    p.set_defaults(func=cmd_boxmove)

    p = sub.add_parser("tsystem", help="print the exchange identity of an i-box")
    _add_seq_options(p)
    p.add_argument("--box", required=True, help="endpoints a,b")
    p.add_argument("--labels", action="store_true", help="also print KR labels")
    p.set_defaults(func=cmd_tsystem)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", default="all", help=f"one of {sorted(SUITES)} or 'all'")
    p.add_argument("--type", help="comma separated type tags for typed suites")
    p.add_argument("--window", help="window a,b for windowed suites")
    p.add_argument("--budget", type=int)
    p.add_argument("--rng-seed", type=int)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="export a quiver window as DOT")
    _add_seq_options(p)
    p.add_argument("--quiver", choices=["gls", "hl", "psi"], default="gls")
    p.add_argument("--window", required=True)
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("serve", help="run the JSON session service")
    p.add_argument("--port", type=int, default=int(os.environ.get("IBOXES_PORT", "8797")))
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--state-file", help="persist sessions to this JSON file")
    p.add_argument("--webroot", help="serve this directory at / (the explorer build)")
    p.set_defaults(func=cmd_serve)

    return parser


_PAIR_FLAGS = {"--box", "--window", "--range", "--xi", "--chain"}


def _merge_pair_flags(argv: list[str]) -> list[str]:
    # argparse rejects values like "-2,0" after a space; fold them into --flag=value
    out = []
    skip = False
    for k, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in _PAIR_FLAGS and k + 1 < len(argv):
            out.append(f"{token}={argv[k + 1]}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_merge_pair_flags(list(sys.argv[1:] if argv is None else argv)))
    try:
        return args.func(args)
    except UnsupportedTypeError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
