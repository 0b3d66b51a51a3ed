"""
Command-line front end.

    kmunproj pfaffian  --input skew.json
    kmunproj det       --input m.json
    kmunproj wedge     --input q.json
    kmunproj koszul    --input w.json
    kmunproj unproject --kind tom --input original_tom.json [--show-work]
    kmunproj verify member|equal|chain --input job.json

Exit status: 0 success, 1 verification failure, 2 input error, 3 resource ceiling.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .complexes import ChainComplex, be_complex, koszul_complex, verify_chain_map
from .groebner import DEFAULT_MAX_PAIRS, Ideal, ResourceLimitExceeded, buchberger, ideal_equal, normal_form
from .linalg import PolyMatrix, ShapeError, determinant, pfaffian, pfaffians, wedge
from .ring import to_string
from .unproj import IdentityFailure, UnprojectionError, unproject_ci, unproject_jerry, unproject_tom

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class Failure(Exception):
    """Verification failed; the message carries the witness."""

    def __init__(self, text, payload=None):
        self.payload = payload
        super().__init__(text)


def _emit(args, text, payload):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _matrix_text(m):
    return "\n".join(" ".join(to_string(e) for e in m.row(i)) for i in range(m.rows))


def cmd_pfaffian(args, data):
    ctx = io.context(data, args.order)
    A = io.skew(ctx, io.require(data, "matrix"))
    if A.size % 2 == 0:
        p = pfaffian(A)
        _emit(args, to_string(p), {"pfaffian": to_string(p)})
    else:
        ps = pfaffians(A)
        _emit(args, "\n".join(map(to_string, ps)), {"pfaffians": io.dump_polys(ps)})


def cmd_det(args, data):
    ctx = io.context(data, args.order)
    m = io.matrix(ctx, io.require(data, "matrix"))
    try:
        d = determinant(m)
    except ShapeError as exc:
        raise io.InputError("matrix", str(exc)) from None
    _emit(args, to_string(d), {"det": to_string(d)})


def cmd_wedge(args, data):
    ctx = io.context(data, args.order)
    m = io.matrix(ctx, io.require(data, "matrix"))
    try:
        ws = wedge(m)
    except ShapeError as exc:
        raise io.InputError("matrix", str(exc)) from None
    _emit(args, "\n".join(map(to_string, ws)), {"wedge": io.dump_polys(ws)})


def _complex_payload(c):
    return {"ranks": c.ranks, "diffs": [d.to_json() for d in c.diffs]}


def _complex_text(c):
    out = []
    for i, d in enumerate(c.diffs, 1):
        out.append(f"# d{i}: {d.rows}x{d.cols}")
        out.append(_matrix_text(d))
    return "\n".join(out)


def cmd_koszul(args, data):
    ctx = io.context(data, args.order)
    if "w" in data:
        c = koszul_complex(io.poly_list(ctx, data["w"], "w"))
    elif "matrix" in data:
        c = be_complex(io.skew(ctx, data["matrix"]))
    else:
        raise io.InputError("", "need either 'w' (Koszul) or 'matrix' (Pfaffian complex)")
    _emit(args, _complex_text(c), _complex_payload(c))


def _work_items(work):
    for name, val in work.items():
        if name in ("g", "certificates"):
            continue
        if isinstance(val, PolyMatrix):
            yield name, val.to_json()["entries"]
        elif isinstance(val, tuple) and val and isinstance(val[0], tuple):
            yield name, [io.dump_polys(r) for r in val]
        elif isinstance(val, tuple):
            yield name, io.dump_polys(val)


def cmd_unproject(args, data):
    kind = args.kind or data.get("kind")
    if kind is None:
        raise io.InputError("kind", "give --kind or a 'kind' field")
    if args.kind and data.get("kind") not in (None, args.kind):
        raise io.InputError("kind", f"--kind {args.kind} disagrees with input kind {data['kind']!r}")
    ctx = io.context(data, args.order)
    d = io.unprojection_data(ctx, data, kind)
    tname = args.tname or data.get("tname", "T")
    run = {"tom": unproject_tom, "jerry": unproject_jerry, "ci": unproject_ci}[kind]
    try:
        res = run(d, tname)
    except UnprojectionError as exc:
        raise io.InputError("tname", str(exc)) from None
    payload = {"kind": kind, "vars": list(res.ctx.names), "ideal": io.dump_polys(res.ideal.gens),
               "g": io.dump_polys(res.g)}
    lines = [to_string(p) for p in res.ideal.gens]
    if args.show_work:
        work = dict(_work_items(res.work))
        payload["work"] = work
        for name, val in work.items():
            lines.append(f"# {name}")
            if val and isinstance(val[0], list):
                lines += [" ".join(r) for r in val]
            else:
                lines += val
        lines.append("# g")
        lines += io.dump_polys(res.g)
    _emit(args, "\n".join(lines), payload)


def cmd_verify(args, data):
    ctx = io.context(data, args.order)
    if args.what == "member":
        ideal = Ideal(ctx, io.poly_list(ctx, io.require(data, "ideal"), "ideal"))
        ps = io.poly_list(ctx, io.require(data, "polys"), "polys")
        G = buchberger(ideal, args.max_pairs)
        rows = []
        for i, p in enumerate(ps):
            nf = normal_form(p, G)
            rows.append({"index": i, "poly": to_string(p), "member": not nf, "normal_form": to_string(nf)})
        bad = [r for r in rows if not r["member"]]
        text = "\n".join(f"polys[{r['index']}]: {'member' if r['member'] else 'NOT a member, normal form ' + r['normal_form']}"
                         for r in rows)
        payload = {"ok": not bad, "results": rows}
        if bad:
            raise Failure(text, payload)
        _emit(args, text, payload)
    elif args.what == "equal":
        left = Ideal(ctx, io.poly_list(ctx, io.require(data, "left"), "left"))
        right = Ideal(ctx, io.poly_list(ctx, io.require(data, "right"), "right"))
        flip = None
        if args.allow_T_sign_flip:
            flip = args.tname or data.get("tname", "T")
            if flip not in ctx:
                raise io.InputError("tname", f"sign-flip variable {flip!r} is not declared")
        res = ideal_equal(left, right, flip=flip, max_pairs=args.max_pairs)
        payload = {"equal": res.equal, "flipped": res.flipped}
        if not res:
            payload.update(side=res.side, witness=to_string(res.witness), normal_form=to_string(res.witness_nf))
            raise Failure(str(res), payload)
        _emit(args, str(res), payload)
    elif args.what == "chain":
        src = ChainComplex([io.matrix(ctx, m, f"source[{i}]") for i, m in enumerate(io.require(data, "source"))])
        tgt = ChainComplex([io.matrix(ctx, m, f"target[{i}]") for i, m in enumerate(io.require(data, "target"))])
        vs = [io.matrix(ctx, m, f"verticals[{i}]") for i, m in enumerate(io.require(data, "verticals"))]
        rep = verify_chain_map(src, tgt, vs, augmented=data.get("augmented", True))
        if not rep:
            raise Failure(str(rep), rep.to_json())
        _emit(args, str(rep), rep.to_json())


COMMANDS = {"pfaffian": cmd_pfaffian, "det": cmd_det, "wedge": cmd_wedge, "koszul": cmd_koszul,
            "unproject": cmd_unproject, "verify": cmd_verify}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="path to a JSON job, or inline JSON")
    common.add_argument("--order", choices=("grevlex", "lex"), help="monomial order (overrides the input)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS,
                        help="S-pair budget for Groebner computations")
    common.add_argument("--tname", help="unprojection variable name (default T)")

    p = argparse.ArgumentParser(prog="kmunproj", description="Kustin-Miller unprojection toolkit")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("pfaffian", "det", "wedge", "koszul"):
        sub.add_parser(name, parents=[common])
    u = sub.add_parser("unproject", parents=[common])
    u.add_argument("--kind", choices=("tom", "jerry", "ci"))
    u.add_argument("--show-work", action="store_true", help="also print Q, H/h/K/L and g")
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("what", choices=("member", "equal", "chain"))
    v.add_argument("--allow-T-sign-flip", action="store_true",
                   help="accept equality after substituting T -> -T in the left ideal")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        data = io.load(args.input)
        COMMANDS[args.command](args, data)
    except Failure as exc:
        if args.json:
            print(json.dumps(exc.payload, indent=2, sort_keys=True))
        else:
            print(str(exc))
        return EXIT_FAIL
    except ResourceLimitExceeded as exc:
        print(f"error: resource ceiling: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except IdentityFailure as exc:
        print(f"error: identity check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (io.InputError, ValueError, KeyError) as exc:
        where = getattr(exc, "where", None)
        print(f"error: {exc}" if where is not None else f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
