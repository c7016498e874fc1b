"""Command line interface.

Exit status contract: 0 means the predicate holds or the construction
succeeded, 1 means the predicate is false or the request was refused
(with witnesses in the report), 2 means a usage or resource error.
Every command supports --json, which emits a stable schema
{command, inputs, result, witnesses}.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .braids import (
    DEFAULT_LETTER_BUDGET,
    BraidWord,
    BudgetExceededError,
    Perm,
    braids_equal,
    is_pure,
    perm_of,
)
from .cohen import (
    Braidlike,
    NotCohenError,
    NotUnaryError,
    StrandPartition,
    all_faces,
    common_face,
    is_brunnian,
    is_generalized_cohen,
    is_trivial,
    is_unary,
    unary_factor,
)
from .combing import (
    DEFAULT_COMPONENT_BUDGET,
    PureAWord,
    aword_equal,
    coface_on_aword,
    comb,
    face_on_aword,
)
from .expr import (
    NotAWordError,
    ParseError,
    format_aword,
    format_braid,
    parse,
    to_aword,
    to_braid,
    uses_only_bands,
)
from .faces import delete_strand, insert_strand
from .finite_models import (
    build_p2_rp2,
    build_p3_s2,
    derive_rp2_face_assignments,
    enumerate_brunnian,
    enumerate_cohen,
    h_element_check,
)
from .lifting import (
    cohen_lift,
    full_lift,
    hopf_decompose,
    james_hopf,
    solve_cohen_system,
    tau_spread,
)

__all__ = ["main", "run"]


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="braidcalc",
        description="Braid word calculus: faces, Cohen and Brunnian predicates, "
        "combing, liftings, and the face-system solver.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, *, n: bool = True, exprs: int = 1,
            extra=None) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        if extra:
            extra(sp)
        if n:
            sp.add_argument("-n", "--strands", type=int, required=True,
                            help="strand count for parsing the expression")
        if exprs == 1:
            sp.add_argument("expr", metavar="EXPR")
        else:
            for k in range(1, exprs + 1):
                sp.add_argument(f"expr{k}", metavar="EXPR")
        sp.add_argument("--json", action="store_true", help="machine readable output")
        sp.add_argument("--verify", action="store_true",
                        help="enable inline oracle assertions where supported")
        sp.add_argument("--budget", type=int, default=None,
                        help="resource cap in letters for oracle and combing work")
        return sp

    add("eq", "are two braid expressions equal", exprs=2)
    add("perm", "underlying permutation of a braid")
    add("pure", "is the braid pure")
    add("del", "delete a strand", extra=lambda sp: sp.add_argument("index", type=int))
    add("ins", "insert a trivial strand", extra=lambda sp: sp.add_argument("index", type=int))
    add("cohen", "do all faces agree")
    add("brunnian", "are all faces trivial")
    add("gcohen", "do faces agree within each block",
        extra=lambda sp: sp.add_argument("--blocks", required=True,
                                         help="strand blocks, e.g. '1,2;4,5'"))
    add("unary", "strand 1 crosses to n and its deletion is trivial")
    add("comb", "normal form components of a pure band word")
    add("lift", "one-strand Cohen lift of a Brunnian band word")
    tau = sub.add_parser("tau", help="spread a Brunnian band word to rank k")
    tau.add_argument("m", type=int)
    tau.add_argument("k", type=int)
    bigt = sub.add_parser("bigT", help="full Cohen lift from rank m to rank n")
    bigt.add_argument("m", type=int)
    bigt.add_argument("n", type=int)
    hopf = sub.add_parser("hopf", help="James-Hopf product of coface images")
    hopf.add_argument("k", type=int)
    hopf.add_argument("n", type=int)
    for sp in (tau, bigt, hopf):
        sp.add_argument("expr", metavar="EXPR")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--verify", action="store_true")
        sp.add_argument("--budget", type=int, default=None)
    add("decompose", "Brunnian layers of a pure Cohen braid")
    add("solve", "braid on n strands whose every face is the given braid "
        "(EXPR is parsed on n-1 strands)")
    rp2 = sub.add_parser("rp2", help="finite projective-plane model queries")
    rp2.add_argument("verb", choices=["enumerate", "verify"])
    rp2.add_argument("--json", action="store_true")
    rp2.add_argument("--verify", action="store_true")
    rp2.add_argument("--budget", type=int, default=None)
    return p


def _fmt(b: Braidlike) -> str:
    if isinstance(b, PureAWord):
        return format_aword(b)
    return format_braid(b)


def _read(text: str, n: int) -> Braidlike:
    """Parse to a band word when possible, else to a crossing word."""
    expr = parse(text, n)
    if uses_only_bands(expr):
        return to_aword(expr, n)
    return to_braid(expr, n)


def _as_braid(b: Braidlike) -> BraidWord:
    return b.to_braid() if isinstance(b, PureAWord) else b


def _equal(a: Braidlike, b: Braidlike, budget: int) -> bool:
    if isinstance(a, PureAWord) and isinstance(b, PureAWord):
        return aword_equal(a, b)
    return braids_equal(_as_braid(a), _as_braid(b), budget=budget)


def _parse_blocks(spec: str, n: int) -> StrandPartition:
    blocks = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        blocks.append([int(x) for x in chunk.split(",")])
    return StrandPartition.from_lists(n, blocks)


def run(argv: list[str]) -> tuple[int, dict[str, Any]]:
    """Execute a command line; returns (exit status, report payload)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else 2
        return (code if code != 0 else 0), {
            "command": argv[0] if argv else None,
            "inputs": {"argv": argv},
            "result": "usage",
            "witnesses": {},
        }
    payload: dict[str, Any] = {
        "command": args.command,
        "inputs": {},
        "result": None,
        "witnesses": {},
    }
    try:
        code = _dispatch(args, payload)
    except (NotCohenError, NotUnaryError) as e:
        payload["result"] = "refused"
        witnesses = {"reason": str(e)}
        if isinstance(e, NotCohenError):
            i, j = e.witness_indices
            fi, fj = e.witness_faces
            witnesses["violating_pair"] = [i, j]
            witnesses["faces"] = {f"d{i}": _fmt(fi), f"d{j}": _fmt(fj)}
        payload["witnesses"] = witnesses
        code = 1
    except BudgetExceededError as e:
        payload["result"] = "resource limit"
        payload["witnesses"] = {"reason": str(e)}
        code = 2
    except (ParseError, NotAWordError, ValueError) as e:
        payload["result"] = "error"
        payload["witnesses"] = {"reason": str(e)}
        code = 2
    return code, payload


def _dispatch(args: argparse.Namespace, payload: dict[str, Any]) -> int:
    cmd = args.command
    budget = args.budget or DEFAULT_LETTER_BUDGET
    comp_budget = args.budget or DEFAULT_COMPONENT_BUDGET
    inputs = payload["inputs"]

    if cmd == "rp2":
        inputs["verb"] = args.verb
        model = build_p2_rp2()
        if args.verb == "enumerate":
            payload["result"] = {
                "cohen": enumerate_cohen(model),
                "brunnian": enumerate_brunnian(model),
            }
            payload["witnesses"] = {
                "model": model.to_json_dict(),
                "sphere_3_strand": build_p3_s2().to_json_dict(),
                "cohen_generator_order": model.order("ru"),
            }
        else:
            survivors = derive_rp2_face_assignments()
            payload["result"] = {
                "surviving_assignments": [list(s) for s in survivors],
                "one_class_up_to_swap": sorted(survivors)
                == sorted([("r", "u"), ("u", "r")]),
            }
            payload["witnesses"] = {
                "h_element": h_element_check(model, "r", "u"),
                "axioms": "verified at construction",
            }
        return 0

    if cmd in ("tau", "bigT", "hopf"):
        lo = args.m if cmd in ("tau", "bigT") else args.k
        hi = args.k if cmd == "tau" else args.n
        inputs.update({"expr": args.expr, cmd_lo_name(cmd): lo, cmd_hi_name(cmd): hi})
        if cmd == "hopf":
            b = _read(args.expr, lo)
            result = james_hopf(lo, hi, b)
        else:
            expr = parse(args.expr, lo)
            if not uses_only_bands(expr):
                raise NotAWordError("this construction needs a word in the bands")
            w = to_aword(expr, lo)
            result = tau_spread(lo, hi, w) if cmd == "tau" else full_lift(lo, hi, w)
        payload["result"] = _fmt(result)
        if args.verify:
            payload["witnesses"]["faces_checked"] = _verify_faces_equal(result, budget)
        return 0

    n = args.strands
    inputs["n"] = n

    if cmd == "eq":
        inputs["expr"] = [args.expr1, args.expr2]
        a, b = _read(args.expr1, n), _read(args.expr2, n)
        both_bands = isinstance(a, PureAWord) and isinstance(b, PureAWord)
        equal = _equal(a, b, budget)
        payload["result"] = equal
        payload["witnesses"]["method"] = "combing" if both_bands else "artin-action"
        return 0 if equal else 1

    inputs["expr"] = args.expr
    if cmd == "perm":
        pm = perm_of(_as_braid(_read(args.expr, n)))
        payload["result"] = list(pm.images)
        if pm.is_identity():
            payload["witnesses"]["class"] = "identity"
        elif pm == Perm.order_reversal(n):
            payload["witnesses"]["class"] = "order-reversal"
        else:
            payload["witnesses"]["class"] = "other"
        return 0

    if cmd == "pure":
        value = is_pure(_as_braid(_read(args.expr, n)))
        payload["result"] = value
        return 0 if value else 1

    if cmd in ("del", "ins"):
        inputs["index"] = args.index
        b = _read(args.expr, n)
        if isinstance(b, PureAWord):
            out = face_on_aword(b, args.index) if cmd == "del" else coface_on_aword(b, args.index)
        else:
            out = delete_strand(b, args.index) if cmd == "del" else insert_strand(b, args.index)
        payload["result"] = _fmt(out)
        payload["witnesses"]["strands"] = out.strands
        return 0

    if cmd == "cohen":
        b = _read(args.expr, n)
        try:
            shared = common_face(b, budget=budget)
        except NotCohenError as e:
            payload["result"] = False
            i, j = e.witness_indices
            payload["witnesses"] = {
                "violating_pair": [i, j],
                "faces": {f"d{k}": _fmt(f) for k, f in enumerate(all_faces(b), start=1)},
            }
            return 1
        payload["result"] = True
        payload["witnesses"]["common_face"] = _fmt(shared)
        return 0

    if cmd == "brunnian":
        b = _read(args.expr, n)
        bad = [
            k
            for k, f in enumerate(all_faces(b), start=1)
            if not is_trivial(f, budget=budget)
        ]
        payload["result"] = not bad
        if bad:
            payload["witnesses"]["nontrivial_faces"] = bad
        return 0 if not bad else 1

    if cmd == "gcohen":
        inputs["blocks"] = args.blocks
        partition = _parse_blocks(args.blocks, n)
        value = is_generalized_cohen(_read(args.expr, n), partition, budget=budget)
        payload["result"] = value
        return 0 if value else 1

    if cmd == "unary":
        b = _as_braid(_read(args.expr, n))
        value = is_unary(b, budget=budget)
        payload["result"] = value
        if value:
            payload["witnesses"]["pure_factor"] = format_braid(unary_factor(b, budget=budget))
        return 0 if value else 1

    if cmd == "comb":
        expr = parse(args.expr, n)
        if not uses_only_bands(expr):
            raise NotAWordError("comb consumes band words only")
        w = to_aword(expr, n)
        form = comb(w, component_budget=comp_budget, verify=args.verify,
                    oracle_budget=budget)
        payload["result"] = {
            f"u{k}": format_aword(form.component(k)) for k in range(2, n + 1)
        }
        payload["witnesses"]["verified"] = bool(args.verify)
        return 0

    if cmd == "lift":
        expr = parse(args.expr, n)
        if not uses_only_bands(expr):
            raise NotAWordError("lift consumes band words only")
        w = to_aword(expr, n)
        if not is_brunnian(w):
            payload["result"] = "refused"
            payload["witnesses"]["reason"] = "input is not Brunnian"
            return 1
        out = cohen_lift(w, check=False)
        payload["result"] = _fmt(out)
        if args.verify:
            payload["witnesses"]["faces_checked"] = _verify_faces_equal(out, budget)
        return 0

    if cmd == "decompose":
        b = _read(args.expr, n)
        if isinstance(b, BraidWord) and not is_pure(b):
            payload["result"] = "refused"
            payload["witnesses"]["reason"] = "decomposition needs a pure braid"
            return 1
        deltas = hopf_decompose(b, budget=budget)
        payload["result"] = {f"delta{k}": _fmt(d) for k, d in enumerate(deltas, start=1)}
        return 0

    if cmd == "solve":
        b = _read(args.expr, n - 1)
        out = solve_cohen_system(b, n, budget=budget)
        payload["result"] = _fmt(out)
        if args.verify:
            faces_ok = all(_equal(f, b, budget) for f in all_faces(out))
            payload["witnesses"]["faces_equal_input"] = faces_ok
            if not faces_ok:
                raise AssertionError("solver output failed face verification")
        return 0

    raise ValueError(f"unknown command {cmd}")


def cmd_lo_name(cmd: str) -> str:
    return {"tau": "m", "bigT": "m", "hopf": "k"}[cmd]


def cmd_hi_name(cmd: str) -> str:
    return {"tau": "k", "bigT": "n", "hopf": "n"}[cmd]


def _verify_faces_equal(b: Braidlike, budget: int) -> bool:
    faces = all_faces(b)
    return all(_equal(faces[0], f, budget) for f in faces[1:])


def _render(payload: dict[str, Any]) -> str:
    lines = [f"{payload['command']}: {_plain(payload['result'])}"]
    for key, value in payload["witnesses"].items():
        lines.append(f"  {key}: {_plain(value)}")
    return "\n".join(lines)


def _plain(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_plain(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_plain(v) for v in value) + "]"
    return str(value)


def main() -> None:
    code, payload = run(sys.argv[1:])
    if "--json" in sys.argv[1:]:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(_render(payload))
    sys.exit(code)


if __name__ == "__main__":
    main()
