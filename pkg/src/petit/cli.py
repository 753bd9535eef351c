"""``petit`` command line.

Exit codes: 0 success, 1 a check failed, 2 malformed input, 3 a mathematical
precondition does not hold.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import acceptance
from .algebra import PetitAlgebra
from .chainring import fixed_set
from .codes import build_code
from .errors import CheckFailed, DomainError, ParseError, PetitError
from .ggr import ggr_check, norm_map
from .parsing import parse_context, parse_element, parse_poly, parse_ring, parse_sigma, parse_vector
from .pseudolinear import companion, left_mul_matrix, right_mul_matrix
from .skewpoly import format_poly, left_divmod, right_divmod

SCHEMA = 1
EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


def _coords(R, el) -> list[int]:
    return list(R.coords(R(el).code))


def _context(args):
    return parse_context(args.ring, args.sigma, args.delta, args.cap)


def _algebra(args, ctx=None):
    ctx = ctx or _context(args)
    return ctx, PetitAlgebra(parse_poly(ctx, args.f), side=args.side)


# -------------------------------------------------------------- commands
def cmd_ring(args) -> dict:
    R = parse_ring(args.ring, args.cap)
    out = {"ring": R.to_json(), "text": R.spec_text(), "size": R.size,
           "units": R.units_count, "is_field": R.is_field(),
           "residue_field": R.residue_field().to_json()}
    if args.sigma is not None or R.n > 1:
        s = parse_sigma(R, args.sigma)
        out["sigma"] = {"name": s.name, "order": s.order,
                        "image_of_x": _coords(R, s(R.gen)),
                        "fixed_ring_size": len(fixed_set(s))}
    return out


def cmd_divmod(args) -> dict:
    ctx = _context(args)
    g, f = parse_poly(ctx, args.g), parse_poly(ctx, args.f)
    q, r = (right_divmod if args.side == "right" else left_divmod)(g, f)
    return {"side": args.side, "q": q.to_json(), "r": r.to_json(),
            "q_text": format_poly(q), "r_text": format_poly(r)}


def cmd_analyze(args) -> dict:
    ctx, A = _algebra(args)
    R = A.ring
    mode = args.mode
    out = {"f": A.f.to_json(), "f_text": format_poly(A.f), "side": A.side, "m": A.m,
           "size": A.size}
    out["two_sided"] = A.two_sided()
    out["associative"] = A.is_associative(mode, samples=args.samples, seed=args.seed)
    out["powers_of_t_associative"] = A.powers_of_t_associative()
    nuc = {w: A.nucleus(w, mode if mode != "sampled" else "auto") for w in ("left", "middle", "right")}
    out["nuclei"] = {w: len(v) for w, v in nuc.items()}
    out["eigenring_size"] = len(A.eigenring()) if A.side == "right" else None
    comm_mode = mode if mode != "sampled" else "auto"
    out["commuter_size"] = len(A.commuter(comm_mode))
    out["center_size"] = len(A.center(comm_mode))
    out["S0"] = [_coords(R, a) for a in A.scalar_ring(comm_mode)]
    out["zero_divisor_count"] = len(A.zero_divisor_pairs())
    out["semifield"] = out["zero_divisor_count"] == 0
    inv, witness = A.t_left_invertible()
    out["t_left_invertible"] = inv
    out["t_left_inverse"] = witness.to_json() if witness is not None else None
    return out


def cmd_matrix(args) -> dict:
    ctx, A = _algebra(args)
    if args.which == "companion":
        M = companion(A.f)
    else:
        if args.h is None:
            raise ParseError("--h is required for gamma and lambda")
        h = A(parse_poly(ctx, args.h))
        M = (right_mul_matrix if args.which == "gamma" else left_mul_matrix)(A, h)
    return {"which": args.which, "rows": M.to_json(), "text": M.to_text()}


def cmd_code(args) -> dict:
    ctx, A = _algebra(args)
    C = build_code(A, parse_poly(ctx, args.g))
    if args.action == "encode":
        if args.msg is None:
            raise ParseError("--msg is required for encode")
        word = C.encode(parse_vector(A.ring, args.msg))
        return {"message": [_coords(A.ring, a) for a in parse_vector(A.ring, args.msg)],
                "codeword": word.to_json()}
    out = C.to_json()
    out["min_distance"] = C.min_distance() if len(C) > 1 else None
    if ctx.is_twisted:
        d = parse_element(A.ring, args.d) if args.d is not None else -A.f.coeffs[0]
        out["d"] = _coords(A.ring, d)
        out["constacyclic"] = C.constacyclic_check(d)
    else:
        out["constacyclic"] = None
    out["left_ideal"] = C.left_ideal_check()
    out["Lt_closed"] = C.Lt_closure_check()
    out["size"] = len(C)
    out["generator_text"] = C.gen_matrix.to_text()
    out["control_text"] = C.ctrl_matrix.to_text() if C.ctrl_matrix is not None else None
    return out


def cmd_ggr(args) -> dict:
    _, A = _algebra(args)
    return ggr_check(A, method=args.method).to_json()


def cmd_norm(args) -> dict:
    ctx, A = _algebra(args)
    h = A(parse_poly(ctx, args.h))
    return {"h": h.to_json(), "M": _coords(A.ring, norm_map(A, h))}


def cmd_selftest(args):
    results = acceptance.run_all(args.only)
    payload = {"criteria": [r.to_json() for r in results],
               "passed": all(r.passed for r in results)}
    return payload, acceptance.format_table(results)


COMMANDS = {
    "ring": cmd_ring, "divmod": cmd_divmod, "analyze": cmd_analyze, "matrix": cmd_matrix,
    "code": cmd_code, "ggr": cmd_ggr, "norm": cmd_norm, "selftest": cmd_selftest,
}


# ---------------------------------------------------------------- parser
def _global_options(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("json", "text"), default=d("json"))
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--cap", type=int, default=d(None), help="enumeration cap")
    p.add_argument("--jobs", type=int, default=d(1), help="accepted; scans run serially")
    p.add_argument("-v", "--verbose", action="store_true", default=d(False))


def _context_options(p: argparse.ArgumentParser, with_f: bool = True) -> None:
    p.add_argument("--ring", default="F4", help="fixture name, ring {...}, JSON or @file")
    p.add_argument("--sigma", default=None, help="id | frobenius:k | @table.json")
    p.add_argument("--delta", default=None, help="zero | inner:<elt> | @table.json")
    p.add_argument("--side", choices=("right", "left"), default="right")
    if with_f:
        p.add_argument("--f", required=True, help="polynomial, e.g. 't^2 - w'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="petit",
                                     description="Skew polynomials and Petit algebras over finite chain rings")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        _global_options(p, suppress=True)
        return p

    p = add("ring", "describe a ring and optional automorphism")
    p.add_argument("--ring", default="F4")
    p.add_argument("--sigma", default=None)

    p = add("divmod", "right or left division with remainder")
    _context_options(p)
    p.add_argument("--g", required=True)

    p = add("analyze", "structure report for S_f")
    _context_options(p)
    p.add_argument("--mode", choices=("auto", "exhaustive", "generators", "sampled"),
                   default="auto")
    p.add_argument("--samples", type=int, default=10**5)

    p = add("matrix", "companion, gamma(h) or lambda(h)")
    _context_options(p)
    p.add_argument("--h", default=None)
    p.add_argument("--which", choices=("gamma", "lambda", "companion"), default="gamma")

    p = add("code", "cyclic code from a right divisor g of f")
    p.add_argument("action", nargs="?", choices=("info", "encode"), default="info")
    _context_options(p)
    p.add_argument("--g", required=True)
    p.add_argument("--d", default=None, help="constacyclic constant (default -f(0))")
    p.add_argument("--msg", default=None, help="message coordinates for encode")

    p = add("ggr", "generalized Galois ring report")
    _context_options(p)
    p.add_argument("--method", choices=("scan", "linear"), default="scan")

    p = add("norm", "M(h) = det gamma(h)")
    _context_options(p)
    p.add_argument("--h", required=True)

    p = add("selftest", "run the acceptance suite")
    p.add_argument("--only", type=int, nargs="*", default=None, metavar="N")
    return parser


def dumps(payload: dict) -> str:
    """JSON with one top-level key per line and compact values."""
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in payload.items())
    return "{\n" + body + "\n}"


def _emit(args, payload, text: str | None) -> None:
    if args.format == "json":
        payload = {"schema": SCHEMA, "command": args.command, **payload}
        print(dumps(payload))
        return
    if text is not None:
        print(text)
        return
    for key, value in payload.items():
        if isinstance(value, str) and "\n" in value:
            print(f"{key}:\n{value}")
        else:
            print(f"{key}: {json.dumps(value)}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        result = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except DomainError as exc:
        print(f"domain error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PetitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.command == "selftest":
        payload, text = result
        _emit(args, payload, text)
        return EXIT_OK if payload["passed"] else EXIT_CHECK
    _emit(args, result, None)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
