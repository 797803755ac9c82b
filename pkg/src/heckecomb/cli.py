"""Command line front end.

Every subcommand prints one compact JSON document on stdout.  Exit codes:
0 on success, 1 on a domain error (stderr carries the error name), 2 on
malformed input.  Errors are reported on stderr as
``{"error": NAME, "message": TEXT}``.

Vectors are comma separated rationals (``3/2,1/2``); write ``--mu=-1,0``
when the first entry is negative.  Matrices come from ``--in FILE`` (or
stdin) as ``{"p": 2, "entries": [["1", "2"], ["2", "8"]]}``.
"""

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .dvr_linear import DvrMatrix, glg_check, matrix_type, verify_quotient_lemma
from .errors import HeckeCombError, LengthMismatch
from .isocrystal import FFBundle, LeviNewtonPoint
from .kottwitz import (
    dimension_NUb,
    enumerate_bmu,
    graded_slopes,
    hn_reducible,
    i_set,
    ic_shift,
    induction_numerology,
    membership,
)
from .modifications import classify_rank2, lubin_tate_target
from .rationals import format_rational, format_vector, parse_int_vector, parse_rational, parse_vector
from .root_data import LeviDatum


class MalformedInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


# -- encoders ----------------------------------------------------------------


def _newton(b):
    return format_vector(b.slopes)


def _levi_newton(bL):
    return [_newton(b) for b in bL.blocks]


def _bundle(E):
    return [{"d": d, "h": h, "mult": m} for d, h, m in E.summands]


# -- decoders ----------------------------------------------------------------


def _vector(text):
    try:
        return parse_vector(text)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def _ints(text):
    try:
        return parse_int_vector(text)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def _levi(text):
    parts = _ints(text)
    return LeviDatum(parts)


def _split(vec, L):
    return LeviNewtonPoint(L.split(vec))


def _load_json(args, stdin):
    try:
        if args.infile in (None, "-"):
            text = stdin if stdin is not None else sys.stdin.read()
        else:
            with open(args.infile, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, UnicodeDecodeError, ValueError, RecursionError) as exc:
        raise MalformedInput(f"cannot read JSON input: {exc}") from None


def _matrix(args, stdin):
    doc = _load_json(args, stdin)
    p = args.p
    if isinstance(doc, dict):
        rows = doc.get("entries")
        p = doc.get("p", p)
    else:
        rows = doc
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedInput("matrix must be an array of arrays")
    if isinstance(p, bool) or not isinstance(p, int):
        raise MalformedInput("field 'p' must be an integer")
    try:
        entries = tuple(tuple(parse_rational(x) for x in r) for r in rows)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None
    return DvrMatrix(entries, p)


def _bundle_arg(text):
    try:
        doc = json.loads(text)
    except (ValueError, RecursionError) as exc:
        raise MalformedInput(f"bad bundle JSON: {exc}") from None
    if not isinstance(doc, list) or not all(isinstance(s, dict) for s in doc):
        raise MalformedInput("bundle must be an array of {d, h, mult} objects")
    try:
        return FFBundle(tuple((s["d"], s["h"], s["mult"]) for s in doc))
    except KeyError as exc:
        raise MalformedInput(f"bundle summand lacks {exc}") from None


# -- commands ----------------------------------------------------------------


def cmd_bmu(a, stdin):
    bp, mu = _vector(a.bprime), _ints(a.mu)
    if a.n is not None and not (a.n == len(bp) == len(mu)):
        raise LengthMismatch(f"--n {a.n} disagrees with the vector lengths")
    return [_newton(b) for b in enumerate_bmu(bp, mu)]


def cmd_member(a, stdin):
    m = membership(_vector(a.b), _vector(a.bprime), _ints(a.mu))
    return {"acceptable": m.acceptable, "neutral": m.neutral}


def cmd_hnred(a, stdin):
    w = hn_reducible(
        _vector(a.b), _vector(a.bprime), _ints(a.mu), proper_levi=a.proper_levi, conjugate_mu=not a.strict_mu
    )
    if w is None:
        return None
    return {
        "levi": list(w.levi.parts),
        "b0": _levi_newton(w.b0),
        "b0p": _levi_newton(w.b0p),
        "mu_prime": list(w.mu_prime),
        "proper": w.proper,
        "contains_newton_centralizer": w.contains_newton_centralizer,
    }


def cmd_iset(a, stdin):
    L = _levi(a.levi)
    return [list(m) for m in i_set(_split(_vector(a.b0), L), _split(_vector(a.b0p), L), _ints(a.mu), L)]


def cmd_dim(a, stdin):
    nu, L = _vector(a.nu), _levi(a.levi)
    if a.numerology:
        r = induction_numerology(nu, L)
        return {"degree_shift": r.degree_shift, "tate_twist": r.tate_twist}
    return {"N": format_rational(dimension_NUb(nu, L))}


def cmd_icshift(a, stdin):
    r = ic_shift(_ints(a.mu))
    return {"twist": format_rational(r.twist), "shift": r.shift}


def cmd_slopes(a, stdin):
    L = _levi(a.levi)
    out = []
    for lvl, piece in graded_slopes(_split(_vector(a.nu), L), L).items():
        out.append(
            {"level": lvl, "slopes": format_vector(piece.slopes), "bundle": _bundle(piece.bundle), "degree": piece.degree}
        )
    return out


def cmd_modclass2(a, stdin):
    c = classify_rank2(_bundle_arg(a.bundle))
    return {"source_shape": c.source_shape, "m": c.m, "target": None if c.target is None else _bundle(c.target)}


def cmd_lt(a, stdin):
    r = lubin_tate_target(a.n, a.m)
    return {
        "source": _bundle(r.source),
        "target": _bundle(r.target),
        "source_degree": r.source_degree,
        "target_degree": r.target_degree,
        "degree_identity": r.degree_identity,
        "target_semistable": r.target_semistable,
        "target_slope": format_rational(r.target_slope),
    }


def cmd_mattype(a, stdin):
    return list(matrix_type(_matrix(a, stdin)))


def cmd_glg(a, stdin):
    v = glg_check(_matrix(a, stdin), _levi(a.levi), _ints(a.type))
    return {"hypothesis_holds": v.hypothesis_holds, "conclusion_holds": v.conclusion_holds}


def cmd_dvrq(a, stdin):
    r = verify_quotient_lemma(_ints(a.shape), a.j, a.p)
    return {
        "shape": list(r.shape),
        "j": r.j,
        "p": r.p,
        "bound": r.bound,
        "orbits": r.orbits,
        "quotients_checked": r.quotients_checked,
        "submodules_checked": r.submodules_checked,
        "max_quotient_length": r.max_quotient_length,
        "maximal_quotient_types": [list(t) for t in r.maximal_quotient_types],
        "max_submodule_length": r.max_submodule_length,
        "violations": list(r.violations),
        "passed": r.passed,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heckecomb", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("bmu", cmd_bmu, "list B(G, mu, [b'])")
    sp.add_argument("--n", type=int)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--bprime", required=True)

    sp = add("member", cmd_member, "acceptability and neutrality of b")
    sp.add_argument("--b", required=True)
    sp.add_argument("--bprime", required=True)
    sp.add_argument("--mu", required=True)

    sp = add("hnred", cmd_hnred, "HN-reducibility witness")
    sp.add_argument("--b", required=True)
    sp.add_argument("--bprime", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--proper-levi", action="store_true")
    sp.add_argument("--strict-mu", action="store_true", help="only try mu itself, not its conjugates")

    sp = add("iset", cmd_iset, "L-dominant conjugates of mu with blockwise membership")
    sp.add_argument("--b0", required=True, help="flat vector, split by --levi")
    sp.add_argument("--b0p", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--levi", required=True)

    sp = add("dim", cmd_dim, "the dimension <2 rho_U, nu>")
    sp.add_argument("--nu", required=True)
    sp.add_argument("--levi", required=True)
    sp.add_argument("--numerology", action="store_true", help="report degree shift and Tate twist")

    sp = add("icshift", cmd_icshift, "twist and shift of IC_mu")
    sp.add_argument("--mu", required=True)

    sp = add("slopes", cmd_slopes, "graded slope decomposition of Lie(U)")
    sp.add_argument("--nu", required=True, help="flat vector, split by --levi")
    sp.add_argument("--levi", required=True)

    sp = add("modclass2", cmd_modclass2, "rank 2 modification classification")
    sp.add_argument("--bundle", required=True, help='JSON, e.g. [{"d":0,"h":1,"mult":1},{"d":-1,"h":1,"mult":1}]')

    sp = add("lt", cmd_lt, "Lubin-Tate source and target bundles")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)

    for name, func, help in (("mattype", cmd_mattype, "type of a matrix"), ("glg", cmd_glg, "Levi projection check")):
        sp = add(name, func, help)
        sp.add_argument("--in", dest="infile", help="matrix JSON file ('-' or omitted: stdin)")
        sp.add_argument("--p", type=int, help="prime, when the JSON is a bare array")
        if name == "glg":
            sp.add_argument("--levi", required=True)
            sp.add_argument("--type", required=True)

    sp = add("dvrq", cmd_dvrq, "exhaustive quotient length check")
    sp.add_argument("--shape", required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    return parser


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


@dataclass(frozen=True)
class CliResult:
    exit_code: int
    stdout: str
    stderr: str


def _error(name, message) -> str:
    return dumps({"error": name, "message": message}) + "\n"


def run(argv, stdin: Optional[str] = None) -> CliResult:
    parser = build_parser()
    captured = io.StringIO()
    try:
        with contextlib.redirect_stdout(captured), contextlib.redirect_stderr(io.StringIO()):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:  # --help
        return CliResult(int(exc.code or 0), captured.getvalue(), "")
    except MalformedInput as exc:
        return CliResult(2, "", _error("MalformedInput", str(exc)))
    try:
        result = args.func(args, stdin)
    except MalformedInput as exc:
        return CliResult(2, "", _error("MalformedInput", str(exc)))
    except HeckeCombError as exc:
        return CliResult(1, "", _error(exc.name, str(exc)))
    return CliResult(0, dumps(result) + "\n", "")


def main(argv=None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.stdout)
    sys.stderr.write(res.stderr)
    return res.exit_code
