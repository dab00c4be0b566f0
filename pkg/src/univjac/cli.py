"""Command-line front end: ``univjac <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 failed verification.
Rationals are printed as ``p/q``, never as decimals.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .arith import GD, invariants, normalize_degree, poincare_exists
from .balanced import (
    as_multidegree, balance_witness, enumerate_balanced, is_d_special, is_strictly_balanced,
)
from .compare import compare_report, pic_J0
from .dualgraph import DualGraph, classify, stabilize
from .errors import DomainError, UnivJacError, VerificationError
from .families import all_families, independence_matrix
from .picard import (
    PicElement, boundary_table, chi_d, eta_decomposition, membership_J, presentation,
    reduce_lambda, res_weight, restrict, theta_relation, topo_class, xi_element,
)
from .verify import parse_grid, run_all, thread_count

EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def fmt(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else fmt(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _load(text, what):
    """Inline JSON, ``-`` for standard input, or a file path."""
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith(("{", "[")):
        try:
            with open(text, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read {what} {text!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{what} is not valid JSON: {exc}") from None


def _graph(args):
    return DualGraph.from_dict(_load(args.graph, "graph"))


def _pic(args):
    return PicElement.from_dict(_load(args.cls, "class"))


def _gd(args):
    return GD(args.g, args.d)


def _kv(pairs):
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {fmt(v)}" for k, v in pairs)


def _elem_text(elem):
    return f"[{elem.space}] {elem}"


# -- commands: each returns (json_payload, text) -------------------------------


def cmd_invariants(args):
    gd = _gd(args)
    inv = invariants(gd).as_dict()
    d0, n = normalize_degree(gd)
    inv.update(normalized_d=d0, shift=n, poincare_bundle=poincare_exists(gd))
    return inv, _kv([(k, str(v).lower() if isinstance(v, bool) else v) for k, v in inv.items()])


def cmd_classify(args):
    s = classify(_graph(args)).value
    return {"stability": s}, s


def cmd_stabilize(args):
    out = stabilize(_graph(args))
    return out.to_dict(), out.to_json()


def _parse_multidegree(text):
    try:
        if text.strip().startswith(("[", "{")):
            return json.loads(text)
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise DomainError(f"cannot read multidegree {text!r}") from None


def cmd_balanced(args):
    graph = _graph(args)
    if args.check is not None:
        md = as_multidegree(graph, _parse_multidegree(args.check))
        wit = balance_witness(graph, md, args.mode)
        payload = {"multidegree": list(md), "properly_balanced": wit is None,
                   "witness": None if wit is None else list(wit)}
        if wit is None:
            payload["strictly_balanced"] = is_strictly_balanced(graph, md)
        text = "properly balanced" if wit is None else f"violated on subcurve {','.join(wit)}"
        if wit is None:
            text += "; strictly balanced" if payload["strictly_balanced"] else "; not strictly balanced"
        return payload, text
    if args.d is None:
        raise UsageError("balanced: either -d or --check is required")
    found = enumerate_balanced(graph, args.d, strict=args.strict, mode=args.mode)
    payload = {"vertices": list(graph.ids), "multidegrees": [list(md) for md in found]}
    lines = ["  ".join(graph.ids)] + ["  ".join(str(x) for x in md) for md in found]
    lines.append(f"{len(found)} multidegree(s)")
    return payload, "\n".join(lines)


def cmd_dspecial(args):
    res = is_d_special(_graph(args), args.d, fast=args.fast)
    return {"d_special": res}, "d-special" if res else "d-general"


def cmd_boundary(args):
    rows = boundary_table(_gd(args))
    payload = [{"label": r.label, "i": r.i, "case": r.case, "vine_type": list(r.vine_type),
                "multidegree": list(r.multidegree), "split": r.split} for r in rows]
    lines = [f"{r.label:6s} i={r.i} case {r.case}  type {r.vine_type}  multidegree {r.multidegree}"
             for r in rows]
    lines.append(f"{len(rows)} divisor(s)")
    return payload, "\n".join(lines)


def cmd_reduce(args):
    elem = reduce_lambda(_gd(args), args.n, args.m)
    if args.open:
        elem = restrict(elem)
    return elem.to_dict(), _elem_text(elem)


def cmd_xi(args):
    xi = xi_element(_gd(args))
    return xi.to_dict(), _elem_text(xi)


def cmd_res(args):
    w = res_weight(_gd(args), _pic(args))
    return {"res": w}, str(w)


def cmd_chi(args):
    gd = _gd(args)
    elem = _pic(args)
    if elem.space == "jac":
        ab = membership_J(gd, elem)
        if ab is None:
            raise DomainError("class has nonzero weight, so it does not lie in the rigidified group")
        elem = PicElement("j", {"L10": ab[0], "Xi": ab[1]})
    val = chi_d(gd, elem)
    return {"chi": val}, str(val)


def cmd_topo(args):
    gd = _gd(args)
    elem = _pic(args)
    t = topo_class(gd, elem)
    payload = {"lambda": t.lam, "zeta": t.zeta, "kappa_12": t.kappa, "integral": t.integral}
    pairs = [("lambda", t.lam), ("zeta", t.zeta), ("kappa_12", t.kappa)]
    eta = eta_decomposition(gd, elem)
    if eta is not None:
        payload["eta_decomposition"] = {"lambda": eta[0], "eta": eta[1]}
        pairs += [("eta: lambda", eta[0]), ("eta: eta", eta[1])]
    return payload, _kv(pairs)


def cmd_theta(args):
    rel = theta_relation(_gd(args))
    payload = {"k": rel.k, "e": rel.e, "exponent": rel.exponent,
               "difference": rel.difference.as_dict(), "verified": rel.verified}
    text = _kv([("k", rel.k), ("e", rel.e), ("exponent", rel.exponent),
                ("difference", ", ".join(fmt(c) for c in rel.difference.coeffs)),
                ("verified", str(rel.verified).lower())])
    if not rel.verified:
        raise VerificationError("pairing computation does not match the exponent")
    return payload, text


def cmd_presentation(args):
    p = presentation(_gd(args), args.space)
    payload = {"space": p.space, "basis": list(p.basis), "rank": p.rank, "report": p.report}
    text = _kv([("space", p.space), ("rank", p.rank), ("basis", " ".join(p.basis))]
               + [(k, str(v).lower() if isinstance(v, bool) else v) for k, v in p.report.items()])
    return payload, text


def cmd_families(args):
    gd = _gd(args)
    d0, _ = normalize_degree(gd)
    gd = GD(gd.g, d0)
    payload, lines, bad = [], [], []
    for name, rep in all_families(gd):
        if isinstance(rep, str):
            payload.append({"family": name, "applicable": False, "reason": rep})
            lines.append(f"{name}: not applicable ({rep})")
            continue
        item = rep.to_dict()
        item["applicable"] = True
        line = f"{rep.family}: multidegree {rep.multidegree}  row {rep.row_json()}"
        if args.verify:
            ok = rep.is_balanced()
            item["balanced"] = ok
            line += "  balanced" if ok else "  NOT balanced"
            if not ok:
                bad.append(rep.family)
        payload.append(item)
        lines.append(line)
    if bad:
        raise VerificationError(f"unbalanced families: {', '.join(bad)}")
    return payload, "\n".join(lines)


def cmd_independence(args):
    m = independence_matrix(_gd(args), threads=thread_count())
    cols = list(m.cols)
    width = max(len(r.family) for r in m.rows)
    lines = [" " * width + "  " + "  ".join(f"{c:>5s}" for c in cols)]
    for rep in m.rows:
        vals = rep.row_json()
        lines.append(rep.family.ljust(width) + "  " + "  ".join(f"{str(vals[c]):>5s}" for c in cols))
    lines.append(m.verdict)
    return m.to_dict(), "\n".join(lines)


def cmd_compare(args):
    rep = compare_report(_gd(args))
    pairs = [("rank Cl(barJ)", rep.rank_cl_barJ), ("rank Pic(barJ)", rep.rank_pic_barJ)]
    pairs += [(f"coker at i={c.i} ({c.case})", c.describe()) for c in rep.columns]
    pairs.append(("alpha_d consistent", str(rep.consistent).lower()))
    return rep.to_dict(), _kv(pairs)


def cmd_picj0(args):
    p = pic_J0(_gd(args))
    return p.to_dict(), p.describe()


def cmd_verify(args):
    grid = parse_grid(args.grid or [])
    results = run_all(grid, thread_count())
    payload = [{"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail[:10]}
               for r in results]
    text = "\n".join(r.line() for r in results)
    failed = [r.number for r in results if not r.passed]
    return payload, text, (EXIT_VERIFY if failed else 0)


# -- parser ---------------------------------------------------------------------


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    gd = _Parser(add_help=False)
    gd.add_argument("-g", type=int, required=True, help="genus (at least 3)")
    gd.add_argument("-d", type=int, required=True, help="degree")
    graph = _Parser(add_help=False)
    graph.add_argument("--graph", required=True, help="graph JSON: inline, a file path, or - for stdin")
    cls = _Parser(add_help=False)
    cls.add_argument("--class", dest="cls", required=True, help="class JSON: inline, a file path, or -")

    parser = _Parser(prog="univjac", description="Picard groups of universal Jacobians.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, parents, help_text):
        p = sub.add_parser(name, parents=[common] + parents, help=help_text)
        p.set_defaults(func=fn)
        return p

    add("invariants", cmd_invariants, [gd], "structural integers of (g, d)")
    add("classify", cmd_classify, [graph], "stability type of a dual graph")
    add("stabilize", cmd_stabilize, [graph], "contract exceptional components")
    p = add("balanced", cmd_balanced, [graph], "enumerate or test balanced multidegrees")
    p.add_argument("-d", type=int, help="total degree to enumerate")
    p.add_argument("--strict", action="store_true", help="only strictly balanced multidegrees")
    p.add_argument("--mode", choices=("connected", "connected-both-sides", "all"), default="connected")
    p.add_argument("--check", help="multidegree to test, as 1,0,2 or JSON")
    p = add("dspecial", cmd_dspecial, [graph], "is a stable graph d-special")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--fast", action="store_true", help="divisibility criterion for vines")
    add("boundary", cmd_boundary, [gd], "boundary divisors and generic multidegrees")
    p = add("reduce", cmd_reduce, [gd], "Lambda(n, m) in the free basis")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--open", action="store_true", help="restrict to the open part")
    add("xi", cmd_xi, [gd], "the generator Xi")
    add("res", cmd_res, [gd, cls], "weight of a class")
    add("chi", cmd_chi, [gd, cls], "theta multiple of a class")
    add("topo", cmd_topo, [gd, cls], "class over lambda, zeta, kappa")
    add("theta", cmd_theta, [gd], "Xi against the theta divisor")
    p = add("presentation", cmd_presentation, [gd], "free basis of a Picard group")
    p.add_argument("--space", choices=("jac", "j", "barjac", "barj"), required=True)
    p = add("families", cmd_families, [gd], "test families and their intersection rows")
    p.add_argument("--verify", action="store_true", help="check balancedness of each fibre")
    add("independence", cmd_independence, [gd], "boundary independence matrix")
    add("compare", cmd_compare, [gd], "comparison with the moduli scheme")
    add("picj0", cmd_picj0, [gd], "Picard group over curves without automorphisms")
    p = add("verify", cmd_verify, [], "run every consistency check over a grid")
    p.add_argument("--grid", nargs="*", help="e.g. g=3..8 d=0..max")
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out = args.func(args)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"univjac: verification failed: {exc}", file=stderr)
        return EXIT_VERIFY
    except (DomainError, UnivJacError) as exc:
        print(f"univjac: {exc}", file=stderr)
        return EXIT_DOMAIN
    except SystemExit as exc:  # --help and --version
        return exc.code or 0
    payload, text, code = out if len(out) == 3 else (*out, 0)
    if args.json:
        print(json.dumps(_jsonable(payload), sort_keys=True), file=stdout)
    else:
        print(text, file=stdout)
    return code


def main():
    sys.exit(run())
