"""Command-line front end: ``lensjones <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad usage.
Every command accepts ``--json`` for machine-readable output.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from collections import Counter
from typing import Dict, List, Optional, Sequence

from .exactmath import rational_to_str
from .jones import (
    LITERAL,
    calibrate_conventions,
    corrected_lhs,
    corrected_rhs,
    determinant_from_jones,
    first_failure,
    frozen_convention,
    grading_set_from_jones,
    grading_set_skein,
    identity_holds,
    jones_bracket,
    seed_family,
    verify_skeinproof,
)
from .lensfloer import d_invariant, d_values, spinc_table
from .rho import IntegralityViolation, I_table, rho
from .twobridge import (
    O1,
    components,
    determinant,
    linking_number,
    normalize,
    orientation_classes,
    signature,
)
from . import orderability as od


class UsageError(ValueError):
    pass


def _emit(args, payload: Dict[str, object], text: str) -> None:
    print(json.dumps(payload, sort_keys=True) if args.json else text)


# ---------------------------------------------------------------------------
# knot and lens-space commands
# ---------------------------------------------------------------------------


def cmd_invariants(args) -> int:
    K = normalize(args.p, args.q)
    conv = frozen_convention()
    rows = []
    for o in orientation_classes(K):
        M = grading_set_skein(K, o)
        rows.append({
            "orientation": o,
            "signature": signature(K, o),
            "linking_number": linking_number(K, o) if components(K) == 2 else None,
            "jones": jones_bracket(K, o).to_json(),
            "grading_set": list(M.elements),
            "c": list(M.c),
        })
    payload = {"p": K.p, "q": K.q, "mirror": K.mirror, "components": components(K),
               "determinant": determinant(K), "convention": conv.to_json(), "orientations": rows}
    lines = [f"{K}: {components(K)} component(s), determinant {determinant(K)}"]
    for r in rows:
        lk = "" if r["linking_number"] is None else f", lk {r['linking_number']}"
        lines.append(f"  [{r['orientation']}] signature {r['signature']}{lk}")
        lines.append(f"    J = {jones_bracket(K, r['orientation'])}")
        lines.append(f"    M = {r['grading_set']}  (c = {r['c']})")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_jones(args) -> int:
    K = normalize(args.p, args.q)
    if args.orientation not in orientation_classes(K):
        raise UsageError(f"{K} has no orientation {args.orientation}")
    J = jones_bracket(K, args.orientation)
    _emit(args, {"p": K.p, "q": K.q, "mirror": K.mirror, "orientation": args.orientation,
                 "jones": J.to_json()}, repr(J))
    return 0


def cmd_dinv(args) -> int:
    if args.i is not None:
        d = d_invariant(args.p, args.q, args.i, strict=True)
        _emit(args, {"p": args.p, "q": args.q, "i": args.i, "d": rational_to_str(d)},
              rational_to_str(d))
        return 0
    table = spinc_table(args.p, args.q)
    _emit(args, table.to_json(), "\n".join(rational_to_str(x) for x in d_values(args.p, args.q)))
    return 0


def cmd_rho(args) -> int:
    val = rho(args.a, args.b, args.n)
    _emit(args, {"a": args.a, "b": args.b, "n": args.n, "rho": rational_to_str(val)},
          rational_to_str(val))
    return 0


def cmd_ivals(args) -> int:
    try:
        rows = I_table(args.p, args.q, args.sign)
    except IntegralityViolation as exc:
        print(f"integrality violated: {exc}", file=sys.stderr)
        return 1
    payload = {"p": args.p, "q": args.q, "sign": args.sign, "rows": [
        {"i": r.index, "d": rational_to_str(r.d), "n": r.n, "rho": rational_to_str(r.rho),
         "I": r.value, "spin": r.spin} for r in rows]}
    text = "\n".join(
        f"{r.index}\t{r.value}" + ("\tspin" if r.spin else "") for r in rows)
    _emit(args, payload, text)
    return 0


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


def verify_family(pmax: int) -> Dict[str, object]:
    """Run every identity check on all oriented 2-bridge links with ``p <= pmax``."""
    conv = frozen_convention()
    checks = ("identity", "grading_multiset", "spin_to_c", "dual_route", "determinant")
    failures: Dict[str, List[Dict[str, object]]] = {c: [] for c in checks}
    total = 0
    for K, o in seed_family(pmax):
        total += 1
        where = {"p": K.p, "q": K.q, "mirror": K.mirror, "orientation": o}
        if not identity_holds(K, conv, o):
            failures["identity"].append({**where, "lhs": corrected_lhs(K, o).to_json(),
                                         "rhs": corrected_rhs(K, conv, o).to_json()})
        rep = verify_skeinproof(K, conv, o)
        if not rep.multisets_equal:
            failures["grading_multiset"].append(rep.to_json())
        if not rep.spin_matches_c:
            failures["spin_to_c"].append(rep.to_json())
        J = jones_bracket(K, o)
        lk = linking_number(K, o) if components(K) == 2 else None
        skein = grading_set_skein(K, o)
        from_j = grading_set_from_jones(J, signature(K, o), lk)
        if Counter(skein.elements) != Counter(from_j.elements):
            failures["dual_route"].append({**where, "skein": list(skein.elements),
                                           "jones": list(from_j.elements)})
        if determinant_from_jones(J) != determinant(K):
            failures["determinant"].append(where)
    literal = first_failure(dataclasses.replace(conv, identity=LITERAL), pmax)
    return {
        "pmax": pmax,
        "convention": conv.to_json(),
        "links_checked": total,
        "checks": {c: {"passed": not failures[c], "failures": failures[c]} for c in checks},
        "all_pass": not any(failures.values()),
        "literal_identity": {
            "holds": literal is None,
            "smallest_counterexample": literal.to_json() if literal else None,
        },
    }


def cmd_verify(args) -> int:
    if args.pmax < 1:
        raise UsageError("--pmax must be at least 1")
    res = verify_family(args.pmax)
    lines = [f"verify p <= {args.pmax}: {res['links_checked']} oriented links, "
             f"convention {res['convention']}"]
    for name, c in res["checks"].items():
        status = "pass" if c["passed"] else f"FAIL ({len(c['failures'])})"
        lines.append(f"  {name:18s} {status}")
        if not c["passed"]:
            lines.append(f"    first failure: {json.dumps(c['failures'][0])}")
    lit = res["literal_identity"]
    if lit["holds"]:
        lines.append("  literal identity   holds")
    else:
        cx = lit["smallest_counterexample"]
        lines.append(f"  literal identity   refuted at K({cx['p']},{cx['q']}) mirror={cx['mirror']} "
                     f"{cx['orientation']} (informational; see `calibrate`)")
    lines.append("all checks pass" if res["all_pass"] else "verification FAILED")
    _emit(args, res, "\n".join(lines))
    return 0 if res["all_pass"] else 1


def cmd_calibrate(args) -> int:
    res = calibrate_conventions(args.seed_pmax)
    report = res.to_json()
    if args.write and res.record is not None:
        with open(args.write, "w") as fh:
            json.dump(res.record.to_json(), fh, indent=2)
            fh.write("\n")
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        lines = [f"seed family: p <= {args.seed_pmax}",
                 f"literal identity survivors: {len(res.literal_survivors())} of {len(res.literal)}"]
        for conv, fail in res.literal:
            if fail is None:
                lines.append(f"  {conv.label()}: holds")
            else:
                lines.append(f"  {conv.label()}: fails at {fail.K} {fail.orientation} ({fail.reason})")
        survivors = [c for c, f in res.corrected if f is None]
        lines.append(f"corrected identity survivors: {len(survivors)}")
        for conv in survivors:
            lines.append(f"  {conv.label()}")
        lines.append(f"inert axes: {', '.join(res.inert_axes) or 'none'}")
        lines.append(f"record: {json.dumps(res.record.to_json()) if res.record else 'none'}")
        print("\n".join(lines))
    # the literal identity failing everywhere is a verification failure
    return 0 if res.literal_survivors() else 1


# ---------------------------------------------------------------------------
# orderability
# ---------------------------------------------------------------------------


def _load(path: str) -> Dict[str, object]:
    try:
        return od.load_json(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _matrix_rows(E) -> List[List[str]]:
    return [[str(x) for x in row] for row in E]


def _check_matrix(E) -> Dict[str, object]:
    out: Dict[str, object] = {"epsilon": _matrix_rows(E),
                              "row_scaling": od.check_notLO(E).to_json()}
    if E and len(E) == len(E[0]):
        out["formal_determinant"] = od.check_formal_determinant(E).to_json()
    return out


def _matrix_text(res: Dict[str, object]) -> List[str]:
    lines = ["epsilon matrix:"] + ["  " + " ".join(r) for r in res["epsilon"]]
    rs = res["row_scaling"]
    lines.append(f"row-scaling test: {rs['verdict']}"
                 + (f" (witness d = {' '.join(rs['witness'])})" if rs["witness"] else ""))
    fd = res.get("formal_determinant")
    if fd:
        lines.append(f"formal determinant: {fd['verdict']}"
                     + (f" ({fd['reason']})" if fd["reason"] else ""))
    return lines


def cmd_order(args) -> int:
    data = _load(args.file)
    if args.order_cmd == "check-presentation":
        G = od.GroupPresentation.from_json(data)
        res = {"presentation": G.to_json(), **_check_matrix(od.epsilon_matrix(G))}
        _emit(args, res, "\n".join([str(G)] + _matrix_text(res)))
        return 0
    H = od.HeegaardDiagram.from_json(data)
    if args.order_cmd == "check-heegaard":
        Hn, flipped = od.normalize_orientation(H)
        try:
            order = od.homology_order(Hn)
        except od.SingularMatrix as exc:
            print(f"singular intersection matrix: {exc}", file=sys.stderr)
            return 1
        count = od.generator_count(Hn)
        strong = od.is_strong(Hn)
        G = od.presentation_from_heegaard(Hn)
        res = {"genus": H.genus, "orientation_flipped": flipped, "homology_order": order,
               "generator_count": count, "strong": strong, "presentation": G.to_json(),
               **_check_matrix(od.epsilon_matrix(G))}
        lines = [f"genus {H.genus}, |H_1| = {order}, generators = {count}, "
                 f"strong = {strong}" + (" (alpha_1 signs flipped)" if flipped else ""),
                 str(G)] + _matrix_text(res)
        _emit(args, res, "\n".join(lines))
        # a strong diagram whose presentation fails the determinant test contradicts the theory
        fd = res.get("formal_determinant", {})
        return 1 if strong and fd.get("verdict") != "pass" else 0
    # destabilize
    try:
        chain = od.reduce_to_genus_one(H) if args.all else [H, od.destabilize_leaf(H)]
    except (od.NoLeaf, od.PreconditionViolated) as exc:
        print(f"cannot destabilize: {exc}", file=sys.stderr)
        return 1
    res = {"steps": [h.to_json() for h in chain[1:]], "result": chain[-1].to_json(),
           "generator_count": od.generator_count(chain[-1])}
    _emit(args, res, json.dumps(chain[-1].to_json()))
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="lensjones", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("invariants", parents=[common], help="all invariants of K(p, q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("jones", parents=[common], help="Jones polynomial of K(p, q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--orientation", choices=["o1", "o2"], default=O1)
    s.set_defaults(func=cmd_jones)

    s = sub.add_parser("dinv", parents=[common], help="correction terms of L(p, q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("i", type=int, nargs="?")
    s.set_defaults(func=cmd_dinv)

    s = sub.add_parser("rho", parents=[common], help="rho(a, b, n)")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_rho)

    s = sub.add_parser("ivals", parents=[common], help="integer invariants I of L(p, q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--sign", choices=["+", "-"], default="+")
    s.set_defaults(func=cmd_ivals)

    s = sub.add_parser("verify", parents=[common], help="sweep every identity check up to p")
    s.add_argument("--pmax", type=int, default=12)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("calibrate", parents=[common], help="search the sign-convention space")
    s.add_argument("--seed-pmax", type=int, default=12)
    s.add_argument("--write", metavar="PATH", help="write the selected record to PATH")
    s.set_defaults(func=cmd_calibrate)

    s = sub.add_parser("order", help="orderability obstructions")
    osub = s.add_subparsers(dest="order_cmd", required=True)
    for name, hlp in (("check-presentation", "sign-matrix tests for a presentation file"),
                      ("check-heegaard", "strongness and sign-matrix tests for a diagram file"),
                      ("destabilize", "remove a leaf of the intersection graph")):
        o = osub.add_parser(name, parents=[common], help=hlp)
        o.add_argument("file")
        if name == "destabilize":
            o.add_argument("--all", action="store_true", help="repeat down to genus 1")
        o.set_defaults(func=cmd_order)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
