"""Command-line front end: JSON in, JSON run reports out.

Exit status is 0 when every check in the report passes, 1 when a check
fails, and 2 for bad input or violated size limits.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Callable

from . import io
from .complex import SimplicialComplex, verify_shelling
from .face_ideal import (
    betti_formula,
    face_ideal,
    face_order,
    verify_duality_theorem,
    verify_face_quotients,
    whisker_complex,
)
from .homology import hochster_betti, linear_resolution_check
from .ideal import alexander_dual
from .poset import (
    antichains,
    chains,
    dilworth_number,
    poset_ideals,
    rank,
    verify_chain_theorem,
)
from .resolution import build_resolution, resolution_report
from .whisker_hd import CharacterizationError, WhiskerSpec, build_hd_whisker, verify_generalized_theorem


class Report:
    """Collects outputs and named checks for one command."""

    def __init__(self, command: str, inputs: dict):
        self.command = command
        self.inputs = inputs
        self.outputs: dict[str, Any] = {}
        self.checks: dict[str, dict] = {}
        self._start = time.perf_counter()

    def check(self, name: str, ok: bool, witness: Any = None) -> None:
        entry: dict[str, Any] = {"ok": bool(ok)}
        if not ok:
            entry["witness"] = witness if witness is not None else {"detail": "no witness available"}
        self.checks[name] = entry

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks.values())

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "checks": self.checks,
            "ok": self.ok,
            "timing": {"seconds": round(time.perf_counter() - self._start, 6)},
        }


def _ints(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise io.InputError(f"expected a list of integers, got {text!r}") from None


def _spec_from_args(args, n: int, fallback: dict | None = None) -> WhiskerSpec | None:
    k, d = _ints(args.k), _ints(args.d)
    if k is None and d is None:
        return io.spec_from_json(fallback) if fallback is not None else None
    k = k if k is not None else [1] * n
    d = d if d is not None else [1] * n
    try:
        return WhiskerSpec(tuple(k), tuple(d))
    except ValueError as exc:
        raise io.InputError(f"spec: {exc}") from None


def _load_complex_input(path: str) -> tuple[SimplicialComplex, dict, dict | None]:
    """A complex file, or {"complex": ..., "spec": ...} for whisker commands."""
    obj = io.load_json(path)
    spec = None
    if isinstance(obj, dict) and "complex" in obj:
        spec = obj.get("spec")
        obj = obj["complex"]
    elif isinstance(obj, dict) and "spec" in obj:
        spec = obj["spec"]
    return io.complex_from_json(obj), obj, spec


def _ideal_out(ideal, pretty: bool) -> dict:
    return io.ideal_to_json(ideal, pretty=pretty)


def cmd_face_ideal(args, rep: Report) -> None:
    cx, _, _ = _load_complex_input(args.input)
    rep.outputs["ideal"] = _ideal_out(face_ideal(cx).ideal, args.pretty)


def cmd_dual(args, rep: Report) -> None:
    ideal = io.ideal_from_json(io.load_json(args.input))
    rep.outputs["dual"] = _ideal_out(alexander_dual(ideal), args.pretty)


def cmd_whisker(args, rep: Report) -> None:
    cx, _, spec_obj = _load_complex_input(args.input)
    spec = _spec_from_args(args, cx.n, spec_obj)
    if spec is None:
        rep.outputs["complex"] = io.complex_to_json(whisker_complex(cx))
    else:
        W = build_hd_whisker(cx, spec)
        rep.outputs["spec"] = io.spec_to_json(spec)
        rep.outputs["complex"] = io.complex_to_json(W.complex)


def _verify_duality(args, rep: Report) -> None:
    cx, _, _ = _load_complex_input(args.input)
    r = verify_duality_theorem(cx)
    rep.outputs.update(r.as_dict())
    rep.check("duality", r.equal, {"dual": r.dual.render(), "whisker_facet_ideal": r.whisker.render()})


def _verify_resolution(args, rep: Report) -> None:
    cx, _, _ = _load_complex_input(args.input)
    out = resolution_report(build_resolution(cx), cx, matrices=args.matrices)
    checks = out.pop("checks")
    rep.outputs.update(out)
    for name, c in checks.items():
        rep.check(name, c["ok"], c["failure"])


def _verify_quotients(args, rep: Report) -> None:
    cx, _, _ = _load_complex_input(args.input)
    r = verify_face_quotients(cx)
    uni = face_ideal(cx).ideal.universe
    rep.outputs["order"] = [uni.render(m) for m in face_order(cx)]
    rep.outputs["colons"] = {str(s.t): [uni.render(g) for g in s.colon] for s in r.certificate.steps}
    witness = None
    if not r.certificate.ok:
        t, g = r.certificate.violation
        witness = {"t": t, "nonlinear_generator": uni.render(g)}
    rep.check("linear_quotients", r.certificate.ok, witness)
    if r.certificate.ok:
        mm = r.mismatch
        rep.check("colon_variables", mm is None, mm and {
            "t": mm[0], "face": cx.universe.names(mm[1]),
            "colon": uni.names_of(mm[2]), "expected": uni.names_of(mm[3])})


def _verify_chain_theorem(args, rep: Report) -> None:
    P = io.poset_from_json(io.load_json(args.input))
    r = verify_chain_theorem(P)
    rep.outputs.update(r.as_dict())
    rep.outputs["degenerate"] = r.degenerate
    rep.check("chain_part", r.chain_part.equal, r.chain_part.as_dict())
    rep.check("antichain_part", r.antichain_part.equal, r.antichain_part.as_dict())


def _verify_generalized(args, rep: Report) -> None:
    cx, _, spec_obj = _load_complex_input(args.input)
    spec = _spec_from_args(args, cx.n, spec_obj) or WhiskerSpec.uniform(cx.n)
    W = build_hd_whisker(cx, spec)
    rep.outputs["spec"] = io.spec_to_json(spec)
    try:
        r = verify_generalized_theorem(W)
    except CharacterizationError as exc:
        rep.check("cover_characterization", False, {"detail": str(exc)})
        return
    rep.check("cover_characterization", True)
    d = r.as_dict(W.universe)
    rep.outputs["shelling_order"] = d["shelling_order"]
    rep.outputs["cover_degree"] = W.cover_degree
    rep.check("cover_degrees", r.degrees_ok, {"expected": W.cover_degree})
    rep.check("linear_quotients", r.certificate.ok, d["quotient_violation"])
    rep.check("facet_bijection", r.bijection_ok)
    rep.check("shelling", d["shelling_accepted"], {"violation": d["shelling_violation"]})


VERIFY: dict[str, Callable] = {
    "duality": _verify_duality,
    "resolution": _verify_resolution,
    "quotients": _verify_quotients,
    "chain-theorem": _verify_chain_theorem,
    "generalized": _verify_generalized,
}


def cmd_verify(args, rep: Report) -> None:
    VERIFY[args.what](args, rep)


def cmd_betti(args, rep: Report) -> None:
    cx, _, _ = _load_complex_input(args.input)
    table = betti_formula(cx)
    rep.outputs["betti"] = table.as_dict()
    if args.oracle:
        ideal = face_ideal(cx).ideal
        oracle = hochster_betti(ideal)
        rep.outputs["oracle"] = oracle.as_dict()
        rep.check("totals_match", oracle.total == table.total,
                  {"formula": list(table.total), "oracle": list(oracle.total)})
        lin = linear_resolution_check(ideal, oracle)
        rep.check("linear_resolution", lin.linear, lin.witness and {"i": lin.witness[0], "j": lin.witness[1]})


def cmd_poset(args, rep: Report) -> None:
    P = io.poset_from_json(io.load_json(args.input))
    names = P.universe().names
    if args.what in ("chains", "antichains", "ideals"):
        fam = {"chains": chains, "antichains": antichains, "ideals": poset_ideals}[args.what](P)
        rep.outputs[args.what] = [names(m) for m in fam.members]
    elif args.what == "dilworth":
        rep.outputs["dilworth"] = dilworth_number(P)
    else:
        rep.outputs["rank"] = rank(P)


def cmd_shelling(args, rep: Report) -> None:
    cx, _, _ = _load_complex_input(args.input)
    order = io.order_from_json(io.load_json(args.order), cx.universe)
    try:
        r = verify_shelling(cx, order)
    except ValueError as exc:
        raise io.InputError(f"order: {exc}") from None
    witness = None
    if not r.accepted:
        i, j = r.violation
        witness = {"i": i, "j": j, "F_i": cx.universe.names(order[i - 1]),
                   "F_j": cx.universe.names(order[j - 1])}
    rep.outputs["accepted"] = r.accepted
    rep.check("shelling", r.accepted, witness)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true",
                        help="indent output and render monomials as strings like x1*y2")
    p = argparse.ArgumentParser(prog="faceideal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("face-ideal", parents=[common], help="generators of the face ideal")
    s.add_argument("input")
    s.set_defaults(func=cmd_face_ideal)

    s = sub.add_parser("dual", parents=[common], help="Alexander dual of a squarefree ideal")
    s.add_argument("input")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("whisker", parents=[common], help="whisker complex, optionally higher-dimensional")
    s.add_argument("input")
    s.add_argument("--k", help="whisker counts, e.g. '2,1'")
    s.add_argument("--d", help="whisker dimensions, e.g. '1,1'")
    s.set_defaults(func=cmd_whisker)

    s = sub.add_parser("verify", parents=[common], help="run a verification and emit a report")
    s.add_argument("what", choices=sorted(VERIFY))
    s.add_argument("input")
    s.add_argument("--k")
    s.add_argument("--d")
    s.add_argument("--matrices", action="store_true", help="include differentials (resolution)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("betti", parents=[common], help="Betti numbers of the face ideal")
    s.add_argument("input")
    s.add_argument("--oracle", action="store_true", help="cross-check with simplicial homology")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("poset", parents=[common], help="poset families and invariants")
    s.add_argument("what", choices=["chains", "antichains", "ideals", "dilworth", "rank"])
    s.add_argument("input")
    s.set_defaults(func=cmd_poset)

    s = sub.add_parser("shelling", parents=[common], help="check a facet order")
    s.add_argument("input")
    s.add_argument("--order", required=True)
    s.set_defaults(func=cmd_shelling)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    command = args.command + (f" {args.what}" if hasattr(args, "what") else "")
    rep = Report(command, {k: v for k, v in vars(args).items() if k not in ("func", "command")})
    try:
        args.func(args, rep)
    except (ValueError, KeyError) as exc:
        # InputError, SizeLimitError and PosetError are all ValueErrors
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"faceideal: error: {msg}", file=sys.stderr)
        return 2
    json.dump(rep.as_dict(), sys.stdout, indent=2 if args.pretty else None)
    sys.stdout.write("\n")
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
