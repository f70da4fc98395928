"""Command-line front end.

Every subcommand prints ``key: value`` lines, or with ``--json`` one JSON
record whose fields follow the underlying operation. Large integers are
written as decimal strings. Exit codes: 0 ok, 1 bad input/config, 2 domain
error.

Integer lists are comma separated (``--a 2,0``); write negative lists with
``=`` (``--a=-1,-1``) and the empty partition as ``[]``.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import bott, harness, partitions, schur, spectral, vanishing
from .errors import ConfigError, DomainError

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN = 0, 1, 2


@dataclass
class CommandResult:
    status: str
    payload: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return {"ok": EXIT_OK, "domain_error": EXIT_DOMAIN}.get(self.status, EXIT_CONFIG)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(f"{self.prog}: {message}\n{self.format_usage()}")


def int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("[]", ""):
        return ()
    try:
        return tuple(int(s) for s in text.strip("[]").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def factor_list(text: str) -> list[tuple[int, int]]:
    try:
        pairs = [s.split(":") for s in text.split(",")]
        return [(int(r), int(e)) for r, e in pairs]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected r:e pairs like 1:2,2:3, got {text!r}") from None


def _bott_record(res: bott.BottResult) -> dict:
    return {
        "zero": res.is_zero,
        "q": res.degree,
        "psi": None if res.is_zero else list(res.psi),
        "dim": str(res.dim),
    }


def _cmd_delta(a):
    return {"x": a.x, "delta": partitions.delta(a.x)}


def _cmd_dominance(a):
    rel = partitions.dominance_compare(a.u, a.v)
    return {"u": list(a.u), "v": list(a.v), "relation": rel.value}


def _cmd_lr(a):
    return {"u": list(a.u), "v": list(a.v), "terms": schur.lr_decompose(a.u, a.v).to_records()}


def _cmd_decompose(a):
    if a.kind == "sym-wedge":
        dec = schur.sym_wedge_decompose(a.alpha, a.beta)
    elif a.kind == "tensor-power":
        dec = schur.tensor_power_decompose(a.alpha)
    else:
        terms = schur.relative_forms_decompose(a.m, a.r, a.s)
        return {"kind": a.kind, "terms": [
            {"u": list(t.u), "quotient_factor": t.quotient_factor, "sub_factor": t.sub_factor}
            for t in terms]}
    return {"kind": a.kind, "terms": dec.to_records()}


def _cmd_bott(a):
    return _bott_record(bott.bott_cohomology(bott.BottInput(a.r, a.d, a.a, a.b)))


def _cmd_pm_forms(a):
    coh = bott.pm_forms_cohomology(a.m, a.p, a.t)
    return {"m": a.m, "p": a.p, "t": a.t,
            "cohomology": [{"q": q, "dim": str(d)} for q, d in sorted(coh.items())]}


def _cmd_vanish(a):
    mode = a.mode
    if mode == "nagoya":
        if not a.factors:
            raise ConfigError("vanish nagoya needs --factors")
        v = vanishing.vanish_nagoya(a.n, a.p, a.q, a.factors)
    else:
        if a.e is None:
            raise ConfigError(f"vanish {mode} needs --e")
        if mode == "main":
            v = vanishing.vanish_main(a.n, a.p, a.q, a.e, a.alpha, a.beta)
        elif mode == "hook":
            if a.k is None:
                raise ConfigError("vanish hook needs --k")
            v = vanishing.vanish_hook(a.n, a.p, a.q, a.e, a.alpha, a.k)
        elif mode == "wedge":
            v = vanishing.vanish_wedge(a.n, a.p, a.q, a.e, a.beta)
        elif mode == "sym":
            v = vanishing.vanish_sym(a.n, a.p, a.q, a.e, a.alpha)
        else:
            v = vanishing.vanish_sym_wedge_corollary(a.n, a.p, a.q, a.e, a.alpha, a.beta)
    return v.as_dict()


def _cmd_e1(a):
    params = spectral.SpectralParams(a.n, a.e, a.r, a.l, a.r * a.l if a.k is None else a.k, a.P)
    params.validate()
    cells = [spectral.e1_term(params, a.p)] if a.p is not None else spectral.e1_grid(params)
    return {"n": a.n, "e": a.e, "r": a.r, "l": a.l, "k": params.k, "P": a.P,
            "cells": [{"p": c.p, "alpha_p": c.alpha_p, "j_p": c.j_p} for c in cells]}


def _cmd_dm(a):
    t = spectral.dm_targets(a.p, a.q, a.r, a.mu)
    return {"right": list(t["right"]), "left": list(t["left"])}


def _cmd_qbound(a):
    return {"Q": spectral.capital_q(a.x, a.alpha, a.e, a.k)}


def _cmd_identities(a):
    return spectral.identity_residuals(a.x, a.alpha, a.mu, a.e, a.k)


def _cmd_optimality(a):
    out = harness.optimality_reproduce(a.r, a.f)
    out["bott_dim"] = str(out["bott_dim"])
    return out


def _cmd_sweep(a):
    box = harness.SweepBox.from_file(a.config) if a.config else harness.SweepBox()
    report = harness.sweep_validate(box, workers=a.workers)
    if not a.json:
        return {"_text": report.to_text()}
    return report.to_record()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dolbeault", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one JSON record")
        p.set_defaults(func=func)
        return p

    p = add("delta", _cmd_delta, "the delta function")
    p.add_argument("--x", type=int, required=True)

    p = add("dominance", _cmd_dominance, "compare partitions in the dominance pre-order")
    p.add_argument("--u", type=int_list, required=True)
    p.add_argument("--v", type=int_list, required=True)

    p = add("lr", _cmd_lr, "Littlewood-Richardson product S_u ⊗ S_v")
    p.add_argument("--u", type=int_list, required=True)
    p.add_argument("--v", type=int_list, required=True)

    p = add("decompose", _cmd_decompose, "sym-wedge, tensor-power or relative-forms decompositions")
    p.add_argument("--kind", choices=("sym-wedge", "tensor-power", "relative-forms"), required=True)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--beta", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=1)

    p = add("bott", _cmd_bott, "cohomology of S_a Q ⊗ S_b S on Gr(r, d)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", type=int_list, required=True)
    p.add_argument("--b", type=int_list, required=True)

    p = add("pm-forms", _cmd_pm_forms, "cohomology of Ω^p(t) on projective m-space")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = add("vanish", _cmd_vanish, "evaluate a vanishing predicate")
    p.add_argument("mode", choices=("main", "hook", "wedge", "sym", "nagoya", "corollary"))
    for flag in ("--n", "--p", "--q"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--e", type=int)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--beta", type=int, default=0)
    p.add_argument("--k", type=int)
    p.add_argument("--factors", type=factor_list, help="r:e pairs, e.g. 1:2,2:3")

    p = add("e1", _cmd_e1, "E1 placement for the Borel-Le Potier sequence")
    for flag in ("--n", "--e", "--r", "--l", "--P"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--k", type=int, help="defaults to l*r")
    p.add_argument("--p", type=int, help="single column; default is the whole grid 0..n")

    p = add("dm", _cmd_dm, "targets of the differential d_{mu r}")
    for flag in ("--p", "--q", "--r", "--mu"):
        p.add_argument(flag, type=int, required=True)

    p = add("qbound", _cmd_qbound, "the degree bound Q(x, alpha)")
    for flag in ("--x", "--alpha", "--e", "--k"):
        p.add_argument(flag, type=int, required=True)

    p = add("identities", _cmd_identities, "residuals of the Q step identities")
    for flag in ("--x", "--alpha", "--mu", "--e", "--k"):
        p.add_argument(flag, type=int, required=True)

    p = add("optimality", _cmd_optimality, "the sharpness example on Gr(r, f+r)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--f", type=int, required=True)

    p = add("sweep", _cmd_sweep, "cross-validate predicates on split bundles")
    p.add_argument("--config", help="INI file with a [box] section")
    p.add_argument("--workers", type=int)
    return parser


def render_text(payload: dict) -> str:
    if "_text" in payload:
        return payload["_text"]
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.extend("  " + " ".join(f"{k}={v}" for k, v in item.items()) for item in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def render_json(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False)


def run(argv: Sequence[str], out=None, err=None) -> CommandResult:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    as_json = "--json" in argv
    try:
        args = parser.parse_args(list(argv))
        payload = args.func(args)
    except ConfigError as exc:
        result = CommandResult("config_error", {"status": "config_error", "message": str(exc).strip()})
    except (DomainError, OverflowError) as exc:
        result = CommandResult("domain_error", {"status": "domain_error", "message": str(exc)})
    else:
        result = CommandResult("ok", payload)
        print(render_json(payload) if as_json else render_text(payload), file=out)
        return result
    print(result.payload["message"], file=err)
    if as_json:
        print(render_json(result.payload), file=out)
    return result


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
