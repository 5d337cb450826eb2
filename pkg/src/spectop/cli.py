"""Command-line interface.

    spectop spec     --ring R [--max-n K]
    spectop closure  --ring R --set S [--topology zariski|patch|ultrafilter]
    spectop compare  --ring R --set S
    spectop limit    --ring R --set S [--point P | --rule NAME] [--element A ...]
    spectop witness  --ring R --set S [--rule NAME] [--probe S ...]
    spectop hull     --ring Z/n
    spectop verify   [--max-n N] [--samples K] [--criteria 1,2,...]

Every command prints one report, JSON by default or text with
``--format text``; both come from the same payload.  Exit status is 0 on
success, 1 on a domain error (or a failed verification) and 2 on a usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, kernels
from .constructible import patch_closure
from .errors import DomainError, GrammarError, SpectopError
from .grammar import parse_set
from .rings import Modular, parse_ring
from .spectrum import closed_point, closed_points, generic_point, zariski_closure
from .ultrafilter import (Nonprincipal, Principal, limit_contains, ultrafilter_closure,
                          ultrafilter_limit, witness_ultrafilter)


class UsageError(SpectopError):
    pass


def _point(P) -> str:
    return str(P)


def _set_payload(S) -> dict:
    return {"set": S.describe(), "form": S.to_json()}


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) in (None, []):
            raise UsageError(f"{args.verb} needs --{name.replace('_', '-')}")


# ---------------------------------------------------------------- verbs

def cmd_spec(args):
    _need(args, "ring")
    ring = parse_ring(args.ring)
    if isinstance(ring, Modular):
        pts = list(closed_points(ring))
        return {"ring": str(ring), "finite": True, "points": [_point(P) for P in pts]}
    k = args.max_n or 20
    pts = []
    for P in closed_points(ring):
        if len(pts) == k:
            break
        pts.append(P)
    return {"ring": str(ring), "finite": False, "generic": _point(generic_point(ring)),
            "first_closed_points": [_point(P) for P in pts],
            "note": f"first {k} closed points in canonical order; the spectrum is infinite"}


_CLOSURES = {"zariski": zariski_closure, "patch": patch_closure, "ultrafilter": ultrafilter_closure}


def cmd_closure(args):
    _need(args, "ring", "set")
    ring = parse_ring(args.ring)
    S = parse_set(ring, args.set)
    topo = args.topology or "patch"
    K = _CLOSURES[topo](S)
    return {"ring": str(ring), "input": _set_payload(S), "topology": topo,
            "closure": _set_payload(K), "closed": K == S}


def cmd_compare(args):
    _need(args, "ring", "set")
    ring = parse_ring(args.ring)
    S = parse_set(ring, args.set)
    P, U = patch_closure(S), ultrafilter_closure(S)
    out = {"ring": str(ring), "input": _set_payload(S), "patch": _set_payload(P),
           "ultrafilter": _set_payload(U), "equal": P == U}
    if P != U:
        out["bug"] = "patch and ultrafilter closures differ; this should never happen"
    return out


def _descriptor(ring, C, args):
    if args.point is not None:
        label = args.point.strip("()")
        P = generic_point(ring) if label == "0" else closed_point(ring, ring.parse(label))
        return Principal(C, P)
    return Nonprincipal(C, args.rule or "lex-min")


def cmd_limit(args):
    _need(args, "ring", "set")
    ring = parse_ring(args.ring)
    C = parse_set(ring, args.set)
    U = _descriptor(ring, C, args)
    L = ultrafilter_limit(U)
    verdicts = [limit_contains(U, ring.parse(a)).to_json() for a in args.element or []]
    return {"ring": str(ring), "carrier": _set_payload(C), "descriptor": U.to_json(),
            "limit": _point(L), "membership": verdicts}


def cmd_witness(args):
    _need(args, "ring", "set")
    ring = parse_ring(args.ring)
    C = parse_set(ring, args.set)
    probes = [parse_set(ring, t) for t in args.probe or []]
    w = witness_ultrafilter(C, args.rule or "lex-min", probes, samples=args.samples or 50,
                            seed=args.seed)
    return {"ring": str(ring), "carrier": _set_payload(C), "witness": _point(w.point),
            "descriptor": w.ultrafilter.to_json(), "log": w.log}


def cmd_hull(args):
    from .vnr import (contraction_map, epimorphism_evidence, hull_certificate,
                      is_vnr, relatively_prime_lemma_check, t_of, zero_dimensional_check)

    _need(args, "ring")
    ring = parse_ring(args.ring)
    if not isinstance(ring, Modular):
        raise DomainError(f"the hull is built for Z/n only, not {ring}")
    T, iota = t_of(ring)
    out = {"ring": str(ring), "hull": T.to_json(), "components": list(T.components),
           "iota": iota.table(), "certificate": hull_certificate(T, iota),
           "contraction": contraction_map(iota).to_json(),
           "zero_dimensional": zero_dimensional_check(T)}
    if ring.n <= 10**4:
        out["regular"] = is_vnr(ring)
    if T.size <= 10**4:
        out["relatively_prime_lemma"] = relatively_prime_lemma_check(T)
    if ring.n <= 10:
        ev = epimorphism_evidence(iota)
        out["epimorphism_evidence"] = {k: ev[k] for k in ("at_most_one_each", "kind")}
        out["epimorphism_evidence"]["homs"] = {r["target"]: r["homs"] for r in ev["targets"]}
    return out


def cmd_verify(args):
    from .verify import run_all

    only = None
    if args.criteria:
        try:
            only = [int(k) for k in args.criteria.split(",")]
        except ValueError:
            raise UsageError(f"--criteria takes a comma-separated list, got {args.criteria!r}") from None
        if any(k not in range(1, 10) for k in only):
            raise UsageError("criteria are numbered 1 to 9")
    results = run_all(max_n=args.max_n or 1000, samples=args.samples or 1000,
                      seed=args.seed, only=only)
    return {"backend": kernels.BACKEND,
            "criteria": [r.to_json(timing=args.timing) for r in results],
            "all_passed": all(r.passed for r in results)}


VERBS = {"spec": cmd_spec, "closure": cmd_closure, "compare": cmd_compare, "limit": cmd_limit,
         "witness": cmd_witness, "hull": cmd_hull, "verify": cmd_verify}


# ---------------------------------------------------------------- plumbing

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spectop", description="Topologies on prime spectra.")
    ap.add_argument("verb", choices=sorted(VERBS))
    ap.add_argument("--ring")
    ap.add_argument("--set")
    ap.add_argument("--topology", choices=sorted(_CLOSURES))
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int)
    ap.add_argument("--samples", type=int)
    ap.add_argument("--point", help="principal ultrafilter at this prime (limit)")
    ap.add_argument("--rule", help="selection rule for nonprincipal ultrafilters")
    ap.add_argument("--element", action="append", help="membership query (limit); repeatable")
    ap.add_argument("--probe", action="append", help="set put to the ultrafilter (witness)")
    ap.add_argument("--criteria", help="comma-separated criterion numbers (verify)")
    ap.add_argument("--timing", action="store_true", help="include wall-clock timings")
    return ap


def render_text(payload, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(payload))
    return "\n".join(lines)


def _flat(v) -> bool:
    """A list with no dicts anywhere inside prints on one line."""
    if isinstance(v, dict):
        return False
    if isinstance(v, list):
        return all(_flat(x) for x in v)
    return True


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return str(v)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    started = time.perf_counter()
    try:
        result = VERBS[args.verb](args)
        code = 0 if result.get("all_passed", True) else 1
    except (GrammarError, UsageError) as exc:
        print(f"spectop: usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        result = {"error": type(exc).__name__, "message": str(exc)}
        code = 1
    report = {"command": args.verb,
              "inputs": {k: v for k, v in vars(args).items()
                         if v is not None and k not in ("verb", "format", "timing")},
              "result": result, "version": __version__}
    if args.timing:
        report["elapsed_s"] = round(time.perf_counter() - started, 3)
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=False), file=out)
    else:
        print(render_text(report), file=out)
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))


__all__ = ["build_parser", "main", "render_text", "run"]
