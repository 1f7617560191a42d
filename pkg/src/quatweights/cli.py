"""Command-line front end.

Subcommands: wd | wgl2 | jh | strata | check | sweep. Parameters come from
a JSON config file (``--config``) and/or individual flags, flags winning.
Output is JSON (default) or TSV, with sorted sets and fixed key order so
repeated runs are byte-identical; sweep timing fields are the one
documented exception.

Exit codes: 0 success, 2 invalid or non-generic input, 3 closed-form vs
brute-force mismatch, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cuspidal import CharQuad, jh_factor, p_theta
from .errors import ConfigError, InputError, MismatchError, QuatWeightsError
from .gl2 import Kind, RhoBar, w_gl2
from .oracle import CheckReport, cross_check, sweep, w_d_oracle
from .quaternionic import enumerate_wd, stratum
from .tuples import BitTuple, all_bit_tuples

_CONFIG_KEYS = {"p", "f", "kind", "r", "v_rho", "twist"}


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise ConfigError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_bits(text: str) -> list[int]:
    if "," in text:
        return _parse_int_list(text)
    stripped = text.strip("[]() ")
    try:
        return [int(ch) for ch in stripped]
    except ValueError as exc:
        raise ConfigError(f"expected a bit string like 01 or 0,1, got {text!r}") from exc


def _bitstring(bits) -> str:
    return "".join(str(b) for b in bits)


def _rho_from_args(args) -> RhoBar:
    cfg: dict = {}
    if getattr(args, "config", None):
        with open(args.config, "r", encoding="utf-8") as handle:
            try:
                cfg = json.load(handle)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"config is not valid JSON: {exc}") from exc
        unknown = set(cfg) - _CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if getattr(args, "p", None) is not None:
        cfg["p"] = args.p
    if getattr(args, "f", None) is not None:
        cfg["f"] = args.f
    if getattr(args, "kind", None) is not None:
        cfg["kind"] = args.kind
    if getattr(args, "r", None) is not None:
        cfg["r"] = _parse_int_list(args.r)
    if getattr(args, "v_rho", None) is not None:
        cfg["v_rho"] = _parse_bits(args.v_rho)
    if getattr(args, "twist", None) is not None:
        cfg["twist"] = args.twist
    missing = [key for key in ("p", "f", "kind", "r") if key not in cfg]
    if missing:
        raise ConfigError(f"missing required parameters: {', '.join(missing)}")
    try:
        kind = Kind(cfg["kind"])
    except ValueError as exc:
        raise ConfigError(f"unknown kind {cfg['kind']!r}") from exc
    if kind is Kind.REDUCIBLE_NONSPLIT and "v_rho" not in cfg:
        raise ConfigError("v_rho required for the reducible-nonsplit kind")
    v_rho = BitTuple(cfg["v_rho"]) if cfg.get("v_rho") is not None else None
    return RhoBar(
        p=int(cfg["p"]),
        f=int(cfg["f"]),
        kind=kind,
        r=tuple(cfg["r"]),
        v_rho=v_rho,
        twist=int(cfg.get("twist", 0)),
    )


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _emit_tsv(header: list[str], rows: list[list]) -> None:
    print("\t".join(header))
    for row in rows:
        print("\t".join(str(cell) for cell in row))


def _rho_payload(rho: RhoBar) -> dict:
    payload = {
        "p": rho.p,
        "f": rho.f,
        "kind": rho.kind.value,
        "r": list(rho.r),
    }
    if rho.v_rho is not None:
        payload["v_rho"] = list(rho.v_rho)
    payload["twist"] = rho.twist
    return payload


def _weight_rows(certificates):
    rows = []
    for cert in certificates:
        rows.append(
            {
                "exponent": cert.exponent,
                "b": cert.psi.b,
                "c": cert.psi.c,
                "w": list(cert.w),
                "d": list(cert.d),
                "stratum_v": list(cert.stratum_v) if cert.stratum_v is not None else None,
            }
        )
    return rows


def _weight_tsv_rows(weights):
    rows = []
    for wt in weights:
        rows.append(
            [
                wt["exponent"],
                wt["b"],
                wt["c"],
                _bitstring(wt["w"]) if wt.get("w") is not None else "-",
                ",".join(str(s) for s in wt["d"]) if wt.get("d") is not None else "-",
                _bitstring(wt["stratum_v"]) if wt.get("stratum_v") is not None else "-",
            ]
        )
    return rows


def cmd_wd(args) -> int:
    rho = _rho_from_args(args)
    payload = _rho_payload(rho)
    payload["mode"] = args.mode
    mismatch = False

    if args.mode == "oracle":
        psis = w_d_oracle(rho, jobs=args.jobs)
        weights = [{"exponent": psi.e, "b": psi.b, "c": psi.c} for psi in psis]
        payload["count"] = len(weights)
        payload["exponents"] = [w["exponent"] for w in weights]
        payload["weights"] = weights
    else:
        if args.mode == "both":
            try:
                report = cross_check(rho, jobs=args.jobs)
            except MismatchError as exc:
                report = exc.report
                mismatch = True
            certificates = report.certificates
        else:
            certificates = enumerate_wd(rho)
        weights = _weight_rows(certificates)
        payload["count"] = len(weights)
        payload["exponents"] = [w["exponent"] for w in weights]
        payload["weights"] = weights
        if args.mode == "both":
            payload["check"] = {
                "match": report.match,
                "count_ok": report.count_ok,
                "expected_count": report.expected_count,
                "oracle_count": len(report.oracle_exponents),
                "only_theorem": list(report.only_theorem),
                "only_oracle": list(report.only_oracle),
                "certificate_problems": list(report.certificate_problems),
            }

    if args.format == "tsv":
        _emit_tsv(
            ["exponent", "b", "c", "w", "d", "stratum_v"],
            _weight_tsv_rows(payload["weights"]),
        )
    else:
        _emit_json(payload)
    return 3 if mismatch else 0


def cmd_wgl2(args) -> int:
    rho = _rho_from_args(args)
    payload = _rho_payload(rho)
    weights = [
        {"v": list(v), "r": list(wt.r), "a": wt.a} for v, wt in w_gl2(rho).items()
    ]
    payload["count"] = len(weights)
    payload["weights"] = weights
    if args.format == "tsv":
        _emit_tsv(
            ["v", "r", "a"],
            [[_bitstring(w["v"]), ",".join(map(str, w["r"])), w["a"]] for w in weights],
        )
    else:
        _emit_json(payload)
    return 0


def cmd_jh(args) -> int:
    psi = CharQuad.from_bc(args.p, args.f, args.b, args.c)
    factors = []
    for u in p_theta(psi):
        wt = jh_factor(psi, u)
        factors.append({"u": list(u), "r": list(wt.r), "a": wt.a})
    payload = {
        "p": args.p,
        "f": args.f,
        "b": args.b,
        "c": args.c,
        "exponent": psi.e,
        "count": len(factors),
        "factors": factors,
    }
    if args.format == "tsv":
        _emit_tsv(
            ["u", "r", "a"],
            [[_bitstring(f["u"]), ",".join(map(str, f["r"])), f["a"]] for f in factors],
        )
    else:
        _emit_json(payload)
    return 0


def cmd_strata(args) -> int:
    rho = _rho_from_args(args)
    if not rho.kind.is_reducible:
        raise ConfigError("strata are defined for reducible kinds only")
    ss = rho.semisimplification()
    strata = {v: stratum(ss, v) for v in all_bit_tuples(rho.f)}
    payload = {
        "(" + ",".join(str(b) for b in v) + ")": [psi.e for psi in psis]
        for v, psis in strata.items()
    }
    if args.format == "tsv":
        rows = []
        for v, psis in strata.items():
            for psi in psis:
                rows.append([_bitstring(v), psi.e, psi.b, psi.c])
        _emit_tsv(["stratum_v", "exponent", "b", "c"], rows)
    else:
        _emit_json(payload)
    return 0


def _emit_check_report(report: CheckReport, fmt: str) -> None:
    payload = report.to_dict()
    if fmt == "tsv":
        _emit_tsv(["key", "value"], [[k, json.dumps(v)] for k, v in payload.items()])
    else:
        _emit_json(payload)


def cmd_check(args) -> int:
    rho = _rho_from_args(args)
    try:
        report = cross_check(rho, jobs=args.jobs)
    except MismatchError as exc:
        _emit_check_report(exc.report, args.format)
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _emit_check_report(report, args.format)
    return 0


def cmd_sweep(args) -> int:
    kinds = [Kind(k) for k in args.kinds.split(",")] if args.kinds else None
    twists = tuple(_parse_int_list(args.twists)) if args.twists else (0, 1)
    try:
        report = sweep(
            _parse_int_list(args.p),
            _parse_int_list(args.f),
            kinds=kinds,
            twists=twists,
            jobs=args.jobs,
        )
    except MismatchError as exc:
        _emit_check_report(exc.report, args.format)
        print(f"error: {exc}", file=sys.stderr)
        return 3
    payload = report.to_dict(include_timing=not args.no_timing)
    if args.format == "tsv":
        rows = [
            [e["p"], e["f"], e["kind"], e["checks"], e["passed"], e.get("elapsed_seconds", "-")]
            for e in payload["configurations"]
        ]
        _emit_tsv(["p", "f", "kind", "checks", "passed", "elapsed_seconds"], rows)
    else:
        _emit_json(payload)
    return 0


def _add_rho_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file with p/f/kind/r[/v_rho/twist]")
    parser.add_argument("--p", type=int, help="prime p")
    parser.add_argument("--f", type=int, help="residue degree f")
    parser.add_argument("--r", help="comma-separated inertia digits, e.g. 1,2")
    parser.add_argument("--kind", choices=[k.value for k in Kind], help="parameter kind")
    parser.add_argument("--v-rho", dest="v_rho", help="stratum bound bits, e.g. 10 or 1,0")
    parser.add_argument("--twist", type=int, help="overall twist exponent (default 0)")


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["json", "tsv"], default="json")


def _add_jobs_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatweights",
        description="Quaternionic Serre weight sets for generic mod-p Galois parameters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_wd = sub.add_parser("wd", help="compute the quaternionic weight set")
    _add_rho_flags(p_wd)
    p_wd.add_argument("--mode", choices=["theorem", "oracle", "both"], default="both")
    _add_format_flag(p_wd)
    _add_jobs_flag(p_wd)
    p_wd.set_defaults(func=cmd_wd)

    p_wgl2 = sub.add_parser("wgl2", help="compute the GL2 weight set")
    _add_rho_flags(p_wgl2)
    _add_format_flag(p_wgl2)
    p_wgl2.set_defaults(func=cmd_wgl2)

    p_jh = sub.add_parser("jh", help="constituents of one reduced cuspidal type")
    p_jh.add_argument("--p", type=int, required=True)
    p_jh.add_argument("--f", type=int, required=True)
    p_jh.add_argument("--b", type=int, required=True)
    p_jh.add_argument("--c", type=int, required=True)
    _add_format_flag(p_jh)
    p_jh.set_defaults(func=cmd_jh)

    p_strata = sub.add_parser("strata", help="stratify the semisimplified weight set")
    _add_rho_flags(p_strata)
    _add_format_flag(p_strata)
    p_strata.set_defaults(func=cmd_strata)

    p_check = sub.add_parser("check", help="cross-check closed form against brute force")
    _add_rho_flags(p_check)
    _add_format_flag(p_check)
    _add_jobs_flag(p_check)
    p_check.set_defaults(func=cmd_check)

    p_sweep = sub.add_parser("sweep", help="cross-check every generic parameter in ranges")
    p_sweep.add_argument("--p", required=True, help="comma-separated primes, e.g. 5,7")
    p_sweep.add_argument("--f", required=True, help="comma-separated degrees, e.g. 1,2,3")
    p_sweep.add_argument("--kinds", help="comma-separated kinds (default: all)")
    p_sweep.add_argument("--twists", help="comma-separated twists (default: 0,1)")
    p_sweep.add_argument("--no-timing", action="store_true", help="omit timing fields")
    _add_format_flag(p_sweep)
    _add_jobs_flag(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MismatchError as exc:
        _emit_check_report(exc.report, getattr(args, "format", "json"))
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except QuatWeightsError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
