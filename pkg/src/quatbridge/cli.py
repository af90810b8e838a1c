"""``quatbridge`` command line.

Exit status is 0 when every executed check passes, 1 when any check
fails and 2 for usage, config or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bridge, dirac, maxwell
from .config import SUITES, ConfigError, load_config, parse_field_literal
from .fields import apply_operator, field_to_json
from .parser import ParseError, format_diff_operator, parse_operator
from .report import VerificationReport, check_bool, check_zero, emit_report
from .scalars import EXACT, MODES, ModeMismatchError, NotExactError, complex_from_json
from .suites import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="scenario JSON file (default: shipped config)")
    p.add_argument("--mode", choices=MODES, help="arithmetic mode (default: from config)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--tol", type=float, default=None, help="float-mode tolerance (default 1e-12)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quatbridge", description="Quaternionic Maxwell/Dirac verification engine.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    _common(v)
    v.add_argument("--suite", nargs="*", action="extend", dest="suites", metavar="NAME",
                   help=f"suites to run: {', '.join(SUITES)} or all")

    g = sub.add_parser("gamma", help="reconstruct the gamma matrices")
    _common(g)

    t = sub.add_parser("transport", help="map a Maxwell solution to a Dirac solution")
    _common(t)
    t.add_argument("--E", dest="e_field", help="field literal (JSON or @path); default: config fields or first plane wave")
    t.add_argument("--H", dest="h_field", help="field literal (JSON or @path)")

    d = sub.add_parser("dispersion", help="check a dispersion record")
    _common(d)
    d.add_argument("--record", help="record literal (JSON or @path); default: derived from config")
    d.add_argument("--eps-r", default=None)
    d.add_argument("--mu-r", default=None)

    e = sub.add_parser("eval", help="apply a parsed operator to a field literal")
    _common(e)
    e.add_argument("operator", help="operator expression, e.g. 'D*D + (d1*d1 + d2*d2 + d3*d3)'")
    e.add_argument("field", help="field literal (JSON or @path)")
    return ap


def _load(args, suites=None):
    return load_config(args.config, mode=args.mode, suites=suites, tolerance=args.tol)


def _emit(report: VerificationReport, args, extra: dict | None = None) -> int:
    if args.format == "json" and extra:
        sys.stdout.write(json.dumps({**extra, "report": report.to_dict()}, indent=2) + "\n")
    else:
        if extra and args.format == "text":
            for key, value in extra.items():
                sys.stdout.write(f"{key}: {json.dumps(value)}\n")
        sys.stdout.write(emit_report(report, args.format))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    cfg = _load(args, suites=args.suites)
    return _emit(run_suite(cfg), args)


def cmd_gamma(args) -> int:
    cfg = _load(args)
    g = dirac.reconstruct_gammas(mode=cfg.mode)
    report = VerificationReport(conventions={"mode": cfg.mode, "clifford_sign": g.sign})
    report.extend([
        check_bool("gamma.clifford_sign", "single global Clifford sign s", g.sign is not None, cfg.mode),
        check_zero("gamma.clifford", "g_mu g_nu + g_nu g_mu = 2 s eta_mu_nu",
                   g.clifford_defect() if g.sign is not None else float("inf"), cfg.mode, cfg.tolerance),
        check_zero("gamma.q_product", "Q = g1 g2 g3", g.q - g.product_123(), cfg.mode, cfg.tolerance),
    ])
    report.conventions["relation_sign_measured"] = dirac.measured_relation_sign(g, cfg.dirac)
    return _emit(report, args, {"gammas": dirac.gammas_to_json(g)})


def _transport_pair(args, cfg) -> maxwell.MaxwellPair:
    if args.e_field or args.h_field:
        if not (args.e_field and args.h_field):
            raise ConfigError("--E and --H must be given together")
        return maxwell.MaxwellPair(parse_field_literal(args.e_field, cfg.mode),
                                   parse_field_literal(args.h_field, cfg.mode))
    if cfg.fields is not None:
        return cfg.fields
    if not cfg.plane_waves:
        raise ConfigError("no fields: pass --E/--H or configure fields or plane_waves")
    direction, pol = cfg.plane_waves[0]
    return maxwell.plane_wave(cfg.medium, direction, pol)


def cmd_transport(args) -> int:
    cfg = _load(args)
    pair = _transport_pair(args, cfg)
    f = bridge.maxwell_to_dirac(pair, cfg.medium, cfg.dirac, cfg.tolerance)
    alpha = dirac.alpha_vector(cfg.dirac)
    kappa = maxwell.wavenumber(cfg.medium)
    psi_res, phi_res = bridge.decomposition_residuals(f, kappa, alpha)
    report = VerificationReport(conventions={"mode": cfg.mode})
    report.extend([
        check_zero("transport.dirac", "D_alpha f = 0",
                   apply_operator(dirac.dirac_quaternionic(cfg.dirac), f), cfg.mode, cfg.tolerance),
        check_zero("transport.decompose_psi", "(D + kappa) P+ f = 0", psi_res, cfg.mode, cfg.tolerance),
        check_zero("transport.decompose_phi", "(D - kappa) P- f = 0", phi_res, cfg.mode, cfg.tolerance),
    ])
    return _emit(report, args, {"f": field_to_json(f)})


def cmd_dispersion(args) -> int:
    cfg = _load(args)
    if args.record:
        text = args.record
        if text.startswith("@"):
            with open(text[1:]) as fh:
                text = fh.read()
        record = bridge.DispersionRecord.from_json(json.loads(text), cfg.mode)
    else:
        eps_r = cfg.medium.eps_r if args.eps_r is None else complex_from_json(args.eps_r, cfg.mode)
        mu_r = cfg.medium.mu_r if args.mu_r is None else complex_from_json(args.mu_r, cfg.mode)
        record = bridge.DispersionRecord.from_dirac(cfg.dirac, eps_r, mu_r)
    report = VerificationReport(conventions={"mode": record.mode})
    report.extend(bridge.dispersion_check(record, cfg.tolerance))
    return _emit(report, args, {"record": record.to_json()})


def cmd_eval(args) -> int:
    mode = args.mode or EXACT
    op = parse_operator(args.operator, mode)
    f = parse_field_literal(args.field, mode)
    out = apply_operator(op, f)
    extra = {
        "operator": format_diff_operator(op),
        "mode": mode,
        "result": field_to_json(out),
        "residual_norms": [out.component(i).amplitude_norm() for i in range(4)],
    }
    sys.stdout.write(json.dumps(extra, indent=2) + "\n" if args.format == "json" else
                     f"operator: {extra['operator']}\nresidual norms: {extra['residual_norms']}\n")
    # eval reports norms; the exit status only reflects parse and evaluation errors
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "gamma": cmd_gamma,
    "transport": cmd_transport,
    "dispersion": cmd_dispersion,
    "eval": cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ConfigError, ParseError, ModeMismatchError, NotExactError, bridge.RelationViolated,
            dirac.ReconstructionError, ValueError, OSError) as exc:
        sys.stderr.write(f"quatbridge {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
