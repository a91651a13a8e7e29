"""Command-line driver.

Exit codes: 0 on success, 1 when a verification fails, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional

from . import formulas, localization, macdonald, partitions, reporting
from .localization import Variant
from .partitions import Partition, partitions_of
from .qt_coeff import ParseError, QTFraction
from .reporting import RunConfig, canonical_json, latex_symfun
from .symfun import SymFun

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2


def _symfun_payload(f: SymFun) -> Dict:
    ordered = sorted(f.coeffs, key=lambda p: p.parts, reverse=True)
    return {
        "basis": f.basis,
        "degree": f.degree,
        "coeffs": {str(lam): f.coeffs[lam].render() for lam in ordered},
    }


def _emit_symfun(f: SymFun, config: RunConfig, payload_extra: Dict) -> None:
    if config.output_format == "plain":
        print(f.render())
    elif config.output_format == "latex":
        print(latex_symfun(f))
    else:
        payload = {"schema": 1, **payload_extra, "value": _symfun_payload(f)}
        sys.stdout.write(canonical_json(payload))


def _emit_checks(name: str, checks: List[tuple], config: RunConfig) -> int:
    """checks: list of (label, passed: bool). Returns the exit code."""
    ok = all(passed for _, passed in checks)
    if config.output_format == "json":
        payload = {
            "schema": 1,
            "command": name,
            "checks": {label: bool(passed) for label, passed in checks},
            "ok": ok,
        }
        sys.stdout.write(canonical_json(payload))
    else:
        for label, passed in checks:
            print(f"{label}: {'pass' if passed else 'FAIL'}")
    return EXIT_OK if ok else EXIT_VERIFICATION


def _parse_mu(text: str) -> Partition:
    try:
        return Partition.from_string(text)
    except (ValueError, partitions.PartitionError) as exc:
        raise SystemExit(_usage_error(f"invalid partition {text!r}: {exc}"))


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _require_positive(n: int) -> None:
    if n < 1:
        raise SystemExit(_usage_error(f"n must be a positive integer, got {n}"))


def _cached_table(n: int, config: RunConfig) -> macdonald.MacdonaldTable:
    path = macdonald.cache_path(n, config.cache_dir)
    if path.exists():
        return macdonald.cache_load(n, config.cache_dir)
    return macdonald.macdonald_table(n)


def cmd_macdonald(args, config: RunConfig) -> int:
    mu = _parse_mu(args.mu)
    table = _cached_table(mu.size, config)
    _emit_symfun(table.entries[mu], config, {"command": "macdonald", "mu": str(mu)})
    return EXIT_OK


def cmd_nabla(args, config: RunConfig) -> int:
    _require_positive(args.n)
    kind = "e_n" if args.target == "e" else "signed_p_n"
    f = macdonald.nabla_target(kind, args.n)
    _emit_symfun(f, config, {"command": "nabla", "target": args.target, "n": args.n})
    return EXIT_OK


def cmd_formulas(args, config: RunConfig) -> int:
    _require_positive(args.n)
    n = args.n
    checks = []
    wanted = ("en", "pn", "refined") if args.check == "all" else (args.check,)
    if "en" in wanted:
        checks.append(
            (f"nabla e_{n} equals closed form", formulas.rhs_en(n) == macdonald.nabla_target("e_n", n))
        )
    if "pn" in wanted:
        checks.append(
            (
                f"signed nabla p_{n} equals closed form",
                formulas.rhs_pn(n) == macdonald.nabla_target("signed_p_n", n),
            )
        )
    if "refined" in wanted:
        checks.append(
            (
                f"refined closed form equals signed nabla p_{n}",
                formulas.rhs_pn_refined(n) == macdonald.nabla_target("signed_p_n", n),
            )
        )
        checks.append(
            (
                f"term-by-term weight identity at n={n}",
                all(formulas.verify_term(mu) for mu in partitions_of(n)),
            )
        )
    return _emit_checks("formulas", checks, config)


def cmd_localize(args, config: RunConfig) -> int:
    _require_positive(args.n)
    variant = Variant.F if args.variant == "F" else Variant.FPRIME
    override = config.residue_override
    chi = localization.euler_characteristic(args.n, variant, override)
    if override is not None:
        _emit_symfun(
            chi,
            config,
            {"command": "localize", "n": args.n, "variant": args.variant},
        )
        return EXIT_OK
    report = localization.compare_with_nabla(args.n, variant)
    if config.output_format == "json":
        payload = {
            "schema": 1,
            "command": "localize",
            "n": args.n,
            "variant": args.variant,
            "matches": report.matches,
            "value": _symfun_payload(chi),
        }
        sys.stdout.write(canonical_json(payload))
    elif config.output_format == "latex":
        print(latex_symfun(chi))
        if not report.matches:
            print("% " + report.describe())
    else:
        print(chi.render())
        print(report.describe())
    return EXIT_OK if report.matches else EXIT_VERIFICATION


def cmd_positivity(args, config: RunConfig) -> int:
    _require_positive(args.n)
    f = macdonald.nabla_target("signed_p_n", args.n)
    report = reporting.schur_positivity(f, f"signed nabla p_{args.n}")
    if config.output_format == "json":
        payload = {
            "schema": 1,
            "command": "positivity",
            "n": args.n,
            "positive": report.positive,
            "coeffs": {
                str(lam): poly.render() for lam, poly in report.coefficients.items()
            },
        }
        if report.violation is not None:
            lam, (a, b), coeff = report.violation
            payload["violation"] = {
                "partition": str(lam),
                "exponents": [a, b],
                "coefficient": str(coeff),
            }
        sys.stdout.write(canonical_json(payload))
    else:
        verdict = "Schur-positive" if report.positive else "NOT Schur-positive"
        print(f"{report.description}: {verdict}")
        if report.violation is not None:
            lam, (a, b), coeff = report.violation
            print(f"  first violation at s[{lam}], monomial q^{a}*t^{b}: {coeff}")
    return EXIT_OK if report.positive else EXIT_VERIFICATION


def _verify_checks(n: int) -> List[tuple]:
    checks: List[tuple] = []
    try:
        macdonald.verify_axioms(macdonald.macdonald_table(n))
        checks.append(("Macdonald axioms", True))
    except macdonald.MacdonaldError:
        checks.append(("Macdonald axioms", False))
    checks.append(
        (
            "partition statistics match cell sums",
            all(
                partitions.n_stat(mu)
                == sum(mu.cell_stats(c).leg for c in mu.cells())
                and partitions.n_stat(mu.conjugate())
                == sum(mu.cell_stats(c).arm for c in mu.cells())
                for mu in partitions_of(n)
            ),
        )
    )
    checks.append(
        ("nabla e_n closed form", formulas.rhs_en(n) == macdonald.nabla_target("e_n", n))
    )
    signed = macdonald.nabla_target("signed_p_n", n)
    checks.append(("signed nabla p_n closed form", formulas.rhs_pn(n) == signed))
    checks.append(("refined closed form", formulas.rhs_pn_refined(n) == signed))
    checks.append(
        (
            "term-by-term weight identity",
            all(formulas.verify_term(mu) for mu in partitions_of(n)),
        )
    )
    for variant in (Variant.F, Variant.FPRIME):
        checks.append(
            (
                f"localization variant {variant.value}",
                localization.compare_with_nabla(n, variant).matches,
            )
        )
    checks.append(
        ("Schur positivity", reporting.schur_positivity(signed).positive)
    )
    return checks


def cmd_verify(args, config: RunConfig) -> int:
    _require_positive(args.n)
    return _emit_checks("verify", _verify_checks(args.n), config)


def cmd_cache(args, config: RunConfig) -> int:
    if args.cache_command != "rebuild":
        return _usage_error(f"unknown cache command {args.cache_command!r}")
    _require_positive(args.max_n)
    paths = []
    for n in range(1, args.max_n + 1):
        paths.append(macdonald.cache_store(macdonald.macdonald_table(n), config.cache_dir))
    if config.output_format == "json":
        payload = {
            "schema": 1,
            "command": "cache rebuild",
            "files": [str(p) for p in paths],
        }
        sys.stdout.write(canonical_json(payload))
    else:
        for p in paths:
            print(f"wrote {p}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nablaqt",
        description=(
            "Exact computations with modified Macdonald polynomials, the "
            "nabla operator, and Hilbert-scheme fixed-point localization."
        ),
    )
    # The shared flags are accepted both before and after the subcommand:
    # the main parser supplies the defaults, the per-subcommand copies use
    # SUPPRESS so they never clobber a value given up front.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("plain", "json", "latex"),
        default=argparse.SUPPRESS,
        help="output format (default: plain)",
    )
    common.add_argument(
        "--cache-dir",
        default=argparse.SUPPRESS,
        help=f"Macdonald table cache directory (default: ${reporting.CACHE_DIR_ENV} or ~/.cache/nablaqt)",
    )
    parser.add_argument(
        "--format", choices=("plain", "json", "latex"), default="plain"
    )
    parser.add_argument("--cache-dir", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "macdonald",
        parents=[common],
        help="Schur expansion of a modified Macdonald polynomial",
    )
    p.add_argument("--mu", required=True, help="partition, e.g. 2,1")
    p.set_defaults(func=cmd_macdonald)

    p = sub.add_parser("nabla", parents=[common], help="Schur expansion of nabla e_n or the signed nabla p_n")
    p.add_argument("--target", choices=("e", "p"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_nabla)

    p = sub.add_parser("formulas", parents=[common], help="check the closed-form Macdonald expansions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", choices=("en", "pn", "refined", "all"), default="all")
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("localize", parents=[common], help="fixed-point Euler characteristic and nabla cross-check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=("F", "Fprime"), default="F")
    p.add_argument(
        "--residue-factor",
        default=None,
        help="override the residue trace factor (default: n); disables the nabla comparison",
    )
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("positivity", parents=[common], help="Schur positivity of the signed nabla p_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_positivity)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check at degree n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", parents=[common], help="manage the on-disk Macdonald table cache")
    p.add_argument("cache_command", choices=("rebuild",))
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_cache)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {}
    if args.cache_dir is not None:
        overrides["cache_dir"] = args.cache_dir
    residue = getattr(args, "residue_factor", None)
    if residue is not None:
        try:
            overrides["residue_override"] = QTFraction.parse(residue)
        except ParseError as exc:
            return _usage_error(f"invalid residue factor {residue!r}: {exc}")
    config = RunConfig(output_format=args.format, **overrides)
    try:
        return args.func(args, config)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except macdonald.CacheError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
