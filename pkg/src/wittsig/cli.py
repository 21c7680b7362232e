"""Command-line front end: ``wittsig <command> ...``.

Data goes to stdout (or ``--output``) in json, csv or text; progress goes to
stderr.  Exit codes: 0 all checks pass, 1 a verification failed, 2 usage
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass, fields, replace
from typing import Any, Callable, Iterable

from . import __version__
from .exact.certify import DEFAULT_CAP_BITS, DEFAULT_START_BITS, PrecisionExhausted

log = logging.getLogger("wittsig")

CONFIG_ENV = "WITTSIG_CONFIG"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    precision_start_bits: int = DEFAULT_START_BITS
    precision_cap_bits: int = DEFAULT_CAP_BITS
    conductor_guard: int = 10**6
    format: str = "json"
    output: str | None = None
    threads: int = 1

    def validate(self) -> RunConfig:
        if not 2 <= self.precision_start_bits <= self.precision_cap_bits:
            raise UsageError(
                f"need 2 <= precision_start_bits <= precision_cap_bits, "
                f"got {self.precision_start_bits}, {self.precision_cap_bits}"
            )
        if self.conductor_guard < 1:
            raise UsageError("conductor_guard must be positive")
        if self.format not in ("json", "csv", "text"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.threads < 1:
            raise UsageError("threads must be at least 1")
        return self

    def guard(self, conductor: int) -> None:
        if conductor > self.conductor_guard:
            raise UsageError(f"working conductor {conductor} exceeds conductor_guard {self.conductor_guard}")


def load_config(path: str | None) -> RunConfig:
    """Defaults, overridden by a JSON file (``path`` or $WITTSIG_CONFIG)."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return RunConfig()
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    known = {f.name for f in fields(RunConfig)}
    unknown = set(raw) - known
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    return RunConfig(**raw)


# ---------------------------------------------------------------------------
# output


def emit(rows: list[dict[str, Any]], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row, sort_keys=True) + "\n")
    elif fmt == "csv":
        if not rows:
            return
        keys = list(rows[0])
        w = csv.writer(out)
        w.writerow(keys)
        for row in rows:
            w.writerow([_cell(row.get(k)) for k in keys])
    else:
        if not rows:
            return
        keys = list(rows[0])
        cells = [[_cell(r.get(k)) for k in keys] for r in rows]
        widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
        out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
        for c in cells:
            out.write("  ".join(v.ljust(w) for v, w in zip(c, widths)).rstrip() + "\n")


def _cell(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return "" if v is None else str(v)


# ---------------------------------------------------------------------------
# commands


def cmd_alcove(args, cfg: RunConfig) -> tuple[list[dict], bool]:
    from .roots import alcove_D, level_pairing

    rows = [{"coords2": list(w.coords2), "level_pairing": level_pairing(w)} for w in alcove_D(args.rank)]
    log.info("alcove of D_%d: %d weights", args.rank, len(rows))
    return rows, True


def cmd_invariants(args, cfg: RunConfig) -> tuple[list[dict], bool]:
    from .invariants import category_data, central_charge, decimal_str, gauss_sum, twist_conductor

    r = args.rank
    cfg.guard(twist_conductor(r))
    log.info("computing category data for C_%d", r)
    data = category_data(r, cfg.threads)
    m = twist_conductor(r)
    if args.objects:
        rows = [
            {
                "coords2": list(lam.coords2),
                "twist_numerator": int(t * m),
                "twist_denominator": m,
                "qdim": decimal_str(d, 15),
            }
            for lam, t, d in zip(data.alcove, data.twist_exponents, data.qdims)
        ]
        return rows, True
    n2 = data.t_order
    s = (n2 // (2 * r - 1)).bit_length() - 1
    row: dict[str, Any] = {
        "schema_version": 1,
        "rank": r,
        "objects": len(data.alcove),
        "t_order": n2,
        "t_order_2_power": s,
        "dim": decimal_str(data.dim_total, 50),
    }
    for n in args.n:
        log.info("gauss sum tau_%d", n)
        tau = gauss_sum(r, n)
        row[f"tau_{n}"] = _complex_str(tau)
        if not tau.is_zero():
            xi = central_charge(r, n)
            row[f"xi_{n}"] = _complex_str(xi)
    return [row], True


def _complex_str(x) -> str:
    from mpmath import nstr

    z = x.to_complex(40)
    return f"{nstr(z.real, 20)}{'+' if z.imag >= 0 else '-'}{nstr(abs(z.imag), 20)}i"


def cmd_signature(args, cfg: RunConfig) -> tuple[list[dict], bool]:
    from .signature import family_conductor, signature

    n = family_conductor(args.family, args.rank)
    cfg.guard(n)
    rows = []
    for k in args.k:
        s = signature(args.family, args.rank, k, cfg.precision_cap_bits, cfg.precision_start_bits)
        rows.append({"sign": int(s), "family": args.family.upper(), "rank": args.rank, "k": k, "conductor": n})
    return rows, True


def cmd_anisotropy(args, cfg: RunConfig) -> tuple[list[dict] | str, bool]:
    from .anisotropy import VERDICT_OK, anisotropy_report

    log.info("running the D_4 anisotropy pipeline")
    rep = anisotropy_report(cfg.threads)
    ok = rep.verdict == VERDICT_OK
    if cfg.format == "text":
        return rep.to_text(), ok
    if cfg.format == "csv":
        return [c.to_dict() for c in rep.candidates], ok
    return [rep.to_dict()], ok


# --- verify ---------------------------------------------------------------


def _reports_to_rows(reports) -> list[dict]:
    from .signature import _jsonable

    return [json.loads(json.dumps(r.to_dict(), default=_jsonable)) for r in reports]


def _v_periodicity(a, cfg):
    from .signature import check_periodicity_D

    return [check_periodicity_D(r, a.window) for r in (a.rank or [4])]


def _sign_claim(claim, cases):
    from .signature import Report, _status, signature_D

    out = []
    for r, k in cases:
        s = int(signature_D(r, k))
        out.append(Report(claim, {"rank": r, "k": k}, -1, s, _status(s == -1)))
    return out


def _v_d_odd(a, cfg):
    ranks = a.rank or [5, 13]
    for r in ranks:
        if r % 8 != 5:
            raise UsageError(f"prop-d-odd-sign needs r = 5 (mod 8), got {r}")
    return _sign_claim("prop-d-odd-sign", [(r, r) for r in ranks])


def _v_d_even(a, cfg):
    cases = []
    for r in a.rank or [4, 6]:
        if r % 8 == 4:
            cases.append((r, 2 * r + 1))
        elif r % 8 == 6:
            cases.append((r, r - 1))
        else:
            raise UsageError(f"prop-d-even-sign needs r = 4 or 6 (mod 8), got {r}")
    return _sign_claim("prop-d-even-sign", cases)


def _v_bd(a, cfg):
    from .signature import verify_BD_separation

    return [verify_BD_separation(r) for r in (a.rank or [12])]


def _v_ind_odd(a, cfg):
    from .signature import verify_independence_D_odd

    primes = a.primes or [41, 73]
    return [verify_independence_D_odd(primes, pin) for pin in [None, *range(len(primes))]]


def _v_ind_even(a, cfg):
    from .signature import verify_independence_D_even

    p7 = a.primes7 if a.primes7 is not None else [7]
    p11 = a.primes11 if a.primes11 is not None else [11]
    pins = [None] + [(0, i) for i in range(len(p7))] + [(1, i) for i in range(len(p11))]
    return [verify_independence_D_even(p7, p11, pin) for pin in pins]


def _v_pointed(a, cfg):
    from .signature import Report, _status, ising_obstruction, verify_jacobi_conditions, verify_pointed_jacobi

    bad = [[m, l] for m in range(1, 16, 2) for l in range(8) if ising_obstruction(m, l)]
    ising = Report("thm-pointed-ising", {"m": "odd 1..15", "ell": "0..7"}, [], bad, _status(not bad))
    return [verify_pointed_jacobi(a.p_max), ising, verify_jacobi_conditions(a.primes or [7, 23])]


def _v_s_parity(a, cfg):
    from .signature import verify_s_parity

    return [verify_s_parity(a.r_max)]


def _v_sine(a, cfg):
    from .signature import verify_sine_galois

    return [verify_sine_galois(a.m_max)]


def _v_b_shift(a, cfg):
    from .signature import check_shift_B

    return [check_shift_B(b, 1, range(4)) for b in (a.rank or [3])]


def _v_dimension(a, cfg):
    from .invariants import global_dim, sqrt_dim_formula_D
    from .signature import Report, _status

    out = []
    for r in a.rank or [2, 3, 4]:
        d = sqrt_dim_formula_D(r)
        ok = global_dim(r) == d * d * (8 if r % 2 else 16)
        out.append(Report("dimension-check", {"rank": r}, True, ok, _status(ok)))
    return out


def _v_central(a, cfg):
    from .invariants import central_charge, expected_central_charge
    from .signature import Report, _status

    out = []
    for r in a.rank or [2, 3, 4]:
        ok = central_charge(r, 1) == expected_central_charge(r)
        out.append(Report("central-charge", {"rank": r}, f"exp(pi i {r * r}/4)", ok, _status(ok)))
    return out


def _v_t_order(a, cfg):
    from .invariants import t_order
    from .signature import Report, _status

    out = []
    for r in a.rank or [3, 4, 5]:
        n = t_order(r)
        odd = n
        while odd % 2 == 0:
            odd //= 2
        two = n // odd
        ok = odd == 2 * r - 1 and two <= 16 and (r % 2 == 0 or two == 16)
        out.append(Report("t-order", {"rank": r}, "N_r = 2^s (2r-1), s <= 4; s = 4 for odd r", n, _status(ok)))
    return out


def _v_aniso(a, cfg):
    from .anisotropy import VERDICT_OK, anisotropy_report
    from .signature import Report, _status

    rep = anisotropy_report(cfg.threads)
    d = rep.to_dict()
    computed = {k: d[k] for k in ("bounds", "totally_positive", "norm_integral", "final_ratio", "verdict")}
    return [Report("anisotropy-d4", {"rank": 4}, VERDICT_OK, computed, _status(rep.verdict == VERDICT_OK))]


CLAIMS: dict[str, Callable] = {
    "periodicity": _v_periodicity,
    "prop-d-odd-sign": _v_d_odd,
    "prop-d-even-sign": _v_d_even,
    "prop-bd-separation": _v_bd,
    "thm-independence-odd": _v_ind_odd,
    "thm-independence-even": _v_ind_even,
    "thm-pointed-ising": _v_pointed,
    "lemma-s-parity": _v_s_parity,
    "lemma-sine-galois": _v_sine,
    "lemma-b-shift": _v_b_shift,
    "dimension-check": _v_dimension,
    "central-charge": _v_central,
    "t-order": _v_t_order,
    "anisotropy-d4": _v_aniso,
}


def cmd_verify(args, cfg: RunConfig) -> tuple[list[dict], bool]:
    if args.claim not in CLAIMS:
        raise UsageError(f"unknown claim id {args.claim!r}; known: {', '.join(sorted(CLAIMS))}")
    log.info("verifying %s", args.claim)
    reports = CLAIMS[args.claim](args, cfg)
    ok = all(r.ok for r in reports)
    rows = _reports_to_rows(reports)
    if cfg.format == "text":
        rows = [{"claim": r["claim"], "status": r["status"], "parameters": r["parameters"]} for r in rows]
    return rows, ok


# ---------------------------------------------------------------------------
# parser


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    # global options are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help=f"JSON config file (default: ${CONFIG_ENV})")
    common.add_argument("--format", choices=["json", "csv", "text"])
    common.add_argument("--output", help="write data here instead of stdout")
    common.add_argument("--precision-start", type=_positive, dest="precision_start_bits")
    common.add_argument("--precision-cap", type=_positive, dest="precision_cap_bits")
    common.add_argument("--conductor-guard", type=_positive, dest="conductor_guard")
    common.add_argument("--threads", type=_positive)
    common.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")

    p = argparse.ArgumentParser(
        prog="wittsig", description="Witt-group invariants of so(2r)_{2r} and friends.", parents=[common]
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("alcove", parents=[common], help="list the level-2r alcove of D_r")
    a.add_argument("--rank", type=_positive, required=True)
    a.set_defaults(func=cmd_alcove)

    i = sub.add_parser("invariants", parents=[common], help="T-order, global dimension, Gauss sums of C_r")
    i.add_argument("--rank", type=_positive, required=True)
    i.add_argument("--n", type=int, nargs="*", default=[1])
    i.add_argument("--objects", action="store_true", help="per-object twists and qdims instead")
    i.set_defaults(func=cmd_invariants)

    s = sub.add_parser("signature", parents=[common], help="Witt signature eps(sigma_k)")
    s.add_argument("--family", choices=["D", "B", "d", "b"], required=True)
    s.add_argument("--rank", type=_positive, required=True)
    s.add_argument("--k", type=int, nargs="+", required=True)
    s.set_defaults(func=cmd_signature)

    v = sub.add_parser("verify", parents=[common], help="run a verifier battery", description="claims: " + ", ".join(CLAIMS))
    v.add_argument("claim")
    v.add_argument("--rank", type=_positive, nargs="+")
    v.add_argument("--window", type=_positive, default=300)
    v.add_argument("--primes", type=_positive, nargs="+")
    v.add_argument("--primes7", type=_positive, nargs="*")
    v.add_argument("--primes11", type=_positive, nargs="*")
    v.add_argument("--m-max", type=_positive, default=30)
    v.add_argument("--r-max", type=_positive, default=200)
    v.add_argument("--p-max", type=_positive, default=100)
    v.set_defaults(func=cmd_verify)

    an = sub.add_parser("anisotropy", parents=[common], help="the D_4 anisotropy pipeline")
    an.set_defaults(func=cmd_anisotropy)
    return p


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    logging.basicConfig(
        level=logging.WARNING if getattr(args, "quiet", False) else logging.INFO,
        format="wittsig: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        cfg = load_config(getattr(args, "config", None))
        overrides = {
            k: getattr(args, k)
            for k in ("format", "output", "precision_start_bits", "precision_cap_bits", "conductor_guard", "threads")
            if getattr(args, k, None) is not None
        }
        cfg = replace(cfg, **overrides).validate()
        result, ok = args.func(args, cfg)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"wittsig: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionExhausted, AssertionError) as exc:
        print(f"wittsig: verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL

    out = open(cfg.output, "w", encoding="utf-8", newline="") if cfg.output else sys.stdout
    try:
        if isinstance(result, str):
            out.write(result)
        else:
            emit(result, cfg.format, out)
    finally:
        if out is not sys.stdout:
            out.close()
    if not ok:
        log.warning("verification failed")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
