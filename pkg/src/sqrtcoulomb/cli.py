"""Command-line front end: spectra by every method as CSV or JSON tables."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import hydrogen, perturbation, reference, solver, verify
from .quantum import (ConvergenceError, CouplingSign, DomainError, PhysicalParams,
                      QuantumNumbers, hydrogen_states, twice)
from .records import FIELDS, Method, SpectrumEntry

DEFAULT_ALPHA = 7.2973525693e-3
COMMANDS = ("spectrum", "dirac", "kg", "solve", "converge", "compare", "scan-alpha", "verify")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(1)


def _int_range(text):
    """'3' -> [3]; '1-4' -> [1, 2, 3, 4]."""
    try:
        lo, _, hi = text.partition("-")
        lo = int(lo)
        hi = int(hi) if hi else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or range a-b, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _half_list(text):
    """Comma-separated half-odd-integers such as '0.5,1.5' or '1/2'."""
    out = []
    for part in text.split(","):
        num, _, den = part.partition("/")
        try:
            value = float(num) / (float(den) if den else 1.0)
            two = twice(value, "j")
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"invalid j value {part!r}")
        if two < 1 or two % 2 != 1:
            raise argparse.ArgumentTypeError(f"j={part!r} must be a positive half-odd-integer")
        out.append(two)
    return out


def _float_list(text):
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _sign(text):
    try:
        return CouplingSign.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    parser = _Parser(prog="sqrtcoulomb", description=__doc__)
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    parser.add_argument("--alphas", type=_float_list, help="alpha grid for scan-alpha")
    parser.add_argument("--mass", type=float, default=1.0)
    parser.add_argument("--n", type=_int_range, help="principal quantum number or range a-b")
    parser.add_argument("--l", type=_int_range, help="orbital quantum number or range a-b")
    parser.add_argument("--j", type=_half_list, help="total angular momentum, comma-separated")
    parser.add_argument("--n-max", type=int, help="largest n for state lists")
    parser.add_argument("--sign", type=_sign, default=CouplingSign.PLUS)
    parser.add_argument("--N", type=int, help="basis size (solver, fixed-point)")
    parser.add_argument("--sizes", type=_float_list, help="basis sizes for converge, e.g. 150,200")
    parser.add_argument("--beta", type=float, help="basis scale override (skips the variational scan)")
    parser.add_argument("--spinless", action="store_true", help="solve the spin-0 channel with c = l(l+1)")
    parser.add_argument("--iterative", action="store_true", help="kg: fixed-point solve instead of the closed form")
    parser.add_argument("--methods", default="PERTURBATIVE,DIRAC,KG", help="scan-alpha methods, comma-separated")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--output", help="output path (default: standard output)")
    parser.add_argument("--seedless", action="store_true", help="accepted for compatibility; no RNG is ever used")
    return parser


def _validate(args):
    if not args.mass > 0 or not np.isfinite(args.mass):
        raise UsageError("--mass must be positive")
    alphas = args.alphas if args.alphas is not None else [args.alpha]
    for a in alphas:
        if not 0 < a < 1:
            raise UsageError(f"--alpha{'s' if args.alphas else ''} values must lie in (0, 1), got {a}")
    if args.n_max is not None and args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    if args.n is not None and min(args.n) < 1:
        raise UsageError("--n must be >= 1")
    if args.l is not None and min(args.l) < 0:
        raise UsageError("--l must be >= 0")
    if args.N is not None and args.N < 1:
        raise UsageError("--N must be >= 1")
    if args.beta is not None and not args.beta > 0:
        raise UsageError("--beta must be positive")
    if args.sizes is not None:
        if len(args.sizes) < 2 or any(s != int(s) or s < 1 for s in args.sizes):
            raise UsageError("--sizes needs at least two positive integers")
        args.sizes = [int(s) for s in args.sizes]
    methods = []
    for name in args.methods.split(","):
        try:
            methods.append(Method[name.strip().upper()])
        except KeyError:
            raise UsageError(f"--methods: unknown method {name!r}")
    args.methods = methods
    return alphas


def _states(args):
    """Hydrogen states selected by --n/--l/--j/--n-max."""
    if args.n_max is not None:
        n_max = args.n_max
    elif args.n is not None:
        n_max = max(args.n)
    else:
        raise UsageError("state selection needs --n or --n-max")
    out = [qn for qn in hydrogen_states(n_max)
           if (args.n is None or qn.n in args.n)
           and (args.l is None or qn.l in args.l)
           and (args.j is None or qn.two_j in args.j)]
    if not out:
        raise UsageError("--n/--l/--j select no valid state")
    return out


def _single_state(args):
    """One (n, l, j); l defaults to j - 1/2 and j to l + 1/2."""
    if args.n is None or len(args.n) != 1:
        raise UsageError("--n must name a single state")
    n = args.n[0]
    l = None if args.l is None else args.l
    j = None if args.j is None else args.j
    if (l is not None and len(l) != 1) or (j is not None and len(j) != 1):
        raise UsageError("--l and --j must be single values here")
    if l is None and j is None:
        raise UsageError("need --j or --l")
    two_j = j[0] if j is not None else 2 * l[0] + 1
    l = l[0] if l is not None else (two_j - 1) // 2
    try:
        return QuantumNumbers(n, l, two_j)
    except ValueError as exc:
        raise UsageError(f"--n/--l/--j: {exc}")


def _entry(method, qn, params, binding, sign=CouplingSign.PLUS, estimate=0.0):
    return SpectrumEntry(method, qn.n, qn.l, qn.two_j, params.alpha, binding, estimate, sign)


def cmd_spectrum(args, params):
    return [_entry(Method.PERTURBATIVE, qn, params, perturbation.energy_alpha4(qn.n, qn.j, params), args.sign)
            for qn in _states(args)], {}


def cmd_dirac(args, params):
    return [_entry(Method.DIRAC, qn, params, reference.dirac_binding(qn.n, qn.j, params), args.sign)
            for qn in _states(args)], {}


def cmd_kg(args, params):
    rows = []
    for qn in _states(args):
        channel = reference.KGChannel.of(qn.n_r, qn.l, qn.j, params.alpha, args.sign)
        if args.iterative:
            basis = reference.kg_basis(channel, params, args.N or 80, args.beta)
            energy = reference.kg_iterative_solve(channel, params, basis)
        else:
            energy = reference.kg_analytic_energy(channel, params)
        rows.append(_entry(Method.KG, qn, params, energy - params.m, args.sign))
    return rows, {}


def _channel(args):
    if args.spinless:
        if args.l is None or len(args.l) != 1 or args.j is not None:
            raise UsageError("--spinless needs a single --l and no --j")
        return solver.ChannelSpec.spinless(args.l[0])
    if args.j is None or len(args.j) != 1:
        raise UsageError("need a single --j (or --spinless with --l)")
    two_j = args.j[0]
    l = (two_j - 1) // 2 if args.l is None else args.l[0]
    if args.l is not None and len(args.l) != 1:
        raise UsageError("--l must be a single value")
    try:
        return solver.ChannelSpec.for_state(l, two_j / 2, args.sign)
    except ValueError as exc:
        raise UsageError(f"--l/--j: {exc}")


def cmd_solve(args, params):
    channel = _channel(args)
    N = args.N or 200
    if channel.spinless_l is not None:
        rows = solver.solve_spinless(channel.l, params, N, args.beta)
    else:
        rows = solver.solve_channel(channel.j, channel.branch, channel.sign, params, N, args.beta)
    if args.n is not None:
        rows = [r for r in rows if r.n in args.n]
    return rows, {}


def cmd_converge(args, params):
    channel = _channel(args)
    sizes = args.sizes or [150, 200]
    level = 0 if args.n is None else args.n[0] - channel.l - 1
    if level < 0:
        raise UsageError("--n must exceed --l")
    grid = None if args.beta is None else [args.beta]
    study = solver.convergence_study(channel, params, sizes, grid, level)
    for flag in study.flags:
        print(f"warning: {flag}", file=sys.stderr)
    if level >= len(study.estimates):
        raise ConvergenceError(f"level {level} is not bound at N={max(sizes)}")
    extra = {"study": {"sizes": list(study.sizes), "betas": list(study.betas), "best_beta": study.best_beta,
                       "level": study.level, "convergence_estimate": study.convergence_estimate,
                       "flags": list(study.flags)}}
    return study.estimates, extra


def cmd_compare(args, params):
    qn = _single_state(args)
    N = args.N or 200
    sizes = args.sizes or (N - 50 if N > 100 else max(2, N // 2), N)
    config = solver.SolverConfig(tuple(sizes), None if args.beta is None else (args.beta,))
    rows, diffs = solver.compare_methods(qn.n, qn.l, qn.j, params, config, args.sign)
    table = {a.value: {b.value: d for (a2, b), d in diffs.items() if a2 == a} for a in [r.method for r in rows]}
    return rows, {"differences": table}


def cmd_scan_alpha(args, params):
    qn = _single_state(args)
    rows = []
    for alpha in (args.alphas or [args.alpha]):
        p = PhysicalParams(args.mass, alpha)
        for method in args.methods:
            if method is Method.NONREL:
                b = hydrogen.energy_nonrel(qn.n, p)
            elif method is Method.PERTURBATIVE:
                b = perturbation.energy_alpha4(qn.n, qn.j, p)
            elif method is Method.DIRAC:
                b = reference.dirac_binding(qn.n, qn.j, p)
            elif method is Method.KG:
                ch = reference.KGChannel.of(qn.n_r, qn.l, qn.j, alpha, args.sign)
                b = reference.kg_analytic_energy(ch, p) - p.m
            else:
                ch = solver.ChannelSpec.for_state(qn.l, qn.j, args.sign)
                study = solver.convergence_study(ch, p, args.sizes or [150, 200], None, qn.n_r)
                if qn.n_r >= len(study.estimates):
                    raise ConvergenceError(f"state not bound at alpha={alpha}")
                est = study.estimates[qn.n_r]
                rows.append(_entry(method, qn, p, est.binding, args.sign, est.convergence_estimate))
                continue
            rows.append(_entry(method, qn, p, b, args.sign))
    return rows, {"alphas": list(args.alphas or [args.alpha])}


HANDLERS = {
    "spectrum": cmd_spectrum,
    "dirac": cmd_dirac,
    "kg": cmd_kg,
    "solve": cmd_solve,
    "converge": cmd_converge,
    "compare": cmd_compare,
    "scan-alpha": cmd_scan_alpha,
}


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def render(rows, params, fmt, extra=None):
    rows = sorted(rows, key=SpectrumEntry.sort_key)
    records = [r.as_row() for r in rows]
    if fmt == "json":
        doc = {"params": {"alpha": params.alpha, "mass": params.m}, "levels": records}
        doc.update(extra or {})
        return json.dumps(doc, indent=2) + "\n"
    diffs = (extra or {}).get("differences")
    header = list(FIELDS)
    if diffs:
        header += [f"diff_{name}" for name in sorted(diffs)]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        line = [_fmt(rec[f]) for f in FIELDS]
        if diffs:
            line += [_fmt(diffs[rec["method"]][name]) for name in sorted(diffs)]
        writer.writerow(line)
    return buf.getvalue()


def run_verify(out):
    checks = verify.run_all()
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        out.write(f"{status} {c.suite}: {c.name} ({c.detail})\n" if c.detail else f"{status} {c.suite}: {c.name}\n")
    passed = sum(c.passed for c in checks)
    out.write(f"{passed}/{len(checks)} checks passed\n")
    return 0 if passed == len(checks) else 1


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        alphas = _validate(args)
        if args.command == "verify":
            buf = io.StringIO()
            code = run_verify(buf)
            _emit(buf.getvalue(), args.output)
            return code
        params = PhysicalParams(args.mass, alphas[0])
        rows, extra = HANDLERS[args.command](args, params)
    except UsageError as exc:
        print(f"sqrtcoulomb: error: {exc}", file=sys.stderr)
        return 1
    except ConvergenceError as exc:
        print(f"sqrtcoulomb: convergence failure: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ValueError) as exc:
        print(f"sqrtcoulomb: error: {exc}", file=sys.stderr)
        return 1
    _emit(render(rows, params, args.format, extra), args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
