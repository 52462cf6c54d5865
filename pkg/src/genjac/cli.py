"""``genjac`` command line: eval, verify, kink, scan.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 numeric
failure.  Arguments ``--u-min/--u-max`` accept multiples of the quarter
period written like ``2K`` or ``0.5K``; ``--x-min/--x-max`` of ``kink``
accept multiples of the chain period written like ``R`` or ``-1.5R``.
"""

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from genjac import __version__, dsg, generalized, verify
from genjac._backend import BACKEND
from genjac.errors import DomainError, NumericError
from genjac.table import OutputTable

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; 2 is reserved for verify
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _scaled(text, symbol, unit):
    """Parse '1.5', 'K', '-2K' style values; ``unit`` may be None."""
    t = text.strip()
    if t.endswith(symbol):
        if unit is None or not math.isfinite(unit):
            raise UsageError(f"{text!r}: {symbol} is not finite here")
        head = t[:-1].strip()
        factor = 1.0 if head in ("", "+") else -1.0 if head == "-" else float(head)
        return factor * unit
    return float(t)


def _base_meta(kind):
    return {"tool": "genjac", "version": __version__, "backend": BACKEND, "command": kind}


def _json_num(v):
    return v if v is None or math.isfinite(v) else str(v)


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_eval(k1, k2, u_min, u_max, n):
    """Table of u, s, c, d1, d2 and the amplitude over a uniform grid."""
    try:
        mod = generalized.moduli_new(k1, k2)
        if mod.k1 >= 1.0:
            raise DomainError("eval needs k1 < 1")
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    lo = _scaled(u_min, "K", mod.calK) if isinstance(u_min, str) else float(u_min)
    hi = _scaled(u_max, "K", mod.calK) if isinstance(u_max, str) else float(u_max)
    n = int(n)
    if n < 1 or (n == 1 and lo != hi):
        raise UsageError("n must be >= 2, or 1 with u-min equal to u-max")
    u = np.linspace(lo, hi, n)
    s, c, d1, d2 = generalized.evaluate(u, mod)
    a = generalized.amplitude(u, mod)
    meta = _base_meta("eval")
    meta.update(k1=mod.k1, k2=mod.k2, calK=mod.calK, u_min=lo, u_max=hi, n=n)
    t = OutputTable([("u", "1"), ("s", "1"), ("c", "1"), ("d1", "1"), ("d2", "1"),
                     ("a", "rad")], meta)
    for row in zip(u, s, c, d1, d2, a):
        t.add_row(row)
    return t


def cmd_verify(seed, trials):
    """Run the identity suite; returns (results, exit code)."""
    if int(trials) < 1:
        raise UsageError("trials must be a positive integer")
    results = verify.run_suite(int(seed), int(trials))
    ok = all(r.passed for r in results)
    return results, EXIT_OK if ok else EXIT_VERIFY


def _params(mu, lam, beta, A, x0=0.0):
    try:
        return dsg.DSGParams(mu, lam, beta, A, x0)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def cmd_kink(mu, lam, beta, A, x_min, x_max, n, branch="I", x0=0.0):
    """Profile phi(x) and energy density on a uniform grid."""
    p = _params(mu, lam, beta, A, x0)
    try:
        sol = dsg.solve(p) if branch == "I" else dsg.mirror_solution(p)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    R = sol.R
    if x_max is None:
        x_max = "R" if math.isfinite(R) else "10"
    lo = _scaled(str(x_min), "R", R) + (x0 if str(x_min).endswith("R") else 0.0)
    hi = _scaled(str(x_max), "R", R) + (x0 if str(x_max).endswith("R") else 0.0)
    n = int(n)
    if n < 1 or (n == 1 and lo != hi):
        raise UsageError("n must be >= 2, or 1 with x-min equal to x-max")
    x = np.linspace(lo, hi, n)
    phi = sol.profile(x)
    eps = sol.density(x)
    resid = dsg.ode_residual(sol, x)

    meta = _base_meta("kink")
    meta.update(mu=p.mu, lam=p.lam, beta=p.beta, A=p.A, x0=p.x0, branch=branch,
                case_tag=sol.case_tag.value, periodicity=sol.periodicity.value,
                R=_json_num(R), x_min=lo, x_max=hi, n=n,
                max_ode_residual=float(np.max(resid)))
    if math.isfinite(R):
        e = sol.energy
        if e is not None and math.isfinite(e):
            meta["E"] = e
            meta["E_method"] = "closed" if sol.energy_closed is not None else "numeric"
    if p.A == 0.0:
        try:
            q = dsg.topological_charge(p)
            meta["Q"] = list(q) if isinstance(q, tuple) else q
        except DomainError:
            pass
    t = OutputTable([("x", "1"), ("phi", "1"), ("energy_density", "1")], meta)
    for row in zip(x, phi, eps):
        t.add_row(row)
    return t


def _scan_point(args):
    mu, lam, beta, A = args
    p = dsg.DSGParams(mu, lam, beta, A)
    try:
        sol = dsg.solve(p)
    except DomainError:
        return None
    R = sol.R
    E = sol.energy if math.isfinite(R) else None
    return (A, sol.case_tag.value, R, math.nan if E is None else E)


def cmd_scan(mu, lam, beta, A_min, A_max, n, jobs=1):
    """R(A) and E(A) over a uniform grid of A, in input order."""
    _params(mu, lam, beta, A_min)
    n = int(n)
    if n < 1 or (n == 1 and A_min != A_max):
        raise UsageError("n must be >= 2, or 1 with A-min equal to A-max")
    grid = np.linspace(float(A_min), float(A_max), n)
    if n > 1:
        grid[-1] = float(A_max)
    work = [(mu, lam, beta, float(a)) for a in grid]
    if jobs and int(jobs) > 1:
        with ProcessPoolExecutor(max_workers=int(jobs)) as ex:
            rows = list(ex.map(_scan_point, work, chunksize=max(1, n // (4 * int(jobs)))))
    else:
        rows = [_scan_point(w) for w in work]

    meta = _base_meta("scan")
    meta.update(mu=float(mu), lam=float(lam), beta=float(beta),
                A_min=float(A_min), A_max=float(A_max), n=n, jobs=int(jobs or 1))
    t = OutputTable([("A", "1"), ("case_tag", ""), ("R", "1"), ("E", "1")], meta)
    omitted = 0
    for r in rows:
        if r is None:
            omitted += 1
        else:
            t.add_row(r)
    t.meta["no_solution_rows"] = omitted
    if omitted == n:
        raise UsageError("no valid solution anywhere in the scanned A range")
    return t


# --------------------------------------------------------------------------
# argument handling
# --------------------------------------------------------------------------

def _common(sp):
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", metavar="FILE", default=None,
                    help="output file (default stdout)")


def build_parser():
    ap = _Parser(prog="genjac", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"genjac {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="sample s, c, d1, d2 and the amplitude")
    e.add_argument("--k1", type=float, required=True)
    e.add_argument("--k2", type=float, required=True)
    e.add_argument("--u-min", default="0")
    e.add_argument("--u-max", default="4K")
    e.add_argument("--n", type=int, default=201)
    _common(e)

    v = sub.add_parser("verify", help="run the identity suite")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--trials", type=int, default=100)
    _common(v)

    k = sub.add_parser("kink", help="profile and energy density of a kink chain")
    k.add_argument("--mu", type=float, required=True)
    k.add_argument("--lam", type=float, required=True)
    k.add_argument("--beta", type=float, default=1.0)
    k.add_argument("--A", type=float, default=0.0)
    k.add_argument("--x0", type=float, default=0.0)
    k.add_argument("--x-min", default="0")
    k.add_argument("--x-max", default=None, help="default R, or 10 if R is infinite")
    k.add_argument("--n", type=int, default=200)
    k.add_argument("--branch", choices=("I", "II"), default="I",
                   help="II selects the second solution of the |lam| < 4 mu phase")
    _common(k)

    s = sub.add_parser("scan", help="R and E over a range of A")
    s.add_argument("--mu", type=float, required=True)
    s.add_argument("--lam", type=float, required=True)
    s.add_argument("--beta", type=float, default=1.0)
    s.add_argument("--A-min", type=float, required=True)
    s.add_argument("--A-max", type=float, required=True)
    s.add_argument("--n", type=int, default=100)
    s.add_argument("--jobs", type=int, default=1)
    _common(s)
    return ap


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _verify_text(results, seed, trials, fmt):
    if fmt == "json":
        doc = {"meta": {**_base_meta("verify"), "seed": seed, "trials": trials},
               "families": [{"name": r.name, "max_residual": r.max_residual,
                             "tol": r.tol, "passed": r.passed} for r in results]}
        return json.dumps(doc, indent=1) + "\n"
    return verify.format_report(results, seed, trials) + "\n"


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            results, code = cmd_verify(args.seed, args.trials)
            _emit(_verify_text(results, args.seed, args.trials, args.format), args.out)
            return code
        if args.command == "eval":
            t = cmd_eval(args.k1, args.k2, args.u_min, args.u_max, args.n)
        elif args.command == "kink":
            t = cmd_kink(args.mu, args.lam, args.beta, args.A, args.x_min, args.x_max,
                         args.n, args.branch, args.x0)
        else:
            t = cmd_scan(args.mu, args.lam, args.beta, args.A_min, args.A_max,
                         args.n, args.jobs)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"genjac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericError, ArithmeticError) as exc:
        print(f"genjac: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    _emit(t.render(args.format), args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
