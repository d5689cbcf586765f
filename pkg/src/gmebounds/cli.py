"""Command-line front end.

Exit codes: 0 ok, 1 validation error, 2 internal numerical error,
3 verification failure. Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import coherence, gme, io, oracle, repro
from .tensor import PureState, ValidationError, fidelity_pure

EXIT_OK, EXIT_VALIDATION, EXIT_NUMERICAL, EXIT_VERIFY = 0, 1, 2, 3
VERIFY_TOL = 1e-9


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _digits(args) -> int | None:
    return None if args.full_precision else 6


def _load_phi(source: str) -> PureState:
    phi = io.load_source(source)
    if not isinstance(phi, PureState):
        raise ValidationError(f"--phi must be a pure state, got a density operator from {source!r}")
    return phi


def _basis(args):
    if args.basis in (None, "computational"):
        return None
    return io.read_basis_file(args.basis)


def cmd_bounds(args) -> int:
    phi = _load_phi(args.phi)
    if (args.state is None) == (args.fidelity is None):
        raise ValidationError("give exactly one of --state or --fidelity")
    if args.state is not None:
        rho = io.as_density(io.load_source(args.state))
        if rho.dims != phi.dims:
            raise ValidationError(f"dimension mismatch: state {rho.dims} vs phi {phi.dims}")
        fid = fidelity_pure(rho, phi)
    else:
        fid = args.fidelity
    report = {"state": args.state, "phi": args.phi, "fidelity": fid}
    rows = []
    if args.which in ("gme", "both"):
        if phi.num_parties < 2:
            raise ValidationError("GME bounds need at least two parties; use --which coherence")
        prof = gme.profile_phi(phi, workers=args.workers)
        g = gme.bounds_from_fidelity(fid, prof, sigma=args.sigma)
        report["gme"] = g.to_dict()
        report["gme"]["profile"] = prof.to_dict(top_k=args.top_k)
        rows += [["gme", k, v] for k, v in g.bounds.items()]
        rows += [["gme", "S", g.S], ["gme", "witness", g.witness_value]]
    if args.which in ("coherence", "both"):
        cprof = coherence.coherence_profile(phi, _basis(args))
        c = coherence.coherence_bounds_from_fidelity(fid, cprof)
        report["coherence"] = c.to_dict()
        rows += [["coherence", k, v] for k, v in c.bounds.items()]
        rows += [["coherence", "D", c.D], ["coherence", "witness", c.witness_value]]
    _emit(io.dumps_json(report, _digits(args)), None)
    if args.csv:
        Path(args.csv).write_text(io.dumps_csv(["family", "quantity", "value"], rows, digits=_digits(args)))
    return EXIT_OK


def cmd_profile(args) -> int:
    phi = _load_phi(args.phi)
    prof = gme.profile_phi(phi, workers=args.workers)
    doc = {"phi": args.phi, "dims": list(phi.dims), **prof.to_dict(top_k=args.top_k)}
    _emit(io.dumps_json(doc, _digits(args)), args.out)
    return EXIT_OK


def cmd_repro(args) -> int:
    digits = _digits(args)
    if args.target == "table1":
        header, rows = repro.table1_csv_rows()
        text = io.dumps_csv(header, rows, ["bounds from published GHZ fidelities, phi = GHZ_N"], digits)
    elif args.target == "fig3":
        rows = [list(r) for r in repro.fig3()]
        text = io.dumps_csv(
            ["p", "fidelity", "S", "cren_lb"], rows,
            ["noisy 3-qubit W state, phi = W (s1' = 2/3); SDP reference curve omitted"], digits,
        )
    elif args.target == "fig4":
        data = repro.fig4()
        header = list(data[0])
        text = io.dumps_csv(header, [[d[k] for k in header] for d in data],
                            ["linear cluster states, bounds from fidelity lower bounds"], digits)
    else:
        raise ValidationError(f"unknown repro target {args.target!r}")
    _emit(text, args.out)
    return EXIT_OK


def _bound_for(measure: str, fid: float, prof: gme.PhiProfile, cprof: coherence.CoherenceProfile) -> float:
    if measure in oracle.GME_MEASURES:
        S = max(fid / prof.s1_prime, 1.0)
        raw = {
            "cren": lambda: gme.cren_lb(S),
            "concurrence": lambda: gme.concurrence_lb(S, prof.m_prime),
            "gconcurrence": lambda: gme.gconcurrence_lb(S, prof.m_prime),
            "geometric": lambda: gme.geometric_lb(S, prof.m_prime),
        }[measure]()
        return max(raw, 0.0)
    rep = coherence.coherence_bounds_from_fidelity(fid, cprof)
    key = "geometric" if measure == "coherence_geometric" else measure
    return rep.bounds[key]


def cmd_verify(args) -> int:
    phi = _load_phi(args.phi)
    rho = io.as_density(io.load_source(args.state))
    if rho.dims != phi.dims:
        raise ValidationError(f"dimension mismatch: state {rho.dims} vs phi {phi.dims}")
    fid = fidelity_pure(rho, phi)
    prof = gme.profile_phi(phi)
    if args.debug_halve_s1:
        prof = replace(prof, s1_prime=prof.s1_prime / 2)
    basis = _basis(args)
    cprof = coherence.coherence_profile(phi, basis)
    checks = []
    for measure in oracle.GME_MEASURES + oracle.COHERENCE_MEASURES:
        upper = oracle.convex_roof_upper(rho, measure, trials=args.trials, seed=args.seed, basis=basis)
        entry = {"measure": measure, "upper": upper}
        try:
            lower = _bound_for(measure, fid, prof, cprof)
        except ValidationError as exc:
            entry.update(lower=None, gap=None, passed=False, error=str(exc))
        else:
            entry.update(lower=lower, gap=upper - lower, passed=bool(lower <= upper + VERIFY_TOL))
        checks.append(entry)
    ok = all(c["passed"] for c in checks)
    doc = {"state": args.state, "phi": args.phi, "fidelity": fid, "trials": args.trials,
           "seed": args.seed, "passed": ok, "checks": checks}
    _emit(io.dumps_json(doc, _digits(args)), None)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_state_make(args) -> int:
    state = io.parse_factory(args.spec)
    _emit(io.dumps_json(io.state_to_dict(state), None), args.out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gmebounds", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--full-precision", action="store_true", help="emit unrounded numbers")

    b = sub.add_parser("bounds", help="GME and coherence lower bounds for a state or a fidelity")
    b.add_argument("--state", help="state file or factory spec, e.g. wnoise:w:3:p=0.8")
    b.add_argument("--fidelity", type=float, help="measured fidelity (or a lower bound on it) with phi")
    b.add_argument("--phi", required=True, help="reference pure state (file or factory spec)")
    b.add_argument("--basis", default="computational", help="'computational' or a basis file")
    b.add_argument("--sigma", type=float, help="fidelity uncertainty, propagated to an S interval")
    b.add_argument("--which", choices=("gme", "coherence", "both"), default="both")
    b.add_argument("--top-k", type=int, help="keep only the k largest Schmidt weights per cut")
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--csv", help="also write a flat CSV report to this path")
    common(b)
    b.set_defaults(func=cmd_bounds)

    pr = sub.add_parser("profile", help="Schmidt profile (s1', m') of a reference state")
    pr.add_argument("phi")
    pr.add_argument("--top-k", type=int)
    pr.add_argument("--workers", type=int, default=1)
    pr.add_argument("--out")
    common(pr)
    pr.set_defaults(func=cmd_profile)

    r = sub.add_parser("repro", help="CSV data for the published tables and figures")
    r.add_argument("target", choices=("table1", "fig3", "fig4"))
    r.add_argument("--out")
    common(r)
    r.set_defaults(func=cmd_repro)

    v = sub.add_parser("verify", help="check bounds against sampled convex-roof upper bounds")
    v.add_argument("--state", required=True)
    v.add_argument("--phi", required=True)
    v.add_argument("--basis", default="computational")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--debug-halve-s1", action="store_true", help=argparse.SUPPRESS)
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("state", help="state file utilities")
    ssub = s.add_subparsers(dest="state_command", required=True)
    mk = ssub.add_parser("make", help="write a state file from a factory spec")
    mk.add_argument("spec")
    mk.add_argument("--out")
    mk.set_defaults(func=cmd_state_make)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream reader closed early, e.g. `| head`
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except (ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        # ValidationError and malformed numbers in factory specs
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
