"""Command-line front end: every scenario and sweep, reproducible and machine-readable.

Every run echoes its full effective configuration in the output header, prints
CSV numerics at 12 significant digits, and is byte-identical for identical
(command, inputs, seed). Exit codes: 0 success, 2 validation failure,
3 numerical-guard failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import io as qio
from .entropy import venn2, venn3
from .experiments import ERASER_MODES, quantum_eraser, schroedinger_cat, stern_gerlach
from .linalg import InvalidStateError, MemoryGuardError
from .measurement import (
    MeasurementBasisMap,
    chain_ledger,
    consecutive_measurement,
    measurement_chain,
    repeat_measurement,
    rotation_basis,
    theta_sweep,
)
from .presets import preset
from .separability import CRITERION_TOL, analyze, conjecture_trial, werner_threshold_sweep
from .states import DensityMatrix

UNCERTAINTY_COLUMNS = ("theta", "bound_ours", "bound_dk")
WERNER_COLUMNS = ("x", "cond_eig_max", "ppt_eig_min", "spectrum_classical", "ppt_pass")


def _load_state(args) -> DensityMatrix:
    if getattr(args, "preset", None):
        return preset(args.preset)
    if getattr(args, "input", None):
        return qio.load_density_matrix(args.input)
    raise ValueError("provide a state via --preset or --input")


def _normalized_alpha(values) -> np.ndarray:
    alpha = np.asarray(values, dtype=float)
    nrm = float(np.linalg.norm(alpha))
    if nrm == 0:
        raise ValueError("amplitudes must not all be zero")
    return alpha / nrm


def _config(args, **extra) -> dict:
    cfg = {"command": args.command, "seed": args.seed, "format": args.format}
    cfg.update(extra)
    return qio.round_floats(cfg)


def _write_text(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit(args, config: dict, result: dict | None = None,
          csv_header=None, csv_rows=None) -> None:
    if args.format == "csv" and csv_header is not None:
        lines = ["# config: " + json.dumps(config, separators=(",", ":"))]
        lines.extend(qio.csv_lines(csv_header, csv_rows))
        _write_text(args, "\n".join(lines) + "\n")
    else:
        payload = {"config": config, "result": qio.round_floats(result)}
        _write_text(args, json.dumps(payload, indent=2) + "\n")


def _cmd_venn2(args) -> int:
    rho = _load_state(args)
    diagram = venn2(rho).as_dict()
    config = _config(args, preset=args.preset, input=args.input)
    _emit(args, config, diagram, csv_header=list(diagram), csv_rows=[diagram])
    return 0


def _cmd_venn3(args) -> int:
    rho = _load_state(args)
    diagram = venn3(rho).as_dict()
    config = _config(args, preset=args.preset, input=args.input)
    _emit(args, config, diagram, csv_header=list(diagram), csv_rows=[diagram])
    return 0


def _cmd_separability(args) -> int:
    rho = _load_state(args)
    report = analyze(rho, tol=args.tol).as_dict()
    config = _config(args, preset=args.preset, input=args.input, tol=args.tol)
    _emit(args, config, report, csv_header=list(report), csv_rows=[report])
    return 0


def _sweep_grid(start: float, stop: float, step: float) -> list[float]:
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(count)]


def _cmd_werner_sweep(args) -> int:
    grid = _sweep_grid(args.x_from, args.x_to, args.step)
    rows = werner_threshold_sweep(grid, tol=args.tol)
    config = _config(args, x_from=args.x_from, x_to=args.x_to, step=args.step, tol=args.tol)
    if args.plot:
        from . import plotting

        plotting.save_werner_figure(rows, args.plot)
    _emit(args, config, {"table": rows}, csv_header=list(WERNER_COLUMNS), csv_rows=rows)
    return 0


def _cmd_conjecture(args) -> int:
    violations = conjecture_trial(
        trials=args.trials,
        dims=tuple(args.dims),
        k_range=(args.k_min, args.k_max),
        seed=args.seed,
        tol=args.tol,
        jobs=args.jobs,
    )
    config = _config(args, trials=args.trials, dims=list(args.dims),
                     k_min=args.k_min, k_max=args.k_max, tol=args.tol, jobs=args.jobs)
    result = {"trials": args.trials, "violations": violations, "violation_count": len(violations)}
    _emit(args, config, result)
    return 0


def _cmd_uncertainty_sweep(args) -> int:
    thetas = np.linspace(args.theta_from, args.theta_to, args.points)
    rows = theta_sweep(thetas)
    config = _config(args, points=args.points, theta_from=args.theta_from, theta_to=args.theta_to)
    if args.plot:
        from . import plotting

        plotting.save_uncertainty_figure(rows, args.plot)
    _emit(args, config, {"table": [dict(zip(UNCERTAINTY_COLUMNS, r)) for r in rows]},
          csv_header=list(UNCERTAINTY_COLUMNS), csv_rows=rows)
    return 0


def _cmd_chain(args) -> int:
    alpha = _normalized_alpha(args.alpha)
    chain = measurement_chain(alpha, args.m)
    result = {
        "alpha": alpha.tolist(),
        "m": args.m,
        "probabilities": chain.probabilities.tolist(),
        "ledger": chain_ledger(chain),
    }
    if args.repeat:
        joint = repeat_measurement(chain, args.repeat)
        result["repeat_joint_distribution"] = joint.tolist()
    if args.out_state:
        rho = chain.psi.density()
        qio.save_matrix_json(args.out_state, rho.matrix, rho.dims)
    config = _config(args, alpha=alpha.tolist(), m=args.m, repeat=args.repeat)
    _emit(args, config, result)
    return 0


def _cmd_consecutive(args) -> int:
    alpha = _normalized_alpha(args.alpha)
    if args.basis:
        matrix, _dims = qio.load_matrix_json(args.basis)
        basis = MeasurementBasisMap(matrix)
    elif args.theta is not None:
        basis = rotation_basis(args.theta)
    else:
        raise ValueError("provide a basis via --theta or --basis")
    rho_ab, record = consecutive_measurement(alpha, basis)
    if args.out_state:
        qio.save_matrix_json(args.out_state, rho_ab.matrix, rho_ab.dims)
    config = _config(args, alpha=alpha.tolist(), theta=args.theta, basis=args.basis)
    _emit(args, config, record.as_dict())
    return 0


def _cmd_experiment(args) -> int:
    if args.scenario == "eraser":
        profile = quantum_eraser(args.mode, d=args.d, w=args.w, kappa=args.kappa)
        config = _config(args, scenario="eraser", mode=args.mode,
                         d=args.d, w=args.w, kappa=args.kappa)
        if args.plot:
            from . import plotting

            plotting.save_screen_figure(profile, args.plot)
        if args.format == "csv":
            rows = list(zip(profile.xs.tolist(), profile.intensity.tolist()))
            _emit(args, config, None, csv_header=["x", "intensity"], csv_rows=rows)
            if args.out:
                sidecar_path = Path(args.out).with_suffix(".json")
                sidecar = {"config": config, "result": qio.round_floats(profile.sidecar())}
                sidecar_path.write_text(json.dumps(sidecar, indent=2) + "\n")
        else:
            _emit(args, config, profile.sidecar())
        return 0
    if args.scenario == "stern-gerlach":
        ledger = stern_gerlach(sequential=args.sequential)
        config = _config(args, scenario="stern-gerlach", sequential=args.sequential)
        _emit(args, config, ledger.as_dict())
        return 0
    if args.scenario == "cat":
        ledger = schroedinger_cat(cat_atoms=args.cat_atoms, include_observer=args.observer)
        config = _config(args, scenario="cat", cat_atoms=args.cat_atoms, observer=args.observer)
        _emit(args, config, ledger.as_dict())
        return 0
    raise ValueError(f"unknown experiment scenario {args.scenario!r}")


def _add_state_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--preset", help="named state, e.g. bell, case1, case2, ghz, werner:0.2, nplet:4")
    parser.add_argument("--input", help="path to a matrix JSON file ({dims, re, im})")


def _add_common_flags(parser: argparse.ArgumentParser, default_format: str = "json") -> None:
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    parser.add_argument("--format", choices=("json", "csv"), default=default_format)
    parser.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qentropy",
        description="Quantum conditional-entropy toolkit: Venn diagrams, separability, measurement chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("venn2", help="bipartite entropy diagram")
    _add_state_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_venn2)

    p = sub.add_parser("venn3", help="tripartite entropy diagram")
    _add_state_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_venn3)

    p = sub.add_parser("separability", help="conditional-spectrum and PPT report")
    _add_state_flags(p)
    _add_common_flags(p)
    p.add_argument("--tol", type=float, default=CRITERION_TOL)
    p.set_defaults(func=_cmd_separability)

    p = sub.add_parser("werner-sweep", help="criterion table across the Werner family")
    p.add_argument("--from", dest="x_from", type=float, default=0.0)
    p.add_argument("--to", dest="x_to", type=float, default=1.0)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--tol", type=float, default=CRITERION_TOL)
    p.add_argument("--plot", help="also render the sweep to this image path")
    _add_common_flags(p, default_format="csv")
    p.set_defaults(func=_cmd_werner_sweep)

    p = sub.add_parser("conjecture", help="random separable states vs the conditional-spectrum criterion")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--dims", type=int, nargs=2, default=(2, 2))
    p.add_argument("--k-min", dest="k_min", type=int, default=1)
    p.add_argument("--k-max", dest="k_max", type=int, default=4)
    p.add_argument("--tol", type=float, default=CRITERION_TOL)
    p.add_argument("--jobs", type=int, default=1)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("uncertainty-sweep", help="entropic uncertainty bounds over basis angle")
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--from", dest="theta_from", type=float, default=0.0)
    p.add_argument("--to", dest="theta_to", type=float, default=math.pi / 2)
    p.add_argument("--plot", help="also render both bounds to this image path")
    _add_common_flags(p, default_format="csv")
    p.set_defaults(func=_cmd_uncertainty_sweep)

    p = sub.add_parser("chain", help="entangling measurement chain ledger")
    p.add_argument("--alpha", type=float, nargs="+", required=True,
                   help="system amplitudes (normalized automatically)")
    p.add_argument("--m", type=int, default=2, help="ancilla count")
    p.add_argument("--repeat", type=int, default=0,
                   help="also entangle a second pack of this many ancillas and report the joint distribution")
    p.add_argument("--out-state", dest="out_state", help="write the chain density matrix to this path")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("consecutive", help="two incompatible measurements and uncertainty record")
    p.add_argument("--alpha", type=float, nargs="+", required=True)
    p.add_argument("--theta", type=float, help="two-dimensional basis angle")
    p.add_argument("--basis", help="path to a unitary basis map in matrix JSON")
    p.add_argument("--out-state", dest="out_state", help="write the two-ancilla marginal to this path")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_consecutive)

    p = sub.add_parser("experiment", help="scenario reproductions")
    scen = p.add_subparsers(dest="scenario", required=True)

    pe = scen.add_parser("eraser", help="two-path interference with tagging/erasure/recording")
    pe.add_argument("--mode", choices=ERASER_MODES, required=True)
    pe.add_argument("--d", type=float, default=0.0, help="path separation")
    pe.add_argument("--w", type=float, default=1.0, help="envelope width")
    pe.add_argument("--kappa", type=float, default=10.0, help="fringe wavenumber")
    pe.add_argument("--plot", help="also render the screen profile to this image path")
    _add_common_flags(pe)
    pe.set_defaults(func=_cmd_experiment, command="experiment")

    ps = scen.add_parser("stern-gerlach", help="beam tagging and screen ledger")
    ps.add_argument("--sequential", action="store_true", help="second field gradient instead of a screen")
    _add_common_flags(ps)
    ps.set_defaults(func=_cmd_experiment, command="experiment")

    pc = scen.add_parser("cat", help="decaying atom, dichotomic cat, optional observer")
    pc.add_argument("--cat-atoms", dest="cat_atoms", type=int, default=1)
    pc.add_argument("--observer", action="store_true")
    _add_common_flags(pc)
    pc.set_defaults(func=_cmd_experiment, command="experiment")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidStateError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MemoryGuardError, ArithmeticError) as exc:
        print(f"numerical guard: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
