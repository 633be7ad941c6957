"""Command-line harness: train the grid model, evaluate random points,
run the diagnostic suites.

Commands
    train  build the labelled grid, fit the bias, write the model file,
           print a JSON fragment with the bias.
    eval   load a model, classify seeded random points against the ideal
           circle labels, print a JSON report (optionally a per-point CSV
           via --out).
    check  run the invariant suites (encoder contracts, readout-mode
           equivalence, circuit-vs-oracle agreement) on seeded random
           trials; exit 0 only if every suite passes.

Exit codes: 0 success, 1 validation/assertion failure, 2 I/O or flag
errors. Reports are byte-deterministic for identical flags and seed,
except the wall_time_s field. The model file is plain JSON (grid spec,
circle spec, engine, shots, bias, labels). The shots setting applies to
circuit engines only; the oracle engine is exact by nature. If a test draw
contains no interior (or no exterior) points the corresponding accuracy is
reported as null.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import inner_product as qip
from . import oracle
from .dataset import CircleSpec, GridSpec, generate_grid, label_point, random_points
from .encoder import prep_unitary, unprep_unitary
from .kernel import ENGINES, TrainedModel, decision_values, feature_map, train_model

CSV_HEADER = "x,y,ideal_label,predicted_label,decision_value"


def _parse_shots(text: str) -> int | None:
    if text == "exact":
        return None
    shots = int(text)
    if shots < 1:
        raise argparse.ArgumentTypeError("shots must be 'exact' or an integer >= 1")
    return shots


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qkernel",
                                     description="circle-in-square kernel classifier")
    sub = parser.add_subparsers(dest="command", required=True)

    train = sub.add_parser("train", help="fit the bias on the labelled grid")
    train.add_argument("--spacing", type=float, default=0.04)
    train.add_argument("--half-side", type=float, default=0.54)
    train.add_argument("--radius", type=float, default=0.42)
    train.add_argument("--engine", choices=ENGINES, default="direct")
    train.add_argument("--shots", type=_parse_shots, default=None,
                       metavar="{exact|N}", help="finite-shot readout (default exact)")
    train.add_argument("--seed", type=int, default=7)
    train.add_argument("--model-path", default="model.json")
    train.set_defaults(func=cmd_train)

    ev = sub.add_parser("eval", help="classify seeded random points")
    ev.add_argument("--model-path", default="model.json")
    ev.add_argument("--n-test", type=int, default=1000)
    ev.add_argument("--seed", type=int, default=7)
    ev.add_argument("--out", default=None, help="write per-point CSV here")
    ev.set_defaults(func=cmd_eval)

    check = sub.add_parser("check", help="run the invariant suites")
    check.add_argument("--trials", type=int, default=200)
    check.add_argument("--seed", type=int, default=7)
    check.set_defaults(func=cmd_check)
    return parser


def save_model(model: TrainedModel, grid: GridSpec, circle: CircleSpec,
               path: str) -> None:
    doc = {
        "grid": {"half_side": grid.half_side, "spacing": grid.spacing},
        "circle": {"radius": circle.radius, "center": list(circle.center)},
        "engine": model.engine,
        "shots": model.shots,
        "bias": float(model.bias),
        "labels": [int(l) for l in model.labels],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_model(path: str) -> tuple[TrainedModel, GridSpec, CircleSpec]:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    grid = GridSpec(**doc["grid"])
    circle = CircleSpec(radius=doc["circle"]["radius"],
                        center=tuple(doc["circle"]["center"]))
    points = generate_grid(grid)
    labels = np.asarray(doc["labels"], dtype=int)
    if len(labels) != len(points):
        raise ValueError(f"model file {path} has {len(labels)} labels "
                         f"for a {len(points)}-point grid")
    model = TrainedModel(points=points, labels=labels,
                         features=np.atleast_2d(feature_map(points)),
                         bias=float(doc["bias"]), engine=doc["engine"],
                         shots=doc["shots"])
    return model, grid, circle


def cmd_train(args) -> int:
    grid = GridSpec(half_side=args.half_side, spacing=args.spacing)
    circle = CircleSpec(radius=args.radius)
    points = generate_grid(grid)
    labels = label_point(points, circle)
    model = train_model(points, labels, engine=args.engine,
                        shots=args.shots, seed=args.seed)
    save_model(model, grid, circle, args.model_path)
    print(json.dumps({"bias": float(model.bias), "n_train": len(points),
                      "engine": args.engine, "model_path": args.model_path}))
    return 0


def cmd_eval(args) -> int:
    t0 = time.perf_counter()
    model, grid, circle = load_model(args.model_path)
    points = random_points(args.n_test, args.seed, grid)
    ideal = label_point(points, circle)
    values = decision_values(points, model, seed=args.seed)
    predicted = np.where(values >= 0.0, 1, -1)

    correct = predicted == ideal
    interior, exterior = ideal == -1, ideal == 1

    def _rate(mask) -> float | None:
        return float(correct[mask].mean()) if mask.any() else None

    report = {
        "bias": float(model.bias),
        "n_train": int(len(model.labels)),
        "n_test": int(args.n_test),
        "accuracy": float(correct.mean()),
        "interior_accuracy": _rate(interior),
        "exterior_accuracy": _rate(exterior),
        "engine": model.engine,
        "seed": int(args.seed),
        "wall_time_s": round(time.perf_counter() - t0, 6),
    }
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(CSV_HEADER + "\n")
            for p, il, pl, v in zip(points, ideal, predicted, values):
                fh.write(f"{float(p[0])!r},{float(p[1])!r},{int(il)},"
                         f"{int(pl)},{float(v)!r}\n")
    print(json.dumps(report))
    return 0


def _random_unit_vectors(rng, count: int) -> np.ndarray:
    v = rng.normal(size=(count, 4))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def _suite_encoder(trials: int, rng) -> tuple[float, float]:
    worst = 0.0
    for v in _random_unit_vectors(rng, trials):
        ua, ub = prep_unitary(v), unprep_unitary(v)
        worst = max(worst,
                    float(np.max(np.abs(ua[:, 0] - v))),
                    float(np.max(np.abs(ub @ v - np.array([0, 0, 0, 1.0])))))
    return worst, 1e-10


def _suite_modes(trials: int, rng) -> tuple[float, float]:
    worst = 0.0
    for _ in range(trials):
        v, w = _random_unit_vectors(rng, 2)
        worst = max(worst, abs(qip.inner_product_sq(v, w, "direct")
                               - qip.inner_product_sq(v, w, "ancilla")))
    return worst, 1e-12


def _suite_oracle(trials: int, rng) -> tuple[float, float]:
    worst = 0.0
    for _ in range(trials):
        v, w = _random_unit_vectors(rng, 2)
        worst = max(worst, abs(qip.inner_product_sq(v, w)
                               - oracle.classical_inner_sq(v, w)))
    return worst, 1e-9


def cmd_check(args) -> int:
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    suites = [("encoder", _suite_encoder), ("modes", _suite_modes),
              ("oracle", _suite_oracle)]
    failed = False
    for name, suite in suites:
        worst, tol = suite(args.trials, np.random.default_rng(args.seed))
        ok = worst <= tol
        failed |= not ok
        print(f"{name:8s} max_residual={worst:.3e} tol={tol:.1e} "
              f"{'PASS' if ok else 'FAIL'}")
    return 1 if failed else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
