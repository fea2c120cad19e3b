"""Run every exponent route on each preset and tabulate verdicts and timings.

    python3 scripts/cross_check_methods.py [--cap N] [--names s3,taft3]
"""
import argparse
import sys
import time
from dataclasses import dataclass

from hopfexp.catalog import preset, preset_names
from hopfexp.exponent import METHODS, ExponentConfig, compute_exponent


@dataclass(frozen=True)
class RunConfig:
    cap: int | None = None
    seed: int = 0
    names: tuple = ()


def parse_args(argv=None) -> RunConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--cap", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--names", default="")
    a = p.parse_args(argv)
    names = tuple(n for n in a.names.split(",") if n) or preset_names()
    return RunConfig(a.cap, a.seed, names)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    ecfg = ExponentConfig(cap=cfg.cap, seed=cfg.seed)
    routes = METHODS + ("decide",)
    print(f"{'preset':20s} {'dim':>4s} " + " ".join(f"{m:>10s}" for m in routes) + "   seconds")
    disagreements = 0
    for name in cfg.names:
        H = preset(name).algebra
        t0 = time.perf_counter()
        results = {m: compute_exponent(H, m, cfg.cap, ecfg) for m in routes}
        elapsed = time.perf_counter() - t0
        finite = {r.value for r in results.values() if r.is_finite}
        infinite = any(r.is_infinite for r in results.values())
        bad = len(finite) > 1 or (bool(finite) and infinite)
        disagreements += bad
        cells = " ".join(f"{r.verdict().split(' ')[0]:>10s}" for r in results.values())
        print(f"{name:20s} {H.dim:4d} {cells}   {elapsed:7.2f}{'  DISAGREE' if bad else ''}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
