"""Compare exp(H) with exp(D(H)) for the small presets, via the emitted double document.

    python3 scripts/double_exponents.py [--max-dim 6]
"""
import argparse
import sys
import time

from hopfexp.catalog import preset, preset_names
from hopfexp.exponent import decide_exponent, double_of
from hopfexp.io import dumps, emit, loads


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-dim", type=int, default=6)
    args = p.parse_args(argv)
    mismatches = 0
    print(f"{'preset':20s} {'dim':>4s} {'exp(H)':>9s} {'exp(D(H))':>10s}  seconds")
    for name in preset_names():
        H = preset(name).algebra
        if H.dim > args.max_dim:
            continue
        t0 = time.perf_counter()
        DH = loads(dumps(emit(double_of(H).algebra)))
        a, b = decide_exponent(H).verdict(), decide_exponent(DH).verdict()
        mismatches += a != b
        print(f"{name:20s} {H.dim:4d} {a:>9s} {b:>10s}  {time.perf_counter() - t0:7.2f}{'  MISMATCH' if a != b else ''}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
