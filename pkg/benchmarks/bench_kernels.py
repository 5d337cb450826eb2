"""Compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Each case runs on both backends, checks that the results agree, and reports
the best wall-clock time of ``--repeat`` runs.
"""

import argparse
import json
import random
import timeit

from spectop import kernels


def _cases():
    rng = random.Random(0)
    odd64 = [rng.getrandbits(64) | 1 for _ in range(2000)]
    semis = [(rng.getrandbits(24) | 1) * (rng.getrandbits(24) | 1) for _ in range(50)]
    return [
        ("is_prime_u64 x2000", lambda k: [k.is_prime_u64(n) for n in odd64]),
        ("pollard_brent x50", lambda k: [k.pollard_brent(n, 1, 2) for n in semis]),
        ("punctual_search n=1000", lambda k: k.punctual_search(1000)),
        ("hom_check n=5000", lambda k: k.hom_check(5000, [2, 5])),
        ("vnr_sweep 2*3*5*7*11", lambda k: k.vnr_sweep([2, 3, 5, 7, 11])),
    ]


def _norm(x):
    if isinstance(x, (list, tuple)):
        return [_norm(v) for v in x]
    return int(x) if not isinstance(x, float) else x


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    if kernels.compiled is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    rows = []
    for name, fn in _cases():
        assert _norm(fn(kernels.compiled)) == _norm(fn(kernels.fallback)), name
        t_c = min(timeit.repeat(lambda: fn(kernels.compiled), number=1, repeat=args.repeat))
        t_f = min(timeit.repeat(lambda: fn(kernels.fallback), number=1, repeat=args.repeat))
        rows.append({"case": name, "compiled_s": t_c, "fallback_s": t_f, "speedup": t_f / t_c})

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'case':<26}{'compiled':>12}{'fallback':>12}{'speedup':>10}")
    for r in rows:
        print(f"{r['case']:<26}{r['compiled_s']*1e3:>10.2f}ms{r['fallback_s']*1e3:>10.2f}ms"
              f"{r['speedup']:>9.1f}x")


if __name__ == "__main__":
    main()
