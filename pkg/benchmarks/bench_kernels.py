"""Compare the compiled and pure-Python kernels on the hot paths.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the dot-count packing and the Bruhat comparison table for all of
S_6 and for the twisted identities of flip:8 against all twisted
involutions (the table behind full-interval tests), then a full flip:8
enumeration under each backend in a subprocess.
"""

import argparse
import os
import subprocess
import sys
import timeit

from twisted_bruhat import _kernels_py
from twisted_bruhat import perm as P
from twisted_bruhat.groups import GroupContext
from twisted_bruhat.twisted import enumerate_iota

try:
    from twisted_bruhat import _kernels as _compiled
except ImportError:
    _compiled = None


def cases():
    s6 = list(P.all_perms(6))
    ctx = GroupContext.flip(8)
    iota = enumerate_iota(ctx).elements
    invols = ctx.twisted_involutions()
    return [("S6 x S6", s6, s6, 6), ("iota(flip:8) x twisted involutions", iota, invols, 8)]


def bench(impl, a, b, m, repeat):
    da, db = impl.pack_dots(a, m), impl.pack_dots(b, m)
    pack = min(timeit.repeat(lambda: impl.pack_dots(a, m), number=1, repeat=repeat))
    table = min(timeit.repeat(lambda: impl.leq_table(da, len(a), db, len(b), m * m),
                              number=1, repeat=repeat))
    return pack, table


def enumerate_time(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["TWISTED_PURE_PYTHON"] = "1"
    code = ("import time; t=time.perf_counter();"
            "from twisted_bruhat import GroupContext, enumerate_iota;"
            "p=enumerate_iota(GroupContext.flip(8)); p.is_full_interval(0, p.top);"
            "print(time.perf_counter()-t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = [("python", _kernels_py)]
    if _compiled is not None:
        impls.append(("cython", _compiled))
    else:
        print("compiled extension not built; timing the fallback only")
    print(f"{'case':<40} {'backend':<8} {'pack ms':>9} {'table ms':>9}")
    for name, a, b, m in cases():
        base = None
        for label, impl in impls:
            pack, table = bench(impl, a, b, m, args.repeat)
            speedup = "" if base is None else f"  x{base / table:.1f}"
            base = base or table
            print(f"{name:<40} {label:<8} {pack * 1e3:9.2f} {table * 1e3:9.2f}{speedup}")
    print()
    for label, pure in (("python", True), ("default", False)):
        print(f"flip:8 poset + full-interval masks, {label:<8} backend: "
              f"{enumerate_time(pure) * 1e3:.0f} ms (includes package import)")


if __name__ == "__main__":
    main()
