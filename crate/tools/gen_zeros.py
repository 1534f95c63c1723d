#!/usr/bin/env python3
"""Generate a table of zeta-zero ordinates (one per line, 9 decimals).

Zeros on the critical line are located as sign changes of the Hardy
Z-function, evaluated with the Riemann-Siegel formula (remainder terms
C0..C2) in vectorized numpy, then refined by bracketed secant iteration.
The first ordinates are taken from mpmath directly, and the result is
checked against mpmath.zetazero at sampled indices so a missed close pair
cannot go unnoticed.

usage: gen_zeros.py COUNT OUT [--check-every K]
"""

import argparse
import gzip
import math
import sys

import mpmath
import numpy as np

TWO_PI = 2.0 * math.pi
LOW_CUTOFF = 300.0  # below this height zeros come straight from mpmath
POLISH_BELOW = 5000.0


def _rs_coefficients(degree=48):
    """Chebyshev fits of the Riemann-Siegel remainder functions on p in [0, 1]."""
    mpmath.mp.dps = 40

    def psi(p):
        return mpmath.cos(2 * mpmath.pi * (p * p - p - mpmath.mpf(1) / 16)) / mpmath.cos(
            2 * mpmath.pi * p
        )

    nodes = [
        (mpmath.cos(mpmath.pi * (k + mpmath.mpf(1) / 2) / (degree + 1)) + 1) / 2
        for k in range(degree + 1)
    ]
    pi2 = mpmath.pi**2
    c0, c1, c2 = [], [], []
    for p in nodes:
        d = [mpmath.diff(psi, p, k) for k in (0, 2, 3, 6)]
        c0.append(d[0])
        c1.append(-d[2] / (96 * pi2))
        c2.append(d[1] / (64 * pi2) + d[3] / (18432 * pi2 * pi2))
    xs = np.array([float(2 * p - 1) for p in nodes])
    fits = []
    for vals in (c0, c1, c2):
        ys = np.array([float(v) for v in vals])
        fits.append(np.polynomial.chebyshev.chebfit(xs, ys, degree))
    mpmath.mp.dps = 15
    return fits


RS_FITS = _rs_coefficients()


def theta(t):
    return (
        t / 2.0 * np.log(t / TWO_PI)
        - t / 2.0
        - math.pi / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t**3)
    )


def hardy_z(t):
    """Riemann-Siegel evaluation of Z(t) for an array of t > LOW_CUTOFF / 2."""
    t = np.asarray(t, dtype=np.float64)
    a = np.sqrt(t / TWO_PI)
    n_max = np.floor(a).astype(np.int64)
    p = a - n_max
    th = theta(t)
    top = int(n_max.max())
    ns = np.arange(1, top + 1, dtype=np.float64)
    out = np.zeros_like(t)
    chunk = max(1, 4_000_000 // top)
    for s in range(0, t.size, chunk):
        tt = t[s : s + chunk]
        phase = th[s : s + chunk, None] - tt[:, None] * np.log(ns)[None, :]
        terms = np.cos(phase) / np.sqrt(ns)[None, :]
        mask = ns[None, :] <= n_max[s : s + chunk, None]
        out[s : s + chunk] = 2.0 * np.where(mask, terms, 0.0).sum(axis=1)
    z = 2.0 * p - 1.0
    cheb = np.polynomial.chebyshev.chebval
    rem = cheb(z, RS_FITS[0]) + cheb(z, RS_FITS[1]) / a + cheb(z, RS_FITS[2]) / (a * a)
    sign = np.where(n_max % 2 == 1, 1.0, -1.0)
    return out + sign * rem / np.sqrt(a)


def mean_spacing(t):
    return TWO_PI / math.log(t / TWO_PI)


def bracket(t_lo, t_hi):
    """Sign-change brackets of Z on [t_lo, t_hi], including dips between grid points."""
    brackets = []
    t = t_lo
    block = 5000.0
    while t < t_hi:
        end = min(t + block, t_hi)
        h = mean_spacing(end) / 8.0
        grid = np.arange(t, end + h, h)
        zs = hardy_z(grid)
        change = np.nonzero(np.signbit(zs[:-1]) != np.signbit(zs[1:]))[0]
        for i in change:
            brackets.append((grid[i], grid[i + 1]))
        # a local minimum of |Z| with no sign change nearby may hide a close pair
        az = np.abs(zs)
        interior = np.arange(1, zs.size - 1)
        dip = interior[
            (az[interior] < az[interior - 1])
            & (az[interior] < az[interior + 1])
            & (np.signbit(zs[interior - 1]) == np.signbit(zs[interior]))
            & (np.signbit(zs[interior + 1]) == np.signbit(zs[interior]))
        ]
        for i in dip:
            fine = np.linspace(grid[i - 1], grid[i + 1], 65)
            fz = hardy_z(fine)
            fc = np.nonzero(np.signbit(fz[:-1]) != np.signbit(fz[1:]))[0]
            for j in fc:
                brackets.append((fine[j], fine[j + 1]))
        if end >= t_hi:
            break
        # continue from the last grid point so no strip between blocks goes unscanned
        t = grid[-1]
    brackets.sort()
    return brackets


def refine(brackets, iters=60):
    lo = np.array([b[0] for b in brackets])
    hi = np.array([b[1] for b in brackets])
    flo = hardy_z(lo)
    fhi = hardy_z(hi)
    # Illinois-modified regula falsi, vectorized over all brackets
    for _ in range(iters):
        width = hi - lo
        if np.all(width < 1e-11 * hi):
            break
        mid = hi - fhi * (hi - lo) / (fhi - flo)
        bad = ~np.isfinite(mid) | (mid <= lo) | (mid >= hi)
        mid = np.where(bad, 0.5 * (lo + hi), mid)
        fm = hardy_z(mid)
        left = np.signbit(fm) == np.signbit(flo)
        # root in [mid, hi]
        new_lo = np.where(left, mid, lo)
        new_flo = np.where(left, fm, flo)
        new_hi = np.where(left, hi, mid)
        new_fhi = np.where(left, fhi, fm)
        new_fhi = np.where(left, new_fhi * 0.5, new_fhi)
        new_flo = np.where(left, new_flo, new_flo * 0.5)
        lo, flo, hi, fhi = new_lo, new_flo, new_hi, new_fhi
    return 0.5 * (lo + hi)


def polish(g):
    """Secant steps on mpmath's Z where the truncated remainder is too coarse."""
    if g >= POLISH_BELOW:
        return g
    a, b = g - 1e-7, g + 1e-7
    fa, fb = mpmath.fp.siegelz(a), mpmath.fp.siegelz(b)
    for _ in range(6):
        if fb == fa:
            break
        a, b, fa = b, b - fb * (b - a) / (fb - fa), fb
        fb = mpmath.fp.siegelz(b)
        if abs(b - a) < 1e-13 * b:
            break
    return b


def low_zeros():
    out = []
    n = 1
    while True:
        g = float(mpmath.zetazero(n).imag)
        if g > LOW_CUTOFF:
            return out
        out.append(g)
        n += 1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("count", type=int)
    ap.add_argument("out")
    ap.add_argument("--check-every", type=int, default=5000)
    args = ap.parse_args()

    zeros = low_zeros()
    # Riemann-von Mangoldt main term gives the height of the target count
    target = float(mpmath.zetazero(args.count).imag) + 1.0
    br = [b for b in bracket(LOW_CUTOFF, target) if b[0] >= LOW_CUTOFF]
    print(f"low={len(zeros)} brackets={len(br)}", file=sys.stderr)
    zeros.extend(polish(g) for g in refine(br).tolist())
    zeros = zeros[: args.count]
    if len(zeros) < args.count:
        sys.exit(f"only {len(zeros)} zeros found")
    if any(b <= a for a, b in zip(zeros, zeros[1:])):
        sys.exit("non-monotone output")

    checks = list(range(args.check_every, args.count + 1, args.check_every))
    if args.count not in checks:
        checks.append(args.count)
    worst = 0.0
    for n in checks:
        ref = float(mpmath.zetazero(n).imag)
        err = abs(ref - zeros[n - 1])
        worst = max(worst, err)
        if err > 1e-8:
            sys.exit(f"index check failed at n={n}: {zeros[n - 1]} vs {ref}")
    print(f"checked {len(checks)} indices, worst abs error {worst:.2e}", file=sys.stderr)

    opener = gzip.open if args.out.endswith(".gz") else open
    with opener(args.out, "wt") as f:
        for g in zeros:
            f.write(f"{g:.9f}\n")


if __name__ == "__main__":
    main()
