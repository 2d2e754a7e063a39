"""Real univariate polynomials of low degree and Sturm-sequence root isolation.

Coefficients are stored in ascending order of degree.  Evaluation works on
plain Python floats, which for degree <= 10 is much faster than going
through numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

TRIM_RTOL = 1e-14
# Coefficients are compared by the size of their term at |z| = TRIM_RANGE,
# the edge of the root search range.  Raw magnitudes would discard the
# leading coefficient of e.g. a monic degree-10 polynomial with roots near 100.
TRIM_RANGE = 100.0
MAX_DEGREE = 10


def _term_scale(c: Sequence[float]) -> float:
    return max((abs(v) * TRIM_RANGE**k for k, v in enumerate(c)), default=0.0)


def _trim(coeffs: Sequence[float], scale: Optional[float] = None) -> tuple:
    c = [float(v) for v in coeffs]
    if scale is None:
        scale = _term_scale(c)
    cut = TRIM_RTOL * scale
    while c and abs(c[-1]) * TRIM_RANGE ** (len(c) - 1) <= cut:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple

    def __init__(self, coeffs):
        c = _trim(coeffs)
        if len(c) > MAX_DEGREE + 1:
            raise ValueError(f"degree {len(c) - 1} exceeds {MAX_DEGREE}")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, z: float) -> float:
        return peval(self, z)

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    @classmethod
    def from_roots(cls, roots, lead: float = 1.0) -> "Polynomial":
        c = [float(lead)]
        for r in roots:
            nxt = [0.0] * (len(c) + 1)
            for k, v in enumerate(c):
                nxt[k + 1] += v
                nxt[k] -= r * v
            c = nxt
        return cls(c)


def peval(p: Polynomial, z: float) -> float:
    """Horner evaluation."""
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def _eval_with_derivative(c: tuple, z: float) -> tuple[float, float]:
    f = 0.0
    df = 0.0
    for v in reversed(c):
        df = df * z + f
        f = f * z + v
    return f, df


def _neg_remainder(a: tuple, b: tuple) -> list:
    """``-(a mod b)`` by long division, ascending coefficients."""
    r = list(a)
    nb = len(b) - 1
    lead = b[-1]
    for k in range(len(r) - 1, nb - 1, -1):
        f = r[k] / lead
        if f != 0.0:
            off = k - nb
            for j in range(nb + 1):
                r[off + j] -= f * b[j]
        r[k] = 0.0
    return [-v for v in r[:nb]]


@dataclass(frozen=True)
class SturmChain:
    polys: tuple

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, k):
        return self.polys[k]


def sturm_chain(d: Polynomial) -> SturmChain:
    """Canonical Sturm chain ``d, d', -rem(d, d'), ...``.

    Every remainder is rescaled to unit max-|coefficient| (positive scale,
    so sign-change counts are unaffected).  The chain stops early when a
    remainder vanishes, which happens when ``d`` has repeated roots.
    """
    if d.degree < 0:
        raise ValueError("Sturm chain of the zero polynomial is undefined")
    if d.degree < 1:
        raise ValueError("Sturm chain needs a polynomial of degree >= 1")
    chain = [d, d.derivative()]
    while chain[-1].degree > 0:
        a, b = chain[-2].coeffs, chain[-1].coeffs
        scale = _term_scale(a)
        rem = _neg_remainder(a, b)
        rem = list(_trim(rem, scale))
        if not rem:
            break
        m = max(abs(v) for v in rem)
        chain.append(Polynomial([v / m for v in rem]))
    return SturmChain(tuple(chain))


def count_sign_changes(chain: SturmChain, z: float) -> int:
    """Sign changes of the chain evaluated at ``z``; zeros are skipped."""
    changes = 0
    last = 0.0
    for p in chain.polys:
        v = 0.0
        for c in reversed(p.coeffs):
            v = v * z + c
        if v != 0.0:
            if last != 0.0 and (v > 0.0) != (last > 0.0):
                changes += 1
            last = v
    return changes


@dataclass(frozen=True)
class RootBracket:
    """Interval ``(lo, hi]`` containing exactly one distinct real root."""

    lo: float
    hi: float
    sign_changes: int = 1


def bracket_roots(
    chain: SturmChain, z_max: float = 100.0, rtol: float = 1e-10, width_rtol: float = 1e-3
) -> list[RootBracket]:
    """Isolate the real roots of ``chain[0]`` inside ``[-z_max, z_max]``.

    Intervals are bisected until each holds a single root.  An interval
    still holding several roots once its width drops below
    ``rtol * max(1, |z|)`` is dropped: such near-repeated roots are slow to
    separate and unstable anyway.  Roots beyond ``z_max`` are never sought.

    Isolated brackets over which ``chain[0]`` changes sign are then narrowed
    by plain sign bisection to ``width_rtol * max(1, |z|)`` so that a few
    Newton steps finish the job.
    """
    out = []
    lo, hi = -float(z_max), float(z_max)
    stack = [(lo, hi, count_sign_changes(chain, lo), count_sign_changes(chain, hi))]
    d = chain.polys[0].coeffs
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n <= 0:
            continue
        if n == 1:
            out.append(_narrow(d, lo, hi, width_rtol))
            continue
        mid = 0.5 * (lo + hi)
        if hi - lo < rtol * max(1.0, abs(mid)):
            continue
        vmid = count_sign_changes(chain, mid)
        # Upper half pushed first so brackets come out in ascending order.
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    return out


def _narrow(d: tuple, lo: float, hi: float, width_rtol: float) -> RootBracket:
    flo = eval_coeffs(d, lo)
    fhi = eval_coeffs(d, hi)
    if flo == 0.0 or fhi == 0.0 or (flo > 0.0) == (fhi > 0.0):
        return RootBracket(lo, hi, 1)
    while True:
        mid = 0.5 * (lo + hi)
        if hi - lo <= width_rtol * max(1.0, abs(mid)) or mid in (lo, hi):
            break
        fmid = eval_coeffs(d, mid)
        if fmid == 0.0:
            # keep the root strictly inside
            return RootBracket(0.5 * (lo + mid), 0.5 * (mid + hi), 1)
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return RootBracket(lo, hi, 1)


def _eval_full(c: tuple, z: float) -> tuple[float, float, float]:
    """Value, derivative and a rounding-error scale ``sum |c_k| |z|^k``."""
    f = 0.0
    df = 0.0
    mag = 0.0
    az = abs(z)
    for v in reversed(c):
        df = df * z + f
        f = f * z + v
        mag = mag * az + abs(v)
    return f, df, mag


_EPS = 2.220446049250313e-16


def _rtsafe(c: tuple, lo: float, hi: float, max_iter: int) -> tuple[Optional[float], int]:
    """Safeguarded Newton/bisection.  Returns ``(root, iterations)``.

    Stops once the step is negligible or ``|f|`` is within the rounding
    error of its own evaluation.
    """
    flo = eval_coeffs(c, lo)
    fhi = eval_coeffs(c, hi)
    if flo == 0.0:
        return lo, 0
    if fhi == 0.0:
        return hi, 0
    if (flo > 0.0) == (fhi > 0.0):
        return None, 0
    xl, xh = (lo, hi) if flo < 0.0 else (hi, lo)
    rts = 0.5 * (lo + hi)
    dxold = abs(hi - lo)
    dx = dxold
    f, df, mag = _eval_full(c, rts)
    for it in range(1, max_iter + 1):
        if ((rts - xh) * df - f) * ((rts - xl) * df - f) > 0.0 or abs(2.0 * f) > abs(dxold * df):
            dxold = dx
            dx = 0.5 * (xh - xl)
            rts = xl + dx
        else:
            dxold = dx
            dx = f / df
            rts -= dx
        f, df, mag = _eval_full(c, rts)
        if abs(dx) <= 1e-15 * max(1.0, abs(rts)) or abs(f) <= 4.0 * _EPS * mag:
            return rts, it
        if f < 0.0:
            xl = rts
        else:
            xh = rts
    return rts, max_iter


def polish_root(
    d: Polynomial, bracket: RootBracket, max_iter: int = 10, accept_tol: float = 1e-6
) -> Optional[float]:
    """Refine a bracketed root, or return ``None`` if it fails the residual test.

    Newton steps are used while they stay inside the bracket and shrink
    fast enough, bisection otherwise.  The result is accepted when
    ``|d(z)| <= accept_tol * max|coef| * max(1, |z|)**degree``.
    """
    z, _ = _rtsafe(d.coeffs, bracket.lo, bracket.hi, max_iter)
    if z is None:
        return None
    scale = max(abs(v) for v in d.coeffs) * max(1.0, abs(z)) ** d.degree
    if abs(peval(d, z)) > accept_tol * scale:
        return None
    return z


def real_roots(d: Polynomial, z_max: float = 100.0, max_iter: int = 10, accept_tol: float = 1e-6) -> list[float]:
    """Bracket and polish every findable real root of ``d`` in ``[-z_max, z_max]``."""
    if d.degree < 1:
        return []
    roots = []
    for b in bracket_roots(sturm_chain(d), z_max):
        z = polish_root(d, b, max_iter, accept_tol)
        if z is not None:
            roots.append(z)
    return roots


def poly_mul(a: Sequence[float], b: Sequence[float]) -> list:
    out = [0.0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0.0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_sub(a: Sequence[float], b: Sequence[float]) -> list:
    n = max(len(a), len(b))
    return [(a[k] if k < len(a) else 0.0) - (b[k] if k < len(b) else 0.0) for k in range(n)]


def poly_add(a: Sequence[float], b: Sequence[float]) -> list:
    n = max(len(a), len(b))
    return [(a[k] if k < len(a) else 0.0) + (b[k] if k < len(b) else 0.0) for k in range(n)]


def eval_coeffs(c: Sequence[float], z: float) -> float:
    acc = 0.0
    for v in reversed(c):
        acc = acc * z + v
    return acc

