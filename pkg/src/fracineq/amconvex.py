"""(alpha, m)-convexity: grid checker and the admitted function corpus.

g is (alpha, m)-convex on [0, B] when for all x, y in [0, B], t in [0, 1]

    g(t x + m (1 - t) y) <= t^alpha g(x) + m (1 - t^alpha) g(y),

with (alpha, m) in [0, 1] x (0, 1].  The convention t^0 = 1 applies at
t = 0.  The grid checker below is the admission authority for every
bound in this package: a (fn, alpha, m, q) combination is usable only
if check_am_convex accepts |f''|^q on the relevant domain.

Note that for m = 1 and alpha < 1 the class is brutally small: letting
t -> 0+ forces g(y) >= g(y) * alpha-weighted mixtures that most convex
functions fail.  The corpus claims below were chosen analytically and
are re-validated by the checker in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, EvaluationError

DEFAULT_GRID = (41, 41, 33)
VIOLATION_TOL = 1e-12


@dataclass(frozen=True)
class FnTriple:
    """A test function with its first two derivatives.

    The callables must accept numpy arrays; df and ddf are spot-checked
    against finite differences of their antiderivative in the tests.
    """

    f: Callable
    df: Callable
    ddf: Callable
    name: str
    domain_hint: tuple = (0.0, 1.0)


@dataclass(frozen=True)
class ConvexityReport:
    alpha: float
    m: float
    max_violation: float
    worst_point: tuple  # (x, y, t)
    samples: int

    @property
    def holds(self) -> bool:
        return self.max_violation <= VIOLATION_TOL


def check_am_convex(g: Callable, alpha: float, m: float,
                    domain: tuple = (0.0, 1.0),
                    grid: tuple = DEFAULT_GRID) -> ConvexityReport:
    """Grid test of the defining inequality on domain = [0, B]."""
    if not (0.0 <= alpha <= 1.0):
        raise DomainError("alpha must lie in [0, 1], got %r" % (alpha,))
    if not (0.0 < m <= 1.0):
        raise DomainError("m must lie in (0, 1], got %r" % (m,))
    lo, hi = float(domain[0]), float(domain[1])
    if lo != 0.0 or not hi > 0.0:
        raise DomainError("domain must be [0, B] with B > 0, got %r" % (domain,))
    nx, ny, nt = grid
    xs = np.linspace(lo, hi, nx)
    ys = np.linspace(lo, hi, ny)
    ts = np.linspace(0.0, 1.0, nt)

    X = xs[:, None, None]
    Y = ys[None, :, None]
    T = ts[None, None, :]
    arg = T * X + m * (1.0 - T) * Y
    try:
        g_arg = np.asarray(g(arg), dtype=float)
        g_x = np.asarray(g(xs), dtype=float)
        g_y = np.asarray(g(ys), dtype=float)
        if g_arg.shape != arg.shape:
            raise ValueError
    except (TypeError, ValueError, AttributeError, IndexError):
        vec = np.vectorize(lambda u: float(g(u)), otypes=[float])
        g_arg = vec(arg)
        g_x = vec(xs)
        g_y = vec(ys)
    if not (np.all(np.isfinite(g_arg)) and np.all(np.isfinite(g_x))
            and np.all(np.isfinite(g_y))):
        raise EvaluationError("g returned a non-finite value on the check grid")

    ta = ts ** alpha  # 0**0 == 1.0, matching the t^0 = 1 convention
    bound = ta[None, None, :] * g_x[:, None, None] \
        + m * (1.0 - ta)[None, None, :] * g_y[None, :, None]
    viol = g_arg - bound
    idx = np.unravel_index(np.argmax(viol), viol.shape)
    worst = (float(xs[idx[0]]), float(ys[idx[1]]), float(ts[idx[2]]))
    return ConvexityReport(alpha=alpha, m=m,
                           max_violation=float(viol[idx]),
                           worst_point=worst,
                           samples=nx * ny * nt)


def check_midpoint_convex(g: Callable, domain: tuple = (0.0, 1.0),
                          n: int = 41) -> float:
    """Max violation of g((x+y)/2) <= (g(x)+g(y))/2 on an n x n grid."""
    xs = np.linspace(float(domain[0]), float(domain[1]), n)
    X = xs[:, None]
    Y = xs[None, :]
    try:
        g_mid = np.asarray(g(0.5 * (X + Y)), dtype=float)
        g_x = np.asarray(g(xs), dtype=float)
        if g_mid.shape != (n, n):
            raise ValueError
    except (TypeError, ValueError, AttributeError, IndexError):
        vec = np.vectorize(lambda u: float(g(u)), otypes=[float])
        g_mid = vec(0.5 * (X + Y))
        g_x = vec(xs)
    viol = g_mid - 0.5 * (g_x[:, None] + g_x[None, :])
    return float(np.max(viol))


@dataclass(frozen=True)
class CorpusEntry:
    fn: FnTriple
    # (alpha, m, q) combinations for which |f''|^q passed the grid check
    admissions: tuple = field(default_factory=tuple)


def _pow_triple(s: float, name: str) -> FnTriple:
    # f = x^(s+2) / ((s+1)(s+2)) so that f'' = x^s exactly
    c1 = (s + 1.0) * (s + 2.0)
    return FnTriple(
        f=lambda x, s=s, c1=c1: x ** (s + 2.0) / c1,
        df=lambda x, s=s: x ** (s + 1.0) / (s + 1.0),
        ddf=lambda x, s=s: x ** s,
        name=name,
    )


def corpus() -> list[CorpusEntry]:
    """The admitted function corpus.

    Each admission tuple was accepted by check_am_convex on [0, 1] (and
    is re-verified there in the tests).  The m < 1 entries rely on
    f''(x) = x^s with m^(s-1) <= alpha, which keeps the defining
    inequality valid all the way to t = 0.
    """
    cubic = FnTriple(f=lambda x: x ** 3 / 6.0,
                     df=lambda x: x ** 2 / 2.0,
                     ddf=lambda x: np.asarray(x, dtype=float) + 0.0,
                     name="cubic/6")
    quart = FnTriple(f=lambda x: x ** 4 / 12.0,
                     df=lambda x: x ** 3 / 3.0,
                     ddf=lambda x: np.asarray(x, dtype=float) ** 2,
                     name="quart/12")
    expf = FnTriple(f=np.exp, df=np.exp, ddf=np.exp, name="exp")
    return [
        CorpusEntry(cubic, ((1.0, 1.0, 1.0), (1.0, 1.0, 2.0), (1.0, 0.6, 1.0))),
        CorpusEntry(quart, ((1.0, 1.0, 1.0), (1.0, 1.0, 2.0), (0.5, 0.5, 1.0))),
        CorpusEntry(expf, ((1.0, 1.0, 1.0), (1.0, 1.0, 2.0))),
        CorpusEntry(_pow_triple(0.25, "pow-2.25"), ((1.0, 1.0, 4.0), (1.0, 1.0, 8.0))),
        CorpusEntry(_pow_triple(0.5, "pow-2.5"),
                    ((1.0, 1.0, 2.0), (1.0, 1.0, 4.0), (0.5, 0.5, 4.0))),
        CorpusEntry(_pow_triple(0.75, "pow-2.75"),
                    ((1.0, 1.0, 2.0), (0.5, 0.25, 2.0))),
    ]


def corpus_by_name() -> dict:
    return {entry.fn.name: entry for entry in corpus()}


def validate_derivatives(fn: FnTriple, n: int = 32, rel_tol: float = 1e-6) -> None:
    """Check df and ddf against centered differences of f and df.

    Sample points avoid the domain edges where the power-law members
    have unbounded third derivatives.  Raises AssertionError on failure;
    meant for the test suite, cheap enough to run anywhere.
    """
    lo, hi = fn.domain_hint
    span = hi - lo
    pts = np.linspace(lo + 0.05 * span, hi - 0.05 * span, n)
    h = 6e-6 * max(1.0, span)
    for x in pts:
        fd1 = (float(fn.f(x + h)) - float(fn.f(x - h))) / (2.0 * h)
        fd2 = (float(fn.df(x + h)) - float(fn.df(x - h))) / (2.0 * h)
        d1 = float(fn.df(x))
        d2 = float(fn.ddf(x))
        if abs(fd1 - d1) > rel_tol * max(1.0, abs(d1)):
            raise AssertionError(
                "%s: df mismatch at x=%.6g (fd=%.12g, df=%.12g)"
                % (fn.name, x, fd1, d1))
        if abs(fd2 - d2) > rel_tol * max(1.0, abs(d2)):
            raise AssertionError(
                "%s: ddf mismatch at x=%.6g (fd=%.12g, ddf=%.12g)"
                % (fn.name, x, fd2, d2))


_ADMISSION_CACHE: dict = {}


def is_admitted(fn: FnTriple, alpha: float, m: float, q: float,
                upper: float) -> ConvexityReport:
    """Cached grid check of |f''|^q at (alpha, m) on [0, upper]."""
    key = (fn.name, float(alpha), float(m), float(q), float(upper))
    report = _ADMISSION_CACHE.get(key)
    if report is None:
        g = lambda u: np.abs(fn.ddf(u)) ** q
        report = check_am_convex(g, alpha, m, (0.0, upper))
        _ADMISSION_CACHE[key] = report
    return report
