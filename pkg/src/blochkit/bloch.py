"""Bloch-space calculus: the direction-sup gradient size Q_f, seminorm
and norm estimators, extremal growth bounds, and decay diagnostics.

Q_f(z) is the supremum over nonzero directions u of
|grad f(z) . u| / H_z(u, u*)^(1/2). For a Hermitian positive matrix M
with H_z(u, u*) = u^H M u the supremum has the closed form

    Q_f(z)^2 = g^H (M^T)^(-1) g,   g = grad f(z),

attained at u = M^(-1) conj(g). On the supported domains the inverse
form reduces further:

    disk/polydisk: Q^2 = sum_k (1 - |z_k|^2)^2 |g_k|^2
    ball:          Q^2 = (1 - |z|^2) (|g|^2 - |g . z|^2)
    products:      coordinate-block sums of the factor forms
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import atanh, inf, sqrt

import numpy as np
from scipy import stats
from scipy.stats import qmc

from .domains import (DomainDescriptor, Kind, _as_point, contains,
                      polydisk as polydisk_domain, sample_interior,
                      sample_near_distinguished_boundary)
from .errors import (OutsideDomainError, UnsupportedMetricError, UsageError)
from .estimates import (DecayProfile, DEFAULT_EPS_LADDER, EstimateInterval,
                        MODE_ANALYTIC_BOUNDS, MODE_SAMPLED_LOWER,
                        SamplingConfig, exact)
from .metric import (metric_form_dirs, metric_matrix, rho_from_origin,
                     _require_metric)
from .symbols import (Polynomial, SymbolExpr, evaluate, evaluate_many,
                      gradient, gradient_many, is_constant)

CONSISTENT = "consistent-with-membership"
AGAINST = "evidence-against"


# ---------------------------------------------------------------------------
# Q values

def _q_from_grads(d: DomainDescriptor, Z: np.ndarray, G: np.ndarray) -> np.ndarray:
    k = d.kind
    if k in (Kind.DISK, Kind.POLYDISK):
        w = (1.0 - np.abs(Z) ** 2) ** 2
        return np.sqrt(np.sum(w * np.abs(G) ** 2, axis=1))
    if k is Kind.BALL:
        r2 = np.sum(np.abs(Z) ** 2, axis=1)
        dot = np.sum(G * Z, axis=1)
        val = (1.0 - r2) * (np.sum(np.abs(G) ** 2, axis=1) - np.abs(dot) ** 2)
        return np.sqrt(np.maximum(val, 0.0))
    if k is Kind.PRODUCT:
        acc = np.zeros(Z.shape[0])
        for s, t, f in d.factor_slices():
            acc += _q_from_grads(f, Z[:, s:t], G[:, s:t]) ** 2
        return np.sqrt(acc)
    raise UnsupportedMetricError(f"Q not available for {d}")


def q_values(d: DomainDescriptor, f: SymbolExpr, Z: np.ndarray) -> np.ndarray:
    """Batch Q_f over rows of Z (assumed interior)."""
    _require_metric(d)
    Z = np.asarray(Z, dtype=np.complex128)
    return _q_from_grads(d, Z, gradient_many(f, Z))


def q_value(d: DomainDescriptor, f: SymbolExpr, z) -> float:
    """Closed-form Q_f(z) through the metric-inverse quadratic form."""
    z = _as_point(d, z)
    if not contains(d, z):
        raise OutsideDomainError(f"point not interior to {d}")
    return float(q_values(d, f, z.reshape(1, -1))[0])


def q_value_via_metric(d: DomainDescriptor, f: SymbolExpr, z) -> float:
    """Same supremum through an explicit solve against the assembled
    metric matrix; kept as an independent route for cross-checks."""
    z = _as_point(d, z)
    g = gradient(f, z)
    M = metric_matrix(d, z)
    x = np.linalg.solve(M.T, g)
    return sqrt(max(float(np.real(np.vdot(g, x))), 0.0))


def _sobol_unit_directions(ndirs: int, n: int, seed: int) -> np.ndarray:
    eng = qmc.Sobol(d=2 * n, scramble=True, seed=seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        x = eng.random(ndirs)
    tiny = 2.0 ** -53
    g = stats.norm.ppf(np.clip(x, tiny, 1.0 - tiny))
    u = g[:, :n] + 1j * g[:, n:]
    norms = np.linalg.norm(u, axis=1)
    bad = norms == 0
    if np.any(bad):
        u[bad, 0] = 1.0
        norms[bad] = 1.0
    return u / norms[:, None]


def q_value_oracle(d: DomainDescriptor, f: SymbolExpr, z, ndirs: int = 4096,
                   seed: int = 0) -> float:
    """Brute-force the direction supremum: max of the raw ratio
    |grad f(z) . u| / H_z(u, u*)^(1/2) over quasi-random unit directions
    plus the closed-form maximizing direction u = M^(-1) conj(g)."""
    if ndirs < 1:
        raise UsageError("ndirs must be >= 1")
    z = _as_point(d, z)
    if not contains(d, z):
        raise OutsideDomainError(f"point not interior to {d}")
    g = gradient(f, z)
    if not np.any(g):
        return 0.0
    n = len(z)
    U = _sobol_unit_directions(ndirs, n, seed)
    M = metric_matrix(d, z)
    ustar = np.linalg.solve(M, np.conj(g))
    nrm = np.linalg.norm(ustar)
    if nrm > 0:
        U = np.vstack([U, ustar / nrm])
    num = np.abs(U @ g)
    den = np.sqrt(metric_form_dirs(d, z, U))
    return float(np.max(num / den))


# ---------------------------------------------------------------------------
# seminorm estimation

def beta_upper_poly(f: Polynomial) -> float:
    """Certified seminorm bound from gradient coefficient sums: on every
    supported domain Q^2 <= |grad f|^2, and |d_j f| <= sum |c| * a_j on
    the closed polydisk."""
    if not isinstance(f, Polynomial):
        raise UsageError("coefficient bound needs a polynomial")
    cols = np.zeros(f.arity)
    for exps, c in f.terms:
        for j, p in enumerate(exps):
            if p:
                cols[j] += abs(c) * p
    return float(np.linalg.norm(cols))


def _line_interval(d: DomainDescriptor, z: np.ndarray, e: np.ndarray,
                   step: float = 0.25, iters: int = 40) -> tuple[float, float]:
    # feasible t-range of z + t e inside the (convex) domain, by bisection
    def inside(t: float) -> bool:
        return contains(d, z + t * e)

    def edge(sign: float) -> float:
        t_in, t_out = 0.0, sign * step
        while inside(t_out):
            t_in, t_out = t_out, t_out * 2.0
            if abs(t_out) > 8.0:
                break
        for _ in range(iters):
            mid = 0.5 * (t_in + t_out)
            if inside(mid):
                t_in = mid
            else:
                t_out = mid
        return t_in

    return edge(-1.0), edge(1.0)


_INVPHI = (sqrt(5.0) - 1.0) / 2.0


def _golden_max(fun, lo: float, hi: float, iters: int) -> tuple[float, float]:
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    e = a + _INVPHI * (b - a)
    fc, fe = fun(c), fun(e)
    for _ in range(iters):
        if fc >= fe:
            b, e, fe = e, c, fc
            c = b - _INVPHI * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, e, fe
            e = a + _INVPHI * (b - a)
            fe = fun(e)
    return (c, fc) if fc >= fe else (e, fe)


def _refine_max(d: DomainDescriptor, objective, z0: np.ndarray,
                iters: int) -> tuple[float, np.ndarray]:
    """One coordinatewise golden-section pass over 2n real coordinates."""
    z = z0.copy()
    best = objective(z)
    n = len(z)
    for axis in range(2 * n):
        e = np.zeros(n, dtype=np.complex128)
        e[axis % n] = 1.0 if axis < n else 1.0j
        lo, hi = _line_interval(d, z, e)
        if hi - lo <= 1e-14:
            continue
        t, val = _golden_max(lambda t: objective(z + t * e), lo, hi, iters)
        if val > best:
            best = val
            z = z + t * e
    return best, z


def _sup_estimate(d: DomainDescriptor, objective_batch, objective_point,
                  cfg: SamplingConfig) -> tuple[float, np.ndarray, int]:
    """Shared sampled-sup machinery: stratified samples, then golden
    refinement restarted at the best points. Returns (max, argmax, evals)."""
    Z = sample_interior(d, cfg.samples, cfg.seed, cfg.shells)
    vals = objective_batch(Z)
    order = np.argsort(vals)[::-1]
    best = float(vals[order[0]])
    argmax = Z[order[0]].copy()
    for idx in order[: cfg.refine_restarts]:
        val, pt = _refine_max(d, objective_point, Z[idx], cfg.refine_iters)
        if val > best:
            best, argmax = val, pt
    return best, argmax, len(vals)


def beta_estimate(d: DomainDescriptor, f: SymbolExpr,
                  cfg: SamplingConfig = SamplingConfig(),
                  certified_upper: float | None = None) -> EstimateInterval:
    """Sampled lower estimate of the seminorm sup_z Q_f(z).

    Constant symbols are exact zero. The upper end is +inf unless the
    caller supplies a certified bound.
    """
    _require_metric(d)
    if is_constant(f) is not None:
        return exact(0.0)
    lower, argmax, ns = _sup_estimate(
        d, lambda Z: q_values(d, f, Z), lambda z: q_value(d, f, z), cfg)
    upper = inf
    if certified_upper is not None:
        if certified_upper < lower - 1e-9:
            raise UsageError("supplied upper bound contradicts sampled lower")
        upper = max(float(certified_upper), lower)
    return EstimateInterval(lower, upper, MODE_SAMPLED_LOWER, ns, cfg.seed,
                            argmax=tuple(argmax.tolist()))


def bloch_norm_estimate(d: DomainDescriptor, f: SymbolExpr,
                        cfg: SamplingConfig = SamplingConfig(),
                        certified_upper: float | None = None) -> EstimateInterval:
    """|f(0)| + seminorm, same interval discipline as beta_estimate."""
    base = abs(evaluate(f, np.zeros(d.ambient_dim)))
    beta = beta_estimate(d, f, cfg,
                         certified_upper if certified_upper is None
                         else max(certified_upper - base, 0.0))
    upper = base + beta.upper if beta.upper < inf else inf
    if beta.mode == "exact":
        return exact(base)
    return EstimateInterval(base + beta.lower, upper, beta.mode,
                            beta.samples, beta.seed, argmax=beta.argmax)


def lipschitz_beta_estimate(d: DomainDescriptor, f: SymbolExpr,
                            npairs: int = 200, seed: int = 42) -> float:
    """Certified seminorm lower bound from difference quotients
    |f(z) - f(w)| / rho_upper(z, w) over sampled pairs."""
    from .metric import PiecewisePath, path_length
    _require_metric(d)
    A = sample_interior(d, npairs, seed)
    b_seed = int(np.random.SeedSequence(entropy=seed, spawn_key=(7,))
                 .generate_state(1)[0])
    B = sample_interior(d, npairs, b_seed)
    fa = evaluate_many(f, A)
    fb = evaluate_many(f, B)
    best = 0.0
    for i in range(npairs):
        gap = abs(fa[i] - fb[i])
        if gap == 0.0:
            continue
        sep = path_length(d, PiecewisePath.through(np.stack([A[i], B[i]])))
        sep += 1e-12  # quadrature guard keeps the quotient a lower bound
        if sep <= 1e-9:
            continue
        best = max(best, gap / sep)
    return best


# ---------------------------------------------------------------------------
# extremal growth omega

def omega_exact_ball(z) -> float:
    """Extremal growth on disk or ball: arctanh of the euclidean size."""
    z = np.asarray(z, dtype=np.complex128).reshape(-1)
    r = float(np.linalg.norm(z))
    if r >= 1.0:
        raise OutsideDomainError("point not interior to the ball")
    return atanh(r)


def omega_polydisk_bounds(z) -> EstimateInterval:
    """[max_k arctanh|z_k|, straight-segment length] on the polydisk."""
    z = np.asarray(z, dtype=np.complex128).reshape(-1)
    d = polydisk_domain(len(z))
    if not contains(d, z):
        raise OutsideDomainError("point not interior to the polydisk")
    lower = max(atanh(abs(c)) for c in z)
    upper = rho_from_origin(d, z).upper
    return EstimateInterval(lower, max(lower, upper), MODE_ANALYTIC_BOUNDS)


@dataclass(frozen=True)
class _Witness:
    """Admissible test function with a proved norm bound: vanishes at 0,
    Bloch norm <= norm_upper; value/q are closed forms."""

    name: str
    value: float  # |w(z)| at the target point
    norm_upper: float
    little: bool


def _coordinate_witnesses(sub: np.ndarray, little: bool) -> list[_Witness]:
    out = []
    for k, c in enumerate(sub):
        m = abs(c)
        if m == 0.0:
            continue
        if not little:
            # h-form with parameter z_k evaluates to arctanh|z_k| with
            # seminorm bound 1
            out.append(_Witness(f"h[{k + 1}]", atanh(m), 1.0, False))

        def ratio(r: float, m: float = m) -> float:
            return atanh(r * m) / r

        r, val = _golden_max(ratio, 1e-6, 1.0 - 1e-9, 60)
        # f-form with |w| = r has Bloch norm <= r and lies in the
        # *-little class
        out.append(_Witness(f"fw[{k + 1}]", val * r, r, True))
    return out


def _direction_witnesses(sub: np.ndarray) -> list[_Witness]:
    r = float(np.linalg.norm(sub))
    if r == 0.0:
        return []
    out = [_Witness("logdir", atanh(r), 1.0, False)]

    def ratio(s: float) -> float:
        return atanh(s * r) / s

    s, val = _golden_max(ratio, 1e-6, 1.0 - 1e-9, 60)
    out.append(_Witness("logdir-little", val * s, s, True))
    # aligned linear polynomial, seminorm exactly 1
    out.append(_Witness("linear", r, 1.0, True))
    return out


def _omega_witnesses(d: DomainDescriptor, z: np.ndarray, little: bool) -> list[_Witness]:
    out: list[_Witness] = []
    for s, t, f in d.factor_slices():
        sub = z[s:t]
        if f.kind in (Kind.DISK, Kind.POLYDISK):
            out.extend(_coordinate_witnesses(sub, little))
            nrm = float(np.linalg.norm(sub))
            if nrm > 0 and f.kind is Kind.DISK:
                out.append(_Witness("linear", nrm, 1.0, True))
        elif f.kind is Kind.BALL:
            out.extend(_direction_witnesses(sub))
        else:
            raise UnsupportedMetricError(f"no omega witnesses for {f}")
    return out


def omega_empirical_lower(d: DomainDescriptor, z,
                          cfg: SamplingConfig = SamplingConfig(),
                          little: bool = False) -> float:
    """Certified lower bound for the extremal growth at z: the best
    |w(z)| / norm bound over the admissible witness family. With
    little=True only witnesses in the *-little class are used."""
    _require_metric(d)
    z = _as_point(d, z)
    if not contains(d, z):
        raise OutsideDomainError(f"point not interior to {d}")
    best = 0.0
    for w in _omega_witnesses(d, z, little):
        if little and not w.little:
            continue
        if w.norm_upper > 0:
            best = max(best, w.value / w.norm_upper)
    return best


def omega_bounds(d: DomainDescriptor, z) -> EstimateInterval:
    """Domain-dispatching omega interval: exact on disk/ball, the
    witness/segment sandwich elsewhere."""
    z = _as_point(d, z)
    if d.kind in (Kind.DISK, Kind.BALL):
        return exact(omega_exact_ball(z))
    if not contains(d, z):
        raise OutsideDomainError(f"point not interior to {d}")
    lower = omega_empirical_lower(d, z)
    upper = rho_from_origin(d, z).upper
    return EstimateInterval(lower, max(lower, upper), MODE_ANALYTIC_BOUNDS)


# ---------------------------------------------------------------------------
# decay diagnostics

def little_star_membership_diagnostic(
        d: DomainDescriptor, f: SymbolExpr,
        eps_ladder: tuple[float, ...] = DEFAULT_EPS_LADDER,
        cfg: SamplingConfig = SamplingConfig()) -> tuple[DecayProfile, str]:
    """Sampled Q decay toward the distinguished boundary.

    Heuristic verdict, never a proof: consistent-with-membership when
    the shell maxima do not grow and the final value drops below 0.1 of
    the initial one (identically-zero profiles count as consistent).
    """
    _require_metric(d)
    count = max(64, cfg.samples // max(1, len(eps_ladder)))
    maxima = []
    for eps in eps_ladder:
        Z = sample_near_distinguished_boundary(d, count, eps, cfg.seed)
        maxima.append(float(np.max(q_values(d, f, Z))))
    profile = DecayProfile(tuple(eps_ladder), tuple(maxima), count)
    if max(maxima) <= 1e-15:
        return profile, CONSISTENT
    non_increasing = all(b <= a * (1.0 + 1e-9) for a, b in zip(maxima, maxima[1:]))
    if non_increasing and maxima[-1] < 0.1 * maxima[0]:
        return profile, CONSISTENT
    return profile, AGAINST
