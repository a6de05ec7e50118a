"""Deterministic multistart see-saw minimization over product and low-rank states.

Both optimizers alternate between the two free factors of the ansatz. Each
half-step fixes one factor and minimizes the quadratic objective exactly over
the other, which reduces to the minimal eigenvector of a small effective
Hermitian operator. The objective value therefore never increases from one
half-step to the next, and every restart converges to a stationary point.

Determinism contract: restart ``k`` draws its starting point from a dedicated
generator seeded with ``seed XOR k``, restarts never interact, and the merge
of restart results is a plain minimum with a first-index tie-break. Running
the same inputs twice (or scheduling restarts in any order) gives identical
results. The reported best value is a heuristic upper bound on the true
infimum: multistart see-saw carries no global optimality certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bipartite import BipartiteOperator, ProductVector
from .linalg import HERMITIAN_ATOL, is_hermitian

__all__ = [
    "OptResult",
    "QuadraticTerm",
    "RankTwoFactors",
    "SeeSawConfig",
    "min_generic_quadratic",
    "min_product_expectation",
    "min_schmidt2_expectation",
]


@dataclass(frozen=True)
class SeeSawConfig:
    """Multistart see-saw settings.

    ``conv_tol`` is the absolute objective decrease over one full sweep below
    which a restart counts as converged; ``record_trace`` additionally stores
    the per-half-step objective values of every restart.
    """

    restarts: int = 200
    max_iter: int = 500
    conv_tol: float = 1e-12
    seed: int = 42
    record_trace: bool = False

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if not self.conv_tol > 0.0:
            raise ValueError("conv_tol must be > 0")


@dataclass(frozen=True)
class QuadraticTerm:
    """One summand <a (x) f(b)| H |a (x) f(b)> with f = conj when ``conjugate_b``."""

    operator: np.ndarray
    conjugate_b: bool = False


@dataclass(frozen=True)
class RankTwoFactors:
    """Factor pair (left: dA x 2, right: 2 x dB) representing vec(left @ right)."""

    left: np.ndarray
    right: np.ndarray

    @property
    def vector(self) -> np.ndarray:
        v = (self.left @ self.right).reshape(-1)
        return v / np.linalg.norm(v)


@dataclass(frozen=True)
class OptResult:
    """Outcome of a multistart run.

    ``best_value`` is the minimum of ``restart_values``; ``best_index`` the
    first restart attaining it; ``argmin`` re-evaluates to ``best_value``.
    ``traces`` (only with ``record_trace``) holds per-restart tuples of the
    objective after every half-step, which are non-increasing by construction.
    """

    best_value: float
    argmin: ProductVector | RankTwoFactors
    restart_values: np.ndarray
    iterations_used: np.ndarray
    converged: np.ndarray
    best_index: int
    traces: tuple[tuple[float, ...], ...] | None = None

    def to_dict(self) -> dict:
        return {
            "best_value": self.best_value,
            "best_index": self.best_index,
            "restart_values": [float(x) for x in self.restart_values],
            "iterations_used": [int(x) for x in self.iterations_used],
            "converged": [bool(x) for x in self.converged],
        }


def _coerce_terms(
    terms: Sequence[QuadraticTerm | tuple], dims: tuple[int, int] | None
) -> tuple[list[tuple[np.ndarray, bool]], tuple[int, int]]:
    parsed: list[tuple[np.ndarray, bool]] = []
    for term in terms:
        if isinstance(term, QuadraticTerm):
            op, flag = term.operator, term.conjugate_b
        else:
            op, flag = term
        if isinstance(op, BipartiteOperator):
            if dims is None:
                dims = (op.dim_a, op.dim_b)
            op = op.matrix
        op = np.asarray(op, dtype=complex)
        if not is_hermitian(op):
            raise ValueError("objective operators must be Hermitian within 1e-12")
        parsed.append((op, bool(flag)))
    if not parsed:
        raise ValueError("at least one quadratic term is required")
    d = parsed[0][0].shape[0]
    if any(op.shape[0] != d for op, _ in parsed):
        raise ValueError("all terms must act on the same space")
    if dims is None:
        root = round(d**0.5)
        if root * root != d:
            raise ValueError("cannot infer tensor dims; pass dims=(dim_a, dim_b)")
        dims = (root, root)
    if dims[0] * dims[1] != d:
        raise ValueError(f"dims {dims} do not match operator dimension {d}")
    return parsed, dims


def _batch_min_eigvec(mats: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Minimal eigenpair for a stack of Hermitian matrices, phase-fixed.

    For (rare) degenerate minima the phase-fixed lexicographically smallest
    eigenvector of the computed eigenbasis is selected, keeping the choice
    reproducible.
    """
    w, v = np.linalg.eigh(mats)
    vecs = np.array(v[..., 0])
    scale = np.maximum(1.0, np.abs(w).max(axis=-1))
    degenerate = np.nonzero(w[..., 1] - w[..., 0] <= HERMITIAN_ATOL * scale)[0]
    piv = np.take_along_axis(vecs, np.argmax(np.abs(vecs), axis=-1)[..., None], axis=-1)[..., 0]
    mag = np.abs(piv)
    safe = np.where(mag > 0.0, mag, 1.0)
    vecs = vecs * (piv.conjugate() / safe)[..., None]
    for r in degenerate:
        lo = w[r, 0]
        cand = [j for j in range(w.shape[-1]) if w[r, j] - lo <= HERMITIAN_ATOL * scale[r]]
        cols = []
        for j in cand:
            col = np.array(v[r, :, j])
            p = col[int(np.argmax(np.abs(col)))]
            if abs(p) > 0.0:
                col = col * (p.conjugate() / abs(p))
            cols.append(col)
        best = min(cols, key=lambda c: tuple(x for e in c for x in (e.real, e.imag)))
        vecs[r] = best
    return w[..., 0], vecs


def min_generic_quadratic(
    terms: Sequence[QuadraticTerm | tuple],
    cfg: SeeSawConfig = SeeSawConfig(),
    dims: tuple[int, int] | None = None,
) -> OptResult:
    """Minimize a sum of quadratic forms over unit product vectors (a, b).

    Each term contributes <a (x) b| H |a (x) b> or, with ``conjugate_b``,
    <a (x) conj(b)| H |a (x) conj(b)>. Both variants contract to an effective
    Hermitian operator for whichever party is free, so the alternation stays
    an exact eigenvector update throughout.
    """
    parsed, (da, db) = _coerce_terms(terms, dims)
    tensors = [(np.ascontiguousarray(op.reshape(da, db, da, db)), flag) for op, flag in parsed]
    n = cfg.restarts

    a_fac = np.empty((n, da), dtype=complex)
    b_fac = np.empty((n, db), dtype=complex)
    for r in range(n):
        rng = np.random.default_rng(cfg.seed ^ r)
        a = rng.standard_normal(da) + 1j * rng.standard_normal(da)
        b = rng.standard_normal(db) + 1j * rng.standard_normal(db)
        a_fac[r] = a / np.linalg.norm(a)
        b_fac[r] = b / np.linalg.norm(b)

    values = np.full(n, np.inf)
    iterations = np.zeros(n, dtype=int)
    converged = np.zeros(n, dtype=bool)
    active = np.ones(n, dtype=bool)
    traces: list[list[float]] | None = [[] for _ in range(n)] if cfg.record_trace else None

    for _ in range(cfg.max_iter):
        if not active.any():
            break
        eff_b = np.zeros((n, db, db), dtype=complex)
        for t4, flag in tensors:
            contr = np.einsum("ri,ikjl,rj->rkl", a_fac.conj(), t4, a_fac, optimize=True)
            eff_b += contr.conj() if flag else contr
        wb, vb = _batch_min_eigvec(eff_b)
        b_fac = np.where(active[:, None], vb, b_fac)

        eff_a = np.zeros((n, da, da), dtype=complex)
        for t4, flag in tensors:
            bb = b_fac.conj() if flag else b_fac
            eff_a += np.einsum("rk,ikjl,rl->rij", bb.conj(), t4, bb, optimize=True)
        wa, va = _batch_min_eigvec(eff_a)
        a_fac = np.where(active[:, None], va, a_fac)

        if traces is not None:
            for r in np.nonzero(active)[0]:
                traces[r].extend((float(wb[r]), float(wa[r])))
        now_converged = active & (np.abs(values - wa) < cfg.conv_tol)
        values = np.where(active, wa, values)
        iterations += active
        converged |= now_converged
        active &= ~now_converged

    best = int(np.argmin(values))
    return OptResult(
        best_value=float(values[best]),
        argmin=ProductVector(a_fac[best], b_fac[best]),
        restart_values=values,
        iterations_used=iterations,
        converged=converged,
        best_index=best,
        traces=tuple(tuple(t) for t in traces) if traces is not None else None,
    )


def min_product_expectation(
    operator: BipartiteOperator | np.ndarray,
    cfg: SeeSawConfig = SeeSawConfig(),
    dims: tuple[int, int] | None = None,
) -> OptResult:
    """Heuristic infimum of <ab| H |ab> over unit product vectors."""
    return min_generic_quadratic([QuadraticTerm(operator, False)], cfg, dims)


def _orthonormal_rows(mats: np.ndarray) -> np.ndarray:
    """Row-orthonormal replacement spanning (at least) each matrix's row space."""
    _, _, vh = np.linalg.svd(mats, full_matrices=False)
    return vh


def min_schmidt2_expectation(
    operator: BipartiteOperator | np.ndarray,
    cfg: SeeSawConfig = SeeSawConfig(),
) -> OptResult:
    """Minimize the Rayleigh quotient of H over states of Schmidt rank at most 2.

    The 3x3 coefficient matrix of the state is kept factored as
    (3 x 2) @ (2 x 3). Fixing either factor and orthonormalizing it turns the
    quotient into an ordinary eigenproblem for a 6x6 effective Hermitian
    operator in the other factor, so the same monotone alternation applies.
    The returned state has at most two nonzero Schmidt coefficients by
    construction.
    """
    if isinstance(operator, BipartiteOperator):
        if (operator.dim_a, operator.dim_b) != (3, 3):
            raise ValueError("Schmidt-rank-2 minimization is implemented for 3x3 systems")
        mat = operator.matrix
    else:
        mat = np.asarray(operator, dtype=complex)
        if mat.shape != (9, 9):
            raise ValueError("Schmidt-rank-2 minimization is implemented for 3x3 systems")
    if not is_hermitian(mat):
        raise ValueError("objective operator must be Hermitian within 1e-12")
    h4 = np.ascontiguousarray(mat.reshape(3, 3, 3, 3))
    n = cfg.restarts

    right = np.empty((n, 2, 3), dtype=complex)
    for r in range(n):
        rng = np.random.default_rng(cfg.seed ^ r)
        right[r] = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
    left = np.zeros((n, 3, 2), dtype=complex)

    values = np.full(n, np.inf)
    iterations = np.zeros(n, dtype=int)
    converged = np.zeros(n, dtype=bool)
    active = np.ones(n, dtype=bool)
    traces: list[list[float]] | None = [[] for _ in range(n)] if cfg.record_trace else None

    for _ in range(cfg.max_iter):
        if not active.any():
            break
        r_orth = _orthonormal_rows(right)
        right = np.where(active[:, None, None], r_orth, right)
        eff_l = np.einsum("xrk,ikjl,xsl->xirjs", right.conj(), h4, right, optimize=True).reshape(n, 6, 6)
        eff_l = (eff_l + eff_l.conj().transpose(0, 2, 1)) / 2
        wl, vl = _batch_min_eigvec(eff_l)
        left = np.where(active[:, None, None], vl.reshape(n, 3, 2), left)

        l_orth = _orthonormal_rows(left.transpose(0, 2, 1)).transpose(0, 2, 1)
        left = np.where(active[:, None, None], l_orth, left)
        eff_r = np.einsum("xir,ikjl,xjs->xrksl", left.conj(), h4, left, optimize=True).reshape(n, 6, 6)
        eff_r = (eff_r + eff_r.conj().transpose(0, 2, 1)) / 2
        wr, vr = _batch_min_eigvec(eff_r)
        right = np.where(active[:, None, None], vr.reshape(n, 2, 3), right)

        if traces is not None:
            for r in np.nonzero(active)[0]:
                traces[r].extend((float(wl[r]), float(wr[r])))
        now_converged = active & (np.abs(values - wr) < cfg.conv_tol)
        values = np.where(active, wr, values)
        iterations += active
        converged |= now_converged
        active &= ~now_converged

    best = int(np.argmin(values))
    return OptResult(
        best_value=float(values[best]),
        argmin=RankTwoFactors(left[best].copy(), right[best].copy()),
        restart_values=values,
        iterations_used=iterations,
        converged=converged,
        best_index=best,
        traces=tuple(tuple(t) for t in traces) if traces is not None else None,
    )
