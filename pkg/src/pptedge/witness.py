"""Entanglement witness constructions for the catalog edge states.

Two constructions are provided. The kernel witness for an edge state delta
starts from W = N * (P + Q^T_B) with P, Q the kernel projectors of delta and
its partial transpose and N = 1 / Tr(P + Q^T_B); subtracting the product
infimum epsilon of W makes the result a witness that detects delta with
Tr(W1 delta) = -epsilon. The realignment witness applies whenever the
realigned state has trace norm above one: with R(rho) = U D V^dagger, the
Hermitian part of (identity - R(U V^dagger)) has expectation
1 - sum(singular values) < 0 on rho while staying nonnegative on every
product state, since R maps product projectors to rank-one matrices of unit
Frobenius norm and R(U V^dagger) has operator norm one.

Shifted variants subtract (Tr(W rho) + eps) * identity, leaving a witness
that detects rho by exactly -eps; with small eps these barely-detecting
witnesses are the sharpest probes for negativity on low Schmidt rank states.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import linalg
from .bipartite import BipartiteOperator, partial_transpose, realign
from .catalog import CatalogEntry
from .criteria import REALIGNMENT_SLACK, range_projectors
from .exceptions import NotApplicableError
from .optimize import OptResult, SeeSawConfig, min_product_expectation, min_schmidt2_expectation

__all__ = [
    "Witness",
    "evaluate",
    "kernel_witness",
    "realignment_witness",
    "schmidt2_evidence",
    "shift_witness",
]


@dataclass(frozen=True)
class Witness:
    """Hermitian witness operator plus construction metadata.

    ``epsilon`` is the heuristic product-state infimum used in the kernel
    construction; ``normalization`` its trace normalization N; ``pre_shift``
    the operator before the epsilon subtraction, when one exists. Shifted
    witnesses keep their ancestor's metadata and record ``eps_shift``.
    """

    operator: BipartiteOperator
    method: str
    source: str
    epsilon: float | None = None
    normalization: float | None = None
    eps_shift: float | None = None
    base_method: str | None = None
    pre_shift: BipartiteOperator | None = None
    opt: OptResult | None = None

    def metadata(self) -> dict:
        meta: dict = {"method": self.method, "source": self.source}
        if self.epsilon is not None:
            meta["epsilon"] = self.epsilon
        if self.normalization is not None:
            meta["normalization"] = self.normalization
        if self.eps_shift is not None:
            meta["eps_shift"] = self.eps_shift
        if self.base_method is not None:
            meta["base_method"] = self.base_method
        return meta


def _operator(state: BipartiteOperator | CatalogEntry) -> BipartiteOperator:
    return state.state if isinstance(state, CatalogEntry) else state


def _witness_matrix(w: Witness | BipartiteOperator | np.ndarray) -> np.ndarray:
    if isinstance(w, Witness):
        return w.operator.matrix
    if isinstance(w, BipartiteOperator):
        return w.matrix
    return np.asarray(w, dtype=complex)


def evaluate(w: Witness | BipartiteOperator | np.ndarray, state: BipartiteOperator | CatalogEntry) -> float:
    """Real part of Tr(W^dagger rho); the imaginary part must be negligible.

    For Hermitian W and rho the trace is real up to roundoff; a genuinely
    complex value signals a non-Hermitian operand and raises.
    """
    wm = _witness_matrix(w)
    rho = _operator(state).matrix
    if wm.shape != rho.shape:
        raise ValueError(f"dimension mismatch: witness {wm.shape} vs state {rho.shape}")
    val = complex(np.trace(wm.conj().T @ rho))
    if abs(val.imag) > 1e-12 * max(1.0, abs(val)):
        raise ValueError(f"expectation has non-negligible imaginary part {val.imag:.3e}")
    return float(val.real)


def kernel_witness(
    state: BipartiteOperator | CatalogEntry,
    cfg: SeeSawConfig = SeeSawConfig(),
    rel_tol: float = linalg.DEFAULT_RANK_RTOL,
) -> Witness:
    """Kernel-projector witness W1 for a rank-deficient PPT state.

    Builds W = N (P + Q^T_B) from the kernel projectors P of the state and
    Q of its partial transpose, estimates the product infimum epsilon by
    multistart see-saw, and returns W1 = W - epsilon * identity. Fails with
    :class:`NotApplicableError` when either kernel is trivial.
    """
    op = _operator(state)
    name = state.name if isinstance(state, CatalogEntry) else "custom"
    dim = op.dim
    p_range, p_pt_range = range_projectors(state, rel_tol)
    kernel_dim = dim - int(round(np.trace(p_range).real))
    pt_kernel_dim = dim - int(round(np.trace(p_pt_range).real))
    if kernel_dim == 0 or pt_kernel_dim == 0:
        raise NotApplicableError("kernel witness requires rank-deficient state and partial transpose")
    eye = np.eye(dim, dtype=complex)
    p = eye - p_range
    q = eye - p_pt_range
    q_pt = partial_transpose(BipartiteOperator(q, op.dim_a, op.dim_b)).matrix
    # Tr(P + Q^T_B) is the sum of the two kernel dimensions, an exact integer
    norm = 1.0 / (kernel_dim + pt_kernel_dim)
    w_delta = norm * (p + q_pt)
    w_delta = (w_delta + w_delta.conj().T) / 2
    opt = min_product_expectation(w_delta, cfg, dims=(op.dim_a, op.dim_b))
    eps = opt.best_value
    w1 = w_delta - eps * eye
    return Witness(
        operator=BipartiteOperator(w1, op.dim_a, op.dim_b),
        method="kernel",
        source=name,
        epsilon=eps,
        normalization=norm,
        pre_shift=BipartiteOperator(w_delta, op.dim_a, op.dim_b),
        opt=opt,
    )


def realignment_witness(state: BipartiteOperator | CatalogEntry) -> Witness:
    """Witness from the singular vectors of the realigned state.

    Applicable when the realigned trace norm exceeds one; then the witness
    expectation on the state equals 1 - trace norm < 0. Raises
    :class:`NotApplicableError` otherwise.
    """
    op = _operator(state)
    name = state.name if isinstance(state, CatalogEntry) else "custom"
    res = linalg.svd(realign(op))
    total = res.trace_norm
    if total <= 1.0 + REALIGNMENT_SLACK:
        raise NotApplicableError(f"realignment witness requires trace norm > 1, got {total:.12g}")
    # rearranging (left factors) @ (right factors)^dagger makes the pairing
    # with the state collapse onto the singular values
    aligner = res.u @ res.v.conj().T
    raw = np.eye(op.dim, dtype=complex) - realign(BipartiteOperator(aligner, op.dim_a, op.dim_b))
    herm = (raw + raw.conj().T) / 2
    return Witness(
        operator=BipartiteOperator(herm, op.dim_a, op.dim_b),
        method="realign",
        source=name,
    )


def shift_witness(w: Witness, state: BipartiteOperator | CatalogEntry, eps_shift: float = 1e-6) -> Witness:
    """Subtract (Tr(W rho) + eps_shift) * identity, so the shifted witness detects rho by exactly -eps_shift."""
    if not eps_shift > 0.0:
        raise ValueError("eps_shift must be > 0")
    op = w.operator
    value = evaluate(w, state)
    shifted = op.matrix - (value + eps_shift) * np.eye(op.dim, dtype=complex)
    return replace(
        w,
        operator=BipartiteOperator(shifted, op.dim_a, op.dim_b),
        method="shifted",
        base_method=w.method if w.base_method is None else w.base_method,
        eps_shift=eps_shift,
        pre_shift=None,
        opt=None,
    )


def schmidt2_evidence(w: Witness | BipartiteOperator | np.ndarray, cfg: SeeSawConfig = SeeSawConfig()) -> OptResult:
    """Minimize the witness over Schmidt-rank-2 states.

    A negative best value exhibits a Schmidt-rank-2 state the witness
    detects, the evidence relevant for low Schmidt number of the source
    state.
    """
    return min_schmidt2_expectation(_witness_matrix(w), cfg)
