"""Floating-point cross-checks of the exact results.

The sampler evaluates the SKT metric at random admissible parameters and
tests it in double precision with formulas that do not share code with the
exact exterior-algebra engine: the torsion and its derivative are computed
on the real basis straight from the structure constants.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

import numpy as np
from scipy.linalg import expm

from .algebra import DIM
from .forms import LambdaLinear
from .g2 import build_g2_basis, build_phi, g2_bracket_table
from .hermitian import skt_metric_symbolic
from .samelson import build_samelson

__all__ = [
    "DEFAULT_BOX",
    "DEFAULT_TOL",
    "SampleConfig",
    "SampleReport",
    "GroupReport",
    "structure_tensor",
    "samelson_matrix",
    "metric_from_params",
    "j_residual",
    "dc_residual",
    "is_positive_definite",
    "sample",
    "group_residuals",
    "group_check",
]

DEFAULT_TOL = 1e-9
DEFAULT_BOX = ((Fraction(0), Fraction(10)), (Fraction(0), Fraction(10)), (Fraction(0), Fraction(40)))
PRNG = "numpy PCG64"


@cache
def structure_tensor() -> np.ndarray:
    """``C[i, j, k]`` with ``[b_i, b_j] = sum_k C[i, j, k] b_k`` (0-based)."""
    table = g2_bracket_table()
    C = np.zeros((DIM, DIM, DIM))
    for i in range(1, DIM + 1):
        for j in range(1, DIM + 1):
            for k, c in table.relation(i, j).items():
                C[i - 1, j - 1, k - 1] = float(c)
    return C


@cache
def samelson_matrix() -> np.ndarray:
    return np.array([[float(v) for v in row] for row in build_samelson().matrix])


@cache
def _metric_basis() -> np.ndarray:
    """Coefficient matrices of the SKT metric in a1, a2, a3 (stacked)."""
    sym = skt_metric_symbolic()
    out = np.zeros((3, DIM, DIM))
    for r in range(DIM):
        for c in range(DIM):
            v: LambdaLinear = sym.entries[r][c]
            for slot, k in enumerate((3, 5, 6)):
                out[slot, r, c] = float(v.coeffs[k])
    return out


def metric_from_params(a1: float, a2: float, a3: float) -> np.ndarray:
    B = _metric_basis()
    return a1 * B[0] + a2 * B[1] + a3 * B[2]


def in_region(a1: float, a2: float, a3: float) -> bool:
    gam = max(3 * a2 - 2 * a1, a1 - 3 * a2, 0.0)
    return 0 < a2 < a1 and gam < a3 < 4 * a1 - 3 * a2


def is_positive_definite(g: np.ndarray) -> bool:
    try:
        np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        return False
    return True


def j_residual(g: np.ndarray, J: np.ndarray | None = None) -> float:
    J = samelson_matrix() if J is None else J
    return float(np.max(np.abs(J.T @ g @ J - g)))


def dc_residual(g: np.ndarray, J: np.ndarray | None = None, C: np.ndarray | None = None) -> float:
    """Max |dc| over all basis quadruples, with ``c(X,Y,Z) = d omega(JX,JY,JZ)``."""
    J = samelson_matrix() if J is None else J
    C = structure_tensor() if C is None else C
    omega = J.T @ g  # omega(X, Y) = g(JX, Y)
    # d omega(e_i, e_j, e_k) = -omega([e_i,e_j],e_k) + omega([e_i,e_k],e_j) - omega([e_j,e_k],e_i)
    dom = -(
        np.einsum("ijm,mk->ijk", C, omega)
        - np.einsum("ikm,mj->ijk", C, omega)
        + np.einsum("jkm,mi->ijk", C, omega)
    )
    c = np.einsum("abc,ai,bj,ck->ijk", dom, J, J, J, optimize=True)
    dc = (
        -np.einsum("wxm,myz->wxyz", C, c)
        + np.einsum("wym,mxz->wxyz", C, c)
        - np.einsum("wzm,mxy->wxyz", C, c)
        - np.einsum("xym,mwz->wxyz", C, c)
        + np.einsum("xzm,mwy->wxyz", C, c)
        - np.einsum("yzm,mwx->wxyz", C, c)
    )
    return float(np.max(np.abs(dc)))


@dataclass(frozen=True)
class SampleConfig:
    samples: int = 1000
    seed: int = 42
    tolerance: float = DEFAULT_TOL
    box: tuple[tuple[Fraction, Fraction], ...] = DEFAULT_BOX
    max_draws: int | None = None
    point: tuple[Fraction, Fraction, Fraction] | None = None

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if len(self.box) != 3 or any(lo >= hi for lo, hi in self.box):
            raise ValueError("box needs three (low, high) pairs with low < high")


@dataclass
class SampleReport:
    config: SampleConfig
    draws: int = 0
    accepted: int = 0
    pass_pd: int = 0
    pass_j: int = 0
    pass_dc: int = 0
    max_j_residual: float = 0.0
    max_dc_residual: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        n = self.accepted
        return n > 0 and self.pass_pd == n and self.pass_j == n and self.pass_dc == n

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "schema": "g2skt/1",
            "prng": PRNG,
            "seed": cfg.seed,
            "tolerance": cfg.tolerance,
            "box": [[str(lo), str(hi)] for lo, hi in cfg.box],
            "forced_point": None if cfg.point is None else [str(x) for x in cfg.point],
            "draws": self.draws,
            "accepted": self.accepted,
            "positive_definite": self.pass_pd,
            "j_invariant": self.pass_j,
            "dc_zero": self.pass_dc,
            "max_j_residual": self.max_j_residual,
            "max_dc_residual": self.max_dc_residual,
            "failures": self.failures[:20],
            "pass": self.all_pass,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        cfg = self.config
        n = max(self.accepted, 1)
        lines = [
            f"prng {PRNG} seed {cfg.seed} tol {cfg.tolerance:g}",
            f"draws {self.draws} accepted {self.accepted}",
            f"positive definite {self.pass_pd}/{self.accepted} ({100 * self.pass_pd / n:.1f}%)",
            f"J-invariant       {self.pass_j}/{self.accepted} ({100 * self.pass_j / n:.1f}%)"
            f"  max residual {self.max_j_residual:.3e}",
            f"dc = 0            {self.pass_dc}/{self.accepted} ({100 * self.pass_dc / n:.1f}%)"
            f"  max residual {self.max_dc_residual:.3e}",
            "PASS" if self.all_pass else "FAIL",
        ]
        return "\n".join(lines)


def _check_point(report: SampleReport, a: tuple[float, float, float], tol: float) -> None:
    g = metric_from_params(*a)
    pd = is_positive_definite(g)
    jr = j_residual(g)
    dr = dc_residual(g)
    report.accepted += 1
    report.pass_pd += pd
    report.pass_j += jr < tol
    report.pass_dc += dr < tol
    report.max_j_residual = max(report.max_j_residual, jr)
    report.max_dc_residual = max(report.max_dc_residual, dr)
    if not (pd and jr < tol and dr < tol):
        report.failures.append({"a": list(a), "pd": pd, "j_residual": jr, "dc_residual": dr})


def sample(cfg: SampleConfig) -> SampleReport:
    """Draw uniformly from the box until ``cfg.samples`` points land in the region."""
    report = SampleReport(cfg)
    if cfg.point is not None:
        a = tuple(float(x) for x in cfg.point)
        report.draws = 1
        if in_region(*a):
            _check_point(report, a, cfg.tolerance)
        return report
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    lows = np.array([float(lo) for lo, _ in cfg.box])
    highs = np.array([float(hi) for _, hi in cfg.box])
    cap = cfg.max_draws if cfg.max_draws is not None else 100 * cfg.samples
    while report.accepted < cfg.samples and report.draws < cap:
        a = tuple(float(x) for x in rng.uniform(lows, highs))
        report.draws += 1
        if in_region(*a):
            _check_point(report, a, cfg.tolerance)
    return report


# -- group-level check -------------------------------------------------------------


@cache
def phi_tensor() -> np.ndarray:
    """Fully antisymmetric array of the defining 3-form."""
    P = np.zeros((7, 7, 7))
    for (i, j, k), c in build_phi().terms.items():
        v = float(c)
        for (a, b, e), s in (
            ((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1),
            ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1),
        ):
            P[a - 1, b - 1, e - 1] = s * v
    return P


@cache
def g2_float_basis() -> np.ndarray:
    return np.array([[[float(v) for v in row] for row in m] for m in build_g2_basis().elements])


def _cross(P: np.ndarray, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.einsum("ijk,i,j->k", P, u, v)


def group_residuals(X: np.ndarray, t: float, u: np.ndarray | None = None, v: np.ndarray | None = None) -> dict:
    """Residuals of ``F = exp(tX)`` against the G2 group properties."""
    P = phi_tensor()
    F = expm(t * X)
    pull = np.einsum("abc,ai,bj,ck->ijk", P, F, F, F)
    res = {
        "phi": float(np.max(np.abs(pull - P))),
        "orthogonal": float(np.max(np.abs(F.T @ F - np.eye(7)))),
        "det": float(abs(np.linalg.det(F) - 1.0)),
    }
    if u is not None and v is not None:
        res["cross"] = float(np.max(np.abs(F @ _cross(P, u, v) - _cross(P, F @ u, F @ v))))
    return res


@dataclass
class GroupReport:
    n: int
    seed: int
    max_residuals: dict
    threshold: float = 1e-8

    @property
    def all_pass(self) -> bool:
        return all(v < self.threshold for v in self.max_residuals.values())

    def to_dict(self) -> dict:
        return {
            "schema": "g2skt/1",
            "prng": PRNG,
            "seed": self.seed,
            "n": self.n,
            "threshold": self.threshold,
            "max_residuals": self.max_residuals,
            "pass": self.all_pass,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"prng {PRNG} seed {self.seed} exponentials {self.n}"]
        for k, v in self.max_residuals.items():
            lines.append(f"max {k:<10} residual {v:.3e}")
        lines.append("PASS" if self.all_pass else "FAIL")
        return "\n".join(lines)


def group_check(n: int, seed: int) -> GroupReport:
    """``F = exp(tX)`` for random X in g2 and t in (-1, 1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    basis = g2_float_basis()
    worst = {"phi": 0.0, "orthogonal": 0.0, "det": 0.0, "cross": 0.0}
    for _ in range(n):
        x = rng.uniform(-1.0, 1.0, DIM)
        t = rng.uniform(-1.0, 1.0)
        u, v = rng.uniform(-1.0, 1.0, 7), rng.uniform(-1.0, 1.0, 7)
        X = np.einsum("k,kij->ij", x, basis)
        for key, val in group_residuals(X, t, u, v).items():
            worst[key] = max(worst[key], val)
    return GroupReport(n, seed, worst)
