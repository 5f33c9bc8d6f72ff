"""Floating-point simulation of the Grover walk on the complete graph with self-loops."""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

DEFAULT_TRIALS = 8
DEFAULT_TOL = 1e-9
NORM_TOL = 1e-12


@dataclass
class AmplitudeState:
    """Stacked vertex blocks psi(v_1), ..., psi(v_n); length n**2."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (self.n * self.n,):
            raise ValueError(f"expected {self.n * self.n} amplitudes, got {self.amplitudes.shape}")

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def vertex_probabilities(self) -> np.ndarray:
        blocks = self.amplitudes.reshape(self.n, self.n)
        return np.sum(np.abs(blocks) ** 2, axis=1)


@dataclass
class WalkTrace:
    states: list[AmplitudeState]
    probabilities: list[np.ndarray]
    detected_period: int | None = None
    seed: int | None = None

    @property
    def n(self) -> int:
        return self.states[0].n

    def write_probability_csv(self, fh) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["t", "vertex", "probability"])
        for t, probs in enumerate(self.probabilities):
            for v, p in enumerate(probs, start=1):
                w.writerow([t, v, repr(float(p))])

    def write_amplitude_csv(self, fh) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["t", "index", "re", "im"])
        for t, state in enumerate(self.states):
            for i, a in enumerate(state.amplitudes):
                w.writerow([t, i, repr(float(a.real)), repr(float(a.imag))])


def build_P_float(n: int, j: int) -> np.ndarray:
    p = np.zeros((n, n))
    p[j, :] = 2.0 / n
    p[j, j] -= 1.0
    return p


def build_U_float(n: int) -> np.ndarray:
    """Block (r, c) of the n^2 x n^2 evolution matrix is P_((c - r) mod n)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    u = np.zeros((n * n, n * n), dtype=complex)
    for r in range(n):
        for c in range(n):
            u[r * n:(r + 1) * n, c * n:(c + 1) * n] = build_P_float(n, (c - r) % n)
    return u


def uniform_state(n: int) -> AmplitudeState:
    return AmplitudeState(n, np.full(n * n, 1.0 / n, dtype=complex))


def vertex_state(n: int, vertex: int) -> AmplitudeState:
    """Equal amplitude on the block of ``vertex`` (1-based), zero elsewhere."""
    if not 1 <= vertex <= n:
        raise ValueError(f"vertex must be in 1..{n}, got {vertex}")
    amps = np.zeros(n * n, dtype=complex)
    amps[(vertex - 1) * n:vertex * n] = 1.0 / np.sqrt(n)
    return AmplitudeState(n, amps)


def random_state(n: int, rng: np.random.Generator) -> AmplitudeState:
    z = rng.standard_normal(n * n) + 1j * rng.standard_normal(n * n)
    return AmplitudeState(n, z / np.linalg.norm(z))


def simulate(n: int, initial: AmplitudeState, steps: int, seed: int | None = None) -> WalkTrace:
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if initial.n != n:
        raise ValueError(f"initial state is for n={initial.n}, not {n}")
    if abs(initial.norm - 1.0) > NORM_TOL:
        raise ValueError(f"initial state is not normalized (norm {initial.norm!r})")
    u = build_U_float(n)
    states = [initial]
    psi = initial.amplitudes
    for _ in range(steps):
        psi = u @ psi
        states.append(AmplitudeState(n, psi))
    return WalkTrace(states, [s.vertex_probabilities() for s in states], seed=seed)


def detect_period(n: int, trials: int = DEFAULT_TRIALS, max_steps: int | None = None,
                  tol: float = DEFAULT_TOL, seed: int = 0) -> int | None:
    """Smallest t <= max_steps at which every random trial state has returned.

    Several trials are evolved together, so the result is the lcm of their
    individual periods rather than a period of one possibly special state.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_steps is None:
        max_steps = 4 * n
    rng = np.random.default_rng(seed)
    psi0 = np.stack([random_state(n, rng).amplitudes for _ in range(trials)], axis=1)
    u = build_U_float(n)
    psi = psi0
    for t in range(1, max_steps + 1):
        psi = u @ psi
        if np.max(np.linalg.norm(psi - psi0, axis=0)) < tol:
            return t
    return None


def norm_drift(n: int, steps: int, seed: int = 0) -> float:
    """Largest | ||psi_t|| - 1 | seen over ``steps`` steps from a random start."""
    state = random_state(n, np.random.default_rng(seed))
    trace = simulate(n, state, steps)
    return max(abs(s.norm - 1.0) for s in trace.states)


def parse_init(spec: str, n: int, seed: int = 0) -> AmplitudeState:
    """``uniform``, ``vertex:j`` (1-based) or ``seeded-random``."""
    if spec == "uniform":
        return uniform_state(n)
    if spec == "seeded-random":
        return random_state(n, np.random.default_rng(seed))
    if spec.startswith("vertex:"):
        try:
            j = int(spec.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad vertex index in {spec!r}") from None
        return vertex_state(n, j)
    raise ValueError(f"unknown init spec {spec!r}")
