"""Mach-Zehnder interferometry as a quantum channel on anyonic states.

A probe charge b enters a two-path interferometer enclosing a target region
A whose collective charge may be entangled with its complement C. Each
probe is detected in one of two outputs; conditioning on the outcome
updates the target state entrywise through monodromy-weighted factors, and
a long probe stream collapses the target onto a class of charges the probe
cannot tell apart. This module implements the single-probe channel, seeded
probe streams, outcome statistics, the probe's charge equivalence classes,
and the asymptotic fixed states.

States live in a basis labeled (a, c, f): collective charge a in the probed
region, c in the complement, total charge f. Off-diagonal entries are
supported only when the connecting charge between the bra and ket labels is
unique; the general recoupling move needed beyond that sector is out of
scope and reported as UnsupportedBasisChange.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import rng
from .errors import (
    DegenerateTuning,
    ForbiddenConnectingCharge,
    UnitarityViolation,
    UnsupportedBasisChange,
    ZeroProbability,
)
from .model import VACUUM, AnyonModel, Charge

_ZERO_TOLERANCE = 1e-12
_CLASS_TOLERANCE = 1e-9
_UNITARITY_TOLERANCE = 1e-9

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


class ProbeOutcome(enum.Enum):
    """Detector that fired for one probe."""

    TRANSMITTED = "transmitted"
    REFLECTED = "reflected"


@dataclass(frozen=True)
class InterferometerConfig:
    """Beam-splitter amplitudes, path phases, and probe charge of one setup.

    Defaults give the symmetric untwisted interferometer: both splitters
    50/50 with real amplitudes and no path-phase difference. ``twists``
    counts full twists in the two arms; every operation in this module
    requires (0, 0), the twisted case being a different measurement
    implemented on top of :mod:`.surgery`.
    """

    probe: Charge
    t1: complex = _INV_SQRT2
    r1: complex = _INV_SQRT2
    t2: complex = _INV_SQRT2
    r2: complex = _INV_SQRT2
    theta_I: float = 0.0
    theta_II: float = 0.0
    twists: tuple[int, int] = (0, 0)

    def __post_init__(self):
        for label, t, r in (("1", self.t1, self.r1), ("2", self.t2, self.r2)):
            gap = abs(abs(t) ** 2 + abs(r) ** 2 - 1.0)
            if gap > _UNITARITY_TOLERANCE:
                raise UnitarityViolation(
                    f"splitter {label} is not unitary: |t{label}|^2 + |r{label}|^2 "
                    f"deviates from 1 by {gap:.3e}"
                )
        object.__setattr__(self, "twists", tuple(int(x) for x in self.twists))
        if len(self.twists) != 2:
            raise ValueError("twists must be a pair of integers")

    @property
    def delta(self) -> float:
        """Relative phase between the two paths."""
        return self.theta_I - self.theta_II


def _require_untwisted(config: InterferometerConfig):
    if config.twists != (0, 0):
        raise ValueError(
            "twisted interferometer configurations are modeled by the gates "
            "module; this operation covers the untwisted channel only"
        )


@dataclass(frozen=True, eq=False)
class AnyonicDensityMatrix:
    """Density matrix of a probed region entangled with its complement.

    ``labels[i]`` is the basis triple (a, c, f) of row/column i. Direct
    construction trusts its inputs (used on hot paths where validity is
    preserved by the update rule); build states from outside through
    :func:`density_matrix`, which checks hermiticity, trace, positivity,
    fusion consistency of the labels, and charge superselection.
    """

    model: AnyonModel
    labels: tuple[tuple[Charge, Charge, Charge], ...]
    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "labels", tuple(tuple(int(x) for x in lab) for lab in self.labels)
        )
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.shape != (len(self.labels), len(self.labels)):
            raise ValueError("matrix shape must match the label count")
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)

    def diagonal(self) -> np.ndarray:
        return np.real(np.diagonal(self.matrix))

    def coherence(self) -> float:
        """Largest off-diagonal magnitude relative to the largest population."""
        return _coherence(self.matrix)

    def charge_weight(self, charges) -> float:
        """Total population carried by labels whose probed charge is listed."""
        wanted = set(charges)
        diag = self.diagonal()
        return float(sum(diag[i] for i, (a, _, _) in enumerate(self.labels) if a in wanted))


def _coherence(matrix: np.ndarray) -> float:
    n = matrix.shape[0]
    if n < 2:
        return 0.0
    off = np.abs(matrix - np.diag(np.diagonal(matrix)))
    top = float(np.max(np.real(np.diagonal(matrix))))
    if top <= 0.0:
        return 0.0
    return float(np.max(off)) / top


def density_matrix(
    model: AnyonModel,
    labels: Sequence[tuple[Charge, Charge, Charge]],
    matrix,
) -> AnyonicDensityMatrix:
    """Validated construction of an :class:`AnyonicDensityMatrix`.

    Checks that each label (a, c, f) is fusion-allowed (f in a x c), that
    the matrix is Hermitian, unit-trace, positive semidefinite, and that no
    entry couples different total charges.
    """
    labels = tuple(tuple(int(x) for x in lab) for lab in labels)
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate basis labels")
    n_charges = model.n_charges
    for a, c, f in labels:
        if not all(0 <= x < n_charges for x in (a, c, f)):
            raise ValueError(f"label {(a, c, f)} uses charges outside the model")
        if not model.allows(a, c, f):
            raise ValueError(
                f"label ({model.charge_name(a)}, {model.charge_name(c)}, "
                f"{model.charge_name(f)}) is not fusion-allowed"
            )
    matrix = np.array(matrix, dtype=complex)
    if matrix.shape != (len(labels), len(labels)):
        raise ValueError("matrix shape must match the label count")
    if float(np.max(np.abs(matrix - matrix.conj().T))) > _CLASS_TOLERANCE:
        raise ValueError("density matrix must be Hermitian")
    if abs(complex(np.trace(matrix)) - 1.0) > _CLASS_TOLERANCE:
        raise ValueError("density matrix must have unit trace")
    if float(np.min(np.linalg.eigvalsh(matrix))) < -_CLASS_TOLERANCE:
        raise ValueError("density matrix must be positive semidefinite")
    for i, (_, _, fi) in enumerate(labels):
        for j, (_, _, fj) in enumerate(labels):
            if fi != fj and abs(matrix[i, j]) > _ZERO_TOLERANCE:
                raise ValueError(
                    "superselection violated: entry couples total charges "
                    f"{model.charge_name(fi)} and {model.charge_name(fj)}"
                )
    return AnyonicDensityMatrix(model=model, labels=labels, matrix=matrix)


# ---------------------------------------------------------------------------
# single-probe channel


def p_factor(
    model: AnyonModel,
    a: Charge,
    a_prime: Charge,
    e: Charge,
    config: InterferometerConfig,
    s: ProbeOutcome,
) -> complex:
    """Entrywise update factor of one probe for a bra/ket charge pair.

    ``e`` is the connecting charge between the ket label a and the bra
    label a'; it must appear in a x conj(a'). Diagonal factors (a = a',
    e = vacuum) are the outcome probabilities for a sharp charge a.
    """
    if not model.allows(a, model.dual[a_prime], e):
        raise ForbiddenConnectingCharge(
            f"{model.charge_name(e)} does not connect {model.charge_name(a)} "
            f"to {model.charge_name(a_prime)}"
        )
    m = model.monodromy
    b = config.probe
    t1, r1, t2, r2 = (complex(x) for x in (config.t1, config.r1, config.t2, config.r2))
    phase = cmath.exp(1j * config.delta)
    cross_ket = t1 * r1.conjugate() * r2.conjugate() * t2.conjugate() * phase * m[a, b]
    cross_bra = t1.conjugate() * r1 * t2 * r2 * phase.conjugate() * m[a_prime, b].conjugate()
    if s is ProbeOutcome.TRANSMITTED:
        return (
            abs(t1) ** 2 * abs(r2) ** 2 * m[e, b]
            + cross_ket
            + cross_bra
            + abs(r1) ** 2 * abs(t2) ** 2
        )
    return (
        abs(t1) ** 2 * abs(t2) ** 2 * m[e, b]
        - cross_ket
        - cross_bra
        + abs(r1) ** 2 * abs(r2) ** 2
    )


def _connecting_charge(model, ket, bra):
    """Unique charge linking two basis labels, or None when structurally absent.

    Candidates must be absorbable on both the probed side and the
    complement side. Returns (status, charge) with status one of
    "zero" (no candidate or different total charge), "unique", "ambiguous".
    """
    a, c, f = ket
    a2, c2, f2 = bra
    if f != f2:
        return "zero", None
    candidates = set(model.fusion_outcomes(a, model.dual[a2])) & set(
        model.fusion_outcomes(c, model.dual[c2])
    )
    if not candidates:
        return "zero", None
    if len(candidates) > 1:
        return "ambiguous", None
    return "unique", candidates.pop()


def _factor_matrices(model, labels, matrix, config):
    """Per-entry probe factors for both outcomes over a fixed label basis.

    Entries without a unique connecting charge get factor 0; if the state
    actually populates such an entry the channel is outside the supported
    sector and UnsupportedBasisChange is raised.
    """
    n = len(labels)
    p_t = np.zeros((n, n), dtype=complex)
    p_r = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            status, e = _connecting_charge(model, labels[i], labels[j])
            if status == "unique":
                p_t[i, j] = p_factor(model, labels[i][0], labels[j][0], e, config, ProbeOutcome.TRANSMITTED)
                p_r[i, j] = p_factor(model, labels[i][0], labels[j][0], e, config, ProbeOutcome.REFLECTED)
            elif status == "ambiguous" and matrix is not None and abs(matrix[i, j]) > _ZERO_TOLERANCE:
                ai, ci, fi = labels[i]
                aj, cj, fj = labels[j]
                raise UnsupportedBasisChange(
                    "no unique connecting charge between "
                    f"({model.charge_name(ai)}, {model.charge_name(ci)}; {model.charge_name(fi)}) and "
                    f"({model.charge_name(aj)}, {model.charge_name(cj)}; {model.charge_name(fj)}); "
                    "the populated entry would need a recoupling move this package does not model"
                )
    return p_t, p_r


def apply_probe(
    model: AnyonModel,
    rho: AnyonicDensityMatrix,
    config: InterferometerConfig,
    s: ProbeOutcome,
) -> tuple[float, AnyonicDensityMatrix]:
    """Send one probe through and condition on detector outcome s.

    Returns the outcome probability and the conditioned state. The
    probability depends on the populations only; conditioning rescales
    every entry by its outcome factor.
    """
    _require_untwisted(config)
    p_t, p_r = _factor_matrices(model, rho.labels, rho.matrix, config)
    factors = p_t if s is ProbeOutcome.TRANSMITTED else p_r
    probability = float(np.real(np.sum(rho.diagonal() * np.diagonal(factors))))
    if probability < _ZERO_TOLERANCE:
        raise ZeroProbability(
            f"outcome {s.value} has probability {probability:.3e}; "
            "conditioning on it is not meaningful"
        )
    post = AnyonicDensityMatrix(
        model=model, labels=rho.labels, matrix=rho.matrix * factors / probability
    )
    return probability, post


# ---------------------------------------------------------------------------
# probe streams


@dataclass(frozen=True, eq=False)
class ProbeTrajectory:
    """One seeded run of N probes conditioned on its own outcomes.

    ``probabilities[k]`` is the probability the observed outcome k had
    given the state at that moment; ``coherences[k]`` is the conditioned
    state's coherence right after probe k. ``states`` is populated only
    when state retention was requested.
    """

    seed: int
    outcomes: tuple[ProbeOutcome, ...]
    probabilities: tuple[float, ...]
    coherences: tuple[float, ...]
    final_state: AnyonicDensityMatrix
    states: tuple[AnyonicDensityMatrix, ...] | None = None
    n_transmitted: int = field(init=False, default=0)
    fraction: float = field(init=False, default=0.0)

    def __post_init__(self):
        n = sum(1 for s in self.outcomes if s is ProbeOutcome.TRANSMITTED)
        object.__setattr__(self, "n_transmitted", n)
        total = len(self.outcomes)
        object.__setattr__(self, "fraction", n / total if total else 0.0)


def simulate_stream(
    model: AnyonModel,
    rho: AnyonicDensityMatrix,
    config: InterferometerConfig,
    n_probes: int,
    seed: int,
    keep_states: bool = False,
) -> ProbeTrajectory:
    """Run a seeded stream of identical probes, conditioning after each.

    Outcomes are drawn from the running conditional probabilities with a
    counter-based generator, so equal (seed, inputs) give bit-identical
    trajectories. The per-entry factors do not depend on the state and are
    computed once for the whole stream.
    """
    _require_untwisted(config)
    if n_probes < 0:
        raise ValueError("probe count must be nonnegative")
    p_t, p_r = _factor_matrices(model, rho.labels, rho.matrix, config)
    diag_t = np.real(np.diagonal(p_t))
    uniforms = rng.generator(seed).random(n_probes)
    state = np.array(rho.matrix, dtype=complex)
    outcomes, probabilities, coherences, states = [], [], [], []
    for u in uniforms:
        pr_t = float(np.real(np.diagonal(state)) @ diag_t)
        pr_t = min(max(pr_t, 0.0), 1.0)
        if pr_t < _ZERO_TOLERANCE:
            transmitted = False
        elif 1.0 - pr_t < _ZERO_TOLERANCE:
            transmitted = True
        else:
            transmitted = u < pr_t
        if transmitted:
            outcome, pr_s, factors = ProbeOutcome.TRANSMITTED, pr_t, p_t
        else:
            outcome, pr_s, factors = ProbeOutcome.REFLECTED, 1.0 - pr_t, p_r
        state = state * factors / pr_s
        outcomes.append(outcome)
        probabilities.append(pr_s)
        coherences.append(_coherence(state))
        if keep_states:
            states.append(AnyonicDensityMatrix(model=model, labels=rho.labels, matrix=state))
    final = AnyonicDensityMatrix(model=model, labels=rho.labels, matrix=state)
    return ProbeTrajectory(
        seed=int(seed),
        outcomes=tuple(outcomes),
        probabilities=tuple(probabilities),
        coherences=tuple(coherences),
        final_state=final,
        states=tuple(states) if keep_states else None,
    )


# ---------------------------------------------------------------------------
# probe-visible charge classes and asymptotics


@dataclass(frozen=True)
class ChargeClass:
    """Charges a given probe cannot distinguish, with their transmission."""

    probe: Charge
    members: tuple[Charge, ...]
    transmission: float


@dataclass(frozen=True)
class EquivalenceClass:
    """Partition of all charges by what the probe's monodromy resolves."""

    probe: Charge
    classes: tuple[ChargeClass, ...]


def equivalence_classes(
    model: AnyonModel, b: Charge, config: InterferometerConfig
) -> EquivalenceClass:
    """Group charges indistinguishable to probe b, with per-class transmission.

    Charges a, a' fall together exactly when their monodromies with b
    agree; the class transmission is the diagonal probe factor of any
    member under ``config``.
    """
    groups: list[list[Charge]] = []
    for a in range(model.n_charges):
        value = model.monodromy[a, b]
        for group in groups:
            if abs(model.monodromy[group[0], b] - value) <= _CLASS_TOLERANCE:
                group.append(a)
                break
        else:
            groups.append([a])
    classes = []
    for group in groups:
        p = p_factor(model, group[0], group[0], VACUUM, config, ProbeOutcome.TRANSMITTED)
        classes.append(
            ChargeClass(probe=b, members=tuple(group), transmission=float(p.real))
        )
    return EquivalenceClass(probe=b, classes=tuple(classes))


def fixed_state(
    model: AnyonModel, rho: AnyonicDensityMatrix, kappa: ChargeClass
) -> AnyonicDensityMatrix:
    """Limit state after infinitely many probes, given collapse onto a class.

    Projects onto probed charges in the class, renormalizes, then removes
    every entry whose connecting charge the probe can detect (monodromy
    with the probe differing from 1).
    """
    members = set(kappa.members)
    keep = np.array([lab[0] in members for lab in rho.labels])
    matrix = np.array(rho.matrix, dtype=complex)
    matrix[~keep, :] = 0.0
    matrix[:, ~keep] = 0.0
    weight = float(np.real(np.trace(matrix)))
    if weight < _ZERO_TOLERANCE:
        raise ZeroProbability(
            "state carries no weight on class "
            f"{{{', '.join(model.charge_name(a) for a in kappa.members)}}}"
        )
    matrix /= weight
    for i in range(len(rho.labels)):
        for j in range(len(rho.labels)):
            if i == j or not matrix[i, j]:
                continue
            status, e = _connecting_charge(model, rho.labels[i], rho.labels[j])
            if status == "ambiguous":
                raise UnsupportedBasisChange(
                    "no unique connecting charge for a populated entry; "
                    "cannot apply the decoherence rule"
                )
            if status == "zero" or abs(model.monodromy[e, kappa.probe] - 1.0) > _CLASS_TOLERANCE:
                matrix[i, j] = 0.0
    return AnyonicDensityMatrix(model=model, labels=rho.labels, matrix=matrix)


def asymptotic_measure(
    model: AnyonModel, rho: AnyonicDensityMatrix, config: InterferometerConfig
) -> list[tuple[float, AnyonicDensityMatrix]]:
    """Long-stream collapse law: (probability, fixed state) per charge class.

    Requires generic tuning: two classes sharing a transmission value would
    be indistinguishable in outcome statistics, so that raises
    DegenerateTuning rather than returning an ill-defined table.
    """
    _require_untwisted(config)
    partition = equivalence_classes(model, config.probe, config)
    for i, first in enumerate(partition.classes):
        for second in partition.classes[i + 1:]:
            if abs(first.transmission - second.transmission) < _CLASS_TOLERANCE:
                raise DegenerateTuning(
                    "classes {"
                    + ", ".join(model.charge_name(a) for a in first.members)
                    + "} and {"
                    + ", ".join(model.charge_name(a) for a in second.members)
                    + f"}} share transmission {first.transmission!r}; "
                    "outcome statistics cannot separate them"
                )
    _factor_matrices(model, rho.labels, rho.matrix, config)
    table = []
    for kappa in partition.classes:
        weight = rho.charge_weight(kappa.members)
        if weight < _ZERO_TOLERANCE:
            continue
        table.append((weight, fixed_state(model, rho, kappa)))
    return table


def outcome_distribution(
    model: AnyonModel, rho: AnyonicDensityMatrix, config: InterferometerConfig, n_probes: int
) -> dict[int, float]:
    """Probability of each transmitted count over a stream of n_probes.

    A mixture of binomials, one per charge class, weighted by the state's
    population of that class.
    """
    _require_untwisted(config)
    if n_probes < 0:
        raise ValueError("probe count must be nonnegative")
    _factor_matrices(model, rho.labels, rho.matrix, config)
    partition = equivalence_classes(model, config.probe, config)
    distribution = {n: 0.0 for n in range(n_probes + 1)}
    for kappa in partition.classes:
        weight = rho.charge_weight(kappa.members)
        if weight < _ZERO_TOLERANCE:
            continue
        p = min(max(kappa.transmission, 0.0), 1.0)
        for n in range(n_probes + 1):
            distribution[n] += (
                weight * math.comb(n_probes, n) * p**n * (1.0 - p) ** (n_probes - n)
            )
    return distribution
