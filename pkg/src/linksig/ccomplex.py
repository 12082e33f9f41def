"""Colored links presented by generalized Seifert matrices.

A mu-colored link evaluated through a C-complex is described here purely by
matrix data: for every sign pattern eps in {+1, -1}^mu there is an integer
matrix A^eps of linking numbers between basis cycles and their push-offs,
subject to the structural identity A^(-eps) = (A^eps)^T.  Only the 2^(mu-1)
patterns whose first sign is + are stored; the rest are recovered by
transposition, which makes the identity hold by construction instead of by
bookkeeping.

From this data the Hermitian matrix

    H(omega) = sum_eps  prod_i (1 - conj(omega_i)^eps_i) * A^eps

is assembled at any point omega of the torus with no coordinate equal to 1.
Its signature and nullity are the multivariable link invariants consumed by
the rest of the package.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import cos, pi, sin
from typing import Iterable, Mapping, Sequence

import numpy as np

SignPattern = tuple[int, ...]

_HALF = Fraction(1, 2)


def canonical_patterns(mu: int) -> tuple[SignPattern, ...]:
    """The 2^(mu-1) sign patterns whose first sign is +1, in fixed order."""
    if mu < 1:
        raise ValueError("mu must be at least 1")
    return tuple((1,) + rest for rest in itertools.product((1, -1), repeat=mu - 1))


def all_patterns(mu: int) -> tuple[SignPattern, ...]:
    if mu < 1:
        raise ValueError("mu must be at least 1")
    return tuple(itertools.product((1, -1), repeat=mu))


def negate_pattern(pattern: SignPattern) -> SignPattern:
    return tuple(-s for s in pattern)


def pattern_from_string(text: str) -> SignPattern:
    """Parse a pattern key such as ``"+-"`` into a tuple of signs."""
    signs = []
    for ch in text:
        if ch == "+":
            signs.append(1)
        elif ch == "-":
            signs.append(-1)
        else:
            raise ValueError(f"invalid sign character {ch!r} in pattern {text!r}")
    if not signs:
        raise ValueError("empty sign pattern")
    return tuple(signs)


def pattern_to_string(pattern: SignPattern) -> str:
    return "".join("+" if s > 0 else "-" for s in pattern)


def _parse_fraction(text: str) -> Fraction:
    # Decimal angles are rejected on purpose: reproducibility wants exact
    # fractions of a full turn ("1/2" for -1, "1/6" for exp(i*pi/3), ...).
    item = str(text).strip()
    if "." in item:
        raise ValueError(f"decimal angle {item!r} rejected, use an exact fraction p/q")
    try:
        return Fraction(item)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid fraction {item!r}") from exc


@dataclass(frozen=True)
class TorusPoint:
    """A point omega in the torus, one exact angle fraction per color.

    Coordinate i is ``exp(2*pi*1j*fractions[i])`` with ``0 < q < 1``, so no
    coordinate can equal 1.
    """

    fractions: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.fractions:
            raise ValueError("torus point needs at least one coordinate")
        for q in self.fractions:
            if not isinstance(q, Fraction):
                raise ValueError(f"coordinate {q!r} is not an exact fraction")
            if not 0 < q < 1:
                raise ValueError(
                    f"angle fraction {q} outside (0, 1): coordinate would leave the "
                    "punctured torus"
                )

    @classmethod
    def of(cls, *fractions) -> "TorusPoint":
        return cls(tuple(Fraction(q) for q in fractions))

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "TorusPoint":
        return cls(tuple(_parse_fraction(s) for s in items))

    @classmethod
    def minus_ones(cls, mu: int) -> "TorusPoint":
        return cls((_HALF,) * mu)

    @classmethod
    def diagonal(cls, q, mu: int) -> "TorusPoint":
        return cls((Fraction(q),) * mu)

    @property
    def mu(self) -> int:
        return len(self.fractions)

    def is_minus_ones(self) -> bool:
        return all(q == _HALF for q in self.fractions)

    def values(self) -> tuple[complex, ...]:
        out = []
        for q in self.fractions:
            if q == _HALF:
                out.append(complex(-1.0, 0.0))
            elif q == Fraction(1, 4):
                out.append(complex(0.0, 1.0))
            elif q == Fraction(3, 4):
                out.append(complex(0.0, -1.0))
            else:
                angle = 2.0 * pi * float(q)
                out.append(complex(cos(angle), sin(angle)))
        return tuple(out)

    def __str__(self):
        return ",".join(str(q) for q in self.fractions)


class GeneralizedSeifertSystem:
    """A colored link given by its canonical family of Seifert matrices.

    Parameters
    ----------
    mu: number of colors (at least 1).
    rank: dimension n of the matrices (rank of H_1 of the C-complex).
    matrices: mapping from canonical sign patterns (tuples or strings such
        as ``"+-"``) to n x n integer matrices.
    linking: optional symmetric mu x mu integer matrix of pairwise total
        linking numbers between colors; the diagonal is ignored.
    components: optional per-color (sigma, eta) pairs recording the
        Levine-Tristram invariants of each sublink at the evaluation point
        of interest; unknotted components carry (0, 0) at every point.
    name: optional display name.

    Construction is permissive: structural problems are reported by
    :func:`validate`, not raised here, so that malformed files can be
    loaded and diagnosed.
    """

    def __init__(self, mu, rank, matrices, linking=None, components=None, name=None):
        self.mu = int(mu)
        self.rank = int(rank)
        normalized = {}
        for key, value in dict(matrices).items():
            pattern = pattern_from_string(key) if isinstance(key, str) else tuple(key)
            array = np.asarray(value)
            if array.size == 0:
                array = array.reshape(0, 0)
            normalized[pattern] = array
        self.matrices = normalized
        self.linking = None if linking is None else np.asarray(linking)
        self.components = None if components is None else tuple(
            (int(s), int(e)) for s, e in components
        )
        self.name = name

    def matrix(self, pattern: SignPattern) -> np.ndarray:
        """A^eps for any of the 2^mu patterns, transposing when needed."""
        pattern = tuple(pattern)
        if pattern in self.matrices:
            return self.matrices[pattern]
        return self.matrices[negate_pattern(pattern)].T

    def total_linking(self) -> int:
        if self.linking is None:
            raise ValueError("no linking data on this system")
        lk = np.asarray(self.linking)
        return int(sum(lk[i][j] for i in range(self.mu) for j in range(i + 1, self.mu)))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<GeneralizedSeifertSystem{label} mu={self.mu} rank={self.rank}>"


def validate(gss: GeneralizedSeifertSystem) -> list[str]:
    """Check every structural invariant; return one message per violation."""
    problems: list[str] = []
    if gss.mu < 1:
        problems.append(f"mu must be at least 1, got {gss.mu}")
        return problems
    if gss.rank < 0:
        problems.append(f"rank must be non-negative, got {gss.rank}")

    expected = set(canonical_patterns(gss.mu))
    present = set(gss.matrices)
    for pattern in sorted(expected - present, reverse=True):
        problems.append(f"missing matrix for canonical pattern '{pattern_to_string(pattern)}'")
    for pattern in sorted(present - expected, reverse=True):
        label = pattern_to_string(pattern)
        if len(pattern) != gss.mu:
            problems.append(f"pattern '{label}' has length {len(pattern)}, expected {gss.mu}")
        elif pattern and pattern[0] != 1:
            problems.append(f"pattern '{label}' is not canonical (first sign must be +)")
        else:
            problems.append(f"unexpected pattern '{label}'")

    for pattern in sorted(expected & present, reverse=True):
        a = gss.matrices[pattern]
        label = pattern_to_string(pattern)
        if a.ndim != 2 or a.shape != (gss.rank, gss.rank):
            problems.append(
                f"matrix for pattern '{label}' has shape {a.shape}, expected "
                f"({gss.rank}, {gss.rank})"
            )
            continue
        if a.size and not all(v == int(v) for v in np.ravel(a).tolist()):
            problems.append(f"matrix for pattern '{label}' has non-integer entries")

    if gss.linking is not None:
        lk = gss.linking
        if lk.shape != (gss.mu, gss.mu):
            problems.append(f"linking matrix has shape {lk.shape}, expected ({gss.mu}, {gss.mu})")
        elif not np.array_equal(lk, lk.T):
            problems.append("linking matrix is not symmetric")

    if gss.components is not None:
        if len(gss.components) != gss.mu:
            problems.append(
                f"components list has length {len(gss.components)}, expected {gss.mu}"
            )
        else:
            for i, (_, eta) in enumerate(gss.components):
                if eta < 0:
                    problems.append(f"component {i} has negative nullity {eta}")

    return problems


def assemble_h(gss: GeneralizedSeifertSystem, omega: TorusPoint) -> np.ndarray:
    """The Hermitian matrix H(omega) of the system at a torus point."""
    if omega.mu != gss.mu:
        raise ValueError(f"torus point has {omega.mu} coordinates, system has {gss.mu} colors")
    values = omega.values()
    h = np.zeros((gss.rank, gss.rank), dtype=complex)
    for pattern in all_patterns(gss.mu):
        coefficient = 1.0 + 0.0j
        for w, sign in zip(values, pattern):
            # conj(w)^sign on the unit circle: conj(w) for +, w itself for -.
            coefficient *= (1.0 - w.conjugate()) if sign > 0 else (1.0 - w)
        h += coefficient * np.asarray(gss.matrix(pattern), dtype=complex)
    return h


def h_at_minus_ones(gss: GeneralizedSeifertSystem) -> np.ndarray:
    """Exact integer H at omega = (-1, ..., -1).

    Every factor (1 - conj(omega_i)^eps_i) equals 2 there, so the value is
    2^mu times the sum of the full matrix family.
    """
    total = np.zeros((gss.rank, gss.rank), dtype=np.int64)
    for pattern in canonical_patterns(gss.mu):
        a = np.asarray(gss.matrices[pattern], dtype=np.int64)
        total += a + a.T
    return (2**gss.mu) * total


def system_to_dict(gss: GeneralizedSeifertSystem) -> dict:
    doc = {
        "mu": gss.mu,
        "rank": gss.rank,
        "matrices": {
            pattern_to_string(p): np.asarray(m).tolist()
            for p, m in sorted(gss.matrices.items(), reverse=True)
        },
    }
    if gss.linking is not None:
        doc["linking"] = np.asarray(gss.linking).tolist()
    if gss.components is not None:
        doc["components"] = [{"sigma": s, "eta": e} for s, e in gss.components]
    if gss.name is not None:
        doc["name"] = gss.name
    return doc


def system_from_dict(doc: Mapping) -> GeneralizedSeifertSystem:
    """Build a system from the JSON document format.

    Only syntactic problems raise here; structural ones (wrong shapes,
    missing patterns) are left for :func:`validate` to report.
    """
    try:
        mu = int(doc["mu"])
        rank = int(doc["rank"])
        matrices = doc["matrices"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed system document: {exc}") from exc
    if not isinstance(matrices, Mapping):
        raise ValueError("'matrices' must be an object keyed by sign patterns")
    components = None
    if "components" in doc:
        components = [(rec["sigma"], rec["eta"]) for rec in doc["components"]]
    return GeneralizedSeifertSystem(
        mu=mu,
        rank=rank,
        matrices={key: value for key, value in matrices.items()},
        linking=doc.get("linking"),
        components=components,
        name=doc.get("name"),
    )


def load_system(path) -> GeneralizedSeifertSystem:
    with open(path, encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON: {exc}") from exc
    return system_from_dict(doc)


def save_system(gss: GeneralizedSeifertSystem, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(system_to_dict(gss), handle, indent=2, sort_keys=True)
        handle.write("\n")
