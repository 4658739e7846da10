"""Known complexity status of R(k,j,d).

R(k,j,d) asks whether a complex is the k-skeleton of the nerve of
j-dimensional convex sets in R^d.  Every instance lies in the existential
theory of the reals; the rules below refine that where results are known.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass


class Status(enum.Enum):
    Polynomial = "Polynomial"
    ExistsRComplete = "ExistsRComplete"
    Trivial = "Trivial"
    OpenInExistsR = "OpenInExistsR"


SOURCES = {
    "k11": "Lemma: R(k,1,1) is in P",
    "k1d": "Lemma: R(k,1,d) is ∃ℝ-hard for k>=1, d>=2",
    "k22": "Lemma: R(k,2,2) is ∃ℝ-hard for k>=1",
    "lift": "Theorem: R(k,d-1,d) and R(k,d,d) are ∃ℝ-complete for d>=2, k>=d",
    "wegner": "Lemma: R(k,2k+1,2k+1) is trivial, closed under d'>=d, j<=j'<=d'",
    "evans": "Lemma: R(1,2,3) is trivial, closed under d'>=d, j<=j'<=d'",
    "open": "Theorem: R(k,j,d) is contained in ∃ℝ",
}

SYMBOLS = {
    Status.Polynomial: "P",
    Status.ExistsRComplete: "∃ℝ",
    Status.Trivial: "T",
    Status.OpenInExistsR: "?",
}


@dataclass(frozen=True)
class Classification:
    k: int
    j: int
    d: int
    status: Status
    rule: str

    @property
    def source(self) -> str:
        return SOURCES[self.rule]

    @property
    def note(self) -> str:
        return "contained in ∃ℝ" if self.status is Status.OpenInExistsR else ""

    def to_json(self) -> dict:
        out = {"status": self.status.value, "source": self.source}
        if self.note:
            out["note"] = self.note
        return out


def _check(k: int, j: int, d: int) -> None:
    if min(k, j, d) < 1:
        raise ValueError("k, j and d must be positive")
    if j > d:
        raise ValueError(f"no {j}-dimensional convex set fits in R^{d}")


def hardness_rule(k: int, j: int, d: int) -> str | None:
    """Name of the first hardness (or polynomial) rule that fires, if any."""
    if j == 1 and d == 1:
        return "k11"
    if j == 1 and d >= 2:
        return "k1d"
    if j == 2 and d == 2:
        return "k22"
    if d >= 2 and k >= d and j in (d - 1, d):
        return "lift"
    return None


def triviality_rule(k: int, j: int, d: int) -> str | None:
    """Triviality closure of R(k,2k+1,2k+1) and R(1,2,3) under raising j and d."""
    if d >= 2 * k + 1 and 2 * k + 1 <= j <= d:
        return "wegner"
    if k == 1 and d >= 3 and 2 <= j <= d:
        return "evans"
    return None


def classify(k: int, j: int, d: int) -> Classification:
    _check(k, j, d)
    rule = hardness_rule(k, j, d)
    if rule == "k11":
        return Classification(k, j, d, Status.Polynomial, rule)
    if rule is not None:
        return Classification(k, j, d, Status.ExistsRComplete, rule)
    rule = triviality_rule(k, j, d)
    if rule is not None:
        return Classification(k, j, d, Status.Trivial, rule)
    return Classification(k, j, d, Status.OpenInExistsR, "open")


def overlap_audit(max_k: int = 12, max_d: int = 12) -> list[tuple[int, int, int]]:
    """Inputs matched by both a hardness rule and the triviality closure."""
    clashes = []
    for k in range(1, max_k + 1):
        for d in range(1, max_d + 1):
            for j in range(1, d + 1):
                if hardness_rule(k, j, d) and triviality_rule(k, j, d):
                    clashes.append((k, j, d))
    return clashes


def status_table(k: int, max_j: int = 8, max_d: int = 8) -> str:
    """Text table for one k: rows j, columns d; blank where j > d."""
    width = 3
    head = f"k={k}".ljust(5) + "".join(f"d={d}".rjust(width + 2) for d in range(1, max_d + 1))
    lines = [head]
    for j in range(1, max_j + 1):
        cells = []
        for d in range(1, max_d + 1):
            cells.append(SYMBOLS[classify(k, j, d).status] if j <= d else "")
        lines.append(f"j={j}".ljust(5) + "".join(c.rjust(width + 2) for c in cells))
    return "\n".join(lines)


def figure_tables(max_k: int = 4, max_j: int = 8, max_d: int = 8) -> str:
    return "\n\n".join(status_table(k, max_j, max_d) for k in range(1, max_k + 1))
