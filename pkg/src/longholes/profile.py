"""Numeric constants driving the pack-or-hit subroutines.

The default "paper" profile carries the full-size constants. Toy profiles shrink the
window and clearance radii so the machinery can run on graphs with a few
hundred vertices; the derived size factors are recomputed from the scaled
radii so every size bound stays an honest consequence of the construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


def simonovits_threshold(k: int, base: float = 2.0) -> float:
    """``s_k``: a cubic graph on at least this many vertices has ``k``
    vertex-disjoint cycles. Logarithms are taken in ``base``."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return 2.0
    lg = math.log(k, base)
    return 4 * k * (lg + math.log(lg, base) + 4)


@dataclass(frozen=True)
class ConstantsProfile:
    name: str = "paper"
    window_B: int = 60
    clearance_first: int = 15
    hit_radius_first: int = 60
    ball_r: int = 3
    ear_guard: int = 31
    appendage_sep: int = 20
    davoid_small: int = 320
    davoid_boundary: int = 160
    davoid_block: int = 20
    davoid_strip: int = 59
    davoid_factor: int = 380
    second_clearance: int = 90
    second_bound_factor: int = 183
    first_bound_factor: int = 212
    ear_factor: int = 63
    appendage_factor: int = 20
    mu_lin: int = 88575
    mu_s: int = 24003
    log_base: float = 2.0
    budget: int | None = None
    budget_slope: int | None = None

    @property
    def is_paper(self) -> bool:
        return self.name == "paper"

    def s(self, k: int) -> float:
        return simonovits_threshold(k, self.log_base)

    def mu(self, k: int) -> float:
        """Per-cycle hitting budget used by the peeling driver: a fixed budget,
        else a linear toy budget, else the formula."""
        if self.budget is not None:
            return self.budget
        if self.budget_slope is not None:
            return self.budget_slope * k
        return self.mu_formula(k)

    def mu_formula(self, k: int) -> float:
        return self.mu_lin * k + self.mu_s * self.s(k)

    def davoid_layer(self, i: int) -> int:
        return self.davoid_block * i

    def derived_factors(self) -> dict[str, int]:
        """Size factors implied by the radii (what each subroutine can add)."""
        first = 2 + self.window_B + 2 * self.clearance_first + 2 * self.hit_radius_first
        ear = 2 * self.ear_guard + 1
        davoid = max(self.davoid_small, 2 * self.davoid_boundary + self.davoid_strip + 1)
        second = 2 + 2 * self.second_clearance + 1
        return {
            "first_bound_factor": first,
            "ear_factor": ear,
            "appendage_factor": self.appendage_sep,
            "davoid_factor": davoid,
            "second_bound_factor": second,
            "mu_lin": (1 + davoid) * (first + self.appendage_sep) + second,
            "mu_s": (1 + davoid) * ear,
        }

    def is_consistent(self) -> bool:
        return all(getattr(self, key) == val for key, val in self.derived_factors().items())


PAPER = ConstantsProfile()


def toy_profile(divisor: int, budget: int | None = None) -> ConstantsProfile:
    """Divide window and clearance radii by ``divisor`` (windows floored at 6,
    clearances at 2). Without an explicit ``budget`` the per-cycle budget is
    ``2 * window * k``."""
    if divisor < 1:
        raise ValueError("divisor must be at least 1")

    def clear(x: int) -> int:
        return max(2, x // divisor)

    window = max(6, PAPER.window_B // divisor)
    block = clear(PAPER.davoid_block)
    base = replace(
        PAPER,
        name=f"toy:{divisor}" if budget is None else f"toy:{divisor}:{budget}",
        window_B=window,
        clearance_first=clear(PAPER.clearance_first),
        hit_radius_first=max(6, PAPER.hit_radius_first // divisor),
        ear_guard=clear(PAPER.ear_guard),
        appendage_sep=clear(PAPER.appendage_sep),
        davoid_block=block,
        davoid_small=16 * block,
        davoid_boundary=8 * block,
        davoid_strip=3 * block - 1,
        second_clearance=clear(PAPER.second_clearance),
        budget=budget,
        budget_slope=2 * window,
    )
    prof = replace(base, **base.derived_factors())
    return prof


def parse_profile(text: str) -> ConstantsProfile:
    """``paper``, ``toy:D``, ``toy:D:B`` or ``budget:N``."""
    parts = text.split(":")
    try:
        if parts == ["paper"]:
            return PAPER
        if parts[0] == "toy" and len(parts) in (2, 3):
            budget = int(parts[2]) if len(parts) == 3 else None
            if budget is not None and budget < 1:
                raise ValueError
            return toy_profile(int(parts[1]), budget)
        if parts[0] == "budget" and len(parts) == 2:
            n = int(parts[1])
            if n < 1:
                raise ValueError
            return replace(PAPER, name=text, budget=n)
    except ValueError:
        pass
    raise ValueError(f"unknown profile {text!r}; use paper, toy:D, toy:D:B or budget:N")
