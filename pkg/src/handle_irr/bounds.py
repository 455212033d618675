"""Euler-characteristic bounds for closed reducing surfaces in a handlebody.

A closed reducing surface ``F`` of an automorphism of the genus-``g``
handlebody ``H`` satisfies ``chi(dH) + 4 <= chi(F) <= 0``, and cutting along
it uses ``n >= 2`` one-handles with ``chi(F) - 2n = chi(dH)``.  In genus 2
the window is empty.
"""
from dataclasses import dataclass


def chi_exterior(chiF, n):
    """Euler characteristic of the exterior boundary of ``F`` plus ``n`` one-handles."""
    if n < 1:
        raise ValueError(f"need at least one 1-handle, got n={n}")
    return chiF - 2 * n


def _partitions(k, largest=None):
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def component_patterns(chiF):
    """Genera of the non-torus components of a closed orientable surface
    without spheres of Euler characteristic ``chiF``; any number of tori may
    be added (at least one when ``chiF == 0``)."""
    if chiF > 0 or chiF % 2:
        raise ValueError(f"chi(F) must be even and non-positive, got {chiF}")
    if chiF == 0:
        return ["tori only, k>=1"]
    out = []
    for parts in _partitions(-chiF // 2):
        genera = " + ".join(f"genus {p + 1}" for p in parts)
        out.append(f"{genera} (+ any tori)")
    return out


@dataclass(frozen=True)
class ReducingWindow:
    genus: int
    chi_boundary: int
    chi_min: int
    chi_max: int
    feasible: tuple
    patterns: dict

    def summary(self):
        if not self.feasible:
            return "empty"
        return ", ".join(f"chi(F) = {c}, n = {n}" for c, n in self.feasible)

    def table(self):
        lines = [f"genus {self.genus}: chi(dH) = {self.chi_boundary}, "
                 f"window {self.chi_min} <= chi(F) <= {self.chi_max}"]
        if not self.feasible:
            lines.append("feasible: none")
        for c, n in self.feasible:
            lines.append(f"chi(F) = {c}  n = {n}  components: {'; '.join(self.patterns[c])}")
        return lines


def reducing_surface_window(g):
    if g < 1:
        raise ValueError(f"handlebody genus must be at least 1, got {g}")
    chi_b = 2 - 2 * g
    lo, hi = chi_b + 4, 0
    feasible = []
    for chiF in range(lo + (lo % 2), hi + 1, 2):
        n = (chiF - chi_b) // 2
        if n >= 2:
            feasible.append((chiF, n))
    patterns = {c: component_patterns(c) for c, _ in feasible}
    return ReducingWindow(g, chi_b, lo, hi, tuple(feasible), patterns)


@dataclass(frozen=True)
class Genus2Verdict:
    statement: str
    window: ReducingWindow
    caveat: str = ""


IRREDUCIBLE_IF_PA = "irreducible-if-pA"
WINDOW = "window"


def genus2_verdict(g):
    if g <= 0:
        raise ValueError(f"handlebody genus must be positive, got {g}")
    win = reducing_surface_window(g)
    if g == 2:
        return Genus2Verdict(IRREDUCIBLE_IF_PA, win)
    caveat = ""
    if g == 1:
        caveat = "a solid torus has no pseudo-Anosov boundary maps; the window is arithmetic only"
    return Genus2Verdict(WINDOW, win, caveat)
