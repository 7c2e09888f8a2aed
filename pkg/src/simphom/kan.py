"""Horn filling, Kan certification, and lifting-property checks.

A horn of shape (n, k) into a space is a compatible system of n faces
indexed by {0..n} minus {k}; filling means finding an n-simplex (possibly
degenerate) whose faces match.  A space is Kan through a dimension when
every horn through that dimension fills; a map is a fibration through a
dimension when every relative horn problem along it has a solution.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .simplex import SimplexRef
from .sset import SimplicialMap, SimplicialSet


@dataclass(frozen=True)
class HornMap:
    """A horn Lambda[n]_k -> K given by its tuple of faces.

    ``faces[i]`` is the image of the i-th face for i != k (the tuple still
    has n+1 slots; slot k holds None).
    """

    n: int
    k: int
    faces: tuple

    def given_indices(self):
        return [i for i in range(self.n + 1) if i != self.k]


def horn_compatible(space: SimplicialSet, h: HornMap) -> bool:
    """d_i x_j = d_{j-1} x_i for i < j, both != k, after canonicalization."""
    for j in h.given_indices():
        for i in h.given_indices():
            if i >= j:
                continue
            if space.face(h.faces[j], i) != space.face(h.faces[i], j - 1):
                return False
    return True


def check_horn(space: SimplicialSet, h: HornMap):
    if h.n < 1:
        raise ValueError("horns need n >= 1")
    if not 0 <= h.k <= h.n:
        raise ValueError("horn index out of range")
    for i in h.given_indices():
        ref = h.faces[i]
        if ref is None or ref.dim != h.n - 1:
            raise ValueError(f"face {i} missing or of wrong dimension")
        if not ref.words_ok():
            raise ValueError(f"face {i} has a non-canonical degeneracy word")
        space.gen(ref.base_dim, ref.base_id)  # raises on dangling ids
    if not horn_compatible(space, h):
        raise ValueError("incompatible horn data")


def fill_horn(space: SimplicialSet, h: HornMap) -> list[SimplexRef]:
    """All n-simplices whose faces match the horn off index k."""
    check_horn(space, h)
    fillers = []
    for cand in space.all_simplices(h.n):
        if all(space.face(cand, i) == h.faces[i] for i in h.given_indices()):
            fillers.append(cand)
    return fillers


def enumerate_horns(space: SimplicialSet, n: int, k: int):
    """All compatible horns of shape (n, k) into the space, by backtracking
    over the faces with early compatibility pruning."""
    simplices = list(space.all_simplices(n - 1))
    indices = [i for i in range(n + 1) if i != k]

    def extend(assigned: dict[int, SimplexRef], pos: int):
        if pos == len(indices):
            faces = tuple(assigned.get(i) for i in range(n + 1))
            yield HornMap(n, k, faces)
            return
        j = indices[pos]
        for cand in simplices:
            ok = True
            for i in indices[:pos]:
                if i < j:
                    if space.face(cand, i) != space.face(assigned[i], j - 1):
                        ok = False
                        break
                else:
                    if space.face(assigned[i], j) != space.face(cand, i - 1):
                        ok = False
                        break
            if ok:
                assigned[j] = cand
                yield from extend(assigned, pos + 1)
                del assigned[j]

    yield from extend({}, 0)


@dataclass
class HornFailure:
    n: int
    k: int
    faces: tuple
    description: str


@dataclass
class KanReport:
    space_name: str
    up_to_dim: int
    horns_checked: int
    failures: list[HornFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = []
        if self.passed:
            out.append(f"PASS Kan through dimension {self.up_to_dim} "
                       f"({self.horns_checked} horns checked)")
        else:
            out.append(f"FAIL {len(self.failures)} unfillable horn(s) of "
                       f"{self.horns_checked} checked")
            for fail in self.failures:
                out.append(f"  horn ({fail.n},{fail.k}): {fail.description}")
        return out


def kan_check(space: SimplicialSet, up_to_dim: int = 3) -> KanReport:
    """Enumerate every horn through the given dimension and report the
    unfillable ones; empty failure list certifies the Kan condition."""
    if up_to_dim < 1:
        raise ValueError("up_to_dim must be >= 1")
    report = KanReport(space.name or "K", up_to_dim, 0)
    if space.is_empty():
        return report
    for n in range(1, up_to_dim + 1):
        for k in range(n + 1):
            for h in enumerate_horns(space, n, k):
                report.horns_checked += 1
                if not fill_horn(space, h):
                    desc = ", ".join(
                        f"d{i}={space.format_ref(h.faces[i])}" for i in h.given_indices())
                    report.failures.append(HornFailure(n, k, h.faces, desc))
    return report


@dataclass
class LiftingProblem:
    horn: HornMap
    base_simplex: SimplexRef
    solutions: int


@dataclass
class FibrationReport:
    up_to_dim: int
    problems_checked: int
    failures: list[LiftingProblem] = field(default_factory=list)
    # problems with a number of solutions other than one (for covering checks)
    non_unique: list[LiftingProblem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def unique(self) -> bool:
        return not self.failures and not self.non_unique

    def lines(self, require_unique: bool = False) -> list[str]:
        bad = self.failures + (self.non_unique if require_unique else [])
        if not bad:
            kind = "unique lifts" if require_unique else "lifts exist"
            return [f"PASS {kind} for all {self.problems_checked} relative horn problems "
                    f"through dimension {self.up_to_dim}"]
        out = [f"FAIL {len(bad)} relative horn problem(s) of {self.problems_checked}"]
        for p in bad:
            out.append(f"  horn ({p.horn.n},{p.horn.k}) over base simplex "
                       f"{p.base_simplex}: {p.solutions} solution(s)")
        return out


def fibration_check(space_map: SimplicialMap, up_to_dim: int = 3) -> FibrationReport:
    """Relative horn lifting along a map: for every horn in the source and
    every compatible simplex downstairs, look for upstairs fillers that
    also project correctly."""
    if up_to_dim < 1:
        raise ValueError("up_to_dim must be >= 1")
    E, B = space_map.source, space_map.target
    report = FibrationReport(up_to_dim, 0)
    if E.is_empty():
        return report
    for n in range(1, up_to_dim + 1):
        base_simplices = list(B.all_simplices(n))
        upstairs = list(E.all_simplices(n))
        for k in range(n + 1):
            for h in enumerate_horns(E, n, k):
                given = h.given_indices()
                for y in base_simplices:
                    if any(B.face(y, i) != space_map.apply(h.faces[i]) for i in given):
                        continue
                    report.problems_checked += 1
                    count = 0
                    for x in upstairs:
                        if space_map.apply(x) != y:
                            continue
                        if all(E.face(x, i) == h.faces[i] for i in given):
                            count += 1
                    problem = LiftingProblem(h, y, count)
                    if count == 0:
                        report.failures.append(problem)
                    elif count > 1:
                        report.non_unique.append(problem)
    return report
