import itertools
import logging
import random
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, NamedTuple, Sequence

from sympy.combinatorics import Permutation
from sympy.utilities.iterables import partitions

from .. import constants as const, errors as err
from ..library import WordLib
from ..library.Events import emit
from ..types import Generator, Presentation, Word


"""Finite permutation quotients certifying that a word is nontrivial in a presented group.

An assignment x -> X, y -> Y of permutations is a witness for w when every relator evaluates to the identity and w
does not. Finding one proves w != 1; failing to find one proves nothing.

Degrees up to EXHAUSTIVE_WITNESS_DEGREE are searched exhaustively with x running over one representative per cycle
type, which loses nothing since conjugating both images preserves every evaluation. Larger degrees are sampled at
random, x by cycle type and y by cycle type and placement.
"""
logger = logging.getLogger(__name__)

X = Generator(const.X_NAME)
Y = Generator(const.Y_NAME)


# Structs
class WitnessStatus(Enum):
    WITNESS_FOUND = "witness_found"
    EXHAUSTED = "exhausted"
    TIMEOUT = "timeout"


@dataclass(frozen=True)
class PermAssignment:
    degree: int
    images: Mapping[Generator, Permutation]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise err.WitnessError(err.WITNESS_DEGREE_INVALID)
        for image in self.images.values():
            if image.size != self.degree:
                raise err.WitnessError(f"image {image} does not act on {self.degree} points")

    def as_lists(self) -> dict[str, list[int]]:
        return {str(g): list(p.array_form) for g, p in sorted(self.images.items(), key=lambda kv: kv[0].sort_key())}


class WitnessReport(NamedTuple):
    status: WitnessStatus
    assignment: PermAssignment | None = None
    image_order: int | None = None
    steps: int = 0


# Events
class WitnessSearchFinished(NamedTuple):
    status: str
    degree: int | None
    image_order: int | None
    steps: int


def evaluate(w: Word, assignment: PermAssignment) -> Permutation:
    """Image of w, letters applied left to right (sympy's p*q applies p first)."""
    image = Permutation(assignment.degree - 1)
    for generator, exponent in WordLib.syllables(w):
        image = image * assignment.images[generator] ** exponent
    return image


def validate_witness(target: Presentation, w: Word, assignment: PermAssignment) -> bool:
    """Every relator of the target maps to the identity and w does not."""
    if any(not evaluate(relator, assignment).is_Identity for relator in target.relators):
        return False
    return not evaluate(w, assignment).is_Identity


def cycle_types(n: int) -> list[tuple[int, ...]]:
    """Partitions of n as descending part tuples, longest cycles first."""
    types = []
    for partition in partitions(n):
        parts = [part for part, multiplicity in sorted(dict(partition).items(), reverse=True) for _ in range(multiplicity)]
        types.append(tuple(parts))
    return sorted(types, reverse=True)


def permutation_of_type(cycle_type: Sequence[int], points: Sequence[int]) -> Permutation:
    """The permutation cycling consecutive runs of `points` with the given lengths."""
    cycles = []
    start = 0
    for length in cycle_type:
        cycles.append(list(points[start:start + length]))
        start += length
    return Permutation(cycles, size=len(points))


class _Search:
    def __init__(self, target: Presentation, w: Word, steps: int, deadline: float | None) -> None:
        self.relators = list(target.relators)
        self.w = w
        self.budget = steps
        self.deadline = deadline
        self.steps = 0

    def out_of_budget(self) -> bool:
        if self.steps >= self.budget:
            return True
        return self.deadline is not None and time.monotonic() > self.deadline

    def try_pair(self, degree: int, x: Permutation, y: Permutation) -> WitnessReport | None:
        self.steps += 1
        assignment = PermAssignment(degree, {X: x, Y: y})
        image = evaluate(self.w, assignment)
        if image.is_Identity:
            return None
        for relator in self.relators:
            if not evaluate(relator, assignment).is_Identity:
                return None
        return WitnessReport(WitnessStatus.WITNESS_FOUND, assignment, image.order(), self.steps)

    def exhaustive(self, degree: int) -> WitnessReport | None:
        points = list(range(degree))
        for cycle_type in cycle_types(degree):
            x = permutation_of_type(cycle_type, points)
            for arrangement in itertools.permutations(points):
                if self.out_of_budget():
                    return WitnessReport(WitnessStatus.TIMEOUT, steps=self.steps)
                found = self.try_pair(degree, x, Permutation(list(arrangement)))
                if found is not None:
                    return found
        return None

    def randomized(self, degrees: Sequence[int], rng: random.Random) -> WitnessReport:
        types = {degree: cycle_types(degree) for degree in degrees}
        while not self.out_of_budget():
            # restart: a fresh degree and x, then a batch of y
            degree = rng.choice(degrees)
            points = list(range(degree))
            x = permutation_of_type(rng.choice(types[degree]), points)
            for _ in range(const.WITNESS_RESTART_BATCH):
                if self.out_of_budget():
                    break
                y = permutation_of_type(rng.choice(types[degree]), rng.sample(points, degree))
                found = self.try_pair(degree, x, y)
                if found is not None:
                    return found
        return WitnessReport(WitnessStatus.TIMEOUT, steps=self.steps)


def _check_inputs(target: Presentation, w: Word, max_degree: int) -> None:
    if max_degree < 1:
        raise err.WitnessError(err.WITNESS_DEGREE_INVALID)
    alphabet = {X, Y}
    if not w.generators() <= alphabet or any(not r.generators() <= alphabet for r in target.relators):
        raise err.WitnessError(err.WITNESS_TARGET_ALPHABET)
    if not target.is_instantiated():
        raise err.WitnessError(err.WITNESS_TARGET_SCHEMAS)


def _search(
    target: Presentation,
    w: Word,
    max_degree: int,
    steps: int,
    seed: int,
    timeout: float | None,
    exhaustive: bool = True,
) -> WitnessReport:
    deadline = None if timeout is None else time.monotonic() + timeout
    search = _Search(target, w, steps, deadline)
    if exhaustive:
        for degree in range(1, min(max_degree, const.EXHAUSTIVE_WITNESS_DEGREE) + 1):
            found = search.exhaustive(degree)
            if found is not None:
                return found
    if max_degree <= const.EXHAUSTIVE_WITNESS_DEGREE:
        return WitnessReport(WitnessStatus.EXHAUSTED, steps=search.steps)
    degrees = list(range(const.EXHAUSTIVE_WITNESS_DEGREE + 1, max_degree + 1))
    return search.randomized(degrees, random.Random(seed))


def find_witness(
    target: Presentation,
    w: Word,
    max_degree: int = const.DEFAULT_WITNESS_DEGREE,
    steps: int = const.DEFAULT_WITNESS_STEPS,
    seed: int = const.DEFAULT_SEED,
    timeout: float | None = None,
    deterministic: bool = True,
    workers: int = 1,
) -> WitnessReport:
    """Search for a permutation assignment under which every relator is trivial and w is not.

    Args:
        target: Instantiated presentation over x, y
        w: The word to certify as nontrivial
        max_degree: Largest number of points permuted
        steps: Number of assignments tried before giving up
        seed: Seed of the randomized phase
        timeout: Wall-clock limit in seconds
        deterministic: When false and workers > 1, the randomized phase runs one seed per worker and the first
            witness found wins
        workers: Number of worker processes for the randomized phase

    Returns:
        WITNESS_FOUND with the assignment and the order of w's image, EXHAUSTED when every assignment up to
        max_degree was tried, TIMEOUT when the budget ran out first

    Raises:
        WitnessError: If the target or w is not over x, y, or max_degree < 1
    """
    _check_inputs(target, w, max_degree)
    if not w:
        report = WitnessReport(WitnessStatus.EXHAUSTED)
    elif deterministic or workers <= 1:
        report = _search(target, w, max_degree, steps, seed, timeout)
    else:
        report = _search(target, w, min(max_degree, const.EXHAUSTIVE_WITNESS_DEGREE), steps, seed, timeout)
        if report.status is WitnessStatus.EXHAUSTED and max_degree > const.EXHAUSTIVE_WITNESS_DEGREE:
            report = _parallel_search(target, w, max_degree, steps, seed, timeout, workers)
    emit(logger, WitnessSearchFinished(
        report.status.value,
        None if report.assignment is None else report.assignment.degree,
        report.image_order,
        report.steps,
    ))
    return report


def _parallel_search(
    target: Presentation, w: Word, max_degree: int, steps: int, seed: int, timeout: float | None, workers: int
) -> WitnessReport:
    share = max(1, steps // workers)
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        pending = {
            pool.submit(_search, target, w, max_degree, share, seed + offset, timeout, False)
            for offset in range(workers)
        }
        spent = 0
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for future in done:
                report = future.result()
                spent += report.steps
                if report.status is WitnessStatus.WITNESS_FOUND:
                    return report
        return WitnessReport(WitnessStatus.TIMEOUT, steps=spent)
    finally:
        # running workers finish their share unobserved
        pool.shutdown(wait=False, cancel_futures=True)
